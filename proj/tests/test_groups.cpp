#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fgtool/check.hpp"
#include "fgtool/groups.hpp"
#include "fgtool/pi1.hpp"
#include "fgtool/rng.hpp"

using namespace fgtool;

namespace {

Word random_word(Rng& rng, const std::vector<std::string>& gens, int maxLen) {
  Word w;
  int len = static_cast<int>(rng.below(maxLen + 1));
  for (int i = 0; i < len; ++i)
    w.push_back({gens[rng.below(gens.size())], rng.below(2) ? 1 : -1});
  return w;
}

// oracle: plain full enumeration with no shortcuts
unsigned long long brute_hom_count(const Presentation& p, const FiniteGroupTable& g) {
  size_t n = p.generators.size();
  std::vector<int> tuple(n, 0);
  unsigned long long count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& r : p.relators) {
      int acc = g.identity;
      for (const auto& l : r) {
        size_t gi = std::find(p.generators.begin(), p.generators.end(), l.gen) -
                    p.generators.begin();
        int v = tuple[gi];
        if (l.sign < 0) v = g.inv[v];
        acc = g.times(acc, v);
      }
      if (acc != g.identity) { ok = false; break; }
    }
    if (ok) ++count;
    size_t k = 0;
    while (k < n && ++tuple[k] == g.order) tuple[k++] = 0;
    if (k == n) break;
  }
  return count;
}

} // namespace

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce({{"a", 1}, {"a", -1}}).empty());
  Word w = free_reduce({{"a", 1}, {"b", 1}, {"b", -1}, {"a", 1}});
  REQUIRE(w.size() == 2);
  CHECK(w[0].gen == "a");
  CHECK(w[1].gen == "a");
  CHECK(free_reduce({}).empty());
}

TEST_CASE("free_reduce is idempotent and never grows") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, {"a", "b", "c"}, 12);
    Word r = free_reduce(w);
    CHECK(r.size() <= w.size());
    CHECK(free_reduce(r) == r);
  }
}

TEST_CASE("simplify_presentation kills lone generators") {
  Presentation p = make_presentation({"a", "b"}, {{{"a", 1}}});
  Presentation s = simplify_presentation(p);
  CHECK(s.generators == std::vector<std::string>{"b"});
  CHECK(s.relators.empty());

  Presentation diamond = make_presentation({"g1"}, {{{"g1", 1}}});
  CHECK(is_trivial_presentation(diamond));

  Presentation free3 = make_presentation({"a", "b", "c"}, {});
  CHECK(simplify_presentation(free3) == free3);
}

TEST_CASE("simplify_presentation handles substitution") {
  // b = a^2 forced by the second relator, so the group is <a | a^6>
  Presentation p = make_presentation(
      {"a", "b"},
      {{{"a", 1}, {"a", 1}, {"b", -1}}, {{"b", 1}, {"b", 1}, {"b", 1}}});
  Presentation s = simplify_presentation(p);
  AbelianInvariants inv = abelianization_invariants(s);
  CHECK(inv.rank == 0);
  CHECK(inv.torsion == std::vector<BigInt>{6});
}

TEST_CASE("abelianization examples") {
  AbelianInvariants z = abelianization_invariants(make_presentation({"a"}, {}));
  CHECK(z.rank == 1);
  CHECK(z.torsion.empty());

  AbelianInvariants f3 = abelianization_invariants(make_presentation({"a", "b", "c"}, {}));
  CHECK(f3.rank == 3);

  AbelianInvariants c2 =
      abelianization_invariants(make_presentation({"a"}, {{{"a", 1}, {"a", 1}}}));
  CHECK(c2.rank == 0);
  CHECK(c2.torsion == std::vector<BigInt>{2});
}

TEST_CASE("abelianization ignores relator order, conjugation and inversion") {
  Presentation p = make_presentation(
      {"a", "b"},
      {{{"a", 1}, {"a", 1}, {"b", 1}, {"b", 1}}, {{"a", 1}, {"b", -1}, {"a", 1}, {"b", 1}}});
  AbelianInvariants base = abelianization_invariants(p);

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Word> rels = p.relators;
    if (rng.below(2)) std::swap(rels[0], rels[1]);
    for (auto& r : rels) {
      if (rng.below(2)) r = inverse_word(r);
      Word conj = random_word(rng, p.generators, 3);
      r = free_reduce(concat(conj, concat(r, inverse_word(conj))));
    }
    CHECK(abelianization_invariants(make_presentation(p.generators, rels)) == base);
  }
}

TEST_CASE("hom_kplus_dimension formula") {
  CHECK(hom_kplus_dimension({1, {}}, 0) == 1);
  CHECK(hom_kplus_dimension({1, {}}, 5) == 1);
  CHECK(hom_kplus_dimension({0, {2}}, 2) == 1);
  CHECK(hom_kplus_dimension({0, {2}}, 3) == 0);
  CHECK(hom_kplus_dimension({3, {}}, 0) == 3);
  CHECK_THROWS_AS(hom_kplus_dimension({1, {}}, 6), Error);
}

TEST_CASE("builtin group tables are groups") {
  for (const char* name : {"C2", "C3", "C4", "C6", "S3", "S4"}) {
    const FiniteGroupTable& g = builtin_group(name);
    for (int a = 0; a < g.order; ++a) {
      CHECK(g.times(a, g.identity) == a);
      CHECK(g.times(g.identity, a) == a);
      CHECK(g.times(a, g.inv[a]) == g.identity);
      for (int b = 0; b < g.order; ++b)
        for (int c = 0; c < g.order; ++c)
          CHECK(g.times(g.times(a, b), c) == g.times(a, g.times(b, c)));
    }
  }
  CHECK(builtin_group("S4").order == 24);
  CHECK(builtin_group("S3").order == 6);
  CHECK_THROWS_AS(builtin_group("Q8"), Error);
}

TEST_CASE("count_homs examples and oracle agreement") {
  CHECK(count_homs(make_presentation({"a"}, {}), builtin_group("C4")) == 4);
  CHECK(count_homs(make_presentation({"a", "b", "c"}, {}), builtin_group("S3")) == 216);
  CHECK(count_homs(make_presentation({}, {}), builtin_group("S4")) == 1);

  // against plain enumeration on presentations with real relators
  std::vector<Presentation> cases = {
      make_presentation({"a"}, {{{"a", 1}, {"a", 1}}}),
      make_presentation({"a", "b"}, {{{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}}}),
      make_presentation({"a", "b"}, {{{"a", 1}, {"a", 1}, {"a", 1}}, {{"b", 1}, {"b", 1}}}),
      make_presentation({"a", "b", "c"}, {{{"a", 1}, {"b", -1}}}),
  };
  for (const auto& p : cases)
    for (const char* name : {"C2", "C3", "C4", "S3"})
      CHECK(count_homs(p, builtin_group(name)) == brute_hom_count(p, builtin_group(name)));
}

TEST_CASE("count_homs respects the budget") {
  Presentation p = make_presentation(
      {"a", "b", "c", "d", "e"},
      {{{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}, {"e", 1}}});
  CHECK_THROWS_WITH_AS(count_homs(p, builtin_group("S4"), 1000),
                       doctest::Contains("TargetTooLarge"), Error);
}

TEST_CASE("count_homs is invariant under simplification") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::string> gens = {"a", "b", "c"};
    std::vector<Word> rels;
    int nr = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < nr; ++i) rels.push_back(free_reduce(random_word(rng, gens, 6)));
    Presentation p = make_presentation(gens, rels);
    Presentation s = simplify_presentation(p);
    for (const char* name : {"C2", "C3", "S3"})
      CHECK(count_homs(p, builtin_group(name)) == count_homs(s, builtin_group(name)));
  }
}

TEST_CASE("free presentations count |target|^n homs") {
  for (int n = 0; n <= 3; ++n) {
    std::vector<std::string> gens;
    for (int i = 0; i < n; ++i) gens.push_back("g" + std::to_string(i));
    Presentation p = make_presentation(gens, {});
    for (const char* name : {"C2", "C3", "C4", "S3", "S4"}) {
      unsigned long long expect = 1;
      for (int i = 0; i < n; ++i) expect *= builtin_group(name).order;
      CHECK(count_homs(p, builtin_group(name)) == expect);
    }
  }
}

TEST_CASE("invariant_suite of the infinite cyclic group") {
  Quiver hex = fixtures::hexagon_quiver();
  InvariantReport r = invariant_suite(quiver_pi1_presentation(hex, "a"));
  CHECK(r.abelianRank == 1);
  CHECK(r.torsion.empty());
  CHECK(r.homCounts.at("C2") == 2);
  CHECK(r.homCounts.at("C3") == 3);
  CHECK(r.homCounts.at("C4") == 4);
  CHECK(r.homCounts.at("S3") == 6);
  CHECK(r.homCounts.at("S4") == 24);
}

TEST_CASE("invariant_suite of the tetrahedron boundary is trivial") {
  SimplicialComplex tet = fixtures::tetrahedron_boundary();
  InvariantReport r = invariant_suite(edge_path_presentation(tet, "a"));
  CHECK(r.abelianRank == 0);
  CHECK(r.torsion.empty());
  for (const auto& [name, count] : r.homCounts) CHECK(count == 1);
}

TEST_CASE("invariant_suite of the projective plane sees the 2-torsion") {
  SimplicialComplex rp2 = fixtures::projective_plane6();
  InvariantReport r = invariant_suite(edge_path_presentation(rp2, "q1"));
  CHECK(r.abelianRank == 0);
  CHECK(r.torsion == std::vector<BigInt>{2});
  CHECK(r.homCounts.at("C2") == 2);
  CHECK(r.homCounts.at("C3") == 1);
  CHECK(r.homCounts.at("C4") == 2);
}

TEST_CASE("simplification preserves the whole invariant suite") {
  Quiver diamond = fixtures::diamond_quiver();
  Presentation p = quiver_pi1_presentation(diamond, "t");
  CHECK(invariant_suite(p) == invariant_suite(simplify_presentation(p)));

  SimplicialComplex rp2 = fixtures::projective_plane6();
  Presentation q = edge_path_presentation(rp2, "q1");
  CHECK(invariant_suite(q) == invariant_suite(simplify_presentation(q)));
}

TEST_CASE("invariant_suite skips S4 with a notice when over budget") {
  // every generator appears twice in the one relator, so nothing simplifies
  std::vector<std::string> gens;
  Word rel;
  for (int i = 0; i < 7; ++i) gens.push_back("g" + std::to_string(i));
  for (int round = 0; round < 2; ++round)
    for (const auto& g : gens) rel.push_back({g, 1});
  Presentation p = make_presentation(gens, {rel});

  std::vector<std::string> notes;
  InvariantReport r = invariant_suite(p, kDefaultHomBudget, &notes);
  CHECK(r.homCounts.count("S4") == 0);
  CHECK(r.homCounts.count("S3") == 1);
  REQUIRE(notes.size() == 1);
  CHECK(notes[0].find("S4") != std::string::npos);
}

TEST_CASE("one-vertex structures work end to end") {
  Quiver q = make_quiver({"a"}, {});
  Presentation p = quiver_pi1_presentation(q, "a");
  CHECK(p.generators.empty());
  CHECK(invariant_suite(p).abelianRank == 0);

  Poset single = make_poset({"x"}, {});
  CHECK(sim_of_poset(single).simplexes.size() == 1);
  CHECK(hh1_dimension(single, make_field(0)) == 0);
}

TEST_CASE("describe_group names canonical forms") {
  CHECK(describe_group(make_presentation({"g1"}, {{{"g1", 1}}})) == "trivial group");
  CHECK(describe_group(make_presentation({"a", "b", "c"}, {})) == "free of rank 3");
  CHECK(describe_group(make_presentation({"a"}, {{{"a", 1}, {"a", 1}}})).empty());
}
