#include "fgtool/check.hpp"

#include <array>
#include <sstream>

#include "fgtool/algebra.hpp"
#include "fgtool/pi1.hpp"
#include "fgtool/rng.hpp"

namespace fgtool {

Poset random_connected_poset(std::uint64_t seed, int maxElements) {
  if (maxElements < 2) throw Error(Errc::InvalidInput, "max size must be at least 2");
  Rng rng(seed);
  for (;;) {
    int n = 2 + static_cast<int>(rng.below(maxElements - 1));
    std::vector<Label> elems;
    for (int i = 1; i <= n; ++i) elems.push_back("p" + std::to_string(i));
    std::vector<std::pair<Label, Label>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.chance_permille(400)) pairs.emplace_back(elems[i], elems[j]);
    Poset p = make_poset(elems, pairs);
    if (is_connected_undirected(hasse_quiver(p).quiver)) return p;
  }
}

Quiver random_acyclic_quiver(std::uint64_t seed, int maxVertices) {
  if (maxVertices < 2) throw Error(Errc::InvalidInput, "max size must be at least 2");
  Rng rng(seed);
  for (;;) {
    int n = 2 + static_cast<int>(rng.below(maxVertices - 1));
    std::vector<Label> verts;
    for (int i = 1; i <= n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<Arrow> arrows;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.chance_permille(400))
          arrows.push_back({verts[i] + ">" + verts[j], verts[i], verts[j]});
    Quiver q = make_quiver(verts, arrows);
    if (is_connected_undirected(q)) return q;
  }
}

namespace {

std::string show(const InvariantReport& r) {
  std::ostringstream out;
  out << "rank " << r.abelianRank;
  if (!r.torsion.empty()) {
    out << " torsion";
    for (const auto& d : r.torsion) out << ' ' << d;
  }
  for (const auto& [name, count] : r.homCounts) out << ' ' << name << ':' << count;
  return out.str();
}

} // namespace

CheckResult check_theorem2(std::uint64_t seed, int count, int maxSize,
                           unsigned long long homBudget) {
  CheckResult res;
  res.name = "theorem2";
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    Poset p = random_connected_poset(s, maxSize);
    Quiver h = hasse_quiver(p).quiver;
    InvariantReport viaQuiver =
        invariant_suite(quiver_pi1_presentation(h, h.vertices.front()), homBudget);
    SimplicialComplex sim = sim_of_poset(p);
    InvariantReport viaComplex =
        invariant_suite(edge_path_presentation(sim, sim.vertices.front()), homBudget);
    bool match = viaQuiver == viaComplex;
    ++res.cases;
    if (!match) ++res.failures;
    std::ostringstream line;
    line << "seed " << s << " (" << p.size() << " elements): "
         << (match ? "match [" + show(viaQuiver) + "]"
                   : "MISMATCH quiver=[" + show(viaQuiver) + "] complex=[" + show(viaComplex) + "]");
    res.lines.push_back(line.str());
  }
  return res;
}

CheckResult check_theorem3() {
  CheckResult res;
  res.name = "theorem3";
  struct Case {
    std::string name;
    Poset poset;
  };
  std::vector<Case> cases = {
      {"chain3", fixtures::chain3_poset()},
      {"diamond", fixtures::diamond_poset()},
      {"hexagon", fixtures::hexagon_poset()},
      {"crown", fixtures::crown_poset()},
      {"pos(torus)", pos_of_complex(fixtures::torus7())},
      {"pos(projective-plane)", pos_of_complex(fixtures::projective_plane6())},
  };
  for (const auto& c : cases) {
    Quiver h = hasse_quiver(c.poset).quiver;
    AbelianInvariants ab = abelianization_invariants(
        simplify_presentation(quiver_pi1_presentation(h, h.vertices.front())));
    for (long long characteristic : {0LL, 2LL, 3LL}) {
      int viaAlgebra = hh1_dimension(c.poset, make_field(characteristic));
      int viaGroup = hom_kplus_dimension(ab, characteristic);
      bool match = viaAlgebra == viaGroup;
      ++res.cases;
      if (!match) ++res.failures;
      std::ostringstream line;
      line << c.name << " char " << characteristic << ": hh1 " << viaAlgebra << ", hom "
           << viaGroup << (match ? "" : "  MISMATCH");
      res.lines.push_back(line.str());
    }
  }
  return res;
}

CheckResult check_theorem4(std::uint64_t seed, int count, int maxSize,
                           unsigned long long homBudget) {
  CheckResult res;
  res.name = "theorem4";
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    Quiver q = random_acyclic_quiver(s, maxSize);
    auto suite = [&](const Quiver& qq) {
      return invariant_suite(quiver_pi1_presentation(qq, qq.vertices.front()), homBudget);
    };
    InvariantReport direct = suite(q);
    InvariantReport ordered = suite(order_quiver(q).quiver);
    InvariantReport completed = suite(complete_quiver(q));
    bool match = direct == ordered && direct == completed;
    ++res.cases;
    if (!match) ++res.failures;
    std::ostringstream line;
    line << "seed " << s << " (" << q.vertices.size() << " vertices, " << q.arrows.size()
         << " arrows): " << (match ? "match [" + show(direct) + "]" : "MISMATCH");
    res.lines.push_back(line.str());
  }
  return res;
}

CheckResult check_roundtrip(std::uint64_t seed, int count, int maxSize) {
  CheckResult res;
  res.name = "roundtrip";
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    Poset p = random_connected_poset(s, maxSize);
    Quiver h = hasse_quiver(p).quiver;

    bool arrowsExact = true;
    for (const auto& a : h.arrows) {
      Walk w{{{a.id, true}}, a.source, a.target};
      Walk back = psi_edgepath_to_walk(phi_walk_to_edgepath(w, h), p);
      if (!(back == w)) arrowsExact = false;
    }
    RoundtripReport rt = check_phi_psi_roundtrip(p, 10, s);
    bool ok = arrowsExact && rt.failed == 0 && rt.inconclusive == 0;
    ++res.cases;
    if (!ok) ++res.failures;
    std::ostringstream line;
    line << "seed " << s << ": arrows " << (arrowsExact ? "exact" : "BROKEN") << ", loops "
         << rt.passed << "/" << rt.samples << " pass";
    if (rt.inconclusive) line << " (" << rt.inconclusive << " inconclusive)";
    res.lines.push_back(line.str());
  }
  return res;
}

// -- fixtures ---------------------------------------------------------------------

namespace fixtures {

namespace {

SimplicialComplex from_maximal(const std::vector<std::vector<Label>>& faces) {
  ComplexCandidate cand;
  for (const auto& f : faces) cand.simplexes.push_back(make_simplex(f));
  return close_down(cand);
}

Quiver quiver_of(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& arcs) {
  std::vector<Arrow> arrows;
  for (const auto& [s, t] : arcs) arrows.push_back({s + ">" + t, s, t});
  return make_quiver(std::move(vertices), std::move(arrows));
}

} // namespace

SimplicialComplex triangle_boundary() {
  return from_maximal({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

SimplicialComplex filled_triangle() { return from_maximal({{"a", "b", "c"}}); }

SimplicialComplex tetrahedron_boundary() {
  return from_maximal({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

SimplicialComplex torus7() {
  auto label = [](int i) { return "t" + std::to_string((i - 1) % 7 + 1); };
  std::vector<std::vector<Label>> faces;
  for (int i = 1; i <= 7; ++i) {
    faces.push_back({label(i), label(i + 1), label(i + 3)});
    faces.push_back({label(i), label(i + 2), label(i + 3)});
  }
  return from_maximal(faces);
}

SimplicialComplex projective_plane6() {
  auto q = [](int i) { return "q" + std::to_string(i); };
  std::vector<std::vector<Label>> faces;
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{1, 2, 3},
                                                        {1, 3, 4},
                                                        {1, 4, 5},
                                                        {1, 5, 6},
                                                        {1, 2, 6},
                                                        {2, 3, 5},
                                                        {3, 4, 6},
                                                        {2, 4, 5},
                                                        {3, 5, 6},
                                                        {2, 4, 6}})
    faces.push_back({q(a), q(b), q(c)});
  return from_maximal(faces);
}

Quiver hexagon_quiver() {
  return quiver_of({"a", "b", "c", "x", "y", "z"},
                   {{"a", "x"}, {"b", "x"}, {"a", "y"}, {"c", "y"}, {"b", "z"}, {"c", "z"}});
}

Quiver diamond_quiver() {
  return quiver_of({"t", "l", "r", "b"}, {{"t", "l"}, {"t", "r"}, {"l", "b"}, {"r", "b"}});
}

Quiver diamond_left() { return quiver_of({"t", "l", "b"}, {{"t", "l"}, {"l", "b"}}); }

Quiver diamond_right() { return quiver_of({"t", "r", "b"}, {{"t", "r"}, {"r", "b"}}); }

Quiver square_quiver() {
  return quiver_of({"bl", "tl", "tr", "br"},
                   {{"bl", "tl"}, {"tl", "tr"}, {"tr", "br"}, {"bl", "tr"}});
}

Quiver composite_quiver() {
  return quiver_of({"l", "tl", "bl", "c", "t", "b", "tr", "br", "r"},
                   {{"l", "tl"}, {"tl", "c"}, {"l", "bl"}, {"bl", "c"},
                    {"t", "tl"}, {"b", "bl"},
                    {"t", "tr"}, {"b", "br"}, {"r", "tr"}, {"r", "br"},
                    {"tr", "c"}, {"br", "c"}});
}

Quiver composite_left() {
  return quiver_of({"l", "tl", "bl", "c", "t", "b"},
                   {{"l", "tl"}, {"tl", "c"}, {"l", "bl"}, {"bl", "c"},
                    {"t", "tl"}, {"b", "bl"}});
}

Quiver composite_right() {
  return quiver_of({"t", "b", "c", "tr", "br", "r"},
                   {{"t", "tr"}, {"b", "br"}, {"r", "tr"}, {"r", "br"},
                    {"tr", "c"}, {"br", "c"}});
}

Quiver composite_left_upper() {
  return quiver_of({"l", "tl", "c", "t"}, {{"l", "tl"}, {"tl", "c"}, {"t", "tl"}});
}

Quiver composite_left_lower() {
  return quiver_of({"l", "bl", "c", "b"}, {{"l", "bl"}, {"bl", "c"}, {"b", "bl"}});
}

Quiver two_hubs_quiver() {
  return quiver_of({"l", "r", "s1", "s2", "s3", "s4"},
                   {{"l", "s1"}, {"l", "s2"}, {"l", "s3"}, {"l", "s4"},
                    {"r", "s1"}, {"r", "s2"}, {"r", "s3"}, {"r", "s4"}});
}

Quiver two_hubs_q1() {
  return quiver_of({"l", "r", "s1", "s2", "s3"},
                   {{"l", "s1"}, {"l", "s2"}, {"l", "s3"},
                    {"r", "s1"}, {"r", "s2"}, {"r", "s3"}});
}

Quiver two_hubs_q2() {
  return quiver_of({"l", "r", "s2", "s3", "s4"},
                   {{"l", "s2"}, {"l", "s3"}, {"l", "s4"},
                    {"r", "s2"}, {"r", "s3"}, {"r", "s4"}});
}

Poset chain3_poset() { return make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

Poset diamond_poset() {
  return make_poset({"bot", "lft", "rgt", "top"},
                    {{"bot", "lft"}, {"bot", "rgt"}, {"lft", "top"}, {"rgt", "top"}});
}

Poset hexagon_poset() { return quiver_to_poset(validate_ordered(hexagon_quiver())); }

Poset crown_poset() {
  return make_poset({"a", "b", "c", "a'", "b'", "c'", "d"},
                    {{"a", "b'"}, {"c", "b'"}, {"a", "c'"}, {"b", "c'"},
                     {"b", "a'"}, {"c", "a'"},
                     {"a'", "d"}, {"b'", "d"}, {"c'", "d"}});
}

} // namespace fixtures

} // namespace fgtool
