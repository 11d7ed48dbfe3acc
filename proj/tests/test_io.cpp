#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fgtool/check.hpp"
#include "fgtool/io.hpp"
#include "fgtool/pi1.hpp"

using namespace fgtool;

TEST_CASE("parse_input reads a small complex") {
  InputDocument doc = parse_input("simplex a\nsimplex b\nsimplex a b\n");
  REQUIRE(doc.kind == DocumentKind::Complex);
  CHECK(doc.complex->simplexes.size() == 3);
  CHECK(doc.complex->connected);
}

TEST_CASE("parse_input reads the crown poset") {
  std::string text =
      "# three-crown with a top element\n"
      "elem a\nelem b\nelem c\nelem a'\nelem b'\nelem c'\nelem d\n"
      "rel a < b'\nrel c < b'\nrel a < c'\nrel b < c'\nrel b < a'\nrel c < a'\n"
      "rel a' < d\nrel b' < d\nrel c' < d\n";
  InputDocument doc = parse_input(text);
  REQUIRE(doc.kind == DocumentKind::Poset);
  CHECK(*doc.poset == fixtures::crown_poset());
  CHECK(doc.poset->lt("a", "d")); // closure is taken
}

TEST_CASE("parse_input rejects loops with a line number") {
  try {
    parse_input("vertex a\narrow f a a\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(e.line() == 2);
  }
}

TEST_CASE("parse_input grammar errors carry line numbers") {
  try {
    parse_input("elem a\nelem a\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateId);
    CHECK(e.line() == 2);
  }
  try {
    parse_input("elem a\nrel a < z\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownLabel);
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_input("simplex a\nelem b\n"), Error); // mixed kinds
  CHECK_THROWS_AS(parse_input("# nothing\n"), Error);
  CHECK_THROWS_AS(parse_input("frobnicate x\n"), Error);
}

TEST_CASE("close-down fills in missing faces on request") {
  std::string text = "simplex a b c\n";
  CHECK_THROWS_WITH_AS(parse_input(text), doctest::Contains("MissingFace"), Error);
  InputDocument doc = parse_input(text, true);
  CHECK(doc.complex->simplexes.size() == 7);
}

TEST_CASE("structure round trips") {
  for (const SimplicialComplex& c :
       {fixtures::triangle_boundary(), fixtures::projective_plane6(),
        barycentric(fixtures::filled_triangle())}) {
    InputDocument doc = parse_input(serialize_complex(c));
    REQUIRE(doc.kind == DocumentKind::Complex);
    CHECK(doc.complex->vertices == c.vertices);
    CHECK(doc.complex->simplexes == c.simplexes);
  }
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Poset p = random_connected_poset(seed, 8);
    InputDocument doc = parse_input(serialize_poset(p));
    REQUIRE(doc.kind == DocumentKind::Poset);
    CHECK(*doc.poset == p);

    Quiver q = random_acyclic_quiver(seed, 8);
    InputDocument qdoc = parse_input(serialize_quiver(q));
    REQUIRE(qdoc.kind == DocumentKind::Quiver);
    CHECK(qdoc.quiver->vertices == q.vertices);
    CHECK(std::equal(qdoc.quiver->arrows.begin(), qdoc.quiver->arrows.end(),
                     q.arrows.begin(), q.arrows.end(),
                     [](const Arrow& a, const Arrow& b) { return a == b; }));
  }
}

TEST_CASE("poset serialization lists covers in order") {
  std::string text = serialize_poset(fixtures::hexagon_poset());
  int elems = 0, rels = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("elem ", 0) == 0) ++elems;
    if (line.rfind("rel ", 0) == 0) ++rels;
  }
  CHECK(elems == 6);
  CHECK(rels == 6);
}

TEST_CASE("completed square serializes with its completion arrows") {
  std::string text = serialize_quiver(complete_quiver(fixtures::square_quiver()));
  CHECK(text.find("arrow c:tl>br tl br") != std::string::npos);
  CHECK(text.find("arrow c:bl>br bl br") != std::string::npos);
  int arrows = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("arrow ", 0) == 0) ++arrows;
  CHECK(arrows == 6);
}

TEST_CASE("presentation serialization round trips") {
  Presentation p = make_presentation(
      {"a", "b"}, {{{"a", 1}, {"b", -1}, {"a", -1}, {"b", 1}}, {{"a", 1}, {"a", 1}}});
  CHECK(parse_presentation(serialize_presentation(p)) == p);

  Presentation trivial = make_presentation({}, {});
  CHECK(serialize_presentation(trivial) == "gens:\n");
  InvariantReport inv = invariant_suite(trivial);
  CHECK(format_invariants(inv).rfind("invariants: rank 0", 0) == 0);

  // generator names straight from quiver arrows survive the trip
  Presentation hub = quiver_pi1_presentation(fixtures::two_hubs_quiver(), "l");
  CHECK(parse_presentation(serialize_presentation(hub)) == hub);
}

TEST_CASE("serialization is byte-stable") {
  SimplicialComplex c = fixtures::torus7();
  CHECK(serialize_complex(c) == serialize_complex(fixtures::torus7()));
  Presentation p = edge_path_presentation(c, "t1");
  CHECK(serialize_presentation(p) ==
        serialize_presentation(edge_path_presentation(fixtures::torus7(), "t1")));
}

TEST_CASE("reports prefix human text with comments") {
  Report rep;
  rep.echo = "fgtool quiver pi1 hexagon.qv";
  rep.summary = {"1 generator(s), 0 relator(s)"};
  rep.machine = "gens: g\n";
  std::string text = rep.render();
  CHECK(text.find("# fgtool quiver pi1") == 0);
  // the machine section still parses after the comment lines
  Presentation p = parse_presentation(text);
  CHECK(p.generators == std::vector<std::string>{"g"});
}
