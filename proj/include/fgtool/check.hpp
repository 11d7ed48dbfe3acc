#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fgtool/combinatorics.hpp"
#include "fgtool/groups.hpp"

namespace fgtool {

/// Deterministic generators for randomized suites. Connectivity is ensured
/// by resampling within the same stream, so a seed names one structure.
Poset random_connected_poset(std::uint64_t seed, int maxElements);
Quiver random_acyclic_quiver(std::uint64_t seed, int maxVertices);

struct CheckResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> lines;

  bool ok() const { return failures == 0; }
};

/// Invariant suites of the quiver group of a poset and of the edge-path
/// group of its order complex agree, over `count` random posets seeded
/// seed, seed+1, ...
CheckResult check_theorem2(std::uint64_t seed, int count, int maxSize,
                           unsigned long long homBudget = kDefaultHomBudget);

/// hh1 of the incidence algebra equals dim Hom(pi1, k+) over the fixed
/// poset family and characteristics 0, 2, 3.
CheckResult check_theorem3();

/// Invariant suites of the quiver group agree across Q, its ordered
/// reduction and its completion, over `count` random quivers.
CheckResult check_theorem4(std::uint64_t seed, int count, int maxSize,
                           unsigned long long homBudget = kDefaultHomBudget);

/// psi(phi(-)) is the identity on every arrow, and sampled closed walks
/// come back in the same class.
CheckResult check_roundtrip(std::uint64_t seed, int count, int maxSize);

/// Structures used across the checks, the bundled data files and the test
/// suites.
namespace fixtures {

SimplicialComplex triangle_boundary();
SimplicialComplex filled_triangle();
SimplicialComplex tetrahedron_boundary();
SimplicialComplex torus7();           // 7 vertices, 21 edges, 14 triangles
SimplicialComplex projective_plane6(); // 6 vertices, 15 edges, 10 triangles

Quiver hexagon_quiver(); // three sources, three sinks around a cycle
Quiver diamond_quiver();
Quiver diamond_left();
Quiver diamond_right();
Quiver square_quiver(); // three sides plus a diagonal
Quiver composite_quiver(); // twelve arrows, mirrored halves
Quiver composite_left();
Quiver composite_right();
Quiver composite_left_upper();
Quiver composite_left_lower();
Quiver two_hubs_quiver(); // two sources fanning onto four sinks
Quiver two_hubs_q1();
Quiver two_hubs_q2();

Poset chain3_poset();
Poset diamond_poset();
Poset hexagon_poset();
Poset crown_poset(); // three-crown with a common top

} // namespace fixtures

} // namespace fgtool
