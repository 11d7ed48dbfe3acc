#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgtool/combinatorics.hpp"
#include "fgtool/groups.hpp"

namespace fgtool {

/// A step traverses one arrow, either along it or against it.
struct WalkStep {
  std::string arrowId;
  bool forward = true;
};

bool operator==(const WalkStep& a, const WalkStep& b);

/// Formal product of arrows and inverse arrows. Steps are stored in
/// traversal order (first step first); closed walks have source == target.
/// The trivial walk at a vertex has no steps.
struct Walk {
  std::vector<WalkStep> steps;
  Label source;
  Label target;
};

bool operator==(const Walk& a, const Walk& b);

/// Vertex sequence whose consecutive pairs span 1-simplexes, stored in
/// traversal order (first vertex first).
struct EdgePath {
  std::vector<Label> vertices;
};

bool operator==(const EdgePath& a, const EdgePath& b);

/// BFS spanning tree with lexicographically ordered neighbor visits.
struct SpanningTree {
  Label root;
  std::map<Label, Label> parent;          // child -> parent
  std::map<Label, std::string> parentEdge; // child -> edge/arrow key
  std::vector<Label> bfsOrder;

  bool spans(const Label& v) const { return v == root || parent.count(v) > 0; }
};

/// Edge-path group of a connected complex, presented from a spanning tree
/// of the 1-skeleton: one generator per non-tree edge, one relator per
/// 2-simplex.
Presentation edge_path_presentation(const SimplicialComplex& c, const Label& basepoint);

/// Fundamental group of an acyclic quiver with its parallel ideal: one
/// generator per non-tree arrow, one relator per pair of parallel paths.
Presentation quiver_pi1_presentation(const Quiver& q, const Label& basepoint);

/// Walk class of a closed walk as a word in the presentation's generators:
/// tree arrows vanish, other arrows map to their generator.
Word walk_word(const Walk& w, const Quiver& q, const Label& basepoint);

/// Vertex trace of a walk, read as an edge path of Sim(quiver_to_poset(q)).
EdgePath phi_walk_to_edgepath(const Walk& w, const Quiver& q);

/// Inverse direction: each consecutive comparable pair is expanded along
/// the lexicographically smallest maximal chain having the pair as its
/// extremities, and the chain's cover arrows form the walk segment.
Walk psi_edgepath_to_walk(const EdgePath& e, const Poset& p);

enum class SampleOutcome { Pass, Fail, Inconclusive };

struct RoundtripReport {
  int samples = 0;
  int passed = 0;
  int failed = 0;
  int inconclusive = 0;
  std::vector<SampleOutcome> outcomes;

  bool all_passed() const { return passed == samples; }
};

inline constexpr int kDefaultRewriteBudget = 20000;

/// Semi-decides whether two words name the same element of the presented
/// group: equal after free reduction passes, different abelianizations
/// fail, and otherwise a bounded relator-insertion search either proves
/// equality or gives up with Inconclusive.
SampleOutcome walk_words_equivalent(const Word& a, const Word& b, const Presentation& pres,
                                    int rewriteBudget = kDefaultRewriteBudget);

/// Samples random closed walks in the Hasse quiver of p, maps each through
/// phi then psi, and decides whether the result is the same walk class:
/// equal words pass, differing abelianizations fail, and a bounded relator
/// rewriting search settles the rest (or reports Inconclusive).
RoundtripReport check_phi_psi_roundtrip(const Poset& p, int samples, std::uint64_t seed,
                                        int rewriteBudget = kDefaultRewriteBudget);

/// Glues the fundamental groups of two subquivers covering q (in the sense
/// that their completions cover the completion of q) along the ordered
/// quiver of the intersection of the completions. Defaults to the
/// lexicographically least vertex of that intersection as basepoint.
Presentation van_kampen_assemble(const Quiver& q, const Quiver& q1, const Quiver& q2,
                                 std::optional<Label> basepoint = {});

/// The ordered intersection piece used by van_kampen_assemble (handy for
/// diagnostics and tests).
OrderedQuiver van_kampen_intersection(const Quiver& q, const Quiver& q1, const Quiver& q2);

} // namespace fgtool
