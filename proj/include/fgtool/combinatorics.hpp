#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgtool/errors.hpp"

namespace fgtool {

using Label = std::string;

/// A simplex is a sorted, duplicate-free, non-empty list of vertex labels.
using Simplex = std::vector<Label>;

Simplex make_simplex(std::vector<Label> labels);

/// Finite simplicial complex: explicit vertex set plus a downward-closed
/// family of simplexes. Instances are only produced by validate_complex,
/// pos/sim constructions or close_down, so the invariants always hold.
struct SimplicialComplex {
  std::vector<Label> vertices;   // sorted
  std::vector<Simplex> simplexes; // sorted by (size, lex)
  bool connected = false;        // 1-skeleton connectivity, set at validation

  bool contains(const Simplex& s) const;
  std::vector<Simplex> simplexes_of_dim(int dim) const; // dim = |s|-1
};

struct ComplexCandidate {
  std::vector<Label> vertices;
  std::vector<Simplex> simplexes;
};

/// Checks the candidate: known vertices, no empty simplexes, every subset
/// of a declared simplex (including every singleton) declared as well.
/// Missing faces are an error, never silently added.
SimplicialComplex validate_complex(const ComplexCandidate& raw);

/// Adds all missing subsets, then validates. Convenience for inputs that
/// list only maximal faces.
SimplicialComplex close_down(const ComplexCandidate& raw);

/// Finite poset. `less` stores the full strict order (transitively closed).
struct Poset {
  std::vector<Label> elements; // sorted
  std::vector<std::vector<bool>> less;

  int index(const Label& x) const;          // -1 if absent
  bool lt(int i, int j) const { return less[i][j]; }
  bool lt(const Label& x, const Label& y) const;
  bool comparable(int i, int j) const { return less[i][j] || less[j][i]; }
  int size() const { return static_cast<int>(elements.size()); }
};

Poset make_poset(std::vector<Label> elements,
                 const std::vector<std::pair<Label, Label>>& strict_pairs);

bool operator==(const Poset& a, const Poset& b);

struct Arrow {
  std::string id;
  Label source;
  Label target;
};

bool operator==(const Arrow& a, const Arrow& b);

/// Directed multigraph without loops. Arrows are kept sorted by
/// (source, target, id) so all downstream constructions are deterministic.
struct Quiver {
  std::vector<Label> vertices; // sorted
  std::vector<Arrow> arrows;

  int vertex_index(const Label& v) const; // -1 if absent
  const Arrow* arrow_by_id(const std::string& id) const;
  bool has_arrow_pair(const Label& s, const Label& t) const;
};

Quiver make_quiver(std::vector<Label> vertices, std::vector<Arrow> arrows);

bool is_acyclic(const Quiver& q);
bool is_connected_undirected(const Quiver& q);
bool has_parallel_arrows(const Quiver& q);

/// Same vertices and same set of (source, target) pairs; arrow ids ignored.
bool same_arrow_pairs(const Quiver& a, const Quiver& b);

/// Witness that a quiver passed the ordered-quiver checks: acyclic, no
/// parallel arrows, and no arrow parallel to another directed path.
struct OrderedQuiver {
  Quiver quiver;
};

OrderedQuiver validate_ordered(const Quiver& q);

struct DirectedPath {
  std::vector<std::string> arrowIds; // non-empty, consecutive arrows compose
  Label source;
  Label target;
};

bool operator==(const DirectedPath& a, const DirectedPath& b);

// -- constructions ---------------------------------------------------------

/// Poset of non-empty simplexes ordered by strict inclusion. Element labels
/// are the vertex names of the simplex joined by '+'.
Poset pos_of_complex(const SimplicialComplex& c);

/// Order complex: simplexes are the non-empty chains of p.
SimplicialComplex sim_of_poset(const Poset& p);

/// sim_of_poset(pos_of_complex(c)).
SimplicialComplex barycentric(const SimplicialComplex& c);

/// Cover relation as a quiver, one arrow per cover pair x < y with no
/// element strictly between; arrows point from smaller to larger and get
/// id "x|y".
OrderedQuiver hasse_quiver(const Poset& p);

/// Inverse of hasse_quiver up to arrow ids: x < y iff a directed path
/// x -> ... -> y exists.
Poset quiver_to_poset(const OrderedQuiver& q);

/// All directed paths of length >= 1, ordered by (length, arrowId sequence).
/// maxLen empty means unlimited. Throws CyclicQuiver on cycles.
std::vector<DirectedPath> enumerate_paths(const Quiver& q,
                                          std::optional<int> maxLen = {});

/// All unordered pairs of distinct parallel paths (same source, same
/// target), each pair ordered by the path enumeration order.
std::vector<std::pair<DirectedPath, DirectedPath>> parallel_pairs(const Quiver& q);

/// Adds one arrow a->b (id "c:a>b") for every reachable pair without one.
/// Requires acyclic input without parallel arrows.
Quiver complete_quiver(const Quiver& q);

/// Deletes every arrow parallel to a directed path of length >= 2.
/// Requires acyclic input without parallel arrows.
OrderedQuiver order_quiver(const Quiver& q);

} // namespace fgtool
