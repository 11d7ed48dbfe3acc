#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fgtool/combinatorics.hpp"
#include "fgtool/groups.hpp"

namespace fgtool {

enum class DocumentKind { Complex, Poset, Quiver };

/// Parsed input file. Exactly one of the payloads is set, matching `kind`.
struct InputDocument {
  DocumentKind kind;
  std::optional<SimplicialComplex> complex;
  std::optional<Poset> poset;
  std::optional<Quiver> quiver;
};

/// Line-based grammar, one declaration per line, `#` starts a comment:
///   complex files:  simplex v1 v2 ...
///   poset files:    elem x          rel x < y
///   quiver files:   vertex v        arrow id src dst
/// The kind is inferred from the first declaration. Errors carry the
/// offending line number. With closeDown set, missing faces of a complex
/// are filled in instead of rejected.
InputDocument parse_input(const std::string& text, bool closeDown = false);

std::string serialize_complex(const SimplicialComplex& c);
std::string serialize_poset(const Poset& p);   // elem lines plus cover rels
std::string serialize_quiver(const Quiver& q);
std::string serialize_structure(const InputDocument& doc);

/// gens:/rel: lines; letters are printed as `g` or `g^-1`.
std::string serialize_presentation(const Presentation& p);
Presentation parse_presentation(const std::string& text);

std::string format_invariants(const InvariantReport& r);

/// Command output: an echo of the invocation, a short human summary, and a
/// machine-readable body that parses back with the functions above.
struct Report {
  std::string echo;
  std::vector<std::string> summary;
  std::string machine;

  std::string render() const;
};

} // namespace fgtool
