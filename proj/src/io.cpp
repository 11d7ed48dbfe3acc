#include "fgtool/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fgtool {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

} // namespace

InputDocument parse_input(const std::string& text, bool closeDown) {
  std::optional<DocumentKind> kind;

  std::vector<Simplex> simplexes;
  std::set<Simplex> simplexSeen;

  std::vector<Label> elems;
  std::vector<std::pair<Label, Label>> rels;

  std::vector<Label> vertices;
  std::vector<Arrow> arrows;
  std::set<std::string> arrowIds;

  auto expect_kind = [&](DocumentKind k, int line) {
    if (!kind) kind = k;
    if (*kind != k)
      throw Error(Errc::SyntaxError, "declaration does not match the file's kind", line);
  };

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& head = tok[0];

    if (head == "simplex") {
      expect_kind(DocumentKind::Complex, lineno);
      if (tok.size() < 2) throw Error(Errc::SyntaxError, "simplex needs at least one vertex", lineno);
      std::vector<Label> labels(tok.begin() + 1, tok.end());
      std::set<Label> unique(labels.begin(), labels.end());
      if (unique.size() != labels.size())
        throw Error(Errc::SyntaxError, "repeated vertex in simplex", lineno);
      Simplex s = make_simplex(labels);
      if (!simplexSeen.insert(s).second)
        throw Error(Errc::DuplicateId, "simplex declared twice", lineno);
      simplexes.push_back(std::move(s));
    } else if (head == "elem") {
      expect_kind(DocumentKind::Poset, lineno);
      if (tok.size() != 2) throw Error(Errc::SyntaxError, "expected: elem <label>", lineno);
      if (std::find(elems.begin(), elems.end(), tok[1]) != elems.end())
        throw Error(Errc::DuplicateId, "element '" + tok[1] + "' declared twice", lineno);
      elems.push_back(tok[1]);
    } else if (head == "rel") {
      expect_kind(DocumentKind::Poset, lineno);
      if (tok.size() != 4 || tok[2] != "<")
        throw Error(Errc::SyntaxError, "expected: rel <x> < <y>", lineno);
      for (const std::string& ref : {tok[1], tok[3]})
        if (std::find(elems.begin(), elems.end(), ref) == elems.end())
          throw Error(Errc::UnknownLabel, "'" + ref + "' is not a declared element", lineno);
      if (tok[1] == tok[3])
        throw Error(Errc::SyntaxError, "an element cannot be below itself", lineno);
      rels.emplace_back(tok[1], tok[3]);
    } else if (head == "vertex") {
      expect_kind(DocumentKind::Quiver, lineno);
      if (tok.size() != 2) throw Error(Errc::SyntaxError, "expected: vertex <label>", lineno);
      if (std::find(vertices.begin(), vertices.end(), tok[1]) != vertices.end())
        throw Error(Errc::DuplicateId, "vertex '" + tok[1] + "' declared twice", lineno);
      vertices.push_back(tok[1]);
    } else if (head == "arrow") {
      expect_kind(DocumentKind::Quiver, lineno);
      if (tok.size() != 4)
        throw Error(Errc::SyntaxError, "expected: arrow <id> <src> <dst>", lineno);
      if (!arrowIds.insert(tok[1]).second)
        throw Error(Errc::DuplicateId, "arrow id '" + tok[1] + "' declared twice", lineno);
      for (const std::string& ref : {tok[2], tok[3]})
        if (std::find(vertices.begin(), vertices.end(), ref) == vertices.end())
          throw Error(Errc::UnknownLabel, "'" + ref + "' is not a declared vertex", lineno);
      if (tok[2] == tok[3]) throw Error(Errc::SyntaxError, "loops are forbidden", lineno);
      arrows.push_back({tok[1], tok[2], tok[3]});
    } else {
      throw Error(Errc::SyntaxError, "unknown declaration '" + head + "'", lineno);
    }
  }
  if (!kind) throw Error(Errc::SyntaxError, "file contains no declarations", 0);

  InputDocument doc;
  doc.kind = *kind;
  switch (*kind) {
    case DocumentKind::Complex: {
      ComplexCandidate cand;
      for (const auto& s : simplexes)
        for (const auto& v : s) cand.vertices.push_back(v);
      cand.simplexes = simplexes;
      doc.complex = closeDown ? close_down(cand) : validate_complex(cand);
      break;
    }
    case DocumentKind::Poset:
      doc.poset = make_poset(elems, rels);
      break;
    case DocumentKind::Quiver:
      doc.quiver = make_quiver(vertices, arrows);
      break;
  }
  return doc;
}

std::string serialize_complex(const SimplicialComplex& c) {
  std::ostringstream out;
  for (const auto& s : c.simplexes) {
    out << "simplex";
    for (const auto& v : s) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string serialize_poset(const Poset& p) {
  std::ostringstream out;
  for (const auto& e : p.elements) out << "elem " << e << '\n';
  Quiver h = hasse_quiver(p).quiver;
  std::vector<std::pair<Label, Label>> covers;
  for (const auto& a : h.arrows) covers.emplace_back(a.source, a.target);
  std::sort(covers.begin(), covers.end());
  for (const auto& [x, y] : covers) out << "rel " << x << " < " << y << '\n';
  return out.str();
}

std::string serialize_quiver(const Quiver& q) {
  std::ostringstream out;
  for (const auto& v : q.vertices) out << "vertex " << v << '\n';
  for (const auto& a : q.arrows)
    out << "arrow " << a.id << ' ' << a.source << ' ' << a.target << '\n';
  return out.str();
}

std::string serialize_structure(const InputDocument& doc) {
  switch (doc.kind) {
    case DocumentKind::Complex: return serialize_complex(*doc.complex);
    case DocumentKind::Poset: return serialize_poset(*doc.poset);
    case DocumentKind::Quiver: return serialize_quiver(*doc.quiver);
  }
  return {};
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& g : p.generators) out << ' ' << g;
  out << '\n';
  for (const auto& r : p.relators) {
    out << "rel:";
    for (const auto& l : r) {
      out << ' ' << l.gen;
      if (l.sign < 0) out << "^-1";
    }
    out << '\n';
  }
  return out.str();
}

Presentation parse_presentation(const std::string& text) {
  std::vector<std::string> gens;
  std::vector<Word> rels;
  bool sawGens = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "gens:") {
      if (sawGens) throw Error(Errc::DuplicateId, "second gens: line", lineno);
      sawGens = true;
      gens.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "rel:") {
      if (!sawGens) throw Error(Errc::SyntaxError, "rel: before gens:", lineno);
      Word w;
      for (size_t i = 1; i < tok.size(); ++i) {
        std::string t = tok[i];
        int sign = 1;
        if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
          sign = -1;
          t = t.substr(0, t.size() - 3);
        }
        w.push_back({t, sign});
      }
      rels.push_back(std::move(w));
    } else if (tok[0] == "invariants:" || tok[0] == "hom:" || tok[0] == "group:") {
      continue; // informational lines
    } else {
      throw Error(Errc::SyntaxError, "unknown line '" + tok[0] + "'", lineno);
    }
  }
  if (!sawGens) throw Error(Errc::SyntaxError, "missing gens: line", 0);
  return make_presentation(std::move(gens), std::move(rels));
}

std::string format_invariants(const InvariantReport& r) {
  std::ostringstream out;
  out << "invariants: rank " << r.abelianRank;
  if (!r.torsion.empty()) {
    out << " torsion";
    for (const auto& d : r.torsion) out << ' ' << d;
  }
  out << '\n';
  for (const auto& [name, count] : r.homCounts)
    out << "hom: " << name << ' ' << count << '\n';
  return out.str();
}

std::string Report::render() const {
  std::ostringstream out;
  out << "# " << echo << '\n';
  for (const auto& s : summary) out << "# " << s << '\n';
  out << machine;
  return out.str();
}

} // namespace fgtool
