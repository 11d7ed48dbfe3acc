#include "fgtool/groups.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace fgtool {

bool operator==(const Letter& a, const Letter& b) {
  return a.gen == b.gen && a.sign == b.sign;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Presentation make_presentation(std::vector<std::string> generators,
                               std::vector<Word> relators) {
  std::set<std::string> known(generators.begin(), generators.end());
  if (known.size() != generators.size())
    throw Error(Errc::DuplicateId, "duplicate generator name");
  for (auto& r : relators) {
    for (const auto& l : r) {
      if (!known.count(l.gen))
        throw Error(Errc::UnknownLabel, "relator uses unknown generator '" + l.gen + "'");
      if (l.sign != 1 && l.sign != -1)
        throw Error(Errc::InvalidInput, "letter sign must be +1 or -1");
    }
    r = free_reduce(r);
  }
  return Presentation{std::move(generators), std::move(relators)};
}

bool operator==(const Presentation& a, const Presentation& b) {
  return a.generators == b.generators && a.relators == b.relators;
}

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().sign == -w.back().sign) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(w);
  }
  return w;
}

std::string encode_word(const Word& w) {
  std::string s;
  for (const auto& l : w) {
    s += l.gen;
    s += l.sign > 0 ? '+' : '-';
    s += '\x1f';
  }
  return s;
}

// canonical key of a relator up to rotation and inversion, for deduping
std::string cyclic_key(const Word& w) {
  std::string best;
  bool first = true;
  const Word variants[2] = {w, inverse_word(w)};
  for (const Word& word : variants) {
    for (size_t r = 0; r < std::max<size_t>(word.size(), 1); ++r) {
      Word rot(word.begin() + r, word.end());
      rot.insert(rot.end(), word.begin(), word.begin() + r);
      std::string key = encode_word(rot);
      if (first || key < best) best = key;
      first = false;
    }
  }
  return best;
}

Word substitute(const Word& w, const std::string& gen, const Word& replacement) {
  Word out;
  Word invRepl = inverse_word(replacement);
  for (const auto& l : w) {
    if (l.gen != gen) {
      out.push_back(l);
    } else {
      const Word& r = l.sign > 0 ? replacement : invRepl;
      out.insert(out.end(), r.begin(), r.end());
    }
  }
  return free_reduce(out);
}

} // namespace

Presentation simplify_presentation(const Presentation& p) {
  std::vector<std::string> gens = p.generators;
  std::vector<Word> rels;
  rels.reserve(p.relators.size());
  for (const auto& r : p.relators) rels.push_back(free_reduce(r));

  const int kMaxPasses = 1000;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool changed = false;

    for (auto& r : rels) {
      Word c = cyclic_reduce(r);
      if (c.size() != r.size()) changed = true;
      r = std::move(c);
    }

    // drop empty and duplicate relators
    std::vector<Word> kept;
    std::set<std::string> seen;
    for (auto& r : rels) {
      if (r.empty()) {
        changed = true;
        continue;
      }
      if (!seen.insert(cyclic_key(r)).second) {
        changed = true;
        continue;
      }
      kept.push_back(std::move(r));
    }
    rels = std::move(kept);

    // eliminate a generator occurring exactly once in some relator; take
    // the shortest such relator so substitutions stay small
    int bestRel = -1;
    size_t bestPos = 0;
    for (size_t ri = 0; ri < rels.size(); ++ri) {
      const Word& r = rels[ri];
      if (bestRel >= 0 && r.size() >= rels[bestRel].size()) continue;
      for (size_t k = 0; k < r.size(); ++k) {
        int occurrences = 0;
        for (const auto& l : r)
          if (l.gen == r[k].gen) ++occurrences;
        if (occurrences == 1) {
          bestRel = static_cast<int>(ri);
          bestPos = k;
          break;
        }
      }
    }

    if (bestRel >= 0) {
      Word r = rels[bestRel];
      const std::string gen = r[bestPos].gen;
      const int sign = r[bestPos].sign;
      Word before(r.begin(), r.begin() + bestPos);
      Word after(r.begin() + bestPos + 1, r.end());
      // before * g^sign * after = 1
      Word replacement = sign > 0
                             ? concat(inverse_word(before), inverse_word(after))
                             : concat(after, before);
      rels.erase(rels.begin() + bestRel);
      for (auto& other : rels) other = substitute(other, gen, replacement);
      gens.erase(std::find(gens.begin(), gens.end(), gen));
      changed = true;
    }

    if (!changed) break;
  }
  return Presentation{std::move(gens), std::move(rels)};
}

bool is_free_presentation(const Presentation& p) {
  return simplify_presentation(p).relators.empty();
}

bool is_trivial_presentation(const Presentation& p) {
  Presentation s = simplify_presentation(p);
  return s.generators.empty() && s.relators.empty();
}

std::string describe_group(const Presentation& p) {
  Presentation s = simplify_presentation(p);
  if (s.relators.empty()) {
    if (s.generators.empty()) return "trivial group";
    if (s.generators.size() == 1) return "free of rank 1 (infinite cyclic)";
    return "free of rank " + std::to_string(s.generators.size());
  }
  return "";
}

bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
  return a.rank == b.rank && a.torsion == b.torsion;
}

AbelianInvariants abelianization_invariants(const Presentation& p) {
  int n = static_cast<int>(p.generators.size());
  IntMatrix m(static_cast<int>(p.relators.size()), n);
  for (size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& l : p.relators[r]) {
      auto it = std::find(p.generators.begin(), p.generators.end(), l.gen);
      m.at(static_cast<int>(r), static_cast<int>(it - p.generators.begin())) += l.sign;
    }
  SmithResult snf = smith_normal_form(m);
  AbelianInvariants out;
  out.rank = n - snf.rank();
  out.torsion = snf.torsion();
  return out;
}

int hom_kplus_dimension(const AbelianInvariants& inv, long long characteristic) {
  FieldSpec k = make_field(characteristic);
  if (k.characteristic == 0) return inv.rank;
  int dim = inv.rank;
  for (const auto& d : inv.torsion)
    if (d % k.characteristic == 0) ++dim;
  return dim;
}

// -- finite groups -------------------------------------------------------------

FiniteGroupTable cyclic_group(int n) {
  FiniteGroupTable g;
  g.name = "C" + std::to_string(n);
  g.order = n;
  g.mul.resize(static_cast<size_t>(n) * n);
  g.inv.resize(n);
  for (int i = 0; i < n; ++i) {
    g.inv[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) g.mul[static_cast<size_t>(i) * n + j] = (i + j) % n;
  }
  return g;
}

FiniteGroupTable symmetric_group(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  FiniteGroupTable g;
  g.name = "S" + std::to_string(n);
  g.order = static_cast<int>(perms.size());
  g.mul.resize(static_cast<size_t>(g.order) * g.order);
  g.inv.resize(g.order);
  std::vector<int> composed(n), inverse(n);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      for (int x = 0; x < n; ++x) composed[x] = perms[a][perms[b][x]];
      g.mul[static_cast<size_t>(a) * g.order + b] = index[composed];
    }
    for (int x = 0; x < n; ++x) inverse[perms[a][x]] = x;
    g.inv[a] = index[inverse];
  }
  return g;
}

const FiniteGroupTable& builtin_group(const std::string& name) {
  static const std::map<std::string, FiniteGroupTable> tables = [] {
    std::map<std::string, FiniteGroupTable> m;
    for (int n : {2, 3, 4, 6}) {
      FiniteGroupTable g = cyclic_group(n);
      m[g.name] = std::move(g);
    }
    for (int n : {3, 4}) {
      FiniteGroupTable g = symmetric_group(n);
      m[g.name] = std::move(g);
    }
    return m;
  }();
  auto it = tables.find(name);
  if (it == tables.end())
    throw Error(Errc::UnknownLabel, "no builtin group named '" + name + "'");
  return it->second;
}

// -- hom counting ---------------------------------------------------------------

namespace {

std::vector<int> enumerated_generators(const Presentation& p) {
  std::vector<int> out;
  for (size_t i = 0; i < p.generators.size(); ++i) {
    bool used = false;
    for (const auto& r : p.relators)
      for (const auto& l : r)
        if (l.gen == p.generators[i]) { used = true; break; }
    if (used) out.push_back(static_cast<int>(i));
  }
  return out;
}

// order^m, clamped at limit+1
unsigned long long power_clamped(int order, size_t m, unsigned long long limit) {
  unsigned long long v = 1;
  for (size_t i = 0; i < m; ++i) {
    if (v > limit / order) return limit + 1;
    v *= static_cast<unsigned long long>(order);
  }
  return v;
}

} // namespace

unsigned long long count_homs(const Presentation& p, const FiniteGroupTable& target,
                              unsigned long long budget) {
  std::vector<int> enumerated = enumerated_generators(p);
  size_t m = enumerated.size();

  unsigned long long checks = power_clamped(target.order, m, budget);
  if (checks > budget)
    throw Error(Errc::TargetTooLarge,
                "hom count into " + target.name + " needs more than " +
                    std::to_string(budget) + " checks");

  // relators in terms of positions in `enumerated`
  std::map<int, int> position;
  for (size_t i = 0; i < enumerated.size(); ++i) position[enumerated[i]] = static_cast<int>(i);
  std::map<std::string, int> genIndex;
  for (size_t i = 0; i < p.generators.size(); ++i)
    genIndex[p.generators[i]] = static_cast<int>(i);

  struct CompiledRelator {
    std::vector<std::pair<int, int>> letters; // (position, sign)
    int lastLevel = -1;
  };
  std::vector<CompiledRelator> compiled;
  for (const auto& r : p.relators) {
    CompiledRelator cr;
    for (const auto& l : r) {
      int pos = position.at(genIndex.at(l.gen));
      cr.letters.emplace_back(pos, l.sign);
      cr.lastLevel = std::max(cr.lastLevel, pos);
    }
    if (cr.letters.empty()) continue; // empty relator holds everywhere
    compiled.push_back(std::move(cr));
  }
  std::vector<std::vector<const CompiledRelator*>> atLevel(m);
  for (const auto& cr : compiled) atLevel[cr.lastLevel].push_back(&cr);

  unsigned long long satisfying = 0;
  std::vector<int> image(m, 0);
  std::function<void(size_t)> descend = [&](size_t level) {
    if (level == m) {
      ++satisfying;
      return;
    }
    for (int g = 0; g < target.order; ++g) {
      image[level] = g;
      bool ok = true;
      for (const CompiledRelator* cr : atLevel[level]) {
        int acc = target.identity;
        for (const auto& [pos, sign] : cr->letters) {
          int v = image[pos];
          if (sign < 0) v = target.inv[v];
          acc = target.times(acc, v);
        }
        if (acc != target.identity) { ok = false; break; }
      }
      if (ok) descend(level + 1);
    }
  };
  descend(0);

  // generators not appearing in any relator are unconstrained
  size_t freeGens = p.generators.size() - m;
  for (size_t i = 0; i < freeGens; ++i) {
    if (satisfying > (~0ULL) / static_cast<unsigned long long>(target.order))
      throw Error(Errc::TargetTooLarge, "hom count overflows 64 bits");
    satisfying *= static_cast<unsigned long long>(target.order);
  }
  return satisfying;
}

bool operator==(const InvariantReport& a, const InvariantReport& b) {
  return a.abelianRank == b.abelianRank && a.torsion == b.torsion && a.homCounts == b.homCounts;
}

InvariantReport invariant_suite(const Presentation& p, unsigned long long budget,
                                std::vector<std::string>* notes) {
  Presentation s = simplify_presentation(p);

  InvariantReport out;
  AbelianInvariants ab = abelianization_invariants(s);
  out.abelianRank = ab.rank;
  out.torsion = ab.torsion;

  for (const char* name : {"C2", "C3", "C4", "S3"})
    out.homCounts[name] = count_homs(s, builtin_group(name), budget);

  const FiniteGroupTable& s4 = builtin_group("S4");
  size_t m = enumerated_generators(s).size();
  if (power_clamped(s4.order, m, budget) <= budget) {
    out.homCounts["S4"] = count_homs(s, s4, budget);
  } else if (notes) {
    notes->push_back("S4 hom count skipped: " + std::to_string(m) +
                     " relator generators exceed the enumeration budget");
  }
  return out;
}

} // namespace fgtool
