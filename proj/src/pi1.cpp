#include "fgtool/pi1.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <queue>
#include <set>

#include "fgtool/rng.hpp"

namespace fgtool {

bool operator==(const WalkStep& a, const WalkStep& b) {
  return a.arrowId == b.arrowId && a.forward == b.forward;
}

bool operator==(const Walk& a, const Walk& b) {
  return a.steps == b.steps && a.source == b.source && a.target == b.target;
}

bool operator==(const EdgePath& a, const EdgePath& b) { return a.vertices == b.vertices; }

// -- edge-path group of a complex ---------------------------------------------

Presentation edge_path_presentation(const SimplicialComplex& c, const Label& basepoint) {
  if (!std::binary_search(c.vertices.begin(), c.vertices.end(), basepoint))
    throw Error(Errc::UnknownBasepoint, "basepoint '" + basepoint + "' is not a vertex");
  if (!c.connected)
    throw Error(Errc::Disconnected, "edge-path group needs a connected complex");

  std::map<Label, std::vector<Label>> adj;
  for (const auto& v : c.vertices) adj[v];
  for (const auto& e : c.simplexes_of_dim(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());

  std::set<std::pair<Label, Label>> treeEdges; // stored with smaller label first
  std::set<Label> visited{basepoint};
  std::queue<Label> bfs;
  bfs.push(basepoint);
  while (!bfs.empty()) {
    Label v = bfs.front();
    bfs.pop();
    for (const auto& w : adj[v])
      if (visited.insert(w).second) {
        treeEdges.insert(std::minmax(v, w));
        bfs.push(w);
      }
  }

  std::vector<std::string> generators;
  std::map<std::pair<Label, Label>, std::string> genOfEdge;
  std::set<std::string> taken;
  for (const auto& e : c.simplexes_of_dim(1)) {
    std::pair<Label, Label> key{e[0], e[1]};
    if (treeEdges.count(key)) continue;
    std::string name = e[0] + "-" + e[1];
    while (taken.count(name)) name += "'";
    taken.insert(name);
    genOfEdge[key] = name;
    generators.push_back(name);
  }

  // traversal of {x, y} from x to y as a word
  auto word_of = [&](const Label& x, const Label& y) -> Word {
    auto key = std::minmax(x, y);
    auto it = genOfEdge.find(key);
    if (it == genOfEdge.end()) return {};
    return {Letter{it->second, x == key.first ? 1 : -1}};
  };

  std::vector<Word> relators;
  for (const auto& t : c.simplexes_of_dim(2)) {
    Word r = concat(word_of(t[0], t[1]), concat(word_of(t[1], t[2]), word_of(t[2], t[0])));
    relators.push_back(std::move(r));
  }
  return make_presentation(std::move(generators), std::move(relators));
}

// -- fundamental group of an acyclic quiver -----------------------------------

namespace {

struct QuiverPi1Data {
  Label basepoint;
  SpanningTree tree;
  std::map<std::string, std::string> genOfArrow; // non-tree arrowId -> generator
  Presentation pres;
};

SpanningTree undirected_bfs_tree(const Quiver& q, const Label& root) {
  // neighbor visits ordered by (vertex label, arrow id)
  std::map<Label, std::vector<std::pair<Label, const Arrow*>>> adj;
  for (const auto& v : q.vertices) adj[v];
  for (const auto& a : q.arrows) {
    adj[a.source].emplace_back(a.target, &a);
    adj[a.target].emplace_back(a.source, &a);
  }
  for (auto& [v, ns] : adj)
    std::sort(ns.begin(), ns.end(), [](const auto& x, const auto& y) {
      return std::tie(x.first, x.second->id) < std::tie(y.first, y.second->id);
    });

  SpanningTree tree;
  tree.root = root;
  std::set<Label> visited{root};
  std::queue<Label> bfs;
  bfs.push(root);
  tree.bfsOrder.push_back(root);
  while (!bfs.empty()) {
    Label v = bfs.front();
    bfs.pop();
    for (const auto& [w, a] : adj[v])
      if (visited.insert(w).second) {
        tree.parent[w] = v;
        tree.parentEdge[w] = a->id;
        tree.bfsOrder.push_back(w);
        bfs.push(w);
      }
  }
  return tree;
}

// walk inside the tree, with the common root segment cancelled
std::vector<WalkStep> tree_walk(const Quiver& q, const SpanningTree& tree, const Label& from,
                                const Label& to) {
  auto ancestry = [&](Label v) {
    std::vector<Label> chain{v};
    while (chain.back() != tree.root) chain.push_back(tree.parent.at(chain.back()));
    return chain; // v .. root
  };
  std::vector<Label> up = ancestry(from), down = ancestry(to);
  while (up.size() > 1 && down.size() > 1 && up[up.size() - 2] == down[down.size() - 2]) {
    up.pop_back();
    down.pop_back();
  }
  std::vector<WalkStep> steps;
  for (size_t i = 0; i + 1 < up.size(); ++i) {
    const Arrow* a = q.arrow_by_id(tree.parentEdge.at(up[i]));
    steps.push_back({a->id, a->source == up[i]});
  }
  for (size_t i = down.size() - 1; i > 0; --i) {
    const Arrow* a = q.arrow_by_id(tree.parentEdge.at(down[i - 1]));
    steps.push_back({a->id, a->source != down[i - 1]});
  }
  return steps;
}

Word path_word(const QuiverPi1Data& data, const DirectedPath& p) {
  Word w;
  for (const auto& id : p.arrowIds) {
    auto it = data.genOfArrow.find(id);
    if (it != data.genOfArrow.end()) w.push_back({it->second, 1});
  }
  return w;
}

QuiverPi1Data build_quiver_pi1(const Quiver& q, const Label& basepoint) {
  if (q.vertex_index(basepoint) < 0)
    throw Error(Errc::UnknownBasepoint, "basepoint '" + basepoint + "' is not a vertex");
  if (!is_acyclic(q)) throw Error(Errc::CyclicQuiver, "quiver has a directed cycle");
  if (!is_connected_undirected(q))
    throw Error(Errc::Disconnected, "quiver is not connected");

  QuiverPi1Data data;
  data.basepoint = basepoint;
  data.tree = undirected_bfs_tree(q, basepoint);

  std::set<std::string> treeArrows;
  for (const auto& [child, id] : data.tree.parentEdge) treeArrows.insert(id);

  std::vector<std::string> generators;
  for (const auto& a : q.arrows)
    if (!treeArrows.count(a.id)) {
      data.genOfArrow[a.id] = a.id;
      generators.push_back(a.id);
    }

  std::vector<Word> relators;
  for (const auto& [p1, p2] : parallel_pairs(q))
    relators.push_back(concat(path_word(data, p1), inverse_word(path_word(data, p2))));

  data.pres = make_presentation(std::move(generators), std::move(relators));
  return data;
}

void check_walk(const Walk& w, const Quiver& q) {
  if (q.vertex_index(w.source) < 0 || q.vertex_index(w.target) < 0)
    throw Error(Errc::MalformedWalk, "walk endpoint is not a vertex");
  Label cur = w.source;
  for (const auto& s : w.steps) {
    const Arrow* a = q.arrow_by_id(s.arrowId);
    if (!a) throw Error(Errc::MalformedWalk, "walk uses unknown arrow '" + s.arrowId + "'");
    if (s.forward) {
      if (a->source != cur) throw Error(Errc::MalformedWalk, "steps do not chain at '" + cur + "'");
      cur = a->target;
    } else {
      if (a->target != cur) throw Error(Errc::MalformedWalk, "steps do not chain at '" + cur + "'");
      cur = a->source;
    }
  }
  if (cur != w.target) throw Error(Errc::MalformedWalk, "walk does not end at its target");
}

} // namespace

Presentation quiver_pi1_presentation(const Quiver& q, const Label& basepoint) {
  return build_quiver_pi1(q, basepoint).pres;
}

Word walk_word(const Walk& w, const Quiver& q, const Label& basepoint) {
  check_walk(w, q);
  QuiverPi1Data data = build_quiver_pi1(q, basepoint);
  Word out;
  for (const auto& s : w.steps) {
    auto it = data.genOfArrow.find(s.arrowId);
    if (it != data.genOfArrow.end()) out.push_back({it->second, s.forward ? 1 : -1});
  }
  return free_reduce(out);
}

// -- the proof maps ------------------------------------------------------------

EdgePath phi_walk_to_edgepath(const Walk& w, const Quiver& q) {
  check_walk(w, q);
  EdgePath e;
  e.vertices.push_back(w.source);
  Label cur = w.source;
  for (const auto& s : w.steps) {
    const Arrow* a = q.arrow_by_id(s.arrowId);
    cur = s.forward ? a->target : a->source;
    e.vertices.push_back(cur);
  }
  return e;
}

namespace {

// lexicographically smallest maximal chain from x up to y, as element indices
std::vector<int> least_maximal_chain(const Poset& p, int x, int y) {
  std::vector<int> chain{x};
  int cur = x;
  while (cur != y) {
    int next = -1;
    for (int z = 0; z < p.size(); ++z) {
      if (!p.less[cur][z] || (z != y && !p.less[z][y])) continue;
      bool cover = true;
      for (int w = 0; w < p.size() && cover; ++w)
        if (p.less[cur][w] && p.less[w][z]) cover = false;
      if (cover) { next = z; break; }
    }
    if (next < 0)
      throw Error(Errc::InvalidInput, "order relation is not transitively closed");
    chain.push_back(next);
    cur = next;
  }
  return chain;
}

} // namespace

Walk psi_edgepath_to_walk(const EdgePath& e, const Poset& p) {
  if (e.vertices.empty()) throw Error(Errc::NotAnEdgePath, "empty edge path");
  for (const auto& v : e.vertices)
    if (p.index(v) < 0)
      throw Error(Errc::NotAnEdgePath, "'" + v + "' is not an element of the poset");

  Walk w;
  w.source = e.vertices.front();
  w.target = e.vertices.back();
  for (size_t i = 0; i + 1 < e.vertices.size(); ++i) {
    int a = p.index(e.vertices[i]);
    int b = p.index(e.vertices[i + 1]);
    if (a == b) continue;
    if (!p.comparable(a, b))
      throw Error(Errc::NotAnEdgePath, "'" + e.vertices[i] + "' and '" + e.vertices[i + 1] +
                                           "' are incomparable");
    bool ascending = p.less[a][b];
    std::vector<int> chain =
        ascending ? least_maximal_chain(p, a, b) : least_maximal_chain(p, b, a);
    if (ascending) {
      for (size_t k = 0; k + 1 < chain.size(); ++k)
        w.steps.push_back({p.elements[chain[k]] + "|" + p.elements[chain[k + 1]], true});
    } else {
      for (size_t k = chain.size() - 1; k > 0; --k)
        w.steps.push_back({p.elements[chain[k - 1]] + "|" + p.elements[chain[k]], false});
    }
  }
  return w;
}

// -- roundtrip checking ----------------------------------------------------------

namespace {

std::string encode(const Word& w) {
  std::string s;
  for (const auto& l : w) {
    s += l.gen;
    s += l.sign > 0 ? '+' : '-';
    s += '\x1f';
  }
  return s;
}

// is the exponent vector in the integer row space of the relator matrix?
bool in_relator_lattice(const std::vector<BigInt>& x, const SmithResult& snf) {
  int cols = snf.right.rows;
  std::vector<BigInt> xr(cols, 0);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < cols; ++i)
      if (x[i] != 0) xr[j] += x[i] * snf.right.at(i, j);
  for (int j = 0; j < cols; ++j) {
    BigInt d = j < static_cast<int>(snf.diagonal.size()) ? snf.diagonal[j] : BigInt(0);
    if (d == 0) {
      if (xr[j] != 0) return false;
    } else if (xr[j] % d != 0) {
      return false;
    }
  }
  return true;
}

bool rewrite_to_identity(const Word& start, const std::vector<Word>& relators, int budget) {
  if (start.empty()) return true;

  std::vector<Word> moves;
  std::set<std::string> seenMoves;
  for (const auto& r : relators) {
    for (const Word& base : {r, inverse_word(r)}) {
      for (size_t rot = 0; rot < base.size(); ++rot) {
        Word m(base.begin() + rot, base.end());
        m.insert(m.end(), base.begin(), base.begin() + rot);
        if (seenMoves.insert(encode(m)).second) moves.push_back(std::move(m));
      }
    }
  }
  if (moves.empty()) return false;

  size_t maxRel = 0;
  for (const auto& m : moves) maxRel = std::max(maxRel, m.size());
  size_t maxLen = start.size() + 2 * maxRel + 2;

  std::set<std::string> visited{encode(start)};
  std::deque<Word> queue{start};
  while (!queue.empty() && budget > 0) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : moves) {
      for (size_t pos = 0; pos <= w.size(); ++pos) {
        if (--budget <= 0) return false;
        Word cand(w.begin(), w.begin() + pos);
        cand.insert(cand.end(), m.begin(), m.end());
        cand.insert(cand.end(), w.begin() + pos, w.end());
        cand = free_reduce(cand);
        if (cand.empty()) return true;
        if (cand.size() > maxLen) continue;
        if (visited.insert(encode(cand)).second) queue.push_back(std::move(cand));
      }
    }
  }
  return false;
}

IntMatrix relator_matrix(const Presentation& pres) {
  IntMatrix m(static_cast<int>(pres.relators.size()), static_cast<int>(pres.generators.size()));
  for (size_t r = 0; r < pres.relators.size(); ++r)
    for (const auto& l : pres.relators[r]) {
      auto it = std::find(pres.generators.begin(), pres.generators.end(), l.gen);
      m.at(static_cast<int>(r), static_cast<int>(it - pres.generators.begin())) += l.sign;
    }
  return m;
}

SampleOutcome decide_words_equal(const Word& a, const Word& b, const Presentation& pres,
                                 const SmithResult& relatorSnf, int rewriteBudget) {
  Word u = free_reduce(a), v = free_reduce(b);
  if (u == v) return SampleOutcome::Pass;
  Word t = free_reduce(concat(u, inverse_word(v)));
  if (t.empty()) return SampleOutcome::Pass;

  std::vector<BigInt> x(pres.generators.size(), 0);
  for (const auto& l : t) {
    auto it = std::find(pres.generators.begin(), pres.generators.end(), l.gen);
    x[it - pres.generators.begin()] += l.sign;
  }
  if (!in_relator_lattice(x, relatorSnf)) return SampleOutcome::Fail;
  return rewrite_to_identity(t, pres.relators, rewriteBudget) ? SampleOutcome::Pass
                                                              : SampleOutcome::Inconclusive;
}

} // namespace

SampleOutcome walk_words_equivalent(const Word& a, const Word& b, const Presentation& pres,
                                    int rewriteBudget) {
  for (const Word* w : {&a, &b})
    for (const auto& l : *w)
      if (std::find(pres.generators.begin(), pres.generators.end(), l.gen) ==
          pres.generators.end())
        throw Error(Errc::UnknownLabel, "word uses unknown generator '" + l.gen + "'");
  return decide_words_equal(a, b, pres, smith_normal_form(relator_matrix(pres)),
                            rewriteBudget);
}

RoundtripReport check_phi_psi_roundtrip(const Poset& p, int samples, std::uint64_t seed,
                                        int rewriteBudget) {
  Quiver h = hasse_quiver(p).quiver;
  Label basepoint = h.vertices.front();
  QuiverPi1Data data = build_quiver_pi1(h, basepoint);
  SmithResult relatorSnf = smith_normal_form(relator_matrix(data.pres));

  Rng rng(seed);
  RoundtripReport report;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    Label base = h.vertices[rng.below(h.vertices.size())];
    Walk w;
    w.source = w.target = base;
    Label cur = base;
    std::uint64_t len = 1 + rng.below(6);
    for (std::uint64_t i = 0; i < len; ++i) {
      std::vector<const Arrow*> incident;
      for (const auto& a : h.arrows)
        if (a.source == cur || a.target == cur) incident.push_back(&a);
      if (incident.empty()) break;
      const Arrow* a = incident[rng.below(incident.size())];
      bool forward = a->source == cur;
      w.steps.push_back({a->id, forward});
      cur = forward ? a->target : a->source;
    }
    for (const auto& st : tree_walk(h, data.tree, cur, base)) w.steps.push_back(st);

    EdgePath e = phi_walk_to_edgepath(w, h);
    Walk back = psi_edgepath_to_walk(e, p);

    Word u, v;
    for (const auto& st : w.steps) {
      auto it = data.genOfArrow.find(st.arrowId);
      if (it != data.genOfArrow.end()) u.push_back({it->second, st.forward ? 1 : -1});
    }
    for (const auto& st : back.steps) {
      auto it = data.genOfArrow.find(st.arrowId);
      if (it != data.genOfArrow.end()) v.push_back({it->second, st.forward ? 1 : -1});
    }

    SampleOutcome outcome = decide_words_equal(u, v, data.pres, relatorSnf, rewriteBudget);
    report.outcomes.push_back(outcome);
    switch (outcome) {
      case SampleOutcome::Pass: ++report.passed; break;
      case SampleOutcome::Fail: ++report.failed; break;
      case SampleOutcome::Inconclusive: ++report.inconclusive; break;
    }
  }
  return report;
}

// -- Van Kampen -------------------------------------------------------------------

namespace {

void require_subquiver(const Quiver& whole, const Quiver& part, const char* name) {
  for (const auto& v : part.vertices)
    if (whole.vertex_index(v) < 0)
      throw Error(Errc::InvalidInput,
                  std::string(name) + " has vertex '" + v + "' outside the ambient quiver");
  for (const auto& a : part.arrows) {
    const Arrow* base = whole.arrow_by_id(a.id);
    if (!base || !(*base == a))
      throw Error(Errc::InvalidInput,
                  std::string(name) + " arrow '" + a.id + "' is not an arrow of the ambient quiver");
  }
}

std::set<std::pair<Label, Label>> arrow_pairs(const Quiver& q) {
  std::set<std::pair<Label, Label>> out;
  for (const auto& a : q.arrows) out.insert({a.source, a.target});
  return out;
}

Word prefixed(const Word& w, const std::string& prefix) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back({prefix + l.gen, l.sign});
  return out;
}

} // namespace

OrderedQuiver van_kampen_intersection(const Quiver& q, const Quiver& q1, const Quiver& q2) {
  Quiver q1c = complete_quiver(q1);
  Quiver q2c = complete_quiver(q2);

  std::vector<Label> vertices;
  std::set_intersection(q1c.vertices.begin(), q1c.vertices.end(), q2c.vertices.begin(),
                        q2c.vertices.end(), std::back_inserter(vertices));
  if (vertices.empty())
    throw Error(Errc::DisconnectedPiece, "the completions of the pieces share no vertex");

  auto pairs1 = arrow_pairs(q1c), pairs2 = arrow_pairs(q2c);
  std::vector<Arrow> arrows;
  for (const auto& pr : pairs1) {
    if (!pairs2.count(pr)) continue;
    // reuse the ambient arrow id when the pair is an arrow of q
    std::string id = "c:" + pr.first + ">" + pr.second;
    for (const auto& a : q.arrows)
      if (a.source == pr.first && a.target == pr.second) { id = a.id; break; }
    arrows.push_back({id, pr.first, pr.second});
  }
  return order_quiver(make_quiver(vertices, std::move(arrows)));
}

Presentation van_kampen_assemble(const Quiver& q, const Quiver& q1, const Quiver& q2,
                                 std::optional<Label> basepoint) {
  validate_ordered(q);
  if (!is_connected_undirected(q))
    throw Error(Errc::Disconnected, "ambient quiver is not connected");
  require_subquiver(q, q1, "first piece");
  require_subquiver(q, q2, "second piece");
  if (!is_connected_undirected(q1))
    throw Error(Errc::DisconnectedPiece, "first piece is not connected");
  if (!is_connected_undirected(q2))
    throw Error(Errc::DisconnectedPiece, "second piece is not connected");

  Quiver qc = complete_quiver(q);
  Quiver q1c = complete_quiver(q1);
  Quiver q2c = complete_quiver(q2);

  std::set<Label> vunion(q1c.vertices.begin(), q1c.vertices.end());
  vunion.insert(q2c.vertices.begin(), q2c.vertices.end());
  if (std::vector<Label>(vunion.begin(), vunion.end()) != qc.vertices)
    throw Error(Errc::CoverViolation, "piece vertices do not cover the quiver");
  auto punion = arrow_pairs(q1c);
  auto p2 = arrow_pairs(q2c);
  punion.insert(p2.begin(), p2.end());
  if (punion != arrow_pairs(qc))
    throw Error(Errc::CoverViolation,
                "completed pieces do not cover the completed quiver");

  OrderedQuiver q0 = van_kampen_intersection(q, q1, q2);
  if (!is_connected_undirected(q0.quiver))
    throw Error(Errc::DisconnectedPiece, "intersection piece is not connected");

  Label bp = basepoint.value_or(q0.quiver.vertices.front());
  if (q0.quiver.vertex_index(bp) < 0)
    throw Error(Errc::BadBasepoint,
                "basepoint '" + bp + "' is not a vertex of the intersection piece");

  QuiverPi1Data d0 = build_quiver_pi1(q0.quiver, bp);
  QuiverPi1Data d1 = build_quiver_pi1(q1, bp);
  QuiverPi1Data d2 = build_quiver_pi1(q2, bp);

  // first directed path of the piece parallel to each needed pair
  auto parallel_path_map = [](const Quiver& piece) {
    std::map<std::pair<Label, Label>, DirectedPath> first;
    for (const auto& p : enumerate_paths(piece))
      first.emplace(std::pair<Label, Label>{p.source, p.target}, p);
    return first;
  };
  auto paths1 = parallel_path_map(q1);
  auto paths2 = parallel_path_map(q2);

  // image of a q0 walk in a piece, as a word over the piece's generators
  auto embed = [&](const std::vector<WalkStep>& steps, const Quiver& piece,
                   const QuiverPi1Data& dn,
                   const std::map<std::pair<Label, Label>, DirectedPath>& paths) {
    Word out;
    auto emit = [&](const std::string& arrowId, int sign) {
      auto it = dn.genOfArrow.find(arrowId);
      if (it != dn.genOfArrow.end()) out.push_back({it->second, sign});
    };
    for (const auto& st : steps) {
      const Arrow* a0 = q0.quiver.arrow_by_id(st.arrowId);
      const Arrow* direct = nullptr;
      for (const auto& a : piece.arrows)
        if (a.source == a0->source && a.target == a0->target) { direct = &a; break; }
      if (direct) {
        emit(direct->id, st.forward ? 1 : -1);
        continue;
      }
      auto it = paths.find({a0->source, a0->target});
      if (it == paths.end())
        throw Error(Errc::CoverViolation, "no parallel path in the piece for arrow '" +
                                              a0->id + "'");
      const auto& ids = it->second.arrowIds;
      if (st.forward)
        for (const auto& id : ids) emit(id, 1);
      else
        for (auto rit = ids.rbegin(); rit != ids.rend(); ++rit) emit(*rit, -1);
    }
    return free_reduce(out);
  };

  std::vector<std::string> generators;
  std::vector<Word> relators;
  for (const auto& g : d1.pres.generators) generators.push_back("1:" + g);
  for (const auto& g : d2.pres.generators) generators.push_back("2:" + g);
  for (const auto& r : d1.pres.relators) relators.push_back(prefixed(r, "1:"));
  for (const auto& r : d2.pres.relators) relators.push_back(prefixed(r, "2:"));

  for (const auto& g0 : d0.pres.generators) {
    // generator loop: tree path to the arrow, the arrow, tree path back
    const Arrow* a0 = q0.quiver.arrow_by_id(g0);
    assert(a0);
    std::vector<WalkStep> loop = tree_walk(q0.quiver, d0.tree, bp, a0->source);
    loop.push_back({a0->id, true});
    for (const auto& st : tree_walk(q0.quiver, d0.tree, a0->target, bp)) loop.push_back(st);

    Word w1 = prefixed(embed(loop, q1, d1, paths1), "1:");
    Word w2 = prefixed(embed(loop, q2, d2, paths2), "2:");
    relators.push_back(free_reduce(concat(w1, inverse_word(w2))));
  }
  return make_presentation(std::move(generators), std::move(relators));
}

} // namespace fgtool
