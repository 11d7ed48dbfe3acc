#include "fgtool/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace fgtool {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MissingFace: return "MissingFace";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::EmptySimplex: return "EmptySimplex";
    case Errc::CyclicOrder: return "CyclicOrder";
    case Errc::CyclicQuiver: return "CyclicQuiver";
    case Errc::ParallelArrows: return "ParallelArrows";
    case Errc::NotOrdered: return "NotOrdered";
    case Errc::Disconnected: return "Disconnected";
    case Errc::UnknownBasepoint: return "UnknownBasepoint";
    case Errc::MalformedWalk: return "MalformedWalk";
    case Errc::NotAnEdgePath: return "NotAnEdgePath";
    case Errc::CoverViolation: return "CoverViolation";
    case Errc::DisconnectedPiece: return "DisconnectedPiece";
    case Errc::BadBasepoint: return "BadBasepoint";
    case Errc::TargetTooLarge: return "TargetTooLarge";
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

namespace {

std::string join(const std::vector<Label>& xs, const char* sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

} // namespace

Simplex make_simplex(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::binary_search(simplexes.begin(), simplexes.end(), s, simplex_less);
}

std::vector<Simplex> SimplicialComplex::simplexes_of_dim(int dim) const {
  std::vector<Simplex> out;
  for (const auto& s : simplexes)
    if (static_cast<int>(s.size()) == dim + 1) out.push_back(s);
  return out;
}

namespace {

bool skeleton_connected(const std::vector<Label>& vertices,
                        const std::vector<Simplex>& simplexes) {
  if (vertices.empty()) return false;
  std::map<Label, std::vector<Label>> adj;
  for (const auto& v : vertices) adj[v];
  for (const auto& s : simplexes)
    if (s.size() == 2) {
      adj[s[0]].push_back(s[1]);
      adj[s[1]].push_back(s[0]);
    }
  std::set<Label> seen{vertices.front()};
  std::queue<Label> bfs;
  bfs.push(vertices.front());
  while (!bfs.empty()) {
    Label v = bfs.front();
    bfs.pop();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) bfs.push(w);
  }
  return seen.size() == vertices.size();
}

} // namespace

SimplicialComplex validate_complex(const ComplexCandidate& raw) {
  if (raw.vertices.empty())
    throw Error(Errc::InvalidInput, "complex has no vertices");

  std::vector<Label> vertices = raw.vertices;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  std::vector<Simplex> simplexes;
  simplexes.reserve(raw.simplexes.size());
  for (const auto& s : raw.simplexes) {
    if (s.empty()) throw Error(Errc::EmptySimplex, "empty simplex declared");
    Simplex canon = make_simplex(s);
    for (const auto& v : canon)
      if (!std::binary_search(vertices.begin(), vertices.end(), v))
        throw Error(Errc::UnknownVertex, "simplex uses undeclared vertex '" + v + "'");
    simplexes.push_back(std::move(canon));
  }
  std::sort(simplexes.begin(), simplexes.end(), simplex_less);
  simplexes.erase(std::unique(simplexes.begin(), simplexes.end()), simplexes.end());

  auto present = [&](const Simplex& s) {
    return std::binary_search(simplexes.begin(), simplexes.end(), s, simplex_less);
  };

  for (const auto& v : vertices)
    if (!present({v}))
      throw Error(Errc::MissingFace, "missing singleton {" + v + "}");

  // downward closure: checking codimension-1 faces of each simplex suffices
  for (const auto& s : simplexes) {
    if (s.size() < 2) continue;
    for (size_t skip = 0; skip < s.size(); ++skip) {
      Simplex face;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != skip) face.push_back(s[i]);
      if (!present(face))
        throw Error(Errc::MissingFace,
                    "face {" + join(face, ",") + "} of {" + join(s, ",") + "} is absent");
    }
  }

  SimplicialComplex c;
  c.vertices = std::move(vertices);
  c.simplexes = std::move(simplexes);
  c.connected = skeleton_connected(c.vertices, c.simplexes);
  return c;
}

SimplicialComplex close_down(const ComplexCandidate& raw) {
  std::set<Simplex> closed;
  std::vector<Simplex> work;
  for (const auto& s : raw.simplexes) {
    if (s.empty()) throw Error(Errc::EmptySimplex, "empty simplex declared");
    work.push_back(make_simplex(s));
  }
  while (!work.empty()) {
    Simplex s = work.back();
    work.pop_back();
    if (!closed.insert(s).second) continue;
    if (s.size() < 2) continue;
    for (size_t skip = 0; skip < s.size(); ++skip) {
      Simplex face;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != skip) face.push_back(s[i]);
      work.push_back(std::move(face));
    }
  }
  ComplexCandidate full;
  full.vertices = raw.vertices;
  for (const auto& s : closed) {
    full.simplexes.push_back(s);
    if (s.size() == 1) full.vertices.push_back(s[0]);
  }
  return validate_complex(full);
}

// -- posets -----------------------------------------------------------------

int Poset::index(const Label& x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return -1;
  return static_cast<int>(it - elements.begin());
}

bool Poset::lt(const Label& x, const Label& y) const {
  int i = index(x), j = index(y);
  if (i < 0 || j < 0) throw Error(Errc::UnknownLabel, "poset element not found");
  return less[i][j];
}

Poset make_poset(std::vector<Label> elements,
                 const std::vector<std::pair<Label, Label>>& strict_pairs) {
  if (elements.empty()) throw Error(Errc::InvalidInput, "poset has no elements");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  Poset p;
  p.elements = std::move(elements);
  int n = p.size();
  p.less.assign(n, std::vector<bool>(n, false));
  for (const auto& [x, y] : strict_pairs) {
    int i = p.index(x), j = p.index(y);
    if (i < 0) throw Error(Errc::UnknownLabel, "relation uses unknown element '" + x + "'");
    if (j < 0) throw Error(Errc::UnknownLabel, "relation uses unknown element '" + y + "'");
    if (i == j) throw Error(Errc::CyclicOrder, "element '" + x + "' related to itself");
    p.less[i][j] = true;
  }
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.less[i][k])
        for (int j = 0; j < n; ++j)
          if (p.less[k][j]) p.less[i][j] = true;
  for (int i = 0; i < n; ++i)
    if (p.less[i][i])
      throw Error(Errc::CyclicOrder,
                  "order relation has a cycle through '" + p.elements[i] + "'");
  return p;
}

bool operator==(const Poset& a, const Poset& b) {
  return a.elements == b.elements && a.less == b.less;
}

// -- quivers ----------------------------------------------------------------

bool operator==(const Arrow& a, const Arrow& b) {
  return a.id == b.id && a.source == b.source && a.target == b.target;
}

int Quiver::vertex_index(const Label& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

const Arrow* Quiver::arrow_by_id(const std::string& id) const {
  for (const auto& a : arrows)
    if (a.id == id) return &a;
  return nullptr;
}

bool Quiver::has_arrow_pair(const Label& s, const Label& t) const {
  for (const auto& a : arrows)
    if (a.source == s && a.target == t) return true;
  return false;
}

Quiver make_quiver(std::vector<Label> vertices, std::vector<Arrow> arrows) {
  if (vertices.empty()) throw Error(Errc::InvalidInput, "quiver has no vertices");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  Quiver q;
  q.vertices = std::move(vertices);
  std::set<std::string> ids;
  for (const auto& a : arrows) {
    if (!ids.insert(a.id).second)
      throw Error(Errc::DuplicateId, "duplicate arrow id '" + a.id + "'");
    if (q.vertex_index(a.source) < 0)
      throw Error(Errc::UnknownVertex, "arrow '" + a.id + "' has unknown source '" + a.source + "'");
    if (q.vertex_index(a.target) < 0)
      throw Error(Errc::UnknownVertex, "arrow '" + a.id + "' has unknown target '" + a.target + "'");
    if (a.source == a.target)
      throw Error(Errc::CyclicQuiver, "arrow '" + a.id + "' is a loop");
  }
  std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.source, a.target, a.id) < std::tie(b.source, b.target, b.id);
  });
  q.arrows = std::move(arrows);
  return q;
}

bool is_acyclic(const Quiver& q) {
  int n = static_cast<int>(q.vertices.size());
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (const auto& a : q.arrows) {
    int s = q.vertex_index(a.source), t = q.vertex_index(a.target);
    out[s].push_back(t);
    ++indeg[t];
  }
  std::queue<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  return seen == n;
}

bool is_connected_undirected(const Quiver& q) {
  int n = static_cast<int>(q.vertices.size());
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : q.arrows) {
    int s = q.vertex_index(a.source), t = q.vertex_index(a.target);
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  std::vector<bool> seen(n, false);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = true;
  int count = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        bfs.push(w);
      }
  }
  return count == n;
}

bool has_parallel_arrows(const Quiver& q) {
  std::set<std::pair<Label, Label>> pairs;
  for (const auto& a : q.arrows)
    if (!pairs.insert({a.source, a.target}).second) return true;
  return false;
}

bool same_arrow_pairs(const Quiver& a, const Quiver& b) {
  if (a.vertices != b.vertices) return false;
  std::multiset<std::pair<Label, Label>> pa, pb;
  for (const auto& x : a.arrows) pa.insert({x.source, x.target});
  for (const auto& x : b.arrows) pb.insert({x.source, x.target});
  return pa == pb;
}

OrderedQuiver validate_ordered(const Quiver& q) {
  if (!is_acyclic(q)) throw Error(Errc::CyclicQuiver, "quiver has a directed cycle");
  if (has_parallel_arrows(q))
    throw Error(Errc::ParallelArrows, "quiver has parallel arrows");
  // no arrow may be parallel to another directed path
  for (const auto& pair : parallel_pairs(q)) {
    if (pair.first.arrowIds.size() == 1 || pair.second.arrowIds.size() == 1)
      throw Error(Errc::NotOrdered,
                  "arrow parallel to a path between '" + pair.first.source + "' and '" +
                      pair.first.target + "'");
  }
  return OrderedQuiver{q};
}

bool operator==(const DirectedPath& a, const DirectedPath& b) {
  return a.arrowIds == b.arrowIds && a.source == b.source && a.target == b.target;
}

// -- Pos / Sim / barycentric -------------------------------------------------

Poset pos_of_complex(const SimplicialComplex& c) {
  std::vector<Label> elements;
  std::vector<Simplex> sims = c.simplexes;
  for (const auto& s : sims) elements.push_back(join(s, "+"));

  // labels containing '+' can make two simplexes print alike
  std::set<Label> unique(elements.begin(), elements.end());
  if (unique.size() != elements.size())
    throw Error(Errc::DuplicateId, "simplex labels collide when joined with '+'");

  std::vector<std::pair<Label, Label>> pairs;
  for (size_t i = 0; i < sims.size(); ++i)
    for (size_t j = 0; j < sims.size(); ++j) {
      if (i == j || sims[i].size() >= sims[j].size()) continue;
      if (std::includes(sims[j].begin(), sims[j].end(), sims[i].begin(), sims[i].end()))
        pairs.emplace_back(elements[i], elements[j]);
    }
  return make_poset(elements, pairs);
}

SimplicialComplex sim_of_poset(const Poset& p) {
  int n = p.size();
  std::vector<Simplex> chains;
  // grow chains upward; indices strictly increase along the order relation
  std::vector<int> stack;
  auto extend = [&](auto&& self, int last) -> void {
    Simplex chain;
    for (int i : stack) chain.push_back(p.elements[i]);
    chains.push_back(make_simplex(chain));
    for (int j = 0; j < n; ++j)
      if (p.less[last][j]) {
        stack.push_back(j);
        self(self, j);
        stack.pop_back();
      }
  };
  for (int i = 0; i < n; ++i) {
    stack.push_back(i);
    extend(extend, i);
    stack.pop_back();
  }
  ComplexCandidate cand;
  cand.vertices = p.elements;
  cand.simplexes = std::move(chains);
  return validate_complex(cand);
}

SimplicialComplex barycentric(const SimplicialComplex& c) {
  return sim_of_poset(pos_of_complex(c));
}

// -- Hasse and back ----------------------------------------------------------

OrderedQuiver hasse_quiver(const Poset& p) {
  int n = p.size();
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!p.less[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (p.less[i][k] && p.less[k][j]) cover = false;
      if (cover)
        arrows.push_back({p.elements[i] + "|" + p.elements[j], p.elements[i], p.elements[j]});
    }
  return validate_ordered(make_quiver(p.elements, std::move(arrows)));
}

Poset quiver_to_poset(const OrderedQuiver& oq) {
  const Quiver& q = oq.quiver;
  int n = static_cast<int>(q.vertices.size());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& a : q.arrows)
    reach[q.vertex_index(a.source)][q.vertex_index(a.target)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i][k])
        for (int j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::vector<std::pair<Label, Label>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (reach[i][j]) pairs.emplace_back(q.vertices[i], q.vertices[j]);
  return make_poset(q.vertices, pairs);
}

// -- path enumeration --------------------------------------------------------

std::vector<DirectedPath> enumerate_paths(const Quiver& q, std::optional<int> maxLen) {
  if (!is_acyclic(q)) throw Error(Errc::CyclicQuiver, "cannot enumerate paths of a cyclic quiver");

  // arrows grouped by source, in canonical arrow order
  std::map<Label, std::vector<const Arrow*>> outgoing;
  for (const auto& a : q.arrows) outgoing[a.source].push_back(&a);

  std::vector<DirectedPath> all;
  std::vector<const Arrow*> stack;
  auto dfs = [&](auto&& self, const Label& at, const Label& from) -> void {
    if (!stack.empty()) {
      DirectedPath p;
      for (const Arrow* a : stack) p.arrowIds.push_back(a->id);
      p.source = from;
      p.target = at;
      all.push_back(std::move(p));
    }
    if (maxLen && static_cast<int>(stack.size()) >= *maxLen) return;
    auto it = outgoing.find(at);
    if (it == outgoing.end()) return;
    for (const Arrow* a : it->second) {
      stack.push_back(a);
      self(self, a->target, from);
      stack.pop_back();
    }
  };
  for (const auto& v : q.vertices) dfs(dfs, v, v);

  std::sort(all.begin(), all.end(), [](const DirectedPath& a, const DirectedPath& b) {
    if (a.arrowIds.size() != b.arrowIds.size()) return a.arrowIds.size() < b.arrowIds.size();
    return a.arrowIds < b.arrowIds;
  });
  return all;
}

std::vector<std::pair<DirectedPath, DirectedPath>> parallel_pairs(const Quiver& q) {
  auto paths = enumerate_paths(q);
  std::map<std::pair<Label, Label>, std::vector<size_t>> byEnds;
  for (size_t i = 0; i < paths.size(); ++i)
    byEnds[{paths[i].source, paths[i].target}].push_back(i);

  std::vector<std::pair<size_t, size_t>> idx;
  for (const auto& [ends, group] : byEnds)
    for (size_t i = 0; i < group.size(); ++i)
      for (size_t j = i + 1; j < group.size(); ++j)
        idx.emplace_back(group[i], group[j]);
  std::sort(idx.begin(), idx.end());

  std::vector<std::pair<DirectedPath, DirectedPath>> out;
  out.reserve(idx.size());
  for (auto [i, j] : idx) out.emplace_back(paths[i], paths[j]);
  return out;
}

namespace {

void require_completable(const Quiver& q) {
  if (!is_acyclic(q)) throw Error(Errc::CyclicQuiver, "quiver has a directed cycle");
  if (has_parallel_arrows(q))
    throw Error(Errc::ParallelArrows, "quiver has parallel arrows");
}

} // namespace

Quiver complete_quiver(const Quiver& q) {
  require_completable(q);
  int n = static_cast<int>(q.vertices.size());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& a : q.arrows)
    reach[q.vertex_index(a.source)][q.vertex_index(a.target)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i][k])
        for (int j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;

  std::vector<Arrow> arrows = q.arrows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (reach[i][j] && !q.has_arrow_pair(q.vertices[i], q.vertices[j]))
        arrows.push_back({"c:" + q.vertices[i] + ">" + q.vertices[j],
                          q.vertices[i], q.vertices[j]});
  return make_quiver(q.vertices, std::move(arrows));
}

OrderedQuiver order_quiver(const Quiver& q) {
  require_completable(q);
  std::set<std::pair<Label, Label>> longEnds;
  for (const auto& p : enumerate_paths(q))
    if (p.arrowIds.size() >= 2) longEnds.insert({p.source, p.target});

  std::vector<Arrow> kept;
  for (const auto& a : q.arrows)
    if (!longEnds.count({a.source, a.target})) kept.push_back(a);
  return validate_ordered(make_quiver(q.vertices, std::move(kept)));
}

} // namespace fgtool
