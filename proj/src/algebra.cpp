#include "fgtool/algebra.hpp"

#include <algorithm>
#include <cassert>

namespace fgtool {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols == b.rows);
  IntMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        if (b.at(k, j) != 0) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { r = i; break; }
      if (r < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

FieldSpec make_field(long long characteristic) {
  if (characteristic == 0) return FieldSpec{0};
  if (characteristic < 2)
    throw Error(Errc::NonPrimeCharacteristic,
                "characteristic must be 0 or a prime, got " + std::to_string(characteristic));
  for (long long d = 2; d * d <= characteristic; ++d)
    if (characteristic % d == 0)
      throw Error(Errc::NonPrimeCharacteristic,
                  std::to_string(characteristic) + " is not prime");
  return FieldSpec{characteristic};
}

// -- Smith normal form --------------------------------------------------------

namespace {

struct SnfState {
  IntMatrix m, left, leftInv, right, rightInv;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int j = 0; j < left.cols; ++j) std::swap(left.at(a, j), left.at(b, j));
    for (int i = 0; i < leftInv.rows; ++i) std::swap(leftInv.at(i, a), leftInv.at(i, b));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    for (int i = 0; i < right.rows; ++i) std::swap(right.at(i, a), right.at(i, b));
    for (int j = 0; j < rightInv.cols; ++j) std::swap(rightInv.at(a, j), rightInv.at(b, j));
  }
  // row[a] += q * row[b]
  void add_row(int a, int b, const BigInt& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols; ++j) m.at(a, j) += q * m.at(b, j);
    for (int j = 0; j < left.cols; ++j) left.at(a, j) += q * left.at(b, j);
    for (int i = 0; i < leftInv.rows; ++i) leftInv.at(i, b) -= q * leftInv.at(i, a);
  }
  // col[a] += q * col[b]
  void add_col(int a, int b, const BigInt& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows; ++i) m.at(i, a) += q * m.at(i, b);
    for (int i = 0; i < right.rows; ++i) right.at(i, a) += q * right.at(i, b);
    for (int j = 0; j < rightInv.cols; ++j) rightInv.at(b, j) -= q * rightInv.at(a, j);
  }
  void negate_row(int a) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
    for (int j = 0; j < left.cols; ++j) left.at(a, j) = -left.at(a, j);
    for (int i = 0; i < leftInv.rows; ++i) leftInv.at(i, a) = -leftInv.at(i, a);
  }
};

} // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  SnfState s;
  s.m = input;
  s.left = IntMatrix::identity(input.rows);
  s.leftInv = IntMatrix::identity(input.rows);
  s.right = IntMatrix::identity(input.cols);
  s.rightInv = IntMatrix::identity(input.cols);

  const int n = std::min(input.rows, input.cols);
  for (int t = 0; t < n; ++t) {
    // smallest nonzero pivot in the remaining submatrix
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < s.m.rows; ++i)
      for (int j = t; j < s.m.cols; ++j) {
        const BigInt& v = s.m.at(i, j);
        if (v == 0) continue;
        BigInt av = abs(v);
        if (pi < 0 || av < best) { best = av; pi = i; pj = j; }
      }
    if (pi < 0) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    for (;;) {
      bool restart = false;
      // clear column t
      for (int i = t + 1; i < s.m.rows && !restart; ++i) {
        if (s.m.at(i, t) == 0) continue;
        BigInt q = s.m.at(i, t) / s.m.at(t, t);
        s.add_row(i, t, -q);
        if (s.m.at(i, t) != 0) { // remainder is a smaller pivot
          s.swap_rows(t, i);
          restart = true;
        }
      }
      if (restart) continue;
      // clear row t
      for (int j = t + 1; j < s.m.cols && !restart; ++j) {
        if (s.m.at(t, j) == 0) continue;
        BigInt q = s.m.at(t, j) / s.m.at(t, t);
        s.add_col(j, t, -q);
        if (s.m.at(t, j) != 0) {
          s.swap_cols(t, j);
          restart = true;
        }
      }
      if (restart) continue;
      // pivot must divide the whole remaining submatrix
      bool divides = true;
      for (int i = t + 1; i < s.m.rows && divides; ++i)
        for (int j = t + 1; j < s.m.cols && divides; ++j)
          if (s.m.at(i, j) % s.m.at(t, t) != 0) {
            s.add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (s.m.at(t, t) < 0) s.negate_row(t);
  }

  SmithResult out;
  out.diagonal.resize(n);
  for (int t = 0; t < n; ++t) out.diagonal[t] = s.m.at(t, t);
  out.left = std::move(s.left);
  out.leftInv = std::move(s.leftInv);
  out.right = std::move(s.right);
  out.rightInv = std::move(s.rightInv);
  return out;
}

int SmithResult::rank() const {
  int r = 0;
  for (const auto& d : diagonal)
    if (d != 0) ++r;
  return r;
}

std::vector<BigInt> SmithResult::torsion() const {
  std::vector<BigInt> t;
  for (const auto& d : diagonal)
    if (d > 1) t.push_back(d);
  return t;
}

// -- ranks over a field -------------------------------------------------------

namespace {

int rank_rational(const IntMatrix& m) {
  IntMatrix w = m;
  BigInt prev = 1;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < w.cols && row < w.rows; ++col) {
    int piv = -1;
    for (int i = row; i < w.rows; ++i)
      if (w.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(row, j), w.at(piv, j));
    for (int i = row + 1; i < w.rows; ++i)
      for (int j = col + 1; j < w.cols; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(row, col) - w.at(i, col) * w.at(row, j)) / prev;
    for (int i = row + 1; i < w.rows; ++i) w.at(i, col) = 0;
    prev = w.at(row, col);
    ++row;
    ++rank;
  }
  return rank;
}

long long mod_norm(const BigInt& v, long long p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<long long>(r);
}

int rank_mod_p(const IntMatrix& m, long long p) {
  std::vector<std::vector<long long>> w(m.rows, std::vector<long long>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) w[i][j] = mod_norm(m.at(i, j), p);

  auto inv_mod = [p](long long a) {
    long long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
      long long q = r / newr;
      std::swap(t -= q * newt, newt);
      std::swap(r -= q * newr, newr);
    }
    return t < 0 ? t + p : t;
  };

  int rank = 0, row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (w[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(w[row], w[piv]);
    long long inv = inv_mod(w[row][col]);
    for (int j = col; j < m.cols; ++j)
      w[row][j] = static_cast<long long>(static_cast<__int128>(w[row][j]) * inv % p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || w[i][col] == 0) continue;
      long long f = w[i][col];
      for (int j = col; j < m.cols; ++j) {
        long long v = w[i][j] - static_cast<long long>(static_cast<__int128>(f) * w[row][j] % p);
        w[i][j] = v % p < 0 ? v % p + p : v % p;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

} // namespace

int rank_over_field(const IntMatrix& m, const FieldSpec& k) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return k.characteristic == 0 ? rank_rational(m) : rank_mod_p(m, k.characteristic);
}

// -- chain complexes and homology ---------------------------------------------

ChainComplexData chain_complex(const SimplicialComplex& c) {
  ChainComplexData out;
  for (int d = 0; d <= 2; ++d) out.cells[d] = c.simplexes_of_dim(d);

  auto index_of = [](const std::vector<Simplex>& cells, const Simplex& s) {
    auto it = std::lower_bound(cells.begin(), cells.end(), s);
    assert(it != cells.end() && *it == s);
    return static_cast<int>(it - cells.begin());
  };

  int n0 = static_cast<int>(out.cells[0].size());
  int n1 = static_cast<int>(out.cells[1].size());
  int n2 = static_cast<int>(out.cells[2].size());

  out.d1 = IntMatrix(n0, n1);
  for (int j = 0; j < n1; ++j) {
    const Simplex& e = out.cells[1][j];
    out.d1.at(index_of(out.cells[0], {e[1]}), j) = 1;
    out.d1.at(index_of(out.cells[0], {e[0]}), j) = -1;
  }

  out.d2 = IntMatrix(n1, n2);
  for (int j = 0; j < n2; ++j) {
    const Simplex& t = out.cells[2][j];
    out.d2.at(index_of(out.cells[1], {t[1], t[2]}), j) = 1;
    out.d2.at(index_of(out.cells[1], {t[0], t[2]}), j) = -1;
    out.d2.at(index_of(out.cells[1], {t[0], t[1]}), j) = 1;
  }

  assert([&] {
    IntMatrix z = multiply(out.d1, out.d2);
    return z == IntMatrix(n0, n2);
  }());
  return out;
}

bool operator==(const H1Result& a, const H1Result& b) {
  return a.rank == b.rank && a.torsion == b.torsion;
}

H1Result h1_integral(const SimplicialComplex& c) {
  if (!c.connected) throw Error(Errc::Disconnected, "homology pipeline expects a connected complex");
  ChainComplexData cc = chain_complex(c);
  int n1 = cc.d1.cols;

  SmithResult s1 = smith_normal_form(cc.d1);
  int r1 = s1.rank();

  // coordinates of im d2 in the column basis given by s1.right; the first
  // r1 coordinates vanish because d1 * d2 = 0
  IntMatrix y = multiply(s1.rightInv, cc.d2);
  int kerDim = n1 - r1;
  IntMatrix restricted(kerDim, cc.d2.cols);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < cc.d2.cols; ++j) {
      if (i < r1) {
        if (y.at(i, j) != 0)
          throw Error(Errc::InvalidInput, "boundary maps do not compose to zero");
      } else {
        restricted.at(i - r1, j) = y.at(i, j);
      }
    }

  SmithResult s2 = smith_normal_form(restricted);
  H1Result out;
  out.rank = kerDim - s2.rank();
  out.torsion = s2.torsion();
  return out;
}

int h1_cohomology_dim(const SimplicialComplex& c, const FieldSpec& k) {
  if (!c.connected) throw Error(Errc::Disconnected, "cohomology pipeline expects a connected complex");
  ChainComplexData cc = chain_complex(c);
  int n1 = cc.d1.cols;
  return n1 - rank_over_field(cc.d2, k) - rank_over_field(cc.d1, k);
}

// -- incidence algebras --------------------------------------------------------

IncidenceAlgebra incidence_algebra_build(const Poset& p) {
  IncidenceAlgebra a;
  a.poset = p;
  int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j || p.less[i][j]) {
        a.intervalIndex[{i, j}] = static_cast<int>(a.intervals.size());
        a.intervals.emplace_back(i, j);
      }

  int d = a.dim();
  a.productTable.assign(static_cast<size_t>(d) * d, -1);
  for (int i = 0; i < d; ++i) {
    const auto [x, y] = a.intervals[i];
    for (int j = 0; j < d; ++j) {
      const auto [z, w] = a.intervals[j];
      if (y != z) continue;
      auto it = a.intervalIndex.find({x, w});
      assert(it != a.intervalIndex.end());
      a.productTable[static_cast<size_t>(i) * d + j] = it->second;
    }
  }

  // associativity over all basis triples
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int ij = a.product(i, j);
      for (int k = 0; k < d; ++k) {
        int jk = a.product(j, k);
        int lhs = ij < 0 ? -1 : a.product(ij, k);
        int rhs = jk < 0 ? -1 : a.product(i, jk);
        if (lhs != rhs)
          throw Error(Errc::InvalidInput, "incidence product is not associative");
      }
    }
  return a;
}

// -- sparse exact linear systems ------------------------------------------------

namespace {

struct FpOps {
  using S = long long;
  long long p;
  bool is_zero(S a) const { return a == 0; }
  S norm(long long v) const {
    v %= p;
    return v < 0 ? v + p : v;
  }
  S mul(S a, S b) const { return static_cast<long long>(static_cast<__int128>(a) * b % p); }
  S sub(S a, S b) const { return norm(a - b); }
  S inverse(S a) const {
    long long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
      long long q = r / newr;
      std::swap(t -= q * newt, newt);
      std::swap(r -= q * newr, newr);
    }
    return t < 0 ? t + p : t;
  }
};

struct RatOps {
  using S = BigRat;
  bool is_zero(const S& a) const { return a == 0; }
  S norm(long long v) const { return S(v); }
  S mul(const S& a, const S& b) const { return a * b; }
  S sub(const S& a, const S& b) const { return a - b; }
  S inverse(const S& a) const { return S(1) / a; }
};

template <class Ops>
class SparseEliminator {
public:
  using S = typename Ops::S;
  using Row = std::vector<std::pair<int, S>>; // sorted by column

  explicit SparseEliminator(Ops ops) : ops_(ops) {}

  void add_row(Row row) {
    while (!row.empty()) {
      int lead = row.front().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        S inv = ops_.inverse(row.front().second);
        for (auto& [c, v] : row) v = ops_.mul(v, inv);
        pivots_.emplace(lead, std::move(row));
        ++rank_;
        return;
      }
      row = subtract(row, row.front().second, it->second);
    }
  }

  int rank() const { return rank_; }

private:
  Row subtract(const Row& a, const S& factor, const Row& b) {
    Row out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, ops_.sub(S{}, ops_.mul(factor, b[j].second)));
        ++j;
      } else {
        S v = ops_.sub(a[i].second, ops_.mul(factor, b[j].second));
        if (!ops_.is_zero(v)) out.emplace_back(a[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  Ops ops_;
  std::map<int, Row> pivots_;
  int rank_ = 0;
};

using SparseIntRow = std::vector<std::pair<int, int>>; // small integer coefficients

template <class Ops>
int sparse_rank(const std::vector<SparseIntRow>& rows, Ops ops) {
  std::vector<const SparseIntRow*> order;
  order.reserve(rows.size());
  for (const auto& r : rows) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const SparseIntRow* a, const SparseIntRow* b) { return a->size() < b->size(); });

  SparseEliminator<Ops> elim(ops);
  for (const SparseIntRow* r : order) {
    typename SparseEliminator<Ops>::Row row;
    row.reserve(r->size());
    for (const auto& [c, v] : *r) {
      auto s = ops.norm(v);
      if (!ops.is_zero(s)) row.emplace_back(c, s);
    }
    if (!row.empty()) elim.add_row(std::move(row));
  }
  return elim.rank();
}

int sparse_rank_over(const std::vector<SparseIntRow>& rows, const FieldSpec& k) {
  if (k.characteristic == 0) return sparse_rank(rows, RatOps{});
  return sparse_rank(rows, FpOps{k.characteristic});
}

// collapse repeated (column, coefficient) contributions in place
SparseIntRow collapse(std::vector<std::pair<int, int>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseIntRow row;
  for (const auto& [c, v] : terms) {
    if (!row.empty() && row.back().first == c)
      row.back().second += v;
    else
      row.emplace_back(c, v);
  }
  row.erase(std::remove_if(row.begin(), row.end(), [](const auto& t) { return t.second == 0; }),
            row.end());
  return row;
}

} // namespace

int incidence_center_dimension(const IncidenceAlgebra& a, const FieldSpec& k) {
  int d = a.dim();
  std::vector<SparseIntRow> rows;
  for (int j = 0; j < d; ++j) {
    // commutation with basis element j: z e_j - e_j z = 0
    std::map<int, std::vector<std::pair<int, int>>> byComponent;
    for (int t = 0; t < d; ++t) {
      int tj = a.product(t, j);
      if (tj >= 0) byComponent[tj].emplace_back(t, 1);
      int jt = a.product(j, t);
      if (jt >= 0) byComponent[jt].emplace_back(t, -1);
    }
    for (auto& [comp, terms] : byComponent) {
      SparseIntRow row = collapse(std::move(terms));
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return d - sparse_rank_over(rows, k);
}

int derivation_space_dimension(const IncidenceAlgebra& a, const FieldSpec& k) {
  int d = a.dim();
  auto unknown = [d](int basisFrom, int basisTo) { return basisFrom * d + basisTo; };

  std::vector<SparseIntRow> rows;
  for (int i = 0; i < d; ++i) {
    const auto [x, y] = a.intervals[i];
    for (int j = 0; j < d; ++j) {
      const auto [z, w] = a.intervals[j];
      // Leibniz equation for the pair (i, j), one scalar row per component
      std::map<int, std::vector<std::pair<int, int>>> byComponent;
      int ij = a.product(i, j);
      if (ij >= 0)
        for (int t = 0; t < d; ++t) byComponent[t].emplace_back(unknown(ij, t), 1);
      for (int t = 0; t < d; ++t) {
        const auto [u, v] = a.intervals[t];
        // D(e_i) e_j lands in component (u, w) with coefficient c[i][(u, z)]
        if (v == z) {
          auto comp = a.intervalIndex.find({u, w});
          if (comp != a.intervalIndex.end())
            byComponent[comp->second].emplace_back(unknown(i, t), -1);
        }
        // e_i D(e_j) lands in component (x, v) with coefficient c[j][(y, v)]
        if (u == y) {
          auto comp = a.intervalIndex.find({x, v});
          if (comp != a.intervalIndex.end())
            byComponent[comp->second].emplace_back(unknown(j, t), -1);
        }
      }
      for (auto& [comp, terms] : byComponent) {
        SparseIntRow row = collapse(std::move(terms));
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  return d * d - sparse_rank_over(rows, k);
}

int hh1_dimension(const Poset& p, const FieldSpec& k) {
  if (!is_connected_undirected(hasse_quiver(p).quiver))
    throw Error(Errc::Disconnected, "hh1 expects a connected poset");
  IncidenceAlgebra a = incidence_algebra_build(p);
  int der = derivation_space_dimension(a, k);
  int center = incidence_center_dimension(a, k);
  return der - (a.dim() - center);
}

} // namespace fgtool
