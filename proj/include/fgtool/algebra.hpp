#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fgtool/combinatorics.hpp"

namespace fgtool {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense integer matrix with arbitrary-precision entries.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> data; // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

  BigInt& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  static IntMatrix identity(int n);
};

bool operator==(const IntMatrix& a, const IntMatrix& b);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
BigInt determinant(const IntMatrix& m); // square input, Bareiss elimination

/// Exact coefficient field: rationals for characteristic 0, the prime field
/// F_p otherwise.
struct FieldSpec {
  long long characteristic = 0;
};

FieldSpec make_field(long long characteristic); // throws NonPrimeCharacteristic

/// left * m * right == diag(diagonal), diagonal entries non-negative with
/// d1 | d2 | ..., left/right unimodular. The inverses are tracked during
/// the reduction; reconstruction tests rely on them.
struct SmithResult {
  std::vector<BigInt> diagonal; // length min(rows, cols)
  IntMatrix left, leftInv;      // rows x rows
  IntMatrix right, rightInv;    // cols x cols

  int rank() const;
  std::vector<BigInt> torsion() const; // entries > 1
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Matrix rank over the given field (Bareiss over Q, Gaussian mod p).
int rank_over_field(const IntMatrix& m, const FieldSpec& k);

/// Simplexes of dimension 0..2 in canonical order plus the two boundary
/// maps that matter for H1; signs come from the lexicographic vertex order.
struct ChainComplexData {
  std::array<std::vector<Simplex>, 3> cells; // dims 0, 1, 2
  IntMatrix d1; // edges -> vertices
  IntMatrix d2; // triangles -> edges
};

ChainComplexData chain_complex(const SimplicialComplex& c);

struct H1Result {
  int rank = 0;
  std::vector<BigInt> torsion;
};

bool operator==(const H1Result& a, const H1Result& b);

/// Integral first homology of a connected complex.
H1Result h1_integral(const SimplicialComplex& c);

/// dim_k H^1(C; k) from cochain ranks over k.
int h1_cohomology_dim(const SimplicialComplex& c, const FieldSpec& k);

/// Incidence algebra of a poset: basis e_{xy} for the intervals x <= y,
/// e_{xy} e_{zw} = e_{xw} when y == z and 0 otherwise.
struct IncidenceAlgebra {
  Poset poset;
  std::vector<std::pair<int, int>> intervals; // element-index pairs, lex order
  std::map<std::pair<int, int>, int> intervalIndex;
  std::vector<int> productTable; // dim x dim, -1 for zero products

  int dim() const { return static_cast<int>(intervals.size()); }
  /// Index of the product basis element, or -1 when the product is zero.
  int product(int i, int j) const {
    return productTable[static_cast<size_t>(i) * intervals.size() + j];
  }
};

IncidenceAlgebra incidence_algebra_build(const Poset& p);

/// Dimension over k of the center of the incidence algebra.
int incidence_center_dimension(const IncidenceAlgebra& a, const FieldSpec& k);

/// Dimension over k of the space of derivations D : A -> A, computed from
/// the Leibniz equations over all pairs of basis elements.
int derivation_space_dimension(const IncidenceAlgebra& a, const FieldSpec& k);

/// dim Der(A) - dim Inn(A), with dim Inn(A) = dim A - dim Z(A).
int hh1_dimension(const Poset& p, const FieldSpec& k);

} // namespace fgtool
