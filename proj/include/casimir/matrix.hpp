#pragma once

#include <utility>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

// Sparse row of an exact matrix: (column, value) pairs, strictly increasing
// columns, no zero values.
struct SparseRow {
  std::vector<std::pair<int, Rational>> entries;
};

// Exact matrix as a list of sparse rows over a fixed column count. Rows may
// repeat; row order is meaningful only in that the elimination below is
// deterministic for a fixed order.
struct Matrix {
  int cols = 0;
  std::vector<SparseRow> rows;

  void add_row(SparseRow r) { rows.push_back(std::move(r)); }
};

// Rank over the rationals, computed by fraction-free elimination.
int rank_of(const Matrix& m);

// Basis of the right kernel {v : M v = 0}. The basis is canonical: one vector
// per free column of the reduced echelon form, scaled to a primitive integer
// vector whose first nonzero entry is positive, listed by ascending free
// column. Independent of row order and of duplicate rows.
std::vector<std::vector<Rational>> nullspace_of(const Matrix& m);

// Dense integer matrices, used for grading computations.
using ZMatrix = std::vector<std::vector<mpz_class>>;

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot), zero rows dropped. Row span is preserved.
ZMatrix hnf_rows(ZMatrix a);

// Basis of the integer kernel {w in Z^ncols : a w = 0}, returned in Hermite
// normal form. The lattice is saturated (it is the kernel of a map to Z^m),
// so the HNF rows are primitive.
ZMatrix integer_kernel(const ZMatrix& a, int ncols);

}  // namespace casimir
