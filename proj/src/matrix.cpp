#include "casimir/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace casimir {

namespace {

// Divide a vector by the gcd of its entries (no-op for the zero vector).
void make_primitive(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& x : v) x /= g;
}

// Incremental echelon form with primitive integer rows. Each accepted row is
// reduced against the rows already kept, so at most `cols` rows are ever
// stored regardless of how many rows are fed in.
class Echelon {
public:
  explicit Echelon(int cols) : cols_(cols) {}

  void insert(const SparseRow& row) {
    std::vector<mpz_class> v(cols_, 0);
    mpz_class den = 1;
    for (const auto& [c, q] : row.entries) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), q.den().get_mpz_t());
      den = l;
    }
    for (const auto& [c, q] : row.entries) v[c] = q.num() * (den / q.den());
    reduce(v);
    int p = pivot_col(v);
    if (p < 0) return;
    make_primitive(v);
    if (sgn(v[p]) < 0)
      for (auto& x : v) x = -x;
    rows_.emplace(p, std::move(v));
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  // Kernel basis from the fully reduced echelon form; see nullspace_of.
  std::vector<std::vector<Rational>> kernel() {
    back_reduce();
    std::vector<int> pivot_of_col(cols_, -1);
    int r = 0;
    for (const auto& [p, v] : rows_) pivot_of_col[p] = r++;
    std::vector<const std::vector<mpz_class>*> rowv;
    std::vector<int> pivcol;
    for (const auto& [p, v] : rows_) {
      rowv.push_back(&v);
      pivcol.push_back(p);
    }

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols_; ++f) {
      if (pivot_of_col[f] >= 0) continue;
      // v[f] = 1, v[p_k] = -row_k[f]/row_k[p_k], zero elsewhere.
      std::vector<Rational> v(cols_, Rational(0));
      v[f] = Rational(1);
      for (size_t k = 0; k < rowv.size(); ++k) {
        const mpz_class& a = (*rowv[k])[f];
        if (a == 0) continue;
        v[pivcol[k]] = Rational(-a, (*rowv[k])[pivcol[k]]);
      }
      // Scale to a primitive integer vector, first nonzero entry positive.
      mpz_class den = 1;
      for (const auto& q : v) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), q.den().get_mpz_t());
        den = l;
      }
      std::vector<mpz_class> w(cols_);
      for (int c = 0; c < cols_; ++c) w[c] = v[c].num() * (den / v[c].den());
      make_primitive(w);
      int first = 0;
      while (first < cols_ && w[first] == 0) ++first;
      if (first < cols_ && sgn(w[first]) < 0)
        for (auto& x : w) x = -x;
      std::vector<Rational> out(cols_);
      for (int c = 0; c < cols_; ++c) out[c] = Rational(w[c]);
      basis.push_back(std::move(out));
    }
    return basis;
  }

private:
  int pivot_col(const std::vector<mpz_class>& v) const {
    for (int c = 0; c < cols_; ++c)
      if (v[c] != 0) return c;
    return -1;
  }

  // Eliminate v's entries at existing pivot columns (fraction-free cross
  // multiply, then strip content so entries stay small).
  void reduce(std::vector<mpz_class>& v) {
    for (const auto& [p, r] : rows_) {
      if (v[p] == 0) continue;
      const mpz_class a = r[p], b = v[p];
      for (int c = 0; c < cols_; ++c) v[c] = v[c] * a - r[c] * b;
      make_primitive(v);
    }
  }

  // Clear entries above each pivot, giving (up to row scaling) the reduced
  // echelon form.
  void back_reduce() {
    for (auto it = rows_.begin(); it != rows_.end(); ++it) {
      auto& [p, r] = *it;
      for (auto jt = std::next(it); jt != rows_.end(); ++jt) {
        const auto& [q, s] = *jt;
        if (r[q] == 0) continue;
        const mpz_class a = s[q], b = r[q];
        for (int c = 0; c < cols_; ++c) r[c] = r[c] * a - s[c] * b;
        make_primitive(r);
      }
      if (sgn(r[p]) < 0)
        for (auto& x : r) x = -x;
    }
  }

  int cols_;
  std::map<int, std::vector<mpz_class>> rows_;  // pivot column -> row
};

}  // namespace

int rank_of(const Matrix& m) {
  Echelon e(m.cols);
  for (const auto& r : m.rows) e.insert(r);
  return e.rank();
}

std::vector<std::vector<Rational>> nullspace_of(const Matrix& m) {
  Echelon e(m.cols);
  for (const auto& r : m.rows) e.insert(r);
  return e.kernel();
}

namespace {

// Floor division quotient for mpz.
mpz_class fdiv_q(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

int abs_cmp(const mpz_class& a, const mpz_class& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

ZMatrix hnf_rows(ZMatrix a) {
  if (a.empty()) return a;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Gcd out column c below row r until a single nonzero entry remains.
    for (;;) {
      int best = -1;
      for (int i = r; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        if (best < 0 || abs_cmp(a[i][c], a[best][c]) < 0) best = i;
      }
      if (best < 0) break;
      std::swap(a[r], a[best]);
      bool more = false;
      for (int i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        mpz_class q = fdiv_q(a[i][c], a[r][c]);
        for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) more = true;
      }
      if (!more) break;
    }
    if (a[r][c] == 0) continue;
    if (sgn(a[r][c]) < 0)
      for (int j = 0; j < cols; ++j) a[r][j] = -a[r][j];
    for (int i = 0; i < r; ++i) {
      mpz_class q = fdiv_q(a[i][c], a[r][c]);
      if (q == 0) continue;
      for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

ZMatrix integer_kernel(const ZMatrix& a, int ncols) {
  const int m = static_cast<int>(a.size());
  // Work on [a^T | I]; rows whose a^T part vanishes after row reduction carry
  // the kernel in the identity part.
  ZMatrix w(ncols, std::vector<mpz_class>(m + ncols, 0));
  for (int i = 0; i < ncols; ++i) {
    for (int j = 0; j < m; ++j) w[i][j] = a[j][i];
    w[i][m + i] = 1;
  }

  int r = 0;
  for (int c = 0; c < m && r < ncols; ++c) {
    for (;;) {
      int best = -1;
      for (int i = r; i < ncols; ++i) {
        if (w[i][c] == 0) continue;
        if (best < 0 || abs_cmp(w[i][c], w[best][c]) < 0) best = i;
      }
      if (best < 0) break;
      std::swap(w[r], w[best]);
      bool more = false;
      for (int i = r + 1; i < ncols; ++i) {
        if (w[i][c] == 0) continue;
        mpz_class q = fdiv_q(w[i][c], w[r][c]);
        for (int j = 0; j < m + ncols; ++j) w[i][j] -= q * w[r][j];
        if (w[i][c] != 0) more = true;
      }
      if (!more) break;
    }
    if (w[r][c] != 0) ++r;
  }

  ZMatrix kernel;
  for (int i = r; i < ncols; ++i)
    kernel.emplace_back(w[i].begin() + m, w[i].end());
  return hnf_rows(std::move(kernel));
}

}  // namespace casimir
