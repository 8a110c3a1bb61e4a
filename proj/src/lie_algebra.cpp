#include "casimir/lie_algebra.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "casimir/matrix.hpp"

namespace casimir {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis, Table table)
    : name_(std::move(name)), basis_(std::move(basis)) {
  const int n = dim();
  for (auto& [pair, terms] : table) {
    auto [i, j] = pair;
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("bracket index out of range");
    if (i >= j)
      throw std::invalid_argument("bracket table must be keyed by pairs i < j");
    // Normalize: sort by target generator, combine, drop zeros.
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    BracketTerms norm;
    for (auto& [k, c] : terms) {
      if (k < 0 || k >= n)
        throw std::invalid_argument("bracket target index out of range");
      if (!norm.empty() && norm.back().first == k)
        norm.back().second += c;
      else
        norm.emplace_back(k, c);
      if (!norm.empty() && norm.back().second.is_zero()) norm.pop_back();
    }
    terms = std::move(norm);
    if (!terms.empty()) table_.emplace(pair, std::move(terms));
  }
}

std::optional<int> LieAlgebra::index_of(std::string_view name) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[i] == name) return i;
  return std::nullopt;
}

AlgebraElement LieAlgebra::bracket(int i, int j) const {
  AlgebraElement r;
  if (i == j) return r;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return r;
  for (const auto& [k, c] : it->second) r.add(k, flip ? -c : c);
  return r;
}

AlgebraElement LieAlgebra::bracket(const AlgebraElement& v, int j) const {
  AlgebraElement r;
  for (const auto& [i, c] : v.coeffs) {
    AlgebraElement b = bracket(i, j);
    b *= c;
    r += b;
  }
  return r;
}

std::optional<JacobiFailure> jacobi_check(const LieAlgebra& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        AlgebraElement sum = a.bracket(a.bracket(i, j), k);
        sum += a.bracket(a.bracket(j, k), i);
        AlgebraElement ki = a.bracket(k, i);
        sum += a.bracket(ki, j);
        if (!sum.is_zero()) return JacobiFailure{i, j, k, std::move(sum)};
      }
  return std::nullopt;
}

int beltrametti_blasi_count(const LieAlgebra& a, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int n = a.dim();
  IntStream rng(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> y(n);
    for (int k = 0; k < n; ++k) y[k] = Rational(rng.next());
    Matrix m;
    m.cols = n;
    for (int i = 0; i < n; ++i) {
      SparseRow row;
      for (int j = 0; j < n; ++j) {
        Rational v(0);
        for (const auto& [k, c] : a.bracket(i, j).coeffs) v += c * y[k];
        if (!v.is_zero()) row.entries.emplace_back(j, v);
      }
      m.add_row(std::move(row));
    }
    best = std::max(best, rank_of(m));
  }
  return n - best;
}

namespace {

[[noreturn]] void bad_spec(std::string_view spec, const char* why) {
  throw std::invalid_argument("bad algebra spec '" + std::string(spec) + "': " + why);
}

int spec_param(std::string_view spec, std::string_view arg, int min) {
  int n = 0;
  auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc() || p != arg.data() + arg.size())
    bad_spec(spec, "parameter is not an integer");
  if (n < min) bad_spec(spec, "parameter below the family's minimum");
  return n;
}

LieAlgebra make_filiform(int n) {
  std::vector<std::string> basis;
  for (int i = 1; i <= n; ++i) basis.push_back("e" + std::to_string(i));
  LieAlgebra::Table t;
  // [e_k, e_n] = e_{k-1} for 2 <= k <= n-1
  for (int k = 2; k <= n - 1; ++k)
    t[{k - 1, n - 1}] = {{k - 2, Rational(1)}};
  return LieAlgebra("filiform:" + std::to_string(n), std::move(basis), std::move(t));
}

LieAlgebra make_abelian(int n) {
  std::vector<std::string> basis;
  for (int i = 1; i <= n; ++i) basis.push_back("e" + std::to_string(i));
  return LieAlgebra("abelian:" + std::to_string(n), std::move(basis), {});
}

LieAlgebra make_sl2() {
  // [D,H] = 2H, [D,C] = -2C, [C,H] = D on basis order (H, D, C)
  LieAlgebra::Table t;
  t[{0, 1}] = {{0, Rational(-2)}};  // [H,D] = -2H
  t[{0, 2}] = {{1, Rational(-1)}};  // [H,C] = -D
  t[{1, 2}] = {{2, Rational(-2)}};  // [D,C] = -2C
  return LieAlgebra("sl2", {"H", "D", "C"}, std::move(t));
}

LieAlgebra make_heisenberg(int d) {
  std::vector<std::string> basis{"M"};
  for (int i = 1; i <= d; ++i) basis.push_back("P0_" + std::to_string(i));
  for (int i = 1; i <= d; ++i) basis.push_back("P1_" + std::to_string(i));
  LieAlgebra::Table t;
  for (int i = 1; i <= d; ++i)
    t[{i, d + i}] = {{0, Rational(-1)}};  // [P0_i, P1_i] = -M
  return LieAlgebra("heisenberg:" + std::to_string(d), std::move(basis), std::move(t));
}

// Index layout for schrodinger:d.
struct SchIndex {
  int d;
  int M() const { return 0; }
  int P0(int i) const { return i; }          // 1-based i
  int P1(int i) const { return d + i; }      // 1-based i
  int H() const { return 2 * d + 1; }
  int D() const { return 2 * d + 2; }
  int C() const { return 2 * d + 3; }
  int J(int i, int j) const {  // 1 <= i < j <= d
    int off = 0;
    for (int a = 1; a < i; ++a) off += d - a;
    return 2 * d + 4 + off + (j - i - 1);
  }
};

LieAlgebra make_schrodinger(int d) {
  SchIndex ix{d};
  std::vector<std::string> basis{"M"};
  for (int i = 1; i <= d; ++i) basis.push_back("P0_" + std::to_string(i));
  for (int i = 1; i <= d; ++i) basis.push_back("P1_" + std::to_string(i));
  basis.push_back("H");
  basis.push_back("D");
  basis.push_back("C");
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      basis.push_back("J" + std::to_string(i) + "_" + std::to_string(j));

  // Helper accumulating [X_a, X_b] = elem with the i<j storage orientation.
  std::map<std::pair<int, int>, AlgebraElement> acc;
  auto set = [&](int a, int b, AlgebraElement e) {
    if (a == b) throw std::logic_error("bracket of a generator with itself");
    if (a > b) {
      std::swap(a, b);
      e *= Rational(-1);
    }
    acc[{a, b}] += e;
  };
  auto one = [](int k, Rational c = Rational(1)) {
    AlgebraElement e;
    e.add(k, c);
    return e;
  };

  set(ix.D(), ix.H(), one(ix.H(), Rational(2)));    // [D,H] = 2H
  set(ix.D(), ix.C(), one(ix.C(), Rational(-2)));   // [D,C] = -2C
  set(ix.C(), ix.H(), one(ix.D()));                 // [C,H] = D
  for (int i = 1; i <= d; ++i) {
    set(ix.H(), ix.P1(i), one(ix.P0(i), Rational(-1)));  // [H,P1_i] = -P0_i
    set(ix.D(), ix.P0(i), one(ix.P0(i)));                // [D,P0_i] = P0_i
    set(ix.D(), ix.P1(i), one(ix.P1(i), Rational(-1)));  // [D,P1_i] = -P1_i
    set(ix.C(), ix.P0(i), one(ix.P1(i)));                // [C,P0_i] = P1_i
    set(ix.P0(i), ix.P1(i), one(ix.M(), Rational(-1)));  // [P0_i,P1_i] = -M
  }
  // [J_ij, P_nk] = delta_ik P_nj - delta_jk P_ni
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int n = 0; n <= 1; ++n) {
        auto P = [&](int k) { return n == 0 ? ix.P0(k) : ix.P1(k); };
        set(ix.J(i, j), P(i), one(P(j)));
        set(ix.J(i, j), P(j), one(P(i), Rational(-1)));
      }
  // [J_ij, J_kl] = d_ik J_jl + d_jl J_ik - d_il J_jk - d_jk J_il
  auto Jsigned = [&](int a, int b) {
    AlgebraElement e;
    if (a == b) return e;
    if (a < b)
      e.add(ix.J(a, b), Rational(1));
    else
      e.add(ix.J(b, a), Rational(-1));
    return e;
  };
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = k + 1; l <= d; ++l) {
          if (ix.J(i, j) >= ix.J(k, l)) continue;
          AlgebraElement e;
          if (i == k) e += Jsigned(j, l);
          if (j == l) e += Jsigned(i, k);
          if (i == l) {
            AlgebraElement t = Jsigned(j, k);
            t *= Rational(-1);
            e += t;
          }
          if (j == k) {
            AlgebraElement t = Jsigned(i, l);
            t *= Rational(-1);
            e += t;
          }
          if (!e.is_zero()) set(ix.J(i, j), ix.J(k, l), std::move(e));
        }

  LieAlgebra::Table t;
  for (auto& [pair, e] : acc) {
    if (e.is_zero()) continue;
    BracketTerms terms(e.coeffs.begin(), e.coeffs.end());
    t.emplace(pair, std::move(terms));
  }
  return LieAlgebra("schrodinger:" + std::to_string(d), std::move(basis), std::move(t));
}

}  // namespace

LieAlgebra builtin_algebra(std::string_view spec) {
  std::string_view family = spec, arg;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    family = spec.substr(0, colon);
    arg = spec.substr(colon + 1);
  }
  if (family == "sl2") {
    if (!arg.empty()) bad_spec(spec, "sl2 takes no parameter");
    return make_sl2();
  }
  if (family == "filiform") return make_filiform(spec_param(spec, arg, 3));
  if (family == "abelian") return make_abelian(spec_param(spec, arg, 1));
  if (family == "heisenberg") return make_heisenberg(spec_param(spec, arg, 1));
  if (family == "schrodinger") return make_schrodinger(spec_param(spec, arg, 1));
  bad_spec(spec, "unknown family");
}

}  // namespace casimir
