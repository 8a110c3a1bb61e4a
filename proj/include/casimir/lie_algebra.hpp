#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

// Sparse element of the algebra itself: a linear combination of generators,
// keyed by generator index.
struct AlgebraElement {
  std::map<int, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }

  void add(int k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [k, c] : o.coeffs) add(k, c);
    return *this;
  }

  AlgebraElement& operator*=(const Rational& s) {
    if (s.is_zero()) {
      coeffs.clear();
      return *this;
    }
    for (auto& [k, c] : coeffs) c *= s;
    return *this;
  }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// Structure constants of one bracket [X_i, X_j]: terms (k, c) sorted by k,
// combined, no zeros.
using BracketTerms = std::vector<std::pair<int, Rational>>;

// A finite-dimensional Lie algebra over Q, presented by structure constants
// on an ordered basis. Only pairs i < j are stored; [X_j, X_i] follows by
// antisymmetry and [X_i, X_i] = 0. The Jacobi identity is not enforced at
// construction (jacobi_check reports violations), so deliberately corrupt
// tables can be built and diagnosed.
class LieAlgebra {
public:
  using Table = std::map<std::pair<int, int>, BracketTerms>;

  LieAlgebra() = default;  // the zero-dimensional algebra
  LieAlgebra(std::string name, std::vector<std::string> basis, Table table);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& basis_name(int i) const { return basis_.at(i); }

  // Index of a generator by name, or nullopt.
  std::optional<int> index_of(std::string_view name) const;

  // [X_i, X_j] for any i, j (antisymmetry applied as needed).
  AlgebraElement bracket(int i, int j) const;

  // [v, X_j] extended linearly in the first slot.
  AlgebraElement bracket(const AlgebraElement& v, int j) const;

  const Table& table() const { return table_; }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
  std::string name_;
  std::vector<std::string> basis_;
  Table table_;
};

// First basis triple i < j < k violating Jacobi, with the nonzero cyclic sum
// [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j].
struct JacobiFailure {
  int i, j, k;
  AlgebraElement defect;
};

std::optional<JacobiFailure> jacobi_check(const LieAlgebra& a);

// Number of functionally independent invariants by the Beltrametti-Blasi
// formula: dim - generic rank of the matrix M(y)_ij = sum_k C^k_ij y_k. The
// generic rank is taken as the max over `trials` integer points y drawn
// deterministically from `seed`, each coordinate in [-1000, 1000].
int beltrametti_blasi_count(const LieAlgebra& a, int trials = 5,
                            std::uint64_t seed = 0);

// Built-in families, selected by spec string:
//   filiform:n    (n >= 3)   model filiform nilpotent algebra L_n
//   heisenberg:d  (d >= 1)   2d+1 dimensional Heisenberg algebra
//   schrodinger:d (d >= 1)   centrally extended Schrodinger algebra sch(d)
//   sl2                      {H, D, C} with [D,H]=2H, [D,C]=-2C, [C,H]=D
//   abelian:n     (n >= 1)
LieAlgebra builtin_algebra(std::string_view spec);

// Deterministic integer stream used wherever the spec calls for seeded random
// integer points in [-1000, 1000]. Kept implementation-defined-free so results
// are reproducible across standard libraries.
class IntStream {
public:
  explicit IntStream(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

  long next() {
    // splitmix64 step
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
    return static_cast<long>(z % 2001u) - 1000;
  }

private:
  std::uint64_t state_;
};

}  // namespace casimir
