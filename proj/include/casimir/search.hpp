#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "casimir/grading.hpp"
#include "casimir/matrix.hpp"
#include "casimir/weyl.hpp"

namespace casimir {

// Homogeneous linear system A f = 0 over the ansatz coefficients f_sigma, one
// unknown per ansatz monomial, in the listed order.
struct LinearSystem {
  std::vector<Exponents> unknowns;
  Matrix mat;
};

// All PBW monomials of degree 1..m (the full ansatz).
std::vector<Exponents> build_ansatz(int n_gens, int m);

// The weight-W slice of the ansatz.
std::vector<Exponents> build_ansatz(const Grading& g, int m, const WeightVector& w);

// Push the ansatz through the realisation and expand the centrality
// conditions [rho(K), rho(X_i)] = 0: one row per (generator, Weyl basis
// element) pair with a nonzero coefficient, generators in basis order, Weyl
// keys sorted. Exact duplicate rows are kept once.
LinearSystem extract_system(const Realization& r, const std::vector<Exponents>& ansatz);

// Kernel of the system as candidate elements sum_sigma v_sigma sigma, in the
// canonical nullspace order and normalization.
std::vector<UEAElement> candidates_from_nullspace(const LinearSystem& s);

// Cut the candidate span down to its intersection with the centre: solve for
// coefficient vectors a with sum_j a_j K_j central in the enveloping algebra
// (an exact linear condition), and return a normalized basis of that
// subspace. Every returned element is certified by is_casimir.
std::vector<UEAElement> recombine(const LieAlgebra& a, const std::vector<UEAElement>& candidates);

// Greedy functional-independence filter. Candidates are considered by
// ascending degree (stable), each kept iff it raises the generic rank of the
// Jacobian of the kept-so-far symbols, measured at `trials` seeded integer
// points. `known` seeds the kept set without being returned.
std::vector<UEAElement> independence_filter(const std::vector<UEAElement>& known,
                                            const std::vector<UEAElement>& candidates,
                                            int n_gens, int trials, std::uint64_t seed);

enum class SearchMode { graded, naive };

// How graded runs choose weight classes when no explicit weight is given:
// by default every class attained at degree m with at least two monomials;
// all_weights widens that to every nonempty class of the ansatz.
struct SearchOptions {
  SearchMode mode = SearchMode::graded;
  std::optional<WeightVector> weight;
  bool all_weights = false;
  int trials = 5;
  std::uint64_t seed = 0;
};

struct ClassResult {
  std::optional<WeightVector> weight;  // absent in naive mode
  std::vector<Exponents> ansatz;
  std::vector<UEAElement> candidates;
  std::vector<UEAElement> genuine;
  std::vector<UEAElement> independent;
};

struct SearchResult {
  int degree = 0;
  SearchMode mode = SearchMode::graded;
  std::optional<Grading> grading;  // present for graded runs
  std::vector<ClassResult> classes;
  // The surviving functionally independent elements across all classes, in
  // filter order (ascending degree).
  std::vector<UEAElement> independent;
};

// The whole pipeline: ansatz, realisation system, kernel, recombination, and
// one global independence pass. Deterministic for fixed inputs and seed.
SearchResult run_search(const LieAlgebra& a, const Realization& r, int degree,
                        const SearchOptions& opts = {});

}  // namespace casimir
