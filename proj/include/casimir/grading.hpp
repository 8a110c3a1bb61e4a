#pragma once

#include <map>
#include <vector>

#include "casimir/enveloping.hpp"
#include "casimir/lie_algebra.hpp"
#include "casimir/matrix.hpp"

namespace casimir {

// Integer weight tuple in Z^r.
using WeightVector = std::vector<mpz_class>;

// A maximal abelian grading of a Lie algebra: each generator X_i carries a
// weight w_i in Z^r such that w_i + w_j = w_k whenever C^k_ij != 0. The rows
// of basis_matrix are a canonical (Hermite normal form) basis of the lattice
// of all admissible weight assignments; weights[i] is column i of it.
struct Grading {
  int rank = 0;
  std::vector<WeightVector> weights;
  ZMatrix basis_matrix;
};

// Solve the weight constraints exactly. rank = dim for abelian algebras; a
// rank of 0 means only the trivial grading exists.
Grading compute_grading(const LieAlgebra& a);

// Sum of generator weights with multiplicity.
WeightVector monomial_weight(const Grading& g, const Exponents& mono);

// All PBW monomials of total degree 1..max_degree, grouped by weight. The
// empty monomial is excluded. Within a class, monomials are listed by
// ascending degree, then lexicographically.
std::map<WeightVector, std::vector<Exponents>> weight_classes(const Grading& g,
                                                              int max_degree);

// Split an element into its weight-homogeneous parts.
std::map<WeightVector, UEAElement> weight_split(const Grading& g, const UEAElement& k);

}  // namespace casimir
