#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casimir/enveloping.hpp"
#include "casimir/lie_algebra.hpp"
#include "casimir/rational.hpp"

namespace casimir {

// One basis element x^t d^k of the Weyl algebra: coeff_exp runs over the
// variables followed by the parameters, deriv over the variables only.
// Parameters are commuting symbols that are never differentiated.
struct WeylKey {
  Exponents coeff_exp;
  Exponents deriv;

  friend auto operator<=>(const WeylKey&, const WeylKey&) = default;
};

// Polynomial-coefficient differential operator in normal form: all
// multiplication operators to the left of all derivatives, stored as a sparse
// combination of x^t d^k basis elements.
class DifferentialOperator {
public:
  DifferentialOperator() = default;
  DifferentialOperator(int n_vars, int n_params) : n_vars_(n_vars), n_params_(n_params) {}

  static DifferentialOperator constant(int n_vars, int n_params, const Rational& c);
  // x_v as a multiplication operator (v indexes variables then parameters)
  static DifferentialOperator coordinate(int n_vars, int n_params, int v);
  static DifferentialOperator derivative(int n_vars, int n_params, int v);

  int n_vars() const { return n_vars_; }
  int n_params() const { return n_params_; }
  const std::map<WeylKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Highest total derivative order across terms (0 for zero operators).
  int order() const;

  void add_term(const WeylKey& k, const Rational& c);

  DifferentialOperator& operator+=(const DifferentialOperator& o);
  DifferentialOperator& operator-=(const DifferentialOperator& o);
  DifferentialOperator& operator*=(const Rational& s);

  friend DifferentialOperator operator+(DifferentialOperator a, const DifferentialOperator& b) { return a += b; }
  friend DifferentialOperator operator-(DifferentialOperator a, const DifferentialOperator& b) { return a -= b; }
  friend DifferentialOperator operator*(DifferentialOperator a, const Rational& s) { return a *= s; }

  friend bool operator==(const DifferentialOperator&, const DifferentialOperator&) = default;

  // Rendering for diagnostics and tests: "-2*t*d/dt - 1/2".
  std::string str(const std::vector<std::string>& var_names,
                  const std::vector<std::string>& param_names) const;

private:
  int n_vars_ = 0;
  int n_params_ = 0;
  std::map<WeylKey, Rational> terms_;
};

// Composition a then b applied second, i.e. the product a.b of operators
// (a.b)f = a(b(f)), normal ordered via the Leibniz rule.
DifferentialOperator weyl_multiply(const DifferentialOperator& a,
                                   const DifferentialOperator& b);

// A realisation of a Lie algebra by first-order differential operators. Pure
// value: owns its algebra, variable and parameter names, and one image per
// generator.
struct Realization {
  LieAlgebra algebra;
  std::string name;
  std::vector<std::string> var_names;
  std::vector<std::string> param_names;
  std::vector<DifferentialOperator> images;
};

// First pair (i, j) with rho([X_i,X_j]) != [rho(X_i), rho(X_j)], plus the
// difference, if the bracket relations fail anywhere.
struct RealizationDefect {
  int i, j;
  DifferentialOperator difference;
};

std::optional<RealizationDefect> check_realization(const Realization& r);

// The classical realisation on the dual: X_i -> sum_{j,k} C^k_ij x_k d/dx_j,
// in variables x_1..x_N, no parameters. Always a realisation for a Jacobi
// algebra.
Realization coadjoint_realization(const LieAlgebra& a);

// Hand-built realisations matching the built-in algebras (same spec strings).
Realization builtin_realization(std::string_view spec);

// Image of an enveloping-algebra element: each PBW monomial goes to the
// composition of the generator images, left to right.
DifferentialOperator apply(const Realization& r, const UEAElement& k);

}  // namespace casimir
