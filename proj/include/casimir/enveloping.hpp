#pragma once

#include <map>
#include <span>
#include <vector>

#include "casimir/lie_algebra.hpp"
#include "casimir/rational.hpp"

namespace casimir {

// Exponent vector of an ordered (PBW) monomial X_1^w1 ... X_N^wN, one slot
// per generator. The all-zero vector is the identity. The same representation
// doubles as a commutative monomial for polynomial symbols.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Element of the universal enveloping algebra in the PBW basis: a finite
// Q-linear combination of ordered monomials.
class UEAElement {
public:
  UEAElement() = default;

  static UEAElement monomial(Exponents e, Rational c = Rational(1));
  static UEAElement generator(int n_gens, int i);
  static UEAElement one(int n_gens);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max total degree, -1 for zero

  void add_term(const Exponents& e, const Rational& c);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const Rational& s);

  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(UEAElement a, const Rational& s) { return a *= s; }
  friend UEAElement operator*(const Rational& s, UEAElement a) { return a *= s; }

  friend bool operator==(const UEAElement&, const UEAElement&) = default;

private:
  std::map<Exponents, Rational> terms_;
};

// Degree bound guarding the combinatorial blowup of repeated reordering.
// normal_order and multiply throw std::runtime_error beyond it.
int uea_degree_cap();
void set_uea_degree_cap(int cap);

// Normal order a word X_{w[0]} X_{w[1]} ... (indices into the basis) into the
// PBW basis, repeatedly rewriting descents via X_b X_a = X_a X_b + [X_b, X_a]
// for b > a.
UEAElement normal_order(const LieAlgebra& a, std::span<const int> word);

// Product in the enveloping algebra, result in the PBW basis.
UEAElement multiply(const LieAlgebra& a, const UEAElement& u, const UEAElement& v);

// [k, X_i] = k X_i - X_i k.
UEAElement commutator_with_generator(const LieAlgebra& a, const UEAElement& k, int i);

// True when [k, X_i] = 0 for every generator, i.e. k is central.
bool is_casimir(const LieAlgebra& a, const UEAElement& k);

// Commutative polynomials, used for the symbols of enveloping-algebra
// elements and for functional-independence Jacobians.
using Polynomial = std::map<Exponents, Rational>;

// Forget the ordering: each PBW monomial becomes the corresponding
// commutative monomial with the same coefficient.
Polynomial symbol(const UEAElement& k);

Polynomial poly_partial(const Polynomial& p, int var);
Rational poly_eval(const Polynomial& p, std::span<const Rational> point);

}  // namespace casimir
