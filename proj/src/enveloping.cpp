#include "casimir/enveloping.hpp"

#include <algorithm>
#include <stdexcept>

namespace casimir {

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

UEAElement UEAElement::monomial(Exponents e, Rational c) {
  UEAElement u;
  u.add_term(e, c);
  return u;
}

UEAElement UEAElement::generator(int n_gens, int i) {
  Exponents e(n_gens, 0);
  e.at(i) = 1;
  return monomial(std::move(e));
}

UEAElement UEAElement::one(int n_gens) {
  return monomial(Exponents(n_gens, 0));
}

int UEAElement::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void UEAElement::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

namespace {
int g_degree_cap = 12;
}

int uea_degree_cap() { return g_degree_cap; }

void set_uea_degree_cap(int cap) {
  if (cap < 1) throw std::invalid_argument("degree cap must be >= 1");
  g_degree_cap = cap;
}

UEAElement normal_order(const LieAlgebra& a, std::span<const int> word) {
  const int n = a.dim();
  if (static_cast<int>(word.size()) > g_degree_cap)
    throw std::runtime_error("degree cap exceeded in normal_order");
  for (int i : word)
    if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");

  UEAElement result;
  // Worklist of scaled words still to be straightened. Each rewrite either
  // shortens the word or moves it closer to sorted, so this terminates.
  std::vector<std::pair<Rational, std::vector<int>>> work;
  work.emplace_back(Rational(1), std::vector<int>(word.begin(), word.end()));
  while (!work.empty()) {
    auto [coef, w] = std::move(work.back());
    work.pop_back();
    size_t d = 0;
    while (d + 1 < w.size() && w[d] <= w[d + 1]) ++d;
    if (d + 1 >= w.size()) {
      Exponents e(n, 0);
      for (int i : w) ++e[i];
      result.add_term(e, coef);
      continue;
    }
    // w[d] > w[d+1]: swap and add the bracket correction.
    std::vector<int> swapped = w;
    std::swap(swapped[d], swapped[d + 1]);
    AlgebraElement br = a.bracket(w[d], w[d + 1]);
    work.emplace_back(coef, std::move(swapped));
    for (const auto& [k, c] : br.coeffs) {
      std::vector<int> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + d);
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + d + 2, w.end());
      work.emplace_back(coef * c, std::move(shorter));
    }
  }
  return result;
}

UEAElement multiply(const LieAlgebra& a, const UEAElement& u, const UEAElement& v) {
  if (!u.is_zero() && !v.is_zero() && u.degree() + v.degree() > g_degree_cap)
    throw std::runtime_error("degree cap exceeded in multiply");
  UEAElement result;
  std::vector<int> word;
  for (const auto& [eu, cu] : u.terms())
    for (const auto& [ev, cv] : v.terms()) {
      word.clear();
      for (size_t i = 0; i < eu.size(); ++i)
        word.insert(word.end(), eu[i], static_cast<int>(i));
      for (size_t i = 0; i < ev.size(); ++i)
        word.insert(word.end(), ev[i], static_cast<int>(i));
      UEAElement t = normal_order(a, word);
      t *= cu * cv;
      result += t;
    }
  return result;
}

UEAElement commutator_with_generator(const LieAlgebra& a, const UEAElement& k, int i) {
  UEAElement xi = UEAElement::generator(a.dim(), i);
  return multiply(a, k, xi) - multiply(a, xi, k);
}

bool is_casimir(const LieAlgebra& a, const UEAElement& k) {
  for (int i = 0; i < a.dim(); ++i)
    if (!commutator_with_generator(a, k, i).is_zero()) return false;
  return true;
}

Polynomial symbol(const UEAElement& k) {
  return k.terms();
}

Polynomial poly_partial(const Polynomial& p, int var) {
  Polynomial d;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    Exponents de = e;
    --de[var];
    d[de] = c * Rational(e[var]);
  }
  return d;
}

Rational poly_eval(const Polynomial& p, std::span<const Rational> point) {
  Rational v(0);
  for (const auto& [e, c] : p) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) t *= point[i];
    v += t;
  }
  return v;
}

}  // namespace casimir
