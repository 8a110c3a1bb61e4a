#include "casimir/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace casimir {

DifferentialOperator DifferentialOperator::constant(int n_vars, int n_params,
                                                    const Rational& c) {
  DifferentialOperator d(n_vars, n_params);
  d.add_term(WeylKey{Exponents(n_vars + n_params, 0), Exponents(n_vars, 0)}, c);
  return d;
}

DifferentialOperator DifferentialOperator::coordinate(int n_vars, int n_params, int v) {
  DifferentialOperator d(n_vars, n_params);
  WeylKey k{Exponents(n_vars + n_params, 0), Exponents(n_vars, 0)};
  k.coeff_exp.at(v) = 1;
  d.add_term(k, Rational(1));
  return d;
}

DifferentialOperator DifferentialOperator::derivative(int n_vars, int n_params, int v) {
  DifferentialOperator d(n_vars, n_params);
  WeylKey k{Exponents(n_vars + n_params, 0), Exponents(n_vars, 0)};
  k.deriv.at(v) = 1;
  d.add_term(k, Rational(1));
  return d;
}

int DifferentialOperator::order() const {
  int o = 0;
  for (const auto& [k, c] : terms_) o = std::max(o, total_degree(k.deriv));
  return o;
}

void DifferentialOperator::add_term(const WeylKey& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DifferentialOperator& DifferentialOperator::operator+=(const DifferentialOperator& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

DifferentialOperator& DifferentialOperator::operator-=(const DifferentialOperator& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

DifferentialOperator& DifferentialOperator::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::string DifferentialOperator::str(const std::vector<std::string>& var_names,
                                      const std::vector<std::string>& param_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string body;
    auto add_factor = [&body](const std::string& f) {
      if (!body.empty()) body += "*";
      body += f;
    };
    for (size_t v = 0; v < k.coeff_exp.size(); ++v) {
      if (k.coeff_exp[v] == 0) continue;
      std::string nm = v < var_names.size() ? var_names[v]
                                            : param_names[v - var_names.size()];
      if (k.coeff_exp[v] == 1)
        add_factor(nm);
      else
        add_factor(nm + "^" + std::to_string(k.coeff_exp[v]));
    }
    for (size_t v = 0; v < k.deriv.size(); ++v) {
      if (k.deriv[v] == 0) continue;
      std::string f = "d/d" + var_names[v];
      if (k.deriv[v] == 1)
        add_factor(f);
      else
        add_factor(f + "^" + std::to_string(k.deriv[v]));
    }
    Rational ac = abs(c);
    std::string coef;
    if (body.empty())
      coef = ac.str();
    else if (!ac.is_one())
      coef = ac.str() + "*";
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    out += coef + body;
  }
  return out;
}

namespace {

// Falling factorial t (t-1) ... (t-s+1).
mpz_class falling(int t, int s) {
  mpz_class r = 1;
  for (int i = 0; i < s; ++i) r *= t - i;
  return r;
}

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

DifferentialOperator weyl_multiply(const DifferentialOperator& a,
                                   const DifferentialOperator& b) {
  if (a.n_vars() != b.n_vars() || a.n_params() != b.n_params())
    throw std::invalid_argument("operator spaces do not match");
  const int nv = a.n_vars();
  DifferentialOperator out(nv, a.n_params());

  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // x^t1 d^k1 . x^t2 d^k2: push d^k1 through x^t2 by Leibniz. Each
      // multi-index s <= min(k1, t2|vars) contributes
      //   prod_v C(k1_v, s_v) (t2_v)_(s_v)  x^(t1+t2-s) d^(k1-s+k2).
      std::vector<int> smax(nv);
      for (int v = 0; v < nv; ++v)
        smax[v] = std::min(ka.deriv[v], kb.coeff_exp[v]);
      std::vector<int> s(nv, 0);
      for (;;) {
        mpz_class factor = 1;
        for (int v = 0; v < nv; ++v)
          if (s[v] > 0) factor *= binom(ka.deriv[v], s[v]) * falling(kb.coeff_exp[v], s[v]);
        WeylKey k;
        k.coeff_exp = ka.coeff_exp;
        for (size_t v = 0; v < kb.coeff_exp.size(); ++v) k.coeff_exp[v] += kb.coeff_exp[v];
        for (int v = 0; v < nv; ++v) k.coeff_exp[v] -= s[v];
        k.deriv = ka.deriv;
        for (int v = 0; v < nv; ++v) k.deriv[v] += kb.deriv[v] - s[v];
        out.add_term(k, ca * cb * Rational(factor));

        int v = 0;
        while (v < nv && s[v] == smax[v]) s[v++] = 0;
        if (v == nv) break;
        ++s[v];
      }
    }
  }
  return out;
}

std::optional<RealizationDefect> check_realization(const Realization& r) {
  const int n = r.algebra.dim();
  if (static_cast<int>(r.images.size()) != n)
    throw std::invalid_argument("realisation image count does not match algebra");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      DifferentialOperator lhs =
          weyl_multiply(r.images[i], r.images[j]) - weyl_multiply(r.images[j], r.images[i]);
      for (const auto& [k, c] : r.algebra.bracket(i, j).coeffs) {
        DifferentialOperator t = r.images[k];
        t *= -c;
        lhs += t;
      }
      if (!lhs.is_zero()) return RealizationDefect{i, j, std::move(lhs)};
    }
  return std::nullopt;
}

Realization coadjoint_realization(const LieAlgebra& a) {
  const int n = a.dim();
  Realization r;
  r.algebra = a;
  r.name = "coadjoint";
  for (int j = 1; j <= n; ++j) r.var_names.push_back("x" + std::to_string(j));
  for (int i = 0; i < n; ++i) {
    DifferentialOperator img(n, 0);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (const auto& [k, c] : a.bracket(i, j).coeffs) {
        WeylKey key{Exponents(n, 0), Exponents(n, 0)};
        key.coeff_exp[k] = 1;
        key.deriv[j] = 1;
        img.add_term(key, c);
      }
    }
    r.images.push_back(std::move(img));
  }
  return r;
}

namespace {

Realization schrodinger_realization(const LieAlgebra& a, int d) {
  // Variables t, x_1..x_d; parameter m (the mass).
  const int nv = d + 1, np = 1;
  Realization r;
  r.algebra = a;
  r.name = "builtin";
  r.var_names.push_back("t");
  for (int i = 1; i <= d; ++i) r.var_names.push_back("x" + std::to_string(i));
  r.param_names.push_back("m");

  auto X = [&](int i) { return DifferentialOperator::coordinate(nv, np, i); };  // 1-based x_i at slot i
  auto T = [&]() { return DifferentialOperator::coordinate(nv, np, 0); };
  auto Mass = [&]() { return DifferentialOperator::coordinate(nv, np, nv); };
  auto Dx = [&](int i) { return DifferentialOperator::derivative(nv, np, i); };
  auto Dt = [&]() { return DifferentialOperator::derivative(nv, np, 0); };
  auto Const = [&](Rational c) { return DifferentialOperator::constant(nv, np, c); };
  auto mul = [](const DifferentialOperator& p, const DifferentialOperator& q) {
    return weyl_multiply(p, q);
  };

  std::vector<DifferentialOperator> img(a.dim(), DifferentialOperator(nv, np));
  auto at = [&](const std::string& nm) -> DifferentialOperator& {
    auto ix = a.index_of(nm);
    if (!ix) throw std::logic_error("missing generator " + nm);
    return img[*ix];
  };

  at("M") = Mass();
  at("H") = Dt();
  for (int i = 1; i <= d; ++i) {
    at("P0_" + std::to_string(i)) = Dx(i);
    // P1_i = -t d/dx_i - m x_i
    at("P1_" + std::to_string(i)) =
        (mul(T(), Dx(i)) * Rational(-1)) - mul(Mass(), X(i));
  }
  // D = -2t d/dt - sum_k x_k d/dx_k - 1/2
  {
    DifferentialOperator op = mul(T(), Dt()) * Rational(-2);
    for (int k = 1; k <= d; ++k) op -= mul(X(k), Dx(k));
    op -= Const(Rational(1, 2));
    at("D") = std::move(op);
  }
  // C = t^2 d/dt + t sum_k x_k d/dx_k + (m/2) sum_k x_k^2 + t/2
  {
    DifferentialOperator op = mul(mul(T(), T()), Dt());
    for (int k = 1; k <= d; ++k) op += mul(T(), mul(X(k), Dx(k)));
    for (int k = 1; k <= d; ++k) op += mul(Mass(), mul(X(k), X(k))) * Rational(1, 2);
    op += mul(T(), Const(Rational(1, 2)));
    at("C") = std::move(op);
  }
  // J_ij = -x_i d/dx_j + x_j d/dx_i
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      at("J" + std::to_string(i) + "_" + std::to_string(j)) =
          (mul(X(i), Dx(j)) * Rational(-1)) + mul(X(j), Dx(i));

  r.images = std::move(img);
  return r;
}

Realization heisenberg_realization(const LieAlgebra& a, int d) {
  const int nv = d, np = 1;
  Realization r;
  r.algebra = a;
  r.name = "builtin";
  for (int i = 1; i <= d; ++i) r.var_names.push_back("x" + std::to_string(i));
  r.param_names.push_back("m");
  std::vector<DifferentialOperator> img;
  img.push_back(DifferentialOperator::coordinate(nv, np, nv));  // M = m
  for (int i = 1; i <= d; ++i)
    img.push_back(DifferentialOperator::derivative(nv, np, i - 1));
  for (int i = 1; i <= d; ++i) {
    DifferentialOperator p1 =
        weyl_multiply(DifferentialOperator::coordinate(nv, np, nv),
                      DifferentialOperator::coordinate(nv, np, i - 1));
    p1 *= Rational(-1);
    img.push_back(std::move(p1));
  }
  r.images = std::move(img);
  return r;
}

Realization sl2_realization(const LieAlgebra& a) {
  const int nv = 1, np = 0;
  Realization r;
  r.algebra = a;
  r.name = "builtin";
  r.var_names.push_back("t");
  auto T = DifferentialOperator::coordinate(nv, np, 0);
  auto Dt = DifferentialOperator::derivative(nv, np, 0);
  DifferentialOperator h = Dt;
  DifferentialOperator dop = weyl_multiply(T, Dt) * Rational(-2) -
                             DifferentialOperator::constant(nv, np, Rational(1, 2));
  DifferentialOperator c = weyl_multiply(weyl_multiply(T, T), Dt) +
                           weyl_multiply(T, DifferentialOperator::constant(nv, np, Rational(1, 2)));
  r.images = {std::move(h), std::move(dop), std::move(c)};
  return r;
}

Realization filiform_realization(const LieAlgebra& a, int n) {
  // e_1 = 0, e_k = x_{k-1} d/dx_n for 1 < k < n,
  // e_n = -sum_{k=2}^{n-1} x_{k-1} d/dx_k  (variables x_1..x_n)
  const int nv = n, np = 0;
  Realization r;
  r.algebra = a;
  r.name = "builtin";
  for (int i = 1; i <= n; ++i) r.var_names.push_back("x" + std::to_string(i));
  std::vector<DifferentialOperator> img(n, DifferentialOperator(nv, np));
  for (int k = 2; k <= n - 1; ++k) {
    WeylKey key{Exponents(nv, 0), Exponents(nv, 0)};
    key.coeff_exp[k - 2] = 1;
    key.deriv[n - 1] = 1;
    img[k - 1].add_term(key, Rational(1));
  }
  for (int k = 2; k <= n - 1; ++k) {
    WeylKey key{Exponents(nv, 0), Exponents(nv, 0)};
    key.coeff_exp[k - 2] = 1;
    key.deriv[k - 1] = 1;
    img[n - 1].add_term(key, Rational(-1));
  }
  r.images = std::move(img);
  return r;
}

}  // namespace

Realization builtin_realization(std::string_view spec) {
  LieAlgebra a = builtin_algebra(spec);
  std::string_view family = spec.substr(0, spec.find(':'));
  int param = 0;
  if (auto colon = spec.find(':'); colon != std::string_view::npos)
    param = std::stoi(std::string(spec.substr(colon + 1)));
  if (family == "schrodinger") return schrodinger_realization(a, param);
  if (family == "heisenberg") return heisenberg_realization(a, param);
  if (family == "sl2") return sl2_realization(a);
  if (family == "filiform") return filiform_realization(a, param);
  if (family == "abelian") {
    Realization r;
    r.algebra = a;
    r.name = "builtin";
    for (int i = 1; i <= param; ++i) r.var_names.push_back("x" + std::to_string(i));
    r.images.assign(param, DifferentialOperator(param, 0));
    return r;
  }
  throw std::invalid_argument("no builtin realisation for '" + std::string(spec) + "'");
}

DifferentialOperator apply(const Realization& r, const UEAElement& k) {
  const int nv = static_cast<int>(r.var_names.size());
  const int np = static_cast<int>(r.param_names.size());
  DifferentialOperator out(nv, np);
  for (const auto& [e, c] : k.terms()) {
    DifferentialOperator acc = DifferentialOperator::constant(nv, np, Rational(1));
    for (size_t i = 0; i < e.size(); ++i)
      for (int rep = 0; rep < e[i]; ++rep) acc = weyl_multiply(acc, r.images[i]);
    acc *= c;
    out += acc;
  }
  return out;
}

}  // namespace casimir
