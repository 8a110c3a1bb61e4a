#include "casimir/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace casimir {

namespace {

void enumerate_monomials(int n, int degree_left, int pos, Exponents& cur,
                         std::vector<Exponents>& out) {
  if (pos == n) {
    if (degree_left == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e <= degree_left; ++e) {
    cur[pos] = e;
    enumerate_monomials(n, degree_left - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

// Scale to a primitive integer vector of coefficients whose leading monomial
// (graded-lex: highest degree, then lexicographically largest exponent
// vector) has a positive coefficient.
UEAElement normalize_element(const UEAElement& k) {
  if (k.is_zero()) return k;
  mpz_class den = 1;
  for (const auto& [e, c] : k.terms()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
    den = l;
  }
  mpz_class num = 0;
  for (const auto& [e, c] : k.terms()) {
    mpz_class t = c.num() * (den / c.den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.get_mpz_t());
  }
  Rational scale{den, num};

  const Exponents* lead = nullptr;
  for (const auto& [e, c] : k.terms()) {
    if (!lead) {
      lead = &e;
      continue;
    }
    int de = total_degree(e), dl = total_degree(*lead);
    if (de > dl || (de == dl && e > *lead)) lead = &e;
  }
  if ((k.terms().at(*lead) * scale).sign() < 0) scale = -scale;
  UEAElement out = k;
  out *= scale;
  return out;
}

}  // namespace

std::vector<Exponents> build_ansatz(int n_gens, int m) {
  if (m < 1) throw std::invalid_argument("ansatz degree must be >= 1");
  std::vector<Exponents> out;
  Exponents cur(n_gens, 0);
  for (int d = 1; d <= m; ++d) enumerate_monomials(n_gens, d, 0, cur, out);
  return out;
}

std::vector<Exponents> build_ansatz(const Grading& g, int m, const WeightVector& w) {
  if (static_cast<int>(w.size()) != g.rank)
    throw std::invalid_argument("weight tuple length does not match grading rank");
  std::vector<Exponents> out;
  for (const auto& mono : build_ansatz(static_cast<int>(g.weights.size()), m))
    if (monomial_weight(g, mono) == w) out.push_back(mono);
  return out;
}

LinearSystem extract_system(const Realization& r, const std::vector<Exponents>& ansatz) {
  LinearSystem sys;
  sys.unknowns = ansatz;
  sys.mat.cols = static_cast<int>(ansatz.size());
  const int n = r.algebra.dim();

  // rho(sigma) once per ansatz monomial, then one commutator per generator.
  std::vector<DifferentialOperator> images;
  images.reserve(ansatz.size());
  for (const auto& mono : ansatz)
    images.push_back(apply(r, UEAElement::monomial(mono)));

  std::set<std::vector<std::pair<int, Rational>>> seen;
  for (int i = 0; i < n; ++i) {
    // Rows of [rho(sigma), rho(X_i)] coefficients, keyed by Weyl basis element.
    std::map<WeylKey, SparseRow> rows;
    for (size_t s = 0; s < ansatz.size(); ++s) {
      DifferentialOperator comm = weyl_multiply(images[s], r.images[i]) -
                                  weyl_multiply(r.images[i], images[s]);
      for (const auto& [key, c] : comm.terms())
        rows[key].entries.emplace_back(static_cast<int>(s), c);
    }
    for (auto& [key, row] : rows) {
      if (seen.insert(row.entries).second) sys.mat.add_row(std::move(row));
    }
  }
  return sys;
}

std::vector<UEAElement> candidates_from_nullspace(const LinearSystem& s) {
  std::vector<UEAElement> out;
  for (const auto& v : nullspace_of(s.mat)) {
    UEAElement k;
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) k.add_term(s.unknowns[i], v[i]);
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<UEAElement> recombine(const LieAlgebra& a, const std::vector<UEAElement>& candidates) {
  if (candidates.empty()) return {};
  const int n = a.dim();
  const int L = static_cast<int>(candidates.size());

  Matrix m;
  m.cols = L;
  for (int i = 0; i < n; ++i) {
    std::map<Exponents, SparseRow> rows;
    for (int j = 0; j < L; ++j) {
      UEAElement comm = commutator_with_generator(a, candidates[j], i);
      for (const auto& [e, c] : comm.terms()) rows[e].entries.emplace_back(j, c);
    }
    for (auto& [e, row] : rows) m.add_row(std::move(row));
  }

  std::vector<UEAElement> out;
  for (const auto& v : nullspace_of(m)) {
    UEAElement k;
    for (int j = 0; j < L; ++j) {
      if (v[j].is_zero()) continue;
      UEAElement t = candidates[j];
      t *= v[j];
      k += t;
    }
    k = normalize_element(k);
    if (!is_casimir(a, k))
      throw std::logic_error("recombination produced a non-central element");
    out.push_back(std::move(k));
  }
  return out;
}

namespace {

struct JacobianProbe {
  std::vector<std::vector<Rational>> points;  // trials x n_gens

  JacobianProbe(int n_gens, int trials, std::uint64_t seed) {
    IntStream rng(seed);
    points.assign(trials, std::vector<Rational>(n_gens));
    for (auto& p : points)
      for (auto& x : p) x = Rational(rng.next());
  }

  // Max over probe points of the rank of the Jacobian of these polynomials.
  int generic_rank(const std::vector<Polynomial>& polys) const {
    if (polys.empty()) return 0;
    const int n = static_cast<int>(points[0].size());
    std::vector<std::vector<Polynomial>> grads;
    for (const auto& p : polys) {
      std::vector<Polynomial> g;
      for (int v = 0; v < n; ++v) g.push_back(poly_partial(p, v));
      grads.push_back(std::move(g));
    }
    int best = 0;
    for (const auto& pt : points) {
      Matrix m;
      m.cols = n;
      for (const auto& g : grads) {
        SparseRow row;
        for (int v = 0; v < n; ++v) {
          Rational val = poly_eval(g[v], pt);
          if (!val.is_zero()) row.entries.emplace_back(v, val);
        }
        m.add_row(std::move(row));
      }
      best = std::max(best, rank_of(m));
      if (best == static_cast<int>(polys.size())) break;
    }
    return best;
  }
};

}  // namespace

std::vector<UEAElement> independence_filter(const std::vector<UEAElement>& known,
                                            const std::vector<UEAElement>& candidates,
                                            int n_gens, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  JacobianProbe probe(n_gens, trials, seed);

  std::vector<Polynomial> kept;
  for (const auto& k : known) kept.push_back(symbol(k));

  std::vector<size_t> order(candidates.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return candidates[x].degree() < candidates[y].degree();
  });

  int rank = probe.generic_rank(kept);
  std::vector<bool> keep(candidates.size(), false);
  for (size_t i : order) {
    kept.push_back(symbol(candidates[i]));
    int next = probe.generic_rank(kept);
    if (next > rank) {
      rank = next;
      keep[i] = true;
    } else {
      kept.pop_back();
    }
  }

  std::vector<UEAElement> out;
  for (size_t i : order)
    if (keep[i]) out.push_back(candidates[i]);
  return out;
}

SearchResult run_search(const LieAlgebra& a, const Realization& r, int degree,
                        const SearchOptions& opts) {
  if (r.algebra.basis() != a.basis() || r.algebra.table() != a.table())
    throw std::invalid_argument("realisation does not belong to this algebra");
  if (degree < 1) throw std::invalid_argument("search degree must be >= 1");
  if (degree > uea_degree_cap())
    throw std::invalid_argument("search degree exceeds the degree cap");

  SearchResult result;
  result.degree = degree;
  result.mode = opts.mode;
  const int n = a.dim();

  // Collect (weight, monomial list) classes to process.
  std::vector<std::pair<std::optional<WeightVector>, std::vector<Exponents>>> work;
  if (opts.mode == SearchMode::naive) {
    if (opts.weight || opts.all_weights)
      throw std::invalid_argument("weight selection requires the graded mode");
    work.emplace_back(std::nullopt, build_ansatz(n, degree));
  } else {
    Grading g = compute_grading(a);
    auto classes = weight_classes(g, degree);
    if (opts.weight) {
      if (static_cast<int>(opts.weight->size()) != g.rank)
        throw std::invalid_argument("weight tuple length does not match grading rank");
      auto it = classes.find(*opts.weight);
      std::vector<Exponents> monos;
      if (it != classes.end()) monos = it->second;
      work.emplace_back(*opts.weight, std::move(monos));
    } else {
      for (auto& [w, monos] : classes) {
        if (!opts.all_weights) {
          bool at_degree = false;
          for (const auto& mono : monos)
            if (total_degree(mono) == degree) {
              at_degree = true;
              break;
            }
          if (!at_degree || monos.size() < 2) continue;
        }
        work.emplace_back(w, monos);
      }
    }
    result.grading = std::move(g);
  }

  for (auto& [w, monos] : work) {
    ClassResult cls;
    cls.weight = w;
    cls.ansatz = std::move(monos);
    if (!cls.ansatz.empty()) {
      LinearSystem sys = extract_system(r, cls.ansatz);
      cls.candidates = candidates_from_nullspace(sys);
      cls.genuine = recombine(a, cls.candidates);
    }
    result.classes.push_back(std::move(cls));
  }

  // One global independence pass over all genuine elements, ascending degree,
  // then attribute the kept ones back to their classes.
  std::vector<std::pair<size_t, UEAElement>> pool;
  for (size_t ci = 0; ci < result.classes.size(); ++ci)
    for (const auto& k : result.classes[ci].genuine) pool.emplace_back(ci, k);

  std::vector<size_t> order(pool.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return pool[x].second.degree() < pool[y].second.degree();
  });

  JacobianProbe probe(n, opts.trials, opts.seed);
  std::vector<Polynomial> kept;
  int rank = 0;
  for (size_t i : order) {
    kept.push_back(symbol(pool[i].second));
    int next = probe.generic_rank(kept);
    if (next > rank) {
      rank = next;
      result.classes[pool[i].first].independent.push_back(pool[i].second);
      result.independent.push_back(pool[i].second);
    } else {
      kept.pop_back();
    }
  }
  return result;
}

}  // namespace casimir
