#include "casimir/grading.hpp"

#include <stdexcept>

namespace casimir {

Grading compute_grading(const LieAlgebra& a) {
  const int n = a.dim();
  ZMatrix constraints;
  for (const auto& [pair, terms] : a.table()) {
    auto [i, j] = pair;
    for (const auto& [k, c] : terms) {
      std::vector<mpz_class> row(n, 0);
      row[i] += 1;
      row[j] += 1;
      row[k] -= 1;
      constraints.push_back(std::move(row));
    }
  }
  Grading g;
  g.basis_matrix = integer_kernel(constraints, n);
  g.rank = static_cast<int>(g.basis_matrix.size());
  g.weights.assign(n, WeightVector(g.rank));
  for (int r = 0; r < g.rank; ++r)
    for (int i = 0; i < n; ++i) g.weights[i][r] = g.basis_matrix[r][i];
  return g;
}

WeightVector monomial_weight(const Grading& g, const Exponents& mono) {
  WeightVector w(g.rank, 0);
  for (size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    if (i >= g.weights.size())
      throw std::invalid_argument("monomial length does not match grading");
    for (int r = 0; r < g.rank; ++r) w[r] += mono[i] * g.weights[i][r];
  }
  return w;
}

namespace {

void enumerate_degree(int n, int degree, Exponents& cur, int pos, int left,
                      const Grading& g,
                      std::map<WeightVector, std::vector<Exponents>>& out) {
  if (pos == n) {
    if (left == 0) out[monomial_weight(g, cur)].push_back(cur);
    return;
  }
  // Within one degree this yields lexicographically ascending exponent order.
  for (int e = 0; e <= left; ++e) {
    cur[pos] = e;
    enumerate_degree(n, degree, cur, pos + 1, left - e, g, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::map<WeightVector, std::vector<Exponents>> weight_classes(const Grading& g,
                                                              int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  const int n = static_cast<int>(g.weights.size());
  std::map<WeightVector, std::vector<Exponents>> classes;
  Exponents cur(n, 0);
  for (int d = 1; d <= max_degree; ++d)
    enumerate_degree(n, d, cur, 0, d, g, classes);
  return classes;
}

std::map<WeightVector, UEAElement> weight_split(const Grading& g, const UEAElement& k) {
  std::map<WeightVector, UEAElement> parts;
  for (const auto& [e, c] : k.terms())
    parts[monomial_weight(g, e)].add_term(e, c);
  return parts;
}

}  // namespace casimir
