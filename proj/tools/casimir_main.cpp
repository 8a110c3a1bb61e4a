#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/formats.hpp"
#include "casimir/search.hpp"

using json = nlohmann::ordered_json;
using namespace casimir;

namespace {

// Algebra specs are builtin family strings or paths to algebra files; a
// readable file wins when the spec is ambiguous.
LieAlgebra load_algebra(const std::string& spec) {
  if (std::filesystem::exists(spec)) return parse_algebra_file(spec);
  return builtin_algebra(spec);
}

Realization load_realization(const std::string& spec, const LieAlgebra& a) {
  if (spec == "coadjoint") return coadjoint_realization(a);
  if (spec == "builtin") {
    Realization r = builtin_realization(a.name());
    // The file's structure constants are authoritative, not its name; make
    // sure the builtin tables actually match before handing the images over.
    if (r.algebra.basis() != a.basis() || r.algebra.table() != a.table())
      throw std::invalid_argument("algebra '" + a.name() +
                                  "' does not match the builtin of the same name");
    return r;
  }
  if (!std::filesystem::exists(spec))
    throw std::invalid_argument("realization '" + spec +
                                "' is neither a file nor 'coadjoint'/'builtin'");
  return parse_realization_file(spec, a);
}

json weight_json(const WeightVector& w) {
  json arr = json::array();
  for (const auto& x : w) arr.push_back(std::stoll(x.get_str()));
  return arr;
}

int cmd_info(const std::string& algebra_spec, int trials, std::uint64_t seed, bool as_json) {
  LieAlgebra a = load_algebra(algebra_spec);
  auto jac = jacobi_check(a);
  int invariants = beltrametti_blasi_count(a, trials, seed);
  if (as_json) {
    json out{{"algebra", a.name()},
             {"dim", a.dim()},
             {"jacobi", jac ? "fail" : "pass"},
             {"invariants", invariants}};
    if (jac)
      out["jacobi_failure"] = {{"i", a.basis_name(jac->i)},
                               {"j", a.basis_name(jac->j)},
                               {"k", a.basis_name(jac->k)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "algebra: " << a.name() << "\n";
    std::cout << "dim: " << a.dim() << "\n";
    if (jac)
      std::cout << "jacobi: fail at (" << a.basis_name(jac->i) << ", "
                << a.basis_name(jac->j) << ", " << a.basis_name(jac->k) << ")\n";
    else
      std::cout << "jacobi: pass\n";
    std::cout << "invariants (Beltrametti-Blasi): " << invariants << "\n";
  }
  return 0;
}

int cmd_grade(const std::string& algebra_spec, int degree, bool as_json) {
  LieAlgebra a = load_algebra(algebra_spec);
  Grading g = compute_grading(a);
  auto classes = weight_classes(g, degree);
  if (as_json) {
    json out{{"algebra", a.name()}, {"rank", g.rank}};
    json ws = json::array();
    for (int i = 0; i < a.dim(); ++i)
      ws.push_back({{"generator", a.basis_name(i)}, {"weight", weight_json(g.weights[i])}});
    out["weights"] = ws;
    json cl = json::array();
    for (const auto& [w, monos] : classes) {
      json c{{"weight", weight_json(w)}, {"size", monos.size()}};
      json ms = json::array();
      for (const auto& mono : monos)
        ms.push_back(format_expression(UEAElement::monomial(mono), a));
      c["monomials"] = ms;
      cl.push_back(std::move(c));
    }
    out["classes"] = cl;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "algebra: " << a.name() << "\n";
    std::cout << "grading rank: " << g.rank << "\n";
    for (int i = 0; i < a.dim(); ++i)
      std::cout << "  [" << a.basis_name(i) << "] = " << format_weight(g.weights[i]) << "\n";
    std::cout << "classes up to degree " << degree << ": " << classes.size() << "\n";
    for (const auto& [w, monos] : classes) {
      std::cout << "  " << format_weight(w) << " size " << monos.size() << ":";
      for (const auto& mono : monos)
        std::cout << " " << format_expression(UEAElement::monomial(mono), a);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_search(const std::string& algebra_spec, const std::string& realization_spec,
               int degree, const std::string& weight, bool all_weights, bool no_grading,
               int trials, std::uint64_t seed, bool as_json) {
  LieAlgebra a = load_algebra(algebra_spec);
  Realization r = load_realization(realization_spec, a);
  if (auto defect = check_realization(r)) {
    std::cerr << "error: not a realisation: [" << a.basis_name(defect->i) << ", "
              << a.basis_name(defect->j) << "] is off by "
              << defect->difference.str(r.var_names, r.param_names) << "\n";
    return 1;
  }

  SearchOptions opts;
  opts.mode = no_grading ? SearchMode::naive : SearchMode::graded;
  opts.all_weights = all_weights;
  opts.trials = trials;
  opts.seed = seed;
  if (!weight.empty()) opts.weight = parse_weight_tuple(weight);

  SearchResult res = run_search(a, r, degree, opts);

  if (as_json) {
    json out{{"algebra", a.name()},
             {"realization", r.name},
             {"degree", res.degree},
             {"mode", res.mode == SearchMode::graded ? "graded" : "naive"}};
    json cls = json::array();
    for (const auto& c : res.classes) {
      json jc;
      if (c.weight) jc["weight"] = weight_json(*c.weight);
      jc["ansatz_size"] = c.ansatz.size();
      jc["candidates"] = c.candidates.size();
      json gen = json::array();
      for (const auto& k : c.genuine) gen.push_back(format_expression(k, a));
      jc["genuine"] = gen;
      json ind = json::array();
      for (const auto& k : c.independent) ind.push_back(format_expression(k, a));
      jc["independent"] = ind;
      cls.push_back(std::move(jc));
    }
    out["classes"] = cls;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "algebra: " << a.name() << " (dim " << a.dim() << ")\n";
    std::cout << "realization: " << r.name << "\n";
    std::cout << "mode: " << (res.mode == SearchMode::graded ? "graded" : "naive")
              << ", degree " << res.degree << "\n";
    for (const auto& c : res.classes) {
      std::cout << "class";
      if (c.weight) std::cout << " " << format_weight(*c.weight);
      std::cout << ": ansatz " << c.ansatz.size() << ", candidates " << c.candidates.size()
                << ", genuine " << c.genuine.size() << ", independent "
                << c.independent.size() << "\n";
      for (const auto& k : c.genuine) std::cout << "  genuine: " << format_expression(k, a) << "\n";
    }
    std::cout << "independent invariants (" << res.independent.size() << "):\n";
    for (const auto& k : res.independent)
      std::cout << "  " << format_expression(k, a) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& algebra_spec, const std::string& expr_path, bool as_json) {
  LieAlgebra a = load_algebra(algebra_spec);
  UEAElement k = parse_expression_file(expr_path, a);
  bool central = is_casimir(a, k);
  std::string witness;
  if (!central)
    for (int i = 0; i < a.dim(); ++i) {
      UEAElement c = commutator_with_generator(a, k, i);
      if (!c.is_zero()) {
        witness = "[K, " + a.basis_name(i) + "] = " + format_expression(c, a);
        break;
      }
    }
  if (as_json) {
    json out{{"algebra", a.name()},
             {"expression", format_expression(k, a)},
             {"casimir", central}};
    if (!central) out["witness"] = witness;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "expression: " << format_expression(k, a) << "\n";
    std::cout << (central ? "casimir: yes\n" : "casimir: no\n");
    if (!central) std::cout << "  " << witness << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial Casimir operators of finite-dimensional Lie algebras"};
  app.require_subcommand(1);

  std::string algebra_spec, realization_spec = "coadjoint", weight, expr_path;
  int degree = 2, trials = 5;
  std::uint64_t seed = 0;
  bool as_json = false, all_weights = false, no_grading = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", algebra_spec, "builtin spec (e.g. filiform:6) or algebra file")
        ->required();
    sub->add_flag("--json", as_json, "emit JSON instead of text");
  };

  CLI::App* info = app.add_subcommand("info", "dimension, Jacobi check, invariant count");
  add_common(info);
  info->add_option("--trials", trials, "sample points for the generic rank");
  info->add_option("--seed", seed, "seed for sampled points");

  CLI::App* grade = app.add_subcommand("grade", "weight assignment and weight classes");
  add_common(grade);
  grade->add_option("--degree", degree, "enumerate monomial classes up to this degree");

  CLI::App* search = app.add_subcommand("search", "find Casimir operators via a realisation");
  add_common(search);
  search->add_option("--realization", realization_spec,
                     "'coadjoint', 'builtin', or a realisation file");
  search->add_option("--degree", degree, "ansatz degree bound")->required();
  auto* wopt = search->add_option("--weight", weight, "restrict to one weight class, e.g. \"(0,2)\"");
  auto* awopt = search->add_flag("--all-weights", all_weights, "process every nonempty weight class");
  auto* ngopt = search->add_flag("--no-grading", no_grading, "single full ansatz instead of weight classes");
  wopt->excludes(awopt)->excludes(ngopt);
  awopt->excludes(ngopt);
  search->add_option("--trials", trials, "sample points for independence testing");
  search->add_option("--seed", seed, "seed for sampled points");

  CLI::App* verify = app.add_subcommand("verify", "check whether an expression is central");
  add_common(verify);
  verify->add_option("--expression", expr_path, "file with one enveloping-algebra expression")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*info) return cmd_info(algebra_spec, trials, seed, as_json);
    if (*grade) return cmd_grade(algebra_spec, degree, as_json);
    if (*search)
      return cmd_search(algebra_spec, realization_spec, degree, weight, all_weights,
                        no_grading, trials, seed, as_json);
    if (*verify) return cmd_verify(algebra_spec, expr_path, as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
