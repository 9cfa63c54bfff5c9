#include <CLI11.hpp>
#include <json.hpp>
#include <functional>
#include <iostream>
#include <string>

#include "flagchow/bundles.hpp"
#include "flagchow/chow.hpp"
#include "flagchow/classify.hpp"
#include "flagchow/polynomial.hpp"

namespace {

using namespace flagchow;

struct Options {
  int d = 2;
  int n = 4;
  std::string space = "flag";
  std::string expr;
  std::string lhs;
  std::string rhs;
  std::string format = "text";
  std::string regime = "auto";
  int seed = 0;
  int max_coeff = 2;
};

FlagSpace make_space(const Options& opt) {
  if (opt.space == "grass") return FlagSpace::grassmannian(opt.d, opt.n);
  if (opt.space == "flag") return FlagSpace::three_step_flag(opt.d, opt.n);
  throw Error("unknown space: " + opt.space);
}

int run_reduce(const Options& opt) {
  FlagSpace space = make_space(opt);
  Polynomial p = parse_polynomial(opt.expr, space.variable_count());
  Polynomial reduced = reduce(space, p);
  if (opt.format == "json") {
    nlohmann::json out{{"space", space.str()}, {"input", p.str()},
                       {"reduced", reduced.str()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << reduced.str() << "\n";
  }
  return 0;
}

int run_equal(const Options& opt) {
  FlagSpace space = make_space(opt);
  Polynomial lhs = parse_polynomial(opt.lhs, space.variable_count());
  Polynomial rhs = parse_polynomial(opt.rhs, space.variable_count());
  bool equal = ring_equal(space, lhs, rhs);
  if (opt.format == "json") {
    nlohmann::json out{{"space", space.str()}, {"equal", equal}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (equal ? "true" : "false") << "\n";
  }
  return equal ? 0 : 1;
}

int run_chern(const Options& opt) {
  BundlePtr bundle = parse_bundle(opt.expr);
  ChernPolynomial c = chern_pullback(*bundle, opt.d, opt.n);
  SplittingType type = splitting_type(*bundle, opt.d, opt.n);
  if (opt.format == "json") {
    nlohmann::json out{{"bundle", bundle->str()},
                       {"rank", c.rank},
                       {"chern", c.poly.str()},
                       {"splitting_type", {{"u", type.u}, {"r", type.r}}}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "bundle: " << bundle->str() << "\n"
              << "rank:   " << c.rank << "\n"
              << "chern:  " << c.poly.str() << "\n"
              << "type:   " << type.str() << "\n";
  }
  return 0;
}

Regime pick_regime(const Options& opt) {
  if (opt.regime == "auto") return regime_of(opt.d, opt.n);
  if (opt.regime == "small") return Regime::Small;
  if (opt.regime == "boundary") return Regime::Boundary;
  if (opt.regime == "equal") return Regime::Equal;
  throw Error("unknown regime: " + opt.regime);
}

int run_cases(const Options& opt) {
  Regime regime = pick_regime(opt);
  auto cases = normal_form_cases(opt.d, regime);
  if (opt.format == "json") {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& entry : cases) {
      nlohmann::json record{{"case_id", entry.label},
                            {"regime", regime_name(entry.regime)},
                            {"poly", entry.poly.str()}};
      record["family"] = entry.family ? entry.family->str() : nullptr;
      if (!entry.family_note.empty()) record["note"] = entry.family_note;
      array.push_back(record);
    }
    std::cout << array.dump(2) << "\n";
  } else {
    for (const auto& entry : cases) {
      std::cout << "case " << entry.label << ": " << entry.poly.str();
      if (entry.family) std::cout << "   family " << entry.family->str();
      if (!entry.family_note.empty()) std::cout << "   (" << entry.family_note << ")";
      std::cout << "\n";
    }
  }
  return 0;
}

int run_match(const Options& opt) {
  ChernPolynomial c{Polynomial(opt.d + 1), 0,
                    FlagSpace::three_step_flag(opt.d, opt.n)};
  std::string described;
  try {
    BundlePtr bundle = parse_bundle(opt.expr);
    c = chern_pullback(*bundle, opt.d, opt.n);
    described = bundle->str();
  } catch (const ParseError&) {
    Polynomial p = parse_polynomial(opt.expr, opt.d + 1);
    int r = p.t_degree();
    c = ChernPolynomial{p, r, FlagSpace::three_step_flag(opt.d, opt.n)};
    described = p.str();
  }
  auto match = match_case(c, opt.d, opt.n);
  if (opt.format == "json") {
    nlohmann::json out;
    out["input"] = described;
    out["matched"] = match.has_value();
    if (match) {
      out["case_id"] = match->matched.label;
      out["family"] =
          match->matched.family ? match->matched.family->str() : nullptr;
      out["transform"] = {{"twist", match->transform.twist},
                          {"dualized", match->transform.dualized}};
    }
    std::cout << out.dump(2) << "\n";
  } else if (match) {
    std::cout << "case " << match->matched.label << "  [twist "
              << match->transform.twist
              << (match->transform.dualized ? ", dual" : "") << "]";
    if (match->matched.family) {
      std::cout << "  family " << match->matched.family->str();
    }
    std::cout << "\n";
  } else {
    std::cout << "no match\n";
  }
  return match ? 0 : 1;
}

int run_verify_theorem(const Options& opt) {
  TheoremReport report = classify_theorem(opt.d, opt.n);
  if (opt.format == "json") {
    std::cout << report.json() << "\n";
  } else {
    std::cout << report.text();
  }
  return report.all_verified ? 0 : 1;
}

int run_search(const Options& opt) {
  Polynomial target = parse_polynomial(opt.expr, opt.d + 1);
  nlohmann::json array = nlohmann::json::array();
  bool all_e_plus_f = true;
  int total = 0;
  // Exhaustive over all strictly decreasing exponent vectors in range.
  std::vector<std::vector<int>> exponent_vectors;
  for (int k = 1; k <= opt.d + 1; ++k) {
    std::vector<int> stack;
    std::function<void(int)> rec = [&](int next) {
      if (static_cast<int>(stack.size()) == k) {
        exponent_vectors.push_back(stack);
        return;
      }
      for (int v = next; v >= -opt.max_coeff; --v) {
        stack.push_back(v);
        rec(v - 1);
        stack.pop_back();
      }
    };
    rec(opt.max_coeff);
  }
  for (const auto& u : exponent_vectors) {
    auto solutions = search_factorizations(target, opt.d, opt.n, u, opt.max_coeff);
    for (const auto& inst : solutions) {
      ++total;
      bool e_plus_f = verify_constraint(inst, Constraint::EPlusF);
      all_e_plus_f = all_e_plus_f && e_plus_f;
      if (opt.format == "json") {
        nlohmann::json record;
        record["u"] = inst.u;
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& s : inst.S) factors.push_back(s.str());
        record["S"] = factors;
        record["a"] = inst.a.str();
        record["b"] = inst.b.str();
        record["c"] = inst.c.str();
        record["e"] = inst.e.str();
        record["f"] = inst.f.str();
        record["e_plus_f_zero"] = e_plus_f;
        array.push_back(record);
      } else {
        std::cout << "u=(";
        for (std::size_t i = 0; i < inst.u.size(); ++i) {
          std::cout << (i ? "," : "") << inst.u[i];
        }
        std::cout << ") corr=(" << inst.a << "," << inst.b << "," << inst.c
                  << "," << inst.e << "," << inst.f << ")";
        for (const auto& s : inst.S) std::cout << "  S: " << s.str();
        std::cout << (e_plus_f ? "  [e+f=0]" : "  [e+f!=0]") << "\n";
      }
    }
  }
  if (opt.format == "json") {
    nlohmann::json out{{"solutions", array},
                       {"count", total},
                       {"all_e_plus_f_zero", all_e_plus_f}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << total << " solutions"
              << (all_e_plus_f ? ", all with e+f=0" : ", e+f=0 violated")
              << "\n";
  }
  return 0;
}

int run_dims(const Options& opt) {
  FlagSpace space = FlagSpace::grassmannian(opt.d, opt.n);
  int top = opt.d * (opt.n - opt.d);
  std::vector<int> dims;
  for (int degree = 0; degree <= top; ++degree) {
    dims.push_back(graded_dimension(space, degree));
  }
  if (opt.format == "json") {
    nlohmann::json out{{"space", space.str()}, {"dimensions", dims}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < dims.size(); ++i) {
      std::cout << (i ? " " : "") << dims[i];
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Chow-ring calculator and uniform-bundle classifier"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--d", opt.d, "Grassmannian parameter d");
    cmd->add_option("--n", opt.n, "ambient dimension n");
    cmd->add_option("--format", opt.format, "text|json");
    cmd->add_option("--seed", opt.seed, "random seed (reserved, default 0)");
  };

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "canonical form mod the ideal");
  add_common(reduce_cmd);
  reduce_cmd->add_option("--space", opt.space, "grass|flag");
  reduce_cmd->add_option("--expr", opt.expr, "polynomial")->required();

  CLI::App* equal_cmd = app.add_subcommand("equal", "ring equality mod the ideal");
  add_common(equal_cmd);
  equal_cmd->add_option("--space", opt.space, "grass|flag");
  equal_cmd->add_option("--lhs", opt.lhs, "polynomial")->required();
  equal_cmd->add_option("--rhs", opt.rhs, "polynomial")->required();

  CLI::App* chern_cmd = app.add_subcommand("chern", "Chern polynomial of a bundle");
  add_common(chern_cmd);
  chern_cmd->add_option("--expr", opt.expr, "bundle expression")->required();

  CLI::App* cases_cmd = app.add_subcommand("cases", "normal-form cases per regime");
  add_common(cases_cmd);
  cases_cmd->add_option("--regime", opt.regime, "auto|small|boundary|equal");

  CLI::App* match_cmd = app.add_subcommand("match", "match against normal-form cases");
  add_common(match_cmd);
  match_cmd->add_option("--expr", opt.expr, "bundle expression or polynomial")
      ->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify-theorem", "verify the classification families");
  add_common(verify_cmd);

  CLI::App* search_cmd =
      app.add_subcommand("search", "brute-force factorization search (d=n-d=2)");
  add_common(search_cmd);
  search_cmd->add_option("--expr", opt.expr, "target polynomial")->required();
  search_cmd->add_option("--max-coeff", opt.max_coeff, "correction bound");

  CLI::App* dims_cmd = app.add_subcommand("dims", "graded dimensions of A(G(d,n))");
  add_common(dims_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(reduce_cmd)) return run_reduce(opt);
    if (app.got_subcommand(equal_cmd)) return run_equal(opt);
    if (app.got_subcommand(chern_cmd)) return run_chern(opt);
    if (app.got_subcommand(cases_cmd)) return run_cases(opt);
    if (app.got_subcommand(match_cmd)) return run_match(opt);
    if (app.got_subcommand(verify_cmd)) return run_verify_theorem(opt);
    if (app.got_subcommand(search_cmd)) return run_search(opt);
    if (app.got_subcommand(dims_cmd)) return run_dims(opt);
  } catch (const ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 2;
}
