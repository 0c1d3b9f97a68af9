#include "hyperlog/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>
#include <ostream>

#include "hyperlog/acceptance.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/evaluator.hpp"
#include "hyperlog/relations.hpp"
#include "hyperlog/report.hpp"

namespace hyperlog {

namespace {

struct Options {
  EvalConfig cfg;
  bool json = false;
  std::string word;
  std::string expr;
  std::string z_text;
  std::size_t weight = 0;
  std::size_t weight_max = 0;
  int k_max = 0;
  double rel_tol = 0.0;
  double h = kFiniteDifferenceStep;
};

void add_config_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.cfg.target_tol, "per-word quadrature target tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--nodes", o.cfg.nodes_per_panel, "Gauss-Legendre nodes per panel")
      ->check(CLI::Range(2, 64));
  cmd->add_option("--panels", o.cfg.panels_per_side, "grading levels toward each endpoint")
      ->check(CLI::Range(1, 200));
  cmd->add_option("--grading", o.cfg.grading_ratio, "panel ratio between grading levels, in (0,1)");
  cmd->add_option("--cutoff", o.cfg.segment_cutoff, "minimum distance of z from [0,1]")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--series-tol", o.cfg.series_truncation_tol, "MZV series truncation tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--json", o.json, "emit JSON instead of text");
}

int emit_reports(std::vector<RelationReport> reports, const Options& o, std::ostream& out,
                 std::ostream& err) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const auto& a, const auto& b) { return a.relation_id < b.relation_id; });
  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
    err << summary_line(reports) << '\n';
  } else {
    for (const auto& r : reports) out << format_report_line(r) << '\n';
    out << summary_line(reports) << '\n';
  }
  bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  return all ? kExitOk : kExitCheckFailed;
}

std::vector<Word> convergent_up_to(std::size_t weight) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= weight; ++n) {
    for (Word& w : enumerate_convergent(n)) out.push_back(std::move(w));
  }
  return out;
}

std::string format_value(std::complex<double> v) {
  if (v.imag() == 0.0) return fmt::format("{:.15g}", v.real());
  return fmt::format("{:.15g}{:+.15g}i", v.real(), v.imag());
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.word.empty() == o.expr.empty()) {
    err << "eval: give exactly one of --word or --expr\n";
    return kExitUsage;
  }
  LinComb x;
  std::string label;
  try {
    if (!o.expr.empty()) {
      x = parse_lincomb(o.expr);
      label = format_lincomb(x);
    } else {
      Word w = parse_word(o.word);
      x = LinComb(w);
      label = format_word(w);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::vector<ComplexPoint> zs;
  try {
    zs = parse_complex_list(o.z_text);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }

  nlohmann::json arr = nlohmann::json::array();
  bool converged = true;
  for (const ComplexPoint& z : zs) {
    EvalResult r;
    if (z.is_infinite()) {
      r.value = eval_at_infinity(x, o.cfg);
      r.mesh_used = "series";
    } else {
      r = eval_lincomb(x, z, o.cfg);
    }
    converged = converged && r.converged;
    if (o.json) {
      arr.push_back({{"expr", label},
                     {"z", format_complex(z)},
                     {"re", r.value.real()},
                     {"im", r.value.imag()},
                     {"est_error", r.est_error},
                     {"converged", r.converged},
                     {"mesh", r.mesh_used}});
    } else {
      out << fmt::format("L({})({}) = {} ± {:.1e}  [{}]{}\n", label, format_complex(z),
                         format_value(r.value), r.est_error, r.mesh_used,
                         r.converged ? "" : "  NOT CONVERGED");
    }
  }
  if (o.json) out << arr.dump(2) << '\n';
  return converged ? kExitOk : kExitRefused;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  for (const Word& w : enumerate_convergent(o.weight)) out << format_word(w) << '\n';
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<CriterionResult> results;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : acceptance_criteria()) {
    CriterionResult r = c.run(o.cfg);
    if (o.json) {
      arr.push_back({{"criterion", r.number},
                     {"title", r.title},
                     {"pass", r.pass},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    } else {
      out << format_criterion_line(r) << '\n' << std::flush;
    }
    results.push_back(std::move(r));
  }
  auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  std::string summary = fmt::format("PASS {}/{}", passed, results.size());
  if (o.json) {
    out << arr.dump(2) << '\n';
    err << summary << '\n';
  } else {
    out << summary << '\n';
  }
  return passed == static_cast<long>(results.size()) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated integrals on P^1 minus {0, 1, z, infinity}: evaluation and relation checks",
               "hyperlog"};
  app.require_subcommand(1);
  // Separate storage per subcommand: CLI11 writes defaults into the bound
  // variable at registration, so shared fields would take the last default.
  enum { kEval, kDuality, kSum, kDiff, kBroadhurst, kMzv, kEnumerate, kSweep, kCommands };
  std::array<Options, kCommands> opts;

  auto* eval = app.add_subcommand("eval", "evaluate L(word) or L(expression) at z");
  {
    Options& o = opts[kEval];
    eval->add_option("--word", o.word, "word such as \"z,1,0\"");
    eval->add_option("--expr", o.expr, "linear combination such as \"3/2*[z,1,0] - [1,z,0]\"");
    eval->add_option("--z", o.z_text, "comma-separated z values (or inf)")->required();
    add_config_flags(eval, o);
  }

  auto* duality = app.add_subcommand("check-duality", "L(w - tau(w)) = 0 for all convergent words");
  {
    Options& o = opts[kDuality];
    duality->add_option("--weight-max", o.weight_max, "largest word weight")->default_val(5);
    duality->add_option("--z", o.z_text, "z points")->default_val("2,-1,3+2i");
    duality->add_option("--rel-tol", o.rel_tol, "residual tolerance")->default_val(kRelationTol);
    add_config_flags(duality, o);
  }

  auto* sum = app.add_subcommand("check-sum", "sum formula for 2 <= k <= k-max, 1 <= r <= k");
  {
    Options& o = opts[kSum];
    sum->add_option("--k-max", o.k_max, "largest k")->default_val(7);
    sum->add_option("--z", o.z_text, "z points")->default_val("2,-1");
    sum->add_option("--rel-tol", o.rel_tol, "residual tolerance")->default_val(kRelationTol);
    add_config_flags(sum, o);
  }

  auto* diff = app.add_subcommand("check-diff", "differential formula by finite differences");
  {
    Options& o = opts[kDiff];
    diff->add_option("--weight-max", o.weight_max, "largest word weight")->default_val(4);
    diff->add_option("--z", o.z_text, "z points")->default_val("2,-1,3+2i");
    diff->add_option("--step", o.h, "finite-difference step")->default_val(kFiniteDifferenceStep);
    diff->add_option("--rel-tol", o.rel_tol, "residual tolerance")->default_val(kDifferentialTol);
    add_config_flags(diff, o);
  }

  auto* broadhurst = app.add_subcommand("check-broadhurst", "duality relations at z = -1");
  {
    Options& o = opts[kBroadhurst];
    broadhurst->add_option("--weight-max", o.weight_max, "largest word weight")->default_val(5);
    broadhurst->add_option("--rel-tol", o.rel_tol, "residual tolerance")->default_val(kRelationTol);
    add_config_flags(broadhurst, o);
  }

  auto* mzv = app.add_subcommand("check-mzv", "MZV duality and sum formula by series");
  {
    Options& o = opts[kMzv];
    mzv->add_option("--k-max", o.k_max, "largest weight")->default_val(8);
    mzv->add_option("--rel-tol", o.rel_tol, "residual tolerance")->default_val(kSeriesTol);
    add_config_flags(mzv, o);
  }

  auto* enumerate = app.add_subcommand("enumerate", "list convergent words of a weight");
  enumerate->add_option("--weight", opts[kEnumerate].weight, "word weight")->required();

  auto* sweep = app.add_subcommand("sweep", "run the full acceptance suite");
  add_config_flags(sweep, opts[kSweep]);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::size_t active = 0;
  for (auto* cmd : {eval, duality, sum, diff, broadhurst, mzv, enumerate, sweep}) {
    if (cmd->parsed()) break;
    ++active;
  }
  const Options& o = opts[active];

  try {
    o.cfg.validate();
  } catch (const DomainError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::vector<ComplexPoint> zs;
    auto points = [&] { return parse_complex_list(o.z_text); };

    if (eval->parsed()) return cmd_eval(o, out, err);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out, err);

    std::vector<RelationReport> reports;
    if (duality->parsed()) {
      zs = points();
      for (const Word& w : convergent_up_to(o.weight_max)) {
        reports.push_back(check_relation(duality_relation(w), zs, o.rel_tol, o.cfg,
                                         "duality/w=" + format_word(w)));
      }
    } else if (sum->parsed()) {
      zs = points();
      for (int k = 2; k <= o.k_max; ++k) {
        for (int r = 1; r <= k; ++r) {
          auto rep = check_relation(sum_relation(k, r), zs, o.rel_tol, o.cfg,
                                    fmt::format("sum/k={},r={}", k, r));
          rep.parameters.emplace_back("k", std::to_string(k));
          rep.parameters.emplace_back("r", std::to_string(r));
          reports.push_back(std::move(rep));
        }
      }
    } else if (diff->parsed()) {
      zs = points();
      for (const Word& w : convergent_up_to(o.weight_max)) {
        reports.push_back(differential_check(w, zs, o.cfg, o.h, o.rel_tol));
      }
    } else if (broadhurst->parsed()) {
      for (const Word& w : convergent_up_to(o.weight_max)) {
        auto [x, z] = broadhurst_relation(w);
        reports.push_back(check_relation(x, std::vector{z}, o.rel_tol, o.cfg,
                                         "broadhurst/w=" + format_word(w)));
      }
    } else if (mzv->parsed()) {
      for (std::size_t n = 2; n <= static_cast<std::size_t>(std::max(o.k_max, 0)); ++n) {
        for (const Word& w : enumerate_convergent(n)) {
          if (!w.contains(Letter::Z)) reports.push_back(mzv_duality_check(w, o.cfg, o.rel_tol));
        }
      }
      for (int k = 2; k <= o.k_max; ++k) {
        for (int r = 1; r < k; ++r) reports.push_back(sum_formula_mzv_check(k, r, o.cfg, o.rel_tol));
      }
    }
    return emit_reports(std::move(reports), o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EvaluationRefused& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const DomainError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  }
}

}  // namespace hyperlog
