#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "geode/errors.hpp"
#include "geode/paths.hpp"
#include "geode/report.hpp"
#include "geode/series.hpp"
#include "geode/solver.hpp"
#include "geode/specializations.hpp"

namespace {

using geode::Path;
using geode::PathClass;
using geode::Rational;
using geode::Series;
using geode::TruncationContext;
using geode::VerificationReport;

void emit_json(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<std::string> univariate_terms(const Series& s) {
  std::vector<std::string> out;
  for (int d = 0; d <= s.context().max_degree; ++d) {
    geode::Monomial mon = geode::Monomial::unit(1);
    mon.t_exp[0] = d;
    out.push_back(geode::rational_to_string(s.coeff(mon)));
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  if (text.empty()) return out;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string token =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    const std::size_t first = token.find_first_not_of(" \t");
    const std::size_t last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw geode::parse_error("empty entry in list: " + text);
    out.push_back(geode::rational_from_string(token.substr(first, last - first + 1)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int report_exit(const VerificationReport& report, const std::string& format) {
  if (format == "json") {
    emit_json(geode::report_to_json(report));
  } else {
    std::cout << geode::report_to_table(report);
  }
  return report.all_pass() ? 0 : 1;
}

struct ExpandOptions {
  std::string series = "S";
  int m = 3;
  int degree = 4;
  int y_degree = -1;  // -1: default (m-1)*degree for Sy/Ny
  std::string format = "table";
};

int run_expand(const ExpandOptions& opt) {
  const bool weighted = (opt.series == "Sy" || opt.series == "Ny");
  if (!weighted && opt.y_degree >= 0) {
    std::cerr << "error: --ydegree applies only to the y-weighted series Sy and Ny\n";
    return 2;
  }
  Series result = Series::zero(TruncationContext{1, 0, 0});
  if (weighted) {
    const int dy = opt.y_degree >= 0 ? opt.y_degree : (opt.m - 1) * opt.degree;
    const TruncationContext ctx{opt.m, opt.degree, dy};
    const geode::WienerHopfBundle bundle = geode::solve_wiener_hopf(ctx);
    result = (opt.series == "Sy") ? bundle.excursions_y : bundle.nonnegative_y;
  } else {
    const TruncationContext ctx{opt.m, opt.degree, 0};
    const Series s = geode::solve_excursion_gf(ctx);
    if (opt.series == "S") {
      result = s;
    } else if (opt.series == "G") {
      result = geode::geode_gf(s);
    } else {
      result = geode::positive_gf(s);
    }
  }
  if (opt.format == "json") {
    emit_json(geode::series_to_json(result));
  } else {
    std::cout << geode::series_to_table(result);
  }
  return 0;
}

struct VerifyOptions {
  std::string suite = "core";
  int m = 3;
  int degree = 4;
  bool degree_given = false;
  std::string format = "table";
};

int run_verify(const VerifyOptions& opt) {
  VerificationReport report;
  const TruncationContext ctx{opt.m, opt.degree, 0};
  if (opt.suite == "core" || opt.suite == "all") {
    report.merge(geode::verify_core_identities(geode::solve_geode(ctx)));
  }
  if (opt.suite == "primes" || opt.suite == "all") {
    const Series s = geode::solve_excursion_gf(ctx);
    for (PathClass c : {PathClass::arch, PathClass::prime_nonnegative,
                        PathClass::prime_positive}) {
      report.merge(geode::verify_prime_gf(c, ctx, s));
    }
  }
  if (opt.suite == "wienerhopf" || opt.suite == "all") {
    const TruncationContext wh_ctx{opt.m, opt.degree, (opt.m - 1) * opt.degree};
    report.merge(geode::verify_wiener_hopf(geode::solve_wiener_hopf(wh_ctx)));
  }
  if (opt.suite == "special" || opt.suite == "all") {
    const int terms = opt.degree_given ? opt.degree : 12;
    report.merge(geode::verify_specialization_identities(terms));
  }
  return report_exit(report, opt.format);
}

struct PathsOptions {
  std::string path_class = "nonnegative";
  std::string ups;
  std::string downs = "all";
  std::string path;
  std::string format = "table";
};

std::optional<int> parse_down_count(const std::string& text) {
  if (text == "all") return std::nullopt;
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw geode::parse_error("--downs expects an integer or 'all'");
  }
}

int run_paths_count(const PathsOptions& opt, bool list_paths) {
  const PathClass cls = geode::path_class_from_string(opt.path_class);
  const std::vector<int> ups = Path::parse(opt.ups).steps();
  const std::vector<Path> paths = geode::enumerate_class(cls, ups, parse_down_count(opt.downs));
  if (opt.format == "json") {
    nlohmann::json doc{{"count", paths.size()}};
    if (list_paths) {
      nlohmann::json items = nlohmann::json::array();
      for (const Path& p : paths) items.push_back(p.to_string());
      doc["paths"] = items;
    }
    emit_json(doc);
  } else {
    if (list_paths) {
      for (const Path& p : paths) std::cout << p.to_string() << "\n";
    }
    std::cout << paths.size() << "\n";
  }
  return 0;
}

int run_paths_factor(const PathsOptions& opt) {
  const PathClass cls = geode::path_class_from_string(opt.path_class);
  const Path path = Path::parse(opt.path);
  if (cls == PathClass::reverse_nonnegative) {
    const std::vector<Path> excursions = geode::factor_reverse(path, false);
    if (opt.format == "json") {
      nlohmann::json items = nlohmann::json::array();
      for (const Path& p : excursions) items.push_back(p.to_string());
      emit_json(nlohmann::json{{"excursions", items},
                               {"down_steps", excursions.size() - 1}});
    } else {
      for (const Path& p : excursions) std::cout << p.to_string() << "\n";
    }
    return 0;
  }
  const std::vector<Path> factors = geode::prime_factorize(path, cls);
  if (opt.format == "json") {
    nlohmann::json items = nlohmann::json::array();
    for (const Path& p : factors) items.push_back(p.to_string());
    emit_json(nlohmann::json{{"factors", items}});
  } else {
    for (const Path& p : factors) std::cout << p.to_string() << "\n";
  }
  return 0;
}

int run_paths_wh(const PathsOptions& opt) {
  const geode::WienerHopfParts parts = geode::wiener_hopf_factor(Path::parse(opt.path));
  if (opt.format == "json") {
    emit_json(nlohmann::json{{"reverse_positive", parts.reverse_positive.to_string()},
                             {"excursion", parts.excursion.to_string()},
                             {"positive", parts.positive.to_string()}});
  } else {
    std::cout << "reverse_positive  " << parts.reverse_positive.to_string() << "\n"
              << "excursion         " << parts.excursion.to_string() << "\n"
              << "positive          " << parts.positive.to_string() << "\n";
  }
  return 0;
}

struct SpecialOptions {
  std::string name = "catalan";
  int terms = 12;
  std::string format = "table";
};

int run_special(const SpecialOptions& opt) {
  const geode::SequenceResult result =
      geode::specialize_named(geode::sequence_name_from_string(opt.name), opt.terms);
  if (opt.format == "json") {
    emit_json(geode::sequence_to_json(result));
  } else {
    for (const geode::Integer& t : result.terms) std::cout << t.get_str() << "\n";
  }
  return 0;
}

struct ConjectureOptions {
  int k = 0;
  std::string coeffs;
  int degree = 4;
  int samples = 0;
  unsigned long seed = 1;
  std::string format = "table";
};

bool random_zero_sum_samples_pass(int samples, unsigned long seed, int degree) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> m_dist(2, 4);
  std::uniform_int_distribution<int> num_dist(-5, 5);
  std::uniform_int_distribution<int> den_dist(1, 4);
  for (int i = 0; i < samples; ++i) {
    const int m = m_dist(rng);
    std::vector<Rational> coeffs;
    Rational total(0);
    for (int n = 0; n + 1 < m; ++n) {
      Rational value(num_dist(rng), den_dist(rng));
      value.canonicalize();
      total += value;
      coeffs.push_back(std::move(value));
    }
    coeffs.push_back(Rational(-total));
    const geode::ZeroSumEvaluation eval = geode::evaluate_geode_at_zero_sum(coeffs, degree);
    const bool positive_matches =
        geode::positive_gf_on_line(coeffs, degree) == eval.direct;
    if (!eval.agree || !positive_matches) return false;
  }
  return true;
}

int run_conjecture(const ConjectureOptions& opt) {
  std::vector<Rational> coeffs;
  if (opt.k > 0) {
    coeffs.push_back(0);
    for (int i = 0; i < opt.k; ++i) {
      coeffs.push_back(-1);
      coeffs.push_back(1);
    }
  } else {
    coeffs = parse_rational_list(opt.coeffs);
    if (coeffs.empty()) {
      std::cerr << "error: pass --k K or --coeffs c1,...,cm\n";
      return 2;
    }
  }
  const geode::ZeroSumEvaluation eval = geode::evaluate_geode_at_zero_sum(coeffs, opt.degree);
  bool pass = eval.agree;
  std::optional<bool> samples_pass;
  if (opt.samples > 0) {
    samples_pass = random_zero_sum_samples_pass(opt.samples, opt.seed, opt.degree);
    pass = pass && *samples_pass;
  }
  if (opt.format == "json") {
    nlohmann::json doc{{"degree", opt.degree},
                       {"terms", univariate_terms(eval.direct)},
                       {"closed_form", univariate_terms(eval.closed_form)},
                       {"agree", eval.agree}};
    if (samples_pass.has_value()) {
      doc["samples"] = opt.samples;
      doc["samples_pass"] = *samples_pass;
    }
    emit_json(doc);
  } else {
    for (const std::string& t : univariate_terms(eval.direct)) std::cout << t << "\n";
    std::cout << "agree " << (eval.agree ? "yes" : "no") << "\n";
    if (samples_pass.has_value()) {
      std::cout << "samples " << (*samples_pass ? "pass" : "fail") << "\n";
    }
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for the Geode series and its lattice-path models"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"json", "table"});

  ExpandOptions expand;
  CLI::App* expand_cmd = app.add_subcommand("expand", "Expand S, G, H, Sy, or Ny");
  expand_cmd->add_option("--series", expand.series, "One of S, G, H, Sy, Ny")
      ->check(CLI::IsMember({"S", "G", "H", "Sy", "Ny"}));
  expand_cmd->add_option("--m", expand.m, "Number of variables")->check(CLI::PositiveNumber);
  expand_cmd->add_option("--degree", expand.degree, "Truncation degree")
      ->check(CLI::NonNegativeNumber);
  expand_cmd->add_option("--ydegree", expand.y_degree, "y-degree bound for Sy/Ny");
  expand_cmd->add_option("--format", expand.format, "json or table")->check(format_check);

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run identity verification suites");
  verify_cmd->add_option("--suite", verify.suite, "core, primes, wienerhopf, special, or all")
      ->check(CLI::IsMember({"core", "primes", "wienerhopf", "special", "all"}));
  verify_cmd->add_option("--m", verify.m, "Number of variables")->check(CLI::PositiveNumber);
  CLI::Option* verify_degree =
      verify_cmd->add_option("--degree", verify.degree, "Truncation degree")
          ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--format", verify.format, "json or table")->check(format_check);

  PathsOptions paths;
  CLI::App* paths_cmd = app.add_subcommand("paths", "Enumerate, classify, and factor paths");
  paths_cmd->require_subcommand(1);
  CLI::App* count_cmd = paths_cmd->add_subcommand("count", "Count paths in a class");
  CLI::App* list_cmd = paths_cmd->add_subcommand("list", "List paths in a class");
  for (CLI::App* cmd : {count_cmd, list_cmd}) {
    cmd->add_option("--class", paths.path_class, "Path class");
    cmd->add_option("--ups", paths.ups, "Up-step multiset, e.g. 0,1,1");
    cmd->add_option("--downs", paths.downs, "Down-step count or 'all'");
    cmd->add_option("--format", paths.format, "json or table")->check(format_check);
  }
  CLI::App* factor_cmd = paths_cmd->add_subcommand("factor", "Factor a path in its class monoid");
  factor_cmd->add_option("--class", paths.path_class, "Path class");
  factor_cmd->add_option("--path", paths.path, "Path literal, e.g. 2,-1,-1")->required();
  factor_cmd->add_option("--format", paths.format, "json or table")->check(format_check);
  CLI::App* wh_cmd = paths_cmd->add_subcommand("wh", "Wiener-Hopf factorization");
  wh_cmd->add_option("--path", paths.path, "Path literal")->required();
  wh_cmd->add_option("--format", paths.format, "json or table")->check(format_check);

  SpecialOptions special;
  CLI::App* special_cmd = app.add_subcommand("special", "Classical sequence specializations");
  special_cmd->add_option("--name", special.name, "Sequence name")
      ->check(CLI::IsMember({"catalan", "motzkin", "riordan", "schroeder_large",
                             "schroeder_small"}));
  special_cmd->add_option("--terms", special.terms, "Number of terms")->check(CLI::PositiveNumber);
  special_cmd->add_option("--format", special.format, "json or table")->check(format_check);

  ConjectureOptions conjecture;
  CLI::App* conjecture_cmd =
      app.add_subcommand("conjecture", "Evaluate G along a zero-sum direction");
  CLI::Option* k_opt =
      conjecture_cmd->add_option("--k", conjecture.k, "Use coefficients 0,-1,1,...,-1,1")
          ->check(CLI::PositiveNumber);
  conjecture_cmd->add_option("--coeffs", conjecture.coeffs, "Explicit rational coefficients")
      ->excludes(k_opt);
  conjecture_cmd->add_option("--degree", conjecture.degree, "Expansion degree")
      ->check(CLI::NonNegativeNumber);
  conjecture_cmd->add_option("--samples", conjecture.samples,
                             "Extra random zero-sum directions to check")
      ->check(CLI::NonNegativeNumber);
  conjecture_cmd->add_option("--seed", conjecture.seed, "Seed for --samples");
  conjecture_cmd->add_option("--format", conjecture.format, "json or table")->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(expand_cmd)) return run_expand(expand);
    if (app.got_subcommand(verify_cmd)) {
      verify.degree_given = verify_degree->count() > 0;
      return run_verify(verify);
    }
    if (app.got_subcommand(paths_cmd)) {
      if (paths_cmd->got_subcommand(count_cmd)) return run_paths_count(paths, false);
      if (paths_cmd->got_subcommand(list_cmd)) return run_paths_count(paths, true);
      if (paths_cmd->got_subcommand(factor_cmd)) return run_paths_factor(paths);
      return run_paths_wh(paths);
    }
    if (app.got_subcommand(special_cmd)) return run_special(special);
    return run_conjecture(conjecture);
  } catch (const geode::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
