#include "geode/solver.hpp"

#include <numeric>

#include "geode/errors.hpp"

namespace geode {

namespace {

/// sum_{n=1..m} t_n X^n, with an optional weight of y^{n-1} per summand.
Series step_sum(const Series& x, bool weight_down_steps) {
  const TruncationContext& ctx = x.context();
  Series total = Series::zero(ctx);
  Series x_power = x;                     // X^n
  Series y_power = Series::one(ctx);     // y^{n-1}
  const Series y = Series::y(ctx);
  for (int n = 1; n <= ctx.num_vars; ++n) {
    Series summand = Series::variable(ctx, n) * x_power;
    if (weight_down_steps) summand *= y_power;
    total += summand;
    if (n < ctx.num_vars) {
      x_power *= x;
      if (weight_down_steps) y_power *= y;
    }
  }
  return total;
}

Series solve_fixed_point(const TruncationContext& ctx, bool weight_down_steps) {
  Series current = Series::one(ctx);
  for (int i = 0; i <= ctx.max_degree; ++i) {
    Series next = Series::one(ctx) + step_sum(current, weight_down_steps);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

CheckResult residual_check(std::string name, const Series& residual) {
  CheckResult check;
  check.name = std::move(name);
  check.max_degree = residual.context().max_degree;
  check.pass = residual.is_zero();
  check.failing_monomial = leading_monomial(residual);
  return check;
}

CheckResult coefficient_check(std::string name, const Series& s,
                              bool (*acceptable)(const Rational&)) {
  CheckResult check;
  check.name = std::move(name);
  check.max_degree = s.context().max_degree;
  for (const auto& [mon, c] : s.terms()) {
    if (!acceptable(c)) {
      check.pass = false;
      check.failing_monomial = mon;
      break;
    }
  }
  return check;
}

}  // namespace

Series variable_sum(const TruncationContext& ctx) {
  Series total = Series::zero(ctx);
  for (int n = 1; n <= ctx.num_vars; ++n) total += Series::variable(ctx, n);
  return total;
}

Series solve_excursion_gf(const TruncationContext& ctx) {
  if (ctx.max_y_degree != 0) {
    throw context_error("excursion series lives in a y-free context");
  }
  return solve_fixed_point(ctx, false);
}

Series geode_gf(const Series& excursion_gf) {
  const TruncationContext& ctx = excursion_gf.context();
  // 1 + S + ... + S^{n-1} attached to t_n, summed over n = 1..m
  std::vector<Series> powers{Series::one(ctx)};
  for (int j = 1; j + 1 <= ctx.num_vars; ++j) powers.push_back(powers.back() * excursion_gf);
  Series weighted = Series::zero(ctx);
  Series partial = Series::zero(ctx);
  for (int n = 1; n <= ctx.num_vars; ++n) {
    partial += powers[static_cast<std::size_t>(n - 1)];
    weighted += Series::variable(ctx, n) * partial;
  }
  return reciprocal(Series::one(ctx) - weighted);
}

Series positive_gf(const Series& excursion_gf) {
  const TruncationContext& ctx = excursion_gf.context();
  // S + ... + S^{n-1} attached to t_n, summed over n = 2..m
  std::vector<Series> powers{Series::one(ctx)};
  for (int j = 1; j + 1 <= ctx.num_vars; ++j) powers.push_back(powers.back() * excursion_gf);
  Series weighted = Series::zero(ctx);
  Series partial = Series::zero(ctx);
  for (int n = 2; n <= ctx.num_vars; ++n) {
    partial += powers[static_cast<std::size_t>(n - 1)];
    weighted += Series::variable(ctx, n) * partial;
  }
  return reciprocal(Series::one(ctx) - weighted);
}

GeodeBundle solve_geode(const TruncationContext& ctx) {
  Series s = solve_excursion_gf(ctx);
  Series g = geode_gf(s);
  Series h = positive_gf(s);
  return GeodeBundle{ctx, std::move(s), variable_sum(ctx), std::move(g), std::move(h)};
}

VerificationReport verify_core_identities(const GeodeBundle& bundle) {
  const TruncationContext& ctx = bundle.context;
  const Series one = Series::one(ctx);
  VerificationReport report;

  // S (1 - sum_n t_n S^{n-1}) = 1: the arch decomposition of excursions
  std::vector<Series> powers{one};
  for (int j = 1; j + 1 <= ctx.num_vars; ++j) powers.push_back(powers.back() * bundle.excursions);
  Series arch_sum = Series::zero(ctx);
  for (int n = 1; n <= ctx.num_vars; ++n) {
    arch_sum += Series::variable(ctx, n) * powers[static_cast<std::size_t>(n - 1)];
  }
  report.add(residual_check("excursion-arch-product",
                            bundle.excursions * (one - arch_sum) - one));

  report.add(residual_check("excursion-positive-product",
                            bundle.excursions * (one - bundle.positive * bundle.var_sum) - one));

  report.add(residual_check("geode-divides",
                            bundle.excursions - one - bundle.geode * bundle.var_sum));

  report.add(residual_check("geode-splits",
                            bundle.geode - bundle.excursions * bundle.positive));

  report.add(residual_check("inverse-difference",
                            reciprocal(bundle.positive) - reciprocal(bundle.geode) -
                                bundle.var_sum));

  for (const auto& [name, series] :
       std::initializer_list<std::pair<const char*, const Series*>>{
           {"excursions", &bundle.excursions},
           {"geode", &bundle.geode},
           {"positive", &bundle.positive}}) {
    report.add(coefficient_check(std::string(name) + "-integral", *series, &is_integer));
    report.add(coefficient_check(std::string(name) + "-nonnegative", *series, &is_nonnegative));
  }
  return report;
}

WienerHopfBundle solve_wiener_hopf(const TruncationContext& ctx) {
  const int needed = (ctx.num_vars - 1) * ctx.max_degree;
  if (ctx.max_y_degree < needed) {
    throw insufficient_precision_error(
        "max_y_degree " + std::to_string(ctx.max_y_degree) + " below (m-1)*D = " +
        std::to_string(needed));
  }
  Series s_y = solve_fixed_point(ctx, true);
  const Series y = Series::y(ctx);
  Series all_paths = reciprocal(Series::one(ctx) - y - variable_sum(ctx));
  Series n_y = all_paths * (Series::one(ctx) - y * s_y);
  return WienerHopfBundle{ctx, std::move(s_y), std::move(n_y)};
}

VerificationReport verify_wiener_hopf(const WienerHopfBundle& bundle) {
  const TruncationContext& ctx = bundle.context;
  const Series one = Series::one(ctx);
  const Series y = Series::y(ctx);
  VerificationReport report;

  report.add(residual_check("wiener-hopf-identity",
                            (one - y * bundle.excursions_y) -
                                (one - y - variable_sum(ctx)) * bundle.nonnegative_y));

  const TruncationContext flat{ctx.num_vars, ctx.max_degree, 0};
  const Series s = solve_excursion_gf(flat);
  report.add(residual_check("down-weight-one-excursions",
                            substitute_y(bundle.excursions_y, 1) - s));
  report.add(residual_check("down-weight-one-geode",
                            substitute_y(bundle.nonnegative_y, 1) - geode_gf(s)));
  return report;
}

namespace {

/// Substituting t_n -> c_n x is a ring map, so the images of S, G, H solve
/// the substituted equations; work directly in the univariate window.
struct LineImages {
  Series excursions;  // S(c x)
  TruncationContext ctx;
};

LineImages excursion_gf_on_line(const std::vector<Rational>& coefficients, int degree_bound) {
  if (degree_bound < 0) throw bounds_error("negative degree bound");
  const TruncationContext ctx{1, degree_bound, 0};
  const Series x = Series::variable(ctx, 1);
  Series current = Series::one(ctx);
  for (int i = 0; i <= degree_bound; ++i) {
    Series sum = Series::one(ctx);
    Series power = current;  // X^n
    for (std::size_t n = 0; n < coefficients.size(); ++n) {
      if (coefficients[n] != 0) sum += x * power * coefficients[n];
      if (n + 1 < coefficients.size()) power *= current;
    }
    if (sum == current) break;
    current = std::move(sum);
  }
  return LineImages{std::move(current), ctx};
}

}  // namespace

Series geode_gf_on_line(const std::vector<Rational>& coefficients, int degree_bound) {
  auto [s, ctx] = excursion_gf_on_line(coefficients, degree_bound);
  const Series x = Series::variable(ctx, 1);
  Series weighted = Series::zero(ctx);
  Series partial = Series::zero(ctx);
  Series power = Series::one(ctx);
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    partial += power;  // 1 + S + ... + S^n
    if (coefficients[n] != 0) weighted += x * partial * coefficients[n];
    if (n + 1 < coefficients.size()) power *= s;
  }
  return reciprocal(Series::one(ctx) - weighted);
}

Series positive_gf_on_line(const std::vector<Rational>& coefficients, int degree_bound) {
  auto [s, ctx] = excursion_gf_on_line(coefficients, degree_bound);
  const Series x = Series::variable(ctx, 1);
  Series weighted = Series::zero(ctx);
  Series partial = Series::zero(ctx);
  Series power = s;
  for (std::size_t n = 1; n < coefficients.size(); ++n) {
    partial += power;  // S + ... + S^n
    if (coefficients[n] != 0) weighted += x * partial * coefficients[n];
    if (n + 1 < coefficients.size()) power *= s;
  }
  return reciprocal(Series::one(ctx) - weighted);
}

ZeroSumEvaluation evaluate_geode_at_zero_sum(const std::vector<Rational>& coefficients,
                                             int degree_bound) {
  Rational sum(0);
  for (const Rational& c : coefficients) sum += c;
  if (sum != 0) {
    throw zero_sum_error("coefficients sum to " + rational_to_string(sum) + ", not zero");
  }

  ZeroSumEvaluation out{geode_gf_on_line(coefficients, degree_bound),
                        Series::zero(TruncationContext{1, degree_bound, 0}), false};

  Rational slope(0);
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    slope += Rational(static_cast<long>(n + 1)) * coefficients[n];
  }
  const TruncationContext ctx{1, degree_bound, 0};
  out.closed_form = reciprocal(Series::one(ctx) - Series::variable(ctx, 1) * slope);
  out.agree = (out.direct == out.closed_form);
  return out;
}

}  // namespace geode
