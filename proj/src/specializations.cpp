#include "geode/specializations.hpp"

#include "geode/errors.hpp"
#include "geode/solver.hpp"

namespace geode {

namespace {

Series univariate_poly(const TruncationContext& ctx, const std::vector<long>& coeffs) {
  Series out(ctx);
  int degree = 0;
  for (long c : coeffs) {
    Monomial mon = Monomial::unit(1);
    mon.t_exp[0] = degree++;
    if (c != 0 && fits_context(mon, ctx)) out.set_coeff(mon, Rational(c));
  }
  return out;
}

Rational univariate_coeff(const Series& s, int degree) {
  Monomial mon = Monomial::unit(1);
  mon.t_exp[0] = degree;
  return s.coeff(mon);
}

/// Drops a factor of x^shift, truncating the window accordingly.
Series shift_down(const Series& s, int shift) {
  const TruncationContext out_ctx{1, s.context().max_degree - shift, 0};
  Series out(out_ctx);
  for (const auto& [mon, c] : s.terms()) {
    if (mon.t_exp[0] < shift) {
      throw error("series is not divisible by x^" + std::to_string(shift));
    }
    Monomial shifted = mon;
    shifted.t_exp[0] -= shift;
    out.set_coeff(shifted, c);
  }
  return out;
}

struct ClosedForm {
  std::vector<long> numerator;  // polynomial added to -sqrt(radicand)
  std::vector<long> radicand;
  std::vector<long> denominator_shifted;  // denominator with x^valuation removed
  int valuation;
};

ClosedForm closed_form_for(SequenceName name) {
  switch (name) {
    case SequenceName::catalan:          // (1 - sqrt(1-4x)) / (2x)
      return {{1}, {1, -4}, {2}, 1};
    case SequenceName::motzkin:          // (1 - x - sqrt(1-2x-3x^2)) / (2x^2)
      return {{1, -1}, {1, -2, -3}, {2}, 2};
    case SequenceName::riordan:          // (1 + x - sqrt(1-2x-3x^2)) / (2x(1+x))
      return {{1, 1}, {1, -2, -3}, {2, 2}, 1};
    case SequenceName::schroeder_large:  // (1 - x - sqrt(1-6x+x^2)) / (2x)
      return {{1, -1}, {1, -6, 1}, {2}, 1};
    case SequenceName::schroeder_small:  // (1 + x - sqrt(1-6x+x^2)) / (4x)
      return {{1, 1}, {1, -6, 1}, {4}, 1};
  }
  throw bounds_error("unknown sequence name");
}

/// The substituted series itself, in the window (1, term_count - 1, 0).
Series specialized_series(SequenceName name, int term_count) {
  const SpecializationRecipe recipe = recipe_for(name);
  const TruncationContext ctx{2, term_count, 0};
  const Series excursions = solve_excursion_gf(ctx);
  const Series base = recipe.base_is_positive_gf ? positive_gf(excursions) : excursions;
  SubstitutionSpec spec;
  spec.variables = {recipe.t1, recipe.t2};
  return substitute(base, spec, term_count - 1);
}

}  // namespace

const char* to_string(SequenceName name) {
  switch (name) {
    case SequenceName::catalan: return "catalan";
    case SequenceName::motzkin: return "motzkin";
    case SequenceName::riordan: return "riordan";
    case SequenceName::schroeder_large: return "schroeder_large";
    case SequenceName::schroeder_small: return "schroeder_small";
  }
  return "?";
}

SequenceName sequence_name_from_string(const std::string& name) {
  for (SequenceName candidate : all_sequence_names()) {
    if (name == to_string(candidate)) return candidate;
  }
  throw parse_error("unknown sequence name: " + name);
}

std::vector<SequenceName> all_sequence_names() {
  return {SequenceName::catalan, SequenceName::motzkin, SequenceName::riordan,
          SequenceName::schroeder_large, SequenceName::schroeder_small};
}

SpecializationRecipe recipe_for(SequenceName name) {
  switch (name) {
    case SequenceName::catalan:
      return {false, {0, 1}, {1, 1}};  // S with t1 -> 0, t2 -> x
    case SequenceName::motzkin:
      return {false, {1, 1}, {1, 2}};  // S with t1 -> x, t2 -> x^2
    case SequenceName::riordan:
      return {true, {1, 1}, {1, 2}};   // H with t1 -> x, t2 -> x^2
    case SequenceName::schroeder_large:
      return {false, {1, 1}, {1, 1}};  // S with t1 -> x, t2 -> x
    case SequenceName::schroeder_small:
      return {true, {1, 1}, {1, 1}};   // H with t1 -> x, t2 -> x
  }
  throw bounds_error("unknown sequence name");
}

SequenceResult specialize_named(SequenceName name, int term_count) {
  if (term_count < 1) throw bounds_error("term count must be at least 1");
  const Series values = specialized_series(name, term_count);
  SequenceResult out{name, {}};
  out.terms.reserve(static_cast<std::size_t>(term_count));
  for (int d = 0; d < term_count; ++d) {
    const Rational c = univariate_coeff(values, d);
    if (!is_integer(c)) {
      throw error(std::string(to_string(name)) + " produced a non-integer coefficient " +
                  rational_to_string(c));
    }
    out.terms.push_back(c.get_num());
  }
  return out;
}

Series closed_form_expand(SequenceName name, int term_count) {
  if (term_count < 1) throw bounds_error("term count must be at least 1");
  const ClosedForm form = closed_form_for(name);
  const int widened = term_count - 1 + form.valuation;
  const TruncationContext wide_ctx{1, widened, 0};
  const Series radicand = univariate_poly(wide_ctx, form.radicand);
  Series numerator = univariate_poly(wide_ctx, form.numerator) -
                     sqrt_univariate(radicand, widened);
  const Series shifted_num = shift_down(numerator, form.valuation);
  const Series shifted_den =
      univariate_poly(shifted_num.context(), form.denominator_shifted);
  return shifted_num * reciprocal(shifted_den);
}

VerificationReport verify_specialization_identities(int term_count) {
  if (term_count < 2) throw bounds_error("term count must be at least 2");
  VerificationReport report;

  for (SequenceName name : all_sequence_names()) {
    const Series substituted = specialized_series(name, term_count);
    const Series closed = closed_form_expand(name, term_count);
    const Series residual = substituted - closed;
    CheckResult check;
    check.name = std::string(to_string(name)) + "-closed-form";
    check.max_degree = term_count - 1;
    check.pass = residual.is_zero();
    check.failing_monomial = leading_monomial(residual);
    report.add(std::move(check));
  }

  const TruncationContext ctx{2, term_count, 0};
  const Series s = solve_excursion_gf(ctx);
  const Series g = geode_gf(s);
  const Series h = positive_gf(s);
  const Series t2 = Series::variable(ctx, 2);

  // the two-variable divisibility G = (H - 1)/t_2, stated as a product
  {
    const Series residual = h - Series::one(ctx) - t2 * g;
    CheckResult check;
    check.name = "positive-shift-identity";
    check.max_degree = term_count;
    check.pass = residual.is_zero();
    check.failing_monomial = leading_monomial(residual);
    report.add(std::move(check));
  }
  {
    const Series residual = g - s * h;
    CheckResult check;
    check.name = "geode-splits";
    check.max_degree = term_count;
    check.pass = residual.is_zero();
    check.failing_monomial = leading_monomial(residual);
    report.add(std::move(check));
  }
  return report;
}

nlohmann::json sequence_to_json(const SequenceResult& result) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Integer& t : result.terms) terms.push_back(t.get_str());
  return nlohmann::json{{"name", to_string(result.name)}, {"terms", terms}};
}

}  // namespace geode
