#include "geode/series.hpp"

#include <algorithm>
#include <sstream>

#include "geode/errors.hpp"

namespace geode {

namespace {

void require_same_context(const Series& a, const Series& b) {
  if (a.context() != b.context()) {
    throw context_error("series combined across different truncation contexts");
  }
}

}  // namespace

Series Series::constant(const TruncationContext& ctx, Rational value) {
  Series out(ctx);
  if (value != 0) out.set_coeff(Monomial::unit(ctx.num_vars), std::move(value));
  return out;
}

Series Series::variable(const TruncationContext& ctx, int n) {
  if (n < 1 || n > ctx.num_vars) {
    throw bounds_error("variable index " + std::to_string(n) + " outside t_1..t_" +
                       std::to_string(ctx.num_vars));
  }
  Series out(ctx);
  Monomial mon = Monomial::var(ctx.num_vars, n);
  if (fits_context(mon, ctx)) out.set_coeff(mon, 1);
  return out;  // truncates to zero when the window has max_degree = 0
}

Series Series::y(const TruncationContext& ctx) {
  Series out(ctx);
  Monomial mon = Monomial::y(ctx.num_vars);
  if (fits_context(mon, ctx)) out.set_coeff(mon, 1);
  return out;
}

Rational Series::coeff(const Monomial& mon) const {
  if (!fits_context(mon, ctx_)) {
    throw bounds_error("monomial " + monomial_to_string(mon) + " outside context");
  }
  auto it = terms_.find(mon);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Series::set_coeff(const Monomial& mon, Rational value) {
  if (!fits_context(mon, ctx_)) {
    throw bounds_error("monomial " + monomial_to_string(mon) + " outside context");
  }
  if (value == 0) {
    terms_.erase(mon);
  } else {
    terms_.insert_or_assign(mon, std::move(value));
  }
}

void Series::add_to_coeff(const Monomial& mon, const Rational& value) {
  if (value == 0) return;
  if (!fits_context(mon, ctx_)) {
    throw bounds_error("monomial " + monomial_to_string(mon) + " outside context");
  }
  auto [it, inserted] = terms_.try_emplace(mon, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Series Series::operator-() const {
  Series out(ctx_);
  for (const auto& [mon, c] : terms_) out.terms_.emplace(mon, Rational(-c));
  return out;
}

Series Series::operator+(const Series& other) const {
  require_same_context(*this, other);
  Series out = *this;
  for (const auto& [mon, c] : other.terms_) out.add_to_coeff(mon, c);
  return out;
}

Series Series::operator-(const Series& other) const {
  require_same_context(*this, other);
  Series out = *this;
  for (const auto& [mon, c] : other.terms_) out.add_to_coeff(mon, Rational(-c));
  return out;
}

Series Series::operator*(const Series& other) const {
  require_same_context(*this, other);
  Series out(ctx_);
  Rational product;
  for (const auto& [amon, acoeff] : terms_) {
    const int adeg = amon.t_degree();
    for (const auto& [bmon, bcoeff] : other.terms_) {
      // terms iterate in graded order, so later b-terms only get larger
      if (adeg + bmon.t_degree() > ctx_.max_degree) break;
      if (amon.y_exp + bmon.y_exp > ctx_.max_y_degree) continue;
      product = acoeff * bcoeff;
      out.add_to_coeff(amon * bmon, product);
    }
  }
  return out;
}

Series operator*(const Series& s, const Rational& factor) {
  Series out(s.context());
  if (factor == 0) return out;
  for (const auto& [mon, c] : s.terms()) out.set_coeff(mon, Rational(c * factor));
  return out;
}

Series operator*(const Rational& factor, const Series& s) { return s * factor; }

Series reciprocal(const Series& s) {
  const TruncationContext& ctx = s.context();
  const Monomial unit = Monomial::unit(ctx.num_vars);
  const Rational lead = s.coeff(unit);
  if (lead == 0) {
    throw not_invertible_error("reciprocal of a series with zero constant term");
  }
  // Write s = lead * (1 - v) with v of total degree >= 1 in every term; then
  // 1/s = (1/lead) * (1 + v + v^2 + ...) which terminates inside the window.
  const Rational lead_inv = Rational(1) / lead;
  Series v = Series::one(ctx) - s * lead_inv;
  Series out = Series::one(ctx);
  const int passes = ctx.max_degree + ctx.max_y_degree;
  for (int i = 0; i < passes; ++i) {
    out = Series::one(ctx) + v * out;
  }
  return out * lead_inv;
}

Series pow(const Series& s, int exponent) {
  Series out = Series::one(s.context());
  for (int i = 0; i < exponent; ++i) out *= s;
  return out;
}

Series substitute(const Series& s, const SubstitutionSpec& spec, int degree_bound) {
  if (degree_bound < 0) throw bounds_error("negative substitution degree bound");
  const TruncationContext& src = s.context();
  for (const auto& var : spec.variables) {
    if (var.exponent < 1) throw bounds_error("substitution exponent must be positive");
  }
  if (src.max_y_degree > 0 && !spec.y_value.has_value()) {
    throw context_error("series keeps y terms but no y value was supplied");
  }
  // Determinability: discarded source terms (t-degree > D) must land strictly
  // above degree_bound, guaranteed by min e_n * D >= N over live variables.
  int min_exp = 0;
  for (const auto& var : spec.variables) {
    if (var.coefficient == 0) continue;
    if (min_exp == 0 || var.exponent < min_exp) min_exp = var.exponent;
  }
  if (min_exp > 0 && min_exp * src.max_degree < degree_bound) {
    throw insufficient_precision_error(
        "source context degree " + std::to_string(src.max_degree) +
        " cannot determine substitution to degree " + std::to_string(degree_bound));
  }

  const TruncationContext out_ctx{1, degree_bound, 0};
  Series out(out_ctx);
  for (const auto& [mon, c] : s.terms()) {
    long long x_degree = 0;
    Rational value = c;
    bool vanished = false;
    for (std::size_t k = 0; k < mon.t_exp.size() && !vanished; ++k) {
      const int e = mon.t_exp[k];
      if (e == 0) continue;
      if (k >= spec.variables.size() || spec.variables[k].coefficient == 0) {
        vanished = true;
        break;
      }
      x_degree += static_cast<long long>(e) * spec.variables[k].exponent;
      value *= rational_pow(spec.variables[k].coefficient, static_cast<unsigned>(e));
    }
    if (vanished || x_degree > degree_bound) continue;
    if (mon.y_exp > 0) {
      value *= rational_pow(*spec.y_value, static_cast<unsigned>(mon.y_exp));
    }
    Monomial target = Monomial::unit(1);
    target.t_exp[0] = static_cast<int>(x_degree);
    out.add_to_coeff(target, value);
  }
  return out;
}

Series substitute_y(const Series& s, const Rational& value) {
  const TruncationContext out_ctx{s.context().num_vars, s.context().max_degree, 0};
  Series out(out_ctx);
  for (const auto& [mon, c] : s.terms()) {
    Monomial collapsed = mon;
    collapsed.y_exp = 0;
    out.add_to_coeff(collapsed, Rational(c * rational_pow(value, static_cast<unsigned>(mon.y_exp))));
  }
  return out;
}

Series sqrt_univariate(const Series& s, int degree_bound) {
  const TruncationContext& src = s.context();
  if (src.num_vars != 1 || src.max_y_degree != 0) {
    throw context_error("square root requires a univariate y-free series");
  }
  if (degree_bound < 0) throw bounds_error("negative square-root degree bound");
  if (src.max_degree < degree_bound) {
    throw insufficient_precision_error("series context too coarse for requested square root");
  }

  auto coeff_at = [&](int d) {
    Monomial mon = Monomial::unit(1);
    mon.t_exp[0] = d;
    return s.coeff(mon);
  };
  const Rational c0 = coeff_at(0);
  if (c0 == 0) throw no_square_root_error("square root of a series with zero constant term");
  const auto root0 = rational_sqrt(c0);
  if (!root0.has_value()) {
    throw no_square_root_error("constant term " + rational_to_string(c0) +
                               " is not the square of a rational");
  }

  std::vector<Rational> r(static_cast<std::size_t>(degree_bound) + 1, Rational(0));
  r[0] = *root0;
  const Rational two_r0 = Rational(2) * r[0];
  for (int d = 1; d <= degree_bound; ++d) {
    Rational acc = coeff_at(d);
    for (int i = 1; i < d; ++i) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(d - i)];
    r[static_cast<std::size_t>(d)] = acc / two_r0;
  }

  const TruncationContext out_ctx{1, degree_bound, 0};
  Series out(out_ctx);
  for (int d = 0; d <= degree_bound; ++d) {
    Monomial mon = Monomial::unit(1);
    mon.t_exp[0] = d;
    out.set_coeff(mon, r[static_cast<std::size_t>(d)]);
  }
  return out;
}

bool all_coefficients_integral(const Series& s) {
  return std::all_of(s.terms().begin(), s.terms().end(),
                     [](const auto& term) { return is_integer(term.second); });
}

bool all_coefficients_nonnegative(const Series& s) {
  return std::all_of(s.terms().begin(), s.terms().end(),
                     [](const auto& term) { return is_nonnegative(term.second); });
}

std::optional<Monomial> leading_monomial(const Series& s) {
  if (s.is_zero()) return std::nullopt;
  return s.terms().begin()->first;
}

nlohmann::json series_to_json(const Series& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mon, c] : s.terms()) {
    terms.push_back(nlohmann::json{
        {"t", mon.t_exp}, {"y", mon.y_exp}, {"coeff", rational_to_string(c)}});
  }
  return nlohmann::json{{"context",
                         {{"m", s.context().num_vars},
                          {"degree", s.context().max_degree},
                          {"y_degree", s.context().max_y_degree}}},
                        {"terms", terms}};
}

Series series_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("context") || !doc.contains("terms")) {
    throw parse_error("series document must carry context and terms");
  }
  const auto& ctx_doc = doc.at("context");
  TruncationContext ctx{ctx_doc.at("m").get<int>(), ctx_doc.at("degree").get<int>(),
                        ctx_doc.at("y_degree").get<int>()};
  if (ctx.num_vars < 1 || ctx.max_degree < 0 || ctx.max_y_degree < 0) {
    throw parse_error("malformed truncation context");
  }
  Series out(ctx);
  for (const auto& term : doc.at("terms")) {
    Monomial mon{term.at("t").get<std::vector<int>>(), term.at("y").get<int>()};
    if (!fits_context(mon, ctx)) {
      throw parse_error("term " + monomial_to_string(mon) + " outside declared context");
    }
    Rational c = rational_from_string(term.at("coeff").get<std::string>());
    if (c == 0) throw parse_error("explicit zero coefficient in series document");
    if (out.terms().count(mon) > 0) {
      throw parse_error("duplicate monomial " + monomial_to_string(mon));
    }
    out.set_coeff(mon, std::move(c));
  }
  return out;
}

std::string series_to_table(const Series& s) {
  if (s.is_zero()) return "0\n";
  std::ostringstream out;
  for (const auto& [mon, c] : s.terms()) {
    out << monomial_to_string(mon) << "  " << rational_to_string(c) << "\n";
  }
  return out.str();
}

}  // namespace geode
