#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geode/monomial.hpp"
#include "geode/rational.hpp"

#include "json.hpp"

namespace geode {

/// Truncated multivariate formal power series with exact rational
/// coefficients. Immutable value semantics: every operation returns a fresh
/// series and leaves its inputs untouched.
///
/// Invariants: no stored coefficient is zero, every stored monomial fits the
/// context, and iteration over terms() follows the canonical graded-lex order.
class Series {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit Series(TruncationContext ctx) : ctx_(ctx) {}

  static Series zero(const TruncationContext& ctx) { return Series(ctx); }
  static Series one(const TruncationContext& ctx) { return constant(ctx, 1); }
  static Series constant(const TruncationContext& ctx, Rational value);
  /// The variable t_n (n is 1-based, n <= m).
  static Series variable(const TruncationContext& ctx, int n);
  static Series y(const TruncationContext& ctx);

  const TruncationContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Stored coefficient, or 0 for an absent monomial. Throws bounds_error if
  /// the monomial lies outside the context.
  Rational coeff(const Monomial& mon) const;

  /// Sets one coefficient (erases it when value is zero). Bounds-checked.
  void set_coeff(const Monomial& mon, Rational value);

  /// Adds into one coefficient, pruning it when the sum cancels to zero.
  void add_to_coeff(const Monomial& mon, const Rational& value);

  Series operator-() const;
  Series operator+(const Series& other) const;
  Series operator-(const Series& other) const;
  /// Cauchy product, truncated to the common context.
  Series operator*(const Series& other) const;

  Series& operator+=(const Series& other) { return *this = *this + other; }
  Series& operator-=(const Series& other) { return *this = *this - other; }
  Series& operator*=(const Series& other) { return *this = *this * other; }

  bool operator==(const Series& other) const = default;

 private:
  TruncationContext ctx_;
  TermMap terms_;
};

Series operator*(const Series& s, const Rational& factor);
Series operator*(const Rational& factor, const Series& s);

/// Multiplicative inverse within the context, computed degree by degree.
/// Throws not_invertible_error if the constant term is zero.
Series reciprocal(const Series& s);

/// Integer power with truncation.
Series pow(const Series& s, int exponent);

/// Recipe for one variable under substitution: t_n -> coefficient * x^exponent.
struct VariableSubstitution {
  Rational coefficient = 0;
  int exponent = 1;  // must be >= 1
};

struct SubstitutionSpec {
  /// Entry k applies to t_{k+1}; variables beyond the list map to zero.
  std::vector<VariableSubstitution> variables;
  /// Value substituted for y; required when the input context keeps y terms.
  std::optional<Rational> y_value;
};

/// Substitutes t_n -> c_n x^{e_n} (and y -> y_value), returning a univariate
/// series in x = t_1 over the context (1, degree_bound, 0). Exact: throws
/// insufficient_precision_error when terms discarded by the source context
/// could land at or below degree_bound (checked as min e_n * D >= N over
/// variables with nonzero c_n).
Series substitute(const Series& s, const SubstitutionSpec& spec, int degree_bound);

/// Collapses y to a rational value, keeping the t-variables: the result lives
/// in the y-free context (m, D, 0). The caller is responsible for the y-range
/// of the input being complete for every retained t-monomial.
Series substitute_y(const Series& s, const Rational& value);

/// Square root of a univariate series up to degree_bound, choosing the branch
/// with positive constant term. Throws no_square_root_error when the constant
/// term is zero or not a rational square.
Series sqrt_univariate(const Series& s, int degree_bound);

bool all_coefficients_integral(const Series& s);
bool all_coefficients_nonnegative(const Series& s);

/// First term in canonical order, or nullopt for the zero series.
std::optional<Monomial> leading_monomial(const Series& s);

/// JSON form: {"context":{"m":..,"degree":..,"y_degree":..},
///             "terms":[{"t":[..],"y":..,"coeff":"p/q"},..]} in canonical order.
nlohmann::json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& doc);

/// Deterministic one-term-per-line table, canonical order.
std::string series_to_table(const Series& s);

}  // namespace geode
