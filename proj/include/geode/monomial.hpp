#pragma once

#include <compare>
#include <string>
#include <vector>

namespace geode {

/// Finite window on the power-series ring: variables t_1..t_m are kept
/// (t_n is identically zero for n > m), terms of total t-degree above
/// `max_degree` are discarded, and likewise y-exponents above `max_y_degree`.
/// Series with max_y_degree = 0 are y-free.
struct TruncationContext {
  int num_vars = 1;       // m
  int max_degree = 0;     // D
  int max_y_degree = 0;   // D_y

  bool operator==(const TruncationContext&) const = default;
};

/// Exponent vector over t_1..t_m plus a y-exponent slot.
struct Monomial {
  std::vector<int> t_exp;  // t_exp[k] is the exponent of t_{k+1}
  int y_exp = 0;

  static Monomial unit(int num_vars) { return Monomial{std::vector<int>(num_vars, 0), 0}; }

  /// t_n within an m-variable context (n is 1-based).
  static Monomial var(int num_vars, int n);

  /// y within an m-variable context.
  static Monomial y(int num_vars) {
    Monomial mon = unit(num_vars);
    mon.y_exp = 1;
    return mon;
  }

  int t_degree() const;
  bool is_unit() const;

  bool operator==(const Monomial&) const = default;

  /// Product of monomials: exponentwise sum.
  Monomial operator*(const Monomial& other) const;
};

/// Canonical term order: graded lexicographic on (t-degree, t_exp, y_exp).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

bool fits_context(const Monomial& mon, const TruncationContext& ctx);

/// Human-readable form, e.g. "t1^2 t2 y^3"; the unit monomial renders as "1".
std::string monomial_to_string(const Monomial& mon);

}  // namespace geode
