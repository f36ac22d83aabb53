#pragma once

#include <vector>

#include "geode/report.hpp"
#include "geode/series.hpp"

namespace geode {

/// t_1 + ... + t_m within the context (zero when the window keeps no degree-1 terms).
Series variable_sum(const TruncationContext& ctx);

/// The unique series solving X = 1 + sum_n t_n X^n within a y-free context,
/// by fixed-point iteration; each iteration settles one more degree, so the
/// iteration stabilizes after at most max_degree + 1 steps.
Series solve_excursion_gf(const TruncationContext& ctx);

/// G = (1 - sum_{n=1..m} t_n (1 + S + ... + S^{n-1}))^{-1}; counts
/// nonnegative paths and satisfies S = 1 + G * S_1.
Series geode_gf(const Series& excursion_gf);

/// H = (1 - sum_{n=2..m} t_n (S + ... + S^{n-1}))^{-1}; counts positive
/// paths and satisfies G = S * H and S = (1 - H * S_1)^{-1}.
Series positive_gf(const Series& excursion_gf);

struct GeodeBundle {
  TruncationContext context;
  Series excursions;    // S
  Series var_sum;       // S_1 = t_1 + ... + t_m
  Series geode;         // G
  Series positive;      // H
};

GeodeBundle solve_geode(const TruncationContext& ctx);

/// Exact residual checks of the defining identities, plus integrality and
/// nonnegativity of every coefficient. Failures are reported, never thrown.
VerificationReport verify_core_identities(const GeodeBundle& bundle);

/// Down steps carry the weight y: a path's y-exponent is its number of down
/// steps. Wants max_y_degree >= (m-1)*max_degree so that every path whose
/// t-monomial fits the window also fits the y-range.
struct WienerHopfBundle {
  TruncationContext context;
  Series excursions_y;   // S(y)
  Series nonnegative_y;  // N(y)
};

/// Solves the y-weighted excursion equation X = 1 + sum_n t_n X^n y^{n-1} and
/// derives N(y) = (1 - y - S_1)^{-1} (1 - y S(y)). Throws
/// insufficient_precision_error when max_y_degree < (m-1)*max_degree.
WienerHopfBundle solve_wiener_hopf(const TruncationContext& ctx);

/// Checks 1 - y S(y) = (1 - y - S_1) N(y) exactly, and that the y = 1
/// specializations of S(y) and N(y) recover S and G.
VerificationReport verify_wiener_hopf(const WienerHopfBundle& bundle);

/// Image of G under t_n -> c_n x, as a univariate series to degree_bound.
/// Substitution commutes with the construction of G, so this solves the
/// substituted fixed point and applies the reciprocal formula in x.
Series geode_gf_on_line(const std::vector<Rational>& coefficients, int degree_bound);

/// Image of H under t_n -> c_n x.
Series positive_gf_on_line(const std::vector<Rational>& coefficients, int degree_bound);

struct ZeroSumEvaluation {
  Series direct;       // G(c_1 x, ..., c_m x)
  Series closed_form;  // (1 - (sum_n n c_n) x)^{-1}
  bool agree = false;
};

/// Evaluates G along t_n = c_n x for a coefficient vector summing to zero and
/// compares against the closed form. Throws zero_sum_error when the sum of
/// the coefficients is nonzero.
ZeroSumEvaluation evaluate_geode_at_zero_sum(const std::vector<Rational>& coefficients,
                                             int degree_bound);

}  // namespace geode
