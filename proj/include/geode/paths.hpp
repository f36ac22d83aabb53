#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geode/report.hpp"
#include "geode/series.hpp"

namespace geode {

/// A lattice path: a finite sequence of integer steps. Heights are the
/// partial sums, starting from 0. Classification accepts arbitrary integer
/// steps; the factorization lemmas additionally require every step >= -1.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<int> steps) : steps_(std::move(steps)) {}

  /// Comma-separated integers, e.g. "2,-1,-1"; the empty string is the empty path.
  static Path parse(const std::string& text);

  const std::vector<int>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  std::vector<int> heights() const;
  int end_height() const;
  bool has_step_below(int bound) const;

  /// (s_1,...,s_k) -> (-s_k,...,-s_1): reflection in a vertical axis.
  Path reversed() const;

  /// Concatenation.
  Path operator+(const Path& other) const;

  std::string to_string() const;

  bool operator==(const Path&) const = default;
  bool operator<(const Path& other) const { return steps_ < other.steps_; }

 private:
  std::vector<int> steps_;
};

enum class PathClass {
  excursion,
  nonnegative,
  positive,
  reverse_nonnegative,
  reverse_positive,
  arch,
  prime_nonnegative,
  prime_positive,
  any,
};

const char* to_string(PathClass c);
PathClass path_class_from_string(const std::string& name);

/// Exact class membership. Prime classes require steps >= -1 and throw
/// unsupported_step_error otherwise; all other classes accept any steps.
bool is_in_class(const Path& path, PathClass c);

/// Step weights: up step n >= 0 carries t_{n+1}; the down step carries 1,
/// or y when down_steps_carry_y is set.
struct WeightScheme {
  bool down_steps_carry_y = false;
};

/// All distinct step sequences using exactly the given up steps (a multiset
/// of nonnegative values) and either exactly `down_count` down steps or, when
/// down_count is nullopt ("all"), every admissible count. Results are in
/// lexicographic order on step sequences. "all" is rejected for classes with
/// infinitely many members per up multiset (any and the reverse classes).
std::vector<Path> enumerate_class(PathClass c, const std::vector<int>& up_steps,
                                  std::optional<int> down_count);

/// Brute-force generating function: the sum of weight monomials over every
/// path of the class within the window, obtained by exhaustive enumeration.
/// Independent of the series algebra except for coefficient accumulation.
Series oracle_series(PathClass c, const TruncationContext& ctx,
                     const WeightScheme& weights = {});

/// Factors a reverse-nonnegative path ending at height -n as
/// E_1 D E_2 D ... D E_{n+1} (strict = false) or a reverse-positive path as
/// E_1 D E_2 D ... E_n D (strict = true), returning the excursions in order.
/// The down steps between consecutive factors are implicit.
std::vector<Path> factor_reverse(const Path& path, bool strict);

Path reassemble_reverse_factors(const std::vector<Path>& excursions, bool strict);

/// Cut at the first and the last lowest point of the height profile (the
/// start counts at height 0). Parts are returned as raw step segments, whose
/// own height profiles realize the translated middle and tail.
struct WienerHopfParts {
  Path reverse_positive;
  Path excursion;
  Path positive;

  Path reassemble() const { return reverse_positive + excursion + positive; }
};

WienerHopfParts wiener_hopf_factor(const Path& path);

/// Unique factorization into the primes of the free monoid of class c
/// (c in {excursion, nonnegative, positive, reverse_positive}).
std::vector<Path> prime_factorize(const Path& path, PathClass c);

/// Irreducibility in the monoid of class c (same classes as prime_factorize).
bool is_prime_in_monoid(const Path& path, PathClass c);

/// The cut positions used by prime_factorize (interior split points).
std::vector<std::size_t> prime_cut_points(const Path& path, PathClass c);

/// True iff (p, pq, qr, r all in the class-c monoid) implies (q in it).
bool schutzenberger_check(PathClass c, const Path& p, const Path& q, const Path& r);

/// Compares the brute-force series for a prime class (arch,
/// prime_nonnegative, prime_positive) against its closed formula in terms of
/// the excursion generating function.
VerificationReport verify_prime_gf(PathClass prime_class, const TruncationContext& ctx,
                                   const Series& excursion_gf);

}  // namespace geode
