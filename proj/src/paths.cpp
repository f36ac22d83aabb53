#include "geode/paths.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "geode/errors.hpp"

namespace geode {

namespace {

// Class predicates on raw step sequences. Heights stream where possible.

bool check_nonnegative(const std::vector<int>& steps) {
  int h = 0;
  for (int s : steps) {
    h += s;
    if (h < 0) return false;
  }
  return true;
}

bool check_positive(const std::vector<int>& steps) {
  int h = 0;
  for (int s : steps) {
    h += s;
    if (h <= 0) return false;
  }
  return true;
}

bool check_excursion(const std::vector<int>& steps) {
  int h = 0;
  for (int s : steps) {
    h += s;
    if (h < 0) return false;
  }
  return h == 0;
}

bool check_arch(const std::vector<int>& steps) {
  if (steps.empty()) return false;
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += steps[i];
    if (i + 1 < steps.size() ? h <= 0 : h != 0) return false;
  }
  return true;
}

bool check_reverse_nonnegative(const std::vector<int>& steps) {
  int h = 0;
  int min_h = 0;
  for (int s : steps) {
    h += s;
    min_h = std::min(min_h, h);
  }
  return h == min_h;  // the endpoint is a lowest point
}

bool check_reverse_positive(const std::vector<int>& steps) {
  if (steps.empty()) return true;
  int h = 0;
  int min_before_end = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    h += steps[i];
    min_before_end = std::min(min_before_end, h);
  }
  return h + steps.back() < min_before_end;  // endpoint strictly below every other point
}

// A nonnegative path splits at an interior point iff its height there is <=
// every later height; positive paths split under the strict comparison.
bool check_prime_nonnegative(const std::vector<int>& steps) {
  if (steps.empty() || !check_nonnegative(steps)) return false;
  const std::size_t k = steps.size();
  std::vector<int> hs(k);
  int h = 0;
  for (std::size_t i = 0; i < k; ++i) hs[i] = (h += steps[i]);
  int suffix_min = hs[k - 1];
  for (std::size_t i = k - 1; i-- > 0;) {
    if (hs[i] <= suffix_min) return false;
    suffix_min = std::min(suffix_min, hs[i]);
  }
  return true;
}

bool check_prime_positive(const std::vector<int>& steps) {
  if (steps.empty() || !check_positive(steps)) return false;
  const std::size_t k = steps.size();
  std::vector<int> hs(k);
  int h = 0;
  for (std::size_t i = 0; i < k; ++i) hs[i] = (h += steps[i]);
  int suffix_min = hs[k - 1];
  for (std::size_t i = k - 1; i-- > 0;) {
    if (hs[i] < suffix_min) return false;
    suffix_min = std::min(suffix_min, hs[i]);
  }
  return true;
}

bool check_class_raw(const std::vector<int>& steps, PathClass c) {
  switch (c) {
    case PathClass::excursion: return check_excursion(steps);
    case PathClass::nonnegative: return check_nonnegative(steps);
    case PathClass::positive: return check_positive(steps);
    case PathClass::reverse_nonnegative: return check_reverse_nonnegative(steps);
    case PathClass::reverse_positive: return check_reverse_positive(steps);
    case PathClass::arch: return check_arch(steps);
    case PathClass::prime_nonnegative: return check_prime_nonnegative(steps);
    case PathClass::prime_positive: return check_prime_positive(steps);
    case PathClass::any: return true;
  }
  return false;
}

bool is_finite_class(PathClass c) {
  switch (c) {
    case PathClass::excursion:
    case PathClass::nonnegative:
    case PathClass::positive:
    case PathClass::arch:
    case PathClass::prime_nonnegative:
    case PathClass::prime_positive:
      return true;
    default:
      return false;
  }
}

enum class PruneMode { none, weak, strict, arch };

PruneMode prune_mode_for(PathClass c) {
  switch (c) {
    case PathClass::excursion:
    case PathClass::nonnegative:
    case PathClass::prime_nonnegative:
      return PruneMode::weak;
    case PathClass::positive:
    case PathClass::prime_positive:
      return PruneMode::strict;
    case PathClass::arch:
      return PruneMode::arch;
    default:
      return PruneMode::none;
  }
}

/// Depth-first generation of every interleaving of the up multiset with down
/// steps, in lexicographic order; `emit` fires at each complete sequence that
/// passes the class predicate. Prefix pruning only discards branches with no
/// class member below them.
class InterleavingGenerator {
 public:
  InterleavingGenerator(PathClass cls, std::vector<int> up_values,
                        std::vector<int> up_counts, int max_downs,
                        std::optional<int> exact_downs)
      : cls_(cls),
        prune_(prune_mode_for(cls)),
        values_(std::move(up_values)),
        remaining_(std::move(up_counts)),
        max_downs_(max_downs),
        exact_downs_(exact_downs) {
    ups_left_ = std::accumulate(remaining_.begin(), remaining_.end(), 0);
  }

  void run(const std::function<void(const std::vector<int>&, int)>& emit) {
    emit_ = &emit;
    descend();
    emit_ = nullptr;
  }

 private:
  bool child_allowed(int new_height) const {
    switch (prune_) {
      case PruneMode::weak: return new_height >= 0;
      case PruneMode::strict: return new_height >= 1;
      case PruneMode::arch: return new_height >= 0;
      case PruneMode::none: return true;
    }
    return true;
  }

  void descend() {
    if (ups_left_ == 0) {
      if ((!exact_downs_ || downs_used_ == *exact_downs_) && check_class_raw(buffer_, cls_)) {
        (*emit_)(buffer_, downs_used_);
      }
    }
    // an interior return to height 0 disqualifies every extension of an arch
    if (prune_ == PruneMode::arch && height_ == 0 && !buffer_.empty()) return;
    if (downs_used_ < max_downs_ && child_allowed(height_ - 1)) {
      buffer_.push_back(-1);
      height_ -= 1;
      downs_used_ += 1;
      descend();
      downs_used_ -= 1;
      height_ += 1;
      buffer_.pop_back();
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (remaining_[i] == 0 || !child_allowed(height_ + values_[i])) continue;
      remaining_[i] -= 1;
      ups_left_ -= 1;
      buffer_.push_back(values_[i]);
      height_ += values_[i];
      descend();
      height_ -= values_[i];
      buffer_.pop_back();
      ups_left_ += 1;
      remaining_[i] += 1;
    }
  }

  PathClass cls_;
  PruneMode prune_;
  std::vector<int> values_;
  std::vector<int> remaining_;
  int max_downs_;
  std::optional<int> exact_downs_;
  int ups_left_ = 0;
  std::vector<int> buffer_;
  int height_ = 0;
  int downs_used_ = 0;
  const std::function<void(const std::vector<int>&, int)>* emit_ = nullptr;
};

struct UpMultiset {
  std::vector<int> values;  // distinct, ascending
  std::vector<int> counts;

  int total_rise() const {
    int sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) sum += values[i] * counts[i];
    return sum;
  }
};

UpMultiset collect_multiset(const std::vector<int>& up_steps) {
  std::vector<int> sorted = up_steps;
  std::sort(sorted.begin(), sorted.end());
  UpMultiset out;
  for (int v : sorted) {
    if (v < 0) throw bounds_error("up steps must be nonnegative");
    if (!out.values.empty() && out.values.back() == v) {
      out.counts.back() += 1;
    } else {
      out.values.push_back(v);
      out.counts.push_back(1);
    }
  }
  return out;
}

/// Visits every multiset of up values in {0..max_value} of size <= max_size.
void for_each_up_multiset(int max_value, int max_size,
                          const std::function<void(const UpMultiset&)>& visit) {
  UpMultiset current;
  std::function<void(int, int)> rec = [&](int value, int budget) {
    if (value > max_value) {
      visit(current);
      return;
    }
    for (int count = 0; count <= budget; ++count) {
      if (count > 0) {
        if (count == 1) {
          current.values.push_back(value);
          current.counts.push_back(1);
        } else {
          current.counts.back() = count;
        }
      }
      rec(value + 1, budget - count);
      if (count > 0 && count == budget) break;
    }
    if (!current.values.empty() && current.values.back() == value) {
      current.values.pop_back();
      current.counts.pop_back();
    }
  };
  rec(0, max_size);
}

}  // namespace

Path Path::parse(const std::string& text) {
  std::vector<int> steps;
  std::size_t pos = 0;
  if (text.empty()) return Path{};
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    const std::size_t first = token.find_first_not_of(" \t");
    const std::size_t last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw parse_error("empty step in path literal: " + text);
    token = token.substr(first, last - first + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw parse_error("malformed step '" + token + "' in path literal");
    }
    steps.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Path{std::move(steps)};
}

std::vector<int> Path::heights() const {
  std::vector<int> out(steps_.size());
  int h = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) out[i] = (h += steps_[i]);
  return out;
}

int Path::end_height() const {
  return std::accumulate(steps_.begin(), steps_.end(), 0);
}

bool Path::has_step_below(int bound) const {
  return std::any_of(steps_.begin(), steps_.end(), [bound](int s) { return s < bound; });
}

Path Path::reversed() const {
  std::vector<int> out(steps_.rbegin(), steps_.rend());
  for (int& s : out) s = -s;
  return Path{std::move(out)};
}

Path Path::operator+(const Path& other) const {
  std::vector<int> out = steps_;
  out.insert(out.end(), other.steps_.begin(), other.steps_.end());
  return Path{std::move(out)};
}

std::string Path::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(steps_[i]);
  }
  return out;
}

const char* to_string(PathClass c) {
  switch (c) {
    case PathClass::excursion: return "excursion";
    case PathClass::nonnegative: return "nonnegative";
    case PathClass::positive: return "positive";
    case PathClass::reverse_nonnegative: return "reverse-nonnegative";
    case PathClass::reverse_positive: return "reverse-positive";
    case PathClass::arch: return "arch";
    case PathClass::prime_nonnegative: return "prime-nonnegative";
    case PathClass::prime_positive: return "prime-positive";
    case PathClass::any: return "any";
  }
  return "?";
}

PathClass path_class_from_string(const std::string& name) {
  for (PathClass c : {PathClass::excursion, PathClass::nonnegative, PathClass::positive,
                      PathClass::reverse_nonnegative, PathClass::reverse_positive,
                      PathClass::arch, PathClass::prime_nonnegative,
                      PathClass::prime_positive, PathClass::any}) {
    if (name == to_string(c)) return c;
  }
  throw parse_error("unknown path class: " + name);
}

bool is_in_class(const Path& path, PathClass c) {
  if ((c == PathClass::prime_nonnegative || c == PathClass::prime_positive) &&
      path.has_step_below(-1)) {
    throw unsupported_step_error("prime classification requires steps >= -1");
  }
  return check_class_raw(path.steps(), c);
}

std::vector<Path> enumerate_class(PathClass c, const std::vector<int>& up_steps,
                                  std::optional<int> down_count) {
  UpMultiset ups = collect_multiset(up_steps);
  const int rise = ups.total_rise();
  int max_downs = 0;
  std::optional<int> exact;
  if (down_count.has_value()) {
    if (*down_count < 0) throw bounds_error("negative down-step count");
    max_downs = *down_count;
    exact = down_count;
  } else {
    if (!is_finite_class(c)) {
      throw infinite_enumeration_error(std::string("enumeration of class '") + to_string(c) +
                                       "' needs an explicit down-step count");
    }
    max_downs = rise;
    if (c == PathClass::excursion || c == PathClass::arch) exact = rise;
  }
  std::vector<Path> out;
  InterleavingGenerator gen(c, ups.values, ups.counts, max_downs, exact);
  gen.run([&](const std::vector<int>& steps, int) { out.push_back(Path{steps}); });
  return out;
}

Series oracle_series(PathClass c, const TruncationContext& ctx, const WeightScheme& weights) {
  if (!is_finite_class(c)) {
    throw infinite_enumeration_error(std::string("class '") + to_string(c) +
                                     "' has no finite generating-function window");
  }
  Series out(ctx);
  for_each_up_multiset(ctx.num_vars - 1, ctx.max_degree, [&](const UpMultiset& ups) {
    const int rise = ups.total_rise();
    int max_downs = rise;
    std::optional<int> exact;
    if (c == PathClass::excursion || c == PathClass::arch) exact = rise;
    if (weights.down_steps_carry_y) {
      if (exact && *exact > ctx.max_y_degree) return;  // every term lands outside the window
      max_downs = std::min(max_downs, ctx.max_y_degree);
    }
    std::vector<long long> counts(static_cast<std::size_t>(max_downs) + 1, 0);
    InterleavingGenerator gen(c, ups.values, ups.counts, max_downs, exact);
    gen.run([&](const std::vector<int>&, int downs) {
      counts[static_cast<std::size_t>(downs)] += 1;
    });
    Monomial mon = Monomial::unit(ctx.num_vars);
    for (std::size_t i = 0; i < ups.values.size(); ++i) {
      mon.t_exp[static_cast<std::size_t>(ups.values[i])] = ups.counts[i];
    }
    for (int d = 0; d <= max_downs; ++d) {
      if (counts[static_cast<std::size_t>(d)] == 0) continue;
      mon.y_exp = weights.down_steps_carry_y ? d : 0;
      out.add_to_coeff(mon, Rational(static_cast<long>(counts[static_cast<std::size_t>(d)])));
    }
  });
  return out;
}

std::vector<Path> factor_reverse(const Path& path, bool strict) {
  if (path.has_step_below(-1)) {
    throw unsupported_step_error("factorization requires steps >= -1");
  }
  if (!is_in_class(path, strict ? PathClass::reverse_positive : PathClass::reverse_nonnegative)) {
    throw not_factorable_error(std::string("path is not ") +
                               (strict ? "reverse-positive" : "reverse-nonnegative"));
  }
  std::vector<Path> out;
  std::vector<int> segment;
  int height = 0;
  int record = 0;
  for (int s : path.steps()) {
    height += s;
    if (s == -1 && height < record) {
      // the first passage below each level closes one excursion
      record = height;
      out.emplace_back(std::move(segment));
      segment.clear();
    } else {
      segment.push_back(s);
    }
  }
  if (!strict) out.emplace_back(std::move(segment));
  return out;
}

Path reassemble_reverse_factors(const std::vector<Path>& excursions, bool strict) {
  const Path down{std::vector<int>{-1}};
  Path out;
  for (std::size_t i = 0; i < excursions.size(); ++i) {
    if (i > 0 && !strict) out = out + down;
    out = out + excursions[i];
    if (strict) out = out + down;
  }
  if (!strict && excursions.empty()) return Path{};
  return out;
}

WienerHopfParts wiener_hopf_factor(const Path& path) {
  const auto& steps = path.steps();
  int h = 0;
  int min_h = 0;
  std::size_t first_min = 0;
  std::size_t last_min = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += steps[i];
    if (h < min_h) {
      min_h = h;
      first_min = last_min = i + 1;
    } else if (h == min_h) {
      last_min = i + 1;
    }
  }
  WienerHopfParts parts;
  parts.reverse_positive = Path{{steps.begin(), steps.begin() + static_cast<long>(first_min)}};
  parts.excursion = Path{{steps.begin() + static_cast<long>(first_min),
                          steps.begin() + static_cast<long>(last_min)}};
  parts.positive = Path{{steps.begin() + static_cast<long>(last_min), steps.end()}};
  return parts;
}

std::vector<std::size_t> prime_cut_points(const Path& path, PathClass c) {
  if (c != PathClass::excursion && c != PathClass::nonnegative && c != PathClass::positive &&
      c != PathClass::reverse_positive) {
    throw bounds_error(std::string("no prime factorization for class '") + to_string(c) + "'");
  }
  if (path.has_step_below(-1)) {
    throw unsupported_step_error("factorization requires steps >= -1");
  }
  if (!is_in_class(path, c)) {
    throw not_in_class_error(std::string("path is not in class '") + to_string(c) + "'");
  }
  const std::vector<int> hs = path.heights();
  const std::size_t k = hs.size();
  std::vector<std::size_t> cuts;
  if (k < 2) return cuts;
  if (c == PathClass::reverse_positive) {
    // cut wherever the height reaches a strict record low before the end
    int min_before = 0;
    for (std::size_t p = 1; p <= k - 1; ++p) {
      if (hs[p - 1] < min_before) cuts.push_back(p);
      min_before = std::min(min_before, hs[p - 1]);
    }
    return cuts;
  }
  const bool strict = (c == PathClass::positive);
  std::vector<int> suffix_min(k);
  suffix_min[k - 1] = hs[k - 1];
  for (std::size_t i = k - 1; i-- > 0;) suffix_min[i] = std::min(hs[i], suffix_min[i + 1]);
  for (std::size_t p = 1; p <= k - 1; ++p) {
    const int here = hs[p - 1];
    const int later = suffix_min[p];
    if (strict ? here < later : here <= later) cuts.push_back(p);
  }
  return cuts;
}

std::vector<Path> prime_factorize(const Path& path, PathClass c) {
  const std::vector<std::size_t> cuts = prime_cut_points(path, c);
  std::vector<Path> out;
  if (path.empty()) return out;
  const auto& steps = path.steps();
  std::size_t start = 0;
  for (std::size_t cut : cuts) {
    out.emplace_back(std::vector<int>{steps.begin() + static_cast<long>(start),
                                      steps.begin() + static_cast<long>(cut)});
    start = cut;
  }
  out.emplace_back(std::vector<int>{steps.begin() + static_cast<long>(start), steps.end()});
  return out;
}

bool is_prime_in_monoid(const Path& path, PathClass c) {
  if (path.empty()) return false;
  if (path.has_step_below(-1)) {
    throw unsupported_step_error("primality requires steps >= -1");
  }
  if (!check_class_raw(path.steps(), c)) return false;
  return prime_cut_points(path, c).empty();
}

bool schutzenberger_check(PathClass c, const Path& p, const Path& q, const Path& r) {
  switch (c) {
    case PathClass::excursion:
    case PathClass::nonnegative:
    case PathClass::positive:
    case PathClass::reverse_nonnegative:
    case PathClass::reverse_positive:
      break;
    default:
      throw bounds_error(std::string("class '") + to_string(c) +
                         "' is not one of the path monoids");
  }
  const bool premise = is_in_class(p, c) && is_in_class(p + q, c) &&
                       is_in_class(q + r, c) && is_in_class(r, c);
  return !premise || is_in_class(q, c);
}

VerificationReport verify_prime_gf(PathClass prime_class, const TruncationContext& ctx,
                                   const Series& excursion_gf) {
  if (prime_class != PathClass::arch && prime_class != PathClass::prime_nonnegative &&
      prime_class != PathClass::prime_positive) {
    throw bounds_error(std::string("'") + to_string(prime_class) + "' is not a prime class");
  }
  if (excursion_gf.context() != ctx) {
    throw context_error("excursion series does not match the requested context");
  }

  // Powers S^0..S^{m-1}; the up step n carries t_{n+1}.
  std::vector<Series> powers{Series::one(ctx)};
  for (int n = 1; n < ctx.num_vars; ++n) powers.push_back(powers.back() * excursion_gf);

  Series formula = Series::zero(ctx);
  for (int n = 0; n < ctx.num_vars; ++n) {
    // arch: S^n; prime nonnegative: 1 + S + ... + S^n; prime positive: S + ... + S^n
    Series inner = Series::zero(ctx);
    if (prime_class == PathClass::arch) {
      inner = powers[static_cast<std::size_t>(n)];
    } else {
      const int lo = (prime_class == PathClass::prime_positive) ? 1 : 0;
      for (int j = lo; j <= n; ++j) inner += powers[static_cast<std::size_t>(j)];
    }
    formula += Series::variable(ctx, n + 1) * inner;
  }

  const Series residual = oracle_series(prime_class, ctx) - formula;
  CheckResult check;
  check.name = std::string(to_string(prime_class)) + "-gf";
  check.max_degree = ctx.max_degree;
  check.pass = residual.is_zero();
  check.failing_monomial = leading_monomial(residual);
  VerificationReport report;
  report.add(std::move(check));
  return report;
}

}  // namespace geode
