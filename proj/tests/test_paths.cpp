#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "geode/errors.hpp"
#include "geode/paths.hpp"

#include "test_util.hpp"

using geode::Path;
using geode::PathClass;
using geode::Series;
using geode::TruncationContext;
using testutil::mono;

namespace {

Path P(std::vector<int> steps) { return Path{std::move(steps)}; }

/// Every path with up to max_len steps drawn from the given alphabet.
std::vector<Path> all_paths(const std::vector<int>& alphabet, int max_len) {
  std::vector<Path> out{Path{}};
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& stem : frontier) {
      for (int s : alphabet) {
        std::vector<int> extended = stem;
        extended.push_back(s);
        out.push_back(Path{extended});
        next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("path parsing and formatting") {
  CHECK(Path::parse("2,-1,-1") == P({2, -1, -1}));
  CHECK(Path::parse("") == Path{});
  CHECK(Path::parse(" 1 , 0 ,-1") == P({1, 0, -1}));
  CHECK(P({2, -1, -1}).to_string() == "2,-1,-1");
  CHECK(Path{}.to_string().empty());
  CHECK_THROWS_AS(Path::parse("1,,2"), geode::parse_error);
  CHECK_THROWS_AS(Path::parse("1,a"), geode::parse_error);
  CHECK_THROWS_AS(Path::parse(","), geode::parse_error);
}

TEST_CASE("classification") {
  CHECK(is_in_class(P({1, 1, -2, 1}), PathClass::nonnegative));
  CHECK(!is_in_class(P({1, 1, -2, 1}), PathClass::excursion));
  CHECK(is_in_class(Path{}, PathClass::positive));
  CHECK(is_in_class(P({1, -1, 2, -1, -1}), PathClass::excursion));
  CHECK(is_in_class(P({-1, 2, -1, -1}), PathClass::reverse_nonnegative));  // reversal of (1,1,-2,1)
  CHECK(is_in_class(Path{}, PathClass::excursion));
  CHECK(is_in_class(Path{}, PathClass::any));
  CHECK(is_in_class(P({-5, 17}), PathClass::any));

  SUBCASE("archs") {
    CHECK(is_in_class(P({0}), PathClass::arch));
    CHECK(is_in_class(P({1, -1}), PathClass::arch));
    CHECK(is_in_class(P({2, -1, 1, -1, -1}), PathClass::arch));
    CHECK(!is_in_class(P({1, -1, 1, -1}), PathClass::arch));  // returns to 0 in the middle
    CHECK(!is_in_class(Path{}, PathClass::arch));
  }

  SUBCASE("positive paths") {
    CHECK(!is_in_class(P({0}), PathClass::positive));  // partial sum 0 is not positive
    CHECK(is_in_class(P({1, 0}), PathClass::positive));
    CHECK(is_in_class(P({3, 1, -1, -1, 1, -1}), PathClass::positive));
  }

  SUBCASE("reverse classes via reversal") {
    CHECK(is_in_class(P({-1, -1}), PathClass::reverse_positive));
    CHECK(!is_in_class(P({-1, 1}), PathClass::reverse_positive));
    CHECK(is_in_class(P({-1, 1, -1}), PathClass::reverse_nonnegative));
    CHECK(is_in_class(Path{}, PathClass::reverse_positive));
  }

  SUBCASE("prime classes") {
    // the drawn prime positive path: starts with up step 3, ends at height 2
    const Path fig = P({3, 1, -1, -1, 1, -1});
    CHECK(is_in_class(fig, PathClass::prime_positive));
    CHECK(!is_in_class(fig, PathClass::prime_nonnegative));
    CHECK(is_in_class(P({1, -1}), PathClass::prime_nonnegative));
    CHECK(!is_in_class(P({1, -1, 1}), PathClass::prime_nonnegative));
    CHECK_THROWS_AS(is_in_class(P({1, -2, 1}), PathClass::prime_nonnegative),
                    geode::unsupported_step_error);
  }
}

TEST_CASE("classification invariants, exhaustive") {
  const std::vector<Path> paths = all_paths({-2, -1, 0, 1, 2, 3}, 5);

  for (const Path& p : paths) {
    const Path r = p.reversed();
    CHECK(r.reversed() == p);
    CHECK(is_in_class(p, PathClass::nonnegative) ==
          is_in_class(r, PathClass::reverse_nonnegative));
    CHECK(is_in_class(p, PathClass::positive) == is_in_class(r, PathClass::reverse_positive));
    // an excursion is exactly a path that is nonnegative and reverse-nonnegative
    CHECK(is_in_class(p, PathClass::excursion) ==
          (is_in_class(p, PathClass::nonnegative) &&
           is_in_class(p, PathClass::reverse_nonnegative)));
  }
}

TEST_CASE("enumeration") {
  SUBCASE("excursions over {1,1}") {
    const auto paths = enumerate_class(PathClass::excursion, {1, 1}, std::nullopt);
    CHECK(paths == std::vector<Path>{P({1, -1, 1, -1}), P({1, 1, -1, -1})});
  }

  SUBCASE("nonnegative paths over {0,1}") {
    const auto paths = enumerate_class(PathClass::nonnegative, {0, 1}, std::nullopt);
    CHECK(paths == std::vector<Path>{P({0, 1}), P({0, 1, -1}), P({1, -1, 0}), P({1, 0}),
                                     P({1, 0, -1})});
  }

  SUBCASE("positive paths over {1,1}") {
    const auto paths = enumerate_class(PathClass::positive, {1, 1}, std::nullopt);
    CHECK(paths == std::vector<Path>{P({1, 1}), P({1, 1, -1})});
  }

  SUBCASE("empty multiset") {
    CHECK(enumerate_class(PathClass::excursion, {}, std::nullopt) == std::vector<Path>{Path{}});
    CHECK(enumerate_class(PathClass::arch, {}, std::nullopt).empty());
  }

  SUBCASE("explicit down counts") {
    const auto paths = enumerate_class(PathClass::any, {2}, 2);
    CHECK(paths == std::vector<Path>{P({-1, -1, 2}), P({-1, 2, -1}), P({2, -1, -1})});
    // (-1,1,-1) ties its interior minimum with the endpoint, so only one path
    CHECK(enumerate_class(PathClass::reverse_positive, {1}, 2) ==
          std::vector<Path>{P({1, -1, -1})});
    CHECK(enumerate_class(PathClass::reverse_nonnegative, {1}, 2) ==
          std::vector<Path>{P({-1, 1, -1}), P({1, -1, -1})});
    CHECK(enumerate_class(PathClass::excursion, {1, 1}, 1).empty());
  }

  SUBCASE("infinite requests are rejected") {
    CHECK_THROWS_AS(enumerate_class(PathClass::any, {1}, std::nullopt),
                    geode::infinite_enumeration_error);
    CHECK_THROWS_AS(enumerate_class(PathClass::reverse_nonnegative, {1}, std::nullopt),
                    geode::infinite_enumeration_error);
  }

  SUBCASE("invalid up steps are rejected") {
    CHECK_THROWS_AS(enumerate_class(PathClass::excursion, {1, -1}, std::nullopt),
                    geode::bounds_error);
    CHECK_THROWS_AS(enumerate_class(PathClass::excursion, {1}, -1), geode::bounds_error);
  }
}

TEST_CASE("oracle series match the frozen enumerations") {
  const TruncationContext ctx2{2, 2, 0};
  CHECK(oracle_series(PathClass::excursion, ctx2) == testutil::excursions_m2_d2());
  CHECK(oracle_series(PathClass::nonnegative, ctx2) == testutil::nonnegative_m2_d2());
  CHECK(oracle_series(PathClass::positive, ctx2) == testutil::positive_m2_d2());

  const TruncationContext ctx3{3, 2, 0};
  CHECK(oracle_series(PathClass::excursion, ctx3) == testutil::excursions_m3_d2());
  CHECK(oracle_series(PathClass::nonnegative, ctx3) == testutil::nonnegative_m3_d2());
  CHECK(oracle_series(PathClass::positive, ctx3) == testutil::positive_m3_d2());

  SUBCASE("archs") {
    const Series arch = oracle_series(PathClass::arch, ctx2);
    CHECK(arch.coeff(mono({0, 2})) == 1);  // only (1,1,-1,-1)
    CHECK(arch.coeff(mono({1, 0})) == 1);
    CHECK(arch.coeff(mono({0, 0})) == 0);
  }

  SUBCASE("prime classes, degree 1") {
    const Series pn = oracle_series(PathClass::prime_nonnegative, ctx3);
    const Series pp = oracle_series(PathClass::prime_positive, ctx3);
    // t_{n+1} carries n+1 prime nonnegative and n prime positive one-up-step paths
    CHECK(pn.coeff(mono({1, 0, 0})) == 1);
    CHECK(pn.coeff(mono({0, 1, 0})) == 2);
    CHECK(pn.coeff(mono({0, 0, 1})) == 3);
    CHECK(pp.coeff(mono({1, 0, 0})) == 0);
    CHECK(pp.coeff(mono({0, 1, 0})) == 1);
    CHECK(pp.coeff(mono({0, 0, 1})) == 2);
  }

  SUBCASE("y-weighted oracle") {
    const TruncationContext yctx{2, 2, 2};
    CHECK(oracle_series(PathClass::excursion, yctx, {true}) == testutil::excursions_y_m2());
    CHECK(oracle_series(PathClass::nonnegative, yctx, {true}) == testutil::nonnegative_y_m2());
  }

  SUBCASE("infinite classes are rejected") {
    CHECK_THROWS_AS(oracle_series(PathClass::any, ctx2), geode::infinite_enumeration_error);
  }
}

TEST_CASE("reverse factorization") {
  SUBCASE("figure example, three excursions") {
    const Path p = P({2, -1, -1, -1, 1, 0, -1, -1, 2, -1, -1, 1, -1});
    const auto factors = factor_reverse(p, false);
    REQUIRE(factors.size() == 3);
    CHECK(factors[0] == P({2, -1, -1}));
    CHECK(factors[1] == P({1, 0, -1}));
    CHECK(factors[2] == P({2, -1, -1, 1, -1}));
    for (const Path& e : factors) CHECK(is_in_class(e, PathClass::excursion));
    CHECK(reassemble_reverse_factors(factors, false) == p);
  }

  SUBCASE("empty path") {
    const auto factors = factor_reverse(Path{}, false);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].empty());
    CHECK(factor_reverse(Path{}, true).empty());
  }

  SUBCASE("strict variant") {
    const auto factors = factor_reverse(P({1, -1, -1}), true);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0] == P({1, -1}));
    CHECK(reassemble_reverse_factors(factors, true) == P({1, -1, -1}));
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(factor_reverse(P({1, -2}), false), geode::unsupported_step_error);
    CHECK_THROWS_AS(factor_reverse(P({1}), false), geode::not_factorable_error);
    CHECK_THROWS_AS(factor_reverse(P({1, -1}), true), geode::not_factorable_error);
  }
}

TEST_CASE("wiener-hopf factorization") {
  SUBCASE("figure example") {
    const auto parts = wiener_hopf_factor(P({-1, -1, 1, -1, -1, 2, -1, -1, 3, -1}));
    CHECK(parts.reverse_positive == P({-1, -1, 1, -1, -1}));
    CHECK(parts.excursion == P({2, -1, -1}));
    CHECK(parts.positive == P({3, -1}));
  }

  SUBCASE("excursions and positive paths are fixed") {
    const Path e = P({1, -1, 2, -1, -1});
    auto parts = wiener_hopf_factor(e);
    CHECK(parts.reverse_positive.empty());
    CHECK(parts.excursion == e);
    CHECK(parts.positive.empty());

    const Path pos = P({2, -1, 1});
    parts = wiener_hopf_factor(pos);
    CHECK(parts.reverse_positive.empty());
    CHECK(parts.excursion.empty());
    CHECK(parts.positive == pos);
  }

  SUBCASE("arbitrary steps round-trip") {
    const Path p = P({3, -5, 2, 2, -7, 4});
    const auto parts = wiener_hopf_factor(p);
    CHECK(parts.reassemble() == p);
    CHECK(is_in_class(parts.reverse_positive, PathClass::reverse_positive));
    CHECK(is_in_class(parts.excursion, PathClass::excursion));
    CHECK(is_in_class(parts.positive, PathClass::positive));
  }
}

TEST_CASE("prime factorization") {
  SUBCASE("spec examples") {
    CHECK(prime_factorize(P({1, -1, 1, -1}), PathClass::excursion) ==
          std::vector<Path>{P({1, -1}), P({1, -1})});
    CHECK(prime_factorize(P({1, -1, 1}), PathClass::nonnegative) ==
          std::vector<Path>{P({1, -1}), P({1})});
    CHECK(prime_factorize(P({2, -1, -1, 1, -1}), PathClass::nonnegative) ==
          std::vector<Path>{P({2, -1, -1}), P({1, -1})});
  }

  SUBCASE("reverse-positive primes are excursion-plus-down blocks") {
    const auto factors = prime_factorize(P({1, -1, -1, 0, -1}), PathClass::reverse_positive);
    CHECK(factors == std::vector<Path>{P({1, -1, -1}), P({0, -1})});
    for (const Path& f : factors) {
      CHECK(is_prime_in_monoid(f, PathClass::reverse_positive));
      CHECK(f.end_height() == -1);
    }
  }

  SUBCASE("identity and errors") {
    CHECK(prime_factorize(Path{}, PathClass::excursion).empty());
    CHECK_THROWS_AS(prime_factorize(P({1}), PathClass::excursion), geode::not_in_class_error);
    CHECK_THROWS_AS(prime_factorize(P({2, -2}), PathClass::excursion),
                    geode::unsupported_step_error);
    CHECK_THROWS_AS(prime_factorize(P({1, -1}), PathClass::reverse_nonnegative),
                    geode::bounds_error);
  }

  SUBCASE("factors are prime and reassemble, small exhaustive sweep") {
    for (const Path& p : all_paths({-1, 0, 1, 2}, 6)) {
      for (PathClass c : {PathClass::excursion, PathClass::nonnegative, PathClass::positive,
                          PathClass::reverse_positive}) {
        if (!is_in_class(p, c)) continue;
        const auto factors = prime_factorize(p, c);
        Path glued;
        for (const Path& f : factors) {
          CHECK(is_prime_in_monoid(f, c));
          glued = glued + f;
        }
        CHECK(glued == p);
      }
    }
  }
}

TEST_CASE("schutzenberger criterion") {
  CHECK(schutzenberger_check(PathClass::nonnegative, P({1, -1}), P({-1}), P({1})));
  CHECK(schutzenberger_check(PathClass::excursion, P({1, -1}), P({1, -1}), Path{}));
  CHECK_THROWS_AS(schutzenberger_check(PathClass::arch, Path{}, Path{}, Path{}),
                  geode::bounds_error);

  // spot sweep; the acceptance suite runs the full exhaustive version
  const std::vector<Path> paths = all_paths({-1, 0, 1, 2}, 2);
  for (PathClass c : {PathClass::excursion, PathClass::nonnegative, PathClass::positive,
                      PathClass::reverse_nonnegative, PathClass::reverse_positive}) {
    for (const Path& p : paths) {
      for (const Path& q : paths) {
        for (const Path& r : paths) {
          CHECK(schutzenberger_check(c, p, q, r));
        }
      }
    }
  }
}

TEST_CASE("prime generating functions against the excursion series") {
  const TruncationContext ctx{3, 3, 0};
  const Series s = oracle_series(PathClass::excursion, ctx);
  for (PathClass c :
       {PathClass::arch, PathClass::prime_nonnegative, PathClass::prime_positive}) {
    const auto report = verify_prime_gf(c, ctx, s);
    REQUIRE(report.checks.size() == 1);
    CHECK(report.checks[0].pass);
  }

  SUBCASE("a perturbed excursion series is caught") {
    Series wrong = s;
    wrong.add_to_coeff(mono({0, 1, 0}), 1);
    const auto report = verify_prime_gf(PathClass::arch, ctx, wrong);
    CHECK(!report.checks[0].pass);
    CHECK(report.checks[0].failing_monomial.has_value());
  }

  SUBCASE("non-prime classes are rejected") {
    CHECK_THROWS_AS(verify_prime_gf(PathClass::nonnegative, ctx, s), geode::bounds_error);
  }
}
