#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "geode/errors.hpp"
#include "geode/specializations.hpp"

#include "test_util.hpp"

using geode::Integer;
using geode::SequenceName;
using geode::Series;
using testutil::mono;

namespace {

// Frozen reference values, computed by exhaustive path enumeration.
const std::vector<long> kCatalan{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
const std::vector<long> kMotzkin{1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798};
const std::vector<long> kRiordan{1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603, 1585};
const std::vector<long> kSchroederLarge{1,     2,     6,     22,     90,     394,
                                        1806,  8558,  41586, 206098, 1037718, 5293446};
const std::vector<long> kSchroederSmall{1,    1,    3,     11,     45,     197,
                                        903,  4279, 20793, 103049, 518859, 2646723};

const std::vector<std::pair<SequenceName, const std::vector<long>*>> kAll{
    {SequenceName::catalan, &kCatalan},
    {SequenceName::motzkin, &kMotzkin},
    {SequenceName::riordan, &kRiordan},
    {SequenceName::schroeder_large, &kSchroederLarge},
    {SequenceName::schroeder_small, &kSchroederSmall},
};

bool matches(const std::vector<Integer>& got, const std::vector<long>& want, std::size_t n) {
  if (got.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (got[i] != want[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("substituted series reproduce the classical sequences") {
  for (const auto& [name, want] : kAll) {
    const auto result = geode::specialize_named(name, 12);
    CHECK_MESSAGE(matches(result.terms, *want, 12), geode::to_string(name));
    for (const Integer& t : result.terms) CHECK(t >= 0);
  }
}

TEST_CASE("riordan spec example, eight terms") {
  const auto result = geode::specialize_named(SequenceName::riordan, 8);
  CHECK(matches(result.terms, kRiordan, 8));
}

TEST_CASE("closed forms expand to the same sequences") {
  for (const auto& [name, want] : kAll) {
    const Series expanded = geode::closed_form_expand(name, 12);
    for (int d = 0; d < 12; ++d) {
      CHECK(expanded.coeff(mono({d})) == (*want)[static_cast<std::size_t>(d)]);
    }
  }
}

TEST_CASE("minimal term counts") {
  const auto one_term = geode::specialize_named(SequenceName::catalan, 1);
  REQUIRE(one_term.terms.size() == 1);
  CHECK(one_term.terms[0] == 1);
  CHECK(geode::closed_form_expand(SequenceName::schroeder_small, 1).coeff(mono({0})) == 1);
  CHECK_THROWS_AS(geode::specialize_named(SequenceName::catalan, 0), geode::bounds_error);
  CHECK_THROWS_AS(geode::closed_form_expand(SequenceName::catalan, 0), geode::bounds_error);
}

TEST_CASE("identity verification across routes") {
  SUBCASE("default-scale run") {
    const auto report = geode::verify_specialization_identities(12);
    CHECK(report.checks.size() == 7);
    CHECK(report.all_pass());
  }

  SUBCASE("minimal run") {
    CHECK(geode::verify_specialization_identities(2).all_pass());
  }

  SUBCASE("term count below two is rejected") {
    CHECK_THROWS_AS(geode::verify_specialization_identities(1), geode::bounds_error);
  }
}

TEST_CASE("sequence json") {
  const auto result = geode::specialize_named(SequenceName::catalan, 6);
  CHECK(geode::sequence_to_json(result).dump() ==
        R"({"name":"catalan","terms":["1","1","2","5","14","42"]})");
}

TEST_CASE("name registry") {
  CHECK(geode::sequence_name_from_string("schroeder_large") == SequenceName::schroeder_large);
  CHECK_THROWS_AS(geode::sequence_name_from_string("fibonacci"), geode::parse_error);
  CHECK(geode::all_sequence_names().size() == 5);
}
