#pragma once

#include <string>
#include <vector>

#include "geode/report.hpp"
#include "geode/series.hpp"

#include "json.hpp"

namespace geode {

/// The two-variable specializations: substitutions of S (excursions) or H
/// (positive paths) with t_n = 0 for n > 2.
enum class SequenceName { catalan, motzkin, riordan, schroeder_large, schroeder_small };

const char* to_string(SequenceName name);
SequenceName sequence_name_from_string(const std::string& name);
std::vector<SequenceName> all_sequence_names();

struct SpecializationRecipe {
  bool base_is_positive_gf = false;            // H instead of S
  VariableSubstitution t1;                     // t_1 -> c x^e
  VariableSubstitution t2;                     // t_2 -> c x^e
};

SpecializationRecipe recipe_for(SequenceName name);

struct SequenceResult {
  SequenceName name;
  std::vector<Integer> terms;
};

/// First term_count coefficients of the substituted series, via the series
/// algebra (solve, build, substitute). Exact integers.
SequenceResult specialize_named(SequenceName name, int term_count);

/// First term_count coefficients via the explicit quadratic-case closed form,
/// expanded with the exact square root.
Series closed_form_expand(SequenceName name, int term_count);

/// Checks the substituted route against the closed forms for all five names,
/// plus H = 1 + t_2 G and G = S H in the two-variable window of degree
/// term_count.
VerificationReport verify_specialization_identities(int term_count);

/// {"name":str,"terms":["int-strings"]}
nlohmann::json sequence_to_json(const SequenceResult& result);

}  // namespace geode
