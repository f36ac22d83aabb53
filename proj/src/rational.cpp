#include "geode/rational.hpp"

#include <cctype>

#include "geode/errors.hpp"

namespace geode {

std::string rational_to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/') {
      throw parse_error("malformed rational literal: " + text);
    }
  }
  Rational value;
  if (mpq_set_str(value.get_mpq_t(), text.c_str(), 10) != 0) {
    throw parse_error("malformed rational literal: " + text);
  }
  if (mpz_sgn(mpq_denref(value.get_mpq_t())) == 0) {
    throw parse_error("zero denominator: " + text);
  }
  value.canonicalize();
  return value;
}

bool is_integer(const Rational& value) {
  return mpz_cmp_ui(mpq_denref(value.get_mpq_t()), 1) == 0;
}

bool is_nonnegative(const Rational& value) {
  return mpq_sgn(value.get_mpq_t()) >= 0;
}

std::optional<Rational> rational_sqrt(const Rational& value) {
  if (mpq_sgn(value.get_mpq_t()) < 0) return std::nullopt;
  // value is canonical, so p/q is a rational square iff p and q both are.
  const Integer num(mpq_numref(value.get_mpq_t()));
  const Integer den(mpq_denref(value.get_mpq_t()));
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Integer num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
  Rational root(num_root, den_root);
  root.canonicalize();
  return root;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational factor = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= factor;
    factor *= factor;
    e >>= 1u;
  }
  return result;
}

}  // namespace geode
