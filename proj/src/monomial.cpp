#include "geode/monomial.hpp"

#include <numeric>

#include "geode/errors.hpp"

namespace geode {

Monomial Monomial::var(int num_vars, int n) {
  if (n < 1 || n > num_vars) {
    throw bounds_error("variable index " + std::to_string(n) + " outside t_1..t_" +
                       std::to_string(num_vars));
  }
  Monomial mon = unit(num_vars);
  mon.t_exp[static_cast<std::size_t>(n - 1)] = 1;
  return mon;
}

int Monomial::t_degree() const {
  return std::accumulate(t_exp.begin(), t_exp.end(), 0);
}

bool Monomial::is_unit() const {
  if (y_exp != 0) return false;
  for (int e : t_exp) {
    if (e != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t k = 0; k < out.t_exp.size(); ++k) out.t_exp[k] += other.t_exp[k];
  out.y_exp += other.y_exp;
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.t_degree();
  const int db = b.t_degree();
  if (da != db) return da < db;
  if (a.t_exp != b.t_exp) return a.t_exp < b.t_exp;
  return a.y_exp < b.y_exp;
}

bool fits_context(const Monomial& mon, const TruncationContext& ctx) {
  if (mon.t_exp.size() != static_cast<std::size_t>(ctx.num_vars)) return false;
  if (mon.y_exp < 0 || mon.y_exp > ctx.max_y_degree) return false;
  for (int e : mon.t_exp) {
    if (e < 0) return false;
  }
  return mon.t_degree() <= ctx.max_degree;
}

std::string monomial_to_string(const Monomial& mon) {
  std::string out;
  for (std::size_t k = 0; k < mon.t_exp.size(); ++k) {
    if (mon.t_exp[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "t" + std::to_string(k + 1);
    if (mon.t_exp[k] > 1) out += "^" + std::to_string(mon.t_exp[k]);
  }
  if (mon.y_exp > 0) {
    if (!out.empty()) out += ' ';
    out += "y";
    if (mon.y_exp > 1) out += "^" + std::to_string(mon.y_exp);
  }
  return out.empty() ? "1" : out;
}

}  // namespace geode
