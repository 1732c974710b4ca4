#include "g2atomic/polyq.hpp"

#include <ostream>
#include <stdexcept>

#include "g2atomic/errors.hpp"
#include "g2atomic/render.hpp"

namespace g2 {

using detail::checked_add;
using detail::checked_mul;

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Exponent, Coefficient>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(Coefficient c, Exponent e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly::Coefficient LaurentPoly::coeff(Exponent e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::trailing_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

LaurentPoly::Coefficient LaurentPoly::eval_at_one() const {
  Coefficient sum = 0;
  for (const auto& [e, c] : terms_) sum = checked_add(sum, c);
  return sum;
}

bool LaurentPoly::is_nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

LaurentPoly LaurentPoly::scale_qpow(Exponent k, int sign) const {
  if (sign != 1 && sign != -1) throw std::invalid_argument("scale_qpow: sign must be +1 or -1");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), checked_add(e, k), checked_mul(c, sign));
  return out;
}

void LaurentPoly::add_term(Exponent e, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly out;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) out.add_term(checked_add(ex, ey), checked_mul(cx, cy));
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << render_poly(p, OutputFormat::Text); }

}  // namespace g2
