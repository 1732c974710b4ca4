#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>

namespace g2 {

/// Sparse Laurent polynomial in q with exact int64 coefficients.
///
/// Canonical form: no zero coefficient is ever stored, so the zero
/// polynomial is the empty map and structural equality is ring equality.
/// Iteration runs in ascending exponent. Every arithmetic step is
/// overflow-checked and throws std::overflow_error instead of wrapping.
class LaurentPoly {
public:
  using Exponent = std::int64_t;
  using Coefficient = std::int64_t;
  using Terms = std::map<Exponent, Coefficient>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const Exponent, Coefficient>> terms);

  static LaurentPoly constant(Coefficient c) { return monomial(c, 0); }
  static LaurentPoly monomial(Coefficient c, Exponent e);
  /// q^e
  static LaurentPoly q_power(Exponent e) { return monomial(1, e); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] Coefficient coeff(Exponent e) const;

  [[nodiscard]] std::optional<Exponent> degree() const;
  [[nodiscard]] std::optional<Exponent> trailing_degree() const;
  [[nodiscard]] Coefficient eval_at_one() const;
  [[nodiscard]] bool is_nonnegative() const;
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }

  /// sign * q^k * p
  [[nodiscard]] LaurentPoly scale_qpow(Exponent k, int sign) const;

  void add_term(Exponent e, Coefficient c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator-(const LaurentPoly& x) { return x.scale_qpow(0, -1); }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  Terms terms_;
};

/// Debug rendering, e.g. "2q^4 + q^3 - 1". Display formats live in render.hpp.
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace g2
