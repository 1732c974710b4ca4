#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2atomic/lattice.hpp"
#include "g2atomic/polyq.hpp"

namespace g2 {

/// Which basis of the spherical Hecke algebra a combination is written in.
class BasisLabel {
public:
  enum class Kind { Canonical, Standard, Atomic, PreCanonical, Adjusted };

  static BasisLabel canonical() { return BasisLabel{Kind::Canonical, 0}; }
  static BasisLabel standard() { return BasisLabel{Kind::Standard, 0}; }
  static BasisLabel atomic() { return BasisLabel{Kind::Atomic, 0}; }
  /// N^level, level in [2,6].
  static BasisLabel precanonical(int level);
  /// Adjusted N~^level, level in [2,6].
  static BasisLabel adjusted(int level);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int level() const { return level_; }

  /// Collapses labels that name the same basis: level 6 of either family is
  /// the canonical basis, and N^2 is the atomic basis.
  [[nodiscard]] BasisLabel normalized() const;
  [[nodiscard]] bool equivalent(BasisLabel other) const { return normalized() == other.normalized(); }

  /// "canonical", "standard", "atomic", "precanonical-3", "adjusted-4"
  [[nodiscard]] std::string name() const;
  static BasisLabel parse(std::string_view name);

  friend bool operator==(BasisLabel, BasisLabel) = default;

private:
  BasisLabel(Kind kind, int level) : kind_(kind), level_(level) {}

  Kind kind_;
  int level_;
};

/// Sparse Z[q]-linear combination of basis elements indexed by dominant
/// weights. Zero coefficients are never stored.
class Combination {
public:
  using Terms = std::map<Weight, LaurentPoly>;

  explicit Combination(BasisLabel basis) : basis_(basis) {}

  /// coeff * B_w
  static Combination single(BasisLabel basis, Weight w, LaurentPoly coeff = LaurentPoly::constant(1));

  [[nodiscard]] BasisLabel basis() const { return basis_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] LaurentPoly coeff(Weight w) const;

  /// Adds coeff to the coefficient of w; w must be dominant.
  void add_term(Weight w, const LaurentPoly& coeff);

  /// Same terms under another label (used where two bases coincide).
  [[nodiscard]] Combination relabeled(BasisLabel basis) const;

  Combination& operator+=(const Combination& other);
  Combination& operator-=(const Combination& other);

  friend Combination operator+(Combination x, const Combination& y) { return x += y; }
  friend Combination operator-(Combination x, const Combination& y) { return x -= y; }
  friend Combination operator*(const LaurentPoly& p, const Combination& x);

  /// Equal terms and equivalent basis labels.
  friend bool operator==(const Combination& x, const Combination& y);

private:
  void require_same_basis(const Combination& other, const char* op) const;

  BasisLabel basis_;
  Terms terms_;
};

/// sum over w of x[w] * expand(w), all expansions written in `target`.
template <typename Expander>
Combination substitute(const Combination& x, BasisLabel target, Expander&& expand) {
  Combination out(target);
  for (const auto& [w, coeff] : x.terms()) {
    const Combination image = expand(w);
    if (!image.basis().equivalent(target))
      throw BasisMismatch("substitute: expander produced " + image.basis().name() + ", expected " + target.name());
    for (const auto& [v, c] : image.terms()) out.add_term(v, coeff * c);
  }
  return out;
}

/// Display order: descending height, then descending first and second root
/// coordinate. A strict total order on weights.
bool display_before(Weight x, Weight y);

/// Support of x in display order, with `designated` (if present) first.
std::vector<Weight> sorted_support(const Combination& x, std::optional<Weight> designated = std::nullopt);

}  // namespace g2
