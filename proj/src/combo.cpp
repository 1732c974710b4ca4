#include "g2atomic/combo.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

namespace g2 {

BasisLabel BasisLabel::precanonical(int level) {
  if (level < 2 || level > 6) throw DomainError("precanonical basis level must lie in [2,6]");
  return BasisLabel{Kind::PreCanonical, level};
}

BasisLabel BasisLabel::adjusted(int level) {
  if (level < 2 || level > 6) throw DomainError("adjusted basis level must lie in [2,6]");
  return BasisLabel{Kind::Adjusted, level};
}

BasisLabel BasisLabel::normalized() const {
  if ((kind_ == Kind::PreCanonical || kind_ == Kind::Adjusted) && level_ == 6) return canonical();
  if (kind_ == Kind::PreCanonical && level_ == 2) return atomic();
  return *this;
}

std::string BasisLabel::name() const {
  switch (kind_) {
    case Kind::Canonical: return "canonical";
    case Kind::Standard: return "standard";
    case Kind::Atomic: return "atomic";
    case Kind::PreCanonical: return "precanonical-" + std::to_string(level_);
    case Kind::Adjusted: return "adjusted-" + std::to_string(level_);
  }
  return "?";
}

BasisLabel BasisLabel::parse(std::string_view name) {
  if (name == "canonical") return canonical();
  if (name == "standard") return standard();
  if (name == "atomic") return atomic();
  const auto parse_level = [&](std::string_view prefix) -> std::optional<int> {
    if (!name.starts_with(prefix)) return std::nullopt;
    const std::string_view digits = name.substr(prefix.size());
    int level = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), level);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return level;
  };
  if (auto level = parse_level("precanonical-")) return precanonical(*level);
  if (auto level = parse_level("adjusted-")) return adjusted(*level);
  throw DomainError("unknown basis label '" + std::string(name) + "'");
}

Combination Combination::single(BasisLabel basis, Weight w, LaurentPoly coeff) {
  Combination out(basis);
  out.add_term(w, coeff);
  return out;
}

LaurentPoly Combination::coeff(Weight w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void Combination::add_term(Weight w, const LaurentPoly& coeff) {
  require_dominant(w, "Combination::add_term");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Combination Combination::relabeled(BasisLabel basis) const {
  Combination out = *this;
  out.basis_ = basis;
  return out;
}

void Combination::require_same_basis(const Combination& other, const char* op) const {
  if (!basis_.equivalent(other.basis_))
    throw BasisMismatch(std::string(op) + ": " + basis_.name() + " vs " + other.basis_.name());
}

Combination& Combination::operator+=(const Combination& other) {
  require_same_basis(other, "combination +");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Combination& Combination::operator-=(const Combination& other) {
  require_same_basis(other, "combination -");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Combination operator*(const LaurentPoly& p, const Combination& x) {
  Combination out(x.basis_);
  if (p.is_zero()) return out;
  for (const auto& [w, c] : x.terms_) out.add_term(w, p * c);
  return out;
}

bool operator==(const Combination& x, const Combination& y) {
  return x.basis_.equivalent(y.basis_) && x.terms_ == y.terms_;
}

bool display_before(Weight x, Weight y) {
  const RootCoords rx = to_root_coords(x);
  const RootCoords ry = to_root_coords(y);
  return std::tuple(rx.c1 + rx.c2, rx.c1, rx.c2) > std::tuple(ry.c1 + ry.c2, ry.c1, ry.c2);
}

std::vector<Weight> sorted_support(const Combination& x, std::optional<Weight> designated) {
  std::vector<Weight> rest;
  rest.reserve(x.size());
  bool has_designated = false;
  for (const auto& [w, c] : x.terms()) {
    if (designated && w == *designated)
      has_designated = true;
    else
      rest.push_back(w);
  }
  std::sort(rest.begin(), rest.end(), display_before);
  if (has_designated) rest.insert(rest.begin(), *designated);
  return rest;
}

}  // namespace g2
