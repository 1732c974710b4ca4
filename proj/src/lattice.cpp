#include "g2atomic/lattice.hpp"

#include <bit>
#include <ostream>
#include <sstream>

namespace g2 {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

namespace {

// gamma_2..gamma_5 in height order; Phi^{>=level} is the suffix from level.
constexpr std::array<Weight, 4> kGammas{{{-1, 1}, {1, 0}, {3, -1}, {0, 1}}};

// Reflections while straightening a weight; |W_f| = 12 bounds any orbit walk.
constexpr int kReflectionCap = 12;

}  // namespace

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(' << a << ',' << b << ')';
  return os.str();
}

Weight operator+(Weight x, Weight y) { return {checked_add(x.a, y.a), checked_add(x.b, y.b)}; }
Weight operator-(Weight x, Weight y) { return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)}; }
Weight operator-(Weight x) { return Weight{} - x; }

std::ostream& operator<<(std::ostream& os, Weight w) { return os << '(' << w.a << ',' << w.b << ')'; }

Weight gamma(int k) {
  if (k < 2 || k > 5) throw DomainError("gamma: height must lie in [2,5], got " + std::to_string(k));
  return kGammas[static_cast<std::size_t>(k - 2)];
}

std::span<const Weight> roots_of_height_at_least(int level) {
  if (level < 2 || level > 6)
    throw DomainError("roots_of_height_at_least: level must lie in [2,6], got " + std::to_string(level));
  const auto skip = static_cast<std::size_t>(level - 2);
  return std::span<const Weight>(kGammas).subspan(skip);
}

RootCoords to_root_coords(Weight w) {
  return {checked_add(checked_mul(2, w.a), checked_mul(3, w.b)), checked_add(w.a, checked_mul(2, w.b))};
}

std::int64_t height(Weight w) {
  const RootCoords r = to_root_coords(w);
  return checked_add(r.c1, r.c2);
}

bool dominance_leq(Weight mu, Weight lam) {
  const RootCoords d = to_root_coords(lam - mu);
  return d.c1 >= 0 && d.c2 >= 0;
}

Weight reflect(int i, Weight w) {
  // s1(a,b) = (a,b) - a*alpha1, s2(a,b) = (a,b) - b*alpha2
  switch (i) {
    case 1: return {-w.a, checked_add(w.a, w.b)};
    case 2: return {checked_add(w.a, checked_mul(3, w.b)), -w.b};
    default: throw DomainError("reflect: index must be 1 or 2, got " + std::to_string(i));
  }
}

Weight dot_reflect(int i, Weight w) { return reflect(i, w + kRho) - kRho; }

SignedDominant dominant_rep(Weight w) {
  Weight nu = w + kRho;
  int steps = 0;
  while (nu.a < 0 || nu.b < 0) {
    if (++steps > kReflectionCap) throw InternalError("dominant_rep: reflection cap exceeded at " + w.to_string());
    nu = reflect(nu.a < 0 ? 1 : 2, nu);
  }
  if (nu.a == 0 || nu.b == 0) return SignedDominant::singular();
  return SignedDominant::regular(steps % 2 == 0 ? 1 : -1, nu - kRho);
}

Weight dominant_conjugate(Weight w) {
  int steps = 0;
  while (w.a < 0 || w.b < 0) {
    if (++steps > kReflectionCap) throw InternalError("dominant_conjugate: reflection cap exceeded");
    w = reflect(w.a < 0 ? 1 : 2, w);
  }
  return w;
}

HeightSet HeightSet::from_bits(unsigned bits) {
  if (bits > 0xFu) throw DomainError("HeightSet: bits out of range");
  return HeightSet{bits};
}

HeightSet HeightSet::of(std::initializer_list<int> members) {
  unsigned bits = 0;
  for (int k : members) {
    if (k < 2 || k > 5) throw DomainError("HeightSet: member must lie in [2,5]");
    bits |= 1u << (k - 2);
  }
  return HeightSet{bits};
}

bool HeightSet::contains(int k) const { return k >= 2 && k <= 5 && (bits_ >> (k - 2)) & 1u; }

int HeightSet::size() const { return std::popcount(bits_); }

int HeightSet::min() const {
  if (bits_ == 0) throw DomainError("HeightSet::min of empty set");
  return std::countr_zero(bits_) + 2;
}

HeightSet HeightSet::without(int k) const {
  if (k < 2 || k > 5) return *this;
  return HeightSet{bits_ & ~(1u << (k - 2))};
}

Weight HeightSet::gamma_sum() const {
  Weight sum{};
  for (int k = 2; k <= 5; ++k)
    if (contains(k)) sum = sum + gamma(k);
  return sum;
}

std::string HeightSet::to_string() const {
  std::string out = "{";
  for (int k = 2; k <= 5; ++k) {
    if (!contains(k)) continue;
    if (out.size() > 1) out += ',';
    out += std::to_string(k);
  }
  return out + "}";
}

std::array<HeightSet, 16> HeightSet::all() {
  std::array<HeightSet, 16> sets;
  for (unsigned bits = 0; bits < 16; ++bits) sets[bits] = HeightSet{bits};
  return sets;
}

void require_dominant(Weight w, const char* what) {
  if (!w.is_dominant()) throw DomainError(std::string(what) + ": weight " + w.to_string() + " is not dominant");
}

bool x_set_member(int k, Weight lam) {
  require_dominant(lam, "x_set_member");
  switch (k) {
    case 5: return lam.b >= 1;
    case 4: return lam.a >= 3;
    case 3: return lam.a >= 2;
    case 2: return lam.a >= 2 && lam.b >= 1;
    default: throw DomainError("x_set_member: k must lie in [2,5], got " + std::to_string(k));
  }
}

bool x_I_member(HeightSet set, Weight lam) {
  require_dominant(lam, "x_I_member");
  if (set.empty()) return true;
  const int first = set.min();
  if (!x_set_member(first, lam)) return false;
  return x_I_member(set.without(first), lam - gamma(first));
}

}  // namespace g2
