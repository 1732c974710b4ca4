#pragma once

/**
 * @file lattice.hpp
 * @brief The G2 weight lattice in fundamental-weight coordinates.
 *
 * A weight (a,b) stands for a*w1 + b*w2. The simple roots are
 * alpha1 = (2,-1) and alpha2 = (-3,2), so w1 = 2*alpha1 + alpha2 and
 * w2 = 3*alpha1 + 2*alpha2. All arithmetic is exact and overflow-checked.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "g2atomic/errors.hpp"

namespace g2 {

struct Weight {
  std::int64_t a = 0;  // coefficient of w1
  std::int64_t b = 0;  // coefficient of w2

  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;

  [[nodiscard]] constexpr bool is_dominant() const { return a >= 0 && b >= 0; }
  [[nodiscard]] std::string to_string() const;
};

Weight operator+(Weight x, Weight y);
Weight operator-(Weight x, Weight y);
Weight operator-(Weight x);
std::ostream& operator<<(std::ostream& os, Weight w);

/// Coefficients with respect to the simple roots alpha1, alpha2.
struct RootCoords {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  friend constexpr bool operator==(const RootCoords&, const RootCoords&) = default;
};

inline constexpr Weight kRho{1, 1};
inline constexpr Weight kAlpha1{2, -1};
inline constexpr Weight kAlpha2{-3, 2};

/// Positive root with its height, as tabulated for G2.
struct PositiveRoot {
  Weight weight;
  RootCoords root;
  int height;
};

/// The six positive roots, ordered by height (alpha1, alpha2, gamma2..gamma5).
inline constexpr std::array<PositiveRoot, 6> kPositiveRoots{{
    {{2, -1}, {1, 0}, 1},
    {{-3, 2}, {0, 1}, 1},
    {{-1, 1}, {1, 1}, 2},
    {{1, 0}, {2, 1}, 3},
    {{3, -1}, {3, 1}, 4},
    {{0, 1}, {3, 2}, 5},
}};

/// gamma_k: the unique positive root of height k, for k in [2,5].
Weight gamma(int k);

/// Positive roots of height >= level, level in [2,6]. Empty for level 6.
std::span<const Weight> roots_of_height_at_least(int level);

RootCoords to_root_coords(Weight w);
std::int64_t height(Weight w);

/// mu <= lam in the dominance order: lam - mu is a non-negative combination
/// of simple roots.
bool dominance_leq(Weight mu, Weight lam);

/// Linear action of the simple reflection s_i, i in {1,2}.
Weight reflect(int i, Weight w);

/// Dot action s_i . w = s_i(w + rho) - rho.
Weight dot_reflect(int i, Weight w);

/// Outcome of straightening a weight under the dot action.
class SignedDominant {
public:
  static SignedDominant singular() { return SignedDominant{}; }
  static SignedDominant regular(int sign, Weight rep) { return SignedDominant{sign, rep}; }

  [[nodiscard]] bool is_singular() const { return sign_ == 0; }
  /// +1 or -1; 0 when singular.
  [[nodiscard]] int sign() const { return sign_; }
  /// Dominant representative; meaningless when singular.
  [[nodiscard]] Weight rep() const { return rep_; }

  friend bool operator==(const SignedDominant&, const SignedDominant&) = default;

private:
  SignedDominant() = default;
  SignedDominant(int sign, Weight rep) : sign_(sign), rep_(rep) {}

  int sign_ = 0;
  Weight rep_{};
};

SignedDominant dominant_rep(Weight w);

/// The dominant weight in the (linear) Weyl orbit of w.
Weight dominant_conjugate(Weight w);

/// Subset of {2,3,4,5}, indexing the roots gamma_2..gamma_5.
class HeightSet {
public:
  constexpr HeightSet() = default;
  static HeightSet from_bits(unsigned bits);
  static HeightSet of(std::initializer_list<int> members);

  [[nodiscard]] constexpr unsigned bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] bool contains(int k) const;
  [[nodiscard]] int size() const;
  /// Smallest member; the set must be non-empty.
  [[nodiscard]] int min() const;
  [[nodiscard]] HeightSet without(int k) const;
  /// Sum of gamma_k over the members.
  [[nodiscard]] Weight gamma_sum() const;
  [[nodiscard]] std::string to_string() const;

  friend constexpr bool operator==(HeightSet, HeightSet) = default;

  /// All 16 subsets, in bit order.
  static std::array<HeightSet, 16> all();

private:
  constexpr explicit HeightSet(unsigned bits) : bits_(bits) {}
  unsigned bits_ = 0;  // bit (k-2) set iff k is a member
};

/// Membership in X_k (k in [2,5]) for a dominant weight.
bool x_set_member(int k, Weight lam);

/// Membership in X_I, defined recursively through i0 = min I.
bool x_I_member(HeightSet set, Weight lam);

/// Throws DomainError unless w is dominant.
void require_dominant(Weight w, const char* what);

}  // namespace g2
