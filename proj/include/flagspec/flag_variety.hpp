#pragma once

// X_P = G/P described by its painted nodes (the simple roots outside the
// Levi factor). Picard and Kähler-cone vectors are indexed by the painted
// nodes in increasing order.

#include <optional>
#include <vector>

#include "flagspec/pi_scalar.hpp"
#include "flagspec/rational.hpp"
#include "flagspec/root_system.hpp"

namespace flagspec {

/// Coordinates of a line bundle's weight on the painted fundamental weights.
struct LineBundleClass {
  std::vector<long> coeffs;

  friend bool operator==(const LineBundleClass&, const LineBundleClass&) = default;
};

/// An invariant (1,1)-class in painted coordinates. With pi_units set, each
/// coefficient stands for coefficient * pi. Kähler classes have every
/// coefficient positive; the same shape also carries arbitrary closed forms.
struct KahlerClass {
  std::vector<Rational> coeffs;
  bool pi_units = false;

  int pi_power() const { return pi_units ? 1 : 0; }
  KahlerClass scaled(const Rational& c) const;
  friend bool operator==(const KahlerClass&, const KahlerClass&) = default;
};

class FlagVariety {
 public:
  const RootSystem& root_system() const { return rs_; }
  /// 1-based, strictly increasing.
  const std::vector<int>& painted() const { return painted_; }
  /// Indices into root_system().positive_roots() making up Phi_I^+.
  const std::vector<std::size_t>& radical_roots() const { return radical_; }
  const Weight& delta_p() const { return delta_p_; }
  /// Complex dimension m = |Phi_I^+|.
  std::size_t dim_c() const { return radical_.size(); }

  /// <delta_P, beta^vee> for each radical root, in radical_roots() order.
  const std::vector<Rational>& anticanonical_pairings() const { return delta_pairings_; }

  /// Embeds painted-node coordinates into a full weight (zeros elsewhere).
  Weight embed(const std::vector<Rational>& painted_coords) const;
  Weight embed(const LineBundleClass& l) const;
  Weight embed(const KahlerClass& c) const;

  /// <lambda, beta^vee> for every radical root.
  std::vector<Rational> radical_pairings(const Weight& lambda) const;

  friend FlagVariety build_flag(RootSystem rs, std::vector<int> painted);

 private:
  RootSystem rs_;
  std::vector<int> painted_;
  std::vector<std::size_t> radical_;
  Weight delta_p_;
  std::vector<Rational> delta_pairings_;
};

/// Throws Error(invalid_argument) for an empty, duplicated or out-of-range
/// painted set.
FlagVariety build_flag(RootSystem rs, std::vector<int> painted);

/// <lambda, beta^vee>, the degree of the class lambda on the curve P^1_beta.
Rational curve_pairing(const FlagVariety& x, const Weight& lambda, const Root& beta);

/// delta_P, the weight of the anticanonical bundle.
Weight canonical_weight(const FlagVariety& x);

/// gcd of <delta_P, alpha^vee> over painted alpha.
long fano_index(const FlagVariety& x);

bool is_kahler(const FlagVariety& x, const KahlerClass& c);

/// 4 pi sum_beta <delta_P, beta^vee> / <omega, beta^vee>.
PiScalar scalar_curvature(const FlagVariety& x, const KahlerClass& omega);

/// sum_beta <E, beta^vee> / <omega, beta^vee>.
PiScalar hym_slope(const FlagVariety& x, const LineBundleClass& e, const KahlerClass& omega);

/// The invariant Kähler-Einstein class c * delta_P with scalar curvature
/// s_target. Without a target, returns the Ricci form's own class
/// 2 pi delta_P (scalar curvature 2m).
KahlerClass ke_class(const FlagVariety& x, const std::optional<PiScalar>& s_target = std::nullopt);

/// Rescales omega so that its scalar curvature equals s_target.
KahlerClass rescale_to_scalar(const FlagVariety& x, const KahlerClass& omega, const PiScalar& s_target);

/// Painted-coordinate vector of delta_P as a line bundle (K^{-1}).
LineBundleClass anticanonical_bundle(const FlagVariety& x);

/// <delta_P, alpha^vee> mod 2 for each painted alpha.
std::vector<int> spinc_parity(const FlagVariety& x);

}  // namespace flagspec
