#pragma once

// Spin^c structures on X_P and the spectra of invariant operators acting on
// their spinor bundles.
//
// At a point the spinor space has a basis indexed by sign vectors
// (eps_beta)_{beta in Phi_I^+}, and an invariant (1,1)-form theta acts
// diagonally with eigenvalue i * sum_beta eps_beta <theta, beta^vee> /
// <omega, beta^vee>. The Weitzenböck remainder S/4 + F_A/2 is diagonal in the
// same basis. Spectra are returned as multisets over all 2^m sign vectors.

#include <cstddef>
#include <optional>
#include <vector>

#include "flagspec/flag_variety.hpp"
#include "flagspec/pi_scalar.hpp"
#include "flagspec/rational.hpp"
#include "flagspec/weyl.hpp"

namespace flagspec {

inline constexpr std::size_t kDefaultMaxDistinct = std::size_t{1} << 20;

struct SpectrumOptions {
  /// Once more distinct values than this appear, the computation stops and
  /// returns a summary (min, max, total) marked as truncated.
  std::size_t max_distinct = kDefaultMaxDistinct;
  /// Skip the convolution and return the summary directly.
  bool summary_only = false;
};

struct SpectrumEntry {
  Rational value;
  BigInt multiplicity;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Every eigenvalue is value * pi^pi_power, times i when imaginary.
struct Spectrum {
  std::vector<SpectrumEntry> entries;  // strictly increasing; empty when truncated
  BigInt total;                        // 2^m
  int pi_power = 0;
  bool imaginary = false;
  bool truncated = false;
  Rational min;
  Rational max;

  PiScalar min_value() const { return PiScalar(min, pi_power); }
  PiScalar max_value() const { return PiScalar(max, pi_power); }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// The multiset { base + sum_k eps_k * weights[k] : eps in {+1,-1}^n },
/// merged by value.
Spectrum signed_sum_spectrum(const Rational& base, const std::vector<Rational>& weights,
                             const SpectrumOptions& options = {});

/// L is Spin^c iff L_alpha = <delta_P, alpha^vee> (mod 2) for every painted alpha.
bool is_spinc(const FlagVariety& x, const LineBundleClass& l);

/// phi(E) = (phi(L) - delta_P) / 2.
LineBundleClass twist_weight(const FlagVariety& x, const LineBundleClass& l);

/// Spectrum of the closed invariant form theta on spinors (purely imaginary).
Spectrum theta_spectrum(const FlagVariety& x, const KahlerClass& theta, const KahlerClass& omega,
                        const SpectrumOptions& options = {});

/// Spectrum of D_A^2 - Delta_A for the Spin^c structure defined by L.
Spectrum weitzenboeck_spectrum(const FlagVariety& x, const LineBundleClass& l, const KahlerClass& omega,
                               const SpectrumOptions& options = {});

/// Smallest eigenvalue of D_A^2 - Delta_A, computed in closed form.
PiScalar weitzenboeck_min(const FlagVariety& x, const LineBundleClass& l, const KahlerClass& omega);

struct DiracBound {
  PiScalar value;  // lambda^2 >= value for every eigenvalue lambda of D_A
  bool vacuous = false;  // value <= 0, so the bound carries no information
};

DiracBound dirac_lower_bound(const FlagVariety& x, const LineBundleClass& l, const KahlerClass& omega);

struct HarmonicSpinors {
  BigInt kernel_dimension;
  std::size_t concentration_degree = 0;
  BigInt index;  // (-1)^degree * kernel_dimension
  WeylWord word;
  Weight dominant_weight;  // w * phi(E)
};

struct HarmonicReport {
  bool spinc_ok = false;
  LineBundleClass twist_weight;
  std::optional<HarmonicSpinors> harmonic;  // empty: no harmonic spinors

  bool has_harmonic_spinors() const { return harmonic.has_value(); }
};

HarmonicReport harmonic_spinors(const FlagVariety& x, const LineBundleClass& l);

}  // namespace flagspec
