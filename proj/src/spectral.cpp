#include "flagspec/spectral.hpp"

#include <algorithm>
#include <map>

#include "flagspec/error.hpp"

namespace flagspec {

namespace {

void require_bundle(const FlagVariety& x, const LineBundleClass& l) {
  if (l.coeffs.size() != x.painted().size())
    throw Error(ErrorKind::invalid_argument, "line bundle needs one coefficient per painted node");
}

void require_spinc(const FlagVariety& x, const LineBundleClass& l) {
  if (!is_spinc(x, l))
    throw Error(ErrorKind::not_spinc,
                "line bundle does not define a Spin^c structure: parity differs from delta_P on some painted node");
}

void require_kahler(const FlagVariety& x, const KahlerClass& omega) {
  if (omega.coeffs.size() != x.painted().size())
    throw Error(ErrorKind::invalid_argument, "Kähler class needs one coefficient per painted node");
  if (!is_kahler(x, omega)) throw Error(ErrorKind::not_kahler, "class is not in the Kähler cone: a coefficient is <= 0");
}

std::vector<Rational> ratios(const std::vector<Rational>& num, const std::vector<Rational>& den) {
  std::vector<Rational> out(num.size());
  for (std::size_t k = 0; k < num.size(); ++k) out[k] = num[k] / den[k];
  return out;
}

}  // namespace

Spectrum signed_sum_spectrum(const Rational& base, const std::vector<Rational>& weights,
                             const SpectrumOptions& options) {
  Spectrum s;
  s.total = pow2(weights.size());
  Rational spread = 0;
  for (const auto& w : weights) spread += abs(w);
  s.min = base - spread;
  s.max = base + spread;

  auto summarize = [&](bool truncated) {
    s.entries.clear();
    s.truncated = truncated;
    return s;
  };
  if (options.summary_only) return summarize(true);

  // Work on integers: scale by the lcm of the denominators.
  BigInt scale = 1;
  for (const auto& w : weights) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), w.get_den().get_mpz_t());

  // Group equal |w|: c copies of a contribute a(c - 2j) with multiplicity C(c, j).
  std::map<BigInt, unsigned long> groups;
  unsigned long zeros = 0;
  for (const auto& w : weights) {
    if (w == 0) {
      ++zeros;
      continue;
    }
    Rational scaled = abs(w) * scale;
    ++groups[scaled.get_num()];
  }

  std::map<BigInt, BigInt> dist{{BigInt(0), pow2(zeros)}};
  for (const auto& [a, c] : groups) {
    std::vector<std::pair<BigInt, BigInt>> terms;
    for (unsigned long j = 0; j <= c; ++j)
      terms.emplace_back(a * (static_cast<long>(c) - 2 * static_cast<long>(j)), binomial(c, j));
    std::map<BigInt, BigInt> next;
    for (const auto& [v, mult] : dist)
      for (const auto& [shift, weight] : terms) next[v + shift] += mult * weight;
    dist = std::move(next);
    if (dist.size() > options.max_distinct) return summarize(true);
  }

  s.entries.reserve(dist.size());
  for (auto& [v, mult] : dist) {
    Rational value(v, scale);
    value.canonicalize();
    s.entries.push_back({base + value, std::move(mult)});
  }
  return s;
}

bool is_spinc(const FlagVariety& x, const LineBundleClass& l) {
  require_bundle(x, l);
  auto parity = spinc_parity(x);
  for (std::size_t k = 0; k < parity.size(); ++k)
    if (((l.coeffs[k] % 2) + 2) % 2 != parity[k]) return false;
  return true;
}

LineBundleClass twist_weight(const FlagVariety& x, const LineBundleClass& l) {
  require_spinc(x, l);
  auto anti = anticanonical_bundle(x);
  LineBundleClass e;
  for (std::size_t k = 0; k < l.coeffs.size(); ++k) {
    long d = l.coeffs[k] - anti.coeffs[k];
    if (d % 2 != 0) throw std::logic_error("twist weight is not integral");
    e.coeffs.push_back(d / 2);
  }
  return e;
}

Spectrum theta_spectrum(const FlagVariety& x, const KahlerClass& theta, const KahlerClass& omega,
                        const SpectrumOptions& options) {
  require_kahler(x, omega);
  if (theta.coeffs.size() != x.painted().size())
    throw Error(ErrorKind::invalid_argument, "form needs one coefficient per painted node");
  if (theta.pi_units != omega.pi_units)
    throw Error(ErrorKind::unit_mismatch, "form and Kähler class must use the same pi units");
  auto om = x.radical_pairings(x.embed(omega));
  auto spec = signed_sum_spectrum(Rational(0), ratios(x.radical_pairings(x.embed(theta)), om), options);
  spec.imaginary = true;
  return spec;
}

Spectrum weitzenboeck_spectrum(const FlagVariety& x, const LineBundleClass& l, const KahlerClass& omega,
                               const SpectrumOptions& options) {
  require_spinc(x, l);
  require_kahler(x, omega);
  auto om = x.radical_pairings(x.embed(omega));
  Rational base = 0;
  for (const auto& r : ratios(x.anticanonical_pairings(), om)) base += r;
  auto spec = signed_sum_spectrum(base, ratios(x.radical_pairings(x.embed(l)), om), options);
  spec.pi_power = 1 - omega.pi_power();
  return spec;
}

PiScalar weitzenboeck_min(const FlagVariety& x, const LineBundleClass& l, const KahlerClass& omega) {
  require_spinc(x, l);
  require_kahler(x, omega);
  auto om = x.radical_pairings(x.embed(omega));
  auto lp = x.radical_pairings(x.embed(l));
  const auto& dp = x.anticanonical_pairings();
  Rational s = 0;
  for (std::size_t k = 0; k < om.size(); ++k) s += (dp[k] - abs(lp[k])) / om[k];
  return PiScalar(s, 1 - omega.pi_power());
}

DiracBound dirac_lower_bound(const FlagVariety& x, const LineBundleClass& l, const KahlerClass& omega) {
  DiracBound b;
  b.value = weitzenboeck_min(x, l, omega);
  b.vacuous = b.value.sign() <= 0;
  return b;
}

HarmonicReport harmonic_spinors(const FlagVariety& x, const LineBundleClass& l) {
  HarmonicReport report;
  report.twist_weight = twist_weight(x, l);
  report.spinc_ok = true;
  auto cohomology = bwb_classify(x.root_system(), x.embed(report.twist_weight));
  if (cohomology.vanishes()) return report;
  auto& c = *cohomology.concentrated;
  HarmonicSpinors h;
  h.kernel_dimension = c.dimension;
  h.concentration_degree = c.degree;
  h.index = c.degree % 2 == 0 ? c.dimension : BigInt(-c.dimension);
  h.word = std::move(c.word);
  h.dominant_weight = std::move(c.dominant_weight);
  report.harmonic = std::move(h);
  return report;
}

}  // namespace flagspec
