#include "flagspec/flag_variety.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "flagspec/error.hpp"

namespace flagspec {

namespace {

void require_kahler(const FlagVariety& x, const KahlerClass& c) {
  if (c.coeffs.size() != x.painted().size())
    throw Error(ErrorKind::invalid_argument, "Kähler class needs one coefficient per painted node");
  if (!is_kahler(x, c)) throw Error(ErrorKind::not_kahler, "class is not in the Kähler cone: a coefficient is <= 0");
}

// sum_beta numerators[beta] / <omega, beta^vee>
Rational weighted_sum(const FlagVariety& x, const std::vector<Rational>& numerators, const KahlerClass& omega) {
  auto denominators = x.radical_pairings(x.embed(omega));
  Rational s = 0;
  for (std::size_t k = 0; k < numerators.size(); ++k) s += numerators[k] / denominators[k];
  return s;
}

}  // namespace

KahlerClass KahlerClass::scaled(const Rational& c) const {
  KahlerClass out = *this;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

FlagVariety build_flag(RootSystem rs, std::vector<int> painted) {
  if (painted.empty())
    throw Error(ErrorKind::invalid_argument, "painted node set must be non-empty (X_P would be a point)");
  std::sort(painted.begin(), painted.end());
  if (std::adjacent_find(painted.begin(), painted.end()) != painted.end())
    throw Error(ErrorKind::invalid_argument, "painted nodes must be distinct");
  for (int p : painted)
    if (p < 1 || static_cast<std::size_t>(p) > rs.rank())
      throw Error(ErrorKind::invalid_argument,
                  "painted node " + std::to_string(p) + " out of range 1.." + std::to_string(rs.rank()));

  FlagVariety x;
  x.rs_ = std::move(rs);
  x.painted_ = std::move(painted);
  const auto& roots = x.rs_.positive_roots();
  Weight sum(x.rs_.rank());
  for (std::size_t b = 0; b < roots.size(); ++b) {
    bool radical = std::any_of(x.painted_.begin(), x.painted_.end(),
                               [&](int p) { return roots[b].simple_coords[p - 1] != 0; });
    if (!radical) continue;
    x.radical_.push_back(b);
    sum += root_as_weight(x.rs_, roots[b]);
  }
  for (std::size_t i = 0; i < sum.size(); ++i) {
    bool is_painted = std::binary_search(x.painted_.begin(), x.painted_.end(), static_cast<int>(i + 1));
    if (!is_painted && sum[i] != 0) throw std::logic_error("delta_P does not vanish on an unpainted node");
  }
  x.delta_p_ = std::move(sum);
  x.delta_pairings_ = x.radical_pairings(x.delta_p_);
  return x;
}

Weight FlagVariety::embed(const std::vector<Rational>& painted_coords) const {
  if (painted_coords.size() != painted_.size())
    throw Error(ErrorKind::invalid_argument,
                "expected " + std::to_string(painted_.size()) + " painted-node coordinates, got " +
                    std::to_string(painted_coords.size()));
  Weight w(rs_.rank());
  for (std::size_t k = 0; k < painted_.size(); ++k) w[painted_[k] - 1] = painted_coords[k];
  return w;
}

Weight FlagVariety::embed(const LineBundleClass& l) const {
  std::vector<Rational> c(l.coeffs.begin(), l.coeffs.end());
  return embed(c);
}

Weight FlagVariety::embed(const KahlerClass& c) const { return embed(c.coeffs); }

std::vector<Rational> FlagVariety::radical_pairings(const Weight& lambda) const {
  std::vector<Rational> out;
  out.reserve(radical_.size());
  for (auto b : radical_) out.push_back(coroot_pairing(rs_, lambda, b));
  return out;
}

Rational curve_pairing(const FlagVariety& x, const Weight& lambda, const Root& beta) {
  auto b = x.root_system().index_of(beta);
  if (!std::binary_search(x.radical_roots().begin(), x.radical_roots().end(), b))
    throw Error(ErrorKind::invalid_argument, "root is not in Phi_I^+ (its curve is contracted in X_P)");
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] != 0 && !std::binary_search(x.painted().begin(), x.painted().end(), static_cast<int>(i + 1)))
      throw Error(ErrorKind::invalid_argument, "class must be supported on painted nodes");
  return coroot_pairing(x.root_system(), lambda, b);
}

Weight canonical_weight(const FlagVariety& x) { return x.delta_p(); }

long fano_index(const FlagVariety& x) {
  long g = 0;
  for (int p : x.painted()) g = std::gcd(g, to_long(x.delta_p()[p - 1]));
  return g;
}

bool is_kahler(const FlagVariety& x, const KahlerClass& c) {
  return c.coeffs.size() == x.painted().size() &&
         std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& r) { return r > 0; });
}

PiScalar scalar_curvature(const FlagVariety& x, const KahlerClass& omega) {
  require_kahler(x, omega);
  return PiScalar(4 * weighted_sum(x, x.anticanonical_pairings(), omega), 1 - omega.pi_power());
}

PiScalar hym_slope(const FlagVariety& x, const LineBundleClass& e, const KahlerClass& omega) {
  require_kahler(x, omega);
  return PiScalar(weighted_sum(x, x.radical_pairings(x.embed(e)), omega), -omega.pi_power());
}

KahlerClass ke_class(const FlagVariety& x, const std::optional<PiScalar>& s_target) {
  std::vector<Rational> delta;
  for (int p : x.painted()) delta.push_back(x.delta_p()[p - 1]);
  if (!s_target) return KahlerClass{delta, true}.scaled(2);
  if (s_target->sign() <= 0) throw Error(ErrorKind::invalid_argument, "scalar curvature target must be positive");
  // S(c delta_P) = 4 pi m / c, so c = 4 pi m / S.
  PiScalar c = PiScalar(Rational(4 * static_cast<long>(x.dim_c())), 1) / *s_target;
  if (c.pi_power() < 0)
    throw Error(ErrorKind::unit_mismatch, "scalar curvature target with pi^-1 units has no Kähler class here");
  return KahlerClass{delta, c.pi_power() == 1}.scaled(c.value());
}

KahlerClass rescale_to_scalar(const FlagVariety& x, const KahlerClass& omega, const PiScalar& s_target) {
  if (s_target.sign() <= 0) throw Error(ErrorKind::invalid_argument, "scalar curvature target must be positive");
  PiScalar c = scalar_curvature(x, omega) / s_target;
  int power = omega.pi_power() + c.pi_power();
  if (power < 0 || power > 1)
    throw Error(ErrorKind::unit_mismatch, "rescaled Kähler class would need pi^" + std::to_string(power) + " units");
  KahlerClass out = omega.scaled(c.value());
  out.pi_units = power == 1;
  return out;
}

LineBundleClass anticanonical_bundle(const FlagVariety& x) {
  LineBundleClass l;
  for (int p : x.painted()) l.coeffs.push_back(to_long(x.delta_p()[p - 1]));
  return l;
}

std::vector<int> spinc_parity(const FlagVariety& x) {
  std::vector<int> out;
  for (long c : anticanonical_bundle(x).coeffs) out.push_back(static_cast<int>(((c % 2) + 2) % 2));
  return out;
}

}  // namespace flagspec
