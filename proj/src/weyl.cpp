#include "flagspec/weyl.hpp"

#include <stdexcept>

#include "flagspec/error.hpp"

namespace flagspec {

namespace {

void require_rank(const RootSystem& rs, const Weight& w) {
  if (w.size() != rs.rank())
    throw Error(ErrorKind::invalid_argument, "weight length does not match the rank");
}

void require_integral(const Weight& w) {
  if (!w.is_integral())
    throw Error(ErrorKind::invalid_argument, "weight must be integral, got " + to_string(w));
}

// In place: lambda -= c * alpha_i, alpha_i in fundamental-weight coordinates
// being column i of the Cartan matrix.
void reflect_in_place(const RootSystem& rs, std::size_t i, Weight& lambda) {
  Rational c = lambda[i];
  if (c == 0) return;
  const auto& a = rs.cartan();
  for (std::size_t k = 0; k < rs.rank(); ++k)
    if (a[k][i] != 0) lambda[k] -= c * a[k][i];
}

}  // namespace

Weight simple_reflection(const RootSystem& rs, int i, const Weight& lambda) {
  require_rank(rs, lambda);
  if (i < 1 || static_cast<std::size_t>(i) > rs.rank())
    throw Error(ErrorKind::invalid_argument, "simple reflection index " + std::to_string(i) + " out of range");
  Weight out = lambda;
  reflect_in_place(rs, static_cast<std::size_t>(i - 1), out);
  return out;
}

Weight apply_word(const RootSystem& rs, const WeylWord& w, const Weight& lambda) {
  Weight out = lambda;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = simple_reflection(rs, *it, out);
  return out;
}

Weight shifted_action(const RootSystem& rs, const WeylWord& w, const Weight& lambda) {
  require_rank(rs, lambda);
  const Weight rho = weyl_vector(rs);
  return apply_word(rs, w, lambda + rho) - rho;
}

bool is_dot_regular(const RootSystem& rs, const Weight& lambda) {
  require_rank(rs, lambda);
  require_integral(lambda);
  const Weight shifted = lambda + weyl_vector(rs);
  for (std::size_t b = 0; b < rs.positive_roots().size(); ++b)
    if (coroot_pairing(rs, shifted, b) == 0) return false;
  return true;
}

std::size_t negative_coroot_count(const RootSystem& rs, const Weight& mu) {
  require_rank(rs, mu);
  std::size_t n = 0;
  for (std::size_t b = 0; b < rs.positive_roots().size(); ++b)
    if (coroot_pairing(rs, mu, b) < 0) ++n;
  return n;
}

DominantResult to_dominant(const RootSystem& rs, const Weight& mu) {
  require_rank(rs, mu);
  DominantResult out;
  out.result = mu;
  std::vector<int> applied;
  while (true) {
    std::optional<std::size_t> step;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (out.result[i] == 0)
        throw Error(ErrorKind::singular_input,
                    "singular input: " + to_string(mu) + " reaches a wall at simple root " + std::to_string(i + 1));
      if (!step && out.result[i] < 0) step = i;
    }
    if (!step) break;
    reflect_in_place(rs, *step, out.result);
    applied.push_back(static_cast<int>(*step) + 1);
  }
  out.word.letters.assign(applied.rbegin(), applied.rend());
  out.length = applied.size();
  if (out.length != negative_coroot_count(rs, mu))
    throw std::logic_error("dominance walk length disagrees with the inversion count");
  return out;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  require_rank(rs, lambda);
  require_integral(lambda);
  if (!lambda.is_dominant())
    throw Error(ErrorKind::invalid_argument, "weyl_dimension needs a dominant weight, got " + to_string(lambda));
  // prod <lambda + rho, beta^vee> / <rho, beta^vee>; the coroot form of the
  // ratio agrees with the root form factor by factor.
  const Weight rho = weyl_vector(rs);
  const Weight shifted = lambda + rho;
  Rational q = 1;
  for (std::size_t b = 0; b < rs.positive_roots().size(); ++b)
    q *= coroot_pairing(rs, shifted, b) / coroot_pairing(rs, rho, b);
  if (!is_integer(q)) throw std::logic_error("Weyl dimension formula produced a non-integer");
  return q.get_num();
}

CohomologyReport bwb_classify(const RootSystem& rs, const Weight& lambda) {
  CohomologyReport report;
  if (!is_dot_regular(rs, lambda)) return report;
  const Weight rho = weyl_vector(rs);
  auto dom = to_dominant(rs, lambda + rho);
  Concentrated c;
  c.degree = dom.length;
  c.word = std::move(dom.word);
  c.dominant_weight = dom.result - rho;
  c.dimension = weyl_dimension(rs, c.dominant_weight);
  report.concentrated = std::move(c);
  return report;
}

}  // namespace flagspec
