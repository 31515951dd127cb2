#pragma once

// Weyl group actions, the dominance algorithm, the Weyl dimension formula
// and the Borel-Weil-Bott classifier for line bundle cohomology.

#include <optional>
#include <vector>

#include "flagspec/rational.hpp"
#include "flagspec/root_system.hpp"

namespace flagspec {

/// Simple-reflection indices, 1-based. The word acts as a composition of
/// operators: the rightmost letter is applied first.
struct WeylWord {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i, with i 1-based.
Weight simple_reflection(const RootSystem& rs, int i, const Weight& lambda);

/// w(lambda).
Weight apply_word(const RootSystem& rs, const WeylWord& w, const Weight& lambda);

/// w * lambda = w(lambda + rho) - rho.
Weight shifted_action(const RootSystem& rs, const WeylWord& w, const Weight& lambda);

/// True iff <lambda + rho, beta^vee> != 0 for every positive root beta.
bool is_dot_regular(const RootSystem& rs, const Weight& lambda);

struct DominantResult {
  WeylWord word;
  Weight result;
  std::size_t length = 0;
};

/// Greedy descent to the dominant chamber: repeatedly reflect in the
/// smallest-index simple root with a negative coordinate. The input must
/// not lie on any wall; hitting a zero coordinate throws
/// Error(singular_input).
DominantResult to_dominant(const RootSystem& rs, const Weight& mu);

/// #{beta in Phi^+ : <mu, beta^vee> < 0}
std::size_t negative_coroot_count(const RootSystem& rs, const Weight& mu);

/// dim V(lambda) for dominant integral lambda.
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

struct Concentrated {
  std::size_t degree = 0;
  WeylWord word;
  Weight dominant_weight;  // w * lambda
  BigInt dimension;
};

/// Cohomology of the homogeneous line bundle with weight lambda: either it
/// vanishes in every degree, or it is concentrated in degree l(w).
struct CohomologyReport {
  std::optional<Concentrated> concentrated;

  bool vanishes() const { return !concentrated.has_value(); }
};

CohomologyReport bwb_classify(const RootSystem& rs, const Weight& lambda);

}  // namespace flagspec
