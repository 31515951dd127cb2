#pragma once

// Root data of a simple complex Lie algebra in Bourbaki numbering.
//
// Positive roots are integer vectors in the simple-root basis; weights are
// rational vectors in the fundamental-weight basis. The invariant form is
// normalized so that long roots have squared length 2. Every formula in this
// library uses either coroot pairings or ratios of products of the form, so
// the choice of global scale is immaterial.
//
// Node diagrams (Bourbaki):
//   A_n  1 - 2 - ... - n
//   B_n  1 - 2 - ... - (n-1) => n        (n short)
//   C_n  1 - 2 - ... - (n-1) <= n        (n long)
//   D_n  1 - 2 - ... - (n-2) < (n-1), n
//   E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//   F_4  1 - 2 => 3 - 4                  (3, 4 short)
//   G_2  1 <= 2                          (1 short)

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "flagspec/rational.hpp"

namespace flagspec {

struct LieType {
  char family = 'A';
  int rank = 1;

  /// Validates the (family, rank) pair; throws Error(invalid_argument)
  /// naming the violated constraint.
  static LieType make(char family, int rank);

  std::string name() const;  // e.g. "E8"
  friend bool operator==(const LieType&, const LieType&) = default;
};

struct Root {
  std::vector<int> simple_coords;

  int height() const;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// A rational vector in the fundamental-weight basis.
struct Weight {
  std::vector<Rational> fw_coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : fw_coords(rank, Rational(0)) {}
  explicit Weight(std::vector<Rational> coords) : fw_coords(std::move(coords)) {}
  static Weight from_ints(std::initializer_list<long> coords);

  std::size_t size() const { return fw_coords.size(); }
  const Rational& operator[](std::size_t i) const { return fw_coords[i]; }
  Rational& operator[](std::size_t i) { return fw_coords[i]; }

  bool is_integral() const;
  /// All coordinates >= 0.
  bool is_dominant() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& c);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend bool operator==(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);

class RootSystem {
 public:
  const LieType& lie_type() const { return type_; }
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }

  /// cartan()[i][j] = <alpha_j, alpha_i^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// d_i = <alpha_i, alpha_i> / 2; diag(d) * cartan is symmetric.
  const std::vector<Rational>& symmetrizer() const { return symmetrizer_; }
  /// Sorted by height, then lexicographically; simple roots come first.
  const std::vector<Root>& positive_roots() const { return positive_; }

  bool contains(const Root& beta) const;
  /// Index into positive_roots(); throws if beta is not a positive root.
  std::size_t index_of(const Root& beta) const;
  /// Coefficients of beta^vee in the simple-coroot basis.
  const std::vector<int>& coroot_coords(std::size_t root_index) const {
    return coroots_[root_index];
  }

  Root simple_root(std::size_t i) const;  // 0-based
  Weight fundamental_weight(std::size_t i) const;  // 0-based
  Weight zero_weight() const { return Weight(rank()); }

  /// <beta, beta> in the normalized form.
  Rational root_length2(const Root& beta) const;

  /// Rational inverse of the Cartan matrix.
  const std::vector<std::vector<Rational>>& cartan_inverse() const { return cartan_inv_; }

  /// Coordinates of a weight in the simple-root basis.
  std::vector<Rational> simple_coords(const Weight& lambda) const;

  friend RootSystem build_root_system(LieType t);

 private:
  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> symmetrizer_;
  std::vector<std::vector<Rational>> cartan_inv_;
  std::vector<Root> positive_;
  std::vector<std::vector<int>> coroots_;
  std::map<std::vector<int>, std::size_t> index_;
};

RootSystem build_root_system(LieType t);

/// <lambda, beta^vee>.
Rational coroot_pairing(const RootSystem& rs, const Weight& lambda, const Root& beta);
/// <lambda, beta^vee> for the positive root with the given index.
Rational coroot_pairing(const RootSystem& rs, const Weight& lambda, std::size_t root_index);

/// The invariant form on weights, long roots of squared length 2.
Rational inner_product(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Half the sum of the positive roots; all ones in fundamental-weight coordinates.
Weight weyl_vector(const RootSystem& rs);

/// beta in fundamental-weight coordinates: coordinate i is <beta, alpha_i^vee>.
Weight root_as_weight(const RootSystem& rs, const Root& beta);

/// Closed-form |Phi^+| for the family.
std::size_t expected_positive_root_count(LieType t);

}  // namespace flagspec
