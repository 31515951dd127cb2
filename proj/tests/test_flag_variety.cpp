#include <doctest.h>

#include <numeric>
#include <random>

#include "flagspec/error.hpp"
#include "flagspec/flag_variety.hpp"
#include "oracles.hpp"

using namespace flagspec;
using namespace flagspec::testing;

namespace {

FlagVariety flag(char f, int r, std::vector<int> painted) {
  return build_flag(build_root_system(LieType::make(f, r)), std::move(painted));
}

KahlerClass plain(std::vector<Rational> c) { return KahlerClass{std::move(c), false}; }
KahlerClass in_pi(std::vector<Rational> c) { return KahlerClass{std::move(c), true}; }

Root root(std::initializer_list<int> c) { return Root{std::vector<int>(c)}; }

}  // namespace

TEST_CASE("build_flag examples") {
  auto full = flag('A', 2, {1, 2});
  CHECK(full.dim_c() == 3);
  CHECK(full.delta_p() == Weight::from_ints({2, 2}));
  CHECK(full.delta_p() == Rational(2) * weyl_vector(full.root_system()));

  auto cp2 = flag('A', 2, {1});
  CHECK(cp2.dim_c() == 2);
  CHECK(cp2.delta_p() == Weight::from_ints({3, 0}));
  std::vector<Root> radical;
  for (auto b : cp2.radical_roots()) radical.push_back(cp2.root_system().positive_roots()[b]);
  CHECK(radical == std::vector<Root>{root({1, 0}), root({1, 1})});

  auto p1 = flag('A', 1, {1});
  CHECK(p1.dim_c() == 1);
  CHECK(p1.delta_p() == Weight::from_ints({2}));
}

TEST_CASE("build_flag rejects bad painted sets") {
  auto rs = build_root_system(LieType::make('A', 3));
  CHECK_THROWS_AS(build_flag(rs, {}), Error);
  CHECK_THROWS_AS(build_flag(rs, {1, 1}), Error);
  CHECK_THROWS_AS(build_flag(rs, {0}), Error);
  CHECK_THROWS_AS(build_flag(rs, {4}), Error);
  // unsorted input is accepted and normalized
  CHECK(build_flag(rs, {3, 1}).painted() == std::vector<int>{1, 3});
}

TEST_CASE("curve pairing examples") {
  auto cp2 = flag('A', 2, {1});
  CHECK(curve_pairing(cp2, Weight::from_ints({1, 0}), root({1, 0})) == 1);
  CHECK(curve_pairing(cp2, cp2.delta_p(), root({1, 1})) == 3);
  auto p1 = flag('A', 1, {1});
  CHECK(curve_pairing(p1, Weight::from_ints({2}), root({1})) == 2);
  // alpha_2 lies in the Levi factor
  CHECK_THROWS_AS(curve_pairing(cp2, Weight::from_ints({1, 0}), root({0, 1})), Error);
  // not a class on X_P
  CHECK_THROWS_AS(curve_pairing(cp2, Weight::from_ints({1, 1}), root({1, 0})), Error);
}

TEST_CASE("canonical weight and Fano index examples") {
  CHECK(canonical_weight(flag('A', 2, {1})) == Weight::from_ints({3, 0}));
  CHECK(canonical_weight(flag('A', 1, {1})) == Weight::from_ints({2}));
  CHECK(canonical_weight(flag('A', 2, {1, 2})) == Weight::from_ints({2, 2}));
  CHECK(fano_index(flag('A', 2, {1})) == 3);
  CHECK(fano_index(flag('A', 1, {1})) == 2);
  CHECK(fano_index(flag('A', 2, {1, 2})) == 2);
  for (int n = 1; n <= 7; ++n) CHECK(fano_index(flag('A', n, {1})) == n + 1);
  CHECK(anticanonical_bundle(flag('A', 2, {1})) == LineBundleClass{{3}});
  CHECK(spinc_parity(flag('A', 2, {1})) == std::vector<int>{1});
  CHECK(spinc_parity(flag('A', 1, {1})) == std::vector<int>{0});
}

TEST_CASE("Kähler cone membership") {
  auto full = flag('A', 2, {1, 2});
  CHECK(is_kahler(full, plain({1, 1})));
  CHECK_FALSE(is_kahler(full, plain({0, 1})));
  CHECK_FALSE(is_kahler(full, plain({-1, 1})));
  CHECK(is_kahler(full, plain({Rational(1, 2), 3})));
  CHECK_FALSE(is_kahler(full, plain({1})));
}

TEST_CASE("scalar curvature examples") {
  CHECK(scalar_curvature(flag('A', 1, {1}), plain({1})) == PiScalar(8, 1));
  CHECK(scalar_curvature(flag('A', 2, {1}), in_pi({1})) == PiScalar(24, 0));
  CHECK_THROWS_AS(scalar_curvature(flag('A', 2, {1}), plain({0})), Error);
  try {
    scalar_curvature(flag('A', 2, {1}), plain({-1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_kahler);
  }
}

TEST_CASE("HYM slope examples") {
  auto p1 = flag('A', 1, {1});
  CHECK(hym_slope(p1, LineBundleClass{{0}}, plain({1})) == PiScalar(0, 0));
  CHECK(hym_slope(p1, LineBundleClass{{2}}, plain({1})) == PiScalar(2, 0));
  auto cp2 = flag('A', 2, {1});
  CHECK(hym_slope(cp2, LineBundleClass{{3}}, plain({3})) == PiScalar(2, 0));
  CHECK(hym_slope(cp2, LineBundleClass{{3}}, in_pi({3})) == PiScalar(2, -1));
}

TEST_CASE("Kähler-Einstein class examples") {
  auto cp2 = flag('A', 2, {1});
  auto ke = ke_class(cp2, PiScalar(24, 0));
  CHECK(ke == in_pi({1}));
  CHECK(ke == KahlerClass{{Rational(1, 3) * cp2.delta_p()[0]}, true});

  auto p1 = flag('A', 1, {1});
  auto rho0 = ke_class(p1);
  CHECK(rho0 == in_pi({4}));
  CHECK(scalar_curvature(p1, rho0) == PiScalar(2, 0));

  CHECK_THROWS_AS(ke_class(cp2, PiScalar(-1, 0)), Error);
}

TEST_CASE("exhaustive flag invariants, rank <= 5") {
  for (auto t : types_up_to(5)) {
    CAPTURE(t.name());
    auto rs = build_root_system(t);
    for (const auto& painted : all_painted_subsets(t.rank)) {
      CAPTURE(painted.size());
      auto x = build_flag(rs, painted);
      std::vector<bool> is_painted(t.rank, false);
      for (int p : painted) is_painted[p - 1] = true;

      // radical roots are exactly those touching a painted node
      std::size_t count = 0;
      for (const auto& beta : rs.positive_roots()) {
        bool touches = false;
        for (int p : painted) touches = touches || beta.simple_coords[p - 1] != 0;
        count += touches;
      }
      CHECK(x.dim_c() == count);
      CHECK(x.dim_c() > 0);

      // delta_P as an explicit root sum
      Weight sum(rs.rank());
      for (auto b : x.radical_roots()) sum += root_as_weight(rs, rs.positive_roots()[b]);
      CHECK(sum == x.delta_p());
      for (int i = 0; i < t.rank; ++i) {
        if (!is_painted[i]) CHECK(x.delta_p()[i] == 0);
        else CHECK(x.delta_p()[i] >= 1);
      }
      if (painted.size() == static_cast<std::size_t>(t.rank)) CHECK(x.dim_c() == rs.positive_roots().size());
      for (const auto& a : x.anticanonical_pairings()) CHECK(a >= 1);

      // Fano index divides every anticanonical coordinate, and is maximal
      long p = fano_index(x);
      long g = 0;
      for (int q : painted) g = std::gcd(g, to_long(x.delta_p()[q - 1]));
      CHECK(p == g);

      KahlerClass ones = plain(std::vector<Rational>(painted.size(), 1));
      CHECK(scalar_curvature(x, ones).sign() > 0);
    }
  }
  for (int n = 1; n <= 6; ++n) CHECK(flag('A', n, {1}).dim_c() == static_cast<std::size_t>(n));
}

TEST_CASE("homogeneity and Kähler-Einstein targets") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto cfg = random_config(rng, 5);
    const auto& x = cfg.x;
    Rational c(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 7));
    c.canonicalize();
    auto s = scalar_curvature(x, cfg.omega);
    CHECK(scalar_curvature(x, cfg.omega.scaled(c)) == Rational(1) / c * s);
    auto h = hym_slope(x, cfg.l, cfg.omega);
    CHECK(hym_slope(x, cfg.l, cfg.omega.scaled(c)) == Rational(1) / c * h);

    for (auto target : {PiScalar(Rational(5, 2), 0), PiScalar(7, 1)}) {
      auto ke = ke_class(x, target);
      CHECK(scalar_curvature(x, ke) == target);
      CHECK(is_kahler(x, ke));
    }
    auto resc = rescale_to_scalar(x, cfg.omega, PiScalar(24, s.pi_power()));
    CHECK(scalar_curvature(x, resc) == PiScalar(24, s.pi_power()));
    CHECK(resc.pi_units == cfg.omega.pi_units);
  }
}
