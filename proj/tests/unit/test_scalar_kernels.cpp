#include "support.hpp"

#include "cgm/scalar_kernels.hpp"

#include <limits>

using namespace cgm;
using test::rel_close;

namespace {

void check_coeffs(const PolySpec& s, std::vector<double> expected) {
  for (std::size_t k = 0; k < std::max(expected.size(), s.coefficients().size()); ++k) {
    const double want = k < expected.size() ? expected[k] : 0.0;
    CHECK(s.poly[k] == doctest::Approx(want).epsilon(1e-15));
  }
}

}  // namespace

TEST_CASE("omega and omega_q") {
  CHECK(omega(0) == 1.0);
  CHECK(omega(1) == 0.5);
  CHECK(omega(3) == 0.25);
  CHECK_THROWS_AS(omega(-0.1), DomainError);
  CHECK(omega_q(0, {2, -7}) == 1.0);
  CHECK(omega_q(2, {1, 0}) == 1.0);
  CHECK(omega_q(0.5, {1, -1}) == 2.0);
  CHECK_THROWS_AS(omega_q(1.0, {1, -1}), DomainError);
  CHECK_THROWS_AS(omega_q(2.0, {1, -1}), DomainError);
}

TEST_CASE("ball bundle guard") {
  CHECK(in_ball_bundle({1, -1}, 0.999));
  CHECK_FALSE(in_ball_bundle({1, -1}, 1.0 - 1e-10));
  CHECK_FALSE(in_ball_bundle({1, 1}, -1e-12));
  CHECK(fibre_radius_bound({1, -0.5}) == 2.0);
  CHECK(std::isinf(fibre_radius_bound({1, 0})));
}

TEST_CASE("coefficients at sample points") {
  for (double t : {0.0, 0.3, 7.0}) {
    for (int n : {2, 3, 6}) {
      const auto z = coefficients({0, 0}, t, n);
      CHECK(z.A == 0.0);
      CHECK(z.B == 0.0);
      CHECK(z.C == 0.0);
      CHECK(z.alpha == 0.0);
      CHECK(z.beta == 0.0);
    }
  }
  const auto cg = coefficients({1, 1}, 0.0, 3);
  CHECK(cg.A == doctest::Approx(0.0));
  CHECK(cg.B == doctest::Approx(3.0));
  CHECK(cg.C == doctest::Approx(-3.0));
  CHECK(cg.alpha == doctest::Approx(6.0));
  CHECK(cg.beta == doctest::Approx(3.0));

  // Approach the sphere bundle of (2,-1): A -> -1/2 through the smooth extension, B -> 1.
  const auto near = coefficients({2, -1}, 1.0 - 1e-7, 3);
  CHECK(near.B == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(near.A == doctest::Approx(-0.5).epsilon(1e-5));
  const auto ext = boundary_coefficients({2, -1}, 1.0);
  CHECK(ext.A == doctest::Approx(-0.5));
  CHECK(ext.B == doctest::Approx(1.0));
  CHECK_THROWS(coefficients({2, -1}, 1.0, 3));
}

TEST_CASE("fibre polynomials P and Q") {
  check_coeffs(poly_P({0, 0}), {0, 0, 0});
  check_coeffs(poly_P({1, 1}), {3, 3, 0});
  const auto p21 = poly_P({2, -1});
  check_coeffs(p21, {3, -4, 1});
  CHECK(p21(1.0) == 0.0);
  CHECK(p21(3.0) == 0.0);
  check_coeffs(poly_Q({0, 0}), {0, 0, 0});
  check_coeffs(poly_Q({2, 0}), {4, 0, 0});
  const auto q30 = poly_Q({3, 0});
  check_coeffs(q30, {6, -3, 0});
  CHECK(q30(3.0) < 0.0);
  CHECK(poly_P({1, 1}).kind == PolyKind::P);
  CHECK(poly_Q({1, 1}).kind == PolyKind::Q);
}

TEST_CASE("scalar polynomial C") {
  for (auto pq : {Params{1, 1}, Params{2, -1}, Params{-3, 0.7}, Params{0.25, 5}}) {
    const auto c2 = poly_C(pq, 2);
    const auto p = poly_P(pq);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(c2.poly[k] == 2.0 * p.poly[k]);
    }
  }
  check_coeffs(poly_C({1, 0}, 3), {6, 1, 0, 0});
  // 2(5 + 4t - t^2) + (1 + t)(5 + 2t + t^2) = 15 + 15t + t^2 + t^3
  const auto c213 = poly_C({2, 1}, 3);
  check_coeffs(c213, {15, 15, 1, 1});
  for (double t : {1.0, 2.0}) {
    const double direct = 2 * (5 + 4 * t - t * t) + (1 + t) * (5 + 2 * t + t * t);
    CHECK(c213(t) == doctest::Approx(direct));
  }
  // Leading coefficient (n-2) q^2.
  CHECK(poly_C({1.5, -2}, 5).poly[3] == doctest::Approx(3 * 4.0));
}

TEST_CASE("mu, lambda and nu") {
  CHECK(mu(1) == 1.0);
  CHECK(mu(2) == doctest::Approx(4.0));
  CHECK(mu(3) == doctest::Approx(6.75));
  CHECK_THROWS_AS(mu(0.99), DomainError);
  CHECK(*mu_exact(Rational(3)) == Rational(27, 4));
  CHECK_FALSE(mu_exact(Rational(5, 2)).has_value());

  CHECK(hyperbola_lambda(1) == 0.0);
  CHECK(hyperbola_nu(1) == 0.0);
  CHECK_THROWS_AS(hyperbola_lambda(-8), DomainError);
  CHECK_THROWS_AS(hyperbola_nu(-2), DomainError);
  const double l3 = hyperbola_lambda(3), n3 = hyperbola_nu(3);
  CHECK(l3 == doctest::Approx(-16.0 / 11));
  CHECK(n3 == doctest::Approx(-0.8));
  CHECK(1.0 - 3 < l3);
  CHECK(l3 < n3);
  CHECK(n3 < 0.0);
}

TEST_CASE("multipliers") {
  for (double p : {0.5, 1.0, 2.0, 7.0}) {
    CHECK(*multipliers({p, 0.3}, 2).m1 == doctest::Approx(1.0));
  }
  CHECK(*multipliers({2, -1}, 3).m5 == doctest::Approx(1.0));
  for (int n : {2, 3, 7}) {
    const auto m = multipliers({2, hyperbola_nu(2)}, n);
    REQUIRE(m.m4.has_value());
    REQUIRE(m.m5.has_value());
    CHECK(*m.m4 == doctest::Approx(*m.m5).epsilon(1e-14));
  }
  const auto none = multipliers({-1, -1}, 3);
  CHECK_FALSE(none.m1.has_value());
  CHECK_FALSE(none.m2.has_value());
  CHECK_FALSE(none.m4.has_value());
  CHECK_FALSE(none.m5.has_value());
  CHECK_FALSE(multipliers({2, 0.5}, 3).m4.has_value());  // needs q < 0
  CHECK(*multipliers({2, -1}, 3).m3 == doctest::Approx(std::sqrt(1.25)));
}

TEST_CASE("supremum of f") {
  const auto a = f_sup({2, 0});
  CHECK(a.sup == doctest::Approx(0.25));
  CHECK(a.attained);
  CHECK(*a.argmax == doctest::Approx(1.0));
  const auto b = f_sup({1, 0});
  CHECK(b.sup == doctest::Approx(1.0));
  CHECK_FALSE(b.attained);
  const auto c = f_sup({2, -1});
  CHECK(c.sup == doctest::Approx(0.25));
  CHECK_FALSE(c.attained);  // t = 1 is the excluded boundary
  double grid_max = 0;
  for (int i = 0; i <= 10000; ++i) {
    grid_max = std::max(grid_max, horizontal_weight(2, (1 - 1e-6) * i / 10000.0));
  }
  CHECK(grid_max <= c.sup);
  CHECK(grid_max >= c.sup - 1e-3);
  const auto d = f_sup({3, -2.5});  // p + q < 1: limit at -1/q = 0.4 < 1/(p-1)
  CHECK(d.sup == doctest::Approx(horizontal_weight(3, 0.4)));
  CHECK_FALSE(d.attained);
  CHECK_FALSE(f_sup({0.5, 0}).bounded);
}

TEST_CASE("scalar curvature over space forms at sample points") {
  CHECK(scalar_curvature_spaceform({1, 0}, 2, 0, 0) == doctest::Approx(4.0));
  CHECK(scalar_curvature_spaceform({1, 1}, 3, 1, 0) == doctest::Approx(24.0));
  CHECK_THROWS_AS(scalar_curvature_spaceform({1, -1}, 3, 1, 2.0), DomainError);
}

TEST_CASE("polynomial G") {
  check_coeffs(poly_G({1, 0}, 3, -1), {3, -2.5});
  check_coeffs(poly_G({1, 0}, 2, 0), {4});
  CHECK_THROWS_AS(poly_G({1.5, 0}, 3, 1), std::invalid_argument);
  const auto g = poly_G_exact({Rational(4), Rational(3, 2)}, 3, Rational(-7, 3));
  CHECK(g.degree() <= std::max(4 + 2, 2 * 4 + 1));
}

TEST_CASE("analysis scalars") {
  const auto s = analysis_scalars({3, -1});
  CHECK(s.D == doctest::Approx(3 * -1 * (-3 + 24 - 8 - 8)));
  CHECK(s.E == doctest::Approx(9 * (9 - 12 + 4 + 4)));
  CHECK(s.t0.has_value());
  CHECK(s.kappa1 == doctest::Approx(0.25));
  CHECK(s.kappa2 == doctest::Approx(1.5));
  CHECK_FALSE(analysis_scalars({1, 2}).t0.has_value());
  CHECK_FALSE(analysis_scalars({1, 0}).s0.has_value());
  const auto roots = real_roots_up_to_quadratic(Polynomial<double>({3, -4, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == doctest::Approx(1.0));
  CHECK(roots[1] == doctest::Approx(3.0));
  CHECK(real_roots_up_to_quadratic(Polynomial<double>({1, 0, 1})).empty());
}

// ---------------------------------------------------------------------------
// Properties

TEST_CASE("property: omega_q (A - qB) = C over random samples") {
  test::Rng rng(11);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const Params pq{rng.uniform(-10, 10), rng.uniform(-5, 5)};
    const double bound = fibre_radius_bound(pq);
    const double t = std::isinf(bound) ? std::exp(rng.uniform(-8, 8)) : rng.uniform(0, 0.999) * bound;
    const int n = rng.integer(2, 8);
    const auto k = coefficients(pq, t, n);
    const double lhs = omega_q(t, pq) * (k.A - pq.q * k.B);
    const double scale = std::max({std::abs(k.C), std::abs(omega_q(t, pq) * k.A),
                                   std::abs(omega_q(t, pq) * pq.q * k.B), 1e-300});
    worst = std::max(worst, std::abs(lhs - k.C) / scale);
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("property: Sasaki degeneration") {
  for (double t : {0.0, 0.5, 100.0}) {
    const auto k = coefficients({0, 0}, t, 4);
    CHECK((k.A == 0 && k.B == 0 && k.C == 0 && k.alpha == 0 && k.beta == 0));
  }
  CHECK(poly_P({0, 0}).poly.degree() == -1);
  CHECK(poly_Q({0, 0}).poly.degree() == -1);
  CHECK(poly_C({0, 0}, 5).poly.degree() == -1);
}

TEST_CASE("property: mu is strictly increasing") {
  double prev = mu(1.0);
  for (int k = 1; k <= 90; ++k) {
    const double cur = mu(1.0 + 0.1 * k);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("property: phi matches its defining expression") {
  test::Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const Params pq{rng.uniform(-4, 6), rng.uniform(-3, 3)};
    const double bound = fibre_radius_bound(pq);
    const double t = std::isinf(bound) ? std::exp(rng.uniform(-5, 5)) : rng.uniform(0, 0.99) * bound;
    const int n = rng.integer(2, 6);
    const double direct = std::pow(1 + t, pq.p - 2) / ((1 + pq.q * t) * (1 + pq.q * t)) *
                          (2 * poly_P(pq)(t) + (n - 2) * (1 + pq.q * t) * poly_Q(pq)(t));
    CHECK(rel_close(phi(pq, n, t), direct, 1e-12));
  }
}

TEST_CASE("property: f_sup bounds the grid maximum") {
  test::Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const double p = rng.uniform(1, 6);
    const double q = rng.uniform(-3, 3);
    const Params pq{p, q};
    const auto s = f_sup(pq);
    REQUIRE(s.bounded);
    // Log-spaced on [1e-6, 1e3] for q >= 0, uniform up to the bundle boundary otherwise.
    double grid_max = 0;
    for (int k = 0; k < 10000; ++k) {
      const double t = q >= 0 ? 1e-6 * std::pow(1e9, k / 9999.0) : (1 - 1e-9) * fibre_radius_bound(pq) * k / 9999.0;
      grid_max = std::max(grid_max, horizontal_weight(p, t));
    }
    CHECK(grid_max <= s.sup * (1 + 1e-12));
    // The t <= 1e3 clip only binds when p is close to 1.
    if (q < 0 || p > 1.2) {
      CHECK(grid_max >= s.sup - 1e-3);
    }
  }
}

TEST_CASE("property: G agrees with its three-term definition") {
  test::Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const int p = rng.integer(1, 7);
    const double q = rng.integer(0, 40) / 8.0;
    const double c = rng.integer(-80, 80) / 8.0;
    const int n = rng.integer(2, 6);
    const auto g = poly_G({double(p), q}, n, c);
    CHECK(g.poly.degree() <= std::max(p + 2, 2 * p + 1));
    CHECK(g(0.0) == doctest::Approx(n * c + n * (2.0 * p + q)));
    for (int k = 0; k < 20; ++k) {
      const double t = rng.uniform(0, 10);
      const double r = 1 + q * t;
      const double direct = n * c * std::pow(1 + t, p) * r * r - 0.5 * c * c * t * r * r +
                            std::pow(1 + t, 2 * p - 2) * poly_C({double(p), q}, n)(t);
      const double scale = std::abs(n * c * std::pow(1 + t, p) * r * r) + std::abs(0.5 * c * c * t * r * r) +
                           std::abs(std::pow(1 + t, 2 * p - 2) * poly_C({double(p), q}, n)(t));
      CHECK(std::abs(g(t) - direct) <= 1e-10 * std::max(scale, 1.0));
    }
  }
}

TEST_CASE("property: scalar curvature at the zero section") {
  test::Rng rng(15);
  for (int i = 0; i < 1000; ++i) {
    const Params pq{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const int n = rng.integer(2, 7);
    const double c = rng.uniform(-3, 3);
    const double want = n * (n - 1) * (c + 2 * pq.p + pq.q);
    CHECK(rel_close(scalar_curvature_spaceform(pq, n, c, 0.0), want, 1e-12));
  }
}
