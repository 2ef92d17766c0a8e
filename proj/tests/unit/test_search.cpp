#include "support.hpp"

#include "cgm/regions.hpp"

using namespace cgm;

TEST_CASE("q = 0 and p + q = 1 families") {
  const auto a = find_params_thm1(2, -1);
  CHECK(a.params.p == doctest::Approx(2.0));
  CHECK(a.params.q == 0.0);
  CHECK(a.certified());
  CHECK(mu(2) > 1 / (std::sqrt(std::exp(1.0) + 2) - std::sqrt(std::exp(1.0))));

  const auto b = find_params_thm1(3, 1);
  CHECK(b.params.p == doctest::Approx(2.0));
  CHECK(b.params.q == doctest::Approx(-1.0));
  CHECK(b.certified());

  const auto c = find_params_thm1(2, 0);
  CHECK(c.params.p == 1.0);
  CHECK(c.params.q == 0.0);
  CHECK(c.certified());
}

TEST_CASE("q >= 0 search") {
  for (int n : {2, 3, 5}) {
    const auto z = find_params_thm3(n, 0);
    CHECK(z.params.p == 1.0);
    CHECK(z.params.q == 1.0);
    CHECK(z.certified());
  }
  // The first candidate (1,0) is rejected for n = 3, c = -1.
  CHECK_FALSE(poly_G_exact({Rational(1), Rational(0)}, 3, Rational(-1)).all_coefficients_positive());
  const auto r = find_params_thm3(3, -1);
  CHECK(r.params.q >= 0.0);
  CHECK(r.certified());
  CHECK(r.certificate.g_coefficients_positive);
  const auto g = poly_G(r.params, 3, -1);
  for (double t : {0.0, 0.5, 1.0, 10.0, 100.0}) {
    CHECK(g(t) > 0.0);
  }
  for (double c : {-10.0, 1.0, 10.0}) {
    const auto s = find_params_thm3(3, c);
    CHECK(s.params.q >= 0.0);
    CHECK(s.certified());
  }
}

TEST_CASE("general base") {
  const auto a = find_params_general(3, 0, 0);
  CHECK(a.c_used <= -1.0);
  CHECK(a.result.certified());
  const auto b = find_params_general(3, 6 * 5, 0);
  CHECK(b.c_used <= -1.0);
  CHECK(b.result.certified());
  const auto c = find_params_general(3, -12, 8);
  CHECK(c.c_used <= std::min(-12.0 / 6, -std::sqrt(8.0 / 4)) - 1.0);
  CHECK(c.result.certified());
  CHECK(c.result.params.q >= 0.0);
}

TEST_CASE("scalar positivity interval") {
  const auto iv = scalar_positivity_interval({1, 0}, 2);
  REQUIRE(iv.determined);
  CHECK(iv.c_lo <= 0.0);
  CHECK(iv.c_hi >= 4.0 - 1e-6);
  const auto neg = scalar_positivity_interval({3, 0}, 3);  // s~ < 0 somewhere already at c = 0
  CHECK_FALSE(neg.determined);
}

TEST_CASE("property: searches return positive certificates") {
  for (int n : {2, 3, 4, 5}) {
    for (double c : {-20.0, -3.0, -0.5, 0.0, 0.5, 3.0, 20.0}) {
      const auto a = find_params_thm1(n, c);
      CHECK(a.certified());
      const auto b = find_params_thm3(n, c);
      CHECK(b.certified());
      CHECK(b.params.q >= 0.0);
    }
  }
}
