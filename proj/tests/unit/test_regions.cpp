#include "support.hpp"

#include "cgm/regions.hpp"

using namespace cgm;

namespace {

ExactParams ex(const char* p, const char* q) { return {parse_rational(p), parse_rational(q)}; }

}  // namespace

TEST_CASE("classify: parameter plane") {
  const auto cg = classify(ex("1", "1"), 3, std::nullopt);
  CHECK(cg.in_gamma);
  CHECK(cg.gamma_component == GammaComponent::GammaPlus3);

  const auto z = classify(ex("2", "0"), 3, std::nullopt);
  CHECK(z.in_gamma);
  CHECK(z.gamma_component == GammaComponent::GammaZ);

  const auto m = classify(ex("3", "-1"), 3, std::nullopt);
  CHECK_FALSE(m.in_gamma);
  CHECK(m.in_gamma_prime);
  CHECK(m.gamma_component == GammaComponent::GammaPrimeMinus);

  const auto s = classify(ex("0", "0"), 3, std::nullopt);
  CHECK_FALSE(s.in_gamma);
  CHECK_FALSE(s.in_gamma_prime);
  CHECK_FALSE(s.in_omega);
  CHECK_FALSE(s.in_delta.has_value());
  CHECK(s.gamma_component == GammaComponent::None);
}

TEST_CASE("classify: curvature-dependent regions") {
  const auto z6 = classify(ex("2", "0"), 3, Rational(6));
  REQUIRE(z6.in_delta.has_value());
  CHECK_FALSE(*z6.in_delta);
  const auto plus = classify(ex("1", "2"), 3, Rational(1));
  REQUIRE(plus.in_delta.has_value());
  CHECK(*plus.in_delta);
  const auto neg = classify(ex("1", "1"), 3, Rational(-1));
  CHECK_FALSE(neg.in_delta.has_value());
  CHECK_FALSE(neg.delta_note.empty());
  const auto boundary = classify(ex("2", "-1"), 3, Rational(16, 3));
  REQUIRE(boundary.in_delta.has_value());
  CHECK(*boundary.in_delta);
  // Just past the horizontal cut mu(2) >= 3c/4.
  const auto past = classify(ex("2", "-1"), 3, Rational(16, 3) + Rational(1, 1000000));
  CHECK_FALSE(*past.in_delta);
}

TEST_CASE("classify: strict and non-strict boundaries") {
  // Gamma_Z: q = 0 and 0 < p <= 2.
  CHECK(region::gamma_z(ex("2", "0")));
  CHECK_FALSE(region::gamma_z(ex("0", "0")));
  CHECK_FALSE(region::gamma_z(ex("2.0000001", "0")));
  // Gamma_+^3: 0 <= p <= 1 and q > 0.
  CHECK(region::gamma_plus3(ex("0", "0.001")));
  CHECK_FALSE(region::gamma_plus3(ex("0.5", "0")));
  // Gamma_-: p + q = 1 and q < 0, exactly.
  CHECK(region::gamma_minus(ex("7/3", "-4/3")));
  CHECK_FALSE(region::gamma_minus(ex("2", "-1.0000001")));
  // Gamma_+^1: -8 < p <= -2 and q > lambda(p); lambda(-4) = 10.
  CHECK(region::gamma_plus1(ex("-4", "10.0001")));
  CHECK_FALSE(region::gamma_plus1(ex("-4", "10")));
  CHECK_FALSE(region::gamma_plus1(ex("-8", "100")));
}

TEST_CASE("compare_mu is exact at rational points") {
  CHECK(compare_mu(Rational(2), Rational(4)) == 0);
  CHECK(compare_mu(Rational(2), Rational(4) - Rational(1, 1000000000)) > 0);
  CHECK(compare_mu(Rational(3), Rational(27, 4)) == 0);
  CHECK(compare_mu(Rational(5, 2), Rational(3)) > 0);
  CHECK(compare_mu(Rational(1), Rational(1)) == 0);
  CHECK(mu_rational(Rational(4)) == Rational(256, 27));
}

TEST_CASE("vertical positivity") {
  CHECK(vertical_positivity(ex("1", "1"), 3));
  CHECK_FALSE(vertical_positivity(ex("3", "0"), 3));
  CHECK(vertical_positivity(ex("3", "0"), 2));
  CHECK(vertical_positivity(ex("2", "-1"), 3));
  CHECK_FALSE(vertical_positivity(ex("0", "0"), 2));
}

TEST_CASE("brute-force vertical positivity") {
  CHECK(brute_force_vertical_positivity({1, 1}, 3, 10000, 1));
  const auto probe = probe_vertical_positivity({3, 0}, 3, 10000, 1);
  CHECK_FALSE(probe.positive);
  CHECK(probe.min_value < 0.0);
  CHECK(probe.t_at_min > 3.0);  // Q(3,0) < 0 past t = 2
  CHECK(std::abs(probe.x.dot(probe.y)) < 1e-9);
  CHECK_FALSE(brute_force_vertical_positivity({0, 0}, 2, 1000, 1));
  CHECK(brute_force_vertical_positivity({1, 1}, 3, 500, 9) == brute_force_vertical_positivity({1, 1}, 3, 500, 9));
}

TEST_CASE("non-negative sectional curvature") {
  CHECK(nonneg_sectional(ex("2", "-1"), 3, Rational(16, 3)));
  CHECK_FALSE(nonneg_sectional(ex("1", "1"), 3, Rational(2)));
  const auto neg = nonneg_sectional_verdict(ex("1", "1"), 3, Rational(-1));
  CHECK_FALSE(neg.value);
  CHECK(neg.reason.find("necessary") != std::string::npos);
  for (const char* p : {"0", "1", "2", "3", "-1", "0.5"}) {
    for (const char* q : {"0", "1", "-1", "2", "-0.5"}) {
      CHECK(nonneg_sectional(ex(p, q), 3, Rational(0)) == region::delta0(ex(p, q)));
      CHECK(nonneg_sectional(ex(p, q), 2, Rational(0)) == region::delta0_prime(ex(p, q)));
    }
  }
}

TEST_CASE("sufficient scalar positivity cases") {
  CHECK(scalar_pos_sufficient(ex("1", "1"), 2, Rational(3)) == ScalarCase::a);
  CHECK(scalar_pos_sufficient(ex("2", "-1"), 3, Rational(4)) == ScalarCase::d);
  CHECK(scalar_pos_sufficient(ex("1", "1"), 3, Rational(-5)) == ScalarCase::None);
  CHECK(scalar_pos_sufficient(ex("1", "1"), 3, Rational(0)) == ScalarCase::FlatGamma);
  CHECK(scalar_pos_sufficient(ex("3", "0"), 2, Rational(0)) == ScalarCase::FlatGammaPrime);
  CHECK(scalar_pos_sufficient(ex("3", "0"), 3, Rational(0)) == ScalarCase::None);
  CHECK(to_string(ScalarCase::a) == "a");
  CHECK(to_string(GammaComponent::GammaPlus3) == "Γ₊³");
}

TEST_CASE("structured witnesses") {
  // Outside the closure of the vertical region a vertical plane goes negative.
  const auto w = structured_min_sectional({3, 0}, 3, 0.0);
  CHECK(w.min_value < -1e-9);
  // (2,0) over c = 6 loses the horizontal plane containing e.
  const auto h = structured_min_sectional({2, 0}, 3, 6.0);
  CHECK(h.min_value < -1e-9);
  CHECK(h.family.find("horizontal") != std::string::npos);
  CHECK(structured_min_sectional({1, 1}, 3, 1.0).min_value >= -1e-9);
}

// ---------------------------------------------------------------------------
// Properties

TEST_CASE("property: Delta_c shrinks as c grows") {
  const std::vector<Rational> cs = {Rational(1, 2), Rational(1), Rational(4, 3), Rational(3), Rational(16, 3),
                                    Rational(6)};
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const ExactParams pq{Rational(-10) + Rational(i, 5), Rational(-6) + Rational(j, 8)};
      for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
        // c1 = cs[k+1] > c2 = cs[k]
        violations += region::delta(pq, cs[k + 1]) && !region::delta(pq, cs[k]) ? 1 : 0;
        violations += region::delta_prime(pq, cs[k + 1]) && !region::delta_prime(pq, cs[k]) ? 1 : 0;
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("property: region inclusions on a grid") {
  int violations = 0;
  for (int i = 0; i <= 240; ++i) {
    for (int j = 0; j <= 120; ++j) {
      const ExactParams pq{Rational(-9) + Rational(i, 20), Rational(-3) + Rational(j, 20)};
      const bool g = region::gamma(pq), gp = region::gamma_prime(pq);
      violations += g && !gp ? 1 : 0;
      for (const Rational& c : {Rational(0), Rational(1), Rational(16, 3)}) {
        const bool d = region::delta(pq, c), dp = region::delta_prime(pq, c);
        violations += d && !dp ? 1 : 0;
        violations += d && !region::delta0(pq) ? 1 : 0;
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("property: Delta_c lies in the closure of Gamma") {
  int violations = 0;
  for (int i = 0; i <= 120; ++i) {
    for (int j = 0; j <= 60; ++j) {
      const ExactParams pq{Rational(-9) + Rational(i, 10), Rational(-3) + Rational(j, 10)};
      if (!region::delta(pq, Rational(1))) {
        continue;
      }
      // Some point within 1e-3 lies in Gamma.
      bool near = false;
      for (int di = -1; di <= 1 && !near; ++di) {
        for (int dj = -1; dj <= 1 && !near; ++dj) {
          near = region::gamma({pq.p + Rational(di, 1000), pq.q + Rational(dj, 1000)});
        }
      }
      violations += near ? 0 : 1;
    }
  }
  CHECK(violations == 0);
}
