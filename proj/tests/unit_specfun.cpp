#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "families.hpp"
#include "hyp2f1.hpp"
#include "pair.hpp"

using namespace capcone;

namespace {

// Elementary closed forms used as oracles for the series and for the
// transformed branch. None of them go through the code under test.
double log_form(double x) { return -std::log1p(-x) / x; }       // (1,1;2;x)
double binom_form(double a, double x) { return std::pow(1.0 - x, -a); }  // (a,b;b;x)

// Hand-written closed form of the degree-(7,1) linear profile.
double f71_closed(double t) {
  const double w = 1.0 - t * t;
  return -(15.0 / 8.0) * t * std::atanh(t) +
         ((15.0 / 8.0) * t * t * t * t - (25.0 / 8.0) * t * t + 1.0) / (w * w);
}

}  // namespace

TEST_CASE("series and transformed branches hit elementary closed forms") {
  for (double x : {0.05, 0.25, 0.49, 0.5, 0.51, 0.75, 0.9, 0.97}) {
    CAPTURE(x);
    CHECK(gauss_2f1(1.0, 1.0, 2.0, x) == doctest::Approx(log_form(x)).epsilon(1e-13));
    CHECK(gauss_2f1(0.7, 1.3, 1.3, x) == doctest::Approx(binom_form(0.7, x)).epsilon(1e-13));
  }
  for (double x : {0.3, 0.6, 0.9, 0.99}) {
    // arcsin(x)/x = 2F1(1/2,1/2;3/2;x^2); x^2 crosses the branch switch.
    CHECK(gauss_2f1(0.5, 0.5, 1.5, x * x) ==
          doctest::Approx(std::asin(x) / x).epsilon(1e-13));
  }
  // sqrt(1-x) = 2F1(a,-1/2;a;x), the k = n-1 degeneration of the linear family.
  for (double x : {0.2, 0.8, 0.99}) {
    CHECK(gauss_2f1(4.0, -0.5, 4.0, x) == doctest::Approx(std::sqrt(1.0 - x)).epsilon(1e-13));
  }
  CHECK(gauss_2f1(1.7, -0.3, 2.1, 0.0) == 1.0);
}

TEST_CASE("argument symmetry in the upper parameters") {
  for (double x : {0.2, 0.7}) {
    CHECK(gauss_2f1(1.7, -0.3, 2.1, x) ==
          doctest::Approx(gauss_2f1(-0.3, 1.7, 2.1, x)).epsilon(1e-14));
  }
}

TEST_CASE("derivatives through parameter shifts match closed forms") {
  // 2F1(1,b;1;x) = (1-x)^{-b} differentiates elementarily.
  const double b = 1.5, x = 0.25;
  CHECK(gauss_2f1_deriv(1.0, b, 1.0, x, 0) == doctest::Approx(std::pow(0.75, -b)).epsilon(1e-13));
  CHECK(gauss_2f1_deriv(1.0, b, 1.0, x, 1) ==
        doctest::Approx(b * std::pow(0.75, -b - 1.0)).epsilon(1e-12));
  CHECK(gauss_2f1_deriv(1.0, b, 1.0, x, 2) ==
        doctest::Approx(b * (b + 1.0) * std::pow(0.75, -b - 2.0)).epsilon(1e-12));
  // d/dx of the log form, on both sides of the branch switch.
  for (double y : {0.3, 0.7}) {
    const double ref = 1.0 / (y * (1.0 - y)) - log_form(y) / y;
    CHECK(gauss_2f1_deriv(1.0, 1.0, 2.0, y, 1) == doctest::Approx(ref).epsilon(1e-11));
  }
}

TEST_CASE("domain and parameter validation") {
  CHECK_THROWS_WITH_AS(gauss_2f1(1.0, 1.0, 0.0, 0.3), doctest::Contains("c must not"), error);
  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, -2.0, 0.3), error);
  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, 1.0), error);
  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, -0.1), error);
  CHECK_THROWS_AS(gauss_2f1_deriv(1.0, 1.0, 2.0, 0.3, 3), error);
  try {
    gauss_2f1(1.0, 1.0, 2.0, 1.5);
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_input);
  }
}

TEST_CASE("pair validation") {
  CHECK_THROWS_AS(ConePair::create(2, 1), error);
  CHECK_THROWS_AS(ConePair::create(7, 0), error);
  CHECK_THROWS_AS(ConePair::create(7, 6), error);  // k = n-1 degenerates
  const ConePair p = ConePair::create(7, 2);
  CHECK(p.alpha() == doctest::Approx(0.2));
  CHECK(p.lawson_height() == doctest::Approx(std::sqrt(0.5)));
  CHECK(p.lawson_root() == doctest::Approx(std::sqrt(2.0 / 6.0)));
}

TEST_CASE("linear profile for (7,1) matches its elementary form") {
  const auto f0 = ProfileFamily::linear(ConePair::create(7, 1));
  CHECK(f0.eigenvalue() == 6.0);
  CHECK(f0.eval(0.0) == 1.0);
  for (double t : {0.1, 0.3, 0.45, 0.52, 0.6, 0.8}) {
    CAPTURE(t);
    CHECK(f0.eval(t) == doctest::Approx(f71_closed(t)).epsilon(1e-12));
  }
  // The zero of the elementary form brackets the reported zero.
  const double z = f0.zero();
  CHECK(z == doctest::Approx(0.517331).epsilon(2e-5));
  CHECK(f71_closed(z - 1e-8) > 0.0);
  CHECK(f71_closed(z + 1e-8) < 0.0);
}

TEST_CASE("comparison profile with exponent -3 at (7,3) is elementary") {
  const auto g = ProfileFamily::barrier(ConePair::create(7, 3), -3.0);
  CHECK(g.eigenvalue() == doctest::Approx(-6.0));
  // 2F1(1, 3/2; 3/2; t^2) = 1/(1-t^2).
  CHECK(g.eval(0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(g.eval(0.5, 1) == doctest::Approx(2.0 * 0.5 / (0.75 * 0.75)).epsilon(1e-12));
}

TEST_CASE("families satisfy their defining equation") {
  struct Case {
    int n, k;
    bool linear;
    double e;
  };
  for (const Case c : {Case{7, 2, true, 0.0}, Case{9, 5, true, 0.0}, Case{12, 9, true, 0.0},
                       Case{7, 1, false, -3.23}, Case{8, 3, false, -4.5}}) {
    const ConePair pair = ConePair::create(c.n, c.k);
    const auto fam = c.linear ? ProfileFamily::linear(pair) : ProfileFamily::barrier(pair, c.e);
    for (double t : {0.1, 0.35, 0.6, 0.85}) {
      CAPTURE(c.n);
      CAPTURE(c.k);
      CAPTURE(t);
      const double f = fam.eval(t), fp = fam.eval(t, 1), fpp = fam.eval(t, 2);
      const double coeff = (c.k - 1.0) / t - (c.n - 1.0) * t;
      const double res = (1.0 - t * t) * fpp + coeff * fp + fam.eigenvalue() * f;
      const double scale = std::abs(fpp) + std::abs(fp) + std::abs(f) + 1.0;
      CHECK(std::abs(res) <= 1e-9 * scale);
      // The equation-derived second derivative agrees with the shifted one.
      CHECK(fam.second_deriv_from_ode(t) ==
            doctest::Approx(fpp).epsilon(1e-9).scale(scale));
    }
  }
}

TEST_CASE("residual of the linear operator on a constant is the eigenvalue term") {
  const ConePair p = ConePair::create(7, 1);
  CHECK(legendre_residual(p, 0.5, 1.0, 0.0, 0.0) == 6.0);
  CHECK_THROWS_AS(legendre_residual(p, 0.0, 1.0, 0.0, 0.0), error);
}

TEST_CASE("first zero is genuinely the first") {
  const auto f0 = ProfileFamily::linear(ConePair::create(7, 2));
  const double z = f0.zero();
  CHECK(f0.eval(z - 1e-8) > 0.0);
  CHECK(f0.eval(z + 1e-8) < 0.0);
  for (int i = 1; i <= 400; ++i) {
    const double t = (z - 1e-3) * i / 400.0;
    CHECK(f0.eval(t) > 0.0);
  }
  // Cached second call returns the same bits.
  CHECK(f0.zero() == z);
}

TEST_CASE("a family without a zero reports that instead of inventing one") {
  // Negative exponents keep the comparison family positive all the way up.
  const auto grows = ProfileFamily::barrier(ConePair::create(7, 1), -3.23);
  try {
    grows.zero();
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::no_zero);
  }
}

TEST_CASE("family evaluation validates its domain") {
  const auto f0 = ProfileFamily::linear(ConePair::create(7, 1));
  CHECK_THROWS_AS(f0.eval(1.0), error);
  CHECK_THROWS_AS(f0.eval(-0.1), error);
  CHECK_THROWS_AS(f0.eval(0.5, 3), error);
  CHECK_THROWS_AS(f0.second_deriv_from_ode(0.0), error);
}
