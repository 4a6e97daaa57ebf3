#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "minv/errors.hpp"
#include "minv/families.hpp"

using namespace minv;

namespace {

// the oscillator's parameter point
PlanarTheta theta_bar() {
  return PlanarTheta{1, 0, 0, -1, -1, 1, 1, -1};
}

PlanarTheta theta_log_star() {
  return PlanarTheta{1, 0, 0, 1, 0, 1, 1, 1};
}

}  // namespace

TEST_CASE("branch decision") {
  CHECK(planar_branch(theta_bar()).tag == PlanarBranchTag::Algebraic);

  const PlanarBranch star = planar_branch(theta_log_star());
  CHECK(star.tag == PlanarBranchTag::LogStar);
  CHECK(star.d == 1);
  CHECK(star.ip2 == 0);
  CHECK(star.ip1 == -1);

  // C2 = 2 C1 kills the determinant
  const PlanarTheta mono{1, 2, 2, 4, 1, 0, 0, 1};
  const PlanarBranch mb = planar_branch(mono);
  CHECK(mb.tag == PlanarBranchTag::Monomial);
  REQUIRE(mb.integral.has_value());
  CHECK(verify(*mb.integral, mono.system()).holds);

  const PlanarTheta degen{1, 0, 0, 1, 1, 1, 1, 1};
  CHECK(planar_branch(degen).tag == PlanarBranchTag::Degenerate);
  CHECK_FALSE(planar_branch(degen).integral.has_value());

  // mirror case: (H1-H2;C1) = 0 instead
  const PlanarTheta starstar{1, 0, 0, 1, 1, 0, 1, 1};
  CHECK(planar_branch(starstar).tag == PlanarBranchTag::LogStarStar);
}

TEST_CASE("planar closed form at the oscillator point") {
  const AlgebraicIntegral integral = planar_algebraic(theta_bar());
  REQUIRE(integral.terms.size() == 2);
  CHECK(integral.terms[0].coef == 2);
  CHECK(integral.terms[0].expo == RatVector::row({0, 2}));
  CHECK(integral.terms[1].coef == 2);
  CHECK(integral.terms[1].expo == RatVector::row({2, 0}));

  CHECK_THROWS_AS(planar_algebraic(theta_log_star()), InputError);
}

TEST_CASE("planar closed form verifies across the branch") {
  std::mt19937_64 rng(testutil::seed_or(71001));
  for (int i = 0; i < 50; ++i) {
    const PlanarTheta t = testutil::random_algebraic_theta(rng);
    const AlgebraicIntegral integral = planar_algebraic(t);
    CHECK(verify_algebraic(integral, t.system()).holds);
    // the second exponent is the first shifted by the exponent-row difference
    CHECK(integral.terms[1].expo == integral.terms[0].expo + t.H2() - t.H1());
  }
}

TEST_CASE("planar logarithmic integrals") {
  const LogIntegralA star = planar_log(theta_log_star());
  CHECK(star.log_expo == RatVector::row({0, -1}));
  REQUIRE(star.terms.size() == 1);
  CHECK(star.terms[0].coef == 1);
  CHECK(star.terms[0].expo == RatVector::row({1, 0}));  // H2 - H1
  CHECK(verify_logA(star, theta_log_star().system()).holds);

  const PlanarTheta starstar{1, 0, 0, 1, 1, 0, 1, 1};
  const LogIntegralA mirror = planar_log(starstar);
  CHECK(mirror.terms[0].expo == starstar.H1() - starstar.H2());
  CHECK(verify_logA(mirror, starstar.system()).holds);

  CHECK_THROWS_AS(planar_log(theta_bar()), InputError);
}

TEST_CASE("log-star points sit on the algebraic branch boundary") {
  // at the degenerate locus the algebraic closed form's precondition fails
  // while the log form verifies, with the plain exponent at its limit value
  const PlanarTheta t = theta_log_star();
  CHECK_THROWS_AS(planar_algebraic(t), InputError);
  const LogIntegralA star = planar_log(t);
  CHECK(star.terms[0].expo == t.H2() - t.H1());
}

TEST_CASE("three-term extension, case 1") {
  ExtensionParams x{theta_bar(), 1, 1, RatVector::row({1, 1})};
  const ExtensionResult res = extend_case1(x);
  CHECK(res.system.term_count() == 3);
  CHECK(res.system.term(2).coef == RatVector::column({1, -1}));
  CHECK(verify_algebraic(res.integral, res.system).holds);

  const AlgebraicIntegral expected{{IntegralTerm{1, RatVector::row({0, 2})},
                                    IntegralTerm{1, RatVector::row({2, 0})},
                                    IntegralTerm{1, RatVector::row({2, 2})}}};
  CHECK(testutil::same_up_to_scale(res.integral, expected));
}

TEST_CASE("case 1 coefficient follows the closed form") {
  // l1 = 1, l2 = 2 with h31 + 1 = 2 (h32 + 1): e3/e1 = 2 l2 / (2 (h31+1)) = 1
  ExtensionParams x{theta_bar(), 1, 2, RatVector::row({3, 1})};
  const ExtensionResult res = extend_case1(x);
  CHECK(res.integral.terms[2].coef / res.integral.terms[0].coef == 1);
  CHECK(res.integral.terms[2].expo == RatVector::row({4, 2}));
}

TEST_CASE("case 1 rejects bad parameters") {
  CHECK_THROWS_AS(extend_case1({theta_bar(), 0, 1, RatVector::row({1, 1})}), InputError);
  // (H3;C3) constraint violated: l1 (h31+1) != l2 (h32+1)
  CHECK_THROWS_AS(extend_case1({theta_bar(), 1, 1, RatVector::row({1, 2})}), InputError);
  // inequality violated: H3 = H1 makes (H1-H3;C1) vanish
  CHECK_THROWS_AS(extend_case1({theta_bar(), 1, 1, RatVector::row({-1, 1})}), InputError);
}

TEST_CASE("three-term extension, case 2") {
  // H3 = (h, -1) keeps (H3-H2;C2) = 0 automatically for the oscillator base
  for (long h : {0L, 2L, 3L}) {
    ExtensionParams x{theta_bar(), 0, 1, RatVector::row({Rational(h), -1})};
    const ExtensionResult res = extend_case2(x);
    CHECK(res.system.term_count() == 3);
    CHECK(verify_algebraic(res.integral, res.system).holds);
  }

  CHECK_THROWS_AS(extend_case2({theta_bar(), 0, 1, RatVector::row({2, 0})}), InputError);
  CHECK_THROWS_AS(extend_case2({theta_bar(), 0, 1, RatVector::row({-1, -1})}), InputError);
  CHECK_THROWS_AS(extend_case2({theta_bar(), 0, 1, RatVector::row({1, -1})}), InputError);
  CHECK_THROWS_AS(extend_case2({theta_bar(), 1, 1, RatVector::row({0, -1})}), InputError);
}

TEST_CASE("log family reproduces the worked example at q = 4") {
  const LogFamilyResult res = log_family({4, 0, -1, 2, -3});
  CHECK(print_scalar_ode(res.ode) == "ode 2\nterm 2 | 0 2\nterm -3 | 2 0\n");

  CHECK(res.integral.lead.coef == -4);
  CHECK(res.integral.lead.expo == RatVector::row({1, 0}));
  REQUIRE(res.integral.inner.size() == 3);
  CHECK(res.integral.inner[0].coef == Rational(-16, 3));
  CHECK(res.integral.inner[0].expo == RatVector::row({0, 2}));
  CHECK(res.integral.inner[1].coef == 8);
  CHECK(res.integral.inner[1].expo == RatVector::row({2, 0}));
  CHECK(res.integral.inner[2].coef == 4);
  CHECK(res.integral.inner[2].expo == RatVector::row({1, 0}));
}

TEST_CASE("log family general coefficient block") {
  // e1 = (h32-1) c22 / (h21+1), e3 = e1^2/2, e2 = e3 c22/c23, e4 = -e1
  const Rational h21(1), h32(2), c22(1, 2), c23(3);
  const LogFamilyResult res = log_family({4, h21, h32, c22, c23});
  const Rational e1 = (h32 - 1) * c22 / (h21 + 1);
  CHECK(res.integral.lead.coef == e1);
  CHECK(res.integral.inner[2].coef == -e1);
  CHECK(res.integral.inner[1].coef == e1 * e1 / 2);
  CHECK(res.integral.inner[0].coef == e1 * e1 / 2 * c22 / c23);
}

TEST_CASE("log family verifies for q = 3 and q = 5") {
  const LogFamilyParams samples[] = {
      {3, 0, -1, 2, -3}, {3, 1, 2, Rational(1, 2), 1}, {3, -2, 0, -1, 5},
      {5, 0, -1, 2, -3}, {5, 1, 2, Rational(1, 2), 1}, {5, -2, 0, -1, 5},
  };
  for (const auto& p : samples) {
    const LogFamilyResult res = log_family(p);
    CHECK(verify_logB(res.integral, reduce_scalar_ode(res.ode)).holds);
    CHECK(res.integral.inner.size() == static_cast<std::size_t>(p.q) - 1);
  }
}

TEST_CASE("log family rejects degenerate parameters") {
  CHECK_THROWS_AS(log_family({2, 0, -1, 2, -3}), InputError);
  CHECK_THROWS_AS(log_family({4, -1, -1, 2, -3}), InputError);
  CHECK_THROWS_AS(log_family({4, 0, -1, 2, 0}), InputError);
  CHECK_THROWS_AS(log_family({4, 0, -1, 0, -3}), InputError);
  CHECK_THROWS_AS(log_family({4, 0, 1, 2, -3}), InputError);
}
