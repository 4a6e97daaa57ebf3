#include "minv/families.hpp"

#include "minv/errors.hpp"

namespace minv {

namespace {

Rational det3(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
              const Rational& e, const Rational& f, const Rational& g, const Rational& h,
              const Rational& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

MultinomialSystem PlanarTheta::system() const {
  return MultinomialSystem::make(2, {SystemTerm{C1(), H1()}, SystemTerm{C2(), H2()}});
}

const char* to_string(PlanarBranchTag tag) {
  switch (tag) {
    case PlanarBranchTag::Algebraic: return "algebraic";
    case PlanarBranchTag::Monomial: return "monomial";
    case PlanarBranchTag::LogStar: return "log-star";
    case PlanarBranchTag::LogStarStar: return "log-star-star";
    case PlanarBranchTag::Degenerate: return "degenerate";
  }
  return "?";
}

PlanarBranch planar_branch(const PlanarTheta& t) {
  PlanarBranch br;
  br.d = t.det();
  const RatVector diff = t.H1() - t.H2();
  br.ip1 = inner_product(diff, t.C1());
  br.ip2 = inner_product(diff, t.C2());

  if (t.H1() == t.H2()) {
    br.tag = PlanarBranchTag::Degenerate;
    return br;
  }
  if (br.d.is_zero()) {
    br.tag = PlanarBranchTag::Monomial;
    br.integral = Integral(planar_monomial(t));
    return br;
  }
  const bool z1 = br.ip1.is_zero(), z2 = br.ip2.is_zero();
  if (!z1 && !z2) {
    br.tag = PlanarBranchTag::Algebraic;
    br.integral = Integral(planar_algebraic(t));
  } else if (z2 && !z1) {
    br.tag = PlanarBranchTag::LogStar;
    br.integral = Integral(planar_log(t));
  } else if (z1 && !z2) {
    br.tag = PlanarBranchTag::LogStarStar;
    br.integral = Integral(planar_log(t));
  } else {
    // both products vanish and d != 0 forces H1 = H2, handled above
    throw InternalError("planar branch analysis reached an impossible state");
  }
  return br;
}

AlgebraicIntegral planar_monomial(const PlanarTheta& t) {
  require(t.det().is_zero(), "monomial branch needs det(c_ij) = 0");
  const RatMatrix m = RatMatrix::from_rows({t.C1().transposed(), t.C2().transposed()});
  const std::vector<RatVector> basis = null_space(m);
  if (basis.empty()) throw InternalError("rank-deficient 2x2 matrix with empty nullspace");
  return AlgebraicIntegral{{IntegralTerm{1, basis.front().transposed()}}};
}

AlgebraicIntegral planar_algebraic(const PlanarTheta& t) {
  const Rational d = t.det();
  const RatVector diff = t.H1() - t.H2();
  const Rational ip1 = inner_product(diff, t.C1());
  const Rational ip2 = inner_product(diff, t.C2());
  require(!d.is_zero(), "algebraic branch needs det(c_ij) != 0");
  require(!ip1.is_zero(), "algebraic branch needs (H1-H2;C1) != 0");
  require(!ip2.is_zero(), "algebraic branch needs (H1-H2;C2) != 0");

  const RatVector b1 = (ip2 / d) * RatVector::row({-t.c21, t.c11});
  const RatVector b2 = (-ip1 / d) * RatVector::row({t.c22, -t.c12});
  if (!(b2 == b1 + t.H2() - t.H1()))
    throw InternalError("planar exponents break the offset identity");

  AlgebraicIntegral integral{{IntegralTerm{-ip1, b1}, IntegralTerm{-ip2, b2}}};
  if (!verify_algebraic(integral, t.system()).holds)
    throw InternalError("planar algebraic integral fails verification");
  return integral;
}

LogIntegralA planar_log(const PlanarTheta& t) {
  const Rational d = t.det();
  const RatVector diff = t.H1() - t.H2();
  const Rational ip1 = inner_product(diff, t.C1());
  const Rational ip2 = inner_product(diff, t.C2());
  require(!d.is_zero(), "log branch needs det(c_ij) != 0");
  require(ip1.is_zero() != ip2.is_zero(),
          "log branch needs exactly one of (H1-H2;C1), (H1-H2;C2) to vanish");

  // The log exponent solves (B;C_own) = 0, (B;C_other) = rhs; the plain
  // monomial exponent is the exponent-row difference with coefficient 1.
  RatVector logExpo = RatVector::zero(2, Orientation::Row);
  RatVector plain = RatVector::zero(2, Orientation::Row);
  const RatMatrix mat = RatMatrix::from_rows({t.C1().transposed(), t.C2().transposed()});
  if (ip2.is_zero()) {  // LogStar
    const SolveResult sol = solve(mat, RatVector::column({Rational(0), ip1}));
    if (sol.kind != SolveKind::Unique) throw InternalError("log-star system is not regular");
    logExpo = sol.particular.transposed();
    plain = t.H2() - t.H1();
  } else {  // LogStarStar
    const SolveResult sol = solve(mat, RatVector::column({-ip2, Rational(0)}));
    if (sol.kind != SolveKind::Unique) throw InternalError("log-star-star system is not regular");
    logExpo = sol.particular.transposed();
    plain = t.H1() - t.H2();
  }

  LogIntegralA integral{logExpo, {IntegralTerm{1, plain}}};
  if (!verify_logA(integral, t.system()).holds)
    throw InternalError("planar logarithmic integral fails verification");
  return integral;
}

namespace {

struct ExtensionContext {
  RatVector c3;           // column
  Rational e3;
  RatVector b3;
  AlgebraicIntegral base;  // two verified terms
};

ExtensionResult finish_extension(const ExtensionParams& x, const ExtensionContext& ctx) {
  MultinomialSystem system = MultinomialSystem::make(
      2, {SystemTerm{x.base.C1(), x.base.H1()}, SystemTerm{x.base.C2(), x.base.H2()},
          SystemTerm{ctx.c3, x.h3}});
  if (system.term_count() != 3)
    throw InputError("third term merges into the base system; extension is degenerate");

  AlgebraicIntegral integral = ctx.base;
  integral.terms.push_back(IntegralTerm{ctx.e3, ctx.b3});
  if (!verify_algebraic(integral, system).holds)
    throw InternalError("extended integral fails verification");
  return ExtensionResult{std::move(system), std::move(integral)};
}

}  // namespace

ExtensionResult extend_case1(const ExtensionParams& x) {
  require(x.h3.size() == 2, "H3 must have two components");
  require(!x.l1.is_zero() && !x.l2.is_zero(), "case 1 needs l1 l2 != 0");

  const PlanarTheta& t = x.base;
  ExtensionContext ctx;
  ctx.c3 = x.l1 * t.C1() + x.l2 * t.C2();

  const Rational own = x.l1 * inner_product(t.H1(), t.C1()) + x.l2 * inner_product(t.H2(), t.C2());
  require(inner_product(x.h3, ctx.c3) == own,
          "coefficient constraint (H3;C3) = l1(H1;C1) + l2(H2;C2) violated");

  const RatVector d31 = t.H1() - x.h3;
  const RatVector d32 = t.H2() - x.h3;
  require(!inner_product(d31, t.C1()).is_zero(), "inequality (H1-H3;C1) != 0 violated");
  require(!inner_product(d31, ctx.c3).is_zero(), "inequality (H1-H3;C3) != 0 violated");
  require(!inner_product(d32, t.C2()).is_zero(), "inequality (H2-H3;C2) != 0 violated");
  require(!inner_product(d32, ctx.c3).is_zero(), "inequality (H2-H3;C3) != 0 violated");

  ctx.base = planar_algebraic(t);
  const RatVector& b1 = ctx.base.terms[0].expo;
  const RatVector& b2 = ctx.base.terms[1].expo;
  const Rational& e1 = ctx.base.terms[0].coef;

  ctx.b3 = b1 + x.h3 - t.H1();
  ctx.e3 = -e1 * inner_product(b1, ctx.c3) / inner_product(ctx.b3, t.C1());

  // Singular 3x3 coupling determinant: the nullspace carrying (e1,e2,e3) is
  // one-dimensional, so this must vanish exactly.
  const Rational det = det3(inner_product(b1, t.C2()), inner_product(b2, t.C1()), 0,
                            inner_product(b1, ctx.c3), 0, inner_product(ctx.b3, t.C1()),
                            0, inner_product(b2, ctx.c3), inner_product(ctx.b3, t.C2()));
  if (!det.is_zero()) throw InternalError("extension coupling determinant is nonzero");

  return finish_extension(x, ctx);
}

ExtensionResult extend_case2(const ExtensionParams& x) {
  require(x.h3.size() == 2, "H3 must have two components");
  require(x.l1.is_zero(), "case 2 needs l1 = 0");
  require(!x.l2.is_zero(), "case 2 needs l2 != 0");

  const PlanarTheta& t = x.base;
  ExtensionContext ctx;
  ctx.c3 = x.l2 * t.C2();

  require(inner_product(x.h3 - t.H2(), t.C2()).is_zero(),
          "constraint (H3-H2;C2) = 0 violated");
  require(!(x.h3 == t.H2()), "H3 coincides with H2; extension is degenerate");

  const RatVector d31 = x.h3 - t.H1();
  require(!inner_product(d31, t.C1()).is_zero(), "inequality (H3-H1;C1) != 0 violated");
  require(!inner_product(d31, ctx.c3).is_zero(), "inequality (H3-H1;C3) != 0 violated");

  ctx.base = planar_algebraic(t);
  const RatVector& b1 = ctx.base.terms[0].expo;
  const Rational& e1 = ctx.base.terms[0].coef;

  ctx.b3 = b1 + x.h3 - t.H1();
  ctx.e3 = -e1 * inner_product(b1, ctx.c3) / inner_product(ctx.b3, t.C1());

  return finish_extension(x, ctx);
}

LogFamilyResult log_family(const LogFamilyParams& p) {
  require(p.q >= 3, "the log family needs q >= 3");
  require(!(p.h21 == -1), "h21 = -1 makes the family coefficients blow up");
  require(!p.c23.is_zero(), "c23 = 0 drops the second equation term");
  require(!p.c22.is_zero(), "c22 = 0 degenerates the lead coefficient");
  require(!(p.h32 == 1), "h32 = 1 degenerates the lead coefficient");

  const Rational alpha = (p.q - 1) * p.h21 + (p.q - 2);
  const Rational beta = p.h32 + 1;
  ScalarODE ode = ScalarODE::make(
      2, {ScalarODE::Term{p.c22, RatVector::row({p.h21, 2})},
          ScalarODE::Term{p.c23, RatVector::row({alpha, beta})}});

  const Rational e1 = (p.h32 - 1) * p.c22 / (p.h21 + 1);

  std::vector<Rational> e(static_cast<std::size_t>(p.q) + 1);
  e[1] = e1;
  e[static_cast<std::size_t>(p.q)] = -e1;
  for (long k = p.q - 1; k >= 3; --k)
    e[k] = -e1 * e[k + 1] / Rational(p.q - k + 1);
  e[2] = e[3] * p.c22 / p.c23;

  LogIntegralB integral;
  integral.lead = IntegralTerm{e1, RatVector::row({p.h21 + 1, Rational(0)})};
  integral.inner.push_back(IntegralTerm{e[2], RatVector::row({Rational(0), 1 - p.h32})});
  for (long k = 3; k <= p.q; ++k)
    integral.inner.push_back(
        IntegralTerm{e[k], RatVector::row({(p.q - k + 1) * (p.h21 + 1), Rational(0)})});

  if (!verify_logB(integral, reduce_scalar_ode(ode)).holds)
    throw InternalError("log family integral fails verification");
  return LogFamilyResult{std::move(ode), std::move(integral)};
}

}  // namespace minv
