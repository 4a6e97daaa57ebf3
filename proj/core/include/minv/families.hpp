#pragma once

#include <optional>

#include "minv/arrays.hpp"

namespace minv {

/// The eight parameters of the planar two-term family
/// y' = y [ C1 Y^{H1} + C2 Y^{H2} ] with C1 = (c11,c21)^t, C2 = (c12,c22)^t,
/// H1 = (h11,h12), H2 = (h21,h22).
struct PlanarTheta {
  Rational c11, c21, c12, c22;
  Rational h11, h12, h21, h22;

  RatVector C1() const { return RatVector::column({c11, c21}); }
  RatVector C2() const { return RatVector::column({c12, c22}); }
  RatVector H1() const { return RatVector::row({h11, h12}); }
  RatVector H2() const { return RatVector::row({h21, h22}); }
  Rational det() const { return c11 * c22 - c12 * c21; }

  /// The two-term system (merged to one term when H1 = H2).
  MultinomialSystem system() const;
};

/// Which first-integral form the parameter point carries. Decided exactly by
/// d = det(c_ij), (H1-H2;C1) and (H1-H2;C2):
///   d != 0 and both products nonzero      -> Algebraic
///   d = 0                                  -> Monomial
///   d != 0, (H1-H2;C2) = 0, (H1-H2;C1) != 0 -> LogStar
///   d != 0, (H1-H2;C1) = 0, (H1-H2;C2) != 0 -> LogStarStar
///   H1 = H2                                -> Degenerate
enum class PlanarBranchTag { Algebraic, Monomial, LogStar, LogStarStar, Degenerate };

const char* to_string(PlanarBranchTag tag);

struct PlanarBranch {
  PlanarBranchTag tag = PlanarBranchTag::Degenerate;
  Rational d;    // det(c_ij)
  Rational ip1;  // (H1-H2;C1)
  Rational ip2;  // (H1-H2;C2)
  std::optional<Integral> integral;  // none on Degenerate
};

PlanarBranch planar_branch(const PlanarTheta& t);

/// Closed-form two-term integral on the Algebraic branch:
/// B1 = ((H1-H2;C2)/d)(-c21,c11), B2 = B1 + H2 - H1, e1 = (H2-H1;C1),
/// e2 = (H2-H1;C2). Throws InputError off the branch.
AlgebraicIntegral planar_algebraic(const PlanarTheta& t);

/// Logarithmic integral on the LogStar / LogStarStar branch: the algebraic
/// exponent is the exponent-row difference and the log exponent solves the
/// two-equation linear system for its column.
LogIntegralA planar_log(const PlanarTheta& t);

/// Single-monomial integral on the d = 0 branch.
AlgebraicIntegral planar_monomial(const PlanarTheta& t);

/// Third-term extension of a planar base point: C3 = l1 C1 + l2 C2 with
/// exponent row h3.
struct ExtensionParams {
  PlanarTheta base;
  Rational l1, l2;
  RatVector h3;  // row, length 2
};

struct ExtensionResult {
  MultinomialSystem system;     // three terms
  AlgebraicIntegral integral;   // three terms, verified
};

/// Case l1 l2 != 0. Requires (H3;C3) = l1(H1;C1) + l2(H2;C2) and the four
/// coupling inequalities; B3 = B1 + H3 - H1 and e3 = -e1 (B1;C3)/(B3;C1).
ExtensionResult extend_case1(const ExtensionParams& x);

/// Case l1 = 0, l2 != 0. Requires (H3-H2;C2) = 0 and (H3-H1;C1,C3) != 0.
ExtensionResult extend_case2(const ExtensionParams& x);

/// Parameters of the logarithmic family y'' = c22 y^{h21} (y')^2
/// + c23 y^{(q-1)h21+q-2} (y')^{h32+1}, q >= 3.
struct LogFamilyParams {
  long q = 0;
  Rational h21, h32, c22, c23;
};

struct LogFamilyResult {
  ScalarODE ode;
  LogIntegralB integral;  // verified against the reduced system
};

/// Builds the equation and its log-form integral with q monomials. The lead
/// coefficient is (h32-1)c22/(h21+1); the last inner coefficient is its
/// negative, the remaining ones follow the downward recurrence
/// e_k = -e1 e_{k+1}/(q-k+1) and e_2 = e_3 c22/c23.
LogFamilyResult log_family(const LogFamilyParams& p);

}  // namespace minv
