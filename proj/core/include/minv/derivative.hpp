#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "minv/system.hpp"

namespace minv {

struct IntegralTerm {
  Rational coef;   // e_k
  RatVector expo;  // B_k, row of length n
};

/// sum_k e_k Y^{B_k} with pairwise distinct exponent rows and nonzero
/// coefficients.
struct AlgebraicIntegral {
  std::vector<IntegralTerm> terms;
};

/// ln(Y^{B_1}) + sum_{k>=2} e_k Y^{B_k}. A scalar multiple of the logarithm is
/// absorbed into the log exponent: a ln(Y^B) = ln(Y^{aB}).
struct LogIntegralA {
  RatVector log_expo;  // B_1, nonzero
  std::vector<IntegralTerm> terms;
};

/// e_1 Y^{B_1} + ln(1 + sum_{k>=2} e_k Y^{B_k}).
struct LogIntegralB {
  IntegralTerm lead;  // e_1 != 0
  std::vector<IntegralTerm> inner;
};

using Integral = std::variant<AlgebraicIntegral, LogIntegralA, LogIntegralB>;

/// Throws InputError when the invariants of the integral form are violated or
/// the exponent length does not match n.
void check_integral(const Integral& integral, std::size_t n);

struct DerivativeTerm {
  RatVector expo;
  Rational coef;
};

/// Exact collected derivative: distinct exponent rows, zero sums dropped,
/// rows sorted lexicographically by exponent.
struct CollectedDerivative {
  std::vector<DerivativeTerm> rows;
  bool empty() const { return rows.empty(); }
};

/// (Y^B)' = Y^B sum_j (B;C_j) Y^{H_j}: one entry {B + H_j, (B;C_j)} per system
/// term with nonzero inner product.
std::vector<DerivativeTerm> monomial_derivative(const RatVector& b, const MultinomialSystem& s);

/// (ln Y^B)' = sum_j (B;C_j) Y^{H_j}: entries {H_j, (B;C_j)}, zero products omitted.
std::vector<DerivativeTerm> log_monomial_derivative(const RatVector& b,
                                                    const MultinomialSystem& s);

CollectedDerivative collect(const std::vector<DerivativeTerm>& terms);

struct VerifyResult {
  bool holds = false;
  CollectedDerivative residual;  // empty exactly when holds
};

VerifyResult verify_algebraic(const AlgebraicIntegral& i, const MultinomialSystem& s);
VerifyResult verify_logA(const LogIntegralA& i, const MultinomialSystem& s);
VerifyResult verify_logB(const LogIntegralB& i, const MultinomialSystem& s);
VerifyResult verify(const Integral& i, const MultinomialSystem& s);

/// Uncollected numerator of the cleared-fraction derivative of the logB form:
/// e1 (Y^{B1})' (1 + sum e_k Y^{B_k}) + sum e_k (Y^{B_k})'. Exposed so the
/// e1 = 0 degeneration can be checked against the plain algebraic derivative.
std::vector<DerivativeTerm> logB_numerator(const IntegralTerm& lead,
                                           const std::vector<IntegralTerm>& inner,
                                           const MultinomialSystem& s);

/// Parses the "integral algebraic|logA|logB" file format.
Integral parse_integral(std::string_view text);
std::string print_integral(const Integral& i);

}  // namespace minv
