#pragma once

#include <optional>
#include <vector>

#include "minv/derivative.hpp"

namespace minv {

/// Complete separation of variables: substituting z_j = Y^{H_j} turns the
/// system into z_j' = d_j z_j^2 with d_j = (H_j;C_j).
struct SeparationResult {
  std::vector<RatVector> substitutions;  // the H_j, in term order
  std::vector<Rational> diagonal;        // the (H_j;C_j)
};

/// Primitive basis of {B : (B;C_j) = 0 for all j}, i.e. of all monomial first
/// integrals Y^B. Basis size is n - rank(c_ij). Sorted lexicographically.
std::vector<RatVector> monomial_integral_basis(const MultinomialSystem& s);

/// Present exactly when r = n and (H_i;C_j) = 0 for all i != j.
std::optional<SeparationResult> separation_check(const MultinomialSystem& s);

}  // namespace minv
