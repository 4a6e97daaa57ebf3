#include "minv/monomial_integrals.hpp"

#include <algorithm>

namespace minv {

std::vector<RatVector> monomial_integral_basis(const MultinomialSystem& s) {
  // (B;C_j) = 0 for all j is the right nullspace of the transposed coefficient
  // matrix; monomial integrals do not depend on the exponent rows at all.
  std::vector<RatVector> basis = null_space(s.coefficient_matrix().transposed());
  for (auto& b : basis) b = b.transposed();  // exponent vectors are rows
  std::sort(basis.begin(), basis.end(),
            [](const RatVector& a, const RatVector& b) {
              return RatVector::lex_compare(a, b) < 0;
            });
  return basis;
}

std::optional<SeparationResult> separation_check(const MultinomialSystem& s) {
  if (s.term_count() != s.dim()) return std::nullopt;
  const auto& terms = s.terms();
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = 0; j < terms.size(); ++j)
      if (i != j && !inner_product(terms[i].expo, terms[j].coef).is_zero()) return std::nullopt;

  SeparationResult res;
  for (const auto& t : terms) {
    res.substitutions.push_back(t.expo);
    res.diagonal.push_back(inner_product(t.expo, t.coef));
  }
  return res;
}

}  // namespace minv
