#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minv/linalg.hpp"

namespace minv {

/// One term C_j Y^{H_j}: a coefficient column paired with an exponent row.
struct SystemTerm {
  RatVector coef;  // column, length n
  RatVector expo;  // row, length n
};

struct SystemReport {
  std::string canonical_listing;
  std::vector<std::string> merge_log;
};

/// Autonomous multinomial system y' = y * sum_j C_j Y^{H_j} in canonical form:
/// exponent rows pairwise distinct (duplicates merged by summing coefficient
/// columns), no zero coefficient columns, terms in first-appearance order.
class MultinomialSystem {
 public:
  static MultinomialSystem make(std::size_t n, std::vector<SystemTerm> terms,
                                std::vector<std::string>* mergeLog = nullptr);

  std::size_t dim() const { return n_; }                 // n
  std::size_t term_count() const { return terms_.size(); }  // r
  const std::vector<SystemTerm>& terms() const { return terms_; }
  const SystemTerm& term(std::size_t j) const { return terms_[j]; }

  /// The n x r matrix whose columns are the C_j.
  RatMatrix coefficient_matrix() const;

  friend bool operator==(const MultinomialSystem& a, const MultinomialSystem& b);

 private:
  MultinomialSystem(std::size_t n, std::vector<SystemTerm> terms)
      : n_(n), terms_(std::move(terms)) {}

  std::size_t n_ = 0;
  std::vector<SystemTerm> terms_;
};

/// Scalar equation y^(n) = sum_j l_j * prod_i (y^(i))^(m_ji), canonical:
/// exponent rows pairwise distinct, nonzero coefficients. An empty term list
/// means y^(n) = 0.
class ScalarODE {
 public:
  struct Term {
    Rational coef;   // l_j
    RatVector expo;  // row of length n over (y, y', ..., y^(n-1))
  };

  static ScalarODE make(std::size_t order, std::vector<Term> terms);

  std::size_t order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  ScalarODE(std::size_t order, std::vector<Term> terms)
      : order_(order), terms_(std::move(terms)) {}

  std::size_t order_ = 0;
  std::vector<Term> terms_;
};

/// Parses the "mvf <n>" file format; `#` starts a comment. The result is
/// canonicalized; parse(print(s)) == s.
MultinomialSystem parse_system(std::string_view text, SystemReport* report = nullptr);
std::string print_system(const MultinomialSystem& s);

/// Parses the "ode <n>" file format.
ScalarODE parse_scalar_ode(std::string_view text);
std::string print_scalar_ode(const ScalarODE& o);

/// Rewrites y^(n) = f as a multinomial system over y_1 = y, ..., y_n = y^(n-1).
MultinomialSystem reduce_scalar_ode(const ScalarODE& o);

/// Scales every exponent row by alpha; coefficients are untouched.
/// alpha = 0 is rejected (it collapses all exponent rows).
MultinomialSystem sigma_alpha(const MultinomialSystem& s, const Rational& alpha);

/// Entry j is true when the exponents of every algebraic first integral are
/// independent of the coefficient l_j, i.e. when the term's exponent row is
/// not of the shape -u_i + u_{i+1} + u_{n-1} (coinciding indices summed).
std::vector<bool> exponent_independence(const ScalarODE& o);

}  // namespace minv
