#pragma once

// Shared fixtures and generators for the test suites. Random sweeps are
// seeded; set MINV_TEST_SEED to reproduce a failure with a different seed.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "minv/families.hpp"
#include "minv/system.hpp"

namespace testutil {

inline std::uint64_t seed_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("MINV_TEST_SEED")) return std::strtoull(env, nullptr, 10);
  return fallback;
}

inline minv::Rational random_rational(std::mt19937_64& rng, long bound = 4, long denBound = 3) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, denBound);
  return minv::Rational(num(rng), den(rng));
}

inline minv::RatVector random_row(std::mt19937_64& rng, std::size_t n, long bound = 3) {
  std::vector<minv::Rational> e(n);
  for (auto& x : e) x = random_rational(rng, bound, 2);
  return minv::RatVector::row(std::move(e));
}

/// Canonical random system: distinct exponent rows, nonzero coefficient columns.
inline minv::MultinomialSystem random_system(std::mt19937_64& rng, std::size_t maxN = 4,
                                             std::size_t maxR = 4) {
  std::uniform_int_distribution<std::size_t> nd(1, maxN), rd(1, maxR);
  const std::size_t n = nd(rng), r = rd(rng);

  std::set<minv::RatVector, minv::RatVectorLexLess> usedExpo;
  std::vector<minv::SystemTerm> terms;
  for (std::size_t j = 0; j < r; ++j) {
    minv::RatVector expo = random_row(rng, n);
    while (!usedExpo.insert(expo).second) expo = random_row(rng, n);

    minv::RatVector coef = random_row(rng, n).transposed();
    while (coef.is_zero()) coef = random_row(rng, n).transposed();
    terms.push_back(minv::SystemTerm{coef, expo});
  }
  return minv::MultinomialSystem::make(n, std::move(terms));
}

/// Random planar parameter point on the algebraic branch.
inline minv::PlanarTheta random_algebraic_theta(std::mt19937_64& rng) {
  for (;;) {
    minv::PlanarTheta t{random_rational(rng), random_rational(rng), random_rational(rng),
                        random_rational(rng), random_rational(rng), random_rational(rng),
                        random_rational(rng), random_rational(rng)};
    if (t.det().is_zero()) continue;
    const minv::RatVector diff = t.H1() - t.H2();
    if (inner_product(diff, t.C1()).is_zero()) continue;
    if (inner_product(diff, t.C2()).is_zero()) continue;
    return t;
  }
}

/// The harmonic oscillator y1' = y2, y2' = -y1 in multinomial vector form.
inline minv::MultinomialSystem oscillator() {
  using minv::Rational, minv::RatVector, minv::SystemTerm;
  return minv::MultinomialSystem::make(
      2, {SystemTerm{RatVector::column({1, 0}), RatVector::row({-1, 1})},
          SystemTerm{RatVector::column({0, -1}), RatVector::row({1, -1})}});
}

/// Its invariant y2^2 + y1^2.
inline minv::AlgebraicIntegral oscillator_integral() {
  using minv::IntegralTerm, minv::RatVector;
  return minv::AlgebraicIntegral{
      {IntegralTerm{1, RatVector::row({0, 2})}, IntegralTerm{1, RatVector::row({2, 0})}}};
}

/// Equality of algebraic integrals as term sets, up to one global scale.
inline bool same_up_to_scale(minv::AlgebraicIntegral a, minv::AlgebraicIntegral b) {
  const auto byExpo = [](const minv::IntegralTerm& x, const minv::IntegralTerm& y) {
    return minv::RatVector::lex_compare(x.expo, y.expo) < 0;
  };
  std::sort(a.terms.begin(), a.terms.end(), byExpo);
  std::sort(b.terms.begin(), b.terms.end(), byExpo);
  if (a.terms.size() != b.terms.size()) return false;
  const minv::Rational ratio = a.terms.front().coef / b.terms.front().coef;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (!(a.terms[i].expo == b.terms[i].expo)) return false;
    if (!(a.terms[i].coef == ratio * b.terms[i].coef)) return false;
  }
  return true;
}

}  // namespace testutil
