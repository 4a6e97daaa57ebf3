#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minv/derivative.hpp"

namespace minv {

/// Hard cap on search grid dimensions.
inline constexpr std::size_t kMaxSearchDim = 6;

/// p x q grid of term references into a multinomial system; cell value 0 is
/// the empty spot, otherwise a 1-based term index. In a valid integral array
/// no term repeats within a row or column and every row has at least two
/// filled cells; those are validation conditions, not construction
/// invariants, so diagnostic reports can be produced for bad arrays too.
class IntegralArray {
 public:
  IntegralArray(std::size_t p, std::size_t q, std::vector<int> cells);

  std::size_t row_count() const { return p_; }
  std::size_t col_count() const { return q_; }
  int cell(std::size_t i, std::size_t k) const { return cells_[i * q_ + k]; }
  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const IntegralArray& a, const IntegralArray& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t p_, q_;
  std::vector<int> cells_;
};

/// Parses "array <p> <q>" followed by p rows of q entries, '.' for empty.
IntegralArray parse_array(std::string_view text);
std::string print_array(const IntegralArray& a);

/// Column linkage: columns sharing a row are linked with offset
/// L_jk = H_a - H_b = B_k - B_j; connected columns compose offsets along
/// paths. Path independence and nonvanishing offsets are what condition (b)
/// demands; violations are recorded, not thrown.
struct LinkGraph {
  std::size_t columns = 0;
  std::vector<std::size_t> component;  // component id per column
  /// Composed offset L_jk for columns in the same component, else nullopt.
  std::vector<std::vector<std::optional<RatVector>>> offset;
  bool consistent = true;
  bool zero_free = true;
  std::vector<std::string> issues;

  bool connected() const;
  std::size_t component_count() const;
};

LinkGraph build_links(const IntegralArray& a, const MultinomialSystem& s);

struct Classification {
  bool normal = true;
  std::vector<int> everywhere_terms;  // 1-based indices appearing in every column
};

/// An array is normal when every term that appears in it is missing from at
/// least one column; only then can the coupling matrix be computed without
/// knowing the integral exponents.
Classification classify_normal(const IntegralArray& a, const MultinomialSystem& s);

enum class CondState { Pass, Fail, Skipped };

struct ConditionStatus {
  CondState state = CondState::Skipped;
  std::string witness;
  bool passed() const { return state == CondState::Pass; }
  bool failed() const { return state == CondState::Fail; }
};

struct ValidationReport {
  Classification cls;
  bool connected = false;
  std::vector<std::vector<std::size_t>> components;  // 0-based column ids
  std::array<ConditionStatus, 6> condition;          // (a) .. (f)

  bool all_pass() const;
  std::string summary() const;
};

/// Checks the six integral-array conditions:
///   (a) every row holds >= 2 distinct terms; no repeats in rows or columns
///   (b) link offsets well defined, path independent and nonzero
///   (c) term missing from both linked columns: zero coupling with the offset
///   (d) term in one column, missing from the other: nonzero coupling
///   (e) coupling matrix and each q-1 column subset have rank q-1
///   (f) the exponent system for the first column is consistent
/// Abnormal arrays stop after classification; disconnected arrays stop after
/// (b) and report the column components so each can be resubmitted alone.
ValidationReport validate(const IntegralArray& a, const MultinomialSystem& s);

/// Coupling matrix M(A): entry (i,k) is (B_k;C_a) for the term a in cell
/// (i,k), computed as (L_jk;C_a) from any column j missing that term; zero on
/// empty cells. Requires a normal, connected, consistently linked array.
RatMatrix build_matrix(const IntegralArray& a, const MultinomialSystem& s);

struct SynthesisResult {
  AlgebraicIntegral integral;
  std::vector<RatVector> exponents;  // B_k per column
  CollectedDerivative proof;         // collected derivative of the result; empty
};

/// Constructs the first integral of a fully validated array: B_1 from the
/// condition (f) system (free variables zero, so output is canonical when the
/// system is underdetermined; any solution shifted along a monomial-integral
/// direction works too and multiplies the result by that monomial integral),
/// B_k = B_1 + L_1k, and coefficients from the one-dimensional nullspace of
/// the coupling matrix, scaled primitive.
SynthesisResult synthesize(const IntegralArray& a, const MultinomialSystem& s);

/// Lexicographically minimal cell grid over all row and column permutations.
IntegralArray canonical_array(const IntegralArray& a);

struct SearchHit {
  IntegralArray array;  // canonical form
  SynthesisResult synthesis;
};

/// Enumerates candidate grids up to max_p x max_q, prunes repetition and
/// inconsistent links early, deduplicates under row/column permutations,
/// validates survivors and synthesizes their integrals. Deterministic
/// canonical output order.
std::vector<SearchHit> search(const MultinomialSystem& s, std::size_t max_p, std::size_t max_q);

}  // namespace minv
