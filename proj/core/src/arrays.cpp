#include "minv/arrays.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>
#include <set>
#include <sstream>

#include "minv/errors.hpp"
#include "textio.hpp"

namespace minv {

IntegralArray::IntegralArray(std::size_t p, std::size_t q, std::vector<int> cells)
    : p_(p), q_(q), cells_(std::move(cells)) {
  if (p == 0 || q == 0) throw DimensionError("array dimensions must be positive");
  if (cells_.size() != p * q) throw DimensionError("array cell count mismatch");
  for (int c : cells_)
    if (c < 0) throw InputError("array cells are term indices >= 1 or 0 for empty");
}

IntegralArray parse_array(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  const auto& head = lines.front();
  if (head.tokens.front().text != "array" || head.tokens.size() != 3)
    detail::fail(head.number, head.tokens.front().column, "expected 'array <p> <q>' header");

  const auto parse_dim = [&](const detail::Token& tok) -> std::size_t {
    const Rational v = detail::parse_rational(tok, head.number);
    if (!v.is_integer() || v.sign() <= 0)
      detail::fail(head.number, tok.column, "dimension must be a positive integer");
    if (v.num() > 64) detail::fail(head.number, tok.column, "dimension is implausibly large");
    return static_cast<std::size_t>(v.num().get_si());
  };
  const std::size_t p = parse_dim(head.tokens[1]);
  const std::size_t q = parse_dim(head.tokens[2]);

  if (lines.size() != p + 1)
    detail::fail(head.number, 1, "expected " + std::to_string(p) + " array rows");

  std::vector<int> cells;
  cells.reserve(p * q);
  for (std::size_t i = 1; i <= p; ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != q)
      detail::fail(line.number, 1, "expected " + std::to_string(q) + " entries in array row");
    for (const auto& tok : line.tokens) {
      if (tok.text == ".") {
        cells.push_back(0);
        continue;
      }
      const Rational v = detail::parse_rational(tok, line.number);
      if (!v.is_integer() || v.sign() <= 0)
        detail::fail(line.number, tok.column, "cell must be '.' or a 1-based term index");
      if (v.num() > 4096) detail::fail(line.number, tok.column, "term index is implausibly large");
      cells.push_back(static_cast<int>(v.num().get_si()));
    }
  }
  return IntegralArray(p, q, std::move(cells));
}

std::string print_array(const IntegralArray& a) {
  std::ostringstream os;
  os << "array " << a.row_count() << ' ' << a.col_count() << '\n';
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t k = 0; k < a.col_count(); ++k) {
      if (k) os << ' ';
      if (a.cell(i, k) == 0)
        os << '.';
      else
        os << a.cell(i, k);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

void check_indices(const IntegralArray& a, const MultinomialSystem& s) {
  for (int c : a.cells())
    if (c > static_cast<int>(s.term_count()))
      throw InputError("array references term " + std::to_string(c) + " but the system has " +
                       std::to_string(s.term_count()) + " terms");
}

// Union-find over columns carrying the offset of each column from its root,
// so that merged constraints stay exact and cycles can be checked.
struct OffsetForest {
  std::vector<std::size_t> parent;
  std::vector<RatVector> offset;  // column's exponent offset relative to parent

  explicit OffsetForest(std::size_t q, std::size_t n) : parent(q) {
    std::iota(parent.begin(), parent.end(), 0);
    offset.assign(q, RatVector::zero(n, Orientation::Row));
  }

  std::size_t find(std::size_t x) {
    if (parent[x] == x) return x;
    const std::size_t root = find(parent[x]);
    if (parent[x] != root) {
      offset[x] += offset[parent[x]];
      parent[x] = root;
    }
    return root;
  }

  // Roots keep a zero offset; after path compression offset[x] is the offset
  // of x from its root.
  RatVector offset_from_root(std::size_t x) {
    find(x);
    return offset[x];
  }

  // Requires offset(k) - offset(j) == l. Returns false on contradiction.
  bool merge(std::size_t j, std::size_t k, const RatVector& l) {
    const std::size_t rj = find(j), rk = find(k);
    if (rj == rk) return (offset[k] - offset[j]) == l;
    parent[rk] = rj;
    offset[rk] = offset[j] + l - offset[k];
    return true;
  }
};

}  // namespace

bool LinkGraph::connected() const { return component_count() <= 1; }

std::size_t LinkGraph::component_count() const {
  std::size_t count = 0;
  for (std::size_t c : component) count = std::max(count, c + 1);
  return count;
}

LinkGraph build_links(const IntegralArray& a, const MultinomialSystem& s) {
  check_indices(a, s);
  const std::size_t p = a.row_count(), q = a.col_count(), n = s.dim();

  LinkGraph g;
  g.columns = q;
  OffsetForest forest(q, n);

  for (std::size_t i = 0; i < p; ++i) {
    std::vector<std::size_t> filled;
    for (std::size_t k = 0; k < q; ++k)
      if (a.cell(i, k) != 0) filled.push_back(k);
    for (std::size_t idx = 1; idx < filled.size(); ++idx) {
      const std::size_t j = filled[idx - 1], k = filled[idx];
      const RatVector& hj = s.term(a.cell(i, j) - 1).expo;
      const RatVector& hk = s.term(a.cell(i, k) - 1).expo;
      if (!forest.merge(j, k, hj - hk)) {
        g.consistent = false;
        g.issues.push_back("row " + std::to_string(i + 1) + " links columns " +
                           std::to_string(j + 1) + "," + std::to_string(k + 1) +
                           " with an offset contradicting earlier links");
      }
    }
  }

  std::map<std::size_t, std::size_t> rootToComp;
  g.component.resize(q);
  for (std::size_t k = 0; k < q; ++k) {
    const std::size_t root = forest.find(k);
    auto [it, fresh] = rootToComp.try_emplace(root, rootToComp.size());
    g.component[k] = it->second;
  }

  g.offset.assign(q, std::vector<std::optional<RatVector>>(q));
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < q; ++k) {
      if (g.component[j] != g.component[k]) continue;
      g.offset[j][k] = forest.offset_from_root(k) - forest.offset_from_root(j);
      if (j != k && g.consistent && g.offset[j][k]->is_zero()) {
        g.zero_free = false;
        if (j < k)
          g.issues.push_back("columns " + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                             " have zero offset, so their exponents would coincide");
      }
    }
  }
  return g;
}

Classification classify_normal(const IntegralArray& a, const MultinomialSystem& s) {
  check_indices(a, s);
  const std::size_t q = a.col_count();

  std::set<int> present(a.cells().begin(), a.cells().end());
  present.erase(0);

  Classification cls;
  for (int term : present) {
    std::size_t columnsWith = 0;
    for (std::size_t k = 0; k < q; ++k) {
      for (std::size_t i = 0; i < a.row_count(); ++i) {
        if (a.cell(i, k) == term) {
          ++columnsWith;
          break;
        }
      }
    }
    if (columnsWith == q) cls.everywhere_terms.push_back(term);
  }
  cls.normal = cls.everywhere_terms.empty();
  return cls;
}

namespace {

std::vector<std::set<int>> column_contents(const IntegralArray& a) {
  std::vector<std::set<int>> cols(a.col_count());
  for (std::size_t k = 0; k < a.col_count(); ++k)
    for (std::size_t i = 0; i < a.row_count(); ++i)
      if (a.cell(i, k) != 0) cols[k].insert(a.cell(i, k));
  return cols;
}

// M(A) from precomputed links; callers guarantee normal + connected + consistent.
RatMatrix coupling_matrix(const IntegralArray& a, const MultinomialSystem& s,
                          const LinkGraph& g) {
  const std::size_t p = a.row_count(), q = a.col_count();
  const auto cols = column_contents(a);

  RatMatrix m(p, q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < q; ++k) {
      const int term = a.cell(i, k);
      if (term == 0) continue;
      std::optional<Rational> value;
      for (std::size_t j = 0; j < q; ++j) {
        if (cols[j].count(term)) continue;
        const Rational v = inner_product(*g.offset[j][k], s.term(term - 1).coef);
        if (!value)
          value = v;
        else if (*value != v)
          throw InputError("coupling entry for term " + std::to_string(term) +
                           " depends on the reference column; the array violates the "
                           "zero-coupling condition");
      }
      if (!value)
        throw InputError("term " + std::to_string(term) +
                         " appears in every column; no coupling matrix exists for an "
                         "abnormal array");
      m.at(i, k) = *value;
    }
  }
  return m;
}

// The linear system of condition (f), from the first column's viewpoint.
// Returns {coefficient matrix rows C_a^T, right-hand side}.
std::pair<RatMatrix, RatVector> first_column_system(const IntegralArray& a,
                                                    const MultinomialSystem& s,
                                                    const LinkGraph& g) {
  const std::size_t q = a.col_count();
  const auto cols = column_contents(a);

  std::vector<RatVector> rows;
  std::vector<Rational> rhs;
  for (std::size_t alpha = 0; alpha < s.term_count(); ++alpha) {
    const int term = static_cast<int>(alpha) + 1;
    rows.push_back(s.term(alpha).coef.transposed());
    if (!cols[0].count(term)) {
      rhs.push_back(Rational(0));
      continue;
    }
    std::optional<Rational> value;
    for (std::size_t j = 1; j < q && !value; ++j)
      if (!cols[j].count(term)) value = inner_product(*g.offset[j][0], s.term(alpha).coef);
    if (!value)
      throw InputError("term " + std::to_string(term) +
                       " appears in every column; the exponent system needs a normal array");
    rhs.push_back(*value);
  }
  return {RatMatrix::from_rows(rows), RatVector::column(std::move(rhs))};
}

std::string list_components(const std::vector<std::vector<std::size_t>>& comps) {
  std::ostringstream os;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (c) os << " / ";
    os << "{";
    for (std::size_t i = 0; i < comps[c].size(); ++i) {
      if (i) os << ",";
      os << comps[c][i] + 1;
    }
    os << "}";
  }
  return os.str();
}

}  // namespace

RatMatrix build_matrix(const IntegralArray& a, const MultinomialSystem& s) {
  const Classification cls = classify_normal(a, s);
  if (!cls.normal)
    throw InputError("abnormal array: term " + std::to_string(cls.everywhere_terms.front()) +
                     " appears in every column");
  const LinkGraph g = build_links(a, s);
  if (!g.consistent) throw InputError("array links are inconsistent");
  if (!g.connected()) throw InputError("array is not connected");
  return coupling_matrix(a, s, g);
}

bool ValidationReport::all_pass() const {
  if (!cls.normal || !connected) return false;
  for (const auto& c : condition)
    if (!c.passed()) return false;
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "classification: " << (cls.normal ? "normal" : "abnormal");
  if (!cls.normal) {
    os << " (terms in every column:";
    for (int t : cls.everywhere_terms) os << ' ' << t;
    os << ')';
  }
  os << '\n';
  os << "connected: " << (connected ? "yes" : "no");
  if (!connected && !components.empty()) os << " (components: " << list_components(components) << ')';
  os << '\n';
  const char* names = "abcdef";
  for (std::size_t i = 0; i < condition.size(); ++i) {
    os << names[i] << ": ";
    switch (condition[i].state) {
      case CondState::Pass: os << "pass"; break;
      case CondState::Fail: os << "fail"; break;
      case CondState::Skipped: os << "skipped"; break;
    }
    if (!condition[i].witness.empty()) os << " (" << condition[i].witness << ")";
    os << '\n';
  }
  return os.str();
}

ValidationReport validate(const IntegralArray& a, const MultinomialSystem& s) {
  check_indices(a, s);
  const std::size_t p = a.row_count(), q = a.col_count();

  ValidationReport rep;
  auto& [condA, condB, condC, condD, condE, condF] = rep.condition;

  // (a) row fill and row/column repetition.
  {
    std::vector<std::string> faults;
    for (std::size_t i = 0; i < p; ++i) {
      std::set<int> seen;
      std::size_t filled = 0;
      for (std::size_t k = 0; k < q; ++k) {
        const int c = a.cell(i, k);
        if (c == 0) continue;
        ++filled;
        if (!seen.insert(c).second)
          faults.push_back("term " + std::to_string(c) + " repeats in row " + std::to_string(i + 1));
      }
      if (filled < 2)
        faults.push_back("row " + std::to_string(i + 1) + " has fewer than two entries");
    }
    for (std::size_t k = 0; k < q; ++k) {
      std::set<int> seen;
      for (std::size_t i = 0; i < p; ++i) {
        const int c = a.cell(i, k);
        if (c != 0 && !seen.insert(c).second)
          faults.push_back("term " + std::to_string(c) + " repeats in column " +
                           std::to_string(k + 1));
      }
    }
    condA.state = faults.empty() ? CondState::Pass : CondState::Fail;
    if (!faults.empty()) condA.witness = faults.front();
  }

  rep.cls = classify_normal(a, s);
  if (!rep.cls.normal) {
    for (auto* c : {&condB, &condC, &condD, &condE, &condF})
      c->witness = "not evaluated: abnormal array";
    return rep;
  }

  const LinkGraph g = build_links(a, s);
  rep.components.assign(g.component_count(), {});
  for (std::size_t k = 0; k < q; ++k) rep.components[g.component[k]].push_back(k);
  rep.connected = g.connected();

  // (b) offsets well defined, path independent, nonzero.
  if (g.consistent && g.zero_free) {
    condB.state = CondState::Pass;
  } else {
    condB.state = CondState::Fail;
    condB.witness = g.issues.empty() ? "inconsistent links" : g.issues.front();
  }

  if (!condB.passed() || !rep.connected) {
    const std::string why = !condB.passed()
                                ? "not evaluated: link offsets are not well defined"
                                : "not evaluated: array is not connected (components: " +
                                      list_components(rep.components) + ")";
    for (auto* c : {&condC, &condD, &condE, &condF}) c->witness = why;
    return rep;
  }

  const auto cols = column_contents(a);

  // (c) term missing from two columns: zero coupling along their offset.
  condC.state = CondState::Pass;
  for (std::size_t alpha = 0; alpha < s.term_count() && !condC.failed(); ++alpha) {
    const int term = static_cast<int>(alpha) + 1;
    for (std::size_t j = 0; j < q && !condC.failed(); ++j) {
      if (cols[j].count(term)) continue;
      for (std::size_t k = j + 1; k < q; ++k) {
        if (cols[k].count(term)) continue;
        if (!inner_product(*g.offset[j][k], s.term(alpha).coef).is_zero()) {
          condC.state = CondState::Fail;
          condC.witness = "term " + std::to_string(term) + " is missing from columns " +
                          std::to_string(j + 1) + "," + std::to_string(k + 1) +
                          " but couples to their offset";
          break;
        }
      }
    }
  }

  // (d) term in column j, missing from column k: nonzero coupling.
  condD.state = CondState::Pass;
  for (std::size_t alpha = 0; alpha < s.term_count() && !condD.failed(); ++alpha) {
    const int term = static_cast<int>(alpha) + 1;
    for (std::size_t j = 0; j < q && !condD.failed(); ++j) {
      if (!cols[j].count(term)) continue;
      for (std::size_t k = 0; k < q; ++k) {
        if (k == j || cols[k].count(term)) continue;
        if (inner_product(*g.offset[j][k], s.term(alpha).coef).is_zero()) {
          condD.state = CondState::Fail;
          condD.witness = "term " + std::to_string(term) + " sits in column " +
                          std::to_string(j + 1) + " but decouples from column " +
                          std::to_string(k + 1);
          break;
        }
      }
    }
  }

  // The coupling matrix and the first-column system pick a reference column
  // per term; that choice is only well defined once (c) holds.
  if (condC.failed()) {
    condE.witness = "not evaluated: coupling entries depend on the reference column";
    condF.witness = condE.witness;
    return rep;
  }

  // (e) rank of M(A) and of every q-1 column subset equals q-1.
  if (q < 2) {
    condE.state = CondState::Fail;
    condE.witness = "fewer than two columns";
  } else {
    const RatMatrix m = coupling_matrix(a, s, g);
    const std::size_t fullRank = rank(m);
    if (fullRank != q - 1) {
      condE.state = CondState::Fail;
      condE.witness =
          "rank(M) = " + std::to_string(fullRank) + ", expected " + std::to_string(q - 1);
    } else {
      condE.state = CondState::Pass;
      for (std::size_t k = 0; k < q; ++k) {
        const std::size_t sub = rank(m.without_column(k));
        if (sub != q - 1) {
          condE.state = CondState::Fail;
          condE.witness = "rank without column " + std::to_string(k + 1) + " = " +
                          std::to_string(sub) + ", expected " + std::to_string(q - 1);
          break;
        }
      }
    }
  }

  // (f) the first-column exponent system is consistent.
  {
    const auto [mat, rhs] = first_column_system(a, s, g);
    const SolveResult sol = solve(mat, rhs);
    if (sol.consistent()) {
      condF.state = CondState::Pass;
    } else {
      condF.state = CondState::Fail;
      condF.witness = "the linear system for the first exponent vector is inconsistent";
    }
  }

  return rep;
}

SynthesisResult synthesize(const IntegralArray& a, const MultinomialSystem& s) {
  const ValidationReport rep = validate(a, s);
  if (!rep.all_pass())
    throw InputError("array failed validation:\n" + rep.summary());

  const LinkGraph g = build_links(a, s);
  const auto [mat, rhs] = first_column_system(a, s, g);
  const SolveResult sol = solve(mat, rhs);
  if (!sol.consistent())
    throw InternalError("validated array has an inconsistent exponent system");

  const std::size_t q = a.col_count();
  std::vector<RatVector> exponents;
  exponents.reserve(q);
  const RatVector b1 = sol.particular.transposed();
  for (std::size_t k = 0; k < q; ++k) exponents.push_back(b1 + *g.offset[0][k]);

  const RatMatrix m = coupling_matrix(a, s, g);
  const std::vector<RatVector> eBasis = null_space(m);
  if (eBasis.size() != 1)
    throw InternalError("validated coupling matrix has nullity " + std::to_string(eBasis.size()));
  const RatVector& e = eBasis.front();

  AlgebraicIntegral integral;
  for (std::size_t k = 0; k < q; ++k)
    integral.terms.push_back(IntegralTerm{e[k], exponents[k]});

  // Column property: (B_k;C_a) = 0 exactly when the term is absent from column k.
  const auto cols = column_contents(a);
  for (std::size_t k = 0; k < q; ++k) {
    for (std::size_t alpha = 0; alpha < s.term_count(); ++alpha) {
      const bool present = cols[k].count(static_cast<int>(alpha) + 1) > 0;
      const bool couples = !inner_product(exponents[k], s.term(alpha).coef).is_zero();
      if (present != couples)
        throw InternalError("synthesized exponents break the column coupling property");
    }
  }

  VerifyResult vr = verify_algebraic(integral, s);
  if (!vr.holds)
    throw InternalError("synthesized integral fails verification despite a valid array");

  return SynthesisResult{std::move(integral), std::move(exponents), std::move(vr.residual)};
}

IntegralArray canonical_array(const IntegralArray& a) {
  const std::size_t p = a.row_count(), q = a.col_count();
  std::vector<std::size_t> rowPerm(p), colPerm(q);
  std::iota(rowPerm.begin(), rowPerm.end(), 0);

  std::vector<int> best = a.cells();
  std::vector<int> candidate(p * q);
  do {
    std::iota(colPerm.begin(), colPerm.end(), 0);
    do {
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < q; ++k)
          candidate[i * q + k] = a.cell(rowPerm[i], colPerm[k]);
      if (candidate < best) best = candidate;
    } while (std::next_permutation(colPerm.begin(), colPerm.end()));
  } while (std::next_permutation(rowPerm.begin(), rowPerm.end()));

  return IntegralArray(p, q, std::move(best));
}

namespace {

// All rows of width q over terms 1..r with >= 2 distinct filled cells,
// generated in lexicographic cell order.
std::vector<std::vector<int>> row_candidates(std::size_t q, std::size_t r) {
  std::vector<std::vector<int>> out;
  std::vector<int> row(q, 0);
  const auto rec = [&](auto&& self, std::size_t k, unsigned usedMask, std::size_t filled) -> void {
    if (k == q) {
      if (filled >= 2) out.push_back(row);
      return;
    }
    row[k] = 0;
    self(self, k + 1, usedMask, filled);
    for (std::size_t t = 1; t <= r; ++t) {
      if (usedMask & (1u << t)) continue;
      row[k] = static_cast<int>(t);
      self(self, k + 1, usedMask | (1u << t), filled + 1);
      row[k] = 0;
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

// The enumeration works on lcm-scaled integer copies of the exponent rows so
// the hot loop never touches arbitrary-precision arithmetic; survivors are
// re-validated exactly. Bounds kMaxSearchDim <= 6 and the scaling guard keep
// every offset far from 64-bit overflow.
constexpr std::size_t kMaxSearchVars = 12;

struct ScaledExponents {
  std::size_t n = 0;
  std::vector<std::array<long long, kMaxSearchVars>> h;

  static ScaledExponents build(const MultinomialSystem& s) {
    ScaledExponents se;
    se.n = s.dim();
    if (se.n > kMaxSearchVars)
      throw LimitError("search supports at most " + std::to_string(kMaxSearchVars) +
                       " variables");
    mpz_class lcm = 1;
    for (const auto& t : s.terms())
      for (std::size_t m = 0; m < se.n; ++m) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), t.expo[m].den().get_mpz_t());
        lcm = l;
      }
    const mpz_class bound = mpz_class(1) << 40;
    se.h.resize(s.term_count());
    for (std::size_t j = 0; j < s.term_count(); ++j) {
      se.h[j].fill(0);
      for (std::size_t m = 0; m < se.n; ++m) {
        const mpz_class scaled = s.term(j).expo[m].num() * (lcm / s.term(j).expo[m].den());
        if (::abs(scaled) > bound)
          throw LimitError("system exponents are too large for array search");
        se.h[j][m] = scaled.get_si();
      }
    }
    return se;
  }
};

// Union-find over columns with integer offset vectors, fixed storage.
struct FastForest {
  std::size_t q = 0, n = 0;
  std::array<unsigned char, kMaxSearchDim> parent{};
  std::array<std::array<long long, kMaxSearchVars>, kMaxSearchDim> off{};

  void init(std::size_t q_, std::size_t n_) {
    q = q_;
    n = n_;
    for (std::size_t k = 0; k < q; ++k) {
      parent[k] = static_cast<unsigned char>(k);
      off[k].fill(0);
    }
  }

  unsigned char find(unsigned char x) {
    if (parent[x] == x) return x;
    const unsigned char root = find(parent[x]);
    if (parent[x] != root) {
      for (std::size_t m = 0; m < n; ++m) off[x][m] += off[parent[x]][m];
      parent[x] = root;
    }
    return root;
  }

  bool merge(unsigned char j, unsigned char k, const long long* l) {
    const unsigned char rj = find(j), rk = find(k);
    if (rj == rk) {
      for (std::size_t m = 0; m < n; ++m)
        if (off[k][m] - off[j][m] != l[m]) return false;
      return true;
    }
    parent[rk] = rj;
    for (std::size_t m = 0; m < n; ++m) off[rk][m] = off[j][m] + l[m] - off[k][m];
    return true;
  }

  bool equal_offsets(unsigned char j, unsigned char k) {
    if (find(j) != find(k)) return false;
    for (std::size_t m = 0; m < n; ++m)
      if (off[j][m] != off[k][m]) return false;
    return true;
  }
};

struct StateKey {
  unsigned long long lo = 0, hi = 0;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    return std::hash<unsigned long long>()(k.lo * 1000003ULL + k.hi * 29ULL);
  }
};

// Grids are grown connected-first: every row after the first must share a
// column with the rows already placed. The first row carries the minimum
// candidate index of the whole set and a visited memo collapses the
// different orders in which the same row set can be assembled, so each
// link-consistent connected row set is examined once. Disconnected grids
// never materialize; those with fewer touched columns appear in the loop
// over smaller q instead.
// Deterministic ceiling on explored row sets. Degenerate systems whose
// exponent differences coincide heavily can make the connected grid space
// explode at the 6x6 limit; refusing loudly beats an open-ended crawl.
constexpr std::size_t kSearchStateBudget = 20'000'000;

struct SearchState {
  const MultinomialSystem* s = nullptr;
  const ScaledExponents* se = nullptr;
  std::size_t statesLeft = kSearchStateBudget;
  std::size_t q = 0;
  std::size_t maxP = 0;
  const std::vector<std::vector<int>>* candidates = nullptr;
  std::vector<unsigned> touchOf;            // filled-column bitmask per candidate
  std::vector<std::size_t> chosen;          // candidate indices, build order
  std::vector<unsigned> columnMask;         // terms used per column
  std::vector<std::size_t> columnFill;      // filled-cell count per column
  unsigned touched = 0;                     // bitmask of nonempty columns
  std::unordered_set<StateKey, StateKeyHash> visited;  // row sets seen
  std::set<std::vector<int>> seen;                     // canonical cell keys
  std::vector<SearchHit>* hits = nullptr;

  StateKey key_with(std::size_t extra) const {
    std::array<std::size_t, kMaxSearchDim + 1> ids{};
    std::size_t count = 0;
    for (std::size_t c : chosen) ids[count++] = c;
    ids[count++] = extra;
    std::sort(ids.begin(), ids.begin() + count);
    StateKey key;
    for (std::size_t i = 0; i < count; ++i) {
      const unsigned long long v = ids[i] + 1;
      if (i < 4)
        key.lo |= v << (16 * i);
      else
        key.hi |= v << (16 * (i - 4));
    }
    return key;
  }
};

void try_candidate(SearchState& st) {
  const std::size_t p = st.chosen.size(), q = st.q;
  for (std::size_t k = 0; k < q; ++k)
    if (st.columnFill[k] == 0) return;  // narrower grids handle this shape

  std::vector<int> cells;
  cells.reserve(p * q);
  for (std::size_t idx : st.chosen) {
    const auto& row = (*st.candidates)[idx];
    cells.insert(cells.end(), row.begin(), row.end());
  }
  IntegralArray arr(p, q, std::move(cells));

  const ValidationReport rep = validate(arr, *st.s);
  if (!rep.all_pass()) return;

  IntegralArray canon = canonical_array(arr);
  std::vector<int> key;
  key.push_back(static_cast<int>(p));
  key.push_back(static_cast<int>(q));
  key.insert(key.end(), canon.cells().begin(), canon.cells().end());
  if (!st.seen.insert(std::move(key)).second) return;

  SynthesisResult synth = synthesize(canon, *st.s);
  st.hits->push_back(SearchHit{std::move(canon), std::move(synth)});
}

void dfs_rows(SearchState& st, const FastForest& forest) {
  if (st.statesLeft == 0)
    throw LimitError(
        "search space exceeds the state budget at these bounds; lower --max-p/--max-q");
  --st.statesLeft;

  try_candidate(st);
  if (st.chosen.size() == st.maxP) return;

  const auto& candidates = *st.candidates;
  const std::size_t n = st.se->n;
  const std::size_t minIdx = st.chosen.front();
  for (std::size_t idx = minIdx + 1; idx < candidates.size(); ++idx) {
    if ((st.touchOf[idx] & st.touched) == 0) continue;  // must attach somewhere
    if (std::find(st.chosen.begin(), st.chosen.end(), idx) != st.chosen.end()) continue;
    const auto& row = candidates[idx];

    bool columnsOk = true;
    for (std::size_t k = 0; k < st.q && columnsOk; ++k)
      if (row[k] != 0 && (st.columnMask[k] & (1u << row[k]))) columnsOk = false;
    if (!columnsOk) continue;

    FastForest next = forest;
    bool ok = true;
    std::size_t prev = st.q;
    long long diff[kMaxSearchVars];
    for (std::size_t k = 0; k < st.q && ok; ++k) {
      if (row[k] == 0) continue;
      if (prev != st.q) {
        const auto& hj = st.se->h[row[prev] - 1];
        const auto& hk = st.se->h[row[k] - 1];
        for (std::size_t m = 0; m < n; ++m) diff[m] = hj[m] - hk[m];
        ok = next.merge(static_cast<unsigned char>(prev), static_cast<unsigned char>(k), diff);
      }
      prev = k;
    }
    if (ok) {
      // Zero offsets between distinct columns never heal; prune them here.
      for (std::size_t j = 0; j < st.q && ok; ++j)
        for (std::size_t k = j + 1; k < st.q && ok; ++k)
          if (next.equal_offsets(static_cast<unsigned char>(j), static_cast<unsigned char>(k)))
            ok = false;
    }
    if (!ok) continue;

    if (!st.visited.insert(st.key_with(idx)).second) continue;

    for (std::size_t k = 0; k < st.q; ++k)
      if (row[k] != 0) {
        st.columnMask[k] |= (1u << row[k]);
        ++st.columnFill[k];
        st.touched |= (1u << k);
      }
    st.chosen.push_back(idx);

    dfs_rows(st, next);

    st.chosen.pop_back();
    st.touched = 0;
    for (std::size_t k = 0; k < st.q; ++k)
      if (row[k] != 0) {
        st.columnMask[k] &= ~(1u << row[k]);
        --st.columnFill[k];
      }
    for (std::size_t k = 0; k < st.q; ++k)
      if (st.columnFill[k] > 0) st.touched |= (1u << k);
  }
}

}  // namespace

std::vector<SearchHit> search(const MultinomialSystem& s, std::size_t max_p, std::size_t max_q) {
  if (max_p < 1 || max_q < 1)
    throw LimitError("search bounds must be at least 1");
  if (max_p > kMaxSearchDim || max_q > kMaxSearchDim)
    throw LimitError("search bounds exceed the limit of " + std::to_string(kMaxSearchDim));
  if (s.term_count() > 31) throw LimitError("search supports at most 31 system terms");

  const ScaledExponents se = ScaledExponents::build(s);

  std::vector<SearchHit> hits;
  std::size_t statesLeft = kSearchStateBudget;
  for (std::size_t q = 2; q <= max_q; ++q) {
    const auto candidates = row_candidates(q, s.term_count());
    if (candidates.size() >= 65535) throw LimitError("search row space is too large");

    SearchState st;
    st.s = &s;
    st.se = &se;
    st.statesLeft = statesLeft;
    st.q = q;
    st.maxP = max_p;
    st.candidates = &candidates;
    st.hits = &hits;
    st.touchOf.resize(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      unsigned mask = 0;
      for (std::size_t k = 0; k < q; ++k)
        if (candidates[i][k] != 0) mask |= (1u << k);
      st.touchOf[i] = mask;
    }

    for (std::size_t f = 0; f < candidates.size(); ++f) {
      const auto& row = candidates[f];
      FastForest forest;
      forest.init(q, se.n);
      st.chosen.assign(1, f);
      st.columnMask.assign(q, 0);
      st.columnFill.assign(q, 0);
      st.touched = st.touchOf[f];
      std::size_t prev = q;
      long long diff[kMaxSearchVars];
      for (std::size_t k = 0; k < q; ++k) {
        if (row[k] == 0) continue;
        st.columnMask[k] |= (1u << row[k]);
        st.columnFill[k] = 1;
        if (prev != q) {
          const auto& hj = se.h[row[prev] - 1];
          const auto& hk = se.h[row[k] - 1];
          for (std::size_t m = 0; m < se.n; ++m) diff[m] = hj[m] - hk[m];
          forest.merge(static_cast<unsigned char>(prev), static_cast<unsigned char>(k), diff);
        }
        prev = k;
      }
      dfs_rows(st, forest);
    }
    statesLeft = st.statesLeft;
  }

  std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
    if (x.array.col_count() != y.array.col_count())
      return x.array.col_count() < y.array.col_count();
    if (x.array.row_count() != y.array.row_count())
      return x.array.row_count() < y.array.row_count();
    return x.array.cells() < y.array.cells();
  });
  return hits;
}

}  // namespace minv
