#include "minv/system.hpp"

#include <map>
#include <sstream>

#include "minv/errors.hpp"
#include "textio.hpp"

namespace minv {

namespace {

void append_vector(std::ostringstream& os, const RatVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
}

}  // namespace

MultinomialSystem MultinomialSystem::make(std::size_t n, std::vector<SystemTerm> terms,
                                          std::vector<std::string>* mergeLog) {
  if (n == 0) throw DimensionError("system needs at least one variable");

  std::vector<SystemTerm> merged;
  std::map<RatVector, std::size_t, RatVectorLexLess> byExpo;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    SystemTerm& t = terms[j];
    if (t.coef.size() != n || t.expo.size() != n)
      throw DimensionError("term " + std::to_string(j + 1) + " has wrong length");
    if (t.coef.orientation() != Orientation::Column) t.coef = t.coef.transposed();
    if (t.expo.orientation() != Orientation::Row) t.expo = t.expo.transposed();

    auto [it, fresh] = byExpo.try_emplace(t.expo, merged.size());
    if (fresh) {
      merged.push_back(std::move(t));
    } else {
      merged[it->second].coef += t.coef;
      if (mergeLog)
        mergeLog->push_back("merged input term " + std::to_string(j + 1) + " into term " +
                            std::to_string(it->second + 1) + " (duplicate exponent row)");
    }
  }

  std::vector<SystemTerm> kept;
  for (std::size_t j = 0; j < merged.size(); ++j) {
    if (merged[j].coef.is_zero()) {
      if (mergeLog)
        mergeLog->push_back("dropped term " + std::to_string(j + 1) +
                            " (zero coefficient column after merging)");
      continue;
    }
    kept.push_back(std::move(merged[j]));
  }
  if (kept.empty()) throw InputError("system is empty after canonicalization");
  return MultinomialSystem(n, std::move(kept));
}

RatMatrix MultinomialSystem::coefficient_matrix() const {
  std::vector<RatVector> cols;
  cols.reserve(terms_.size());
  for (const auto& t : terms_) cols.push_back(t.coef);
  return RatMatrix::from_columns(cols);
}

bool operator==(const MultinomialSystem& a, const MultinomialSystem& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t j = 0; j < a.terms_.size(); ++j)
    if (!(a.terms_[j].coef == b.terms_[j].coef && a.terms_[j].expo == b.terms_[j].expo))
      return false;
  return true;
}

ScalarODE ScalarODE::make(std::size_t order, std::vector<Term> terms) {
  if (order == 0) throw DimensionError("scalar equation needs order >= 1");

  std::vector<Term> merged;
  std::map<RatVector, std::size_t, RatVectorLexLess> byExpo;
  for (auto& t : terms) {
    if (t.expo.size() != order) throw DimensionError("scalar term has wrong exponent length");
    if (t.expo.orientation() != Orientation::Row) t.expo = t.expo.transposed();
    auto [it, fresh] = byExpo.try_emplace(t.expo, merged.size());
    if (fresh)
      merged.push_back(std::move(t));
    else
      merged[it->second].coef += t.coef;
  }
  std::vector<Term> kept;
  for (auto& t : merged)
    if (!t.coef.is_zero()) kept.push_back(std::move(t));
  return ScalarODE(order, std::move(kept));
}

namespace {

// Reads "<v_1> ... <v_n> | <w_1> ... <w_m>" after the keyword token.
std::pair<std::vector<Rational>, std::vector<Rational>> split_term_tokens(
    const detail::Line& line, std::size_t from) {
  std::vector<Rational> left, right;
  bool seenBar = false;
  for (std::size_t i = from; i < line.tokens.size(); ++i) {
    const auto& tok = line.tokens[i];
    if (tok.text == "|") {
      if (seenBar) detail::fail(line.number, tok.column, "second '|' in term");
      seenBar = true;
      continue;
    }
    (seenBar ? right : left).push_back(detail::parse_rational(tok, line.number));
  }
  if (!seenBar) detail::fail(line.number, 1, "term is missing '|'");
  return {std::move(left), std::move(right)};
}

std::size_t parse_header_count(const detail::Line& line, const char* what) {
  if (line.tokens.size() != 2)
    detail::fail(line.number, 1, std::string("expected '") + what + " <n>'");
  const auto& tok = line.tokens[1];
  const Rational n = detail::parse_rational(tok, line.number);
  if (!n.is_integer() || n.sign() <= 0)
    detail::fail(line.number, tok.column, "count must be a positive integer");
  if (n.num() > 64) detail::fail(line.number, tok.column, "count is implausibly large");
  return static_cast<std::size_t>(n.num().get_si());
}

}  // namespace

MultinomialSystem parse_system(std::string_view text, SystemReport* report) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  if (lines.front().tokens.front().text != "mvf")
    detail::fail(lines.front().number, lines.front().tokens.front().column,
                 "expected 'mvf <n>' header");
  const std::size_t n = parse_header_count(lines.front(), "mvf");

  std::vector<SystemTerm> terms;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    if (line.tokens.front().text != "term")
      detail::fail(line.number, line.tokens.front().column, "expected 'term' line");
    auto [coef, expo] = split_term_tokens(line, 1);
    if (coef.size() != n || expo.size() != n)
      detail::fail(line.number, 1,
                   "term needs " + std::to_string(n) + " coefficients and " + std::to_string(n) +
                       " exponents");
    terms.push_back(
        SystemTerm{RatVector::column(std::move(coef)), RatVector::row(std::move(expo))});
  }
  if (terms.empty()) detail::fail(lines.front().number, 1, "system has no terms");

  std::vector<std::string> log;
  MultinomialSystem s = MultinomialSystem::make(n, std::move(terms), &log);
  if (report) {
    report->canonical_listing = print_system(s);
    report->merge_log = std::move(log);
  }
  return s;
}

std::string print_system(const MultinomialSystem& s) {
  std::ostringstream os;
  os << "mvf " << s.dim() << '\n';
  for (const auto& t : s.terms()) {
    os << "term ";
    append_vector(os, t.coef);
    os << " | ";
    append_vector(os, t.expo);
    os << '\n';
  }
  return os.str();
}

ScalarODE parse_scalar_ode(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  if (lines.front().tokens.front().text != "ode")
    detail::fail(lines.front().number, lines.front().tokens.front().column,
                 "expected 'ode <n>' header");
  const std::size_t n = parse_header_count(lines.front(), "ode");

  std::vector<ScalarODE::Term> terms;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    if (line.tokens.front().text != "term")
      detail::fail(line.number, line.tokens.front().column, "expected 'term' line");
    auto [coef, expo] = split_term_tokens(line, 1);
    if (coef.size() != 1 || expo.size() != n)
      detail::fail(line.number, 1,
                   "term needs one coefficient and " + std::to_string(n) + " exponents");
    terms.push_back(ScalarODE::Term{coef.front(), RatVector::row(std::move(expo))});
  }
  return ScalarODE::make(n, std::move(terms));
}

std::string print_scalar_ode(const ScalarODE& o) {
  std::ostringstream os;
  os << "ode " << o.order() << '\n';
  for (const auto& t : o.terms()) {
    os << "term " << t.coef << " | ";
    append_vector(os, t.expo);
    os << '\n';
  }
  return os.str();
}

MultinomialSystem reduce_scalar_ode(const ScalarODE& o) {
  const std::size_t n = o.order();
  std::vector<SystemTerm> terms;

  // y_i' = y_{i+1} = y_i * Y^(u_{i+1} - u_i) for the chain variables.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RatVector expo = RatVector::zero(n, Orientation::Row);
    expo[i] = -1;
    expo[i + 1] = 1;
    terms.push_back(SystemTerm{RatVector::unit(n, i, Orientation::Column), std::move(expo)});
  }

  // y_n' = f = y_n * sum_j l_j Y^(M_j - u_n).
  for (const auto& t : o.terms()) {
    RatVector expo = t.expo;
    expo[n - 1] -= 1;
    RatVector coef = RatVector::zero(n, Orientation::Column);
    coef[n - 1] = t.coef;
    terms.push_back(SystemTerm{std::move(coef), std::move(expo)});
  }

  return MultinomialSystem::make(n, std::move(terms));
}

MultinomialSystem sigma_alpha(const MultinomialSystem& s, const Rational& alpha) {
  if (alpha.is_zero())
    throw InputError("sigma_alpha with alpha = 0 collapses all exponent rows");
  std::vector<SystemTerm> terms = s.terms();
  for (auto& t : terms) t.expo *= alpha;
  return MultinomialSystem::make(s.dim(), std::move(terms));
}

std::vector<bool> exponent_independence(const ScalarODE& o) {
  const std::size_t n = o.order();
  std::vector<bool> independent(o.terms().size(), true);
  if (n < 2) return independent;

  for (std::size_t j = 0; j < o.terms().size(); ++j) {
    for (std::size_t i = 0; i + 2 <= n; ++i) {
      RatVector excluded = RatVector::zero(n, Orientation::Row);
      excluded[i] += -1;
      excluded[i + 1] += 1;
      excluded[n - 1] += 1;
      if (o.terms()[j].expo == excluded) {
        independent[j] = false;
        break;
      }
    }
  }
  return independent;
}

}  // namespace minv
