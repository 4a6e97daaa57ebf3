#include "minv/derivative.hpp"

#include <map>
#include <set>
#include <sstream>

#include "minv/errors.hpp"
#include "textio.hpp"

namespace minv {

namespace {

void check_terms(const std::vector<IntegralTerm>& terms, std::size_t n, bool requireNonzeroExpo,
                 const char* what) {
  std::set<RatVector, RatVectorLexLess> seen;
  for (const auto& t : terms) {
    if (t.expo.size() != n)
      throw DimensionError(std::string(what) + ": exponent length does not match the system");
    if (t.coef.is_zero()) throw InputError(std::string(what) + ": zero coefficient");
    if (requireNonzeroExpo && t.expo.is_zero())
      throw InputError(std::string(what) + ": zero exponent vector");
    if (!seen.insert(t.expo).second)
      throw InputError(std::string(what) + ": duplicate exponent vector");
  }
}

}  // namespace

void check_integral(const Integral& integral, std::size_t n) {
  if (const auto* a = std::get_if<AlgebraicIntegral>(&integral)) {
    if (a->terms.empty()) throw InputError("algebraic integral needs at least one term");
    check_terms(a->terms, n, false, "algebraic integral");
  } else if (const auto* la = std::get_if<LogIntegralA>(&integral)) {
    if (la->log_expo.size() != n)
      throw DimensionError("logA integral: log exponent length does not match the system");
    if (la->log_expo.is_zero()) throw InputError("logA integral: zero log exponent");
    check_terms(la->terms, n, false, "logA integral");
  } else {
    const auto& lb = std::get<LogIntegralB>(integral);
    if (lb.lead.expo.size() != n)
      throw DimensionError("logB integral: lead exponent length does not match the system");
    if (lb.lead.coef.is_zero()) throw InputError("logB integral: zero lead coefficient");
    check_terms(lb.inner, n, true, "logB integral");
  }
}

std::vector<DerivativeTerm> monomial_derivative(const RatVector& b, const MultinomialSystem& s) {
  if (b.size() != s.dim()) throw DimensionError("exponent length does not match the system");
  std::vector<DerivativeTerm> out;
  for (const auto& t : s.terms()) {
    Rational c = inner_product(b, t.coef);
    if (c.is_zero()) continue;
    out.push_back(DerivativeTerm{b + t.expo, std::move(c)});
  }
  return out;
}

std::vector<DerivativeTerm> log_monomial_derivative(const RatVector& b,
                                                    const MultinomialSystem& s) {
  if (b.size() != s.dim()) throw DimensionError("exponent length does not match the system");
  std::vector<DerivativeTerm> out;
  for (const auto& t : s.terms()) {
    Rational c = inner_product(b, t.coef);
    if (c.is_zero()) continue;
    out.push_back(DerivativeTerm{t.expo, std::move(c)});
  }
  return out;
}

CollectedDerivative collect(const std::vector<DerivativeTerm>& terms) {
  std::map<RatVector, Rational, RatVectorLexLess> sums;
  for (const auto& t : terms) sums[t.expo] += t.coef;

  CollectedDerivative res;
  for (auto& [expo, coef] : sums)
    if (!coef.is_zero()) res.rows.push_back(DerivativeTerm{expo, coef});
  return res;
}

VerifyResult verify_algebraic(const AlgebraicIntegral& i, const MultinomialSystem& s) {
  check_integral(i, s.dim());
  std::vector<DerivativeTerm> all;
  for (const auto& term : i.terms)
    for (auto& d : monomial_derivative(term.expo, s))
      all.push_back(DerivativeTerm{std::move(d.expo), term.coef * d.coef});
  CollectedDerivative r = collect(all);
  return VerifyResult{r.empty(), std::move(r)};
}

VerifyResult verify_logA(const LogIntegralA& i, const MultinomialSystem& s) {
  check_integral(i, s.dim());
  std::vector<DerivativeTerm> all = log_monomial_derivative(i.log_expo, s);
  for (const auto& term : i.terms)
    for (auto& d : monomial_derivative(term.expo, s))
      all.push_back(DerivativeTerm{std::move(d.expo), term.coef * d.coef});
  CollectedDerivative r = collect(all);
  return VerifyResult{r.empty(), std::move(r)};
}

std::vector<DerivativeTerm> logB_numerator(const IntegralTerm& lead,
                                           const std::vector<IntegralTerm>& inner,
                                           const MultinomialSystem& s) {
  std::vector<DerivativeTerm> all;

  // e1 (Y^{B1})' alone and multiplied into each inner monomial.
  for (const auto& d : monomial_derivative(lead.expo, s)) {
    all.push_back(DerivativeTerm{d.expo, lead.coef * d.coef});
    for (const auto& term : inner)
      all.push_back(DerivativeTerm{d.expo + term.expo, lead.coef * d.coef * term.coef});
  }

  for (const auto& term : inner)
    for (auto& d : monomial_derivative(term.expo, s))
      all.push_back(DerivativeTerm{std::move(d.expo), term.coef * d.coef});

  return all;
}

VerifyResult verify_logB(const LogIntegralB& i, const MultinomialSystem& s) {
  check_integral(i, s.dim());
  CollectedDerivative r = collect(logB_numerator(i.lead, i.inner, s));
  return VerifyResult{r.empty(), std::move(r)};
}

VerifyResult verify(const Integral& i, const MultinomialSystem& s) {
  return std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, AlgebraicIntegral>)
          return verify_algebraic(f, s);
        else if constexpr (std::is_same_v<T, LogIntegralA>)
          return verify_logA(f, s);
        else
          return verify_logB(f, s);
      },
      i);
}

namespace {

void append_vector(std::ostringstream& os, const RatVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
}

// "<e> | <b...>" after the keyword; coefficient part may be absent (logterm).
std::pair<std::vector<Rational>, RatVector> parse_term_line(const detail::Line& line,
                                                            bool wantCoef) {
  std::vector<Rational> left;
  std::vector<Rational> right;
  bool seenBar = false;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const auto& tok = line.tokens[i];
    if (tok.text == "|") {
      if (seenBar) detail::fail(line.number, tok.column, "second '|' in term");
      seenBar = true;
      continue;
    }
    (seenBar ? right : left).push_back(detail::parse_rational(tok, line.number));
  }
  if (!seenBar) detail::fail(line.number, 1, "term is missing '|'");
  if (wantCoef && left.size() != 1)
    detail::fail(line.number, 1, "term needs exactly one coefficient before '|'");
  if (!wantCoef && !left.empty())
    detail::fail(line.number, 1, "log exponent line takes no coefficient");
  if (right.empty()) detail::fail(line.number, 1, "term needs at least one exponent");
  return {std::move(left), RatVector::row(std::move(right))};
}

}  // namespace

Integral parse_integral(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  const auto& head = lines.front();
  if (head.tokens.front().text != "integral" || head.tokens.size() != 2)
    detail::fail(head.number, head.tokens.front().column,
                 "expected 'integral algebraic|logA|logB' header");
  const std::string kind = head.tokens[1].text;

  std::vector<IntegralTerm> terms;
  RatVector logExpo;
  IntegralTerm lead;
  bool haveLogExpo = false, haveLead = false;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const std::string& kw = line.tokens.front().text;
    if (kw == "term") {
      auto [coef, expo] = parse_term_line(line, true);
      terms.push_back(IntegralTerm{coef.front(), std::move(expo)});
    } else if (kw == "logterm" && kind == "logA") {
      if (haveLogExpo) detail::fail(line.number, 1, "duplicate 'logterm' line");
      auto [coef, expo] = parse_term_line(line, false);
      logExpo = std::move(expo);
      haveLogExpo = true;
    } else if (kw == "lead" && kind == "logB") {
      if (haveLead) detail::fail(line.number, 1, "duplicate 'lead' line");
      auto [coef, expo] = parse_term_line(line, true);
      lead = IntegralTerm{coef.front(), std::move(expo)};
      haveLead = true;
    } else {
      detail::fail(line.number, line.tokens.front().column, "unexpected '" + kw + "' line");
    }
  }

  Integral result;
  if (kind == "algebraic") {
    if (terms.empty()) detail::fail(head.number, 1, "algebraic integral needs at least one term");
    result = AlgebraicIntegral{std::move(terms)};
  } else if (kind == "logA") {
    if (!haveLogExpo) detail::fail(head.number, 1, "logA integral needs a 'logterm' line");
    result = LogIntegralA{std::move(logExpo), std::move(terms)};
  } else if (kind == "logB") {
    if (!haveLead) detail::fail(head.number, 1, "logB integral needs a 'lead' line");
    result = LogIntegralB{std::move(lead), std::move(terms)};
  } else {
    detail::fail(head.number, head.tokens[1].column,
                 "unknown integral kind '" + kind + "'");
  }

  // Shape-level checks that need no system: duplicate exponents, zero coefficients.
  std::size_t n = 0;
  std::visit([&](const auto& f) {
    using T = std::decay_t<decltype(f)>;
    if constexpr (std::is_same_v<T, AlgebraicIntegral>) n = f.terms.front().expo.size();
    else if constexpr (std::is_same_v<T, LogIntegralA>) n = f.log_expo.size();
    else n = f.lead.expo.size();
  }, result);
  check_integral(result, n);
  return result;
}

std::string print_integral(const Integral& i) {
  std::ostringstream os;
  if (const auto* a = std::get_if<AlgebraicIntegral>(&i)) {
    os << "integral algebraic\n";
    for (const auto& t : a->terms) {
      os << "term " << t.coef << " | ";
      append_vector(os, t.expo);
      os << '\n';
    }
  } else if (const auto* la = std::get_if<LogIntegralA>(&i)) {
    os << "integral logA\n";
    os << "logterm | ";
    append_vector(os, la->log_expo);
    os << '\n';
    for (const auto& t : la->terms) {
      os << "term " << t.coef << " | ";
      append_vector(os, t.expo);
      os << '\n';
    }
  } else {
    const auto& lb = std::get<LogIntegralB>(i);
    os << "integral logB\n";
    os << "lead " << lb.lead.coef << " | ";
    append_vector(os, lb.lead.expo);
    os << '\n';
    for (const auto& t : lb.inner) {
      os << "term " << t.coef << " | ";
      append_vector(os, t.expo);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace minv
