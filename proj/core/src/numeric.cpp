#include "minv/numeric.hpp"

#include <cmath>
#include <sstream>

#include "minv/errors.hpp"

namespace minv {

namespace {

double pow_checked(double base, const Rational& g, std::size_t component) {
  if (g.is_zero()) return 1.0;
  const auto bad = [&](const char* need) {
    std::ostringstream os;
    os << "cannot evaluate y" << component + 1 << " = " << base << " with exponent " << g
       << " (" << need << ")";
    throw DomainError(os.str());
  };
  if (g.is_integer()) {
    if (base == 0.0) {
      if (g.sign() > 0) return 0.0;
      bad("nonzero base required");
    }
    return std::pow(base, g.to_double());
  }
  if (base <= 0.0) bad("strictly positive base required");
  return std::pow(base, g.to_double());
}

double eval_monomial(const RatVector& expo, const std::vector<double>& y) {
  double prod = 1.0;
  for (std::size_t m = 0; m < expo.size(); ++m) prod *= pow_checked(y[m], expo[m], m);
  return prod;
}

}  // namespace

std::vector<double> rhs_eval(const MultinomialSystem& s, const std::vector<double>& y) {
  const std::size_t n = s.dim();
  if (y.size() != n) throw DimensionError("state length does not match the system");

  std::vector<double> out(n, 0.0);
  for (const auto& t : s.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t.coef[i].is_zero()) continue;
      double prod = t.coef[i].to_double();
      for (std::size_t m = 0; m < n; ++m) {
        Rational g = t.expo[m];
        if (m == i) g += 1;  // combined exponent H_j + u_i
        prod *= pow_checked(y[m], g, m);
      }
      out[i] += prod;
    }
  }
  return out;
}

Trajectory rk4(const MultinomialSystem& s, std::vector<double> y0, double h, double t_end) {
  const std::size_t n = s.dim();
  if (y0.size() != n) throw DimensionError("initial state length does not match the system");
  if (!(h > 0)) throw InputError("step size must be positive");
  if (!(t_end >= h)) throw InputError("horizon must cover at least one step");

  const auto steps = static_cast<std::size_t>(std::ceil(t_end / h));

  Trajectory tr;
  tr.step = h;
  tr.times.reserve(steps + 1);
  tr.states.reserve(steps + 1);
  tr.times.push_back(0.0);
  tr.states.push_back(y0);

  // Compensated state accumulation keeps rounding from masking the O(h^4)
  // truncation behaviour on long runs.
  std::vector<double> y = y0, carry(n, 0.0);
  std::vector<double> k1, k2, k3, k4, tmp(n);
  for (std::size_t step = 1; step <= steps; ++step) {
    k1 = rhs_eval(s, y);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    k2 = rhs_eval(s, tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    k3 = rhs_eval(s, tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    k4 = rhs_eval(s, tmp);

    for (std::size_t i = 0; i < n; ++i) {
      const double incr =
          (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) - carry[i];
      const double sum = y[i] + incr;
      carry[i] = (sum - y[i]) - incr;
      y[i] = sum;
    }
    for (double v : y)
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "state became non-finite at t = " << step * h;
        throw NonFiniteError(os.str());
      }

    tr.times.push_back(step * h);
    tr.states.push_back(y);
  }
  return tr;
}

double eval_integral(const Integral& integral, const std::vector<double>& y) {
  const auto checked_log = [](double arg) {
    if (!(arg > 0.0)) {
      std::ostringstream os;
      os << "logarithm argument " << arg << " is not positive";
      throw DomainError(os.str());
    }
    return std::log(arg);
  };

  if (const auto* a = std::get_if<AlgebraicIntegral>(&integral)) {
    double sum = 0.0;
    for (const auto& t : a->terms) sum += t.coef.to_double() * eval_monomial(t.expo, y);
    return sum;
  }
  if (const auto* la = std::get_if<LogIntegralA>(&integral)) {
    double sum = checked_log(eval_monomial(la->log_expo, y));
    for (const auto& t : la->terms) sum += t.coef.to_double() * eval_monomial(t.expo, y);
    return sum;
  }
  const auto& lb = std::get<LogIntegralB>(integral);
  double arg = 1.0;
  for (const auto& t : lb.inner) arg += t.coef.to_double() * eval_monomial(t.expo, y);
  return lb.lead.coef.to_double() * eval_monomial(lb.lead.expo, y) + checked_log(arg);
}

DriftReport drift(const Integral& integral, const Trajectory& tr) {
  if (tr.states.empty()) throw InputError("empty trajectory");

  const auto sample = [&](std::size_t idx) {
    try {
      return eval_integral(integral, tr.states[idx]);
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " at sample " + std::to_string(idx));
    }
  };

  DriftReport rep;
  rep.step = tr.step;
  rep.horizon = tr.times.back();
  rep.initial_value = sample(0);
  for (std::size_t idx = 1; idx < tr.states.size(); ++idx)
    rep.max_drift = std::max(rep.max_drift, std::abs(sample(idx) - rep.initial_value));
  return rep;
}

}  // namespace minv
