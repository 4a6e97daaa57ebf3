// Command-line front end: every subcommand maps onto one library operation
// and works on the line-oriented file formats. Exit codes are part of the
// contract: 0 success, 1 negative verification/validation result, 2 input
// error, 3 internal contradiction.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minv/arrays.hpp"
#include "minv/errors.hpp"
#include "minv/families.hpp"
#include "minv/monomial_integrals.hpp"
#include "minv/numeric.hpp"

using nlohmann::json;
using namespace minv;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

std::string sci17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::string tok;
  for (char c : text + ",") {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!tok.empty()) out.push_back(Rational::parse(tok));
      tok.clear();
    } else {
      tok += c;
    }
  }
  if (out.empty()) throw InputError("expected a list of rationals");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::string tok;
  for (char c : text + ",") {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!tok.empty()) {
        if (tok.find_first_of(".eE") != std::string::npos &&
            tok.find('/') == std::string::npos) {
          std::size_t used = 0;
          double v = 0;
          try {
            v = std::stod(tok, &used);
          } catch (const std::exception&) {
            throw InputError("invalid number '" + tok + "'");
          }
          if (used != tok.size()) throw InputError("invalid number '" + tok + "'");
          out.push_back(v);
        } else {
          out.push_back(Rational::parse(tok).to_double());
        }
        tok.clear();
      }
    } else {
      tok += c;
    }
  }
  if (out.empty()) throw InputError("expected a list of numbers");
  return out;
}

// ---- JSON encoders; rationals travel as canonical strings -----------------

json to_json(const Rational& r) { return r.str(); }

json to_json(const RatVector& v) {
  json arr = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(to_json(v[i]));
  return arr;
}

json to_json(const MultinomialSystem& s) {
  json terms = json::array();
  for (const auto& t : s.terms())
    terms.push_back({{"coef", to_json(t.coef)}, {"expo", to_json(t.expo)}});
  return {{"n", s.dim()}, {"terms", terms}};
}

json to_json(const ScalarODE& o) {
  json terms = json::array();
  for (const auto& t : o.terms())
    terms.push_back({{"coef", to_json(t.coef)}, {"expo", to_json(t.expo)}});
  return {{"order", o.order()}, {"terms", terms}};
}

json to_json(const Integral& integral) {
  if (const auto* a = std::get_if<AlgebraicIntegral>(&integral)) {
    json terms = json::array();
    for (const auto& t : a->terms)
      terms.push_back({{"coef", to_json(t.coef)}, {"expo", to_json(t.expo)}});
    return {{"kind", "algebraic"}, {"terms", terms}};
  }
  if (const auto* la = std::get_if<LogIntegralA>(&integral)) {
    json terms = json::array();
    for (const auto& t : la->terms)
      terms.push_back({{"coef", to_json(t.coef)}, {"expo", to_json(t.expo)}});
    return {{"kind", "logA"}, {"log_expo", to_json(la->log_expo)}, {"terms", terms}};
  }
  const auto& lb = std::get<LogIntegralB>(integral);
  json terms = json::array();
  for (const auto& t : lb.inner)
    terms.push_back({{"coef", to_json(t.coef)}, {"expo", to_json(t.expo)}});
  return {{"kind", "logB"},
          {"lead", {{"coef", to_json(lb.lead.coef)}, {"expo", to_json(lb.lead.expo)}}},
          {"terms", terms}};
}

json to_json(const CollectedDerivative& d) {
  json rows = json::array();
  for (const auto& r : d.rows)
    rows.push_back({{"coef", to_json(r.coef)}, {"expo", to_json(r.expo)}});
  return rows;
}

json to_json(const IntegralArray& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.col_count(); ++k) row.push_back(a.cell(i, k));
    rows.push_back(row);
  }
  return {{"p", a.row_count()}, {"q", a.col_count()}, {"cells", rows}};
}

const char* cond_name(CondState st) {
  switch (st) {
    case CondState::Pass: return "pass";
    case CondState::Fail: return "fail";
    case CondState::Skipped: return "skipped";
  }
  return "?";
}

json to_json(const ValidationReport& rep) {
  json conds;
  const char* names = "abcdef";
  for (std::size_t i = 0; i < rep.condition.size(); ++i)
    conds[std::string(1, names[i])] = {{"state", cond_name(rep.condition[i].state)},
                                       {"witness", rep.condition[i].witness}};
  json comps = json::array();
  for (const auto& comp : rep.components) {
    json c = json::array();
    for (std::size_t k : comp) c.push_back(k + 1);
    comps.push_back(c);
  }
  return {{"classification", rep.cls.normal ? "normal" : "abnormal"},
          {"everywhere_terms", rep.cls.everywhere_terms},
          {"connected", rep.connected},
          {"components", comps},
          {"conditions", conds},
          {"all_pass", rep.all_pass()}};
}

void emit(bool asJson, const json& payload, const std::string& text) {
  if (asJson)
    std::cout << payload.dump(2) << '\n';
  else
    std::cout << text;
}

std::string rows_text(const CollectedDerivative& d) {
  std::ostringstream os;
  for (const auto& r : d.rows) {
    os << "row " << r.coef << " |";
    for (std::size_t i = 0; i < r.expo.size(); ++i) os << ' ' << r.expo[i];
    os << '\n';
  }
  return os.str();
}

// ---- subcommand payloads ---------------------------------------------------

struct CommonArgs {
  std::string systemFile;
  bool asJson = false;
};

int run_parse(const std::string& file, bool asJson) {
  const std::string text = read_file(file);
  std::string kind = "system";
  for (const char* probe = text.c_str(); *probe; ++probe) {
    if (*probe == ' ' || *probe == '\n' || *probe == '\t' || *probe == '#') continue;
    kind = (text.compare(static_cast<std::size_t>(probe - text.c_str()), 3, "ode") == 0)
               ? "ode"
               : "system";
    break;
  }
  if (kind == "ode") {
    const ScalarODE o = parse_scalar_ode(text);
    emit(asJson, json{{"kind", "ode"}, {"ode", to_json(o)}}, print_scalar_ode(o));
    return kOk;
  }
  SystemReport report;
  const MultinomialSystem s = parse_system(text, &report);
  for (const auto& line : report.merge_log) std::cerr << "note: " << line << '\n';
  emit(asJson, json{{"kind", "system"}, {"system", to_json(s)}, {"merge_log", report.merge_log}},
       print_system(s));
  return kOk;
}

int run_reduce(const std::string& file, bool asJson) {
  const MultinomialSystem s = reduce_scalar_ode(parse_scalar_ode(read_file(file)));
  emit(asJson, json{{"system", to_json(s)}}, print_system(s));
  return kOk;
}

int run_derive(const CommonArgs& args, const std::string& integralFile,
               const std::string& monomial, const std::string& logMonomial) {
  const MultinomialSystem s = parse_system(read_file(args.systemFile));
  const int given = !integralFile.empty() + !monomial.empty() + !logMonomial.empty();
  if (given != 1)
    throw InputError("derive needs exactly one of --integral, --monomial, --log-monomial");

  std::vector<DerivativeTerm> rows;
  if (!integralFile.empty()) {
    const Integral integral = parse_integral(read_file(integralFile));
    check_integral(integral, s.dim());
    rows = verify(integral, s).residual.rows;
    emit(args.asJson, json{{"rows", to_json(CollectedDerivative{rows})}},
         rows_text(CollectedDerivative{rows}));
    return kOk;
  }
  RatVector b = RatVector::row(parse_rational_list(monomial.empty() ? logMonomial : monomial));
  rows = monomial.empty() ? log_monomial_derivative(b, s) : monomial_derivative(b, s);
  CollectedDerivative asRows{rows};
  emit(args.asJson, json{{"rows", to_json(asRows)}}, rows_text(asRows));
  return kOk;
}

int run_monomials(const CommonArgs& args) {
  const MultinomialSystem s = parse_system(read_file(args.systemFile));
  const std::vector<RatVector> basis = monomial_integral_basis(s);
  if (args.asJson) {
    json arr = json::array();
    for (const auto& b : basis) arr.push_back(to_json(b));
    std::cout << json{{"basis", arr}}.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i) std::cout << '\n';
      std::cout << print_integral(Integral(AlgebraicIntegral{{IntegralTerm{1, basis[i]}}}));
    }
    if (basis.empty()) std::cout << "no monomial first integrals\n";
  }
  return kOk;
}

int run_separate(const CommonArgs& args) {
  const MultinomialSystem s = parse_system(read_file(args.systemFile));
  const auto sep = separation_check(s);
  if (args.asJson) {
    json payload{{"separable", sep.has_value()}};
    if (sep) {
      json subs = json::array(), diag = json::array();
      for (const auto& h : sep->substitutions) subs.push_back(to_json(h));
      for (const auto& d : sep->diagonal) diag.push_back(to_json(d));
      payload["substitutions"] = subs;
      payload["diagonal"] = diag;
    }
    std::cout << payload.dump(2) << '\n';
  } else if (sep) {
    std::cout << "separable: yes\n";
    for (std::size_t i = 0; i < sep->substitutions.size(); ++i)
      std::cout << "z" << i + 1 << " = Y^" << sep->substitutions[i].str() << ", z" << i + 1
                << "' = " << sep->diagonal[i] << " z" << i + 1 << "^2\n";
  } else {
    std::cout << "separable: no\n";
  }
  return sep ? kOk : kNegative;
}

int run_validate_array(const CommonArgs& args, const std::string& arrayFile) {
  const MultinomialSystem s = parse_system(read_file(args.systemFile));
  const IntegralArray a = parse_array(read_file(arrayFile));
  const ValidationReport rep = validate(a, s);
  emit(args.asJson, to_json(rep), rep.summary());
  return rep.all_pass() ? kOk : kNegative;
}

int run_synthesize(const CommonArgs& args, const std::string& arrayFile) {
  const MultinomialSystem s = parse_system(read_file(args.systemFile));
  const IntegralArray a = parse_array(read_file(arrayFile));
  const ValidationReport rep = validate(a, s);
  if (!rep.all_pass()) {
    emit(args.asJson, to_json(rep), rep.summary());
    return kNegative;
  }
  const SynthesisResult res = synthesize(a, s);
  if (args.asJson) {
    json expos = json::array();
    for (const auto& b : res.exponents) expos.push_back(to_json(b));
    std::cout << json{{"integral", to_json(Integral(res.integral))},
                      {"exponents", expos},
                      {"proof", to_json(res.proof)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << print_integral(Integral(res.integral));
    for (std::size_t k = 0; k < res.exponents.size(); ++k)
      std::cout << "# B" << k + 1 << " = " << res.exponents[k].str() << '\n';
  }
  return kOk;
}

int run_search(const CommonArgs& args, std::size_t maxP, std::size_t maxQ) {
  const MultinomialSystem s = parse_system(read_file(args.systemFile));
  const std::vector<SearchHit> hits = search(s, maxP, maxQ);
  if (args.asJson) {
    json arr = json::array();
    for (const auto& h : hits)
      arr.push_back({{"array", to_json(h.array)},
                     {"integral", to_json(Integral(h.synthesis.integral))}});
    std::cout << json{{"hits", arr}}.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < hits.size(); ++i) {
      if (i) std::cout << '\n';
      std::cout << print_array(hits[i].array)
                << print_integral(Integral(hits[i].synthesis.integral));
    }
    if (hits.empty()) std::cout << "no integral arrays found within the bounds\n";
  }
  return kOk;
}

int run_verify(const CommonArgs& args, const std::string& integralFile) {
  const MultinomialSystem s = parse_system(read_file(args.systemFile));
  const Integral integral = parse_integral(read_file(integralFile));
  const VerifyResult vr = verify(integral, s);
  if (args.asJson) {
    std::cout << json{{"holds", vr.holds}, {"residual", to_json(vr.residual)}}.dump(2) << '\n';
  } else if (vr.holds) {
    std::cout << "holds\n";
  } else {
    std::cout << "fails; residual derivative:\n" << rows_text(vr.residual);
  }
  return vr.holds ? kOk : kNegative;
}

int run_scale(const CommonArgs& args, const std::string& alpha) {
  const MultinomialSystem s = parse_system(read_file(args.systemFile));
  const MultinomialSystem scaled = sigma_alpha(s, Rational::parse(alpha));
  emit(args.asJson, json{{"system", to_json(scaled)}}, print_system(scaled));
  return kOk;
}

int run_independence(const std::string& file, bool asJson) {
  const ScalarODE o = parse_scalar_ode(read_file(file));
  const std::vector<bool> flags = exponent_independence(o);
  if (asJson) {
    std::cout << json{{"independent", flags}}.dump(2) << '\n';
  } else {
    for (std::size_t j = 0; j < flags.size(); ++j)
      std::cout << "term " << j + 1 << ": " << (flags[j] ? "true" : "false") << '\n';
  }
  return kOk;
}

int run_simulate(const CommonArgs& args, const std::string& integralFile, const std::string& y0,
                 double h, double t) {
  const MultinomialSystem s = parse_system(read_file(args.systemFile));
  const Integral integral = parse_integral(read_file(integralFile));
  check_integral(integral, s.dim());
  const Trajectory tr = rk4(s, parse_double_list(y0), h, t);
  const DriftReport rep = drift(integral, tr);
  if (args.asJson) {
    std::cout << json{{"initial_value", rep.initial_value},
                      {"max_drift", rep.max_drift},
                      {"step", rep.step},
                      {"horizon", rep.horizon}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "initial value: " << sci17(rep.initial_value) << '\n'
              << "max drift: " << sci17(rep.max_drift) << '\n'
              << "step: " << rep.step << ", horizon: " << rep.horizon << '\n';
  }
  return kOk;
}

struct FamilyOutput {
  std::optional<MultinomialSystem> system;
  std::optional<ScalarODE> ode;
  std::optional<Integral> integral;
  json extra;
  std::string headline;
};

int emit_family(const FamilyOutput& out, bool asJson, const std::string& outSystem,
                const std::string& outIntegral) {
  std::string systemText;
  if (out.system) systemText = print_system(*out.system);
  if (out.ode) systemText += print_scalar_ode(*out.ode);
  std::string integralText = out.integral ? print_integral(*out.integral) : "";

  if (!outSystem.empty() && !systemText.empty()) write_file(outSystem, systemText);
  if (!outIntegral.empty() && !integralText.empty()) write_file(outIntegral, integralText);

  if (asJson) {
    json payload = out.extra;
    if (out.system) payload["system"] = to_json(*out.system);
    if (out.ode) payload["ode"] = to_json(*out.ode);
    if (out.integral) payload["integral"] = to_json(*out.integral);
    std::cout << payload.dump(2) << '\n';
  } else {
    if (!out.headline.empty()) std::cout << out.headline << '\n';
    if (!systemText.empty()) std::cout << systemText;
    if (!integralText.empty()) std::cout << integralText;
  }
  return kOk;
}

PlanarTheta theta_from(const std::vector<std::string>& vals) {
  std::vector<Rational> r;
  r.reserve(8);
  for (const auto& v : vals) r.push_back(Rational::parse(v));
  return PlanarTheta{r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first integrals of multinomial ODE systems"};
  app.require_subcommand(1);

  // parse
  std::string file;
  bool asJson = false;
  auto* cmdParse = app.add_subcommand("parse", "parse and canonicalize a system or scalar ODE");
  cmdParse->add_option("file", file)->required();
  cmdParse->add_flag("--json", asJson);

  auto* cmdReduce = app.add_subcommand("reduce", "reduce a scalar ODE to multinomial vector form");
  cmdReduce->add_option("file", file)->required();
  cmdReduce->add_flag("--json", asJson);

  CommonArgs common;
  std::string integralFile, arrayFile, monomial, logMonomial, alpha, y0;
  std::size_t maxP = 3, maxQ = 3;
  double stepH = 1e-3, horizon = 1.0;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("system", common.systemFile, "system file in mvf format")->required();
    cmd->add_flag("--json", common.asJson);
  };

  auto* cmdDerive = app.add_subcommand("derive", "collected derivative along the system");
  addCommon(cmdDerive);
  cmdDerive->add_option("--integral", integralFile);
  cmdDerive->add_option("--monomial", monomial, "exponent row, e.g. '0,2'");
  cmdDerive->add_option("--log-monomial", logMonomial);

  auto* cmdMonomials = app.add_subcommand("monomials", "basis of monomial first integrals");
  addCommon(cmdMonomials);

  auto* cmdSeparate = app.add_subcommand("separate", "check for complete separation of variables");
  addCommon(cmdSeparate);

  auto* cmdValidate = app.add_subcommand("validate-array", "check the six integral-array conditions");
  addCommon(cmdValidate);
  cmdValidate->add_option("--array", arrayFile)->required();

  auto* cmdSynth = app.add_subcommand("synthesize", "construct the integral of a valid array");
  addCommon(cmdSynth);
  cmdSynth->add_option("--array", arrayFile)->required();

  auto* cmdSearch = app.add_subcommand("search", "enumerate valid integral arrays");
  addCommon(cmdSearch);
  cmdSearch->add_option("--max-p", maxP, "row bound (default 3, limit 6)");
  cmdSearch->add_option("--max-q", maxQ, "column bound (default 3, limit 6)");

  auto* cmdVerify = app.add_subcommand("verify", "verify a first integral symbolically");
  addCommon(cmdVerify);
  cmdVerify->add_option("--integral", integralFile)->required();

  auto* cmdScale = app.add_subcommand("scale", "apply the exponent scaling transform");
  addCommon(cmdScale);
  cmdScale->add_option("--alpha", alpha)->required();

  auto* cmdSimulate = app.add_subcommand("simulate", "integrate and report invariant drift");
  cmdSimulate->set_help_flag("--help", "print help");  // frees -h/--h for the step size
  addCommon(cmdSimulate);
  cmdSimulate->add_option("--integral", integralFile)->required();
  cmdSimulate->add_option("--y0", y0, "initial state, comma separated")->required();
  cmdSimulate->add_option("--h", stepH, "step size")->required();
  cmdSimulate->add_option("--t", horizon, "horizon")->required();

  auto* cmdIndep = app.add_subcommand("independence", "coefficient independence of integral exponents");
  cmdIndep->add_option("file", file)->required();
  cmdIndep->add_flag("--json", asJson);

  auto* cmdFamily = app.add_subcommand("family", "parameterized families and their integrals");
  cmdFamily->require_subcommand(1);
  std::vector<std::string> thetaVals;
  std::string l1 = "0", l2 = "0";
  std::vector<std::string> h3Vals;
  long famQ = 4;
  std::string fh21, fh32, fc22, fc23, outSystem, outIntegral;
  bool famJson = false;

  auto addFamilyCommon = [&](CLI::App* cmd) {
    cmd->add_flag("--json", famJson);
    cmd->add_option("--out-system", outSystem, "also write the system/equation file here");
    cmd->add_option("--out-integral", outIntegral, "also write the integral file here");
  };

  auto* famPlanar = cmdFamily->add_subcommand("planar", "two-term planar family");
  famPlanar->add_option("--theta", thetaVals, "c11 c21 c12 c22 h11 h12 h21 h22")
      ->expected(8)
      ->required();
  addFamilyCommon(famPlanar);

  auto* famExt1 = cmdFamily->add_subcommand("extend1", "three-term extension, l1 l2 != 0");
  famExt1->add_option("--theta", thetaVals)->expected(8)->required();
  famExt1->add_option("--l1", l1)->required();
  famExt1->add_option("--l2", l2)->required();
  famExt1->add_option("--h3", h3Vals, "h31 h32")->expected(2)->required();
  addFamilyCommon(famExt1);

  auto* famExt2 = cmdFamily->add_subcommand("extend2", "three-term extension, l1 = 0");
  famExt2->add_option("--theta", thetaVals)->expected(8)->required();
  famExt2->add_option("--l2", l2)->required();
  famExt2->add_option("--h3", h3Vals)->expected(2)->required();
  addFamilyCommon(famExt2);

  auto* famLog = cmdFamily->add_subcommand("log", "logarithmic family with q monomials");
  famLog->add_option("--q", famQ)->required();
  famLog->add_option("--h21", fh21)->required();
  famLog->add_option("--h32", fh32)->required();
  famLog->add_option("--c22", fc22)->required();
  famLog->add_option("--c23", fc23)->required();
  addFamilyCommon(famLog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (cmdParse->parsed()) return run_parse(file, asJson);
    if (cmdReduce->parsed()) return run_reduce(file, asJson);
    if (cmdDerive->parsed()) return run_derive(common, integralFile, monomial, logMonomial);
    if (cmdMonomials->parsed()) return run_monomials(common);
    if (cmdSeparate->parsed()) return run_separate(common);
    if (cmdValidate->parsed()) return run_validate_array(common, arrayFile);
    if (cmdSynth->parsed()) return run_synthesize(common, arrayFile);
    if (cmdSearch->parsed()) return run_search(common, maxP, maxQ);
    if (cmdVerify->parsed()) return run_verify(common, integralFile);
    if (cmdScale->parsed()) return run_scale(common, alpha);
    if (cmdSimulate->parsed()) return run_simulate(common, integralFile, y0, stepH, horizon);
    if (cmdIndep->parsed()) return run_independence(file, asJson);

    if (cmdFamily->parsed()) {
      FamilyOutput out;
      if (famPlanar->parsed()) {
        const PlanarTheta t = theta_from(thetaVals);
        const PlanarBranch br = planar_branch(t);
        out.extra = {{"branch", to_string(br.tag)},
                     {"d", to_json(br.d)},
                     {"ip1", to_json(br.ip1)},
                     {"ip2", to_json(br.ip2)}};
        out.headline = std::string("branch: ") + to_string(br.tag);
        if (br.tag != PlanarBranchTag::Degenerate) out.system = t.system();
        out.integral = br.integral;
      } else if (famExt1->parsed() || famExt2->parsed()) {
        ExtensionParams x{theta_from(thetaVals), Rational::parse(l1), Rational::parse(l2),
                          RatVector::row({Rational::parse(h3Vals[0]), Rational::parse(h3Vals[1])})};
        const ExtensionResult res = famExt1->parsed() ? extend_case1(x) : extend_case2(x);
        out.system = res.system;
        out.integral = Integral(res.integral);
      } else {
        const LogFamilyParams p{famQ, Rational::parse(fh21), Rational::parse(fh32),
                                Rational::parse(fc22), Rational::parse(fc23)};
        LogFamilyResult res = log_family(p);
        out.ode = res.ode;
        out.integral = Integral(res.integral);
      }
      return emit_family(out, famJson, outSystem, outIntegral);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NonFiniteError& e) {
    std::cerr << "aborted: " << e.what() << '\n';
    return kNegative;
  } catch (const InternalError& e) {
    std::cerr << "internal contradiction: " << e.what() << '\n';
    return kInternal;
  }
  return kInputError;
}
