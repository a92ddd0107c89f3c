#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <optional>
#include <random>
#include <sstream>

#include "fracinv/acceptance.hpp"
#include "fracinv/extension.hpp"
#include "fracinv/favard.hpp"
#include "fracinv/fracalc.hpp"
#include "fracinv/quadrature.hpp"
#include "fracinv/spectral.hpp"

namespace fracinv::cli {

using json = nlohmann::ordered_json;

namespace {

// input that parsed but makes no sense; reported like a parse error
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a check ran and failed; the JSON report is already built
struct CheckFailed {
  json report;
};

std::string shortest(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

json rational_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (auto& r : v) a.push_back(to_string(r));
  return a;
}

// library parse errors on flag values count as usage errors
template <class F>
auto usage(F&& f) {
  try {
    return f();
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

Func parse_fn(const std::string& s) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon), tail = colon == std::string::npos ? "" : s.substr(colon + 1);
  std::vector<double> v;
  std::stringstream ss(tail);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(usage([&] { return parse_scalar(item); }));
  if (head == "exp" && (v.size() == 1 || v.size() == 2)) return Func::exponential(v[0], v.size() == 2 ? v[1] : 1.0);
  if (head == "bump" && (v.size() == 2 || v.size() == 3)) {
    if (!(v[1] > 0)) throw UsageError("bump width must be positive");
    return Func::bump(v[0], v[1], v.size() == 3 ? v[2] : 1.0);
  }
  if (head == "const" && v.size() == 1) return Func::constant(v[0]);
  throw UsageError("bad function '" + s + "' (expected exp:lambda[,scale], bump:c,w[,h] or const:v)");
}

FamilyParams family_params(const std::string& alpha, const std::string& beta) {
  return usage([&] { return FamilyParams{parse_rational(alpha), parse_rational(beta)}; });
}

struct Emitter {
  std::ostream& out;
  std::string format;
  json doc;

  Emitter(std::ostream& o, std::string fmt, const std::string& command) : out(o), format(std::move(fmt)) {
    doc["command"] = command;
    doc["params"] = json::object();
    doc["results"] = json::object();
    doc["failures"] = json::array();
  }
  bool csv() const { return format == "csv"; }
  void finish() {
    if (!csv()) out << doc.dump(2) << "\n";
    if (!doc["failures"].empty()) throw CheckFailed{doc};
  }
};

// --- subcommands ---

struct GenPoly {
  std::string family, alpha = "0", beta = "0", method = "rec", out = "csv";
  int n = 5;
  void run(std::ostream& os) const {
    Family fam = usage([&] { return parse_family(family); });
    FamilyParams p = family_params(alpha, beta);
    std::vector<Poly> F;
    if (method == "rec") F = family_recurrence(fam, n, p);
    else if (method == "rod") for (int k = 0; k <= n; ++k) F.push_back(family_rodrigues(fam, k, p));
    else F = family_genfun(fam, n, p);
    Emitter e(os, out, "gen-poly");
    e.doc["params"] = {{"family", family}, {"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"n", n}, {"method", method}};
    if (e.csv()) {
      os << "n,coeffs\n";
      for (int k = 0; k <= n; ++k) os << k << "," << to_string(F[k]) << "\n";
    }
    json rows = json::array();
    for (int k = 0; k <= n; ++k) rows.push_back({{"n", k}, {"coeffs", to_string(F[k])}});
    e.doc["results"]["polynomials"] = rows;
    e.finish();
  }
};

struct Quad {
  std::string measure = "hermite", out = "csv";
  int N = 10;
  std::string alpha_s = "0", beta_s = "0";
  void run(std::ostream& os) const {
    double alpha = usage([&] { return parse_scalar(alpha_s); }), beta = usage([&] { return parse_scalar(beta_s); });
    Measure m = measure == "hermite" ? Measure::Hermite : measure == "laguerre" ? Measure::Laguerre : Measure::Jacobi;
    auto r = gauss_rule(m, N, alpha, beta);
    Emitter e(os, out, "quad");
    e.doc["params"] = {{"measure", measure}, {"N", N}, {"alpha", alpha}, {"beta", beta}};
    if (e.csv()) {
      os << "i,node,weight\n";
      for (int i = 0; i < N; ++i) os << i << "," << shortest(r.nodes[i]) << "," << shortest(r.weights[i]) << "\n";
    }
    e.doc["results"]["nodes"] = r.nodes;
    e.doc["results"]["weights"] = r.weights;
    e.finish();
  }
};

struct FracApply {
  std::string preset = "zero", op = "deriv", side = "left", fn = "exp:1", input = "conj", out = "csv";
  double alpha = 0.5, eps = 0;
  std::vector<double> xs{0.0};
  void run(std::ostream& os) const {
    auto w = usage([&] { return parse_preset(preset); });
    Func f = parse_fn(fn);
    if (!(alpha > 0)) throw UsageError("--alpha must be positive");
    if (op == "deriv" && !(alpha < 1)) throw UsageError("fractional derivative needs 0 < alpha < 1");
    if (input == "raw" && op == "int" && side == "right") throw UsageError("raw input is not available for the right integral");
    Emitter e(os, out, "frac-apply");
    e.doc["params"] = {{"preset", preset}, {"op", op}, {"side", side}, {"fn", fn}, {"input", input}, {"alpha", alpha}, {"eps", eps}};
    FracParams p{alpha, eps};
    json rows = json::array();
    std::ostringstream csv;  // nothing is printed until every point succeeded
    csv << "x,value\n";
    for (double x : xs) {
      double v;
      bool raw = input == "raw";
      if (op == "deriv")
        v = side == "left" ? (raw ? frac_deriv_left(w, p, f, x) : frac_deriv_left_conj(w, p, f, x))
                           : (raw ? frac_deriv_right(w, p, f, x) : frac_deriv_right_conj(w, p, f, x));
      else
        v = side == "left" ? (raw ? frac_int_left(w, alpha, f, x) : frac_int_left_conj(w, alpha, f, x))
                           : frac_int_right_conj(w, alpha, f, x);
      csv << shortest(x) << "," << shortest(v) << "\n";
      rows.push_back({{"x", x}, {"value", v}});
    }
    if (e.csv()) os << csv.str();
    e.doc["results"]["values"] = rows;
    e.finish();
  }
};

struct ExtensionCheck {
  std::string preset = "zero", fn = "exp:1", out = "json";
  double alpha = 0.5, x = 0, h0 = 0.05, tol = 1e-4;
  std::vector<double> ys{0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625};
  void run(std::ostream& os) const {
    auto w = usage([&] { return parse_preset(preset); });
    Func f = parse_fn(fn);
    if (!(alpha > 0 && alpha < 1)) throw UsageError("--alpha must lie in (0, 1)");
    ExtensionField field(w, alpha, f);
    Emitter e(os, "json", "extension-check");
    e.doc["params"] = {{"preset", preset}, {"fn", fn}, {"alpha", alpha}, {"x", x}, {"ys", ys}, {"h0", h0}};
    json u = json::array();
    for (double y : ys) u.push_back({{"y", y}, {"U", field.value(x, y)}});
    e.doc["results"]["U"] = u;
    auto tr = field.trace(x, ys);
    double marchaud = frac_deriv_left_conj(w, {alpha}, f, x);
    e.doc["results"]["trace"] = {{"limit", tr.limit},         {"observed_order", tr.observed_order},
                                 {"assumed_order", tr.assumed_order}, {"fallback", tr.fallback},
                                 {"marchaud", marchaud},      {"difference", std::abs(tr.limit - marchaud)},
                                 {"warnings", tr.warnings}};
    if (std::abs(tr.limit - marchaud) > tol)
      e.doc["failures"].push_back("Neumann trace differs from the fractional derivative by " + shortest(std::abs(tr.limit - marchaud)));
    // smallest three y: the uncorrected terms shrink fastest there
    size_t m = ys.size();
    auto bl = field.boundary_limit(x, {ys[m - 3], ys[m - 2], ys[m - 1]});
    double ux = w.E(x) * f(x);
    e.doc["results"]["boundary"] = {{"limit", bl.value}, {"u", ux}, {"difference", std::abs(bl.value - ux)}};
    if (std::abs(bl.value - ux) > tol) e.doc["failures"].push_back("boundary limit misses u(x)");
    auto rows = field.residual_table(x, 1.0, h0, 3);
    json rt = json::array();
    for (size_t k = 0; k < rows.size(); ++k) {
      json r = {{"h", rows[k].h}, {"residual", rows[k].residual}};
      if (k > 0) {
        double order = std::log2(std::abs(rows[k - 1].residual / rows[k].residual));
        r["order"] = order;
        if (order < 1.8) e.doc["failures"].push_back("PDE residual order " + shortest(order) + " below 1.8");
      }
      rt.push_back(r);
    }
    e.doc["results"]["residual"] = rt;
    e.finish();
  }
};

struct SpectralDemo {
  std::string basis = "invgauss", op = "heat", out = "json";
  int modes = 10;
  uint64_t seed = 1;
  double t = 1.0;
  std::vector<double> xs{0.0};
  void run(std::ostream& os) const {
    auto b = usage([&] { return parse_basis(basis); });
    if (modes < 1) throw UsageError("--modes must be >= 1");
    std::mt19937_64 rng(seed);
    auto f = random_expansion(b, modes, rng);
    Emitter e(os, "json", "spectral-demo");
    e.doc["params"] = {{"basis", basis_name(b)}, {"modes", modes}, {"op", op}, {"seed", seed}, {"t", t}, {"x", xs}};
    std::vector<double> lam;
    for (int n = 0; n < modes; ++n) lam.push_back(multiplier(b, n));
    e.doc["results"]["coeffs"] = f.coeffs();
    e.doc["results"]["multipliers"] = lam;
    e.doc["results"]["norm"] = f.norm();
    if (op == "heat") {
      auto h = heat_semigroup(f, t);
      double bound = std::exp(-lam[0] * t) * f.norm();
      e.doc["results"]["heat"] = {{"coeffs", h.coeffs()}, {"norm", h.norm()}, {"bound", bound}};
      if (h.norm() > bound * (1 + 1e-12)) e.doc["failures"].push_back("contraction bound exceeded");
    } else if (op == "maximal") {
      json v = json::array();
      for (double x : xs) v.push_back({{"x", x}, {"f", f(x)}, {"maximal", maximal_op(f, x)}});
      auto m = maximal_l2(f);
      e.doc["results"]["maximal"] = {{"values", v}, {"l2", m.maximal}, {"ratio", m.ratio}};
    } else if (op == "riesz") {
      auto r = riesz(f);
      auto rs = riesz_star(f);
      e.doc["results"]["riesz"] = {{"coeffs", r.coeffs()}, {"norm", r.norm()}};
      e.doc["results"]["riesz_star"] = {{"coeffs", rs.coeffs()}, {"norm", rs.norm()}};
    } else {
      auto g = g_function_norm(f);
      e.doc["results"]["gfun"] = {{"closed_form", g.closed_form}, {"quadrature", g.quadrature}};
    }
    e.finish();
  }
};

struct FavardCmd {
  std::string family = "inv-hermite", alpha = "0", beta = "0", out = "json";
  int N = 4;
  void run(std::ostream& os) const {
    Family fam = usage([&] { return parse_family(family); });
    if (!is_inverse(fam)) throw UsageError("favard takes inv-hermite, inv-laguerre or inv-jacobi");
    if (N < 1) throw UsageError("--N must be >= 1");
    FamilyParams p = family_params(alpha, beta);
    MomentFunctional mf(fam, p, N);
    auto mu = mf.moments(N);
    auto rep = orthogonality_check(mf, N / 2);
    Emitter e(os, out, "favard");
    e.doc["params"] = {{"family", family}, {"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"N", N}};
    if (e.csv()) {
      os << "k,moment\n";
      for (int k = 0; k <= N; ++k) os << k << "," << to_string(mu[k]) << "\n";
    }
    std::vector<Rational> unit;
    for (auto& m : mu) unit.push_back(m / mu[0]);
    e.doc["results"]["moments"] = rational_list(mu);
    e.doc["results"]["moments_unit"] = rational_list(unit);
    e.doc["results"]["c"] = rational_list(mf.recurrence().c);
    e.doc["results"]["lambda"] = rational_list(mf.recurrence().lam);
    e.doc["results"]["norms"] = rational_list(rep.diagonal);
    for (auto& s : rep.failures) e.doc["failures"].push_back(s);
    e.finish();
  }
};

struct VerifyAll {
  bool fast = false;
  uint64_t seed = acceptance::Options{}.seed;
  std::string out = "json";
  void run(std::ostream& os) const {
    acceptance::Options o{fast, seed};
    Emitter e(os, out == "text" ? "csv" : "json", "verify-all");
    e.doc["params"] = {{"fast", fast}, {"seed", seed}};
    json rows = json::array();
    acceptance::run_all(o, [&](const acceptance::Result& r) {
      if (out == "text") os << acceptance::format_line(r) << std::endl;
      rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
      if (!r.pass) e.doc["failures"].push_back("criterion " + std::to_string(r.id) + ": " + r.detail);
    });
    e.doc["results"]["criteria"] = rows;
    e.finish();
  }
};

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const PivotError*>(&e)) return "pivot";
  if (dynamic_cast<const ParameterError*>(&e)) return "parameter";
  if (dynamic_cast<const AccuracyError*>(&e)) return "accuracy";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const ConsistencyError*>(&e)) return "consistency";
  if (dynamic_cast<const ContractError*>(&e)) return "contract";
  if (dynamic_cast<const NumericError*>(&e)) return "numeric";
  return "internal";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fracinv: inverse-measure polynomials and weighted fractional calculus"};
  app.name("fracinv");
  app.require_subcommand(1);

  auto out_opt = [](CLI::App* s, std::string& target, std::vector<std::string> allowed) {
    s->add_option("--out", target, "output format")->check(CLI::IsMember(allowed));
  };

  GenPoly gp;
  auto* s_gen = app.add_subcommand("gen-poly", "generate polynomials exactly");
  s_gen->add_option("--family", gp.family, "inv-hermite, inv-laguerre, inv-jacobi, hermite, laguerre, jacobi")->required();
  s_gen->add_option("--alpha", gp.alpha, "rational p/q");
  s_gen->add_option("--beta", gp.beta, "rational p/q");
  s_gen->add_option("--n", gp.n, "highest degree")->check(CLI::Range(0, 400));
  s_gen->add_option("--method", gp.method)->check(CLI::IsMember({"rec", "rod", "gen"}));
  out_opt(s_gen, gp.out, {"csv", "json"});

  Quad qd;
  auto* s_quad = app.add_subcommand("quad", "Gauss rule for a classical measure");
  s_quad->add_option("--measure", qd.measure)->check(CLI::IsMember({"hermite", "laguerre", "jacobi"}));
  s_quad->add_option("--N", qd.N)->check(CLI::Range(1, 2000));
  s_quad->add_option("--alpha", qd.alpha_s, "p/q or decimal");
  s_quad->add_option("--beta", qd.beta_s, "p/q or decimal");
  out_opt(s_quad, qd.out, {"csv", "json"});

  FracApply fa;
  auto* s_frac = app.add_subcommand("frac-apply", "weighted fractional derivative or integral");
  s_frac->add_option("--preset", fa.preset, "ou, hermite, zero, laguerre:a, jacobi:a,b");
  s_frac->add_option("--op", fa.op)->check(CLI::IsMember({"deriv", "int"}));
  s_frac->add_option("--side", fa.side)->check(CLI::IsMember({"left", "right"}));
  s_frac->add_option("--fn", fa.fn, "exp:lambda[,scale], bump:c,w[,h], const:v");
  s_frac->add_option("--input", fa.input, "conj: fn is E^{-1}u (left) or E v (right); raw: fn is u itself")
      ->check(CLI::IsMember({"conj", "raw"}));
  s_frac->add_option("--alpha", fa.alpha);
  s_frac->add_option("--eps", fa.eps, "truncation of the derivative integral")->check(CLI::NonNegativeNumber);
  s_frac->add_option("--x", fa.xs, "evaluation points")->delimiter(',');
  out_opt(s_frac, fa.out, {"csv", "json"});

  ExtensionCheck ec;
  auto* s_ext = app.add_subcommand("extension-check", "extension field, trace and PDE residual");
  s_ext->add_option("--preset", ec.preset);
  s_ext->add_option("--fn", ec.fn);
  s_ext->add_option("--alpha", ec.alpha);
  s_ext->add_option("--x", ec.x);
  s_ext->add_option("--y", ec.ys, "decreasing y values")->delimiter(',');
  s_ext->add_option("--h0", ec.h0)->check(CLI::PositiveNumber);
  out_opt(s_ext, ec.out, {"json"});

  SpectralDemo sd;
  auto* s_spec = app.add_subcommand("spectral-demo", "spectral multipliers on a random expansion");
  s_spec->add_option("--basis", sd.basis, "invgauss, invlaguerre:a, invjacobi:a,b");
  s_spec->add_option("--modes", sd.modes);
  s_spec->add_option("--op", sd.op)->check(CLI::IsMember({"heat", "maximal", "riesz", "gfun"}));
  s_spec->add_option("--seed", sd.seed);
  s_spec->add_option("--t", sd.t)->check(CLI::NonNegativeNumber);
  s_spec->add_option("--x", sd.xs)->delimiter(',');
  out_opt(s_spec, sd.out, {"json"});

  FavardCmd fv;
  auto* s_fav = app.add_subcommand("favard", "moment functional of an inverse family");
  s_fav->add_option("--family", fv.family)->required();
  s_fav->add_option("--alpha", fv.alpha);
  s_fav->add_option("--beta", fv.beta);
  s_fav->add_option("--N", fv.N, "highest moment");
  out_opt(s_fav, fv.out, {"csv", "json"});

  VerifyAll va;
  auto* s_ver = app.add_subcommand("verify-all", "run acceptance criteria 1-12");
  s_ver->add_flag("--fast", va.fast, "fewer randomized trials");
  s_ver->add_option("--seed", va.seed);
  out_opt(s_ver, va.out, {"json", "text"});

  std::vector<std::string> argv_store{"fracinv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::string name = sub->get_name();
  try {
    if (name == "gen-poly") gp.run(out);
    else if (name == "quad") qd.run(out);
    else if (name == "frac-apply") fa.run(out);
    else if (name == "extension-check") ec.run(out);
    else if (name == "spectral-demo") sd.run(out);
    else if (name == "favard") fv.run(out);
    else va.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << sub->help();
    return 2;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const std::exception& e) {
    json d;
    d["command"] = name;
    d["params"] = json::object();
    d["results"] = nullptr;
    d["failures"] = json::array({{{"error", error_kind(e)}, {"message", e.what()}}});
    out << d.dump(2) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace fracinv::cli
