// qtlie: torus arithmetic, verification suites, classification and
// structure-constant export. Reports are JSON on stdout.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qtlie/classify.hpp"
#include "qtlie/constants.hpp"
#include "qtlie/errors.hpp"
#include "qtlie/suites.hpp"

using namespace qtlie;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int emit(const json& j, bool ok) {
  std::cout << j.dump(2) << "\n";
  return ok ? kPass : kFail;
}

int error_exit(const std::string& kind, const std::string& msg, int code) {
  std::cerr << "qtlie: " << msg << "\n";
  std::cout << json{{"status", "error"}, {"error", kind}, {"message", msg}}.dump(2) << "\n";
  return code;
}

struct Inputs {
  std::string params = "1,1,1";
  std::string f, g;
  int n = 3;
  int rho = -1;
};

void add_fg(CLI::App* cmd, Inputs& in, bool with_n_rho) {
  cmd->add_option("--params", in.params, "q,theta1,theta2")->required();
  cmd->add_option("--f", in.f, "polynomial in T, e.g. \"T^2 - 4\"")->required();
  cmd->add_option("--g", in.g, "polynomial in T")->required();
  if (with_n_rho) {
    cmd->add_option("--n", in.n, "matrix half-size n")->capture_default_str();
    cmd->add_option("--rho", in.rho, "1 or -1")->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebras g_{2n,rho} over elementary quantum tori"};
  app.require_subcommand(1);

  // qt mul|inv|decompose
  auto* qt = app.add_subcommand("qt", "arithmetic in C_q");
  qt->require_subcommand(1);
  std::string qt_params = "1,1,1";
  std::vector<std::string> qt_args;
  for (const char* name : {"mul", "inv", "decompose"}) {
    auto* sub = qt->add_subcommand(name, std::string(name) + " of torus elements like \"2*t1^-1*t2 + i\"");
    sub->add_option("--params", qt_params, "q,theta1,theta2")->required();
    sub->add_option("elements", qt_args, "torus elements")->required();
  }

  auto* verify = app.add_subcommand("verify", "run a seeded verification suite");
  std::string suite, suite_params;
  int v_n = 3;
  std::optional<int> v_rho, v_cases;
  std::uint64_t v_seed = 42;
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--params", suite_params, "restrict to one triple q,theta1,theta2");
  verify->add_option("--n", v_n, "n")->capture_default_str();
  verify->add_option("--rho", v_rho, "restrict to rho = 1 or -1");
  verify->add_option("--seed", v_seed, "64-bit seed")->capture_default_str();
  verify->add_option("--cases", v_cases, "random cases per parameter triple");

  Inputs cls, rad, mp;
  bool check = false;
  auto* classify_cmd = app.add_subcommand("classify", "predicted semisimple quotient");
  add_fg(classify_cmd, cls, true);
  classify_cmd->add_flag("--check", check, "construct the algebra and verify the prediction");
  auto* radical_cmd = app.add_subcommand("radical", "radical of g_{2n,rho}(C_q/J(f,g))");
  add_fg(radical_cmd, rad, true);
  auto* minpoly_cmd = app.add_subcommand("minpoly", "minimal polynomials of t1^m, t2^m in C_q/J(f,g)");
  add_fg(minpoly_cmd, mp, false);

  auto* constants_cmd = app.add_subcommand("constants", "export structure constants as JSON");
  int c_n = 3, c_rho = -1;
  std::string ring, out_path;
  constants_cmd->add_option("--n", c_n, "n")->required();
  constants_cmd->add_option("--rho", c_rho, "1 or -1")->required();
  constants_cmd->add_option("--ring", ring, "ring spec, e.g. Q(i), M2, CK4, quotient(1,1,1;T-2;T-3)")->required();
  constants_cmd->add_option("--out", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (qt->parsed()) {
      TorusParams p = TorusParams::parse(qt_params);
      std::vector<QTorusElem> xs;
      for (const auto& s : qt_args) xs.push_back(QTorusElem::parse(s, p));
      if (qt->got_subcommand("mul")) {
        if (xs.empty()) throw std::invalid_argument("mul needs at least one element");
        QTorusElem prod = xs[0];
        for (std::size_t k = 1; k < xs.size(); ++k) prod = qt_mul(prod, xs[k]);
        return emit({{"params", p.to_string()}, {"product", prod.to_string()}}, true);
      }
      if (xs.size() != 1) throw std::invalid_argument("expected exactly one element");
      if (qt->got_subcommand("inv")) {
        auto inv = qt_monomial_inverse(xs[0]);
        json j{{"params", p.to_string()}, {"element", xs[0].to_string()}, {"invertible", inv.has_value()}};
        j["inverse"] = inv ? json(inv->to_string()) : json(nullptr);
        return emit(j, inv.has_value());
      }
      TorusSplit s = qt_decompose(xs[0]);
      return emit({{"params", p.to_string()},
                   {"element", xs[0].to_string()},
                   {"center", s.center.to_string()},
                   {"commutator", s.commutator.to_string()}},
                  true);
    }

    if (verify->parsed()) {
      SuiteConfig cfg;
      cfg.suite = suite;
      if (!suite_params.empty()) cfg.params = {TorusParams::parse(suite_params)};
      cfg.n = v_n;
      if (v_rho) cfg.rhos = {*v_rho};
      cfg.seed = v_seed;
      cfg.cases = v_cases;
      cfg.dim_cap = dim_cap();
      SuiteResult r = run_suite(cfg);
      return emit(r.report, r.pass);
    }

    if (classify_cmd->parsed()) {
      TorusParams p = TorusParams::parse(cls.params);
      Poly f = Poly::parse(cls.f), g = Poly::parse(cls.g);
      if (!check) return emit(classify(p, f, g, cls.n, cls.rho).to_json(), true);
      auto rep = classify_verify(p, f, g, cls.n, cls.rho);
      return emit(rep.to_json(), rep.verified);
    }

    if (radical_cmd->parsed()) {
      TorusParams p = TorusParams::parse(rad.params);
      Poly f = Poly::parse(rad.f), g = Poly::parse(rad.g);
      auto rep = radical_verify(p, f, g, rad.n, rad.rho);
      json j = rep.to_json();
      j["params"] = p.to_string();
      j["f"] = f.to_string();
      j["g"] = g.to_string();
      return emit(j, rep.report.pass);
    }

    if (minpoly_cmd->parsed()) {
      TorusParams p = TorusParams::parse(mp.params);
      QuotientRing qr(IdealFG(p, Poly::parse(mp.f), Poly::parse(mp.g)));
      MinimalPolys m = minimal_polys(qr);
      json checks = json::object();
      for (const auto& [name, ok] : m.checks.items) checks[name] = ok;
      return emit({{"params", p.to_string()},
                   {"f", qr.ideal().f().to_string()},
                   {"g", qr.ideal().g().to_string()},
                   {"f_min", m.f.to_string()},
                   {"g_min", m.g.to_string()},
                   {"checks", checks},
                   {"status", m.checks.all() ? "pass" : "fail"}},
                  m.checks.all());
    }

    if (constants_cmd->parsed()) {
      RingSpec spec = parse_ring_spec(ring);
      json doc = constants_json(c_n, c_rho, spec);
      {
        std::ofstream out(out_path);
        if (!out) throw IoError("cannot open '" + out_path + "' for writing");
        out << doc.dump(1) << "\n";
        if (!out) throw IoError("write to '" + out_path + "' failed");
      }
      json summary{{"path", out_path}, {"ring", spec.text}, {"n", c_n}, {"rho", c_rho}, {"mode", doc["mode"]}};
      summary["brackets"] = doc["brackets"].size();
      if (spec.torus) {
        summary["generators"] = doc["basis"].size();
        summary["jacobi_roundtrip"] = nullptr;
        return emit(summary, true);
      }
      std::ifstream in(out_path);
      if (!in) throw IoError("cannot reopen '" + out_path + "'");
      json back;
      try {
        back = json::parse(in);
      } catch (const json::parse_error& e) {
        throw IoError(std::string("re-read failed: ") + e.what());
      }
      bool ok = true;
      std::string witness;
      try {
        FinLie reread = read_constants(back);  // re-checks Jacobi
        summary["dim"] = reread.dim();
        ok = back == doc;
        if (!ok) witness = "re-read document differs from the written one";
      } catch (const std::invalid_argument& e) {
        ok = false;
        witness = e.what();
      }
      summary["jacobi_roundtrip"] = ok ? "pass" : "fail";
      if (!ok) summary["witness"] = witness;
      return emit(summary, ok);
    }
  } catch (const IoError& e) {
    return error_exit("io", e.what(), kIo);
  } catch (const SizeError& e) {
    return error_exit("size", std::string(e.what()) + " (raise QTLIE_DIM_CAP to allow it)", kUsage);
  } catch (const UnsupportedError& e) {
    return error_exit("unsupported", e.what(), kUsage);
  } catch (const std::invalid_argument& e) {
    return error_exit("usage", e.what(), kUsage);
  } catch (const std::exception& e) {
    return error_exit("internal", e.what(), kFail);
  }
  return kUsage;
}
