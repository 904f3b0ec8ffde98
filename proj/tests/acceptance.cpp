// Acceptance run: eleven exact criteria, one PASS/FAIL line each.
// Exit status 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "qtlie/classify.hpp"
#include "qtlie/lie_hom.hpp"
#include "qtlie/suites.hpp"

using namespace qtlie;
using nlohmann::json;

namespace {

// Collects the first failing check of a criterion.
struct Outcome {
  bool pass = true;
  std::string note;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
  void suite(const SuiteResult& r, int min_checks) {
    const std::string name = r.report["suite"];
    check(r.pass, name + " failed: " + r.report["failures"].dump());
    int run = r.report["checks_run"];
    check(run >= min_checks, name + " ran " + std::to_string(run) + " checks, expected at least " +
                                 std::to_string(min_checks));
    if (pass) note += (note.empty() ? "" : ", ") + name + " " + std::to_string(run) + " checks";
  }
};

SuiteResult suite(const std::string& name, int cases) {
  SuiteConfig c;
  c.suite = name;
  c.cases = cases;
  c.n = 3;
  return run_suite(c);
}

const int kTriples = 6, kRhos = 2;

Outcome bracket_table() {
  Outcome o;
  o.suite(suite("brackets", 200), kTriples * kRhos * 200);
  return o;
}

Outcome jacobi_and_star() {
  Outcome o;
  o.suite(suite("jacobi", 100), kTriples * kRhos * 100);
  // involution suite: (AB)* = B*A*, (A*)* = A on dense 6x6 torus matrices
  o.suite(suite("involution", 100), kTriples * kRhos * 100 * 2);
  return o;
}

Outcome trace_and_decompose() {
  Outcome o;
  o.suite(suite("grading", 100), kTriples * kRhos * 100 * 2);
  return o;
}

Outcome perfectness() {
  Outcome o;
  // three kinds over all index pairs: 6 + 6 + 6 positions at n = 3
  o.suite(suite("perfectness", 10), kTriples * kRhos * 10 * 18);
  return o;
}

Outcome named_quotients() {
  Outcome o;
  SuiteResult r = suite("quotients", 20);
  o.suite(r, 1);
  const std::map<int, std::size_t> dims{{1, 4}, {2, 4}, {3, 1}, {4, 2}, {5, 4}};
  std::set<int> seen;
  for (const auto& e : r.report["details"]["named"]) {
    int c = e["case"];
    seen.insert(c);
    const char* alpha = c == 5 ? "1" : "2";
    const char* beta = c == 5 ? "1" : "3";
    o.check(e["alpha"] == alpha && e["beta"] == beta, "case " + std::to_string(c) + " at the wrong (alpha, beta)");
    o.check(dims.count(c) && e["dim"].get<std::size_t>() == dims.at(c),
            "case " + std::to_string(c) + " quotient dimension " + e["dim"].dump());
  }
  o.check(seen == std::set<int>{1, 2, 3, 4, 5}, "not all five named cases were checked");
  return o;
}

Outcome crt() {
  Outcome o;
  o.suite(suite("crt", 10), kTriples * 10);
  return o;
}

Outcome iso_tables() {
  Outcome o;
  std::vector<LieHomTable> tables = builtin_iso_tables(3, -1, 1);
  for (int rho : {-1, 1})
    for (auto& t : builtin_iso_tables(3, rho, 2)) tables.push_back(std::move(t));
  std::set<std::size_t> dims;
  for (const auto& t : tables) {
    Report v = hom_verify(t);
    o.check(v.pass, t.name + ": " + v.witness);
    HomExtension ext = hom_extend(t);
    o.check(ext.report.pass, t.name + ": " + ext.report.witness);
    o.check(ext.domain_dim == t.codomain_dim && ext.image_rank == ext.domain_dim,
            t.name + ": rank certificate " + std::to_string(ext.image_rank) + " of " +
                std::to_string(ext.domain_dim) + " onto " + std::to_string(t.codomain_dim));
    dims.insert(ext.domain_dim);
  }
  // 2(mn)^2 - rho mn at (n, m, rho) = (3, 1, -1), (3, 2, 1); CK4 at n = 3
  auto graded = [](int mn, int rho) { return static_cast<std::size_t>(2 * mn * mn - rho * mn); };
  o.check(graded(3, -1) == 21 && dims.count(21), "no 21-dimensional table");
  o.check(graded(6, 1) == 66 && dims.count(66), "no 66-dimensional table");
  o.check(dims.count(70), "no 70-dimensional table");
  o.check(matrix_iso_table(3, -1, 1).codomain_dim == 21, "M_1 table codomain is not 21-dimensional");
  o.check(matrix_iso_table(3, 1, 2).codomain_dim == 66, "M_2 table codomain is not 66-dimensional");
  o.check(klein_iso_table(3, 1).codomain_dim == 70 && klein_iso_table(3, -1).codomain_dim == 70,
          "CK4 table codomain is not 70-dimensional");
  if (o.pass) o.note = std::to_string(tables.size()) + " tables";
  return o;
}

Outcome classification_matrix() {
  Outcome o;
  SuiteResult r = suite("classify", 1);
  o.suite(r, 5);
  // case -> (dimension, k)
  const std::map<int, std::pair<std::size_t, std::size_t>> expected{
      {1, {78, 1}}, {2, {78, 1}}, {3, {21, 1}}, {4, {35, 1}}, {5, {70, 2}}};
  std::set<int> seen;
  for (const auto& row : r.report["details"]["matrix"]) {
    int c = row["case"];
    seen.insert(c);
    const std::string w = "case " + std::to_string(c) + ": ";
    if (!expected.count(c) || row["observed"].is_null()) {
      o.check(false, w + "unexpected row " + row.dump());
      continue;
    }
    auto [dim, k] = expected.at(c);
    const json& obs = row["observed"];
    o.check(obs["dim"].get<std::size_t>() == dim, w + "dimension " + obs["dim"].dump());
    o.check(obs["killing_rank"] == obs["dim"], w + "Killing rank " + obs["killing_rank"].dump());
    o.check(obs["center_dim"] == 0, w + "center " + obs["center_dim"].dump());
    o.check(obs["factor_count"].get<std::size_t>() == k && row["k"].get<std::size_t>() == k,
            w + "factor count " + obs["factor_count"].dump());
  }
  o.check(seen == std::set<int>{1, 2, 3, 4, 5}, "not all five cases were constructed");
  o.check(r.report["details"]["matrix"].size() == 5, "expected exactly five rows");
  return o;
}

Outcome radical() {
  Outcome o;
  RadicalReport r = radical_verify(TorusParams(1, 1, 1), Poly::parse("(T-2)^2"), Poly::parse("T-3"), 3, -1);
  o.check(r.report.pass, r.report.witness);
  o.check(r.radical_dim == 21, "radical dimension " + std::to_string(r.radical_dim));
  o.check(r.nilpotency_index == 2, "nilpotency index " + std::to_string(r.nilpotency_index));
  o.check(r.quotient_dim == 21, "quotient dimension " + std::to_string(r.quotient_dim));
  o.check(r.quotient_killing_rank == 21, "quotient Killing rank " + std::to_string(r.quotient_killing_rank));
  if (o.pass) o.note = "lie " + std::to_string(r.lie_dim) + " = radical 21 + semisimple 21";
  return o;
}

Outcome ideals() {
  Outcome o;
  // per triple and rho: 3 extractions, then the random kernel/membership cases
  const int cases = 10;
  SuiteResult r = suite("ideals", cases);
  o.suite(r, kTriples * kRhos * (3 + cases));
  o.check(kTriples * kRhos * cases >= 100, "fewer than 100 random elements");
  for (const auto& m : r.report["details"]["models"])
    for (const char* name : {"zero", "proper", "full"}) {
      const json& e = m[name];
      o.check(e["bounds_coincide"] == true, m["params"].get<std::string>() + " " + name + ": sandwich bounds differ");
    }
  return o;
}

Outcome minimal_polys_recovered() {
  Outcome o;
  o.suite(suite("minpoly", 10), kTriples * 10 * 2);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"bracket table matches the matrix commutator", bracket_table},
      {"Jacobi identity and the star involution", jacobi_and_star},
      {"trace criterion and center/commutator split", trace_and_decompose},
      {"perfectness witnesses", perfectness},
      {"named quotient isomorphisms", named_quotients},
      {"CRT splitting", crt},
      {"builtin isomorphism tables", iso_tables},
      {"classification matrix", classification_matrix},
      {"radical of a non-squarefree quotient", radical},
      {"ideal extraction and kernel membership", ideals},
      {"minimal polynomials recover (f, g)", minimal_polys_recovered},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("threw: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, secs,
                o.note.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
