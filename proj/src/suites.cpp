#include "qtlie/suites.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "qtlie/classify.hpp"
#include "qtlie/errors.hpp"
#include "qtlie/lie_hom.hpp"

namespace qtlie {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CaseRng::CaseRng(std::uint64_t seed, std::string_view suite, std::uint64_t index) {
  // FNV-1a of the suite name keeps suites on separate streams.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : suite) h = (h ^ c) * 0x100000001b3ULL;
  std::uint64_t state = seed ^ h;
  splitmix64(state);
  state ^= index;
  engine_.seed(splitmix64(state));
}

int CaseRng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("CaseRng::uniform: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

GaussRat random_coefficient(CaseRng& rng) {
  static const std::vector<GaussRat> pool{GaussRat(1),          GaussRat(-1),   GaussRat::frac(1, 2),
                                          GaussRat::frac(-1, 2), GaussRat::i(), -GaussRat::i()};
  return rng.pick(pool);
}

QTorusElem random_torus_elem(CaseRng& rng, const TorusParams& p, int terms, int max_exp) {
  QTorusElem x(p);
  for (int t = 0; t < terms; ++t)
    x.add_term(rng.uniform(-max_exp, max_exp), rng.uniform(-max_exp, max_exp), random_coefficient(rng));
  if (x.is_zero()) x.add_term(0, 0, GaussRat(1));
  return x;
}

GenSym<QTorusElem> random_generator(CaseRng& rng, const TorusLie& lie, int max_exp) {
  auto kind = static_cast<GenKind>(rng.uniform(0, 2));
  int i = rng.uniform(1, lie.n()), j = rng.uniform(1, lie.n());
  while (kind == GenKind::F && i == j) j = rng.uniform(1, lie.n());
  return {kind, i, j, random_torus_elem(rng, lie.ring().params(), 2, max_exp)};
}

TorusMat random_g_element(CaseRng& rng, const TorusLie& lie, int terms, int max_exp) {
  TorusMat m = lie.zero();
  for (int t = 0; t < terms; ++t) m += lie.embed(random_generator(rng, lie, max_exp));
  return m;
}

TorusMat random_dense_matrix(CaseRng& rng, const TorusLie& lie, int max_exp) {
  TorusMat m = lie.zero();
  for (int r = 0; r < 2 * lie.n(); ++r)
    for (int c = 0; c < 2 * lie.n(); ++c) m.add(r, c, random_torus_elem(rng, lie.ring().params(), 1, max_exp));
  return m;
}

QTorusElem lift_poly(const Poly& p, const TorusParams& params, bool second) {
  QTorusElem out(params);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    auto e = static_cast<std::int64_t>(k) * params.m();
    out += QTorusElem::monomial(params, second ? 0 : e, second ? e : 0, p.coeffs()[k]);
  }
  return out;
}

QTorusElem random_ideal_elem(CaseRng& rng, const IdealFG& ideal) {
  const auto& p = ideal.params();
  return random_torus_elem(rng, p, 2, 2) * lift_poly(ideal.f(), p, false) * random_torus_elem(rng, p, 2, 2) +
         random_torus_elem(rng, p, 2, 2) * lift_poly(ideal.g(), p, true);
}

Poly random_valid_poly(CaseRng& rng, const TorusParams& params, bool second, int factors, int max_root) {
  int theta = second ? params.theta2() : params.theta1();
  bool paired = params.m() == 1 && theta == -1;
  std::vector<int> roots;
  while (static_cast<int>(roots.size()) < factors) {
    int a = rng.uniform(1, max_root);
    if (!paired && rng.uniform(0, 1) == 1) a = -a;
    bool fresh = true;
    for (int b : roots) fresh = fresh && b != a && !(paired && b == -a);
    if (fresh) roots.push_back(a);
  }
  Poly out = Poly::constant(rng.pick(std::vector<GaussRat>{GaussRat(1), GaussRat(2), GaussRat::frac(-1, 3)}));
  for (int a : roots)
    out = out * (paired ? Poly({GaussRat(-a * a), GaussRat(0), GaussRat(1)}) : Poly::linear(GaussRat(a)));
  return out;
}

namespace {

using nlohmann::json;

// Collects case outcomes; only failures are listed individually.
class Tally {
 public:
  void record(bool ok, const std::string& where) {
    ++cases_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < 20) failures_.push_back(where);
  }
  bool pass() const { return failed_ == 0; }
  void write(json& j) const {
    j["checks_run"] = cases_;
    j["failed"] = failed_;
    j["failures"] = failures_;
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string where(const TorusParams& p, int rho, int index) {
  return "case " + std::to_string(index) + " params " + p.to_string() + " rho " + std::to_string(rho);
}

struct Ctx {
  const SuiteConfig& cfg;
  int cases;
  Tally tally;
  json details = json::object();

  CaseRng rng(std::uint64_t index) const { return CaseRng(cfg.seed, cfg.suite, index); }
};

// Case indices are global across (params, rho) so every case has its own stream.
template <class F>
void per_params_rho(Ctx& ctx, F&& body) {
  std::uint64_t index = 0;
  for (const auto& p : ctx.cfg.params)
    for (int rho : ctx.cfg.rhos) {
      TorusLie lie(TorusRing(p), ctx.cfg.n, rho);
      for (int c = 0; c < ctx.cases; ++c, ++index) {
        CaseRng rng = ctx.rng(index);
        body(lie, rng, static_cast<int>(index));
      }
    }
}

void suite_brackets(Ctx& ctx) {
  per_params_rho(ctx, [&](const TorusLie& lie, CaseRng& rng, int idx) {
    auto x = random_generator(rng, lie), y = random_generator(rng, lie);
    bool ok = lie.embed_sum(lie.symbolic_bracket(x, y)) == lie.bracket(lie.embed(x), lie.embed(y));
    ctx.tally.record(ok, where(lie.ring().params(), lie.rho(), idx) + ": [" + x.to_string() + ", " + y.to_string() + "]");
  });
}

void suite_jacobi(Ctx& ctx) {
  per_params_rho(ctx, [&](const TorusLie& lie, CaseRng& rng, int idx) {
    TorusMat a = random_g_element(rng, lie, 2), b = random_g_element(rng, lie, 2), c = random_g_element(rng, lie, 2);
    TorusMat j = lie.bracket(a, lie.bracket(b, c)) + lie.bracket(b, lie.bracket(c, a)) + lie.bracket(c, lie.bracket(a, b));
    ctx.tally.record(j.is_zero(), where(lie.ring().params(), lie.rho(), idx) + ": Jacobi sum " + j.to_string());
  });
}

void suite_involution(Ctx& ctx) {
  per_params_rho(ctx, [&](const TorusLie& lie, CaseRng& rng, int idx) {
    TorusMat a = random_dense_matrix(rng, lie), b = random_dense_matrix(rng, lie);
    std::string w = where(lie.ring().params(), lie.rho(), idx);
    ctx.tally.record(lie.star(lie.mul(a, b)) == lie.mul(lie.star(b), lie.star(a)), w + ": (AB)* != B*A*");
    ctx.tally.record(lie.star(lie.star(a)) == a, w + ": (A*)* != A");
    TorusMat g = random_g_element(rng, lie);
    ctx.tally.record(lie.lrho_check(g), w + ": generator sum not in L_rho");
    QTorusElem x = random_torus_elem(rng, lie.ring().params()), y = random_torus_elem(rng, lie.ring().params());
    ctx.tally.record(qt_involution(x * y) == qt_involution(y) * qt_involution(x), w + ": torus involution");
  });
}

void suite_grading(Ctx& ctx) {
  per_params_rho(ctx, [&](const TorusLie& lie, CaseRng& rng, int idx) {
    std::string w = where(lie.ring().params(), lie.rho(), idx);
    TorusMat a = random_g_element(rng, lie), b = random_g_element(rng, lie);
    TorusMat br = lie.bracket(a, b);
    ctx.tally.record(qt_commutator_membership(lie.trace(br)), w + ": trace of bracket not in [C_q,C_q]");
    ctx.tally.record(lie.grho_check(br), w + ": bracket not in g_{2n,rho}");
    QTorusElem x = random_torus_elem(rng, lie.ring().params(), 4);
    TorusSplit s = qt_decompose(x);
    ctx.tally.record(s.center + s.commutator == x && qt_center_membership(s.center) &&
                         qt_commutator_membership(s.commutator),
                     w + ": decomposition of " + x.to_string());
    TorusMat sum = lie.zero();
    bool roots_ok = true;
    for (const auto& [r, m] : lie.root_decompose(br)) {
      roots_ok = roots_ok && is_root_or_zero(r);
      for (const auto& [pos, v] : m.entries()) roots_ok = roots_ok && lie.root_of_position(pos.first, pos.second) == r;
      sum += m;
    }
    ctx.tally.record(roots_ok && sum == br, w + ": root decomposition");
  });
}

void suite_perfectness(Ctx& ctx) {
  if (ctx.cfg.n < 3) throw std::invalid_argument("perfectness suite needs n >= 3");
  std::uint64_t index = 0;
  for (const auto& p : ctx.cfg.params)
    for (int rho : ctx.cfg.rhos) {
      TorusLie lie(TorusRing(p), ctx.cfg.n, rho);
      for (GenKind kind : {GenKind::F, GenKind::G, GenKind::H})
        for (int i = 1; i <= lie.n(); ++i)
          for (int j = 1; j <= lie.n(); ++j) {
            if (kind == GenKind::F && i == j) continue;
            for (int c = 0; c < ctx.cases; ++c, ++index) {
              CaseRng rng = ctx.rng(index);
              GenSym<QTorusElem> s{kind, i, j, random_torus_elem(rng, p)};
              auto [x, y] = lie.perfectness_witness(s);
              ctx.tally.record(lie.bracket(lie.embed(x), lie.embed(y)) == lie.embed(s),
                               where(p, rho, static_cast<int>(index)) + ": witness for " + s.to_string());
            }
          }
    }
}

void suite_quotients(Ctx& ctx) {
  json named = json::array();
  for (const auto& p : ctx.cfg.params) {
    bool klein = p == TorusParams(1, -1, -1);
    GaussRat alpha = klein ? GaussRat(1) : GaussRat(2), beta = klein ? GaussRat(1) : GaussRat(3);
    NamedIso iso = named_quotient_iso(p, alpha, beta);
    ctx.tally.record(iso.checks.all(), "named iso " + p.to_string() + ": " + iso.checks.first_failure());
    ctx.tally.record(iso.source.dim() == iso.target->dim(), "named iso " + p.to_string() + ": dimensions differ");
    named.push_back({{"params", p.to_string()},
                     {"case", iso.case_number},
                     {"alpha", alpha.to_string()},
                     {"beta", beta.to_string()},
                     {"dim", iso.source.dim()},
                     {"model", provenance_name(iso.target->provenance())}});
  }
  ctx.details["named"] = named;
  std::uint64_t index = 0;
  for (const auto& p : ctx.cfg.params)
    for (int c = 0; c < ctx.cases; ++c, ++index) {
      CaseRng rng = ctx.rng(index);
      IdealFG ideal(p, random_valid_poly(rng, p, false, rng.uniform(1, 2)),
                    random_valid_poly(rng, p, true, rng.uniform(1, 2)));
      QuotientRing qr(ideal);
      QTorusElem x = random_torus_elem(rng, p), y = random_torus_elem(rng, p);
      std::string w = "case " + std::to_string(index) + " params " + p.to_string() + " f " + ideal.f().to_string() +
                      " g " + ideal.g().to_string();
      ctx.tally.record(qr.project(x * y) == qr.project(x) * qr.project(y), w + ": projection not multiplicative");
      ctx.tally.record(qr.project(qt_involution(x)) == fin_involution(qr.project(x)), w + ": projection vs involution");
      ctx.tally.record(qr.project(random_ideal_elem(rng, ideal)).is_zero(), w + ": ideal element survives");
    }
}

// Minimal symmetric factors as polynomials in T (no square roots needed).
std::vector<SymmetricFactor> factors_in_t(const Poly& f, const TorusParams& p, bool second) {
  if (p.m() == 2) return symmetric_factors(f, 1, 1);
  return symmetric_factors(f, second ? p.theta2() : p.theta1(), 1);
}

void suite_crt(Ctx& ctx) {
  std::uint64_t index = 0;
  for (const auto& p : ctx.cfg.params)
    for (int c = 0; c < ctx.cases; ++c, ++index) {
      CaseRng rng = ctx.rng(index);
      bool second = rng.uniform(0, 1) == 1;
      // Two coprime parts: factors of one random squarefree product.
      Poly whole = random_valid_poly(rng, p, second, rng.uniform(2, 3));
      Poly other = random_valid_poly(rng, p, !second, 1);
      auto factors = factors_in_t(whole, p, second);
      std::size_t cut = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(factors.size()) - 1));
      Poly p1 = Poly::constant(whole.leading()), p2 = Poly::constant(GaussRat(1));
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k < cut)
          p1 = p1 * factors[k].factor;
        else
          p2 = p2 * factors[k].factor;
      }
      CrtSplit s = crt_split(p, p1, p2, other, second ? SplitVariable::Second : SplitVariable::First);
      ctx.tally.record(s.checks.all(), "case " + std::to_string(index) + " params " + p.to_string() + " split " +
                                           p1.to_string() + " | " + p2.to_string() + ": " + s.checks.first_failure());
    }
}

void suite_isos(Ctx& ctx) {
  json tables = json::array();
  for (int rho : ctx.cfg.rhos) {
    for (const auto& table : builtin_iso_tables(ctx.cfg.n, rho)) {
      HomExtension ext = hom_extend(table);
      ctx.tally.record(ext.report.pass, table.name + " rho " + std::to_string(rho) + ": " + ext.report.witness);
      json d = ext.report.details;
      d["table"] = table.name;
      d["rho"] = rho;
      tables.push_back(d);
    }
    for (const auto& s : {scalar_algebra(), matrix_algebra(2)}) {
      Report r = op_pair_inverse_check(ctx.cfg.n, rho, s);
      ctx.tally.record(r.pass, "paired inverse over " + provenance_name(s->provenance()) + ": " + r.witness);
    }
  }
  ctx.details["tables"] = tables;
}

// A proper nonzero involutive ideal: generated by the first symmetric factor of f.
Subspace proper_ideal(const QuotientRing& qr) {
  const auto& p = qr.ideal().params();
  auto fs = factors_in_t(qr.ideal().f(), p, false);
  return ideal_generated(*qr.algebra(), {fin_eval_poly(fs.front().factor, qr.t1_m())});
}

void suite_ideals(Ctx& ctx) {
  if (ctx.cfg.n < 3) throw std::invalid_argument("ideals suite needs n >= 3");
  json models = json::array();
  std::uint64_t index = 0;
  for (const auto& p : ctx.cfg.params)
    for (int rho : ctx.cfg.rhos) {
      std::string w0 = "params " + p.to_string() + " rho " + std::to_string(rho);
      // Recovery of J inside a finite model: f with two coprime factors.
      bool paired1 = p.m() == 1 && p.theta1() == -1, paired2 = p.m() == 1 && p.theta2() == -1;
      Poly f = paired1 ? Poly::parse("(T^2-1)*(T^2-4)") : Poly::parse("(T-1)*(T-4)");
      Poly g = paired2 ? Poly::parse("T^2-9") : Poly::parse("T-9");
      QuotientRing qr(IdealFG(p, f, g));
      FinLieAlg fl(FinRing(qr.algebra()), ctx.cfg.n, rho);
      LieBasis basis = enumerate_basis(fl);
      Subspace zero(qr.dim()), proper = proper_ideal(qr), full(qr.dim());
      for (std::size_t k = 0; k < qr.dim(); ++k) full.insert(SparseVec::unit(k));
      json m{{"params", p.to_string()}, {"rho", rho}, {"ring_dim", qr.dim()}, {"lie_dim", basis.size()}};
      for (const auto& [name, j] : std::vector<std::pair<std::string, Subspace>>{
               {"zero", zero}, {"proper", proper}, {"full", full}}) {
        LieIdealSpec spec(fl, Flavor::Overline, j);
        ExtractReport rep = extract_ideal(fl, spec.elems());
        bool ok = rep.checks.all() && rep.j.equals(j);
        ctx.tally.record(ok, w0 + " extract " + name + ": " +
                                 (rep.checks.all() ? std::string("recovered J differs") : rep.checks.first_failure()));
        m[name] = {{"j_dim", j.dim()}, {"ideal_dim", spec.dim()}, {"bounds_coincide", rep.bounds_coincide}};
      }
      models.push_back(m);

      // Kernel of the quotient map against overline membership.
      TorusLie lie(TorusRing(p), ctx.cfg.n, rho);
      for (int c = 0; c < ctx.cases; ++c, ++index) {
        CaseRng rng = ctx.rng(index);
        IdealFG ideal(p, random_valid_poly(rng, p, false, 1), random_valid_poly(rng, p, true, 1));
        QuotientRing q(ideal);
        TorusMat a = lie.zero();
        if (c % 2 == 0) {
          // Built to lie in the overline ideal.
          QTorusElem y = random_ideal_elem(rng, ideal), z = random_ideal_elem(rng, ideal);
          a = lie.f(1, 1, y + qt_involution(y)) + lie.f(2, 2, z) - lie.f(1, 1, z);
          a += lie.f(1, 2, random_ideal_elem(rng, ideal)) + lie.g(1, 3, random_ideal_elem(rng, ideal)) +
               lie.h(2, 2, random_ideal_elem(rng, ideal));
        } else {
          a = random_g_element(rng, lie, 3, 2);
        }
        bool in_kernel = quotient_map(a, q).is_zero();
        bool member = ovl_membership(lie, a, q);
        ctx.tally.record(in_kernel == member, "case " + std::to_string(index) + " " + w0 + ": kernel " +
                                                  (in_kernel ? "yes" : "no") + ", membership " +
                                                  (member ? "yes" : "no"));
      }
    }
  ctx.details["models"] = models;
}

struct MatrixCase {
  TorusParams params;
  const char* f;
  const char* g;
  int rho;
};

const std::vector<MatrixCase>& classification_matrix() {
  static const std::vector<MatrixCase> cases{{TorusParams(-1, 1, 1), "T-4", "T-9", -1},
                                             {TorusParams(-1, -1, -1), "T-4", "T-9", 1},
                                             {TorusParams(1, 1, 1), "T-2", "T-3", -1},
                                             {TorusParams(1, 1, -1), "T-2", "T^2-9", -1},
                                             {TorusParams(1, -1, -1), "T^2-4", "T^2-9", 1}};
  return cases;
}

bool selected(const SuiteConfig& cfg, const TorusParams& p) {
  for (const auto& q : cfg.params)
    if (q == p) return true;
  return false;
}

void suite_classify(Ctx& ctx) {
  json rows = json::array();
  for (const auto& c : classification_matrix()) {
    if (!selected(ctx.cfg, c.params)) continue;
    auto rep = classify_verify(c.params, Poly::parse(c.f), Poly::parse(c.g), ctx.cfg.n, c.rho, ctx.cfg.dim_cap);
    ctx.tally.record(rep.verified, "params " + c.params.to_string() + ": " + rep.witness);
    rows.push_back(rep.to_json());
  }
  ctx.details["matrix"] = rows;
}

void suite_radical(Ctx& ctx) {
  static const std::vector<MatrixCase> cases{{TorusParams(1, 1, 1), "(T-2)^2", "T-3", -1},
                                             {TorusParams(1, 1, 1), "T-2", "(T-3)^2", -1},
                                             {TorusParams(1, 1, 1), "T-2", "T-3", -1},
                                             {TorusParams(1, 1, -1), "(T-2)^2", "T^2-9", 1},
                                             {TorusParams(-1, 1, 1), "(T-4)^2", "T-1", 1}};
  json rows = json::array(), skipped = json::array();
  for (const auto& c : cases) {
    if (!selected(ctx.cfg, c.params)) continue;
    RadicalReport rep;
    try {
      rep = radical_verify(c.params, Poly::parse(c.f), Poly::parse(c.g), ctx.cfg.n, c.rho, ctx.cfg.dim_cap);
    } catch (const SizeError& e) {
      // q = -1 doubles N, so at n = 3 the squared example is over the default cap
      skipped.push_back({{"params", c.params.to_string()}, {"f", c.f}, {"g", c.g}, {"reason", e.what()}});
      continue;
    }
    ctx.tally.record(rep.report.pass, "params " + c.params.to_string() + " f " + c.f + ": " + rep.report.witness);
    json j = rep.to_json();
    j["params"] = c.params.to_string();
    j["f"] = c.f;
    j["g"] = c.g;
    rows.push_back(j);
  }
  ctx.details["examples"] = rows;
  ctx.details["skipped"] = skipped;
}

void suite_minpoly(Ctx& ctx) {
  std::uint64_t index = 0;
  for (const auto& p : ctx.cfg.params)
    for (int c = 0; c < ctx.cases; ++c, ++index) {
      CaseRng rng = ctx.rng(index);
      Poly f = random_valid_poly(rng, p, false, rng.uniform(1, 2));
      Poly g = random_valid_poly(rng, p, true, rng.uniform(1, 2));
      MinimalPolys mp = minimal_polys(QuotientRing(IdealFG(p, f, g)));
      std::string w = "case " + std::to_string(index) + " params " + p.to_string() + " f " + f.to_string() + " g " +
                      g.to_string();
      ctx.tally.record(mp.checks.all(), w + ": " + mp.checks.first_failure());
      ctx.tally.record(mp.f == f.monic() && mp.g == g.monic(),
                       w + ": recovered " + mp.f.to_string() + ", " + mp.g.to_string());
    }
}

const std::map<std::string, std::pair<int, std::function<void(Ctx&)>>>& registry() {
  static const std::map<std::string, std::pair<int, std::function<void(Ctx&)>>> r{
      {"brackets", {200, suite_brackets}},   {"jacobi", {100, suite_jacobi}},
      {"involution", {100, suite_involution}}, {"grading", {100, suite_grading}},
      {"perfectness", {10, suite_perfectness}}, {"quotients", {20, suite_quotients}},
      {"crt", {10, suite_crt}},               {"isos", {1, suite_isos}},
      {"ideals", {50, suite_ideals}},         {"classify", {1, suite_classify}},
      {"radical", {1, suite_radical}},         {"minpoly", {10, suite_minpoly}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"brackets", "jacobi",  "involution", "grading",
                                              "perfectness", "quotients", "crt", "isos",
                                              "ideals",   "classify", "radical",    "minpoly"};
  return names;
}

int default_cases(const std::string& suite) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second.first;
}

SuiteResult run_suite(const SuiteConfig& config) {
  auto it = registry().find(config.suite);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + config.suite + "'");
  if (config.cases && *config.cases < 1) throw std::invalid_argument("cases must be positive");
  if (config.params.empty()) throw std::invalid_argument("no parameter triples selected");
  for (int rho : config.rhos)
    if (rho != 1 && rho != -1) throw std::invalid_argument("rho must be 1 or -1");
  if (config.n < 2) throw std::invalid_argument("n must be at least 2");

  Ctx ctx{config, config.cases ? *config.cases : it->second.first, {}};
  it->second.second(ctx);

  json params = json::array();
  for (const auto& p : config.params) params.push_back(p.to_string());
  json report{{"suite", config.suite},
              {"config",
               {{"params", params}, {"n", config.n}, {"rho", config.rhos}, {"seed", config.seed}, {"cases", ctx.cases}}},
              {"status", ctx.tally.pass() ? "pass" : "fail"}};
  ctx.tally.write(report);
  report["details"] = ctx.details;
  return {ctx.tally.pass(), report};
}

}  // namespace qtlie
