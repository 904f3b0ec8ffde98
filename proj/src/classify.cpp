#include "qtlie/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "qtlie/errors.hpp"

namespace qtlie {

namespace {

// Σ v_t [x_p, x_t]
SparseVec bracket_unit(const FinLie& lie, std::size_t p, const SparseVec& v) {
  SparseVec out;
  for (const auto& [t, c] : v.entries()) out.axpy(c, lie.bracket(p, t));
  return out;
}

std::string rho_text(int rho) { return rho == 1 ? "1" : "-1"; }

}  // namespace

// --- FinLie ------------------------------------------------------------------

FinLie::FinLie(std::vector<std::string> labels, std::vector<SparseVec> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t d = dim();
  if (table_.size() != d * d) throw std::invalid_argument("FinLie: table size is not dim^2");
  for (const auto& v : table_)
    if (!v.is_zero() && v.entries().back().first >= d)
      throw std::invalid_argument("FinLie: coordinate beyond dimension");
  for (std::size_t p = 0; p < d; ++p) {
    if (!bracket(p, p).is_zero())
      throw std::invalid_argument("FinLie: [x, x] != 0 for " + labels_[p]);
    for (std::size_t q = p + 1; q < d; ++q)
      if (!(bracket(p, q) + bracket(q, p)).is_zero())
        throw std::invalid_argument("FinLie: not antisymmetric at " + labels_[p] + ", " + labels_[q]);
  }
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p + 1; q < d; ++q)
      for (std::size_t r = q + 1; r < d; ++r) {
        SparseVec j = bracket_unit(*this, p, bracket(q, r));
        j = j + bracket_unit(*this, q, bracket(r, p));
        j = j + bracket_unit(*this, r, bracket(p, q));
        if (!j.is_zero())
          throw std::invalid_argument("FinLie: Jacobi fails at " + labels_[p] + ", " + labels_[q] + ", " +
                                      labels_[r]);
      }
}

FinLie FinLie::from_basis(const LieBasis& basis) {
  const std::size_t d = basis.size();
  const auto& lie = basis.lie();
  const auto& elems = basis.elems();
  std::vector<SparseVec> table(d * d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p + 1; q < d; ++q) {
      auto coords = basis.coordinates(lie.bracket(elems[p], elems[q]));
      if (!coords)
        throw std::logic_error("FinLie: bracket of " + basis.labels()[p] + " and " + basis.labels()[q] +
                               " leaves the span");
      table[q * d + p] = coords->scaled(GaussRat(-1));
      table[p * d + q] = std::move(*coords);
    }
  return FinLie(basis.labels(), std::move(table));
}

FinLie FinLie::abelian(std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim; ++k) labels.push_back("x" + std::to_string(k + 1));
  return FinLie(std::move(labels), std::vector<SparseVec>(dim * dim));
}

SparseVec FinLie::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [p, a] : x.entries())
    for (const auto& [q, b] : y.entries()) out.axpy(a * b, bracket(p, q));
  return out;
}

FinLie direct_sum(const FinLie& a, const FinLie& b) {
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
  std::vector<SparseVec> table(d * d);
  for (std::size_t p = 0; p < da; ++p)
    for (std::size_t q = 0; q < da; ++q) table[p * d + q] = a.bracket(p, q);
  for (std::size_t p = 0; p < db; ++p)
    for (std::size_t q = 0; q < db; ++q) {
      SparseVec shifted;
      for (const auto& [t, c] : b.bracket(p, q).entries()) shifted.push_back(t + da, c);
      table[(p + da) * d + q + da] = std::move(shifted);
    }
  return FinLie(std::move(labels), std::move(table));
}

Subspace bracket_span(const FinLie& lie, const Subspace& a, const Subspace& b) {
  Subspace out(lie.dim());
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) out.insert(lie.bracket(x, y));
  return out;
}

bool is_lie_ideal(const FinLie& lie, const Subspace& s) {
  for (const auto& v : s.basis())
    for (std::size_t p = 0; p < lie.dim(); ++p)
      if (!s.contains(bracket_unit(lie, p, v))) return false;
  return true;
}

FinLie quotient(const FinLie& lie, const Subspace& ideal) {
  if (!is_lie_ideal(lie, ideal)) throw std::invalid_argument("quotient: not an ideal");
  std::vector<std::size_t> keep;
  std::vector<std::size_t> new_index(lie.dim(), 0);
  for (std::size_t p = 0; p < lie.dim(); ++p)
    if (!ideal.is_pivot(p)) {
      new_index[p] = keep.size();
      keep.push_back(p);
    }
  const std::size_t d = keep.size();
  std::vector<std::string> labels;
  for (auto p : keep) labels.push_back(lie.labels()[p]);
  std::vector<SparseVec> table(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      SparseVec red = ideal.reduce(lie.bracket(keep[a], keep[b]));
      SparseVec v;
      for (const auto& [t, c] : red.entries()) v.push_back(new_index[t], c);
      table[a * d + b] = std::move(v);
    }
  return FinLie(std::move(labels), std::move(table));
}

KillingRank killing_rank(const FinLie& lie) {
  const std::size_t d = lie.dim();
  KillingRank out;
  // κ(p,q) = Σ_{s,t} c_{ps}^t c_{qt}^s; lookup[q][s*d+t] points at c_{qt}^s.
  std::vector<std::vector<const GaussRat*>> lookup(d, std::vector<const GaussRat*>(d * d, nullptr));
  for (std::size_t q = 0; q < d; ++q)
    for (std::size_t t = 0; t < d; ++t)
      for (const auto& [s, c] : lie.bracket(q, t).entries()) lookup[q][s * d + t] = &c;
  std::vector<std::vector<GaussRat>> gram(d, std::vector<GaussRat>(d));
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p; q < d; ++q) {
      GaussRat sum;
      for (std::size_t s = 0; s < d; ++s)
        for (const auto& [t, c] : lie.bracket(p, s).entries())
          if (const GaussRat* other = lookup[q][s * d + t]) sum += c * *other;
      gram[p][q] = sum;
      gram[q][p] = sum;
    }
  std::vector<SparseVec> rows;
  for (const auto& row : gram) rows.push_back(SparseVec::from_dense(row));
  out.rank = rank_of(d, rows);
  out.semisimple = out.rank == d;

  // x is central iff ad x = 0; ad x_p flattened at s*d + t.
  std::vector<SparseVec> ads;
  for (std::size_t p = 0; p < d; ++p) {
    SparseVec v;
    for (std::size_t s = 0; s < d; ++s)
      for (const auto& [t, c] : lie.bracket(p, s).entries()) v.push_back(s * d + t, c);
    ads.push_back(std::move(v));
  }
  out.center_dim = kernel_of(d * d, ads).size();
  return out;
}

std::size_t dim_cap() {
  const char* env = std::getenv("QTLIE_DIM_CAP");
  if (env == nullptr || *env == '\0') return 120;
  try {
    std::size_t used = 0;
    long long v = std::stoll(env, &used);
    if (used != std::string(env).size() || v <= 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("QTLIE_DIM_CAP must be a positive integer, got '" + std::string(env) + "'");
  }
}

// --- classification ----------------------------------------------------------

nlohmann::json ClassificationReport::to_json() const {
  using nlohmann::json;
  json j{{"params", params.to_string()},
         {"f", f.is_zero() ? json(nullptr) : json(f.to_string())},
         {"g", g.is_zero() ? json(nullptr) : json(g.to_string())},
         {"n", n},
         {"rho", rho},
         {"case", lemma_case},
         {"family", family},
         {"factor", factor},
         {"N", big_n},
         {"k", k},
         {"r", r},
         {"s", s},
         {"factor_dim", factor_dim},
         {"expected_dim", expected_dim},
         {"verified", verified}};
  if (observed)
    j["observed"] = json{{"dim", observed->dim},
                         {"killing_rank", observed->killing_rank},
                         {"center_dim", observed->center_dim},
                         {"factor_count", observed->factor_count}};
  else
    j["observed"] = nullptr;
  if (!witness.empty()) j["witness"] = witness;
  for (const auto& [key, v] : extra.items()) j[key] = v;
  return j;
}

namespace {

int case_of(const TorusParams& p) {
  if (p.q() == -1) return p.theta1() == 1 ? 1 : 2;
  if (p.theta1() == 1) return p.theta2() == 1 ? 3 : 4;
  return 5;
}

// Fills family, N, k and dimensions from (case, r, s).
void fill_shape(ClassificationReport& rep, std::size_t r, std::size_t s) {
  const std::size_t n = static_cast<std::size_t>(rep.n);
  rep.r = r;
  rep.s = s;
  int rho_prime = rep.rho;
  switch (rep.lemma_case) {
    case 1:
      rep.big_n = 2 * n;
      rep.k = r * s;
      break;
    case 2:
      rep.big_n = 2 * n;
      rep.k = r * s;
      rho_prime = -rep.rho;
      break;
    case 3:
      rep.big_n = n;
      rep.k = r * s;
      break;
    case 4:
      rep.big_n = n;
      rep.k = r * s;
      break;
    default:
      rep.big_n = n;
      rep.k = 2 * r * s;
      break;
  }
  if (rep.lemma_case <= 3) {
    rep.family = rho_prime == -1 ? "C-type" : "D-type";
    rep.factor = "g_{" + std::to_string(2 * rep.big_n) + "," + rho_text(rho_prime) + "}";
    rep.factor_dim = graded_dim(rep.big_n, rho_prime);
  } else {
    rep.family = "A-type";
    rep.factor = "sl_" + std::to_string(2 * rep.big_n);
    rep.factor_dim = 4 * rep.big_n * rep.big_n - 1;
  }
  rep.expected_dim = rep.k * rep.factor_dim;
}

void check_rho(int n, int rho) {
  if (n < 2) throw std::invalid_argument("classify: n must be at least 2");
  if (rho != 1 && rho != -1) throw std::invalid_argument("classify: rho must be 1 or -1");
}

}  // namespace

ClassificationReport classify(const TorusParams& params, const Poly& f, const Poly& g, int n, int rho) {
  check_rho(n, rho);
  const int m = params.m();
  if (f.is_zero() || g.is_zero() || f.deg() == 0 || g.deg() == 0)
    throw std::invalid_argument("classify: hypothesis deg f deg g > 0 violated");
  if ((f.eval(GaussRat()) * g.eval(GaussRat())).is_zero())
    throw std::invalid_argument("classify: hypothesis f(0)g(0) != 0 violated");
  if (!poly_is_squarefree(f)) throw std::invalid_argument("classify: hypothesis (f, f') = 1 violated");
  if (!poly_is_squarefree(g)) throw std::invalid_argument("classify: hypothesis (g, g') = 1 violated");
  if (!poly_symmetry_check(f, params.theta1(), m))
    throw std::invalid_argument("classify: hypothesis f(theta1^m T) = f(T) violated");
  if (!poly_symmetry_check(g, params.theta2(), m))
    throw std::invalid_argument("classify: hypothesis g(theta2^m T) = g(T) violated");

  ClassificationReport rep(params);
  rep.f = f;
  rep.g = g;
  rep.n = n;
  rep.rho = rho;
  rep.lemma_case = case_of(params);
  std::size_t r = f.deg(), s = g.deg();
  // The symmetry conditions force even degree where θ^m = -1.
  if (params.m() == 1 && params.theta1() == -1) r /= 2;
  if (params.m() == 1 && params.theta2() == -1) s /= 2;
  fill_shape(rep, r, s);
  return rep;
}

std::vector<SymmetricFactor> symmetric_factors(const Poly& f, int theta, int m) {
  auto roots = poly_gaussian_roots(f);
  if (roots.size() != f.deg())
    throw UnsupportedError("symmetric_factors: " + f.to_string() + " does not split over Q(i)");
  std::vector<SymmetricFactor> out;
  if (m == 2) {
    for (const auto& a : roots) {
      auto sq = a.sqrt();
      if (!sq) throw UnsupportedError("symmetric_factors: root " + a.to_string() + " has no square root in Q(i)");
      out.push_back({Poly::linear(a), *sq});
    }
  } else if (theta == 1) {
    for (const auto& a : roots) out.push_back({Poly::linear(a), a});
  } else {
    // Roots come in pairs ±a.
    std::vector<bool> used(roots.size(), false);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (used[k]) continue;
      used[k] = true;
      std::size_t partner = k + 1;
      while (partner < roots.size() && (used[partner] || roots[partner] != -roots[k])) ++partner;
      if (partner == roots.size())
        throw std::invalid_argument("symmetric_factors: root " + roots[k].to_string() + " has no partner");
      used[partner] = true;
      out.push_back({Poly::linear(roots[k]) * Poly::linear(-roots[k]), roots[k]});
    }
  }
  return out;
}

namespace {

Poly product_of(const std::vector<SymmetricFactor>& fs, std::size_t from, std::size_t to) {
  Poly p = Poly::constant(GaussRat(1));
  for (std::size_t k = from; k < to; ++k) p = p * fs[k].factor;
  return p;
}

std::size_t lie_factors_over(const FinAlg& target) {
  // g_{2n,ρ} over CK_4 is sl_{2n} ⊕ sl_{2n}; over the other named models it is simple.
  return target.provenance() == Provenance::KleinGroupAlgebra ? 2 : 1;
}

struct CrtWalker {
  const TorusParams& params;
  FactorCount& out;

  // Splits C_q/J(Π fs[lo..hi), Π gs[glo..ghi)) along the first variable, then the second.
  void walk(const std::vector<SymmetricFactor>& fs, std::size_t lo, std::size_t hi,
            const std::vector<SymmetricFactor>& gs, std::size_t glo, std::size_t ghi) {
    const Poly g = product_of(gs, glo, ghi);
    if (hi - lo > 1) {
      std::size_t mid = lo + (hi - lo) / 2;
      auto split = crt_split(params, product_of(fs, lo, mid), product_of(fs, mid, hi), g, SplitVariable::First);
      tag(split.checks, "split f at " + std::to_string(mid));
      walk(fs, lo, mid, gs, glo, ghi);
      walk(fs, mid, hi, gs, glo, ghi);
      return;
    }
    if (ghi - glo > 1) {
      std::size_t mid = glo + (ghi - glo) / 2;
      auto split = crt_split(params, product_of(gs, glo, mid), product_of(gs, mid, ghi), product_of(fs, lo, hi),
                             SplitVariable::Second);
      tag(split.checks, "split g at " + std::to_string(mid));
      walk(fs, lo, hi, gs, glo, mid);
      walk(fs, lo, hi, gs, mid, ghi);
      return;
    }
    const auto& fa = fs[lo];
    const auto& gb = gs[glo];
    auto iso = named_quotient_iso(params, fa.alpha, gb.alpha);
    IdealFG leaf_ideal = ideal_alpha_beta(params, fa.alpha, gb.alpha);
    std::string leaf = "leaf (" + fa.alpha.to_string() + ", " + gb.alpha.to_string() + ")";
    out.checks.add(leaf + ": factors match J(alpha, beta)",
                   leaf_ideal.f().monic() == fa.factor.monic() && leaf_ideal.g().monic() == gb.factor.monic());
    tag(iso.checks, leaf);
    std::size_t c = lie_factors_over(*iso.target);
    out.count += c;
    ++out.leaves;
    out.leaf_details.push_back({{"alpha", fa.alpha.to_string()},
                                {"beta", gb.alpha.to_string()},
                                {"case", iso.case_number},
                                {"model", provenance_name(iso.target->provenance())},
                                {"dim", iso.source.dim()},
                                {"factors", c}});
  }

  void tag(const CheckList& checks, const std::string& where) {
    for (const auto& [name, ok] : checks.items) out.checks.add(where + ": " + name, ok);
  }
};

}  // namespace

FactorCount crt_factor_count(const TorusParams& params, const Poly& f, const Poly& g) {
  const int m = params.m();
  auto fs = symmetric_factors(f, params.theta1(), m);
  auto gs = symmetric_factors(g, params.theta2(), m);
  FactorCount out;
  CrtWalker walker{params, out};
  walker.walk(fs, 0, fs.size(), gs, 0, gs.size());
  std::size_t leaf_dims = 0;
  for (const auto& leaf : out.leaf_details) leaf_dims += leaf["dim"].get<std::size_t>();
  out.checks.add("leaf dimensions add up", leaf_dims == QuotientRing(IdealFG(params, f, g)).dim());
  return out;
}

ClassificationReport classify_verify(const TorusParams& params, const Poly& f, const Poly& g, int n, int rho,
                                     std::optional<std::size_t> cap) {
  ClassificationReport rep = classify(params, f, g, n, rho);
  const std::size_t limit = cap ? *cap : dim_cap();
  if (rep.expected_dim > limit)
    throw SizeError("classify_verify: predicted dimension " + std::to_string(rep.expected_dim) +
                    " exceeds the cap " + std::to_string(limit));
  QuotientRing qr(IdealFG(params, f, g));
  FinLieAlg lie(FinRing(qr.algebra()), n, rho);
  LieBasis basis = enumerate_basis(lie);
  if (basis.size() > limit)
    throw SizeError("classify_verify: dimension " + std::to_string(basis.size()) + " exceeds the cap " +
                    std::to_string(limit));
  FinLie table = FinLie::from_basis(basis);
  KillingRank kr = killing_rank(table);
  FactorCount fc = crt_factor_count(params, f, g);

  rep.observed = ClassificationReport::Observed{basis.size(), kr.rank, kr.center_dim, fc.count};
  Report check("classification of g_{2n,rho}(C_q/J(f,g))");
  check.check(basis.size() == rep.expected_dim, "dimension " + std::to_string(basis.size()) +
                                                    " != expected " + std::to_string(rep.expected_dim));
  check.check(kr.semisimple, "Killing rank " + std::to_string(kr.rank) + " < dimension");
  check.check(kr.center_dim == 0, "center has dimension " + std::to_string(kr.center_dim));
  check.absorb(fc.checks, "crt: ");
  check.check(fc.count == rep.k, "CRT factor count " + std::to_string(fc.count) + " != k " + std::to_string(rep.k));
  rep.verified = check.pass;
  rep.witness = check.witness;
  rep.extra["ring_dim"] = qr.dim();
  rep.extra["leaves"] = fc.leaf_details;
  return rep;
}

// --- radical -----------------------------------------------------------------

std::size_t squarefree_exponent(const Poly& f) {
  Poly f0 = poly_squarefree_part(f);
  Poly power = f0;
  std::size_t k = 1;
  while (!poly_divides(f, power)) {
    power = power * f0;
    ++k;
  }
  return k;
}

nlohmann::json RadicalReport::to_json() const {
  nlohmann::json j = report.to_json();
  j["f0"] = f0.to_string();
  j["g0"] = g0.to_string();
  j["lie_dim"] = lie_dim;
  j["radical_dim"] = radical_dim;
  j["nilpotency_index"] = nilpotency_index;
  j["index_bound"] = index_bound;
  j["quotient_dim"] = quotient_dim;
  j["quotient_killing_rank"] = quotient_killing_rank;
  j["expected_quotient_dim"] = expected_quotient_dim;
  return j;
}

RadicalReport radical_verify(const TorusParams& params, const Poly& f, const Poly& g, int n, int rho,
                             std::optional<std::size_t> cap) {
  check_rho(n, rho);
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("radical_verify: hypothesis deg f deg g > 0 violated");
  RadicalReport out;
  out.report = Report("radical of g_{2n,rho}(C_q/J(f,g))");
  out.f0 = poly_squarefree_part(f);
  out.g0 = poly_squarefree_part(g);
  // The semisimple quotient is the classified one; this also checks the
  // remaining hypotheses on (f0, g0).
  ClassificationReport semisimple = classify(params, out.f0, out.g0, n, rho);
  out.expected_quotient_dim = semisimple.expected_dim;

  const std::size_t limit = cap ? *cap : dim_cap();
  QuotientRing qr(IdealFG(params, f, g));
  const FinAlg& alg = *qr.algebra();
  const std::size_t dr = qr.dim();
  FinLieAlg lie(FinRing(qr.algebra()), n, rho);
  LieBasis basis = enumerate_basis(lie);
  const std::size_t d = basis.size();
  out.lie_dim = d;
  if (d > limit)
    throw SizeError("radical_verify: dimension " + std::to_string(d) + " exceeds the cap " + std::to_string(limit));
  FinLie table = FinLie::from_basis(basis);

  // K: the image of J(f0, g0) in C_q/J(f, g).
  Subspace k_ideal = ideal_generated(
      alg, {fin_eval_poly(out.f0, qr.t1_m()), fin_eval_poly(out.g0, qr.t2_m())});
  out.report.check(is_involutive(alg, k_ideal), "image of J(f0,g0) is not involutive");

  // Radical: matrices with every entry in K.
  const std::size_t blocks = static_cast<std::size_t>(4 * n * n);
  Subspace stacked(blocks * dr);
  for (std::size_t b = 0; b < blocks; ++b)
    for (const auto& v : k_ideal.basis()) {
      SparseVec shifted;
      for (const auto& [t, c] : v.entries()) shifted.push_back(b * dr + t, c);
      stacked.insert(shifted);
    }
  std::vector<SparseVec> flats;
  for (const auto& e : basis.elems()) flats.push_back(basis.flat(e));
  Subspace radical = preimage(d, flats, stacked);
  out.radical_dim = radical.dim();

  // Same subspace built from the overline ideal of K.
  LieIdealSpec ovl(lie, Flavor::Overline, k_ideal);
  Subspace ovl_coords(d);
  for (const auto& e : ovl.elems()) {
    auto c = basis.coordinates(e);
    out.report.check(c.has_value(), "overline ideal element outside the Lie algebra");
    if (c) ovl_coords.insert(*c);
  }
  out.report.check(ovl_coords.equals(radical), "kernel differs from the overline ideal of J(f0,g0)");

  out.report.check(is_lie_ideal(table, radical), "radical candidate is not an ideal");
  if (is_lie_ideal(table, radical)) {
    FinLie q = quotient(table, radical);
    KillingRank kr = killing_rank(q);
    out.quotient_dim = q.dim();
    out.quotient_killing_rank = kr.rank;
    out.report.check(kr.semisimple, "quotient is not semisimple (Killing rank " + std::to_string(kr.rank) + " of " +
                                        std::to_string(q.dim()) + ")");
  }
  out.report.check(out.quotient_dim == out.expected_quotient_dim,
                   "quotient dimension " + std::to_string(out.quotient_dim) + " != classified " +
                       std::to_string(out.expected_quotient_dim));

  // R^1 = R, R^{k+1} = [R, R^k]
  out.index_bound = squarefree_exponent(f) + squarefree_exponent(g) + 1;
  Subspace power = radical;
  std::size_t k = 1;
  while (power.dim() > 0 && k <= out.index_bound) {
    Subspace next = bracket_span(table, radical, power);
    if (next.dim() == power.dim()) break;
    power = std::move(next);
    ++k;
  }
  out.report.check(power.dim() == 0, "radical is not nilpotent within the bound");
  out.nilpotency_index = power.dim() == 0 ? k : 0;
  out.report.check(out.nilpotency_index <= out.index_bound, "nilpotency index exceeds the bound");
  return out;
}

// --- minimal polynomials ---------------------------------------------------

Poly minimal_polynomial(const FinAlgElem& x) {
  const std::size_t dim = x.algebra()->dim();
  Subspace powers(dim);
  FinAlgElem p = FinAlgElem::one(x.algebra());
  for (std::size_t k = 0; k <= dim; ++k) {
    SparseVec v = p.to_sparse();
    if (auto coords = powers.coordinates(v)) {
      // x^k = Σ c_j x^j; insertion index j is the power j.
      std::vector<GaussRat> coeffs(k + 1);
      coeffs[k] = GaussRat(1);
      for (const auto& [j, c] : coords->entries()) coeffs[j] -= c;
      return Poly(std::move(coeffs));
    }
    powers.insert(v);
    p = p * x;
  }
  throw std::logic_error("minimal_polynomial: no relation among the first dim+1 powers");
}

MinimalPolys minimal_polys(const QuotientRing& a) {
  const auto& params = a.ideal().params();
  MinimalPolys out{minimal_polynomial(a.t1_m()), minimal_polynomial(a.t2_m()), {}};
  out.checks.add("f~(0) != 0", !out.f.eval(GaussRat()).is_zero());
  out.checks.add("g~(0) != 0", !out.g.eval(GaussRat()).is_zero());
  out.checks.add("f~(theta1^m T) = f~(T)", poly_symmetry_check(out.f, params.theta1(), params.m()));
  out.checks.add("g~(theta2^m T) = g~(T)", poly_symmetry_check(out.g, params.theta2(), params.m()));
  out.checks.add("f~ divides f", poly_divides(out.f, a.ideal().f()));
  out.checks.add("g~ divides g", poly_divides(out.g, a.ideal().g()));
  return out;
}

// --- catalog -----------------------------------------------------------------

std::vector<ClassificationReport> irrep_quotient_catalog(const TorusParams& params, int n, int rho,
                                                         std::size_t degree_bound) {
  if (n < 3) throw UnsupportedError("irrep_quotient_catalog: needs n >= 3");
  check_rho(n, rho);
  std::vector<ClassificationReport> out;
  ClassificationReport trivial(params);
  trivial.n = n;
  trivial.rho = rho;
  trivial.family = "trivial";
  trivial.factor = "0";
  out.push_back(trivial);

  // Representative squarefree symmetric polynomials of each degree: roots are
  // squares 4, 9, 16, ... so that the q = -1 models stay over Q(i).
  auto representative = [&](std::size_t deg, int theta) -> std::optional<Poly> {
    Poly p = Poly::constant(GaussRat(1));
    if (params.m() == 1 && theta == -1) {
      if (deg % 2 != 0) return std::nullopt;
      for (std::size_t k = 0; k < deg / 2; ++k) {
        GaussRat a(static_cast<std::int64_t>(k + 2));
        p = p * Poly({-(a * a), GaussRat(0), GaussRat(1)});
      }
    } else {
      for (std::size_t k = 0; k < deg; ++k) {
        GaussRat a(static_cast<std::int64_t>(k + 2));
        p = p * Poly::linear(a * a);
      }
    }
    return p;
  };

  std::set<std::size_t> seen;
  std::vector<ClassificationReport> shapes;
  for (std::size_t df = 1; df <= degree_bound; ++df)
    for (std::size_t dg = 1; dg <= degree_bound; ++dg) {
      auto f = representative(df, params.theta1());
      auto g = representative(dg, params.theta2());
      if (!f || !g) continue;
      ClassificationReport rep = classify(params, *f, *g, n, rho);
      if (seen.insert(rep.k).second) shapes.push_back(rep);
    }
  std::stable_sort(shapes.begin(), shapes.end(),
                   [](const ClassificationReport& a, const ClassificationReport& b) { return a.k < b.k; });
  out.insert(out.end(), shapes.begin(), shapes.end());
  return out;
}

}  // namespace qtlie
