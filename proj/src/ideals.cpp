#include "qtlie/ideals.hpp"

#include <deque>
#include <stdexcept>

#include "qtlie/errors.hpp"

namespace qtlie {

namespace {

FinAlgElem elem_of(const FinAlgPtr& alg, const SparseVec& v) { return FinAlgElem::from_sparse(alg, v); }

SparseVec product_vec(const FinAlgPtr& alg, const SparseVec& x, std::size_t k) {
  return (elem_of(alg, x) * FinAlgElem::basis(alg, k)).to_sparse();
}

SparseVec left_product_vec(const FinAlgPtr& alg, std::size_t k, const SparseVec& x) {
  return (FinAlgElem::basis(alg, k) * elem_of(alg, x)).to_sparse();
}

// FinAlg helpers below take `const FinAlg&` but elements need the shared
// pointer; wrap without ownership.
FinAlgPtr borrow(const FinAlg& alg) { return FinAlgPtr(&alg, [](const FinAlg*) {}); }

void require_same_params(const TorusParams& a, const TorusParams& b, const char* where) {
  if (!(a == b)) throw std::invalid_argument(std::string(where) + ": parameters " + a.to_string() +
                                             " and " + b.to_string() + " differ");
}

}  // namespace

FinLieAlg quotient_lie(const TorusLie& lie, const QuotientRing& quotient) {
  require_same_params(lie.ring().params(), quotient.ideal().params(), "quotient_lie");
  return FinLieAlg(FinRing(quotient.algebra()), lie.n(), lie.rho());
}

FinMat quotient_map(const TorusMat& a, const QuotientRing& quotient) {
  FinMat out(a.n());
  for (const auto& [pos, v] : a.entries()) {
    require_same_params(v.params(), quotient.ideal().params(), "quotient_map");
    out.add(pos.first, pos.second, quotient.project(v));
  }
  return out;
}

FinMat quotient_map(const TorusMat& a, const IdealFG& ideal) { return quotient_map(a, QuotientRing(ideal)); }

bool ovl_membership(const TorusLie& lie, const TorusMat& a, const QuotientRing& quotient) {
  const TorusParams& p = lie.ring().params();
  require_same_params(p, quotient.ideal().params(), "ovl_membership");
  for (const auto& [pos, v] : a.entries()) require_same_params(p, v.params(), "ovl_membership");
  if (!lie.lrho_check(a)) throw std::invalid_argument("ovl_membership: matrix is not in L_rho");
  const int n = lie.n();
  auto in_j = [&](const QTorusElem& x) { return quotient.project(x).is_zero(); };

  // Off-diagonal blocks carry the f_ij, g_ij, h_ij coefficients directly;
  // the bottom-right block is determined by the top-left one.
  for (const auto& [pos, v] : a.entries()) {
    auto [r, c] = pos;
    if (r == c || (r >= n && c >= n)) continue;
    if (!in_j(v)) return false;
  }
  // Σ f_ii(a_i) = f_11(Σ a_i) + Σ_{i>=2} (f_ii - f_11)(a_i)
  QTorusElem total(p);
  for (int i = 0; i < n; ++i) {
    const QTorusElem* ai = a.at(i, i);
    if (ai == nullptr) continue;
    total += *ai;
    if (i > 0 && !in_j(*ai)) return false;
  }
  return in_j(total) && lie.ring().in_commutator(total - qt_involution(total));
}

bool ovl_membership(const TorusLie& lie, const TorusMat& a, const IdealFG& ideal) {
  return ovl_membership(lie, a, QuotientRing(ideal));
}

Subspace preimage(std::size_t dim, const std::vector<SparseVec>& images, const Subspace& target) {
  std::vector<SparseVec> cols = images;
  for (const auto& b : target.basis()) cols.push_back(b);
  Subspace out(dim);
  for (const auto& k : kernel_of(target.ambient_dim(), cols)) {
    SparseVec x;
    for (const auto& [i, c] : k.entries())
      if (i < dim) x.push_back(i, c);
    out.insert(x);
  }
  return out;
}

bool is_two_sided_ideal(const FinAlg& alg, const Subspace& j) {
  auto a = borrow(alg);
  for (const auto& v : j.basis())
    for (std::size_t k = 0; k < alg.dim(); ++k)
      if (!j.contains(product_vec(a, v, k)) || !j.contains(left_product_vec(a, k, v))) return false;
  return true;
}

bool is_involutive(const FinAlg& alg, const Subspace& j) {
  auto a = borrow(alg);
  for (const auto& v : j.basis())
    if (!j.contains(fin_involution(elem_of(a, v)).to_sparse())) return false;
  return true;
}

Subspace trace_space(const FinAlg& alg) { return sum_of(symmetric_part(alg), commutator_span(alg)); }

Subspace plus_part(const FinAlg& alg, const Subspace& j) {
  auto a = borrow(alg);
  Subspace out(alg.dim());
  for (const auto& v : j.basis()) {
    FinAlgElem x = elem_of(a, v);
    out.insert((x + fin_involution(x)).to_sparse());
  }
  return out;
}

Subspace commutator_with(const FinAlg& alg, const Subspace& j) {
  auto a = borrow(alg);
  Subspace out(alg.dim());
  for (const auto& v : j.basis())
    for (std::size_t k = 0; k < alg.dim(); ++k)
      out.insert(fin_commutator(elem_of(a, v), FinAlgElem::basis(a, k)).to_sparse());
  return out;
}

Subspace hat_ideal(const FinAlg& alg, const Subspace& j) {
  auto a = borrow(alg);
  const std::size_t d = alg.dim();
  // a -> ([a,e_0], ..., [a,e_{d-1}]) against J^d
  Subspace target(d * d);
  for (std::size_t s = 0; s < d; ++s)
    for (const auto& v : j.basis()) {
      SparseVec shifted;
      for (const auto& [k, c] : v.entries()) shifted.push_back(s * d + k, c);
      target.insert(shifted);
    }
  std::vector<SparseVec> images;
  for (std::size_t i = 0; i < d; ++i) {
    SparseVec img;
    for (std::size_t s = 0; s < d; ++s) {
      SparseVec c = fin_commutator(FinAlgElem::basis(a, i), FinAlgElem::basis(a, s)).to_sparse();
      for (const auto& [k, x] : c.entries()) img.push_back(s * d + k, x);
    }
    images.push_back(img);
  }
  return preimage(d, images, target);
}

Subspace hat_plus(const FinAlg& alg, const Subspace& j) {
  auto a = borrow(alg);
  std::vector<SparseVec> images;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    FinAlgElem e = FinAlgElem::basis(a, i);
    images.push_back((e + fin_involution(e)).to_sparse());
  }
  return preimage(alg.dim(), images, j);
}

Subspace center_of(const FinAlg& alg) { return hat_ideal(alg, Subspace(alg.dim())); }

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Overline: return "overline";
    case Flavor::Underline: return "underline";
    case Flavor::Tilde: return "tilde";
  }
  return "?";
}

LieIdealSpec::LieIdealSpec(FinLieAlg ambient, Flavor flavor, Subspace j)
    : ambient_(std::move(ambient)), flavor_(flavor), j_(std::move(j)) {
  const FinAlg& alg = *ambient_.ring().algebra();
  const FinAlgPtr& ptr = ambient_.ring().algebra();
  const std::size_t d = alg.dim();
  if (j_.ambient_dim() != d) throw std::invalid_argument("LieIdealSpec: J lives in the wrong space");
  if (!is_two_sided_ideal(alg, j_)) throw std::invalid_argument("LieIdealSpec: J is not a two-sided ideal");
  if (!is_involutive(alg, j_)) throw std::invalid_argument("LieIdealSpec: J is not closed under the involution");

  const int n = ambient_.n();
  auto push = [&](const FinMat& m) {
    if (!m.is_zero()) elems_.push_back(m);
  };
  Subspace diag;
  switch (flavor_) {
    case Flavor::Overline: diag = intersect(trace_space(alg), j_); break;
    case Flavor::Underline: diag = sum_of(plus_part(alg, j_), commutator_with(alg, j_)); break;
    case Flavor::Tilde: diag = intersect(intersect(trace_space(alg), hat_ideal(alg, j_)), hat_plus(alg, j_)); break;
  }
  for (const auto& v : diag.basis()) {
    FinAlgElem x = elem_of(ptr, v);
    if (flavor_ == Flavor::Tilde) {
      FinMat m = ambient_.zero();
      for (int i = 1; i <= n; ++i) m += ambient_.f(i, i, x);
      push(m);
    } else {
      push(ambient_.f(1, 1, x));
    }
  }
  for (const auto& v : j_.basis()) {
    FinAlgElem x = elem_of(ptr, v);
    for (int i = 2; i <= n; ++i) push(ambient_.f(i, i, x) - ambient_.f(1, 1, x));
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        if (i != k) push(ambient_.f(i, k, x));
        if (i <= k) {
          push(ambient_.g(i, k, x));
          push(ambient_.h(i, k, x));
        }
      }
  }
  const std::size_t side = 2 * static_cast<std::size_t>(n);
  span_ = Subspace(side * side * d);
  for (const auto& e : elems_) span_.insert(flatten(e, d));
}

bool flavored_membership(const FinMat& a, const LieIdealSpec& spec) {
  if (a.n() != spec.ambient().n()) throw std::invalid_argument("flavored_membership: size mismatch");
  return spec.span().contains(flatten(a, spec.ambient().ring().dim()));
}

bool flavored_membership(const TorusLie& lie, const TorusMat& a, const IdealFG& ideal, Flavor flavor) {
  if (flavor != Flavor::Overline)
    throw UnsupportedError(std::string("flavored_membership: the ") + flavor_name(flavor) +
                           " ideal is not computable over the quantum torus");
  return ovl_membership(lie, a, ideal);
}

ClosureResult ideal_closure(const LieBasis& basis, const std::vector<FinMat>& seeds) {
  const FinLieAlg& lie = basis.lie();
  ClosureResult r{Subspace(basis.ambient_dim()), {}};
  std::deque<FinMat> queue;
  auto offer = [&](const FinMat& m) {
    if (m.is_zero() || !r.span.insert(basis.flat(m))) return;
    r.elems.push_back(m);
    queue.push_back(m);
  };
  for (const auto& s : seeds) offer(s);
  while (!queue.empty()) {
    FinMat x = std::move(queue.front());
    queue.pop_front();
    for (const auto& b : basis.elems()) offer(lie.bracket(b, x));
  }
  return r;
}

ExtractReport extract_ideal(const FinLieAlg& lie, const std::vector<FinMat>& span) {
  const int n = lie.n();
  if (n < 3) throw UnsupportedError("extract_ideal: needs n >= 3");
  const FinAlg& alg = *lie.ring().algebra();
  const std::size_t d = alg.dim();
  const std::size_t side = 2 * static_cast<std::size_t>(n);

  Subspace s(side * side * d);
  std::vector<FinMat> indep;
  for (const auto& m : span)
    if (s.insert(flatten(m, d))) indep.push_back(m);

  LieBasis whole = enumerate_basis(lie);
  for (const auto& x : indep)
    for (std::size_t b = 0; b < whole.size(); ++b)
      if (!s.contains(flatten(lie.bracket(whole.elems()[b], x), d)))
        throw std::invalid_argument("extract_ideal: span is not an ideal (bracket with " + whole.labels()[b] +
                                    " leaves it)");

  auto pre = [&](auto make) {
    std::vector<SparseVec> images;
    for (std::size_t k = 0; k < d; ++k) images.push_back(flatten(make(lie.ring().basis(k)), d));
    return preimage(d, images, s);
  };

  ExtractReport rep;
  CheckList& checks = rep.checks;
  std::vector<Subspace> first;  // J_1, J_2, J_3 at (1,2)
  for (GenKind kind : {GenKind::F, GenKind::G, GenKind::H}) {
    std::vector<Subspace> all;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) all.push_back(pre([&](const FinAlgElem& a) { return lie.embed(FinGen{kind, i, j, a}); }));
    bool same = true;
    for (const auto& x : all) same = same && x.equals(all.front());
    checks.add(std::string("J_{i,j} from ") + gen_kind_letter(kind) + " independent of (i,j)", same);
    first.push_back(all.front());
  }
  rep.j = first[0];
  const Subspace& j = rep.j;
  checks.add("J1 = J2 = J3", first[1].equals(j) && first[2].equals(j));
  bool ideal_ok = is_two_sided_ideal(alg, j) && is_involutive(alg, j);
  checks.add("J is an involutive ideal of R", ideal_ok);

  bool iij = true;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      if (i != k)
        iij = iij && pre([&](const FinAlgElem& a) { return lie.f(i, i, a) - lie.f(k, k, a); }).equals(j);
  checks.add("I_ij = J for all i != j", iij);

  std::vector<Subspace> ii;
  for (int i = 1; i <= n; ++i) ii.push_back(pre([&](const FinAlgElem& a) { return lie.f(i, i, a); }));
  bool ii_same = true;
  for (const auto& x : ii) ii_same = ii_same && x.equals(ii.front());
  checks.add("I_i independent of i", ii_same);
  rep.i_space = ii.front();
  rep.lower_bound = sum_of(plus_part(alg, j), commutator_with(alg, j));
  rep.upper_bound = intersect(trace_space(alg), j);
  rep.bounds_coincide = rep.lower_bound.equals(rep.upper_bound);
  checks.add("J_+ + [J,R] inside I", rep.i_space.contains_subspace(rep.lower_bound));
  checks.add("I inside (R_+ + [R,R]) ∩ J", rep.upper_bound.contains_subspace(rep.i_space));

  // g_ii / h_ii coefficients
  const int rho = lie.rho();
  Subspace r_rho = rho == 1 ? symmetric_part(alg) : antisymmetric_part(alg);
  Subspace r_minus_rho = rho == 1 ? antisymmetric_part(alg) : symmetric_part(alg);
  Subspace cap = sum_of(intersect(j, r_minus_rho), r_rho);
  bool diag_ok = true, diag_inv = true, diag_same = true;
  for (int i = 1; i <= n; ++i)
    for (GenKind kind : {GenKind::G, GenKind::H}) {
      Subspace jd = pre([&](const FinAlgElem& a) { return lie.embed(FinGen{kind, i, i, a}); });
      diag_inv = diag_inv && is_involutive(alg, jd);
      diag_ok = diag_ok && jd.contains_subspace(j) && cap.contains_subspace(jd);
      Subspace img_jd(side * side * d), img_j(side * side * d);
      for (const auto& v : jd.basis())
        img_jd.insert(flatten(lie.embed(FinGen{kind, i, i, elem_of(lie.ring().algebra(), v)}), d));
      for (const auto& v : j.basis())
        img_j.insert(flatten(lie.embed(FinGen{kind, i, i, elem_of(lie.ring().algebra(), v)}), d));
      diag_same = diag_same && img_jd.equals(img_j);
    }
  checks.add("J_{i,n+i} and J_{n+i,i} closed under the involution", diag_inv);
  checks.add("J inside J_{i,n+i}, J_{n+i,i} inside J_{-rho} + R_rho", diag_ok);
  checks.add("g_ii(J_{i,n+i}) = g_ii(J) and h_ii(J_{n+i,i}) = h_ii(J)", diag_same);

  if (ideal_ok) {
    LieIdealSpec tilde(lie, Flavor::Tilde, j), under(lie, Flavor::Underline, j);
    checks.add("ideal inside tilde(J)", tilde.span().contains_subspace(s));
    checks.add("underline(J) inside ideal", s.contains_subspace(under.span()));
  } else {
    checks.add("ideal inside tilde(J)", false);
    checks.add("underline(J) inside ideal", false);
  }
  return rep;
}

}  // namespace qtlie
