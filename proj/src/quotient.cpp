#include "qtlie/quotient.hpp"

#include <stdexcept>

#include "qtlie/errors.hpp"

namespace qtlie {

IdealFG::IdealFG(TorusParams params, Poly f, Poly g) : params_(params), f_(std::move(f)), g_(std::move(g)) {
  if (f_.is_zero() || g_.is_zero() || f_.deg() < 1 || g_.deg() < 1) {
    throw std::invalid_argument("ideal: f and g must have degree at least 1");
  }
  if ((f_.coeff(0) * g_.coeff(0)).is_zero()) {
    throw std::invalid_argument("ideal: f(0)g(0) must be nonzero");
  }
  if (!poly_symmetry_check(f_, params_.theta1(), params_.m())) {
    throw std::invalid_argument("ideal: f(theta1^m T) != f(T), ideal is not involutive");
  }
  if (!poly_symmetry_check(g_, params_.theta2(), params_.m())) {
    throw std::invalid_argument("ideal: g(theta2^m T) != g(T), ideal is not involutive");
  }
}

IdealFG ideal_alpha_beta(const TorusParams& params, const GaussRat& alpha, const GaussRat& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw std::invalid_argument("J(alpha,beta): alpha and beta must be nonzero");
  auto square = [](const GaussRat& x) { return Poly({-(x * x), GaussRat(0), GaussRat(1)}); };
  if (params.q() == -1) {
    // (t_k - α)(t_k + α) = t_k^2 - α^2, a polynomial in t_k^m with m = 2
    return IdealFG(params, Poly::linear(alpha * alpha), Poly::linear(beta * beta));
  }
  Poly f = params.theta1() == 1 ? Poly::linear(alpha) : square(alpha);
  Poly g = params.theta2() == 1 ? Poly::linear(beta) : square(beta);
  return IdealFG(params, f, g);
}

namespace {

std::string monomial_label(std::size_t i, std::size_t j) {
  if (i == 0 && j == 0) return "1";
  std::string s;
  auto piece = [&](const char* var, std::size_t e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  };
  piece("t1", i);
  piece("t2", j);
  return s;
}

SparseVec tensor_residues(const std::vector<GaussRat>& r, const std::vector<GaussRat>& s, std::size_t deg2) {
  SparseVec v;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_zero()) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!s[j].is_zero()) v.push_back(i * deg2 + j, r[i] * s[j]);
    }
  }
  return v;
}

}  // namespace

QuotientRing::QuotientRing(IdealFG ideal) : ideal_(std::move(ideal)) {
  const Poly big_f = ideal_.f_lifted();
  const Poly big_g = ideal_.g_lifted();
  deg1_ = big_f.deg();
  deg2_ = big_g.deg();
  // f(0) != 0 makes T invertible modulo f(T^m).
  t_inv1_ = *poly_inverse_mod(Poly::monomial(1), big_f);
  t_inv2_ = *poly_inverse_mod(Poly::monomial(1), big_g);

  const TorusParams& p = ideal_.params();
  const std::size_t d = deg1_ * deg2_;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < deg1_; ++i)
    for (std::size_t j = 0; j < deg2_; ++j) {
      exps_.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
      labels.push_back(monomial_label(i, j));
    }

  // Residues of T^e for every exponent a product of two basis elements can reach.
  std::vector<std::vector<GaussRat>> pow1, pow2;
  for (std::size_t e = 0; e < 2 * deg1_; ++e) pow1.push_back(residue(big_f, t_inv1_, static_cast<std::int64_t>(e)));
  for (std::size_t e = 0; e < 2 * deg2_; ++e) pow2.push_back(residue(big_g, t_inv2_, static_cast<std::int64_t>(e)));

  std::vector<SparseVec> mult(d * d);
  for (std::size_t x = 0; x < d; ++x) {
    auto [i, j] = exps_[x];
    for (std::size_t y = 0; y < d; ++y) {
      auto [k, l] = exps_[y];
      SparseVec v = tensor_residues(pow1[i + k], pow2[j + l], deg2_);
      mult[x * d + y] = sign_power(p.q(), j * k) < 0 ? v.scaled(GaussRat(-1)) : v;
    }
  }
  std::vector<SparseVec> invol(d);
  for (std::size_t x = 0; x < d; ++x) {
    auto [a, b] = exps_[x];
    int sign = sign_power(p.theta1(), a) * sign_power(p.theta2(), b) * sign_power(p.q(), a * b);
    invol[x] = SparseVec::unit(x, GaussRat(sign));
  }
  std::vector<GaussRat> unit(d);
  unit[0] = GaussRat(1);
  std::map<std::string, SparseVec> symbols{
      {"t1", tensor_residues(residue(big_f, t_inv1_, 1), residue(big_g, t_inv2_, 0), deg2_)},
      {"t2", tensor_residues(residue(big_f, t_inv1_, 0), residue(big_g, t_inv2_, 1), deg2_)}};
  alg_ = std::make_shared<const FinAlg>(labels, unit, mult, invol, Provenance::QuotientOfTorus, symbols);
}

std::vector<GaussRat> QuotientRing::residue(const Poly& modulus, const Poly& inverse_t, std::int64_t e) const {
  Poly r;
  if (e >= 0) {
    r = poly_mod(Poly::monomial(static_cast<std::size_t>(e)), modulus);
  } else {
    r = Poly::constant(GaussRat(1));
    for (std::int64_t k = 0; k < -e; ++k) r = poly_mod(r * inverse_t, modulus);
  }
  std::vector<GaussRat> out(modulus.deg());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = r.coeff(k);
  return out;
}

FinAlgElem QuotientRing::monomial(std::int64_t a, std::int64_t b) const {
  SparseVec v = tensor_residues(residue(ideal_.f_lifted(), t_inv1_, a), residue(ideal_.g_lifted(), t_inv2_, b), deg2_);
  return FinAlgElem::from_sparse(alg_, v);
}

FinAlgElem QuotientRing::project(const QTorusElem& x) const {
  if (!(x.params() == ideal_.params())) throw std::invalid_argument("project: params mismatch");
  FinAlgElem r = FinAlgElem::zero(alg_);
  for (const auto& [e, c] : x.terms()) r += c * monomial(e.first, e.second);
  return r;
}

QuotientRing quotient_ring(const IdealFG& ideal) { return QuotientRing(ideal); }

bool CheckList::all() const { return first_failure().empty(); }

std::string CheckList::first_failure() const {
  for (const auto& [name, ok] : items) {
    if (!ok) return name;
  }
  return "";
}

namespace {

FinAlgElem apply_linear(const std::vector<FinAlgElem>& images, const FinAlgElem& x) {
  FinAlgElem r = FinAlgElem::zero(images.front().algebra());
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!x.coeffs()[k].is_zero()) r += x.coeffs()[k] * images[k];
  }
  return r;
}

// Structure checks shared by every map out of a quotient ring given on its basis.
void check_algebra_map(const FinAlgPtr& src, const FinAlgPtr& dst, const std::vector<FinAlgElem>& images,
                       CheckList& checks) {
  checks.add("unital", apply_linear(images, FinAlgElem::one(src)) == FinAlgElem::one(dst));
  bool mult_ok = true;
  for (std::size_t x = 0; x < src->dim() && mult_ok; ++x)
    for (std::size_t y = 0; y < src->dim() && mult_ok; ++y) {
      FinAlgElem prod = FinAlgElem::from_sparse(src, src->product(x, y));
      mult_ok = apply_linear(images, prod) == images[x] * images[y];
    }
  checks.add("multiplicative", mult_ok);
  bool invol_ok = true;
  for (std::size_t x = 0; x < src->dim() && invol_ok; ++x) {
    FinAlgElem bar = FinAlgElem::from_sparse(src, src->involution(x));
    invol_ok = apply_linear(images, bar) == fin_involution(images[x]);
  }
  checks.add("involution-preserving", invol_ok);
  checks.add("bijective", src->dim() == dst->dim() && span_in(*dst, images).dim() == dst->dim());
}

FinAlgElem power(const FinAlgElem& x, std::int64_t e) {
  FinAlgElem base = x;
  if (e < 0) {
    auto inv = fin_inverse(x);
    if (!inv) throw std::invalid_argument("negative power of a non-invertible element");
    base = *inv;
    e = -e;
  }
  FinAlgElem r = FinAlgElem::one(x.algebra());
  for (std::int64_t k = 0; k < e; ++k) r = r * base;
  return r;
}

}  // namespace

CrtSplit crt_split(const TorusParams& params, const Poly& p1, const Poly& p2, const Poly& other,
                   SplitVariable which) {
  Poly d = poly_gcd(p1, p2);
  if (d.is_zero() || d.deg() != 0) {
    throw NonCoprimeError("crt_split: factors share " + d.to_string());
  }
  auto make = [&](const Poly& p) {
    return which == SplitVariable::First ? QuotientRing(IdealFG(params, p, other))
                                         : QuotientRing(IdealFG(params, other, p));
  };
  QuotientRing whole = make(p1 * p2);
  QuotientRing part1 = make(p1);
  QuotientRing part2 = make(p2);

  Bezout bz = poly_bezout(p1, p2);  // u p1 + v p2 = 1
  FinAlgElem z = which == SplitVariable::First ? whole.t1_m() : whole.t2_m();
  FinAlgElem a1 = fin_eval_poly(bz.v * p2, z);
  FinAlgElem a2 = fin_eval_poly(bz.u * p1, z);

  FinAlgPtr sum = direct_sum(part1.algebra(), part2.algebra());
  std::vector<FinAlgElem> images;
  for (const auto& [i, j] : whole.basis_exponents()) {
    std::vector<GaussRat> c = part1.monomial(i, j).coeffs();
    FinAlgElem second = part2.monomial(i, j);
    c.insert(c.end(), second.coeffs().begin(), second.coeffs().end());
    images.emplace_back(sum, std::move(c));
  }

  CrtSplit out{whole, part1, part2, a1, a2, sum, images, {}};
  const FinAlgElem one = FinAlgElem::one(whole.algebra());
  out.checks.add("a1 + a2 = 1", a1 + a2 == one);
  out.checks.add("a1 a2 = 0", (a1 * a2).is_zero());
  out.checks.add("a1^2 = a1", a1 * a1 == a1);
  out.checks.add("a2^2 = a2", a2 * a2 == a2);
  out.checks.add("a1 is symmetric", fin_involution(a1) == a1);
  out.checks.add("a2 is symmetric", fin_involution(a2) == a2);
  out.checks.add("dimensions add", whole.dim() == part1.dim() + part2.dim());
  std::vector<GaussRat> e1(sum->dim()), e2(sum->dim());
  for (std::size_t k = 0; k < part1.dim(); ++k) e1[k] = part1.algebra()->unit()[k];
  for (std::size_t k = 0; k < part2.dim(); ++k) e2[part1.dim() + k] = part2.algebra()->unit()[k];
  out.checks.add("a1 maps to (1,0)", apply_linear(images, a1) == FinAlgElem(sum, e1));
  out.checks.add("a2 maps to (0,1)", apply_linear(images, a2) == FinAlgElem(sum, e2));
  check_algebra_map(whole.algebra(), sum, images, out.checks);
  return out;
}

FinAlgElem NamedIso::apply(const FinAlgElem& x) const { return apply_linear(basis_images, x); }

FinAlgElem NamedIso::apply_direct(const QTorusElem& x) const {
  FinAlgElem r = FinAlgElem::zero(target);
  for (const auto& [e, c] : x.terms()) r += c * (power(t1_image, e.first) * power(t2_image, e.second));
  return r;
}

NamedIso named_quotient_iso(const TorusParams& params, const GaussRat& alpha, const GaussRat& beta) {
  QuotientRing source(ideal_alpha_beta(params, alpha, beta));
  const GaussRat zero(0);
  int case_number = 0;
  FinAlgPtr target;
  std::vector<GaussRat> img1, img2;
  if (params.q() == -1 && params.theta1() == 1) {
    case_number = 1;
    target = matrix_algebra(2);
    GaussRat s = params.theta2() == 1 ? GaussRat(1) : GaussRat::i();  // a square root of θ2
    img1 = {alpha, zero, zero, -alpha};
    img2 = {zero, s * beta, beta / s, zero};
  } else if (params.q() == -1) {
    case_number = 2;
    target = tilde_matrix_algebra();
    img1 = {alpha, zero, zero, -alpha};
    img2 = {zero, beta, beta, zero};
  } else if (params.theta1() == 1 && params.theta2() == 1) {
    case_number = 3;
    target = scalar_algebra();
    img1 = {alpha};
    img2 = {beta};
  } else if (params.theta1() == 1) {
    case_number = 4;
    target = scalar_pair_algebra();
    img1 = {alpha, alpha};
    img2 = {beta, -beta};
  } else {
    case_number = 5;
    target = klein_algebra();
    img1 = {zero, alpha, zero, zero};
    img2 = {zero, zero, beta, zero};
  }
  FinAlgElem t1_image(target, img1), t2_image(target, img2);
  std::vector<FinAlgElem> images;
  for (const auto& [i, j] : source.basis_exponents()) images.push_back(power(t1_image, i) * power(t2_image, j));

  NamedIso iso{case_number, source, target, t1_image, t2_image, images, {}};
  const int m = params.m();
  iso.checks.add("f(t1^m) maps to 0", fin_eval_poly(source.ideal().f(), power(t1_image, m)).is_zero());
  iso.checks.add("g(t2^m) maps to 0", fin_eval_poly(source.ideal().g(), power(t2_image, m)).is_zero());
  iso.checks.add("t2 t1 = q t1 t2", t2_image * t1_image == GaussRat(params.q()) * (t1_image * t2_image));
  iso.checks.add("t1 bar = theta1 t1", fin_involution(t1_image) == GaussRat(params.theta1()) * t1_image);
  iso.checks.add("t2 bar = theta2 t2", fin_involution(t2_image) == GaussRat(params.theta2()) * t2_image);
  check_algebra_map(source.algebra(), target, images, iso.checks);
  return iso;
}

}  // namespace qtlie
