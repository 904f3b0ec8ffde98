#include "qtlie/lie_hom.hpp"

#include <stdexcept>

namespace qtlie {

namespace {

std::size_t flat_dim(const FinLieAlg& lie) {
  const std::size_t side = 2 * static_cast<std::size_t>(lie.n());
  return side * side * lie.ring().dim();
}

FinMat combine(int n, const SparseVec& coords, const std::vector<FinMat>& images) {
  FinMat out(n);
  for (const auto& [k, c] : coords.entries()) out += c * images.at(k);
  return out;
}

bool in_codomain(const LieHomTable& t, const FinMat& m) {
  if (t.codomain_kind == CodomainKind::Graded) return t.codomain.grho_check(m);
  FinAlgElem tr = t.codomain.ring().zero();
  for (int r = 0; r < 2 * m.n(); ++r)
    if (const FinAlgElem* v = m.at(r, r)) tr += *v;
  return t.codomain.ring().in_commutator(tr);
}

// S ⊕ S^op element split into its two S-components.
std::pair<FinAlgElem, FinAlgElem> split_pair(const FinAlgElem& x, const FinAlgPtr& s) {
  const std::size_t d = s->dim();
  std::vector<GaussRat> a(x.coeffs().begin(), x.coeffs().begin() + static_cast<std::ptrdiff_t>(d));
  std::vector<GaussRat> b(x.coeffs().begin() + static_cast<std::ptrdiff_t>(d), x.coeffs().end());
  return {FinAlgElem(s, a), FinAlgElem(s, b)};
}

FinAlgElem pair_elem(const FinAlgPtr& pair, const FinAlgElem& a, bool second) {
  const std::size_t d = a.coeffs().size();
  std::vector<GaussRat> c(2 * d);
  for (std::size_t k = 0; k < d; ++k) c[(second ? d : 0) + k] = a.coeffs()[k];
  return FinAlgElem(pair, c);
}

// Image of X_ij((a,0)) in sl_{2n}(S), X ∈ {f, g, h}.
FinMat op_pair_first(GenKind kind, int i, int j, const FinAlgElem& a, int n) {
  const GaussRat half = GaussRat::frac(1, 2), im = GaussRat::i();
  auto e = [&](int p, int q) {
    FinMat m(n);
    m.add(p - 1, q - 1, a);
    return m;
  };
  switch (kind) {
    case GenKind::F:
      return half * (e(2 * i - 1, 2 * j - 1) + e(2 * i, 2 * j) + im * (e(2 * i - 1, 2 * j) - e(2 * i, 2 * j - 1)));
    case GenKind::H:
      return half * (e(2 * i - 1, 2 * j - 1) - e(2 * i, 2 * j) + im * (e(2 * i - 1, 2 * j) + e(2 * i, 2 * j - 1)));
    case GenKind::G:
      return half * (e(2 * i - 1, 2 * j - 1) - e(2 * i, 2 * j) - im * (e(2 * i - 1, 2 * j) + e(2 * i, 2 * j - 1)));
  }
  throw std::logic_error("op_pair_first: bad kind");
}

// Image of X_ij((0,b)). f_ij((0,b)) is the second formula with i and j
// exchanged; g and h use X_ij((0,b)) = -ρ X_ji((b,0)).
FinMat op_pair_second(GenKind kind, int i, int j, const FinAlgElem& b, int n, int rho) {
  if (kind != GenKind::F) return GaussRat(-rho) * op_pair_first(kind, j, i, b, n);
  const GaussRat half = GaussRat::frac(1, 2), im = GaussRat::i();
  auto e = [&](int p, int q) {
    FinMat m(n);
    m.add(p - 1, q - 1, b);
    return m;
  };
  return half * (GaussRat(-1) * e(2 * j - 1, 2 * i - 1) - e(2 * j, 2 * i) +
                 im * (e(2 * j - 1, 2 * i) - e(2 * j, 2 * i - 1)));
}

FinMat op_pair_image(const FinGen& x, const FinAlgPtr& s, int n, int rho) {
  auto [a, b] = split_pair(x.coeff, s);
  return op_pair_first(x.kind, x.i, x.j, a, n) + op_pair_second(x.kind, x.i, x.j, b, n, rho);
}

// e_pq(E_kl) -> e_{(p-1)m+k, (q-1)m+l}
FinMat block_flatten(const FinMat& a, std::size_t m, const FinAlgPtr& scalars) {
  FinMat out(a.n() * static_cast<int>(m));
  for (const auto& [pos, v] : a.entries()) {
    const SparseVec coeffs = v.to_sparse();
    for (const auto& [idx, c] : coeffs.entries()) {
      int k = static_cast<int>(idx / m), l = static_cast<int>(idx % m);
      out.add(pos.first * static_cast<int>(m) + k, pos.second * static_cast<int>(m) + l,
              FinAlgElem::scalar(scalars, c));
    }
  }
  return out;
}

}  // namespace

std::vector<FinGen> domain_generators(const FinLieAlg& lie) {
  std::vector<FinGen> gens;
  const int n = lie.n();
  for (GenKind kind : {GenKind::F, GenKind::G, GenKind::H})
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (kind == GenKind::F ? i == j : i > j) continue;
        for (std::size_t k = 0; k < lie.ring().dim(); ++k) gens.push_back(FinGen{kind, i, j, lie.ring().basis(k)});
      }
  return gens;
}

LieHomTable make_hom_table(std::string name, FinLieAlg domain, FinLieAlg codomain, CodomainKind kind,
                           std::size_t codomain_dim, std::function<FinMat(const FinGen&)> rule) {
  LieHomTable t{std::move(name), std::move(domain), std::move(codomain), kind, codomain_dim, {}, {}, std::move(rule)};
  t.generators = domain_generators(t.domain);
  for (const auto& g : t.generators) t.images.push_back(t.rule(g));
  return t;
}

std::size_t sl_dim(int n, const FinAlg& s) {
  const std::size_t side = 2 * static_cast<std::size_t>(n);
  return side * side * s.dim() - (s.dim() - commutator_span(s).dim());
}

std::optional<FinMat> HomExtension::apply(const FinMat& a) const {
  if (span.ambient_dim() == 0) return std::nullopt;
  auto coords = span.coordinates(flatten(a, ring_dim));
  if (!coords) return std::nullopt;
  return combine(codomain_n, *coords, images);
}

HomExtension hom_extend(const LieHomTable& t) {
  HomExtension ext;
  ext.report = Report("Lie homomorphism: " + t.name);
  Report& rep = ext.report;
  const FinLieAlg& dom = t.domain;
  const FinLieAlg& cod = t.codomain;
  const std::size_t d = dom.ring().dim();
  const int cod_n = cod.n();
  ext.span = Subspace(flat_dim(dom));
  ext.ring_dim = d;
  ext.codomain_n = cod_n;

  if (t.images.size() != t.generators.size()) {
    rep.fail("table is not total on the generators");
    return ext;
  }
  for (std::size_t k = 0; k < t.images.size(); ++k)
    if (t.images[k].n() != cod_n || !in_codomain(t, t.images[k])) {
      rep.fail("image of " + t.generators[k].to_string() + " is outside the codomain");
      return ext;
    }

  // Items are generators, then brackets of generator pairs. Independent
  // items become basis elements; dependent ones must map consistently.
  auto offer = [&](const FinMat& x, const FinMat& img, const std::string& label) {
    SparseVec v = flatten(x, d);
    if (auto c = ext.span.coordinates(v)) {
      if (combine(cod_n, *c, ext.images) != img) rep.fail("inconsistent image at " + label);
      return;
    }
    ext.span.insert(v);
    ext.basis.push_back(x);
    ext.labels.push_back(label);
    ext.images.push_back(img);
  };
  std::vector<FinMat> gens;
  for (std::size_t k = 0; k < t.generators.size(); ++k) {
    gens.push_back(dom.embed(t.generators[k]));
    offer(gens.back(), t.images[k], t.generators[k].to_string());
  }
  for (std::size_t a = 0; a < gens.size() && rep.pass; ++a)
    for (std::size_t b = a + 1; b < gens.size() && rep.pass; ++b) {
      FinMat br = dom.bracket(gens[a], gens[b]);
      offer(br, cod.bracket(t.images[a], t.images[b]),
            "[" + t.generators[a].to_string() + ", " + t.generators[b].to_string() + "]");
    }
  if (!rep.pass) return ext;

  ext.domain_dim = ext.span.dim();
  const std::size_t expected = enumerate_basis(dom).size();
  rep.check(ext.domain_dim == expected, "generators span " + std::to_string(ext.domain_dim) + " of " +
                                            std::to_string(expected) + " dimensions");

  for (std::size_t p = 0; p < ext.basis.size() && rep.pass; ++p)
    for (std::size_t q = p + 1; q < ext.basis.size() && rep.pass; ++q) {
      auto c = ext.span.coordinates(flatten(dom.bracket(ext.basis[p], ext.basis[q]), d));
      if (!c) {
        rep.fail("bracket leaves the span at (" + ext.labels[p] + ", " + ext.labels[q] + ")");
        break;
      }
      if (combine(cod_n, *c, ext.images) != cod.bracket(ext.images[p], ext.images[q]))
        rep.fail("bracket not preserved at (" + ext.labels[p] + ", " + ext.labels[q] + ")");
    }

  // Linearity of the rule in the coefficient slot, over basis pairs.
  const GaussRat c(mpq_class(2), mpq_class(1, 3));
  for (std::size_t a = 0; a < t.generators.size() && rep.pass; ++a)
    for (std::size_t b = a + 1; b < t.generators.size() && rep.pass; ++b) {
      const FinGen& x = t.generators[a];
      const FinGen& y = t.generators[b];
      if (x.kind != y.kind || x.i != y.i || x.j != y.j) continue;
      FinGen mix{x.kind, x.i, x.j, x.coeff + c * y.coeff};
      if (t.rule(mix) != t.images[a] + c * t.images[b])
        rep.fail("not linear in the coefficient of " + x.to_string() + " and " + y.to_string());
    }

  Subspace img(flat_dim(cod));
  for (const auto& m : ext.images) img.insert(flatten(m, cod.ring().dim()));
  ext.image_rank = img.dim();
  rep.check(ext.image_rank == ext.domain_dim, "not injective: image rank " + std::to_string(ext.image_rank));
  rep.check(ext.image_rank == t.codomain_dim, "not surjective: image rank " + std::to_string(ext.image_rank) +
                                                  ", codomain dimension " + std::to_string(t.codomain_dim));
  rep.details["domain_dim"] = ext.domain_dim;
  rep.details["image_rank"] = ext.image_rank;
  rep.details["codomain_dim"] = t.codomain_dim;
  rep.details["bijective"] = rep.pass;
  return ext;
}

Report hom_verify(const LieHomTable& table) { return hom_extend(table).report; }

LieHomTable matrix_iso_table(int n, int rho, std::size_t m) {
  FinLieAlg dom(FinRing(matrix_algebra(m)), n, rho);
  FinLieAlg cod(FinRing(scalar_algebra()), n * static_cast<int>(m), rho);
  const int mi = static_cast<int>(m);
  auto rule = [cod, mi](const FinGen& x) {
    FinMat out = cod.zero();
    const SparseVec coeffs = x.coeff.to_sparse();
    for (const auto& [idx, c] : coeffs.entries()) {
      int k = static_cast<int>(idx) / mi, l = static_cast<int>(idx) % mi;
      out += c * cod.embed(FinGen{x.kind, (x.i - 1) * mi + k + 1, (x.j - 1) * mi + l + 1, cod.ring().one()});
    }
    return out;
  };
  return make_hom_table("g(2n,rho)(M_m) -> g(2nm,rho)(k), n=" + std::to_string(n) + " m=" + std::to_string(m) +
                            " rho=" + std::to_string(rho),
                        dom, cod, CodomainKind::Graded, graded_dim(static_cast<std::size_t>(n) * m, rho), rule);
}

LieHomTable op_pair_iso_table(int n, int rho, const FinAlgPtr& s) {
  FinLieAlg dom(FinRing(op_pair_algebra(s)), n, rho);
  FinLieAlg cod(FinRing(s), n, rho);
  auto rule = [s, n, rho](const FinGen& x) { return op_pair_image(x, s, n, rho); };
  return make_hom_table("g(2n,rho)(S+S^op) -> sl(2n)(S), S=" + provenance_name(s->provenance()) +
                            " n=" + std::to_string(n) + " rho=" + std::to_string(rho),
                        dom, cod, CodomainKind::SpecialLinear, sl_dim(n, *s), rule);
}

LieHomTable op_pair_matrix_iso_table(int n, int rho, std::size_t m) {
  FinAlgPtr s = matrix_algebra(m);
  FinAlgPtr k = scalar_algebra();
  FinLieAlg dom(FinRing(op_pair_algebra(s)), n, rho);
  FinLieAlg cod(FinRing(k), n * static_cast<int>(m), rho);
  auto rule = [s, k, n, m, rho](const FinGen& x) { return block_flatten(op_pair_image(x, s, n, rho), m, k); };
  const std::size_t side = 2 * static_cast<std::size_t>(n) * m;
  return make_hom_table("g(2n,rho)(M_m+M_m^op) -> sl(2nm)(k), n=" + std::to_string(n) + " m=" + std::to_string(m) +
                            " rho=" + std::to_string(rho),
                        dom, cod, CodomainKind::SpecialLinear, side * side - 1, rule);
}

LieHomTable klein_iso_table(int n, int rho) {
  FinLieAlg dom(FinRing(klein_algebra()), n, rho);
  FinAlgPtr k = scalar_algebra();
  FinLieAlg cod(FinRing(k), 2 * n, rho);
  auto rule = [k, n, rho](const FinGen& x) {
    // Characters of the Klein group: the four idempotents (1 ± τ)(1 ± γ)/4.
    const auto& c = x.coeff.coeffs();
    const GaussRat a1 = c[0] + c[1] + c[2] + c[3], b1 = c[0] - c[1] - c[2] + c[3];
    const GaussRat a2 = c[0] + c[1] - c[2] - c[3], b2 = c[0] - c[1] + c[2] - c[3];
    FinMat out(2 * n);
    int offset = 0;
    for (auto [a, b] : {std::pair{a1, b1}, std::pair{a2, b2}}) {
      FinMat block = op_pair_first(x.kind, x.i, x.j, FinAlgElem::scalar(k, a), n) +
                     op_pair_second(x.kind, x.i, x.j, FinAlgElem::scalar(k, b), n, rho);
      for (const auto& [pos, v] : block.entries()) out.add(pos.first + offset, pos.second + offset, v);
      offset += 2 * n;
    }
    return out;
  };
  const std::size_t side = 2 * static_cast<std::size_t>(n);
  return make_hom_table("g(2n,rho)(CK4) -> sl(2n)(k)+sl(2n)(k), n=" + std::to_string(n) + " rho=" + std::to_string(rho),
                        dom, cod, CodomainKind::SpecialLinear, 2 * (side * side - 1), rule);
}

LieHomTable tilde_iso_table(int n, int rho) {
  FinLieAlg dom(FinRing(matrix_algebra(2)), n, -rho);
  FinLieAlg cod(FinRing(tilde_matrix_algebra()), n, rho);
  auto rule = [cod](const FinGen& x) {
    FinMat out = cod.zero();
    auto e = [&](int a, int b) { return cod.ring().basis(static_cast<std::size_t>((a - 1) * 2 + (b - 1))); };
    const SparseVec coeffs = x.coeff.to_sparse();
    for (const auto& [idx, c] : coeffs.entries()) {
      int a = static_cast<int>(idx) / 2 + 1, b = static_cast<int>(idx) % 2 + 1;
      switch (x.kind) {
        case GenKind::F: out += c * cod.f(x.i, x.j, e(a, b)); break;
        case GenKind::G: out += (c * GaussRat(sign_power(-1, 3 - b))) * cod.g(x.i, x.j, e(a, 3 - b)); break;
        case GenKind::H: out += (c * GaussRat(sign_power(-1, 3 - a))) * cod.h(x.i, x.j, e(3 - a, b)); break;
      }
    }
    return out;
  };
  return make_hom_table("g(2n,-rho)(M_2) -> g(2n,rho)(M~_2), n=" + std::to_string(n) + " rho=" + std::to_string(rho),
                        dom, cod, CodomainKind::Graded, graded_dim(2 * static_cast<std::size_t>(n), -rho), rule);
}

std::vector<LieHomTable> builtin_iso_tables(int n, int rho, std::size_t m) {
  std::vector<LieHomTable> out;
  out.push_back(matrix_iso_table(n, rho, m));
  out.push_back(op_pair_iso_table(n, rho, scalar_algebra()));
  out.push_back(op_pair_matrix_iso_table(n, rho, m));
  out.push_back(klein_iso_table(n, rho));
  out.push_back(tilde_iso_table(n, rho));
  return out;
}

FinMat op_pair_inverse(const FinLieAlg& domain, const FinAlgPtr& s, int p, int q, const FinAlgElem& a) {
  (void)s;
  if (p == q) throw std::invalid_argument("op_pair_inverse: needs p != q");
  const FinAlgPtr& pair = domain.ring().algebra();
  const int i = (p + 1) / 2, j = (q + 1) / 2;
  FinAlgElem first = pair_elem(pair, a, false), second = pair_elem(pair, a, true);
  FinMat f = domain.f(i, j, first), fp = domain.f(j, i, second);
  FinMat h = domain.h(i, j, first), g = domain.g(i, j, first);
  const GaussRat half = GaussRat::frac(1, 2);
  const GaussRat over_2i = GaussRat(mpq_class(0), mpq_class(-1, 2));  // 1/(2i)
  const bool p_odd = p % 2 == 1, q_odd = q % 2 == 1;
  if (p_odd && q_odd) return half * (f - fp + h + g);
  if (!p_odd && !q_odd) return half * (f - fp - h - g);
  if (p_odd) return over_2i * (f + fp + h - g);
  return over_2i * (h - g - f - fp);
}

Report op_pair_inverse_check(int n, int rho, const FinAlgPtr& s) {
  LieHomTable phi = op_pair_iso_table(n, rho, s);
  HomExtension ext = hom_extend(phi);
  Report rep("forward map after inverse is the identity on e_pq(S), n=" + std::to_string(n) +
             " rho=" + std::to_string(rho));
  rep.check(ext.report.pass, "forward map: " + ext.report.witness);
  std::size_t checked = 0;
  for (int p = 1; p <= 2 * n && rep.pass; ++p)
    for (int q = 1; q <= 2 * n && rep.pass; ++q) {
      if (p == q) continue;
      for (std::size_t k = 0; k < s->dim(); ++k) {
        FinAlgElem a = FinAlgElem::basis(s, k);
        FinMat x = op_pair_inverse(phi.domain, s, p, q, a);
        FinMat expected(n);
        expected.add(p - 1, q - 1, a);
        auto y = ext.apply(x);
        ++checked;
        if (!phi.domain.grho_check(x) || !y || *y != expected) {
          rep.fail("e_" + std::to_string(p) + std::to_string(q) + "(" + s->labels()[k] + ")");
          break;
        }
      }
    }
  rep.details["generators_checked"] = checked;
  return rep;
}

}  // namespace qtlie
