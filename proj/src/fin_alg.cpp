#include "qtlie/fin_alg.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "qtlie/expr_parser.hpp"

namespace qtlie {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::QuotientOfTorus: return "quotient-of-torus";
    case Provenance::Matrix: return "matrix";
    case Provenance::TildeMatrix: return "tilde-matrix";
    case Provenance::Scalar: return "scalar";
    case Provenance::ScalarPair: return "scalar-pair";
    case Provenance::OpPair: return "op-pair";
    case Provenance::KleinGroupAlgebra: return "klein-group-algebra";
    case Provenance::DirectSum: return "direct-sum";
  }
  return "unknown";
}

namespace {

SparseVec mul_sparse(const FinAlg& alg, const SparseVec& x, const SparseVec& y) {
  SparseVec r;
  for (const auto& [i, a] : x.entries()) {
    for (const auto& [j, b] : y.entries()) r.axpy(a * b, alg.product(i, j));
  }
  return r;
}

SparseVec bar_sparse(const FinAlg& alg, const SparseVec& x) {
  SparseVec r;
  for (const auto& [i, a] : x.entries()) r.axpy(a, alg.involution(i));
  return r;
}

}  // namespace

FinAlg::FinAlg(std::vector<std::string> labels, std::vector<GaussRat> unit, std::vector<SparseVec> mult,
               std::vector<SparseVec> invol, Provenance provenance,
               std::map<std::string, SparseVec> symbols)
    : labels_(std::move(labels)),
      unit_(std::move(unit)),
      mult_(std::move(mult)),
      invol_(std::move(invol)),
      provenance_(provenance),
      symbols_(std::move(symbols)) {
  validate();
}

void FinAlg::validate() const {
  const std::size_t d = dim();
  if (d == 0) throw std::invalid_argument("FinAlg: dimension must be positive");
  if (unit_.size() != d || mult_.size() != d * d || invol_.size() != d) {
    throw std::invalid_argument("FinAlg: table sizes do not match the basis");
  }
  SparseVec u = SparseVec::from_dense(unit_);
  for (std::size_t i = 0; i < d; ++i) {
    SparseVec e = SparseVec::unit(i);
    if (!(mul_sparse(*this, u, e) == e) || !(mul_sparse(*this, e, u) == e)) {
      throw std::invalid_argument("FinAlg: unit fails on basis element " + labels_[i]);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const SparseVec& ij = product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        SparseVec left;
        for (const auto& [p, c] : ij.entries()) left.axpy(c, product(p, k));
        SparseVec right;
        for (const auto& [p, c] : product(j, k).entries()) right.axpy(c, product(i, p));
        if (!(left == right)) {
          throw std::invalid_argument("FinAlg: not associative on (" + labels_[i] + ", " + labels_[j] +
                                      ", " + labels_[k] + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!(bar_sparse(*this, invol_[i]) == SparseVec::unit(i))) {
      throw std::invalid_argument("FinAlg: involution does not square to the identity on " + labels_[i]);
    }
    for (std::size_t j = 0; j < d; ++j) {
      SparseVec lhs = bar_sparse(*this, product(i, j));
      SparseVec rhs = mul_sparse(*this, invol_[j], invol_[i]);
      if (!(lhs == rhs)) {
        throw std::invalid_argument("FinAlg: involution is not an anti-automorphism on (" + labels_[i] +
                                    ", " + labels_[j] + ")");
      }
    }
  }
}

FinAlgElem::FinAlgElem(FinAlgPtr alg, std::vector<GaussRat> coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (!alg_) throw std::invalid_argument("FinAlgElem: null algebra");
  if (coeffs_.size() != alg_->dim()) throw std::invalid_argument("FinAlgElem: wrong coefficient count");
}

FinAlgElem FinAlgElem::zero(FinAlgPtr alg) {
  std::size_t d = alg->dim();
  return FinAlgElem(std::move(alg), std::vector<GaussRat>(d));
}

FinAlgElem FinAlgElem::one(FinAlgPtr alg) {
  auto u = alg->unit();
  return FinAlgElem(std::move(alg), std::move(u));
}

FinAlgElem FinAlgElem::basis(FinAlgPtr alg, std::size_t k) {
  std::vector<GaussRat> v(alg->dim());
  v.at(k) = GaussRat(1);
  return FinAlgElem(std::move(alg), std::move(v));
}

FinAlgElem FinAlgElem::scalar(FinAlgPtr alg, const GaussRat& c) { return c * one(std::move(alg)); }

FinAlgElem FinAlgElem::from_sparse(FinAlgPtr alg, const SparseVec& v) {
  std::size_t d = alg->dim();
  return FinAlgElem(std::move(alg), v.to_dense(d));
}

bool FinAlgElem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

FinAlgElem& FinAlgElem::operator+=(const FinAlgElem& o) {
  if (alg_ != o.alg_) throw std::invalid_argument("FinAlgElem: different algebras");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

FinAlgElem& FinAlgElem::operator-=(const FinAlgElem& o) {
  if (alg_ != o.alg_) throw std::invalid_argument("FinAlgElem: different algebras");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

FinAlgElem FinAlgElem::operator-() const { return GaussRat(-1) * *this; }

FinAlgElem operator*(const FinAlgElem& a, const FinAlgElem& b) {
  if (a.alg_ != b.alg_) throw std::invalid_argument("FinAlgElem: different algebras");
  const FinAlg& alg = *a.alg_;
  std::vector<GaussRat> r(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      GaussRat c = a.coeffs_[i] * b.coeffs_[j];
      for (const auto& [k, v] : alg.product(i, j).entries()) r[k] += c * v;
    }
  }
  return FinAlgElem(a.alg_, std::move(r));
}

FinAlgElem operator*(const GaussRat& c, const FinAlgElem& a) {
  std::vector<GaussRat> r(a.coeffs_);
  for (auto& x : r) x *= c;
  return FinAlgElem(a.alg_, std::move(r));
}

std::string FinAlgElem::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const GaussRat& c = coeffs_[k];
    if (c.is_zero()) continue;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    GaussRat mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string cs = mag.is_real() ? mag.to_string() : "(" + mag.to_string() + ")";
    const std::string& label = alg_->labels()[k];
    if (label == "1") {
      out += cs;
    } else if (mag.is_one()) {
      out += label;
    } else {
      out += cs + "*" + label;
    }
  }
  return out.empty() ? "0" : out;
}

FinAlgElem FinAlgElem::parse(const std::string& text, const FinAlgPtr& alg) {
  ExprContext<FinAlgElem> ctx;
  ctx.scalar = [alg](const GaussRat& c) { return FinAlgElem::scalar(alg, c); };
  ctx.symbol = [alg](const std::string& name) -> std::optional<FinAlgElem> {
    auto it = alg->symbols().find(name);
    if (it == alg->symbols().end()) return std::nullopt;
    return FinAlgElem::from_sparse(alg, it->second);
  };
  ctx.invert = [](const FinAlgElem& x) { return fin_inverse(x); };
  return parse_expression(text, ctx);
}

std::ostream& operator<<(std::ostream& os, const FinAlgElem& x) { return os << x.to_string(); }

FinAlgElem fin_involution(const FinAlgElem& x) {
  const FinAlg& alg = *x.algebra();
  std::vector<GaussRat> r(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    for (const auto& [k, v] : alg.involution(i).entries()) r[k] += x.coeffs()[i] * v;
  }
  return FinAlgElem(x.algebra(), std::move(r));
}

FinAlgElem fin_commutator(const FinAlgElem& x, const FinAlgElem& y) { return x * y - y * x; }

std::optional<FinAlgElem> fin_inverse(const FinAlgElem& x) {
  const FinAlgPtr& alg = x.algebra();
  Subspace cols(alg->dim());
  for (std::size_t j = 0; j < alg->dim(); ++j) cols.insert((x * FinAlgElem::basis(alg, j)).to_sparse());
  auto coords = cols.coordinates(SparseVec::from_dense(alg->unit()));
  if (!coords) return std::nullopt;
  FinAlgElem y = FinAlgElem::from_sparse(alg, *coords);
  if (!(y * x == FinAlgElem::one(alg))) return std::nullopt;
  return y;
}

FinAlgElem fin_eval_poly(const Poly& p, const FinAlgElem& x) {
  FinAlgElem acc = FinAlgElem::zero(x.algebra());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * x + FinAlgElem::scalar(x.algebra(), *it);
  }
  return acc;
}

namespace {

using Mat2 = std::array<std::array<GaussRat, 2>, 2>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

// Basis E_ab, index (a-1)*m + (b-1).
std::vector<SparseVec> matrix_unit_products(std::size_t m) {
  std::vector<SparseVec> mult(m * m * m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < m; ++d) {
          if (b == c) mult[(a * m + b) * m * m + (c * m + d)] = SparseVec::unit(a * m + d);
        }
  return mult;
}

std::vector<std::string> matrix_unit_labels(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t a = 1; a <= m; ++a)
    for (std::size_t b = 1; b <= m; ++b) labels.push_back("E" + std::to_string(a) + std::to_string(b));
  return labels;
}

std::map<std::string, SparseVec> label_symbols(const std::vector<std::string>& labels) {
  std::map<std::string, SparseVec> s;
  for (std::size_t k = 0; k < labels.size(); ++k) s[labels[k]] = SparseVec::unit(k);
  return s;
}

}  // namespace

FinAlgPtr matrix_algebra(std::size_t m) {
  if (m == 0) throw std::invalid_argument("matrix_algebra: m must be positive");
  auto labels = matrix_unit_labels(m);
  std::vector<GaussRat> unit(m * m);
  for (std::size_t a = 0; a < m; ++a) unit[a * m + a] = GaussRat(1);
  std::vector<SparseVec> invol(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) invol[a * m + b] = SparseVec::unit(b * m + a);
  auto symbols = label_symbols(labels);
  return std::make_shared<const FinAlg>(labels, unit, matrix_unit_products(m), invol, Provenance::Matrix,
                                        symbols);
}

FinAlgPtr tilde_matrix_algebra() {
  const Mat2 j{{{GaussRat(0), GaussRat(1)}, {GaussRat(-1), GaussRat(0)}}};
  const Mat2 j_inv{{{GaussRat(0), GaussRat(-1)}, {GaussRat(1), GaussRat(0)}}};
  std::vector<SparseVec> invol(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Mat2 transposed{};
      transposed[b][a] = GaussRat(1);
      Mat2 img = mat2_mul(mat2_mul(j, transposed), j_inv);
      std::vector<GaussRat> flat{img[0][0], img[0][1], img[1][0], img[1][1]};
      invol[a * 2 + b] = SparseVec::from_dense(flat);
    }
  auto labels = matrix_unit_labels(2);
  std::vector<GaussRat> unit{GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(1)};
  auto symbols = label_symbols(labels);
  return std::make_shared<const FinAlg>(labels, unit, matrix_unit_products(2), invol,
                                        Provenance::TildeMatrix, symbols);
}

FinAlgPtr scalar_algebra() {
  return std::make_shared<const FinAlg>(std::vector<std::string>{"1"}, std::vector<GaussRat>{GaussRat(1)},
                                        std::vector<SparseVec>{SparseVec::unit(0)},
                                        std::vector<SparseVec>{SparseVec::unit(0)}, Provenance::Scalar);
}

FinAlgPtr scalar_pair_algebra() {
  std::vector<SparseVec> mult{SparseVec::unit(0), SparseVec(), SparseVec(), SparseVec::unit(1)};
  std::vector<SparseVec> invol{SparseVec::unit(1), SparseVec::unit(0)};
  std::map<std::string, SparseVec> symbols{{"e1", SparseVec::unit(0)}, {"e2", SparseVec::unit(1)}};
  return std::make_shared<const FinAlg>(std::vector<std::string>{"e1", "e2"},
                                        std::vector<GaussRat>{GaussRat(1), GaussRat(1)}, mult, invol,
                                        Provenance::ScalarPair, symbols);
}

FinAlgPtr op_pair_algebra(const FinAlgPtr& s) {
  const std::size_t d = s->dim();
  std::vector<std::string> labels;
  for (const auto& l : s->labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : s->labels()) labels.push_back("(0," + l + ")");
  std::vector<GaussRat> unit(2 * d);
  for (std::size_t k = 0; k < d; ++k) unit[k] = unit[d + k] = s->unit()[k];
  auto shift = [d](const SparseVec& v) {
    SparseVec r;
    for (const auto& [k, c] : v.entries()) r.push_back(k + d, c);
    return r;
  };
  std::vector<SparseVec> mult(4 * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      mult[i * 2 * d + j] = s->product(i, j);
      // (0,a)(0,b) = (0, b a) in the opposite algebra
      mult[(d + i) * 2 * d + (d + j)] = shift(s->product(j, i));
    }
  std::vector<SparseVec> invol(2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    invol[k] = SparseVec::unit(d + k);
    invol[d + k] = SparseVec::unit(k);
  }
  std::map<std::string, SparseVec> symbols;
  for (const auto& [name, v] : s->symbols()) {
    symbols[name + "_1"] = v;
    symbols[name + "_2"] = shift(v);
  }
  return std::make_shared<const FinAlg>(labels, unit, mult, invol, Provenance::OpPair, symbols);
}

FinAlgPtr klein_algebra() {
  // Group elements as bit masks: 1 = 00, τ = 01, γ = 10, τγ = 11.
  std::vector<SparseVec> mult(16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) mult[a * 4 + b] = SparseVec::unit(a ^ b);
  std::vector<SparseVec> invol{SparseVec::unit(0), SparseVec::unit(1, GaussRat(-1)),
                               SparseVec::unit(2, GaussRat(-1)), SparseVec::unit(3)};
  std::map<std::string, SparseVec> symbols{{"tau", SparseVec::unit(1)}, {"gamma", SparseVec::unit(2)}};
  return std::make_shared<const FinAlg>(std::vector<std::string>{"1", "tau", "gamma", "tau*gamma"},
                                        std::vector<GaussRat>{GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(0)},
                                        mult, invol, Provenance::KleinGroupAlgebra, symbols);
}

FinAlgPtr direct_sum(const FinAlgPtr& a, const FinAlgPtr& b) {
  const std::size_t da = a->dim(), db = b->dim(), d = da + db;
  std::vector<std::string> labels;
  for (const auto& l : a->labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b->labels()) labels.push_back("(0," + l + ")");
  std::vector<GaussRat> unit(a->unit());
  unit.insert(unit.end(), b->unit().begin(), b->unit().end());
  auto shift = [da](const SparseVec& v) {
    SparseVec r;
    for (const auto& [k, c] : v.entries()) r.push_back(k + da, c);
    return r;
  };
  std::vector<SparseVec> mult(d * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) mult[i * d + j] = a->product(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) mult[(da + i) * d + (da + j)] = shift(b->product(i, j));
  std::vector<SparseVec> invol;
  for (std::size_t i = 0; i < da; ++i) invol.push_back(a->involution(i));
  for (std::size_t i = 0; i < db; ++i) invol.push_back(shift(b->involution(i)));
  std::map<std::string, SparseVec> symbols;
  for (const auto& [name, v] : a->symbols()) symbols[name + "_1"] = v;
  for (const auto& [name, v] : b->symbols()) symbols[name + "_2"] = shift(v);
  return std::make_shared<const FinAlg>(labels, unit, mult, invol, Provenance::DirectSum, symbols);
}

std::string fin_alg_to_json(const FinAlg& alg) {
  using nlohmann::json;
  auto sparse_json = [](const SparseVec& v) {
    json arr = json::array();
    for (const auto& [k, c] : v.entries()) arr.push_back(json::array({k, c.to_string()}));
    return arr;
  };
  json j;
  j["dim"] = alg.dim();
  j["provenance"] = provenance_name(alg.provenance());
  j["basis"] = alg.labels();
  json unit = json::array();
  for (const auto& c : alg.unit()) unit.push_back(c.to_string());
  j["unit"] = unit;
  json mult = json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < alg.dim(); ++k) row.push_back(sparse_json(alg.product(i, k)));
    mult.push_back(row);
  }
  j["mult"] = mult;
  json invol = json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i) invol.push_back(sparse_json(alg.involution(i)));
  j["invol"] = invol;
  return j.dump();
}

Subspace commutator_span(const FinAlg& alg) {
  Subspace s(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) s.insert(alg.product(i, j) - alg.product(j, i));
  return s;
}

Subspace symmetric_part(const FinAlg& alg) {
  Subspace s(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) s.insert(SparseVec::unit(i) + alg.involution(i));
  return s;
}

Subspace antisymmetric_part(const FinAlg& alg) {
  Subspace s(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) s.insert(SparseVec::unit(i) - alg.involution(i));
  return s;
}

Subspace twisted_image(const FinAlg& alg, int rho) {
  Subspace s(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    s.insert(SparseVec::unit(i) - alg.involution(i).scaled(GaussRat(rho)));
  }
  return s;
}

Subspace span_in(const FinAlg& alg, const std::vector<FinAlgElem>& elems) {
  Subspace s(alg.dim());
  for (const auto& e : elems) s.insert(e.to_sparse());
  return s;
}

Subspace ideal_generated(const FinAlg& alg, const std::vector<FinAlgElem>& gens) {
  Subspace s(alg.dim());
  if (gens.empty()) return s;
  const FinAlgPtr& ptr = gens.front().algebra();
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      FinAlgElem left = FinAlgElem::basis(ptr, i) * g;
      for (std::size_t j = 0; j < alg.dim(); ++j) s.insert((left * FinAlgElem::basis(ptr, j)).to_sparse());
    }
  }
  return s;
}

}  // namespace qtlie
