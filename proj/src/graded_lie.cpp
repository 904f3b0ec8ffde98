#include <regex>
#include <stdexcept>

#include "qtlie/errors.hpp"
#include "qtlie/lie.hpp"

namespace qtlie {

char gen_kind_letter(GenKind k) {
  switch (k) {
    case GenKind::F: return 'F';
    case GenKind::G: return 'G';
    case GenKind::H: return 'H';
  }
  return '?';
}

bool RootLabel::is_zero() const {
  for (int w : weight) {
    if (w != 0) return false;
  }
  return true;
}

std::string RootLabel::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < weight.size(); ++k) {
    int w = weight[k];
    if (w == 0) continue;
    if (w < 0) {
      s += "-";
    } else if (!s.empty()) {
      s += "+";
    }
    if (std::abs(w) != 1) s += std::to_string(std::abs(w));
    s += "e" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

RootLabel operator+(const RootLabel& a, const RootLabel& b) {
  if (a.weight.size() != b.weight.size()) throw std::invalid_argument("RootLabel: rank mismatch");
  RootLabel r{a.weight};
  for (std::size_t k = 0; k < r.weight.size(); ++k) r.weight[k] += b.weight[k];
  return r;
}

bool is_root_or_zero(const RootLabel& r) {
  int nonzero = 0, abs_sum = 0;
  for (int w : r.weight) {
    if (w != 0) ++nonzero;
    abs_sum += std::abs(w);
  }
  // 0, ±2ε_i, or ±ε_i ± ε_j
  return nonzero == 0 || ((nonzero == 1 || nonzero == 2) && abs_sum == 2);
}

template <InvolutiveRing R>
GradedLie<R>::GradedLie(R ring, int n, int rho) : ring_(std::move(ring)), n_(n), rho_(rho) {
  if (n < 1) throw std::invalid_argument("g_{2n,rho}: n must be at least 1");
  if (rho != 1 && rho != -1) throw std::invalid_argument("g_{2n,rho}: rho must be 1 or -1");
}

template <InvolutiveRing R>
void GradedLie<R>::check_index(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::invalid_argument("generator index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside 1.." + std::to_string(n_));
  }
}

template <InvolutiveRing R>
typename GradedLie<R>::Mat GradedLie<R>::unit(int r, int c, const Elem& a) const {
  Mat m(n_);
  m.add(r, c, a);
  return m;
}

template <InvolutiveRing R>
typename GradedLie<R>::Mat GradedLie<R>::f(int i, int j, const Elem& a) const {
  check_index(i, j);
  Mat m(n_);
  m.add(i - 1, j - 1, a);
  m.add(n_ + j - 1, n_ + i - 1, GaussRat(-1) * ring_.bar(a));
  return m;
}

template <InvolutiveRing R>
typename GradedLie<R>::Mat GradedLie<R>::g(int i, int j, const Elem& a) const {
  check_index(i, j);
  Mat m(n_);
  m.add(i - 1, n_ + j - 1, a);
  m.add(j - 1, n_ + i - 1, GaussRat(-rho_) * ring_.bar(a));
  return m;
}

template <InvolutiveRing R>
typename GradedLie<R>::Mat GradedLie<R>::h(int i, int j, const Elem& a) const {
  check_index(i, j);
  Mat m(n_);
  m.add(n_ + i - 1, j - 1, a);
  m.add(n_ + j - 1, i - 1, GaussRat(-rho_) * ring_.bar(a));
  return m;
}

template <InvolutiveRing R>
typename GradedLie<R>::Mat GradedLie<R>::embed(const Gen& s) const {
  switch (s.kind) {
    case GenKind::F: return f(s.i, s.j, s.coeff);
    case GenKind::G: return g(s.i, s.j, s.coeff);
    case GenKind::H: return h(s.i, s.j, s.coeff);
  }
  throw std::logic_error("embed: bad generator kind");
}

template <InvolutiveRing R>
typename GradedLie<R>::Gen GradedLie<R>::normalize(const Gen& s) const {
  check_index(s.i, s.j);
  if (s.kind == GenKind::F) return s;
  if (s.i > s.j) return Gen{s.kind, s.j, s.i, GaussRat(-rho_) * ring_.bar(s.coeff)};
  if (s.i == s.j) {
    Elem c = GaussRat::frac(1, 2) * (s.coeff - GaussRat(rho_) * ring_.bar(s.coeff));
    return Gen{s.kind, s.i, s.j, c};
  }
  return s;
}

template <InvolutiveRing R>
typename GradedLie<R>::Mat GradedLie<R>::mul(const Mat& a, const Mat& b) const {
  if (a.n() != n_ || b.n() != n_) throw std::invalid_argument("mul: size mismatch");
  // Row-indexed view of b.
  std::map<int, std::vector<std::pair<int, const Elem*>>> rows;
  for (const auto& [p, v] : b.entries()) rows[p.first].emplace_back(p.second, &v);
  Mat r(n_);
  for (const auto& [p, v] : a.entries()) {
    auto it = rows.find(p.second);
    if (it == rows.end()) continue;
    for (const auto& [col, w] : it->second) r.add(p.first, col, v * *w);
  }
  return r;
}

template <InvolutiveRing R>
typename GradedLie<R>::Mat GradedLie<R>::bracket(const Mat& a, const Mat& b) const {
  return mul(a, b) - mul(b, a);
}

template <InvolutiveRing R>
std::vector<typename GradedLie<R>::Gen> GradedLie<R>::symbolic_bracket(const Gen& x, const Gen& y) const {
  check_index(x.i, x.j);
  check_index(y.i, y.j);
  std::map<std::tuple<GenKind, int, int>, Elem> acc;
  auto push = [&](GenKind k, int i, int j, const Elem& c) {
    Gen s = normalize(Gen{k, i, j, c});
    auto [it, inserted] = acc.try_emplace({s.kind, s.i, s.j}, s.coeff);
    if (!inserted) it->second = it->second + s.coeff;
  };
  auto negate_all = [](std::vector<Gen> v) {
    for (auto& s : v) s.coeff = GaussRat(-1) * s.coeff;
    return v;
  };
  const auto& a = x.coeff;
  const auto& b = y.coeff;
  const GaussRat minus(-1), mrho(-rho_);
  const int i = x.i, j = x.j, k = y.i, l = y.j;

  if (x.kind == GenKind::F && y.kind == GenKind::F) {
    if (j == k) push(GenKind::F, i, l, a * b);
    if (i == l) push(GenKind::F, k, j, minus * (b * a));
  } else if (x.kind == GenKind::F && y.kind == GenKind::G) {
    if (j == k) push(GenKind::G, i, l, a * b);
    if (j == l) push(GenKind::G, k, i, b * ring_.bar(a));
  } else if (x.kind == GenKind::F && y.kind == GenKind::H) {
    if (i == l) push(GenKind::H, k, j, minus * (b * a));
    if (i == k) push(GenKind::H, j, l, minus * (ring_.bar(a) * b));
  } else if (x.kind == GenKind::G && y.kind == GenKind::H) {
    if (j == k) push(GenKind::F, i, l, a * b);
    if (l == i) push(GenKind::F, j, k, ring_.bar(a) * ring_.bar(b));
    if (j == l) push(GenKind::F, i, k, mrho * (a * ring_.bar(b)));
    if (k == i) push(GenKind::F, j, l, mrho * (ring_.bar(a) * b));
  } else if (x.kind == y.kind) {
    return {};  // [g, g] = 0 = [h, h]
  } else {
    return negate_all(symbolic_bracket(y, x));
  }

  std::vector<Gen> out;
  for (auto& [key, c] : acc) {
    if (!c.is_zero()) out.push_back(Gen{std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
  }
  return out;
}

template <InvolutiveRing R>
typename GradedLie<R>::Mat GradedLie<R>::embed_sum(const std::vector<Gen>& terms) const {
  Mat m(n_);
  for (const auto& t : terms) m += embed(t);
  return m;
}

template <InvolutiveRing R>
typename GradedLie<R>::Mat GradedLie<R>::star(const Mat& a) const {
  // A*_{rc} = s_r s'_c bar(A_{σc, σr}) with σ swapping the two halves,
  // s_r = ρ for r in the top half, s'_c = ρ for c in the left half.
  auto sigma = [this](int x) { return x < n_ ? x + n_ : x - n_; };
  Mat r(n_);
  for (const auto& [p, v] : a.entries()) {
    int row = sigma(p.second), col = sigma(p.first);
    int sign = (row < n_ ? rho_ : 1) * (col < n_ ? rho_ : 1);
    r.add(row, col, GaussRat(sign) * ring_.bar(v));
  }
  return r;
}

template <InvolutiveRing R>
bool GradedLie<R>::lrho_check(const Mat& a) const {
  return star(a) == GaussRat(-1) * a;
}

template <InvolutiveRing R>
typename GradedLie<R>::Elem GradedLie<R>::trace(const Mat& a) const {
  Elem t = ring_.zero();
  for (const auto& [p, v] : a.entries()) {
    if (p.first == p.second) t = t + v;
  }
  return t;
}

template <InvolutiveRing R>
bool GradedLie<R>::grho_check(const Mat& a) const {
  if (n_ < 2) throw std::invalid_argument("grho_check: the trace criterion needs n >= 2");
  return lrho_check(a) && ring_.in_commutator(trace(a));
}

template <InvolutiveRing R>
RootLabel GradedLie<R>::root_of_position(int r, int c) const {
  RootLabel label{std::vector<int>(n_, 0)};
  // diag(H) acts on e_rc by the weight of row minus the weight of column,
  // where the top half carries +ε and the bottom half -ε.
  if (r < n_) label.weight[r] += 1; else label.weight[r - n_] -= 1;
  if (c < n_) label.weight[c] -= 1; else label.weight[c - n_] += 1;
  return label;
}

template <InvolutiveRing R>
std::map<RootLabel, typename GradedLie<R>::Mat> GradedLie<R>::root_decompose(const Mat& a) const {
  if (!lrho_check(a)) throw std::invalid_argument("root_decompose: matrix is not in L_rho");
  std::map<RootLabel, Mat> parts;
  for (const auto& [p, v] : a.entries()) {
    auto [it, inserted] = parts.try_emplace(root_of_position(p.first, p.second), n_);
    it->second.add(p.first, p.second, v);
  }
  return parts;
}

template <InvolutiveRing R>
std::pair<typename GradedLie<R>::Gen, typename GradedLie<R>::Gen> GradedLie<R>::perfectness_witness(
    const Gen& sym) const {
  if (n_ < 3) throw UnsupportedError("perfectness witnesses need n >= 3");
  check_index(sym.i, sym.j);
  if (sym.kind == GenKind::F && sym.i == sym.j) {
    throw std::invalid_argument("perfectness_witness: f_ii is not a generator");
  }
  int k = 1;
  while (k == sym.i || k == sym.j) ++k;
  const Elem one = ring_.one();
  switch (sym.kind) {
    case GenKind::F: return {gen(GenKind::F, sym.i, k, sym.coeff), gen(GenKind::F, k, sym.j, one)};
    case GenKind::G: return {gen(GenKind::F, sym.i, k, sym.coeff), gen(GenKind::G, k, sym.j, one)};
    case GenKind::H: return {gen(GenKind::F, k, sym.j, GaussRat(-1) * one), gen(GenKind::H, sym.i, k, sym.coeff)};
  }
  throw std::logic_error("perfectness_witness: bad generator kind");
}

template <InvolutiveRing R>
typename GradedLie<R>::Gen GradedLie<R>::parse_gen(const std::string& text) const {
  static const std::regex pattern(R"(^\s*([FGH])\s*\(\s*(\d+)\s*,\s*(\d+)\s*;(.*)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw ParseError("generator must look like F(i,j; coefficient): \"" + text + "\"");
  }
  GenKind kind = m[1] == "F" ? GenKind::F : (m[1] == "G" ? GenKind::G : GenKind::H);
  int i = std::stoi(m[2]), j = std::stoi(m[3]);
  check_index(i, j);
  return Gen{kind, i, j, ring_.parse(m[4])};
}

template class GradedLie<TorusRing>;
template class GradedLie<FinRing>;

}  // namespace qtlie
