#pragma once

// g_{2n,ρ}(R) inside gl_{2n}(R): generators f_ij, g_ij, h_ij, sparse matrix
// brackets, the generator bracket table, the star involution and the root
// grading by ε_1..ε_n.
//
// Matrix positions are 0-based (row, col) in [0, 2n); generator indices are
// 1-based as in the usual notation.

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qtlie/rings.hpp"

namespace qtlie {

enum class GenKind { F, G, H };

char gen_kind_letter(GenKind k);

/// f_ij(a), g_ij(a) or h_ij(a).
template <class E>
struct GenSym {
  GenKind kind;
  int i;
  int j;
  E coeff;

  std::string to_string() const {
    return std::string(1, gen_kind_letter(kind)) + "(" + std::to_string(i) + "," + std::to_string(j) + "; " +
           coeff.to_string() + ")";
  }
  friend bool operator==(const GenSym&, const GenSym&) = default;
  friend std::ostream& operator<<(std::ostream& os, const GenSym& s) { return os << s.to_string(); }
};

/// Sparse 2n x 2n matrix over a ring; zero entries are never stored.
template <class E>
class LieMat {
 public:
  using Pos = std::pair<int, int>;

  explicit LieMat(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<Pos, E>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  const E* at(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? nullptr : &it->second;
  }

  void add(int r, int c, const E& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
      it->second = it->second + v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  LieMat& operator+=(const LieMat& o) {
    check_shape(o);
    for (const auto& [p, v] : o.entries_) add(p.first, p.second, v);
    return *this;
  }
  LieMat& operator-=(const LieMat& o) {
    check_shape(o);
    for (const auto& [p, v] : o.entries_) add(p.first, p.second, GaussRat(-1) * v);
    return *this;
  }
  friend LieMat operator+(LieMat a, const LieMat& b) { return a += b; }
  friend LieMat operator-(LieMat a, const LieMat& b) { return a -= b; }
  friend LieMat operator*(const GaussRat& c, const LieMat& a) {
    LieMat r(a.n_);
    for (const auto& [p, v] : a.entries_) r.add(p.first, p.second, c * v);
    return r;
  }
  friend bool operator==(const LieMat& a, const LieMat& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }

  /// "{(1,2): t1, (4,3): -t1}" with 1-based positions.
  std::string to_string() const {
    std::string s = "{";
    for (const auto& [p, v] : entries_) {
      if (s.size() > 1) s += ", ";
      s += "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + "): " + v.to_string();
    }
    return s + "}";
  }
  friend std::ostream& operator<<(std::ostream& os, const LieMat& a) { return os << a.to_string(); }

 private:
  void check_shape(const LieMat& o) const {
    if (o.n_ != n_) throw std::invalid_argument("LieMat: size mismatch");
  }

  int n_;
  std::map<Pos, E> entries_;
};

/// A weight Σ w_k ε_k; the zero vector is the zero weight.
struct RootLabel {
  std::vector<int> weight;

  bool is_zero() const;
  /// "0", "e1-e2", "e1+e3", "2e1", "-e1-e2", "-2e2"
  std::string to_string() const;
  friend auto operator<=>(const RootLabel&, const RootLabel&) = default;
};

RootLabel operator+(const RootLabel& a, const RootLabel& b);
/// Whether the weight is 0 or a root of BC_n realised in g_{2n,ρ}.
bool is_root_or_zero(const RootLabel& r);

/// g_{2n,ρ}(R) for a fixed ring, n and ρ.
template <InvolutiveRing R>
class GradedLie {
 public:
  using Elem = typename R::Elem;
  using Mat = LieMat<Elem>;
  using Gen = GenSym<Elem>;

  /// Throws std::invalid_argument unless n >= 1 and ρ = ±1.
  GradedLie(R ring, int n, int rho);

  const R& ring() const { return ring_; }
  int n() const { return n_; }
  int rho() const { return rho_; }

  Mat zero() const { return Mat(n_); }
  /// e_{rc}(a), 0-based
  Mat unit(int r, int c, const Elem& a) const;

  // Generators, 1-based indices.
  Mat f(int i, int j, const Elem& a) const;
  Mat g(int i, int j, const Elem& a) const;
  Mat h(int i, int j, const Elem& a) const;
  Mat embed(const Gen& s) const;

  /// G and H with i > j rewritten via g_ij(a) = -ρ g_ji(ā); diagonal G and H
  /// coefficients replaced by (a - ρā)/2, which gives the same matrix.
  Gen normalize(const Gen& s) const;

  Mat mul(const Mat& a, const Mat& b) const;
  Mat bracket(const Mat& a, const Mat& b) const;

  /// The generator bracket table; result normalized, like terms combined,
  /// zero terms dropped.
  std::vector<Gen> symbolic_bracket(const Gen& x, const Gen& y) const;
  Mat embed_sum(const std::vector<Gen>& terms) const;

  /// A* = M^{-1} Ā^t M with M = [[0, I], [ρI, 0]].
  Mat star(const Mat& a) const;
  bool lrho_check(const Mat& a) const;
  Elem trace(const Mat& a) const;
  /// Membership in g_{2n,ρ}(R): A* = -A and tr A ∈ [R,R]. Needs n >= 2.
  bool grho_check(const Mat& a) const;

  RootLabel root_of_position(int r, int c) const;
  /// Components of an L_ρ matrix by weight; throws std::invalid_argument
  /// when A* != -A.
  std::map<RootLabel, Mat> root_decompose(const Mat& a) const;

  /// (x, y) with [x, y] = sym, using an index k outside {i, j}. Needs n >= 3
  /// (UnsupportedError otherwise); f_ii is not a generator and is rejected.
  std::pair<Gen, Gen> perfectness_witness(const Gen& sym) const;

  /// Parses "F(1,2; t1*t2)" with the coefficient in the ring's syntax.
  Gen parse_gen(const std::string& text) const;

 private:
  void check_index(int i, int j) const;
  Gen gen(GenKind k, int i, int j, const Elem& a) const { return Gen{k, i, j, a}; }

  R ring_;
  int n_;
  int rho_;
};

extern template class GradedLie<TorusRing>;
extern template class GradedLie<FinRing>;

}  // namespace qtlie
