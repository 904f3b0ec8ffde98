#include "qtlie/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtlie {

SparseVec SparseVec::from_dense(const std::vector<GaussRat>& dense) {
  SparseVec v;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (!dense[k].is_zero()) v.entries_.emplace_back(k, dense[k]);
  }
  return v;
}

SparseVec SparseVec::unit(std::size_t idx, const GaussRat& value) {
  SparseVec v;
  if (!value.is_zero()) v.entries_.emplace_back(idx, value);
  return v;
}

GaussRat SparseVec::get(std::size_t idx) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == idx) return it->second;
  return GaussRat();
}

std::vector<GaussRat> SparseVec::to_dense(std::size_t dim) const {
  std::vector<GaussRat> d(dim);
  for (const auto& [k, v] : entries_) {
    if (k >= dim) throw std::out_of_range("SparseVec::to_dense: index beyond dimension");
    d[k] = v;
  }
  return d;
}

void SparseVec::push_back(std::size_t idx, GaussRat value) {
  if (!entries_.empty() && entries_.back().first >= idx) {
    throw std::invalid_argument("SparseVec::push_back: indices must increase");
  }
  if (!value.is_zero()) entries_.emplace_back(idx, std::move(value));
}

void SparseVec::add_at(std::size_t idx, const GaussRat& value) {
  if (value.is_zero()) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == idx) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  } else {
    entries_.insert(it, Entry(idx, value));
  }
}

void SparseVec::axpy(const GaussRat& a, const SparseVec& x) {
  if (a.is_zero() || x.is_zero()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + x.entries_.size());
  auto i = entries_.begin();
  auto j = x.entries_.begin();
  while (i != entries_.end() || j != x.entries_.end()) {
    if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == entries_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      GaussRat s = i->second + a * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
}

SparseVec SparseVec::scaled(const GaussRat& a) const {
  SparseVec v;
  if (a.is_zero()) return v;
  v.entries_.reserve(entries_.size());
  for (const auto& [k, x] : entries_) v.entries_.emplace_back(k, x * a);
  return v;
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
  SparseVec r = a;
  r.axpy(GaussRat(1), b);
  return r;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
  SparseVec r = a;
  r.axpy(GaussRat(-1), b);
  return r;
}

std::pair<SparseVec, SparseVec> Subspace::reduce_tracked(const SparseVec& v) const {
  SparseVec residual = v;
  SparseVec comb;
  std::size_t pos = 0;
  while (pos < residual.nnz()) {
    const auto& [col, value] = residual.entries()[pos];
    if (col >= ambient_) throw std::out_of_range("Subspace: vector index beyond ambient dimension");
    int r = pivot_row_[col];
    if (r < 0) {
      ++pos;
      continue;
    }
    GaussRat coef = value;
    residual.axpy(-coef, rows_[r].vec);
    comb.axpy(coef, rows_[r].comb);
    // Entries before `pos` are untouched since rows start at their pivot.
  }
  return {std::move(residual), std::move(comb)};
}

SparseVec Subspace::reduce(const SparseVec& v) const { return reduce_tracked(v).first; }

std::optional<SparseVec> Subspace::coordinates(const SparseVec& v) const {
  auto [residual, comb] = reduce_tracked(v);
  if (!residual.is_zero()) return std::nullopt;
  return comb;
}

bool Subspace::insert(const SparseVec& v) {
  std::size_t index = inserted_++;
  auto [residual, comb] = reduce_tracked(v);
  if (residual.is_zero()) {
    // v - comb == 0 is a relation among inserted vectors.
    SparseVec rel = SparseVec::unit(index) - comb;
    relations_.push_back(std::move(rel));
    return false;
  }
  // residual = v - comb;  normalize so the pivot entry is 1.
  SparseVec row_comb = SparseVec::unit(index) - comb;
  GaussRat inv = residual.entries().front().second.inverse();
  std::size_t pivot = residual.entries().front().first;
  pivot_row_[pivot] = static_cast<int>(rows_.size());
  rows_.push_back(Row{residual.scaled(inv), row_comb.scaled(inv)});
  originals_.push_back(v);
  independent_.push_back(index);
  return true;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(r.vec.entries().front().first);
  return p;
}

bool Subspace::contains_subspace(const Subspace& other) const {
  for (const auto& v : other.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace span_of(std::size_t ambient_dim, const std::vector<SparseVec>& vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

std::size_t rank_of(std::size_t ambient_dim, const std::vector<SparseVec>& vectors) {
  return span_of(ambient_dim, vectors).dim();
}

std::vector<SparseVec> kernel_of(std::size_t ambient_dim, const std::vector<SparseVec>& columns) {
  return span_of(ambient_dim, columns).relations();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  // sum x_i a_i == sum y_j b_j  <=>  (x, -y) is a relation of [a | b].
  std::vector<SparseVec> cols = a.basis();
  cols.insert(cols.end(), b.basis().begin(), b.basis().end());
  Subspace out(a.ambient_dim());
  for (const auto& rel : kernel_of(a.ambient_dim(), cols)) {
    SparseVec w;
    for (const auto& [k, c] : rel.entries()) {
      if (k < a.dim()) w.axpy(c, a.basis()[k]);
    }
    out.insert(w);
  }
  return out;
}

Subspace sum_of(const Subspace& a, const Subspace& b) {
  Subspace out(a.ambient_dim());
  for (const auto& v : a.basis()) out.insert(v);
  for (const auto& v : b.basis()) out.insert(v);
  return out;
}

}  // namespace qtlie
