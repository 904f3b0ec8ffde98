#pragma once

// Exact linear algebra over Q(i) on sparse vectors: spans, membership,
// coordinates, kernels and intersections. Everything in the library that
// needs a rank goes through Subspace.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qtlie/gauss_rational.hpp"

namespace qtlie {

/// Sorted (index, nonzero value) pairs.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, GaussRat>;

  SparseVec() = default;
  static SparseVec from_dense(const std::vector<GaussRat>& dense);
  static SparseVec unit(std::size_t idx, const GaussRat& value = GaussRat(1));

  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  GaussRat get(std::size_t idx) const;
  std::vector<GaussRat> to_dense(std::size_t dim) const;

  /// Appends an entry; indices must be strictly increasing.
  void push_back(std::size_t idx, GaussRat value);
  /// Adds value at idx, keeping order; removes the entry if it cancels.
  void add_at(std::size_t idx, const GaussRat& value);

  /// *this += a * x
  void axpy(const GaussRat& a, const SparseVec& x);
  SparseVec scaled(const GaussRat& a) const;

  friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
  friend SparseVec operator-(const SparseVec& a, const SparseVec& b);
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Span of a growing list of vectors, held in row-echelon form. Every
/// inserted vector (independent or not) gets an insertion index, and
/// coordinates are reported against those indices.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), pivot_row_(ambient_dim, -1) {}

  /// Returns true when v was independent of the current span.
  bool insert(const SparseVec& v);

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t inserted() const { return inserted_; }

  /// v minus its projection along the echelon rows; zero iff v is in the span.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
  /// Coefficients over insertion indices with sum c_k v_k == v, or nullopt.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;

  /// Linear relations found so far: each sum c_k v_k == 0 over insertion indices.
  const std::vector<SparseVec>& relations() const { return relations_; }
  /// Insertion indices of the vectors that were independent when inserted.
  const std::vector<std::size_t>& independent_indices() const { return independent_; }
  /// The independent vectors, in insertion order.
  const std::vector<SparseVec>& basis() const { return originals_; }
  /// Pivot columns of the echelon rows.
  std::vector<std::size_t> pivots() const;
  bool is_pivot(std::size_t col) const { return col < ambient_ && pivot_row_[col] >= 0; }

  bool contains_subspace(const Subspace& other) const;
  bool equals(const Subspace& other) const {
    return dim() == other.dim() && contains_subspace(other);
  }

 private:
  struct Row {
    SparseVec vec;   // leading entry 1 at the pivot
    SparseVec comb;  // vec == sum comb_k * (k-th inserted vector)
  };
  std::pair<SparseVec, SparseVec> reduce_tracked(const SparseVec& v) const;

  std::size_t ambient_ = 0;
  std::vector<int> pivot_row_;
  std::vector<Row> rows_;
  std::vector<SparseVec> originals_;
  std::vector<std::size_t> independent_;
  std::vector<SparseVec> relations_;
  std::size_t inserted_ = 0;
};

Subspace span_of(std::size_t ambient_dim, const std::vector<SparseVec>& vectors);
std::size_t rank_of(std::size_t ambient_dim, const std::vector<SparseVec>& vectors);

/// Basis of {c : sum c_k columns[k] == 0}, vectors indexed by k.
std::vector<SparseVec> kernel_of(std::size_t ambient_dim, const std::vector<SparseVec>& columns);

/// Basis of the intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum_of(const Subspace& a, const Subspace& b);

}  // namespace qtlie
