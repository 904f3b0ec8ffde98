#include "qtlie/lie_basis.hpp"

#include <stdexcept>

#include "qtlie/errors.hpp"

namespace qtlie {

SparseVec flatten(const FinMat& a, std::size_t ring_dim) {
  const std::size_t size = 2 * static_cast<std::size_t>(a.n());
  SparseVec v;
  // map order is (row, col) ascending, so the flat indices increase.
  for (const auto& [p, e] : a.entries()) {
    std::size_t base = (static_cast<std::size_t>(p.first) * size + static_cast<std::size_t>(p.second)) * ring_dim;
    SparseVec coeffs = e.to_sparse();
    for (const auto& [k, c] : coeffs.entries()) v.push_back(base + k, c);
  }
  return v;
}

FinMat unflatten(const SparseVec& v, int n, const FinAlgPtr& alg) {
  const std::size_t d = alg->dim(), size = 2 * static_cast<std::size_t>(n);
  FinMat m(n);
  for (const auto& [idx, c] : v.entries()) {
    std::size_t cell = idx / d, k = idx % d;
    m.add(static_cast<int>(cell / size), static_cast<int>(cell % size), c * FinAlgElem::basis(alg, k));
  }
  return m;
}

LieBasis::LieBasis(FinLieAlg lie, std::vector<FinMat> elems, std::vector<std::string> labels)
    : lie_(std::move(lie)), elems_(std::move(elems)), labels_(std::move(labels)) {
  const std::size_t size = 2 * static_cast<std::size_t>(lie_.n());
  span_ = Subspace(size * size * lie_.ring().dim());
  for (const auto& e : elems_) {
    if (!span_.insert(flat(e))) throw std::logic_error("LieBasis: elements are linearly dependent");
  }
}

FinMat LieBasis::combination(const SparseVec& coords) const {
  FinMat m(lie_.n());
  for (const auto& [k, c] : coords.entries()) m += c * elems_.at(k);
  return m;
}

LieBasis enumerate_basis(const FinLieAlg& lie) {
  const int n = lie.n();
  if (n < 2) throw std::invalid_argument("enumerate_basis: needs n >= 2");
  const FinRing& ring = lie.ring();
  const FinAlg& alg = *ring.algebra();
  const std::size_t d = ring.dim();
  auto name = [](const std::string& gen, int i, int j) {
    return gen + std::to_string(i) + std::to_string(j);
  };
  std::vector<FinMat> elems;
  std::vector<std::string> labels;
  auto push = [&](FinMat m, std::string label) {
    elems.push_back(std::move(m));
    labels.push_back(std::move(label));
  };

  Subspace trace_part = sum_of(symmetric_part(alg), ring.commutator_subspace());
  for (const auto& v : trace_part.basis()) {
    FinAlgElem a = FinAlgElem::from_sparse(ring.algebra(), v);
    push(lie.f(1, 1, a), "f11(" + a.to_string() + ")");
  }
  for (int i = 2; i <= n; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      FinAlgElem a = ring.basis(k);
      push(lie.f(i, i, a) - lie.f(1, 1, a), "(" + name("f", i, i) + "-f11)(" + alg.labels()[k] + ")");
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < d; ++k) push(lie.f(i, j, ring.basis(k)), name("f", i, j) + "(" + alg.labels()[k] + ")");
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        push(lie.g(i, j, ring.basis(k)), name("g", i, j) + "(" + alg.labels()[k] + ")");
        push(lie.h(i, j, ring.basis(k)), name("h", i, j) + "(" + alg.labels()[k] + ")");
      }
  // g_ii(a) = e_{i,n+i}(a - ρā): keep basis elements with independent images.
  Subspace twisted = twisted_image(alg, lie.rho());
  for (int i = 1; i <= n; ++i)
    for (std::size_t k : twisted.independent_indices()) {
      push(lie.g(i, i, ring.basis(k)), name("g", i, i) + "(" + alg.labels()[k] + ")");
      push(lie.h(i, i, ring.basis(k)), name("h", i, i) + "(" + alg.labels()[k] + ")");
    }
  return LieBasis(lie, std::move(elems), std::move(labels));
}

LieBasis enumerate_basis(const GradedLie<TorusRing>&) {
  throw UnsupportedError("enumerate_basis: the quantum torus is infinite-dimensional");
}

std::size_t graded_dim(std::size_t big_n, int rho) {
  const long long n = static_cast<long long>(big_n);
  return static_cast<std::size_t>(2 * n * n - rho * n);
}

}  // namespace qtlie
