#include "qtlie/rings.hpp"

namespace qtlie {

FinRing::FinRing(FinAlgPtr alg)
    : alg_(std::move(alg)), commutators_(std::make_shared<const Subspace>(commutator_span(*alg_))) {}

}  // namespace qtlie
