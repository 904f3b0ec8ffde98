#pragma once

// Seeded verification suites behind `qtlie verify`, and the random inputs
// they draw.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qtlie/ideals.hpp"

namespace qtlie {

/// splitmix64 step: advances state and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Generator for one case of one suite. The stream depends only on
/// (seed, suite, index), so cases can run in any order.
class CaseRng {
 public:
  CaseRng(std::uint64_t seed, std::string_view suite, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi]; the modulo bias is irrelevant for these ranges.
  int uniform(int lo, int hi);
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

// Random inputs. Coefficients come from {±1, ±1/2, ±i}.
GaussRat random_coefficient(CaseRng& rng);
QTorusElem random_torus_elem(CaseRng& rng, const TorusParams& p, int terms = 2, int max_exp = 3);
GenSym<QTorusElem> random_generator(CaseRng& rng, const TorusLie& lie, int max_exp = 3);
/// Sum of `terms` random generators.
TorusMat random_g_element(CaseRng& rng, const TorusLie& lie, int terms = 3, int max_exp = 3);
/// Every entry a random torus element; not in L_ρ in general.
TorusMat random_dense_matrix(CaseRng& rng, const TorusLie& lie, int max_exp = 2);
/// p(t1^m) or p(t2^m) in the torus.
QTorusElem lift_poly(const Poly& p, const TorusParams& params, bool second);
/// x f(t1^m) y + z g(t2^m) for random x, y, z.
QTorusElem random_ideal_elem(CaseRng& rng, const IdealFG& ideal);
/// Squarefree, nonzero at 0, symmetric under θ^m: a product of `factors`
/// distinct minimal symmetric factors with roots drawn from 1..max_root.
Poly random_valid_poly(CaseRng& rng, const TorusParams& params, bool second, int factors, int max_root = 6);

struct SuiteConfig {
  std::string suite;
  std::vector<TorusParams> params = TorusParams::all();
  int n = 3;
  std::vector<int> rhos{-1, 1};
  std::uint64_t seed = 42;
  std::optional<int> cases;  // per parameter triple; suite default otherwise
  std::optional<std::size_t> dim_cap;
};

const std::vector<std::string>& suite_names();
int default_cases(const std::string& suite);

struct SuiteResult {
  bool pass = true;
  nlohmann::json report;
};

/// Runs the suite. Throws std::invalid_argument for an unknown suite name or
/// an unusable config (e.g. n too small for the suite).
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace qtlie
