#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartanfree/coherent.hpp"
#include "cartanfree/hfree.hpp"

namespace cartanfree {

// Certificate that two rank-1 tables differ by a multiplicative system of
// nonzero constants c_alpha (so they are twists of each other over C).
struct ScalingCertificate {
  std::map<Root, Rational> c;
  // c_i with c_alpha = prod c_i^{alpha_i}, when one exists over Q.
  std::optional<std::vector<Rational>> witness;
};

// Finds c with A'_alpha = c_alpha A_alpha, extended multiplicatively from a
// simple system and checked on all of Delta. nullopt when no system exists.
std::optional<ScalingCertificate> scaling_equivalent(const HFreeModule& m,
                                                     const HFreeModule& m_prime);

// Half-space placement (per coordinate) of the minimal nonzero closed subset
// of the interior support graph at lambda0. '-' means S_{-e_i}.
enum class HalfSpaceSign { Minus, Plus };

std::vector<HalfSpaceSign> min_submodule_support_signs(const HFreeModule& m,
                                                       const Box& box);

struct TwistStep {
  int k = 0;                          // 1-based Weyl twist index
  std::map<Root, Rational> root_signs;  // phi_k(X_alpha) = sign * X_{w_k(alpha)}
};

struct CanonicalizationResult {
  std::vector<int> omega;             // 1-based indices, sorted
  std::vector<TwistStep> twists;      // applied in order
  ScalingCertificate scaling;         // normalized table = c_alpha * (M0 table)
  bool verdict = false;
  std::string message;                // non-empty when verdict is false
};

// Normalize by the Weyl twists picked from the minimal-submodule support, then
// match against M0 up to scaling. Every verified rank-1 table must succeed;
// failure signals a bug or a counterexample and is reported, never masked.
CanonicalizationResult canonicalize(const HFreeModule& m);

// Replays the recorded twists and inverse scalings; must reproduce M0 exactly.
HFreeModule replay(const HFreeModule& m, const CanonicalizationResult& result);

}  // namespace cartanfree
