#pragma once

#include <string>
#include <vector>

#include "biset/group_context.hpp"

namespace biset {

struct SuiteResult {
  std::string suite;
  std::string group;
  bool pass = true;
  long checks = 0;
  std::vector<std::string> counterexamples;  // capped
  double seconds = 0;

  void fail(std::string what);
};

// multiply_star against multiply_bruteforce on all left-free basis pairs.
SuiteResult verify_mult(const GroupContext& ctx);
// sigma multiplicative on bifree basis pairs, sigma_inverse round trip, equivariance, injectivity.
SuiteResult verify_ghost(const GroupContext& ctx);
// Phi_Delta(U)(Delta(a)) = |C_G(U)| Phi_U(a) over class representatives U and the basis of B(G).
SuiteResult verify_bp_lemma(const GroupContext& ctx);
// relation_direct against relation_character on all pairs, plus invariance of the epimorphism reduction.
SuiteResult verify_criterion(const GroupContext& ctx);
// rho of sigma(e_(U,chi,V)) against the closed formula; its nonvanishing criterion; rho multiplicative.
SuiteResult verify_rho(const GroupContext& ctx);
SuiteResult verify_positivity(const GroupContext& ctx);
// Delta(eps_hat_W) against the sums of e_(V,chi) with V^(infinity) isomorphic to W.
SuiteResult verify_refinement(const GroupContext& ctx);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const GroupContext& ctx);

}  // namespace biset
