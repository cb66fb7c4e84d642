#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rghw/boxcomb.hpp"

namespace rghw::testing {

struct LemmaOutcome {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string first_violation;
};

/// Exhaustive checks of the shadow/prefix statements the closed formula
/// rests on, over every subset where a statement quantifies over subsets:
///   clements_lindstrom   grad_{u+1}(L(S)) inside L(grad_{u+1}(S)), S in F_u
///   slice_shadow_prefix  grad_v(L(S)) inside L(grad_v(S)) for u <= v <= k
///   full_shadow_prefix   |grad(L(S))| <= |grad(S)|
///   lex_predecessor      max_lex{f in F_u : f <=_lex y} <=_P y
///   prefix_sandwich      grad_{u1}(N_u) inside N_{u1} inside grad_{u1}(N_u*)
///   prefix_shadow_count  |grad(N(r))| = r - |N_{u1}| + |grad(N_{u1})|
///   extremal_footprint   max_{|S|=r} |Delta(S)| = |Delta(N(r))| = code(a_r) + s - r
///   leq_prefix_shadow    grad(first r of F_{<=d}) = {a : a_r <=_lex a}
///   prefix_shadow_card   |grad(N(r))| = n - code(a_r) - s + r
std::vector<LemmaOutcome> run_lemma_suite(const BoxShape& shape);

}  // namespace rghw::testing
