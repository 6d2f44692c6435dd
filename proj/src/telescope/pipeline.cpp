#include "rook/diagonal/diagonal.hpp"
#include "rook/telescope/telescope.hpp"
#include "rook/walks/walks.hpp"

namespace rook {

RatFun reference_eta3() { return parse_ratfun("x*(x-1)*(64*x-1)*(3*x-2)*(6*x+1)", xst_vars()); }
RatFun stage_a_target() { return parse_ratfun("2*s*(3*s-2)*(s-1)^2", xst_vars()); }

RookPipeline rook_pipeline(char last_stage) {
  RookPipeline p;
  p.F = residue_embedding(step_generating_function(DirectionSet::rook()));
  auto s1 = stage_a_search(p.F, 1, default_stage_a_ansatz(p.F, total_order_support(1)), &p.log);
  auto s2 = stage_a_search(p.F, 2, default_stage_a_ansatz(p.F, x_only_support(2)), &p.log);
  if (s1.empty() || s2.empty()) throw std::runtime_error("stage A found no telescoper");
  p.a1 = normalize_stage_a(s1[0], mono::make({0, 1, 0, 0}), stage_a_target());
  p.a2 = normalize_stage_a(s2[0], mono::make({2, 0, 0, 0}), RatFun(reference_disc()));
  p.order0 = stage_a_search(p.F, 0, default_stage_a_ansatz(p.F, total_order_support(0)), &p.log);
  if (last_stage == 'A') return p;
  auto fs = default_factors(p.F);
  for (unsigned d = 0; d <= 3; ++d) p.b[d] = stage_b_search(p.a1.P, p.a2.P, d, fs, 8, &p.log);
  if (!p.b[3]) throw std::runtime_error("stage B found no telescoper of order 3");
  p.b[3] = normalize_stage_b(*p.b[3], 3, reference_eta3());
  if (last_stage == 'B') return p;
  p.c = stage_c_reconstruct(p.b[3]->P, p.b[3]->Q, {p.a1, p.a2}, p.F);
  p.c.cert.stage_log.insert(p.c.cert.stage_log.begin(), p.log.begin(), p.log.end());
  return p;
}

}  // namespace rook
