#pragma once

#include "rook/exactmath/ratfun.hpp"
#include "rook/exactmath/seqtable.hpp"

namespace rook {

// The ring {x, s, t} holding the residue embedding and all certificates.
Vars xst_vars();

// Diagonal coefficients c_{n,n,n}, n <= n_max, of f in Q[[s,t,u]] via a
// truncated trivariate expansion. Rejects f whose denominator vanishes at 0.
SeqTable expand_diagonal(const RatFun& f, unsigned n_max);

// F = f(s, t/s, x/t) / (s t) for f in (s,t,u).
RatFun residue_embedding(const RatFun& f);

}  // namespace rook
