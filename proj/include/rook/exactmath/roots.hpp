#pragma once

#include <vector>

#include "rook/exactmath/poly.hpp"

namespace rook {

// Dense univariate coefficients, index = power.
using UniPoly = std::vector<Rational>;

UniPoly to_unipoly(const MPoly& p);
UniPoly to_unipoly(const ZPoly& p);
Rational eval(const UniPoly& p, const Rational& x);

// Distinct rational roots in increasing order. The zero polynomial is rejected.
std::vector<Rational> rational_roots(const UniPoly& p);
inline std::vector<Rational> rational_roots(const ZPoly& p) { return rational_roots(to_unipoly(p)); }

// Multiplicity of the root r of p (0 if not a root).
unsigned root_multiplicity(UniPoly p, const Rational& r);

}  // namespace rook
