#pragma once

#include <optional>

#include "rook/exactmath/poly.hpp"

namespace rook {

// a / b when b divides a exactly in Z[vars], otherwise nullopt.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);
// Throws std::domain_error when the division is not exact.
ZPoly divide_or_throw(const ZPoly& a, const ZPoly& b);

// Greatest common divisor, normalized to integer content 1 and positive
// leading coefficient. gcd(a, 0) is the normalized a; gcd(0, 0) = 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
// Same, but keeping the gcd of the integer contents as a factor.
ZPoly gcd_with_content(const ZPoly& a, const ZPoly& b);
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

// gcd of the coefficients of p with respect to var, normalized.
ZPoly content_in(const ZPoly& p, std::size_t var);

// p with positive leading coefficient.
ZPoly sign_normalized(const ZPoly& p);

// Leading coefficient with respect to var.
ZPoly leading_coeff_in(const ZPoly& p, std::size_t var);

// Resultant of a and b with respect to var (Sylvester determinant).
ZPoly resultant(const ZPoly& a, const ZPoly& b, std::size_t var);
// (-1)^(n(n-1)/2) res(a, a') / lc(a), n = deg_var(a).
ZPoly discriminant(const ZPoly& a, std::size_t var);

}  // namespace rook
