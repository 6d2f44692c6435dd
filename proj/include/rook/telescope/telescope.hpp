#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rook/exactmath/matrix.hpp"
#include "rook/ore/ore.hpp"

namespace rook {

// (P, S, T) claimed to satisfy P(F) = dS/ds + dT/dt.
struct Certificate {
  DiffOp P;
  RatFun S;
  RatFun T;
  bool verified = false;
  std::vector<std::string> stage_log;
};

struct KeyEquationReport {
  bool pass = false;
  RatFun residual;
};

// Computes P(F) - dS/ds - dT/dt; passes iff it is identically zero.
KeyEquationReport verify_key_equation(const Certificate& cert, const RatFun& F);

struct ParamSolution {
  std::vector<RatFun> y;
  std::vector<RatFun> e;  // free of var
};

struct ParamSystemResult {
  std::vector<ParamSolution> basis;  // empty when the ansatz has no solution
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  bool filtered = false;  // emptiness certified by a rational specialization
};

// Solves dy/dvar + A y = B e for y in K(var)^n, e in K^d, with the ansatz
// y = z / den, z polynomial in var of degree <= bound. K is the fraction field
// of the ring's other variables. Throws std::invalid_argument on malformed
// shapes.
ParamSystemResult solve_parametrized_system(const ExactMatrix& A, const ExactMatrix& B,
                                            const ZPoly& den, unsigned bound, std::string_view var);

// Candidate certificate denominators: products of powers (<= max_power) of
// the factors that involve the solving variable, ordered by degree in that
// variable and then by exponent vector.
struct Ansatz {
  std::vector<mono::Key> support;  // operator monomials d_x^i d_s^j
  std::vector<ZPoly> denominators;
  unsigned numerator_bound = 8;
};

std::vector<ZPoly> denominator_candidates(const std::vector<ZPoly>& factors, std::size_t var,
                                          unsigned max_power);

// The named factors of the rook instance computed from F: q1 (denominator of
// F without its monomial part) and disc_t(q1).
struct RookFactors {
  ZPoly q1;
  ZPoly disc;          // disc_t(q1) in the reference normalization
  ZPoly disc_computed; // resultant-based value before normalization
};
RookFactors rook_factors(const RatFun& F);
// Reference form of disc_t(q1) = (x-s)(16xs^2-4s^3-24xs+4s^2+9x-s).
ZPoly reference_disc();
// Factor list {t-x, q1, disc, s, t, s-1, 3s-2}.
std::vector<ZPoly> default_factors(const RatFun& F);

// Support of all d_x^i d_s^j with i + j <= r.
std::vector<mono::Key> total_order_support(unsigned r);
// Support {1, d_x, ..., d_x^r}.
std::vector<mono::Key> x_only_support(unsigned r);

struct StageACertificate {
  DiffOp P;      // in (x, s) derivatives, coefficients in Q(x, s)
  RatFun phi;    // P(F) = d/dt (phi F)
  ZPoly denominator;
};

// Default ansatz: operator support for the order, denominators from
// default_factors restricted to those involving t, numerator bound 8.
Ansatz default_stage_a_ansatz(const RatFun& F, std::vector<mono::Key> support);
std::vector<StageACertificate> stage_a_search(const RatFun& F, unsigned total_order,
                                              const Ansatz& ansatz,
                                              std::vector<std::string>* log = nullptr);
bool verify_stage_a(const StageACertificate& c, const RatFun& F);
// Scales the certificate so that the coefficient of d^key equals target.
StageACertificate normalize_stage_a(const StageACertificate& c, mono::Key key, const RatFun& target);

struct StageBResult {
  DiffOp P;  // sum eta_i d_x^i, eta_i in Q(x)
  DiffOp Q;  // phi0 + phi1 d_x
  ZPoly denominator;
};

// P1 = a d_s + b d_x + c presents d_s, P2 = a' d_x^2 + b' d_x + c' presents d_x^2.
// Finds P of d_x-order d with P = d_s Q modulo <P1, P2>, or nullopt.
std::optional<StageBResult> stage_b_search(const DiffOp& P1, const DiffOp& P2, unsigned d,
                                           const std::vector<ZPoly>& factors,
                                           unsigned numerator_bound = 8,
                                           std::vector<std::string>* log = nullptr);
StageBResult normalize_stage_b(const StageBResult& r, unsigned top, const RatFun& target);

struct Division {
  DiffOp A1, A2, remainder;
};
// Divides R by P1 (eliminating d_s) and then by P2 (reducing d_x^2).
Division divide_by_pair(const DiffOp& R, const DiffOp& P1, const DiffOp& P2);

struct StageCResult {
  Certificate cert;
  Division division;
  bool division_exact = false;
};

StageCResult stage_c_reconstruct(const DiffOp& P, const DiffOp& Q,
                                 const std::vector<StageACertificate>& stage_a, const RatFun& F);

struct LipshitzReport {
  unsigned first_N;
  Integer first_unknowns;
  unsigned refined_N;
  Integer rows;  // e_N
  Integer cols;  // u_N
};
LipshitzReport lipshitz_bounds();

// Stages A, B, C for the rook embedding with the normalizations under
// which the reference values appear. last_stage is 'A', 'B' or 'C'.
struct RookPipeline {
  RatFun F;
  StageACertificate a1, a2;
  std::vector<StageACertificate> order0;
  std::optional<StageBResult> b[4];  // by d_x-order
  StageCResult c;
  std::vector<std::string> log;
};
RookPipeline rook_pipeline(char last_stage = 'C');
// eta_3 of the reference telescoper and the first-order normalization target.
RatFun reference_eta3();
RatFun stage_a_target();

}  // namespace rook
