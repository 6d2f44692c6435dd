#include <algorithm>
#include <stdexcept>

#include "rook/diagonal/diagonal.hpp"
#include "rook/telescope/telescope.hpp"

namespace rook {
namespace {

RatFun parse(std::string_view text) { return parse_ratfun(text, xst_vars()); }
ZPoly zparse(std::string_view text) { return parse(text).num(); }

mono::Key dkey(unsigned i, unsigned j) { return mono::make({i, j, 0, 0}); }

DiffOp monomial_op(Vars vars, mono::Key a, const RatFun& c) {
  DiffOp r(vars);
  r.add_term(a, c);
  return r;
}

}  // namespace

KeyEquationReport verify_key_equation(const Certificate& cert, const RatFun& F) {
  KeyEquationReport r;
  r.residual = apply_diffop(cert.P, F) - cert.S.derivative("s") - cert.T.derivative("t");
  r.pass = r.residual.is_zero();
  return r;
}

std::vector<ZPoly> denominator_candidates(const std::vector<ZPoly>& factors, std::size_t var,
                                          unsigned max_power) {
  std::vector<ZPoly> fs;
  for (const auto& f : factors)
    if (f.depends_on(var)) fs.push_back(f);
  if (fs.empty()) return {ZPoly(factors.empty() ? Vars() : factors.front().vars(), 1)};
  Vars vars = fs.front().vars();
  struct Cand {
    unsigned deg;
    std::vector<unsigned> e;
    ZPoly p;
  };
  std::vector<Cand> all;
  std::vector<unsigned> e(fs.size(), 0);
  for (;;) {
    ZPoly p(vars, 1);
    unsigned deg = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (e[i]) p = p * fs[i].pow(e[i]);
      deg += e[i] * fs[i].degree(var);
    }
    all.push_back({deg, e, p});
    std::size_t i = 0;
    while (i < e.size() && e[i] == max_power) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  std::stable_sort(all.begin(), all.end(), [](const Cand& a, const Cand& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
  });
  std::vector<ZPoly> out;
  for (auto& c : all) out.push_back(std::move(c.p));
  return out;
}

ZPoly reference_disc() { return zparse("(x-s)*(16*x*s^2-4*s^3-24*x*s+4*s^2+9*x-s)"); }

RookFactors rook_factors(const RatFun& F) {
  Vars vars = xst_vars();
  if (F.vars() != vars) throw std::invalid_argument("expected F over (x, s, t)");
  RookFactors r;
  const ZPoly& q = F.den();
  mono::Key mc = q.monomial_content();
  ZPoly mq = ZPoly::monomial(vars, mc, Integer(1));
  r.q1 = sign_normalized(primitive_part(divide_or_throw(q, mq)));
  r.disc_computed = discriminant(r.q1, vars.require("t"));
  ZPoly ref = reference_disc();
  // Keep the reference normalization when both agree up to a rational constant.
  RatFun ratio(r.disc_computed, ref);
  r.disc = ratio.is_constant() ? ref : r.disc_computed;
  return r;
}

std::vector<ZPoly> default_factors(const RatFun& F) {
  RookFactors rf = rook_factors(F);
  return {zparse("t-x"), rf.q1, rf.disc, zparse("s"), zparse("t"), zparse("s-1"), zparse("3*s-2")};
}

std::vector<mono::Key> total_order_support(unsigned r) {
  std::vector<mono::Key> out;
  for (unsigned deg = 0; deg <= r; ++deg)
    for (unsigned i = 0; i <= deg; ++i) out.push_back(dkey(deg - i, i));
  return out;
}

std::vector<mono::Key> x_only_support(unsigned r) {
  std::vector<mono::Key> out;
  for (unsigned i = 0; i <= r; ++i) out.push_back(dkey(i, 0));
  return out;
}

Ansatz default_stage_a_ansatz(const RatFun& F, std::vector<mono::Key> support) {
  Ansatz a;
  a.support = std::move(support);
  a.denominators = denominator_candidates(default_factors(F), F.vars().require("t"), 3);
  return a;
}

bool verify_stage_a(const StageACertificate& c, const RatFun& F) {
  return apply_diffop(c.P, F) == (c.phi * F).derivative("t");
}

std::vector<StageACertificate> stage_a_search(const RatFun& F, unsigned total_order,
                                              const Ansatz& ansatz,
                                              std::vector<std::string>* log) {
  Vars vars = F.vars();
  std::vector<mono::Key> support = ansatz.support;
  if (support.empty()) support = total_order_support(total_order);
  for (auto a : support)
    if (mono::exponent(a, 2) != 0) throw std::invalid_argument("support may not contain d_t");
  ExactMatrix A(vars, 1, 1), B(vars, 1, support.size());
  RatFun invF = F.inverse();
  A(0, 0) = F.derivative("t") * invF;
  for (std::size_t j = 0; j < support.size(); ++j)
    B(0, j) = apply_diffop(monomial_op(vars, support[j], RatFun(vars, 1)), F) * invF;
  for (const auto& den : ansatz.denominators) {
    auto res = solve_parametrized_system(A, B, den, ansatz.numerator_bound, "t");
    std::vector<StageACertificate> found;
    for (const auto& s : res.basis) {
      StageACertificate c;
      c.P = DiffOp(vars);
      for (std::size_t j = 0; j < support.size(); ++j) c.P.add_term(support[j], s.e[j]);
      if (c.P.is_zero()) continue;
      c.phi = s.y[0];
      c.denominator = den;
      if (!verify_stage_a(c, F)) throw std::logic_error("stage A solution fails to verify");
      found.push_back(std::move(c));
    }
    if (!found.empty()) {
      if (log)
        log->push_back("stage A: " + std::to_string(found.size()) + " solution(s) with denominator " +
                       den.to_string() + " (" + std::to_string(res.unknowns) + " unknowns, " +
                       std::to_string(res.equations) + " equations)");
      return found;
    }
  }
  if (log) log->push_back("stage A: no solution over " + std::to_string(ansatz.denominators.size()) +
                          " denominators");
  return {};
}

StageACertificate normalize_stage_a(const StageACertificate& c, mono::Key key, const RatFun& target) {
  RatFun cur = c.P.coeff(key);
  if (cur.is_zero()) throw std::invalid_argument("designated coefficient vanishes");
  RatFun ratio = target / cur;
  StageACertificate r = c;
  r.P = ratio * c.P;
  r.phi = ratio * c.phi;
  return r;
}

namespace {

// The quotient by <P1, P2> as pairs (a, b) = a + b d_x.
struct Presentation {
  RatFun p0, p1, q, q0;
  std::size_t x, s;

  std::pair<RatFun, RatFun> dx(const RatFun& a, const RatFun& b) const {
    return {a.derivative(x) + b * q0, a + b.derivative(x) + b * q};
  }
};

Presentation present(const DiffOp& P1, const DiffOp& P2) {
  Vars vars = P1.vars();
  Presentation pr;
  pr.x = vars.require("x");
  pr.s = vars.require("s");
  mono::Key ds = dkey(0, 1), dx = dkey(1, 0), dxx = dkey(2, 0), one = 0;
  for (const auto& [k, c] : P1.terms())
    if (k != ds && k != dx && k != one) throw std::invalid_argument("P1 must be a d_s + b d_x + c");
  for (const auto& [k, c] : P2.terms())
    if (k != dxx && k != dx && k != one) throw std::invalid_argument("P2 must be a d_x^2 + b d_x + c");
  RatFun a = P1.coeff(ds), a2 = P2.coeff(dxx);
  if (a.is_zero() || a2.is_zero()) throw std::invalid_argument("P1, P2 must have leading terms");
  pr.p1 = -(P1.coeff(dx) / a);
  pr.p0 = -(P1.coeff(one) / a);
  pr.q = -(P2.coeff(dx) / a2);
  pr.q0 = -(P2.coeff(one) / a2);
  return pr;
}

}  // namespace

Division divide_by_pair(const DiffOp& R0, const DiffOp& P1, const DiffOp& P2) {
  Vars vars = R0.vars();
  Division out{DiffOp(vars), DiffOp(vars), R0};
  DiffOp& R = out.remainder;
  RatFun a = P1.coeff(dkey(0, 1)), a2 = P2.coeff(dkey(2, 0));
  auto pick = [&](bool in_s) {
    std::optional<mono::Key> best;
    for (const auto& [k, c] : R.terms()) {
      unsigned ks = mono::exponent(k, 1), kx = mono::exponent(k, 0);
      if (in_s ? ks == 0 : (ks != 0 || kx < 2)) continue;
      if (!best || std::pair(ks, kx) > std::pair(mono::exponent(*best, 1), mono::exponent(*best, 0)))
        best = k;
    }
    return best;
  };
  while (auto k = pick(true)) {
    mono::Key m = *k - dkey(0, 1);
    DiffOp step = monomial_op(vars, m, R.coeff(*k) / a);
    out.A1 = out.A1 + step;
    R = R - step * P1;
  }
  while (auto k = pick(false)) {
    mono::Key m = *k - dkey(2, 0);
    DiffOp step = monomial_op(vars, m, R.coeff(*k) / a2);
    out.A2 = out.A2 + step;
    R = R - step * P2;
  }
  return out;
}

std::optional<StageBResult> stage_b_search(const DiffOp& P1, const DiffOp& P2, unsigned d,
                                           const std::vector<ZPoly>& factors,
                                           unsigned numerator_bound,
                                           std::vector<std::string>* log) {
  Vars vars = P1.vars();
  Presentation pr = present(P1, P2);
  ExactMatrix A(vars, 2, 2), B(vars, 2, d + 1);
  A(0, 0) = pr.p0;
  A(0, 1) = pr.p0.derivative(pr.x) + pr.p1 * pr.q0;
  A(1, 0) = pr.p1;
  A(1, 1) = pr.p0 + pr.p1.derivative(pr.x) + pr.p1 * pr.q;
  RatFun alpha(vars, 1), beta(vars);
  for (unsigned i = 0; i <= d; ++i) {
    B(0, i) = alpha;
    B(1, i) = beta;
    std::tie(alpha, beta) = pr.dx(alpha, beta);
  }
  std::vector<ZPoly> fs;
  for (const auto& f : factors)
    if (!f.depends_on(vars.require("t"))) fs.push_back(f);
  auto dens = denominator_candidates(fs, pr.s, 3);
  std::optional<ParamSolution> part;
  ZPoly part_den;
  std::size_t tried = 0;
  for (const auto& den : dens) {
    ++tried;
    auto res = solve_parametrized_system(A, B, den, numerator_bound, "s");
    for (const auto& sol : res.basis) {
      bool nonzero = false;
      for (const auto& e : sol.e) nonzero = nonzero || !e.is_zero();
      if (!nonzero) continue;
      part = sol;
      part_den = den;
      break;
    }
    if (part) break;
  }
  if (!part) {
    if (log)
      log->push_back("stage B: d=" + std::to_string(d) + " no solution over " +
                     std::to_string(tried) + " denominators");
    return std::nullopt;
  }
  if (log)
    log->push_back("stage B: d=" + std::to_string(d) + " solution with denominator " +
                   part_den.to_string() + " after " + std::to_string(tried) + " candidates");
  // Q is only determined modulo solutions of the homogeneous system (e = 0).
  // Reduce the particular solution against them so that, component phi1
  // first, its numerator's top s-coefficient cancels where degrees allow.
  ExactMatrix B0(vars, 2, 0);
  for (const auto& den : dens) {
    auto res = solve_parametrized_system(A, B0, den, numerator_bound, "s");
    if (res.basis.empty()) continue;
    for (const auto& h : res.basis) {
      for (std::size_t comp = 2; comp-- > 0;) {
        if (h.y[comp].is_zero()) continue;
        ZPoly L = part->y[comp].den();
        L = L * divide_or_throw(h.y[comp].den(), gcd(L, h.y[comp].den()));
        ZPoly zp = (part->y[comp] * RatFun(L)).num(), zh = (h.y[comp] * RatFun(L)).num();
        if (zp.is_zero() || zp.degree(pr.s) != zh.degree(pr.s)) break;
        RatFun c(zp.coefficients_in(pr.s).back(), zh.coefficients_in(pr.s).back());
        for (std::size_t l = 0; l < 2; ++l) part->y[l] = part->y[l] - c * h.y[l];
        if (log) log->push_back("stage B: reduced by homogeneous solution with denominator " + den.to_string());
        break;
      }
    }
    break;
  }
  StageBResult r;
  r.P = DiffOp(vars);
  for (unsigned i = 0; i <= d; ++i) r.P.add_term(dkey(i, 0), part->e[i]);
  r.Q = DiffOp(vars);
  r.Q.add_term(0, part->y[0]);
  r.Q.add_term(dkey(1, 0), part->y[1]);
  r.denominator = part_den;
  Division div = divide_by_pair(r.P - DiffOp::d(vars, "s") * r.Q, P1, P2);
  if (!div.remainder.is_zero()) throw std::logic_error("stage B solution fails to verify");
  return r;
}

StageBResult normalize_stage_b(const StageBResult& r, unsigned top, const RatFun& target) {
  RatFun cur = r.P.coeff(dkey(top, 0));
  if (cur.is_zero()) throw std::invalid_argument("designated coefficient vanishes");
  RatFun ratio = target / cur;
  StageBResult o = r;
  o.P = ratio * r.P;
  o.Q = ratio * r.Q;
  return o;
}

StageCResult stage_c_reconstruct(const DiffOp& P, const DiffOp& Q,
                                 const std::vector<StageACertificate>& stage_a, const RatFun& F) {
  if (stage_a.size() != 2) throw std::invalid_argument("expected the two stage A certificates");
  Vars vars = F.vars();
  StageCResult out;
  const auto& [P1, psi1, d1] = stage_a[0];
  const auto& [P2, psi2, d2] = stage_a[1];
  out.division = divide_by_pair(P - DiffOp::d(vars, "s") * Q, P1, P2);
  out.division_exact = out.division.remainder.is_zero();
  Certificate& c = out.cert;
  c.P = P;
  c.S = apply_diffop(Q, F);
  c.T = apply_diffop(out.division.A1, psi1 * F) + apply_diffop(out.division.A2, psi2 * F);
  c.stage_log.push_back(std::string("stage C: division ") + (out.division_exact ? "exact" : "inexact"));
  c.verified = out.division_exact && verify_key_equation(c, F).pass;
  c.stage_log.push_back(std::string("stage C: key equation ") + (c.verified ? "holds" : "fails"));
  return out;
}

LipshitzReport lipshitz_bounds() {
  LipshitzReport r{};
  for (unsigned N = 1;; ++N) {
    Integer u = binomial(N + 4, 4), e = Integer(18) * Integer(N + 1) * Integer(N + 1) * Integer(N + 1);
    if (u > e) {
      r.first_N = N;
      r.first_unknowns = u;
      break;
    }
  }
  for (unsigned N = 1;; ++N) {
    Integer u = binomial(N + 3, 3), e = Integer((13 * N + 14) * (N + 1) / 2);
    if (u > e) {
      r.refined_N = N;
      r.rows = e;
      r.cols = u;
      break;
    }
  }
  return r;
}

}  // namespace rook
