#include "rook/ore/ore.hpp"

#include <stdexcept>

#include "rook/exactmath/matrix.hpp"

namespace rook {

// ---------------------------------------------------------------- DiffOp

DiffOp DiffOp::scalar(const RatFun& c) {
  DiffOp op(c.vars());
  op.add_term(0, c);
  return op;
}

DiffOp DiffOp::d(Vars vars, std::string_view var, unsigned power) {
  DiffOp op(vars);
  op.add_term(mono::unit(vars.require(var), power), RatFun(vars, 1));
  return op;
}

DiffOp DiffOp::from_terms(Vars vars, const std::vector<std::pair<mono::Key, RatFun>>& terms) {
  DiffOp op(vars);
  for (const auto& [a, c] : terms) op.add_term(a, c);
  return op;
}

RatFun DiffOp::coeff(mono::Key a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? RatFun(vars_) : it->second;
}

unsigned DiffOp::order(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [a, c] : terms_) d = std::max(d, mono::exponent(a, var));
  return d;
}

bool DiffOp::mentions(std::size_t var) const { return order(var) > 0; }

void DiffOp::add_term(mono::Key a, const RatFun& c) {
  if (c.is_zero()) return;
  RatFun cc = c.vars() == vars_ ? c : c.change_vars(vars_);
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, std::move(cc));
    return;
  }
  it->second += cc;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  DiffOp r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

namespace {

// All derivatives of c up to the given exponent box, memoized.
class DerivativeCache {
 public:
  explicit DerivativeCache(RatFun f) { cache_.emplace(0, std::move(f)); }
  const RatFun& get(mono::Key a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    std::size_t v = 0;
    while (mono::exponent(a, v) == 0) ++v;
    RatFun d = get(a - mono::unit(v, 1)).derivative(v);
    return cache_.emplace(a, std::move(d)).first->second;
  }

 private:
  std::map<mono::Key, RatFun> cache_;
};

}  // namespace

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  DiffOp r(a.vars_);
  for (const auto& [beta, q] : b.terms_) {
    DerivativeCache dq(q);
    for (const auto& [alpha, p] : a.terms_) {
      // p d^alpha q d^beta = p sum_{gamma <= alpha} C(alpha,gamma) (d^gamma q) d^(alpha-gamma+beta)
      auto ea = mono::unpack(alpha);
      for (unsigned g0 = 0; g0 <= ea[0]; ++g0)
        for (unsigned g1 = 0; g1 <= ea[1]; ++g1)
          for (unsigned g2 = 0; g2 <= ea[2]; ++g2)
            for (unsigned g3 = 0; g3 <= ea[3]; ++g3) {
              mono::Key gamma = mono::make({g0, g1, g2, g3});
              const RatFun& dg = dq.get(gamma);
              if (dg.is_zero()) continue;
              Integer coef = binomial(ea[0], g0) * binomial(ea[1], g1) * binomial(ea[2], g2) *
                             binomial(ea[3], g3);
              r.add_term(alpha - gamma + beta, p * dg * Rational(coef));
            }
    }
  }
  return r;
}

DiffOp operator*(const RatFun& c, const DiffOp& a) {
  DiffOp r(a.vars_);
  if (c.is_zero()) return r;
  for (const auto& [k, p] : a.terms_) r.add_term(k, c * p);
  return r;
}

DiffOp DiffOp::change_vars(Vars target) const {
  DiffOp r(target);
  for (const auto& [a, c] : terms_) {
    mono::Exponents e{0, 0, 0, 0};
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      unsigned k = mono::exponent(a, i);
      if (k) e[target.require(vars_.name(i))] = k;
    }
    r.add_term(mono::make(e), c.change_vars(target));
  }
  return r;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      unsigned k = mono::exponent(it->first, i);
      if (k == 0) continue;
      out += "*D" + vars_.name(i);
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

RatFun apply_diffop(const DiffOp& op, const RatFun& f) {
  Vars target = f.vars();
  for (std::size_t i = 0; i < op.vars().size(); ++i)
    if (op.mentions(i) && !target.index_of(op.vars().name(i)))
      throw std::invalid_argument("operator differentiates by " + op.vars().name(i) +
                                  ", absent from the target");
  DiffOp o = op.vars() == target ? op : op.change_vars(target);
  DerivativeCache df(f);
  RatFun acc(target);
  for (const auto& [a, c] : o.terms()) acc += c * df.get(a);
  return acc;
}

PowerSeries apply_diffop(const DiffOp& op, const PowerSeries& f) {
  auto v = op.vars().index_of(f.var());
  for (std::size_t i = 0; i < op.vars().size(); ++i)
    if (op.mentions(i) && (!v || i != *v))
      throw std::invalid_argument("operator mentions a variable absent from the series");
  unsigned ord = v ? op.order(*v) : 0;
  if (ord > f.order()) throw std::invalid_argument("series too short for operator");
  unsigned out_order = f.order() - ord;
  std::vector<PowerSeries> derivs{f};
  for (unsigned k = 1; k <= ord; ++k) derivs.push_back(derivs.back().derivative());
  PowerSeries acc(f.var(), out_order);
  for (const auto& [a, c] : op.terms()) {
    unsigned k = v ? mono::exponent(a, *v) : 0;
    PowerSeries cs = PowerSeries::from_ratfun(c.change_vars(Vars{f.var()}), out_order);
    acc = acc + cs * derivs[k].truncated(out_order);
  }
  return acc;
}

// ---------------------------------------------------------------- RecOp

Vars RecOp::ring() { return Vars{"n"}; }

RecOp RecOp::shift(int j, const MPoly& q) {
  RecOp r;
  r.add_term(j, q);
  return r;
}

RecOp RecOp::from_terms(const std::vector<std::pair<int, MPoly>>& terms) {
  RecOp r;
  for (const auto& [j, q] : terms) r.add_term(j, q);
  return r;
}

MPoly RecOp::coeff(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? MPoly(ring()) : it->second;
}

unsigned RecOp::degree() const {
  unsigned d = 0;
  for (const auto& [j, q] : terms_) d = std::max(d, q.total_degree());
  return d;
}

void RecOp::add_term(int j, const MPoly& q) {
  if (q.is_zero()) return;
  MPoly qq = q.vars() == ring() ? q : q.change_vars(ring());
  auto it = terms_.find(j);
  if (it == terms_.end()) {
    terms_.emplace(j, std::move(qq));
    return;
  }
  it->second += qq;
  if (it->second.is_zero()) terms_.erase(it);
}

RecOp RecOp::operator-() const {
  RecOp r = *this;
  for (auto& [j, q] : r.terms_) q = -q;
  return r;
}

RecOp operator+(const RecOp& a, const RecOp& b) {
  RecOp r = a;
  for (const auto& [j, q] : b.terms_) r.add_term(j, q);
  return r;
}

namespace {
MPoly shift_n(const MPoly& p, long by) {
  Vars v = RecOp::ring();
  return p.substitute(0, MPoly::variable(v, 0) + MPoly(v, Rational(by)));
}
}  // namespace

RecOp operator*(const RecOp& a, const RecOp& b) {
  RecOp r;
  for (const auto& [i, q] : a.terms_)
    for (const auto& [j, p] : b.terms_) r.add_term(i + j, q * shift_n(p, -i));
  return r;
}

RecOp operator*(const MPoly& c, const RecOp& a) {
  RecOp r;
  for (const auto& [j, q] : a.terms_) r.add_term(j, c * q);
  return r;
}

Rational RecOp::apply_at(const std::vector<Integer>& u, long n) const {
  Rational acc = 0;
  Rational nn(n);
  for (const auto& [j, q] : terms_) {
    long m = n - j;
    if (m < 0) continue;
    if (m >= static_cast<long>(u.size())) throw std::out_of_range("sequence too short");
    acc += q.evaluate_all(std::span<const Rational>(&nn, 1)) * u[static_cast<std::size_t>(m)];
  }
  return acc;
}

RecOp RecOp::normalized() const {
  if (terms_.empty()) return *this;
  int jm = min_shift();
  Integer l = 1;
  for (const auto& [j, q] : terms_)
    for (const auto& [m, c] : q.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& [j, q] : terms_)
    for (const auto& [m, c] : q.terms()) {
      Integer z = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
  Rational scale(l, g);
  scale.canonicalize();
  if (sgn(terms_.begin()->second.leading_coeff()) < 0) scale = -scale;
  RecOp r;
  for (const auto& [j, q] : terms_) r.add_term(j - jm, shift_n(q, jm) * scale);
  return r;
}

std::string RecOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [j, q] : terms_) {
    if (!out.empty()) out += " + ";
    std::string idx = j == 0 ? "n" : (j > 0 ? "n-" + std::to_string(j) : "n+" + std::to_string(-j));
    out += "(" + q.to_string() + ")*u[" + idx + "]";
  }
  return out;
}

RecOp diffop_to_rec(const DiffOp& op) {
  if (op.vars().size() != 1) {
    std::size_t used = 0;
    for (std::size_t i = 0; i < op.vars().size(); ++i) {
      bool any = op.mentions(i);
      for (const auto& [a, c] : op.terms()) any = any || c.depends_on(i);
      used += any;
    }
    if (used > 1) throw std::invalid_argument("diffop_to_rec needs a univariate operator");
  }
  if (op.is_zero()) return RecOp();
  // Clear denominators so every coefficient is a polynomial.
  ZPoly l(op.vars(), 1);
  for (const auto& [a, c] : op.terms()) {
    ZPoly g = gcd_with_content(l, c.den());
    l = l * divide_or_throw(c.den(), g);
  }
  Vars nv = RecOp::ring();
  MPoly n = MPoly::variable(nv, 0);
  RecOp r;
  for (const auto& [a, c] : op.terms()) {
    unsigned b = mono::degree(a);
    ZPoly p = c.num() * divide_or_throw(l, c.den());
    for (const auto& [m, coef] : p.terms()) {
      int e = static_cast<int>(mono::degree(m));
      int j = e - static_cast<int>(b);
      // x^e d^b contributes coef * falling(N - j, b) * u_{N-j} at x^N.
      MPoly f(nv, Rational(coef));
      for (unsigned i = 0; i < b; ++i) f = f * (n - MPoly(nv, Rational(j + static_cast<int>(i))));
      r.add_term(j, f);
    }
  }
  return r.normalized();
}

SeqTable rec_unroll(const RecOp& rec, const SeqTable& initial, unsigned n_max) {
  if (rec.is_zero()) throw std::invalid_argument("zero recurrence");
  RecOp r = rec.normalized();
  std::size_t order = static_cast<std::size_t>(r.max_shift());
  if (initial.terms.size() < order)
    throw std::invalid_argument("need at least " + std::to_string(order) + " initial terms");
  SeqTable out{initial.name, initial.terms, "recurrence"};
  if (out.terms.size() > n_max + 1) out.terms.resize(n_max + 1);
  MPoly lead = r.coeff(0);
  RecOp tail = r - RecOp::shift(0, lead);
  for (long n = static_cast<long>(out.terms.size()); n <= static_cast<long>(n_max); ++n) {
    Rational nn(n);
    Rational q0 = lead.evaluate_all(std::span<const Rational>(&nn, 1));
    if (sgn(q0) == 0)
      throw UnrollError("leading coefficient vanishes at n = " + std::to_string(n), n);
    out.terms.push_back(0);
    Rational v = -tail.apply_at(out.terms, n) / q0;
    if (v.get_den() != 1) throw UnrollError("non-integral term at n = " + std::to_string(n), n);
    out.terms.back() = v.get_num();
  }
  return out;
}

std::vector<RecOp> guess_rec(const SeqTable& seq, unsigned max_order, unsigned max_degree,
                             unsigned oversampling) {
  std::size_t unknowns = static_cast<std::size_t>(max_order + 1) * (max_degree + 1);
  std::size_t needed = unknowns + oversampling + max_order;
  if (seq.terms.size() < needed)
    throw InsufficientTerms("insufficient terms: need " + std::to_string(needed) + ", have " +
                                std::to_string(seq.terms.size()),
                            needed);
  Vars q = Vars{};  // coefficients are integers
  std::vector<std::vector<ZPoly>> rows;
  for (std::size_t n = max_order; n < seq.terms.size(); ++n) {
    std::vector<ZPoly> row;
    for (unsigned j = 0; j <= max_order; ++j) {
      Integer np = 1;
      for (unsigned d = 0; d <= max_degree; ++d) {
        row.emplace_back(q, Integer(np * seq.terms[n - j]));
        np *= static_cast<unsigned long>(n);
      }
    }
    rows.push_back(std::move(row));
  }
  auto basis = polynomial_nullspace(std::move(rows), unknowns, q);
  Vars nv = RecOp::ring();
  std::vector<RecOp> out;
  for (const auto& v : basis) {
    RecOp r;
    for (unsigned j = 0; j <= max_order; ++j) {
      std::vector<MPoly::Term> terms;
      for (unsigned d = 0; d <= max_degree; ++d) {
        const ZPoly& c = v[j * (max_degree + 1) + d];
        if (!c.is_zero()) terms.emplace_back(mono::unit(0, d), Rational(c.constant_term()));
      }
      r.add_term(static_cast<int>(j), MPoly::from_terms(nv, terms));
    }
    out.push_back(r.normalized());
  }
  return out;
}

ReductionProof prove_rec_reduction(const RecOp& big, const RecOp& small, const MPoly& multiplier,
                                   const RecOp& cofactor, const std::vector<Integer>& terms,
                                   long first_base, long last_base) {
  ReductionProof p;
  p.residual = cofactor * small - multiplier * big;
  bool identity = p.residual.is_zero();
  bool base = true;
  for (long n = first_base; n <= last_base; ++n) {
    Rational v = small.apply_at(terms, n);
    p.base_indices.push_back(n);
    p.base_values.push_back(v);
    if (sgn(v) != 0) base = false;
  }
  p.initial_expression = "-54864*6 + 2*43362*222 - 2*2*53*3^2*9918";
  p.initial_expression_value = Integer(-54864) * 6 + Integer(2) * 43362 * 222 - Integer(2) * 2 * 53 * 9 * 9918;
  p.pass = identity && base;
  if (!identity) p.detail = "operator identity fails; residual " + p.residual.to_string();
  else if (!base) p.detail = "base case fails";
  else
    p.detail = "cofactor*small = multiplier*big exactly; small vanishes at n = " +
               std::to_string(first_base) + ".." + std::to_string(last_base);
  return p;
}

RecOp erickson_recurrence() {
  Vars v = RecOp::ring();
  return RecOp::from_terms({
      {0, parse_mpoly("2*n^2*(n-1)", v)},
      {1, parse_mpoly("-(n-1)*(121*n^2-91*n-6)", v)},
      {2, parse_mpoly("-(n-2)*(475*n^2-2512*n+2829)", v)},
      {3, parse_mpoly("18*(n-3)*(97*n^2-519*n+702)", v)},
      {4, parse_mpoly("-1152*(n-3)*(n-4)^2", v)},
  });
}

RecOp short_recurrence() {
  Vars v = RecOp::ring();
  return RecOp::from_terms({
      {0, parse_mpoly("2*(n-1)*(35*n-52)*n^2", v)},
      {1, parse_mpoly("-(n-1)*(4655*n^3-11781*n^2+8494*n-1776)", v)},
      {2, parse_mpoly("(n-2)*(11305*n^3-41856*n^2+46487*n-13128)", v)},
      {3, parse_mpoly("-192*(n-3)^2*(35*n-17)*(n-2)", v)},
  });
}

}  // namespace rook
