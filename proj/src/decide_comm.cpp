#include "autalg/decide_comm.hpp"

#include <algorithm>
#include <type_traits>

#include "autalg/groebner.hpp"

namespace autalg {

namespace {

template <class F>
std::string text(const Polynomial<F>& p) {
  return p.to_string(TermOrder::deglex());
}

template <class F>
Polynomial<F> top_component(const Polynomial<F>& p) {
  return p.weighted_leading_form(std::vector<int64_t>(p.arity(), 1));
}

/// u = beta * w for a scalar beta?
template <class F>
std::optional<F> proportional(const Polynomial<F>& u, const Polynomial<F>& w) {
  if (u.is_zero() || w.is_zero()) return std::nullopt;
  const TermOrder order = TermOrder::deglex();
  if (u.leading_monomial(order) != w.leading_monomial(order)) return std::nullopt;
  F beta = u.leading_coeff(order) / w.leading_coeff(order);
  if (!(w.scaled(beta) == u)) return std::nullopt;
  return beta;
}

/// s, r with s*a + r*b = 1 for coprime a, b.
std::pair<UniPoly, UniPoly> bezout(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b, s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    UniPoly q, rem;
    UniPoly::divmod(r0, r1, q, rem);
    r0 = r1;
    r1 = rem;
    UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0) throw std::logic_error("bezout: inputs are not coprime");
  const UniPoly inv(Rational(1) / r0.leading());
  return {s0 * inv, t0 * inv};
}

}  // namespace

template <class F>
Verdict recognize_aut_k2(const Endo<Polynomial<F>>& phi) {
  using P = Polynomial<F>;
  const ContextPtr& ctx = phi.ctx;
  if (ctx->arity() != 2) throw std::invalid_argument("recognize_aut_k2: expects two variables");
  Verdict v;
  P f = phi[0], g = phi[1];
  std::vector<Generator<P>> peeled;

  for (;;) {
    if (f.is_constant() || g.is_constant()) {
      v.tag = VerdictTag::NotAutomorphism;
      v.step = "0";
      v.reason = "a coordinate is constant";
      return v;
    }
    const int64_t m = f.total_degree(), n = g.total_degree();
    const P u = top_component(f), w = top_component(g);
    if (m == 1 && n == 1) {
      F a = u.coefficient(Monomial::variable(2, 0)), b = u.coefficient(Monomial::variable(2, 1));
      F c = w.coefficient(Monomial::variable(2, 0)), d = w.coefficient(Monomial::variable(2, 1));
      if (is_zero(a * d - b * c)) {
        v.tag = VerdictTag::NotAutomorphism;
        v.step = "1";
        v.reason = "linear leading forms " + text(u) + " and " + text(w) + " are dependent";
        return v;
      }
      Affine<P> aff;
      aff.active = 2;
      aff.matrix = {{P::constant(ctx, a), P::constant(ctx, b)}, {P::constant(ctx, c), P::constant(ctx, d)}};
      aff.shift = {P::constant(ctx, f.constant_term()), P::constant(ctx, g.constant_term())};
      v.trace.push_back("step 1: affine remainder (" + text(f) + ", " + text(g) + ")");
      TameWord<P> word{ctx, {aff}};
      for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) word.gens.push_back(*it);
      if (!(word.eval() == phi)) throw std::logic_error("recognize_aut_k2: recomposition mismatch");
      v.tag = VerdictTag::Automorphism;
      v.step = "1";
      v.word = word;
      check_reduction_monotone(v.reduction);
      return v;
    }
    const bool reduce_f = m > 1 && m >= n;  // ties go to f
    const P& big = reduce_f ? u : w;
    const P& small = reduce_f ? w : u;
    const int64_t hi = reduce_f ? m : n, lo = reduce_f ? n : m;
    const std::string step = reduce_f ? "2" : "3";
    std::optional<F> beta;
    int64_t d = 0;
    if (hi % lo == 0) {
      d = hi / lo;
      beta = proportional(big, small.pow(static_cast<unsigned>(d)));
    }
    if (!beta) {
      v.tag = VerdictTag::NotAutomorphism;
      v.step = step;
      v.reason = "leading form " + text(big) + " is not a scalar multiple of a power of " + text(small);
      return v;
    }
    if constexpr (std::is_same_v<F, RatFunc>) {
      // Equal degrees: keep the peel inside Q[z] when possible, either by
      // flipping the direction or by an SL2(Q[z]) combination of f and g.
      if (m == n && !beta->is_polynomial()) {
        const RatFunc inv = RatFunc(1) / *beta;
        ReductionStep rs;
        rs.before = {m, n};
        Generator<P> gen;
        if (inv.is_polynomial()) {
          g -= f.scaled(inv);
          gen = Triangular<P>{1, F(1), P::variable(ctx, 0).scaled(inv)};
        } else {
          const UniPoly& num = beta->num();
          const UniPoly& den = beta->den();
          auto [s, r] = bezout(den, num);
          const RatFunc rp(num, UniPoly(Rational(1))), rq(den, UniPoly(Rational(1)));
          const RatFunc rs_(s, UniPoly(Rational(1))), rr(r, UniPoly(Rational(1)));
          P nf = f.scaled(rq) - g.scaled(rp);
          P ng = f.scaled(rr) + g.scaled(rs_);
          f = std::move(nf);
          g = std::move(ng);
          Affine<P> aff;
          aff.active = 2;
          aff.matrix = {{P::constant(ctx, rs_), P::constant(ctx, rp)}, {P::constant(ctx, -rr), P::constant(ctx, rq)}};
          aff.shift = {P::zero(ctx), P::zero(ctx)};
          gen = aff;
        }
        rs.after = {f.total_degree(), g.total_degree()};
        rs.generator = generator_to_string<P>(gen, ctx);
        v.reduction.push_back(rs);
        v.trace.push_back("step " + step + ": peel " + rs.generator);
        peeled.push_back(gen);
        continue;
      }
    }
    const size_t idx = reduce_f ? 0 : 1;
    P offset = P::variable(ctx, 1 - idx).pow(static_cast<unsigned>(d)).scaled(*beta);
    Triangular<P> s{idx, F(1), offset};
    ReductionStep rs;
    rs.before = {m, n};
    if (reduce_f) {
      f -= g.pow(static_cast<unsigned>(d)).scaled(*beta);
    } else {
      g -= f.pow(static_cast<unsigned>(d)).scaled(*beta);
    }
    rs.after = {f.total_degree(), g.total_degree()};
    rs.generator = generator_to_string<P>(s, ctx);
    v.reduction.push_back(rs);
    v.trace.push_back("step " + step + ": peel " + rs.generator);
    peeled.push_back(s);
  }
}

template Verdict recognize_aut_k2<Rational>(const CommEndo&);
template Verdict recognize_aut_k2<RatFunc>(const REndo&);

namespace {

// Highest pure power of variable `var` with nonzero coefficient, or 0.
uint32_t pure_power(const CommPoly& f, size_t var) {
  uint32_t best = 0;
  for (const auto& [m, c] : f.terms()) {
    bool pure = m.exps[var] > 0;
    for (size_t i = 0; i < m.exps.size(); ++i)
      if (i != var && m.exps[i]) pure = false;
    if (pure) best = std::max(best, m.exps[var]);
  }
  return best;
}

Monomial power_of(size_t var, uint32_t e) {
  Monomial m(2);
  m.exps[var] = e;
  return m;
}

std::vector<Rational> rational_roots(const Rational& q, unsigned d) {
  std::vector<Rational> out;
  if (auto r = exact_root(q, d)) {
    out.push_back(*r);
    if (d % 2 == 0 && sgn(*r) != 0) out.push_back(-*r);
  }
  return out;
}

}  // namespace

Verdict recognize_coord_k2(const CommPoly& f0) {
  const ContextPtr& ctx = f0.context();
  if (ctx->arity() != 2) throw std::invalid_argument("recognize_coord_k2: expects two variables");
  Verdict v;
  CommPoly f = f0;
  TameWord<CommPoly> word{ctx, {}};

  auto finish = [&](std::vector<Generator<CommPoly>> tail, const std::string& step) {
    word.gens.insert(word.gens.end(), tail.begin(), tail.end());
    CommEndo aut = word.eval();
    if (!(aut[0] == f0)) throw std::logic_error("recognize_coord_k2: recomposition mismatch");
    v.tag = VerdictTag::Coordinate;
    v.step = step;
    v.mate = aut[1];
    v.word = word;
    check_reduction_monotone(v.reduction);
    return v;
  };
  auto reject = [&](const std::string& step, const std::string& reason) {
    v.tag = VerdictTag::NotCoordinate;
    v.step = step;
    v.reason = reason;
    return v;
  };

  for (;;) {
    if (f.is_constant()) return reject("0", "constant polynomial");
    if (f.total_degree() == 1) {
      Rational l1 = f.coefficient(Monomial::variable(2, 0)), l2 = f.coefficient(Monomial::variable(2, 1));
      Affine<CommPoly> aff;
      aff.active = 2;
      const bool use_y = sgn(l1) != 0;
      aff.matrix = {{CommPoly::constant(ctx, l1), CommPoly::constant(ctx, l2)},
                    {CommPoly::constant(ctx, Rational(use_y ? 0 : 1)), CommPoly::constant(ctx, Rational(use_y ? 1 : 0))}};
      aff.shift = {CommPoly::constant(ctx, f.constant_term()), CommPoly::zero(ctx)};
      v.trace.push_back("step 0: linear " + text(f));
      return finish({aff}, "0");
    }
    if (!f.depends_on(0) || !f.depends_on(1)) return reject("1", "polynomial of degree > 1 in one variable");
    const uint32_t mx = pure_power(f, 0), ny = pure_power(f, 1);
    if (mx == 0 || ny == 0) return reject("1", "no pure power of x or of y");
    const Rational eta = f.coefficient(power_of(0, mx)), zeta = f.coefficient(power_of(1, ny));
    if (ny % mx != 0 && mx % ny != 0) {
      v.stuck_pair = std::make_pair("x^" + std::to_string(mx), "y^" + std::to_string(ny));
      return reject("2", "degrees " + std::to_string(mx) + " and " + std::to_string(ny) + " do not divide each other");
    }
    // Step 3 (x^M with M | N) or step 4 (y^N with N | M, M/N > 1).
    const bool step3 = ny % mx == 0;
    const size_t main = step3 ? 0 : 1, other = 1 - main;
    const uint32_t e = step3 ? mx : ny;
    const unsigned d = step3 ? ny / mx : mx / ny;
    const Rational lead = step3 ? eta : zeta, tail = step3 ? zeta : eta;
    const std::string step = step3 ? "3" : "4";
    std::vector<int64_t> weights(2, 1);
    weights[main] = d;
    const CommPoly form = f.weighted_leading_form(weights);
    const CommPoly vm = CommPoly::variable(ctx, main), vo = CommPoly::variable(ctx, other);
    std::optional<Rational> xi;
    // The y^N coefficient of lead*(x + xi*y^d)^M is lead*xi^M.
    for (const Rational& r : rational_roots(tail / lead, e)) {
      if ((vm + vo.pow(d).scaled(r)).pow(e).scaled(lead) == form) {
        xi = r;
        break;
      }
    }
    if (!xi) {
      if (rational_roots(tail / lead, e).empty())
        return reject(step, "no rational " + std::to_string(e) + "-th root of " + to_string(tail / lead));
      return reject(step, "weighted leading form " + text(form) + " is not a power of a binomial");
    }
    ReductionStep rs;
    rs.before = {mx, ny};
    if (e == 1) {
      CommPoly rest = f - (vm + vo.pow(d).scaled(*xi)).scaled(lead);
      Triangular<CommPoly> t{main, lead, vo.pow(d).scaled(lead * *xi) + rest};
      v.trace.push_back("step " + step + ": triangular remainder " + text(f));
      if (step3) return finish({t}, step);
      return finish({t, Tau{0, 1}}, step);
    }
    Triangular<CommPoly> theta{main, Rational(1), vo.pow(d).scaled(*xi)};
    auto theta_gen = Generator<CommPoly>(theta);
    CommEndo inv = generator_endo(generator_inverse(theta_gen, ctx), ctx);
    f = inv.apply(f);
    rs.after = {pure_power(f, 0), pure_power(f, 1)};
    rs.generator = generator_to_string(theta_gen, ctx);
    v.reduction.push_back(rs);
    v.trace.push_back("step " + step + ": peel " + rs.generator);
    word.gens.push_back(theta);
  }
}

template <class F>
Verdict coord_test_sy(const Polynomial<F>& f, const TermOrder& order) {
  using P = Polynomial<F>;
  if (f.arity() < 2) throw std::invalid_argument("coord_test_sy: needs variables x and y");
  Verdict v;
  v.order = order;
  P p = f.derivative(0), q = f.derivative(1);
  v.note("f_x", text(p));
  v.note("f_y", text(q));
  for (;;) {
    if (p.is_zero() && q.is_zero()) {
      v.tag = VerdictTag::NotCoordinate;
      v.step = "0";
      v.reason = "both partial derivatives vanish";
      return v;
    }
    if (p.is_zero() || q.is_zero()) {
      const P& r = p.is_zero() ? q : p;
      v.step = "0";
      if (r.is_unit()) {
        v.tag = VerdictTag::Coordinate;
        v.trace.push_back("step 0: reached unit " + text(r) + " and 0");
      } else {
        v.tag = VerdictTag::NotCoordinate;
        v.reason = "reduction ended at non-unit " + text(r) + " and 0";
      }
      return v;
    }
    const Monomial lp = p.leading_monomial(order), lq = q.leading_monomial(order);
    if (lq.divides(lp)) {
      p = leading_term_reduce(p, q, order).remainder;
      v.trace.push_back("step 1: p reduced by q to " + text(p));
    } else if (lp.divides(lq)) {
      q = leading_term_reduce(q, p, order).remainder;
      v.trace.push_back("step 1: q reduced by p to " + text(q));
    } else {
      v.tag = VerdictTag::NotCoordinate;
      v.step = "1";
      v.stuck_pair = std::make_pair(text(p), text(q));
      v.reason = "leading monomials " + lp.to_string(*f.context()) + " and " + lq.to_string(*f.context()) +
                 " are not divisible by each other";
      return v;
    }
  }
}

template Verdict coord_test_sy<Rational>(const CommPoly&, const TermOrder&);
template Verdict coord_test_sy<RatFunc>(const RPoly&, const TermOrder&);

namespace {

ContextPtr without(const ContextPtr& ctx, size_t skip) {
  std::vector<std::string> names;
  for (size_t i = 0; i < ctx->arity(); ++i)
    if (i != skip) names.push_back(ctx->name(i));
  return make_context(names, ctx->name(skip));
}

}  // namespace

Verdict coord_test_sy_qz(const CommPoly& f, size_t z_index, const TermOrder& order) {
  ContextPtr xy = without(f.context(), z_index);
  Verdict v = coord_test_sy(to_rpoly(f, z_index, xy), order);
  v.note("field", "Q(" + f.context()->name(z_index) + ")");
  return v;
}

Verdict z_tame_coord_test(const CommPoly& f, const TermOrder& order) {
  if (f.arity() != 3) throw std::invalid_argument("z_tame_coord_test: expects variables x, y, z");
  Verdict v = coord_test_sy(f, order);
  v.tag = v.tag == VerdictTag::Coordinate ? VerdictTag::ZTame : VerdictTag::NotZTame;
  return v;
}

Verdict z_coord_test(const CommPoly& f, const TermOrder& order) {
  if (f.arity() != 3) throw std::invalid_argument("z_coord_test: expects variables x, y, z");
  Verdict v;
  v.order = order;
  const CommPoly p = f.derivative(0), q = f.derivative(1);
  v.note("f_x", text(p));
  v.note("f_y", text(q));
  if (p.is_zero() && q.is_zero()) {
    v.tag = VerdictTag::NotCoordinate;
    v.step = "0";
    v.reason = "both partial derivatives vanish";
    return v;
  }
  auto gb = buchberger_reduced(std::vector<CommPoly>{p, q}, order, true);
  std::string basis;
  for (const auto& b : gb.basis) basis += (basis.empty() ? "" : ", ") + text(b);
  v.trace.push_back("step 1: reduced Groebner basis {" + basis + "}");
  if (!(gb.basis.size() == 1 && gb.basis.front().is_unit())) {
    v.tag = VerdictTag::NotCoordinate;
    v.step = "1";
    v.reason = "gradient is not unimodular: Groebner basis {" + basis + "}";
    return v;
  }
  UnitCertificate unit{{p, q}, gb.cofactors.front()};
  if (!unit.verify()) throw std::logic_error("z_coord_test: unit certificate does not verify");
  v.unit = unit;

  Verdict sy = coord_test_sy_qz(f, 2, order);
  for (const auto& t : sy.trace) v.trace.push_back("step 2: " + t);
  if (sy.tag != VerdictTag::Coordinate) {
    v.tag = VerdictTag::NotCoordinate;
    v.step = "2";
    v.reason = "not a coordinate over Q(z): " + sy.reason;
    return v;
  }
  v.tag = VerdictTag::Coordinate;
  v.step = "2";
  Verdict zt = z_tame_coord_test(f, order);
  v.note("z-tame", zt.tag == VerdictTag::ZTame ? "true" : "false");
  if (zt.tag != VerdictTag::ZTame) {
    v.note("label", "z-wild coordinate");
    v.stuck_pair = zt.stuck_pair;
  } else {
    v.note("label", "z-tame coordinate");
  }
  return v;
}

namespace {

std::optional<CommPoly> to_comm(const RPoly& p, const ContextPtr& ctx3) { return from_rpoly(p, 2, ctx3); }

// Converts a generator over Q(z) into one over Q[z]; nullopt with a reason
// when a coefficient has a denominator or a unit is not constant.
std::optional<Generator<CommPoly>> to_z_generator(const Generator<RPoly>& g, const ContextPtr& ctx3,
                                                  std::string& why) {
  if (const auto* t = std::get_if<Triangular<RPoly>>(&g)) {
    if (!t->alpha.is_constant()) {
      why = "scalar is not a nonzero constant";
      return std::nullopt;
    }
    auto off = to_comm(t->offset, ctx3);
    if (!off) {
      why = "offset " + t->offset.to_string() + " has coefficients outside Q[z]";
      return std::nullopt;
    }
    return Triangular<CommPoly>{t->index, t->alpha.num().coeff(0), *off};
  }
  if (const auto* a = std::get_if<Affine<RPoly>>(&g)) {
    Affine<CommPoly> out;
    out.active = a->active;
    for (const auto& row : a->matrix) {
      std::vector<CommPoly> r;
      for (const auto& e : row) {
        auto c = to_comm(e, ctx3);
        if (!c) {
          why = "affine entry " + e.to_string() + " is not in Q[z]";
          return std::nullopt;
        }
        r.push_back(*c);
      }
      out.matrix.push_back(r);
    }
    for (const auto& s : a->shift) {
      auto c = to_comm(s, ctx3);
      if (!c) {
        why = "affine shift " + s.to_string() + " is not in Q[z]";
        return std::nullopt;
      }
      out.shift.push_back(*c);
    }
    if (!determinant(out.matrix).is_unit()) {
      why = "affine determinant is not a nonzero constant";
      return std::nullopt;
    }
    return out;
  }
  if (const auto* s = std::get_if<Tau>(&g)) return *s;
  why = "unexpected generator";
  return std::nullopt;
}

}  // namespace

Verdict recognize_z_tame_aut_comm(const CommEndo& phi) {
  const ContextPtr& ctx = phi.ctx;
  if (ctx->arity() != 3) throw std::invalid_argument("recognize_z_tame_aut_comm: expects variables x, y, z");
  if (!(phi[2] == CommPoly::variable(ctx, 2))) throw std::invalid_argument("recognize_z_tame_aut_comm: z is not fixed");
  ContextPtr xy = without(ctx, 2);
  REndo rphi(xy, {to_rpoly(phi[0], 2, xy), to_rpoly(phi[1], 2, xy)});
  Verdict r = recognize_aut_k2(rphi);
  Verdict v;
  v.trace = r.trace;
  v.reduction = r.reduction;
  v.step = r.step;
  if (r.tag != VerdictTag::Automorphism) {
    v.tag = VerdictTag::NotAutomorphism;
    v.reason = "not an automorphism even over Q(z): " + r.reason;
    return v;
  }
  const auto& rword = std::get<TameWord<RPoly>>(*r.word);
  TameWord<CommPoly> word{ctx, {}};
  for (const auto& g : rword.gens) {
    std::string why;
    auto zg = to_z_generator(g, ctx, why);
    if (!zg) {
      v.tag = VerdictTag::NotZTame;
      v.reason = "automorphism over Q(z), but generator " + generator_to_string(g, xy) + " leaves Q[z]: " + why;
      v.word = rword;
      v.note("automorphism-over", "Q(z)");
      return v;
    }
    word.gens.push_back(*zg);
  }
  if (!(word.eval() == phi)) throw std::logic_error("recognize_z_tame_aut_comm: recomposition mismatch");
  v.tag = VerdictTag::ZTame;
  v.word = word;
  return v;
}

}  // namespace autalg
