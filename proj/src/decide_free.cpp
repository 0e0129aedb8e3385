#include "autalg/decide_free.hpp"

#include "autalg/decide_comm.hpp"
#include "autalg/groebner.hpp"

namespace autalg {

namespace {

constexpr const char* kZTameProvenance =
    "a linear z-automorphism is z-tame iff its z-Jacobian lies in GE2(K[z1,z2])";
constexpr const char* kLinearPartProvenance =
    "char 0: a z-automorphism whose x,y-linear part is z-wild is wild";
constexpr const char* kMetabelianProvenance =
    "if phi is tame and induces the identity modulo the commutator ideal, eta(J2(phi)) lies in GE2(K[z1,z2])";

CommPoly comm_var(const ContextPtr& ctx, size_t i) { return CommPoly::variable(ctx, i); }

bool fixes_last_variable(const FreeEndo& phi) {
  const size_t z = phi.arity() - 1;
  return phi[z] == FreePoly::variable(phi.ctx, z);
}

Generator<FreePoly> lift_generator(const Generator<CommPoly>& g, const ContextPtr& fctx) {
  if (const auto* a = std::get_if<Affine<CommPoly>>(&g)) {
    Affine<FreePoly> out;
    out.active = a->active;
    for (const auto& row : a->matrix) {
      std::vector<FreePoly> r;
      for (const auto& e : row) r.push_back(lift_to_free(e, fctx));
      out.matrix.push_back(std::move(r));
    }
    for (const auto& s : a->shift) out.shift.push_back(lift_to_free(s, fctx));
    return out;
  }
  if (const auto* t = std::get_if<Triangular<CommPoly>>(&g))
    return Triangular<FreePoly>{t->index, t->alpha, lift_to_free(t->offset, fctx)};
  if (const auto* s = std::get_if<Tau>(&g)) return *s;
  return std::get<EpsilonZ>(g);
}

}  // namespace

FreePoly lift_to_free(const CommPoly& p, const ContextPtr& free_ctx) {
  FreePoly r(free_ctx);
  for (const auto& [m, c] : p.terms()) {
    Word w;
    for (size_t i = 0; i < m.exps.size(); ++i) w.insert(w.end(), m.exps[i], static_cast<uint16_t>(i));
    r.add_term(w, c);
  }
  return r;
}

TameWord<FreePoly> lift_word(const TameWord<CommPoly>& w, const ContextPtr& free_ctx) {
  TameWord<FreePoly> out{free_ctx, {}};
  for (const auto& g : w.gens) out.gens.push_back(lift_generator(g, free_ctx));
  return out;
}

// ---------------------------------------------------------------------------
// Rank two.

Verdict dicks_test(const FreeEndo& phi) {
  if (phi.arity() != 2) throw std::invalid_argument("dicks_test: expects two variables");
  const FreePoly xy = commutator(FreePoly::variable(phi.ctx, 0), FreePoly::variable(phi.ctx, 1));
  const FreePoly c = commutator(phi[0], phi[1]);
  Verdict v;
  v.step = "commutator";
  const Rational alpha = c.coefficient(Word{0, 1});
  v.note("commutator", c.to_string());
  if (sgn(alpha) != 0 && c == xy.scaled(alpha)) {
    v.tag = VerdictTag::Automorphism;
    v.alpha = alpha;
    v.reason = "[f, g] = " + coeff_text(alpha) + " [x, y]";
  } else {
    v.tag = VerdictTag::NotAutomorphism;
    v.reason = "[f, g] is not a nonzero multiple of [x, y]";
  }
  return v;
}

Verdict recognize_aut_free2(const FreeEndo& phi) {
  if (phi.arity() != 2) throw std::invalid_argument("recognize_aut_free2: expects two variables");
  const ContextPtr cctx = commutative_context(phi.ctx);
  CommEndo pi(cctx, {abelianize(phi[0]), abelianize(phi[1])});
  Verdict comm = recognize_aut_k2(pi);
  Verdict v;
  v.trace = comm.trace;
  if (comm.tag != VerdictTag::Automorphism) {
    v.tag = VerdictTag::NotAutomorphism;
    v.step = "1";
    v.reason = "abelianization is not an automorphism: " + comm.reason;
    return v;
  }
  TameWord<FreePoly> lifted = lift_word(std::get<TameWord<CommPoly>>(*comm.word), phi.ctx);
  const FreeEndo psi = lifted.eval();
  if (!(psi == phi)) {
    v.tag = VerdictTag::NotAutomorphism;
    v.step = "2";
    v.reason = "the lifted automorphism " + psi.to_string() + " differs from the input";
    return v;
  }
  v.tag = VerdictTag::Automorphism;
  v.step = "2";
  v.reason = "the lifted tame word recomposes to the input";
  v.word = lifted;
  return v;
}

Verdict recognize_coord_free2(const FreePoly& f) {
  if (f.arity() != 2) throw std::invalid_argument("recognize_coord_free2: expects two variables");
  const ContextPtr cctx = commutative_context(f.context());
  Verdict comm = recognize_coord_k2(abelianize(f));
  Verdict v;
  v.trace = comm.trace;
  if (comm.tag != VerdictTag::Coordinate) {
    v.tag = VerdictTag::NotCoordinate;
    v.step = "1";
    v.reason = "abelianization is not a coordinate: " + comm.reason;
    return v;
  }
  TameWord<FreePoly> lifted = lift_word(std::get<TameWord<CommPoly>>(*comm.word), f.context());
  const FreeEndo psi = lifted.eval();
  if (!(psi[0] == f)) {
    v.tag = VerdictTag::NotCoordinate;
    v.step = "2";
    v.reason = "the lifted automorphism sends x to " + psi[0].to_string();
    return v;
  }
  v.tag = VerdictTag::Coordinate;
  v.step = "2";
  v.reason = "the lifted automorphism sends x to f";
  v.word = lifted;
  v.mate = psi[1];
  return v;
}

// ---------------------------------------------------------------------------
// Linear z-automorphisms.

Mat2Poly z_jacobian(const FreeEndo& phi) {
  if (phi.arity() != 3) throw std::invalid_argument("z_jacobian: expects variables x, y, z");
  std::vector<std::vector<CommPoly>> cols;
  for (size_t j = 0; j < 2; ++j) {
    FreePoly lin = phi[j] - xy_component(phi[j], 2, 0);
    if (!(xy_component(phi[j], 2, 1) == lin)) throw std::invalid_argument("z_jacobian: input is not x,y-linear");
    if (lin.is_zero()) {
      cols.push_back({CommPoly(z_pair_context()), CommPoly(z_pair_context())});
    } else {
      cols.push_back(z_derivatives(lin, 2));
    }
  }
  return {cols[0][0], cols[1][0], cols[0][1], cols[1][1]};
}

Verdict linear_z_tame_test(const FreeEndo& phi) {
  if (phi.arity() != 3 || !fixes_last_variable(phi))
    throw std::invalid_argument("linear_z_tame_test: expects a z-endomorphism of K<x,y,z>");
  const ContextPtr& ctx = phi.ctx;
  const Mat2Poly j = z_jacobian(phi);
  Verdict v;
  v.note("z-jacobian", to_string(j));
  if (!j.det().is_unit()) {
    v.tag = VerdictTag::NotAutomorphism;
    v.step = "det";
    v.reason = "det J_z = " + j.det().to_string() + " is not a nonzero constant";
    return v;
  }
  Ge2Result r = ge2_reduce(j);
  v.trace = r.trace;
  v.order = r.order;
  if (!r.in_ge2) {
    v.tag = VerdictTag::ZWild;
    v.step = "ge2";
    v.reason = "the z-Jacobian is not in GE2(K[z1,z2])";
    WildCertificate cert;
    cert.kind = WildCertificate::Kind::GE2Obstruction;
    cert.matrix = j;
    cert.reduction = r;
    cert.reason = v.reason;
    cert.provenance = kZTameProvenance;
    v.wild = std::move(cert);
    return v;
  }

  TameWord<FreePoly> word{ctx, {}};
  for (const auto& f : r.factors) {
    if (f.kind == ElemFactor::Kind::Diagonal) {
      Affine<FreePoly> a;
      a.active = 2;
      a.matrix = {{FreePoly::constant(ctx, f.d0), FreePoly::zero(ctx)},
                  {FreePoly::zero(ctx), FreePoly::constant(ctx, f.d1)}};
      a.shift = {FreePoly::zero(ctx), FreePoly::zero(ctx)};
      word.gens.push_back(std::move(a));
      continue;
    }
    // Upper [[1,p],[0,1]] adds p-multiples of x to y; lower adds to x.
    const size_t i = f.kind == ElemFactor::Kind::Upper ? 0 : 1;
    for (const auto& [m, c] : f.offset.terms()) word.gens.push_back(EpsilonZ{i, 1 - i, c, m.exps[0], m.exps[1]});
  }
  std::vector<FreePoly> shifts{xy_component(phi[0], 2, 0), xy_component(phi[1], 2, 0)};
  if (!shifts[0].is_zero() || !shifts[1].is_zero()) {
    Affine<FreePoly> t;
    t.active = 2;
    t.matrix = {{FreePoly::one(ctx), FreePoly::zero(ctx)}, {FreePoly::zero(ctx), FreePoly::one(ctx)}};
    t.shift = shifts;
    word.gens.push_back(std::move(t));
  }
  if (!(word.eval() == phi)) throw std::logic_error("linear_z_tame_test: reconstructed word does not recompose");
  v.tag = VerdictTag::ZTame;
  v.step = "ge2";
  v.reason = "the z-Jacobian factors into elementary and diagonal matrices";
  v.word = std::move(word);
  return v;
}

// ---------------------------------------------------------------------------
// Peak reduction on bidegrees.

namespace {

struct LeadingSolve {
  std::optional<FreePoly> q;
  std::string reason;
};

/// Finds Q with u = Q(v, z), Q a polynomial in the letter `letter` and z,
/// through the Formanek coefficients of u and v^d.
LeadingSolve solve_leading(const FreePoly& u, const FreePoly& v, size_t letter, size_t z) {
  const ContextPtr& ctx = u.context();
  const Bidegree bu = bidegree_leading(u, z).first, bv = bidegree_leading(v, z).first;
  const uint32_t l = bu.d, k = bv.d;
  if (k == 0) return {std::nullopt, "the lower leading form has x,y-degree 0"};
  if (l % k != 0)
    return {std::nullopt, "x,y-degree " + std::to_string(l) + " is not a multiple of " + std::to_string(k)};
  const uint32_t d = l / k;
  const ContextPtr tctx = formanek_context(l);
  const auto cu = formanek_coefficients(hn_encode(u, z, l), tctx);
  const auto cv = formanek_coefficients(hn_encode(v.pow(d), z, l), tctx);
  if (cu.empty()) return {std::nullopt, "empty leading form"};
  const Word& w = cu.begin()->first;
  auto it = cv.find(w);
  if (it == cv.end())
    return {std::nullopt, "basis word " + word_to_string(w, *ctx) + " does not occur in the power of the lower form"};
  auto red = leading_term_reduce(cu.begin()->second, it->second, TermOrder::deglex());
  if (!red.remainder.is_zero())
    return {std::nullopt, "Formanek coefficient " + cu.begin()->second.to_string() + " is not divisible by " +
                              it->second.to_string()};
  FreePoly q(ctx);
  for (const auto& [m, c] : red.quotient.terms()) {
    Word qw;
    for (uint32_t i = 0; i <= l; ++i) {
      if (m.exps[i] && i % k != 0)
        return {std::nullopt, "quotient " + red.quotient.to_string() + " involves t" + std::to_string(i)};
      if (i % k != 0) continue;
      qw.insert(qw.end(), m.exps[i], static_cast<uint16_t>(z));
      if (i < l) qw.push_back(static_cast<uint16_t>(letter));
    }
    q.add_term(qw, c);
  }
  std::vector<FreePoly> images;
  for (size_t i = 0; i < ctx->arity(); ++i) images.push_back(i == letter ? v : FreePoly::variable(ctx, i));
  if (!(q.compose(images) == u))
    return {std::nullopt, "the candidate " + q.to_string() + " does not reproduce the leading form"};
  return {q, ""};
}

}  // namespace

Verdict recognize_z_tame_aut3(const FreeEndo& phi) {
  if (phi.arity() != 3 || !fixes_last_variable(phi))
    throw std::invalid_argument("recognize_z_tame_aut3: expects a z-endomorphism of K<x,y,z>");
  const ContextPtr& ctx = phi.ctx;
  constexpr size_t z = 2;
  FreePoly f = phi[0], g = phi[1];
  std::vector<Generator<FreePoly>> peeled;
  Verdict v;

  for (;;) {
    if (f.only_in(z) || g.only_in(z)) {
      v.tag = VerdictTag::NotAutomorphism;
      v.step = "0";
      v.reason = "a coordinate lies in K[z]";
      return v;
    }
    auto [bu, u] = bidegree_leading(f, z);
    auto [bv, w] = bidegree_leading(g, z);
    if (bu == Bidegree{1, 0} && bv == Bidegree{1, 0}) {
      const Rational a = f.coefficient({0}), b = f.coefficient({1});
      const Rational c = g.coefficient({0}), d = g.coefficient({1});
      if (sgn(a * d - b * c) == 0) {
        v.tag = VerdictTag::NotAutomorphism;
        v.step = "1";
        v.reason = "linear leading forms " + u.to_string() + " and " + w.to_string() + " are dependent";
        return v;
      }
      Affine<FreePoly> aff;
      aff.active = 2;
      aff.matrix = {{FreePoly::constant(ctx, a), FreePoly::constant(ctx, b)},
                    {FreePoly::constant(ctx, c), FreePoly::constant(ctx, d)}};
      aff.shift = {xy_component(f, z, 0), xy_component(g, z, 0)};
      TameWord<FreePoly> word{ctx, {aff}};
      for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) word.gens.push_back(*it);
      if (!(word.eval() == phi)) throw std::logic_error("recognize_z_tame_aut3: word does not recompose");
      v.tag = VerdictTag::ZTame;
      v.step = "1";
      v.reason = "reduced to a linear map with translations";
      v.word = std::move(word);
      return v;
    }

    // Try to cancel the higher leading form (f's on ties first).
    LeadingSolve sf, sg;
    if (bu >= bv) {
      sf = solve_leading(u, w, 1, z);
      if (sf.q) {
        std::vector<FreePoly> ims{FreePoly::variable(ctx, 0), g, FreePoly::variable(ctx, z)};
        f -= sf.q->compose(ims);
        peeled.push_back(Triangular<FreePoly>{0, Rational(1), *sf.q});
        v.trace.push_back("step 2: x -> x + " + sf.q->to_string() + " lowers f from bidegree " + bu.to_string());
        continue;
      }
    }
    if (bv >= bu) {
      sg = solve_leading(w, u, 0, z);
      if (sg.q) {
        std::vector<FreePoly> ims{f, FreePoly::variable(ctx, 1), FreePoly::variable(ctx, z)};
        g -= sg.q->compose(ims);
        peeled.push_back(Triangular<FreePoly>{1, Rational(1), *sg.q});
        v.trace.push_back("step 3: y -> y + " + sg.q->to_string() + " lowers g from bidegree " + bv.to_string());
        continue;
      }
    }

    const bool f_side = bu >= bv;
    v.tag = VerdictTag::NotZTame;
    v.step = f_side ? "2" : "3";
    v.reason = bu == bv ? "leading forms of equal bidegree are not related: " + sf.reason
                        : (f_side ? sf.reason : sg.reason);
    WildCertificate cert;
    cert.kind = WildCertificate::Kind::BidegreeDeadlock;
    cert.lead_u = u;
    cert.lead_v = w;
    cert.bidegree_u = bu;
    cert.bidegree_v = bv;
    cert.z_index = z;
    cert.history = v.trace;
    cert.reason = v.reason;
    cert.provenance = "peak reduction: the highest leading form of a z-tame automorphism is a polynomial in the other";
    v.wild = std::move(cert);
    return v;
  }
}

// ---------------------------------------------------------------------------
// Wildness through linear parts and the metabelian algebra.

PolyMatrix<CommPoly> jm_matrix(const FreeEndo& phi) {
  const size_t n = phi.arity();
  PolyMatrix<CommPoly> j(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t c = 0; c < n; ++c) j[i].push_back(m_derivative(phi[c], i));
  return j;
}

Verdict metabelian_aut_test(const FreeEndo& phi) {
  const CommPoly det = determinant(jm_matrix(phi));
  Verdict v;
  v.step = "det";
  v.note("det", det.to_string());
  if (det.is_unit()) {
    v.tag = VerdictTag::Automorphism;
    v.reason = "det J_M = " + det.to_string() + ": automorphism of the free metabelian algebra";
    v.alpha = det.constant_term();
  } else {
    v.tag = VerdictTag::NotAutomorphism;
    v.reason = "det J_M = " + det.to_string() + " is not a nonzero constant";
  }
  return v;
}

CommPoly eta(const CommPoly& p) {
  const size_t n = p.arity() / 2;
  if (n == 0 || p.arity() != 2 * n) throw std::invalid_argument("eta: expects a metabelian context");
  const ContextPtr& zc = z_pair_context();
  std::vector<CommPoly> images(2 * n, CommPoly::zero(zc));
  images[n - 1] = comm_var(zc, 0);
  images[2 * n - 1] = comm_var(zc, 1);
  return p.compose(images);
}

Mat2Poly eta_j2(const FreeEndo& phi) {
  const auto j = jm_matrix(phi);
  return {eta(j[0][0]), eta(j[0][1]), eta(j[1][0]), eta(j[1][1])};
}

namespace {

WildCertificate obstruction(WildCertificate::Kind kind, const Mat2Poly& m, const Ge2Result& r, std::string reason,
                            std::string provenance) {
  WildCertificate cert;
  cert.kind = kind;
  cert.matrix = m;
  cert.reduction = r;
  cert.reason = std::move(reason);
  cert.provenance = std::move(provenance);
  return cert;
}

}  // namespace

Verdict wild_via_linear_part(const FreeEndo& phi) {
  if (phi.arity() != 3 || !fixes_last_variable(phi))
    throw std::invalid_argument("wild_via_linear_part: expects a z-endomorphism of K<x,y,z>");
  const ContextPtr& ctx = phi.ctx;
  Verdict v;
  Verdict meta = metabelian_aut_test(phi);
  if (meta.tag == VerdictTag::NotAutomorphism) {
    v.tag = VerdictTag::NotAutomorphism;
    v.step = "gate";
    v.reason = "not an automorphism: " + meta.reason;
    return v;
  }
  const FreePoly z = FreePoly::variable(ctx, 2);
  FreeEndo lin(ctx, {xy_component(phi[0], 2, 1), xy_component(phi[1], 2, 1), z});
  v.note("linear part", lin.to_string());
  if (lin[0].is_zero() && lin[1].is_zero()) {
    v.step = "linear part";
    v.reason = "no x,y-linear component";
    return v;
  }
  const Mat2Poly j = z_jacobian(lin);
  v.note("z-jacobian", to_string(j));
  if (!j.det().is_unit()) {
    v.step = "linear part";
    v.reason = "the linear part is not invertible (det J_z = " + j.det().to_string() + ")";
    return v;
  }
  Ge2Result r = ge2_reduce(j);
  v.trace = r.trace;
  v.order = r.order;
  if (r.in_ge2) {
    v.step = "ge2";
    v.reason = "the linear part is z-tame; the test does not apply";
    return v;
  }
  v.tag = VerdictTag::Wild;
  v.step = "ge2";
  v.reason = "the linear part " + lin.to_string() + " is z-wild";
  v.wild = obstruction(WildCertificate::Kind::GE2Obstruction, j, r, v.reason, kLinearPartProvenance);
  return v;
}

Verdict metabelian_wild_test(const FreeEndo& phi) {
  if (phi.arity() != 3 || !fixes_last_variable(phi))
    throw std::invalid_argument("metabelian_wild_test: expects a z-endomorphism of K<x,y,z>");
  const ContextPtr cctx = commutative_context(phi.ctx);
  for (size_t i = 0; i < 3; ++i)
    if (!(abelianize(phi[i]) == comm_var(cctx, i)))
      throw std::invalid_argument("metabelian_wild_test: abelianization is not the identity");
  const Mat2Poly m = eta_j2(phi);
  Verdict v;
  v.note("eta(J2)", to_string(m));
  Ge2Result r;
  try {
    r = ge2_reduce(m);
  } catch (const NotInvertible&) {
    v.step = "ge2";
    v.reason = "eta(J2) is not invertible";
    return v;
  }
  v.trace = r.trace;
  v.order = r.order;
  v.step = "ge2";
  if (r.in_ge2) {
    v.reason = "eta(J2) lies in GE2; no conclusion";
    return v;
  }
  v.tag = VerdictTag::Wild;
  v.reason = "eta(J2) is not in GE2(K[z1,z2])";
  v.wild = obstruction(WildCertificate::Kind::MetabelianObstruction, m, r, v.reason, kMetabelianProvenance);
  return v;
}

Verdict metabelian_wild_driver(const FreeEndo& phi) {
  if (phi.arity() != 3 || !fixes_last_variable(phi))
    throw std::invalid_argument("metabelian_wild_driver: expects a z-endomorphism of K<x,y,z>");
  const ContextPtr cctx = commutative_context(phi.ctx);
  CommEndo pi(cctx, {abelianize(phi[0]), abelianize(phi[1]), abelianize(phi[2])});
  if (pi.is_identity()) return metabelian_wild_test(phi);
  Verdict witness = recognize_z_tame_aut_comm(pi);
  if (witness.tag != VerdictTag::ZTame) {
    Verdict v;
    v.step = "witness";
    v.reason = "no z-tame witness for the abelianization: " + witness.reason;
    return v;
  }
  const TameWord<FreePoly> theta = lift_word(std::get<TameWord<CommPoly>>(*witness.word), phi.ctx);
  const FreeEndo theta_inv = theta.inverse().eval();
  const FreeEndo reduced = endo_compose(theta_inv, phi);
  Verdict v = metabelian_wild_test(reduced);
  v.note("eta(J2(theta^-1))", to_string(eta_j2(theta_inv)));
  v.note("eta(J2(phi))", to_string(eta_j2(phi)));
  v.note("eta(J2(theta^-1)) * eta(J2(phi))", to_string(eta_j2(theta_inv) * eta_j2(phi)));
  std::string text;
  for (const auto& g : word_to_strings(theta)) text += (text.empty() ? "" : " ") + g;
  v.note("witness", text);
  v.note("reduced", reduced.to_string());
  return v;
}

bool replay_certificate(const WildCertificate& cert) {
  if (cert.kind == WildCertificate::Kind::BidegreeDeadlock) {
    if (!cert.lead_u || !cert.lead_v) return false;
    const size_t z = cert.z_index;
    if (bidegree_leading(*cert.lead_u, z).first != cert.bidegree_u ||
        bidegree_leading(*cert.lead_v, z).first != cert.bidegree_v)
      return false;
    // Deadlock: neither leading form is a polynomial in the other.
    if (cert.bidegree_u >= cert.bidegree_v && solve_leading(*cert.lead_u, *cert.lead_v, 1, z).q) return false;
    if (cert.bidegree_v >= cert.bidegree_u && solve_leading(*cert.lead_v, *cert.lead_u, 0, z).q) return false;
    return true;
  }
  if (!cert.matrix || !cert.reduction) return false;
  const Ge2Result r = ge2_reduce(*cert.matrix, cert.reduction->order);
  return !r.in_ge2 && r.stuck_a == cert.reduction->stuck_a && r.stuck_b == cert.reduction->stuck_b;
}

}  // namespace autalg
