#include "doctest.h"

#include "autalg/decide_comm.hpp"
#include "autalg/examples.hpp"
#include "autalg/parse.hpp"
#include "autalg/random.hpp"

using namespace autalg;

namespace {

const ContextPtr XY = make_context({"x", "y"});

CommPoly P(const char* s, const ContextPtr& ctx = xyz_context()) { return parse_comm(s, ctx); }

CommEndo random_endo(Rng& rng, const ContextPtr& ctx, unsigned deg) {
  std::vector<size_t> vars;
  for (size_t i = 0; i < ctx->arity(); ++i) vars.push_back(i);
  std::vector<CommPoly> ims;
  for (size_t i = 0; i < ctx->arity(); ++i) ims.push_back(random_comm_poly(rng, ctx, vars, deg, 3));
  return CommEndo(ctx, ims);
}

}  // namespace

TEST_CASE("composition convention") {
  CommEndo a(XY, {P("x + y^2", XY), P("y", XY)});
  CommEndo b(XY, {P("x - y^2", XY), P("y", XY)});
  CHECK(endo_compose(a, b).is_identity());
  CHECK(endo_compose(a, CommEndo::identity(XY)) == a);
  // phi psi applies psi first: substitute phi's images into psi's polynomials.
  CommEndo phi(XY, {P("x + y^2", XY), P("y", XY)});
  CommEndo psi(XY, {P("x", XY), P("y + x", XY)});
  CHECK(endo_compose(phi, psi)[1] == P("y + x + y^2", XY));
}

TEST_CASE("Nagata as a conjugate over Q(z)") {
  const REndo rho0 = nagata_rho0(), rho1 = nagata_rho1();
  TameWord<RPoly> inv{rho0.ctx, {Triangular<RPoly>{0, RatFunc(1), parse_rpoly("y^2/z", rho0.ctx)}}};
  REndo rho0_inv = inv.inverse().eval();
  CHECK(endo_compose(rho0, rho0_inv).is_identity());
  CHECK(endo_compose(std::vector<REndo>{rho0, rho1, rho0_inv}) == nagata_over_qz());
}

TEST_CASE("tame words") {
  TameWord<CommPoly> w{XY, {Triangular<CommPoly>{0, Rational(1), P("y^2", XY)}}};
  CHECK(w.eval() == CommEndo(XY, {P("x + y^2", XY), P("y", XY)}));

  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    auto word = random_tame_word_k2(rng, XY, 8, 4);
    auto both = word;
    CHECK(both.append(word.inverse()).eval().is_identity());
    CHECK(determinant(jacobian_comm(word.eval())).is_unit());
  }
}

TEST_CASE("Mennicke word") {
  const auto w = mennicke_factorization();
  REQUIRE(w.gens.size() == 8);
  CHECK(w.eval() == anick_extended());
  CHECK(endo_compose(w.eval(), w.inverse().eval()).is_identity());

  // The abelianization is z-tame with t inert.
  const FreeEndo e = w.eval();
  const ContextPtr c = xyz_context();
  auto to3 = [&](const CommPoly& p) {
    CommPoly r(c);
    for (const auto& [m, k] : p.terms()) {
      if (m.exps[2]) throw std::logic_error("t leaked");
      r.add_term(Monomial(std::vector<uint32_t>{m.exps[0], m.exps[1], m.exps[3]}), k);
    }
    return r;
  };
  CommEndo ab(c, {to3(abelianize(e[0])), to3(abelianize(e[1])), P("z")});
  CHECK(recognize_z_tame_aut_comm(ab).tag == VerdictTag::ZTame);
}

TEST_CASE("associativity and chain rule") {
  Rng rng(4);
  for (int i = 0; i < 15; ++i) {
    CommEndo a = random_endo(rng, xyz_context(), 2), b = random_endo(rng, xyz_context(), 2),
             c = random_endo(rng, xyz_context(), 2);
    CHECK(endo_compose(endo_compose(a, b), c) == endo_compose(a, endo_compose(b, c)));
    auto lhs = jacobian_comm(endo_compose(a, b));
    auto rhs = matrix_multiply(jacobian_comm(a), apply_to_matrix(a, jacobian_comm(b)));
    CHECK(lhs == rhs);
  }
  CHECK(determinant(jacobian_comm(nagata())) == P("1"));
  auto id = jacobian_comm(CommEndo::identity(xyz_context()));
  CHECK(determinant(id) == P("1"));
}

TEST_CASE("exp of derivations") {
  const Derivation delta = nagata_delta();
  const Derivation big = w_delta(delta, nagata_w());
  auto e = exp_derivation(big);
  CHECK(e.endo == nagata());
  CHECK(e.terminated_at == 3);

  CHECK(exp_derivation(Derivation(xyz_context(), {P("0"), P("0"), P("0")})).endo.is_identity());
  CHECK(exp_derivation(Derivation(xyz_context(), {P("y"), P("z"), P("0")})).endo ==
        CommEndo(xyz_context(), {P("x + y + 1/2*z"), P("y + z"), P("z")}));

  CHECK_THROWS_AS(w_delta(delta, P("x")), std::invalid_argument);
  CHECK_NOTHROW(w_delta(delta, P("z")));

  // exp(delta) exp(-delta) = 1.
  CHECK(endo_compose(exp_derivation(big).endo, exp_derivation(big.negated()).endo).is_identity());

  // A non-nilpotent derivation hits the cap.
  CHECK_THROWS_AS(exp_derivation(Derivation(xyz_context(), {P("x"), P("0"), P("0")}), 8), NotNilpotentWithinCap);
}

TEST_CASE("triangular exp terminates within the nilpotency bound") {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto& c = xyz_context();
    CommPoly dz = CommPoly::zero(c);
    CommPoly dy = random_comm_poly(rng, c, {2}, 2, 2);
    CommPoly dx = random_comm_poly(rng, c, {1, 2}, 2, 3);
    Derivation d(c, {dx, dy, dz});
    REQUIRE(d.is_triangular());
    // delta^k vanishes on x after at most 1 + deg bound steps.
    unsigned cap = 1 + 1 + 3 + 3 * 2;
    CHECK_NOTHROW(exp_derivation(d, cap));
  }
}

TEST_CASE("Smith identity") {
  auto r = smith_identity_check(nagata_delta(), nagata_w());
  CHECK(r.holds);
  CHECK(r.lhs == r.rhs);
  CHECK(r.extended_ctx->arity() == 4);
  CHECK(smith_identity_check(nagata_delta(), P("z")).holds);
  CHECK(smith_identity_check(nagata_delta(), P("0")).holds);
}

TEST_CASE("Freudenburg derivation") {
  CommPoly f = P("y^2 + x*z");
  CommPoly g = P("z*(y^2 + x*z)^2 + 2*x^2*y*(y^2 + x*z) - x^5");
  Derivation d = freudenburg_derivation(f, g);
  CHECK(d.apply(f).is_zero());
  CHECK(d.apply(g).is_zero());
  CHECK(d.apply(P("y^2 + x*z")).is_zero());
}

TEST_CASE("defining relations") {
  const auto& c = make_context({"x1", "x2", "x3"});
  CHECK(check_relation_product(0, Rational(2), P("x2", c), Rational(3), P("x3", c)));
  CHECK(check_relation_swap(0, 1, 0, Rational(5), P("x2^2 + x3", c)));
  auto report = check_defining_relations(30, 17);
  CHECK(report.ok());
  CHECK(report.checked[0] == 30);
}

TEST_CASE("sigma_h, omega_m and psi_w") {
  const auto& c = xyz_context();
  const auto& t = tz_context();
  CHECK(sigma_h(parse_free("t", t)) == anick());
  CHECK(sigma_h(FreePoly::zero(t)).is_identity());
  FreePoly h = parse_free("t^2 + z*t", t);
  CHECK(endo_compose(sigma_h(h), sigma_h(-h)).is_identity());
  CHECK(omega_m(1) == anick());
  FreeEndo w2 = omega_m(2);
  CHECK(w2[0] * parse_free("z", c) - parse_free("z", c) * w2[1] == parse_free("x*z - z*y", c));
  CHECK(endo_compose(omega_m(3), omega_m_scaled(3, Rational(-1))).is_identity());

  CHECK(psi_w({}).is_identity());
  CHECK(psi_w({{0, 0, 0, 0, Rational(1)}}) ==
        FreeEndo(c, {parse_free("x + [y, z]", c), parse_free("y", c), parse_free("z", c)}));
  std::vector<PsiTerm> terms{{1, 2, 0, 1, Rational(2, 3)}, {0, 1, 1, 0, Rational(-1)}};
  std::vector<PsiTerm> neg = terms;
  for (auto& x : neg) x.alpha = -x.alpha;
  CHECK(endo_compose(psi_w(terms), psi_w(neg)).is_identity());
}
