#include "doctest.h"

#include "autalg/groebner.hpp"
#include "autalg/mat2.hpp"
#include "autalg/parse.hpp"
#include "autalg/random.hpp"

using namespace autalg;

namespace {

const ContextPtr XYZ = make_context({"x", "y", "z"});
const ContextPtr XY = make_context({"x", "y"});
const ContextPtr Z12 = make_context({"z1", "z2"});

CommPoly P(const char* s, const ContextPtr& ctx = XYZ) { return parse_comm(s, ctx); }

}  // namespace

TEST_CASE("rationals parse and reduce") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK(exact_root(Rational(8, 27), 3) == Rational(2, 3));
  CHECK_FALSE(exact_root(Rational(2), 2).has_value());
}

TEST_CASE("rational functions normalize") {
  RatFunc z = RatFunc::variable();
  RatFunc q = (z * z - RatFunc(1)) / (z - RatFunc(1));
  CHECK(q == z + RatFunc(1));
  CHECK(q.is_polynomial());
  CHECK((RatFunc(1) / z).to_string("z") == "(1)/(z)");
}

TEST_CASE("poly_compose") {
  CHECK(P("x").compose({P("y^2"), P("y"), P("z")}) == P("y^2"));
  // Nagata fixes the kernel generator y^2 + x*z.
  std::vector<CommPoly> nagata{P("x - 2*y*(y^2 + x*z) - z*(y^2 + x*z)^2"), P("y + z*(y^2 + x*z)"), P("z")};
  CHECK(P("y^2 + x*z").compose(nagata) == P("y^2 + x*z"));
  CHECK(P("x + y").compose({P("x + 1"), P("y - 1"), P("z")}) == P("x + y"));
}

TEST_CASE("partial derivatives") {
  CommPoly f = P("y + (y^2 + x*z)*z");
  CHECK(f.derivative(0) == P("z^2"));
  CHECK(f.derivative(1) == P("1 + 2*y*z"));
  CHECK(P("7").derivative(0).is_zero());
}

TEST_CASE("weighted leading forms") {
  CHECK(P("x + 3*y^4 + y", XY).weighted_leading_form({4, 1}) == P("x + 3*y^4", XY));
  CHECK(P("x^2 + y^3", XY).weighted_leading_form({1, 1}) == P("y^3", XY));
  // Both terms have weight 6 under (3,2).
  CommPoly f = P("x^2 + y^3", XY);
  for (const auto& [m, c] : f.terms()) CHECK(weighted_degree(m, {3, 2}) == 6);
  CHECK(f.weighted_leading_form({3, 2}) == f);
}

TEST_CASE("leading_term_reduce") {
  const auto order = TermOrder::deglex();
  auto r = leading_term_reduce(P("1 + 2*y*z"), P("z^2"), order);
  CHECK(r.remainder == P("1 + 2*y*z"));
  CHECK(r.multipliers.empty());

  CHECK(leading_term_reduce(P("z^2"), P("1"), order).remainder.is_zero());

  auto s = leading_term_reduce(P("x^2*y + x"), P("x*y"), order);
  CHECK(s.remainder == P("x"));
  CHECK(s.quotient == P("x"));
  CHECK(P("x^2*y + x") - s.quotient * P("x*y") == s.remainder);
  CHECK_THROWS(leading_term_reduce(P("x"), P("0"), order));
}

TEST_CASE("reduced Groebner bases") {
  const auto order = TermOrder::deglex();
  auto gb = buchberger_reduced(std::vector<CommPoly>{P("z^2"), P("1 + 2*y*z")}, order, true);
  REQUIRE(gb.basis.size() == 1);
  CHECK(gb.basis[0] == P("1"));
  // Cofactors express 1 in the generators.
  CHECK(gb.cofactors[0][0] * P("z^2") + gb.cofactors[0][1] * P("1 + 2*y*z") == P("1"));
  // Hand certificate: the first cofactor must be +4y^2; with -4y^2 the sum is 1 - 8y^2z^2.
  CHECK(P("4*y^2") * P("z^2") + P("1 - 2*y*z") * P("1 + 2*y*z") == P("1"));
  CHECK(P("-4*y^2") * P("z^2") + P("1 - 2*y*z") * P("1 + 2*y*z") == P("1 - 8*y^2*z^2"));

  CHECK(buchberger_reduced(std::vector<CommPoly>{P("x")}, order).basis == std::vector<CommPoly>{P("x")});

  auto lin = buchberger_reduced(std::vector<CommPoly>{P("2*x", XY), P("2*y", XY)}, order).basis;
  CHECK(lin == std::vector<CommPoly>{P("y", XY), P("x", XY)});
  // Membership both ways by division.
  CHECK(normal_form(P("2*x", XY), lin, order).is_zero());
  CHECK(normal_form(P("x", XY), {P("2*x", XY), P("2*y", XY)}, order).is_zero());
}

TEST_CASE("ideal_is_unit") {
  CHECK(ideal_is_unit(std::vector<CommPoly>{P("z^2"), P("1 + 2*y*z")}));
  CHECK_FALSE(ideal_is_unit(std::vector<CommPoly>{P("x"), P("y")}));
  auto gb = buchberger_reduced(std::vector<CommPoly>{P("y^2 + x*z"), P("z")}, TermOrder::deglex()).basis;
  CHECK(gb == std::vector<CommPoly>{P("z"), P("y^2")});
  CHECK_FALSE(normal_form(P("1"), gb, TermOrder::deglex()).is_zero());
}

TEST_CASE("Groebner bases under every order") {
  for (const char* name : {"lex", "deglex", "degrevlex"}) {
    auto order = TermOrder::parse(name);
    auto gb = buchberger_reduced(std::vector<CommPoly>{P("x^2 - y"), P("x*y - z"), P("y^2 - x*z")}, order, true);
    // Every generator reduces to zero and every basis element lies in the ideal.
    for (const char* g : {"x^2 - y", "x*y - z", "y^2 - x*z"}) CHECK(normal_form(P(g), gb.basis, order).is_zero());
    for (size_t i = 0; i < gb.basis.size(); ++i) {
      CommPoly combo = gb.cofactors[i][0] * P("x^2 - y") + gb.cofactors[i][1] * P("x*y - z") +
                       gb.cofactors[i][2] * P("y^2 - x*z");
      CHECK(combo == gb.basis[i]);
    }
  }
}

TEST_CASE("ge2_reduce") {
  Mat2Poly cohn{parse_comm("1 + z1*z2", Z12), parse_comm("z2^2", Z12), parse_comm("-z1^2", Z12),
                parse_comm("1 - z1*z2", Z12)};
  auto r = ge2_reduce(cohn);
  CHECK_FALSE(r.in_ge2);
  CHECK_FALSE(r.stuck_a.is_zero());
  CHECK_FALSE(r.stuck_b.is_zero());

  auto id = ge2_reduce(Mat2Poly::identity(Z12));
  CHECK(id.in_ge2);
  CHECK(id.factors.empty());

  Mat2Poly singular{parse_comm("z1", Z12), parse_comm("0", Z12), parse_comm("0", Z12), parse_comm("1", Z12)};
  CHECK_THROWS_AS(ge2_reduce(singular), NotInvertible);
}

TEST_CASE("ge2_reduce refactors random elementary products") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto factors = random_elementary_factors(rng, Z12, 5, 3);
    Mat2Poly m = factor_product(factors, Z12);
    auto r = ge2_reduce(m);
    INFO("matrix: ", to_string(m));
    REQUIRE(r.in_ge2);
    CHECK(factor_product(r.factors, Z12) == m);
  }
}

TEST_CASE("term orders") {
  Monomial a({2, 0, 0}), b({0, 1, 1});
  CHECK(TermOrder::lex().less(b, a));
  CHECK(TermOrder::deglex().less(b, a));
  // x*z^2 vs y^2*z under degrevlex: smaller in the last variable wins.
  Monomial c({1, 0, 2}), d({0, 2, 1});
  CHECK(TermOrder::degrevlex().less(c, d));
  CHECK_THROWS(TermOrder::parse("nope"));
}

TEST_CASE("ring laws on random polynomials") {
  Rng rng(41);
  const std::vector<size_t> all{0, 1, 2};
  for (int i = 0; i < 30; ++i) {
    CommPoly f = random_comm_poly(rng, XYZ, all, 3), g = random_comm_poly(rng, XYZ, all, 3),
             h = random_comm_poly(rng, XYZ, all, 3);
    CHECK((f + g) * h == f * h + g * h);
    std::vector<CommPoly> G{random_comm_poly(rng, XYZ, all, 2), random_comm_poly(rng, XYZ, all, 2),
                            random_comm_poly(rng, XYZ, all, 2)};
    std::vector<CommPoly> H{random_comm_poly(rng, XYZ, all, 2), random_comm_poly(rng, XYZ, all, 2),
                            random_comm_poly(rng, XYZ, all, 2)};
    // G then H: substitute H into the entries of G.
    std::vector<CommPoly> GH;
    for (const auto& gi : G) GH.push_back(gi.compose(H));
    CHECK(f.compose(G).compose(H) == f.compose(GH));
  }
}

TEST_CASE("leading_term_reduce properties") {
  Rng rng(42);
  const std::vector<size_t> all{0, 1, 2};
  for (const char* name : {"lex", "deglex", "degrevlex"}) {
    const auto order = TermOrder::parse(name);
    for (int i = 0; i < 30; ++i) {
      CommPoly p = random_comm_poly(rng, XYZ, all, 4, 6);
      CommPoly q = random_comm_poly(rng, XYZ, all, 2, 3);
      if (q.is_zero()) continue;
      auto r = leading_term_reduce(p, q, order);
      if (!r.remainder.is_zero()) CHECK_FALSE(q.leading_monomial(order).divides(r.remainder.leading_monomial(order)));
      CommPoly recon = r.remainder;
      for (const auto& [m, c] : r.multipliers) recon += q.times_monomial(m, c);
      CHECK(recon == p);
      CHECK(r.quotient * q + r.remainder == p);
    }
  }
}

TEST_CASE("buchberger_reduced is idempotent") {
  Rng rng(43);
  const std::vector<size_t> all{0, 1, 2};
  for (const char* name : {"lex", "deglex", "degrevlex"}) {
    const auto order = TermOrder::parse(name);
    for (int i = 0; i < 8; ++i) {
      std::vector<CommPoly> gens{random_comm_poly(rng, XYZ, all, 2, 3), random_comm_poly(rng, XYZ, all, 2, 3)};
      auto gb = buchberger_reduced(gens, order).basis;
      CHECK(buchberger_reduced(gb, order).basis == gb);
      for (const auto& g : gens) CHECK(normal_form(g, gb, order).is_zero());
    }
  }
}

TEST_CASE("ge2 obstruction and determinant properties") {
  for (const char* name : {"lex", "deglex", "degrevlex"}) {
    const auto order = TermOrder::parse(name);
    Mat2Poly cohn{parse_comm("1 + z1*z2", Z12), parse_comm("z2^2", Z12), parse_comm("-z1^2", Z12),
                  parse_comm("1 - z1*z2", Z12)};
    auto r = ge2_reduce(cohn, order);
    REQUIRE_FALSE(r.in_ge2);
    const Monomial& a = r.stuck_a.leading_monomial(order);
    const Monomial& b = r.stuck_b.leading_monomial(order);
    CHECK_FALSE(a.divides(b));
    CHECK_FALSE(b.divides(a));
    CHECK_FALSE(r.stuck_a.is_unit());
    CHECK_FALSE(r.stuck_b.is_unit());
  }
  Rng rng(44);
  for (int i = 0; i < 40; ++i) {
    auto fs = random_elementary_factors(rng, Z12, 6, 3);
    Rational det(1);
    for (const auto& f : fs) det = det * f.d0 * f.d1;
    CHECK(factor_product(fs, Z12).det() == CommPoly::constant(Z12, det));
  }
}
