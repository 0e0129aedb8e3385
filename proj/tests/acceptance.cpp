// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "autalg/cli.hpp"
#include "autalg/decide_comm.hpp"
#include "autalg/decide_free.hpp"
#include "autalg/examples.hpp"
#include "autalg/parse.hpp"
#include "autalg/random.hpp"

using namespace autalg;

namespace {

struct Check {
  std::ostringstream notes;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes << " [exception: " << e.what() << "]";
  }
  const double s = seconds_since(t0);
  if (!c.ok) ++failures;
  std::cout << (c.ok ? "PASS" : "FAIL") << "  " << id << ". " << title << " (" << s << " s)" << c.notes.str()
            << std::endl;
}

JobSpec comm_job(const std::string& cmd, const std::string& expr) {
  JobSpec j;
  j.command = cmd;
  j.exprs = {expr};
  return j;
}

CommEndo perturb(Rng& rng, const CommEndo& phi) {
  std::vector<CommPoly> ims = phi.images;
  ims[rng() % 2] += random_comm_poly(rng, phi.ctx, {0, 1}, 3, 2, false);
  return CommEndo(phi.ctx, ims);
}

}  // namespace

int main() {
  const ContextPtr xy = make_context({"x", "y"});
  const ContextPtr xyz = xyz_context();
  const ContextPtr zz = z_pair_context();

  criterion(1, "Nagata pipeline: z-coordinate with unit certificate, not z-tame with (z^2, 1+2yz)", [&](Check& c) {
    const auto t0 = Clock::now();
    const auto zc = run(comm_job("check-z-coord", "y + (y^2 + x*z)*z")).out;
    c.expect(zc["verdict"] == "coordinate", "check-z-coord verdict");
    c.expect(zc["unit_certificate"]["verified"] == true, "unit certificate verifies");
    c.expect(zc["unit_certificate"]["generators"] == nlohmann::json::array({"z^2", "1 + 2*y*z"}),
             "certificate generators");
    const auto zt = run(comm_job("check-z-tame-coord", "y + (y^2 + x*z)*z")).out;
    c.expect(zt["verdict"] == "not-z-tame", "check-z-tame-coord verdict");
    c.expect(zt["facts"]["f_x"] == "z^2" && zt["facts"]["f_y"] == "1 + 2*y*z", "f_x, f_y");
    c.expect(zt["stuck_pair"] == nlohmann::json::array({"z^2", "1 + 2*y*z"}), "indivisible pair");
    c.expect(seconds_since(t0) < 1.0, "runtime < 1 s");
  });

  criterion(2, "Anick pipeline: Cohn Jacobian, GE2 obstruction, z-wild, wild", [&](Check& c) {
    const auto t0 = Clock::now();
    const FreeEndo nu = anick();
    const Mat2Poly j = z_jacobian(nu);
    const Mat2Poly cohn{parse_comm("1 + z1*z2", zz), parse_comm("z2^2", zz), parse_comm("-z1^2", zz),
                        parse_comm("1 - z1*z2", zz)};
    c.expect(j == cohn, "z_jacobian entries");
    c.expect(!ge2_reduce(j).in_ge2, "ge2_reduce obstruction");
    const Verdict lin = linear_z_tame_test(nu);
    c.expect(lin.tag == VerdictTag::ZWild && lin.wild && replay_certificate(*lin.wild), "linear_z_tame_test");
    const Verdict w = wild_via_linear_part(nu);
    c.expect(w.tag == VerdictTag::Wild, "wild_via_linear_part");
    c.expect(seconds_since(t0) < 1.0, "runtime < 1 s");
  });

  criterion(3, "rho0 rho1 rho0^-1 over Q(z) equals the Nagata map", [&](Check& c) {
    const REndo r0 = nagata_rho0(), r1 = nagata_rho1();
    TameWord<RPoly> w{r0.ctx, {Triangular<RPoly>{0, RatFunc(1), parse_rpoly("y^2/z", r0.ctx)}}};
    const REndo r0inv = w.inverse().eval();
    c.expect(endo_compose(r0, r0inv).is_identity(), "rho0^-1 inverts rho0");
    const REndo conj = endo_compose(std::vector<REndo>{r0, r1, r0inv});
    c.expect(conj == nagata_over_qz(), "conjugate equals Nagata over Q(z)");
    const ContextPtr q = xy_over_z_context();
    const REndo lifted(q, {to_rpoly(nagata()[0], 2, q), to_rpoly(nagata()[1], 2, q)});
    c.expect(conj == lifted, "matches the tuple in K[x,y,z]");
  });

  criterion(4, "exp((y^2+xz)(-2y, z, 0)) is the Nagata map, terminating at index 3", [&](Check& c) {
    const ExpResult e = exp_derivation(w_delta(nagata_delta(), nagata_w()));
    c.expect(e.endo == nagata(), "exp equals Nagata");
    c.expect(e.terminated_at == 3, "terminated at 3");
  });

  criterion(5, "Smith identity for the Nagata data and for w = z", [&](Check& c) {
    const SmithReport r = smith_identity_check(nagata_delta(), nagata_w());
    c.expect(r.holds && r.lhs == r.rhs && r.extended_ctx->arity() == 4, "w = y^2 + xz");
    const SmithReport rz = smith_identity_check(nagata_delta(), parse_comm("z", xyz));
    c.expect(rz.holds && rz.lhs == rz.rhs, "w = z");
  });

  criterion(6, "Mennicke eight-factor word evaluates to the extended Anick map", [&](Check& c) {
    const auto w = mennicke_factorization();
    c.expect(w.gens.size() == 8, "eight factors");
    c.expect(w.eval() == anick_extended(), "evaluation");
  });

  criterion(7, "Round trips: 500 tame words of K[x,y], 200 z-tame words of K<x,y,z>", [&](Check& c) {
    const auto t0 = Clock::now();
    Rng rng(7001);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
      const CommEndo phi = random_tame_word_k2(rng, xy, 8, 5).eval();
      const Verdict v = recognize_aut_k2(phi);
      if (v.tag != VerdictTag::Automorphism || !(std::get<TameWord<CommPoly>>(*v.word).eval() == phi)) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " K[x,y] failures");
    bad = 0;
    for (int i = 0; i < 200; ++i) {
      const FreeEndo phi = random_z_tame_word_free(rng, xyz, 6, 4).eval();
      const Verdict v = recognize_z_tame_aut3(phi);
      if (v.tag != VerdictTag::ZTame || !(std::get<TameWord<FreePoly>>(*v.word).eval() == phi)) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " K<x,y,z> failures");
    c.expect(seconds_since(t0) < 60.0, "runtime < 60 s");
  });

  criterion(8, "Agreement: coordinate recognizers (200) and free rank-2 tests (200)", [&](Check& c) {
    Rng rng(8001);
    int bad = 0, coords = 0;
    for (int i = 0; i < 200; ++i) {
      CommEndo phi = random_tame_word_k2(rng, xy, 5, 3).eval();
      if (i % 2) phi = perturb(rng, phi);
      const CommPoly& f = phi[i % 4 < 2 ? 0 : 1];
      const bool a = recognize_coord_k2(f).tag == VerdictTag::Coordinate;
      const bool b = coord_test_sy(f).tag == VerdictTag::Coordinate;
      bad += a != b;
      coords += a;
    }
    c.expect(bad == 0, std::to_string(bad) + " coordinate disagreements");
    c.expect(coords > 0 && coords < 200, "both outcomes occur");
    bad = 0;
    int auts = 0;
    for (int i = 0; i < 200; ++i) {
      FreeEndo phi = random_tame_word_free2(rng, xy, 5, 3).eval();
      if (i % 2) {
        std::vector<FreePoly> ims = phi.images;
        ims[rng() % 2] += random_free_poly(rng, xy, {0, 1}, 3, 2, false);
        phi = FreeEndo(xy, ims);
      }
      const bool a = dicks_test(phi).tag == VerdictTag::Automorphism;
      const bool b = recognize_aut_free2(phi).tag == VerdictTag::Automorphism;
      bad += a != b;
      auts += a;
    }
    c.expect(bad == 0, std::to_string(bad) + " free rank-2 disagreements");
    c.expect(auts > 0 && auts < 200, "both outcomes occur");
  });

  criterion(9, "GE2: 300 elementary products refactor; Cohn and h-scaled variants are obstructed", [&](Check& c) {
    Rng rng(9001);
    int bad = 0;
    for (int i = 0; i < 300; ++i) {
      const auto fs = random_elementary_factors(rng, zz, 1 + static_cast<unsigned>(rng() % 6), 3);
      const Mat2Poly m = factor_product(fs, zz);
      const Ge2Result r = ge2_reduce(m);
      if (!r.in_ge2 || !(factor_product(r.factors, zz) == m)) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " products not refactored");
    c.expect(!ge2_reduce(cohn_matrix()).in_ge2, "Cohn");
    for (const char* h : {"1 + z1", "z2^2", "z1*z2"})
      c.expect(!ge2_reduce(cohn_scaled(parse_comm(h, zz))).in_ge2, std::string("h = ") + h);
  });

  criterion(10, "Metabelian: J_M(rho), 500 derivative identities, wild Anick", [&](Check& c) {
    const ContextPtr mc = metabelian_context(xyz);
    auto M = [&](const char* s) { return parse_comm(s, mc); };
    const PolyMatrix<CommPoly> expected{{M("1"), M("0"), M("0")},
                                        {M("x1^2*(z2 - z1)"), M("1"), M("0")},
                                        {M("x1^2*(y1 - y2)"), M("0"), M("1")}};
    const auto j = jm_matrix(metabelian_rho());
    c.expect(j == expected, "J_M(rho) entries");
    c.expect(determinant(j) == M("1"), "det = 1");
    Rng rng(10001);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
      const FreePoly f = random_free_poly(rng, xyz, {0, 1, 2}, 5, 5);
      auto [lhs, rhs] = derivative_identity_sides(f);
      bad += !(lhs == rhs);
    }
    c.expect(bad == 0, std::to_string(bad) + " identity failures");
    const Verdict d = metabelian_wild_driver(anick());
    c.expect(d.tag == VerdictTag::Wild && d.wild && d.wild->kind == WildCertificate::Kind::MetabelianObstruction,
             "driver returns Wild");
    c.expect(d.fact("eta(J2(phi))") == to_string(cohn_matrix()), "Cohn obstruction");
    c.expect(d.wild && replay_certificate(*d.wild), "certificate replays");
  });

  criterion(11, "Defining relations: 100 instances of each schema", [&](Check& c) {
    const RelationReport r = check_defining_relations(100, 11001);
    for (int k = 0; k < 3; ++k) {
      c.expect(r.checked[k] == 100, "schema " + std::to_string(k) + " count");
      c.expect(r.failures[k] == 0, "schema " + std::to_string(k) + " failures");
    }
  });

  criterion(12, "sigma_h fixes xz - zy and inverts by -h (50 h); omega_1..3 deadlock", [&](Check& c) {
    Rng rng(12001);
    const FreePoly w = parse_free("x*z - z*y", xyz);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const FreePoly h = random_free_poly(rng, tz_context(), {0, 1}, 2, 3);
      const FreeEndo s = sigma_h(h);
      if (!(s.apply(w) == w) || !endo_compose(s, sigma_h(-h)).is_identity()) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " sigma_h failures");
    for (unsigned m = 1; m <= 3; ++m) {
      const Verdict v = recognize_z_tame_aut3(omega_m(m));
      c.expect(v.tag == VerdictTag::NotZTame && v.wild && v.wild->kind == WildCertificate::Kind::BidegreeDeadlock &&
                   replay_certificate(*v.wild),
               "omega_" + std::to_string(m));
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
