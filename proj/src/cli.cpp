#include "autalg/cli.hpp"

#include <algorithm>
#include <sstream>

#include "autalg/decide_comm.hpp"
#include "autalg/decide_free.hpp"
#include "autalg/examples.hpp"
#include "autalg/parse.hpp"

namespace autalg {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw InputError(msg); }

template <class P>
P parse_as(const std::string& s, const ContextPtr& ctx) {
  try {
    if constexpr (std::is_same_v<P, CommPoly>) {
      return parse_comm(s, ctx);
    } else if constexpr (std::is_same_v<P, FreePoly>) {
      return parse_free(s, ctx);
    } else {
      return parse_rpoly(s, ctx);
    }
  } catch (const std::invalid_argument& e) {
    bad("cannot parse '" + s + "': " + e.what());
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

// ---------------------------------------------------------------------------
// Job context.

struct Setup {
  ContextPtr ctx;
  TermOrder order;
  bool free = false;
  bool qz = false;
};

Setup setup(JobSpec& job, size_t default_arity) {
  Setup s;
  if (job.algebra != "comm" && job.algebra != "free") bad("--algebra must be comm or free");
  if (job.field != "q" && job.field != "q(z)") bad("--field must be q or q(z)");
  s.free = job.algebra == "free";
  s.qz = job.field == "q(z)";
  if (s.free && s.qz) bad("Q(z) coefficients are only available for commutative input");
  try {
    s.order = TermOrder::parse(job.order);
  } catch (const std::invalid_argument&) {
    bad("--order must be lex, deglex or degrevlex");
  }
  std::vector<std::string> vars = job.vars;
  if (vars.empty()) {
    static const std::vector<std::string> kNames{"x", "y", "z", "t", "u", "v", "w"};
    size_t n = std::max<size_t>(default_arity, job.fix_z ? 3 : 1);
    if (s.qz) n = std::min<size_t>(n, 2);
    if (n > kNames.size()) bad("too many coordinates; pass --vars");
    vars.assign(kNames.begin(), kNames.begin() + static_cast<std::ptrdiff_t>(n));
  }
  if (job.fix_z) {
    if (s.qz) bad("--fix-z and --field q(z) are exclusive: z is a coefficient there");
    if (vars.back() != "z") bad("--fix-z requires z as the last variable");
  }
  if (s.qz && std::find(vars.begin(), vars.end(), "z") != vars.end())
    bad("with --field q(z) the name z is reserved for the coefficient field");
  try {
    s.ctx = make_context(vars, "z");
  } catch (const std::invalid_argument& e) {
    bad(std::string("bad --vars: ") + e.what());
  }
  job.vars = vars;
  return s;
}

template <class P>
Endo<P> build_endo(const JobSpec& job, const Setup& s) {
  const size_t n = s.ctx->arity();
  std::vector<P> ims;
  for (const auto& e : job.exprs) ims.push_back(parse_as<P>(e, s.ctx));
  if (job.fix_z && ims.size() + 1 == n) ims.push_back(P::variable(s.ctx, n - 1));
  if (ims.size() != n)
    bad("expected " + std::to_string(n) + " coordinates (one -e per variable), got " + std::to_string(ims.size()));
  if (job.fix_z && !(ims.back() == P::variable(s.ctx, n - 1))) bad("--fix-z: the image of z must be z");
  return Endo<P>(s.ctx, std::move(ims));
}

template <class P>
P single_expr(const JobSpec& job, const Setup& s) {
  if (job.exprs.size() != 1) bad(job.command + " expects exactly one -e expression");
  return parse_as<P>(job.exprs[0], s.ctx);
}

// ---------------------------------------------------------------------------
// Serialization.

json matrix_json(const Mat2Poly& m, const TermOrder& o) {
  return json::array({json::array({m.a00.to_string(o), m.a01.to_string(o)}),
                      json::array({m.a10.to_string(o), m.a11.to_string(o)})});
}

template <class P>
json poly_matrix_json(const PolyMatrix<P>& m, const TermOrder& o) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.to_string(o));
    out.push_back(r);
  }
  return out;
}

template <class P>
std::string alpha_text(const typename P::Coeff& c, const ContextPtr& ctx) {
  if constexpr (std::is_same_v<typename P::Coeff, Rational>) {
    return coeff_text(c);
  } else {
    return coeff_text(c, ctx->field_var());
  }
}

template <class P>
json generator_json(const Generator<P>& g, const ContextPtr& ctx, const TermOrder& o) {
  json j;
  if (const auto* a = std::get_if<Affine<P>>(&g)) {
    j["gen"] = "affine";
    j["matrix"] = poly_matrix_json(a->matrix, o);
    json sh = json::array();
    for (const auto& s : a->shift) sh.push_back(s.to_string(o));
    j["shift"] = sh;
  } else if (const auto* t = std::get_if<Triangular<P>>(&g)) {
    j["gen"] = "sigma";
    j["var"] = ctx->name(t->index);
    j["alpha"] = alpha_text<P>(t->alpha, ctx);
    j["offset"] = t->offset.to_string(o);
  } else if (const auto* s = std::get_if<Tau>(&g)) {
    j["gen"] = "tau";
    j["vars"] = json::array({ctx->name(s->k), ctx->name(s->s)});
  } else {
    const auto& e = std::get<EpsilonZ>(g);
    j["gen"] = "eps";
    j["from"] = ctx->name(e.i);
    j["to"] = ctx->name(e.j);
    j["alpha"] = coeff_text(e.alpha);
    j["a"] = e.a;
    j["b"] = e.b;
  }
  return j;
}

template <class P>
json word_json(const TameWord<P>& w, const TermOrder& o) {
  json out = json::array();
  for (const auto& g : w.gens) out.push_back(generator_json(g, w.ctx, o));
  return out;
}

size_t var_index(const json& name, const ContextPtr& ctx) {
  if (!name.is_string()) bad("generator variable must be a string");
  auto i = ctx->index_of(name.get<std::string>());
  if (!i) bad("generator names unknown variable '" + name.get<std::string>() + "'");
  return *i;
}

std::string str_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) bad(std::string("generator is missing string field '") + key + "'");
  return j[key].get<std::string>();
}

template <class P>
Generator<P> generator_from_json(const json& j, const ContextPtr& ctx) {
  const std::string kind = str_field(j, "gen");
  if (kind == "affine") {
    Affine<P> a;
    if (!j.contains("matrix") || !j["matrix"].is_array()) bad("affine generator needs a matrix");
    for (const auto& row : j["matrix"]) {
      std::vector<P> r;
      for (const auto& e : row) r.push_back(parse_as<P>(e.get<std::string>(), ctx));
      a.matrix.push_back(r);
    }
    a.active = a.matrix.size();
    if (j.contains("shift")) {
      for (const auto& e : j["shift"]) a.shift.push_back(parse_as<P>(e.get<std::string>(), ctx));
    } else {
      a.shift.assign(a.active, P::zero(ctx));
    }
    return a;
  }
  if (kind == "sigma") {
    Triangular<P> t;
    t.index = var_index(j["var"], ctx);
    t.alpha = parse_as<P>(str_field(j, "alpha"), ctx).constant_term();
    t.offset = parse_as<P>(str_field(j, "offset"), ctx);
    return t;
  }
  if (kind == "tau") {
    if (!j.contains("vars") || j["vars"].size() != 2) bad("tau generator needs two vars");
    return Tau{var_index(j["vars"][0], ctx), var_index(j["vars"][1], ctx)};
  }
  if (kind == "eps") {
    EpsilonZ e;
    e.i = var_index(j["from"], ctx);
    e.j = var_index(j["to"], ctx);
    e.alpha = parse_rational(str_field(j, "alpha"));
    e.a = j.value("a", 0u);
    e.b = j.value("b", 0u);
    return e;
  }
  bad("unknown generator kind '" + kind + "'");
}

template <class P>
json endo_json(const Endo<P>& e, const TermOrder& o) {
  json out = json::array();
  for (const auto& p : e.images) out.push_back(p.to_string(o));
  return out;
}

json ge2_json(const Ge2Result& r) {
  json j;
  j["in_ge2"] = r.in_ge2;
  if (r.in_ge2) {
    json fs = json::array();
    for (const auto& f : r.factors) {
      json x;
      x["kind"] = f.kind_name();
      if (f.kind == ElemFactor::Kind::Diagonal) {
        x["diag"] = json::array({coeff_text(f.d0), coeff_text(f.d1)});
      } else {
        x["offset"] = f.offset.to_string(r.order);
      }
      fs.push_back(x);
    }
    j["factors"] = fs;
  } else {
    j["stuck"] = json::array({r.stuck_a.to_string(r.order), r.stuck_b.to_string(r.order)});
    j["reached"] = matrix_json(r.reached, r.order);
  }
  j["trace"] = r.trace;
  j["order"] = r.order.name();
  return j;
}

json verdict_json(const Verdict& v, const TermOrder& o) {
  json j;
  j["verdict"] = tag_name(v.tag);
  if (!v.step.empty()) j["step"] = v.step;
  if (!v.reason.empty()) j["reason"] = v.reason;
  j["order"] = v.order.name();
  j["trace"] = v.trace;
  if (v.word) std::visit([&](const auto& w) { j["word"] = word_json(w, o); }, *v.word);
  if (v.mate) std::visit([&](const auto& m) { j["mate"] = m.to_string(o); }, *v.mate);
  if (v.alpha) j["alpha"] = coeff_text(*v.alpha);
  if (v.stuck_pair) j["stuck_pair"] = json::array({v.stuck_pair->first, v.stuck_pair->second});
  if (v.unit) {
    json u;
    json gens = json::array(), cof = json::array();
    for (const auto& g : v.unit->generators) gens.push_back(g.to_string(o));
    for (const auto& c : v.unit->cofactors) cof.push_back(c.to_string(o));
    u["generators"] = gens;
    u["cofactors"] = cof;
    u["verified"] = v.unit->verify();
    j["unit_certificate"] = u;
  }
  if (v.wild) {
    const auto& w = *v.wild;
    json c;
    c["kind"] = kind_name(w.kind);
    c["reason"] = w.reason;
    c["provenance"] = w.provenance;
    if (w.matrix) {
      j["obstruction"] = matrix_json(*w.matrix, TermOrder::deglex());
      c["matrix"] = j["obstruction"];
    }
    if (w.reduction) c["ge2"] = ge2_json(*w.reduction);
    if (w.lead_u) c["lead_u"] = w.lead_u->to_string();
    if (w.lead_v) c["lead_v"] = w.lead_v->to_string();
    if (w.kind == WildCertificate::Kind::BidegreeDeadlock) {
      c["bidegree_u"] = w.bidegree_u.to_string();
      c["bidegree_v"] = w.bidegree_v.to_string();
      c["history"] = w.history;
    }
    c["replays"] = replay_certificate(w);
    j["certificate"] = c;
  }
  if (!v.reduction.empty()) {
    json r = json::array();
    for (const auto& s : v.reduction)
      r.push_back({{"generator", s.generator},
                   {"before", json::array({s.before.first, s.before.second})},
                   {"after", json::array({s.after.first, s.after.second})}});
    j["reduction"] = r;
  }
  if (!v.facts.empty()) {
    json f = json::object();
    for (const auto& [k, val] : v.facts) f[k] = val;
    j["facts"] = f;
  }
  return j;
}

int exit_for(VerdictTag t) { return t == VerdictTag::Inconclusive ? 2 : 0; }

RunResult from_verdict(const Verdict& v, const TermOrder& o) { return {exit_for(v.tag), verdict_json(v, o)}; }

bool linear_in_xy(const FreeEndo& phi) {
  for (size_t i = 0; i + 1 < phi.arity(); ++i)
    if (!(xy_component(phi[i], phi.arity() - 1, 1) == phi[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Commands.

RunResult check_aut(JobSpec& job) {
  const Setup s = setup(job, job.exprs.size());
  const size_t n = s.ctx->arity();
  if (n < 2) bad("check-aut needs at least two coordinates");
  if (s.qz) {
    if (n != 2) bad("check-aut over Q(z) needs two variables");
    return from_verdict(recognize_aut_k2(build_endo<RPoly>(job, s)), s.order);
  }
  if (s.free) {
    const FreeEndo phi = build_endo<FreePoly>(job, s);
    if (n == 2) {
      Verdict v = recognize_aut_free2(phi);
      Verdict d = dicks_test(phi);
      v.note("commutator test", tag_name(d.tag) + (d.alpha ? " (alpha = " + coeff_text(*d.alpha) + ")" : ""));
      return from_verdict(v, s.order);
    }
    if (n == 3 && (job.fix_z || phi[2] == FreePoly::variable(s.ctx, 2))) {
      Verdict v = recognize_z_tame_aut3(phi);
      if (v.tag == VerdictTag::ZTame) {
        v.tag = VerdictTag::Automorphism;
        v.reason = "z-tame word found";
        return from_verdict(v, s.order);
      }
      if (v.tag == VerdictTag::NotAutomorphism) return from_verdict(v, s.order);
      Verdict m = metabelian_aut_test(phi);
      if (m.tag == VerdictTag::NotAutomorphism) return from_verdict(m, s.order);
      Verdict out;
      out.reason = "no z-tame word and the metabelian Jacobian is invertible";
      out.trace = v.trace;
      out.note("det J_M", *m.fact("det"));
      return from_verdict(out, s.order);
    }
    Verdict m = metabelian_aut_test(phi);
    if (m.tag == VerdictTag::Automorphism) m.tag = VerdictTag::Inconclusive;
    return from_verdict(m, s.order);
  }
  const CommEndo phi = build_endo<CommPoly>(job, s);
  if (n == 2) return from_verdict(recognize_aut_k2(phi), s.order);
  const CommPoly det = determinant(jacobian_comm(phi));
  if (!det.is_unit()) {
    Verdict v;
    v.tag = VerdictTag::NotAutomorphism;
    v.step = "jacobian";
    v.reason = "det J = " + det.to_string() + " is not a nonzero constant";
    return from_verdict(v, s.order);
  }
  if (n == 3 && (job.fix_z || phi[2] == CommPoly::variable(s.ctx, 2))) {
    Verdict v = recognize_z_tame_aut_comm(phi);
    if (v.tag == VerdictTag::ZTame) {
      v.tag = VerdictTag::Automorphism;
      v.reason = "z-tame word found";
    } else if (v.tag == VerdictTag::NotZTame) {
      v.tag = VerdictTag::Inconclusive;
    }
    return from_verdict(v, s.order);
  }
  Verdict v;
  v.reason = "Jacobian determinant is a unit; no decision procedure in this rank";
  return from_verdict(v, s.order);
}

RunResult check_coord(JobSpec& job) {
  const Setup s = setup(job, job.fix_z ? 3 : 2);
  if (s.free) {
    if (s.ctx->arity() != 2) bad("free coordinates are decided in rank 2 only");
    return from_verdict(recognize_coord_free2(single_expr<FreePoly>(job, s)), s.order);
  }
  if (s.qz) {
    if (s.ctx->arity() != 2) bad("check-coord over Q(z) needs two variables");
    return from_verdict(coord_test_sy(single_expr<RPoly>(job, s), s.order), s.order);
  }
  const CommPoly f = single_expr<CommPoly>(job, s);
  if (s.ctx->arity() == 3 && job.fix_z) return from_verdict(z_coord_test(f, s.order), s.order);
  if (s.ctx->arity() != 2) bad("check-coord: use two variables, or --fix-z with x,y,z");
  Verdict v = recognize_coord_k2(f);
  v.note("groebner test", tag_name(coord_test_sy(f, s.order).tag));
  return from_verdict(v, s.order);
}

RunResult check_z_tame(JobSpec& job) {
  job.fix_z = true;
  JobSpec& j = job;
  const Setup s = setup(j, 3);
  if (s.ctx->arity() != 3) bad(job.command + " works on x, y, z");
  if (s.free) {
    const FreeEndo phi = build_endo<FreePoly>(j, s);
    if (linear_in_xy(phi)) return from_verdict(linear_z_tame_test(phi), s.order);
    Verdict v = recognize_z_tame_aut3(phi);
    if (v.tag == VerdictTag::NotZTame) {
      Verdict lin = wild_via_linear_part(phi);
      v.note("linear part", tag_name(lin.tag) + ": " + lin.reason);
      if (lin.tag == VerdictTag::Wild && lin.wild && !v.wild) v.wild = lin.wild;
    }
    return from_verdict(v, s.order);
  }
  if (job.exprs.size() == 1) return from_verdict(z_tame_coord_test(parse_as<CommPoly>(job.exprs[0], s.ctx), s.order), s.order);
  return from_verdict(recognize_z_tame_aut_comm(build_endo<CommPoly>(j, s)), s.order);
}

RunResult check_z_tame_coord(JobSpec& job) {
  job.fix_z = true;
  JobSpec& j = job;
  const Setup s = setup(j, 3);
  if (s.free || s.ctx->arity() != 3) bad(job.command + " works on commutative x, y, z");
  return from_verdict(z_tame_coord_test(single_expr<CommPoly>(j, s), s.order), s.order);
}

RunResult check_z_coord(JobSpec& job) {
  job.fix_z = true;
  JobSpec& j = job;
  const Setup s = setup(j, 3);
  if (s.free || s.ctx->arity() != 3) bad(job.command + " works on commutative x, y, z");
  return from_verdict(z_coord_test(single_expr<CommPoly>(j, s), s.order), s.order);
}

Mat2Poly parse_matrix(const std::string& text, const ContextPtr& ctx) {
  auto rows = split_top_level(text, ';');
  if (rows.size() != 2) bad("matrix needs two rows separated by ';'");
  std::vector<CommPoly> e;
  for (const auto& r : rows) {
    auto cells = split_top_level(r, ',');
    if (cells.size() != 2) bad("matrix rows need two entries separated by ','");
    for (const auto& c : cells) e.push_back(parse_as<CommPoly>(trim(c), ctx));
  }
  return {e[0], e[1], e[2], e[3]};
}

RunResult ge2(JobSpec& job) {
  if (job.matrix.empty()) bad("ge2 needs -m MATRIX");
  if (job.vars.empty()) job.vars = {"z1", "z2"};
  job.fix_z = false;
  const Setup s = setup(job, 2);
  const Mat2Poly m = parse_matrix(job.matrix, s.ctx);
  Ge2Result r;
  try {
    r = ge2_reduce(m, s.order);
  } catch (const NotInvertible& e) {
    bad(std::string("ge2: ") + e.what());
  }
  json out;
  out["verdict"] = r.in_ge2 ? "in-ge2" : "not-in-ge2";
  out["matrix"] = matrix_json(m, s.order);
  out["ge2"] = ge2_json(r);
  if (!r.in_ge2) out["obstruction"] = matrix_json(m, TermOrder::deglex());
  out["order"] = s.order.name();
  if (r.in_ge2 && !(factor_product(r.factors, s.ctx) == m)) throw std::logic_error("ge2: refactorization mismatch");
  return {0, out};
}

RunResult jacobian(JobSpec& job) {
  const Setup s = setup(job, job.exprs.size());
  json out;
  if (s.free) {
    const FreeEndo phi = build_endo<FreePoly>(job, s);
    if (job.fix_z && s.ctx->arity() == 3 && linear_in_xy(phi)) {
      const Mat2Poly j = z_jacobian(phi);
      out["kind"] = "z-jacobian";
      out["matrix"] = matrix_json(j, s.order);
      out["det"] = j.det().to_string(s.order);
    } else {
      const auto j = jm_matrix(phi);
      out["kind"] = "metabelian";
      out["matrix"] = poly_matrix_json(j, s.order);
      out["det"] = determinant(j).to_string(s.order);
    }
  } else if (s.qz) {
    const auto j = jacobian_comm(build_endo<RPoly>(job, s));
    out["kind"] = "jacobian";
    out["matrix"] = poly_matrix_json(j, s.order);
    out["det"] = determinant(j).to_string(s.order);
  } else {
    const auto j = jacobian_comm(build_endo<CommPoly>(job, s));
    out["kind"] = "jacobian";
    out["matrix"] = poly_matrix_json(j, s.order);
    out["det"] = determinant(j).to_string(s.order);
  }
  out["order"] = s.order.name();
  return {0, out};
}

RunResult metabelian(JobSpec& job) {
  job.algebra = "free";
  job.fix_z = true;
  JobSpec& j = job;
  const Setup s = setup(j, 3);
  if (s.ctx->arity() != 3) bad("metabelian works on free x, y, z");
  const FreeEndo phi = build_endo<FreePoly>(j, s);
  Verdict m = metabelian_aut_test(phi);
  if (m.tag == VerdictTag::NotAutomorphism) return from_verdict(m, s.order);
  Verdict v = metabelian_wild_driver(phi);
  v.note("det J_M", *m.fact("det"));
  return from_verdict(v, s.order);
}

template <class P>
RunResult eval_word_as(const JobSpec& job, const Setup& s) {
  TameWord<P> w{s.ctx, {}};
  for (const auto& g : job.word) w.gens.push_back(generator_from_json<P>(g, s.ctx));
  try {
    w.validate();
  } catch (const std::exception& e) {
    bad(std::string("invalid word: ") + e.what());
  }
  const Endo<P> e = w.eval();
  json out;
  out["images"] = endo_json(e, s.order);
  out["generators"] = w.gens.size();
  if (!job.exprs.empty()) {
    bool match = job.exprs.size() <= e.arity();
    for (size_t i = 0; match && i < job.exprs.size(); ++i)
      match = parse_as<P>(job.exprs[i], s.ctx).to_string(s.order) == e[i].to_string(s.order);
    out["matches_input"] = match;
  }
  out["order"] = s.order.name();
  return {0, out};
}

RunResult eval_word(JobSpec& job) {
  if (!job.word.is_array()) bad("eval-word needs a word (a JSON array of generators on stdin)");
  size_t arity = job.exprs.size();
  const Setup s = setup(job, arity ? arity : 2);
  if (s.free) return eval_word_as<FreePoly>(job, s);
  if (s.qz) return eval_word_as<RPoly>(job, s);
  return eval_word_as<CommPoly>(job, s);
}

template <class P>
JobSpec endo_job(const Endo<P>& e, const std::string& algebra, bool fix_z) {
  JobSpec j;
  j.algebra = algebra;
  j.vars = e.ctx->names();
  j.fix_z = fix_z;
  j.exprs = e.to_strings();
  return j;
}

RunResult example(const JobSpec& job) {
  const std::string& name = job.example;
  JobSpec j;
  json extra = json::object();
  if (name == "nagata") {
    j = endo_job(nagata(), "comm", true);
  } else if (name == "nagata-qz") {
    j = endo_job(nagata_over_qz(), "comm", false);
    j.field = "q(z)";
  } else if (name == "anick") {
    j = endo_job(anick(), "free", true);
  } else if (name == "cohn") {
    const Mat2Poly c = cohn_matrix();
    j.vars = c.context()->names();
    j.matrix = c.a00.to_string() + ", " + c.a01.to_string() + "; " + c.a10.to_string() + ", " + c.a11.to_string();
  } else if (name == "sigma-h") {
    if (job.exprs.size() != 1) bad("example sigma-h needs -e H in the variables t, z");
    const FreePoly h = parse_as<FreePoly>(job.exprs[0], tz_context());
    j = endo_job(sigma_h(h), "free", true);
    extra["h"] = h.to_string();
  } else if (name == "omega-m") {
    if (job.m == 0) bad("omega-m needs m >= 1");
    j = endo_job(omega_m(job.m), "free", true);
    extra["m"] = job.m;
  } else if (name == "mennicke") {
    const auto w = mennicke_factorization();
    j = endo_job(w.eval(), "free", true);
    j.word = word_json(w, TermOrder::deglex());
  } else if (name == "nagata-exp") {
    const Derivation d = w_delta(nagata_delta(), nagata_w());
    const ExpResult e = exp_derivation(d, job.cap);
    j.algebra = "comm";
    j.vars = d.ctx->names();
    for (const auto& p : d.images) j.exprs.push_back(p.to_string());
    extra["images"] = endo_json(e.endo, TermOrder::deglex());
    extra["terminated_at"] = e.terminated_at;
  } else {
    bad("unknown example '" + name + "' (nagata, nagata-qz, anick, cohn, sigma-h, omega-m, mennicke, nagata-exp)");
  }
  json out = job_to_json(j);
  out["example"] = name;
  out.update(extra);
  return {0, out};
}

Derivation build_derivation(const JobSpec& job, const Setup& s) {
  if (s.free || s.qz) bad(job.command + " works over Q with commutative variables");
  std::vector<CommPoly> ims;
  for (const auto& e : job.exprs) ims.push_back(parse_as<CommPoly>(e, s.ctx));
  if (ims.size() != s.ctx->arity()) bad("one -e per variable is required for a derivation");
  return Derivation(s.ctx, ims);
}

RunResult exp_derivation_cmd(JobSpec& job) {
  const Setup s = setup(job, job.exprs.size());
  Derivation d = build_derivation(job, s);
  json out;
  if (!job.w.empty()) {
    const CommPoly w = parse_as<CommPoly>(job.w, s.ctx);
    try {
      d = w_delta(d, w);
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
    out["w"] = w.to_string(s.order);
  }
  try {
    const ExpResult r = exp_derivation(d, job.cap);
    out["verdict"] = "terminated";
    out["images"] = endo_json(r.endo, s.order);
    out["terminated_at"] = r.terminated_at;
    out["order"] = s.order.name();
    return {0, out};
  } catch (const NotNilpotentWithinCap& e) {
    out["verdict"] = "inconclusive";
    out["reason"] = e.what();
    out["cap"] = job.cap;
    return {2, out};
  }
}

RunResult smith_check(JobSpec& job) {
  const Setup s = setup(job, job.exprs.size());
  const Derivation d = build_derivation(job, s);
  if (job.w.empty()) bad("smith-check needs --w EXPR");
  const CommPoly w = parse_as<CommPoly>(job.w, s.ctx);
  SmithReport r;
  try {
    r = smith_identity_check(d, w, job.cap);
  } catch (const NotNilpotentWithinCap& e) {
    json out{{"verdict", "inconclusive"}, {"reason", e.what()}};
    return {2, out};
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  json out;
  out["verdict"] = r.holds ? "holds" : "fails";
  out["vars"] = r.extended_ctx->names();
  out["lhs"] = endo_json(r.lhs, s.order);
  out["rhs"] = endo_json(r.rhs, s.order);
  out["reversed_order_holds"] = r.reversed_holds;
  out["order"] = s.order.name();
  return {0, out};
}

void render(std::ostringstream& os, const json& v, const std::string& indent) {
  for (const auto& [k, val] : v.items()) {
    if (val.is_string()) {
      os << indent << k << ": " << val.get<std::string>() << "\n";
    } else if (val.is_array() && std::all_of(val.begin(), val.end(), [](const json& e) { return e.is_string(); })) {
      if (val.empty()) continue;
      os << indent << k << ":\n";
      for (const auto& e : val) os << indent << "  " << e.get<std::string>() << "\n";
    } else if (val.is_object()) {
      os << indent << k << ":\n";
      render(os, val, indent + "  ");
    } else {
      os << indent << k << ": " << val.dump() << "\n";
    }
  }
}

}  // namespace

JobSpec job_from_json(const json& j, JobSpec base) {
  if (!j.is_object()) bad("job must be a JSON object");
  try {
    if (base.command.empty() && j.contains("command")) base.command = j["command"].get<std::string>();
    if (j.contains("algebra")) base.algebra = j["algebra"].get<std::string>();
    if (j.contains("vars")) base.vars = j["vars"].get<std::vector<std::string>>();
    if (j.contains("fix_z")) base.fix_z = j["fix_z"].get<bool>();
    if (j.contains("field")) base.field = j["field"].get<std::string>();
    if (j.contains("exprs")) base.exprs = j["exprs"].get<std::vector<std::string>>();
    if (j.contains("matrix")) {
      const json& m = j["matrix"];
      if (m.is_string()) {
        base.matrix = m.get<std::string>();
      } else {
        std::string text;
        for (size_t r = 0; r < m.size(); ++r) {
          text += r ? "; " : "";
          for (size_t c = 0; c < m[r].size(); ++c) text += (c ? ", " : "") + m[r][c].get<std::string>();
        }
        base.matrix = text;
      }
    }
    if (j.contains("word")) base.word = j["word"];
    if (j.contains("w")) base.w = j["w"].get<std::string>();
  } catch (const json::exception& e) {
    bad(std::string("malformed job: ") + e.what());
  }
  return base;
}

json job_to_json(const JobSpec& job) {
  json j;
  j["schema"] = 1;
  j["algebra"] = job.algebra;
  if (!job.vars.empty()) j["vars"] = job.vars;
  j["fix_z"] = job.fix_z;
  j["field"] = job.field;
  if (!job.exprs.empty()) j["exprs"] = job.exprs;
  if (!job.matrix.empty()) j["matrix"] = job.matrix;
  if (!job.word.is_null()) j["word"] = job.word;
  if (!job.w.empty()) j["w"] = job.w;
  return j;
}

RunResult run(const JobSpec& input) {
  RunResult r;
  JobSpec job = input;
  const std::string& c = job.command;
  if (c == "check-aut") {
    r = check_aut(job);
  } else if (c == "check-coord") {
    r = check_coord(job);
  } else if (c == "check-z-tame") {
    r = check_z_tame(job);
  } else if (c == "check-z-tame-coord") {
    r = check_z_tame_coord(job);
  } else if (c == "check-z-coord") {
    r = check_z_coord(job);
  } else if (c == "ge2") {
    r = ge2(job);
  } else if (c == "jacobian") {
    r = jacobian(job);
  } else if (c == "metabelian") {
    r = metabelian(job);
  } else if (c == "eval-word") {
    r = eval_word(job);
  } else if (c == "example") {
    return example(job);
  } else if (c == "exp-derivation") {
    r = exp_derivation_cmd(job);
  } else if (c == "smith-check") {
    r = smith_check(job);
  } else {
    bad("unknown command '" + c + "'");
  }
  // Echo the job so the output can be piped into another command.
  json out = job_to_json(job);
  out.erase("word");
  out["command"] = c;
  out.update(r.out);
  r.out = out;
  return r;
}

std::string render_text(const json& out) {
  std::ostringstream os;
  render(os, out, "");
  return os.str();
}

}  // namespace autalg
