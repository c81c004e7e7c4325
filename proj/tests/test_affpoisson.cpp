#include <doctest.h>

#include "affgebra/affpoisson.hpp"
#include "fleet.hpp"
#include "gen.hpp"

using namespace affgebra;
using fleet::P;
using fleet::Ps;

namespace {

Ctx xy() { return VarContext::make({"x", "y"}); }
Multivector dd(const Ctx& c, std::size_t i) { return coord_field(c, i); }

AffDerPair rand_pair(Rng& rng, const Ctx& c) { return {gen::random_mv(rng, c, 1), random_poly(rng, c, 2, 3)}; }
AffDerPair add(const AffDerPair& a, const AffDerPair& b) { return {a.X + b.X, a.g + b.g}; }
AffDerPair sub(const AffDerPair& a, const AffDerPair& b) { return {a.X - b.X, a.g - b.g}; }
bool eq(const AffDerPair& a, const AffDerPair& b) { return a.X == b.X && a.g == b.g; }

// [a, v] for an affine a and a linear v, read off ex2 at any base point b
AffDerPair ex2_mixed(const AffDerPair& a, const AffDerPair& b, const AffDerPair& v) {
  return sub(ex2_bracket(a, add(b, v)), ex2_bracket(a, b));
}

bool fibre_linear(const Poly& v) {
  const Ctx& c = v.context();
  for (const auto& t : v.terms()) {
    unsigned deg = 0;
    for (std::size_t k = c->base_count(); k < c->size(); ++k) deg += t.mono[k];
    if (deg != 1) return false;
  }
  return true;
}

bool verdict(const Report& r, const std::string& id) {
  for (const auto& c : r.checks())
    if (c.id == id) return c.pass;
  FAIL("missing check " << id);
  return false;
}

}  // namespace

TEST_CASE("aff-poisson bracket examples") {
  Ctx c = xy();
  AffPoissonData A{wedge_mv(dd(c, 0), dd(c, 1)), dd(c, 0)};
  CHECK(affpoisson_bracket(A, P(c, "x"), P(c, "y")).is_zero());
  Ctx x = VarContext::make({"x"});
  AffPoissonData B{mv_zero(x, 2), dd(x, 0)};
  CHECK(affpoisson_bracket(B, P(x, "x^2"), P(x, "x^3")) == P(x, "3*x^2 - 2*x"));
  CHECK(affpoisson_bracket(A, P(c, "x*y + 1"), P(c, "x*y + 1")).is_zero());
}

TEST_CASE("aff-poisson checks") {
  Ctx c = xy();
  CHECK(check_affpoisson({wedge_mv(dd(c, 0), dd(c, 1)), dd(c, 0)}).passed());
  Multivector L = P(c, "x") * wedge_mv(dd(c, 0), dd(c, 1));
  CHECK(check_affpoisson({L, dd(c, 1)}).passed());
  Report bad = check_affpoisson({L, dd(c, 0)});
  CHECK_FALSE(verdict(bad, "affpoisson.sn_d_lambda"));
  CHECK_FALSE(verdict(bad, "affpoisson.jacobi"));
  CHECK_FALSE(bad.first_failure()->witness.empty());
  CHECK(check_affpoisson({mv_zero(c, 2), vector_field(c, Ps(c, {"x^2*y", "y - 1"}))}).passed());
}

TEST_CASE("finite jacobi test agrees with the tensor conditions") {
  Ctx c = VarContext::make({"x", "y", "z"});
  Rng rng(40);
  int fails = 0;
  for (int trial = 0; trial < 25; ++trial) {
    AffPoissonData A{gen::random_mv(rng, c, 2, 1), gen::random_mv(rng, c, 1, 1)};
    if (trial % 3 == 0) A.lambda = mv_zero(c, 2);
    Report r = check_affpoisson(A);
    bool tensor = verdict(r, "affpoisson.sn_lambda") && verdict(r, "affpoisson.sn_d_lambda");
    CHECK(tensor == verdict(r, "affpoisson.jacobi"));
    fails += tensor ? 0 : 1;
  }
  CHECK(fails > 0);
}

TEST_CASE("aff-jacobi brackets") {
  Ctx x = VarContext::make({"x"});
  AffJacobiData J{mv_zero(x, 2), dd(x, 0), mv_zero(x, 1), Poly(x)};
  Poly f = P(x, "x^2 + 1"), g = P(x, "x^3");
  CHECK(affjacobi_bracket(J, f, g) == f * g.partial("x") - g * f.partial("x"));
  CHECK(affjacobi_bracket(J, f, f).is_zero());
  CHECK(check_affjacobi(J).passed());

  Ctx c = xy();
  AffPoissonData A{P(c, "x") * wedge_mv(dd(c, 0), dd(c, 1)), dd(c, 1)};
  AffJacobiData R{A.lambda, mv_zero(c, 1), A.D, Poly(c)};
  Rng rng(41);
  for (int k = 0; k < 10; ++k) {
    Poly a = random_poly(rng, c, 3, 3), b = random_poly(rng, c, 3, 3);
    CHECK(affjacobi_bracket(R, a, b) == affpoisson_bracket(A, a, b));
  }
  CHECK(check_affjacobi(R).passed());

  AffJacobiData bad{wedge_mv(dd(c, 0), dd(c, 1)), P(c, "x") * dd(c, 0), mv_zero(c, 1), Poly(c)};
  Report r = check_affjacobi(bad);
  CHECK_FALSE(r.passed());
}

TEST_CASE("affine derivation brackets: examples") {
  Ctx x = VarContext::make({"x"});
  AffDerPair a{dd(x, 0), P(x, "x")}, b{P(x, "x") * dd(x, 0), P(x, "x^2")};
  AffDerPair e1 = ex1_bracket(a, b);
  CHECK(e1.X == dd(x, 0));
  CHECK(e1.g == P(x, "x"));
  AffDerPair e2 = ex2_bracket(a, b);
  CHECK(e2.X == dd(x, 0));
  CHECK(e2.g == P(x, "2*x - x^2"));
  CHECK(ex1_bracket(a, a).X.is_zero());
  CHECK(ex1_bracket(a, a).g.is_zero());
  CHECK(ex2_bracket(b, b).g.is_zero());
  Ctx other = VarContext::make({"y"});
  CHECK_THROWS_AS(ex1_bracket(a, {dd(other, 0), P(other, "y")}), ContextMismatch);
}

TEST_CASE("affine derivation brackets: algebraic laws") {
  Ctx c = xy();
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    AffDerPair a = rand_pair(rng, c), b = rand_pair(rng, c), d = rand_pair(rng, c);
    AffDerPair j = add(add(ex1_bracket(a, ex1_bracket(b, d)), ex1_bracket(b, ex1_bracket(d, a))),
                       ex1_bracket(d, ex1_bracket(a, b)));
    CHECK(j.X.is_zero());
    CHECK(j.g.is_zero());
    Poly f = random_poly(rng, c, 2, 2);
    AffDerPair fb{f * b.X, f * b.g};
    AffDerPair lhs = ex1_bracket(a, fb);
    AffDerPair br = ex1_bracket(a, b);
    Poly af = apply_field(a.X, f);
    CHECK(eq(lhs, {f * br.X + af * b.X, f * br.g + af * b.g}));

    // the linear part of ex2 is ex1
    CHECK(eq(sub(ex2_mixed(a, b, d), ex2_mixed(a, rand_pair(rng, c), d)), {mv_zero(c, 1), Poly(c)}));
    AffDerPair v1 = rand_pair(rng, c), v2 = rand_pair(rng, c);
    AffDerPair lin = add(sub(ex2_bracket(add(a, v1), add(a, v2)), ex2_bracket(a, add(a, v2))), ex2_bracket(a, add(a, v1)));
    CHECK(eq(lin, ex1_bracket(v1, v2)));

    AffDerPair aj = add(add(ex2_mixed(a, a, ex2_bracket(b, d)), ex2_mixed(b, b, ex2_bracket(d, a))),
                        ex2_mixed(d, d, ex2_bracket(a, b)));
    CHECK(aj.X.is_zero());
    CHECK(aj.g.is_zero());
  }
}

TEST_CASE("affine derivation brackets match invariant fields") {
  Ctx base = xy();
  Ctx tot = total_context(base, {"s"});
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    AffDerPair a = rand_pair(rng, base), b = rand_pair(rng, base);
    Multivector m1 = sn_bracket(ex1_model_field(a, tot), ex1_model_field(b, tot));
    CHECK(m1 == ex1_model_field(ex1_bracket(a, b), tot));
    Multivector m2 = sn_bracket(ex2_model_field(a, tot), ex2_model_field(b, tot));
    // the bracket of two affine fields is a vertical-shift field
    CHECK(m2 == ex1_model_field(ex2_bracket(a, b), tot));
    CHECK(eq(ex1_from_model(m2, base), ex2_bracket(a, b)));
    CHECK(eq(ex2_from_model(ex2_model_field(a, tot), base), a));
    CHECK(eq(ex1_from_model(m1, base), ex1_bracket(a, b)));
  }
  Multivector off = P(tot, "s^2") * coord_field(tot, 2);
  CHECK_THROWS_AS(ex1_from_model(off, base), InvalidStructure);
  CHECK_THROWS_AS(ex2_from_model(off, base), InvalidStructure);
}

TEST_CASE("linear aff-poisson structure of an affgebroid") {
  Ctx b = VarContext::make({"x"});
  AffgebroidData Z{AlgebroidData::zero(b, 2), QuasiDer::zero(b, 2)};
  LinearAffPoisson LZ = from_affgebroid(Z);
  CHECK(LZ.P.lambda.is_zero());
  CHECK(LZ.P.D.is_zero());

  AffgebroidData R = fleet::running_example();
  LinearAffPoisson L = from_affgebroid(R, {"xi"});
  const Ctx& T = L.total;
  Poly br = affpoisson_bracket(L.P, P(T, "x*xi"), Poly(T));
  CHECK(br == P(T, "-x*xi - xi"));
  Section s = aff_bracket(R, {Section{Ps(b, {"x"})}}, reference_section(R));
  CHECK(fiber_linear(s.f, T) == br);
}

TEST_CASE("linear sections on the fleet") {
  Rng rng(44);
  for (const auto& n : fleet::valid()) {
    Report r = check_linear_sections(n.A, 5, 10);
    CHECK_MESSAGE(r.passed(), n.name);
    LinearAffPoisson L = from_affgebroid(n.A);
    CHECK(check_affpoisson(L.P).passed());
    AffgebroidData back = to_affgebroid(L, n.A.base());
    CHECK(back.D == n.A.D);
    CHECK(back.V.anchor == n.A.V.anchor);
    CHECK(back.V.structure == n.A.V.structure);
    Section X = random_section(rng, n.A.base(), n.A.rank()), Y = random_section(rng, n.A.base(), n.A.rank());
    Poly v = affpoisson_bracket(L.P, fiber_linear(X.f, L.total), fiber_linear(Y.f, L.total));
    CHECK(fibre_linear(v));
  }
  for (const auto& br : fleet::broken()) {
    if (!br.A) continue;
    CHECK_FALSE(check_affpoisson(from_affgebroid(*br.A).P).passed());
  }
}

TEST_CASE("reductions on the fleet") {
  for (const auto& n : fleet::valid()) CHECK_MESSAGE(check_reductions(n.A, 2, 6).passed(), n.name);
  Ctx b = VarContext::make({"x"});
  CHECK(check_reductions({AlgebroidData::zero(b, 2), QuasiDer::zero(b, 2)}).passed());
  for (const auto& br : fleet::broken()) {
    if (!br.A) continue;
    Report r = check_reductions(*br.A, 2, 4);
    MESSAGE(br.name << " reductions " << (r.passed() ? "pass" : "fail"));
  }
}

TEST_CASE("mechanics") {
  Ctx ph = mechanics_phase_context(1);
  MechanicsDemo free = mechanics_demo(1, P(ph, "1/2*p^2"));
  CHECK(free.lines == std::vector<std::string>{"dt/ds = 1", "dq/ds = p", "dp/ds = 0"});
  CHECK(free.report.passed());
  CHECK(mechanics_demo(1, Poly(ph)).lines == std::vector<std::string>{"dt/ds = 1", "dq/ds = 0", "dp/ds = 0"});
  MechanicsDemo force = mechanics_demo(1, P(ph, "q"));
  CHECK(force.lines[2] == "dp/ds = -1");
  CHECK(force.field == dd(ph, 0) - dd(ph, 2));

  Ctx ph2 = mechanics_phase_context(2);
  MechanicsDemo osc = mechanics_demo(2, P(ph2, "1/2*p1^2 + 1/2*p2^2 + 1/2*q1^2 + t*q2"));
  CHECK(osc.lines == std::vector<std::string>{"dt/ds = 1", "dq1/ds = p1", "dq2/ds = p2", "dp1/ds = -q1", "dp2/ds = -t"});

  Rng rng(45);
  for (int trial = 0; trial < 12; ++trial) {
    int k = 1 + trial % 2;
    Ctx c = mechanics_phase_context(k);
    MechanicsDemo d = mechanics_demo(k, random_poly(rng, c, 3, 4));
    CHECK(field_components(d.field)[0] == Poly::constant(c, 1));
    CHECK(d.report.passed());
  }
}
