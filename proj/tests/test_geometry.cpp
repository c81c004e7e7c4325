#include <doctest.h>

#include "affgebra/geometry.hpp"
#include "gen.hpp"

using namespace affgebra;

namespace {

Ctx xt() { return VarContext::make({"x", "t"}); }
Poly P(const Ctx& c, const char* s) { return parse_poly(s, c); }
Multivector dx(const Ctx& c) { return coord_field(c, 0); }
Multivector dt(const Ctx& c) { return coord_field(c, 1); }

int sgn(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("wedge examples") {
  Ctx c = xt();
  Multivector one = mv_scalar(Poly::constant(c, 1));
  Multivector X = P(c, "x*t") * dx(c) + dt(c);
  CHECK(wedge_mv(one, X) == X);
  CHECK(wedge_mv(dx(c), dx(c)).is_zero());
  Multivector w = wedge_mv(P(c, "x") * dx(c), dt(c));
  CHECK(w.get({0, 1}) == P(c, "x"));
  CHECK(w.get({1, 0}) == P(c, "-x"));
  CHECK(wedge_mv(w, dx(c)).is_zero());
}

TEST_CASE("sn bracket examples") {
  Ctx c = xt();
  CHECK(sn_bracket(dx(c), dt(c)).is_zero());
  CHECK(sn_bracket(P(c, "x") * dx(c), dx(c)) == -dx(c));
  Multivector f = mv_scalar(P(c, "x*t"));
  CHECK(sn_bracket(dx(c), f) == mv_scalar(P(c, "t")));
  CHECK(sn_bracket(f, dx(c)) == mv_scalar(P(c, "-t")));
  CHECK(sn_bracket(f, f).degree() == -1);
}

TEST_CASE("lie derivative examples") {
  Ctx c = xt();
  CHECK(lie_derivative(dx(c), coord_differential(c, 0)).is_zero());
  CHECK(lie_derivative(P(c, "x") * dx(c), coord_differential(c, 0)) == coord_differential(c, 0));
  CHECK(lie_derivative(dx(c), P(c, "x") * coord_differential(c, 1)) == coord_differential(c, 1));
  CHECK(lie_derivative(dx(c), form_scalar(P(c, "x^2"))) == form_scalar(P(c, "2*x")));
}

TEST_CASE("gerstenhaber pair examples") {
  Ctx c = xt();
  Multivector one = mv_scalar(Poly::constant(c, 1));
  GerstPair unit(one, mv_zero(c, -1));
  GerstPair A(P(c, "x") * wedge_mv(dx(c), dt(c)), P(c, "t") * dx(c));
  CHECK(gerst_wedge(unit, A) == A);

  GerstPair a(dx(c), one), b(dt(c), one);
  GerstPair w = gerst_wedge(a, b);
  CHECK(w.top == wedge_mv(dx(c), dt(c)));
  CHECK(w.low == dt(c) - dx(c));

  Poly g = P(c, "x^2"), h = P(c, "x*t");
  GerstPair s = gerst_sn(GerstPair(dx(c), mv_scalar(g)), GerstPair(dx(c), mv_scalar(h)));
  CHECK(s.top.is_zero());
  CHECK(s.low == mv_scalar(h.partial("x") - g.partial("x")));

  GerstPair s2 = gerst_sn(GerstPair(dx(c), mv_zero(c, 0)), GerstPair(P(c, "x") * dx(c), mv_zero(c, 0)));
  CHECK(s2.top == dx(c));
  CHECK(s2.low.is_zero());
}

TEST_CASE("gerst_sn of a pair with itself holds the two integrability brackets") {
  Ctx c = VarContext::make({"x", "y", "z"});
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Multivector L = gen::random_mv(rng, c, 2);
    Multivector D = gen::random_mv(rng, c, 1);
    GerstPair s = gerst_sn(GerstPair(L, D), GerstPair(L, D));
    CHECK(s.top == sn_bracket(L, L));
    CHECK(s.low == Rational(2) * sn_bracket(D, L));
  }
}

TEST_CASE("gerst_eval examples") {
  Ctx c = xt();
  Multivector X = P(c, "x") * dx(c) + dt(c);
  Poly f = P(c, "x^2*t");
  GerstPair A(X, mv_scalar(Poly::constant(c, 3)));
  CHECK(gerst_eval(A, {f}) == apply_field(X, f) - Poly::constant(c, 3));
  CHECK(gerst_eval(A, {Poly::constant(c, 5)}) == Poly::constant(c, -3));
  GerstPair B(wedge_mv(dx(c), dt(c)), mv_zero(c, 1));
  CHECK(gerst_eval(B, {P(c, "x"), P(c, "t")}) == Poly::constant(c, 1));
  CHECK_THROWS_AS(gerst_eval(B, {P(c, "x")}), DimensionMismatch);
}

TEST_CASE("pair n = 1 reproduces the bracket of affine derivations") {
  Ctx c = VarContext::make({"x", "y"});
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    Multivector X = gen::random_mv(rng, c, 1), Y = gen::random_mv(rng, c, 1);
    Poly g = random_poly(rng, c, 2, 3), h = random_poly(rng, c, 2, 3);
    GerstPair s = gerst_sn(GerstPair(X, mv_scalar(g)), GerstPair(Y, mv_scalar(h)));
    CHECK(s.top == sn_bracket(X, Y));
    CHECK(s.low == mv_scalar(apply_field(X, h) - apply_field(Y, g)));
  }
}

TEST_CASE("schouten bracket: graded antisymmetry, Jacobi and Leibniz") {
  Ctx c = VarContext::make({"x", "y", "z"});
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int p = int(rng() % 4), q = int(rng() % 4), r = int(rng() % 3);
    Multivector A = gen::random_mv(rng, c, p), B = gen::random_mv(rng, c, q), C = gen::random_mv(rng, c, r);
    CHECK(sn_bracket(A, B) == Rational(-sgn((p - 1) * (q - 1))) * sn_bracket(B, A));
    CHECK(sn_bracket(A, wedge_mv(B, C)) ==
          wedge_mv(sn_bracket(A, B), C) + Rational(sgn((p - 1) * q)) * wedge_mv(B, sn_bracket(A, C)));
    if (p <= 2 && q <= 2) {
      Multivector j = Rational(sgn((p - 1) * (r - 1))) * sn_bracket(A, sn_bracket(B, C)) +
                      Rational(sgn((q - 1) * (p - 1))) * sn_bracket(B, sn_bracket(C, A)) +
                      Rational(sgn((r - 1) * (q - 1))) * sn_bracket(C, sn_bracket(A, B));
      CHECK(j.is_zero());
    }
  }
}

TEST_CASE("lie derivative on forms matches the dual transport") {
  Ctx c = VarContext::make({"x", "y"});
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    Multivector X = gen::random_mv(rng, c, 1), Y = gen::random_mv(rng, c, 1);
    DiffForm mu = gen::random_form(rng, c, 1);
    CHECK(pair(Y, lie_derivative(X, mu)) == apply_field(X, pair(Y, mu)) - pair(sn_bracket(X, Y), mu));
    CHECK(lie_derivative(X, mu) == interior(X, exterior_d(mu)) + exterior_d(interior(X, mu)));
    CHECK(exterior_d(exterior_d(mu)).is_zero());
  }
}

TEST_CASE("printing") {
  Ctx c = xt();
  CHECK(print_multivector(mv_zero(c, 2)) == "0");
  CHECK(print_multivector(P(c, "x") * wedge_mv(dx(c), dt(c))) == "{x,t}: x");
}
