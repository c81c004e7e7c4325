#include <doctest.h>

#include "affgebra/calculus.hpp"
#include "fleet.hpp"
#include "gen.hpp"

using namespace affgebra;
using fleet::P;
using fleet::Ps;

namespace {

AlgForm rand_form(Rng& rng, const AlgebroidData& E, int degree) {
  return gen::random_skew<AlgForm>(rng, E.base, E.rank, degree, 2, 2);
}

AlgebroidData reduced_model(const HullAlgebroid& h) {
  RestrictResult r = restrict_hull(h);
  REQUIRE(r.data);
  return r.data->V;
}

bool verdict(const Report& r, const std::string& id) {
  for (const auto& c : r.checks())
    if (c.id == id) return c.pass;
  return false;
}

std::vector<HullAlgebroid> all_hulls() {
  std::vector<HullAlgebroid> out;
  for (const auto& n : fleet::valid()) out.push_back(build_hull(n.A));
  for (const auto& b : fleet::broken()) out.push_back(b.hull);
  return out;
}

}  // namespace

TEST_CASE("cartan differential examples") {
  Ctx b = VarContext::make({"x"});
  AffgebroidData T{AlgebroidData::tangent(b), QuasiDer::zero(b, 1)};
  HullAlgebroid h = build_hull(T);
  CHECK(alg_d(h, alg_form_scalar(h.H, P(b, "5"))).is_zero());
  AlgForm dx = alg_d(h, alg_form_scalar(h.H, P(b, "x")));
  CHECK(dx.get({0}).is_zero());
  CHECK(dx.get({1}) == P(b, "1"));
  for (const auto& n : fleet::valid()) CHECK(alg_d(build_hull(n.A), phi_form(build_hull(n.A))).is_zero());
}

TEST_CASE("d squared report") {
  Ctx b = VarContext::make({"x"});
  CHECK(d_squared_report({AlgebroidData::zero(b, 3)}).passed());
  for (const auto& h : all_hulls()) {
    Report r = d_squared_report(h);
    bool expected = check_jacobi(h.H).passed() && alg_d(h, phi_form(h)).is_zero();
    bool d2 = verdict(r, "calculus.d2.coordinates") && verdict(r, "calculus.d2.frame");
    CHECK(d2 == check_jacobi(h.H).passed());
    CHECK(r.passed() == expected);
    if (!r.passed()) CHECK_FALSE(r.first_failure()->witness.empty());
  }
}

TEST_CASE("evaluation on affine sections") {
  Rng rng(50);
  AffgebroidData A = fleet::valid()[3].A;
  HullAlgebroid h = build_hull(A);
  for (int k = 0; k < 5; ++k) {
    AffSection a{random_section(rng, A.base(), A.rank())}, c{random_section(rng, A.base(), A.rank())};
    CHECK(aff_form_eval(phi_form(h), {a}) == Poly::constant(A.base(), 1));
    CHECK(aff_form_eval(frame_covector(h.H, 1), {a}) == a.vec.f[0]);
    AlgForm mu = rand_form(rng, h.H, 2);
    CHECK(aff_form_eval(mu, {a, c}) == -aff_form_eval(mu, {c, a}));
    CHECK(aff_form_eval(mu, {a, a}).is_zero());
  }
}

TEST_CASE("extension from frame values") {
  Ctx b = VarContext::make({"x", "y"});
  CHECK(aff_form_extend(b, 2, 1, {}).is_zero());
  std::map<IndexTuple, Poly> ones;
  for (int i = 0; i <= 2; ++i) ones.emplace(IndexTuple{i}, Poly::constant(b, 1));
  HullAlgebroid h = build_hull({AlgebroidData::zero(b, 2), QuasiDer::zero(b, 2)});
  CHECK(aff_form_extend(b, 2, 1, ones) == phi_form(h));

  Rng rng(51);
  for (const auto& n : fleet::valid()) {
    HullAlgebroid hh = build_hull(n.A);
    const int r = n.A.rank();
    for (int k = 0; k <= std::min(3, r + 1); ++k) {
      AlgForm mu = rand_form(rng, hh.H, k);
      std::map<IndexTuple, Poly> vals;
      for (const auto& I : increasing_tuples(r + 1, k)) {
        std::vector<AffSection> args;
        for (int i : I) args.push_back(frame_aff_section(n.A, i));
        vals.emplace(I, aff_form_eval(mu, args));
      }
      AlgForm back = aff_form_extend(n.A.base(), r, k, vals);
      CHECK(back == mu);
      for (const auto& [I, v] : vals) {
        std::vector<AffSection> args;
        for (int i : I) args.push_back(frame_aff_section(n.A, i));
        CHECK(aff_form_eval(back, args) == v);
      }
    }
  }
}

TEST_CASE("affine differential") {
  Rng rng(52);
  for (const auto& n : fleet::valid()) {
    const AffgebroidData& A = n.A;
    HullAlgebroid h = build_hull(A);
    CHECK(aff_d(A, phi_form(h)).is_zero());
    Poly f = random_poly(rng, A.base(), 3, 3);
    AffSection a{random_section(rng, A.base(), A.rank())};
    CHECK(aff_form_eval(aff_d(A, alg_form_scalar(h.H, f)), {a}) == apply_field(aff_anchor(A, a), f));
    for (int k = 0; k <= 2; ++k) {
      AlgForm mu = rand_form(rng, h.H, k);
      CHECK(aff_d(A, mu) == alg_d(h, mu));
      std::vector<AffSection> args;
      for (int i = 0; i <= k; ++i) args.push_back({random_section(rng, A.base(), A.rank())});
      CHECK_MESSAGE(aff_form_eval(aff_d(A, mu), args) == aff_d_literal(A, mu, args), n.name, " degree ", k);
    }
  }
}

TEST_CASE("graded derivation of the wedge product") {
  Rng rng(53);
  for (const auto& n : fleet::valid()) {
    HullAlgebroid h = build_hull(n.A);
    if (h.H.rank > 3) continue;
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q + p <= 2; ++q) {
        AlgForm mu = rand_form(rng, h.H, p), nu = rand_form(rng, h.H, q);
        AlgForm rhs = wedge_alg(alg_d(h, mu), nu) + (p % 2 ? Rational(-1) : Rational(1)) * wedge_alg(mu, alg_d(h, nu));
        CHECK(alg_d(h, wedge_alg(mu, nu)) == rhs);
      }
    }
  }
}

TEST_CASE("quotient by phi") {
  Ctx b = VarContext::make({"x"});
  HullAlgebroid h = build_hull(fleet::running_example());
  CHECK(reduce_mod_phi(phi_form(h)).is_zero());
  AlgForm e1 = frame_covector(h.H, 1);
  AlgForm red = reduce_mod_phi(e1);
  CHECK(red.dim() == 1);
  CHECK(red.get({0}) == Poly::constant(b, 1));

  Rng rng(54);
  for (const auto& n : fleet::valid()) {
    HullAlgebroid hh = build_hull(n.A);
    AlgebroidData V = reduced_model(hh);
    for (int k = 0; k <= 2; ++k) {
      AlgForm mu = rand_form(rng, hh.H, k);
      CHECK(reduce_mod_phi(alg_d(hh, mu)) == alg_d(V, reduce_mod_phi(mu)));
    }
  }
}

TEST_CASE("printing forms") {
  HullAlgebroid h = build_hull(fleet::running_example());
  CHECK(print_alg_form(phi_form(h), h.H.frame) == "{a0}: 1");
  CHECK(print_alg_form(alg_form_zero(h.H, 2), h.H.frame) == "0");
}
