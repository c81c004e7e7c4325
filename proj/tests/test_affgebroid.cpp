#include <doctest.h>

#include "affgebra/affgebroid.hpp"
#include "fleet.hpp"
#include "gen.hpp"

using namespace affgebra;
using fleet::P;
using fleet::Ps;

namespace {

AffSection rand_aff(Rng& rng, const AffgebroidData& A) { return {random_section(rng, A.base(), A.rank())}; }
Section rand_vec(Rng& rng, const AffgebroidData& A) { return random_section(rng, A.base(), A.rank()); }

QderCochain random_cochain2(Rng& rng, const AlgebroidData& E) {
  QderCochain mu;
  mu.degree = 2;
  for (const auto& I : increasing_tuples(E.rank, 2)) mu.values.emplace(I, random_section(rng, E.base, E.rank, 2, 1));
  for (const auto& J : increasing_tuples(E.rank, 1)) mu.anchors[J] = random_polys(rng, E.base, E.base->size(), 1, 1);
  return mu;
}

QderCochain random_cochain1(Rng& rng, const AlgebroidData& E) {
  QuasiDer D = QuasiDer::zero(E.base, E.rank);
  for (auto& row : D.matrix) row = random_polys(rng, E.base, std::size_t(E.rank), 2, 1);
  D.anchor = random_polys(rng, E.base, E.base->size(), 1, 1);
  return QderCochain::from_qder(D);
}

bool same_fields(const Report& r) {
  for (const auto& c : r.checks())
    if (c.pass != r.checks().front().pass) return false;
  return true;
}

}  // namespace

TEST_CASE("affine bracket examples") {
  AffgebroidData A = fleet::running_example();
  Ctx b = A.base();
  AffSection a{Section{Ps(b, {"x"})}}, c{Section{Ps(b, {"1"})}};
  CHECK(aff_bracket(A, a, a).is_zero());
  CHECK(aff_bracket(A, a, c) == Section{Ps(b, {"-x"})});
  AffgebroidData T{AlgebroidData::tangent(b), QuasiDer::zero(b, 1)};
  CHECK(aff_bracket(T, a, c) == bracket(T.V, a.vec, c.vec));
  CHECK(aff_anchor(A, a) == vector_field(b, Ps(b, {"1"})));
}

TEST_CASE("affgebroid checks") {
  Ctx b = VarContext::make({"x", "y"});
  AlgebroidData T = AlgebroidData::tangent(b);
  CHECK(check_affgebroid({T, inner_qder(T, Section{Ps(b, {"x*y", "1"})})}).passed());
  CHECK(check_affgebroid({T, QuasiDer::zero(b, 2)}).passed());
  for (const auto& br : fleet::broken()) {
    if (!br.A) continue;
    Report r = check_affgebroid(*br.A);
    REQUIRE_FALSE(r.passed());
    CHECK_FALSE(r.first_failure()->witness.empty());
  }
  for (const auto& n : fleet::valid()) CHECK_MESSAGE(check_affgebroid(n.A, 3, 6).passed(), n.name);
}

TEST_CASE("affine jacobi, skewness and the anchor law on the fleet") {
  Rng rng(13);
  for (const auto& n : fleet::valid()) {
    const AffgebroidData& A = n.A;
    for (int k = 0; k < 4; ++k) {
      AffSection a = rand_aff(rng, A), b = rand_aff(rng, A), c = rand_aff(rng, A);
      Section X = rand_vec(rng, A);
      Poly h = random_poly(rng, A.base(), 2, 2);
      CHECK(aff_bracket(A, a, b) == -aff_bracket(A, b, a));
      CHECK(aff_bracket(A, a, AffSection{b.vec + X}) == aff_bracket(A, a, b) + aff_bracket_mixed(A, a, X));
      Section jac = aff_bracket_mixed(A, a, aff_bracket(A, b, c)) + aff_bracket_mixed(A, b, aff_bracket(A, c, a)) +
                    aff_bracket_mixed(A, c, aff_bracket(A, a, b));
      CHECK(jac.is_zero());
      CHECK(aff_bracket_mixed(A, a, h * X) ==
            h * aff_bracket_mixed(A, a, X) + apply_field(aff_anchor(A, a), h) * X);
    }
  }
}

TEST_CASE("normal form data determine the bracket") {
  Rng rng(14);
  for (const auto& n : fleet::valid()) {
    RestrictResult r = restrict_hull(build_hull(n.A));
    REQUIRE(r.data);
    for (int k = 0; k < 3; ++k) {
      AffSection a = rand_aff(rng, n.A), b = rand_aff(rng, n.A);
      CHECK(aff_bracket(*r.data, a, b) == aff_bracket(n.A, a, b));
    }
  }
}

TEST_CASE("coboundary operator examples") {
  AffgebroidData A = fleet::valid()[2].A;
  const AlgebroidData& E = A.V;
  Section X0{Ps(E.base, {"x^2", "y"})};
  QderCochain d0 = chevalley_d(E, QderCochain::from_section(X0));
  for (int i = 0; i < E.rank; ++i) {
    Section ei = Section::basis(E.base, E.rank, i);
    CHECK(cochain_eval(E, d0, {ei}) == bracket(E, ei, X0));
  }
  CHECK(chevalley_d(E, QderCochain::from_qder(inner_qder(E, X0))).is_zero());

  Ctx b = VarContext::make({"x"});
  AlgebroidData T = AlgebroidData::tangent(b);
  QuasiDer bad = QuasiDer::zero(b, 1);
  bad.matrix[0][0] = P(b, "1");
  QderCochain dbad = chevalley_d(T, QderCochain::from_qder(bad));
  CHECK_FALSE(dbad.is_zero());
  CHECK_FALSE(cochain_eval(T, dbad, {Section::basis(b, 1, 0), Section{Ps(b, {"x"})}}).is_zero());
}

TEST_CASE("coboundary squares to zero for degrees up to two") {
  Rng rng(15);
  for (const auto& n : fleet::valid()) {
    const AlgebroidData& E = n.A.V;
    CHECK(d_squared_zero_qder(E, QderCochain::from_section(rand_vec(rng, n.A))).passed());
    CHECK(d_squared_zero_qder(E, QderCochain::from_qder(n.A.D)).passed());
    CHECK(d_squared_zero_qder(E, random_cochain1(rng, E)).passed());
    if (E.rank >= 2) CHECK(d_squared_zero_qder(E, random_cochain2(rng, E)).passed());
  }
  QderCochain mu3;
  mu3.degree = 3;
  CHECK_THROWS(d_squared_zero_qder(fleet::valid()[4].A.V, mu3));
}

TEST_CASE("coboundary results are quasi-derivations") {
  Rng rng(16);
  for (const auto& n : fleet::valid()) {
    const AlgebroidData& E = n.A.V;
    QderCochain d1 = chevalley_d(E, random_cochain1(rng, E));
    Section X = rand_vec(rng, n.A), Y = rand_vec(rng, n.A);
    Poly f = random_poly(rng, E.base, 2, 2);
    Section lhs = cochain_eval(E, d1, {f * X, Y});
    Section rhs = f * cochain_eval(E, d1, {X, Y});
    Poly shift(E.base);
    for (int j = 0; j < E.rank; ++j) shift += Y.f[std::size_t(j)] * apply_field(vector_field(E.base, d1.anchor(E, {j})), f);
    CHECK(lhs == rhs + shift * X);
  }
}

TEST_CASE("change of reference") {
  Rng rng(17);
  AffgebroidData R = fleet::running_example();
  auto [same, s0] = change_reference(R, Section::zero(R.base(), 1));
  CHECK(same.D == R.D);
  auto [shifted, s1] = change_reference(R, Section::basis(R.base(), 1, 0));
  CHECK(shifted.D.matrix == R.D.matrix);
  for (const auto& n : fleet::valid()) {
    const AffgebroidData& A = n.A;
    Section X0 = rand_vec(rng, A);
    auto [B, shift] = change_reference(A, X0);
    CHECK(shift == X0);
    CHECK(B.D - A.D == inner_qder(A.V, X0));
    CHECK(check_affgebroid(B).passed());
    for (int k = 0; k < 4; ++k) {
      AffSection a = rand_aff(rng, A), b = rand_aff(rng, A);
      CHECK(aff_bracket(B, a, b) == aff_bracket(A, {a.vec + X0}, {b.vec + X0}));
    }
  }
}

TEST_CASE("hull construction") {
  AffgebroidData A = fleet::running_example();
  HullAlgebroid hull = build_hull(A);
  CHECK(hull.model_rank() == 1);
  Ctx b = A.base();
  CHECK(bracket(hull.H, Section::basis(b, 2, 0), Section::basis(b, 2, 1)) == Section::basis(b, 2, 1));
  AffgebroidData Z{AlgebroidData::zero(b, 2), QuasiDer::zero(b, 2)};
  HullAlgebroid hz = build_hull(Z);
  CHECK(hz.H.structure == AlgebroidData::zero(b, 3).structure);
  CHECK(hz.H.anchor == AlgebroidData::zero(b, 3).anchor);

  Rng rng(18);
  for (const auto& n : fleet::valid()) {
    HullAlgebroid h = build_hull(n.A);
    CHECK(check_jacobi(h.H).passed());
    for (int k = 0; k < 3; ++k) {
      AffSection p = rand_aff(rng, n.A), q = rand_aff(rng, n.A);
      CHECK(bracket(h.H, hull_section(p), hull_section(q)) == hull_section(aff_bracket(n.A, p, q), Poly(n.A.base())));
    }
    AlgebroidData copy = AlgebroidData::zero(h.H.base, h.H.rank);
    for (int i = 0; i < h.H.rank; ++i) {
      copy.set_anchor(i, field_components(anchor_field(h.H, Section::basis(h.H.base, h.H.rank, i))));
      for (int j = i + 1; j < h.H.rank; ++j)
        copy.set_bracket(i, j, bracket(h.H, Section::basis(h.H.base, h.H.rank, i), Section::basis(h.H.base, h.H.rank, j)).f);
    }
    CHECK(copy.anchor == h.H.anchor);
    CHECK(copy.structure == h.H.structure);
  }
}

TEST_CASE("restriction of hulls") {
  for (const auto& n : fleet::valid()) {
    RestrictResult r = restrict_hull(build_hull(n.A));
    REQUIRE(r.data);
    CHECK(r.data->D == n.A.D);
    CHECK(r.data->V.anchor == n.A.V.anchor);
    CHECK(r.data->V.structure == n.A.V.structure);
  }
  for (const auto& br : fleet::broken()) {
    if (br.defect != "phi") continue;
    RestrictResult r = restrict_hull(br.hull);
    CHECK_FALSE(r.data);
    CHECK_FALSE(r.witness.empty());
  }
  Ctx b = VarContext::make({"x"});
  RestrictResult ab = restrict_hull({AlgebroidData::zero(b, 3)});
  REQUIRE(ab.data);
  CHECK(ab.data->D == QuasiDer::zero(b, 2));
}

TEST_CASE("the four hull conditions agree") {
  for (const auto& n : fleet::valid()) {
    Report r = check_thm11(build_hull(n.A));
    CHECK(r.checks().size() == 4);
    CHECK_MESSAGE(r.passed(), n.name);
  }
  for (const auto& br : fleet::broken()) {
    if (br.defect != "phi") continue;
    Report r = check_thm11(br.hull);
    CHECK(r.checks().size() == 4);
    CHECK(same_fields(r));
    CHECK_FALSE(r.checks().front().pass);
    for (const auto& c : r.checks()) CHECK_FALSE(c.witness.empty());
  }
  CHECK(check_thm11({AlgebroidData::zero(VarContext::make({"x"}), 2)}).passed());
}

TEST_CASE("affine lift examples") {
  AffgebroidData A = fleet::valid()[2].A;
  Ctx tot = affine_total_context(A);
  CHECK(aff_vertical_lift(Section::basis(A.base(), 2, 0), tot) == coord_field(tot, 2));
  Multivector L = aff_complete_lift(A, reference_section(A), tot);
  auto comps = field_components(L);
  for (std::size_t a = 0; a < A.base()->size(); ++a) CHECK(comps[a] == A.D.anchor[a].rebase(tot));
}

TEST_CASE("lift identities on the affine bundle") {
  Rng rng(19);
  for (const auto& n : fleet::valid()) {
    const AffgebroidData& A = n.A;
    Ctx tot = affine_total_context(A);
    for (int k = 0; k < 2; ++k) {
      AffSection a = rand_aff(rng, A), b = rand_aff(rng, A);
      Section X = rand_vec(rng, A), Y = rand_vec(rng, A);
      Multivector aA = aff_complete_lift(A, a, tot), bA = aff_complete_lift(A, b, tot);
      CHECK(sn_bracket(aA, bA) == aff_complete_lift(A, aff_bracket(A, a, b), tot));
      CHECK(sn_bracket(aff_complete_lift(A, X, tot), aff_complete_lift(A, Y, tot)) ==
            aff_complete_lift(A, bracket(A.V, X, Y), tot));
      CHECK(sn_bracket(aA, aff_vertical_lift(X, tot)) == aff_vertical_lift(aff_bracket_mixed(A, a, X), tot));
      CHECK(sn_bracket(aff_vertical_lift(X, tot), aff_vertical_lift(Y, tot)).is_zero());
    }
  }
}

TEST_CASE("time function check") {
  AffgebroidData M = fleet::valid()[1].A;
  Ctx b = M.base();
  CHECK(check_thm13(M, P(b, "t")).passed());
  Report c = check_thm13(M, P(b, "4"));
  CHECK_FALSE(c.passed());
  Report two = check_thm13(M, P(b, "2*t"));
  REQUIRE_FALSE(two.passed());
  CHECK(two.first_failure()->witness.find('2') != std::string::npos);
  CHECK_THROWS_AS(check_thm13(M, P(b, "t"), std::vector<Poly>{P(b, "0"), P(b, "1")}), InvalidStructure);
}
