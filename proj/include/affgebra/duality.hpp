#pragma once

// Affine / special-vector duality at a single fibre, the one-dimensional
// example with its explicit vector structure, and the correspondence between
// linear sections of a rank-one epimorphism and unit functionals.

#include <cstdint>
#include <optional>
#include <vector>

#include "affgebra/algebroid.hpp"
#include "affgebra/poly.hpp"
#include "affgebra/report.hpp"

namespace affgebra {

// Coordinates of one point of one fibre.
using FibrePoint = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t rational_rank(RationalMatrix m);
// A nonzero vector x with m x = 0, if any. `cols` is needed when m has no rows.
std::optional<FibrePoint> kernel_vector(const RationalMatrix& m, std::size_t cols);
// Some solution of m x = rhs, or nullopt when inconsistent.
std::optional<FibrePoint> solve_linear(const RationalMatrix& m, const FibrePoint& rhs);

Rational dot(const FibrePoint& a, const FibrePoint& b);

// (a, phi, t) standing for the affine function b -> phi(b - a) + t.
struct DualTriple {
  FibrePoint a;
  FibrePoint phi;
  Rational t;
};

// (a', v, s) standing for the element s a' + v of the hull.
struct HullTriple {
  FibrePoint a;
  FibrePoint v;
  Rational s;
};

Rational eta_value(const DualTriple& d, const FibrePoint& b);
bool eta_orbit_equal(const DualTriple& d1, const DualTriple& d2);
// (a + u, phi, t + phi(u))
DualTriple eta_move(const DualTriple& d, const FibrePoint& u);
// (a' - u, v + s u, s)
HullTriple hull_move(const HullTriple& e, const FibrePoint& u);
Rational pairing60(const DualTriple& d, const HullTriple& e);

// Element of the vector dual of a one-dimensional affine space: either the
// function y -> a (y - s) with a != 0, or the constant t.
class ZDualElem {
 public:
  static ZDualElem root(const Rational& s, const Rational& a);  // throws if a == 0
  static ZDualElem constant(const Rational& t);

  bool is_constant() const { return a_ == 0; }
  // s for the root branch, t for the constant branch.
  const Rational& first() const { return first_; }
  const Rational& slope() const { return a_; }
  Rational eval(const Rational& y) const;

  bool operator==(const ZDualElem&) const = default;

 private:
  ZDualElem(Rational first, Rational a) : first_(std::move(first)), a_(std::move(a)) {}
  Rational first_;
  Rational a_;
};

ZDualElem zdual_add(const ZDualElem& u, const ZDualElem& w);
ZDualElem zdual_scale(const Rational& lambda, const ZDualElem& u);

// f(y) = t + s (y - z)
struct ZTriple {
  Rational z;
  Rational s;
  Rational t;
};

Rational ztriple_eval(const ZTriple& f, const Rational& y);
// s t' - s' t + s s' (z - z'); constant in y.
Rational pairing62(const ZTriple& f, const ZTriple& g);

// Wedges of k-tuples drawn from {phi = 1} span the k-th exterior power, and so do
// a ^ v_1 ^ .. ^ v_{k-1} with v_i in ker phi. With fewer than C(dim, k) samples
// the report only carries a note asking for more.
Report lemma1_span_check(int dim, const FibrePoint& phi, int k, int samples, std::uint64_t seed = 1);

// <a, v> = v^T P (1, a) for a in R^n, v in R^{n+1}; unit covector phi0 in V^*
// must satisfy <a, phi0> = 1.
struct BiAffinePairing {
  RationalMatrix P;  // (n+1) x (n+1)
  FibrePoint phi0;   // length n+1
};

Report pairing_iso_check(const BiAffinePairing& pairing);

// An affine function b -> c + lin(b).
struct AffineFunction {
  Rational c;
  FibrePoint lin;
};

// a -> (b_j(a))_j, coordinates of evaluation at a in the dual of span(basis).
FibrePoint to_double_dual(const FibrePoint& a, const std::vector<AffineFunction>& basis);
// Inverse on functionals taking the value 1 on the constant function; throws
// InvalidStructure otherwise.
FibrePoint from_double_dual(const FibrePoint& psi, const std::vector<AffineFunction>& basis);

// E_1 with coordinates (x; y_1..y_n, z), kernel generated by phi = (0, .., 0, 1),
// rho the projection dropping z. A linear section is sigma(y) = (y, f^i y_i).
struct EpiData {
  Ctx base;
  int n = 0;
  Ctx total;  // base, then y1..yn, z (names made fresh against the base)

  static EpiData make(const Ctx& base, int n);
  std::size_t y(int i) const { return base->size() + std::size_t(i); }
  std::size_t z() const { return base->size() + std::size_t(n); }
};

using LinSec = std::vector<Poly>;  // f^1..f^n over the base

Poly linsec_to_fsigma(const EpiData& e, const LinSec& f);
// Coordinates (-f^1, .., -f^n, 1) in E_1^*.
std::vector<Poly> a_sigma(const EpiData& e, const LinSec& f);
// Throws InvalidStructure unless f is fibrewise linear with f(phi) = 1.
LinSec fsigma_to_linsec(const EpiData& e, const Poly& f);
// e - sigma(rho(e)) for the generic point e = (y, z), as E_1 coordinates.
std::vector<Poly> sigma_defect(const EpiData& e, const LinSec& f);

struct Thm16Chain {
  PolyMatrix projector;         // onto the kernel along sigma(E_2), acting on (y, z)
  std::vector<Poly> projector_tensor;  // its z row
  std::vector<Poly> dual_section;      // image of the unit covector of the kernel dual
  PolyMatrix dual_projector;    // I - projector^T on (xi, eta)
  PolyMatrix dual_projector_tensor;    // first n rows of dual_projector
  LinSec sigma_bar;             // f^i
  LinSec lambda_bar;            // projector(y, 0)
};

Thm16Chain thm16_chain(const EpiData& e, const LinSec& f);

}  // namespace affgebra
