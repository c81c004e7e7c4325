#pragma once

// Seeded generators for randomized cross-checks.

#include <random>
#include <vector>

#include "affgebra/poly.hpp"

namespace affgebra {

using Rng = std::mt19937_64;

// Small rational in [-range, range] with denominator in 1..max_den.
Rational random_rational(Rng& rng, int range = 3, int max_den = 2);

// Up to `terms` random monomials of total degree <= max_degree, restricted to
// the first `var_limit` variables of ctx (all of them when var_limit < 0).
Poly random_poly(Rng& rng, const Ctx& ctx, int max_degree, int terms, int var_limit = -1);

std::vector<Poly> random_polys(Rng& rng, const Ctx& ctx, std::size_t count, int max_degree, int terms);

}  // namespace affgebra
