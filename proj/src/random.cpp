#include "affgebra/random.hpp"

namespace affgebra {

Rational random_rational(Rng& rng, int range, int max_den) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Poly random_poly(Rng& rng, const Ctx& ctx, int max_degree, int terms, int var_limit) {
  const std::size_t nvars = var_limit < 0 ? ctx->size() : std::min<std::size_t>(ctx->size(), std::size_t(var_limit));
  Poly out(ctx);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int budget = deg(rng);
    if (nvars > 0) {
      std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
      for (int b = 0; b < budget; ++b) {
        std::size_t v = var(rng);
        m.set(v, static_cast<std::uint16_t>(m[v] + 1));
      }
    }
    out += Poly::monomial(ctx, m, random_rational(rng));
  }
  return out;
}

std::vector<Poly> random_polys(Rng& rng, const Ctx& ctx, std::size_t count, int max_degree, int terms) {
  std::vector<Poly> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_poly(rng, ctx, max_degree, terms));
  return out;
}

}  // namespace affgebra
