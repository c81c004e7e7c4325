#include "affgebra/geometry.hpp"

#include "affgebra/errors.hpp"

namespace affgebra {

namespace {

int dim_of(const Ctx& ctx) { return int(ctx->size()); }

IndexTuple without(const IndexTuple& t, std::size_t j) {
  IndexTuple out;
  out.reserve(t.size() - 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != j) out.push_back(t[i]);
  }
  return out;
}

IndexTuple concat(const IndexTuple& a, const IndexTuple& b) {
  IndexTuple out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// sum_a (P <- d/dtheta_a) ^ (d/dx^a Q), the right derivative in the odd variables.
void add_sn_half(Multivector& out, const Multivector& P, const Multivector& Q, const Rational& sign) {
  for (const auto& [I, u] : P.components()) {
    const std::size_t k = I.size();
    for (std::size_t j = 0; j < k; ++j) {
      const int a = I[j];
      IndexTuple rest = without(I, j);
      Rational s = ((k - 1 - j) % 2 == 0) ? sign : Rational(-sign);
      for (const auto& [J, v] : Q.components()) {
        Poly dv = v.partial(std::size_t(a));
        if (dv.is_zero()) continue;
        out.add(concat(rest, J), (u * dv) * s);
      }
    }
  }
}

std::string print_skew(const std::map<IndexTuple, Poly>& comps, const Ctx& ctx) {
  if (comps.empty()) return "0";
  std::string out;
  for (const auto& [t, v] : comps) {
    if (!out.empty()) out += "; ";
    out += "{";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ',';
      out += ctx->name(std::size_t(t[i]));
    }
    out += "}: " + print_poly(v);
  }
  return out;
}

template <class T>
T rebase_skew(const T& src, const Ctx& target) {
  T out(target, dim_of(target), src.degree());
  for (const auto& [t, v] : src.components()) {
    IndexTuple mapped;
    for (int i : t) mapped.push_back(int(target->require_index(src.context()->name(std::size_t(i)))));
    out.add(mapped, v.rebase(target));
  }
  return out;
}

}  // namespace

Multivector mv_zero(const Ctx& ctx, int degree) { return Multivector(ctx, dim_of(ctx), degree); }

Multivector mv_scalar(const Poly& f) { return Multivector::scalar(f, dim_of(f.context())); }

Multivector coord_field(const Ctx& ctx, std::size_t var) {
  Multivector X = mv_zero(ctx, 1);
  X.add({int(var)}, Poly::constant(ctx, 1));
  return X;
}

Multivector vector_field(const Ctx& ctx, const std::vector<Poly>& components) {
  if (components.size() > ctx->size()) throw DimensionMismatch("vector_field: too many components");
  Multivector X = mv_zero(ctx, 1);
  for (std::size_t a = 0; a < components.size(); ++a) X.add({int(a)}, components[a]);
  return X;
}

std::vector<Poly> field_components(const Multivector& X) {
  if (X.degree() != 1) throw DimensionMismatch("field_components: not a vector field");
  std::vector<Poly> out;
  for (int a = 0; a < X.dim(); ++a) out.push_back(X.get({a}));
  return out;
}

DiffForm form_zero(const Ctx& ctx, int degree) { return DiffForm(ctx, dim_of(ctx), degree); }

DiffForm form_scalar(const Poly& f) { return DiffForm::scalar(f, dim_of(f.context())); }

DiffForm coord_differential(const Ctx& ctx, std::size_t var) {
  DiffForm w = form_zero(ctx, 1);
  w.add({int(var)}, Poly::constant(ctx, 1));
  return w;
}

Multivector sn_bracket(const Multivector& P, const Multivector& Q) {
  require_same_context(P.context(), Q.context(), "sn_bracket");
  const int p = P.degree();
  const int q = Q.degree();
  Multivector out = mv_zero(P.context(), p + q - 1);
  if (p < 0 || q < 0 || p + q - 1 < 0) return out;
  add_sn_half(out, P, Q, 1);
  const bool even = ((p - 1) * (q - 1)) % 2 == 0;
  add_sn_half(out, Q, P, even ? -1 : 1);
  return out;
}

Poly apply_field(const Multivector& X, const Poly& f) {
  require_same_context(X.context(), f.context(), "apply_field");
  if (X.degree() != 1) throw DimensionMismatch("apply_field: not a vector field");
  Poly out(f.context());
  for (const auto& [t, v] : X.components()) out += v * f.partial(std::size_t(t[0]));
  return out;
}

DiffForm exterior_d(const DiffForm& mu) {
  DiffForm out(mu.context(), mu.dim(), mu.degree() + 1);
  if (mu.degree() < 0) return out;
  for (const auto& [I, u] : mu.components()) {
    for (int a = 0; a < mu.dim(); ++a) {
      Poly du = u.partial(std::size_t(a));
      if (du.is_zero()) continue;
      out.add(concat({a}, I), du);
    }
  }
  return out;
}

DiffForm differential(const Poly& f) { return exterior_d(form_scalar(f)); }

DiffForm interior(const Multivector& X, const DiffForm& mu) {
  require_same_context(X.context(), mu.context(), "interior");
  if (X.degree() != 1) throw DimensionMismatch("interior: not a vector field");
  DiffForm out(mu.context(), mu.dim(), mu.degree() - 1);
  if (mu.degree() <= 0) return out;
  for (const auto& [I, u] : mu.components()) {
    for (std::size_t j = 0; j < I.size(); ++j) {
      Poly xa = X.get({I[j]});
      if (xa.is_zero()) continue;
      Poly term = xa * u;
      out.add(without(I, j), j % 2 == 0 ? term : -term);
    }
  }
  return out;
}

DiffForm lie_derivative(const Multivector& X, const DiffForm& mu) {
  DiffForm out = interior(X, exterior_d(mu));
  if (mu.degree() > 0) out += exterior_d(interior(X, mu));
  return out;
}

Multivector lie_derivative(const Multivector& X, const Multivector& P) {
  if (X.degree() != 1) throw DimensionMismatch("lie_derivative: not a vector field");
  return sn_bracket(X, P);
}

Poly pair(const Multivector& P, const DiffForm& mu) {
  require_same_context(P.context(), mu.context(), "pair");
  if (P.degree() != mu.degree()) throw DimensionMismatch("pair: degree mismatch");
  Poly out(P.context());
  for (const auto& [t, v] : P.components()) {
    auto it = mu.components().find(t);
    if (it != mu.components().end()) out += v * it->second;
  }
  return out;
}

Poly bivector_apply(const Multivector& lambda, const Poly& f, const Poly& g) {
  return pair(lambda, wedge(differential(f), differential(g)));
}

Multivector rebase(const Multivector& P, const Ctx& target) { return rebase_skew(P, target); }
DiffForm rebase(const DiffForm& mu, const Ctx& target) { return rebase_skew(mu, target); }

std::string print_multivector(const Multivector& P) { return print_skew(P.components(), P.context()); }
std::string print_form(const DiffForm& mu) { return print_skew(mu.components(), mu.context()); }

GerstPair::GerstPair(Multivector top_part, Multivector low_part)
    : top(std::move(top_part)), low(std::move(low_part)) {
  require_same_context(top.context(), low.context(), "GerstPair");
  if (low.degree() != top.degree() - 1) throw DimensionMismatch("GerstPair: degrees must differ by one");
}

GerstPair gerst_zero(const Ctx& ctx, int degree) { return {mv_zero(ctx, degree), mv_zero(ctx, degree - 1)}; }

GerstPair gerst_wedge(const GerstPair& A, const GerstPair& B) {
  const int n = A.degree();
  Multivector low = wedge(A.low, B.top);
  Multivector second = wedge(A.top, B.low);
  if (n % 2 == 0) {
    low += second;
  } else {
    low -= second;
  }
  return {wedge(A.top, B.top), low};
}

GerstPair gerst_sn(const GerstPair& A, const GerstPair& B) {
  const int n = A.degree();
  Multivector low = sn_bracket(A.low, B.top);
  Multivector second = sn_bracket(A.top, B.low);
  if ((n - 1) % 2 == 0) {
    low += second;
  } else {
    low -= second;
  }
  return {sn_bracket(A.top, B.top), low};
}

GerstPair operator+(const GerstPair& A, const GerstPair& B) { return {A.top + B.top, A.low + B.low}; }
GerstPair operator-(const GerstPair& A, const GerstPair& B) { return {A.top - B.top, A.low - B.low}; }
GerstPair operator*(const Rational& r, const GerstPair& A) { return {r * A.top, r * A.low}; }

Poly gerst_eval(const GerstPair& A, const std::vector<Poly>& fs) {
  const int n = A.degree();
  if (int(fs.size()) != n) throw DimensionMismatch("gerst_eval: expected " + std::to_string(n) + " arguments");
  const Ctx& ctx = A.top.context();
  auto product = [&](std::size_t skip) {
    DiffForm w = form_scalar(Poly::constant(ctx, 1));
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i != skip) w = wedge(w, differential(fs[i]));
    }
    return w;
  };
  Poly out = pair(A.top, product(fs.size()));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    Poly term = pair(A.low, product(i));
    // 1-based position i+1
    if ((i + 1) % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

}  // namespace affgebra
