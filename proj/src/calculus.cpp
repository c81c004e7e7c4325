#include "affgebra/calculus.hpp"

#include <algorithm>

#include "affgebra/errors.hpp"

namespace affgebra {

namespace {

std::vector<Section> basis_args(const AlgebroidData& E, const IndexTuple& I) {
  std::vector<Section> out;
  for (int i : I) out.push_back(Section::basis(E.base, E.rank, i));
  return out;
}

template <class T>
std::vector<T> drop(const std::vector<T>& v, std::size_t i, std::size_t j = SIZE_MAX) {
  std::vector<T> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != i && k != j) out.push_back(v[k]);
  }
  return out;
}

AlgForm covector(const Ctx& base, int dim, int i) {
  AlgForm w(base, dim, 1);
  w.add({i}, Poly::constant(base, 1));
  return w;
}

void add_signed(Poly& acc, const Poly& term, bool negative) {
  if (negative) {
    acc -= term;
  } else {
    acc += term;
  }
}

}  // namespace

AlgForm alg_form_zero(const AlgebroidData& E, int degree) { return AlgForm(E.base, E.rank, degree); }

AlgForm alg_form_scalar(const AlgebroidData& E, const Poly& f) { return AlgForm::scalar(f, E.rank); }

AlgForm frame_covector(const AlgebroidData& E, int i) { return covector(E.base, E.rank, i); }

AlgForm phi_form(const HullAlgebroid& hull) { return frame_covector(hull.H, 0); }

std::string print_alg_form(const AlgForm& mu, const std::vector<std::string>& frame) {
  if (mu.is_zero()) return "0";
  std::string out;
  for (const auto& [t, v] : mu.components()) {
    if (!out.empty()) out += "; ";
    out += "{";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ',';
      out += std::size_t(t[i]) < frame.size() ? frame[std::size_t(t[i])] : std::to_string(t[i]);
    }
    out += "}: " + print_poly(v);
  }
  return out;
}

Poly alg_form_eval(const AlgForm& mu, const std::vector<Section>& args) {
  if (int(args.size()) != mu.degree()) throw DimensionMismatch("alg_form_eval: wrong number of arguments");
  for (const auto& s : args) {
    if (s.rank() != mu.dim()) throw DimensionMismatch("alg_form_eval: section rank mismatch");
  }
  Poly out(mu.context());
  for (const auto& [I, v] : mu.components()) {
    // sum over permutations of I: the determinant of the coefficient minor
    IndexTuple perm = I;
    std::sort(perm.begin(), perm.end());
    do {
      Poly c = v;
      for (std::size_t k = 0; k < perm.size() && !c.is_zero(); ++k) c *= args[k].f[std::size_t(perm[k])];
      if (c.is_zero()) continue;
      IndexTuple t = perm;
      add_signed(out, c, normalize_tuple(t) < 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

AlgForm alg_d(const AlgebroidData& E, const AlgForm& mu) {
  if (mu.dim() != E.rank) throw DimensionMismatch("alg_d: form does not match the algebroid rank");
  const int k = mu.degree();
  AlgForm out = alg_form_zero(E, k + 1);
  for (const auto& I : increasing_tuples(E.rank, k + 1)) {
    auto args = basis_args(E, I);
    Poly v(E.base);
    for (std::size_t i = 0; i < args.size(); ++i) {
      add_signed(v, anchor_apply(E, args[i], alg_form_eval(mu, drop(args, i))), i % 2 == 1);
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      for (std::size_t j = i + 1; j < args.size(); ++j) {
        std::vector<Section> rest{bracket(E, args[i], args[j])};
        auto others = drop(args, i, j);
        rest.insert(rest.end(), others.begin(), others.end());
        add_signed(v, alg_form_eval(mu, rest), (i + j) % 2 == 1);
      }
    }
    if (!v.is_zero()) out.add(I, v);
  }
  return out;
}

Report d_squared_report(const HullAlgebroid& hull) {
  const AlgebroidData& H = hull.H;
  Report r;
  std::string w;
  for (std::size_t a = 0; a < H.base->size() && w.empty(); ++a) {
    AlgForm dd = alg_d(H, alg_d(H, alg_form_scalar(H, Poly::variable(H.base, a))));
    if (!dd.is_zero()) w = "d2(" + H.base->name(a) + ") = " + print_alg_form(dd, H.frame);
  }
  r.add("calculus.d2.coordinates", w.empty(), w);
  w.clear();
  for (int i = 0; i < H.rank && w.empty(); ++i) {
    AlgForm dd = alg_d(H, alg_d(H, frame_covector(H, i)));
    if (!dd.is_zero()) w = "d2(" + H.frame[std::size_t(i)] + "*) = " + print_alg_form(dd, H.frame);
  }
  r.add("calculus.d2.frame", w.empty(), w);
  AlgForm dphi = alg_d(H, phi_form(hull));
  r.add("calculus.dphi", dphi.is_zero(), print_alg_form(dphi, H.frame));
  return r;
}

Poly aff_form_eval(const AlgForm& mu, const std::vector<AffSection>& args) {
  std::vector<Section> hs;
  for (const auto& a : args) hs.push_back(hull_section(a.vec, Poly::constant(mu.context(), 1)));
  return alg_form_eval(mu, hs);
}

AlgForm aff_form_extend(const Ctx& base, int model_rank, int degree, const std::map<IndexTuple, Poly>& values) {
  const int dim = model_rank + 1;
  std::vector<AlgForm> beta;
  beta.push_back(covector(base, dim, 0));
  for (int i = 1; i < dim; ++i) {
    beta.push_back(covector(base, dim, i));
    beta[0] -= beta.back();
  }
  AlgForm out(base, dim, degree);
  for (const auto& [I, v] : values) {
    if (int(I.size()) != degree) throw DimensionMismatch("aff_form_extend: tuple arity does not match degree");
    AlgForm term = AlgForm::scalar(v, dim);
    for (int i : I) {
      if (i < 0 || i >= dim) throw DimensionMismatch("aff_form_extend: index out of range");
      term = wedge(term, beta[std::size_t(i)]);
    }
    out += term;
  }
  return out;
}

AlgForm aff_d(const AffgebroidData& A, const AlgForm& mu) { return alg_d(build_hull(A).H, mu); }

Poly aff_d_literal(const AffgebroidData& A, const AlgForm& mu, const std::vector<AffSection>& args) {
  const int k = mu.degree();
  if (int(args.size()) != k + 1) throw DimensionMismatch("aff_d_literal: expected degree+1 arguments");
  Poly out(A.base());
  for (std::size_t i = 0; i < args.size(); ++i) {
    add_signed(out, apply_field(aff_anchor(A, args[i]), aff_form_eval(mu, drop(args, i))), i % 2 == 1);
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    for (std::size_t j = i + 1; j < args.size(); ++j) {
      Section v = aff_bracket(A, args[i], args[j]);
      auto rest = drop(args, i, j);
      if (i > 0) {
        // alpha_0 is still present: mu(v, alpha_0, ..) = (-1)^(k-1) mu-bar(alpha_0, .., alpha_0 + v)
        rest.push_back(AffSection{args[0].vec + v});
        add_signed(out, aff_form_eval(mu, rest), (k + int(i + j)) % 2 == 0);
      } else if (rest.empty()) {
        Poly t = aff_form_eval(mu, {AffSection{args[0].vec + v}}) - aff_form_eval(mu, {args[0]});
        add_signed(out, t, (i + j) % 2 == 1);
      } else {
        // mu(v, a_1..a_r) = (-1)^r mu-bar(a_1, .., a_r, a_1 + v)
        const std::size_t r = rest.size();
        rest.push_back(AffSection{rest[0].vec + v});
        add_signed(out, aff_form_eval(mu, rest), (i + j + r) % 2 == 1);
      }
    }
  }
  return out;
}

AlgForm reduce_mod_phi(const AlgForm& mu) {
  if (mu.dim() < 1) throw DimensionMismatch("reduce_mod_phi: form has no phi slot");
  AlgForm out(mu.context(), mu.dim() - 1, mu.degree());
  for (const auto& [I, v] : mu.components()) {
    if (!I.empty() && I[0] == 0) continue;
    IndexTuple shifted;
    for (int i : I) shifted.push_back(i - 1);
    out.add(shifted, v);
  }
  return out;
}

}  // namespace affgebra
