#include <stdexcept>

#include "affgebra/affgebroid.hpp"
#include "affgebra/errors.hpp"

namespace affgebra {

namespace {

// Calls f(idx) for every idx in [0, rank)^len.
template <class F>
void for_each_index(int rank, std::size_t len, F&& f) {
  IndexTuple idx(len, 0);
  if (len > 0 && rank == 0) return;
  for (;;) {
    f(idx);
    std::size_t k = 0;
    while (k < len && ++idx[k] == rank) idx[k++] = 0;
    if (k == len) return;
  }
}

// Product of the chosen coefficients, or nullopt when one of them is zero.
std::optional<Poly> coefficient(const std::vector<Section>& args, const IndexTuple& idx, const Ctx& base) {
  Poly c = Poly::constant(base, 1);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const Poly& f = args[k].f[std::size_t(idx[k])];
    if (f.is_zero()) return std::nullopt;
    c *= f;
  }
  return c;
}

bool has_repeat(IndexTuple idx) { return normalize_tuple(idx) == 0; }

std::vector<Section> without(const std::vector<Section>& args, std::size_t i, std::size_t j = SIZE_MAX) {
  std::vector<Section> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k != i && k != j) out.push_back(args[k]);
  }
  return out;
}

std::vector<Poly> anchor_eval(const AlgebroidData& E, const QderCochain& mu, const std::vector<Section>& rest) {
  std::vector<Poly> out(E.base->size(), Poly(E.base));
  for_each_index(E.rank, rest.size(), [&](const IndexTuple& idx) {
    if (has_repeat(idx)) return;
    auto c = coefficient(rest, idx, E.base);
    if (!c) return;
    auto hat = mu.anchor(E, idx);
    for (std::size_t a = 0; a < out.size(); ++a) out[a] += *c * hat[a];
  });
  return out;
}

Section coboundary_eval(const AlgebroidData& E, const QderCochain& mu, const std::vector<Section>& args) {
  Section out = Section::zero(E.base, E.rank);
  for (std::size_t i = 0; i < args.size(); ++i) {
    Section t = bracket(E, args[i], cochain_eval(E, mu, without(args, i)));
    if (i % 2 == 0) {
      out += t;
    } else {
      out -= t;
    }
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    for (std::size_t j = i + 1; j < args.size(); ++j) {
      std::vector<Section> rest{bracket(E, args[i], args[j])};
      auto others = without(args, i, j);
      rest.insert(rest.end(), others.begin(), others.end());
      Section t = cochain_eval(E, mu, rest);
      if ((i + j) % 2 == 0) {
        out += t;
      } else {
        out -= t;
      }
    }
  }
  return out;
}

std::vector<Section> basis_args(const AlgebroidData& E, const IndexTuple& I) {
  std::vector<Section> out;
  for (int i : I) out.push_back(Section::basis(E.base, E.rank, i));
  return out;
}

}  // namespace

QderCochain QderCochain::from_section(const Section& X0) {
  QderCochain mu;
  mu.degree = 0;
  mu.values[{}] = X0;
  return mu;
}

QderCochain QderCochain::from_qder(const QuasiDer& D) {
  QderCochain mu;
  mu.degree = 1;
  for (std::size_t i = 0; i < D.matrix.size(); ++i) mu.values[{int(i)}] = Section{D.matrix[i]};
  mu.anchors[{}] = D.anchor;
  return mu;
}

Section QderCochain::value(const AlgebroidData& E, IndexTuple I) const {
  if (int(I.size()) != degree) throw DimensionMismatch("cochain value: wrong arity");
  int s = normalize_tuple(I);
  auto it = values.find(I);
  if (s == 0 || it == values.end()) return Section::zero(E.base, E.rank);
  return s > 0 ? it->second : -it->second;
}

std::vector<Poly> QderCochain::anchor(const AlgebroidData& E, IndexTuple J) const {
  if (int(J.size()) != degree - 1) throw DimensionMismatch("cochain anchor: wrong arity");
  int s = normalize_tuple(J);
  auto it = anchors.find(J);
  std::vector<Poly> out(E.base->size(), Poly(E.base));
  if (s == 0 || it == anchors.end()) return out;
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = s > 0 ? it->second[a] : -it->second[a];
  return out;
}

bool QderCochain::is_zero() const {
  for (const auto& [I, v] : values) {
    if (!v.is_zero()) return false;
  }
  for (const auto& [J, v] : anchors) {
    for (const auto& p : v) {
      if (!p.is_zero()) return false;
    }
  }
  return true;
}

Section cochain_eval(const AlgebroidData& E, const QderCochain& mu, const std::vector<Section>& args) {
  if (int(args.size()) != mu.degree) throw DimensionMismatch("cochain_eval: wrong number of arguments");
  if (mu.degree == 0) return mu.value(E, {});
  Section out = Section::zero(E.base, E.rank);
  for_each_index(E.rank, args.size(), [&](const IndexTuple& idx) {
    if (has_repeat(idx)) return;
    auto c = coefficient(args, idx, E.base);
    if (c) out += *c * mu.value(E, idx);
  });
  for (std::size_t k = 0; k < args.size(); ++k) {
    Multivector hat = vector_field(E.base, anchor_eval(E, mu, without(args, k)));
    if (hat.is_zero()) continue;
    for (int i = 0; i < E.rank; ++i) {
      Poly h = apply_field(hat, args[k].f[std::size_t(i)]);
      if (k % 2 == 0) {
        out.f[std::size_t(i)] += h;
      } else {
        out.f[std::size_t(i)] -= h;
      }
    }
  }
  return out;
}

QderCochain chevalley_d(const AlgebroidData& E, const QderCochain& mu) {
  QderCochain out;
  out.degree = mu.degree + 1;
  for (const auto& I : increasing_tuples(E.rank, out.degree)) {
    Section v = coboundary_eval(E, mu, basis_args(E, I));
    if (!v.is_zero()) out.values[I] = v;
  }
  for (const auto& J : increasing_tuples(E.rank, mu.degree)) {
    std::vector<std::optional<Poly>> hat(E.base->size());
    for (int i1 = 0; i1 < E.rank; ++i1) {
      std::vector<Section> args = basis_args(E, {i1});
      auto rest = basis_args(E, J);
      args.insert(args.end(), rest.begin(), rest.end());
      Section plain = coboundary_eval(E, mu, args);
      for (std::size_t a = 0; a < E.base->size(); ++a) {
        Poly xa = Poly::variable(E.base, a);
        std::vector<Section> scaled = args;
        scaled[0] = xa * scaled[0];
        Section diff = coboundary_eval(E, mu, scaled) - xa * plain;
        for (int k = 0; k < E.rank; ++k) {
          if (k != i1 && !diff.f[std::size_t(k)].is_zero()) {
            throw ExtractionError("anchor extraction: stray component " + E.frame[std::size_t(k)] + " at " +
                                  tuple_string(J) + " with " + E.frame[std::size_t(i1)] + ", " + E.base->name(a));
          }
        }
        const Poly& c = diff.f[std::size_t(i1)];
        if (!hat[a]) {
          hat[a] = c;
        } else if (!(*hat[a] == c)) {
          throw ExtractionError("anchor extraction: inconsistent component " + E.base->name(a) + " at " +
                                tuple_string(J));
        }
      }
    }
    std::vector<Poly> comps;
    bool nonzero = false;
    for (auto& h : hat) {
      comps.push_back(h ? *h : Poly(E.base));
      nonzero = nonzero || !comps.back().is_zero();
    }
    if (nonzero) out.anchors[J] = comps;
  }
  return out;
}

Report d_squared_zero_qder(const AlgebroidData& E, const QderCochain& mu) {
  if (mu.degree > 2) throw std::invalid_argument("d_squared_zero_qder: cochain degree above 2");
  Report r;
  QderCochain dd;
  try {
    dd = chevalley_d(E, chevalley_d(E, mu));
  } catch (const ExtractionError& e) {
    r.fail("qder.d2", e.what());
    return r;
  }
  std::string w;
  for (const auto& [I, v] : dd.values) {
    if (!v.is_zero()) {
      w = tuple_string(I) + ":" + print_section(v, E.frame);
      break;
    }
  }
  r.add("qder.d2.values", w.empty(), w);
  w.clear();
  for (const auto& [J, v] : dd.anchors) {
    w = tuple_string(J) + ":" + print_multivector(vector_field(E.base, v));
    break;
  }
  r.add("qder.d2.anchors", w.empty(), w);
  return r;
}

}  // namespace affgebra
