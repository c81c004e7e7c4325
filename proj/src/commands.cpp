#include "affgebra/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "affgebra/affpoisson.hpp"
#include "affgebra/calculus.hpp"

namespace affgebra {

namespace {

struct Output {
  std::vector<std::string> lines;
  Report report;
};

std::string join_polys(const std::vector<Poly>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += print_poly(ps[i]);
  }
  return out;
}

void split_lines(const std::string& text, std::vector<std::string>& out) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
}

AffgebroidData need_affgebroid(const SpecFile& spec) {
  if (!spec.has_affgebroid()) throw CommandError("this command needs bundle and qder blocks");
  return spec.affgebroid();
}

// The hull of the declared affgebroid, or the declared bundle itself read as a
// hull whose first frame element is the reference section.
HullAlgebroid need_hull(const SpecFile& spec) {
  if (spec.has_affgebroid()) return build_hull(spec.affgebroid());
  if (!spec.bundle || spec.bundle->rank < 1) throw CommandError("this command needs a bundle block of rank >= 1");
  return {*spec.bundle};
}

const std::vector<std::pair<std::string, Section>>& need_sections(const SpecFile& spec, std::size_t count) {
  if (spec.sections.size() < count) {
    throw CommandError("this command needs at least " + std::to_string(count) + " section entries");
  }
  return spec.sections;
}

std::string print_aff_spec(const AffgebroidData& A) {
  std::string out = print_algebroid_spec(A.V);
  for (int i = 0; i < A.rank(); ++i) {
    out += "qder.matrix." + A.V.frame[std::size_t(i)] + ": " + join_polys(A.D.matrix[std::size_t(i)]) + "\n";
  }
  out += "qder.anchor: " + join_polys(A.D.anchor) + "\n";
  return out;
}

Output cmd_verify(const SpecFile& spec, const CommandOptions& opt) {
  Output o;
  if (spec.has_affgebroid()) {
    AffgebroidData A = spec.affgebroid();
    o.report.append(check_affgebroid(A, opt.seed, opt.samples));
    o.report.append(d_squared_zero_qder(A.V, QderCochain::from_qder(A.D)));
  } else if (spec.bundle) {
    o.report.append(check_jacobi(*spec.bundle));
  }
  if (spec.poisson) o.report.append(check_affpoisson(*spec.poisson));
  return o;
}

Output cmd_bracket(const SpecFile& spec, const CommandOptions&) {
  if (!spec.bundle) throw CommandError("this command needs a bundle block");
  const auto& secs = need_sections(spec, 2);
  Output o;
  for (std::size_t i = 0; i < secs.size(); ++i) {
    for (std::size_t j = i + 1; j < secs.size(); ++j) {
      Section b = bracket(*spec.bundle, secs[i].second, secs[j].second);
      o.lines.push_back("[" + secs[i].first + "," + secs[j].first + "] = " + print_section(b, spec.bundle->frame));
    }
  }
  return o;
}

Output cmd_affbracket(const SpecFile& spec, const CommandOptions&) {
  AffgebroidData A = need_affgebroid(spec);
  const auto& secs = need_sections(spec, 1);
  Output o;
  for (const auto& [name, s] : secs) o.lines.push_back("anchor(" + name + ") = " + print_multivector(aff_anchor(A, {s})));
  for (std::size_t i = 0; i < secs.size(); ++i) {
    for (std::size_t j = i + 1; j < secs.size(); ++j) {
      Section b = aff_bracket(A, {secs[i].second}, {secs[j].second});
      o.lines.push_back("[" + secs[i].first + "," + secs[j].first + "] = " + print_section(b, A.V.frame));
    }
  }
  return o;
}

Output cmd_hull(const SpecFile& spec, const CommandOptions&) {
  HullAlgebroid hull = build_hull(need_affgebroid(spec));
  Output o;
  split_lines(print_algebroid_spec(hull.H), o.lines);
  o.report.append(check_jacobi(hull.H));
  return o;
}

Output cmd_restrict(const SpecFile& spec, const CommandOptions&) {
  HullAlgebroid hull = need_hull(spec);
  Output o;
  RestrictResult res = restrict_hull(hull);
  o.report.add("restrict.closure", res.data.has_value(), res.witness);
  if (res.data) {
    split_lines(print_aff_spec(*res.data), o.lines);
    if (spec.has_affgebroid()) {
      AffgebroidData A = spec.affgebroid();
      bool same = res.data->D == A.D && res.data->V.anchor == A.V.anchor && res.data->V.structure == A.V.structure;
      o.report.add("restrict.roundtrip", same, same ? "" : "restricted data differs from the input");
    }
  }
  return o;
}

Output cmd_d(const SpecFile& spec, const CommandOptions&) {
  HullAlgebroid hull = need_hull(spec);
  Output o;
  for (const auto& [k, mu] : spec.resolve_forms(hull.H.base, hull.H.frame)) {
    o.lines.push_back("form." + std::to_string(k) + " = " + print_alg_form(mu, hull.H.frame));
    o.lines.push_back("d form." + std::to_string(k) + " = " + print_alg_form(alg_d(hull.H, mu), hull.H.frame));
  }
  o.report.append(d_squared_report(hull));
  return o;
}

Output cmd_lift(const SpecFile& spec, const CommandOptions&) {
  AffgebroidData A = need_affgebroid(spec);
  const auto& secs = need_sections(spec, 1);
  Ctx total = affine_total_context(A);
  Output o;
  for (const auto& [name, s] : secs) {
    o.lines.push_back("complete(" + name + ") = " + print_multivector(aff_complete_lift(A, AffSection{s}, total)));
    o.lines.push_back("vertical(" + name + ") = " + print_multivector(aff_vertical_lift(s, total)));
  }
  return o;
}

Output cmd_dualize(const SpecFile& spec, const CommandOptions& opt) {
  AffgebroidData A = need_affgebroid(spec);
  LinearAffPoisson L = from_affgebroid(A);
  Output o;
  o.lines.push_back("lambda = " + print_multivector(L.P.lambda));
  o.lines.push_back("dbar = " + print_multivector(L.P.D));
  o.report.append(check_linear_sections(A, opt.seed, 5 * opt.samples));
  return o;
}

Output cmd_affpoisson(const SpecFile& spec, const CommandOptions&) {
  Output o;
  if (spec.poisson) {
    o.report.append(check_affpoisson(*spec.poisson));
  } else {
    LinearAffPoisson L = from_affgebroid(need_affgebroid(spec));
    o.lines.push_back("lambda = " + print_multivector(L.P.lambda));
    o.lines.push_back("dbar = " + print_multivector(L.P.D));
    o.report.append(check_affpoisson(L.P));
  }
  return o;
}

Output cmd_reductions(const SpecFile& spec, const CommandOptions& opt) {
  Output o;
  o.report.append(check_reductions(need_affgebroid(spec), opt.seed, 2 * opt.samples));
  return o;
}

Output cmd_mechdemo(const SpecFile& spec, const CommandOptions&) {
  if (!spec.mech_dim || !spec.mech_H) throw CommandError("this command needs mech.dim and mech.H");
  MechanicsDemo demo = mechanics_demo(*spec.mech_dim, *spec.mech_H);
  return {demo.lines, demo.report};
}

Output cmd_thm11(const SpecFile& spec, const CommandOptions&) {
  Output o;
  o.report.append(check_thm11(need_hull(spec)));
  return o;
}

Output cmd_thm13(const SpecFile& spec, const CommandOptions&) {
  AffgebroidData A = need_affgebroid(spec);
  if (!spec.time) throw CommandError("this command needs a time entry");
  Output o;
  o.report.append(check_thm13(A, *spec.time));
  return o;
}

using Handler = std::function<Output(const SpecFile&, const CommandOptions&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"verify", cmd_verify},   {"bracket", cmd_bracket},       {"affbracket", cmd_affbracket},
      {"hull", cmd_hull},       {"restrict", cmd_restrict},     {"d", cmd_d},
      {"lift", cmd_lift},       {"dualize", cmd_dualize},       {"affpoisson", cmd_affpoisson},
      {"reductions", cmd_reductions}, {"mechdemo", cmd_mechdemo}, {"thm11", cmd_thm11},
      {"thm13", cmd_thm13}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

std::string print_algebroid_spec(const AlgebroidData& E) {
  std::string out = "bundle.rank: " + std::to_string(E.rank) + "\n";
  out += "bundle.frame:";
  for (const auto& f : E.frame) out += " " + f;
  out += "\n";
  for (int i = 0; i < E.rank; ++i) out += "anchor." + E.frame[std::size_t(i)] + ": " + join_polys(E.anchor[std::size_t(i)]) + "\n";
  for (int i = 0; i < E.rank; ++i) {
    for (int j = i + 1; j < E.rank; ++j) {
      const auto& c = E.structure[std::size_t(i)][std::size_t(j)];
      if (std::all_of(c.begin(), c.end(), [](const Poly& p) { return p.is_zero(); })) continue;
      out += "struct." + E.frame[std::size_t(i)] + "." + E.frame[std::size_t(j)] + ": " + join_polys(c) + "\n";
    }
  }
  return out;
}

CommandResult run_command(const std::string& cmd, const SpecFile& spec, const CommandOptions& options) {
  const auto& table = handlers();
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == cmd; });
  if (it == table.end()) throw CommandError("unknown command '" + cmd + "'");
  Output o = it->second(spec, options);
  CommandResult res;
  res.output = "# " + cmd + "\n";
  for (const auto& l : o.lines) res.output += l + "\n";
  res.output += o.report.render();
  res.exit_code = o.report.passed() ? 0 : 1;
  return res;
}

}  // namespace affgebra
