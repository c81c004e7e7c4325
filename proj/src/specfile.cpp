#include "affgebra/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "affgebra/errors.hpp"

namespace affgebra {

namespace {

struct Entry {
  std::string key;
  std::string value;
  std::size_t line;
  std::size_t key_col;
  std::size_t value_col;
  bool used = false;
};

struct Item {
  std::string text;
  std::size_t col;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : key) {
    if (c == '.') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Splits on `sep`, trimming each piece and keeping its 1-based column.
std::vector<Item> split_items(const std::string& text, std::size_t col, char sep) {
  std::vector<Item> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      std::size_t b = start, e = i;
      while (b < e && is_space(text[b])) ++b;
      while (e > b && is_space(text[e - 1])) --e;
      out.push_back({text.substr(b, e - b), col + b});
      start = i + 1;
    }
  }
  return out;
}

std::vector<Item> split_words(const std::string& text, std::size_t col) {
  std::vector<Item> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t b = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > b) out.push_back({text.substr(b, i - b), col + b});
  }
  return out;
}

class Builder {
 public:
  explicit Builder(const std::string& text) { read(text); }

  SpecFile build() {
    build_base();
    build_bundle();
    build_anchor_and_struct();
    build_qder();
    build_poisson();
    build_rest();
    for (const auto& e : entries_) {
      if (!e.used) throw SpecError("unknown key '" + e.key + "'", e.line, e.key_col);
    }
    return std::move(spec_);
  }

 private:
  void read(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    std::set<std::string> seen;
    while (std::getline(in, raw)) {
      ++lineno;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::string line = raw.substr(0, raw.find('#'));
      std::size_t b = 0;
      while (b < line.size() && is_space(line[b])) ++b;
      if (b == line.size()) continue;
      std::size_t colon = line.find(':', b);
      if (colon == std::string::npos) throw SpecError("expected 'key: value'", lineno, b + 1);
      std::size_t ke = colon;
      while (ke > b && is_space(line[ke - 1])) --ke;
      Entry e{line.substr(b, ke - b), {}, lineno, b + 1, 0};
      if (e.key.empty()) throw SpecError("empty key", lineno, b + 1);
      std::size_t vb = colon + 1;
      while (vb < line.size() && is_space(line[vb])) ++vb;
      std::size_t ve = line.size();
      while (ve > vb && is_space(line[ve - 1])) --ve;
      e.value = line.substr(vb, ve - vb);
      e.value_col = vb + 1;
      if (!seen.insert(e.key).second) throw SpecError("duplicate key '" + e.key + "'", lineno, b + 1);
      entries_.push_back(std::move(e));
    }
  }

  Entry* find(const std::string& key) {
    for (auto& e : entries_) {
      if (e.key == key) {
        e.used = true;
        return &e;
      }
    }
    return nullptr;
  }

  // Entries whose first key segment is `head`, in file order.
  std::vector<Entry*> with_head(const std::string& head) {
    std::vector<Entry*> out;
    for (auto& e : entries_) {
      if (split_key(e.key)[0] == head) {
        e.used = true;
        out.push_back(&e);
      }
    }
    return out;
  }

  static int parse_nat(const std::string& text, std::size_t line, std::size_t col) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v < 0) {
      throw SpecError("expected a natural number, got '" + text + "'", line, col);
    }
    return v;
  }

  static Poly parse_at(const Item& item, const Ctx& ctx, std::size_t line) {
    if (item.text.empty()) throw SpecError("missing polynomial", line, item.col);
    try {
      return parse_poly(item.text, ctx);
    } catch (const ParseError& e) {
      throw SpecError(e.message(), line, item.col + e.offset());
    } catch (const UnknownVariable& e) {
      throw SpecError(e.what(), line, item.col);
    }
  }

  static std::vector<Poly> poly_list(const Entry& e, const Ctx& ctx, std::size_t expected) {
    auto items = split_items(e.value, e.value_col, ',');
    if (items.size() != expected) {
      throw SpecError("expected " + std::to_string(expected) + " components, got " + std::to_string(items.size()),
                      e.line, e.value_col);
    }
    std::vector<Poly> out;
    for (const auto& it : items) out.push_back(parse_at(it, ctx, e.line));
    return out;
  }

  int frame_index(const std::string& name, const Entry& e) const {
    const auto& frame = spec_.bundle->frame;
    for (std::size_t i = 0; i < frame.size(); ++i) {
      if (frame[i] == name) return int(i);
    }
    throw SpecError("undeclared frame element '" + name + "'", e.line, e.key_col);
  }

  void require_bundle(const Entry& e) const {
    if (!spec_.bundle) throw SpecError("'" + e.key + "' needs bundle.rank", e.line, e.key_col);
  }

  void require_parts(const Entry& e, std::size_t n) const {
    if (split_key(e.key).size() != n) throw SpecError("malformed key '" + e.key + "'", e.line, e.key_col);
  }

  void build_base() {
    Entry* dim = find("base.dim");
    if (!dim) throw SpecError("missing base.dim", 1, 1);
    int m = parse_nat(dim->value, dim->line, dim->value_col);
    std::vector<std::string> names;
    if (Entry* coords = find("base.coords")) {
      std::set<std::string> seen;
      for (const auto& w : split_words(coords->value, coords->value_col)) {
        if (!is_identifier(w.text)) throw SpecError("bad coordinate name '" + w.text + "'", coords->line, w.col);
        if (!seen.insert(w.text).second) throw SpecError("repeated coordinate '" + w.text + "'", coords->line, w.col);
        names.push_back(w.text);
      }
      if (int(names.size()) != m) {
        throw SpecError("base.coords lists " + std::to_string(names.size()) + " names for base.dim " +
                            std::to_string(m),
                        coords->line, coords->value_col);
      }
    } else if (m > 0) {
      throw SpecError("missing base.coords", dim->line, dim->key_col);
    }
    if (names.size() > kMaxVars) throw SpecError("too many coordinates", dim->line, dim->value_col);
    spec_.base = VarContext::make(names);
  }

  void build_bundle() {
    Entry* rank = find("bundle.rank");
    Entry* frame = find("bundle.frame");
    if (!rank) {
      if (frame) throw SpecError("bundle.frame without bundle.rank", frame->line, frame->key_col);
      return;
    }
    int n = parse_nat(rank->value, rank->line, rank->value_col);
    AlgebroidData E = AlgebroidData::zero(spec_.base, n);
    if (frame) {
      E.frame.clear();
      std::set<std::string> seen;
      for (const auto& w : split_words(frame->value, frame->value_col)) {
        if (!is_identifier(w.text)) throw SpecError("bad frame name '" + w.text + "'", frame->line, w.col);
        if (!seen.insert(w.text).second) throw SpecError("repeated frame name '" + w.text + "'", frame->line, w.col);
        E.frame.push_back(w.text);
      }
      if (int(E.frame.size()) != n) {
        throw SpecError("bundle.frame lists " + std::to_string(E.frame.size()) + " names for bundle.rank " +
                            std::to_string(n),
                        frame->line, frame->value_col);
      }
    }
    spec_.bundle = std::move(E);
  }

  void build_anchor_and_struct() {
    for (Entry* e : with_head("anchor")) {
      require_bundle(*e);
      require_parts(*e, 2);
      int i = frame_index(split_key(e->key)[1], *e);
      spec_.bundle->set_anchor(i, poly_list(*e, spec_.base, spec_.base->size()));
    }
    std::map<std::pair<int, int>, std::vector<Poly>> given;
    for (Entry* e : with_head("struct")) {
      require_bundle(*e);
      require_parts(*e, 3);
      auto parts = split_key(e->key);
      int i = frame_index(parts[1], *e), j = frame_index(parts[2], *e);
      auto value = poly_list(*e, spec_.base, std::size_t(spec_.bundle->rank));
      if (i == j) {
        for (const auto& p : value) {
          if (!p.is_zero()) throw SpecError("bracket of a frame element with itself must vanish", e->line, e->key_col);
        }
        continue;
      }
      auto partner = given.find({j, i});
      if (partner != given.end()) {
        for (std::size_t k = 0; k < value.size(); ++k) {
          if (!(value[k] == -partner->second[k])) {
            throw SpecError("structure functions are not skew: " + e->key + " against " + parts[2] + "." + parts[1],
                            e->line, e->key_col);
          }
        }
      }
      given[{i, j}] = value;
      spec_.bundle->set_bracket(i, j, value);
    }
  }

  void build_qder() {
    auto entries = with_head("qder");
    if (entries.empty()) return;
    for (Entry* e : entries) require_bundle(*e);
    const auto& E = *spec_.bundle;
    QuasiDer D = QuasiDer::zero(spec_.base, E.rank);
    for (Entry* e : entries) {
      auto parts = split_key(e->key);
      if (parts.size() == 2 && parts[1] == "anchor") {
        D.anchor = poly_list(*e, spec_.base, spec_.base->size());
      } else if (parts.size() == 3 && parts[1] == "matrix") {
        D.matrix[std::size_t(frame_index(parts[2], *e))] = poly_list(*e, spec_.base, std::size_t(E.rank));
      } else {
        throw SpecError("malformed key '" + e->key + "'", e->line, e->key_col);
      }
    }
    spec_.qder = std::move(D);
  }

  void build_poisson() {
    auto entries = with_head("poisson");
    if (entries.empty()) return;
    const Ctx& ctx = spec_.base;
    AffPoissonData P{mv_zero(ctx, 2), mv_zero(ctx, 1)};
    std::map<std::pair<std::size_t, std::size_t>, Poly> given;
    for (Entry* e : entries) {
      auto parts = split_key(e->key);
      if (parts.size() == 2 && parts[1] == "d") {
        P.D = vector_field(ctx, poly_list(*e, ctx, ctx->size()));
      } else if (parts.size() == 4 && parts[1] == "lambda") {
        auto a = ctx->index_of(parts[2]), b = ctx->index_of(parts[3]);
        if (!a || !b) throw SpecError("undeclared coordinate in '" + e->key + "'", e->line, e->key_col);
        Poly v = parse_at({e->value, e->value_col}, ctx, e->line);
        if (*a == *b) {
          if (!v.is_zero()) throw SpecError("diagonal bivector component must vanish", e->line, e->key_col);
          continue;
        }
        auto partner = given.find({*b, *a});
        if (partner != given.end()) {
          if (!(v == -partner->second)) throw SpecError("bivector components are not skew", e->line, e->key_col);
          continue;
        }
        given.emplace(std::make_pair(*a, *b), v);
        P.lambda.add({int(*a), int(*b)}, v);
      } else {
        throw SpecError("malformed key '" + e->key + "'", e->line, e->key_col);
      }
    }
    spec_.poisson = std::move(P);
  }

  void build_rest() {
    for (Entry* e : with_head("section")) {
      require_bundle(*e);
      require_parts(*e, 2);
      auto label = split_key(e->key)[1];
      spec_.sections.emplace_back(label, Section{poly_list(*e, spec_.base, std::size_t(spec_.bundle->rank))});
    }
    for (Entry* e : with_head("form")) {
      std::size_t dot = e->key.find('.', 5);
      if (dot == std::string::npos) throw SpecError("malformed key '" + e->key + "'", e->line, e->key_col);
      int k = parse_nat(e->key.substr(5, dot - 5), e->line, e->key_col + 5);
      std::vector<std::string> slots;
      if (dot + 1 < e->key.size()) {
        for (const auto& it : split_items(e->key.substr(dot + 1), e->key_col + dot + 1, ',')) slots.push_back(it.text);
      }
      if (int(slots.size()) != k) {
        throw SpecError("form of degree " + std::to_string(k) + " needs " + std::to_string(k) + " slots", e->line,
                        e->key_col);
      }
      spec_.forms.push_back({k, slots, parse_at({e->value, e->value_col}, spec_.base, e->line), e->line, e->key_col});
    }
    if (Entry* e = find("time")) spec_.time = parse_at({e->value, e->value_col}, spec_.base, e->line);
    Entry* dim = find("mech.dim");
    Entry* H = find("mech.H");
    if (H && !dim) throw SpecError("mech.H needs mech.dim", H->line, H->key_col);
    if (dim) {
      spec_.mech_dim = parse_nat(dim->value, dim->line, dim->value_col);
      if (*spec_.mech_dim < 1 || 2 * *spec_.mech_dim + 1 > int(kMaxVars)) {
        throw SpecError("mech.dim out of range", dim->line, dim->value_col);
      }
      if (H) spec_.mech_H = parse_at({H->value, H->value_col}, mechanics_phase_context(*spec_.mech_dim), H->line);
    }
  }

  std::vector<Entry> entries_;
  SpecFile spec_;
};

}  // namespace

AffgebroidData SpecFile::affgebroid() const {
  if (!bundle) throw std::runtime_error("command needs a bundle block");
  if (!qder) throw std::runtime_error("command needs a qder block");
  return {*bundle, *qder};
}

std::map<int, AlgForm> SpecFile::resolve_forms(const Ctx& ctx, const std::vector<std::string>& frame) const {
  std::map<int, AlgForm> out;
  for (const auto& f : forms) {
    IndexTuple I;
    for (const auto& s : f.slots) {
      auto it = std::find(frame.begin(), frame.end(), s);
      if (it == frame.end()) throw SpecError("unknown hull frame element '" + s + "'", f.line, f.column);
      I.push_back(int(it - frame.begin()));
    }
    auto [pos, fresh] = out.try_emplace(f.degree, ctx, int(frame.size()), f.degree);
    pos->second.add(I, f.value.rebase(ctx));
  }
  return out;
}

SpecFile parse_spec(const std::string& text) { return Builder(text).build(); }

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

}  // namespace affgebra
