#include "versalkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "versalkit/determinants.hpp"
#include "versalkit/models.hpp"

namespace vk::io {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// drops a trailing comment introduced by whitespace and '#'
std::string strip_comment(const std::string& s) {
  for (size_t i = 0; i < s.size(); ++i)
    if ((s[i] == '#' || s[i] == ';') && (i == 0 || s[i - 1] == ' ' || s[i - 1] == '\t')) return s.substr(0, i);
  return s;
}

}  // namespace

ParseError::ParseError(std::string p, int l, int c, const std::string& m)
    : std::runtime_error(p + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + m),
      path(std::move(p)),
      line(l),
      col(c),
      message(m) {}

const Entry* Section::find(const std::string& key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

std::vector<const Entry*> Section::all(const std::string& key) const {
  std::vector<const Entry*> out;
  for (const auto& e : entries)
    if (e.key == key) out.push_back(&e);
  return out;
}

const Section* TextDoc::section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

const Section& TextDoc::require(const std::string& name) const {
  if (const Section* s = section(name)) return *s;
  throw ParseError(path, 1, 1, "missing section [" + name + "]");
}

const Entry& TextDoc::require(const Section& s, const std::string& key) const {
  if (const Entry* e = s.find(key)) return *e;
  fail(s, "section [" + s.name + "] needs '" + key + "'");
}

void TextDoc::fail(const Entry& e, const std::string& message) const { throw ParseError(path, e.line, e.col, message); }

void TextDoc::fail(const Section& s, const std::string& message) const { throw ParseError(path, s.line, 1, message); }

TextDoc parse_text(const std::string& text, const std::string& path) {
  TextDoc doc;
  doc.path = path;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    int col = static_cast<int>(first) + 1;
    if (line[first] == '[') {
      auto close = line.find(']', first);
      if (close == std::string::npos) throw ParseError(path, lineno, col, "unterminated section header");
      if (!trim(line.substr(close + 1)).empty())
        throw ParseError(path, lineno, static_cast<int>(close) + 2, "text after section header");
      std::string name = trim(line.substr(first + 1, close - first - 1));
      if (name.empty()) throw ParseError(path, lineno, col, "empty section name");
      doc.sections.push_back({name, lineno, {}});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path, lineno, col, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError(path, lineno, col, "empty key");
    if (doc.sections.empty()) throw ParseError(path, lineno, col, "entry before any section");
    auto vstart = line.find_first_not_of(" \t", eq + 1);
    int vcol = static_cast<int>(vstart == std::string::npos ? eq + 1 : vstart) + 1;
    doc.sections.back().entries.push_back({key, trim(line.substr(eq + 1)), lineno, vcol});
  }
  return doc;
}

TextDoc read_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

std::string fixture_root() {
  const char* v = std::getenv("VERSALKIT_FIXTURES");
  return v ? std::string(v) : std::string();
}

std::string resolve_reference(const TextDoc& from, const Entry& ref) {
  fs::path p(ref.value);
  std::vector<fs::path> tries;
  if (p.is_absolute()) {
    tries.push_back(p);
  } else {
    tries.push_back(fs::path(from.path).parent_path() / p);
    if (!fixture_root().empty()) tries.push_back(fs::path(fixture_root()) / p);
  }
  for (const auto& t : tries)
    if (fs::is_regular_file(t)) return t.lexically_normal().string();
  from.fail(ref, "dangling reference '" + ref.value + "'");
}

std::vector<std::string> split_list(const std::string& value, char sep) {
  std::vector<std::string> out;
  if (trim(value).empty()) return out;
  std::string cur;
  std::istringstream in(value);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

long long parse_integer(const TextDoc& doc, const Entry& e) {
  try {
    size_t used = 0;
    long long v = std::stoll(e.value, &used);
    if (used == e.value.size()) return v;
  } catch (const std::exception&) {
  }
  doc.fail(e, "expected an integer, got '" + e.value + "'");
}

bool parse_bool(const TextDoc& doc, const Entry& e) {
  if (e.value == "true" || e.value == "yes" || e.value == "1") return true;
  if (e.value == "false" || e.value == "no" || e.value == "0") return false;
  doc.fail(e, "expected true or false, got '" + e.value + "'");
}

int parse_field_element(const Field& k, const std::string& text) {
  std::string t = trim(text);
  if (t == "z") return k.primitive();
  if (t.rfind("z^", 0) == 0) return k.exp(std::stoll(t.substr(2)));
  size_t used = 0;
  long long v = std::stoll(t, &used);
  if (used != t.size()) throw std::invalid_argument("bad field element '" + text + "'");
  return k.from_int(v);
}

namespace {

std::vector<int> int_list(const TextDoc& doc, const Entry& e) {
  std::vector<int> out;
  for (const auto& s : split_list(e.value)) {
    Entry tmp = e;
    tmp.value = s;
    out.push_back(static_cast<int>(parse_integer(doc, tmp)));
  }
  return out;
}

template <class F>
auto guarded(const TextDoc& doc, const Section& s, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    doc.fail(s, ex.what());
  }
}

Field field_of(const TextDoc& doc, const Section& s) {
  const Entry& fe = doc.require(s, "field");
  long long q = parse_integer(doc, fe);
  return guarded(doc, s, [&] { return Field::of_size(static_cast<int>(q)); });
}

int field_entry(const TextDoc& doc, const Field& k, const Entry& e) {
  try {
    return parse_field_element(k, e.value);
  } catch (const std::exception& ex) {
    doc.fail(e, ex.what());
  }
}

}  // namespace

GroupModel model_from_doc(const TextDoc& doc) {
  const Section& ms = doc.require("model");
  std::string name = doc.require(ms, "name").value;
  int p = static_cast<int>(parse_integer(doc, doc.require(ms, "p")));
  if (!is_prime(p)) doc.fail(*ms.find("p"), "p must be prime");
  Field k = field_of(doc, ms);
  if (k.characteristic() != p) doc.fail(*ms.find("field"), "field characteristic differs from p");

  const Section& Ps = doc.require("P");
  const Section& Hs = doc.require("H");
  const Section& as = doc.require("action");
  const Section& cs = doc.require("characters");
  int n = static_cast<int>(parse_integer(doc, doc.require(Hs, "order")));
  if (n < 1) doc.fail(*Hs.find("order"), "order of H must be positive");
  int chi1 = field_entry(doc, k, doc.require(cs, "chi1"));
  int chi2 = field_entry(doc, k, doc.require(cs, "chi2"));
  std::string kind = doc.require(Ps, "kind").value;

  if (kind == "abelian") {
    auto orders = int_list(doc, doc.require(Ps, "orders"));
    auto gens = split_list(doc.require(Ps, "generators").value);
    if (gens.size() != orders.size()) doc.fail(*Ps.find("generators"), "one generator name per order");
    for (const auto& e : as.entries)
      if (std::find(gens.begin(), gens.end(), e.key) == gens.end()) doc.fail(e, "unknown generator '" + e.key + "'");
    std::vector<std::vector<int>> images;
    for (const auto& g : gens) images.push_back(int_list(doc, doc.require(as, g)));
    for (size_t i = 0; i < images.size(); ++i)
      if (images[i].size() != orders.size()) doc.fail(*as.find(gens[i]), "image needs one exponent per generator");
    return guarded(doc, as, [&] {
      return models::cyclic_complement_model(name, p, k, orders, gens, n, images, chi1, chi2);
    });
  }
  if (kind == "heisenberg") {
    int alpha = static_cast<int>(parse_integer(doc, doc.require(as, "alpha")));
    int beta = static_cast<int>(parse_integer(doc, doc.require(as, "beta")));
    return guarded(doc, as, [&] { return models::heisenberg_model(name, p, k, n, alpha, beta, chi1, chi2); });
  }
  if (kind == "table") {
    auto names = split_list(doc.require(Ps, "elements").value);
    auto index_of = [&](const Entry& e, const std::string& s) {
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return static_cast<int>(i);
      doc.fail(e, "unknown element '" + s + "'");
    };
    auto rows = Ps.all("row");
    if (rows.size() != names.size()) doc.fail(Ps, "table needs one row per element");
    std::vector<int> table;
    for (const Entry* r : rows) {
      auto cells = split_list(r->value, ' ');
      std::erase(cells, std::string());
      if (cells.size() != names.size()) doc.fail(*r, "row has the wrong length");
      for (const auto& c : cells) table.push_back(index_of(*r, c));
    }
    const Entry& he = doc.require(as, "h");
    auto cells = split_list(he.value, ' ');
    std::erase(cells, std::string());
    if (cells.size() != names.size()) doc.fail(he, "action needs the image of every element");
    std::vector<int> perm;
    for (const auto& c : cells) perm.push_back(index_of(he, c));
    return guarded(doc, Ps, [&] {
      FiniteGroup P = FiniteGroup::from_table(table, names);
      FiniteGroup H = FiniteGroup::cyclic(n, "h");
      auto act = action_from_generators(P, H, {1 % n}, {perm});
      Semidirect sd = build_semidirect(P, H, act);
      std::vector<int> c1(n), c2(n);
      for (int i = 0; i < n; ++i) {
        c1[i] = k.pow(chi1, i);
        c2[i] = k.pow(chi2, i);
      }
      return make_model(name, p, k, sd, c1, c2);
    });
  }
  doc.fail(*Ps.find("kind"), "unknown group kind '" + kind + "'");
}

GroupModel load_model(const std::string& path) { return model_from_doc(read_doc(path)); }

RingSpec ring_from_doc(const TextDoc& doc) {
  const Section& rs = doc.require("ring");
  Field k = field_of(doc, rs);
  std::vector<std::string> vars;
  if (const Entry* v = rs.find("vars")) vars = split_list(v->value);
  int N = kDefaultTruncation;
  if (const Entry* e = rs.find("N")) N = static_cast<int>(parse_integer(doc, *e));
  std::vector<Poly> rels;
  for (const Entry* e : rs.all("relations"))
    for (const auto& s : split_list(e->value)) {
      try {
        rels.push_back(parse_poly(s, vars, k));
      } catch (const std::exception& ex) {
        doc.fail(*e, ex.what());
      }
    }
  RingSpec spec;
  spec.ring = guarded(doc, rs, [&] {
    if (vars.empty()) return LocalRing::residue_field(k);
    bool artinian = true;
    for (const auto& r : rels) artinian = artinian && r.is_monomial();
    for (int i = 0; artinian && i < static_cast<int>(vars.size()); ++i) {
      bool pure = false;
      for (const auto& r : rels) {
        Mono m = r.terms.begin()->first;
        pure = pure || (mono_exp(m, i) > 0 && mono_degree(m) == mono_exp(m, i));
      }
      artinian = pure;
    }
    if (artinian && !rs.find("N")) return LocalRing::artinian(k, vars, rels);
    return LocalRing::truncated(k, vars, rels, N);
  });
  if (const Section* ad = doc.section("adjoin")) {
    spec.adjoin_c = doc.require(*ad, "c").value;
    if (const Entry* e = ad->find("x")) spec.x = e->value;
    if (const Entry* e = ad->find("y")) spec.y = e->value;
    guarded(doc, *ad, [&] { return spec.ring.parse(*spec.adjoin_c); });
  }
  if (const Section* cs = doc.section("control")) {
    spec.control_prime = split_list(doc.require(*cs, "prime").value);
    spec.control_c = doc.require(*cs, "c").value;
    guarded(doc, *cs, [&] { return spec.ring.parse(spec.control_c); });
  }
  return spec;
}

RingSpec load_ring(const std::string& path) { return ring_from_doc(read_doc(path)); }

namespace {

RingMatrix parse_matrix(const TextDoc& doc, const Entry& e, const LocalRing& R) {
  auto rows = split_list(e.value, ';');
  if (rows.size() != 2) doc.fail(e, "expected a 2x2 matrix 'a, b; c, d'");
  RingMatrix m;
  for (const auto& r : rows) {
    auto cells = split_list(r, ',');
    if (cells.size() != 2) doc.fail(e, "expected a 2x2 matrix 'a, b; c, d'");
    for (const auto& c : cells) {
      try {
        m.push_back(R.parse(c));
      } catch (const std::exception& ex) {
        doc.fail(e, ex.what());
      }
    }
  }
  return m;
}

}  // namespace

PairSpec pair_from_doc(const TextDoc& doc) {
  const Section& ps = doc.require("pair");
  const Entry& me = doc.require(ps, "model");
  PairSpec spec;
  std::string mpath = resolve_reference(doc, me);
  spec.model = std::make_shared<const GroupModel>(load_model(mpath));
  const GroupModel& m = *spec.model;
  spec.kind = ps.find("kind") ? ps.find("kind")->value : "split";
  const Entry* re = ps.find("ring");
  if (spec.kind == "tangent") {
    if (re) doc.fail(*re, "tangent pairs live over the dual numbers of the model field");
    spec.ring = dual_numbers(m.k);
    TangentSpace ts = tangent_space(m);
    std::vector<int> coords;
    if (const Entry* ce = ps.find("coords")) {
      coords = int_list(doc, *ce);
      if (static_cast<int>(coords.size()) != ts.dim())
        doc.fail(*ce, "tangent space has dimension " + std::to_string(ts.dim()));
    } else {
      const Entry& ie = doc.require(ps, "vector");
      long long i = parse_integer(doc, ie);
      if (i < 0 || i >= ts.dim()) doc.fail(ie, "tangent space has dimension " + std::to_string(ts.dim()));
      coords.assign(ts.dim(), 0);
      coords[i] = 1;
    }
    TangentVector v{Vec(m.G->order(), 0), Vec(m.G->order(), 0)};
    for (int i = 0; i < ts.dim(); ++i) {
      int c = m.k.from_int(coords[i]);
      axpy(m.k, c, ts.basis[i].t1, v.t1);
      axpy(m.k, c, ts.basis[i].d1, v.d1);
    }
    spec.det = pair_from_tangent(m, v, spec.ring);
  } else {
    if (re) {
      RingSpec rspec = load_ring(resolve_reference(doc, *re));
      if (!(rspec.ring.field() == m.k)) doc.fail(*re, "ring field differs from the model field");
      spec.ring = std::make_shared<const LocalRing>(rspec.ring);
    } else {
      spec.ring = std::make_shared<const LocalRing>(LocalRing::residue_field(m.k));
    }
    if (spec.kind == "split") {
      spec.det = split_pair(m, spec.ring);
    } else if (spec.kind == "rep") {
      const Section& rep = doc.require("rep");
      std::vector<int> gens;
      std::vector<RingMatrix> images;
      for (const auto& e : rep.entries) {
        try {
          gens.push_back(parse_word(m, e.key));
        } catch (const std::exception& ex) {
          doc.fail(e, ex.what());
        }
        images.push_back(parse_matrix(doc, e, *spec.ring));
      }
      auto rho = guarded(doc, rep, [&] { return rep_from_generators(m.G, spec.ring, 2, gens, images); });
      spec.det.G = m.G;
      spec.det.A = spec.ring;
      for (int g = 0; g < m.G->order(); ++g) {
        spec.det.t.push_back(rmat_trace(*spec.ring, rho.images[g], 2));
        spec.det.d.push_back(rmat_det2(*spec.ring, rho.images[g]));
      }
    } else {
      doc.fail(*ps.find("kind"), "unknown pair kind '" + spec.kind + "'");
    }
  }
  if (const Section* ov = doc.section("override")) {
    for (const auto& e : ov->entries) {
      bool is_t = e.key.rfind("t.", 0) == 0, is_d = e.key.rfind("d.", 0) == 0;
      if (!is_t && !is_d) doc.fail(e, "override keys are t.<word> or d.<word>");
      int g = -1;
      try {
        g = parse_word(m, e.key.substr(2));
      } catch (const std::exception& ex) {
        doc.fail(e, ex.what());
      }
      LocalRing::Elem v;
      try {
        v = spec.ring->parse(e.value);
      } catch (const std::exception& ex) {
        doc.fail(e, ex.what());
      }
      (is_t ? spec.det.t : spec.det.d)[g] = v;
    }
  }
  return spec;
}

PairSpec load_pair(const std::string& path) { return pair_from_doc(read_doc(path)); }

Cycle parse_cycle(const std::string& text, const std::vector<std::string>& ambient, int dim) {
  Cycle c{ambient, dim, {}};
  std::string t = trim(text);
  if (t == "0" || t.empty()) return c;
  size_t pos = 0;
  int sign = 1;
  bool expect_term = true;
  while (pos < t.size()) {
    char ch = t[pos];
    if (ch == ' ') {
      ++pos;
      continue;
    }
    if (!expect_term) {
      if (ch != '+' && ch != '-') throw std::invalid_argument("expected '+' or '-' in cycle '" + text + "'");
      sign = ch == '+' ? 1 : -1;
      ++pos;
      expect_term = true;
      continue;
    }
    if (ch == '-') {
      sign = -sign;
      ++pos;
      continue;
    }
    long long mult = 1;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t used = 0;
      mult = std::stoll(t.substr(pos), &used);
      pos += used;
    }
    if (t.compare(pos, 2, "[(") != 0) throw std::invalid_argument("expected '[(' in cycle '" + text + "'");
    auto close = t.find(")]", pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated prime in cycle '" + text + "'");
    auto names = split_list(t.substr(pos + 2, close - pos - 2));
    PrimeLabel P = PrimeLabel::of(ambient, names);
    c.add(P, sign * mult);
    pos = close + 2;
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw std::invalid_argument("cycle '" + text + "' ends with an operator");
  return c;
}

}  // namespace vk::io
