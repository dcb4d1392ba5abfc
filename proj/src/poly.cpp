#include "versalkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace vk {

int mono_degree(Mono m) {
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) d += mono_exp(m, i);
  return d;
}

Mono mono_from_exps(const std::vector<int>& e) {
  if (static_cast<int>(e.size()) > kMaxVars) throw std::invalid_argument("too many variables");
  Mono m = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > kMaxExp) throw std::overflow_error("monomial exponent out of range");
    m |= static_cast<Mono>(e[i]) << (kExpBits * i);
  }
  return m;
}

std::vector<int> mono_exps(Mono m, int nvars) {
  std::vector<int> e(nvars);
  for (int i = 0; i < nvars; ++i) e[i] = mono_exp(m, i);
  return e;
}

Mono mono_mul(Mono a, Mono b) {
  Mono r = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = mono_exp(a, i) + mono_exp(b, i);
    if (e > kMaxExp) throw std::overflow_error("monomial exponent out of range");
    r |= static_cast<Mono>(e) << (kExpBits * i);
  }
  return r;
}

bool mono_divides(Mono a, Mono b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (mono_exp(a, i) > mono_exp(b, i)) return false;
  return true;
}

Mono mono_var(int i, int e) { return static_cast<Mono>(e) << (kExpBits * i); }

bool mono_less(Mono a, Mono b, int nvars) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  for (int i = nvars - 1; i >= 0; --i) {
    int ea = mono_exp(a, i), eb = mono_exp(b, i);
    if (ea != eb) return ea > eb;
  }
  return false;
}

std::string format_mono(Mono m, const std::vector<std::string>& vars) {
  std::string s;
  for (size_t i = 0; i < vars.size(); ++i) {
    int e = mono_exp(m, static_cast<int>(i));
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

int Poly::lowest_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) {
    int e = mono_degree(m);
    if (d < 0 || e < d) d = e;
  }
  return d;
}

int Poly::highest_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, mono_degree(m));
  return d;
}

Poly poly_add(const Field& k, const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms) {
    int v = k.add(r.terms[m], c);
    if (v)
      r.terms[m] = v;
    else
      r.terms.erase(m);
  }
  return r;
}

Poly poly_scale(const Field& k, int c, const Poly& a) {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, v] : a.terms) r.terms[m] = k.mul(c, v);
  return r;
}

Poly poly_mul(const Field& k, const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Mono m = mono_mul(ma, mb);
      int v = k.add(r.terms[m], k.mul(ca, cb));
      if (v)
        r.terms[m] = v;
      else
        r.terms.erase(m);
    }
  return r;
}

Poly poly_mono(Mono m, int c) {
  Poly r;
  if (c) r.terms[m] = c;
  return r;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial '" + s + "': " + what + " at offset " + std::to_string(i));
  }
  long long number() {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected a number");
    long long v = std::stoll(s.substr(i, j - i));
    i = j;
    return v;
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars, const Field& k) {
  Cursor cur{text};
  Poly result;
  bool first = true;
  while (!cur.eof()) {
    int sign = 1;
    cur.skip();
    if (cur.s[cur.i] == '+' || cur.s[cur.i] == '-') {
      if (cur.s[cur.i] == '-') sign = -1;
      ++cur.i;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    long long coef = 1;
    Mono m = 0;
    bool any = false;
    while (true) {
      cur.skip();
      if (cur.i >= cur.s.size()) break;
      char ch = cur.s[cur.i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coef *= cur.number();
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        size_t j = cur.i;
        while (j < cur.s.size() && (std::isalnum(static_cast<unsigned char>(cur.s[j])) || cur.s[j] == '_')) ++j;
        std::string name = cur.s.substr(cur.i, j - cur.i);
        int idx = -1;
        for (size_t v = 0; v < vars.size(); ++v)
          if (vars[v] == name) idx = static_cast<int>(v);
        if (idx < 0) cur.fail("unknown variable '" + name + "'");
        cur.i = j;
        int e = 1;
        cur.skip();
        if (cur.i < cur.s.size() && cur.s[cur.i] == '^') {
          ++cur.i;
          e = static_cast<int>(cur.number());
        }
        m = mono_mul(m, mono_var(idx, e));
        any = true;
      } else {
        break;
      }
      cur.skip();
      if (cur.i < cur.s.size() && cur.s[cur.i] == '*') {
        ++cur.i;
        continue;
      }
      break;
    }
    if (!any) cur.fail("empty term");
    int c = k.from_int(sign * coef);
    result = poly_add(k, result, poly_mono(m, c));
  }
  return result;
}

std::string format_poly(const Poly& p, const std::vector<std::string>& vars, const Field& k) {
  if (p.is_zero()) return "0";
  std::vector<Mono> order;
  for (const auto& [m, c] : p.terms) order.push_back(m);
  int n = static_cast<int>(vars.size());
  std::sort(order.begin(), order.end(), [n](Mono a, Mono b) { return mono_less(a, b, n); });
  std::string s;
  for (Mono m : order) {
    int c = p.terms.at(m);
    if (!s.empty()) s += " + ";
    std::string mono = format_mono(m, vars);
    if (mono == "1")
      s += k.format(c);
    else if (c == 1)
      s += mono;
    else
      s += k.format(c) + "*" + mono;
  }
  return s;
}

}  // namespace vk
