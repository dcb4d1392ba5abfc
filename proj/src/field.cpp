#include "versalkit/field.hpp"

#include <stdexcept>

namespace vk {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// digits of a polynomial over F_p, little endian
std::vector<int> digits(int v, int p, int n) {
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

// Powers of x modulo the monic polynomial f (coefficients f[0..n-1], x^n = -sum f_i x^i).
// Returns the exp table if x has order q-1, else an empty vector.
std::vector<int> try_modulus(const std::vector<int>& f, int p, int n, int q) {
  std::vector<int> table;
  table.reserve(q - 1);
  std::vector<int> cur(n, 0);
  cur[0] = 1;
  std::vector<char> seen(q, 0);
  for (int k = 0; k < q - 1; ++k) {
    int code = undigits(cur, p);
    if (seen[code] || code == 0) return {};
    seen[code] = 1;
    table.push_back(code);
    // multiply by x
    int top = cur[n - 1];
    for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < n; ++i) cur[i] = ((cur[i] - top * f[i]) % p + p) % p;
  }
  if (undigits(cur, p) != 1) return {};
  return table;
}

}  // namespace

Field::Field(int p, int n) : p_(p), n_(n) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("field degree must be positive");
  long long q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  if (q > 4096) throw std::invalid_argument("field of size " + std::to_string(q) + " exceeds 4096");
  q_ = static_cast<int>(q);
  if (q_ == 2) {
    exp_ = {1};
  } else if (n == 1) {
    for (int g = 2; g < p; ++g) {
      std::vector<int> t;
      long long x = 1;
      std::vector<char> seen(p, 0);
      bool ok = true;
      for (int k = 0; k < p - 1; ++k) {
        if (seen[x]) {
          ok = false;
          break;
        }
        seen[x] = 1;
        t.push_back(static_cast<int>(x));
        x = x * g % p;
      }
      if (ok) {
        exp_ = t;
        break;
      }
    }
  } else {
    int count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (int code = 0; code < count && exp_.empty(); ++code) {
      std::vector<int> f = digits(code, p, n);
      if (f[0] == 0) continue;
      exp_ = try_modulus(f, p, n, q_);
    }
  }
  if (static_cast<int>(exp_.size()) != q_ - 1) throw std::logic_error("no primitive element found");
  log_.assign(q_, -1);
  for (int k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
}

Field Field::prime(int p) { return Field(p, 1); }
Field Field::make(int p, int n) { return Field(p, n); }

Field Field::of_size(int q) {
  for (int p = 2; p <= q; ++p) {
    if (q % p) continue;
    int n = 0;
    int r = q;
    while (r % p == 0) {
      r /= p;
      ++n;
    }
    if (r != 1) break;
    return Field(p, n);
  }
  throw std::invalid_argument("no field of size " + std::to_string(q));
}

int Field::add(int a, int b) const {
  if (n_ == 1) {
    int s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  int r = 0, m = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * m;
    a /= p_;
    b /= p_;
    m *= p_;
  }
  return r;
}

int Field::neg(int a) const {
  if (n_ == 1) return a == 0 ? 0 : p_ - a;
  int r = 0, m = 1;
  while (a) {
    r += ((p_ - a % p_) % p_) * m;
    a /= p_;
    m *= p_;
  }
  return r;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int Field::pow(int a, long long e) const {
  if (e == 0) return 1;
  if (a == 0) {
    if (e < 0) throw std::domain_error("zero to a negative power");
    return 0;
  }
  long long m = q_ - 1;
  long long k = (static_cast<long long>(log_[a]) * (e % m)) % m;
  if (k < 0) k += m;
  return exp_[k];
}

int Field::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<int>(r);
}

int Field::exp(long long k) const {
  long long m = q_ - 1;
  k %= m;
  if (k < 0) k += m;
  return exp_[k];
}

int Field::log(int a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

std::string Field::format(int a) const {
  if (n_ == 1 || a < p_) return std::to_string(a);
  if (a == 0) return "0";
  return "z^" + std::to_string(log_[a]);
}

}  // namespace vk
