#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vk {

// Finite field F_q, q = p^n <= 4096. Elements are integers 0..q-1 holding the
// base-p digits of a polynomial in the primitive element; the prime subfield
// is 0..p-1.
class Field {
 public:
  static Field prime(int p);
  static Field make(int p, int n);
  static Field of_size(int q);

  int characteristic() const { return p_; }
  int degree() const { return n_; }
  int size() const { return q_; }
  bool is_prime_field() const { return n_ == 1; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    int e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long long e) const;

  // image of an integer in the prime subfield
  int from_int(long long v) const;
  // generator of the multiplicative group
  int primitive() const { return exp_[1 % (q_ - 1)]; }
  int exp(long long k) const;
  int log(int a) const;

  std::string format(int a) const;
  bool operator==(const Field& o) const { return p_ == o.p_ && n_ == o.n_; }

 private:
  Field(int p, int n);
  int p_ = 2;
  int n_ = 1;
  int q_ = 2;
  std::vector<int> exp_;
  std::vector<int> log_;
};

bool is_prime(long long n);

}  // namespace vk
