#include "versalkit/kernels.hpp"

namespace vk::kernels {

Witness associativity_failure(const std::vector<int>& t, int n, Mode mode) {
  auto ok = [&t, n](int a, int b, int c) {
    return t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
  };
  return first_failing_triple(n, ok, mode);
}

}  // namespace vk::kernels
