#include "ccg/kernels.hpp"

namespace ccg::kernels::scalar {

void compose(Byte* out, const Byte* p, const Byte* q, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) out[i] = p[q[i]];
}

bool commutes(const Byte* p, const Byte* q, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    if (p[q[i]] != q[p[i]]) return false;
  }
  return true;
}

std::size_t commuting_scan(const Byte* elems, std::size_t count, std::size_t n,
                           const Byte* x, Byte* flags) noexcept {
  std::size_t hits = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const bool c = commutes(elems + k * n, x, n);
    flags[k] = c ? 1 : 0;
    hits += c;
  }
  return hits;
}

}  // namespace ccg::kernels::scalar
