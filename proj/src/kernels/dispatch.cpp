#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "ccg/kernels.hpp"

namespace ccg::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(CCG_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() noexcept {
  if (const char* forced = std::getenv("CCG_ISA"); forced && std::strcmp(forced, "scalar") == 0) {
    return Isa::scalar;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

bool isa_available(Isa isa) noexcept {
  return isa == Isa::scalar || (isa == Isa::avx2 && cpu_has_avx2());
}

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("ISA not available on this CPU");
  active().store(isa, std::memory_order_relaxed);
}

#if defined(CCG_HAVE_AVX2)
#define CCG_DISPATCH(fn, ...) \
  (active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define CCG_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void compose(Byte* out, const Byte* p, const Byte* q, std::size_t n) noexcept {
  // Short permutations do not amortize the table setup.
  if (n < 8) {
    scalar::compose(out, p, q, n);
    return;
  }
  CCG_DISPATCH(compose, out, p, q, n);
}

bool commutes(const Byte* p, const Byte* q, std::size_t n) noexcept {
  if (n < 8) return scalar::commutes(p, q, n);
  return CCG_DISPATCH(commutes, p, q, n);
}

std::size_t commuting_scan(const Byte* elems, std::size_t count, std::size_t n,
                           const Byte* x, Byte* flags) noexcept {
  return CCG_DISPATCH(commuting_scan, elems, count, n, x, flags);
}

#undef CCG_DISPATCH

}  // namespace ccg::kernels
