// Compiled with -mavx2; only reached through the runtime dispatcher after a
// cpuid check.

#include <immintrin.h>

#include <cstring>

#include "ccg/kernels.hpp"

namespace ccg::kernels::avx2 {
namespace {

// A byte table of up to 256 entries split into 16-byte chunks, each chunk
// broadcast to both 128-bit lanes so vpshufb can index it from either lane.
struct Table {
  __m256i chunk[16];
  int chunks;
};

inline __m128i load_partial16(const Byte* src, std::size_t avail) {
  if (avail >= 16) return _mm_loadu_si128(reinterpret_cast<const __m128i*>(src));
  alignas(16) Byte tmp[16] = {};
  std::memcpy(tmp, src, avail);
  return _mm_load_si128(reinterpret_cast<const __m128i*>(tmp));
}

inline __m256i load_partial32(const Byte* src, std::size_t avail) {
  if (avail >= 32) return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src));
  alignas(32) Byte tmp[32] = {};
  std::memcpy(tmp, src, avail);
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(tmp));
}

inline void load_table(Table& t, const Byte* p, std::size_t n) {
  t.chunks = static_cast<int>((n + 15) / 16);
  for (int k = 0; k < t.chunks; ++k) {
    const std::size_t off = static_cast<std::size_t>(k) * 16;
    t.chunk[k] = _mm256_broadcastsi128_si256(load_partial16(p + off, n - off));
  }
}

// r[i] = table[idx[i]] for 32 indices.
inline __m256i lookup(const Table& t, __m256i idx) {
  if (t.chunks == 1) return _mm256_shuffle_epi8(t.chunk[0], idx);
  const __m256i lo = _mm256_and_si256(idx, _mm256_set1_epi8(0x0F));
  const __m256i hi = _mm256_and_si256(idx, _mm256_set1_epi8(static_cast<char>(0xF0)));
  __m256i r = _mm256_shuffle_epi8(t.chunk[0], lo);
  for (int k = 1; k < t.chunks; ++k) {
    const __m256i sel = _mm256_cmpeq_epi8(hi, _mm256_set1_epi8(static_cast<char>(k << 4)));
    r = _mm256_blendv_epi8(r, _mm256_shuffle_epi8(t.chunk[k], lo), sel);
  }
  return r;
}

inline std::uint32_t lane_mask(std::size_t avail) {
  return avail >= 32 ? 0xFFFFFFFFu : ((1u << avail) - 1u);
}

inline bool commutes_with_tables(const Table& tp, const Byte* p, const Table& tq, const Byte* q,
                                 std::size_t n) {
  for (std::size_t j = 0; j < n; j += 32) {
    const std::size_t avail = n - j;
    const __m256i qi = load_partial32(q + j, avail);
    const __m256i pi = load_partial32(p + j, avail);
    const __m256i pq = lookup(tp, qi);
    const __m256i qp = lookup(tq, pi);
    const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(pq, qp)));
    const std::uint32_t want = lane_mask(avail);
    if ((eq & want) != want) return false;
  }
  return true;
}

}  // namespace

void compose(Byte* out, const Byte* p, const Byte* q, std::size_t n) noexcept {
  Table t;
  load_table(t, p, n);
  for (std::size_t j = 0; j < n; j += 32) {
    const std::size_t avail = n - j;
    const __m256i r = lookup(t, load_partial32(q + j, avail));
    if (avail >= 32) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), r);
    } else {
      alignas(32) Byte tmp[32];
      _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), r);
      std::memcpy(out + j, tmp, avail);
    }
  }
}

bool commutes(const Byte* p, const Byte* q, std::size_t n) noexcept {
  Table tp;
  Table tq;
  load_table(tp, p, n);
  load_table(tq, q, n);
  return commutes_with_tables(tp, p, tq, q, n);
}

std::size_t commuting_scan(const Byte* elems, std::size_t count, std::size_t n,
                           const Byte* x, Byte* flags) noexcept {
  Table tx;
  load_table(tx, x, n);
  Table te;
  std::size_t hits = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const Byte* e = elems + k * n;
    load_table(te, e, n);
    const bool c = commutes_with_tables(te, e, tx, x, n);
    flags[k] = c ? 1 : 0;
    hits += c;
  }
  return hits;
}

}  // namespace ccg::kernels::avx2
