#pragma once

// Byte-permutation inner loops. Every kernel has a portable scalar reference
// in namespace `scalar` and, when built with CCG_ENABLE_AVX2, a vpshufb-based
// variant in namespace `avx2`. The unqualified entry points dispatch to the
// best variant the running CPU supports; `CCG_ISA=scalar` in the environment
// pins the reference path.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ccg::kernels {

using Byte = std::uint8_t;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

// Variant currently used by the dispatching entry points.
Isa active_isa() noexcept;
// Whether the variant can run on this CPU (and was compiled in).
bool isa_available(Isa isa) noexcept;
// Test hook; throws std::invalid_argument when the ISA is unavailable.
void set_active_isa(Isa isa);

// out[i] = p[q[i]] for i < n. `out` may alias neither input.
void compose(Byte* out, const Byte* p, const Byte* q, std::size_t n) noexcept;

// True iff p(q(i)) == q(p(i)) for every i < n.
bool commutes(const Byte* p, const Byte* q, std::size_t n) noexcept;

// flags[k] = 1 iff element k of the row-major array `elems` (count rows of n
// bytes) commutes with x; returns the number of commuting rows.
std::size_t commuting_scan(const Byte* elems, std::size_t count, std::size_t n,
                           const Byte* x, Byte* flags) noexcept;

namespace scalar {
void compose(Byte* out, const Byte* p, const Byte* q, std::size_t n) noexcept;
bool commutes(const Byte* p, const Byte* q, std::size_t n) noexcept;
std::size_t commuting_scan(const Byte* elems, std::size_t count, std::size_t n,
                           const Byte* x, Byte* flags) noexcept;
}  // namespace scalar

namespace avx2 {
void compose(Byte* out, const Byte* p, const Byte* q, std::size_t n) noexcept;
bool commutes(const Byte* p, const Byte* q, std::size_t n) noexcept;
std::size_t commuting_scan(const Byte* elems, std::size_t count, std::size_t n,
                           const Byte* x, Byte* flags) noexcept;
}  // namespace avx2

}  // namespace ccg::kernels
