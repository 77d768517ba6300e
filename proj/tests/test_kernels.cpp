#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ccg/kernels.hpp"

using namespace ccg::kernels;

namespace {

std::vector<Byte> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Byte> p(n);
  std::iota(p.begin(), p.end(), Byte{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("scalar kernels match their definitions") {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto p = random_perm(n, rng), q = random_perm(n, rng);
    std::vector<Byte> out(n);
    scalar::compose(out.data(), p.data(), q.data(), n);
    bool comm = true;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(out[i] == p[q[i]]);
      comm = comm && p[q[i]] == q[p[i]];
    }
    CHECK(scalar::commutes(p.data(), q.data(), n) == comm);
    CHECK(scalar::commutes(p.data(), p.data(), n));
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!isa_available(Isa::avx2)) {
    MESSAGE("AVX2 unavailable; skipping equivalence test");
    return;
  }
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 256; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto p = random_perm(n, rng);
      auto q = random_perm(n, rng);
      if (rep == 1) q = p;  // always commutes
      if (rep == 2) {       // a power of p commutes with p
        std::vector<Byte> sq(n);
        scalar::compose(sq.data(), p.data(), p.data(), n);
        q = sq;
      }
      std::vector<Byte> a(n), b(n);
      scalar::compose(a.data(), p.data(), q.data(), n);
      avx2::compose(b.data(), p.data(), q.data(), n);
      CHECK(a == b);
      CHECK(scalar::commutes(p.data(), q.data(), n) == avx2::commutes(p.data(), q.data(), n));
    }
    const std::size_t count = 37;
    std::vector<Byte> rows;
    const auto x = random_perm(n, rng);
    for (std::size_t k = 0; k < count; ++k) {
      auto r = k % 3 == 0 ? x : random_perm(n, rng);
      rows.insert(rows.end(), r.begin(), r.end());
    }
    std::vector<Byte> fa(count), fb(count);
    const auto ha = scalar::commuting_scan(rows.data(), count, n, x.data(), fa.data());
    const auto hb = avx2::commuting_scan(rows.data(), count, n, x.data(), fb.data());
    CHECK(ha == hb);
    CHECK(fa == fb);
  }
}

TEST_CASE("dispatch can be pinned to the scalar path") {
  const Isa before = active_isa();
  set_active_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  std::vector<Byte> p{1, 2, 0}, q{0, 2, 1}, out(3);
  compose(out.data(), p.data(), q.data(), 3);
  CHECK(out == std::vector<Byte>{1, 0, 2});
  set_active_isa(before);
  CHECK(isa_name(Isa::scalar) == "scalar");
}
