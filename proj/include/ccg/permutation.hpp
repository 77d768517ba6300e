#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccg {

using Point = std::uint8_t;

// Points are stored in one byte each.
inline constexpr std::size_t kMaxDegree = 256;

/// A bijection on {0, ..., degree-1}, stored as its image sequence.
///
/// Composition is right-to-left: (p * q)(i) = p(q(i)). Every module builds on
/// this convention, conjugation included: x^g = g^-1 * x * g.
///
/// Text form is disjoint-cycle notation over 1-based points, e.g.
/// "(1,2)(3,4,5)"; the identity prints as "()".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  // Throws InputError unless `images` is a bijection on [0, size).
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  // 0-based cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles);
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }
  const Point* data() const noexcept { return images_.data(); }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  // Conjugate g^-1 * this * g.
  Permutation conjugate_by(const Permutation& g) const;

  // Least k >= 1 with p^k = 1, as the lcm of the cycle lengths.
  std::uint64_t order() const;
  // Cycle lengths including fixed points, sorted descending.
  std::vector<std::size_t> cycle_type() const;
  std::vector<std::vector<std::size_t>> cycles() const;  // 0-based, non-trivial only

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

// Throws InputError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

bool commute(const Permutation& p, const Permutation& q);

}  // namespace ccg
