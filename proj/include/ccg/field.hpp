#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccg {

/// An element of GF(p^k), encoded as sum(c_i * p^i) over its polynomial
/// coefficients c_0..c_{k-1}. Only meaningful together with its field.
struct FieldElem {
  std::uint16_t code = 0;
  friend auto operator<=>(FieldElem, FieldElem) = default;
};

/// GF(p^k) with arithmetic tables. Prime fields (k = 1) exist for every prime
/// p < 256; extension fields are pinned to one irreducible each:
///   GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1, GF(16): x^4+x+1.
class GaloisField {
 public:
  GaloisField(unsigned p, unsigned k);
  // q must be a prime or one of 4, 8, 9, 16.
  static GaloisField of_order(unsigned q);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  unsigned order() const noexcept { return q_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  FieldElem elem(unsigned code) const;
  FieldElem from_coefficients(const std::vector<unsigned>& coeffs) const;
  std::vector<unsigned> coefficients(FieldElem a) const;
  // Smallest-code generator of the multiplicative group.
  FieldElem primitive() const;

  FieldElem add(FieldElem a, FieldElem b) const { return {add_[a.code * q_ + b.code]}; }
  FieldElem neg(FieldElem a) const { return {neg_[a.code]}; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const { return {mul_[a.code * q_ + b.code]}; }
  // Throws InputError for zero.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, unsigned long long e) const;

  std::string to_string(FieldElem a) const;

 private:
  unsigned p_;
  unsigned k_;
  unsigned q_;
  std::vector<unsigned> modulus_;  // monic irreducible, low coefficient first, length k+1
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

}  // namespace ccg
