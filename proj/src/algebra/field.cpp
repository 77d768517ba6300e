#include "ccg/field.hpp"

#include "ccg/error.hpp"

namespace ccg {
namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<unsigned> pinned_modulus(unsigned p, unsigned k) {
  if (k == 1) return {0, 1};
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 3 && k == 2) return {1, 0, 1};
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1};
  throw InputError("no pinned irreducible polynomial for GF(" + std::to_string(p) + "^" +
                   std::to_string(k) + ")");
}

}  // namespace

GaloisField::GaloisField(unsigned p, unsigned k) : p_(p), k_(k), q_(1) {
  if (!is_prime(p) || k == 0) throw InputError("GF(p^k) needs a prime p and k >= 1");
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  if (q_ > 256) throw InputError("field order " + std::to_string(q_) + " exceeds 256");
  modulus_ = pinned_modulus(p, k);

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  std::vector<std::vector<unsigned>> co(q_);
  for (unsigned a = 0; a < q_; ++a) co[a] = coefficients(FieldElem{static_cast<std::uint16_t>(a)});

  auto encode = [&](const std::vector<unsigned>& c) {
    unsigned code = 0;
    for (unsigned i = k_; i-- > 0;) code = code * p_ + c[i];
    return static_cast<std::uint16_t>(code);
  };

  for (unsigned a = 0; a < q_; ++a) {
    std::vector<unsigned> n(k_);
    for (unsigned i = 0; i < k_; ++i) n[i] = (p_ - co[a][i]) % p_;
    neg_[a] = encode(n);
    for (unsigned b = 0; b < q_; ++b) {
      std::vector<unsigned> s(k_);
      for (unsigned i = 0; i < k_; ++i) s[i] = (co[a][i] + co[b][i]) % p_;
      add_[a * q_ + b] = encode(s);

      // Schoolbook product then reduction by the monic modulus.
      std::vector<unsigned> prod(2 * k_ - 1, 0);
      for (unsigned i = 0; i < k_; ++i) {
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + co[a][i] * co[b][j]) % p_;
      }
      for (unsigned d = 2 * k_ - 1; d-- > k_;) {
        const unsigned c = prod[d];
        if (!c) continue;
        for (unsigned i = 0; i <= k_; ++i) {
          prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
      }
      prod.resize(k_);
      mul_[a * q_ + b] = encode(prod);
    }
  }
  for (unsigned a = 1; a < q_; ++a) {
    for (unsigned b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<std::uint16_t>(b);
    }
    if (!inv_[a]) throw IntegrityError("pinned polynomial is not irreducible");
  }
}

GaloisField GaloisField::of_order(unsigned q) {
  switch (q) {
    case 4: return GaloisField(2, 2);
    case 8: return GaloisField(2, 3);
    case 9: return GaloisField(3, 2);
    case 16: return GaloisField(2, 4);
    default:
      if (!is_prime(q)) throw InputError("no pinned field of order " + std::to_string(q));
      return GaloisField(q, 1);
  }
}

FieldElem GaloisField::elem(unsigned code) const {
  if (code >= q_) throw InputError("field element code out of range");
  return {static_cast<std::uint16_t>(code)};
}

FieldElem GaloisField::from_coefficients(const std::vector<unsigned>& coeffs) const {
  if (coeffs.size() > k_) throw InputError("too many coefficients for GF(q)");
  unsigned code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw InputError("coefficient outside [0, p)");
    code = code * p_ + coeffs[i];
  }
  return {static_cast<std::uint16_t>(code)};
}

std::vector<unsigned> GaloisField::coefficients(FieldElem a) const {
  std::vector<unsigned> c(k_);
  unsigned v = a.code;
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FieldElem GaloisField::primitive() const {
  for (unsigned g = 1; g < q_; ++g) {
    unsigned ord = 1;
    FieldElem x{static_cast<std::uint16_t>(g)};
    for (FieldElem y = x; y.code != 1; y = mul(y, x)) ++ord;
    if (ord == q_ - 1) return x;
  }
  return one();
}

FieldElem GaloisField::inv(FieldElem a) const {
  if (a.code == 0) throw InputError("inversion of zero in GF(" + std::to_string(q_) + ")");
  return {inv_[a.code]};
}

FieldElem GaloisField::pow(FieldElem a, unsigned long long e) const {
  FieldElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string GaloisField::to_string(FieldElem a) const {
  if (k_ == 1) return std::to_string(a.code);
  const auto c = coefficients(a);
  std::string s;
  for (unsigned i = k_; i-- > 0;) {
    if (!c[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace ccg
