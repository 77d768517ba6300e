#include "ccg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ccg/error.hpp"
#include "ccg/kernels.hpp"

namespace ccg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree) throw InputError("permutation degree exceeds " + std::to_string(kMaxDegree));
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) {
    throw InputError("permutation degree exceeds " + std::to_string(kMaxDegree));
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v]) throw InputError("image sequence is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t from = cycle[i];
      const std::size_t to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) {
        throw InputError("cycle point " + std::to_string(std::max(from, to) + 1) +
                         " outside degree " + std::to_string(degree));
      }
      if (used[from]) throw InputError("point " + std::to_string(from + 1) + " repeated in cycles");
      used[from] = true;
      p.images_[from] = static_cast<Point>(to);
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::size_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InputError("bad character in cycle notation: " + std::string(text));
      }
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > kMaxDegree) throw InputError("point out of range in: " + std::string(text));
        ++i;
      }
      if (v == 0) throw InputError("points are 1-based: " + std::string(text));
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw InputError("unterminated cycle: " + std::string(text));
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  Permutation r(images_.size());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

std::uint64_t Permutation::order() const {
  std::uint64_t l = 1;
  for (std::size_t len : cycle_type()) l = std::lcm(l, static_cast<std::uint64_t>(len));
  return l;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t v = s; !seen[v]; v = images_[v]) {
      seen[v] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == s) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t v = s; !seen[v]; v = images_[v]) {
      seen[v] = true;
      cycle.push_back(v);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (const auto& cycle : cycles()) {
    s += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(cycle[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InputError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                     std::to_string(q.degree()));
  }
  std::vector<Point> out(p.degree());
  kernels::compose(out.data(), p.data(), q.data(), p.degree());
  return Permutation(Permutation::Unchecked{}, std::move(out));
}

bool commute(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InputError("degree mismatch in commute");
  return kernels::commutes(p.data(), q.data(), p.degree());
}

}  // namespace ccg
