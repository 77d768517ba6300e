#include "ccg/projective.hpp"

#include <algorithm>

#include "ccg/error.hpp"

namespace ccg {

FieldMatrix make_matrix(const GaloisField& f, std::size_t n, const std::vector<int>& codes) {
  if (codes.size() != n * n) throw InputError("matrix needs n*n entries");
  FieldMatrix m{n, {}};
  m.entries.reserve(n * n);
  const int q = static_cast<int>(f.order());
  for (int c : codes) {
    // Negative codes are read in the prime field, so -1 means p-1.
    if (c < 0) {
      m.entries.push_back(f.neg(f.elem(static_cast<unsigned>(-c) % f.characteristic())));
    } else {
      if (c >= q) throw InputError("matrix entry outside field");
      m.entries.push_back(f.elem(static_cast<unsigned>(c)));
    }
  }
  return m;
}

FieldMatrix scale(const GaloisField& f, const FieldMatrix& m, FieldElem s) {
  FieldMatrix r = m;
  for (auto& e : r.entries) e = f.mul(e, s);
  return r;
}

FieldElem determinant(const GaloisField& f, const FieldMatrix& m) {
  switch (m.n) {
    case 1: return m.at(0, 0);
    case 2: return f.sub(f.mul(m.at(0, 0), m.at(1, 1)), f.mul(m.at(0, 1), m.at(1, 0)));
    case 3: {
      FieldElem d = f.zero();
      for (std::size_t c = 0; c < 3; ++c) {
        const FieldElem minor = f.sub(f.mul(m.at(1, (c + 1) % 3), m.at(2, (c + 2) % 3)),
                                      f.mul(m.at(1, (c + 2) % 3), m.at(2, (c + 1) % 3)));
        d = f.add(d, f.mul(m.at(0, c), minor));
      }
      return d;
    }
    default: throw InputError("determinant only for 1x1 to 3x3 matrices");
  }
}

ProjPoint normalize(const GaloisField& f, std::vector<FieldElem> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](FieldElem e) { return e.code != 0; });
  if (lead == v.end()) throw InputError("zero vector has no projective point");
  const FieldElem s = f.inv(*lead);
  for (auto& e : v) e = f.mul(e, s);
  return ProjPoint{std::move(v)};
}

ProjectiveSpace::ProjectiveSpace(const GaloisField& field, std::size_t coords)
    : field_(field), coords_(coords) {
  if (coords < 2 || coords > 3) throw InputError("only projective lines and planes are supported");
  const unsigned q = field_.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < coords; ++i) total *= q;
  // Codes enumerated in lexicographic order; keep the normalized ones.
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<FieldElem> v(coords);
    std::size_t c = code;
    for (std::size_t i = coords; i-- > 0;) {
      v[i] = field_.elem(static_cast<unsigned>(c % q));
      c /= q;
    }
    auto lead = std::find_if(v.begin(), v.end(), [](FieldElem e) { return e.code != 0; });
    if (lead->code == 1) points_.push_back(ProjPoint{std::move(v)});
  }
  if (points_.size() > kMaxDegree) throw InputError("projective space too large for a permutation");
}

std::size_t ProjectiveSpace::index_of(const ProjPoint& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) throw InputError("point not in projective space");
  return static_cast<std::size_t>(it - points_.begin());
}

ProjPoint ProjectiveSpace::apply(const FieldMatrix& m, const ProjPoint& pt) const {
  if (m.n != coords_ || pt.coords.size() != coords_) throw InputError("matrix/point dimension mismatch");
  if (determinant(field_, m).code == 0) throw InputError("singular matrix has no projective action");
  std::vector<FieldElem> v(coords_, field_.zero());
  for (std::size_t r = 0; r < coords_; ++r) {
    for (std::size_t c = 0; c < coords_; ++c) v[r] = field_.add(v[r], field_.mul(m.at(r, c), pt.coords[c]));
  }
  return normalize(field_, std::move(v));
}

Permutation ProjectiveSpace::induced_permutation(const FieldMatrix& m) const {
  std::vector<Point> images(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    images[i] = static_cast<Point>(index_of(apply(m, points_[i])));
  }
  return Permutation(std::move(images));
}

}  // namespace ccg
