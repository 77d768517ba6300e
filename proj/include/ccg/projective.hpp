#pragma once

#include <cstddef>
#include <vector>

#include "ccg/field.hpp"
#include "ccg/permutation.hpp"

namespace ccg {

/// Nonzero vector over GF(q) scaled so its first nonzero coordinate is 1.
struct ProjPoint {
  std::vector<FieldElem> coords;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Square matrix over a GaloisField, row-major; acts on column vectors.
struct FieldMatrix {
  std::size_t n = 0;
  std::vector<FieldElem> entries;

  FieldElem at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
  FieldElem& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
};

FieldMatrix make_matrix(const GaloisField& f, std::size_t n, const std::vector<int>& codes);
FieldMatrix scale(const GaloisField& f, const FieldMatrix& m, FieldElem s);
FieldElem determinant(const GaloisField& f, const FieldMatrix& m);  // n <= 3

ProjPoint normalize(const GaloisField& f, std::vector<FieldElem> v);

/// The points of P^{dim-1}(GF(q)) in lexicographic order of their normalized
/// coordinate codes; a point's index in this list is its permutation label.
class ProjectiveSpace {
 public:
  ProjectiveSpace(const GaloisField& field, std::size_t coords);

  const GaloisField& field() const noexcept { return field_; }
  std::size_t coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return points_.size(); }
  const ProjPoint& point(std::size_t i) const { return points_[i]; }
  std::size_t index_of(const ProjPoint& p) const;

  // Normalized image of `pt` under `m`; throws InputError if m is singular.
  ProjPoint apply(const FieldMatrix& m, const ProjPoint& pt) const;
  // Permutation induced on the ordered point list.
  Permutation induced_permutation(const FieldMatrix& m) const;

 private:
  GaloisField field_;
  std::size_t coords_;
  std::vector<ProjPoint> points_;
};

}  // namespace ccg
