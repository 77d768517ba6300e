#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccg/permutation.hpp"

namespace ccg {

// Index of an element in FiniteGroup's canonical order: elements are sorted
// lexicographically by image sequence, so the identity is always 0.
using ElemId = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 1'000'000;

struct ConjClass {
  std::string label;  // e.g. "8A"
  ElemId rep = 0;     // lexicographically least member
  std::uint64_t elem_order = 1;
  std::size_t size = 0;
  std::vector<ElemId> members;  // ascending
};

class FiniteGroup;

/// A closed subgroup <seeds> of a FiniteGroup.
struct SubgroupHandle {
  std::vector<ElemId> seeds;
  std::vector<ElemId> elements;  // closure in discovery order; empty on overflow
  std::size_t order = 0;
  bool complete = false;     // false when the closure exceeded the cap
  bool whole_group = false;  // true when the closure is the ambient group
};

/// Fully enumerated permutation group: elements, center, conjugacy classes.
/// Immutable after enumerate_group returns; lazily filled caches are guarded.
class FiniteGroup {
 public:
  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;
  FiniteGroup(FiniteGroup&&) noexcept;
  FiniteGroup& operator=(FiniteGroup&&) noexcept;
  ~FiniteGroup();

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return order_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<ElemId>& generator_ids() const noexcept { return generator_ids_; }

  std::span<const Point> images(ElemId e) const {
    return {elements_.data() + static_cast<std::size_t>(e) * degree_, degree_};
  }
  Permutation element(ElemId e) const;
  std::optional<ElemId> find(std::span<const Point> images) const;
  std::optional<ElemId> find(const Permutation& p) const;
  // Throws InputError when p is not in the group.
  ElemId id_of(const Permutation& p) const;

  ElemId identity() const noexcept { return 0; }
  ElemId mul(ElemId a, ElemId b) const;  // a * b, i.e. apply b first
  ElemId inv(ElemId a) const { return inverse_[a]; }
  ElemId conj(ElemId x, ElemId g) const { return mul(mul(inv(g), x), g); }  // x^g
  ElemId power(ElemId a, std::uint64_t k) const;
  ElemId commutator(ElemId x, ElemId y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  bool commute(ElemId a, ElemId b) const;
  std::uint64_t elem_order(ElemId e) const { return orders_[e]; }

  const std::vector<ConjClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(ElemId e) const { return class_of_[e]; }
  const ConjClass& class_by_label(const std::string& label) const;
  std::optional<std::size_t> class_index(const std::string& label) const;
  const std::vector<ElemId>& center() const noexcept { return center_; }

  // Replaces class labels: maps a member of a class to its new label. Throws
  // IntegrityError if the result has duplicate labels.
  void relabel(const std::vector<std::pair<Permutation, std::string>>& table);

  // Centralizer of a class representative, cached per class (ascending ids).
  const std::vector<ElemId>& class_centralizer(std::size_t class_idx) const;

  // Group-level verdicts, computed once.
  bool group_is_solvable() const;
  bool group_is_nilpotent() const;
  bool group_is_abelian() const;

  // Row-major element storage, degree() bytes per element.
  const Point* raw_elements() const noexcept { return elements_.data(); }

 private:
  FiniteGroup() = default;
  friend FiniteGroup enumerate_group(const std::vector<Permutation>&, std::size_t, std::string);

  void build_index();
  void compute_classes();

  std::string name_;
  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElemId> generator_ids_;
  std::vector<Point> elements_;
  std::vector<std::uint32_t> table_;  // open addressing, stores id + 1
  std::uint64_t table_mask_ = 0;
  std::vector<ElemId> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<ElemId> center_;

  struct Lazy;
  std::unique_ptr<Lazy> lazy_;
};

// Breadth-first product closure of the generators. Throws CapacityError when
// the closure exceeds `cap` elements and InputError on mixed degrees.
FiniteGroup enumerate_group(const std::vector<Permutation>& generators,
                            std::size_t cap = kDefaultCap, std::string name = {});

std::uint64_t element_order(const Permutation& g);

// Elements commuting with x, ascending. Throws InputError if x is not in G.
std::vector<ElemId> centralizer(const FiniteGroup& g, const Permutation& x);
std::vector<ElemId> centralizer(const FiniteGroup& g, ElemId x);

// <seeds>; if the closure grows past `cap` the handle reports overflow.
// A closure larger than |G|/2 is the whole group by Lagrange and is reported
// as such without enumerating the rest. cap = 0 means |G|.
SubgroupHandle subgroup_closure(const FiniteGroup& g, std::span<const ElemId> seeds,
                                std::size_t cap = 0);

bool is_abelian(const FiniteGroup& g, const SubgroupHandle& h);
bool is_nilpotent(const FiniteGroup& g, const SubgroupHandle& h);
bool is_solvable(const FiniteGroup& g, const SubgroupHandle& h);
// Derived series only, no prime-count fast path (used to cross-check it).
bool is_solvable_by_derived_series(const FiniteGroup& g, const SubgroupHandle& h);
// Brute-force reference: every Sylow subgroup of H is normal in H.
bool all_sylows_normal(const FiniteGroup& g, const SubgroupHandle& h);

bool is_eppo(const FiniteGroup& g);

// p+1 pairwise non-commuting elements of a Sylow p-subgroup lying in distinct
// G-classes, or nullopt when the Sylow p-subgroups are abelian. Throws
// InputError when p does not divide |G|.
std::optional<std::vector<ElemId>> find_sylow_witnesses(const FiniteGroup& g, std::uint64_t p);

// Elements of one Sylow p-subgroup of G (ascending).
std::vector<ElemId> sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

/// Certificate for <a, b> = G: sifts pseudo-random elements of <a, b> into a
/// partial stabilizer chain whose basic orbit lengths multiply to a lower
/// bound on |<a, b>|. Returns true only when that bound reaches |G|, which
/// proves generation; false means "not proven" and callers fall back to the
/// exact closure.
bool proves_generation(const FiniteGroup& g, ElemId a, ElemId b);

/// Memoized verdicts for two-generated subgroups <a, b>, keyed by the
/// unordered pair. Safe for concurrent use; writes are idempotent.
class PairPredicates {
 public:
  explicit PairPredicates(const FiniteGroup& g) : g_(g) {}

  struct Verdict {
    bool solvable = false;
    std::size_t order = 0;  // |<a, b>|
  };

  // Solvability of <a, b>, via the generation certificate, closure, and the
  // group-level memo when the closure is all of G.
  Verdict solvable(ElemId a, ElemId b);

  // Nilpotency of <a, b> decided through the prime-power parts: <a, b> is
  // nilpotent iff a_p commutes with b_q for all primes p != q and every
  // <a_p, b_p> is a p-group. Returns the order of <a, b> when nilpotent.
  std::optional<std::size_t> nilpotent(ElemId a, ElemId b);

  std::size_t cache_size() const;

 private:
  const FiniteGroup& g_;
  mutable std::mutex mu_;
  std::map<std::pair<ElemId, ElemId>, Verdict> solv_;
  std::map<std::pair<ElemId, ElemId>, std::optional<std::size_t>> nil_;
};

}  // namespace ccg
