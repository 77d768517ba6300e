#include "ccg/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string_view>
#include <tuple>
#include <unordered_map>

#include "ccg/error.hpp"
#include "ccg/kernels.hpp"

namespace ccg {
namespace {

using Buffer = std::array<Point, kMaxDegree>;

std::uint64_t hash_bytes(const Point* p, std::size_t n) {
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(p), n));
}

// Growable open-addressing index over a row-major byte array.
class RowIndex {
 public:
  explicit RowIndex(std::size_t n) : n_(n) { rehash(1024); }

  // Returns the id of the row equal to `row`, or inserts `row` as `next_id`.
  std::pair<std::uint32_t, bool> insert(std::vector<Point>& rows, const Point* row) {
    if ((count_ + 1) * 2 > table_.size()) rehash(table_.size() * 2, &rows);
    std::uint64_t h = hash_bytes(row, n_) & mask_;
    while (true) {
      const std::uint32_t slot = table_[h];
      if (slot == 0) break;
      if (std::equal(row, row + n_, rows.data() + std::size_t(slot - 1) * n_)) return {slot - 1, false};
      h = (h + 1) & mask_;
    }
    const auto id = static_cast<std::uint32_t>(count_++);
    rows.insert(rows.end(), row, row + n_);
    table_[h] = id + 1;
    return {id, true};
  }

 private:
  void rehash(std::size_t size, const std::vector<Point>* rows = nullptr) {
    table_.assign(size, 0);
    mask_ = size - 1;
    if (!rows) return;
    for (std::size_t id = 0; id < count_; ++id) {
      std::uint64_t h = hash_bytes(rows->data() + id * n_, n_) & mask_;
      while (table_[h]) h = (h + 1) & mask_;
      table_[h] = static_cast<std::uint32_t>(id + 1);
    }
  }

  std::size_t n_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> table_;
  std::uint64_t mask_ = 0;
};

std::uint64_t order_of_images(const Point* p, std::size_t n) {
  std::array<bool, kMaxDegree> seen{};
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string letters(std::size_t k) {
  std::string s;
  ++k;
  while (k) {
    --k;
    s.insert(s.begin(), static_cast<char>('A' + k % 26));
    k /= 26;
  }
  return s;
}

// Per-thread visited marks for closures, reset by bumping a generation.
struct Marks {
  const void* owner = nullptr;
  std::vector<std::uint32_t> stamp;
  std::uint32_t gen = 0;

  void begin(const FiniteGroup& g) {
    if (owner != &g || stamp.size() != g.order()) {
      owner = &g;
      stamp.assign(g.order(), 0);
      gen = 0;
    }
    if (++gen == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      gen = 1;
    }
  }
  bool test_and_set(ElemId e) {
    if (stamp[e] == gen) return false;
    stamp[e] = gen;
    return true;
  }
};

thread_local Marks t_marks;

std::uint64_t prime_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

// A closed subgroup with a membership bitmap, used by the series routines.
struct Closed {
  std::vector<ElemId> gens;
  std::vector<ElemId> elems;
  std::vector<std::uint8_t> in;
};

Closed close(const FiniteGroup& g, std::vector<ElemId> gens) {
  Closed c;
  c.gens = std::move(gens);
  SubgroupHandle h = subgroup_closure(g, c.gens);
  c.elems = std::move(h.elements);
  c.in.assign(g.order(), 0);
  for (ElemId e : c.elems) c.in[e] = 1;
  return c;
}

// Normal closure in <hgens> of <seeds>.
Closed normal_closure(const FiniteGroup& g, const std::vector<ElemId>& hgens,
                      std::vector<ElemId> seeds) {
  Closed n = close(g, std::move(seeds));
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < n.gens.size() && !grew; ++i) {
      for (ElemId x : hgens) {
        const ElemId c = g.conj(n.gens[i], x);
        if (!n.in[c]) {
          auto gens = n.gens;
          gens.push_back(c);
          n = close(g, std::move(gens));
          grew = true;
          break;
        }
      }
    }
  }
  return n;
}

// [<hgens>, <kgens>] for <kgens> normal in <hgens>.
Closed commutator_subgroup(const FiniteGroup& g, const std::vector<ElemId>& hgens,
                           const std::vector<ElemId>& kgens) {
  std::vector<ElemId> seeds;
  for (ElemId x : hgens) {
    for (ElemId y : kgens) {
      const ElemId c = g.commutator(x, y);
      if (c != g.identity() && std::find(seeds.begin(), seeds.end(), c) == seeds.end()) {
        seeds.push_back(c);
      }
    }
  }
  return normal_closure(g, hgens, std::move(seeds));
}

std::vector<ElemId> nontrivial(const FiniteGroup& g, std::span<const ElemId> s) {
  std::vector<ElemId> out;
  for (ElemId e : s) {
    if (e != g.identity() && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

bool lower_central_series_trivial(const FiniteGroup& g, const std::vector<ElemId>& hgens,
                                  std::size_t order) {
  std::vector<ElemId> gamma = hgens;
  std::size_t prev = order;
  while (true) {
    Closed next = commutator_subgroup(g, hgens, gamma);
    if (next.elems.size() <= 1) return true;
    if (next.elems.size() == prev) return false;
    prev = next.elems.size();
    gamma = std::move(next.gens);
  }
}

bool derived_series_trivial(const FiniteGroup& g, const std::vector<ElemId>& hgens,
                            std::size_t order) {
  std::vector<ElemId> d = hgens;
  std::size_t prev = order;
  while (true) {
    Closed next = commutator_subgroup(g, d, d);
    if (next.elems.size() <= 1) return true;
    if (next.elems.size() == prev) return false;
    prev = next.elems.size();
    d = std::move(next.gens);
  }
}

}  // namespace

struct FiniteGroup::Lazy {
  std::mutex mu;
  std::unordered_map<std::size_t, std::vector<ElemId>> centralizers;
  std::optional<bool> solvable;
  std::optional<bool> nilpotent;
  std::optional<bool> abelian;
};

FiniteGroup::FiniteGroup(FiniteGroup&&) noexcept = default;
FiniteGroup& FiniteGroup::operator=(FiniteGroup&&) noexcept = default;
FiniteGroup::~FiniteGroup() = default;

Permutation FiniteGroup::element(ElemId e) const {
  auto s = images(e);
  return Permutation(std::vector<Point>(s.begin(), s.end()));
}

std::optional<ElemId> FiniteGroup::find(std::span<const Point> img) const {
  if (img.size() != degree_ || table_.empty()) return std::nullopt;
  std::uint64_t h = hash_bytes(img.data(), degree_) & table_mask_;
  while (true) {
    const std::uint32_t slot = table_[h];
    if (slot == 0) return std::nullopt;
    if (std::equal(img.begin(), img.end(), elements_.data() + std::size_t(slot - 1) * degree_)) {
      return slot - 1;
    }
    h = (h + 1) & table_mask_;
  }
}

std::optional<ElemId> FiniteGroup::find(const Permutation& p) const { return find(p.images()); }

ElemId FiniteGroup::id_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw InputError("permutation " + p.to_string() + " is not an element of the group");
  return *id;
}

ElemId FiniteGroup::mul(ElemId a, ElemId b) const {
  Buffer buf;
  kernels::compose(buf.data(), images(a).data(), images(b).data(), degree_);
  auto id = find(std::span<const Point>(buf.data(), degree_));
  if (!id) throw IntegrityError("group not closed under composition");
  return *id;
}

ElemId FiniteGroup::power(ElemId a, std::uint64_t k) const {
  k %= orders_[a];
  ElemId r = identity();
  ElemId base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

bool FiniteGroup::commute(ElemId a, ElemId b) const {
  return kernels::commutes(images(a).data(), images(b).data(), degree_);
}

const ConjClass& FiniteGroup::class_by_label(const std::string& label) const {
  auto idx = class_index(label);
  if (!idx) throw InputError("no conjugacy class labeled " + label + " in " + name_);
  return classes_[*idx];
}

std::optional<std::size_t> FiniteGroup::class_index(const std::string& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].label == label) return i;
  }
  return std::nullopt;
}

void FiniteGroup::relabel(const std::vector<std::pair<Permutation, std::string>>& table) {
  for (const auto& [perm, label] : table) {
    auto id = find(perm);
    if (!id) throw IntegrityError("label representative " + perm.to_string() + " is not in " + name_);
    classes_[class_of_[*id]].label = label;
  }
  std::vector<std::string> labels;
  for (const auto& c : classes_) labels.push_back(c.label);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw IntegrityError("duplicate class labels after relabeling " + name_);
  }
}

const std::vector<ElemId>& FiniteGroup::class_centralizer(std::size_t class_idx) const {
  std::lock_guard lock(lazy_->mu);
  auto it = lazy_->centralizers.find(class_idx);
  if (it != lazy_->centralizers.end()) return it->second;
  return lazy_->centralizers.emplace(class_idx, centralizer(*this, classes_[class_idx].rep))
      .first->second;
}

bool FiniteGroup::group_is_abelian() const {
  {
    std::lock_guard lock(lazy_->mu);
    if (lazy_->abelian) return *lazy_->abelian;
  }
  const bool v = center_.size() == order_;
  std::lock_guard lock(lazy_->mu);
  lazy_->abelian = v;
  return v;
}

bool FiniteGroup::group_is_solvable() const {
  {
    std::lock_guard lock(lazy_->mu);
    if (lazy_->solvable) return *lazy_->solvable;
  }
  const bool v = factorize(order_).size() <= 2 ||
                 derived_series_trivial(*this, nontrivial(*this, generator_ids_), order_);
  std::lock_guard lock(lazy_->mu);
  lazy_->solvable = v;
  return v;
}

bool FiniteGroup::group_is_nilpotent() const {
  {
    std::lock_guard lock(lazy_->mu);
    if (lazy_->nilpotent) return *lazy_->nilpotent;
  }
  const bool v = lower_central_series_trivial(*this, nontrivial(*this, generator_ids_), order_);
  std::lock_guard lock(lazy_->mu);
  lazy_->nilpotent = v;
  return v;
}

void FiniteGroup::build_index() {
  std::size_t size = 1;
  while (size < 2 * order_) size <<= 1;
  table_.assign(size, 0);
  table_mask_ = size - 1;
  for (std::size_t id = 0; id < order_; ++id) {
    std::uint64_t h = hash_bytes(elements_.data() + id * degree_, degree_) & table_mask_;
    while (table_[h]) h = (h + 1) & table_mask_;
    table_[h] = static_cast<std::uint32_t>(id + 1);
  }
}

void FiniteGroup::compute_classes() {
  class_of_.assign(order_, UINT32_MAX);
  std::vector<ConjClass> raw;
  std::vector<ElemId> gens = nontrivial(*this, generator_ids_);
  for (ElemId e = 0; e < order_; ++e) {
    if (class_of_[e] != UINT32_MAX) continue;
    const auto idx = static_cast<std::uint32_t>(raw.size());
    ConjClass c;
    c.rep = e;
    c.elem_order = orders_[e];
    c.members.push_back(e);
    class_of_[e] = idx;
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      for (ElemId s : gens) {
        const ElemId y = conj(c.members[i], s);
        if (class_of_[y] == UINT32_MAX) {
          class_of_[y] = idx;
          c.members.push_back(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.size = c.members.size();
    raw.push_back(std::move(c));
  }
  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(raw[a].elem_order, raw[a].size, raw[a].rep) <
           std::tie(raw[b].elem_order, raw[b].size, raw[b].rep);
  });
  classes_.clear();
  std::vector<std::uint32_t> remap(raw.size());
  std::uint64_t last_order = 0;
  std::size_t letter = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    ConjClass& c = raw[perm[i]];
    if (c.elem_order != last_order) {
      last_order = c.elem_order;
      letter = 0;
    }
    c.label = std::to_string(c.elem_order) + letters(letter++);
    remap[perm[i]] = static_cast<std::uint32_t>(i);
    classes_.push_back(std::move(c));
  }
  for (auto& k : class_of_) k = remap[k];
  center_.clear();
  for (const auto& c : classes_) {
    if (c.size == 1) center_.push_back(c.rep);
  }
  std::sort(center_.begin(), center_.end());
}

FiniteGroup enumerate_group(const std::vector<Permutation>& generators, std::size_t cap,
                            std::string name) {
  if (generators.empty()) throw InputError("at least one generator is required");
  const std::size_t n = generators.front().degree();
  if (n == 0) throw InputError("generators must have positive degree");
  for (const auto& g : generators) {
    if (g.degree() != n) throw InputError("generators have mixed degrees");
  }

  std::vector<Point> rows;
  RowIndex index(n);
  const Permutation id(n);
  index.insert(rows, id.data());
  Buffer buf;
  for (std::size_t i = 0; i * n < rows.size(); ++i) {
    for (const auto& s : generators) {
      kernels::compose(buf.data(), rows.data() + i * n, s.data(), n);
      if (index.insert(rows, buf.data()).second && rows.size() / n > cap) {
        throw CapacityError("group closure exceeds the element cap", cap);
      }
    }
  }

  FiniteGroup g;
  g.lazy_ = std::make_unique<FiniteGroup::Lazy>();
  g.name_ = std::move(name);
  g.degree_ = n;
  g.order_ = rows.size() / n;
  g.generators_ = generators;

  // Canonical order: lexicographic on image sequences.
  std::vector<std::uint32_t> order(g.order_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(rows.begin() + a * n, rows.begin() + (a + 1) * n,
                                        rows.begin() + b * n, rows.begin() + (b + 1) * n);
  });
  g.elements_.resize(rows.size());
  for (std::size_t i = 0; i < g.order_; ++i) {
    std::copy_n(rows.begin() + order[i] * n, n, g.elements_.begin() + i * n);
  }
  rows.clear();
  rows.shrink_to_fit();
  g.build_index();

  g.inverse_.resize(g.order_);
  g.orders_.resize(g.order_);
  for (ElemId e = 0; e < g.order_; ++e) {
    const Point* p = g.elements_.data() + std::size_t(e) * n;
    for (std::size_t i = 0; i < n; ++i) buf[p[i]] = static_cast<Point>(i);
    g.inverse_[e] = *g.find(std::span<const Point>(buf.data(), n));
    g.orders_[e] = order_of_images(p, n);
  }
  for (const auto& s : generators) g.generator_ids_.push_back(*g.find(s));
  g.compute_classes();
  return g;
}

std::uint64_t element_order(const Permutation& g) { return g.order(); }

std::vector<ElemId> centralizer(const FiniteGroup& g, const Permutation& x) {
  return centralizer(g, g.id_of(x));
}

std::vector<ElemId> centralizer(const FiniteGroup& g, ElemId x) {
  if (x >= g.order()) throw InputError("element id out of range");
  std::vector<kernels::Byte> flags(g.order());
  kernels::commuting_scan(g.raw_elements(), g.order(), g.degree(), g.images(x).data(), flags.data());
  std::vector<ElemId> out;
  for (ElemId e = 0; e < g.order(); ++e) {
    if (flags[e]) out.push_back(e);
  }
  return out;
}

SubgroupHandle subgroup_closure(const FiniteGroup& g, std::span<const ElemId> seeds,
                                std::size_t cap) {
  if (cap == 0) cap = g.order();
  SubgroupHandle h;
  h.seeds.assign(seeds.begin(), seeds.end());
  for (ElemId s : seeds) {
    if (s >= g.order()) throw InputError("seed element id out of range");
  }
  std::vector<ElemId> gens = nontrivial(g, seeds);
  Marks& marks = t_marks;
  marks.begin(g);
  h.elements.push_back(g.identity());
  marks.test_and_set(g.identity());
  for (std::size_t i = 0; i < h.elements.size(); ++i) {
    for (ElemId s : gens) {
      const ElemId m = g.mul(h.elements[i], s);
      if (!marks.test_and_set(m)) continue;
      h.elements.push_back(m);
      if (2 * h.elements.size() > g.order()) {
        h.elements.resize(g.order());
        std::iota(h.elements.begin(), h.elements.end(), ElemId{0});
        h.order = g.order();
        h.complete = true;
        h.whole_group = true;
        return h;
      }
      if (h.elements.size() > cap) {
        h.elements.clear();
        h.order = 0;
        return h;
      }
    }
  }
  h.order = h.elements.size();
  h.complete = true;
  h.whole_group = h.order == g.order();
  return h;
}

bool is_abelian(const FiniteGroup& g, const SubgroupHandle& h) {
  if (!h.complete) throw InputError("predicate needs a completed closure");
  if (h.whole_group) return g.group_is_abelian();
  for (std::size_t i = 0; i < h.seeds.size(); ++i) {
    for (std::size_t j = i + 1; j < h.seeds.size(); ++j) {
      if (!g.commute(h.seeds[i], h.seeds[j])) return false;
    }
  }
  return true;
}

bool is_nilpotent(const FiniteGroup& g, const SubgroupHandle& h) {
  if (!h.complete) throw InputError("predicate needs a completed closure");
  if (h.whole_group) return g.group_is_nilpotent();
  if (is_abelian(g, h)) return true;
  return lower_central_series_trivial(g, nontrivial(g, h.seeds), h.order);
}

bool is_solvable(const FiniteGroup& g, const SubgroupHandle& h) {
  if (!h.complete) throw InputError("predicate needs a completed closure");
  if (factorize(h.order).size() <= 2) return true;
  if (h.whole_group) return g.group_is_solvable();
  return derived_series_trivial(g, nontrivial(g, h.seeds), h.order);
}

bool is_solvable_by_derived_series(const FiniteGroup& g, const SubgroupHandle& h) {
  if (!h.complete) throw InputError("predicate needs a completed closure");
  return derived_series_trivial(g, nontrivial(g, h.seeds), h.order);
}

bool all_sylows_normal(const FiniteGroup& g, const SubgroupHandle& h) {
  if (!h.complete) throw InputError("predicate needs a completed closure");
  for (const auto& [p, e] : factorize(h.order)) {
    std::size_t count = 0;
    for (ElemId x : h.elements) {
      if (prime_part(g.elem_order(x), p) == g.elem_order(x)) ++count;
    }
    if (count != prime_part(h.order, p)) return false;
  }
  return true;
}

bool is_eppo(const FiniteGroup& g) {
  for (const auto& c : g.classes()) {
    if (!is_prime_power(c.elem_order) && c.elem_order != 1) return false;
  }
  return true;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && factorize(n).size() == 1; }

std::vector<ElemId> sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  const std::uint64_t target = prime_part(g.order(), p);
  if (target == 1) throw InputError(std::to_string(p) + " does not divide the group order");
  std::vector<ElemId> gens;
  std::vector<ElemId> elems{g.identity()};
  std::vector<std::uint8_t> in(g.order(), 0);
  in[g.identity()] = 1;
  // Grow a p-subgroup by p-elements of its normalizer until it is Sylow.
  while (elems.size() < target) {
    bool grew = false;
    for (ElemId x = 1; x < g.order() && !grew; ++x) {
      if (in[x] || prime_part(g.elem_order(x), p) != g.elem_order(x)) continue;
      bool normalizes = true;
      for (ElemId s : gens) {
        if (!in[g.conj(s, x)]) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      gens.push_back(x);
      SubgroupHandle h = subgroup_closure(g, gens);
      elems = std::move(h.elements);
      for (ElemId e : elems) in[e] = 1;
      grew = true;
    }
    if (!grew) throw IntegrityError("Sylow construction stalled");
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::optional<std::vector<ElemId>> find_sylow_witnesses(const FiniteGroup& g, std::uint64_t p) {
  if (factorize(p).size() != 1 || factorize(p).begin()->second != 1) {
    throw InputError(std::to_string(p) + " is not a prime");
  }
  const std::vector<ElemId> sylow = sylow_subgroup(g, p);
  std::vector<ElemId> cand;
  for (ElemId x : sylow) {
    bool central = true;
    for (ElemId y : sylow) {
      if (!g.commute(x, y)) {
        central = false;
        break;
      }
    }
    if (!central) cand.push_back(x);
  }
  if (cand.empty()) return std::nullopt;

  // Lexicographically least clique of size p+1 in the compatibility graph.
  const std::size_t need = p + 1;
  std::vector<ElemId> chosen;
  auto compatible = [&](ElemId x) {
    for (ElemId y : chosen) {
      if (g.commute(x, y) || g.class_of(x) == g.class_of(y)) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == need) return true;
    for (std::size_t i = from; i + (need - chosen.size()) <= cand.size(); ++i) {
      if (!compatible(cand[i])) continue;
      chosen.push_back(cand[i]);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return chosen;
}

namespace {

// Partial stabilizer chain built from sifted elements.
class ChainBound {
 public:
  explicit ChainBound(std::size_t n) : n_(n) {}

  // Sifts g; on a nontrivial residue, adds it as a strong generator.
  bool sift_and_extend(std::vector<Point> g) {
    std::size_t level = 0;
    for (; level < levels_.size(); ++level) {
      const Point p = g[levels_[level].base];
      const auto& u = levels_[level].inv_transversal[p];
      if (u.empty()) break;
      std::vector<Point> r(n_);
      kernels::compose(r.data(), u.data(), g.data(), n_);
      g.swap(r);
    }
    if (level == levels_.size()) {
      std::size_t moved = 0;
      while (moved < n_ && g[moved] == moved) ++moved;
      if (moved == n_) return false;
      Level lv;
      lv.base = static_cast<Point>(moved);
      levels_.push_back(std::move(lv));
    }
    std::vector<Point> inv(n_);
    for (std::size_t i = 0; i < n_; ++i) inv[g[i]] = static_cast<Point>(i);
    gens_.push_back({level, std::move(g), std::move(inv)});
    for (std::size_t l = 0; l <= level; ++l) rebuild(l);
    return true;
  }

  std::uint64_t bound() const {
    std::uint64_t b = 1;
    for (const auto& lv : levels_) b *= lv.orbit.size();
    return b;
  }

 private:
  struct Level {
    Point base = 0;
    std::vector<Point> orbit;
    std::vector<std::vector<Point>> inv_transversal;
  };
  struct Gen {
    std::size_t level;
    std::vector<Point> fwd;
    std::vector<Point> inv;
  };

  void rebuild(std::size_t l) {
    Level& lv = levels_[l];
    lv.orbit = {lv.base};
    lv.inv_transversal.assign(n_, {});
    std::vector<Point> id(n_);
    std::iota(id.begin(), id.end(), Point{0});
    lv.inv_transversal[lv.base] = id;
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      const Point q = lv.orbit[i];
      for (const auto& s : gens_) {
        if (s.level < l) continue;
        const Point p = s.fwd[q];
        if (!lv.inv_transversal[p].empty()) continue;
        // u_p = s * u_q, so u_p^-1 = u_q^-1 * s^-1.
        std::vector<Point> u(n_);
        kernels::compose(u.data(), lv.inv_transversal[q].data(), s.inv.data(), n_);
        lv.inv_transversal[p] = std::move(u);
        lv.orbit.push_back(p);
      }
    }
  }

  std::size_t n_;
  std::vector<Level> levels_;
  std::vector<Gen> gens_;
};

}  // namespace

bool proves_generation(const FiniteGroup& g, ElemId a, ElemId b) {
  const std::size_t n = g.degree();
  auto row = [&](ElemId e) {
    auto s = g.images(e);
    return std::vector<Point>(s.begin(), s.end());
  };
  ChainBound chain(n);
  chain.sift_and_extend(row(a));
  chain.sift_and_extend(row(b));
  if (chain.bound() >= g.order()) return true;

  // Product replacement over a small pool, seeded by the pair for determinism.
  std::mt19937_64 rng((std::uint64_t{a} << 32) ^ b ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::vector<Point>> pool{row(a), row(b), row(a), row(b), row(a), row(b)};
  std::vector<Point> acc = row(g.identity());
  std::vector<Point> tmp(n);
  auto step = [&] {
    const std::size_t i = rng() % pool.size();
    std::size_t j = rng() % (pool.size() - 1);
    if (j >= i) ++j;
    if (rng() & 1) {
      kernels::compose(tmp.data(), pool[i].data(), pool[j].data(), n);
    } else {
      kernels::compose(tmp.data(), pool[j].data(), pool[i].data(), n);
    }
    pool[i].swap(tmp);
    kernels::compose(tmp.data(), acc.data(), pool[i].data(), n);
    acc.swap(tmp);
  };
  for (int i = 0; i < 20; ++i) step();
  int misses = 0;
  for (int iter = 0; iter < 400 && misses < 24; ++iter) {
    step();
    if (chain.sift_and_extend(acc)) {
      misses = 0;
      if (chain.bound() >= g.order()) return true;
    } else {
      ++misses;
    }
  }
  return false;
}

PairPredicates::Verdict PairPredicates::solvable(ElemId a, ElemId b) {
  const auto key = std::minmax(a, b);
  {
    std::lock_guard lock(mu_);
    auto it = solv_.find(key);
    if (it != solv_.end()) return it->second;
  }
  Verdict v;
  if (proves_generation(g_, a, b)) {
    v = {g_.group_is_solvable(), g_.order()};
  } else {
    const std::array<ElemId, 2> seeds{a, b};
    SubgroupHandle h = subgroup_closure(g_, seeds);
    v = {is_solvable(g_, h), h.order};
  }
  std::lock_guard lock(mu_);
  solv_.emplace(key, v);
  return v;
}

std::optional<std::size_t> PairPredicates::nilpotent(ElemId a, ElemId b) {
  const auto key = std::minmax(a, b);
  {
    std::lock_guard lock(mu_);
    auto it = nil_.find(key);
    if (it != nil_.end()) return it->second;
  }
  auto parts = [&](ElemId x) {
    std::map<std::uint64_t, ElemId> out;
    const std::uint64_t n = g_.elem_order(x);
    for (const auto& [p, e] : factorize(n)) {
      const std::uint64_t pe = prime_part(n, p);
      const std::uint64_t m = n / pe;
      // x_p = x^(m * (m^-1 mod p^e)).
      std::uint64_t minv = 1;
      while ((m % pe * minv) % pe != 1 % pe) ++minv;
      out[p] = g_.power(x, m * minv);
    }
    return out;
  };
  const auto pa = parts(a);
  const auto pb = parts(b);
  std::optional<std::size_t> result = std::size_t{1};
  for (const auto& [p, xa] : pa) {
    for (const auto& [q, xb] : pb) {
      if (p != q && !g_.commute(xa, xb)) result.reset();
    }
  }
  if (result) {
    std::map<std::uint64_t, std::size_t> orders;
    for (const auto& [p, xa] : pa) orders[p] = g_.elem_order(xa);
    for (const auto& [q, xb] : pb) {
      auto it = pa.find(q);
      if (it == pa.end()) {
        orders[q] = g_.elem_order(xb);
        continue;
      }
      const std::array<ElemId, 2> seeds{it->second, xb};
      SubgroupHandle h = subgroup_closure(g_, seeds, prime_part(g_.order(), q));
      if (!h.complete || prime_part(h.order, q) != h.order) {
        result.reset();
        break;
      }
      orders[q] = h.order;
    }
    if (result) {
      for (const auto& [p, o] : orders) *result *= o;
    }
  }
  std::lock_guard lock(mu_);
  nil_.emplace(key, result);
  return result;
}

std::size_t PairPredicates::cache_size() const {
  std::lock_guard lock(mu_);
  return solv_.size() + nil_.size();
}

}  // namespace ccg
