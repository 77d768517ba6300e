#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "ccg/group.hpp"

namespace ccg {

enum class Family {
  cyclic,
  abelian,
  dihedral,
  dicyclic,
  generalized_dihedral,
  symmetric,
  alternating,
  psl2,
  psl3_3,
  pq,          // C_p : C_q, q | p - 1
  heisenberg,  // upper unitriangular 3x3 over Z_p
  fixture,
};

struct GroupSpec {
  Family family = Family::cyclic;
  std::vector<std::uint64_t> params;  // n, q, (p, q), or invariant factors
  std::string fixture;                // fixture name when family == fixture

  static GroupSpec of(Family f, std::vector<std::uint64_t> params) { return {f, std::move(params), {}}; }
  static GroupSpec named(std::string name) { return {Family::fixture, {}, std::move(name)}; }

  // Short display name such as "D10", "T12", "Sym(5)", "PSL(2,8)", "M11".
  std::string display_name() const;
};

// Throws InputError on invalid parameters, IntegrityError on fixture problems
// or when a matrix-group construction misses its expected order.
FiniteGroup build(const GroupSpec& spec, std::size_t cap = kDefaultCap);

FiniteGroup make_generalized_dihedral(const std::vector<std::uint64_t>& invariant_factors,
                                      std::size_t cap = kDefaultCap);

/// Parsed fixture file.
///
///   # comment
///   name M11
///   degree 11
///   order 7920
///   classes 10                 (optional: total class count)
///   gen (1,2,3,4,5,6,7,8,9,10,11)
///   gen (3,7,11,8)(4,10,5,6)
///   label (1,2)(3,4) 2A        (optional, repeatable)
///
/// Cycle notation is 1-based; blank lines and '#' comments are ignored.
struct FixtureRecord {
  std::string name;
  std::size_t degree = 0;
  std::size_t order = 0;
  std::size_t class_count = 0;  // 0 when not declared
  std::vector<std::string> generators;
  std::vector<std::pair<std::string, std::string>> labels;  // cycles -> label
};

FixtureRecord parse_fixture(const std::string& text);

// Directory holding <name>.fixture files: $CCG_FIXTURE_DIR if set, otherwise
// the build-time default.
std::filesystem::path fixture_dir();
void set_fixture_dir(std::filesystem::path dir);

// Loads, enumerates, checks the census, and applies the label table.
FiniteGroup load_fixture(const std::string& name, std::size_t cap = kDefaultCap);
FiniteGroup build_fixture(const FixtureRecord& rec, std::size_t cap = kDefaultCap);

}  // namespace ccg
