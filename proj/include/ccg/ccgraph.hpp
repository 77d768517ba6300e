#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/graph_props.hpp"
#include "ccg/group.hpp"

namespace ccg {

enum class Relation { ccc, ncc, scc, invgen };

std::string_view relation_name(Relation r) noexcept;  // "CCC", "NCC", "SCC", "INVGEN"
Relation parse_relation(std::string_view s);           // case-insensitive; throws InputError

/// Concrete elements a in X, b in Y whose subgroup satisfied the relation.
struct EdgeWitness {
  std::size_t x = 0;  // class indices into FiniteGroup::classes()
  std::size_t y = 0;
  ElemId a = 0;
  ElemId b = 0;
  std::size_t subgroup_order = 0;
  Relation predicate = Relation::ccc;
};

struct Adjacency {
  bool adjacent = false;
  std::optional<EdgeWitness> witness;
};

/// Graph on conjugacy classes. Vertices follow canonical class order.
struct ClassGraph {
  std::string group;
  Relation relation = Relation::ccc;
  std::vector<std::size_t> classes;  // class index of each vertex
  std::vector<std::uint64_t> orders;
  std::vector<std::size_t> sizes;
  SimpleGraph graph;  // labeled by class label
};

// Decides x^G ~ y^G. With want_witness, shortcuts that do not exhibit
// elements are skipped so a witness is always returned on adjacency.
// Throws InputError for a central class or X == Y.
Adjacency class_adjacent(const FiniteGroup& g, std::size_t x, std::size_t y, Relation rel,
                         PairPredicates& preds, bool want_witness = false);
Adjacency class_adjacent(const FiniteGroup& g, std::size_t x, std::size_t y, Relation rel,
                         bool want_witness = false);

// Re-checks a witness with the closure and series-based predicates.
bool replay(const FiniteGroup& g, const EdgeWitness& w);

ClassGraph build_graph(const FiniteGroup& g, Relation rel, PairPredicates& preds);
ClassGraph build_graph(const FiniteGroup& g, Relation rel);
// Vertices are all non-identity classes; X ~ Y iff <rep(X), b> = G for all b in Y.
ClassGraph build_invgen(const FiniteGroup& g);

std::string to_dot(const ClassGraph& cg);
std::string to_json(const ClassGraph& cg, int indent = 2);

// Members of class y up to conjugation by the centralizer of rep(x): the
// least member of each orbit, in canonical order.
std::vector<ElemId> centralizer_orbit_reps(const FiniteGroup& g, std::size_t x, std::size_t y);

}  // namespace ccg
