#include "ccg/ccgraph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "ccg/error.hpp"

namespace ccg {
namespace {

// Calls fn on the least member of each C(rep(x))-orbit on class y, in
// canonical order, until fn returns true. Returns whether fn stopped it.
template <class Fn>
bool for_each_orbit_rep(const FiniteGroup& g, std::size_t x, std::size_t y, Fn&& fn) {
  const auto& cent = g.class_centralizer(x);
  const auto& members = g.classes()[y].members;
  std::vector<std::uint8_t> seen(members.size(), 0);
  auto pos = [&](ElemId e) {
    return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), e) - members.begin());
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (seen[i]) continue;
    const ElemId b = members[i];
    for (ElemId c : cent) seen[pos(g.conj(b, c))] = 1;
    if (fn(b)) return true;
  }
  return false;
}

std::optional<ElemId> commuting_member(const FiniteGroup& g, std::size_t x, std::size_t y) {
  for (ElemId b : g.class_centralizer(x)) {
    if (g.class_of(b) == y) return b;
  }
  return std::nullopt;
}

std::size_t closure_order(const FiniteGroup& g, ElemId a, ElemId b) {
  const std::array<ElemId, 2> seeds{a, b};
  return subgroup_closure(g, seeds).order;
}

bool same_prime_powers(std::uint64_t m, std::uint64_t n) {
  if (!is_prime_power(m) || !is_prime_power(n)) return false;
  return factorize(m).begin()->first == factorize(n).begin()->first;
}

bool generates(const FiniteGroup& g, ElemId a, ElemId b) {
  if (proves_generation(g, a, b)) return true;
  const std::array<ElemId, 2> seeds{a, b};
  return subgroup_closure(g, seeds).whole_group;
}

ClassGraph empty_graph(const FiniteGroup& g, Relation rel, bool include_central) {
  ClassGraph cg;
  cg.group = g.name();
  cg.relation = rel;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.classes().size(); ++i) {
    const auto& c = g.classes()[i];
    const bool keep = include_central ? c.rep != g.identity() : c.size > 1;
    if (!keep) continue;
    cg.classes.push_back(i);
    cg.orders.push_back(c.elem_order);
    cg.sizes.push_back(c.size);
    labels.push_back(c.label);
  }
  cg.graph = SimpleGraph(std::move(labels));
  return cg;
}

}  // namespace

std::string_view relation_name(Relation r) noexcept {
  switch (r) {
    case Relation::ccc: return "CCC";
    case Relation::ncc: return "NCC";
    case Relation::scc: return "SCC";
    case Relation::invgen: return "INVGEN";
  }
  return "?";
}

Relation parse_relation(std::string_view s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "ccc") return Relation::ccc;
  if (t == "ncc") return Relation::ncc;
  if (t == "scc") return Relation::scc;
  if (t == "invgen" || t == "lambda") return Relation::invgen;
  throw InputError("unknown relation '" + std::string(s) + "' (expected ccc, ncc, scc or invgen)");
}

std::vector<ElemId> centralizer_orbit_reps(const FiniteGroup& g, std::size_t x, std::size_t y) {
  std::vector<ElemId> out;
  for_each_orbit_rep(g, x, y, [&](ElemId b) {
    out.push_back(b);
    return false;
  });
  return out;
}

Adjacency class_adjacent(const FiniteGroup& g, std::size_t x, std::size_t y, Relation rel,
                         PairPredicates& preds, bool want_witness) {
  const auto& cls = g.classes();
  if (x >= cls.size() || y >= cls.size()) throw InputError("class index out of range");
  if (x == y) throw InputError("adjacency needs two distinct classes");
  if (rel == Relation::invgen) {
    if (cls[x].rep == g.identity() || cls[y].rep == g.identity()) {
      throw InputError("the identity class is not a vertex");
    }
  } else if (cls[x].size == 1 || cls[y].size == 1) {
    throw InputError("central class " + (cls[x].size == 1 ? cls[x].label : cls[y].label) + " is not a vertex");
  }
  const ElemId a = cls[x].rep;
  Adjacency out;
  auto found = [&](ElemId b, std::size_t order, Relation pred) {
    out.adjacent = true;
    out.witness = EdgeWitness{x, y, a, b, order, pred};
    return out;
  };

  if (rel == Relation::invgen) {
    std::optional<ElemId> first;
    const bool broke = for_each_orbit_rep(g, x, y, [&](ElemId b) {
      if (!first) first = b;
      return !generates(g, a, b);
    });
    if (broke) return out;
    return found(*first, g.order(), Relation::invgen);
  }

  if (auto b = commuting_member(g, x, y)) return found(*b, closure_order(g, a, *b), rel);
  if (rel == Relation::ccc) return out;

  if (!want_witness && same_prime_powers(cls[x].elem_order, cls[y].elem_order)) {
    out.adjacent = true;
    return out;
  }

  std::optional<EdgeWitness> w;
  for_each_orbit_rep(g, x, y, [&](ElemId b) {
    if (rel == Relation::ncc) {
      if (auto order = preds.nilpotent(a, b)) {
        w = EdgeWitness{x, y, a, b, *order, rel};
        return true;
      }
    } else {
      const auto v = preds.solvable(a, b);
      if (v.solvable) {
        w = EdgeWitness{x, y, a, b, v.order, rel};
        return true;
      }
    }
    return false;
  });
  if (w) {
    out.adjacent = true;
    out.witness = w;
  }
  return out;
}

Adjacency class_adjacent(const FiniteGroup& g, std::size_t x, std::size_t y, Relation rel,
                         bool want_witness) {
  PairPredicates preds(g);
  return class_adjacent(g, x, y, rel, preds, want_witness);
}

bool replay(const FiniteGroup& g, const EdgeWitness& w) {
  if (w.a >= g.order() || w.b >= g.order()) return false;
  if (g.class_of(w.a) != w.x || g.class_of(w.b) != w.y) return false;
  const std::array<ElemId, 2> seeds{w.a, w.b};
  const SubgroupHandle h = subgroup_closure(g, seeds);
  if (h.order != w.subgroup_order) return false;
  switch (w.predicate) {
    case Relation::ccc: return is_abelian(g, h);
    case Relation::ncc: return is_nilpotent(g, h);
    case Relation::scc: return is_solvable_by_derived_series(g, h);
    case Relation::invgen: return h.whole_group;
  }
  return false;
}

ClassGraph build_graph(const FiniteGroup& g, Relation rel, PairPredicates& preds) {
  if (rel == Relation::invgen) return build_invgen(g);
  ClassGraph cg = empty_graph(g, rel, false);
  const std::size_t n = cg.classes.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (class_adjacent(g, cg.classes[i], cg.classes[j], rel, preds).adjacent) cg.graph.add_edge(i, j);
    }
  }
  return cg;
}

ClassGraph build_graph(const FiniteGroup& g, Relation rel) {
  PairPredicates preds(g);
  return build_graph(g, rel, preds);
}

ClassGraph build_invgen(const FiniteGroup& g) {
  ClassGraph cg = empty_graph(g, Relation::invgen, true);
  PairPredicates preds(g);
  const std::size_t n = cg.classes.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (class_adjacent(g, cg.classes[i], cg.classes[j], Relation::invgen, preds).adjacent) {
        cg.graph.add_edge(i, j);
      }
    }
  }
  return cg;
}

std::string to_dot(const ClassGraph& cg) {
  std::ostringstream out;
  out << "graph \"" << cg.group << "_" << relation_name(cg.relation) << "\" {\n";
  for (std::size_t i = 0; i < cg.graph.size(); ++i) {
    out << "  v" << i << " [label=\"" << cg.graph.label(i) << "\"];\n";
  }
  for (const auto& [i, j] : cg.graph.edges()) out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const ClassGraph& cg, int indent) {
  nlohmann::ordered_json j;
  j["group"] = cg.group;
  j["relation"] = relation_name(cg.relation);
  auto vs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cg.graph.size(); ++i) {
    nlohmann::ordered_json v;
    v["label"] = cg.graph.label(i);
    v["order"] = cg.orders[i];
    v["size"] = cg.sizes[i];
    vs.push_back(v);
  }
  j["vertices"] = vs;
  auto es = nlohmann::ordered_json::array();
  for (const auto& [a, b] : cg.graph.edges()) es.push_back({a, b});
  j["edges"] = es;
  return j.dump(indent);
}

}  // namespace ccg
