#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccg {

/// Simple undirected graph on labeled vertices 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n);
  explicit SimpleGraph(std::vector<std::string> labels);

  std::size_t size() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  // Throws InputError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  // Edges (i, j), i < j, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  SimpleGraph complement() const;
  SimpleGraph induced(const std::vector<std::size_t>& vertices) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> adj_;
};

enum class PatternKind { P4, C4, C5, Cn, TwoK2, Claw };

std::string_view pattern_name(PatternKind k) noexcept;  // "P4", ..., "2K2", "CLAW"

/// Vertex list realizing an induced pattern:
///   P4: path v0-v1-v2-v3; C4/C5/Cn: cycle in order; 2K2: edges v0v1, v2v3;
///   CLAW: center v0, pendants v1..v3.
struct Witness {
  PatternKind kind;
  std::vector<std::size_t> vertices;
};

// True iff the vertices induce exactly the pattern's edges and non-edges.
bool replay(const SimpleGraph& g, const Witness& w);

// Lexicographically least vertex subset inducing the pattern, with the
// least realizing order of that subset. Cn looks for any chordless cycle of
// length >= 4, shortest first.
std::optional<Witness> find_induced(const SimpleGraph& g, PatternKind kind);

bool is_cograph(const SimpleGraph& g);
bool is_chordal(const SimpleGraph& g);  // maximum cardinality search + PEO check
bool is_split(const SimpleGraph& g);
bool is_threshold(const SimpleGraph& g);  // peeling isolated/dominating vertices
bool is_claw_free(const SimpleGraph& g);

// Characterization-based counterparts used to cross-check the scans.
bool is_cograph_by_cotree(const SimpleGraph& g);
bool is_chordal_by_peo(const SimpleGraph& g);
bool is_chordal_by_cycles(const SimpleGraph& g);
bool is_split_by_degrees(const SimpleGraph& g);

/// Multiset of clique sizes, parsed from e.g. "K4 + K2 + 2K1".
struct ShapeExpr {
  std::vector<std::size_t> sizes;  // descending

  // Throws InputError on malformed text. "" and "0" denote the empty graph.
  static ShapeExpr parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const ShapeExpr&, const ShapeExpr&) = default;
};

// Shape of g when every component is a clique.
std::optional<ShapeExpr> clique_union_shape(const SimpleGraph& g);
bool match_shape(const SimpleGraph& g, const ShapeExpr& expr);
bool match_shape(const SimpleGraph& g, std::string_view expr);

// Breadth-first distance; nullopt across components. Throws InputError on
// out-of-range or unknown vertices.
std::optional<std::size_t> distance(const SimpleGraph& g, std::size_t u, std::size_t v);
std::optional<std::size_t> distance(const SimpleGraph& g, std::string_view u, std::string_view v);

struct PropertyReport {
  std::string graph_id;
  bool cograph = true;
  bool chordal = true;
  bool split = true;
  bool threshold = true;
  bool claw_free = true;
  std::map<std::string, std::vector<std::string>> witnesses;  // kind -> vertex labels
};

PropertyReport classify(const SimpleGraph& g, std::string graph_id);
std::string to_json(const PropertyReport& r, int indent = 2);

}  // namespace ccg
