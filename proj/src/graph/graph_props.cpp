#include "ccg/graph_props.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "ccg/error.hpp"

namespace ccg {

SimpleGraph::SimpleGraph(std::size_t n) : n_(n), adj_(n * n, 0) {
  labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
}

SimpleGraph::SimpleGraph(std::vector<std::string> labels)
    : n_(labels.size()), labels_(std::move(labels)), adj_(n_ * n_, 0) {}

std::size_t SimpleGraph::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown vertex " + std::string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InputError("vertex out of range");
  if (u == v) throw InputError("loops are not allowed");
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
}

void SimpleGraph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InputError("vertex out of range");
  adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
}

std::size_t SimpleGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count(adj_.begin() + v * n_, adj_.begin() + (v + 1) * n_, 1));
}

std::size_t SimpleGraph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph c(labels_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!adjacent(i, j)) c.add_edge(i, j);
    }
  }
  return c;
}

SimpleGraph SimpleGraph::induced(const std::vector<std::size_t>& vs) const {
  std::vector<std::string> labels;
  for (auto v : vs) labels.push_back(labels_.at(v));
  SimpleGraph h(std::move(labels));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (adjacent(vs[i], vs[j])) h.add_edge(i, j);
    }
  }
  return h;
}

std::string_view pattern_name(PatternKind k) noexcept {
  switch (k) {
    case PatternKind::P4: return "P4";
    case PatternKind::C4: return "C4";
    case PatternKind::C5: return "C5";
    case PatternKind::Cn: return "Cn";
    case PatternKind::TwoK2: return "2K2";
    case PatternKind::Claw: return "CLAW";
  }
  return "?";
}

namespace {

// Edge list of a fixed-size pattern over local positions.
std::vector<std::pair<std::size_t, std::size_t>> pattern_edges(PatternKind k, std::size_t len) {
  switch (k) {
    case PatternKind::P4: return {{0, 1}, {1, 2}, {2, 3}};
    case PatternKind::TwoK2: return {{0, 1}, {2, 3}};
    case PatternKind::Claw: return {{0, 1}, {0, 2}, {0, 3}};
    case PatternKind::C4:
    case PatternKind::C5:
    case PatternKind::Cn: {
      std::vector<std::pair<std::size_t, std::size_t>> e;
      for (std::size_t i = 0; i < len; ++i) e.emplace_back(i, (i + 1) % len);
      return e;
    }
  }
  return {};
}

std::size_t pattern_size(PatternKind k) {
  switch (k) {
    case PatternKind::C5: return 5;
    case PatternKind::Cn: return 0;
    default: return 4;
  }
}

bool realizes(const SimpleGraph& g, PatternKind kind, const std::vector<std::size_t>& vs) {
  const std::size_t len = vs.size();
  const auto edges = pattern_edges(kind, len);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool want = std::any_of(edges.begin(), edges.end(), [&](auto e) {
        return (e.first == i && e.second == j) || (e.first == j && e.second == i);
      });
      if (g.adjacent(vs[i], vs[j]) != want) return false;
    }
  }
  return true;
}

std::optional<Witness> scan_subsets(const SimpleGraph& g, PatternKind kind, std::size_t k) {
  const std::size_t n = g.size();
  if (n < k) return std::nullopt;
  const std::size_t want_edges = pattern_edges(kind, k).size();
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) e += g.adjacent(idx[i], idx[j]);
    }
    if (e == want_edges) {
      std::vector<std::size_t> order = idx;
      do {
        if (realizes(g, kind, order)) return Witness{kind, order};
      } while (std::next_permutation(order.begin(), order.end()));
    }
    // Next k-subset in lexicographic order.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Rotation/reflection of a cycle that is lexicographically least.
std::vector<std::size_t> canonical_cycle(std::vector<std::size_t> c) {
  std::vector<std::size_t> best = c;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < c.size(); ++r) {
      std::rotate(c.begin(), c.begin() + 1, c.end());
      best = std::min(best, c);
    }
    std::reverse(c.begin(), c.end());
  }
  return best;
}

// Shortest chordless cycle of length >= 4: for each vertex v and non-adjacent
// neighbours u, w, a shortest u-w path avoiding the rest of N[v] closes one.
std::optional<Witness> shortest_hole(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!g.adjacent(v, u)) continue;
      for (std::size_t w = u + 1; w < n; ++w) {
        if (!g.adjacent(v, w) || g.adjacent(u, w)) continue;
        std::vector<std::size_t> parent(n, SIZE_MAX);
        std::vector<bool> blocked(n, false);
        blocked[v] = true;
        for (std::size_t x = 0; x < n; ++x) {
          if (g.adjacent(v, x) && x != u && x != w) blocked[x] = true;
        }
        std::deque<std::size_t> q{u};
        parent[u] = u;
        while (!q.empty() && parent[w] == SIZE_MAX) {
          const std::size_t x = q.front();
          q.pop_front();
          for (std::size_t y = 0; y < n; ++y) {
            if (g.adjacent(x, y) && !blocked[y] && parent[y] == SIZE_MAX) {
              parent[y] = x;
              q.push_back(y);
            }
          }
        }
        if (parent[w] == SIZE_MAX) continue;
        std::vector<std::size_t> cyc{v};
        std::vector<std::size_t> path;
        for (std::size_t x = w; x != u; x = parent[x]) path.push_back(x);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        cyc.insert(cyc.end(), path.begin(), path.end());
        cyc = canonical_cycle(cyc);
        if (!best || cyc.size() < best->size() || (cyc.size() == best->size() && cyc < *best)) best = cyc;
      }
    }
  }
  if (!best) return std::nullopt;
  return Witness{PatternKind::Cn, *best};
}

}  // namespace

bool replay(const SimpleGraph& g, const Witness& w) {
  const std::size_t k = pattern_size(w.kind);
  if (k ? w.vertices.size() != k : w.vertices.size() < 4) return false;
  std::vector<std::size_t> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (!sorted.empty() && sorted.back() >= g.size()) return false;
  return realizes(g, w.kind, w.vertices);
}

std::optional<Witness> find_induced(const SimpleGraph& g, PatternKind kind) {
  if (kind == PatternKind::Cn) return shortest_hole(g);
  return scan_subsets(g, kind, pattern_size(kind));
}

bool is_cograph(const SimpleGraph& g) { return !find_induced(g, PatternKind::P4); }

bool is_split(const SimpleGraph& g) {
  return !find_induced(g, PatternKind::TwoK2) && !find_induced(g, PatternKind::C4) &&
         !find_induced(g, PatternKind::C5);
}

bool is_claw_free(const SimpleGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nb;
    for (std::size_t u = 0; u < n; ++u) {
      if (g.adjacent(v, u)) nb.push_back(u);
    }
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        for (std::size_t c = b + 1; c < nb.size(); ++c) {
          if (!g.adjacent(nb[a], nb[c]) && !g.adjacent(nb[b], nb[c])) return false;
        }
      }
    }
  }
  return true;
}

bool is_threshold(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (std::size_t left = n; left > 0; --left) {
    std::size_t pick = SIZE_MAX;
    for (std::size_t v = 0; v < n && pick == SIZE_MAX; ++v) {
      if (alive[v] && (deg[v] == 0 || deg[v] == left - 1)) pick = v;
    }
    if (pick == SIZE_MAX) return false;
    alive[pick] = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (alive[u] && g.adjacent(pick, u)) --deg[u];
    }
  }
  return true;
}

bool is_cograph_by_cotree(const SimpleGraph& g) {
  // Recursive decomposition: a cograph on >= 2 vertices is disconnected or
  // has a disconnected complement, and its parts are cographs.
  std::function<bool(const std::vector<std::size_t>&)> rec = [&](const std::vector<std::size_t>& vs) {
    if (vs.size() <= 1) return true;
    for (bool comp : {false, true}) {
      std::vector<int> part(vs.size(), -1);
      int parts = 0;
      for (std::size_t s = 0; s < vs.size(); ++s) {
        if (part[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        part[s] = parts;
        while (!stack.empty()) {
          const std::size_t x = stack.back();
          stack.pop_back();
          for (std::size_t y = 0; y < vs.size(); ++y) {
            if (part[y] < 0 && y != x && g.adjacent(vs[x], vs[y]) != comp) {
              part[y] = parts;
              stack.push_back(y);
            }
          }
        }
        ++parts;
      }
      if (parts > 1) {
        for (int p = 0; p < parts; ++p) {
          std::vector<std::size_t> sub;
          for (std::size_t s = 0; s < vs.size(); ++s) {
            if (part[s] == p) sub.push_back(vs[s]);
          }
          if (!rec(sub)) return false;
        }
        return true;
      }
    }
    return false;
  };
  std::vector<std::size_t> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return rec(all);
}

bool is_chordal_by_peo(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> weight(n, 0), pos(n, SIZE_MAX), order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = SIZE_MAX;
    for (std::size_t v = 0; v < n; ++v) {
      if (pos[v] == SIZE_MAX && (pick == SIZE_MAX || weight[v] > weight[pick])) pick = v;
    }
    pos[pick] = step;
    order.push_back(pick);
    for (std::size_t u = 0; u < n; ++u) {
      if (pos[u] == SIZE_MAX && g.adjacent(pick, u)) ++weight[u];
    }
  }
  // The reverse of the visit order is a PEO iff, for every v, its earlier
  // neighbours other than the latest one are adjacent to that latest one.
  for (std::size_t v : order) {
    std::vector<std::size_t> earlier;
    for (std::size_t u = 0; u < n; ++u) {
      if (g.adjacent(v, u) && pos[u] < pos[v]) earlier.push_back(u);
    }
    if (earlier.size() < 2) continue;
    const std::size_t parent =
        *std::max_element(earlier.begin(), earlier.end(), [&](auto a, auto b) { return pos[a] < pos[b]; });
    for (std::size_t u : earlier) {
      if (u != parent && !g.adjacent(u, parent)) return false;
    }
  }
  return true;
}

bool is_chordal(const SimpleGraph& g) { return is_chordal_by_peo(g); }

bool is_chordal_by_cycles(const SimpleGraph& g) {
  // Exhaustive: extend induced paths from their least vertex s.
  const std::size_t n = g.size();
  std::vector<std::size_t> path;
  std::function<bool(std::size_t)> extend = [&](std::size_t s) {
    const std::size_t last = path.back();
    for (std::size_t x = s + 1; x < n; ++x) {
      if (!g.adjacent(last, x) || std::find(path.begin(), path.end(), x) != path.end()) continue;
      bool ok = true;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.adjacent(path[i], x)) ok = false;
      }
      if (!ok) continue;
      if (path.size() >= 2 && g.adjacent(s, x)) {
        if (path.size() >= 3) return true;  // closes a hole of length >= 4
        continue;
      }
      path.push_back(x);
      if (extend(s)) return true;
      path.pop_back();
    }
    return false;
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    if (extend(s)) return false;
  }
  return true;
}

bool is_split_by_degrees(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> d(n);
  for (std::size_t v = 0; v < n; ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  std::size_t m = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (d[i - 1] + 1 >= i) m = i;
  }
  std::size_t lhs = 0, rhs = m * (m > 0 ? m - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) (i < m ? lhs : rhs) += d[i];
  return lhs == rhs;
}

ShapeExpr ShapeExpr::parse(std::string_view text) {
  ShapeExpr e;
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty() || s == "0") return e;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t plus = std::min(s.find('+', start), s.size());
    const std::string_view term(s.data() + start, plus - start);
    const auto k = term.find('K');
    if (k == std::string_view::npos || k + 1 >= term.size()) {
      throw InputError("malformed shape term '" + std::string(term) + "'");
    }
    std::size_t mult = 1, size = 0;
    auto num = [&](std::string_view t, std::size_t& out) {
      auto r = std::from_chars(t.data(), t.data() + t.size(), out);
      if (r.ec != std::errc{} || r.ptr != t.data() + t.size()) {
        throw InputError("malformed shape term '" + std::string(term) + "'");
      }
    };
    if (k) num(term.substr(0, k), mult);
    num(term.substr(k + 1), size);
    if (size == 0 || mult == 0) throw InputError("shape sizes must be >= 1");
    e.sizes.insert(e.sizes.end(), mult, size);
    start = plus + 1;
  }
  std::sort(e.sizes.begin(), e.sizes.end(), std::greater<>());
  return e;
}

std::string ShapeExpr::to_string() const {
  if (sizes.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < sizes.size();) {
    std::size_t j = i;
    while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
    if (!out.empty()) out += " + ";
    if (j - i > 1) out += std::to_string(j - i);
    out += "K" + std::to_string(sizes[i]);
    i = j;
  }
  return out;
}

std::optional<ShapeExpr> clique_union_shape(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  ShapeExpr e;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!seen[y] && g.adjacent(comp[i], y)) {
          seen[y] = true;
          comp.push_back(y);
        }
      }
    }
    for (std::size_t a = 0; a < comp.size(); ++a) {
      for (std::size_t b = a + 1; b < comp.size(); ++b) {
        if (!g.adjacent(comp[a], comp[b])) return std::nullopt;
      }
    }
    e.sizes.push_back(comp.size());
  }
  std::sort(e.sizes.begin(), e.sizes.end(), std::greater<>());
  return e;
}

bool match_shape(const SimpleGraph& g, const ShapeExpr& expr) {
  const auto shape = clique_union_shape(g);
  return shape && *shape == expr;
}

bool match_shape(const SimpleGraph& g, std::string_view expr) { return match_shape(g, ShapeExpr::parse(expr)); }

std::optional<std::size_t> distance(const SimpleGraph& g, std::size_t u, std::size_t v) {
  const std::size_t n = g.size();
  if (u >= n || v >= n) throw InputError("vertex out of range");
  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::deque<std::size_t> q{u};
  dist[u] = 0;
  while (!q.empty()) {
    const std::size_t x = q.front();
    q.pop_front();
    if (x == v) return dist[x];
    for (std::size_t y = 0; y < n; ++y) {
      if (g.adjacent(x, y) && dist[y] == SIZE_MAX) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> distance(const SimpleGraph& g, std::string_view u, std::string_view v) {
  return distance(g, g.index_of(u), g.index_of(v));
}

PropertyReport classify(const SimpleGraph& g, std::string graph_id) {
  PropertyReport r;
  r.graph_id = std::move(graph_id);
  auto record = [&](PatternKind k) {
    auto w = find_induced(g, k);
    if (!w) return false;
    std::vector<std::string> labels;
    for (auto v : w->vertices) labels.push_back(g.label(v));
    r.witnesses[std::string(pattern_name(k))] = std::move(labels);
    return true;
  };
  r.cograph = !record(PatternKind::P4);
  r.chordal = is_chordal(g);
  const bool c4 = record(PatternKind::C4);
  const bool c5 = record(PatternKind::C5);
  if (!r.chordal && !c4 && !c5) record(PatternKind::Cn);
  const bool two_k2 = record(PatternKind::TwoK2);
  r.split = !(c4 || c5 || two_k2);
  r.threshold = is_threshold(g);
  r.claw_free = !record(PatternKind::Claw);
  return r;
}

std::string to_json(const PropertyReport& r, int indent) {
  nlohmann::ordered_json j;
  j["graph"] = r.graph_id;
  j["cograph"] = r.cograph;
  j["chordal"] = r.chordal;
  j["split"] = r.split;
  j["threshold"] = r.threshold;
  j["claw_free"] = r.claw_free;
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.witnesses) w[k] = v;
  j["witnesses"] = w;
  return j.dump(indent);
}

}  // namespace ccg
