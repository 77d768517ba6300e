#include "ccg/verifier.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ccg/error.hpp"

namespace ccg {
namespace {

// ---------------------------------------------------------------------------
// Corpus members and the per-run cache

struct Member {
  std::string name;
  std::function<FiniteGroup(std::size_t)> make;
};

Member spec(GroupSpec s) {
  std::string name = s.display_name();
  return {std::move(name), [s](std::size_t cap) { return build(s, cap); }};
}

Member spec(Family f, std::vector<std::uint64_t> params) { return spec(GroupSpec::of(f, std::move(params))); }
Member fixture(std::string name) { return spec(GroupSpec::named(std::move(name))); }

// Direct product acting on the disjoint union of the two point sets.
Member product(GroupSpec a, GroupSpec b) {
  std::string name = a.display_name() + "x" + b.display_name();
  return {name, [a, b, name](std::size_t cap) {
            const FiniteGroup ga = build(a, cap);
            const FiniteGroup gb = build(b, cap);
            const std::size_t da = ga.degree();
            const std::size_t n = da + gb.degree();
            std::vector<Permutation> gens;
            for (const auto& p : ga.generators()) {
              std::vector<Point> img(n);
              for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i < da ? p(i) : i);
              gens.emplace_back(std::move(img));
            }
            for (const auto& p : gb.generators()) {
              std::vector<Point> img(n);
              for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i < da ? i : da + p(i - da));
              gens.emplace_back(std::move(img));
            }
            return enumerate_group(gens, cap, name);
          }};
}

class Context {
 public:
  explicit Context(std::size_t cap) : cap_(cap) {}

  const FiniteGroup& group(const Member& m) {
    auto it = groups_.find(m.name);
    if (it == groups_.end()) {
      it = groups_.emplace(m.name, std::make_unique<FiniteGroup>(m.make(cap_))).first;
    }
    return *it->second;
  }

  PairPredicates& preds(const Member& m) {
    auto it = preds_.find(m.name);
    if (it == preds_.end()) it = preds_.emplace(m.name, std::make_unique<PairPredicates>(group(m))).first;
    return *it->second;
  }

  const ClassGraph& graph(const Member& m, Relation r) {
    const auto key = std::make_pair(m.name, r);
    auto it = graphs_.find(key);
    if (it == graphs_.end()) {
      const FiniteGroup& g = group(m);
      ClassGraph cg = r == Relation::invgen ? build_invgen(g) : build_graph(g, r, preds(m));
      it = graphs_.emplace(key, std::move(cg)).first;
    }
    return it->second;
  }

  const PropertyReport& report(const Member& m, Relation r) {
    const auto key = std::make_pair(m.name, r);
    auto it = reports_.find(key);
    if (it == reports_.end()) {
      const std::string id = m.name + "_" + std::string(relation_name(r));
      it = reports_.emplace(key, classify(graph(m, r).graph, id)).first;
    }
    return it->second;
  }

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
  std::map<std::string, std::unique_ptr<FiniteGroup>> groups_;
  std::map<std::string, std::unique_ptr<PairPredicates>> preds_;
  std::map<std::pair<std::string, Relation>, ClassGraph> graphs_;
  std::map<std::pair<std::string, Relation>, PropertyReport> reports_;
};

// ---------------------------------------------------------------------------
// Recording

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Asserted and recorded items for one corpus member.
struct Outcome {
  std::vector<std::string> expected;
  std::vector<std::string> observed;
  bool ok = true;

  void expect(const std::string& key, const std::string& want, const std::string& got) {
    expected.push_back(key + "=" + want);
    observed.push_back(key + "=" + got);
    ok = ok && want == got;
  }
  void expect_flag(const std::string& key, bool want, bool got) { expect(key, yes_no(want), yes_no(got)); }
  void record(const std::string& key, const std::string& got) { observed.push_back(key + "=" + got); }
  void record_flag(const std::string& key, bool got) { record(key, yes_no(got)); }
};

using Body = std::function<void(Context&, const Member&, Outcome&)>;

void run_member(Context& ctx, TheoremCheck& check, const Member& m, const Body& body) {
  MemberResult r;
  r.group = m.name;
  check.corpus.push_back(m.name);
  Outcome o;
  try {
    body(ctx, m, o);
    r.expected = join(o.expected, "; ");
    r.observed = join(o.observed, "; ");
    r.status = o.ok ? CheckStatus::pass : CheckStatus::fail;
  } catch (const CapacityError& e) {
    r.observed = std::string("capacity: ") + e.what();
    r.status = CheckStatus::skipped;
  } catch (const Error& e) {
    r.observed = std::string("error: ") + e.what();
    r.status = CheckStatus::fail;
  }
  check.members.push_back(std::move(r));
}

void run_members(Context& ctx, TheoremCheck& check, const std::vector<Member>& corpus, const Body& body) {
  for (const auto& m : corpus) run_member(ctx, check, m, body);
}

// ---------------------------------------------------------------------------
// Graph helpers

enum class Prop { cograph, chordal, split, threshold, claw_free };

bool prop(const PropertyReport& r, Prop p) {
  switch (p) {
    case Prop::cograph: return r.cograph;
    case Prop::chordal: return r.chordal;
    case Prop::split: return r.split;
    case Prop::threshold: return r.threshold;
    case Prop::claw_free: return r.claw_free;
  }
  return false;
}

const char* prop_name(Prop p) {
  switch (p) {
    case Prop::cograph: return "cograph";
    case Prop::chordal: return "chordal";
    case Prop::split: return "split";
    case Prop::threshold: return "threshold";
    case Prop::claw_free: return "claw_free";
  }
  return "?";
}

const std::vector<Prop> kAllProps{Prop::cograph, Prop::chordal, Prop::split, Prop::threshold, Prop::claw_free};

std::string key(Relation r, std::string_view what) { return std::string(relation_name(r)) + "." + std::string(what); }

void expect_prop(Outcome& o, Context& ctx, const Member& m, Relation r, Prop p, bool want) {
  o.expect_flag(key(r, prop_name(p)), want, prop(ctx.report(m, r), p));
}

void expect_props(Outcome& o, Context& ctx, const Member& m, Relation r, const std::vector<Prop>& ps, bool want) {
  for (Prop p : ps) expect_prop(o, ctx, m, r, p, want);
}

void record_props(Outcome& o, Context& ctx, const Member& m, Relation r) {
  for (Prop p : kAllProps) o.record_flag(key(r, prop_name(p)), prop(ctx.report(m, r), p));
}

std::string shape_text(const SimpleGraph& g) {
  const auto s = clique_union_shape(g);
  return s ? s->to_string() : "not a union of cliques";
}

std::string shape(std::vector<std::size_t> sizes) {
  ShapeExpr e;
  for (auto s : sizes) {
    if (s > 0) e.sizes.push_back(s);
  }
  std::sort(e.sizes.rbegin(), e.sizes.rend());
  return e.to_string();
}

bool is_complete(const SimpleGraph& g) { return g.edge_count() * 2 == g.size() * (g.size() ? g.size() - 1 : 0); }

std::string pattern_text(PatternKind k, const std::vector<std::string>& labels) {
  return std::string(pattern_name(k)) + "(" + join(labels, ",") + ")";
}

// Ordered replay of a pattern given by vertex labels; unknown labels fail.
bool labels_induce(const SimpleGraph& g, PatternKind k, const std::vector<std::string>& labels) {
  Witness w{k, {}};
  for (const auto& l : labels) {
    const auto& ls = g.labels();
    auto it = std::find(ls.begin(), ls.end(), l);
    if (it == ls.end()) return false;
    w.vertices.push_back(static_cast<std::size_t>(it - ls.begin()));
  }
  return replay(g, w);
}

std::vector<std::string> class_labels(const FiniteGroup& g, const std::vector<std::string>& cycles) {
  std::vector<std::string> out;
  for (const auto& c : cycles) {
    const ElemId e = g.id_of(Permutation::parse(c, g.degree()));
    out.push_back(g.classes()[g.class_of(e)].label);
  }
  return out;
}

using LabelEdge = std::pair<std::string, std::string>;

LabelEdge edge(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::set<LabelEdge> edge_labels(const SimpleGraph& g) {
  std::set<LabelEdge> out;
  for (const auto& [i, j] : g.edges()) out.insert(edge(g.label(i), g.label(j)));
  return out;
}

// "2A-3A 2A-6A ..." into a set.
std::set<LabelEdge> parse_edges(std::string_view text) {
  std::set<LabelEdge> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const auto dash = tok.find('-');
    out.insert(edge(tok.substr(0, dash), tok.substr(dash + 1)));
  }
  return out;
}

std::string edge_diff(const std::set<LabelEdge>& want, const std::set<LabelEdge>& got) {
  std::vector<std::string> missing, extra;
  for (const auto& e : want) {
    if (!got.count(e)) missing.push_back(e.first + "-" + e.second);
  }
  for (const auto& e : got) {
    if (!want.count(e)) extra.push_back(e.first + "-" + e.second);
  }
  if (missing.empty() && extra.empty()) return "reference";
  return "missing{" + join(missing, " ") + "} extra{" + join(extra, " ") + "}";
}

bool is_power_of_two(std::uint64_t n) { return n && (n & (n - 1)) == 0; }

bool is_p_group(const FiniteGroup& g) { return g.order() == 1 || is_prime_power(g.order()); }

// Subgroup given by element ids as a group in its own right.
FiniteGroup as_group(const FiniteGroup& g, const std::vector<ElemId>& elems, std::string name) {
  std::vector<Permutation> gens;
  for (ElemId e : elems) {
    if (e != g.identity()) gens.push_back(g.element(e));
  }
  if (gens.empty()) gens.push_back(g.element(g.identity()));
  return enumerate_group(gens, elems.size(), std::move(name));
}

// ---------------------------------------------------------------------------
// Corpora

std::vector<Member> dihedral_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Member> out;
  for (auto n = lo; n <= hi; ++n) out.push_back(spec(Family::dihedral, {n}));
  return out;
}

std::vector<Member> dicyclic_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Member> out;
  for (auto n = lo; n <= hi; ++n) out.push_back(spec(Family::dicyclic, {n}));
  return out;
}

const std::vector<std::vector<std::uint64_t>>& gendihedral_factors() {
  static const std::vector<std::vector<std::uint64_t>> f{{6}, {8}, {2, 2}, {4, 2}, {3, 3}, {6, 2},
                                                         {4, 4}, {2, 2, 2}, {5, 5}, {6, 3}};
  return f;
}

std::vector<Member> gendihedral_corpus() {
  std::vector<Member> out;
  for (const auto& f : gendihedral_factors()) out.push_back(spec(Family::generalized_dihedral, f));
  return out;
}

std::vector<Member> eppo_corpus() {
  return {spec(Family::symmetric, {3}), spec(Family::alternating, {4}), spec(Family::dihedral, {4}),
          spec(Family::dicyclic, {2}),  spec(Family::dihedral, {9}),    spec(Family::alternating, {5}),
          spec(Family::psl2, {7}),      spec(Family::psl2, {8}),        fixture("Sz8")};
}

std::vector<Member> pq_corpus() {
  return {spec(Family::symmetric, {3}), spec(Family::dihedral, {5}), spec(Family::pq, {7, 3}),
          spec(Family::pq, {11, 5}), spec(Family::cyclic, {15})};
}

std::vector<Member> nilpotent_corpus() {
  return {spec(Family::cyclic, {6}),
          spec(Family::abelian, {4, 2}),
          spec(Family::dihedral, {4}),
          spec(Family::dicyclic, {2}),
          spec(Family::heisenberg, {3}),
          product(GroupSpec::of(Family::dihedral, {4}), GroupSpec::of(Family::cyclic, {3})),
          product(GroupSpec::of(Family::dicyclic, {2}), GroupSpec::of(Family::cyclic, {3})),
          product(GroupSpec::of(Family::heisenberg, {3}), GroupSpec::of(Family::cyclic, {2}))};
}

std::vector<Member> sym_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Member> out;
  for (auto n = lo; n <= hi; ++n) out.push_back(spec(Family::symmetric, {n}));
  return out;
}

std::vector<Member> alt_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Member> out;
  for (auto n = lo; n <= hi; ++n) out.push_back(spec(Family::alternating, {n}));
  return out;
}

std::vector<Member> minimal_simple_corpus() {
  return {spec(Family::psl2, {4}), spec(Family::psl2, {8}), spec(Family::psl2, {7}), spec(Family::psl2, {13}),
          fixture("Sz8"), spec(Family::psl3_3, {})};
}

// Every group the default checks touch, for the structural lemma suites.
std::vector<Member> lemma_corpus(Tier tier) {
  std::vector<Member> out;
  auto add = [&](std::vector<Member> ms) {
    for (auto& m : ms) {
      const bool dup = std::any_of(out.begin(), out.end(), [&](const Member& x) { return x.name == m.name; });
      if (!dup) out.push_back(std::move(m));
    }
  };
  add(dihedral_range(3, 12));
  add(dicyclic_range(2, 8));
  add(gendihedral_corpus());
  add(eppo_corpus());
  add(pq_corpus());
  add(nilpotent_corpus());
  add(sym_range(3, 7));
  add(alt_range(4, 8));
  add(minimal_simple_corpus());
  add({fixture("M11"), fixture("M12")});
  if (tier == Tier::extended) add({fixture("M22"), spec(Family::symmetric, {8}), spec(Family::alternating, {9})});
  return out;
}

// ---------------------------------------------------------------------------
// Reference data

constexpr std::string_view kM12CccReference =
    "2A-3A 2A-6A 2A-2B 3A-6A 4A-8A 11A-11B 5A-2B 5A-10A 2B-10A 2B-4B 3B-6B 2A-10A 2A-5A 2A-4A 2A-8A 3A-3B "
    "6B-2B 4B-8B 2A-8B 2A-4B 3B-2B 4A-2B 4A-4B";
constexpr std::string_view kM12NccExtra = "2B-8A 2B-3B 2B-4B 2B-8B 8A-8B";
constexpr std::string_view kM12SccReference =
    "2A-3A 2A-6A 2A-2B 2A-10A 2A-5A 2A-4A 2A-8A 2A-3B 2A-6B 2A-8B 2A-4B 3A-6A 3A-3B 3A-2B 3A-4A 3A-4B 3A-6B "
    "3A-8A 3A-8B 6A-2B 6A-6B 6A-8A 6A-8B 6A-4B 6A-4A 4A-8A 4A-2B 4A-4B 4A-8B 4A-10A 4A-5A 4A-3B 4A-6B 8A-8B "
    "8A-6B 8A-3B 11A-11B 5A-2B 5A-10A 5A-4B 2B-10A 2B-4B 2B-6B 2B-8B 10A-4B 3B-6B 3B-4B 3B-4A 3B-6A 3B-8A "
    "3B-8B 6B-4B 6B-8B 4B-8B";
constexpr std::string_view kPsl33CccReference =
    "13C-13B 13C-13A 13C-13D 13B-13A 13B-13D 13A-13D 3A-2A 3A-6A 2A-8A 2A-8B 3B-3A 2A-6A 2A-4A 4A-8A 4A-8B "
    "8A-8B";
constexpr std::string_view kPsl33SccReference =
    "13C-13B 13C-13A 13B-13A 2A-4A 2A-6A 2A-3B 2A-3A 2A-8A 2A-8B 6A-4A 3B-6A 3B-4A 3B-13A 3B-13B 3B-13C "
    "3A-4A 3A-6A 3A-3B 8A-3B 8A-3A 8A-4A 8A-6A 8B-3B 8B-3A 8B-8A 8B-4A 8B-6A 13D-13C 13D-13A 13D-13B 13D-3B";

// ---------------------------------------------------------------------------
// Registry

struct Entry {
  CheckInfo info;
  std::function<void(Context&, TheoremCheck&)> run;
};

// Named element witnesses: pattern kind, group, cycles in pattern order.
struct NamedWitness {
  Member group;
  PatternKind kind;
  std::vector<std::string> cycles;
};

void check_named(Context& ctx, TheoremCheck& c, const std::vector<NamedWitness>& ws) {
  for (const auto& w : ws) {
    run_member(ctx, c, w.group, [&](Context& cx, const Member& m, Outcome& o) {
      const FiniteGroup& g = cx.group(m);
      const auto labels = class_labels(g, w.cycles);
      const bool ok = labels_induce(cx.graph(m, Relation::ccc).graph, w.kind, labels);
      o.expect(pattern_text(w.kind, w.cycles), "induced", ok ? "induced" : "not induced");
      o.record("classes", join(labels, ","));
    });
  }
}

void check_labels(Outcome& o, Context& ctx, const Member& m, Relation r, PatternKind k,
                  const std::vector<std::string>& labels) {
  const bool ok = labels_induce(ctx.graph(m, r).graph, k, labels);
  o.expect(key(r, pattern_text(k, labels)), "induced", ok ? "induced" : "not induced");
}

void expect_isolated(Outcome& o, Context& ctx, const Member& m, Relation r, const std::string& label) {
  const auto& g = ctx.graph(m, r).graph;
  o.expect(key(r, label + ".degree"), "0", std::to_string(g.degree(g.index_of(label))));
}

std::vector<Entry> make_registry() {
  std::vector<Entry> reg;
  auto add = [&](std::string id, std::string locus, std::function<void(Context&, TheoremCheck&)> fn,
                 Tier tier = Tier::standard, bool observational = false) {
    reg.push_back({{std::move(id), std::move(locus), tier, observational}, std::move(fn)});
  };

  // -- dihedral, dicyclic and generalized dihedral groups --------------------

  add("dihedral-ccc-shape-3..40",
      "CCC(D_2n) is K_(n-1)/2 + K1 for odd n, K_n/2-1 + 2K1 for n = 0 mod 4, K_n/2-1 + K2 for n = 2 mod 4",
      [](Context& ctx, TheoremCheck& c) {
        for (std::uint64_t n = 3; n <= 40; ++n) {
          run_member(ctx, c, spec(Family::dihedral, {n}), [n](Context& cx, const Member& m, Outcome& o) {
            std::string want;
            if (n % 2) want = shape({(n - 1) / 2, 1});
            else if (n % 4 == 0) want = shape({n / 2 - 1, 1, 1});
            else want = shape({n / 2 - 1, 2});
            o.expect("CCC.shape", want, shape_text(cx.graph(m, Relation::ccc).graph));
          });
        }
      });

  add("dihedral-ccc-classes-3..40",
      "CCC(D_2n) is always a claw-free chordal cograph; split and threshold fail exactly when n = 2 mod 4",
      [](Context& ctx, TheoremCheck& c) {
        for (std::uint64_t n = 3; n <= 40; ++n) {
          run_member(ctx, c, spec(Family::dihedral, {n}), [n](Context& cx, const Member& m, Outcome& o) {
            expect_props(o, cx, m, Relation::ccc, {Prop::cograph, Prop::chordal, Prop::claw_free}, true);
            expect_props(o, cx, m, Relation::ccc, {Prop::split, Prop::threshold}, n % 4 != 2);
          });
        }
      });

  add("dicyclic-ccc-shape-2..20", "CCC(T_4n) is K_n-1 + 2K1 for even n and K_n-1 + K2 for odd n",
      [](Context& ctx, TheoremCheck& c) {
        for (std::uint64_t n = 2; n <= 20; ++n) {
          run_member(ctx, c, spec(Family::dicyclic, {n}), [n](Context& cx, const Member& m, Outcome& o) {
            const std::string want = n % 2 ? shape({n - 1, 2}) : shape({n - 1, 1, 1});
            o.expect("CCC.shape", want, shape_text(cx.graph(m, Relation::ccc).graph));
          });
        }
      });

  add("dicyclic-ccc-classes-2..20",
      "CCC(T_4n) is always a claw-free chordal cograph; split and threshold fail exactly when n is odd",
      [](Context& ctx, TheoremCheck& c) {
        for (std::uint64_t n = 2; n <= 20; ++n) {
          run_member(ctx, c, spec(Family::dicyclic, {n}), [n](Context& cx, const Member& m, Outcome& o) {
            expect_props(o, cx, m, Relation::ccc, {Prop::cograph, Prop::chordal, Prop::claw_free}, true);
            expect_props(o, cx, m, Relation::ccc, {Prop::split, Prop::threshold}, n % 2 == 0);
          });
        }
      });

  add("dihedral-ncc-shape-3..40",
      "NCC(D_2n), n not a power of 2: K_(n-1)/2 + K1 for odd n, K_n/2-1 + K2 for n = 2 mod 4 (n = 0 mod 4 recorded)",
      [](Context& ctx, TheoremCheck& c) {
        for (std::uint64_t n = 3; n <= 40; ++n) {
          if (is_power_of_two(n)) continue;
          run_member(ctx, c, spec(Family::dihedral, {n}), [n](Context& cx, const Member& m, Outcome& o) {
            const std::string got = shape_text(cx.graph(m, Relation::ncc).graph);
            if (n % 2) o.expect("NCC.shape", shape({(n - 1) / 2, 1}), got);
            else if (n % 4 == 2) o.expect("NCC.shape", shape({n / 2 - 1, 2}), got);
            else o.record("NCC.shape", got);
          });
        }
      });

  add("dihedral-ncc-classes-3..40",
      "NCC(D_2n), n not a power of 2: claw-free chordal cograph; split and threshold fail exactly when n = 2 mod 4",
      [](Context& ctx, TheoremCheck& c) {
        for (std::uint64_t n = 3; n <= 40; ++n) {
          if (is_power_of_two(n)) continue;
          run_member(ctx, c, spec(Family::dihedral, {n}), [n](Context& cx, const Member& m, Outcome& o) {
            expect_props(o, cx, m, Relation::ncc, {Prop::cograph, Prop::chordal, Prop::claw_free}, true);
            expect_props(o, cx, m, Relation::ncc, {Prop::split, Prop::threshold}, n % 4 != 2);
          });
        }
      });

  add("dicyclic-ncc-shape-2..20",
      "NCC(T_4n) is K_n-1 + 2K1 when n is not of the excluded form 2^l k (read as: n odd); even n recorded",
      [](Context& ctx, TheoremCheck& c) {
        for (std::uint64_t n = 2; n <= 20; ++n) {
          run_member(ctx, c, spec(Family::dicyclic, {n}), [n](Context& cx, const Member& m, Outcome& o) {
            const std::string got = shape_text(cx.graph(m, Relation::ncc).graph);
            if (n % 2) o.expect("NCC.shape", shape({n - 1, 1, 1}), got);
            else o.record("NCC.shape", got);
          });
        }
      });

  add("dicyclic-ncc-classes-2..20",
      "NCC(T_4n) is claw-free; for odd n also a cograph, chordal, split and threshold (even n recorded)",
      [](Context& ctx, TheoremCheck& c) {
        for (std::uint64_t n = 2; n <= 20; ++n) {
          run_member(ctx, c, spec(Family::dicyclic, {n}), [n](Context& cx, const Member& m, Outcome& o) {
            expect_prop(o, cx, m, Relation::ncc, Prop::claw_free, true);
            if (n % 2) {
              expect_props(o, cx, m, Relation::ncc, {Prop::cograph, Prop::chordal, Prop::split, Prop::threshold},
                           true);
            } else {
              for (Prop p : {Prop::cograph, Prop::chordal, Prop::split, Prop::threshold}) {
                o.record_flag(key(Relation::ncc, prop_name(p)), prop(cx.report(m, Relation::ncc), p));
              }
            }
          });
        }
      });

  add("gendihedral-ccc-classes", "CCC(Dih(A)) is a cograph, chordal, split and threshold graph",
      [](Context& ctx, TheoremCheck& c) {
        run_members(ctx, c, gendihedral_corpus(), [](Context& cx, const Member& m, Outcome& o) {
          expect_props(o, cx, m, Relation::ccc, {Prop::cograph, Prop::chordal, Prop::split, Prop::threshold}, true);
          o.record("CCC.shape", shape_text(cx.graph(m, Relation::ccc).graph));
        });
      });

  add("gendihedral-ncc-claw-free", "NCC(Dih(A)) never contains an induced claw", [](Context& ctx, TheoremCheck& c) {
    run_members(ctx, c, gendihedral_corpus(), [](Context& cx, const Member& m, Outcome& o) {
      expect_prop(o, cx, m, Relation::ncc, Prop::claw_free, true);
    });
  });

  add(
      "gendihedral-ncc-observed",
      "NCC(Dih(A)) verdicts against |A|; the exception clause for |A| = 2^r is ambiguous, so nothing is asserted",
      [](Context& ctx, TheoremCheck& c) {
        run_members(ctx, c, gendihedral_corpus(), [](Context& cx, const Member& m, Outcome& o) {
          const FiniteGroup& g = cx.group(m);
          o.record("|A|", std::to_string(g.order() / 2));
          o.record("NCC.shape", shape_text(cx.graph(m, Relation::ncc).graph));
          record_props(o, cx, m, Relation::ncc);
        });
      },
      Tier::standard, true);

  add("solvable-families-scc-complete",
      "SCC of D_2n, T_4n and Dih(A) is complete, hence a claw-free chordal, split, threshold cograph",
      [](Context& ctx, TheoremCheck& c) {
        std::vector<Member> corpus = dihedral_range(3, 12);
        for (auto& m : dicyclic_range(2, 8)) corpus.push_back(std::move(m));
        for (auto& m : gendihedral_corpus()) corpus.push_back(std::move(m));
        run_members(ctx, c, corpus, [](Context& cx, const Member& m, Outcome& o) {
          o.expect_flag("SCC.complete", true, is_complete(cx.graph(m, Relation::scc).graph));
          expect_props(o, cx, m, Relation::scc, kAllProps, true);
        });
      });

  // -- EPPO, pq and nilpotent groups ----------------------------------------

  add("eppo-corpus-is-eppo", "every non-identity element of the EPPO corpus has prime-power order",
      [](Context& ctx, TheoremCheck& c) {
        run_members(ctx, c, eppo_corpus(), [](Context& cx, const Member& m, Outcome& o) {
          o.expect_flag("eppo", true, is_eppo(cx.group(m)));
        });
      });

  add("eppo-cograph", "CCC, NCC and SCC of an EPPO group are cographs", [](Context& ctx, TheoremCheck& c) {
    run_members(ctx, c, eppo_corpus(), [](Context& cx, const Member& m, Outcome& o) {
      for (Relation r : {Relation::ccc, Relation::ncc, Relation::scc}) expect_prop(o, cx, m, r, Prop::cograph, true);
    });
  });

  add("eppo-chordal", "CCC, NCC and SCC of an EPPO group are chordal", [](Context& ctx, TheoremCheck& c) {
    run_members(ctx, c, eppo_corpus(), [](Context& cx, const Member& m, Outcome& o) {
      for (Relation r : {Relation::ccc, Relation::ncc, Relation::scc}) expect_prop(o, cx, m, r, Prop::chordal, true);
    });
  });

  add("eppo-ncc-claw-free", "NCC of an EPPO group is claw-free", [](Context& ctx, TheoremCheck& c) {
    run_members(ctx, c, eppo_corpus(), [](Context& cx, const Member& m, Outcome& o) {
      expect_prop(o, cx, m, Relation::ncc, Prop::claw_free, true);
    });
  });

  add("eppo-solvable-scc-claw-free", "SCC of a solvable or p-group EPPO group is claw-free",
      [](Context& ctx, TheoremCheck& c) {
        for (const auto& m : eppo_corpus()) {
          const FiniteGroup* g = nullptr;
          try {
            g = &ctx.group(m);
          } catch (const CapacityError&) {
          }
          if (g && !g->group_is_solvable() && !is_p_group(*g)) continue;
          run_member(ctx, c, m, [](Context& cx, const Member& mm, Outcome& o) {
            expect_prop(o, cx, mm, Relation::scc, Prop::claw_free, true);
          });
        }
      });

  add(
      "eppo-2k2-observed",
      "2K2-freeness of CCC, NCC and SCC on EPPO groups, recorded next to the group structure (criteria ambiguous)",
      [](Context& ctx, TheoremCheck& c) {
        run_members(ctx, c, eppo_corpus(), [](Context& cx, const Member& m, Outcome& o) {
          const FiniteGroup& g = cx.group(m);
          o.record_flag("p-group", is_p_group(g));
          o.record_flag("abelian", g.group_is_abelian());
          o.record_flag("solvable", g.group_is_solvable());
          for (Relation r : {Relation::ccc, Relation::ncc, Relation::scc}) {
            o.record_flag(key(r, "2K2-free"), !cx.report(m, r).witnesses.count("2K2"));
          }
        });
      },
      Tier::standard, true);

  add("pq-cograph-chordal", "CCC, NCC and SCC of a group of order pq are chordal cographs",
      [](Context& ctx, TheoremCheck& c) {
        run_members(ctx, c, pq_corpus(), [](Context& cx, const Member& m, Outcome& o) {
          for (Relation r : {Relation::ccc, Relation::ncc, Relation::scc}) {
            expect_props(o, cx, m, r, {Prop::cograph, Prop::chordal}, true);
          }
        });
      });

  add("pq-2k2-claw-free", "CCC, NCC and SCC of a group of order pq are 2K2-free and claw-free",
      [](Context& ctx, TheoremCheck& c) {
        run_members(ctx, c, pq_corpus(), [](Context& cx, const Member& m, Outcome& o) {
          for (Relation r : {Relation::ccc, Relation::ncc, Relation::scc}) {
            o.expect_flag(key(r, "2K2-free"), true, !cx.report(m, r).witnesses.count("2K2"));
            expect_prop(o, cx, m, r, Prop::claw_free, true);
          }
        });
      });

  add("nilpotent-ncc-scc-complete", "NCC and SCC of a nilpotent group are complete", [](Context& ctx, TheoremCheck& c) {
    run_members(ctx, c, nilpotent_corpus(), [](Context& cx, const Member& m, Outcome& o) {
      o.expect_flag("NCC.complete", true, is_complete(cx.graph(m, Relation::ncc).graph));
      o.expect_flag("SCC.complete", true, is_complete(cx.graph(m, Relation::scc).graph));
    });
  });

  add("nilpotent-ccc-2k2-iff-abelian", "CCC of a nilpotent group is 2K2-free if and only if the group is abelian",
      [](Context& ctx, TheoremCheck& c) {
        run_members(ctx, c, nilpotent_corpus(), [](Context& cx, const Member& m, Outcome& o) {
          o.expect_flag("CCC.2K2-free", cx.group(m).group_is_abelian(), !cx.report(m, Relation::ccc).witnesses.count("2K2"));
        });
      });

  add("nilpotent-ccc-claw-iff-abelian",
      "CCC of a nilpotent group that is not a p-group is claw-free if and only if the group is abelian",
      [](Context& ctx, TheoremCheck& c) {
        for (const auto& m : nilpotent_corpus()) {
          if (is_p_group(ctx.group(m))) continue;
          run_member(ctx, c, m, [](Context& cx, const Member& mm, Outcome& o) {
            expect_prop(o, cx, mm, Relation::ccc, Prop::claw_free, cx.group(mm).group_is_abelian());
          });
        }
      });

  add("nilpotent-ccc-cograph-chordal",
      "CCC of a nilpotent non-p-group is a chordal cograph when it is abelian or has one non-abelian Sylow "
      "subgroup whose own CCC is a chordal cograph",
      [](Context& ctx, TheoremCheck& c) {
        for (const auto& m : nilpotent_corpus()) {
          if (is_p_group(ctx.group(m))) continue;
          run_member(ctx, c, m, [](Context& cx, const Member& mm, Outcome& o) {
            const FiniteGroup& g = cx.group(mm);
            bool applies = g.group_is_abelian();
            if (!applies) {
              std::size_t nonabelian = 0;
              bool sylow_ok = true;
              for (const auto& [p, e] : factorize(g.order())) {
                (void)e;
                const FiniteGroup s = as_group(g, sylow_subgroup(g, p), "P" + std::to_string(p));
                if (s.group_is_abelian()) continue;
                ++nonabelian;
                const auto rep = classify(build_graph(s, Relation::ccc).graph, s.name());
                sylow_ok = sylow_ok && rep.cograph && rep.chordal;
              }
              applies = nonabelian == 1 && sylow_ok;
            }
            o.record_flag("hypothesis", applies);
            if (applies) {
              expect_props(o, cx, mm, Relation::ccc, {Prop::cograph, Prop::chordal}, true);
            } else {
              record_props(o, cx, mm, Relation::ccc);
            }
          });
        }
      });

  // -- symmetric and alternating groups --------------------------------------

  add("sym-ccc-cograph-3..7", "CCC(Sym(n)) is a cograph if and only if n <= 4", [](Context& ctx, TheoremCheck& c) {
    for (std::uint64_t n = 3; n <= 7; ++n) {
      run_member(ctx, c, spec(Family::symmetric, {n}), [n](Context& cx, const Member& m, Outcome& o) {
        expect_prop(o, cx, m, Relation::ccc, Prop::cograph, n <= 4);
      });
    }
  });

  add("sym-ccc-split-threshold-3..7", "CCC(Sym(n)) is split, and threshold, if and only if n <= 4",
      [](Context& ctx, TheoremCheck& c) {
        for (std::uint64_t n = 3; n <= 7; ++n) {
          run_member(ctx, c, spec(Family::symmetric, {n}), [n](Context& cx, const Member& m, Outcome& o) {
            expect_props(o, cx, m, Relation::ccc, {Prop::split, Prop::threshold}, n <= 4);
          });
        }
      });

  add("sym-ccc-claw-free-3..7", "CCC(Sym(n)) is claw-free if and only if n <= 6", [](Context& ctx, TheoremCheck& c) {
    for (std::uint64_t n = 3; n <= 7; ++n) {
      run_member(ctx, c, spec(Family::symmetric, {n}), [n](Context& cx, const Member& m, Outcome& o) {
        expect_prop(o, cx, m, Relation::ccc, Prop::claw_free, n <= 6);
      });
    }
  });

  add("sym-named-witnesses", "the explicit P4 and 2K2 in CCC(Sym(5)) and the claw in CCC(Sym(7)) are induced",
      [](Context& ctx, TheoremCheck& c) {
        const Member s5 = spec(Family::symmetric, {5});
        const Member s7 = spec(Family::symmetric, {7});
        check_named(ctx, c,
                    {{s5, PatternKind::P4, {"(1,2,3,4)", "(1,3)(2,4)", "(1,2)", "(1,2,3)"}},
                     {s5, PatternKind::TwoK2, {"(1,2,3)", "(1,2,3)(4,5)", "(1,2)(3,4)", "(1,2,3,4)"}},
                     {s7, PatternKind::Claw, {"(1,2)", "(1,2,3)", "(1,2)(3,4,5,6,7)", "(1,2)(3,4)(5,6)"}}});
      });

  add("alt-ccc-cograph-4..8", "CCC(Alt(n)) is a cograph if and only if n <= 6", [](Context& ctx, TheoremCheck& c) {
    for (std::uint64_t n = 4; n <= 8; ++n) {
      run_member(ctx, c, spec(Family::alternating, {n}), [n](Context& cx, const Member& m, Outcome& o) {
        expect_prop(o, cx, m, Relation::ccc, Prop::cograph, n <= 6);
      });
    }
  });

  add("alt-ccc-split-threshold-4..8", "CCC(Alt(n)) is split, and threshold, if and only if n <= 5",
      [](Context& ctx, TheoremCheck& c) {
        for (std::uint64_t n = 4; n <= 8; ++n) {
          run_member(ctx, c, spec(Family::alternating, {n}), [n](Context& cx, const Member& m, Outcome& o) {
            expect_props(o, cx, m, Relation::ccc, {Prop::split, Prop::threshold}, n <= 5);
          });
        }
      });

  add("alt-ccc-claw-free-4..8", "CCC(Alt(n)) is claw-free if and only if n <= 6", [](Context& ctx, TheoremCheck& c) {
    for (std::uint64_t n = 4; n <= 8; ++n) {
      run_member(ctx, c, spec(Family::alternating, {n}), [n](Context& cx, const Member& m, Outcome& o) {
        expect_prop(o, cx, m, Relation::ccc, Prop::claw_free, n <= 6);
      });
    }
  });

  add("alt-named-witnesses",
      "the explicit 2K2 in CCC(Alt(6)), P4, 2K2 and claw in CCC(Alt(7)), and P4 and claw in CCC(Alt(8)) are induced",
      [](Context& ctx, TheoremCheck& c) {
        const Member a6 = spec(Family::alternating, {6});
        const Member a7 = spec(Family::alternating, {7});
        const Member a8 = spec(Family::alternating, {8});
        check_named(ctx, c,
                    {{a6, PatternKind::TwoK2, {"(1,2,3)", "(1,2,3)(4,5,6)", "(1,2)(3,4)", "(1,2)(3,4,5,6)"}},
                     {a7, PatternKind::P4, {"(1,2,3)(4,5,6)", "(1,2,3)", "(4,5)(6,7)", "(1,2)(4,5,6,7)"}},
                     {a7, PatternKind::TwoK2, {"(1,2,3,4,5,6,7)", "(1,7,6,5,4,3,2)", "(1,2)(3,4)", "(1,2)(3,4,5,6)"}},
                     {a7, PatternKind::Claw, {"(1,2,3)", "(1,2,3,4,5)", "(1,2)(3,4)(5,6,7)", "(1,2,3)(4,5,6)"}},
                     {a8, PatternKind::P4, {"(1,2)(3,4)(5,6)(7,8)", "(1,2)(3,4)", "(1,2,3,4,5)", "(1,2,3,4,5)(6,7,8)"}},
                     {a8, PatternKind::Claw, {"(1,2,3)", "(1,2,3,4,5)", "(1,2)(3,4)(5,6,7)", "(1,2,3)(4,5,6)"}}});
      });

  add(
      "sym-ccc-8", "CCC(Sym(8)) is not a cograph, not split and not claw-free",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, spec(Family::symmetric, {8}), [](Context& cx, const Member& m, Outcome& o) {
          expect_props(o, cx, m, Relation::ccc, {Prop::cograph, Prop::split, Prop::threshold, Prop::claw_free}, false);
        });
      },
      Tier::extended);

  add(
      "alt-ccc-9", "CCC(Alt(9)) is not a cograph, not split and not claw-free",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, spec(Family::alternating, {9}), [](Context& cx, const Member& m, Outcome& o) {
          expect_props(o, cx, m, Relation::ccc, {Prop::cograph, Prop::split, Prop::threshold, Prop::claw_free}, false);
          check_labels(o, cx, m, Relation::ccc, PatternKind::Claw, class_labels(cx.group(m), {"(1,2,3)", "(1,2,3,4,5)",
                                                                                             "(1,2)(3,4)(5,6,7)",
                                                                                             "(1,2,3)(4,5,6)"}));
        });
      },
      Tier::extended);

  // -- Suzuki group Sz(8) -----------------------------------------------------

  add("sz8-class-census",
      "Sz(8) has (q-2)/2 classes of order q-1, (q-2r)/4 of order q-2r+1, (q+2r)/4 of order q+2r+1, one of "
      "order 2 and two of order 4 (q = 8, r = 2)",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("Sz8"), [](Context& cx, const Member& m, Outcome& o) {
          const std::uint64_t q = 8, r = 2;
          const std::map<std::uint64_t, std::size_t> want{
              {2, 1}, {4, 2}, {q - 1, (q - 2) / 2}, {q - 2 * r + 1, (q - 2 * r) / 4}, {q + 2 * r + 1, (q + 2 * r) / 4}};
          std::map<std::uint64_t, std::size_t> got;
          for (const auto& cl : cx.group(m).classes()) {
            if (cl.size > 1) ++got[cl.elem_order];
          }
          auto text = [](const std::map<std::uint64_t, std::size_t>& mm) {
            std::vector<std::string> parts;
            for (const auto& [ord, cnt] : mm) parts.push_back(std::to_string(cnt) + "x" + std::to_string(ord));
            return join(parts, " ");
          };
          o.expect("classes", text(want), text(got));
        });
      });

  add("sz8-ccc-ncc", "CCC and NCC of Sz(8) are claw-free chordal cographs, split and threshold",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("Sz8"), [](Context& cx, const Member& m, Outcome& o) {
          for (Relation r : {Relation::ccc, Relation::ncc}) {
            expect_props(o, cx, m, r, kAllProps, true);
          }
        });
      });

  add("sz8-scc",
      "SCC of Sz(8) is a cograph but not chordal, with induced C4 (B1,D3,X1,D2) and claw (D1;B1,A1,X1); "
      "not split or threshold",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("Sz8"), [](Context& cx, const Member& m, Outcome& o) {
          expect_prop(o, cx, m, Relation::scc, Prop::cograph, true);
          expect_props(o, cx, m, Relation::scc, {Prop::chordal, Prop::split, Prop::threshold, Prop::claw_free}, false);
          check_labels(o, cx, m, Relation::scc, PatternKind::C4, {"B1", "D3", "X1", "D2"});
          check_labels(o, cx, m, Relation::scc, PatternKind::Claw, {"D1", "B1", "A1", "X1"});
        });
      });

  // -- Mathieu groups ---------------------------------------------------------

  add("M11-ccc-equals-ncc", "CCC(M11) and NCC(M11) have the same edges", [](Context& ctx, TheoremCheck& c) {
    run_member(ctx, c, fixture("M11"), [](Context& cx, const Member& m, Outcome& o) {
      const auto cc = edge_labels(cx.graph(m, Relation::ccc).graph);
      const auto nc = edge_labels(cx.graph(m, Relation::ncc).graph);
      o.expect("NCC.edges", "CCC", cc == nc ? "CCC" : edge_diff(cc, nc));
    });
  });

  add("M11-classes", "CCC, NCC and SCC of M11 are claw-free chordal cographs that are neither split nor threshold",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("M11"), [](Context& cx, const Member& m, Outcome& o) {
          for (Relation r : {Relation::ccc, Relation::ncc, Relation::scc}) {
            expect_props(o, cx, m, r, {Prop::cograph, Prop::chordal, Prop::claw_free}, true);
            expect_props(o, cx, m, r, {Prop::split, Prop::threshold}, false);
          }
        });
      });

  add("M11-structure", "5A is isolated in CCC(M11) and SCC(M11); {3A,6A,11A,11B} induces 2K2 in all three graphs",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("M11"), [](Context& cx, const Member& m, Outcome& o) {
          expect_isolated(o, cx, m, Relation::ccc, "5A");
          expect_isolated(o, cx, m, Relation::scc, "5A");
          for (Relation r : {Relation::ccc, Relation::ncc, Relation::scc}) {
            check_labels(o, cx, m, r, PatternKind::TwoK2, {"3A", "6A", "11A", "11B"});
          }
        });
      });

  add("M12-ccc-ncc-patterns",
      "CCC(M12) and NCC(M12) contain the path 6A-3A-3B-6B, the cycle 2A-3A-3B-2B, the 2K2 {2A,2B,11A,11B} and "
      "the claw (2A;4A,5A,6A)",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("M12"), [](Context& cx, const Member& m, Outcome& o) {
          for (Relation r : {Relation::ccc, Relation::ncc}) {
            check_labels(o, cx, m, r, PatternKind::P4, {"6A", "3A", "3B", "6B"});
            check_labels(o, cx, m, r, PatternKind::C4, {"2A", "3A", "3B", "2B"});
            check_labels(o, cx, m, r, PatternKind::TwoK2, {"2A", "2B", "11A", "11B"});
            check_labels(o, cx, m, r, PatternKind::Claw, {"2A", "4A", "5A", "6A"});
          }
        });
      });

  add("M12-ccc-ncc-classes",
      "CCC(M12) and NCC(M12) are neither cographs, chordal, split, threshold nor claw-free",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("M12"), [](Context& cx, const Member& m, Outcome& o) {
          for (Relation r : {Relation::ccc, Relation::ncc}) {
            expect_props(o, cx, m, r, kAllProps, false);
          }
        });
      });

  add("M12-reference-edges", "CCC, NCC and SCC of M12 have exactly the reference edge lists",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("M12"), [](Context& cx, const Member& m, Outcome& o) {
          auto ncc = parse_edges(kM12CccReference);
          for (const auto& e : parse_edges(kM12NccExtra)) ncc.insert(e);
          const std::array<std::pair<Relation, std::set<LabelEdge>>, 3> refs{
              {{Relation::ccc, parse_edges(kM12CccReference)},
               {Relation::ncc, ncc},
               {Relation::scc, parse_edges(kM12SccReference)}}};
          for (const auto& [r, want] : refs) {
            o.expect(key(r, "edges"), "reference", edge_diff(want, edge_labels(cx.graph(m, r).graph)));
          }
        });
      });

  add("M12-scc", "SCC(M12) is a claw-free chordal cograph, not split or threshold via the 2K2 {2A,2B,11A,11B}",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("M12"), [](Context& cx, const Member& m, Outcome& o) {
          expect_props(o, cx, m, Relation::scc, {Prop::cograph, Prop::chordal, Prop::claw_free}, true);
          expect_props(o, cx, m, Relation::scc, {Prop::split, Prop::threshold}, false);
          check_labels(o, cx, m, Relation::scc, PatternKind::TwoK2, {"2A", "2B", "11A", "11B"});
        });
      });

  add("M22-ccc",
      "CCC(M22) is a chordal cograph, not split or threshold, with 2K2 {7A,7B,11A,11B}, claw (2A;3A,4A,8A) and "
      "5A isolated",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("M22"), [](Context& cx, const Member& m, Outcome& o) {
          expect_props(o, cx, m, Relation::ccc, {Prop::cograph, Prop::chordal}, true);
          expect_props(o, cx, m, Relation::ccc, {Prop::split, Prop::threshold, Prop::claw_free}, false);
          check_labels(o, cx, m, Relation::ccc, PatternKind::TwoK2, {"7A", "7B", "11A", "11B"});
          check_labels(o, cx, m, Relation::ccc, PatternKind::Claw, {"2A", "3A", "4A", "8A"});
          expect_isolated(o, cx, m, Relation::ccc, "5A");
        });
      });

  add(
      "M22-ncc", "NCC(M22) is a claw-free chordal cograph, not split or threshold, with 2K2 {7A,7B,11A,11B}",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("M22"), [](Context& cx, const Member& m, Outcome& o) {
          expect_props(o, cx, m, Relation::ncc, {Prop::cograph, Prop::chordal, Prop::claw_free}, true);
          expect_props(o, cx, m, Relation::ncc, {Prop::split, Prop::threshold}, false);
          check_labels(o, cx, m, Relation::ncc, PatternKind::TwoK2, {"7A", "7B", "11A", "11B"});
          expect_isolated(o, cx, m, Relation::ncc, "5A");
        });
      },
      Tier::extended);

  add(
      "M22-scc", "SCC(M22) is a claw-free chordal cograph, not split or threshold, with 2K2 {7A,7B,11A,11B}",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, fixture("M22"), [](Context& cx, const Member& m, Outcome& o) {
          expect_props(o, cx, m, Relation::scc, {Prop::cograph, Prop::chordal, Prop::claw_free}, true);
          expect_props(o, cx, m, Relation::scc, {Prop::split, Prop::threshold}, false);
          check_labels(o, cx, m, Relation::scc, PatternKind::TwoK2, {"7A", "7B", "11A", "11B"});
        });
      },
      Tier::extended);

  // -- PSL(3,3) and the minimal simple groups ---------------------------------

  add("psl33-ccc-equals-ncc", "CCC(PSL(3,3)) and NCC(PSL(3,3)) have the same edges", [](Context& ctx, TheoremCheck& c) {
    run_member(ctx, c, spec(Family::psl3_3, {}), [](Context& cx, const Member& m, Outcome& o) {
      const auto cc = edge_labels(cx.graph(m, Relation::ccc).graph);
      const auto nc = edge_labels(cx.graph(m, Relation::ncc).graph);
      o.expect("NCC.edges", "CCC", cc == nc ? "CCC" : edge_diff(cc, nc));
    });
  });

  add("psl33-reference-edges", "CCC, NCC and SCC of PSL(3,3) have exactly the reference edge lists",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, spec(Family::psl3_3, {}), [](Context& cx, const Member& m, Outcome& o) {
          const std::array<std::pair<Relation, std::string_view>, 3> refs{{{Relation::ccc, kPsl33CccReference},
                                                                           {Relation::ncc, kPsl33CccReference},
                                                                           {Relation::scc, kPsl33SccReference}}};
          for (const auto& [r, text] : refs) {
            o.expect(key(r, "edges"), "reference", edge_diff(parse_edges(text), edge_labels(cx.graph(m, r).graph)));
          }
        });
      });

  add("psl33-classes",
      "CCC, NCC and SCC of PSL(3,3) are claw-free chordal cographs, not split or threshold; 13A-13B, 2A-3A "
      "induce 2K2 in CCC",
      [](Context& ctx, TheoremCheck& c) {
        run_member(ctx, c, spec(Family::psl3_3, {}), [](Context& cx, const Member& m, Outcome& o) {
          for (Relation r : {Relation::ccc, Relation::ncc, Relation::scc}) {
            expect_props(o, cx, m, r, {Prop::cograph, Prop::chordal, Prop::claw_free}, true);
            expect_props(o, cx, m, r, {Prop::split, Prop::threshold}, false);
          }
          check_labels(o, cx, m, Relation::ccc, PatternKind::TwoK2, {"13A", "13B", "2A", "3A"});
        });
      });

  add("minimal-simple-scc-cograph", "SCC of a minimal simple group is a cograph", [](Context& ctx, TheoremCheck& c) {
    run_members(ctx, c, minimal_simple_corpus(), [](Context& cx, const Member& m, Outcome& o) {
      expect_prop(o, cx, m, Relation::scc, Prop::cograph, true);
      expect_prop(o, cx, m, Relation::invgen, Prop::cograph, true);
    });
  });

  add("minimal-simple-lambda-complement",
      "in a minimal simple group SCC is the complement of the invariable generation graph",
      [](Context& ctx, TheoremCheck& c) {
        run_members(ctx, c, minimal_simple_corpus(), [](Context& cx, const Member& m, Outcome& o) {
          const SimpleGraph& scc = cx.graph(m, Relation::scc).graph;
          const SimpleGraph lam = cx.graph(m, Relation::invgen).graph.complement();
          std::string got = "complement";
          if (scc.labels() != lam.labels()) got = "vertex sets differ";
          else if (!(scc == lam)) got = edge_diff(edge_labels(lam), edge_labels(scc));
          o.expect("SCC", "complement", got);
        });
      });

  // -- structural lemmas over the whole corpus --------------------------------

  auto lemma = [&](std::string id, std::string locus, Body body, Tier tier = Tier::standard) {
    add(std::move(id), std::move(locus),
        [tier, body](Context& ctx, TheoremCheck& c) { run_members(ctx, c, lemma_corpus(tier), body); });
  };

  lemma("same-prime-adjacency",
        "classes of p-power order for the same prime p are adjacent in NCC and in SCC",
        [](Context& cx, const Member& m, Outcome& o) {
          const FiniteGroup& g = cx.group(m);
          for (Relation r : {Relation::ncc, Relation::scc}) {
            const auto& cg = cx.graph(m, r);
            std::size_t pairs = 0, bad = 0;
            for (std::size_t i = 0; i < cg.graph.size(); ++i) {
              for (std::size_t j = i + 1; j < cg.graph.size(); ++j) {
                const auto a = cg.orders[i], b = cg.orders[j];
                if (!is_prime_power(a) || !is_prime_power(b)) continue;
                if (factorize(a).begin()->first != factorize(b).begin()->first) continue;
                ++pairs;
                if (!cg.graph.adjacent(i, j)) ++bad;
              }
            }
            (void)g;
            o.record(key(r, "pairs"), std::to_string(pairs));
            o.expect(key(r, "non-adjacent"), "0", std::to_string(bad));
          }
        });

  lemma("p-element-ccc-distance",
        "classes of p-elements are at distance <= 2 in CCC whenever a Sylow p-subgroup has a non-central "
        "central element",
        [](Context& cx, const Member& m, Outcome& o) {
          const FiniteGroup& g = cx.group(m);
          const auto& cg = cx.graph(m, Relation::ccc);
          std::size_t pairs = 0, bad = 0;
          for (const auto& [p, e] : factorize(g.order())) {
            (void)e;
            const auto sylow = sylow_subgroup(g, p);
            bool applies = false;
            for (ElemId z : sylow) {
              if (g.classes()[g.class_of(z)].size == 1) continue;
              if (std::all_of(sylow.begin(), sylow.end(), [&](ElemId s) { return g.commute(z, s); })) {
                applies = true;
                break;
              }
            }
            if (!applies) continue;
            for (std::size_t i = 0; i < cg.graph.size(); ++i) {
              for (std::size_t j = i + 1; j < cg.graph.size(); ++j) {
                if (!is_prime_power(cg.orders[i]) || !is_prime_power(cg.orders[j])) continue;
                if (factorize(cg.orders[i]).begin()->first != p || factorize(cg.orders[j]).begin()->first != p) {
                  continue;
                }
                ++pairs;
                const auto d = distance(cg.graph, i, j);
                if (!d || *d > 2) ++bad;
              }
            }
          }
          o.record("pairs", std::to_string(pairs));
          o.expect("farther-than-2", "0", std::to_string(bad));
        });

  lemma("relation-chain", "E(CCC) is contained in E(NCC), which is contained in E(SCC)",
        [](Context& cx, const Member& m, Outcome& o) {
          const auto cc = edge_labels(cx.graph(m, Relation::ccc).graph);
          const auto nc = edge_labels(cx.graph(m, Relation::ncc).graph);
          const auto sc = edge_labels(cx.graph(m, Relation::scc).graph);
          auto subset = [](const std::set<LabelEdge>& a, const std::set<LabelEdge>& b) {
            return std::includes(b.begin(), b.end(), a.begin(), a.end());
          };
          o.expect_flag("CCC<=NCC", true, subset(cc, nc));
          o.expect_flag("NCC<=SCC", true, subset(nc, sc));
        });

  lemma("solvable-scc-complete", "SCC of a solvable group is complete", [](Context& cx, const Member& m, Outcome& o) {
    const FiniteGroup& g = cx.group(m);
    o.record_flag("solvable", g.group_is_solvable());
    if (g.group_is_solvable()) o.expect_flag("SCC.complete", true, is_complete(cx.graph(m, Relation::scc).graph));
  });

  add("recognizer-cross-validation",
      "scan-based and characterization-based recognizers agree on corpus graphs and 500 seeded random graphs; "
      "threshold = cograph and split",
      [](Context& ctx, TheoremCheck& c) {
        auto compare = [](const SimpleGraph& g, std::size_t& bad) {
          const bool cog = is_cograph(g);
          const bool cho = is_chordal(g);
          const bool spl = is_split(g);
          const bool thr = is_threshold(g);
          const bool p4 = find_induced(g, PatternKind::P4).has_value();
          const bool c4 = find_induced(g, PatternKind::C4).has_value();
          const bool c5 = find_induced(g, PatternKind::C5).has_value();
          const bool k2 = find_induced(g, PatternKind::TwoK2).has_value();
          const bool hole = find_induced(g, PatternKind::Cn).has_value();
          const bool ok = cog == !p4 && cog == is_cograph_by_cotree(g) && cho == is_chordal_by_peo(g) &&
                          cho == is_chordal_by_cycles(g) && cho == !hole && spl == is_split_by_degrees(g) &&
                          spl == !(c4 || c5 || k2) && thr == (cog && spl) &&
                          is_claw_free(g) == !find_induced(g, PatternKind::Claw).has_value();
          if (!ok) ++bad;
        };
        run_members(ctx, c, lemma_corpus(Tier::standard), [&](Context& cx, const Member& m, Outcome& o) {
          std::size_t bad = 0;
          for (Relation r : {Relation::ccc, Relation::ncc, Relation::scc}) compare(cx.graph(m, r).graph, bad);
          o.expect("disagreements", "0", std::to_string(bad));
        });
        run_member(ctx, c, {"random-500", nullptr}, [&](Context&, const Member&, Outcome& o) {
          std::mt19937_64 rng(20240601);
          std::size_t bad = 0;
          for (int t = 0; t < 500; ++t) {
            const std::size_t n = 1 + rng() % 12;
            const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
            SimpleGraph g(n);
            for (std::size_t i = 0; i < n; ++i) {
              for (std::size_t j = i + 1; j < n; ++j) {
                if (std::uniform_real_distribution<double>(0, 1)(rng) < p) g.add_edge(i, j);
              }
            }
            compare(g, bad);
          }
          o.expect("disagreements", "0", std::to_string(bad));
        });
      });

  add("sylow-witnesses",
      "a non-abelian Sylow p-subgroup has p+1 pairwise non-commuting, pairwise non-conjugate elements",
      [](Context& ctx, TheoremCheck& c) {
        const std::vector<std::pair<Member, std::uint64_t>> cases{{spec(Family::dihedral, {4}), 2},
                                                                  {spec(Family::dicyclic, {2}), 2},
                                                                  {spec(Family::heisenberg, {3}), 3}};
        for (const auto& [m, p] : cases) {
          run_member(ctx, c, m, [p = p](Context& cx, const Member& mm, Outcome& o) {
            const FiniteGroup& g = cx.group(mm);
            const auto w = find_sylow_witnesses(g, p);
            o.expect("count", std::to_string(p + 1), w ? std::to_string(w->size()) : "none");
            if (!w) return;
            bool commuting = false, conjugate = false;
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < w->size(); ++i) {
              labels.push_back(g.classes()[g.class_of((*w)[i])].label);
              for (std::size_t j = i + 1; j < w->size(); ++j) {
                commuting = commuting || g.commute((*w)[i], (*w)[j]);
                conjugate = conjugate || g.class_of((*w)[i]) == g.class_of((*w)[j]);
              }
            }
            o.expect_flag("commuting-pair", false, commuting);
            o.expect_flag("conjugate-pair", false, conjugate);
            o.record("classes", join(labels, ","));
          });
        }
      });

  return reg;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> reg = make_registry();
  return reg;
}

TheoremCheck execute(const Entry& e, Context& ctx) {
  TheoremCheck c;
  c.id = e.info.id;
  c.locus = e.info.locus;
  c.tier = e.info.tier;
  c.observational = e.info.observational;
  e.run(ctx, c);
  bool any_fail = false, any_skip = false;
  for (const auto& m : c.members) {
    any_fail = any_fail || m.status == CheckStatus::fail;
    any_skip = any_skip || m.status == CheckStatus::skipped;
  }
  c.status = any_fail ? CheckStatus::fail : any_skip ? CheckStatus::skipped : CheckStatus::pass;
  return c;
}

}  // namespace

std::string_view status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::string_view tier_name(Tier t) noexcept { return t == Tier::standard ? "default" : "extended"; }

Tier parse_tier(std::string_view s) {
  if (s == "default" || s == "standard") return Tier::standard;
  if (s == "extended") return Tier::extended;
  throw InputError("unknown tier '" + std::string(s) + "' (expected default or extended)");
}

std::vector<CheckInfo> registered_checks() {
  std::vector<CheckInfo> out;
  for (const auto& e : registry()) out.push_back(e.info);
  return out;
}

TheoremCheck run_check(std::string_view id, std::size_t cap) {
  for (const auto& e : registry()) {
    if (e.info.id == id) {
      Context ctx(cap);
      return execute(e, ctx);
    }
  }
  throw InputError("unknown check '" + std::string(id) + "'");
}

std::vector<TheoremCheck> run_all(const RunOptions& opts) {
  Context ctx(opts.cap);
  std::vector<TheoremCheck> out;
  for (const auto& e : registry()) {
    if (e.info.tier == Tier::extended && opts.tier != Tier::extended) continue;
    if (!opts.filter.empty() && e.info.id.find(opts.filter) == std::string::npos) continue;
    out.push_back(execute(e, ctx));
  }
  return out;
}

bool all_passed(const std::vector<TheoremCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.status == CheckStatus::pass; });
}

std::string to_json(const std::vector<TheoremCheck>& checks, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::map<std::string_view, std::size_t> tally{{"pass", 0}, {"fail", 0}, {"skipped", 0}};
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["locus"] = c.locus;
    j["tier"] = tier_name(c.tier);
    j["observational"] = c.observational;
    j["status"] = status_name(c.status);
    j["corpus"] = c.corpus;
    auto ms = nlohmann::ordered_json::array();
    for (const auto& m : c.members) {
      nlohmann::ordered_json mj;
      mj["group"] = m.group;
      mj["expected"] = m.expected;
      mj["observed"] = m.observed;
      mj["status"] = status_name(m.status);
      ms.push_back(mj);
    }
    j["members"] = ms;
    arr.push_back(j);
    ++tally[status_name(c.status)];
  }
  nlohmann::ordered_json root;
  root["checks"] = arr;
  root["summary"] = {{"pass", tally["pass"]}, {"fail", tally["fail"]}, {"skipped", tally["skipped"]}};
  return root.dump(indent);
}

std::string to_text(const std::vector<TheoremCheck>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    std::string st(status_name(c.status));
    for (auto& ch : st) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << st << std::string(8 - st.size(), ' ') << c.id << "  " << c.locus << "\n";
    for (const auto& m : c.members) {
      if (m.status == CheckStatus::pass) continue;
      out << "        " << m.group << ": ";
      if (m.status == CheckStatus::skipped) {
        out << m.observed << "\n";
      } else {
        out << "expected " << m.expected << " | observed " << m.observed << "\n";
      }
    }
  }
  return out.str();
}

std::vector<ClassificationRow> classification_table(Family family, std::uint64_t from, std::uint64_t to,
                                                    Relation rel, std::size_t cap) {
  if (from > to) throw InputError("empty parameter range");
  if (family == Family::fixture || family == Family::pq || family == Family::psl3_3 ||
      family == Family::abelian || family == Family::generalized_dihedral) {
    throw InputError("classification tables need a family with one integer parameter");
  }
  std::vector<ClassificationRow> rows;
  for (auto n = from; n <= to; ++n) {
    const GroupSpec s = GroupSpec::of(family, {n});
    ClassificationRow row;
    row.group = s.display_name();
    row.relation = rel;
    try {
      const FiniteGroup g = build(s, cap);
      const ClassGraph cg = build_graph(g, rel);
      row.report = classify(cg.graph, row.group + "_" + std::string(relation_name(rel)));
    } catch (const CapacityError&) {
      row.skipped = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<ClassificationRow>& rows) {
  std::ostringstream out;
  out << "group,relation,status,cograph,chordal,split,threshold,claw_free,witnesses\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto& r : rows) {
    out << r.group << "," << relation_name(r.relation) << ",";
    if (r.skipped) {
      out << "skipped,,,,,,\n";
      continue;
    }
    const auto& p = r.report;
    out << "ok," << b(p.cograph) << "," << b(p.chordal) << "," << b(p.split) << "," << b(p.threshold) << ","
        << b(p.claw_free) << ",";
    std::vector<std::string> ws;
    for (const auto& [kind, labels] : p.witnesses) ws.push_back(kind + ":" + join(labels, " "));
    out << join(ws, "|") << "\n";
  }
  return out.str();
}

}  // namespace ccg
