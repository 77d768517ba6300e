// Acceptance run: one PASS/FAIL line per criterion, then the failing detail.
// Exits 1 when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ccg/ccgraph.hpp"
#include "ccg/error.hpp"
#include "ccg/families.hpp"
#include "ccg/verifier.hpp"

using namespace ccg;

namespace {

struct Result {
  bool ok = true;
  std::vector<std::string> notes;

  void need(bool cond, std::string what) {
    if (!cond) {
      ok = false;
      notes.push_back(std::move(what));
    }
  }
  void note(std::string what) { notes.push_back(std::move(what)); }
};

// Runs registered checks; observational ones only contribute notes.
void checks(Result& r, std::initializer_list<const char*> ids) {
  for (const char* id : ids) {
    const auto c = run_check(id);
    if (c.status == CheckStatus::pass) continue;
    r.ok = false;
    r.notes.push_back(std::string(id) + ": " + std::string(status_name(c.status)));
    for (const auto& m : c.members) {
      if (m.status == CheckStatus::pass) continue;
      r.notes.push_back("  " + m.group + ": expected " + m.expected);
      r.notes.push_back("  " + std::string(m.group.size(), ' ') + "  observed " + m.observed);
    }
  }
}

bool induces(const SimpleGraph& g, PatternKind k, std::initializer_list<const char*> labels) {
  Witness w{k, {}};
  for (const char* l : labels) w.vertices.push_back(g.index_of(l));
  return replay(g, w);
}

std::string yn(bool b) { return b ? "yes" : "no"; }

Result criterion8() {
  Result r;
  checks(r, {"M12-ccc-ncc-patterns", "M12-reference-edges"});
  const auto g = build(GroupSpec::named("M12"));
  const auto scc = build_graph(g, Relation::scc);
  const auto rep = classify(scc.graph, "M12 SCC");
  r.need(!rep.split, "SCC(M12) is split");
  r.need(induces(scc.graph, PatternKind::TwoK2, {"2A", "2B", "11A", "11B"}),
         "SCC(M12): {2A,2B,11A,11B} does not induce 2K2");
  r.note("SCC(M12) recorded: cograph=" + yn(rep.cograph) + " chordal=" + yn(rep.chordal));
  return r;
}

Result criterion11() {
  Result r;
  checks(r, {"sz8-class-census"});
  const auto g = build(GroupSpec::named("Sz8"));
  PairPredicates preds(g);
  for (Relation rel : {Relation::ccc, Relation::ncc}) {
    const auto cg = build_graph(g, rel, preds);
    const auto name = std::string(relation_name(rel)) + "(Sz8)";
    r.need(is_cograph(cg.graph), name + " is not a cograph");
    r.need(is_chordal(cg.graph), name + " is not chordal");
  }
  const auto scc = build_graph(g, Relation::scc, preds).graph;
  r.need(is_cograph(scc), "SCC(Sz8) is not a cograph");
  r.need(!is_chordal(scc), "SCC(Sz8) is chordal");
  r.need(induces(scc, PatternKind::C4, {"B1", "D3", "X1", "D2"}), "SCC(Sz8): C4 (B1,D3,X1,D2) not induced");
  r.need(induces(scc, PatternKind::Claw, {"D1", "B1", "A1", "X1"}), "SCC(Sz8): claw (D1;B1,A1,X1) not induced");
  return r;
}

struct Criterion {
  int number;
  const char* title;
  double limit_s;  // 0: no runtime bound
  std::function<Result()> run;
};

Result of(std::initializer_list<const char*> ids) {
  Result r;
  checks(r, ids);
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {1, "dihedral CCC shapes, n = 3..40", 5, [] { return of({"dihedral-ccc-shape-3..40"}); }},
      {2, "dicyclic CCC shapes, n = 2..20", 5, [] { return of({"dicyclic-ccc-shape-2..20"}); }},
      {3, "dihedral NCC shapes and split/threshold, n = 3..40 off powers of 2", 10,
       [] { return of({"dihedral-ncc-shape-3..40", "dihedral-ncc-classes-3..40"}); }},
      {4, "dicyclic NCC shape under the hypothesis, verdicts recorded for n = 2..20", 0,
       [] { return of({"dicyclic-ncc-shape-2..20"}); }},
      {5, "Sym(n) CCC cograph/split/threshold/claw thresholds and witnesses, n = 3..7", 60,
       [] {
         return of({"sym-ccc-cograph-3..7", "sym-ccc-split-threshold-3..7", "sym-ccc-claw-free-3..7",
                    "sym-named-witnesses"});
       }},
      {6, "Alt(n) CCC cograph/split/threshold/claw thresholds and witnesses, n = 4..8", 300,
       [] {
         return of({"alt-ccc-cograph-4..8", "alt-ccc-split-threshold-4..8", "alt-ccc-claw-free-4..8",
                    "alt-named-witnesses"});
       }},
      {7, "M11 graphs", 30, [] { return of({"M11-ccc-equals-ncc", "M11-classes", "M11-structure"}); }},
      {8, "M12 patterns, reference edges and SCC", 900, criterion8},
      {9, "M22 graphs", 0, [] { return of({"M22-ccc", "M22-ncc", "M22-scc"}); }},
      {10, "PSL(3,3) graphs", 120,
       [] { return of({"psl33-ccc-equals-ncc", "psl33-reference-edges", "psl33-classes"}); }},
      {11, "Sz(8) census and graphs", 300, criterion11},
      {12, "EPPO corpus", 0,
       [] { return of({"eppo-corpus-is-eppo", "eppo-cograph", "eppo-chordal", "eppo-ncc-claw-free"}); }},
      {13, "groups of order pq", 0, [] { return of({"pq-cograph-chordal", "pq-2k2-claw-free"}); }},
      {14, "minimal simple groups: SCC cograph and invariable generation complement", 600,
       [] { return of({"minimal-simple-scc-cograph", "minimal-simple-lambda-complement"}); }},
      {15, "structural lemmas on the default corpus", 0,
       [] {
         return of({"same-prime-adjacency", "p-element-ccc-distance", "relation-chain", "solvable-scc-complete"});
       }},
      {16, "recognizer cross-validation", 0, [] { return of({"recognizer-cross-validation"}); }},
      {17, "Sylow witnesses", 0, [] { return of({"sylow-witnesses"}); }},
  };

  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const Error& e) {
      r.ok = false;
      r.note(std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      r.ok = false;
      r.note("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_s) + " s");
    }
    failed += !r.ok;
    std::printf("%s  %2d  %s  (%.1f s)\n", r.ok ? "PASS" : "FAIL", c.number, c.title, secs);
    for (const auto& n : r.notes) std::printf("        %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d passed, %d failed\n", all.size(), static_cast<int>(all.size()) - failed, failed);
  return failed ? 1 : 0;
}
