#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/ccgraph.hpp"
#include "ccg/families.hpp"
#include "ccg/graph_props.hpp"

namespace ccg {

enum class CheckStatus { pass, fail, skipped };
enum class Tier { standard, extended };

std::string_view status_name(CheckStatus s) noexcept;  // "pass", "fail", "skipped"
std::string_view tier_name(Tier t) noexcept;           // "default", "extended"
Tier parse_tier(std::string_view s);                   // throws InputError

/// One corpus member: what the claim predicts and what was computed.
/// Observational entries carry an empty expectation and never fail.
struct MemberResult {
  std::string group;
  std::string expected;
  std::string observed;
  CheckStatus status = CheckStatus::pass;
};

struct TheoremCheck {
  std::string id;
  std::string locus;  // the claim, in words
  Tier tier = Tier::standard;
  bool observational = false;
  std::vector<std::string> corpus;
  std::vector<MemberResult> members;
  CheckStatus status = CheckStatus::pass;  // pass iff every member passes
};

struct RunOptions {
  std::string filter;  // substring of the id; empty selects everything
  Tier tier = Tier::standard;
  std::size_t cap = kDefaultCap;
};

struct CheckInfo {
  std::string id;
  std::string locus;
  Tier tier;
  bool observational;
};

// Registry in run order.
std::vector<CheckInfo> registered_checks();

// Throws InputError for an unknown id. Runs regardless of tier.
TheoremCheck run_check(std::string_view id, std::size_t cap = kDefaultCap);

// Checks whose id contains the filter, in registry order. The standard tier
// runs default checks only; extended adds the slow ones.
std::vector<TheoremCheck> run_all(const RunOptions& opts = {});

bool all_passed(const std::vector<TheoremCheck>& checks);

std::string to_json(const std::vector<TheoremCheck>& checks, int indent = 2);
// One "STATUS id  locus" line per check, then failing members indented.
std::string to_text(const std::vector<TheoremCheck>& checks);

struct ClassificationRow {
  std::string group;
  Relation relation = Relation::ccc;
  bool skipped = false;  // construction hit the capacity cap
  PropertyReport report;
};

// One row per parameter value in [from, to], in increasing order. Families
// taking a single integer parameter only.
std::vector<ClassificationRow> classification_table(Family family, std::uint64_t from, std::uint64_t to,
                                                    Relation rel, std::size_t cap = kDefaultCap);

// Header: group,relation,status,cograph,chordal,split,threshold,claw_free,witnesses
std::string to_csv(const std::vector<ClassificationRow>& rows);

}  // namespace ccg
