// ccg: build conjugacy-class graphs of permutation groups and classify them.
//
// Exit codes: 0 ok, 1 a check or verification failed, 2 bad input,
// 3 capacity exceeded, 4 fixture integrity problem.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccg/ccgraph.hpp"
#include "ccg/error.hpp"
#include "ccg/families.hpp"
#include "ccg/graph_props.hpp"
#include "ccg/verifier.hpp"

namespace {

using namespace ccg;

struct Selector {
  std::string fixture;
  std::optional<std::uint64_t> dihedral, dicyclic, sym, alt, cyclic, psl2, heisenberg;
  std::string abelian, gendihedral, pq;
  bool psl33 = false;
  std::string gens;
  std::size_t degree = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--fixture", fixture, "Fixture name, e.g. M11, M12, M22, Sz8");
    cmd->add_option("--dihedral", dihedral, "Dihedral group D_2n of order 2n");
    cmd->add_option("--dicyclic", dicyclic, "Dicyclic group T_4n of order 4n");
    cmd->add_option("--sym", sym, "Symmetric group Sym(n)");
    cmd->add_option("--alt", alt, "Alternating group Alt(n)");
    cmd->add_option("--cyclic", cyclic, "Cyclic group C_n");
    cmd->add_option("--abelian", abelian, "Abelian group from invariant factors, e.g. 4,2");
    cmd->add_option("--gendihedral", gendihedral, "Generalized dihedral Dih(A), A given by invariant factors");
    cmd->add_option("--psl2", psl2, "PSL(2,q) on the projective line, q a prime power");
    cmd->add_flag("--psl33", psl33, "PSL(3,3) on the 13 points of the projective plane");
    cmd->add_option("--pq", pq, "Non-abelian C_p:C_q given as p,q with q | p-1");
    cmd->add_option("--heisenberg", heisenberg, "Heisenberg group of order p^3, p odd");
    cmd->add_option("--gens", gens, "Generators in 1-based cycle notation, separated by ';'");
    cmd->add_option("--degree", degree, "Degree for --gens (default: largest point used)");
  }
};

std::vector<std::uint64_t> parse_list(const std::string& text, const char* flag) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError(std::string(flag) + " expects comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw InputError(std::string(flag) + " needs at least one integer");
  return out;
}

FiniteGroup from_generators(const Selector& s, std::size_t cap) {
  std::vector<std::string> parts;
  std::stringstream in(s.gens);
  std::string tok;
  while (std::getline(in, tok, ';')) {
    if (tok.find_first_not_of(" \t") != std::string::npos) parts.push_back(tok);
  }
  if (parts.empty()) throw InputError("--gens needs at least one permutation");
  std::size_t degree = s.degree;
  if (degree == 0) {
    for (const auto& p : parts) {
      std::size_t num = 0;
      bool in_num = false;
      for (char c : p + " ") {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          num = num * 10 + static_cast<std::size_t>(c - '0');
          in_num = true;
        } else if (in_num) {
          degree = std::max(degree, num);
          num = 0;
          in_num = false;
        }
      }
    }
  }
  if (degree == 0) degree = 1;
  std::vector<Permutation> perms;
  for (const auto& p : parts) perms.push_back(Permutation::parse(p, degree));
  return enumerate_group(perms, cap, "G");
}

FiniteGroup select_group(const Selector& s, std::size_t cap) {
  std::vector<GroupSpec> specs;
  if (!s.fixture.empty()) specs.push_back(GroupSpec::named(s.fixture));
  if (s.dihedral) specs.push_back(GroupSpec::of(Family::dihedral, {*s.dihedral}));
  if (s.dicyclic) specs.push_back(GroupSpec::of(Family::dicyclic, {*s.dicyclic}));
  if (s.sym) specs.push_back(GroupSpec::of(Family::symmetric, {*s.sym}));
  if (s.alt) specs.push_back(GroupSpec::of(Family::alternating, {*s.alt}));
  if (s.cyclic) specs.push_back(GroupSpec::of(Family::cyclic, {*s.cyclic}));
  if (!s.abelian.empty()) specs.push_back(GroupSpec::of(Family::abelian, parse_list(s.abelian, "--abelian")));
  if (!s.gendihedral.empty()) {
    specs.push_back(GroupSpec::of(Family::generalized_dihedral, parse_list(s.gendihedral, "--gendihedral")));
  }
  if (s.psl2) specs.push_back(GroupSpec::of(Family::psl2, {*s.psl2}));
  if (s.psl33) specs.push_back(GroupSpec::of(Family::psl3_3, {}));
  if (!s.pq.empty()) specs.push_back(GroupSpec::of(Family::pq, parse_list(s.pq, "--pq")));
  if (s.heisenberg) specs.push_back(GroupSpec::of(Family::heisenberg, {*s.heisenberg}));
  const std::size_t count = specs.size() + (s.gens.empty() ? 0 : 1);
  if (count != 1) throw InputError("exactly one group selector is required (see --help)");
  if (!s.gens.empty()) return from_generators(s, cap);
  return build(specs.front(), cap);
}

std::string group_text(const FiniteGroup& g) {
  std::ostringstream out;
  out << "group " << g.name() << "\n";
  out << "degree " << g.degree() << "\n";
  out << "order " << g.order() << "\n";
  out << "center " << g.center().size() << "\n";
  out << "classes " << g.classes().size() << "\n";
  for (const auto& c : g.classes()) {
    out << "  " << c.label << " order " << c.elem_order << " size " << c.size << " rep " << g.element(c.rep).to_string()
        << "\n";
  }
  return out.str();
}

std::string group_json(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  j["group"] = g.name();
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["center"] = g.center().size();
  auto cls = nlohmann::ordered_json::array();
  for (const auto& c : g.classes()) {
    nlohmann::ordered_json cj;
    cj["label"] = c.label;
    cj["order"] = c.elem_order;
    cj["size"] = c.size;
    cj["rep"] = g.element(c.rep).to_string();
    cls.push_back(cj);
  }
  j["classes"] = cls;
  return j.dump(2) + "\n";
}

std::string graph_text(const ClassGraph& cg) {
  std::ostringstream out;
  out << cg.group << " " << relation_name(cg.relation) << ": " << cg.graph.size() << " vertices, "
      << cg.graph.edge_count() << " edges\n";
  for (std::size_t i = 0; i < cg.graph.size(); ++i) {
    out << "  " << cg.graph.label(i) << ":";
    for (std::size_t j = 0; j < cg.graph.size(); ++j) {
      if (cg.graph.adjacent(i, j)) out << " " << cg.graph.label(j);
    }
    out << "\n";
  }
  return out.str();
}

std::string report_text(const PropertyReport& r) {
  std::ostringstream out;
  auto b = [](bool v) { return v ? "yes" : "no"; };
  out << r.graph_id << "\n";
  out << "  cograph    " << b(r.cograph) << "\n";
  out << "  chordal    " << b(r.chordal) << "\n";
  out << "  split      " << b(r.split) << "\n";
  out << "  threshold  " << b(r.threshold) << "\n";
  out << "  claw_free  " << b(r.claw_free) << "\n";
  for (const auto& [kind, labels] : r.witnesses) {
    out << "  " << kind << ":";
    for (const auto& l : labels) out << " " << l;
    out << "\n";
  }
  return out.str();
}

Family parse_family(const std::string& name) {
  if (name == "cyclic") return Family::cyclic;
  if (name == "dihedral") return Family::dihedral;
  if (name == "dicyclic") return Family::dicyclic;
  if (name == "sym" || name == "symmetric") return Family::symmetric;
  if (name == "alt" || name == "alternating") return Family::alternating;
  if (name == "psl2") return Family::psl2;
  if (name == "heisenberg") return Family::heisenberg;
  throw InputError("unknown family '" + name + "' (cyclic, dihedral, dicyclic, sym, alt, psl2, heisenberg)");
}

void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (fmt == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw InputError("format '" + fmt + "' not supported here (" + list + ")");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy-class graphs of finite permutation groups"};
  app.require_subcommand(1, 1);

  std::size_t cap = kDefaultCap;
  std::string fixture_dir;
  app.add_option("--cap", cap, "Largest group or closure to enumerate")->capture_default_str();
  app.add_option("--fixture-dir", fixture_dir, "Directory holding <name>.fixture files");

  Selector sel;
  std::string relation = "ccc";
  std::string format;

  auto* group = app.add_subcommand("group", "Print order, center and class census");
  sel.attach(group);
  group->add_option("--format", format, "text or json");

  auto* graph = app.add_subcommand("graph", "Emit a conjugacy-class graph");
  sel.attach(graph);
  graph->add_option("--relation", relation, "ccc, ncc, scc or invgen")->capture_default_str();
  graph->add_option("--format", format, "dot, json or text (default dot)");

  auto* check = app.add_subcommand("check", "Classify a graph: cograph, chordal, split, threshold, claw-free");
  sel.attach(check);
  check->add_option("--relation", relation, "ccc, ncc, scc or invgen")->capture_default_str();
  check->add_option("--format", format, "json or text (default json)");

  std::string filter, tier = "default";
  bool list_only = false;
  auto* verify = app.add_subcommand("verify", "Run the registered claim checks");
  verify->add_option("--filter", filter, "Only checks whose id contains this text");
  verify->add_option("--tier", tier, "default or extended")->capture_default_str();
  verify->add_option("--format", format, "text or json (default text)");
  verify->add_flag("--list", list_only, "List check ids without running them");

  std::string family;
  std::uint64_t from = 0, to = 0;
  auto* table = app.add_subcommand("table", "Classification table over a parameter range");
  table->add_option("--family", family, "cyclic, dihedral, dicyclic, sym, alt, psl2, heisenberg")->required();
  table->add_option("--from", from, "First parameter")->required();
  table->add_option("--to", to, "Last parameter")->required();
  table->add_option("--relation", relation, "ccc, ncc, scc or invgen")->capture_default_str();
  table->add_option("--format", format, "csv or json (default csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::cerr << "ccg: arguments: " << msg << "\n";
    return 2;
  }

  std::string stage = "arguments";
  try {
    if (!fixture_dir.empty()) set_fixture_dir(fixture_dir);

    if (group->parsed()) {
      if (format.empty()) format = "text";
      check_format(format, {"text", "json"});
      stage = "construct";
      const FiniteGroup g = select_group(sel, cap);
      std::cout << (format == "json" ? group_json(g) : group_text(g));
      return 0;
    }

    if (graph->parsed() || check->parsed()) {
      const Relation rel = parse_relation(relation);
      if (graph->parsed()) {
        if (format.empty()) format = "dot";
        check_format(format, {"dot", "json", "text"});
      } else {
        if (format.empty()) format = "json";
        check_format(format, {"json", "text"});
      }
      stage = "construct";
      const FiniteGroup g = select_group(sel, cap);
      stage = "graph";
      const ClassGraph cg = build_graph(g, rel);
      if (graph->parsed()) {
        if (format == "dot") std::cout << to_dot(cg);
        else if (format == "json") std::cout << to_json(cg) << "\n";
        else std::cout << graph_text(cg);
        return 0;
      }
      stage = "classify";
      const PropertyReport rep = classify(cg.graph, cg.group + "_" + std::string(relation_name(rel)));
      std::cout << (format == "json" ? to_json(rep) + "\n" : report_text(rep));
      return 0;
    }

    if (verify->parsed()) {
      if (format.empty()) format = "text";
      check_format(format, {"text", "json"});
      RunOptions opts;
      opts.filter = filter;
      opts.tier = parse_tier(tier);
      opts.cap = cap;
      if (list_only) {
        for (const auto& c : registered_checks()) {
          if (c.tier == Tier::extended && opts.tier != Tier::extended) continue;
          if (!filter.empty() && c.id.find(filter) == std::string::npos) continue;
          std::cout << c.id << "  [" << tier_name(c.tier) << (c.observational ? ", observational" : "") << "]  "
                    << c.locus << "\n";
        }
        return 0;
      }
      stage = "verify";
      const auto results = run_all(opts);
      std::cout << (format == "json" ? to_json(results) + "\n" : to_text(results));
      return all_passed(results) ? 0 : 1;
    }

    if (table->parsed()) {
      if (format.empty()) format = "csv";
      check_format(format, {"csv", "json"});
      const Relation rel = parse_relation(relation);
      const Family fam = parse_family(family);
      stage = "table";
      const auto rows = classification_table(fam, from, to, rel, cap);
      if (format == "csv") {
        std::cout << to_csv(rows);
      } else {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
          if (r.skipped) {
            arr.push_back({{"group", r.group}, {"relation", relation_name(r.relation)}, {"status", "skipped"}});
          } else {
            arr.push_back(nlohmann::ordered_json::parse(to_json(r.report, -1)));
          }
        }
        std::cout << arr.dump(2) << "\n";
      }
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "ccg: " << stage << ": input error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "ccg: " << stage << ": capacity exceeded: " << e.what() << "\n";
    return 3;
  } catch (const IntegrityError& e) {
    std::cerr << "ccg: " << stage << ": fixture integrity: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "ccg: " << stage << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}
