// Command-line front end: check, purify, lift, frankl, lattice, enumerate.
// Exit codes: 0 success, 1 negative answer, 2 input error, 3 precondition
// violation.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "ucfam/enumeration.hpp"
#include "ucfam/family_io.hpp"
#include "ucfam/hyperiso.hpp"
#include "ucfam/lattice.hpp"
#include "ucfam/morphism.hpp"
#include "ucfam/purification.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

using nlohmann::json;

json family_json(const ucfam::SetFamily& family) {
  json members = json::array();
  for (ucfam::MemberSet m : family.members()) members.push_back(m.elements());
  return json{{"ground", family.ground_size()}, {"members", members}};
}

// Failed reads/parses report on stderr and exit with the input-error code.
ucfam::SetFamily load_family(const std::string& path) {
  try {
    return ucfam::read_family_file(path);
  } catch (const ucfam::Error& e) {
    std::cerr << path << ": " << e.what() << "\n";
    std::exit(kExitInput);
  }
}

int run_check(const std::string& path, bool as_json) {
  ucfam::SetFamily family = load_family(path);
  bool closed = ucfam::is_union_closed(family);
  bool pure = ucfam::is_pure(family);
  std::vector<int> redundant = ucfam::redundant_elements(family);
  std::vector<ucfam::MemberSet> minima = ucfam::minimal_members(family);
  ucfam::MemberSet ground_union = ucfam::family_union(family);

  if (as_json) {
    json minima_json = json::array();
    for (ucfam::MemberSet m : minima) minima_json.push_back(m.elements());
    std::cout << json{{"union_closed", closed},
                      {"pure", pure},
                      {"member_count", family.size()},
                      {"union", ground_union.elements()},
                      {"minimal_members", minima_json},
                      {"redundant_elements", redundant}}
                     .dump()
              << "\n";
  } else {
    std::cout << "union-closed: " << (closed ? "yes" : "no") << "\n";
    std::cout << "pure: " << (pure ? "yes" : "no") << "\n";
    std::cout << "members: " << family.size() << "\n";
    std::cout << "union: " << ground_union.to_string() << "\n";
    std::cout << "minimal-members:";
    for (ucfam::MemberSet m : minima) std::cout << " " << m.to_string();
    std::cout << "\n";
    std::cout << "redundant-elements:";
    if (redundant.empty()) std::cout << " none";
    for (int z : redundant) std::cout << " " << z;
    std::cout << "\n";
  }
  return closed ? kExitSuccess : kExitNegative;
}

int run_purify(const std::string& path, const std::string& order, bool as_json) {
  ucfam::SetFamily family = load_family(path);
  ucfam::RemovalOrder policy = order == "largest" ? ucfam::RemovalOrder::kLargestFirst
                                                  : ucfam::RemovalOrder::kSmallestFirst;
  ucfam::PurificationResult result = ucfam::purify(family, policy);
  for (const ucfam::PurificationStep& step : result.steps)
    std::cerr << "removed " << step.removed_element << " (" << step.after.size()
              << " members)\n";
  if (as_json) {
    json removed = json::array();
    for (const ucfam::PurificationStep& step : result.steps)
      removed.push_back(step.removed_element);
    std::cout << json{{"family", family_json(result.family)}, {"removed", removed}}.dump()
              << "\n";
  } else {
    std::cout << ucfam::write_family(result.family);
  }
  return kExitSuccess;
}

int run_lift(const std::string& path1, const std::string& path2, bool as_json) {
  ucfam::SetFamily first = load_family(path1);
  ucfam::SetFamily second = load_family(path2);
  auto reject = [](const ucfam::SetFamily& family, const std::string& path) {
    if (!ucfam::is_union_closed(family)) {
      std::cerr << path << ": the family is not union-closed\n";
      return true;
    }
    if (!ucfam::is_pure(family)) {
      std::cerr << path << ": the family is not pure\n";
      return true;
    }
    return false;
  };
  if (reject(first, path1) || reject(second, path2)) return kExitPrecondition;
  std::vector<ucfam::FamilyMap> isomorphisms = ucfam::find_isomorphisms(first, second, 1);
  if (isomorphisms.empty()) {
    std::cout << "no isomorphism\n";
    return kExitNegative;
  }
  ucfam::GroundMap ground_map = ucfam::extract_hyperisomorphism(isomorphisms.front());
  if (as_json) {
    json pairs = json::array();
    for (auto [from, to] : ground_map.pairs()) pairs.push_back(json::array({from, to}));
    std::cout << json{{"pairs", pairs}}.dump() << "\n";
  } else {
    for (auto [from, to] : ground_map.pairs()) std::cout << from << " -> " << to << "\n";
  }
  return kExitSuccess;
}

int run_frankl(const std::string& path, bool as_json) {
  ucfam::SetFamily family = load_family(path);
  std::vector<int> abundant = ucfam::frankl_abundant_elements(family);
  if (as_json) {
    json elements = json::array();
    for (int e : abundant)
      elements.push_back(
          json{{"element", e}, {"count", ucfam::member_star(family, e).size()}});
    std::cout << json{{"total", family.size()}, {"abundant", elements}}.dump() << "\n";
  } else {
    for (int e : abundant)
      std::cout << e << ": " << ucfam::member_star(family, e).size() << "/" << family.size()
                << "\n";
  }
  return abundant.empty() ? kExitNegative : kExitSuccess;
}

int run_lattice(const std::string& path, const std::string& dot_path, bool as_json) {
  ucfam::SetFamily family = load_family(path);
  ucfam::Lattice lattice = ucfam::to_lattice(family);
  std::string dot = ucfam::export_dot(lattice);
  if (as_json) {
    json nodes = json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) nodes.push_back(lattice.element(i).elements());
    json edges = json::array();
    for (auto [lower, upper] : lattice.cover_edges())
      edges.push_back(json::array({lower, upper}));
    std::cout << json{{"nodes", nodes},
                      {"edges", edges},
                      {"bottom", lattice.bottom()},
                      {"top", lattice.top()}}
                     .dump()
              << "\n";
  }
  if (!dot_path.empty()) {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) {
      std::cerr << dot_path << ": cannot write\n";
      return kExitInput;
    }
    out << dot;
  } else if (!as_json) {
    std::cout << dot;
  }
  return kExitSuccess;
}

int run_enumerate(int ground_size, bool pure_only, bool require_empty, bool canonical_classes,
                  bool count_only, const std::string& method_name, bool as_json) {
  ucfam::EnumerationMethod method = method_name == "direct"
                                        ? ucfam::EnumerationMethod::kDirectFilter
                                        : ucfam::EnumerationMethod::kRecursiveSplit;
  std::size_t count = 0;
  std::vector<ucfam::CanonicalForm> seen;
  auto emit = [&](const ucfam::SetFamily& family) {
    if (pure_only &&
        !(ucfam::family_union(family) == ucfam::MemberSet::full(family.ground_size()) &&
          ucfam::is_pure(family)))
      return;
    if (canonical_classes) {
      ucfam::CanonicalForm form = ucfam::canonical_form(family);
      if (std::find(seen.begin(), seen.end(), form) != seen.end()) return;
      seen.push_back(form);
    }
    ++count;
    if (count_only) return;
    if (as_json)
      std::cout << family_json(family).dump() << "\n";
    else
      std::cout << ucfam::write_family(family) << "\n";
  };
  ucfam::enumerate_union_closed(ground_size, require_empty, method, emit);
  if (count_only) {
    if (as_json)
      std::cout << json{{"count", count}}.dump() << "\n";
    else
      std::cout << count << "\n";
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"union-closed set family toolkit"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string path, path2, order = "smallest", dot_path, method = "split";
  int ground_size = 0;
  bool pure_only = false, require_empty = false, canonical_classes = false, count_only = false;

  auto with_json = [&as_json](CLI::App* command) {
    command->add_flag("--json", as_json, "machine-readable output");
    return command;
  };

  CLI::App* check = with_json(app.add_subcommand("check", "report closure, purity, and structure"));
  check->add_option("path", path, "family file")->required();

  CLI::App* purify =
      with_json(app.add_subcommand("purify", "remove redundant elements until pure"));
  purify->add_option("path", path, "family file")->required();
  purify->add_option("--order", order, "removal order: smallest|largest")
      ->check(CLI::IsMember({"smallest", "largest"}));

  CLI::App* lift = with_json(app.add_subcommand(
      "lift", "find an isomorphism and extract the ground-element bijection underneath"));
  lift->add_option("path1", path, "first family file")->required();
  lift->add_option("path2", path2, "second family file")->required();

  CLI::App* frankl =
      with_json(app.add_subcommand("frankl", "list elements in at least half the members"));
  frankl->add_option("path", path, "family file")->required();

  CLI::App* lattice =
      with_json(app.add_subcommand("lattice", "export the inclusion lattice as DOT"));
  lattice->add_option("path", path, "family file")->required();
  lattice->add_option("--dot", dot_path, "write DOT here instead of stdout");

  CLI::App* enumerate =
      with_json(app.add_subcommand("enumerate", "stream union-closed families"));
  enumerate->add_option("n", ground_size, "ground size")->required();
  enumerate->add_flag("--pure", pure_only, "only pure families spanning the ground");
  enumerate->add_flag("--require-empty", require_empty, "only families containing {}");
  enumerate->add_flag("--canonical", canonical_classes, "one family per relabeling class");
  enumerate->add_flag("--count", count_only, "print the count instead of the stream");
  enumerate->add_option("--method", method, "direct|split")
      ->check(CLI::IsMember({"direct", "split"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitInput;
  }

  try {
    if (*check) return run_check(path, as_json);
    if (*purify) return run_purify(path, order, as_json);
    if (*lift) return run_lift(path, path2, as_json);
    if (*frankl) return run_frankl(path, as_json);
    if (*lattice) return run_lattice(path, dot_path, as_json);
    if (*enumerate)
      return run_enumerate(ground_size, pure_only, require_empty, canonical_classes, count_only,
                           method, as_json);
  } catch (const ucfam::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitInput;
}
