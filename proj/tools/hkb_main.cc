// Copyright 2026 The hkb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front door. Every operation goes through the C interface; the
// code here only parses flags, forwards options as JSON, and renders results.

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hkb/hkb.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitInputError = 2;

int ExitCode(int status) {
  switch (status) {
    case HKB_OK:
      return kExitOk;
    case HKB_NO_SOLUTION:
      return kExitNoSolution;
    default:
      return kExitInputError;
  }
}

struct KbHandle {
  hkb_kb* kb = nullptr;
  ~KbHandle() { hkb_free(kb); }
};

struct OutString {
  char* s = nullptr;
  ~OutString() { hkb_string_free(s); }
};

int Fail(int status) {
  std::cerr << "error: " << hkb_last_error() << "\n";
  return ExitCode(status);
}

int LoadKb(const std::string& path, KbHandle* out) {
  return hkb_parse_file(path.c_str(), &out->kb);
}

std::string RenderSet(const json& arr) {
  std::string s = "{";
  bool first = true;
  for (const auto& item : arr) {
    if (!first) s += ", ";
    first = false;
    s += item.get<std::string>();
  }
  return s + "}";
}

void PrintTransaction(const json& t) {
  if (t["insert"].empty() && t["delete"].empty()) {
    std::cout << "no change\n";
  } else {
    std::cout << "insert " << RenderSet(t["insert"]) << " delete "
              << RenderSet(t["delete"]) << "\n";
  }
  if (t.contains("facts_after")) {
    std::cout << "  facts after: " << RenderSet(t["facts_after"]) << "\n";
  } else if (t.value("non_ground", false)) {
    std::cout << "  (uses a fresh constant; pick a value before applying)\n";
  }
}

int RunModel(const std::string& path, bool as_json) {
  KbHandle kb;
  if (int rc = LoadKb(path, &kb); rc != HKB_OK) return Fail(rc);
  OutString out;
  if (int rc = hkb_model(kb.kb, &out.s); rc != HKB_OK) return Fail(rc);
  if (as_json) {
    std::cout << out.s << "\n";
    return kExitOk;
  }
  json doc = json::parse(out.s);
  for (const auto& atom : doc["atoms"]) {
    std::cout << atom.get<std::string>() << "\n";
  }
  if (!doc["satisfies_constraints"].get<bool>()) {
    for (const auto& v : doc["violations"]) {
      std::cerr << "constraint violated: " << v["constraint"].get<std::string>()
                << " by " << v["witness"].get<std::string>() << "\n";
    }
  }
  return kExitOk;
}

int RunRevise(const std::string& path, const std::string& goal, bool del,
              const std::string& algo, const std::string& strategy,
              bool all_solutions, bool trace, int depth_limit, bool as_json) {
  KbHandle kb;
  if (int rc = LoadKb(path, &kb); rc != HKB_OK) return Fail(rc);

  std::string alpha = goal;
  if (del && alpha.rfind(":-", 0) != 0) alpha = ":- " + alpha;

  json opts = json::object();
  if (!algo.empty()) opts["algo"] = algo;
  if (!strategy.empty()) opts["strategy"] = strategy;
  opts["all_solutions"] = all_solutions;
  opts["trace"] = trace;
  if (depth_limit > 0) opts["depth_limit"] = depth_limit;

  OutString out;
  int rc = hkb_revise(kb.kb, alpha.c_str(), opts.dump().c_str(), &out.s);
  if (out.s == nullptr) return Fail(rc);
  if (as_json) {
    std::cout << out.s << "\n";
    if (rc != HKB_OK) std::cerr << "error: " << hkb_last_error() << "\n";
    return ExitCode(rc);
  }
  json doc = json::parse(out.s);
  if (trace && !doc["outcomes"].empty()) {
    std::cout << "Input: revise by " << doc["request"].get<std::string>()
              << "\n";
    for (const auto& line : doc["outcomes"][0]["trace"]) {
      std::cout << line.get<std::string>() << "\n";
    }
  }
  int n = 1;
  for (const auto& o : doc["outcomes"]) {
    std::cout << "outcome " << n++ << ": insert " << RenderSet(o["inserted"])
              << " delete " << RenderSet(o["deleted"]) << "\n";
    std::cout << "  facts after: " << RenderSet(o["facts_after"]) << "\n";
  }
  if (rc != HKB_OK) std::cerr << "error: " << hkb_last_error() << "\n";
  return ExitCode(rc);
}

int RunViewUpdate(const std::string& path, const std::string& ins,
                  const std::string& del, const std::string& algo,
                  bool all_solutions, int depth_limit, int node_cap,
                  bool as_json) {
  KbHandle kb;
  if (int rc = LoadKb(path, &kb); rc != HKB_OK) return Fail(rc);

  json opts = json::object();
  if (!algo.empty()) opts["algo"] = algo;
  opts["all_solutions"] = all_solutions;
  if (depth_limit > 0) opts["depth_limit"] = depth_limit;
  if (node_cap > 0) opts["node_cap"] = node_cap;

  const bool inserting = !ins.empty();
  const std::string& request = inserting ? ins : del;
  OutString out;
  int rc = hkb_view_update(kb.kb, request.c_str(), inserting ? 1 : 0,
                           opts.dump().c_str(), &out.s);
  if (rc != HKB_OK) return Fail(rc);
  if (as_json) {
    std::cout << out.s << "\n";
    return kExitOk;
  }
  json doc = json::parse(out.s);
  for (const auto& t : doc["transactions"]) PrintTransaction(t);
  return kExitOk;
}

int RunExplain(const std::string& path, const std::string& goal, bool del,
               const std::string& ic_order, int depth_limit, bool as_json) {
  KbHandle kb;
  if (int rc = LoadKb(path, &kb); rc != HKB_OK) return Fail(rc);

  json opts = json::object();
  if (!ic_order.empty()) opts["ic_order"] = ic_order;
  if (depth_limit > 0) opts["depth_limit"] = depth_limit;

  OutString out;
  int rc = hkb_explain(kb.kb, goal.c_str(), del ? 0 : 1, opts.dump().c_str(),
                       &out.s);
  if (rc != HKB_OK) return Fail(rc);
  if (as_json) {
    std::cout << out.s << "\n";
    return kExitOk;
  }
  json doc = json::parse(out.s);
  for (const auto& m : doc["members"]) {
    std::cout << "insert " << RenderSet(m["insert"]) << " delete "
              << RenderSet(m["delete"]) << "\n";
  }
  if (doc["depth_cut"].get<bool>()) {
    std::cerr << "note: the depth limit cut some branches\n";
  }
  return kExitOk;
}

int RunCheck(const std::string& path, const std::string& against,
             const std::string& alpha, bool as_json) {
  KbHandle before, after;
  if (int rc = LoadKb(path, &before); rc != HKB_OK) return Fail(rc);
  if (int rc = LoadKb(against, &after); rc != HKB_OK) return Fail(rc);

  OutString out;
  int rc = hkb_check(before.kb, after.kb, alpha.c_str(), &out.s);
  if (rc != HKB_OK) return Fail(rc);
  if (as_json) {
    std::cout << out.s << "\n";
    json doc = json::parse(out.s);
    return doc["all_pass"].get<bool>() ? kExitOk : kExitNoSolution;
  }
  json doc = json::parse(out.s);
  for (const auto& r : doc["results"]) {
    std::string line = r["name"].get<std::string>() + " " +
                       r["label"].get<std::string>() + ": ";
    if (r["pass"].get<bool>()) {
      line += "pass";
    } else {
      line += r["bounded"].get<bool>() ? "bound exceeded" : "fail";
    }
    std::string witness = r["witness"].get<std::string>();
    if (!witness.empty()) line += " (" + witness + ")";
    std::cout << line << "\n";
  }
  bool ok = doc["all_pass"].get<bool>();
  std::cout << (ok ? "all postulates pass" : "some postulates fail") << "\n";
  return ok ? kExitOk : kExitNoSolution;
}

int RunLab(std::uint64_t seed, int instances, int max_abducibles,
           bool as_json) {
  json opts = json::object();
  opts["seed"] = seed;
  opts["instances"] = instances;
  opts["max_abducibles"] = max_abducibles;

  OutString out;
  int rc = hkb_lab(opts.dump().c_str(), &out.s);
  if (rc != HKB_OK) return Fail(rc);
  if (as_json) {
    std::cout << out.s << "\n";
    json doc = json::parse(out.s);
    return doc["ok"].get<bool>() ? kExitOk : kExitNoSolution;
  }
  json doc = json::parse(out.s);
  std::cout << "instances: " << doc["instances"].get<int>() << "\n";
  std::cout << "checks: " << doc["checks"].get<int>() << "\n";
  for (const auto& v : doc["violations"]) {
    std::cout << "violation: " << v.get<std::string>() << "\n";
  }
  bool ok = doc["ok"].get<bool>();
  std::cout << (ok ? "all laws hold" : "violations found") << "\n";
  return ok ? kExitOk : kExitNoSolution;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Horn knowledge-base dynamics: revision, view updates, and "
               "rationality checks"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "print machine-readable JSON (schema hkb/v1)");

  std::string path, goal, ins, del, algo, strategy, ic_order, against, alpha;
  bool delete_goal = false, all_solutions = false, trace = false;
  int depth_limit = 0, node_cap = 0, instances = 25, max_abducibles = 4;
  std::uint64_t seed = 1;

  CLI::App* model = app.add_subcommand("model", "print the least model");
  model->add_option("file", path, "program file")->required();

  CLI::App* revise = app.add_subcommand(
      "revise", "revise the knowledge base by a fact or denial");
  revise->add_option("file", path, "program file")->required();
  revise->add_option("--goal", goal, "ground fact, or denial body with :-")
      ->required();
  revise->add_flag("--delete", delete_goal,
                   "revise by the denial of the goal (make it underivable)");
  revise->add_option("--algo", algo,
                     "generalized (default), kernel, or partial-meet");
  revise->add_option("--strategy", strategy,
                     "minimal, maximal, full-meet, or maxichoice (selects the "
                     "kernel or partial-meet engine)");
  revise->add_flag("--all-solutions", all_solutions, "list every minimal outcome");
  revise->add_flag("--trace", trace, "print the step-by-step execution");
  revise->add_option("--depth-limit", depth_limit, "derivation depth limit");

  CLI::App* vu = app.add_subcommand(
      "view-update", "translate a view request into base-fact transactions");
  vu->add_option("file", path, "program file")->required();
  CLI::Option* oi = vu->add_option("--insert", ins, "ground atom to make derivable");
  CLI::Option* od = vu->add_option("--delete", del, "ground atom to make underivable");
  oi->excludes(od);
  od->excludes(oi);
  vu->add_option("--algo", algo, "sld, tableau, or materialized (default)");
  vu->add_flag("--all-solutions", all_solutions, "list every minimal transaction");
  vu->add_option("--depth-limit", depth_limit, "derivation depth limit");
  vu->add_option("--node-cap", node_cap, "tableau node cap");

  CLI::App* explain = app.add_subcommand(
      "explain", "locally minimal explanations for an update request");
  explain->add_option("file", path, "program file")->required();
  explain->add_option("--goal", goal, "ground atom")->required();
  explain->add_flag("--delete", delete_goal, "explain making the goal fail");
  explain->add_option("--ic-order", ic_order,
                      "first (prune during search) or last (filter after)");
  explain->add_option("--depth-limit", depth_limit, "derivation depth limit");

  CLI::App* check = app.add_subcommand(
      "check", "rationality postulates for a before/after transition");
  check->add_option("file", path, "knowledge base before")->required();
  check->add_option("--against", against, "knowledge base after")->required();
  check->add_option("--alpha", alpha, "revision request (fact or denial)")
      ->required();

  CLI::App* lab = app.add_subcommand(
      "lab", "randomized sweep of the model-revision laws");
  lab->add_option("--seed", seed, "random seed");
  lab->add_option("--instances", instances, "generated frameworks");
  lab->add_option("--max-abducibles", max_abducibles, "abducibles per framework");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (model->parsed()) return RunModel(path, as_json);
  if (revise->parsed()) {
    return RunRevise(path, goal, delete_goal, algo, strategy, all_solutions,
                     trace, depth_limit, as_json);
  }
  if (vu->parsed()) {
    if (ins.empty() == del.empty()) {
      std::cerr << "error: pass exactly one of --insert or --delete\n";
      return kExitInputError;
    }
    return RunViewUpdate(path, ins, del, algo, all_solutions, depth_limit,
                         node_cap, as_json);
  }
  if (explain->parsed()) {
    return RunExplain(path, goal, delete_goal, ic_order, depth_limit, as_json);
  }
  if (check->parsed()) return RunCheck(path, against, alpha, as_json);
  if (lab->parsed()) return RunLab(seed, instances, max_abducibles, as_json);
  return kExitInputError;
}
