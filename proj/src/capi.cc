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

#include "hkb/hkb.h"

#include <cstring>
#include <string>

#include "json.hpp"

#include "abduce.h"
#include "abframe.h"
#include "change.h"
#include "lang.h"
#include "model.h"
#include "parser.h"
#include "postulates.h"
#include "revise.h"
#include "vupdate.h"

using json = nlohmann::ordered_json;

struct hkb_kb {
  hkb::KnowledgeBase kb;
};

namespace {

thread_local std::string g_last_error;

char* CopyOut(const std::string& s) {
  char* buf = new char[s.size() + 1];
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

int CodeFor(const hkb::Error& e) {
  if (e.kind() == "input") return HKB_INPUT_ERROR;
  if (e.kind() == "no-solution") return HKB_NO_SOLUTION;
  if (e.kind() == "bound") return HKB_BOUND_ERROR;
  return HKB_INTERNAL_ERROR;
}

template <typename F>
int Guard(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const hkb::Error& e) {
    g_last_error = e.what();
    return CodeFor(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HKB_INTERNAL_ERROR;
  }
}

json ParseOptions(const char* options_json) {
  if (options_json == nullptr || *options_json == '\0') return json::object();
  json opts = json::parse(options_json, nullptr, false);
  if (opts.is_null()) return json::object();
  if (opts.is_discarded() || !opts.is_object()) {
    throw hkb::InputError("options must be a JSON object");
  }
  return opts;
}

json SortedArray(const std::set<std::string>& items) {
  json arr = json::array();
  for (const std::string& s : items) arr.push_back(s);
  return arr;
}

std::set<std::string> FactTexts(const hkb::KnowledgeBase& kb) {
  std::set<std::string> out;
  for (const hkb::Atom& a : kb.facts) out.insert(a.text());
  return out;
}

const char* ModeName(const hkb::KnowledgeBase& kb) {
  return kb.mode == hkb::Mode::kDdb ? "ddb" : "kb";
}

int Emit(const json& doc, char** out_json) {
  *out_json = CopyOut(doc.dump(2));
  return HKB_OK;
}

hkb::Clause ParseRequestClause(const char* alpha) {
  if (alpha == nullptr) throw hkb::InputError("request is null");
  std::string text = alpha;
  while (!text.empty() && (text.back() == ' ' || text.back() == '\n' ||
                           text.back() == '\t')) {
    text.pop_back();
  }
  if (!text.empty() && text.back() != '.') text += ".";
  return hkb::ParseClause(text);
}

}  // namespace

extern "C" {

int hkb_parse(const char* text, hkb_kb** out) {
  return Guard([&]() {
    if (text == nullptr || out == nullptr) {
      throw hkb::InputError("null argument");
    }
    *out = new hkb_kb{hkb::ParseProgram(text)};
    return HKB_OK;
  });
}

int hkb_parse_file(const char* path, hkb_kb** out) {
  return Guard([&]() {
    if (path == nullptr || out == nullptr) {
      throw hkb::InputError("null argument");
    }
    *out = new hkb_kb{hkb::ParseFile(path)};
    return HKB_OK;
  });
}

void hkb_free(hkb_kb* kb) { delete kb; }

int hkb_serialize(const hkb_kb* kb, char** out) {
  return Guard([&]() {
    if (kb == nullptr || out == nullptr) {
      throw hkb::InputError("null argument");
    }
    *out = CopyOut(hkb::Serialize(kb->kb));
    return HKB_OK;
  });
}

int hkb_model(const hkb_kb* kb, char** out_json) {
  return Guard([&]() {
    if (kb == nullptr || out_json == nullptr) {
      throw hkb::InputError("null argument");
    }
    std::set<std::string> model = hkb::LeastModel(kb->kb);
    std::vector<hkb::Violation> bad = hkb::ViolatedConstraints(kb->kb);
    json doc;
    doc["schema"] = "hkb/v1";
    doc["kind"] = "model";
    doc["mode"] = ModeName(kb->kb);
    doc["atoms"] = SortedArray(model);
    doc["satisfies_constraints"] = bad.empty();
    json viols = json::array();
    for (const hkb::Violation& v : bad) {
      viols.push_back({{"constraint", v.constraint.text()},
                       {"witness", v.witness.text()}});
    }
    doc["violations"] = viols;
    return Emit(doc, out_json);
  });
}

int hkb_revise(const hkb_kb* kb, const char* alpha, const char* options_json,
               char** out_json) {
  return Guard([&]() {
    if (kb == nullptr || alpha == nullptr || out_json == nullptr) {
      throw hkb::InputError("null argument");
    }
    json opts = ParseOptions(options_json);
    hkb::Clause req = ParseRequestClause(alpha);

    std::string strat = opts.value("strategy", std::string());
    std::string algo = opts.value("algo", std::string());
    if (algo.empty()) {
      algo = strat.empty() ? "generalized"
             : (strat == "minimal" || strat == "maximal") ? "kernel"
                                                          : "partial-meet";
    }

    std::vector<hkb::RevisionOutcome> outcomes;
    if (algo == "generalized") {
      if (!strat.empty()) {
        throw hkb::InputError(
            "strategy applies to kernel or partial-meet revision");
      }
      hkb::ReviseOptions ropts;
      ropts.depth_limit = opts.value("depth_limit", ropts.depth_limit);
      ropts.trace = opts.value("trace", false);
      if (opts.value("all_solutions", false)) {
        outcomes = hkb::AllMinimalRevisions(kb->kb, req, ropts);
      } else {
        outcomes = {hkb::GeneralizedRevision(kb->kb, req, ropts)};
      }
    } else if (algo == "kernel" || algo == "partial-meet") {
      hkb::ChangeStrategy strategy = hkb::ParseStrategy(
          strat.empty() ? (algo == "kernel" ? "minimal" : "full-meet") : strat);
      hkb::RevisionOutcome o;
      o.kb_after = algo == "kernel"
                       ? hkb::KernelRevision(kb->kb, req, strategy)
                       : hkb::PartialMeetRevision(kb->kb, req, strategy);
      std::set<std::string> before = FactTexts(kb->kb);
      std::set<std::string> now = FactTexts(o.kb_after);
      for (const std::string& f : now) {
        if (!before.count(f)) o.inserted.insert(f);
      }
      for (const std::string& f : before) {
        if (!now.count(f)) o.deleted.insert(f);
      }
      o.unsatisfiable = !hkb::RequestHolds(o.kb_after, req);
      outcomes = {std::move(o)};
    } else {
      throw hkb::InputError(
          "unknown revision algorithm: " + algo +
          " (expected generalized, kernel, or partial-meet)");
    }

    json doc;
    doc["schema"] = "hkb/v1";
    doc["kind"] = "revision";
    doc["request"] = req.text();
    doc["algo"] = algo;
    doc["vacuous"] = !outcomes.empty() && outcomes.front().vacuous;
    doc["unsatisfiable"] =
        !outcomes.empty() && outcomes.front().unsatisfiable;
    json arr = json::array();
    for (const hkb::RevisionOutcome& o : outcomes) {
      json item;
      item["inserted"] = SortedArray(o.inserted);
      item["deleted"] = SortedArray(o.deleted);
      item["facts_after"] = SortedArray(FactTexts(o.kb_after));
      item["kb_after"] = hkb::Serialize(o.kb_after);
      json tr = json::array();
      for (const std::string& line : o.trace) tr.push_back(line);
      item["trace"] = tr;
      arr.push_back(std::move(item));
    }
    doc["outcomes"] = arr;
    Emit(doc, out_json);
    if (!outcomes.empty() && outcomes.front().unsatisfiable) {
      g_last_error = "request clashes with the rules and constraints";
      return HKB_NO_SOLUTION;
    }
    return HKB_OK;
  });
}

int hkb_view_update(const hkb_kb* kb, const char* request, int insert,
                    const char* options_json, char** out_json) {
  return Guard([&]() {
    if (kb == nullptr || request == nullptr || out_json == nullptr) {
      throw hkb::InputError("null argument");
    }
    json opts = ParseOptions(options_json);
    hkb::Atom goal = hkb::ParseGroundAtom(request);

    hkb::ViewUpdateOptions vopts;
    if (opts.contains("algo")) {
      vopts.algo = hkb::ParseAlgo(opts["algo"].get<std::string>());
    }
    vopts.all_solutions = opts.value("all_solutions", false);
    vopts.depth_limit = opts.value("depth_limit", vopts.depth_limit);
    vopts.node_cap = opts.value("node_cap", vopts.node_cap);
    hkb::UpdateDirection dir = insert ? hkb::UpdateDirection::kInsert
                                      : hkb::UpdateDirection::kDelete;

    std::vector<hkb::UpdateTransaction> txns =
        hkb::ViewUpdate(kb->kb, goal, dir, vopts);

    json doc;
    doc["schema"] = "hkb/v1";
    doc["kind"] = "view-update";
    doc["request"] = goal.text();
    doc["direction"] = insert ? "insert" : "delete";
    doc["algo"] = opts.value("algo", "materialized");
    json arr = json::array();
    for (const hkb::UpdateTransaction& t : txns) {
      json item;
      item["insert"] = SortedArray(t.ins);
      item["delete"] = SortedArray(t.del);
      item["provenance"] = t.provenance;
      item["non_ground"] = t.non_ground;
      if (!t.non_ground) {
        item["facts_after"] =
            SortedArray(FactTexts(hkb::ApplyTransaction(kb->kb, t)));
      }
      arr.push_back(std::move(item));
    }
    doc["transactions"] = arr;
    return Emit(doc, out_json);
  });
}

int hkb_explain(const hkb_kb* kb, const char* request, int insert,
                const char* options_json, char** out_json) {
  return Guard([&]() {
    if (kb == nullptr || request == nullptr || out_json == nullptr) {
      throw hkb::InputError("null argument");
    }
    json opts = ParseOptions(options_json);
    hkb::Atom goal = hkb::ParseGroundAtom(request);
    hkb::IcOrder order = hkb::IcOrder::kCheckFirst;
    if (opts.contains("ic_order")) {
      order = hkb::ParseIcOrder(opts["ic_order"].get<std::string>());
    }
    int depth = opts.value("depth_limit", hkb::kDefaultDepthLimit);
    hkb::UpdateDirection dir = insert ? hkb::UpdateDirection::kInsert
                                      : hkb::UpdateDirection::kDelete;

    hkb::ExplanationFamily family =
        hkb::LocallyMinimalExplanations(kb->kb, goal, dir, order, depth);

    json doc;
    doc["schema"] = "hkb/v1";
    doc["kind"] = "explanations";
    doc["goal"] = family.goal.text();
    doc["direction"] = insert ? "insert" : "delete";
    json arr = json::array();
    for (const hkb::ExplanationSet& e : family.members) {
      arr.push_back(
          {{"insert", SortedArray(e.add)}, {"delete", SortedArray(e.remove)}});
    }
    doc["members"] = arr;
    json filt = json::array();
    for (const std::string& f : family.filtered) filt.push_back(f);
    doc["filtered"] = filt;
    doc["depth_cut"] = family.depth_cut_present;
    return Emit(doc, out_json);
  });
}

int hkb_check(const hkb_kb* before, const hkb_kb* after, const char* alpha,
              char** out_json) {
  return Guard([&]() {
    if (before == nullptr || after == nullptr || alpha == nullptr ||
        out_json == nullptr) {
      throw hkb::InputError("null argument");
    }
    hkb::Clause req = ParseRequestClause(alpha);
    hkb::PostulateReport report =
        hkb::CheckRevisionPostulates(before->kb, req, after->kb);

    json doc;
    doc["schema"] = "hkb/v1";
    doc["kind"] = "postulates";
    doc["request"] = req.text();
    doc["all_pass"] = report.all_pass();
    json arr = json::array();
    for (const hkb::PostulateResult& r : report.results) {
      arr.push_back({{"name", r.name},
                     {"label", r.label},
                     {"pass", r.pass},
                     {"bounded", r.bounded},
                     {"witness", r.witness}});
    }
    doc["results"] = arr;
    return Emit(doc, out_json);
  });
}

int hkb_lab(const char* options_json, char** out_json) {
  return Guard([&]() {
    if (out_json == nullptr) throw hkb::InputError("null argument");
    json opts = ParseOptions(options_json);
    uint64_t seed = opts.value("seed", uint64_t{1});
    int instances = opts.value("instances", 25);
    int max_ab = opts.value("max_abducibles", 4);
    if (instances < 0 || max_ab < 2) {
      throw hkb::InputError("lab needs instances >= 0 and max_abducibles >= 2");
    }
    hkb::LawReport report = hkb::LabSweep(seed, instances, max_ab);

    json doc;
    doc["schema"] = "hkb/v1";
    doc["kind"] = "lab";
    doc["seed"] = seed;
    doc["instances"] = instances;
    doc["checks"] = report.checks;
    doc["ok"] = report.ok();
    json viols = json::array();
    for (const std::string& v : report.violations) viols.push_back(v);
    doc["violations"] = viols;
    return Emit(doc, out_json);
  });
}

void hkb_string_free(char* s) { delete[] s; }

const char* hkb_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
