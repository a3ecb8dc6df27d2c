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

#include "vupdate.h"

#include <algorithm>
#include <map>

#include "ground.h"
#include "model.h"
#include "parser.h"
#include "tableau.h"

namespace hkb {
namespace {

std::set<std::string> FactTexts(const KnowledgeBase& ddb) {
  std::set<std::string> out;
  for (const Atom& f : ddb.facts) out.insert(f.text());
  return out;
}

std::set<std::string> BasePreds(const KnowledgeBase& ddb) {
  std::set<std::string> views = ddb.view_preds();
  std::set<std::string> base;
  for (const auto& [pred, arity] : ddb.predicates()) {
    (void)arity;
    if (!views.count(pred) && pred != kNeqPred) base.insert(pred);
  }
  return base;
}

bool HasProjectionVar(const KnowledgeBase& ddb) {
  for (const Clause& r : ddb.rules) {
    if (r.is_fact()) continue;
    std::set<std::string> head_vars;
    for (const Term& t : r.head->args) {
      if (t.var) head_vars.insert(t.name);
    }
    for (const Literal& lit : r.body) {
      if (lit.is_guard()) continue;
      for (const Term& t : lit.atom.args) {
        if (t.var && !head_vars.count(t.name)) return true;
      }
    }
  }
  return false;
}

struct Expander {
  std::map<std::string, std::vector<Clause>> rules_by_head;
  std::set<std::string> edb;
  std::set<std::string> base;
  std::set<std::string> model;
  int depth_limit = kDefaultDepthLimit;
  std::set<std::string> active;

  static std::vector<SignedChange> One() { return {SignedChange{}}; }

  static std::vector<SignedChange> Combine(const std::vector<SignedChange>& a,
                                           const std::vector<SignedChange>& b) {
    std::vector<SignedChange> out;
    for (const SignedChange& x : a) {
      for (const SignedChange& y : b) {
        SignedChange m = x;
        m.ins.insert(y.ins.begin(), y.ins.end());
        m.del.insert(y.del.begin(), y.del.end());
        bool conflict = false;
        for (const std::string& f : m.ins) {
          if (m.del.count(f)) {
            conflict = true;
            break;
          }
        }
        if (!conflict && std::find(out.begin(), out.end(), m) == out.end()) {
          out.push_back(std::move(m));
        }
      }
    }
    return out;
  }

  static void Merge(std::vector<SignedChange>* into,
                    const std::vector<SignedChange>& from) {
    for (const SignedChange& c : from) {
      if (std::find(into->begin(), into->end(), c) == into->end()) {
        into->push_back(c);
      }
    }
  }

  std::vector<SignedChange> Insert(const Atom& a, int depth) {
    if (depth > depth_limit) throw BoundError("update propagation too deep");
    const std::string key = a.text();
    if (base.count(a.pred)) {
      if (edb.count(key)) return One();
      SignedChange c;
      c.ins.insert(key);
      return {c};
    }
    if (model.count(key)) return One();
    if (!active.insert("+" + key).second) return {};
    std::vector<SignedChange> out;
    auto it = rules_by_head.find(key);
    if (it != rules_by_head.end()) {
      for (const Clause& r : it->second) {
        std::vector<SignedChange> prod = One();
        for (const Literal& lit : r.body) {
          std::vector<SignedChange> opts;
          if (lit.neg) {
            opts = model.count(lit.atom.text()) ? Delete(lit.atom, depth + 1)
                                                : One();
          } else {
            opts = Insert(lit.atom, depth + 1);
          }
          prod = Combine(prod, opts);
          if (prod.empty()) break;
        }
        Merge(&out, prod);
      }
    }
    active.erase("+" + key);
    return out;
  }

  std::vector<SignedChange> Delete(const Atom& a, int depth) {
    if (depth > depth_limit) throw BoundError("update propagation too deep");
    const std::string key = a.text();
    if (base.count(a.pred)) {
      if (!edb.count(key)) return One();
      SignedChange c;
      c.del.insert(key);
      return {c};
    }
    if (!model.count(key)) return One();
    if (!active.insert("-" + key).second) return {};
    std::vector<SignedChange> prod = One();
    auto it = rules_by_head.find(key);
    if (it != rules_by_head.end()) {
      for (const Clause& r : it->second) {
        std::vector<SignedChange> options;
        for (const Literal& lit : r.body) {
          std::vector<SignedChange> opts;
          if (lit.neg) {
            opts = model.count(lit.atom.text()) ? One() : Insert(lit.atom, depth + 1);
          } else if (base.count(lit.atom.pred)) {
            opts = edb.count(lit.atom.text())
                       ? std::vector<SignedChange>{SignedChange{{}, {lit.atom.text()}}}
                       : One();
          } else {
            opts = model.count(lit.atom.text()) ? Delete(lit.atom, depth + 1) : One();
          }
          Merge(&options, opts);
        }
        prod = Combine(prod, options);
        if (prod.empty()) break;
      }
    }
    active.erase("-" + key);
    return prod;
  }
};

Expander MakeExpander(const KnowledgeBase& ddb, const Atom& request,
                      UpdateDirection dir, int depth_limit) {
  KnowledgeBase scratch = ddb;
  bool had = scratch.has_fact(request);
  scratch.add_fact(request);  // contributes the request's constants
  std::vector<std::string> universe = HerbrandUniverse(scratch);
  if (!had) scratch.remove_fact(request);
  if (dir == UpdateDirection::kInsert && HasProjectionVar(ddb)) {
    universe.push_back("@new1");
    universe.push_back("@new2");
  }

  Expander ex;
  ex.edb = FactTexts(ddb);
  ex.base = BasePreds(ddb);
  ex.model = LeastModel(ddb);
  ex.depth_limit = depth_limit;
  for (const Clause& r : ddb.rules) {
    if (r.is_fact()) continue;
    for (Clause& g : GroundClause(r, universe)) {
      ex.rules_by_head[g.head->text()].push_back(std::move(g));
    }
  }
  return ex;
}

KnowledgeBase Applied(const KnowledgeBase& ddb, const std::set<std::string>& ins,
                      const std::set<std::string>& del) {
  KnowledgeBase out = ddb;
  for (const std::string& f : del) out.remove_fact(ParseGroundAtom(f));
  for (const std::string& f : ins) out.add_fact(ParseGroundAtom(f));
  return out;
}

void ValidateRequest(const KnowledgeBase& ddb, const Atom& request) {
  if (!request.ground()) {
    throw InputError("view update request must be ground: " + request.text());
  }
  for (const auto& [pred, arity] : ddb.predicates()) {
    if (pred == request.pred && arity == static_cast<int>(request.args.size())) {
      return;
    }
  }
  throw InputError("unknown predicate in request: " + request.text());
}

bool SignedLess(const SignedChange& a, const SignedChange& b) {
  size_t sa = a.ins.size() + a.del.size();
  size_t sb = b.ins.size() + b.del.size();
  if (sa != sb) return sa < sb;
  if (a.ins != b.ins) return a.ins < b.ins;
  return a.del < b.del;
}

}  // namespace

bool SignedChange::operator<(const SignedChange& o) const {
  return SignedLess(*this, o);
}

VuAlgo ParseAlgo(const std::string& name) {
  if (name == "sld") return VuAlgo::kSld;
  if (name == "tableau") return VuAlgo::kTableau;
  if (name == "materialized") return VuAlgo::kMaterialized;
  throw InputError("unknown algorithm: " + name +
                   " (expected sld, tableau, or materialized)");
}

std::string UpdateTransaction::text() const {
  if (empty()) return "no change";
  std::string s;
  if (!ins.empty()) s += "insert " + RenderModel(ins);
  if (!del.empty()) {
    if (!s.empty()) s += " ";
    s += "delete " + RenderModel(del);
  }
  return s;
}

std::vector<SignedChange> ExpandUpdate(const KnowledgeBase& ddb, const Atom& request,
                                       UpdateDirection dir, int depth_limit) {
  ValidateRequest(ddb, request);
  Expander ex = MakeExpander(ddb, request, dir, depth_limit);
  std::vector<SignedChange> out = dir == UpdateDirection::kInsert
                                      ? ex.Insert(request, 0)
                                      : ex.Delete(request, 0);
  std::sort(out.begin(), out.end(), SignedLess);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::set<std::string>> EdbCuts(const KnowledgeBase& ddb,
                                           const Atom& request) {
  std::vector<std::set<std::string>> cuts;
  for (const SignedChange& c : ExpandUpdate(ddb, request, UpdateDirection::kInsert)) {
    if (!c.del.empty()) continue;
    if (!SatisfiesConstraints(Applied(ddb, c.ins, c.del))) continue;
    if (std::find(cuts.begin(), cuts.end(), c.ins) == cuts.end()) {
      cuts.push_back(c.ins);
    }
  }
  return cuts;
}

std::vector<UpdateTransaction> ViewUpdate(const KnowledgeBase& ddb,
                                          const Atom& request, UpdateDirection dir,
                                          const ViewUpdateOptions& opts) {
  ValidateRequest(ddb, request);
  const bool insert = dir == UpdateDirection::kInsert;
  const bool derivable = Entails(ddb, request);
  const char* provenance = opts.algo == VuAlgo::kSld          ? "sld"
                           : opts.algo == VuAlgo::kTableau    ? "tableau"
                                                              : "materialized";

  if (insert == derivable) {
    UpdateTransaction t;
    t.provenance = derivable ? "already derivable" : "already absent";
    return {t};
  }

  std::set<std::string> edb = FactTexts(ddb);
  std::vector<SignedChange> candidates;
  bool base_request = BasePreds(ddb).count(request.pred) != 0;

  if (base_request) {
    SignedChange c;
    (insert ? c.ins : c.del).insert(request.text());
    candidates.push_back(std::move(c));
  } else if (opts.algo == VuAlgo::kSld) {
    IcOrder order = insert ? IcOrder::kCheckFirst : IcOrder::kCheckLast;
    ExplanationFamily fam = LocallyMinimalExplanations(
        ddb, request, dir, order, opts.depth_limit);
    for (const ExplanationSet& e : fam.members) {
      SignedChange c;
      for (const std::string& f : e.add) {
        if (!edb.count(f)) c.ins.insert(f);
      }
      c.del = e.remove;
      candidates.push_back(std::move(c));
    }
  } else if (insert) {
    candidates = ExpandUpdate(ddb, request, dir, opts.depth_limit);
  } else {
    bool definite = true;
    for (const Clause& r : ddb.rules) {
      for (const Literal& l : r.body) {
        if (l.neg) definite = false;
      }
    }
    if (!definite) {
      // The deletion tableaux work on transformed definite programs. With
      // negation in the rules the materialized route falls back to the
      // model-guided expansion; an explicit tableau request cannot be served.
      if (opts.algo == VuAlgo::kTableau) {
        throw InputError(
            "the deletion tableau needs definite rules; use the materialized "
            "or sld algorithm for programs with negation");
      }
      candidates = ExpandUpdate(ddb, request, dir, opts.depth_limit);
    } else {
      Tableau t = opts.algo == VuAlgo::kTableau
                      ? DeletionTableau(ddb, request, opts.node_cap)
                      : MaterializedDeletionTableau(ddb, request, opts.node_cap);
      if (t.capped) throw BoundError("hyper tableau exceeded the node cap");
      if (opts.algo == VuAlgo::kTableau) {
        t = StrongMinimalityFilter(t, ddb, request);
      }
      for (const std::set<std::string>& cut : t.open_cuts()) {
        candidates.push_back(SignedChange{{}, cut});
      }
    }
  }

  std::vector<UpdateTransaction> out;
  for (const SignedChange& c : candidates) {
    KnowledgeBase applied = Applied(ddb, c.ins, c.del);
    if (Entails(applied, request) != insert) continue;
    if (!SatisfiesConstraints(applied)) continue;
    UpdateTransaction t;
    t.ins = c.ins;
    t.del = c.del;
    t.provenance = provenance;
    for (const std::string& f : c.ins) {
      if (f.find("@new") != std::string::npos) t.non_ground = true;
    }
    bool dup = false;
    for (const UpdateTransaction& have : out) {
      if (have.ins == t.ins && have.del == t.del) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(t));
  }

  // The materialized route serves non-minimal but still rational cuts; the
  // other routes keep only undominated transactions.
  if (insert && opts.algo != VuAlgo::kMaterialized) {
    std::vector<UpdateTransaction> kept;
    for (const UpdateTransaction& t : out) {
      bool dominated = false;
      for (const UpdateTransaction& o : out) {
        if (&o == &t) continue;
        bool sub = std::includes(t.ins.begin(), t.ins.end(), o.ins.begin(),
                                 o.ins.end()) &&
                   std::includes(t.del.begin(), t.del.end(), o.del.begin(),
                                 o.del.end());
        bool strict = o.ins.size() + o.del.size() < t.ins.size() + t.del.size();
        if (sub && strict) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(t);
    }
    out = std::move(kept);
  }

  std::sort(out.begin(), out.end(),
            [](const UpdateTransaction& a, const UpdateTransaction& b) {
              return SignedLess(SignedChange{a.ins, a.del},
                                SignedChange{b.ins, b.del});
            });
  if (out.empty()) {
    throw NoSolutionError(std::string("no transaction ") +
                          (insert ? "inserts " : "deletes ") + request.text());
  }
  if (!opts.all_solutions) out.resize(1);
  return out;
}

UpdateTransaction UnionTransaction(const std::vector<UpdateTransaction>& txns) {
  UpdateTransaction u;
  u.provenance = "union";
  for (const UpdateTransaction& t : txns) {
    u.ins.insert(t.ins.begin(), t.ins.end());
    u.del.insert(t.del.begin(), t.del.end());
    u.non_ground = u.non_ground || t.non_ground;
  }
  for (const std::string& f : u.ins) {
    if (u.del.count(f)) {
      throw InputError("solutions conflict on " + f + "; union undefined");
    }
  }
  return u;
}

KnowledgeBase ApplyTransaction(const KnowledgeBase& ddb,
                               const UpdateTransaction& txn) {
  for (const std::string& f : txn.del) {
    if (txn.ins.count(f)) {
      throw InputError("invariant breach: " + f + " both inserted and deleted");
    }
    if (!ddb.has_fact(ParseGroundAtom(f))) {
      throw InputError("invariant breach: deleting absent fact " + f);
    }
  }
  for (const std::string& f : txn.ins) {
    if (ddb.has_fact(ParseGroundAtom(f))) {
      throw InputError("invariant breach: inserting stored fact " + f);
    }
  }
  KnowledgeBase out = ddb;
  for (const std::string& f : txn.del) out.remove_fact(ParseGroundAtom(f));
  for (const std::string& f : txn.ins) out.add_fact(ParseGroundAtom(f));
  return out;
}

}  // namespace hkb
