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

#include "tableau.h"

#include <algorithm>

#include "model.h"
#include "parser.h"

namespace hkb {
namespace {

std::string Mark(const Literal& lit) {
  return (lit.neg ? "~" : "") + lit.atom.text();
}

struct Engine {
  const TableauSpec& spec;
  Tableau out;
  std::set<std::vector<std::string>> visited;

  std::vector<std::string> Key(const std::vector<Literal>& branch) const {
    std::vector<std::string> key;
    key.reserve(branch.size());
    for (const Literal& lit : branch) key.push_back(Mark(lit));
    std::sort(key.begin(), key.end());
    return key;
  }

  bool Has(const std::vector<Literal>& branch, const Literal& lit) const {
    for (const Literal& have : branch) {
      if (have.neg == lit.neg && have.atom.text() == lit.atom.text()) return true;
    }
    return false;
  }

  bool HasComplement(const std::vector<Literal>& branch, const Literal& lit) const {
    for (const Literal& have : branch) {
      if (have.neg != lit.neg && have.atom.text() == lit.atom.text()) return true;
    }
    return false;
  }

  bool IsBase(const Atom& a) const { return spec.base_preds.count(a.pred) != 0; }

  // Returns false when the literal closes the branch; reason is set.
  bool Admit(const std::vector<Literal>& branch, const Literal& lit,
             std::string* reason) const {
    if (HasComplement(branch, lit)) {
      *reason = "complementary " + lit.atom.text();
      return false;
    }
    if (spec.undeletable_closure && lit.neg && IsBase(lit.atom) &&
        !spec.edb.count(lit.atom.text())) {
      *reason = "undeletable " + lit.atom.text();
      return false;
    }
    return true;
  }

  void RecordOpen(const std::vector<Literal>& branch) {
    TableauBranch b;
    b.literals = branch;
    b.open = true;
    for (const Literal& lit : branch) {
      if (lit.neg && IsBase(lit.atom)) b.cut.insert(lit.atom.text());
    }
    out.branches.push_back(std::move(b));
  }

  void RecordClosed(std::vector<Literal> branch, std::string reason) {
    TableauBranch b;
    b.literals = std::move(branch);
    b.open = false;
    b.close_reason = std::move(reason);
    out.branches.push_back(std::move(b));
  }

  bool Applicable(const DisjClause& c, const std::vector<Literal>& branch) const {
    for (const Literal& lit : c.head) {
      if (Has(branch, lit)) return false;
    }
    for (const Literal& lit : c.body) {
      if (!Has(branch, lit)) return false;
    }
    return true;
  }

  void Expand(const std::vector<Literal>& branch) {
    if (out.capped) return;
    std::vector<const DisjClause*> applicable;
    for (const DisjClause& c : spec.prog.clauses) {
      if (Applicable(c, branch)) applicable.push_back(&c);
    }
    if (applicable.empty()) {
      RecordOpen(branch);
      return;
    }
    for (const DisjClause* c : applicable) {
      if (c->head.empty()) {
        // A satisfied body with nothing to conclude refutes the branch.
        std::vector<std::string> key = Key(branch);
        key.push_back("#denial");
        if (visited.insert(key).second) {
          RecordClosed(branch, "refuted by " + c->text());
        }
        continue;
      }
      for (const Literal& lit : c->head) {
        if (out.capped) return;
        if (++out.nodes > spec.node_cap) {
          out.capped = true;
          return;
        }
        std::vector<Literal> child = branch;
        child.push_back(lit);
        std::string reason;
        if (!Admit(branch, lit, &reason)) {
          std::vector<std::string> key = Key(child);
          if (visited.insert(key).second) RecordClosed(std::move(child), reason);
          continue;
        }
        std::vector<std::string> key = Key(child);
        if (visited.insert(key).second) Expand(child);
      }
    }
  }
};

std::set<std::string> BasePreds(const KnowledgeBase& ddb) {
  std::set<std::string> views = ddb.view_preds();
  std::set<std::string> base;
  for (const auto& [pred, arity] : ddb.predicates()) {
    (void)arity;
    if (!views.count(pred) && pred != kNeqPred) base.insert(pred);
  }
  return base;
}

std::set<std::string> FactTexts(const KnowledgeBase& ddb) {
  std::set<std::string> out;
  for (const Atom& f : ddb.facts) out.insert(f.text());
  return out;
}

Tableau RunSeeded(TableauSpec spec) {
  Engine eng{spec, {}, {}};
  std::vector<Literal> start;
  for (const std::string& unit : eng.spec.units) {
    Atom a = ParseGroundAtom(unit);
    start.push_back(Literal{a, false});
  }
  for (const Literal& seed : eng.spec.seeds) {
    std::string reason;
    if (!eng.Admit(start, seed, &reason)) {
      eng.RecordClosed(start, reason);
      return std::move(eng.out);
    }
    start.push_back(seed);
  }
  eng.visited.insert(eng.Key(start));
  eng.Expand(start);
  return std::move(eng.out);
}

}  // namespace

std::string TableauBranch::text() const {
  std::string s = "{";
  for (size_t i = 0; i < literals.size(); ++i) {
    if (i) s += ", ";
    s += Mark(literals[i]);
  }
  s += "}";
  if (open) return s + " open";
  return s + " closed (" + close_reason + ")";
}

std::vector<std::set<std::string>> Tableau::open_cuts() const {
  std::vector<std::set<std::string>> cuts;
  for (const TableauBranch& b : branches) {
    if (!b.open) continue;
    if (std::find(cuts.begin(), cuts.end(), b.cut) == cuts.end()) {
      cuts.push_back(b.cut);
    }
  }
  return cuts;
}

Tableau BuildTableau(const TableauSpec& spec) { return RunSeeded(spec); }

Tableau DeletionTableau(const KnowledgeBase& ddb, const Atom& request,
                        int node_cap) {
  TableauSpec spec;
  spec.prog = TransformIdbStar(ddb);
  spec.seeds = {Literal{request, true}};
  spec.base_preds = BasePreds(ddb);
  spec.edb = FactTexts(ddb);
  spec.undeletable_closure = true;
  spec.node_cap = node_cap;
  return RunSeeded(std::move(spec));
}

Tableau MaterializedDeletionTableau(const KnowledgeBase& ddb, const Atom& request,
                                    int node_cap) {
  TableauSpec spec;
  spec.prog = TransformIdbPlus(ddb, LeastModel(ddb));
  spec.seeds = {Literal{request, true}};
  spec.base_preds = BasePreds(ddb);
  spec.edb = FactTexts(ddb);
  spec.undeletable_closure = true;
  spec.node_cap = node_cap;
  return RunSeeded(std::move(spec));
}

Tableau InsertionTableau(const KnowledgeBase& ddb, const Atom& request,
                         int node_cap) {
  TableauSpec spec;
  spec.prog = TransformIdbMinus(ddb, LeastModel(ddb));
  spec.seeds = {Literal{request, true}};
  spec.units = FactTexts(ddb);
  spec.base_preds = BasePreds(ddb);
  spec.edb = FactTexts(ddb);
  spec.node_cap = node_cap;
  return RunSeeded(std::move(spec));
}

Tableau StrongMinimalityFilter(const Tableau& t, const KnowledgeBase& ddb,
                               const Atom& request) {
  Tableau out = t;
  std::set<std::string> edb = FactTexts(ddb);
  for (TableauBranch& b : out.branches) {
    if (!b.open) continue;
    for (const std::string& s : b.cut) {
      KnowledgeBase probe = ddb;
      probe.facts.clear();
      for (const std::string& f : edb) {
        if (!b.cut.count(f)) probe.add_fact(ParseGroundAtom(f));
      }
      probe.add_fact(ParseGroundAtom(s));
      if (!Entails(probe, request)) {
        b.open = false;
        b.close_reason = "not strongly minimal: " + s + " alone does not restore " +
                         request.text();
        break;
      }
    }
  }
  return out;
}

Tableau GroundednessFilter(const Tableau& t, const KnowledgeBase& ddb,
                           const Atom& request) {
  Tableau out = t;
  std::set<std::string> edb = FactTexts(ddb);
  TransformedProgram star = TransformIdbStar(ddb);
  std::set<std::string> base = BasePreds(ddb);
  for (TableauBranch& b : out.branches) {
    if (!b.open) continue;
    TableauSpec sub;
    sub.prog = star;
    sub.seeds = {Literal{request, true}};
    for (const std::string& f : edb) {
      if (!b.cut.count(f)) sub.units.insert(f);
    }
    sub.base_preds = base;
    sub.edb = sub.units;
    Tableau probe = RunSeeded(std::move(sub));
    for (const std::string& s : b.cut) {
      bool everywhere = true;
      for (const TableauBranch& pb : probe.branches) {
        if (!pb.open) continue;
        bool found = false;
        for (const Literal& lit : pb.literals) {
          if (lit.neg && lit.atom.text() == s) {
            found = true;
            break;
          }
        }
        if (!found) {
          everywhere = false;
          break;
        }
      }
      if (!everywhere) {
        b.open = false;
        b.close_reason = "not grounded: ~" + s + " is not forced by retracting " +
                         request.text();
        break;
      }
    }
  }
  return out;
}

}  // namespace hkb
