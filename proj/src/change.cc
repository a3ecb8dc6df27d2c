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

#include "change.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

#include "abduce.h"
#include "model.h"
#include "parser.h"

namespace hkb {
namespace {

std::string RenderClauseSet(const ClauseSet& s) {
  std::string out;
  for (const Clause& c : s) {
    if (!out.empty()) out += " ";
    out += c.text();
  }
  return out;
}

std::vector<uint32_t> MasksByPopcount(int n, bool ascending) {
  std::vector<uint32_t> masks(size_t{1} << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [&](uint32_t a, uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return ascending ? pa < pb : pa > pb;
  });
  return masks;
}

std::vector<Clause> ClauseUniverse(const KnowledgeBase& kb) {
  std::vector<Clause> u;
  for (const Clause& c : kb.rules) u.push_back(c);
  for (const Atom& a : kb.facts) {
    Clause f;
    f.head = a;
    u.push_back(f);
  }
  for (const Clause& c : kb.constraints) u.push_back(c);
  return u;
}

KnowledgeBase Assemble(const std::vector<Clause>& universe, uint32_t mask) {
  KnowledgeBase sub;
  sub.mode = Mode::kKb;
  for (size_t i = 0; i < universe.size(); ++i) {
    if (!(mask & (uint32_t{1} << i))) continue;
    const Clause& c = universe[i];
    if (c.is_fact())
      sub.add_fact(*c.head);
    else if (c.is_constraint())
      sub.constraints.push_back(c);
    else
      sub.rules.push_back(c);
  }
  return sub;
}

// Minimal clause subsets whose own closure clashes with alpha.
std::vector<ClauseSet> InconsistencyKernels(const KnowledgeBase& kb,
                                            const Clause& alpha) {
  std::vector<Clause> universe = ClauseUniverse(kb);
  int n = static_cast<int>(universe.size());
  if (n > kSubsetEnumerationBound)
    throw BoundError("kernel enumeration over " + std::to_string(n) +
                     " clauses exceeds bound " +
                     std::to_string(kSubsetEnumerationBound));

  std::vector<uint32_t> found;
  std::vector<ClauseSet> out;
  for (uint32_t mask : MasksByPopcount(n, /*ascending=*/true)) {
    bool pruned = false;
    for (uint32_t k : found)
      if ((mask & k) == k) { pruned = true; break; }
    if (pruned) continue;
    if (!ConsistentWithKb(Assemble(universe, mask), alpha)) {
      found.push_back(mask);
      ClauseSet member;
      for (size_t i = 0; i < universe.size(); ++i)
        if (mask & (uint32_t{1} << i)) member.insert(universe[i]);
      out.push_back(std::move(member));
    }
  }
  std::sort(out.begin(), out.end(), [](const ClauseSet& a, const ClauseSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return RenderClauseSet(a) < RenderClauseSet(b);
  });
  return out;
}

std::string RenderFactSet(const std::set<std::string>& s) {
  std::string out;
  for (const std::string& f : s) {
    if (!out.empty()) out += " ";
    out += f;
  }
  return out;
}

std::set<std::string> FactTexts(const KnowledgeBase& kb) {
  std::set<std::string> out;
  for (const Atom& a : kb.facts) out.insert(a.text());
  return out;
}

}  // namespace

ChangeStrategy ParseStrategy(const std::string& name) {
  ChangeStrategy s;
  if (name == "minimal") {
    s.mode = ChangeStrategy::Mode::kMinimalIncision;
  } else if (name == "maximal") {
    s.mode = ChangeStrategy::Mode::kMaximalIncision;
  } else if (name == "full-meet") {
    s.mode = ChangeStrategy::Mode::kFullMeet;
  } else if (name == "maxichoice") {
    s.mode = ChangeStrategy::Mode::kMaxichoice;
  } else {
    throw InputError("unknown strategy: " + name);
  }
  return s;
}

RemainderFamily Remainders(const KnowledgeBase& kb, const Clause& alpha) {
  if (!alpha.ground()) throw InputError("change request must be ground");
  RemainderFamily fam;
  fam.alpha = alpha;
  if (!ConsistentWithBackground(kb, alpha)) {
    fam.members = {kb};
    return fam;
  }
  int n = static_cast<int>(kb.facts.size());
  if (n > kSubsetEnumerationBound)
    throw BoundError("remainder enumeration over " + std::to_string(n) +
                     " facts exceeds bound " +
                     std::to_string(kSubsetEnumerationBound));

  std::vector<uint32_t> found;
  for (uint32_t mask : MasksByPopcount(n, /*ascending=*/false)) {
    bool pruned = false;
    for (uint32_t f : found)
      if ((mask & f) == mask) { pruned = true; break; }
    if (pruned) continue;
    KnowledgeBase sub = kb;
    sub.facts.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (uint32_t{1} << i)) sub.add_fact(kb.facts[static_cast<size_t>(i)]);
    if (ConsistentWithKb(sub, alpha)) {
      found.push_back(mask);
      fam.members.push_back(std::move(sub));
    }
  }
  std::sort(fam.members.begin(), fam.members.end(),
            [](const KnowledgeBase& a, const KnowledgeBase& b) {
              return FactTexts(a) < FactTexts(b);
            });
  return fam;
}

KernelFamily Kernels(const KnowledgeBase& kb, const Clause& alpha) {
  if (!alpha.ground()) throw InputError("change request must be ground");
  KernelFamily fam;
  fam.alpha = alpha;
  if (kb.mode == Mode::kDdb && alpha.is_fact() &&
      kb.view_preds().count(alpha.head->pred)) {
    // Derivation flavor: support sets whose addition derives the view goal.
    for (const std::set<std::string>& sup : SupportFamily(kb, *alpha.head)) {
      ClauseSet member;
      for (const std::string& text : sup) {
        Clause f;
        f.head = ParseGroundAtom(text);
        member.insert(f);
      }
      fam.members.push_back(std::move(member));
    }
    std::sort(fam.members.begin(), fam.members.end(),
              [](const ClauseSet& a, const ClauseSet& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return RenderClauseSet(a) < RenderClauseSet(b);
              });
    fam.members.erase(std::unique(fam.members.begin(), fam.members.end()),
                      fam.members.end());
    return fam;
  }
  fam.members = InconsistencyKernels(kb, alpha);
  return fam;
}

std::vector<std::set<std::string>> MinimalHittingSets(
    const std::vector<std::set<std::string>>& family) {
  for (const auto& m : family)
    if (m.empty())
      throw NoSolutionError("unhittable: a member offers no choices");

  std::vector<std::set<std::string>> results;
  std::set<std::string> current;
  // Depth-first over the first unhit member's elements.
  auto hit = [&](const std::set<std::string>& member) {
    for (const std::string& e : member)
      if (current.count(e)) return true;
    return false;
  };
  std::function<void()> go = [&]() {
    const std::set<std::string>* next = nullptr;
    for (const auto& m : family)
      if (!hit(m)) { next = &m; break; }
    if (!next) {
      results.push_back(current);
      return;
    }
    for (const std::string& e : *next) {
      current.insert(e);
      go();
      current.erase(e);
    }
  };
  go();

  // Keep inclusion-minimal sets only, canonically ordered.
  std::sort(results.begin(), results.end());
  results.erase(std::unique(results.begin(), results.end()), results.end());
  std::vector<std::set<std::string>> minimal;
  for (const auto& h : results) {
    bool dominated = false;
    for (const auto& other : results) {
      if (other != h &&
          std::includes(h.begin(), h.end(), other.begin(), other.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(h);
  }
  return minimal;
}

std::vector<std::set<std::string>> MinimalHittingSetsOver(
    const std::vector<ClauseSet>& family, const std::set<std::string>& updatable) {
  std::vector<std::set<std::string>> hittable;
  for (const ClauseSet& member : family) {
    if (member.empty()) continue;
    std::set<std::string> part;
    for (const Clause& c : member)
      if (c.is_fact() && updatable.count(c.head->text()))
        part.insert(c.head->text());
    if (part.empty())
      throw NoSolutionError(
          "unhittable: a conflicting set contains no updatable fact");
    hittable.push_back(std::move(part));
  }
  return MinimalHittingSets(hittable);
}

KnowledgeBase Adopt(const KnowledgeBase& kb, const Clause& alpha) {
  KnowledgeBase out = kb;
  if (alpha.is_fact()) {
    out.add_fact(*alpha.head);
  } else if (alpha.is_constraint()) {
    if (std::find(out.constraints.begin(), out.constraints.end(), alpha) ==
        out.constraints.end())
      out.constraints.push_back(alpha);
  } else {
    if (std::find(out.rules.begin(), out.rules.end(), alpha) == out.rules.end())
      out.rules.push_back(alpha);
  }
  return out;
}

KnowledgeBase PartialMeetRevision(const KnowledgeBase& kb, const Clause& alpha,
                                  const ChangeStrategy& strategy) {
  if (!ConsistentWithBackground(kb, alpha)) return kb;
  RemainderFamily fam = Remainders(kb, alpha);

  std::vector<const KnowledgeBase*> selected;
  switch (strategy.mode) {
    case ChangeStrategy::Mode::kFullMeet:
    case ChangeStrategy::Mode::kMaximalIncision:
      for (const KnowledgeBase& m : fam.members) selected.push_back(&m);
      break;
    case ChangeStrategy::Mode::kMaxichoice:
    case ChangeStrategy::Mode::kMinimalIncision: {
      const KnowledgeBase* best = nullptr;
      for (const KnowledgeBase& m : fam.members) {
        if (!best || m.facts.size() > best->facts.size() ||
            (m.facts.size() == best->facts.size() &&
             FactTexts(m) < FactTexts(*best)))
          best = &m;
      }
      if (best) selected.push_back(best);
      break;
    }
    case ChangeStrategy::Mode::kRanked: {
      auto score = [&strategy](const KnowledgeBase& m) {
        long s = 0;
        for (const Atom& a : m.facts) {
          auto it = strategy.priority.find(a.text());
          if (it != strategy.priority.end()) s += it->second;
        }
        return s;
      };
      long best = 0;
      bool have = false;
      for (const KnowledgeBase& m : fam.members) {
        long s = score(m);
        if (!have || s > best) { best = s; have = true; }
      }
      for (const KnowledgeBase& m : fam.members)
        if (score(m) == best) selected.push_back(&m);
      break;
    }
  }
  if (selected.empty()) return Adopt(kb, alpha);

  KnowledgeBase out = kb;
  out.facts.clear();
  for (const Atom& a : kb.facts) {
    bool everywhere = true;
    for (const KnowledgeBase* m : selected)
      if (!m->has_fact(a)) { everywhere = false; break; }
    if (everywhere) out.add_fact(a);
  }
  return Adopt(out, alpha);
}

KnowledgeBase KernelRevision(const KnowledgeBase& kb, const Clause& alpha,
                             const ChangeStrategy& strategy) {
  if (!ConsistentWithBackground(kb, alpha)) return kb;
  std::vector<ClauseSet> kernels = InconsistencyKernels(kb, alpha);
  if (kernels.empty()) return Adopt(kb, alpha);

  std::set<std::string> updatable = FactTexts(kb);
  std::set<std::string> incision;
  switch (strategy.mode) {
    case ChangeStrategy::Mode::kMaximalIncision:
    case ChangeStrategy::Mode::kFullMeet: {
      for (const ClauseSet& member : kernels) {
        bool any = false;
        for (const Clause& c : member)
          if (c.is_fact() && updatable.count(c.head->text())) {
            incision.insert(c.head->text());
            any = true;
          }
        if (!any && !member.empty())
          throw NoSolutionError(
              "unhittable: a conflicting set contains no updatable fact");
      }
      break;
    }
    case ChangeStrategy::Mode::kMinimalIncision:
    case ChangeStrategy::Mode::kMaxichoice: {
      auto all = MinimalHittingSetsOver(kernels, updatable);
      if (all.empty()) throw NoSolutionError("no incision exists");
      incision = all.front();
      break;
    }
    case ChangeStrategy::Mode::kRanked: {
      auto all = MinimalHittingSetsOver(kernels, updatable);
      if (all.empty()) throw NoSolutionError("no incision exists");
      auto cost = [&strategy](const std::set<std::string>& h) {
        long s = 0;
        for (const std::string& f : h) {
          auto it = strategy.priority.find(f);
          if (it != strategy.priority.end()) s += it->second;
        }
        return s;
      };
      const std::set<std::string>* best = &all.front();
      for (const auto& h : all)
        if (cost(h) < cost(*best) || (cost(h) == cost(*best) && h < *best))
          best = &h;
      incision = *best;
    }
  }

  KnowledgeBase out = kb;
  out.facts.clear();
  for (const Atom& a : kb.facts)
    if (!incision.count(a.text())) out.add_fact(a);
  return Adopt(out, alpha);
}

}  // namespace hkb
