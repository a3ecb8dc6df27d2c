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

// Seeded random program generators shared by the property tests. Same seed,
// same corpus, on every platform (mt19937 output is pinned by the standard).

#ifndef HKB_TESTS_CORPUS_H_
#define HKB_TESTS_CORPUS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lang.h"
#include "model.h"
#include "parser.h"

namespace hkb::testing {

inline constexpr std::uint64_t kCorpusSeed = 20260817;

inline std::string FixturePath(const std::string& name) {
  return std::string(HKB_FIXTURE_DIR) + "/" + name;
}

// General-mode propositional knowledge base: up to 6 rules over {a..h}, up
// to 6 updatable facts, up to 2 denial constraints.
inline KnowledgeBase RandomKb(std::mt19937& rng) {
  const std::vector<std::string> atoms = {"a", "b", "c", "d", "e", "f", "g", "h"};
  auto pick = [&]() { return atoms[rng() % atoms.size()]; };

  std::string text = "[IMMUTABLE]\n";
  std::vector<std::string> lines;
  auto emit = [&](const std::string& line) {
    for (const std::string& l : lines)
      if (l == line) return;
    lines.push_back(line);
    text += line + "\n";
  };
  int nrules = static_cast<int>(rng() % 7);
  for (int i = 0; i < nrules; ++i) {
    std::string head = pick();
    std::string body = pick();
    if (rng() % 2) body += ", " + pick();
    emit(head + " :- " + body + ".");
  }
  text += "[UPDATABLE]\n";
  int nfacts = static_cast<int>(rng() % 7);
  std::vector<std::string> chosen;
  for (int i = 0; i < nfacts; ++i) {
    std::string f = pick();
    bool seen = false;
    for (const std::string& c : chosen) seen |= c == f;
    if (!seen) {
      chosen.push_back(f);
      text += f + ".\n";
    }
  }
  int nics = static_cast<int>(rng() % 3);
  if (nics > 0) {
    text += "[CONSTRAINTS]\n";
    for (int i = 0; i < nics; ++i) {
      std::string body = pick();
      if (rng() % 2) body += ", " + pick();
      emit(":- " + body + ".");
    }
  }
  return ParseProgram(text);
}

// RandomKb, then facts dropped from the back until the result satisfies its
// own constraints. Change operators presume a consistent starting point.
inline KnowledgeBase RandomConsistentKb(std::mt19937& rng) {
  KnowledgeBase kb = RandomKb(rng);
  while (!SatisfiesConstraints(kb)) kb.facts.pop_back();
  return kb;
}

// Database-mode program: definite rules headed by the view predicates
// {p, q, r} over base atoms {a..f}, acyclic through the view order so the
// result is always stratifiable, never a unit view clause.
inline KnowledgeBase RandomDdb(std::mt19937& rng, bool allow_negation = false) {
  const std::vector<std::string> bases = {"a", "b", "c", "d", "e", "f"};
  const std::vector<std::string> views = {"p", "q", "r"};
  auto base = [&]() { return bases[rng() % bases.size()]; };

  std::string text = "[IDB]\n";
  int nrules = 1 + static_cast<int>(rng() % 6);
  bool has_p_rule = false;
  for (int i = 0; i < nrules; ++i) {
    int head_ix = static_cast<int>(rng() % views.size());
    if (i == 0) head_ix = 0;
    has_p_rule |= head_ix == 0;
    std::string body = base();
    int extras = static_cast<int>(rng() % 2);
    for (int j = 0; j < extras; ++j) {
      if (head_ix + 1 < static_cast<int>(views.size()) && rng() % 3 == 0) {
        std::string lit = views[head_ix + 1 + rng() % (views.size() - head_ix - 1)];
        if (allow_negation && rng() % 2) lit = "not " + lit;
        body += ", " + lit;
      } else {
        std::string lit = base();
        if (allow_negation && rng() % 4 == 0) lit = "not " + lit;
        body += ", " + lit;
      }
    }
    text += views[head_ix] + " :- " + body + ".\n";
  }
  (void)has_p_rule;

  text += "[EDB]\n";
  std::vector<std::string> chosen;
  int nfacts = static_cast<int>(rng() % 7);
  for (int i = 0; i < nfacts; ++i) {
    std::string f = base();
    bool seen = false;
    for (const std::string& c : chosen) seen |= c == f;
    if (!seen) {
      chosen.push_back(f);
      text += f + ".\n";
    }
  }
  int nics = static_cast<int>(rng() % 3);
  if (nics > 0) {
    text += "[IC]\n";
    for (int i = 0; i < nics; ++i) {
      std::string body = base();
      if (rng() % 2) body += ", " + base();
      text += ":- " + body + ".\n";
    }
  }
  return ParseProgram(text);
}

inline KnowledgeBase RandomConsistentDdb(std::mt19937& rng,
                                         bool allow_negation = false) {
  KnowledgeBase kb = RandomDdb(rng, allow_negation);
  while (!SatisfiesConstraints(kb)) kb.facts.pop_back();
  return kb;
}

// Ground revision request over the program's own alphabet: a fact three
// times out of four, otherwise a denial.
inline Clause RandomAlpha(std::mt19937& rng, const KnowledgeBase& kb) {
  std::vector<std::string> names;
  for (const auto& [pred, arity] : kb.predicates()) {
    if (arity == 0 && pred != kNeqPred) names.push_back(pred);
  }
  if (names.empty()) names.push_back("a");
  const std::string& x = names[rng() % names.size()];
  if (rng() % 4 != 0) return ParseClause(x + ".");
  std::string body = x;
  if (rng() % 2) body += ", " + names[rng() % names.size()];
  return ParseClause(":- " + body + ".");
}

}  // namespace hkb::testing

#endif  // HKB_TESTS_CORPUS_H_
