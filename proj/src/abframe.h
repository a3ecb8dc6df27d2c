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

#ifndef HKB_ABFRAME_H_
#define HKB_ABFRAME_H_

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lang.h"

namespace hkb {

// Propositional sentences over ground atom texts.
struct Sentence {
  enum class Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr, kImplies };
  Kind kind = Kind::kTrue;
  std::string atom;
  std::vector<Sentence> kids;
  std::string text() const;
};

Sentence STrue();
Sentence SFalse();
Sentence SAtom(std::string a);
Sentence SNot(Sentence s);
Sentence SAnd(std::vector<Sentence> kids);
Sentence SOr(std::vector<Sentence> kids);
Sentence SImplies(Sentence lhs, Sentence rhs);

// Model-theoretic abductive setting: a definite program over abducibles, the
// constraints, and a sentence theory. An interpretation fixes only the
// abducibles; everything else is derived level by level through the program.
struct AbductiveFramework {
  KnowledgeBase program;                // rules + constraints, no facts
  std::vector<std::string> abducibles;  // ground atom texts
  std::vector<Sentence> theory;         // K
};

inline constexpr int kAbducibleBound = 16;

using Interpretation = std::set<std::string>;

std::string EncodeInterp(const Interpretation& I);

// Least model of program plus the interpretation's abducibles.
std::set<std::string> Lift(const AbductiveFramework& fw, const Interpretation& I);

bool Holds(const AbductiveFramework& fw, const Interpretation& I, const Sentence& s);
bool HoldsIc(const AbductiveFramework& fw, const Interpretation& I);

// All 2^|Ab| interpretations; throws past kAbducibleBound.
std::vector<Interpretation> AllInterpretations(const AbductiveFramework& fw);

// Interpretations satisfying the sentence (and the constraints).
std::vector<Interpretation> SentenceModels(const AbductiveFramework& fw,
                                           const Sentence& s, bool with_ic = true);
// Mod(K u IC).
std::vector<Interpretation> TheoryModels(const AbductiveFramework& fw);

// True iff the sentence holds in every abductive model of K u IC.
bool CnpConsequence(const AbductiveFramework& fw, const Sentence& s);

// Total pre-order as a rank map; lower rank is closer to the theory.
struct FaithfulOrder {
  std::map<std::string, long> rank;
  long at(const Interpretation& I) const;
};

// Rank = symmetric-difference distance to the nearest model of the theory,
// so the minima are exactly the theory's models. With no models every rank
// is zero.
FaithfulOrder DalalOrder(const AbductiveFramework& fw);

// Random valid order: theory models at rank zero, everything else shuffled
// into positive ranks.
FaithfulOrder RandomFaithfulOrder(const AbductiveFramework& fw, std::mt19937& rng);

// Violations of the order axioms: totality over all interpretations and
// faithfulness (minima are exactly the theory models). Empty list = valid.
std::vector<std::string> ValidateOrder(const AbductiveFramework& fw,
                                       const FaithfulOrder& order);

// Min(Mod({alpha} u IC), order); empty when alpha clashes with IC.
std::vector<Interpretation> ModelRevision(const AbductiveFramework& fw,
                                          const Sentence& alpha,
                                          const FaithfulOrder& order);

// Mod(KB) u Min(Mod({not alpha} u IC), order).
std::vector<Interpretation> ModelContraction(const AbductiveFramework& fw,
                                             const Sentence& alpha,
                                             const FaithfulOrder& order);

// Minimal consistent literal conjunctions over the abducibles whose every
// completion satisfies alpha and the constraints. "~a" marks a negative
// literal. Their disjunction covers Mod({alpha} u IC) exactly.
std::vector<std::set<std::string>> MinimalAbductiveExplanations(
    const AbductiveFramework& fw, const Sentence& alpha);

// (D1 n D2) plus one a|b disjunct per pair of private members.
std::vector<Sentence> ExplanationDisjunction(const std::set<std::string>& d1,
                                             const std::set<std::string>& d2);

struct LawReport {
  std::vector<std::string> violations;
  int checks = 0;
  bool ok() const { return violations.empty(); }
};

// Revision laws for the given requests (success, consistency, vacuity,
// inclusion, extensionality, conjunction). Deterministic.
LawReport CheckRevisionLaws(const AbductiveFramework& fw, const FaithfulOrder& order,
                            const std::vector<Sentence>& alphas);
// Contraction laws including recovery, plus the Levi and Harper round trips.
LawReport CheckContractionLaws(const AbductiveFramework& fw,
                               const FaithfulOrder& order,
                               const std::vector<Sentence>& alphas);
// Consequence-operator laws: inclusion, iteration, monotony, deduction.
LawReport CheckCnpLaws(const AbductiveFramework& fw,
                       const std::vector<Sentence>& sample);

// Seeded end-to-end sweep over generated frameworks: order axioms, revision
// and contraction laws, round trips, explanation disjunction coverage.
LawReport LabSweep(uint64_t seed, int instances, int max_abducibles = 4);

}  // namespace hkb

#endif  // HKB_ABFRAME_H_
