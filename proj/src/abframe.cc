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

#include "abframe.h"

#include <algorithm>

#include "model.h"
#include "parser.h"

namespace hkb {
namespace {

inline constexpr int kExplanationBound = 8;

bool Eval(const std::set<std::string>& m, const Sentence& s) {
  switch (s.kind) {
    case Sentence::Kind::kTrue:
      return true;
    case Sentence::Kind::kFalse:
      return false;
    case Sentence::Kind::kAtom:
      return m.count(s.atom) != 0;
    case Sentence::Kind::kNot:
      return !Eval(m, s.kids[0]);
    case Sentence::Kind::kAnd:
      for (const Sentence& k : s.kids) {
        if (!Eval(m, k)) return false;
      }
      return true;
    case Sentence::Kind::kOr:
      for (const Sentence& k : s.kids) {
        if (Eval(m, k)) return true;
      }
      return false;
    case Sentence::Kind::kImplies:
      return !Eval(m, s.kids[0]) || Eval(m, s.kids[1]);
  }
  return false;
}

KnowledgeBase WithInterp(const AbductiveFramework& fw, const Interpretation& I) {
  KnowledgeBase kb = fw.program;
  for (const std::string& a : I) kb.add_fact(ParseGroundAtom(a));
  return kb;
}

std::vector<Interpretation> SortedUnique(std::vector<Interpretation> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool SameModels(std::vector<Interpretation> a, std::vector<Interpretation> b) {
  return SortedUnique(std::move(a)) == SortedUnique(std::move(b));
}

bool SubsetOf(const std::vector<Interpretation>& a,
              const std::vector<Interpretation>& b) {
  for (const Interpretation& x : a) {
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  }
  return true;
}

std::vector<Interpretation> Intersect(const std::vector<Interpretation>& a,
                                      const std::vector<Interpretation>& b) {
  std::vector<Interpretation> out;
  for (const Interpretation& x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
  }
  return SortedUnique(std::move(out));
}

std::vector<Interpretation> Union(std::vector<Interpretation> a,
                                  const std::vector<Interpretation>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return SortedUnique(std::move(a));
}

Sentence LitSentence(const std::string& lit) {
  if (!lit.empty() && lit[0] == '~') return SNot(SAtom(lit.substr(1)));
  return SAtom(lit);
}

}  // namespace

Sentence STrue() { return Sentence{Sentence::Kind::kTrue, "", {}}; }
Sentence SFalse() { return Sentence{Sentence::Kind::kFalse, "", {}}; }
Sentence SAtom(std::string a) {
  return Sentence{Sentence::Kind::kAtom, std::move(a), {}};
}
Sentence SNot(Sentence s) {
  return Sentence{Sentence::Kind::kNot, "", {std::move(s)}};
}
Sentence SAnd(std::vector<Sentence> kids) {
  return Sentence{Sentence::Kind::kAnd, "", std::move(kids)};
}
Sentence SOr(std::vector<Sentence> kids) {
  return Sentence{Sentence::Kind::kOr, "", std::move(kids)};
}
Sentence SImplies(Sentence lhs, Sentence rhs) {
  return Sentence{Sentence::Kind::kImplies, "", {std::move(lhs), std::move(rhs)}};
}

std::string Sentence::text() const {
  switch (kind) {
    case Kind::kTrue:
      return "true";
    case Kind::kFalse:
      return "false";
    case Kind::kAtom:
      return atom;
    case Kind::kNot:
      return "~" + kids[0].text();
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies: {
      const char* op = kind == Kind::kAnd ? " & " : kind == Kind::kOr ? " | " : " -> ";
      std::string s = "(";
      for (size_t i = 0; i < kids.size(); ++i) {
        if (i) s += op;
        s += kids[i].text();
      }
      return s + ")";
    }
  }
  return "?";
}

std::string EncodeInterp(const Interpretation& I) { return RenderModel(I); }

std::set<std::string> Lift(const AbductiveFramework& fw, const Interpretation& I) {
  return LeastModel(WithInterp(fw, I));
}

bool Holds(const AbductiveFramework& fw, const Interpretation& I, const Sentence& s) {
  return Eval(Lift(fw, I), s);
}

bool HoldsIc(const AbductiveFramework& fw, const Interpretation& I) {
  return SatisfiesConstraints(WithInterp(fw, I));
}

std::vector<Interpretation> AllInterpretations(const AbductiveFramework& fw) {
  if (fw.abducibles.size() > static_cast<size_t>(kAbducibleBound)) {
    throw BoundError("framework limited to " + std::to_string(kAbducibleBound) +
                     " abducibles");
  }
  const size_t n = fw.abducibles.size();
  std::vector<Interpretation> out;
  out.reserve(size_t{1} << n);
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    Interpretation I;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (size_t{1} << i)) I.insert(fw.abducibles[i]);
    }
    out.push_back(std::move(I));
  }
  return out;
}

std::vector<Interpretation> SentenceModels(const AbductiveFramework& fw,
                                           const Sentence& s, bool with_ic) {
  std::vector<Interpretation> out;
  for (const Interpretation& I : AllInterpretations(fw)) {
    if (with_ic && !HoldsIc(fw, I)) continue;
    if (Holds(fw, I, s)) out.push_back(I);
  }
  return out;
}

std::vector<Interpretation> TheoryModels(const AbductiveFramework& fw) {
  std::vector<Interpretation> out;
  for (const Interpretation& I : AllInterpretations(fw)) {
    if (!HoldsIc(fw, I)) continue;
    bool all = true;
    for (const Sentence& k : fw.theory) {
      if (!Holds(fw, I, k)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(I);
  }
  return out;
}

bool CnpConsequence(const AbductiveFramework& fw, const Sentence& s) {
  for (const Interpretation& I : TheoryModels(fw)) {
    if (!Holds(fw, I, s)) return false;
  }
  return true;
}

long FaithfulOrder::at(const Interpretation& I) const {
  auto it = rank.find(EncodeInterp(I));
  if (it == rank.end()) {
    throw InputError("order does not rank " + EncodeInterp(I));
  }
  return it->second;
}

FaithfulOrder DalalOrder(const AbductiveFramework& fw) {
  std::vector<Interpretation> models = TheoryModels(fw);
  FaithfulOrder order;
  for (const Interpretation& I : AllInterpretations(fw)) {
    long best = 0;
    if (!models.empty()) {
      best = static_cast<long>(fw.abducibles.size()) + 1;
      for (const Interpretation& m : models) {
        std::vector<std::string> diff;
        std::set_symmetric_difference(I.begin(), I.end(), m.begin(), m.end(),
                                      std::back_inserter(diff));
        best = std::min(best, static_cast<long>(diff.size()));
      }
    }
    order.rank[EncodeInterp(I)] = best;
  }
  return order;
}

FaithfulOrder RandomFaithfulOrder(const AbductiveFramework& fw, std::mt19937& rng) {
  std::vector<Interpretation> models = TheoryModels(fw);
  FaithfulOrder order;
  for (const Interpretation& I : AllInterpretations(fw)) {
    bool is_model = std::find(models.begin(), models.end(), I) != models.end();
    long r = is_model ? 0 : 1 + static_cast<long>(rng() % 4);
    order.rank[EncodeInterp(I)] = r;
  }
  return order;
}

std::vector<std::string> ValidateOrder(const AbductiveFramework& fw,
                                       const FaithfulOrder& order) {
  std::vector<std::string> violations;
  std::vector<Interpretation> all = AllInterpretations(fw);
  long min_rank = 0;
  bool first = true;
  for (const Interpretation& I : all) {
    auto it = order.rank.find(EncodeInterp(I));
    if (it == order.rank.end()) {
      violations.push_back("not total: " + EncodeInterp(I) + " unranked");
      continue;
    }
    if (first || it->second < min_rank) {
      min_rank = it->second;
      first = false;
    }
  }
  if (!violations.empty()) return violations;

  std::vector<Interpretation> models = TheoryModels(fw);
  for (const Interpretation& I : all) {
    bool minimal = order.at(I) == min_rank;
    bool is_model = std::find(models.begin(), models.end(), I) != models.end();
    if (models.empty()) continue;
    if (minimal && !is_model) {
      violations.push_back("not faithful: non-model " + EncodeInterp(I) +
                           " is minimal");
    }
    if (!minimal && is_model) {
      violations.push_back("not faithful: model " + EncodeInterp(I) +
                           " is not minimal");
    }
  }
  return violations;
}

std::vector<Interpretation> ModelRevision(const AbductiveFramework& fw,
                                          const Sentence& alpha,
                                          const FaithfulOrder& order) {
  std::vector<Interpretation> candidates = SentenceModels(fw, alpha, true);
  if (candidates.empty()) return {};
  long best = order.at(candidates.front());
  for (const Interpretation& I : candidates) best = std::min(best, order.at(I));
  std::vector<Interpretation> out;
  for (const Interpretation& I : candidates) {
    if (order.at(I) == best) out.push_back(I);
  }
  return SortedUnique(std::move(out));
}

std::vector<Interpretation> ModelContraction(const AbductiveFramework& fw,
                                             const Sentence& alpha,
                                             const FaithfulOrder& order) {
  return Union(TheoryModels(fw), ModelRevision(fw, SNot(alpha), order));
}

std::vector<std::set<std::string>> MinimalAbductiveExplanations(
    const AbductiveFramework& fw, const Sentence& alpha) {
  if (fw.abducibles.size() > static_cast<size_t>(kExplanationBound)) {
    throw BoundError("explanation enumeration limited to " +
                     std::to_string(kExplanationBound) + " abducibles");
  }
  std::set<std::string> target;
  for (const Interpretation& I : SentenceModels(fw, alpha, true)) {
    target.insert(EncodeInterp(I));
  }
  if (target.empty()) return {};

  const size_t n = fw.abducibles.size();
  size_t combos = 1;
  for (size_t i = 0; i < n; ++i) combos *= 3;

  std::vector<std::set<std::string>> by_size;
  for (size_t code = 0; code < combos; ++code) {
    std::set<std::string> lits;
    size_t c = code;
    for (size_t i = 0; i < n; ++i, c /= 3) {
      switch (c % 3) {
        case 1:
          lits.insert(fw.abducibles[i]);
          break;
        case 2:
          lits.insert("~" + fw.abducibles[i]);
          break;
        default:
          break;
      }
    }
    by_size.push_back(std::move(lits));
  }
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<std::set<std::string>> out;
  for (const std::set<std::string>& lits : by_size) {
    bool superset = false;
    for (const std::set<std::string>& have : out) {
      if (std::includes(lits.begin(), lits.end(), have.begin(), have.end())) {
        superset = true;
        break;
      }
    }
    if (superset) continue;

    bool covers = true;
    bool any = false;
    for (const Interpretation& I : AllInterpretations(fw)) {
      bool consistent = true;
      for (const std::string& lit : lits) {
        bool want = lit[0] != '~';
        const std::string atom = want ? lit : lit.substr(1);
        if ((I.count(atom) != 0) != want) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      any = true;
      if (!target.count(EncodeInterp(I))) {
        covers = false;
        break;
      }
    }
    if (any && covers) out.push_back(lits);
  }
  return out;
}

std::vector<Sentence> ExplanationDisjunction(const std::set<std::string>& d1,
                                             const std::set<std::string>& d2) {
  std::vector<Sentence> out;
  for (const std::string& lit : d1) {
    if (d2.count(lit)) out.push_back(LitSentence(lit));
  }
  for (const std::string& a : d1) {
    if (d2.count(a)) continue;
    for (const std::string& b : d2) {
      if (d1.count(b)) continue;
      out.push_back(SOr({LitSentence(a), LitSentence(b)}));
    }
  }
  return out;
}

LawReport CheckRevisionLaws(const AbductiveFramework& fw, const FaithfulOrder& order,
                            const std::vector<Sentence>& alphas) {
  LawReport report;
  auto fail = [&](const std::string& what, const Sentence& a) {
    report.violations.push_back(what + " for " + a.text());
  };
  std::vector<Interpretation> kb_models = TheoryModels(fw);

  for (const Sentence& alpha : alphas) {
    std::vector<Interpretation> rev = ModelRevision(fw, alpha, order);
    std::vector<Interpretation> alpha_models = SentenceModels(fw, alpha, true);
    report.checks += 7;

    for (const Interpretation& I : rev) {
      if (!HoldsIc(fw, I)) fail("revision 1 (well-formed) violated", alpha);
      if (!Holds(fw, I, alpha)) fail("revision 2 (success) violated", alpha);
    }
    if (rev.empty() != alpha_models.empty()) {
      fail("revision 3 (consistency) violated", alpha);
    }
    std::vector<Interpretation> expansion = Intersect(kb_models, alpha_models);
    if (!expansion.empty() && !SameModels(rev, expansion)) {
      fail("revision 4 (vacuity) violated", alpha);
    }
    if (!SubsetOf(expansion, rev)) fail("revision 5 (inclusion) violated", alpha);
    Sentence beta = SOr({alpha, SFalse()});
    if (!SameModels(rev, ModelRevision(fw, beta, order))) {
      fail("revision 6 (extensionality) violated", alpha);
    }
    for (const Sentence& gamma : alphas) {
      Sentence both = SAnd({alpha, gamma});
      std::vector<Interpretation> narrowed;
      for (const Interpretation& I : rev) {
        if (Holds(fw, I, gamma)) narrowed.push_back(I);
      }
      narrowed = SortedUnique(std::move(narrowed));
      std::vector<Interpretation> direct = ModelRevision(fw, both, order);
      if (!SubsetOf(narrowed, direct)) {
        fail("revision 7 (conjunction, one half) violated", both);
      }
      if (!narrowed.empty() && !SameModels(direct, narrowed)) {
        fail("revision 7 (conjunction, other half) violated", both);
      }
    }
  }
  return report;
}

LawReport CheckContractionLaws(const AbductiveFramework& fw,
                               const FaithfulOrder& order,
                               const std::vector<Sentence>& alphas) {
  LawReport report;
  auto fail = [&](const std::string& what, const Sentence& a) {
    report.violations.push_back(what + " for " + a.text());
  };
  std::vector<Interpretation> kb_models = TheoryModels(fw);

  for (const Sentence& alpha : alphas) {
    std::vector<Interpretation> con = ModelContraction(fw, alpha, order);
    report.checks += 10;

    for (const Interpretation& I : con) {
      if (!HoldsIc(fw, I)) fail("contraction 1 (well-formed) violated", alpha);
    }
    if (!SubsetOf(kb_models, con)) fail("contraction 2 (inclusion) violated", alpha);
    bool accepted = true;
    for (const Interpretation& I : kb_models) {
      if (!Holds(fw, I, alpha)) accepted = false;
    }
    if (!accepted && !SameModels(con, kb_models)) {
      fail("contraction 3 (vacuity) violated", alpha);
    }
    std::vector<Interpretation> nalpha_models =
        SentenceModels(fw, SNot(alpha), true);
    if (!nalpha_models.empty()) {
      bool some_refutes = false;
      for (const Interpretation& I : con) {
        if (!Holds(fw, I, alpha)) some_refutes = true;
      }
      if (!some_refutes) fail("contraction 4 (success) violated", alpha);
    }
    for (const Interpretation& I : con) {
      if (Holds(fw, I, alpha) &&
          std::find(kb_models.begin(), kb_models.end(), I) == kb_models.end()) {
        fail("contraction 5 (recovery) violated", alpha);
      }
    }
    Sentence beta = SOr({alpha, SFalse()});
    if (!SameModels(con, ModelContraction(fw, beta, order))) {
      fail("contraction 6 (extensionality) violated", alpha);
    }
    for (const Sentence& gamma : alphas) {
      Sentence both = SAnd({alpha, gamma});
      std::vector<Interpretation> con_both = ModelContraction(fw, both, order);
      std::vector<Interpretation> either =
          Union(con, ModelContraction(fw, gamma, order));
      if (!SubsetOf(con_both, either)) {
        fail("contraction 7 (conjunction overlap) violated", both);
      }
      bool alpha_out = false;
      for (const Interpretation& I : con_both) {
        if (!Holds(fw, I, alpha)) alpha_out = true;
      }
      if (alpha_out && !SubsetOf(con, con_both)) {
        fail("contraction 8 (conjunction inclusion) violated", both);
      }
    }

    std::vector<Interpretation> levi =
        Intersect(ModelContraction(fw, SNot(alpha), order),
                  SentenceModels(fw, alpha, true));
    if (!SameModels(levi, ModelRevision(fw, alpha, order))) {
      fail("levi round trip violated", alpha);
    }
    std::vector<Interpretation> harper =
        Union(kb_models, ModelRevision(fw, SNot(alpha), order));
    if (!SameModels(harper, con)) fail("harper round trip violated", alpha);
  }
  return report;
}

LawReport CheckCnpLaws(const AbductiveFramework& fw,
                       const std::vector<Sentence>& sample) {
  LawReport report;
  auto fail = [&](const std::string& what) { report.violations.push_back(what); };

  for (const Sentence& k : fw.theory) {
    ++report.checks;
    if (!CnpConsequence(fw, k)) fail("cnp inclusion violated for " + k.text());
  }

  AbductiveFramework closed = fw;
  for (const Sentence& s : sample) {
    if (CnpConsequence(fw, s)) closed.theory.push_back(s);
  }
  for (const Sentence& s : sample) {
    ++report.checks;
    if (CnpConsequence(closed, s) != CnpConsequence(fw, s)) {
      fail("cnp iteration violated for " + s.text());
    }
  }

  for (const Sentence& extra : sample) {
    AbductiveFramework wider = fw;
    wider.theory.push_back(extra);
    for (const Sentence& s : sample) {
      ++report.checks;
      if (CnpConsequence(fw, s) && !CnpConsequence(wider, s)) {
        fail("cnp monotony violated for " + s.text());
      }
      ++report.checks;
      if (CnpConsequence(wider, s) != CnpConsequence(fw, SImplies(extra, s))) {
        fail("cnp deduction violated for " + extra.text() + " -> " + s.text());
      }
    }
  }
  return report;
}

LawReport LabSweep(uint64_t seed, int instances, int max_abducibles) {
  std::mt19937 rng(static_cast<uint32_t>(seed));
  LawReport total;
  const std::vector<std::string> ab_pool = {"a", "b", "c", "d", "e", "f", "g", "h"};

  for (int inst = 0; inst < instances; ++inst) {
    AbductiveFramework fw;
    int nab = 2 + static_cast<int>(rng() % std::max(1, max_abducibles - 1));
    nab = std::min<int>(nab, static_cast<int>(ab_pool.size()));
    fw.abducibles.assign(ab_pool.begin(), ab_pool.begin() + nab);

    auto pick_ab = [&]() { return fw.abducibles[rng() % fw.abducibles.size()]; };
    std::string prog = "[IMMUTABLE]\n";
    int nrules = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nrules; ++i) {
      std::string head = (rng() % 2) ? "p" : "q";
      std::string b1 = pick_ab();
      if (rng() % 2) {
        prog += head + " :- " + b1 + ".\n";
      } else {
        std::string b2 = (head == "q" && rng() % 2) ? "p" : pick_ab();
        prog += head + " :- " + b1 + ", " + b2 + ".\n";
      }
    }
    if (rng() % 2) {
      prog += "[CONSTRAINTS]\n:- " + fw.abducibles[0] + ", " +
              fw.abducibles[1] + ".\n";
    }
    fw.program = ParseProgram(prog);

    std::vector<Sentence> pool = {SAtom(fw.abducibles[0]),
                                  SNot(SAtom(fw.abducibles[1])), SAtom("p"),
                                  SOr({SAtom(pick_ab()), SAtom("q")})};
    fw.theory = {pool[rng() % pool.size()]};
    if (TheoryModels(fw).empty()) fw.theory = {STrue()};

    std::vector<Sentence> alphas = {pool[rng() % pool.size()],
                                    SOr({SAtom(pick_ab()), SNot(SAtom(pick_ab()))}),
                                    SAnd({SAtom(pick_ab()), SAtom("q")})};

    std::vector<FaithfulOrder> orders = {DalalOrder(fw),
                                         RandomFaithfulOrder(fw, rng)};
    for (const FaithfulOrder& order : orders) {
      std::vector<std::string> order_bad = ValidateOrder(fw, order);
      ++total.checks;
      for (const std::string& v : order_bad) {
        total.violations.push_back("instance " + std::to_string(inst) + ": " + v);
      }
      LawReport rev = CheckRevisionLaws(fw, order, alphas);
      LawReport con = CheckContractionLaws(fw, order, alphas);
      total.checks += rev.checks + con.checks;
      for (const std::string& v : rev.violations) {
        total.violations.push_back("instance " + std::to_string(inst) + ": " + v);
      }
      for (const std::string& v : con.violations) {
        total.violations.push_back("instance " + std::to_string(inst) + ": " + v);
      }
    }

    LawReport cnp = CheckCnpLaws(fw, alphas);
    total.checks += cnp.checks;
    for (const std::string& v : cnp.violations) {
      total.violations.push_back("instance " + std::to_string(inst) + ": " + v);
    }

    // Explanation coverage: the disjunction of the minimal explanations has
    // exactly the request's models, pairwise and in total.
    for (const Sentence& alpha : alphas) {
      std::vector<std::set<std::string>> exps =
          MinimalAbductiveExplanations(fw, alpha);
      std::vector<Interpretation> covered;
      for (const std::set<std::string>& d : exps) {
        std::vector<Sentence> lits;
        for (const std::string& lit : d) lits.push_back(LitSentence(lit));
        covered = Union(covered, SentenceModels(fw, SAnd(lits), true));
      }
      ++total.checks;
      if (!SameModels(covered, SentenceModels(fw, alpha, true))) {
        total.violations.push_back("instance " + std::to_string(inst) +
                                   ": explanation cover mismatch for " +
                                   alpha.text());
      }
      for (size_t i = 0; i < exps.size(); ++i) {
        for (size_t j = i + 1; j < exps.size(); ++j) {
          std::vector<Sentence> disj = ExplanationDisjunction(exps[i], exps[j]);
          std::vector<Sentence> l1, l2;
          for (const std::string& lit : exps[i]) l1.push_back(LitSentence(lit));
          for (const std::string& lit : exps[j]) l2.push_back(LitSentence(lit));
          ++total.checks;
          if (!SameModels(SentenceModels(fw, SAnd(disj), true),
                          Union(SentenceModels(fw, SAnd(l1), true),
                                SentenceModels(fw, SAnd(l2), true)))) {
            total.violations.push_back("instance " + std::to_string(inst) +
                                       ": explanation disjunction mismatch");
          }
        }
      }
    }
  }
  return total;
}

}  // namespace hkb
