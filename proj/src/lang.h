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

#ifndef HKB_LANG_H_
#define HKB_LANG_H_

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkb {

// Error taxonomy mirrored by the C API status codes: "input" covers parse and
// precondition failures, "no-solution" covers impossible requests, everything
// else is internal.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

inline Error InputError(const std::string& what) { return Error("input", what); }
inline Error NoSolutionError(const std::string& what) {
  return Error("no-solution", what);
}
inline Error BoundError(const std::string& what) { return Error("bound", what); }

struct Term {
  bool var = false;
  std::string name;

  auto operator<=>(const Term&) const = default;
};

inline Term Const(std::string name) { return Term{false, std::move(name)}; }
inline Term Var(std::string name) { return Term{true, std::move(name)}; }

struct Atom {
  std::string pred;
  std::vector<Term> args;

  auto operator<=>(const Atom&) const = default;

  bool ground() const;
  std::string text() const;
};

inline Atom MakeAtom(std::string pred, std::vector<Term> args = {}) {
  return Atom{std::move(pred), std::move(args)};
}

// The reserved guard predicate: "X != Y" in bodies, resolved away at
// grounding time (an instance survives only if the two constants differ).
inline const char* kNeqPred = "!=";

struct Literal {
  Atom atom;
  bool neg = false;  // default negation "not A"

  auto operator<=>(const Literal&) const = default;

  bool is_guard() const { return atom.pred == kNeqPred; }
  std::string text() const;
};

struct Clause {
  std::optional<Atom> head;  // absent = denial constraint
  std::vector<Literal> body;

  auto operator<=>(const Clause&) const = default;

  bool is_fact() const { return head.has_value() && body.empty(); }
  bool is_constraint() const { return !head.has_value(); }
  bool ground() const;
  std::string text() const;  // "h :- b1, b2." / "h." / ":- b."
};

enum class Mode { kKb, kDdb };

struct KnowledgeBase {
  Mode mode = Mode::kKb;
  std::vector<Clause> rules;           // KB_I / IDB
  std::vector<Atom> facts;             // KB_U / EDB, ground, sorted, unique
  std::vector<Clause> constraints;     // KB_IC / IC
  std::vector<std::string> abducibles; // explicit predicate names; empty = default

  bool operator==(const KnowledgeBase&) const = default;

  bool has_fact(const Atom& a) const;
  void add_fact(const Atom& a);     // keeps facts sorted and unique
  void remove_fact(const Atom& a);
  void normalize();                 // sort + dedupe facts and abducibles

  // Predicates appearing as rule heads.
  std::set<std::string> view_preds() const;
  // All predicates with their arity; throws on arity conflicts.
  std::set<std::pair<std::string, int>> predicates() const;
  // EDB predicates plus predicates with no defining rule, unless an explicit
  // abducible list overrides the default.
  std::set<std::string> abducible_preds() const;
};

std::string RenderModel(const std::set<std::string>& atoms);

}  // namespace hkb

#endif  // HKB_LANG_H_
