// Copyright 2026 The lealc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Non-branching tableau for LE-ALC ABoxes: the expansion rules, a
// saturation loop driven by a semi-naive worklist, clash detection, and
// the rule trace.

#ifndef LEALC_TABLEAU_HPP_
#define LEALC_TABLEAU_HPP_

#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lealc/fca.hpp"
#include "lealc/registry.hpp"
#include "lealc/syntax.hpp"

namespace lealc {

enum class TermKind : std::uint8_t { Member, Described, Incidence, BoxRel, DiaRel };

// Interned ABox term.
//   Member     a = object,  b = concept
//   Described  a = feature, b = concept
//   Incidence  a = object,  b = feature
//   BoxRel     a = object,  b = feature, role
//   DiaRel     a = feature, b = object,  role
struct Term {
  TermKind kind = TermKind::Member;
  bool negated = false;
  std::uint32_t a = kNone;
  std::uint32_t b = kNone;
  RoleId role = kNone;

  bool is_relational() const { return kind >= TermKind::Incidence; }
  Term negation() const { return {kind, !negated, a, b, role}; }
  friend bool operator==(const Term&, const Term&) = default;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

using TermId = std::uint32_t;

enum class RuleKind : std::uint8_t {
  Create,
  Basic,
  AndA,
  OrX,
  Box,
  Dia,
  BoxY,          // b I box_R y  =>  b R y
  BlackBoxY,     // b I bbox_R y =>  y R b
  DiaB,          // dia_R b I y  =>  y R b
  BlackDiaB,     // bdia_R b I y =>  b R y
  AndAInverse,
  OrXInverse,
  AdjBox,
  AdjDia,
  NegB,
  NegX,
  AppendX,
  AppendA,
};

inline constexpr std::size_t kNumRuleKinds = 18;

const char* rule_name(RuleKind rule);

// Worklist priority class of a rule, 0 first.
enum class RuleCategory : std::uint8_t { Negative, Creation, Structural, Appending, Adjunction, ICompat, Inverse };
inline constexpr std::size_t kNumCategories = 7;
RuleCategory rule_category(RuleKind rule);

struct RuleApplication {
  RuleKind rule;
  std::vector<TermId> premises;
  ConceptId concept_id = kNone;  // Create, and the side condition of the inverse rules
  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

struct TraceRecord {
  std::size_t step;
  RuleKind rule;
  std::vector<TermId> premises;
  ConceptId concept_id;
  std::vector<TermId> added;
};

struct TableauOptions {
  // Unset: deterministic category order, FIFO within a category.
  std::optional<std::uint64_t> seed;
  bool stop_on_clash = true;
  // 0 derives a limit from the termination bound.
  std::size_t max_steps = 0;
  bool record_trace = true;
};

class SafetyLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Clash {
  TermId positive;
  TermId negative;
};

class Tableau {
 public:
  explicit Tableau(std::span<const AboxTerm> initial, TableauOptions options = {});

  Tableau(const Tableau&) = delete;
  Tableau& operator=(const Tableau&) = delete;

  Registry& registry() { return registry_; }
  const Registry& registry() const { return registry_; }
  const TableauOptions& options() const { return options_; }

  std::size_t size() const { return terms_.size(); }
  const Term& term(TermId id) const { return terms_[id]; }
  std::optional<TermId> find(const Term& t) const;
  bool contains(const Term& t) const { return index_.contains(t); }
  bool contains(const AboxTerm& t) const;

  AboxTerm to_abox(const Term& t) const;
  AboxTerm to_abox(TermId id) const { return to_abox(terms_[id]); }
  std::vector<AboxTerm> abox_terms() const;
  std::set<AboxTerm> term_set() const;
  std::string render(TermId id) const { return to_string(to_abox(id)); }

  // Interns an AboxTerm without adding it.
  Term intern(const AboxTerm& t);

  const std::vector<AboxTerm>& input() const { return input_; }
  std::size_t input_size() const { return input_count_; }

  bool occurs(ConceptId c) const { return c < occurs_.size() && occurs_[c]; }
  std::vector<ConceptId> occurring_concepts() const;

  // Objects and features mentioned by some term, in id order.
  std::vector<IndId> objects() const;
  std::vector<IndId> features() const;

  const std::optional<Clash>& clash() const { return clash_; }
  const std::vector<TraceRecord>& trace() const { return trace_; }
  std::size_t steps() const { return steps_; }
  std::size_t step_limit() const { return step_limit_; }

  // Every binding whose conclusion is not yet fully present, by scanning
  // the whole tableau.
  std::vector<RuleApplication> applicable_rules() const;
  std::vector<Term> conclusions(const RuleApplication& app) const;
  // Adds the missing conclusions; false if nothing was new.
  bool apply_rule(const RuleApplication& app);

  // Runs the worklist to fixpoint, or to the first clash when stop_on_clash.
  void saturate();
  bool saturated() const { return saturated_; }

  // Positive index lookups.
  const std::vector<IndId>& members_of(ConceptId c) const;
  const std::vector<IndId>& described_by(ConceptId c) const;
  bool has_member(IndId b, ConceptId c) const { return contains(Term{TermKind::Member, false, b, c, kNone}); }
  bool has_described(IndId y, ConceptId c) const { return contains(Term{TermKind::Described, false, y, c, kNone}); }

  // Trace with premises/added terms rendered in KB syntax.
  std::vector<std::string> trace_lines() const;

 private:
  std::optional<TermId> add(const Term& t);
  void mark_occurs(ConceptId c);
  void bindings_for_term(TermId id, std::vector<RuleApplication>& out);
  void bindings_for_concept(ConceptId c, std::vector<RuleApplication>& out);
  void enqueue(std::vector<RuleApplication>& apps);
  bool next(RuleApplication& out);
  void grow(std::vector<std::vector<IndId>>& index, std::size_t id);
  bool adds_something(const RuleApplication& app) const;

  mutable Registry registry_;
  TableauOptions options_;
  std::vector<AboxTerm> input_;
  std::size_t input_count_ = 0;
  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> index_;
  std::vector<std::vector<IndId>> members_;    // concept -> objects (positive)
  std::vector<std::vector<IndId>> described_;  // concept -> features (positive)
  std::vector<std::uint8_t> occurs_;
  std::vector<std::uint8_t> ind_seen_;
  std::array<std::deque<RuleApplication>, kNumCategories> queues_;
  std::optional<std::mt19937_64> rng_;
  std::optional<Clash> clash_;
  std::vector<TraceRecord> trace_;
  std::size_t steps_ = 0;
  std::size_t step_limit_ = 0;
  bool saturated_ = false;
  bool recording_ = false;  // queue bindings while adding terms
};

// Termination bound (size * (box + dia + 2))^2 * (roles + 1).
std::size_t termination_bound(std::span<const AboxTerm> abox);
std::size_t default_step_limit(std::span<const AboxTerm> abox);

enum class Status { Consistent, Inconsistent };

struct Verdict {
  Status status;
  std::optional<std::pair<AboxTerm, AboxTerm>> clash;
  std::optional<Interpretation> model;
  std::shared_ptr<Tableau> tableau;
};

struct Vocabulary {
  std::vector<RoleName> roles;
  std::set<std::string> atoms;
};

// Saturates and, when no clash arises, extracts the model.
Verdict check_consistency(std::span<const AboxTerm> abox, const Vocabulary& vocab = {},
                          const TableauOptions& options = {});

}  // namespace lealc

#endif  // LEALC_TABLEAU_HPP_
