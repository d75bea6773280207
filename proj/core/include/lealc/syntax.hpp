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

// Two-sorted concept language: roles, concepts, individuals, ABox and TBox
// terms, together with the measures (modal depths, size) used to bound
// tableau growth.

#ifndef LEALC_SYNTAX_HPP_
#define LEALC_SYNTAX_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace lealc {

enum class RoleKind { Incidence, Box, Diamond };

struct RoleName {
  RoleKind kind = RoleKind::Incidence;
  std::string name;  // empty for the incidence relation

  static RoleName incidence() { return {RoleKind::Incidence, {}}; }
  static RoleName box(std::string n) { return {RoleKind::Box, std::move(n)}; }
  static RoleName diamond(std::string n) { return {RoleKind::Diamond, std::move(n)}; }

  friend bool operator==(const RoleName&, const RoleName&) = default;
  friend auto operator<=>(const RoleName&, const RoleName&) = default;
};

enum class ConceptKind { Atom, Top, Bot, And, Or, Box, Dia };

// Immutable, structurally compared concept tree. Copies share the node.
class Concept {
 public:
  static Concept atom(std::string name);
  static Concept top();
  static Concept bot();
  static Concept conj(Concept lhs, Concept rhs);
  static Concept disj(Concept lhs, Concept rhs);
  static Concept box(RoleName role, Concept inner);
  static Concept dia(RoleName role, Concept inner);

  ConceptKind kind() const;
  // Atom name; empty for every other kind.
  const std::string& name() const;
  // Role of Box/Dia nodes.
  const RoleName& role() const;
  // Operands of And/Or.
  const Concept& lhs() const;
  const Concept& rhs() const;
  // Operand of Box/Dia.
  const Concept& inner() const;

  bool is_modal() const { return kind() == ConceptKind::Box || kind() == ConceptKind::Dia; }
  bool is_binary() const { return kind() == ConceptKind::And || kind() == ConceptKind::Or; }

  // Number of AST nodes.
  std::size_t node_count() const;
  std::size_t hash() const;

  friend bool operator==(const Concept& a, const Concept& b);
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

  struct Node;

 private:
  friend struct ConceptBuilder;
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Sort { Object, Feature };

// The four adjunction-generated prefixes. BlackDiamond and Diamond build
// objects from objects; Box and BlackBox build features from features.
enum class ModalOp { BlackDiamond, Diamond, Box, BlackBox };

enum class IndividualForm { Base, Classifier, Prefixed };

// Two-sorted individual name. Construction canonicalizes the two
// identifications dia_R(a_C) = a_<R>C and box_R(x_C) = x_[R]C, so equal
// individuals always compare equal structurally.
class Individual {
 public:
  static Individual object(std::string name);
  static Individual feature(std::string name);
  // a_C (Sort::Object) or x_C (Sort::Feature).
  static Individual classifier(Sort sort, Concept classified);
  // Throws std::invalid_argument on a sort or role-kind mismatch.
  static Individual prefixed(ModalOp op, RoleName role, Individual inner);

  Sort sort() const;
  IndividualForm form() const;
  const std::string& name() const;       // Base
  const Concept& classified() const;     // Classifier
  ModalOp op() const;                    // Prefixed
  const RoleName& role() const;          // Prefixed
  const Individual& inner() const;       // Prefixed

  bool is_object() const { return sort() == Sort::Object; }
  std::size_t hash() const;

  friend bool operator==(const Individual& a, const Individual& b);
  friend std::strong_ordering operator<=>(const Individual& a, const Individual& b);

  struct Node;

 private:
  friend struct IndividualBuilder;
  explicit Individual(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Sort op_input_sort(ModalOp op);
RoleKind op_role_kind(ModalOp op);

// ABox term bodies.
struct MemberOf {  // a : C
  Individual object;
  Concept expr;
  friend bool operator==(const MemberOf&, const MemberOf&) = default;
  friend auto operator<=>(const MemberOf&, const MemberOf&) = default;
};
struct DescribedBy {  // x :: C
  Individual feature;
  Concept expr;
  friend bool operator==(const DescribedBy&, const DescribedBy&) = default;
  friend auto operator<=>(const DescribedBy&, const DescribedBy&) = default;
};
struct Incidence {  // a I x
  Individual object;
  Individual feature;
  friend bool operator==(const Incidence&, const Incidence&) = default;
  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};
struct BoxRel {  // a R x
  RoleName role;
  Individual object;
  Individual feature;
  friend bool operator==(const BoxRel&, const BoxRel&) = default;
  friend auto operator<=>(const BoxRel&, const BoxRel&) = default;
};
struct DiaRel {  // x R a
  RoleName role;
  Individual feature;
  Individual object;
  friend bool operator==(const DiaRel&, const DiaRel&) = default;
  friend auto operator<=>(const DiaRel&, const DiaRel&) = default;
};

using TermBody = std::variant<MemberOf, DescribedBy, Incidence, BoxRel, DiaRel>;

struct AboxTerm {
  bool negated = false;
  TermBody body;

  bool is_relational() const { return body.index() >= 2; }
  AboxTerm negation() const { return {!negated, body}; }

  friend bool operator==(const AboxTerm&, const AboxTerm&) = default;
  friend auto operator<=>(const AboxTerm&, const AboxTerm&) = default;
};

AboxTerm member(Individual object, Concept expr, bool negated = false);
AboxTerm described(Individual feature, Concept expr, bool negated = false);
AboxTerm incidence(Individual object, Individual feature, bool negated = false);
AboxTerm box_rel(RoleName role, Individual object, Individual feature, bool negated = false);
AboxTerm dia_rel(RoleName role, Individual feature, Individual object, bool negated = false);

// A == C with atomic left-hand side.
struct TboxDefinition {
  std::string lhs;
  Concept rhs;
  friend bool operator==(const TboxDefinition&, const TboxDefinition&) = default;
};

// Rendering in the knowledge-base grammar. Output re-parses to the same value.
std::string to_string(const RoleName& role);
std::string to_string(const Concept& c);
std::string to_string(const Individual& individual);
std::string to_string(const AboxTerm& term);
std::string to_string(const TboxDefinition& definition);

// Reflexive-transitive closure of immediate subconcepts.
std::set<Concept> subformulas(const Concept& c);

// Concepts of every a:C / x::C term (either polarity), closed under subformulas.
std::set<Concept> occurring_concepts(std::span<const AboxTerm> terms);
bool occurs_in(const Concept& c, std::span<const AboxTerm> terms);

int concept_box_depth(const Concept& c);
int concept_dia_depth(const Concept& c);

// Depths of canonical individuals; negative for classifiers of modal concepts.
int individual_box_depth(const Individual& individual);
int individual_dia_depth(const Individual& individual);

struct AboxDepths {
  int box_depth = 0;
  int dia_depth = 0;
  friend bool operator==(const AboxDepths&, const AboxDepths&) = default;
};
AboxDepths abox_depths(std::span<const AboxTerm> terms);

// 1 + |sub(C)| for concept terms, 2 for relational terms; a negation adds 1.
std::size_t term_size(const AboxTerm& term);
std::size_t abox_size(std::span<const AboxTerm> terms);

// Every role mentioned by a term, including roles inside concepts and
// generated individuals.
std::set<RoleName> roles_in(std::span<const AboxTerm> terms);
std::set<std::string> atoms_in(const Concept& c);

}  // namespace lealc

template <>
struct std::hash<lealc::Concept> {
  std::size_t operator()(const lealc::Concept& c) const noexcept { return c.hash(); }
};
template <>
struct std::hash<lealc::Individual> {
  std::size_t operator()(const lealc::Individual& i) const noexcept { return i.hash(); }
};

#endif  // LEALC_SYNTAX_HPP_
