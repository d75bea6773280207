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

// Interning of roles, concepts and individuals used by the tableau. Ids are
// dense and stable for the lifetime of a registry.

#ifndef LEALC_REGISTRY_HPP_
#define LEALC_REGISTRY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lealc/syntax.hpp"

namespace lealc {

using RoleId = std::uint32_t;
using ConceptId = std::uint32_t;
using IndId = std::uint32_t;

inline constexpr std::uint32_t kNone = 0xffffffffu;

struct ConceptInfo {
  Concept expr;
  ConceptKind kind;
  ConceptId lhs = kNone;  // And/Or left operand, Box/Dia operand
  ConceptId rhs = kNone;
  RoleId role = kNone;
  int box_depth = 0;
  int dia_depth = 0;
};

struct IndInfo {
  Individual ind;
  Sort sort;
  IndividualForm form;
  ConceptId classified = kNone;
  ModalOp op = ModalOp::Box;
  RoleId role = kNone;
  IndId inner = kNone;
  int box_depth = 0;
  int dia_depth = 0;
};

// An individual seen as op_R(inner).
struct PrefixView {
  RoleId role;
  IndId inner;
};

class Registry {
 public:
  RoleId intern(const RoleName& role);
  ConceptId intern(const Concept& c);
  IndId intern(const Individual& i);

  std::optional<ConceptId> find(const Concept& c) const;
  std::optional<IndId> find(const Individual& i) const;

  const RoleName& role(RoleId id) const { return roles_[id]; }
  const ConceptInfo& concept_info(ConceptId id) const { return concepts_[id]; }
  const IndInfo& ind(IndId id) const { return inds_[id]; }
  std::size_t num_roles() const { return roles_.size(); }
  std::size_t num_concepts() const { return concepts_.size(); }
  std::size_t num_individuals() const { return inds_.size(); }

  // a_C / x_C
  IndId classifier(Sort sort, ConceptId c);
  // op_R(inner), canonicalized.
  IndId prefixed(ModalOp op, RoleId role, IndId inner);

  // And/Or concepts having c as an operand.
  const std::vector<ConceptId>& binary_parents(ConceptId c) const { return binary_parents_[c]; }
  // [R]c and <R>c for every interned R.
  const std::vector<ConceptId>& modal_parents(ConceptId c) const { return modal_parents_[c]; }

  // Views used by the I-compatibility rules. x_[R]C counts as box_R(x_C)
  // and a_<R>C as dia_R(a_C).
  std::optional<PrefixView> as_box_of(IndId feature);
  std::optional<PrefixView> as_black_box_of(IndId feature) const;
  std::optional<PrefixView> as_dia_of(IndId object);
  std::optional<PrefixView> as_black_diamond_of(IndId object) const;

 private:
  std::vector<RoleName> roles_;
  std::map<RoleName, RoleId> role_ids_;
  std::vector<ConceptInfo> concepts_;
  std::unordered_map<Concept, ConceptId> concept_ids_;
  std::vector<std::vector<ConceptId>> binary_parents_;
  std::vector<std::vector<ConceptId>> modal_parents_;
  std::vector<IndInfo> inds_;
  std::unordered_map<Individual, IndId> ind_ids_;
  std::map<std::tuple<int, RoleId, IndId>, IndId> prefix_memo_;
};

}  // namespace lealc

#endif  // LEALC_REGISTRY_HPP_
