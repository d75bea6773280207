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

#include "lealc/registry.hpp"

namespace lealc {

RoleId Registry::intern(const RoleName& role) {
  auto [it, inserted] = role_ids_.try_emplace(role, static_cast<RoleId>(roles_.size()));
  if (inserted) roles_.push_back(role);
  return it->second;
}

ConceptId Registry::intern(const Concept& c) {
  if (auto it = concept_ids_.find(c); it != concept_ids_.end()) return it->second;
  ConceptInfo info{c, c.kind()};
  switch (c.kind()) {
    case ConceptKind::And:
    case ConceptKind::Or:
      info.lhs = intern(c.lhs());
      info.rhs = intern(c.rhs());
      break;
    case ConceptKind::Box:
    case ConceptKind::Dia:
      info.lhs = intern(c.inner());
      info.role = intern(c.role());
      break;
    default:
      break;
  }
  info.box_depth = concept_box_depth(c);
  info.dia_depth = concept_dia_depth(c);
  const auto id = static_cast<ConceptId>(concepts_.size());
  concepts_.push_back(std::move(info));
  binary_parents_.emplace_back();
  modal_parents_.emplace_back();
  concept_ids_.emplace(c, id);
  const ConceptInfo& stored = concepts_.back();
  if (c.is_binary()) {
    binary_parents_[stored.lhs].push_back(id);
    if (stored.rhs != stored.lhs) binary_parents_[stored.rhs].push_back(id);
  } else if (c.is_modal()) {
    modal_parents_[stored.lhs].push_back(id);
  }
  return id;
}

IndId Registry::intern(const Individual& i) {
  if (auto it = ind_ids_.find(i); it != ind_ids_.end()) return it->second;
  IndInfo info{i, i.sort(), i.form()};
  if (i.form() == IndividualForm::Classifier) {
    info.classified = intern(i.classified());
  } else if (i.form() == IndividualForm::Prefixed) {
    info.op = i.op();
    info.role = intern(i.role());
    info.inner = intern(i.inner());
  }
  info.box_depth = individual_box_depth(i);
  info.dia_depth = individual_dia_depth(i);
  const auto id = static_cast<IndId>(inds_.size());
  inds_.push_back(std::move(info));
  ind_ids_.emplace(i, id);
  return id;
}

std::optional<ConceptId> Registry::find(const Concept& c) const {
  if (auto it = concept_ids_.find(c); it != concept_ids_.end()) return it->second;
  return std::nullopt;
}

std::optional<IndId> Registry::find(const Individual& i) const {
  if (auto it = ind_ids_.find(i); it != ind_ids_.end()) return it->second;
  return std::nullopt;
}

IndId Registry::classifier(Sort sort, ConceptId c) {
  return intern(Individual::classifier(sort, concepts_[c].expr));
}

IndId Registry::prefixed(ModalOp op, RoleId role, IndId inner) {
  const auto key = std::make_tuple(static_cast<int>(op), role, inner);
  if (auto it = prefix_memo_.find(key); it != prefix_memo_.end()) return it->second;
  const IndId id = intern(Individual::prefixed(op, roles_[role], inds_[inner].ind));
  prefix_memo_.emplace(key, id);
  return id;
}

std::optional<PrefixView> Registry::as_box_of(IndId feature) {
  const IndInfo& info = inds_[feature];
  if (info.form == IndividualForm::Prefixed && info.op == ModalOp::Box) return PrefixView{info.role, info.inner};
  if (info.form == IndividualForm::Classifier) {
    const ConceptInfo& c = concepts_[info.classified];
    if (c.kind == ConceptKind::Box) {
      const RoleId role = c.role;
      const ConceptId inner = c.lhs;
      return PrefixView{role, classifier(Sort::Feature, inner)};
    }
  }
  return std::nullopt;
}

std::optional<PrefixView> Registry::as_black_box_of(IndId feature) const {
  const IndInfo& info = inds_[feature];
  if (info.form == IndividualForm::Prefixed && info.op == ModalOp::BlackBox) return PrefixView{info.role, info.inner};
  return std::nullopt;
}

std::optional<PrefixView> Registry::as_dia_of(IndId object) {
  const IndInfo& info = inds_[object];
  if (info.form == IndividualForm::Prefixed && info.op == ModalOp::Diamond) return PrefixView{info.role, info.inner};
  if (info.form == IndividualForm::Classifier) {
    const ConceptInfo& c = concepts_[info.classified];
    if (c.kind == ConceptKind::Dia) {
      const RoleId role = c.role;
      const ConceptId inner = c.lhs;
      return PrefixView{role, classifier(Sort::Object, inner)};
    }
  }
  return std::nullopt;
}

std::optional<PrefixView> Registry::as_black_diamond_of(IndId object) const {
  const IndInfo& info = inds_[object];
  if (info.form == IndividualForm::Prefixed && info.op == ModalOp::BlackDiamond)
    return PrefixView{info.role, info.inner};
  return std::nullopt;
}

}  // namespace lealc
