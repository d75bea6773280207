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

#include "lealc/tableau.hpp"

#include <algorithm>
#include <map>

#include <boost/container_hash/hash.hpp>

namespace lealc {

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t seed = static_cast<std::size_t>(t.kind) * 2 + (t.negated ? 1 : 0);
  boost::hash_combine(seed, t.a);
  boost::hash_combine(seed, t.b);
  boost::hash_combine(seed, t.role);
  return seed;
}

const char* rule_name(RuleKind rule) {
  switch (rule) {
    case RuleKind::Create: return "create";
    case RuleKind::Basic: return "I";
    case RuleKind::AndA: return "and_A";
    case RuleKind::OrX: return "or_X";
    case RuleKind::Box: return "box";
    case RuleKind::Dia: return "dia";
    case RuleKind::BoxY: return "box_y";
    case RuleKind::BlackBoxY: return "bbox_y";
    case RuleKind::DiaB: return "dia_b";
    case RuleKind::BlackDiaB: return "bdia_b";
    case RuleKind::AndAInverse: return "and_A_inv";
    case RuleKind::OrXInverse: return "or_X_inv";
    case RuleKind::AdjBox: return "adj_R_box";
    case RuleKind::AdjDia: return "adj_R_dia";
    case RuleKind::NegB: return "not_b";
    case RuleKind::NegX: return "not_x";
    case RuleKind::AppendX: return "append_x";
    case RuleKind::AppendA: return "append_a";
  }
  return "?";
}

RuleCategory rule_category(RuleKind rule) {
  switch (rule) {
    case RuleKind::NegB:
    case RuleKind::NegX:
      return RuleCategory::Negative;
    case RuleKind::Create:
      return RuleCategory::Creation;
    case RuleKind::Basic:
    case RuleKind::AndA:
    case RuleKind::OrX:
    case RuleKind::Box:
    case RuleKind::Dia:
      return RuleCategory::Structural;
    case RuleKind::AppendX:
    case RuleKind::AppendA:
      return RuleCategory::Appending;
    case RuleKind::AdjBox:
    case RuleKind::AdjDia:
      return RuleCategory::Adjunction;
    case RuleKind::BoxY:
    case RuleKind::BlackBoxY:
    case RuleKind::DiaB:
    case RuleKind::BlackDiaB:
      return RuleCategory::ICompat;
    case RuleKind::AndAInverse:
    case RuleKind::OrXInverse:
      return RuleCategory::Inverse;
  }
  return RuleCategory::Inverse;
}

namespace {

const std::vector<IndId> kEmpty;

Term member_t(IndId b, ConceptId c, bool neg = false) { return {TermKind::Member, neg, b, c, kNone}; }
Term described_t(IndId y, ConceptId c, bool neg = false) { return {TermKind::Described, neg, y, c, kNone}; }
Term incidence_t(IndId b, IndId y, bool neg = false) { return {TermKind::Incidence, neg, b, y, kNone}; }
Term box_t(RoleId r, IndId b, IndId y) { return {TermKind::BoxRel, false, b, y, r}; }
Term dia_t(RoleId r, IndId y, IndId b) { return {TermKind::DiaRel, false, y, b, r}; }

}  // namespace

Tableau::Tableau(std::span<const AboxTerm> initial, TableauOptions options) : options_(options) {
  if (options_.seed) rng_.emplace(*options_.seed);
  std::set<AboxTerm> seen;
  for (const AboxTerm& t : initial)
    if (seen.insert(t).second) input_.push_back(t);
  input_count_ = input_.size();
  step_limit_ = options_.max_steps ? options_.max_steps : default_step_limit(input_);
  for (const AboxTerm& t : input_) add(intern(t));
}

Term Tableau::intern(const AboxTerm& t) {
  return std::visit(
      [&](const auto& body) -> Term {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, MemberOf>) {
          return member_t(registry_.intern(body.object), registry_.intern(body.expr), t.negated);
        } else if constexpr (std::is_same_v<T, DescribedBy>) {
          return described_t(registry_.intern(body.feature), registry_.intern(body.expr), t.negated);
        } else if constexpr (std::is_same_v<T, Incidence>) {
          return incidence_t(registry_.intern(body.object), registry_.intern(body.feature), t.negated);
        } else if constexpr (std::is_same_v<T, BoxRel>) {
          return {TermKind::BoxRel, t.negated, registry_.intern(body.object), registry_.intern(body.feature),
                  registry_.intern(body.role)};
        } else {
          return {TermKind::DiaRel, t.negated, registry_.intern(body.feature), registry_.intern(body.object),
                  registry_.intern(body.role)};
        }
      },
      t.body);
}

std::optional<TermId> Tableau::find(const Term& t) const {
  if (auto it = index_.find(t); it != index_.end()) return it->second;
  return std::nullopt;
}

bool Tableau::contains(const AboxTerm& t) const {
  // Interning through the mutable registry does not change the term set.
  return contains(const_cast<Tableau*>(this)->intern(t));
}

AboxTerm Tableau::to_abox(const Term& t) const {
  const Registry& r = registry_;
  switch (t.kind) {
    case TermKind::Member:
      return member(r.ind(t.a).ind, r.concept_info(t.b).expr, t.negated);
    case TermKind::Described:
      return described(r.ind(t.a).ind, r.concept_info(t.b).expr, t.negated);
    case TermKind::Incidence:
      return incidence(r.ind(t.a).ind, r.ind(t.b).ind, t.negated);
    case TermKind::BoxRel:
      return box_rel(r.role(t.role), r.ind(t.a).ind, r.ind(t.b).ind, t.negated);
    case TermKind::DiaRel:
      return dia_rel(r.role(t.role), r.ind(t.a).ind, r.ind(t.b).ind, t.negated);
  }
  throw std::logic_error("bad term kind");
}

std::vector<AboxTerm> Tableau::abox_terms() const {
  std::vector<AboxTerm> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(to_abox(t));
  return out;
}

std::set<AboxTerm> Tableau::term_set() const {
  std::set<AboxTerm> out;
  for (const Term& t : terms_) out.insert(to_abox(t));
  return out;
}

std::vector<ConceptId> Tableau::occurring_concepts() const {
  std::vector<ConceptId> out;
  for (ConceptId c = 0; c < occurs_.size(); ++c)
    if (occurs_[c]) out.push_back(c);
  return out;
}

std::vector<IndId> Tableau::objects() const {
  std::vector<IndId> out;
  for (IndId i = 0; i < ind_seen_.size(); ++i)
    if (ind_seen_[i] && registry_.ind(i).sort == Sort::Object) out.push_back(i);
  return out;
}

std::vector<IndId> Tableau::features() const {
  std::vector<IndId> out;
  for (IndId i = 0; i < ind_seen_.size(); ++i)
    if (ind_seen_[i] && registry_.ind(i).sort == Sort::Feature) out.push_back(i);
  return out;
}

const std::vector<IndId>& Tableau::members_of(ConceptId c) const {
  return c < members_.size() ? members_[c] : kEmpty;
}

const std::vector<IndId>& Tableau::described_by(ConceptId c) const {
  return c < described_.size() ? described_[c] : kEmpty;
}

void Tableau::grow(std::vector<std::vector<IndId>>& index, std::size_t id) {
  if (index.size() <= id) index.resize(std::max(id + 1, registry_.num_concepts()));
}

std::optional<TermId> Tableau::add(const Term& t) {
  if (index_.contains(t)) return std::nullopt;
  const auto id = static_cast<TermId>(terms_.size());
  terms_.push_back(t);
  index_.emplace(t, id);

  auto seen = [this](IndId i) {
    if (ind_seen_.size() <= i) ind_seen_.resize(std::max<std::size_t>(i + 1, registry_.num_individuals()), 0);
    ind_seen_[i] = 1;
  };
  seen(t.a);
  if (t.is_relational()) seen(t.b);

  if (!t.negated && t.kind == TermKind::Member) {
    grow(members_, t.b);
    members_[t.b].push_back(t.a);
  } else if (!t.negated && t.kind == TermKind::Described) {
    grow(described_, t.b);
    described_[t.b].push_back(t.a);
  }

  std::vector<RuleApplication> apps;
  if (t.kind == TermKind::Member || t.kind == TermKind::Described) mark_occurs(t.b);
  if (t.is_relational() && !clash_) {
    if (auto other = find(t.negation())) clash_ = t.negated ? Clash{*other, id} : Clash{id, *other};
  }
  bindings_for_term(id, apps);
  enqueue(apps);
  return id;
}

void Tableau::mark_occurs(ConceptId c) {
  if (occurs_.size() <= c) occurs_.resize(std::max<std::size_t>(c + 1, registry_.num_concepts()), 0);
  if (occurs_[c]) return;
  occurs_[c] = 1;
  std::vector<RuleApplication> apps;
  bindings_for_concept(c, apps);
  enqueue(apps);
  const ConceptInfo& info = registry_.concept_info(c);
  const ConceptId lhs = info.lhs;
  const ConceptId rhs = info.rhs;
  if (lhs != kNone) mark_occurs(lhs);
  if (rhs != kNone) mark_occurs(rhs);
}

void Tableau::bindings_for_concept(ConceptId c, std::vector<RuleApplication>& out) {
  out.push_back({RuleKind::Create, {}, c});
  const ConceptInfo info = registry_.concept_info(c);
  if (info.kind == ConceptKind::And) {
    for (IndId b : members_of(info.lhs)) {
      auto other = find(member_t(b, info.rhs));
      if (other) out.push_back({RuleKind::AndAInverse, {*find(member_t(b, info.lhs)), *other}, c});
    }
  } else if (info.kind == ConceptKind::Or) {
    for (IndId y : described_by(info.lhs)) {
      auto other = find(described_t(y, info.rhs));
      if (other) out.push_back({RuleKind::OrXInverse, {*find(described_t(y, info.lhs)), *other}, c});
    }
  }
}

void Tableau::bindings_for_term(TermId id, std::vector<RuleApplication>& out) {
  const Term t = terms_[id];
  if (t.negated) {
    if (t.kind == TermKind::Member) out.push_back({RuleKind::NegB, {id}});
    if (t.kind == TermKind::Described) out.push_back({RuleKind::NegX, {id}});
    return;
  }
  switch (t.kind) {
    case TermKind::Member: {
      const IndId b = t.a;
      const ConceptId c = t.b;
      const ConceptInfo info = registry_.concept_info(c);
      if (info.kind == ConceptKind::And) out.push_back({RuleKind::AndA, {id}});
      for (IndId y : described_by(c)) out.push_back({RuleKind::Basic, {id, *find(described_t(y, c))}});
      if (info.kind == ConceptKind::Box)
        for (IndId y : described_by(info.lhs)) out.push_back({RuleKind::Box, {id, *find(described_t(y, info.lhs))}});
      for (ConceptId p : registry_.modal_parents(c)) {
        if (registry_.concept_info(p).kind != ConceptKind::Dia) continue;
        for (IndId y : described_by(p)) out.push_back({RuleKind::Dia, {*find(described_t(y, p)), id}});
      }
      for (ConceptId p : registry_.binary_parents(c)) {
        const ConceptInfo& pi = registry_.concept_info(p);
        if (pi.kind != ConceptKind::And || !occurs(p)) continue;
        auto l = find(member_t(b, pi.lhs));
        auto r = find(member_t(b, pi.rhs));
        if (l && r) out.push_back({RuleKind::AndAInverse, {*l, *r}, p});
      }
      break;
    }
    case TermKind::Described: {
      const IndId y = t.a;
      const ConceptId c = t.b;
      const ConceptInfo info = registry_.concept_info(c);
      if (info.kind == ConceptKind::Or) out.push_back({RuleKind::OrX, {id}});
      for (IndId b : members_of(c)) out.push_back({RuleKind::Basic, {*find(member_t(b, c)), id}});
      if (info.kind == ConceptKind::Dia)
        for (IndId b : members_of(info.lhs)) out.push_back({RuleKind::Dia, {id, *find(member_t(b, info.lhs))}});
      for (ConceptId p : registry_.modal_parents(c)) {
        if (registry_.concept_info(p).kind != ConceptKind::Box) continue;
        for (IndId b : members_of(p)) out.push_back({RuleKind::Box, {*find(member_t(b, p)), id}});
      }
      for (ConceptId p : registry_.binary_parents(c)) {
        const ConceptInfo& pi = registry_.concept_info(p);
        if (pi.kind != ConceptKind::Or || !occurs(p)) continue;
        auto l = find(described_t(y, pi.lhs));
        auto r = find(described_t(y, pi.rhs));
        if (l && r) out.push_back({RuleKind::OrXInverse, {*l, *r}, p});
      }
      break;
    }
    case TermKind::Incidence: {
      const IndId b = t.a;
      const IndId y = t.b;
      if (registry_.as_box_of(y)) out.push_back({RuleKind::BoxY, {id}});
      if (registry_.as_black_box_of(y)) out.push_back({RuleKind::BlackBoxY, {id}});
      if (registry_.as_dia_of(b)) out.push_back({RuleKind::DiaB, {id}});
      if (registry_.as_black_diamond_of(b)) out.push_back({RuleKind::BlackDiaB, {id}});
      if (registry_.ind(y).form == IndividualForm::Classifier) out.push_back({RuleKind::AppendX, {id}});
      if (registry_.ind(b).form == IndividualForm::Classifier) out.push_back({RuleKind::AppendA, {id}});
      break;
    }
    case TermKind::BoxRel:
      out.push_back({RuleKind::AdjBox, {id}});
      break;
    case TermKind::DiaRel:
      out.push_back({RuleKind::AdjDia, {id}});
      break;
  }
}

std::vector<Term> Tableau::conclusions(const RuleApplication& app) const {
  Registry& r = registry_;
  auto prem = [&](std::size_t i) -> const Term& { return terms_.at(app.premises.at(i)); };
  switch (app.rule) {
    case RuleKind::Create:
      return {member_t(r.classifier(Sort::Object, app.concept_id), app.concept_id),
              described_t(r.classifier(Sort::Feature, app.concept_id), app.concept_id)};
    case RuleKind::Basic:
      return {incidence_t(prem(0).a, prem(1).a)};
    case RuleKind::AndA:
    case RuleKind::OrX: {
      const Term& t = prem(0);
      const ConceptInfo& info = r.concept_info(t.b);
      return {{t.kind, false, t.a, info.lhs, kNone}, {t.kind, false, t.a, info.rhs, kNone}};
    }
    case RuleKind::Box:
      return {box_t(r.concept_info(prem(0).b).role, prem(0).a, prem(1).a)};
    case RuleKind::Dia:
      return {dia_t(r.concept_info(prem(0).b).role, prem(0).a, prem(1).a)};
    case RuleKind::BoxY: {
      const auto v = *r.as_box_of(prem(0).b);
      return {box_t(v.role, prem(0).a, v.inner)};
    }
    case RuleKind::BlackBoxY: {
      const auto v = *r.as_black_box_of(prem(0).b);
      return {dia_t(v.role, v.inner, prem(0).a)};
    }
    case RuleKind::DiaB: {
      const auto v = *r.as_dia_of(prem(0).a);
      return {dia_t(v.role, prem(0).b, v.inner)};
    }
    case RuleKind::BlackDiaB: {
      const auto v = *r.as_black_diamond_of(prem(0).a);
      return {box_t(v.role, v.inner, prem(0).b)};
    }
    case RuleKind::AndAInverse:
      return {member_t(prem(0).a, app.concept_id)};
    case RuleKind::OrXInverse:
      return {described_t(prem(0).a, app.concept_id)};
    case RuleKind::AdjBox: {
      const Term& t = prem(0);
      return {incidence_t(r.prefixed(ModalOp::BlackDiamond, t.role, t.a), t.b),
              incidence_t(t.a, r.prefixed(ModalOp::Box, t.role, t.b))};
    }
    case RuleKind::AdjDia: {
      const Term& t = prem(0);  // y R b
      return {incidence_t(r.prefixed(ModalOp::Diamond, t.role, t.b), t.a),
              incidence_t(t.b, r.prefixed(ModalOp::BlackBox, t.role, t.a))};
    }
    case RuleKind::NegB:
      return {incidence_t(prem(0).a, r.classifier(Sort::Feature, prem(0).b), true)};
    case RuleKind::NegX:
      return {incidence_t(r.classifier(Sort::Object, prem(0).b), prem(0).a, true)};
    case RuleKind::AppendX: {
      const Term& t = prem(0);
      return {member_t(t.a, r.ind(t.b).classified)};
    }
    case RuleKind::AppendA: {
      const Term& t = prem(0);
      return {described_t(t.b, r.ind(t.a).classified)};
    }
  }
  throw std::logic_error("bad rule kind");
}

bool Tableau::adds_something(const RuleApplication& app) const {
  for (const Term& t : conclusions(app))
    if (!contains(t)) return true;
  return false;
}

std::vector<RuleApplication> Tableau::applicable_rules() const {
  auto* self = const_cast<Tableau*>(this);  // binding generation only interns names
  std::vector<RuleApplication> all;
  for (TermId id = 0; id < terms_.size(); ++id) self->bindings_for_term(id, all);
  for (ConceptId c : occurring_concepts()) self->bindings_for_concept(c, all);
  std::vector<RuleApplication> out;
  std::set<std::tuple<int, std::vector<TermId>, ConceptId>> seen;
  for (auto& app : all) {
    if (!adds_something(app)) continue;
    if (seen.emplace(static_cast<int>(app.rule), app.premises, app.concept_id).second) out.push_back(std::move(app));
  }
  return out;
}

bool Tableau::apply_rule(const RuleApplication& app) {
  std::vector<Term> fresh;
  for (const Term& t : conclusions(app))
    if (!contains(t) && std::find(fresh.begin(), fresh.end(), t) == fresh.end()) fresh.push_back(t);
  if (fresh.empty()) return false;
  ++steps_;
  TraceRecord record{steps_, app.rule, app.premises, app.concept_id, {}};
  for (const Term& t : fresh)
    if (auto id = add(t)) record.added.push_back(*id);
  if (options_.record_trace) trace_.push_back(std::move(record));
  return true;
}

void Tableau::enqueue(std::vector<RuleApplication>& apps) {
  for (auto& app : apps) queues_[static_cast<std::size_t>(rule_category(app.rule))].push_back(std::move(app));
  apps.clear();
}

bool Tableau::next(RuleApplication& out) {
  if (!rng_) {
    for (auto& q : queues_) {
      if (q.empty()) continue;
      out = std::move(q.front());
      q.pop_front();
      return true;
    }
    return false;
  }
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < queues_.size(); ++i)
    if (!queues_[i].empty()) live.push_back(i);
  if (live.empty()) return false;
  auto& q = queues_[live[std::uniform_int_distribution<std::size_t>(0, live.size() - 1)(*rng_)]];
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, q.size() - 1)(*rng_);
  std::swap(q[k], q.back());
  out = std::move(q.back());
  q.pop_back();
  return true;
}

void Tableau::saturate() {
  RuleApplication app;
  while (!(clash_ && options_.stop_on_clash)) {
    if (!next(app)) {
      saturated_ = true;
      return;
    }
    if (!adds_something(app)) continue;
    if (steps_ >= step_limit_)
      throw SafetyLimitError("rule application limit " + std::to_string(step_limit_) + " exceeded");
    apply_rule(app);
  }
}

std::vector<std::string> Tableau::trace_lines() const {
  std::vector<std::string> out;
  for (const TraceRecord& r : trace_) {
    std::string line = std::to_string(r.step) + " " + rule_name(r.rule) + " [";
    for (std::size_t i = 0; i < r.premises.size(); ++i) line += (i ? "; " : "") + render(r.premises[i]);
    if (r.concept_id != kNone) line += std::string(r.premises.empty() ? "" : "; ") + to_string(registry_.concept_info(r.concept_id).expr);
    line += "] => [";
    for (std::size_t i = 0; i < r.added.size(); ++i) line += (i ? "; " : "") + render(r.added[i]);
    line += "]";
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace lealc
