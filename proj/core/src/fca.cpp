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

#include "lealc/fca.hpp"

#include <algorithm>
#include <set>

namespace lealc {

ElementSet full_set(std::size_t n) {
  ElementSet s(n);
  s.set();
  return s;
}

BinaryRelation::BinaryRelation(std::size_t rows, std::size_t cols)
    : rows_(rows, ElementSet(cols)), cols_(cols, ElementSet(rows)) {}

void BinaryRelation::set(std::size_t u, std::size_t v, bool value) {
  rows_.at(u).set(v, value);
  cols_.at(v).set(u, value);
}

std::size_t BinaryRelation::count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

ElementSet BinaryRelation::forall_image(const ElementSet& us) const {
  if (us.size() != rows()) throw std::out_of_range("row set has wrong carrier size");
  ElementSet out = full_set(cols());
  for (auto u = us.find_first(); u != ElementSet::npos; u = us.find_next(u)) out &= rows_[u];
  return out;
}

ElementSet BinaryRelation::forall_preimage(const ElementSet& vs) const {
  if (vs.size() != cols()) throw std::out_of_range("column set has wrong carrier size");
  ElementSet out = full_set(rows());
  for (auto v = vs.find_first(); v != ElementSet::npos; v = vs.find_next(v)) out &= cols_[v];
  return out;
}

Polarity::Polarity(std::vector<std::string> objs, std::vector<std::string> feats)
    : objects(std::move(objs)), features(std::move(feats)), incidence(objects.size(), features.size()) {}

ElementSet poly_up(const Polarity& p, const ElementSet& objects) { return p.incidence.forall_image(objects); }
ElementSet poly_down(const Polarity& p, const ElementSet& features) { return p.incidence.forall_preimage(features); }

bool is_stable_extent(const Polarity& p, const ElementSet& objects) {
  return poly_down(p, poly_up(p, objects)) == objects;
}
bool is_stable_intent(const Polarity& p, const ElementSet& features) {
  return poly_up(p, poly_down(p, features)) == features;
}

ElementSet rel_slice(const BinaryRelation& r, SliceSide side, std::size_t e) {
  return side == SliceSide::Zero ? r.column(e) : r.row(e);
}

bool is_stable_pair(const Polarity& p, const StableSetPair& c) {
  return c.extent.size() == p.num_objects() && c.intent.size() == p.num_features() &&
         poly_up(p, c.extent) == c.intent && poly_down(p, c.intent) == c.extent;
}

StableSetPair concept_from_extent(const Polarity& p, const ElementSet& objects) {
  ElementSet intent = poly_up(p, objects);
  return {poly_down(p, intent), std::move(intent)};
}

StableSetPair concept_from_intent(const Polarity& p, const ElementSet& features) {
  ElementSet extent = poly_down(p, features);
  ElementSet intent = poly_up(p, extent);
  return {std::move(extent), std::move(intent)};
}

void EnrichedContext::add_box_role(const std::string& name) {
  box_rels.try_emplace(name, base.num_objects(), base.num_features());
}
void EnrichedContext::add_dia_role(const std::string& name) {
  dia_rels.try_emplace(name, base.num_features(), base.num_objects());
}

bool relation_is_compatible_box(const Polarity& p, const BinaryRelation& r) {
  for (std::size_t x = 0; x < r.cols(); ++x)
    if (!is_stable_extent(p, r.column(x))) return false;
  for (std::size_t a = 0; a < r.rows(); ++a)
    if (!is_stable_intent(p, r.row(a))) return false;
  return true;
}

bool relation_is_compatible_dia(const Polarity& p, const BinaryRelation& r) {
  for (std::size_t a = 0; a < r.cols(); ++a)
    if (!is_stable_intent(p, r.column(a))) return false;
  for (std::size_t x = 0; x < r.rows(); ++x)
    if (!is_stable_extent(p, r.row(x))) return false;
  return true;
}

CompatibilityReport check_i_compatibility(const EnrichedContext& e) {
  CompatibilityReport report;
  const Polarity& p = e.base;
  for (const auto& [name, r] : e.box_rels) {
    for (std::size_t x = 0; x < r.cols(); ++x)
      if (!is_stable_extent(p, r.column(x)))
        report.failures.push_back({RoleName::box(name), "R(0)[x]", p.features[x]});
    for (std::size_t a = 0; a < r.rows(); ++a)
      if (!is_stable_intent(p, r.row(a)))
        report.failures.push_back({RoleName::box(name), "R(1)[a]", p.objects[a]});
  }
  for (const auto& [name, r] : e.dia_rels) {
    for (std::size_t a = 0; a < r.cols(); ++a)
      if (!is_stable_intent(p, r.column(a)))
        report.failures.push_back({RoleName::diamond(name), "R(0)[a]", p.objects[a]});
    for (std::size_t x = 0; x < r.rows(); ++x)
      if (!is_stable_extent(p, r.row(x)))
        report.failures.push_back({RoleName::diamond(name), "R(1)[x]", p.features[x]});
  }
  return report;
}

StableSetPair box_op(const EnrichedContext& e, const std::string& role, const StableSetPair& c) {
  auto it = e.box_rels.find(role);
  if (it == e.box_rels.end()) throw UnknownRoleError("unknown box role '" + role + "'");
  ElementSet extent = it->second.forall_preimage(c.intent);
  ElementSet intent = poly_up(e.base, extent);
  return {std::move(extent), std::move(intent)};
}

StableSetPair dia_op(const EnrichedContext& e, const std::string& role, const StableSetPair& c) {
  auto it = e.dia_rels.find(role);
  if (it == e.dia_rels.end()) throw UnknownRoleError("unknown diamond role '" + role + "'");
  ElementSet intent = it->second.forall_preimage(c.extent);
  ElementSet extent = poly_down(e.base, intent);
  return {std::move(extent), std::move(intent)};
}

const StableSetPair& Evaluator::eval(const Concept& c) {
  if (auto it = memo_.find(c); it != memo_.end()) return it->second;
  const Polarity& p = interp_.context.base;
  StableSetPair out;
  switch (c.kind()) {
    case ConceptKind::Atom: {
      auto it = interp_.atom_map.find(c.name());
      if (it == interp_.atom_map.end()) throw UnmappedError("unmapped atom '" + c.name() + "'");
      out = it->second;
      break;
    }
    case ConceptKind::Top:
      out = concept_from_extent(p, full_set(p.num_objects()));
      break;
    case ConceptKind::Bot:
      out = concept_from_intent(p, full_set(p.num_features()));
      break;
    case ConceptKind::And: {
      ElementSet extent = eval(c.lhs()).extent;
      extent &= eval(c.rhs()).extent;
      out = {extent, poly_up(p, extent)};
      break;
    }
    case ConceptKind::Or: {
      ElementSet intent = eval(c.lhs()).intent;
      intent &= eval(c.rhs()).intent;
      out = {poly_down(p, intent), intent};
      break;
    }
    case ConceptKind::Box:
      out = box_op(interp_.context, c.role().name, eval(c.inner()));
      break;
    case ConceptKind::Dia:
      out = dia_op(interp_.context, c.role().name, eval(c.inner()));
      break;
  }
  return memo_.emplace(c, std::move(out)).first->second;
}

std::size_t Evaluator::object_index(const Individual& b) const {
  auto it = interp_.object_map.find(b);
  if (it == interp_.object_map.end()) throw UnmappedError("unmapped object '" + to_string(b) + "'");
  return it->second;
}

std::size_t Evaluator::feature_index(const Individual& y) const {
  auto it = interp_.feature_map.find(y);
  if (it == interp_.feature_map.end()) throw UnmappedError("unmapped feature '" + to_string(y) + "'");
  return it->second;
}

bool Evaluator::satisfies(const AboxTerm& term) {
  const EnrichedContext& e = interp_.context;
  const bool holds = std::visit(
      [&](const auto& body) -> bool {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, MemberOf>) {
          return eval(body.expr).extent.test(object_index(body.object));
        } else if constexpr (std::is_same_v<T, DescribedBy>) {
          return eval(body.expr).intent.test(feature_index(body.feature));
        } else if constexpr (std::is_same_v<T, Incidence>) {
          return e.base.incidence.test(object_index(body.object), feature_index(body.feature));
        } else if constexpr (std::is_same_v<T, BoxRel>) {
          auto it = e.box_rels.find(body.role.name);
          if (it == e.box_rels.end()) throw UnknownRoleError("unknown box role '" + body.role.name + "'");
          return it->second.test(object_index(body.object), feature_index(body.feature));
        } else {
          auto it = e.dia_rels.find(body.role.name);
          if (it == e.dia_rels.end()) throw UnknownRoleError("unknown diamond role '" + body.role.name + "'");
          return it->second.test(feature_index(body.feature), object_index(body.object));
        }
      },
      term.body);
  return holds != term.negated;
}

StableSetPair eval_concept(const Interpretation& interp, const Concept& c) { return Evaluator(interp).eval(c); }

bool satisfies(const Interpretation& interp, const AboxTerm& term) { return Evaluator(interp).satisfies(term); }

bool satisfies_all(const Interpretation& interp, std::span<const AboxTerm> terms) {
  Evaluator ev(interp);
  return std::all_of(terms.begin(), terms.end(), [&](const AboxTerm& t) { return ev.satisfies(t); });
}

bool satisfies_tbox(const Interpretation& interp, std::span<const TboxDefinition> defs) {
  Evaluator ev(interp);
  for (const TboxDefinition& d : defs)
    if (ev.eval(Concept::atom(d.lhs)) != ev.eval(d.rhs)) return false;
  return true;
}

std::vector<StableSetPair> concept_lattice(const Polarity& p, std::size_t guard) {
  const std::size_t n_a = p.num_objects();
  const std::size_t n_x = p.num_features();
  if (std::min(n_a, n_x) > guard)
    throw SizeGuardError("concept lattice guard exceeded (" + std::to_string(std::min(n_a, n_x)) + " > " +
                         std::to_string(guard) + ")");
  // Every concept is generated by a subset of the smaller carrier.
  const bool by_objects = n_a <= n_x;
  const std::size_t n = by_objects ? n_a : n_x;
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<StableSetPair> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    ElementSet s(n, mask);
    StableSetPair c = by_objects ? concept_from_extent(p, s) : concept_from_intent(p, s);
    std::string e_key, i_key;
    boost::to_string(c.extent, e_key);
    boost::to_string(c.intent, i_key);
    if (seen.emplace(e_key, i_key).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const StableSetPair& a, const StableSetPair& b) {
    if (a.extent.count() != b.extent.count()) return a.extent.count() < b.extent.count();
    return a.extent < b.extent;
  });
  return out;
}

}  // namespace lealc
