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

#include "lealc/extraction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lealc {

namespace {

// Ids sorted by rendered name, with an extra element merged in.
std::vector<std::pair<std::string, IndId>> sorted_carrier(const Tableau& t, const std::vector<IndId>& ids,
                                                          const std::string& extra) {
  std::vector<std::pair<std::string, IndId>> out;
  for (IndId i : ids) out.emplace_back(to_string(t.registry().ind(i).ind), i);
  out.emplace_back(extra, kNone);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Interpretation extract_model(const Tableau& t, const Vocabulary& vocab) {
  if (t.clash()) throw std::logic_error("extract_model called on a tableau with a clash");
  const Registry& reg = t.registry();
  const auto objs = sorted_carrier(t, t.objects(), kTopObject);
  const auto feats = sorted_carrier(t, t.features(), kBotFeature);

  Interpretation m;
  std::vector<std::string> obj_names, feat_names;
  for (const auto& [name, id] : objs) obj_names.push_back(name);
  for (const auto& [name, id] : feats) feat_names.push_back(name);
  m.context.base = Polarity(std::move(obj_names), std::move(feat_names));

  std::unordered_map<IndId, std::size_t> obj_index, feat_index;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (objs[i].second == kNone) continue;
    obj_index[objs[i].second] = i;
    m.object_map[reg.ind(objs[i].second).ind] = i;
  }
  for (std::size_t i = 0; i < feats.size(); ++i) {
    if (feats[i].second == kNone) continue;
    feat_index[feats[i].second] = i;
    m.feature_map[reg.ind(feats[i].second).ind] = i;
  }

  for (const RoleName& r : vocab.roles)
    r.kind == RoleKind::Box ? m.context.add_box_role(r.name) : m.context.add_dia_role(r.name);
  for (const RoleName& r : roles_in(t.input())) {
    if (r.kind == RoleKind::Box) m.context.add_box_role(r.name);
    if (r.kind == RoleKind::Diamond) m.context.add_dia_role(r.name);
  }
  for (std::size_t i = 0; i < reg.num_roles(); ++i) {
    const RoleName& r = reg.role(static_cast<RoleId>(i));
    if (r.kind == RoleKind::Box) m.context.add_box_role(r.name);
    if (r.kind == RoleKind::Diamond) m.context.add_dia_role(r.name);
  }

  for (TermId id = 0; id < t.size(); ++id) {
    const Term& term = t.term(id);
    if (term.negated) continue;
    switch (term.kind) {
      case TermKind::Incidence:
        m.context.base.incidence.set(obj_index.at(term.a), feat_index.at(term.b));
        break;
      case TermKind::BoxRel:
        m.context.box_rels.at(reg.role(term.role).name).set(obj_index.at(term.a), feat_index.at(term.b));
        break;
      case TermKind::DiaRel:
        m.context.dia_rels.at(reg.role(term.role).name).set(feat_index.at(term.a), obj_index.at(term.b));
        break;
      default:
        break;
    }
  }

  std::set<std::string> atoms = vocab.atoms;
  for (const AboxTerm& in : t.input()) {
    if (const auto* mo = std::get_if<MemberOf>(&in.body)) atoms.merge(atoms_in(mo->expr));
    if (const auto* de = std::get_if<DescribedBy>(&in.body)) atoms.merge(atoms_in(de->expr));
  }
  const Polarity& p = m.context.base;
  for (const std::string& name : atoms) {
    std::optional<IndId> a, x;
    if (auto c = reg.find(Concept::atom(name))) {
      a = reg.find(Individual::classifier(Sort::Object, Concept::atom(name)));
      x = reg.find(Individual::classifier(Sort::Feature, Concept::atom(name)));
    }
    if (a && x && obj_index.contains(*a) && feat_index.contains(*x)) {
      ElementSet xs(p.num_features()), as(p.num_objects());
      xs.set(feat_index.at(*x));
      as.set(obj_index.at(*a));
      m.atom_map[name] = {poly_down(p, xs), poly_up(p, as)};
    } else {
      m.atom_map[name] = concept_from_intent(p, full_set(p.num_features()));
    }
  }
  return m;
}

Report verify_extraction(const Tableau& t, const Interpretation& model) {
  Report report;
  const Registry& reg = t.registry();
  const Polarity& p = model.context.base;
  Evaluator ev(model);

  for (const AboxTerm& in : t.input())
    if (!ev.satisfies(in)) report.violations.push_back("input term not satisfied: " + to_string(in));

  for (const SliceFailure& f : check_i_compatibility(model.context).failures)
    report.violations.push_back("relation " + to_string(f.role) + " not I-compatible: " + f.slice + " at " + f.element);

  for (const auto& [name, c] : model.atom_map)
    if (!is_stable_pair(p, c)) report.violations.push_back("atom " + name + " is not a formal concept");

  std::vector<std::optional<IndId>> obj_ids(p.num_objects()), feat_ids(p.num_features());
  for (const auto& [ind, i] : model.object_map) obj_ids[i] = reg.find(ind);
  for (const auto& [ind, i] : model.feature_map) feat_ids[i] = reg.find(ind);

  for (ConceptId c : t.occurring_concepts()) {
    const Concept& expr = reg.concept_info(c).expr;
    const StableSetPair& value = ev.eval(expr);
    const auto a_c = reg.find(Individual::classifier(Sort::Object, expr));
    const auto x_c = reg.find(Individual::classifier(Sort::Feature, expr));
    for (std::size_t i = 0; i < p.num_objects(); ++i) {
      const bool in_tableau =
          obj_ids[i] && x_c && t.contains(Term{TermKind::Incidence, false, *obj_ids[i], *x_c, kNone});
      if (value.extent.test(i) != in_tableau)
        report.violations.push_back("membership of " + p.objects[i] + " in " + to_string(expr) + " is " +
                                    (value.extent.test(i) ? "true" : "false") + " but incidence with its classifier is " +
                                    (in_tableau ? "present" : "absent"));
    }
    for (std::size_t i = 0; i < p.num_features(); ++i) {
      const bool in_tableau =
          feat_ids[i] && a_c && t.contains(Term{TermKind::Incidence, false, *a_c, *feat_ids[i], kNone});
      if (value.intent.test(i) != in_tableau)
        report.violations.push_back("description of " + p.features[i] + " by " + to_string(expr) + " is " +
                                    (value.intent.test(i) ? "true" : "false") + " but incidence with its classifier is " +
                                    (in_tableau ? "present" : "absent"));
    }
  }
  return report;
}

Report check_depth_bounds(const Tableau& t) {
  std::vector<AboxTerm> input(t.input().begin(), t.input().end());
  return check_depth_bounds(t, abox_depths(input));
}

Report check_depth_bounds(const Tableau& t, const AboxDepths& base) {
  Report report;
  const Registry& reg = t.registry();
  const int bA = base.box_depth + 1;
  const int dA = base.dia_depth + 1;
  auto fail = [&](TermId id, const char* what) { report.violations.push_back(std::string(what) + ": " + t.render(id)); };
  auto check_object = [&](TermId id, IndId b) {
    const IndInfo& i = reg.ind(b);
    if (!(-dA <= i.dia_depth && i.box_depth <= bA)) fail(id, "object depth out of range");
  };
  auto check_feature = [&](TermId id, IndId y) {
    const IndInfo& i = reg.ind(y);
    if (!(-bA <= i.box_depth && i.dia_depth <= dA)) fail(id, "feature depth out of range");
  };
  for (TermId id = 0; id < t.size(); ++id) {
    const Term& term = t.term(id);
    if (term.negated) continue;
    switch (term.kind) {
      case TermKind::Incidence: {
        const IndInfo& b = reg.ind(term.a);
        const IndInfo& y = reg.ind(term.b);
        if (b.box_depth - y.box_depth > bA || y.dia_depth - b.dia_depth > dA) fail(id, "incidence bound");
        check_object(id, term.a);
        check_feature(id, term.b);
        break;
      }
      case TermKind::BoxRel: {
        const IndInfo& b = reg.ind(term.a);
        const IndInfo& y = reg.ind(term.b);
        if (b.box_depth + 1 - y.box_depth > bA || y.dia_depth - b.dia_depth > dA) fail(id, "box relation bound");
        check_object(id, term.a);
        check_feature(id, term.b);
        break;
      }
      case TermKind::DiaRel: {
        const IndInfo& y = reg.ind(term.a);
        const IndInfo& b = reg.ind(term.b);
        if (b.box_depth - y.box_depth > bA || y.dia_depth + 1 - b.dia_depth > dA) fail(id, "diamond relation bound");
        check_object(id, term.b);
        check_feature(id, term.a);
        break;
      }
      case TermKind::Member: {
        const IndInfo& b = reg.ind(term.a);
        const ConceptInfo& c = reg.concept_info(term.b);
        if (b.box_depth + c.box_depth > bA || -b.dia_depth - c.dia_depth > 0) fail(id, "membership bound");
        if (c.box_depth > bA || c.dia_depth > dA) fail(id, "concept depth out of range");
        check_object(id, term.a);
        break;
      }
      case TermKind::Described: {
        const IndInfo& y = reg.ind(term.a);
        const ConceptInfo& c = reg.concept_info(term.b);
        if (-y.box_depth - c.box_depth > 0 || y.dia_depth + c.dia_depth > dA) fail(id, "description bound");
        if (c.box_depth > bA || c.dia_depth > dA) fail(id, "concept depth out of range");
        check_feature(id, term.a);
        break;
      }
    }
  }
  return report;
}

Report check_derived_rules(const Tableau& t) {
  Report report;
  const Registry& reg = t.registry();
  for (TermId id = 0; id < t.size(); ++id) {
    const Term& term = t.term(id);
    if (term.negated) continue;
    if (term.kind == TermKind::Member) {
      const ConceptInfo& c = reg.concept_info(term.b);
      if (c.kind == ConceptKind::Or) {
        // or_A: b : C1 | C2, y :: C1, y :: C2 => b I y
        for (IndId y : t.described_by(c.lhs)) {
          if (!t.has_described(y, c.rhs)) continue;
          if (!t.contains(Term{TermKind::Incidence, false, term.a, y, kNone}))
            report.violations.push_back("or_A missing " + to_string(reg.ind(term.a).ind) + " I " +
                                        to_string(reg.ind(y).ind));
        }
      }
      // adj_box: bdia_R(b) : C => b : [R]C
      if (auto v = reg.as_black_diamond_of(term.a)) {
        const Concept boxed = Concept::box(reg.role(v->role), c.expr);
        auto bc = reg.find(boxed);
        if (!bc || !t.has_member(v->inner, *bc))
          report.violations.push_back("adj_box missing " + to_string(reg.ind(v->inner).ind) + " : " + to_string(boxed));
      }
    } else if (term.kind == TermKind::Described) {
      const ConceptInfo& c = reg.concept_info(term.b);
      if (c.kind == ConceptKind::And) {
        for (IndId b : t.members_of(c.lhs)) {
          if (!t.has_member(b, c.rhs)) continue;
          if (!t.contains(Term{TermKind::Incidence, false, b, term.a, kNone}))
            report.violations.push_back("and_X missing " + to_string(reg.ind(b).ind) + " I " +
                                        to_string(reg.ind(term.a).ind));
        }
      }
      if (auto v = reg.as_black_box_of(term.a)) {
        const Concept dia = Concept::dia(reg.role(v->role), c.expr);
        auto dc = reg.find(dia);
        if (!dc || !t.has_described(v->inner, *dc))
          report.violations.push_back("adj_dia missing " + to_string(reg.ind(v->inner).ind) + " :: " + to_string(dia));
      }
    }
  }
  return report;
}

}  // namespace lealc
