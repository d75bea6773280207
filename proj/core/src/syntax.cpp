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

#include "lealc/syntax.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

namespace lealc {

struct Concept::Node {
  ConceptKind kind;
  std::string name;
  RoleName role;
  std::vector<Concept> kids;
  std::size_t hash = 0;
  std::size_t nodes = 1;
};

namespace {

std::size_t role_hash(const RoleName& role) {
  std::size_t seed = static_cast<std::size_t>(role.kind);
  boost::hash_combine(seed, role.name);
  return seed;
}

}  // namespace

static Concept make_concept(Concept::Node node);

Concept Concept::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atomic concept with empty name");
  return make_concept({ConceptKind::Atom, std::move(name), {}, {}});
}
Concept Concept::top() { return make_concept({ConceptKind::Top, {}, {}, {}}); }
Concept Concept::bot() { return make_concept({ConceptKind::Bot, {}, {}, {}}); }
Concept Concept::conj(Concept lhs, Concept rhs) {
  return make_concept({ConceptKind::And, {}, {}, {std::move(lhs), std::move(rhs)}});
}
Concept Concept::disj(Concept lhs, Concept rhs) {
  return make_concept({ConceptKind::Or, {}, {}, {std::move(lhs), std::move(rhs)}});
}
Concept Concept::box(RoleName role, Concept inner) {
  if (role.kind != RoleKind::Box) throw std::invalid_argument("[r]C needs a box role: " + role.name);
  return make_concept({ConceptKind::Box, {}, std::move(role), {std::move(inner)}});
}
Concept Concept::dia(RoleName role, Concept inner) {
  if (role.kind != RoleKind::Diamond) throw std::invalid_argument("<r>C needs a diamond role: " + role.name);
  return make_concept({ConceptKind::Dia, {}, std::move(role), {std::move(inner)}});
}

struct ConceptBuilder {
  static Concept wrap(std::shared_ptr<const Concept::Node> n);
};

static Concept make_concept(Concept::Node node) {
  std::size_t seed = static_cast<std::size_t>(node.kind);
  boost::hash_combine(seed, node.name);
  boost::hash_combine(seed, role_hash(node.role));
  for (const Concept& k : node.kids) {
    boost::hash_combine(seed, k.hash());
    node.nodes += k.node_count();
  }
  node.hash = seed;
  return ConceptBuilder::wrap(std::make_shared<const Concept::Node>(std::move(node)));
}

ConceptKind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
const RoleName& Concept::role() const { return node_->role; }
const Concept& Concept::lhs() const { return node_->kids.at(0); }
const Concept& Concept::rhs() const { return node_->kids.at(1); }
const Concept& Concept::inner() const { return node_->kids.at(0); }
std::size_t Concept::node_count() const { return node_->nodes; }
std::size_t Concept::hash() const { return node_->hash; }

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->nodes != b.node_->nodes) return false;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
         a.node_->role == b.node_->role && a.node_->kids == b.node_->kids;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  if (auto c = a.node_->name <=> b.node_->name; c != 0) return c;
  if (auto c = a.node_->role <=> b.node_->role; c != 0) return c;
  return std::lexicographical_compare_three_way(a.node_->kids.begin(), a.node_->kids.end(),
                                                b.node_->kids.begin(), b.node_->kids.end());
}

// ---------------------------------------------------------------------------

struct Individual::Node {
  Sort sort;
  IndividualForm form;
  std::string name;
  std::vector<Concept> classified;
  ModalOp op = ModalOp::Box;
  RoleName role;
  std::vector<Individual> inner;
  std::size_t hash = 0;
};

struct IndividualBuilder {
  static Individual wrap(std::shared_ptr<const Individual::Node> n);
};

static Individual make_individual(Individual::Node node) {
  std::size_t seed = static_cast<std::size_t>(node.sort);
  boost::hash_combine(seed, static_cast<int>(node.form));
  boost::hash_combine(seed, node.name);
  for (const Concept& c : node.classified) boost::hash_combine(seed, c.hash());
  boost::hash_combine(seed, static_cast<int>(node.op));
  boost::hash_combine(seed, role_hash(node.role));
  for (const Individual& i : node.inner) boost::hash_combine(seed, i.hash());
  node.hash = seed;
  return IndividualBuilder::wrap(std::make_shared<const Individual::Node>(std::move(node)));
}

Sort op_input_sort(ModalOp op) {
  return (op == ModalOp::BlackDiamond || op == ModalOp::Diamond) ? Sort::Object : Sort::Feature;
}

RoleKind op_role_kind(ModalOp op) {
  return (op == ModalOp::BlackDiamond || op == ModalOp::Box) ? RoleKind::Box : RoleKind::Diamond;
}

Individual Individual::object(std::string name) {
  if (name.empty()) throw std::invalid_argument("object with empty name");
  return make_individual({Sort::Object, IndividualForm::Base, std::move(name), {}, {}, {}, {}});
}

Individual Individual::feature(std::string name) {
  if (name.empty()) throw std::invalid_argument("feature with empty name");
  return make_individual({Sort::Feature, IndividualForm::Base, std::move(name), {}, {}, {}, {}});
}

Individual Individual::classifier(Sort sort, Concept classified) {
  return make_individual({sort, IndividualForm::Classifier, {}, {std::move(classified)}, {}, {}, {}});
}

Individual Individual::prefixed(ModalOp op, RoleName role, Individual inner) {
  if (inner.sort() != op_input_sort(op))
    throw std::invalid_argument("modal prefix applied to an individual of the wrong sort");
  if (role.kind != op_role_kind(op))
    throw std::invalid_argument("modal prefix tagged with a role of the wrong kind: " + role.name);
  if (inner.form() == IndividualForm::Classifier) {
    if (op == ModalOp::Diamond && inner.sort() == Sort::Object)
      return classifier(Sort::Object, Concept::dia(std::move(role), inner.classified()));
    if (op == ModalOp::Box && inner.sort() == Sort::Feature)
      return classifier(Sort::Feature, Concept::box(std::move(role), inner.classified()));
  }
  const Sort sort = inner.sort();
  return make_individual({sort, IndividualForm::Prefixed, {}, {}, op, std::move(role), {std::move(inner)}});
}

Sort Individual::sort() const { return node_->sort; }
IndividualForm Individual::form() const { return node_->form; }
const std::string& Individual::name() const { return node_->name; }
const Concept& Individual::classified() const { return node_->classified.at(0); }
ModalOp Individual::op() const { return node_->op; }
const RoleName& Individual::role() const { return node_->role; }
const Individual& Individual::inner() const { return node_->inner.at(0); }
std::size_t Individual::hash() const { return node_->hash; }

bool operator==(const Individual& a, const Individual& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return a.node_->sort == b.node_->sort && a.node_->form == b.node_->form && a.node_->name == b.node_->name &&
         a.node_->classified == b.node_->classified && a.node_->op == b.node_->op &&
         a.node_->role == b.node_->role && a.node_->inner == b.node_->inner;
}

std::strong_ordering operator<=>(const Individual& a, const Individual& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.sort <=> y.sort; c != 0) return c;
  if (auto c = x.form <=> y.form; c != 0) return c;
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(x.classified.begin(), x.classified.end(),
                                                      y.classified.begin(), y.classified.end());
      c != 0)
    return c;
  if (auto c = x.op <=> y.op; c != 0) return c;
  if (auto c = x.role <=> y.role; c != 0) return c;
  return std::lexicographical_compare_three_way(x.inner.begin(), x.inner.end(), y.inner.begin(), y.inner.end());
}

Concept ConceptBuilder::wrap(std::shared_ptr<const Concept::Node> n) { return Concept(std::move(n)); }
Individual IndividualBuilder::wrap(std::shared_ptr<const Individual::Node> n) { return Individual(std::move(n)); }

// ---------------------------------------------------------------------------

AboxTerm member(Individual object, Concept expr, bool negated) {
  if (!object.is_object()) throw std::invalid_argument("a : C needs an object");
  return {negated, MemberOf{std::move(object), std::move(expr)}};
}
AboxTerm described(Individual feature, Concept expr, bool negated) {
  if (feature.is_object()) throw std::invalid_argument("x :: C needs a feature");
  return {negated, DescribedBy{std::move(feature), std::move(expr)}};
}
AboxTerm incidence(Individual object, Individual feature, bool negated) {
  if (!object.is_object() || feature.is_object()) throw std::invalid_argument("a I x needs object then feature");
  return {negated, Incidence{std::move(object), std::move(feature)}};
}
AboxTerm box_rel(RoleName role, Individual object, Individual feature, bool negated) {
  if (role.kind != RoleKind::Box) throw std::invalid_argument("box relation term needs a box role");
  if (!object.is_object() || feature.is_object()) throw std::invalid_argument("a R x needs object then feature");
  return {negated, BoxRel{std::move(role), std::move(object), std::move(feature)}};
}
AboxTerm dia_rel(RoleName role, Individual feature, Individual object, bool negated) {
  if (role.kind != RoleKind::Diamond) throw std::invalid_argument("diamond relation term needs a diamond role");
  if (!object.is_object() || feature.is_object()) throw std::invalid_argument("x R a needs feature then object");
  return {negated, DiaRel{std::move(role), std::move(feature), std::move(object)}};
}

// ---------------------------------------------------------------------------

std::string to_string(const RoleName& role) {
  return role.kind == RoleKind::Incidence ? std::string("I") : role.name;
}

namespace {

// Or < And < prefix/atom.
int precedence(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::Or: return 1;
    case ConceptKind::And: return 2;
    default: return 3;
  }
}

void render(const Concept& c, int required, std::string& out) {
  const bool parens = precedence(c.kind()) < required;
  if (parens) out += '(';
  switch (c.kind()) {
    case ConceptKind::Atom: out += c.name(); break;
    case ConceptKind::Top: out += "top"; break;
    case ConceptKind::Bot: out += "bot"; break;
    case ConceptKind::And:
      render(c.lhs(), 2, out);
      out += " & ";
      render(c.rhs(), 3, out);
      break;
    case ConceptKind::Or:
      render(c.lhs(), 1, out);
      out += " | ";
      render(c.rhs(), 2, out);
      break;
    case ConceptKind::Box:
      out += '[' + c.role().name + ']';
      render(c.inner(), 3, out);
      break;
    case ConceptKind::Dia:
      out += '<' + c.role().name + '>';
      render(c.inner(), 3, out);
      break;
  }
  if (parens) out += ')';
}

const char* op_keyword(ModalOp op) {
  switch (op) {
    case ModalOp::BlackDiamond: return "bdia";
    case ModalOp::Diamond: return "dia";
    case ModalOp::Box: return "box";
    case ModalOp::BlackBox: return "bbox";
  }
  return "?";
}

}  // namespace

std::string to_string(const Concept& c) {
  std::string out;
  render(c, 0, out);
  return out;
}

std::string to_string(const Individual& individual) {
  switch (individual.form()) {
    case IndividualForm::Base: return individual.name();
    case IndividualForm::Classifier:
      return std::string(individual.is_object() ? "a{" : "x{") + to_string(individual.classified()) + "}";
    case IndividualForm::Prefixed:
      return std::string(op_keyword(individual.op())) + "@" + individual.role().name + "(" +
             to_string(individual.inner()) + ")";
  }
  return {};
}

std::string to_string(const AboxTerm& term) {
  std::string out = term.negated ? "not " : "";
  std::visit(
      [&out](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, MemberOf>) {
          out += to_string(body.object) + " : " + to_string(body.expr);
        } else if constexpr (std::is_same_v<T, DescribedBy>) {
          out += to_string(body.feature) + " :: " + to_string(body.expr);
        } else if constexpr (std::is_same_v<T, Incidence>) {
          out += to_string(body.object) + " I " + to_string(body.feature);
        } else if constexpr (std::is_same_v<T, BoxRel>) {
          out += to_string(body.object) + " " + body.role.name + " " + to_string(body.feature);
        } else {
          out += to_string(body.feature) + " " + body.role.name + " " + to_string(body.object);
        }
      },
      term.body);
  return out;
}

std::string to_string(const TboxDefinition& definition) {
  return definition.lhs + " == " + to_string(definition.rhs);
}

// ---------------------------------------------------------------------------

namespace {

void collect_subformulas(const Concept& c, std::set<Concept>& out) {
  if (!out.insert(c).second) return;
  if (c.is_binary()) {
    collect_subformulas(c.lhs(), out);
    collect_subformulas(c.rhs(), out);
  } else if (c.is_modal()) {
    collect_subformulas(c.inner(), out);
  }
}

const Concept* concept_of(const AboxTerm& term) {
  if (const auto* m = std::get_if<MemberOf>(&term.body)) return &m->expr;
  if (const auto* d = std::get_if<DescribedBy>(&term.body)) return &d->expr;
  return nullptr;
}

}  // namespace

std::set<Concept> subformulas(const Concept& c) {
  std::set<Concept> out;
  collect_subformulas(c, out);
  return out;
}

std::set<Concept> occurring_concepts(std::span<const AboxTerm> terms) {
  std::set<Concept> out;
  for (const AboxTerm& t : terms)
    if (const Concept* c = concept_of(t)) collect_subformulas(*c, out);
  return out;
}

bool occurs_in(const Concept& c, std::span<const AboxTerm> terms) {
  return occurring_concepts(terms).contains(c);
}

int concept_box_depth(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom:
    case ConceptKind::Top:
    case ConceptKind::Bot: return 0;
    case ConceptKind::Box: return concept_box_depth(c.inner()) + 1;
    case ConceptKind::Dia: return concept_box_depth(c.inner());
    case ConceptKind::And: return std::max(concept_box_depth(c.lhs()), concept_box_depth(c.rhs()));
    case ConceptKind::Or: return std::min(concept_box_depth(c.lhs()), concept_box_depth(c.rhs()));
  }
  return 0;
}

int concept_dia_depth(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom:
    case ConceptKind::Top:
    case ConceptKind::Bot: return 0;
    case ConceptKind::Dia: return concept_dia_depth(c.inner()) + 1;
    case ConceptKind::Box: return concept_dia_depth(c.inner());
    case ConceptKind::Or: return std::max(concept_dia_depth(c.lhs()), concept_dia_depth(c.rhs()));
    case ConceptKind::And: return std::min(concept_dia_depth(c.lhs()), concept_dia_depth(c.rhs()));
  }
  return 0;
}

int individual_box_depth(const Individual& i) {
  switch (i.form()) {
    case IndividualForm::Base: return 0;
    case IndividualForm::Classifier: return i.is_object() ? 0 : -concept_box_depth(i.classified());
    case IndividualForm::Prefixed:
      switch (i.op()) {
        case ModalOp::BlackDiamond: return individual_box_depth(i.inner()) + 1;
        case ModalOp::Box: return individual_box_depth(i.inner()) - 1;
        default: return individual_box_depth(i.inner());
      }
  }
  return 0;
}

int individual_dia_depth(const Individual& i) {
  switch (i.form()) {
    case IndividualForm::Base: return 0;
    case IndividualForm::Classifier: return i.is_object() ? -concept_dia_depth(i.classified()) : 0;
    case IndividualForm::Prefixed:
      switch (i.op()) {
        case ModalOp::Diamond: return individual_dia_depth(i.inner()) - 1;
        case ModalOp::BlackBox: return individual_dia_depth(i.inner()) + 1;
        default: return individual_dia_depth(i.inner());
      }
  }
  return 0;
}

AboxDepths abox_depths(std::span<const AboxTerm> terms) {
  AboxDepths d;
  for (const Concept& c : occurring_concepts(terms)) {
    d.box_depth = std::max(d.box_depth, concept_box_depth(c));
    d.dia_depth = std::max(d.dia_depth, concept_dia_depth(c));
  }
  return d;
}

std::size_t term_size(const AboxTerm& term) {
  const std::size_t negation = term.negated ? 1 : 0;
  if (const Concept* c = concept_of(term)) return negation + 1 + subformulas(*c).size();
  return negation + 2;
}

std::size_t abox_size(std::span<const AboxTerm> terms) {
  std::size_t total = 0;
  for (const AboxTerm& t : terms) total += term_size(t);
  return total;
}

namespace {

void roles_of(const Concept& c, std::set<RoleName>& out) {
  for (const Concept& s : subformulas(c))
    if (s.is_modal()) out.insert(s.role());
}

void roles_of(const Individual& i, std::set<RoleName>& out) {
  switch (i.form()) {
    case IndividualForm::Base: break;
    case IndividualForm::Classifier: roles_of(i.classified(), out); break;
    case IndividualForm::Prefixed:
      out.insert(i.role());
      roles_of(i.inner(), out);
      break;
  }
}

}  // namespace

std::set<RoleName> roles_in(std::span<const AboxTerm> terms) {
  std::set<RoleName> out;
  for (const AboxTerm& t : terms) {
    std::visit(
        [&out](const auto& body) {
          using T = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<T, MemberOf>) {
            roles_of(body.object, out);
            roles_of(body.expr, out);
          } else if constexpr (std::is_same_v<T, DescribedBy>) {
            roles_of(body.feature, out);
            roles_of(body.expr, out);
          } else if constexpr (std::is_same_v<T, Incidence>) {
            roles_of(body.object, out);
            roles_of(body.feature, out);
          } else {
            out.insert(body.role);
            roles_of(body.object, out);
            roles_of(body.feature, out);
          }
        },
        t.body);
  }
  return out;
}

std::set<std::string> atoms_in(const Concept& c) {
  std::set<std::string> out;
  for (const Concept& s : subformulas(c))
    if (s.kind() == ConceptKind::Atom) out.insert(s.name());
  return out;
}

}  // namespace lealc
