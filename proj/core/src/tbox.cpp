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

#include "lealc/tbox.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace lealc {

std::map<std::string, std::set<std::string>> uses_graph(std::span<const TboxDefinition> defs) {
  std::map<std::string, std::set<std::string>> g;
  for (const TboxDefinition& d : defs) g[d.lhs].merge(atoms_in(d.rhs));
  return g;
}

AcyclicityResult check_acyclic(std::span<const TboxDefinition> defs) {
  std::set<std::string> lhs;
  for (const TboxDefinition& d : defs)
    if (!lhs.insert(d.lhs).second) return {AcyclicityResult::Kind::DuplicateLhs, {d.lhs}};

  const auto g = uses_graph(defs);
  enum Color { White, Grey, Black };
  std::map<std::string, Color> color;
  std::vector<std::string> stack;
  std::vector<std::string> cycle;
  std::function<bool(const std::string&)> dfs = [&](const std::string& a) {
    color[a] = Grey;
    stack.push_back(a);
    if (auto it = g.find(a); it != g.end()) {
      for (const std::string& b : it->second) {
        if (color[b] == Grey) {
          auto from = std::find(stack.begin(), stack.end(), b);
          cycle.assign(from, stack.end());
          cycle.push_back(b);
          return true;
        }
        if (color[b] == White && dfs(b)) return true;
      }
    }
    stack.pop_back();
    color[a] = Black;
    return false;
  };
  for (const auto& [a, _] : g)
    if (color[a] == White && dfs(a)) return {AcyclicityResult::Kind::Cycle, cycle};
  return {};
}

bool check_completely_unravelled(std::span<const TboxDefinition> defs) {
  if (!check_acyclic(defs).ok()) return false;
  std::set<std::string> used;
  for (const TboxDefinition& d : defs) used.merge(atoms_in(d.rhs));
  return std::none_of(defs.begin(), defs.end(), [&](const TboxDefinition& d) { return used.contains(d.lhs); });
}

std::string FreshNames::next() {
  std::string name;
  do {
    name = prefix_ + "_" + std::to_string(++counter_);
  } while (reserved_.contains(name));
  reserved_.insert(name);
  return name;
}

TboxDefinition rewrite_gci(const Concept& lhs, const Concept& rhs, FreshNames& fresh) {
  if (lhs.kind() != ConceptKind::Atom)
    throw TboxError("inclusion with non-atomic left-hand side '" + to_string(lhs) + "' is not supported");
  return {lhs.name(), Concept::conj(rhs, Concept::atom(fresh.next()))};
}

namespace {

class Unraveller {
 public:
  explicit Unraveller(std::span<const TboxDefinition> defs) {
    for (const TboxDefinition& d : defs) defs_.emplace(d.lhs, d.rhs);
  }

  Concept run(const Concept& c) {
    if (auto it = memo_.find(c); it != memo_.end()) return it->second;
    Concept out = c;
    switch (c.kind()) {
      case ConceptKind::Atom:
        if (auto it = defs_.find(c.name()); it != defs_.end()) {
          if (!active_.insert(c.name()).second) throw TboxError("cyclic definition of '" + c.name() + "'");
          out = run(it->second);
          active_.erase(c.name());
        }
        break;
      case ConceptKind::And:
        out = Concept::conj(run(c.lhs()), run(c.rhs()));
        break;
      case ConceptKind::Or:
        out = Concept::disj(run(c.lhs()), run(c.rhs()));
        break;
      case ConceptKind::Box:
        out = Concept::box(c.role(), run(c.inner()));
        break;
      case ConceptKind::Dia:
        out = Concept::dia(c.role(), run(c.inner()));
        break;
      default:
        break;
    }
    memo_.emplace(c, out);
    return out;
  }

 private:
  std::map<std::string, Concept> defs_;
  std::unordered_map<Concept, Concept> memo_;
  std::set<std::string> active_;
};

}  // namespace

Concept unravel_concept(const Concept& c, std::span<const TboxDefinition> defs) { return Unraveller(defs).run(c); }

std::vector<AboxTerm> unravel(std::span<const AboxTerm> abox, std::span<const TboxDefinition> defs) {
  Unraveller u(defs);
  std::vector<AboxTerm> out;
  std::set<AboxTerm> seen;
  for (const AboxTerm& t : abox) {
    AboxTerm r = t;
    if (auto* m = std::get_if<MemberOf>(&r.body)) m->expr = u.run(m->expr);
    if (auto* d = std::get_if<DescribedBy>(&r.body)) d->expr = u.run(d->expr);
    if (seen.insert(r).second) out.push_back(std::move(r));
  }
  return out;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::NoTbox: return "no tbox";
    case Regime::CompletelyUnravelled: return "completely unravelled";
    case Regime::Acyclic: return "acyclic, unravelled here";
  }
  return "?";
}

PreparedKb prepare(const KnowledgeBase& kb) {
  PreparedKb out;
  out.definitions = kb.tbox;
  std::set<std::string> reserved = kb.declarations.concepts;
  for (const auto* names : {&kb.declarations.objects, &kb.declarations.features, &kb.declarations.box_roles,
                            &kb.declarations.dia_roles})
    reserved.insert(names->begin(), names->end());
  FreshNames fresh(std::move(reserved));
  for (const InclusionAxiom& g : kb.inclusions) {
    try {
      out.definitions.push_back(rewrite_gci(g.lhs, g.rhs, fresh));
    } catch (const TboxError& e) {
      throw TboxError(e.what(), g.line);
    }
    out.fresh_atoms.push_back(out.definitions.back().rhs.rhs().name());
  }
  const AcyclicityResult acyclic = check_acyclic(out.definitions);
  if (!acyclic.ok()) {
    std::string w;
    for (std::size_t i = 0; i < acyclic.witness.size(); ++i) w += (i ? " -> " : "") + acyclic.witness[i];
    throw TboxError(acyclic.kind == AcyclicityResult::Kind::Cycle ? "cyclic tbox: " + w
                                                                   : "concept defined more than once: " + w);
  }
  if (out.definitions.empty()) out.regime = Regime::NoTbox;
  else if (check_completely_unravelled(out.definitions)) out.regime = Regime::CompletelyUnravelled;
  else out.regime = Regime::Acyclic;
  out.abox = unravel(kb.abox, out.definitions);
  return out;
}

void extend_with_definitions(Interpretation& model, std::span<const TboxDefinition> defs) {
  const Polarity& p = model.context.base;
  // Atoms nobody defines and the model leaves open get the least concept.
  for (const TboxDefinition& d : defs)
    for (const std::string& a : atoms_in(unravel_concept(d.rhs, defs)))
      if (!model.atom_map.contains(a)) model.atom_map[a] = concept_from_intent(p, full_set(p.num_features()));
  Evaluator ev(model);
  std::map<std::string, StableSetPair> values;
  for (const TboxDefinition& d : defs) values[d.lhs] = ev.eval(unravel_concept(d.rhs, defs));
  for (auto& [name, value] : values) model.atom_map[name] = std::move(value);
}

}  // namespace lealc
