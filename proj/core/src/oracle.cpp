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


#include "lealc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace lealc {

namespace {

using Mask = ModelCatalog::Mask;
using Entry = ModelCatalog::Entry;

std::vector<std::string> element_names(char prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, prefix) + std::to_string(i));
  return out;
}

Mask full_mask(std::size_t n) { return static_cast<Mask>((1u << n) - 1u); }

bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }

// Galois maps on a mask-encoded incidence (row per object).
struct MaskPolarity {
  std::size_t n_a, n_x;
  const std::array<Mask, ModelCatalog::kMaxCarrier>& rows;

  Mask up(Mask objs) const {
    Mask out = full_mask(n_x);
    for (std::size_t a = 0; a < n_a; ++a)
      if (has(objs, a)) out &= rows[a];
    return out;
  }
  Mask down(Mask feats) const {
    Mask out = 0;
    for (std::size_t a = 0; a < n_a; ++a)
      if ((rows[a] & feats) == feats) out |= static_cast<Mask>(1u << a);
    return out;
  }
};

// Code of the matrix with the given rows; the orbit minimum under row and
// column permutations is taken as the canonical representative.
std::uint64_t code(const std::vector<Mask>& rows, std::size_t width) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) c |= static_cast<std::uint64_t>(rows[i]) << (i * width);
  return c;
}

Mask permute_bits(Mask m, const std::vector<std::size_t>& perm) {
  Mask out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (has(m, i)) out |= static_cast<Mask>(1u << perm[i]);
  return out;
}

// Permutes the shorter side exhaustively and sorts the other.
bool is_canonical(const std::array<Mask, ModelCatalog::kMaxCarrier>& inc, std::size_t n_a, std::size_t n_x) {
  std::vector<Mask> rows(inc.begin(), inc.begin() + static_cast<std::ptrdiff_t>(n_a));
  std::size_t width = n_x;
  if (n_x > n_a) {
    std::vector<Mask> cols(n_x, 0);
    for (std::size_t a = 0; a < n_a; ++a)
      for (std::size_t x = 0; x < n_x; ++x)
        if (has(inc[a], x)) cols[x] |= static_cast<Mask>(1u << a);
    rows = std::move(cols);
    width = n_a;
  }
  const std::uint64_t own = code(rows, width);
  std::vector<std::size_t> perm(width);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> moved(rows.size());
  do {
    for (std::size_t i = 0; i < rows.size(); ++i) moved[i] = permute_bits(rows[i], perm);
    std::sort(moved.begin(), moved.end(), std::greater<>());
    if (code(moved, width) < own) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

// Compatible relations for one incidence. A box relation picks a stable
// extent as the column of each feature and keeps the result when every row
// is a stable intent; diamond relations are the dual.
std::vector<std::array<Mask, ModelCatalog::kMaxCarrier>> compatible_relations(const std::vector<Mask>& col_choices,
                                                                             const std::vector<Mask>& row_stable,
                                                                             std::size_t n_rows, std::size_t n_cols) {
  std::vector<std::array<Mask, ModelCatalog::kMaxCarrier>> out;
  std::vector<std::size_t> pick(n_cols, 0);
  const auto stable = [&](Mask m) { return std::binary_search(row_stable.begin(), row_stable.end(), m); };
  for (;;) {
    std::array<Mask, ModelCatalog::kMaxCarrier> rows{};
    for (std::size_t c = 0; c < n_cols; ++c)
      for (std::size_t r = 0; r < n_rows; ++r)
        if (has(col_choices[pick[c]], r)) rows[r] |= static_cast<Mask>(1u << c);
    bool ok = true;
    for (std::size_t r = 0; r < n_rows && ok; ++r) ok = stable(rows[r]);
    if (ok) out.push_back(rows);
    std::size_t k = 0;
    while (k < n_cols && ++pick[k] == col_choices.size()) pick[k++] = 0;
    if (k == n_cols) break;
  }
  return out;
}

// Calls fn on every valid mask-encoded context of the given carrier sizes.
void for_each_context(std::size_t n_a, std::size_t n_x, std::span<const RoleName> roles, std::size_t n_atoms,
                      bool canonical_only, const std::function<void(const Entry&)>& fn) {
  if (roles.size() > ModelCatalog::kMaxRoles || n_atoms > ModelCatalog::kMaxAtoms)
    throw BoundsError("too many roles or atoms for the oracle");
  const std::size_t cells = n_a * n_x;
  for (std::uint64_t ibits = 0; ibits < (std::uint64_t{1} << cells); ++ibits) {
    Entry e;
    e.n_objects = static_cast<std::uint8_t>(n_a);
    e.n_features = static_cast<std::uint8_t>(n_x);
    for (std::size_t a = 0; a < n_a; ++a) e.incidence[a] = static_cast<Mask>((ibits >> (a * n_x)) & full_mask(n_x));
    if (canonical_only && !is_canonical(e.incidence, n_a, n_x)) continue;
    const MaskPolarity p{n_a, n_x, e.incidence};

    std::vector<std::pair<Mask, Mask>> lattice;
    for (std::size_t s = 0; s < (std::size_t{1} << n_a); ++s) {
      const Mask in = p.up(static_cast<Mask>(s));
      lattice.emplace_back(p.down(in), in);
    }
    std::sort(lattice.begin(), lattice.end());
    lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());
    std::vector<Mask> extents, intents;
    for (const auto& [ext, in] : lattice) {
      extents.push_back(ext);
      intents.push_back(in);
    }
    std::sort(extents.begin(), extents.end());
    std::sort(intents.begin(), intents.end());

    std::vector<std::vector<std::array<Mask, ModelCatalog::kMaxCarrier>>> rels;
    for (const RoleName& r : roles) {
      if (r.kind == RoleKind::Box) rels.push_back(compatible_relations(extents, intents, n_a, n_x));
      else rels.push_back(compatible_relations(intents, extents, n_x, n_a));
      if (rels.back().empty()) break;
    }
    if (rels.size() < roles.size() || (!rels.empty() && rels.back().empty())) continue;

    std::vector<std::size_t> radix;
    for (const auto& r : rels) radix.push_back(r.size());
    for (std::size_t i = 0; i < n_atoms; ++i) radix.push_back(lattice.size());
    std::vector<std::size_t> digit(radix.size(), 0);
    for (;;) {
      for (std::size_t k = 0; k < rels.size(); ++k) e.rels[k] = rels[k][digit[k]];
      for (std::size_t k = 0; k < n_atoms; ++k) e.atoms[k] = lattice[digit[rels.size() + k]];
      fn(e);
      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == radix[k]) digit[k++] = 0;
      if (k == digit.size()) break;
    }
  }
}

std::size_t cardinality(const Entry& e, std::size_t n_roles) {
  std::size_t n = 0;
  for (Mask m : e.incidence) n += static_cast<std::size_t>(__builtin_popcount(m));
  for (std::size_t k = 0; k < n_roles; ++k)
    for (Mask m : e.rels[k]) n += static_cast<std::size_t>(__builtin_popcount(m));
  return n;
}

ElementSet from_mask(std::size_t n, Mask m) { return ElementSet(n, m); }

Interpretation to_interpretation(const Entry& e, std::span<const RoleName> roles, std::span<const std::string> atoms) {
  Interpretation m;
  m.context.base = Polarity(element_names('o', e.n_objects), element_names('f', e.n_features));
  Polarity& p = m.context.base;
  for (std::size_t a = 0; a < e.n_objects; ++a)
    for (std::size_t x = 0; x < e.n_features; ++x)
      if (has(e.incidence[a], x)) p.incidence.set(a, x);
  for (std::size_t k = 0; k < roles.size(); ++k) {
    const bool box = roles[k].kind == RoleKind::Box;
    const std::size_t rows = box ? e.n_objects : e.n_features;
    const std::size_t cols = box ? e.n_features : e.n_objects;
    BinaryRelation r(rows, cols);
    for (std::size_t u = 0; u < rows; ++u)
      for (std::size_t v = 0; v < cols; ++v)
        if (has(e.rels[k][u], v)) r.set(u, v);
    (box ? m.context.box_rels : m.context.dia_rels)[roles[k].name] = std::move(r);
  }
  for (std::size_t k = 0; k < atoms.size(); ++k)
    m.atom_map[atoms[k]] = {from_mask(e.n_objects, e.atoms[k].first), from_mask(e.n_features, e.atoms[k].second)};
  return m;
}

void check_bounds(std::size_t n_objects, std::size_t n_features) {
  if (n_objects > ModelCatalog::kMaxCarrier || n_features > ModelCatalog::kMaxCarrier ||
      n_objects * n_features > ModelCatalog::kMaxProduct)
    throw BoundsError("oracle bounds too large (carrier product above " + std::to_string(ModelCatalog::kMaxProduct) +
                      ")");
}

}  // namespace

std::vector<Interpretation> enumerate_enriched_contexts(std::size_t n_objects, std::size_t n_features,
                                                        std::span<const RoleName> roles,
                                                        const std::set<std::string>& atoms) {
  check_bounds(n_objects, n_features);
  const std::vector<std::string> atom_list(atoms.begin(), atoms.end());
  std::vector<std::pair<std::size_t, Entry>> found;
  for_each_context(n_objects, n_features, roles, atom_list.size(), false,
                   [&](const Entry& e) { found.emplace_back(cardinality(e, roles.size()), e); });
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Interpretation> out;
  out.reserve(found.size());
  for (const auto& [_, e] : found) out.push_back(to_interpretation(e, roles, atom_list));
  return out;
}

ModelCatalog::ModelCatalog(const OracleBounds& bounds, std::vector<RoleName> roles, std::set<std::string> atoms,
                           bool reduce_symmetry)
    : roles_(std::move(roles)), atoms_(atoms.begin(), atoms.end()) {
  check_bounds(bounds.max_objects, bounds.max_features);
  std::vector<std::tuple<std::size_t, std::size_t, Entry>> all;
  for (std::size_t n_a = 0; n_a <= bounds.max_objects; ++n_a)
    for (std::size_t n_x = 0; n_x <= bounds.max_features; ++n_x)
      for_each_context(n_a, n_x, roles_, atoms_.size(), reduce_symmetry,
                       [&](const Entry& e) { all.emplace_back(n_a + n_x, cardinality(e, roles_.size()), e); });
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  entries_.reserve(all.size());
  for (auto& k : all) entries_.push_back(std::get<2>(k));
}

Interpretation ModelCatalog::materialize(std::size_t entry) const {
  return to_interpretation(entries_.at(entry), roles_, atoms_);
}

const std::vector<ModelCatalog::Value>& ModelCatalog::values(const Concept& c) {
  if (auto it = memo_.find(c); it != memo_.end()) return it->second;
  std::vector<Value> out(entries_.size());
  const auto role_index = [this](const RoleName& r) {
    const auto it = std::find(roles_.begin(), roles_.end(), r);
    if (it == roles_.end()) throw BoundsError("role " + to_string(r) + " not in catalog");
    return static_cast<std::size_t>(it - roles_.begin());
  };
  const std::vector<Value>* lhs = nullptr;
  const std::vector<Value>* rhs = nullptr;
  std::size_t index = 0;
  switch (c.kind()) {
    case ConceptKind::Atom: {
      const auto it = std::find(atoms_.begin(), atoms_.end(), c.name());
      if (it == atoms_.end()) throw BoundsError("atom " + c.name() + " not in catalog");
      index = static_cast<std::size_t>(it - atoms_.begin());
      break;
    }
    case ConceptKind::And:
    case ConceptKind::Or:
      lhs = &values(c.lhs());
      rhs = &values(c.rhs());
      break;
    case ConceptKind::Box:
    case ConceptKind::Dia:
      lhs = &values(c.inner());
      index = role_index(c.role());
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    const MaskPolarity p{e.n_objects, e.n_features, e.incidence};
    Value& v = out[i];
    switch (c.kind()) {
      case ConceptKind::Atom:
        v = {e.atoms[index].first, e.atoms[index].second};
        break;
      case ConceptKind::Top:
        v.extent = full_mask(e.n_objects);
        v.intent = p.up(v.extent);
        break;
      case ConceptKind::Bot:
        v.intent = full_mask(e.n_features);
        v.extent = p.down(v.intent);
        break;
      case ConceptKind::And:
        v.extent = (*lhs)[i].extent & (*rhs)[i].extent;
        v.intent = p.up(v.extent);
        break;
      case ConceptKind::Or:
        v.intent = (*lhs)[i].intent & (*rhs)[i].intent;
        v.extent = p.down(v.intent);
        break;
      case ConceptKind::Box: {
        const Mask need = (*lhs)[i].intent;
        v.extent = 0;
        for (std::size_t a = 0; a < e.n_objects; ++a)
          if ((e.rels[index][a] & need) == need) v.extent |= static_cast<Mask>(1u << a);
        v.intent = p.up(v.extent);
        break;
      }
      case ConceptKind::Dia: {
        const Mask need = (*lhs)[i].extent;
        v.intent = 0;
        for (std::size_t x = 0; x < e.n_features; ++x)
          if ((e.rels[index][x] & need) == need) v.intent |= static_cast<Mask>(1u << x);
        v.extent = p.down(v.intent);
        break;
      }
    }
  }
  return memo_.emplace(c, std::move(out)).first->second;
}

std::optional<Interpretation> ModelCatalog::find_model(std::span<const AboxTerm> abox) {
  std::vector<Individual> objs, feats;
  auto slot = [](std::vector<Individual>& v, const Individual& i) -> std::size_t {
    if (i.form() != IndividualForm::Base) throw BoundsError("oracle handles base individuals only");
    auto it = std::find(v.begin(), v.end(), i);
    if (it != v.end()) return static_cast<std::size_t>(it - v.begin());
    v.push_back(i);
    return v.size() - 1;
  };
  auto role_slot = [this](const RoleName& r) -> std::size_t {
    auto it = std::find(roles_.begin(), roles_.end(), r);
    if (it == roles_.end()) throw BoundsError("role " + to_string(r) + " not in catalog");
    return static_cast<std::size_t>(it - roles_.begin());
  };

  struct Compiled {
    int kind;
    bool negated;
    std::size_t i, j, role;
    const std::vector<Value>* vals;
  };
  std::vector<Compiled> terms;
  for (const AboxTerm& t : abox) {
    Compiled c{static_cast<int>(t.body.index()), t.negated, 0, 0, 0, nullptr};
    std::visit(
        [&](const auto& body) {
          using T = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<T, MemberOf>) {
            c.i = slot(objs, body.object);
            c.vals = &values(body.expr);
          } else if constexpr (std::is_same_v<T, DescribedBy>) {
            c.i = slot(feats, body.feature);
            c.vals = &values(body.expr);
          } else if constexpr (std::is_same_v<T, Incidence>) {
            c.i = slot(objs, body.object);
            c.j = slot(feats, body.feature);
          } else if constexpr (std::is_same_v<T, BoxRel>) {
            c.i = slot(objs, body.object);
            c.j = slot(feats, body.feature);
            c.role = role_slot(body.role);
          } else {
            c.i = slot(feats, body.feature);
            c.j = slot(objs, body.object);
            c.role = role_slot(body.role);
          }
        },
        t.body);
    terms.push_back(c);
  }

  std::vector<std::size_t> oa(objs.size()), fa(feats.size());
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    const Entry& en = entries_[e];
    if ((!objs.empty() && en.n_objects == 0) || (!feats.empty() && en.n_features == 0)) continue;
    std::fill(oa.begin(), oa.end(), 0);
    std::fill(fa.begin(), fa.end(), 0);
    for (;;) {
      bool ok = true;
      for (const Compiled& c : terms) {
        bool holds = false;
        switch (c.kind) {
          case 0: holds = has((*c.vals)[e].extent, oa[c.i]); break;
          case 1: holds = has((*c.vals)[e].intent, fa[c.i]); break;
          case 2: holds = has(en.incidence[oa[c.i]], fa[c.j]); break;
          case 3: holds = has(en.rels[c.role][oa[c.i]], fa[c.j]); break;
          default: holds = has(en.rels[c.role][fa[c.i]], oa[c.j]); break;
        }
        if (holds == c.negated) {
          ok = false;
          break;
        }
      }
      if (ok) {
        Interpretation m = materialize(e);
        for (std::size_t k = 0; k < objs.size(); ++k) m.object_map[objs[k]] = oa[k];
        for (std::size_t k = 0; k < feats.size(); ++k) m.feature_map[feats[k]] = fa[k];
        return m;
      }
      // Odometer over object slots, then feature slots.
      std::size_t k = 0;
      for (; k < oa.size(); ++k) {
        if (++oa[k] < en.n_objects) break;
        oa[k] = 0;
      }
      if (k < oa.size()) continue;
      std::size_t l = 0;
      for (; l < fa.size(); ++l) {
        if (++fa[l] < en.n_features) break;
        fa[l] = 0;
      }
      if (l == fa.size()) break;
    }
  }
  return std::nullopt;
}

std::optional<Interpretation> brute_force_consistent(std::span<const AboxTerm> abox, const OracleBounds& bounds) {
  std::vector<RoleName> roles;
  for (const RoleName& r : roles_in(abox))
    if (r.kind != RoleKind::Incidence) roles.push_back(r);
  std::set<std::string> atoms;
  for (const AboxTerm& t : abox) {
    if (const auto* m = std::get_if<MemberOf>(&t.body)) atoms.merge(atoms_in(m->expr));
    if (const auto* d = std::get_if<DescribedBy>(&t.body)) atoms.merge(atoms_in(d->expr));
  }
  ModelCatalog catalog(bounds, std::move(roles), std::move(atoms));
  return catalog.find_model(abox);
}

CrossCheck cross_check(std::span<const AboxTerm> abox, const OracleBounds& bounds) {
  const Status engine = check_consistency(abox).status;
  return {engine, brute_force_consistent(abox, bounds).has_value()};
}

CrossCheck cross_check(std::span<const AboxTerm> abox, ModelCatalog& catalog) {
  const Status engine = check_consistency(abox).status;
  return {engine, catalog.find_model(abox).has_value()};
}

}  // namespace lealc
