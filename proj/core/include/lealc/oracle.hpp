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

// Exhaustive model search over small enriched contexts, independent of the
// tableau.

#ifndef LEALC_ORACLE_HPP_
#define LEALC_ORACLE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lealc/fca.hpp"
#include "lealc/syntax.hpp"
#include "lealc/tableau.hpp"

namespace lealc {

struct OracleBounds {
  std::size_t max_objects = 3;
  std::size_t max_features = 3;
};

class BoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every interpretation over exactly n_objects x n_features elements whose
// relations are I-compatible and whose atoms are formal concepts, without
// individual maps, ordered by total relation cardinality. Elements are
// named o0.. and f0..
std::vector<Interpretation> enumerate_enriched_contexts(std::size_t n_objects, std::size_t n_features,
                                                        std::span<const RoleName> roles,
                                                        const std::set<std::string>& atoms);

// All contexts up to the bounds, smallest carriers first, with concept
// values memoized per entry so that many ABoxes can share one search space.
// With reduce_symmetry only one incidence per isomorphism class is kept;
// individuals map to elements freely, so no model is lost.
class ModelCatalog {
 public:
  static constexpr std::size_t kMaxCarrier = 8;
  static constexpr std::size_t kMaxProduct = 16;
  static constexpr std::size_t kMaxRoles = 3;
  static constexpr std::size_t kMaxAtoms = 4;
  using Mask = std::uint8_t;

  ModelCatalog(const OracleBounds& bounds, std::vector<RoleName> roles, std::set<std::string> atoms,
               bool reduce_symmetry = true);

  std::size_t size() const { return entries_.size(); }
  Interpretation materialize(std::size_t entry) const;

  // First model of the ABox, individual maps included. The ABox may only
  // use base individuals and the catalog's roles and atoms.
  std::optional<Interpretation> find_model(std::span<const AboxTerm> abox);

  struct Entry {
    std::uint8_t n_objects = 0;
    std::uint8_t n_features = 0;
    std::array<Mask, kMaxCarrier> incidence{};                          // row per object
    std::array<std::array<Mask, kMaxCarrier>, kMaxRoles> rels{};        // box: row per object; dia: per feature
    std::array<std::pair<Mask, Mask>, kMaxAtoms> atoms{};               // extent, intent
  };

 private:
  struct Value {
    Mask extent;
    Mask intent;
  };
  const std::vector<Value>& values(const Concept& c);

  std::vector<RoleName> roles_;
  std::vector<std::string> atoms_;
  std::vector<Entry> entries_;
  std::unordered_map<Concept, std::vector<Value>> memo_;
};

std::optional<Interpretation> brute_force_consistent(std::span<const AboxTerm> abox, const OracleBounds& bounds = {});

struct CrossCheck {
  Status engine;
  bool oracle_found;
  bool agree() const { return (engine == Status::Consistent) == oracle_found; }
};

CrossCheck cross_check(std::span<const AboxTerm> abox, const OracleBounds& bounds = {});
CrossCheck cross_check(std::span<const AboxTerm> abox, ModelCatalog& catalog);

}  // namespace lealc

#endif  // LEALC_ORACLE_HPP_
