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

// Formal contexts, their Galois connection, enriched contexts with
// I-compatible relations, and the LE-ALC model checker.

#ifndef LEALC_FCA_HPP_
#define LEALC_FCA_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "lealc/syntax.hpp"

namespace lealc {

using ElementSet = boost::dynamic_bitset<>;

ElementSet full_set(std::size_t n);

// Relation T between a row carrier U and a column carrier V, stored both ways.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  BinaryRelation(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_.size(); }

  void set(std::size_t u, std::size_t v, bool value = true);
  bool test(std::size_t u, std::size_t v) const { return rows_[u][v]; }
  std::size_t count() const;

  const ElementSet& row(std::size_t u) const { return rows_[u]; }     // {v | uTv}
  const ElementSet& column(std::size_t v) const { return cols_[v]; }  // {u | uTv}

  // T^(1)[U'] = {v | for all u in U', uTv}
  ElementSet forall_image(const ElementSet& us) const;
  // T^(0)[V'] = {u | for all v in V', uTv}
  ElementSet forall_preimage(const ElementSet& vs) const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  std::vector<ElementSet> rows_;
  std::vector<ElementSet> cols_;
};

// (A, X, I). Element ids are strings; indices follow the id vectors.
struct Polarity {
  std::vector<std::string> objects;
  std::vector<std::string> features;
  BinaryRelation incidence;

  Polarity() = default;
  Polarity(std::vector<std::string> objs, std::vector<std::string> feats);

  std::size_t num_objects() const { return objects.size(); }
  std::size_t num_features() const { return features.size(); }
};

ElementSet poly_up(const Polarity& p, const ElementSet& objects);
ElementSet poly_down(const Polarity& p, const ElementSet& features);
bool is_stable_extent(const Polarity& p, const ElementSet& objects);
bool is_stable_intent(const Polarity& p, const ElementSet& features);

enum class SliceSide { Zero, One };

// R^(0)[{e}] is the column of e, R^(1)[{e}] the row.
ElementSet rel_slice(const BinaryRelation& r, SliceSide side, std::size_t e);

struct StableSetPair {
  ElementSet extent;
  ElementSet intent;
  friend bool operator==(const StableSetPair&, const StableSetPair&) = default;
};

bool is_stable_pair(const Polarity& p, const StableSetPair& c);
StableSetPair concept_from_extent(const Polarity& p, const ElementSet& objects);
StableSetPair concept_from_intent(const Polarity& p, const ElementSet& features);

struct EnrichedContext {
  Polarity base;
  std::map<std::string, BinaryRelation> box_rels;  // rows objects, columns features
  std::map<std::string, BinaryRelation> dia_rels;  // rows features, columns objects

  void add_box_role(const std::string& name);
  void add_dia_role(const std::string& name);
};

struct SliceFailure {
  RoleName role;
  std::string slice;    // "R(0)[x]", "R(1)[a]" and so on
  std::string element;  // id of the point the slice was taken at
  friend bool operator==(const SliceFailure&, const SliceFailure&) = default;
};

struct CompatibilityReport {
  std::vector<SliceFailure> failures;
  bool ok() const { return failures.empty(); }
};

CompatibilityReport check_i_compatibility(const EnrichedContext& e);
bool relation_is_compatible_box(const Polarity& p, const BinaryRelation& r);
bool relation_is_compatible_dia(const Polarity& p, const BinaryRelation& r);

class UnknownRoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

StableSetPair box_op(const EnrichedContext& e, const std::string& role, const StableSetPair& c);
StableSetPair dia_op(const EnrichedContext& e, const std::string& role, const StableSetPair& c);

struct Interpretation {
  EnrichedContext context;
  std::unordered_map<Individual, std::size_t> object_map;
  std::unordered_map<Individual, std::size_t> feature_map;
  std::map<std::string, StableSetPair> atom_map;
};

class UnmappedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Memoizing evaluator bound to one interpretation (which must outlive it).
class Evaluator {
 public:
  explicit Evaluator(const Interpretation& interp) : interp_(interp) {}

  const StableSetPair& eval(const Concept& c);
  bool satisfies(const AboxTerm& term);

 private:
  std::size_t object_index(const Individual& b) const;
  std::size_t feature_index(const Individual& y) const;

  const Interpretation& interp_;
  std::unordered_map<Concept, StableSetPair> memo_;
};

StableSetPair eval_concept(const Interpretation& interp, const Concept& c);
bool satisfies(const Interpretation& interp, const AboxTerm& term);
bool satisfies_all(const Interpretation& interp, std::span<const AboxTerm> terms);
bool satisfies_tbox(const Interpretation& interp, std::span<const TboxDefinition> defs);

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All formal concepts, in a linear extension of extent inclusion.
std::vector<StableSetPair> concept_lattice(const Polarity& p, std::size_t guard = 12);

}  // namespace lealc

#endif  // LEALC_FCA_HPP_
