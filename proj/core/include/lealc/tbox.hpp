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

// Acyclic TBoxes: the uses graph, acyclicity, inclusion rewriting and
// unravelling into the ABox.

#ifndef LEALC_TBOX_HPP_
#define LEALC_TBOX_HPP_

#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lealc/fca.hpp"
#include "lealc/parser.hpp"
#include "lealc/syntax.hpp"

namespace lealc {

class TboxError : public std::runtime_error {
 public:
  TboxError(const std::string& message, int line = 0) : std::runtime_error(message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A directly uses B when B is an atom of the definition of A.
std::map<std::string, std::set<std::string>> uses_graph(std::span<const TboxDefinition> defs);

struct AcyclicityResult {
  enum class Kind { Ok, Cycle, DuplicateLhs };
  Kind kind = Kind::Ok;
  // Cycle: A, B, ..., A. Duplicate: the repeated name.
  std::vector<std::string> witness;
  bool ok() const { return kind == Kind::Ok; }
};

AcyclicityResult check_acyclic(std::span<const TboxDefinition> defs);
bool check_completely_unravelled(std::span<const TboxDefinition> defs);

// Supplies names avoiding a reserved set: prefix_1, prefix_2, ...
class FreshNames {
 public:
  explicit FreshNames(std::set<std::string> reserved, std::string prefix = "gci")
      : reserved_(std::move(reserved)), prefix_(std::move(prefix)) {}
  std::string next();
  void reserve(const std::string& name) { reserved_.insert(name); }

 private:
  std::set<std::string> reserved_;
  std::string prefix_;
  int counter_ = 0;
};

// A <= C becomes A == C & N with N fresh. Non-atomic left-hand sides throw.
TboxDefinition rewrite_gci(const Concept& lhs, const Concept& rhs, FreshNames& fresh);

// Replaces defined atoms by their definitions until none is left.
Concept unravel_concept(const Concept& c, std::span<const TboxDefinition> defs);
std::vector<AboxTerm> unravel(std::span<const AboxTerm> abox, std::span<const TboxDefinition> defs);

enum class Regime { NoTbox, CompletelyUnravelled, Acyclic };
const char* regime_name(Regime r);

struct PreparedKb {
  std::vector<AboxTerm> abox;               // unravelled
  std::vector<TboxDefinition> definitions;  // including rewritten inclusions
  std::vector<std::string> fresh_atoms;
  Regime regime = Regime::NoTbox;
};

// Rewrites inclusions, checks acyclicity and unravels. Throws TboxError.
PreparedKb prepare(const KnowledgeBase& kb);

// Adds a value for every defined atom by evaluating its unravelled definition.
void extend_with_definitions(Interpretation& model, std::span<const TboxDefinition> defs);

}  // namespace lealc

#endif  // LEALC_TBOX_HPP_
