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

// Model extraction from a clash-free completion, and the checks run
// against completions: extraction verification, depth bounds, derived rules.

#ifndef LEALC_EXTRACTION_HPP_
#define LEALC_EXTRACTION_HPP_

#include <string>
#include <vector>

#include "lealc/fca.hpp"
#include "lealc/tableau.hpp"

namespace lealc {

// Ids of the isolated elements added at extraction time. Neither is a valid
// KB identifier, so they never collide with tableau individuals.
inline const std::string kTopObject = "#a_top";
inline const std::string kBotFeature = "#x_bot";

// Carriers are the individuals of the completion (rendered, sorted) plus
// kTopObject / kBotFeature; relations are the positive relational terms;
// D is (x_D down, a_D up), or (X down, X) when D never occurred.
Interpretation extract_model(const Tableau& t, const Vocabulary& vocab = {});

struct Report {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Input satisfaction, I-compatibility, atom stability, and for every
// occurring C: b in extent(C) iff b I x_C, y in intent(C) iff a_C I y.
Report verify_extraction(const Tableau& t, const Interpretation& model);

// The five inequality families over positive terms, plus the bounds on
// generated concepts and individuals, against the depths of the input.
Report check_depth_bounds(const Tableau& t, const AboxDepths& base);
Report check_depth_bounds(const Tableau& t);

// or_A, and_X, adj_box and adj_dia hold on the term set.
Report check_derived_rules(const Tableau& t);

}  // namespace lealc

#endif  // LEALC_EXTRACTION_HPP_
