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

// JSON documents for models and traces. Every list is sorted by element id.
//
//   {"objects": [...], "features": [...], "incidence": [[o, f], ...],
//    "box": {"r": [[o, f], ...]}, "dia": {"s": [[f, o], ...]},
//    "atoms": {"D": {"extent": [...], "intent": [...]}}}

#ifndef LEALC_MODEL_IO_HPP_
#define LEALC_MODEL_IO_HPP_

#include <nlohmann/json.hpp>

#include "lealc/fca.hpp"
#include "lealc/parser.hpp"
#include "lealc/tableau.hpp"

namespace lealc {

nlohmann::json model_to_json(const Interpretation& model);

// Rebuilds context and atoms. Element ids that parse as individuals under
// decls (when given) are entered into the individual maps.
Interpretation model_from_json(const nlohmann::json& doc, const Declarations* decls = nullptr);

// [{"step", "rule", "premises": [...], "added": [...]}], terms in KB syntax.
nlohmann::json trace_to_json(const Tableau& t);

}  // namespace lealc

#endif  // LEALC_MODEL_IO_HPP_
