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

#include <algorithm>

#include "lealc/extraction.hpp"
#include "lealc/tableau.hpp"

namespace lealc {

std::size_t termination_bound(std::span<const AboxTerm> abox) {
  const AboxDepths d = abox_depths(abox);
  std::size_t roles = 0;
  for (const RoleName& r : roles_in(abox))
    if (r.kind != RoleKind::Incidence) ++roles;
  const std::size_t base = abox_size(abox) * static_cast<std::size_t>(d.box_depth + d.dia_depth + 2);
  return base * base * (roles + 1);
}

std::size_t default_step_limit(std::span<const AboxTerm> abox) {
  return std::max<std::size_t>(1000, 16 * termination_bound(abox));
}

Verdict check_consistency(std::span<const AboxTerm> abox, const Vocabulary& vocab, const TableauOptions& options) {
  auto tableau = std::make_shared<Tableau>(abox, options);
  tableau->saturate();
  Verdict v{Status::Consistent, std::nullopt, std::nullopt, tableau};
  if (const auto& clash = tableau->clash()) {
    v.status = Status::Inconsistent;
    v.clash = std::make_pair(tableau->to_abox(clash->positive), tableau->to_abox(clash->negative));
    return v;
  }
  v.model = extract_model(*tableau, vocab);
  return v;
}

}  // namespace lealc
