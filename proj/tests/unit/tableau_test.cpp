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


#include <doctest.h>

#include <algorithm>

#include "lealc/tableau.hpp"
#include "lealc_test_support.hpp"

using namespace lealc;

namespace {

const Concept A = Concept::atom("A"), B = Concept::atom("B");
const RoleName R = RoleName::box("R");
const RoleName S = RoleName::diamond("S");
const Individual b = Individual::object("b");
const Individual y = Individual::feature("y");

// Saturation by repeated full scans, one application at a time.
std::set<AboxTerm> naive_completion(std::span<const AboxTerm> abox) {
  TableauOptions opt;
  opt.stop_on_clash = false;
  Tableau t(abox, opt);
  for (;;) {
    const auto apps = t.applicable_rules();
    if (apps.empty()) break;
    for (const auto& a : apps) t.apply_rule(a);
  }
  return t.term_set();
}

std::set<AboxTerm> completion(std::span<const AboxTerm> abox, std::optional<std::uint64_t> seed = {}) {
  TableauOptions opt;
  opt.stop_on_clash = false;
  opt.seed = seed;
  Tableau t(abox, opt);
  t.saturate();
  return t.term_set();
}

}  // namespace

TEST_SUITE("tableau") {
  TEST_CASE("basic rule and creation") {
    const std::vector<AboxTerm> abox{member(b, A), described(y, A)};
    Tableau t(abox);
    const auto apps = t.applicable_rules();
    CHECK(std::any_of(apps.begin(), apps.end(), [](const RuleApplication& a) { return a.rule == RuleKind::Basic; }));
    CHECK(std::any_of(apps.begin(), apps.end(), [](const RuleApplication& a) { return a.rule == RuleKind::Create; }));
    t.saturate();
    const Individual aa = Individual::classifier(Sort::Object, A);
    const Individual xa = Individual::classifier(Sort::Feature, A);
    // Objects {b, a_A} and features {y, x_A} all carry A, so Basic links all four pairs.
    for (const auto& o : {b, aa})
      for (const auto& f : {y, xa}) CHECK(t.contains(incidence(o, f)));
    CHECK(t.size() == 8);
    CHECK_FALSE(t.clash());
    CHECK(t.applicable_rules().empty());
  }

  TEST_CASE("a term and its negation clash at once") {
    const std::vector<AboxTerm> abox{incidence(b, y), incidence(b, y, true)};
    const Verdict v = check_consistency(abox);
    CHECK(v.status == Status::Inconsistent);
    CHECK(v.tableau->steps() == 0);
    REQUIRE(v.clash);
    CHECK(v.clash->first == incidence(b, y));
  }

  TEST_CASE("negated membership reaches a clash") {
    const std::vector<AboxTerm> abox{member(b, A), member(b, A, true)};
    const Verdict v = check_consistency(abox);
    CHECK(v.status == Status::Inconsistent);
    CHECK(v.clash->first == incidence(b, Individual::classifier(Sort::Feature, A)));
    CHECK_FALSE(v.model);
  }

  TEST_CASE("conjunction splits") {
    Tableau t(std::vector<AboxTerm>{member(b, Concept::conj(A, B))});
    const auto conc = t.conclusions(RuleApplication{RuleKind::AndA, {0}, kNone});
    REQUIRE(conc.size() == 2);
    CHECK(t.to_abox(conc[0]) == member(b, A));
    CHECK(t.to_abox(conc[1]) == member(b, B));
  }

  TEST_CASE("adjunction rules") {
    Tableau t(std::vector<AboxTerm>{box_rel(R, b, y)});
    t.saturate();
    CHECK(t.contains(incidence(Individual::prefixed(ModalOp::BlackDiamond, R, b), y)));
    CHECK(t.contains(incidence(b, Individual::prefixed(ModalOp::Box, R, y))));
    Tableau u(std::vector<AboxTerm>{dia_rel(S, y, b)});
    u.saturate();
    CHECK(u.contains(incidence(Individual::prefixed(ModalOp::Diamond, S, b), y)));
    CHECK(u.contains(incidence(b, Individual::prefixed(ModalOp::BlackBox, S, y))));
  }

  TEST_CASE("inverse rules respect the side condition") {
    const Concept ab = Concept::conj(A, B);
    Tableau without(std::vector<AboxTerm>{member(b, A), member(b, B)});
    without.saturate();
    CHECK_FALSE(without.contains(member(b, ab)));
    Tableau with(std::vector<AboxTerm>{member(b, A), member(b, B), described(y, ab)});
    with.saturate();
    CHECK(with.contains(member(b, ab)));
    CHECK(with.contains(incidence(b, y)));
  }

  TEST_CASE("worklist saturation equals naive saturation") {
    testing::Rng rng(21);
    for (int i = 0; i < 150; ++i) {
      const testing::Signature sig = testing::random_signature(rng, 2, 3);
      testing::AboxParams p;
      p.max_terms = 6;
      const auto abox = testing::random_abox(rng, sig, p);
      CHECK(completion(abox) == naive_completion(abox));
    }
  }

  TEST_CASE("completions are monotone in the input") {
    testing::Rng rng(22);
    for (int i = 0; i < 150; ++i) {
      const testing::Signature sig = testing::random_signature(rng, 2, 3);
      testing::AboxParams p;
      p.max_terms = 6;
      auto abox = testing::random_abox(rng, sig, p);
      const auto small = completion(abox);
      abox.push_back(testing::random_term(rng, sig, p));
      const auto big = completion(abox);
      CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
  }

  TEST_CASE("seeded orders are reproducible") {
    testing::Rng rng(23);
    const testing::Signature sig{{R, S}, {"A0", "A1"}};
    const auto abox = testing::random_abox(rng, sig, testing::AboxParams{});
    TableauOptions opt;
    opt.seed = 99;
    opt.stop_on_clash = false;
    Tableau t1(abox, opt), t2(abox, opt);
    t1.saturate();
    t2.saturate();
    CHECK(t1.trace_lines() == t2.trace_lines());
    CHECK(t1.term_set() == completion(abox));
  }

  TEST_CASE("trace records every step") {
    const Concept c1 = Concept::atom("C1"), c2 = Concept::atom("C2");
    const std::vector<AboxTerm> abox{member(b, Concept::box(R, Concept::box(R, c1))),
                                     member(b, Concept::box(R, Concept::box(R, c2))),
                                     described(y, Concept::box(R, Concept::conj(c1, c2))), box_rel(R, b, y, true)};
    Tableau t(abox);
    t.saturate();
    CHECK(t.trace().size() == t.steps());
    CHECK(t.trace_lines().size() == t.steps());
    std::set<TermId> seen;
    for (TermId i = 0; i < t.input_size(); ++i) seen.insert(i);
    for (const TraceRecord& r : t.trace()) {
      CHECK(r.step >= 1);
      for (TermId p : r.premises) CHECK(seen.count(p));
      CHECK_FALSE(r.added.empty());
      seen.insert(r.added.begin(), r.added.end());
    }
  }

  TEST_CASE("termination bound and step limit") {
    const Concept c1 = Concept::atom("C1"), c2 = Concept::atom("C2");
    const std::vector<AboxTerm> abox{member(b, Concept::box(R, Concept::box(R, c1))),
                                     member(b, Concept::box(R, Concept::box(R, c2))),
                                     described(y, Concept::box(R, Concept::conj(c1, c2))), box_rel(R, b, y, true)};
    const AboxDepths d = abox_depths(abox);
    const std::size_t f = abox_size(abox) * static_cast<std::size_t>(d.box_depth + d.dia_depth + 2);
    const std::size_t bound = f * f * (roles_in(abox).size() + 1);
    CHECK(termination_bound(abox) == bound);
    CHECK(default_step_limit(abox) == std::max<std::size_t>(1000, 16 * bound));
    TableauOptions opt;
    opt.max_steps = 3;
    Tableau t(abox, opt);
    CHECK_THROWS_AS(t.saturate(), SafetyLimitError);
  }

  TEST_CASE("rule names") {
    CHECK(std::string(rule_name(RuleKind::Create)) == "create");
    CHECK(std::string(rule_name(RuleKind::AdjBox)) == "adj_R_box");
    CHECK(rule_category(RuleKind::NegB) == RuleCategory::Negative);
    CHECK(rule_category(RuleKind::AndAInverse) == RuleCategory::Inverse);
  }
}
