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

#include <fstream>
#include <sstream>

#include "lealc/parser.hpp"
#include "lealc/tableau.hpp"
#include "lealc/tbox.hpp"
#include "reference.hpp"

using namespace lealc;

namespace {

const Concept A = Concept::atom("A"), B = Concept::atom("B"), C = Concept::atom("C"), D = Concept::atom("D");
const RoleName R = RoleName::box("R");

KnowledgeBase load(const std::string& name) {
  std::ifstream in(std::string(LEALC_TEST_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_kb(ss.str());
}

}  // namespace

TEST_SUITE("tbox") {
  TEST_CASE("uses graph") {
    const std::vector<TboxDefinition> defs{{"A", Concept::box(R, B)}, {"B", Concept::conj(C, D)}};
    const auto g = uses_graph(defs);
    CHECK(g.at("A") == std::set<std::string>{"B"});
    CHECK(g.at("B") == std::set<std::string>{"C", "D"});
  }

  TEST_CASE("acyclicity") {
    const std::vector<TboxDefinition> two{{"A", B}, {"B", A}};
    const AcyclicityResult r = check_acyclic(two);
    CHECK(r.kind == AcyclicityResult::Kind::Cycle);
    REQUIRE(r.witness.size() == 3);
    CHECK(r.witness.front() == r.witness.back());

    const std::vector<TboxDefinition> self{{"A", Concept::box(R, A)}};
    CHECK(check_acyclic(self).kind == AcyclicityResult::Kind::Cycle);

    const std::vector<TboxDefinition> dup{{"A", B}, {"A", C}};
    const AcyclicityResult d = check_acyclic(dup);
    CHECK(d.kind == AcyclicityResult::Kind::DuplicateLhs);
    CHECK(d.witness == std::vector<std::string>{"A"});

    const std::vector<TboxDefinition> chain{{"A", B}, {"B", C}, {"C", D}};
    CHECK(check_acyclic(chain).ok());
    CHECK_FALSE(check_completely_unravelled(chain));
    const std::vector<TboxDefinition> flat{{"A", Concept::conj(C, D)}, {"B", Concept::box(R, C)}};
    CHECK(check_completely_unravelled(flat));
  }

  TEST_CASE("fresh names avoid the reserved set") {
    FreshNames fresh({"gci_1", "gci_3"});
    CHECK(fresh.next() == "gci_2");
    CHECK(fresh.next() == "gci_4");
    fresh.reserve("gci_5");
    CHECK(fresh.next() == "gci_6");
  }

  TEST_CASE("inclusion rewriting") {
    FreshNames fresh({"A", "B"});
    const TboxDefinition d = rewrite_gci(A, B, fresh);
    CHECK(d.lhs == "A");
    REQUIRE(d.rhs.kind() == ConceptKind::And);
    CHECK(d.rhs.lhs() == B);
    CHECK(d.rhs.rhs() == Concept::atom("gci_1"));
    CHECK_THROWS_AS(rewrite_gci(Concept::conj(A, B), C, fresh), TboxError);
  }

  TEST_CASE("unravelling") {
    const std::vector<TboxDefinition> defs{{"A", Concept::box(R, B)}, {"B", Concept::conj(C, D)}};
    CHECK(unravel_concept(Concept::disj(A, B), defs) ==
          Concept::disj(Concept::box(R, Concept::conj(C, D)), Concept::conj(C, D)));
    const Individual b = Individual::object("b"), y = Individual::feature("y");
    const std::vector<AboxTerm> in{member(b, A), described(y, B, true), incidence(b, y)};
    const std::vector<AboxTerm> out = unravel(in, defs);
    REQUIRE(out.size() == 3);
    CHECK(out[0] == member(b, Concept::box(R, Concept::conj(C, D))));
    CHECK(out[1] == described(y, Concept::conj(C, D), true));
    CHECK(out[2] == in[2]);
    const std::vector<TboxDefinition> cyc{{"A", B}, {"B", A}};
    CHECK_THROWS_AS(unravel_concept(A, cyc), TboxError);
  }

  TEST_CASE("prepare picks the regime") {
    CHECK(prepare(load("example2.kb")).regime == Regime::NoTbox);
    const PreparedKb u = prepare(load("tbox_unravel.kb"));
    CHECK(u.regime == Regime::Acyclic);
    REQUIRE(u.abox.size() == 1);
    CHECK(u.abox[0] == member(Individual::object("b"), Concept::box(R, Concept::conj(C, D))));
    const PreparedKb g = prepare(load("tbox_gci.kb"));
    CHECK(g.regime == Regime::CompletelyUnravelled);
    REQUIRE(g.fresh_atoms.size() == 1);
    CHECK(g.abox[0] == member(Individual::object("b"), Concept::conj(B, Concept::atom(g.fresh_atoms[0]))));
    CHECK_THROWS_AS(prepare(load("tbox_cycle.kb")), TboxError);
  }

  TEST_CASE("defined atoms get the value of their definition") {
    const KnowledgeBase kb = load("tbox_unravel.kb");
    const PreparedKb p = prepare(kb);
    Verdict v = check_consistency(p.abox, {kb.declarations.roles(), {"C", "D"}});
    REQUIRE(v.status == Status::Consistent);
    Interpretation m = *v.model;
    extend_with_definitions(m, p.definitions);
    CHECK(satisfies_tbox(m, p.definitions));
    CHECK(satisfies(m, member(Individual::object("b"), A)));
    const ref::Value a = ref::eval(m, A);
    CHECK(a == ref::eval(m, Concept::box(R, Concept::conj(C, D))));
  }
}
