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
#include <fstream>
#include <sstream>

#include "lealc/extraction.hpp"
#include "lealc/parser.hpp"
#include "lealc/tableau.hpp"
#include "lealc_test_support.hpp"
#include "reference.hpp"

using namespace lealc;

namespace {

KnowledgeBase load(const std::string& name) {
  std::ifstream in(std::string(LEALC_TEST_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_kb(ss.str());
}

std::size_t index_of(const std::vector<std::string>& v, const std::string& s) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), s) - v.begin());
}

}  // namespace

TEST_SUITE("extraction") {
  TEST_CASE("example 2 model") {
    const KnowledgeBase kb = load("example2.kb");
    const Verdict v = check_consistency(kb.abox, {kb.declarations.roles(), kb.declarations.concepts});
    REQUIRE(v.status == Status::Consistent);
    const Interpretation& m = *v.model;
    const auto& objs = m.context.base.objects;
    const auto& feats = m.context.base.features;
    REQUIRE(index_of(objs, kTopObject) < objs.size());
    REQUIRE(index_of(feats, kBotFeature) < feats.size());
    // The added elements are unrelated to everything.
    CHECK(m.context.base.incidence.row(index_of(objs, kTopObject)).none());
    CHECK(m.context.base.incidence.column(index_of(feats, kBotFeature)).none());
    CHECK(m.context.box_rels.at("R").count() == 1);
    CHECK(m.context.dia_rels.at("S").count() == 0);
    for (const AboxTerm& t : kb.abox) CHECK(ref::holds(m, t));
    CHECK(verify_extraction(*v.tableau, m).ok());
  }

  TEST_CASE("atoms that never occur are bottom") {
    const std::vector<AboxTerm> abox{member(Individual::object("b"), Concept::atom("A"))};
    const Verdict v = check_consistency(abox, {{}, {"A", "Z"}});
    REQUIRE(v.model);
    const Interpretation& m = *v.model;
    const StableSetPair& z = m.atom_map.at("Z");
    CHECK(z.intent.all());
    CHECK(ref::bits(z.extent) == ref::context_of(m.context.base).down(ref::Bits(z.intent.size(), true)));
  }

  TEST_CASE("extracted models satisfy the input under the reference semantics") {
    testing::Rng rng(31);
    std::size_t consistent = 0;
    for (int i = 0; i < 300; ++i) {
      const testing::Signature sig = testing::random_signature(rng, 2, 3);
      const auto abox = testing::random_abox(rng, sig, testing::AboxParams{});
      const Verdict v = check_consistency(abox, sig.vocabulary());
      CHECK(check_depth_bounds(*v.tableau).ok());
      if (v.status != Status::Consistent) continue;
      ++consistent;
      const Interpretation& m = *v.model;
      const ref::Context k = ref::context_of(m.context.base);
      for (const auto& [name, rel] : m.context.box_rels) CHECK(ref::box_compatible(k, ref::dense(rel)));
      for (const auto& [name, rel] : m.context.dia_rels) CHECK(ref::dia_compatible(k, ref::dense(rel)));
      for (const auto& [name, val] : m.atom_map) CHECK(k.stable_extent(ref::bits(val.extent)));
      for (const AboxTerm& t : abox) CHECK(ref::holds(m, t));
      CHECK(verify_extraction(*v.tableau, m).ok());
      CHECK(check_derived_rules(*v.tableau).ok());
    }
    CHECK(consistent > 50);
  }

  TEST_CASE("verification notices a broken model") {
    const KnowledgeBase kb = load("example2.kb");
    const Verdict v = check_consistency(kb.abox, {kb.declarations.roles(), kb.declarations.concepts});
    Interpretation m = *v.model;
    const std::size_t bi = m.object_map.at(Individual::object("b"));
    const std::size_t yi = m.feature_map.at(Individual::feature("y"));
    m.context.base.incidence.set(bi, yi);
    CHECK_FALSE(verify_extraction(*v.tableau, m).ok());
  }

  TEST_CASE("depth bounds flag a term outside the bounds") {
    const Individual b = Individual::object("b");
    const RoleName r = RoleName::box("R");
    Individual deep = b;
    for (int i = 0; i < 3; ++i) deep = Individual::prefixed(ModalOp::BlackDiamond, r, deep);
    const std::vector<AboxTerm> abox{member(deep, Concept::atom("A"))};
    Tableau t(abox);
    CHECK_FALSE(check_depth_bounds(t, AboxDepths{0, 0}).ok());
    CHECK(check_depth_bounds(t, AboxDepths{3, 0}).ok());
  }
}
