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

// End-to-end checks, one PASS/FAIL line each:
//   1 example 1     2 example 2     3 soundness      4 oracle sweep
//   5 growth        6 depth bounds  7 derived rules  8 confluence
//   9 tbox handling
// Usage: lealc_acceptance [N...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cli.hpp"
#include "lealc/extraction.hpp"
#include "lealc/fca.hpp"
#include "lealc/oracle.hpp"
#include "lealc/parser.hpp"
#include "lealc/tableau.hpp"
#include "lealc/tbox.hpp"
#include "lealc_test_support.hpp"

namespace {

using namespace lealc;
using lealc::testing::Rng;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

KnowledgeBase load(const std::string& name) {
  std::ifstream in(std::string(LEALC_TEST_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_kb(ss.str());
}

Vocabulary vocabulary_of(const KnowledgeBase& kb) { return {kb.declarations.roles(), kb.declarations.concepts}; }

// Completions seen by suites 1-5, audited for 6 and 7.
struct Audit {
  std::size_t depth_checked = 0;
  std::size_t depth_violations = 0;
  std::size_t derived_checked = 0;
  std::size_t derived_violations = 0;
  std::vector<std::string> samples;

  void operator()(const Tableau& t) {
    ++depth_checked;
    const Report d = check_depth_bounds(t);
    depth_violations += d.violations.size();
    if (!d.ok() && samples.size() < 5) samples.push_back("depth: " + d.violations.front());
    if (t.clash()) return;
    ++derived_checked;
    const Report r = check_derived_rules(t);
    derived_violations += r.violations.size();
    if (!r.ok() && samples.size() < 5) samples.push_back("derived: " + r.violations.front());
  }
};

Audit audit;

bool trace_adds(Tableau& t, const AboxTerm& want) {
  const auto id = t.find(t.intern(want));
  if (!id) return false;
  for (const TraceRecord& r : t.trace())
    if (std::find(r.added.begin(), r.added.end(), *id) != r.added.end()) return true;
  return false;
}

Outcome example1() {
  const KnowledgeBase kb = load("example1.kb");
  const auto t0 = Clock::now();
  const Verdict v = check_consistency(kb.abox, vocabulary_of(kb));
  const double secs = seconds_since(t0);
  Tableau& t = *v.tableau;
  audit(t);

  const RoleName r = RoleName::box("R");
  const Concept c1 = Concept::atom("C1"), c2 = Concept::atom("C2");
  const Concept c12 = Concept::conj(c1, c2);
  const Individual b = Individual::object("b"), y = Individual::feature("y");
  const Individual x_box_c1 = Individual::classifier(Sort::Feature, Concept::box(r, c1));
  const Individual bd = Individual::prefixed(ModalOp::BlackDiamond, r, b);
  const Individual bdbd = Individual::prefixed(ModalOp::BlackDiamond, r, bd);
  const std::vector<AboxTerm> expected{box_rel(r, b, x_box_c1), incidence(bd, x_box_c1), member(bdbd, c12),
                                       member(b, Concept::box(r, Concept::box(r, c12)))};

  std::ostringstream d;
  bool ok = v.status == Status::Inconsistent;
  d << (ok ? "inconsistent" : "consistent");
  if (v.clash) {
    const bool on_bry = v.clash->first == box_rel(r, b, y);
    ok = ok && on_bry;
    d << ", clash " << to_string(v.clash->first) << " / " << to_string(v.clash->second);
  }
  d << ", " << t.steps() << " steps";
  ok = ok && t.steps() <= 200;
  for (const AboxTerm& e : expected) {
    if (!trace_adds(t, e)) {
      ok = false;
      d << ", missing " << to_string(e);
    }
  }
  d << ", " << secs * 1000 << " ms";
  ok = ok && secs < 1.0;
  return {ok, d.str()};
}

std::set<std::pair<std::string, std::string>> pairs_of(const BinaryRelation& r, const std::vector<std::string>& rows,
                                                       const std::vector<std::string>& cols) {
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r.test(i, j)) out.emplace(rows[i], cols[j]);
  return out;
}

// The model as listed alongside the example, in this library's naming,
// with D interpreted as (x_D down, a_D up).
Interpretation listed_example2_model(const Declarations& decls) {
  const std::vector<std::string> objs{"a{C1}", "a{C2}", "a{C1 | C2}", "b", "bdia@R(b)", kTopObject};
  const std::vector<std::string> feats{"x{C1}", "x{C2}", "x{C1 | C2}", "y", "box@R(y)", kBotFeature};
  const std::vector<std::pair<int, int>> inc{{0, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 2}, {4, 3}, {3, 4}};
  Interpretation m;
  m.context.base = Polarity(objs, feats);
  for (auto [i, j] : inc) m.context.base.incidence.set(i, j);
  m.context.add_box_role("R");
  m.context.box_rels["R"].set(3, 3);
  m.context.add_dia_role("S");
  for (std::size_t i = 0; i + 1 < objs.size(); ++i) m.object_map[parse_individual(objs[i], decls)] = i;
  for (std::size_t j = 0; j + 1 < feats.size(); ++j) m.feature_map[parse_individual(feats[j], decls)] = j;
  for (const char* a : {"C1", "C2"}) {
    ElementSet ext(objs.size()), in(feats.size());
    ext.set(static_cast<std::size_t>(std::find(objs.begin(), objs.end(), std::string("a{") + a + "}") - objs.begin()));
    in.set(static_cast<std::size_t>(std::find(feats.begin(), feats.end(), std::string("x{") + a + "}") - feats.begin()));
    m.atom_map[a] = {poly_down(m.context.base, in), poly_up(m.context.base, ext)};
  }
  return m;
}

Outcome example2() {
  const KnowledgeBase kb = load("example2.kb");
  const auto t0 = Clock::now();
  const Verdict v = check_consistency(kb.abox, vocabulary_of(kb));
  const double secs = seconds_since(t0);
  audit(*v.tableau);
  if (v.status != Status::Consistent) return {false, "reported inconsistent"};

  const Interpretation& m = *v.model;
  const Interpretation listed = listed_example2_model(kb.declarations);
  const auto& got = m.context.base;
  const auto& want = listed.context.base;
  const std::set<std::string> got_objs(got.objects.begin(), got.objects.end());
  const std::set<std::string> want_objs(want.objects.begin(), want.objects.end());
  const std::set<std::string> got_feats(got.features.begin(), got.features.end());
  const std::set<std::string> want_feats(want.features.begin(), want.features.end());
  const auto got_i = pairs_of(got.incidence, got.objects, got.features);
  const auto want_i = pairs_of(want.incidence, want.objects, want.features);
  const auto got_r = pairs_of(m.context.box_rels.at("R"), got.objects, got.features);
  const bool dia_empty = m.context.dia_rels.at("S").count() == 0;

  std::ostringstream d;
  d << "consistent, carriers " << got.num_objects() << "+" << got.num_features() << " (with " << kTopObject << ", "
    << kBotFeature << ")";
  bool ok = got_objs == want_objs && got_feats == want_feats;
  if (!ok) d << " (carriers differ from the listing)";
  d << ", I has " << got_i.size() << " pairs vs " << want_i.size() << " listed";
  for (const auto& [a, x] : got_i)
    if (!want_i.count({a, x})) d << ", extra (" << a << ", " << x << ")";
  for (const auto& [a, x] : want_i)
    if (!got_i.count({a, x})) d << ", missing (" << a << ", " << x << ")";
  ok = ok && got_i == want_i;
  const bool r_ok = got_r == std::set<std::pair<std::string, std::string>>{{"b", "y"}} && dia_empty;
  d << (r_ok ? ", R_box = {(b, y)}, R_dia empty" : ", relations differ");
  ok = ok && r_ok && secs < 1.0;

  std::vector<std::string> listed_fails;
  for (const AboxTerm& term : kb.abox)
    if (!satisfies(listed, term)) listed_fails.push_back(to_string(term));
  if (!listed_fails.empty()) {
    d << "; the listed model itself fails";
    for (const auto& f : listed_fails) d << " [" << f << "]";
  }
  d << ", " << secs * 1000 << " ms";
  return {ok, d.str()};
}

// b in extent(C) iff b I x_C, y in intent(C) iff a_C I y, for every occurring C.
std::size_t membership_lemma_violations(const Tableau& t, const Interpretation& m) {
  std::size_t bad = 0;
  Evaluator ev(m);
  const Registry& reg = t.registry();
  for (ConceptId c : t.occurring_concepts()) {
    const Concept& expr = reg.concept_info(c).expr;
    const StableSetPair& val = ev.eval(expr);
    const Individual xc = Individual::classifier(Sort::Feature, expr);
    const Individual ac = Individual::classifier(Sort::Object, expr);
    for (IndId b : t.objects()) {
      const Individual& bi = reg.ind(b).ind;
      if (val.extent.test(m.object_map.at(bi)) != t.contains(incidence(bi, xc))) ++bad;
    }
    for (IndId y : t.features()) {
      const Individual& yi = reg.ind(y).ind;
      if (val.intent.test(m.feature_map.at(yi)) != t.contains(incidence(ac, yi))) ++bad;
    }
  }
  return bad;
}

Outcome soundness() {
  constexpr std::size_t kRuns = 1000;
  std::size_t consistent = 0, compat_fail = 0, sat_fail = 0, lemma_fail = 0;
  for (std::uint64_t seed = 1; seed <= kRuns; ++seed) {
    Rng rng(seed);
    const testing::Signature sig = testing::random_signature(rng, 2, 3);
    testing::AboxParams p;
    const std::vector<AboxTerm> abox = testing::random_abox(rng, sig, p);
    const Verdict v = check_consistency(abox, sig.vocabulary());
    audit(*v.tableau);
    if (v.status != Status::Consistent) continue;
    ++consistent;
    const Interpretation& m = *v.model;
    if (!check_i_compatibility(m.context).ok()) ++compat_fail;
    if (!satisfies_all(m, abox)) ++sat_fail;
    if (membership_lemma_violations(*v.tableau, m)) ++lemma_fail;
  }
  std::ostringstream d;
  d << kRuns << " ABoxes, " << consistent << " consistent; violations: compatibility " << compat_fail
    << ", satisfaction " << sat_fail << ", membership " << lemma_fail;
  return {consistent > 0 && compat_fail + sat_fail + lemma_fail == 0, d.str()};
}

std::vector<AboxTerm> sweep_terms(const std::vector<Concept>& pool, const RoleName& r) {
  std::vector<AboxTerm> out;
  const std::vector<Individual> objs{Individual::object("b0"), Individual::object("b1")};
  const std::vector<Individual> feats{Individual::feature("y0"), Individual::feature("y1")};
  for (bool neg : {false, true}) {
    for (const auto& b : objs)
      for (const Concept& c : pool) out.push_back(member(b, c, neg));
    for (const auto& y : feats)
      for (const Concept& c : pool) out.push_back(described(y, c, neg));
    for (const auto& b : objs)
      for (const auto& y : feats) {
        out.push_back(incidence(b, y, neg));
        out.push_back(box_rel(r, b, y, neg));
      }
  }
  return out;
}

struct SweepResult {
  std::size_t instances = 0;
  std::size_t consistent = 0;
  std::size_t escalated = 0;  // no model within 3x3, one within 4x4
  std::size_t catalog_sizes[2] = {0, 0};
  std::vector<std::string> disagreements;
};

// The oracle searches 3x3 carriers and retries 4x4 when that finds nothing.
SweepResult sweep(const std::vector<Concept>& pool, const RoleName& r, bool audit_completions, bool escalate) {
  ModelCatalog catalog(OracleBounds{}, {r}, {"A"});
  std::optional<ModelCatalog> wide;
  const std::vector<AboxTerm> terms = sweep_terms(pool, r);
  SweepResult out;
  auto run = [&](const std::vector<AboxTerm>& abox) {
    ++out.instances;
    const Verdict v = check_consistency(abox, Vocabulary{{r}, {"A"}});
    if (audit_completions) audit(*v.tableau);
    bool found = catalog.find_model(abox).has_value();
    if (!found && escalate) {
      if (!wide) wide.emplace(OracleBounds{4, 4}, std::vector<RoleName>{r}, std::set<std::string>{"A"});
      found = wide->find_model(abox).has_value();
      out.escalated += found;
    }
    if (v.status == Status::Consistent) ++out.consistent;
    if (found != (v.status == Status::Consistent)) {
      std::string s = v.status == Status::Consistent ? "engine consistent, oracle none:" : "engine inconsistent, oracle model:";
      for (const AboxTerm& t : abox) s += " [" + to_string(t) + "]";
      out.disagreements.push_back(s);
    }
  };
  run({});
  for (std::size_t i = 0; i < terms.size(); ++i) {
    run({terms[i]});
    for (std::size_t j = i + 1; j < terms.size(); ++j) run({terms[i], terms[j]});
  }
  out.catalog_sizes[0] = catalog.size();
  out.catalog_sizes[1] = wide ? wide->size() : 0;
  return out;
}

// Concepts over one atom and one box role: level k adds [R]c and the
// meets and joins of distinct pairs from level k-1.
std::vector<Concept> concept_pool(const RoleName& r, int levels) {
  std::vector<Concept> pool{Concept::atom("A")};
  for (int k = 1; k < levels; ++k) {
    std::set<Concept> next(pool.begin(), pool.end());
    for (std::size_t i = 0; i < pool.size(); ++i) {
      next.insert(Concept::box(r, pool[i]));
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        next.insert(Concept::conj(pool[i], pool[j]));
        next.insert(Concept::disj(pool[i], pool[j]));
      }
    }
    pool.assign(next.begin(), next.end());
  }
  return pool;
}

Outcome oracle_sweep() {
  const RoleName r = RoleName::box("R");
  const std::vector<Concept> pool = concept_pool(r, 4);
  const auto t0 = Clock::now();
  const SweepResult res = sweep(pool, r, true, true);
  const double secs = seconds_since(t0);

  std::ostringstream d;
  d << pool.size() << " concepts, " << res.instances << " ABoxes (" << res.consistent << " consistent, "
    << res.escalated << " needing 4x4 carriers), " << res.disagreements.size() << " disagreements, " << secs << " s; oracle contexts " << res.catalog_sizes[0]
    << " (3x3) and " << res.catalog_sizes[1] << " (4x4)";
  for (std::size_t i = 0; i < std::min<std::size_t>(3, res.disagreements.size()); ++i)
    d << "\n    " << res.disagreements[i];

  // Informational: a smaller sweep with top and bot in the pool.
  std::vector<Concept> wide = concept_pool(r, 3);
  wide.push_back(Concept::top());
  wide.push_back(Concept::bot());
  const SweepResult tb = sweep(wide, r, false, false);
  d << "\n    info: with top/bot in the pool (3x3 only), " << tb.disagreements.size() << " of " << tb.instances << " disagree";
  for (std::size_t i = 0; i < std::min<std::size_t>(2, tb.disagreements.size()); ++i)
    d << "\n      " << tb.disagreements[i];
  return {res.disagreements.empty() && secs < 600.0, d.str()};
}

Outcome growth() {
  constexpr double kC = 4.0;
  double worst_steps = 0, worst_carrier = 0;
  std::string worst_at;
  std::size_t runs = 0;
  bool ok = true;
  for (testing::Family f : {testing::Family::Chain, testing::Family::Layered, testing::Family::Mixed}) {
    for (std::size_t n = 10; n <= 200; n += 10) {
      const std::vector<AboxTerm> abox = testing::family_abox(f, n);
      TableauOptions opt;
      opt.stop_on_clash = false;
      opt.record_trace = false;
      Tableau t(abox, opt);
      try {
        t.saturate();
      } catch (const SafetyLimitError&) {
        ok = false;
        worst_at = std::string(testing::family_name(f)) + " n=" + std::to_string(n) + " hit the step limit";
        continue;
      }
      ++runs;
      audit(t);
      const double bound = static_cast<double>(termination_bound(abox));
      const double steps = static_cast<double>(t.steps()) / bound;
      const double carrier = static_cast<double>(t.objects().size() + t.features().size() + 2) / bound;
      if (steps > worst_steps) {
        worst_steps = steps;
        worst_at = std::string(testing::family_name(f)) + " n=" + std::to_string(n);
      }
      worst_carrier = std::max(worst_carrier, carrier);
      ok = ok && steps <= kC && carrier <= kC;
    }
  }
  std::ostringstream d;
  d << runs << " saturations; max steps/bound " << worst_steps << " (" << worst_at << "), max carrier/bound "
    << worst_carrier << ", c = " << kC;
  return {ok, d.str()};
}

Outcome depth_bounds() {
  std::ostringstream d;
  d << audit.depth_checked << " completions, " << audit.depth_violations << " violations";
  for (const auto& s : audit.samples)
    if (s.rfind("depth", 0) == 0) d << "\n    " << s;
  return {audit.depth_checked > 0 && audit.depth_violations == 0, d.str()};
}

Outcome derived_rules() {
  std::ostringstream d;
  d << audit.derived_checked << " clash-free completions, " << audit.derived_violations << " violations";
  for (const auto& s : audit.samples)
    if (s.rfind("derived", 0) == 0) d << "\n    " << s;
  return {audit.derived_checked > 0 && audit.derived_violations == 0, d.str()};
}

Outcome confluence() {
  std::size_t differing = 0, verdict_diff = 0, inconsistent = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(1000 + seed);
    const testing::Signature sig = testing::random_signature(rng, 2, 3);
    const std::vector<AboxTerm> abox = testing::random_abox(rng, sig, testing::AboxParams{});
    std::optional<std::set<AboxTerm>> first;
    std::optional<Status> first_status;
    for (std::uint64_t order = 0; order < 5; ++order) {
      TableauOptions opt;
      opt.seed = seed * 31 + order;
      opt.stop_on_clash = false;
      opt.record_trace = false;
      Tableau t(abox, opt);
      t.saturate();
      const std::set<AboxTerm> terms = t.term_set();
      if (!first) first = terms;
      else if (terms != *first) ++differing;

      TableauOptions stop = opt;
      stop.stop_on_clash = true;
      const Status s = check_consistency(abox, sig.vocabulary(), stop).status;
      if (!first_status) first_status = s;
      else if (s != *first_status) ++verdict_diff;
      if (s == Status::Inconsistent && order == 0) ++inconsistent;
    }
  }
  std::ostringstream d;
  d << "100 ABoxes x 5 orders (" << inconsistent << " inconsistent); differing completions " << differing
    << ", differing verdicts " << verdict_diff;
  return {differing == 0 && verdict_diff == 0, d.str()};
}

Outcome tbox_handling() {
  std::ostringstream d;
  bool ok = true;
  const Concept a = Concept::atom("A"), b = Concept::atom("B");

  const std::vector<TboxDefinition> cyc{{"A", b}, {"B", a}};
  const AcyclicityResult ar = check_acyclic(cyc);
  bool rejected = false;
  try {
    prepare(load("tbox_cycle.kb"));
  } catch (const TboxError&) {
    rejected = true;
  }
  ok = ok && ar.kind == AcyclicityResult::Kind::Cycle && rejected;
  d << "cycle " << (ar.kind == AcyclicityResult::Kind::Cycle ? "detected" : "missed");

  const RoleName r = RoleName::box("R");
  const Concept cd = Concept::conj(Concept::atom("C"), Concept::atom("D"));
  const std::vector<TboxDefinition> defs{{"A", Concept::box(r, b)}, {"B", cd}};
  const std::vector<AboxTerm> in{member(Individual::object("b"), a)};
  const std::vector<AboxTerm> want{member(Individual::object("b"), Concept::box(r, cd))};
  const bool unravel_ok = unravel(in, defs) == want;
  ok = ok && unravel_ok;
  d << ", unravelling " << (unravel_ok ? "ok" : "wrong");

  FreshNames fresh({"A", "B"});
  const TboxDefinition g = rewrite_gci(a, b, fresh);
  const bool gci_ok = g.lhs == "A" && g.rhs.kind() == ConceptKind::And && g.rhs.lhs() == b &&
                      g.rhs.rhs().kind() == ConceptKind::Atom && g.rhs.rhs().name() != "A" && g.rhs.rhs().name() != "B";
  ok = ok && gci_ok;
  d << ", inclusion -> " << to_string(g);

  const std::string path = std::string(LEALC_TEST_DATA_DIR) + "/tbox_unravel.kb";
  const char* argv[] = {"lealc", "check", "--unravel-only", path.c_str()};
  std::ostringstream out, err;
  const int code = cli::run(4, argv, out, err);
  bool round_trip = false;
  try {
    const KnowledgeBase flat = parse_kb(out.str());
    const PreparedKb prepared = prepare(load("tbox_unravel.kb"));
    round_trip = code == 0 && flat.tbox.empty() && flat.abox == prepared.abox && write_kb(flat) == out.str();
  } catch (const ParseError& e) {
    d << " (" << e.what() << ")";
  }
  ok = ok && round_trip;
  d << ", --unravel-only round trip " << (round_trip ? "ok" : "failed");
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, example1}, {2, example2},     {3, soundness},     {4, oracle_sweep}, {5, growth},
      {6, depth_bounds}, {7, derived_rules}, {8, confluence}, {9, tbox_handling}};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& [n, fn] : criteria) {
    if (!selected.empty() && !selected.count(n)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << "  ["
              << seconds_since(t0) << " s]" << std::endl;
  }
  return failed ? 1 : 0;
}
