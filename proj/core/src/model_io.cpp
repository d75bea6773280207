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

#include "lealc/model_io.hpp"

#include <algorithm>
#include <map>

namespace lealc {

namespace {

using nlohmann::json;

json names_of(const std::vector<std::string>& names, const ElementSet& s) {
  std::vector<std::string> out;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(names[i]);
  std::sort(out.begin(), out.end());
  return out;
}

json pairs_of(const BinaryRelation& r, const std::vector<std::string>& rows, const std::vector<std::string>& cols) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t u = 0; u < r.rows(); ++u)
    for (auto v = r.row(u).find_first(); v != ElementSet::npos; v = r.row(u).find_next(v))
      out.emplace_back(rows[u], cols[v]);
  std::sort(out.begin(), out.end());
  json arr = json::array();
  for (auto& [a, b] : out) arr.push_back({a, b});
  return arr;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < names.size(); ++i) out.emplace(names[i], i);
  return out;
}

ElementSet set_from(const json& arr, const std::map<std::string, std::size_t>& index) {
  ElementSet s(index.size());
  for (const auto& name : arr) s.set(index.at(name.get<std::string>()));
  return s;
}

void fill(BinaryRelation& r, const json& pairs, const std::map<std::string, std::size_t>& rows,
          const std::map<std::string, std::size_t>& cols) {
  for (const auto& p : pairs) r.set(rows.at(p.at(0).get<std::string>()), cols.at(p.at(1).get<std::string>()));
}

}  // namespace

json model_to_json(const Interpretation& model) {
  const EnrichedContext& e = model.context;
  const Polarity& p = e.base;
  std::vector<std::string> objs = p.objects, feats = p.features;
  std::sort(objs.begin(), objs.end());
  std::sort(feats.begin(), feats.end());
  json doc;
  doc["objects"] = objs;
  doc["features"] = feats;
  doc["incidence"] = pairs_of(p.incidence, p.objects, p.features);
  doc["box"] = json::object();
  for (const auto& [name, r] : e.box_rels) doc["box"][name] = pairs_of(r, p.objects, p.features);
  doc["dia"] = json::object();
  for (const auto& [name, r] : e.dia_rels) doc["dia"][name] = pairs_of(r, p.features, p.objects);
  doc["atoms"] = json::object();
  for (const auto& [name, c] : model.atom_map)
    doc["atoms"][name] = {{"extent", names_of(p.objects, c.extent)}, {"intent", names_of(p.features, c.intent)}};
  return doc;
}

Interpretation model_from_json(const json& doc, const Declarations* decls) {
  Interpretation m;
  m.context.base = Polarity(doc.at("objects").get<std::vector<std::string>>(),
                            doc.at("features").get<std::vector<std::string>>());
  Polarity& p = m.context.base;
  const auto oi = index_of(p.objects);
  const auto fi = index_of(p.features);
  fill(p.incidence, doc.at("incidence"), oi, fi);
  for (const auto& [name, pairs] : doc.at("box").items()) {
    m.context.add_box_role(name);
    fill(m.context.box_rels.at(name), pairs, oi, fi);
  }
  for (const auto& [name, pairs] : doc.at("dia").items()) {
    m.context.add_dia_role(name);
    fill(m.context.dia_rels.at(name), pairs, fi, oi);
  }
  for (const auto& [name, c] : doc.at("atoms").items())
    m.atom_map[name] = {set_from(c.at("extent"), oi), set_from(c.at("intent"), fi)};
  if (decls) {
    for (std::size_t i = 0; i < p.objects.size(); ++i) {
      try {
        m.object_map[parse_individual(p.objects[i], *decls)] = i;
      } catch (const ParseError&) {
      }
    }
    for (std::size_t i = 0; i < p.features.size(); ++i) {
      try {
        m.feature_map[parse_individual(p.features[i], *decls)] = i;
      } catch (const ParseError&) {
      }
    }
  }
  return m;
}

json trace_to_json(const Tableau& t) {
  json out = json::array();
  for (const TraceRecord& r : t.trace()) {
    json premises = json::array(), added = json::array();
    for (TermId id : r.premises) premises.push_back(t.render(id));
    for (TermId id : r.added) added.push_back(t.render(id));
    json rec = {{"step", r.step}, {"rule", rule_name(r.rule)}, {"premises", premises}, {"added", added}};
    if (r.concept_id != kNone) rec["concept"] = to_string(t.registry().concept_info(r.concept_id).expr);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace lealc
