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

// Line-oriented knowledge-base format:
//
//   object <id>... | feature <id>... | boxrel <id>... | diarel <id>... | concept <id>...
//   abox [not] <obj> : <concept>
//   abox [not] <feat> :: <concept>
//   abox [not] <obj> I <feat>
//   abox [not] <obj> <boxrel> <feat>
//   abox [not] <feat> <diarel> <obj>
//   tbox <conceptname> == <concept>
//   tbox <concept> <= <concept>          (general inclusion, rewritten later)
//
// Concepts: atom | top | bot | ( C ) | [r]C | <r>C | C & C | C | C, with
// modal > & > | and both binary operators left-associative. Generated
// individuals are written a{C}, x{C}, bdia@R(b), dia@R(b), box@R(y), bbox@R(y).
// '#' starts a comment.

#ifndef LEALC_PARSER_HPP_
#define LEALC_PARSER_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lealc/syntax.hpp"

namespace lealc {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Lexical, Syntax, Sort, Undeclared, Redeclared, DuplicateDefinition };

  ParseError(Kind kind, int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

struct Declarations {
  std::set<std::string> objects;
  std::set<std::string> features;
  std::set<std::string> box_roles;
  std::set<std::string> dia_roles;
  std::set<std::string> concepts;

  bool declares(const std::string& name) const;
  std::vector<RoleName> roles() const;
};

// C1 <= C2 as written; see tbox.hpp for the rewriting.
struct InclusionAxiom {
  Concept lhs;
  Concept rhs;
  int line = 0;
};

struct KnowledgeBase {
  Declarations declarations;
  std::vector<AboxTerm> abox;  // input order, duplicates dropped
  std::vector<TboxDefinition> tbox;
  std::vector<InclusionAxiom> inclusions;
  std::vector<int> tbox_lines;  // source line of each tbox entry
};

KnowledgeBase parse_kb(std::string_view text);

// Single-item parsers against an existing vocabulary (used for traces and tests).
Concept parse_concept(std::string_view text, const Declarations& decls);
Individual parse_individual(std::string_view text, const Declarations& decls);
AboxTerm parse_term(std::string_view text, const Declarations& decls);

// Renders declarations, ABox and TBox; parse_kb(write_kb(kb)) reproduces kb.
std::string write_kb(const KnowledgeBase& kb);

}  // namespace lealc

#endif  // LEALC_PARSER_HPP_
