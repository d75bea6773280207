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

#include "lealc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace lealc {

namespace {

const std::set<std::string, std::less<>> kKeywords = {"object", "feature", "boxrel", "diarel", "concept", "abox",
                                                     "tbox",   "not",     "I",      "top",    "bot"};
const std::set<std::string, std::less<>> kPrefixOps = {"bdia", "dia", "box", "bbox"};

enum class Tok { Ident, Colon, DoubleColon, Equiv, Subsumed, LParen, RParen, LBrack, RBrack, LAngle, RAngle,
                 Amp, Bar, LBrace, RBrace, At, End };

struct Token {
  Tok kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i))});
      i = j;
      continue;
    }
    auto two = line.substr(i, 2);
    if (two == "::") { out.push_back({Tok::DoubleColon, "::"}); i += 2; continue; }
    if (two == "==") { out.push_back({Tok::Equiv, "=="}); i += 2; continue; }
    if (two == "<=") { out.push_back({Tok::Subsumed, "<="}); i += 2; continue; }
    Tok kind;
    switch (c) {
      case ':': kind = Tok::Colon; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBrack; break;
      case ']': kind = Tok::RBrack; break;
      case '<': kind = Tok::LAngle; break;
      case '>': kind = Tok::RAngle; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '@': kind = Tok::At; break;
      default:
        throw ParseError(ParseError::Kind::Lexical, lineno, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, ""});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, const Declarations& decls, int line)
      : toks_(std::move(toks)), decls_(decls), line_(line) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view text) const { return at(Tok::Ident) && peek().text == text; }
  bool at_end() const { return at(Tok::End); }

  Token take() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (!at(kind)) fail(ParseError::Kind::Syntax, std::string("expected ") + what + ", found '" + peek().text + "'");
    return take();
  }

  std::string expect_name(const char* what) {
    Token t = expect(Tok::Ident, what);
    if (kKeywords.contains(t.text)) fail(ParseError::Kind::Syntax, "keyword '" + t.text + "' used as " + what);
    return t.text;
  }

  void expect_end() {
    if (!at_end()) fail(ParseError::Kind::Syntax, "trailing input '" + peek().text + "'");
  }

  [[noreturn]] void fail(ParseError::Kind kind, const std::string& message) const {
    throw ParseError(kind, line_, message);
  }

  RoleName box_role(const std::string& name) const {
    if (!decls_.box_roles.contains(name)) {
      if (decls_.dia_roles.contains(name)) fail(ParseError::Kind::Sort, "'" + name + "' is a diamond role, not a box role");
      fail(ParseError::Kind::Undeclared, "undeclared box role '" + name + "'");
    }
    return RoleName::box(name);
  }

  RoleName dia_role(const std::string& name) const {
    if (!decls_.dia_roles.contains(name)) {
      if (decls_.box_roles.contains(name)) fail(ParseError::Kind::Sort, "'" + name + "' is a box role, not a diamond role");
      fail(ParseError::Kind::Undeclared, "undeclared diamond role '" + name + "'");
    }
    return RoleName::diamond(name);
  }

  // concept := disj
  Concept parse_concept_expr() {
    Concept c = conjunction();
    while (at(Tok::Bar)) {
      take();
      c = Concept::disj(std::move(c), conjunction());
    }
    return c;
  }

  Individual individual() {
    const std::string head = expect(Tok::Ident, "individual").text;
    if (at(Tok::LBrace) && (head == "a" || head == "x")) {
      take();
      Concept c = parse_concept_expr();
      expect(Tok::RBrace, "'}'");
      return Individual::classifier(head == "a" ? Sort::Object : Sort::Feature, std::move(c));
    }
    if (at(Tok::At) && kPrefixOps.contains(head)) {
      take();
      const std::string role_name = expect_name("role");
      const ModalOp op = head == "bdia" ? ModalOp::BlackDiamond
                         : head == "dia" ? ModalOp::Diamond
                         : head == "box" ? ModalOp::Box
                                         : ModalOp::BlackBox;
      RoleName role = op_role_kind(op) == RoleKind::Box ? box_role(role_name) : dia_role(role_name);
      expect(Tok::LParen, "'('");
      Individual inner = individual();
      expect(Tok::RParen, "')'");
      if (inner.sort() != op_input_sort(op))
        fail(ParseError::Kind::Sort, "prefix '" + head + "' applied to a " +
                                         (inner.is_object() ? "object" : "feature"));
      return Individual::prefixed(op, std::move(role), std::move(inner));
    }
    if (kKeywords.contains(head)) fail(ParseError::Kind::Syntax, "keyword '" + head + "' used as individual");
    if (decls_.objects.contains(head)) return Individual::object(head);
    if (decls_.features.contains(head)) return Individual::feature(head);
    fail(ParseError::Kind::Undeclared, "undeclared individual '" + head + "'");
  }

  // Body of an abox statement, after the optional 'not'.
  AboxTerm term(bool negated) {
    Individual lhs = individual();
    if (at(Tok::Colon)) {
      take();
      if (!lhs.is_object()) fail(ParseError::Kind::Sort, "'" + to_string(lhs) + "' is a feature; ':' needs an object");
      return member(std::move(lhs), parse_concept_expr(), negated);
    }
    if (at(Tok::DoubleColon)) {
      take();
      if (lhs.is_object()) fail(ParseError::Kind::Sort, "'" + to_string(lhs) + "' is an object; '::' needs a feature");
      return described(std::move(lhs), parse_concept_expr(), negated);
    }
    const std::string rel = expect(Tok::Ident, "relation").text;
    Individual rhs = individual();
    if (rel == "I") {
      if (!lhs.is_object() || rhs.is_object()) fail(ParseError::Kind::Sort, "'I' relates an object to a feature");
      return incidence(std::move(lhs), std::move(rhs), negated);
    }
    if (decls_.box_roles.contains(rel)) {
      if (!lhs.is_object() || rhs.is_object())
        fail(ParseError::Kind::Sort, "box role '" + rel + "' relates an object to a feature");
      return box_rel(RoleName::box(rel), std::move(lhs), std::move(rhs), negated);
    }
    if (decls_.dia_roles.contains(rel)) {
      if (lhs.is_object() || !rhs.is_object())
        fail(ParseError::Kind::Sort, "diamond role '" + rel + "' relates a feature to an object");
      return dia_rel(RoleName::diamond(rel), std::move(lhs), std::move(rhs), negated);
    }
    fail(ParseError::Kind::Undeclared, "undeclared role '" + rel + "'");
  }

 private:
  Concept conjunction() {
    Concept c = prefix();
    while (at(Tok::Amp)) {
      take();
      c = Concept::conj(std::move(c), prefix());
    }
    return c;
  }

  Concept prefix() {
    if (at(Tok::LBrack)) {
      take();
      RoleName role = box_role(expect_name("role"));
      expect(Tok::RBrack, "']'");
      return Concept::box(std::move(role), prefix());
    }
    if (at(Tok::LAngle)) {
      take();
      RoleName role = dia_role(expect_name("role"));
      expect(Tok::RAngle, "'>'");
      return Concept::dia(std::move(role), prefix());
    }
    if (at(Tok::LParen)) {
      take();
      Concept c = parse_concept_expr();
      expect(Tok::RParen, "')'");
      return c;
    }
    const Token t = expect(Tok::Ident, "concept");
    if (t.text == "top") return Concept::top();
    if (t.text == "bot") return Concept::bot();
    if (kKeywords.contains(t.text)) fail(ParseError::Kind::Syntax, "keyword '" + t.text + "' used as concept");
    if (!decls_.concepts.contains(t.text)) {
      if (decls_.declares(t.text)) fail(ParseError::Kind::Sort, "'" + t.text + "' is not a concept name");
      fail(ParseError::Kind::Undeclared, "undeclared concept '" + t.text + "'");
    }
    return Concept::atom(t.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Declarations& decls_;
  int line_;
};

void declare(Declarations& decls, const std::string& keyword, const std::string& name, int line) {
  if (decls.declares(name)) {
    const bool same = (keyword == "object" && decls.objects.contains(name)) ||
                      (keyword == "feature" && decls.features.contains(name)) ||
                      (keyword == "boxrel" && decls.box_roles.contains(name)) ||
                      (keyword == "diarel" && decls.dia_roles.contains(name)) ||
                      (keyword == "concept" && decls.concepts.contains(name));
    if (same) return;
    throw ParseError(ParseError::Kind::Redeclared, line, "'" + name + "' already declared with another kind");
  }
  if (keyword == "object") decls.objects.insert(name);
  else if (keyword == "feature") decls.features.insert(name);
  else if (keyword == "boxrel") decls.box_roles.insert(name);
  else if (keyword == "diarel") decls.dia_roles.insert(name);
  else decls.concepts.insert(name);
}

template <typename T, typename Fn>
T parse_single(std::string_view text, const Declarations& decls, Fn&& fn) {
  LineParser p(tokenize(text, 1), decls, 1);
  T out = fn(p);
  p.expect_end();
  return out;
}

}  // namespace

bool Declarations::declares(const std::string& name) const {
  return objects.contains(name) || features.contains(name) || box_roles.contains(name) ||
         dia_roles.contains(name) || concepts.contains(name);
}

std::vector<RoleName> Declarations::roles() const {
  std::vector<RoleName> out;
  for (const auto& r : box_roles) out.push_back(RoleName::box(r));
  for (const auto& r : dia_roles) out.push_back(RoleName::diamond(r));
  return out;
}

KnowledgeBase parse_kb(std::string_view text) {
  KnowledgeBase kb;
  std::set<AboxTerm> seen;
  std::set<std::string> defined;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;

    LineParser p(tokenize(line, lineno), kb.declarations, lineno);
    if (p.at_end()) continue;
    const Token head = p.expect(Tok::Ident, "statement keyword");
    if (head.text == "object" || head.text == "feature" || head.text == "boxrel" || head.text == "diarel" ||
        head.text == "concept") {
      if (p.at_end()) p.fail(ParseError::Kind::Syntax, "declaration without a name");
      while (!p.at_end()) declare(kb.declarations, head.text, p.expect_name("name"), lineno);
    } else if (head.text == "abox") {
      bool negated = false;
      if (p.at_ident("not")) {
        p.take();
        negated = true;
      }
      AboxTerm t = p.term(negated);
      p.expect_end();
      if (seen.insert(t).second) kb.abox.push_back(std::move(t));
    } else if (head.text == "tbox") {
      Concept lhs = p.parse_concept_expr();
      if (p.at(Tok::Equiv)) {
        p.take();
        Concept rhs = p.parse_concept_expr();
        p.expect_end();
        if (lhs.kind() != ConceptKind::Atom)
          p.fail(ParseError::Kind::Syntax, "left-hand side of '==' must be a concept name");
        if (!defined.insert(lhs.name()).second)
          p.fail(ParseError::Kind::DuplicateDefinition, "'" + lhs.name() + "' defined more than once");
        kb.tbox.push_back({lhs.name(), std::move(rhs)});
        kb.tbox_lines.push_back(lineno);
      } else if (p.at(Tok::Subsumed)) {
        p.take();
        Concept rhs = p.parse_concept_expr();
        p.expect_end();
        kb.inclusions.push_back({std::move(lhs), std::move(rhs), lineno});
      } else {
        p.fail(ParseError::Kind::Syntax, "expected '==' or '<=' in tbox statement");
      }
    } else {
      p.fail(ParseError::Kind::Syntax, "unknown statement '" + head.text + "'");
    }
  }
  return kb;
}

Concept parse_concept(std::string_view text, const Declarations& decls) {
  return parse_single<Concept>(text, decls, [](LineParser& p) { return p.parse_concept_expr(); });
}

Individual parse_individual(std::string_view text, const Declarations& decls) {
  return parse_single<Individual>(text, decls, [](LineParser& p) { return p.individual(); });
}

AboxTerm parse_term(std::string_view text, const Declarations& decls) {
  return parse_single<AboxTerm>(text, decls, [](LineParser& p) {
    bool negated = false;
    if (p.at_ident("not")) {
      p.take();
      negated = true;
    }
    return p.term(negated);
  });
}

std::string write_kb(const KnowledgeBase& kb) {
  std::ostringstream out;
  auto decl = [&out](const char* keyword, const std::set<std::string>& names) {
    for (const auto& n : names) out << keyword << ' ' << n << '\n';
  };
  decl("object", kb.declarations.objects);
  decl("feature", kb.declarations.features);
  decl("boxrel", kb.declarations.box_roles);
  decl("diarel", kb.declarations.dia_roles);
  decl("concept", kb.declarations.concepts);
  for (const AboxTerm& t : kb.abox) out << "abox " << to_string(t) << '\n';
  for (const TboxDefinition& d : kb.tbox) out << "tbox " << to_string(d) << '\n';
  for (const InclusionAxiom& g : kb.inclusions)
    out << "tbox " << to_string(g.lhs) << " <= " << to_string(g.rhs) << '\n';
  return out.str();
}

}  // namespace lealc
