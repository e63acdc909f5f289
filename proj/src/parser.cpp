/* Copyright 2026 The Ultra Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Term syntax:
//
//   term    := 'lam' ident ':' type '.' term | element+
//   element := numeral | ident | constant
//            | '(' term ')' | '(' 'cert' numeral numeral term ')'
//   type    := ('0' | '1' | '2') ('(' type ')')*
//
// Application is left associative; a lambda body extends to the closing
// parenthesis. 'λ' and '\' are accepted for 'lam'. ';' starts a comment.

#include <cctype>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ultra/error.hpp"
#include "ultra/term.hpp"

namespace ultra {
namespace {

enum class Tok { kLParen, kRParen, kDot, kColon, kNum, kIdent, kLam, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t value = 0;
  int line = 1;
  int col = 1;
};

[[noreturn]] void fail_at(int line, int col, const std::string& what) {
  throw Error(ErrorKind::kParseError, std::to_string(line) + ":" +
                                          std::to_string(col) + ": " + what);
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const unsigned char c = src[i];
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == ';') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token tok{Tok::kEnd, {}, 0, line, col};
    if (c == '(' || c == ')' || c == '.' || c == ':') {
      tok.kind = c == '(' ? Tok::kLParen
                 : c == ')' ? Tok::kRParen
                 : c == '.' ? Tok::kDot
                            : Tok::kColon;
      tok.text = std::string(1, static_cast<char>(c));
      advance(1);
    } else if (c == '\\') {
      tok.kind = Tok::kLam;
      tok.text = "\\";
      advance(1);
    } else if (src.substr(i, 2) == "\xce\xbb") {  // λ
      tok.kind = Tok::kLam;
      tok.text = "lam";
      i += 2;
      ++col;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      std::uint64_t v = 0;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        const std::uint64_t d = src[j] - '0';
        if (v > (UINT64_MAX - d) / 10) fail_at(line, col, "numeral too large");
        v = v * 10 + d;
        ++j;
      }
      tok.kind = Tok::kNum;
      tok.value = v;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_' || src[j] == '\'')) {
        ++j;
      }
      tok.text = std::string(src.substr(i, j - i));
      tok.kind = tok.text == "lam" ? Tok::kLam : Tok::kIdent;
      advance(j - i);
    } else {
      fail_at(line, col, std::string("unexpected character '") +
                             static_cast<char>(c) + "'");
    }
    out.push_back(std::move(tok));
  }
  out.push_back({Tok::kEnd, "<end>", 0, line, col});
  return out;
}

const std::unordered_map<std::string, Constant>& constants() {
  static const auto* table = [] {
    auto* m = new std::unordered_map<std::string, Constant>();
    for (Constant c :
         {Constant::kSucc, Constant::kRec, Constant::kU, Constant::kK,
          Constant::kMu, Constant::kAdd, Constant::kSub, Constant::kMul,
          Constant::kMod, Constant::kMin, Constant::kMax, Constant::kEq,
          Constant::kLt, Constant::kLe, Constant::kAnd, Constant::kOr,
          Constant::kNot, Constant::kIf}) {
      m->emplace(std::string(constant_name(c)), c);
    }
    return m;
  }();
  return *table;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  TermPtr parse_program() {
    TermPtr t = parse_seq();
    expect(Tok::kEnd, "end of input");
    return t;
  }

  FinType parse_type_program() {
    FinType t = parse_type();
    expect(Tok::kEnd, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail_at(peek().line, peek().col,
              std::string("expected ") + what + ", found '" + peek().text +
                  "'");
    }
    return next();
  }

  TermPtr parse_seq() {
    if (peek().kind == Tok::kLam) {
      next();
      Token name = expect(Tok::kIdent, "parameter name");
      if (constants().count(name.text) || name.text == "cert") {
        fail_at(name.line, name.col,
                "'" + name.text + "' is reserved and cannot be bound");
      }
      expect(Tok::kColon, "':'");
      FinType type = parse_type();
      expect(Tok::kDot, "'.'");
      return make_lam(name.text, std::move(type), parse_seq());
    }
    std::optional<TermPtr> acc;
    while (peek().kind == Tok::kNum || peek().kind == Tok::kIdent ||
           peek().kind == Tok::kLParen) {
      TermPtr e = parse_element();
      acc = acc ? make_app(*acc, e) : e;
    }
    if (!acc) {
      fail_at(peek().line, peek().col,
              "expected a term, found '" + peek().text + "'");
    }
    return *acc;
  }

  TermPtr parse_element() {
    Token tok = next();
    switch (tok.kind) {
      case Tok::kNum:
        return make_num(tok.value);
      case Tok::kIdent: {
        if (tok.text == "cert") {
          fail_at(tok.line, tok.col, "'cert' must open a parenthesis");
        }
        auto it = constants().find(tok.text);
        if (it != constants().end()) return make_const(it->second);
        return make_var(tok.text);
      }
      case Tok::kLParen: {
        if (peek().kind == Tok::kIdent && peek().text == "cert") {
          next();
          const auto threshold = expect(Tok::kNum, "certificate threshold");
          const auto period = expect(Tok::kNum, "certificate period");
          TermPtr fn = parse_seq();
          expect(Tok::kRParen, "')'");
          return make_cert(threshold.value, period.value, fn);
        }
        TermPtr t = parse_seq();
        expect(Tok::kRParen, "')'");
        return t;
      }
      default:
        fail_at(tok.line, tok.col, "unexpected '" + tok.text + "'");
    }
  }

  FinType parse_type() {
    Token tok = expect(Tok::kNum, "type");
    FinType t;
    if (tok.value == 1) {
      t = FinType::one();
    } else if (tok.value == 2) {
      t = FinType::two();
    } else if (tok.value != 0 || tok.text.size() != 1) {
      fail_at(tok.line, tok.col, "type must start with 0, 1 or 2");
    }
    while (peek().kind == Tok::kLParen) {
      next();
      FinType arg = parse_type();
      expect(Tok::kRParen, "')'");
      t = FinType::arrow(t, arg);
    }
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text) {
  return Parser(lex(text)).parse_program();
}

FinType parse_type(std::string_view text) {
  return Parser(lex(text)).parse_type_program();
}

}  // namespace ultra
