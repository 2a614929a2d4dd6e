#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "frlim/errors.hpp"

namespace frlim {

/// Monomial over the alphabet {f, r}: a nonempty string of 'f' and 'r'.
using FrWord = std::string;

inline void check_fr_word(const FrWord& w) {
  if (w.empty()) throw Error("fr-word must be nonempty");
  for (char c : w)
    if (c != 'f' && c != 'r') throw Error("fr-word letter must be f or r");
}

/// Ideal containment ideal(w) <= ideal(v) for monomial ideals, decided by the
/// scattered-subsequence rule: v embeds into w in order, where the letter r
/// of v must match an r of w and the letter f of v may match either (R < F).
/// The greedy match is correct because dropped letters of w only shrink the
/// ideal further.
inline bool word_contains(const FrWord& w, const FrWord& v) {
  std::size_t i = 0;
  for (char c : v) {
    if (c == 'r') {
      while (i < w.size() && w[i] != 'r') ++i;
      if (i == w.size()) return false;
      ++i;
    } else {
      if (i == w.size()) return false;
      ++i;
    }
  }
  return true;
}

/// A finite sum of monomial ideals, kept as a sorted set of words
/// (lexicographic, f < r).
using FrSentence = std::set<FrWord>;

/// Removes every word whose ideal is contained in the ideal of another word
/// of the set; idempotent.
inline FrSentence normalize(const FrSentence& s) {
  FrSentence out;
  for (const FrWord& w : s) {
    bool dominated = false;
    for (const FrWord& v : s)
      if (v != w && word_contains(w, v)) {
        dominated = true;
        break;
      }
    if (!dominated) out.insert(w);
  }
  return out;
}

/// Abstract syntax of an fr-code expression: leaves f, r and the operations
/// of sum, product (juxtaposition), intersection, and power.
struct FrExpr {
  enum class Kind { Letter, Sum, Product, Intersection, Power };
  Kind kind;
  char letter = 0;                               // Kind::Letter
  std::vector<std::shared_ptr<FrExpr>> children; // Sum/Product/Intersection
  long exponent = 0;                             // Kind::Power (child in children[0])

  static std::shared_ptr<FrExpr> make_letter(char c) {
    auto e = std::make_shared<FrExpr>();
    e->kind = Kind::Letter;
    e->letter = c;
    return e;
  }
  static std::shared_ptr<FrExpr> make_node(
      Kind k, std::vector<std::shared_ptr<FrExpr>> ch) {
    if (ch.size() == 1 && k != Kind::Power) return ch[0];
    auto e = std::make_shared<FrExpr>();
    e->kind = k;
    e->children = std::move(ch);
    return e;
  }
  static std::shared_ptr<FrExpr> make_power(std::shared_ptr<FrExpr> base,
                                            long exp) {
    auto e = std::make_shared<FrExpr>();
    e->kind = Kind::Power;
    e->children = {std::move(base)};
    e->exponent = exp;
    return e;
  }

  bool has_intersection() const {
    if (kind == Kind::Intersection) return true;
    for (const auto& c : children)
      if (c->has_intersection()) return true;
    return false;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Letter:
        return std::string(1, letter);
      case Kind::Power: {
        std::string b = children[0]->to_string();
        if (children[0]->kind != Kind::Letter) b = "(" + b + ")";
        return b + "^" + std::to_string(exponent);
      }
      case Kind::Product: {
        std::string s;
        for (const auto& c : children) {
          std::string t = c->to_string();
          if (c->kind == Kind::Sum || c->kind == Kind::Intersection)
            t = "(" + t + ")";
          s += t;
        }
        return s;
      }
      case Kind::Sum: {
        std::string s;
        for (const auto& c : children) {
          if (!s.empty()) s += "+";
          s += c->to_string();
        }
        return s;
      }
      case Kind::Intersection: {
        std::string s;
        for (const auto& c : children) {
          if (!s.empty()) s += " & ";
          std::string t = c->to_string();
          if (c->kind == Kind::Sum) t = "(" + t + ")";
          s += t;
        }
        return s;
      }
    }
    return "";
  }
};

using FrExprPtr = std::shared_ptr<FrExpr>;

namespace detail {

/// Tokenizer/parser for the fr-code grammar.  Top-level '+' or whitespace is
/// a sum, juxtaposition is a product, '^' is a power, '&' an intersection.
/// "rr frf" and "rr+frf" parse identically.
class FrParser {
 public:
  explicit FrParser(const std::string& text) : text_(text) { tokenize(); }

  FrExprPtr parse() {
    if (tokens_.empty()) throw SyntaxError("empty fr-code", 0);
    FrExprPtr e = parse_sum();
    if (pos_ != tokens_.size())
      throw SyntaxError("unexpected token", tokens_[pos_].pos);
    return e;
  }

 private:
  struct Token {
    enum Kind { Letter, Plus, Ws, Amp, Caret, Number, Open, Close } kind;
    std::size_t pos;
    char letter = 0;
    long value = 0;
  };

  void tokenize() {
    std::vector<Token> raw;
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (c == ' ' || c == '\t') {
        std::size_t start = i;
        while (i < text_.size() && (text_[i] == ' ' || text_[i] == '\t')) ++i;
        raw.push_back({Token::Ws, start});
        continue;
      }
      if (c == 'f' || c == 'r')
        raw.push_back({Token::Letter, i, c});
      else if (c == '+')
        raw.push_back({Token::Plus, i});
      else if (c == '&')
        raw.push_back({Token::Amp, i});
      else if (c == '^')
        raw.push_back({Token::Caret, i});
      else if (c == '(')
        raw.push_back({Token::Open, i});
      else if (c == ')')
        raw.push_back({Token::Close, i});
      else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = i;
        long v = 0;
        while (i < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[i]))) {
          v = v * 10 + (text_[i] - '0');
          ++i;
        }
        raw.push_back({Token::Number, start, 0, v});
        continue;
      } else {
        throw SyntaxError(std::string("invalid character '") + c + "'", i);
      }
      ++i;
    }
    // keep whitespace only between two atoms, where it means '+'
    auto atom_end = [](const Token& t) {
      return t.kind == Token::Letter || t.kind == Token::Number ||
             t.kind == Token::Close;
    };
    auto atom_start = [](const Token& t) {
      return t.kind == Token::Letter || t.kind == Token::Open;
    };
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k].kind == Token::Ws) {
        bool keep = k > 0 && k + 1 < raw.size() && atom_end(raw[k - 1]) &&
                    atom_start(raw[k + 1]);
        if (!keep) continue;
      }
      tokens_.push_back(raw[k]);
    }
    if (tokens_.empty() && !raw.empty())
      throw SyntaxError("empty fr-code", 0);
  }

  bool at(typename Token::Kind k) const {
    return pos_ < tokens_.size() && tokens_[pos_].kind == k;
  }

  FrExprPtr parse_sum() {
    std::vector<FrExprPtr> terms = {parse_intersection()};
    while (at(Token::Plus) || at(Token::Ws)) {
      ++pos_;
      terms.push_back(parse_intersection());
    }
    return FrExpr::make_node(FrExpr::Kind::Sum, std::move(terms));
  }

  FrExprPtr parse_intersection() {
    std::vector<FrExprPtr> terms = {parse_product()};
    while (at(Token::Amp)) {
      ++pos_;
      terms.push_back(parse_product());
    }
    return FrExpr::make_node(FrExpr::Kind::Intersection, std::move(terms));
  }

  FrExprPtr parse_product() {
    std::vector<FrExprPtr> factors = {parse_power()};
    while (at(Token::Letter) || at(Token::Open))
      factors.push_back(parse_power());
    return FrExpr::make_node(FrExpr::Kind::Product, std::move(factors));
  }

  FrExprPtr parse_power() {
    FrExprPtr base = parse_atom();
    if (at(Token::Caret)) {
      std::size_t cpos = tokens_[pos_].pos;
      ++pos_;
      if (!at(Token::Number))
        throw SyntaxError("expected integer exponent", cpos + 1);
      long e = tokens_[pos_].value;
      if (e < 1) throw SyntaxError("power exponent must be >= 1",
                                   tokens_[pos_].pos);
      ++pos_;
      return FrExpr::make_power(std::move(base), e);
    }
    return base;
  }

  FrExprPtr parse_atom() {
    if (at(Token::Letter)) {
      char c = tokens_[pos_].letter;
      ++pos_;
      return FrExpr::make_letter(c);
    }
    if (at(Token::Open)) {
      ++pos_;
      FrExprPtr e = parse_sum();
      if (!at(Token::Close))
        throw SyntaxError("expected ')'",
                          pos_ < tokens_.size() ? tokens_[pos_].pos
                                                : text_.size());
      ++pos_;
      return e;
    }
    throw SyntaxError("expected f, r or '('", pos_ < tokens_.size()
                                                  ? tokens_[pos_].pos
                                                  : text_.size());
  }

  const std::string& text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FrExprPtr parse_fr_expr(const std::string& text) {
  return detail::FrParser(text).parse();
}

/// Expands an intersection-free expression into its sentence (sum of
/// monomials).  Throws on intersections: those have no monomial expansion.
inline FrSentence expand_to_sentence(const FrExpr& e) {
  switch (e.kind) {
    case FrExpr::Kind::Letter:
      return {std::string(1, e.letter)};
    case FrExpr::Kind::Sum: {
      FrSentence out;
      for (const auto& c : e.children) {
        FrSentence s = expand_to_sentence(*c);
        out.insert(s.begin(), s.end());
      }
      return out;
    }
    case FrExpr::Kind::Product: {
      FrSentence acc = {""};
      for (const auto& c : e.children) {
        FrSentence s = expand_to_sentence(*c);
        FrSentence next;
        for (const FrWord& a : acc)
          for (const FrWord& b : s) next.insert(a + b);
        acc = std::move(next);
      }
      return acc;
    }
    case FrExpr::Kind::Power: {
      FrSentence base = expand_to_sentence(*e.children[0]);
      FrSentence acc = base;
      for (long k = 1; k < e.exponent; ++k) {
        FrSentence next;
        for (const FrWord& a : acc)
          for (const FrWord& b : base) next.insert(a + b);
        acc = std::move(next);
      }
      return acc;
    }
    case FrExpr::Kind::Intersection:
      throw Error("intersection has no monomial expansion");
  }
  throw Error("unreachable");
}

inline FrSentence parse_sentence(const std::string& text) {
  return normalize(expand_to_sentence(*parse_fr_expr(text)));
}

}  // namespace frlim
