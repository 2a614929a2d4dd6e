#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "frlim/errors.hpp"

namespace frlim {

/// Freely reduced word in a free group.  Letters are nonzero signed generator
/// indices (1-based): +i is generator i-1, -i its inverse.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters) { append(letters); }
  static FreeWord generator(int index, int sign = 1) {
    FreeWord w;
    w.letters_.push_back(sign >= 0 ? index + 1 : -(index + 1));
    return w;
  }

  const std::vector<int>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  FreeWord operator*(const FreeWord& o) const {
    FreeWord w = *this;
    w.append(o.letters_);
    return w;
  }

  FreeWord inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(-*it);
    return w;
  }

  FreeWord pow(long e) const {
    FreeWord base = e >= 0 ? *this : inverse();
    long n = std::labs(e);
    FreeWord w;
    for (long k = 0; k < n; ++k) w = w * base;
    return w;
  }

  FreeWord conjugated_by(const FreeWord& g) const {
    return g * (*this) * g.inverse();
  }

  /// Largest generator index used, plus one (0 for the identity).
  int min_generator_count() const {
    int m = 0;
    for (int l : letters_) m = std::max(m, std::abs(l));
    return m;
  }

  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const FreeWord& o) const { return letters_ != o.letters_; }
  bool operator<(const FreeWord& o) const { return letters_ < o.letters_; }

  std::string to_string(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      int l = letters_[k];
      std::size_t g = static_cast<std::size_t>(std::abs(l)) - 1;
      if (!s.empty()) s += "*";
      s += g < names.size() ? names[g] : "g" + std::to_string(g);
      // collapse runs for readability
      long e = l > 0 ? 1 : -1;
      while (k + 1 < letters_.size() && letters_[k + 1] == l) {
        e += l > 0 ? 1 : -1;
        ++k;
      }
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  void append(const std::vector<int>& ls) {
    for (int l : ls) {
      if (l == 0) throw InvalidGenerator("zero letter in word");
      if (!letters_.empty() && letters_.back() == -l)
        letters_.pop_back();
      else
        letters_.push_back(l);
    }
  }

  std::vector<int> letters_;
};

/// Parses the documented word grammar: identifiers, '*' concatenation,
/// '^' integer exponents, parentheses.  Example: "x*y*x^-1*y^-1".
FreeWord parse_word(const std::string& text,
                    const std::vector<std::string>& generator_names);

namespace detail {

class WordParser {
 public:
  WordParser(const std::string& text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  FreeWord parse() {
    skip_ws();
    if (eof()) throw SyntaxError("empty word", 0);
    FreeWord w = parse_product();
    skip_ws();
    if (!eof()) throw SyntaxError("unexpected character", pos_);
    return w;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  FreeWord parse_product() {
    FreeWord w = parse_factor();
    while (true) {
      skip_ws();
      if (eof() || peek() != '*') return w;
      ++pos_;
      skip_ws();
      w = w * parse_factor();
    }
  }

  FreeWord parse_factor() {
    skip_ws();
    if (eof()) throw SyntaxError("expected word factor", pos_);
    FreeWord base;
    if (peek() == '(') {
      ++pos_;
      base = parse_product();
      skip_ws();
      if (eof() || peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
    } else {
      base = parse_atom();
    }
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      bool neg = false;
      if (!eof() && (peek() == '-' || peek() == '+')) {
        neg = peek() == '-';
        ++pos_;
      }
      long e = 0;
      bool any = false;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + (peek() - '0');
        ++pos_;
        any = true;
      }
      if (!any) throw SyntaxError("expected integer exponent", start);
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  FreeWord parse_atom() {
    std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      throw SyntaxError("expected generator name", pos_);
    std::string id;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_' || peek() == '.'))
      id += text_[pos_++];
    for (std::size_t g = 0; g < names_.size(); ++g)
      if (names_[g] == id) return FreeWord::generator(static_cast<int>(g));
    throw SyntaxError("unknown generator '" + id + "'", start);
  }

  const std::string& text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FreeWord parse_word(const std::string& text,
                           const std::vector<std::string>& generator_names) {
  return detail::WordParser(text, generator_names).parse();
}

}  // namespace frlim
