// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.
//
// Parser for the printed notation of the symbolic tables: sums of terms
// such as "1/2", "-b", "2a", "1/2a" and "(1+a-b)/2".

#include <cctype>
#include <stdexcept>
#include <string>

#include "oracles.hpp"
#include "parse_detail.hpp"

namespace tilesym::oracle {

namespace {

class LinearParser {
 public:
  LinearParser(std::string_view text, char v1, char v2)
      : text_(text), v1_(v1), v2_(v2) {}

  AffineForm ParseAll() {
    AffineForm f = ParseSum();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw std::invalid_argument(what + " in '" + std::string(text_) + "'");
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }
  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  int64_t ParseInt() {
    SkipSpace();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected integer");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  AffineForm ParseSum() {
    AffineForm total;
    bool first = true;
    while (!AtEnd() && Peek() != ')') {
      Fraction sign = 1;
      char c = Peek();
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        Fail("expected + or -");
      }
      total = total + sign * ParseTerm();
      first = false;
    }
    if (first) Fail("empty expression");
    return total;
  }

  AffineForm ParseTerm() {
    char c = Peek();
    if (c == '(') {
      ++pos_;
      AffineForm inner = ParseSum();
      if (Peek() != ')') Fail("expected )");
      ++pos_;
      if (Peek() == '/') {
        ++pos_;
        inner = Fraction(1, ParseInt()) * inner;
      }
      return inner;
    }
    Fraction coef = 1;
    bool has_number = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      has_number = true;
      int64_t n = ParseInt();
      int64_t d = 1;
      if (Peek() == '/') {
        ++pos_;
        d = ParseInt();
      }
      coef = Fraction(n, d);
    }
    c = Peek();
    if (c == v1_) {
      ++pos_;
      return {0, coef, 0};
    }
    if (c == v2_) {
      ++pos_;
      return {0, 0, coef};
    }
    if (!has_number) Fail("expected a term");
    return {coef, 0, 0};
  }

  std::string_view text_;
  char v1_;
  char v2_;
  size_t pos_ = 0;
};

}  // namespace

AffineForm ParseLinear(std::string_view text, char v1, char v2) {
  return LinearParser(text, v1, v2).ParseAll();
}

std::vector<std::string_view> SplitTopLevel(std::string_view text,
                                            std::string_view separators,
                                            bool keep_separator) {
  std::vector<std::string_view> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && separators.find(c) != std::string_view::npos && i > start) {
      parts.push_back(text.substr(start, i - start));
      start = keep_separator ? i : i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

AffinePoint ParseAffinePointText(std::string_view text) {
  text = Trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("expected (x, y): " + std::string(text));
  }
  auto parts = SplitTopLevel(text.substr(1, text.size() - 2), ",", false);
  if (parts.size() != 2) throw std::invalid_argument("expected two coordinates");
  return ParseAffinePoint(parts[0], parts[1]);
}

AffineForm ParseAffineForm(std::string_view text) {
  return ParseLinear(text, 'a', 'b');
}

AffinePoint ParseAffinePoint(std::string_view x, std::string_view y) {
  return {ParseAffineForm(x), ParseAffineForm(y)};
}

}  // namespace tilesym::oracle
