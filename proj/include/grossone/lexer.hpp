#ifndef GROSSONE_LEXER_HPP
#define GROSSONE_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "grossone/error.hpp"

namespace grossone {

enum class TokenKind {
  DecimalLit,
  Grossone,
  Ident,
  Keyword,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semicolon,
  Assign,
  Less,
  LessEqual,
  Greater,
  GreaterEqual,
  End,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  SourcePos pos;
};

inline bool is_keyword(std::string_view word) {
  return word == "let" || word == "def" || word == "if" || word == "set";
}

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string_view input) : in_(input) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (at_end()) break;
      out.push_back(next());
    }
    out.push_back(Token{TokenKind::End, "", pos_});
    return out;
  }

 private:
  bool at_end() const { return i_ >= in_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < in_.size() ? in_[i_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return in_.substr(i_, s.size()) == s; }

  // Advances one code point and keeps line/column in step.
  void advance() {
    if (in_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
      ++i_;
      return;
    }
    i_ += utf8_length(static_cast<unsigned char>(in_[i_]));
    if (i_ > in_.size()) i_ = in_.size();
    ++pos_.column;
  }

  static std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xE) return 3;
    if ((lead >> 3) == 0x1E) return 4;
    return 1;
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

  void skip_space_and_comments() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token symbol(TokenKind kind, std::string_view text) {
    Token t{kind, std::string(text), pos_};
    for (std::size_t n = 0; n < text.size();) {
      std::size_t len = utf8_length(static_cast<unsigned char>(text[n]));
      n += len;
      advance();
    }
    return t;
  }

  Token number() {
    Token t{TokenKind::DecimalLit, "", pos_};
    std::size_t begin = i_;
    while (is_digit(peek())) advance();
    if (peek() == '.') {
      if (!is_digit(peek(1)))
        throw ParseError(ErrorKind::MalformedNumber, pos_, "malformed number: '.' without digits");
      advance();
      while (is_digit(peek())) advance();
      if (peek() == '.')
        throw ParseError(ErrorKind::MalformedNumber, pos_, "malformed number: second '.'");
    }
    t.lexeme = std::string(in_.substr(begin, i_ - begin));
    return t;
  }

  Token next() {
    char c = peek();
    if (is_digit(c)) return number();
    if (is_ident_start(c)) {
      Token t{TokenKind::Ident, "", pos_};
      std::size_t begin = i_;
      while (is_ident_char(peek())) advance();
      t.lexeme = std::string(in_.substr(begin, i_ - begin));
      if (t.lexeme == "G1") t.kind = TokenKind::Grossone;
      else if (is_keyword(t.lexeme)) t.kind = TokenKind::Keyword;
      return t;
    }
    if (starts_with("①")) return symbol(TokenKind::Grossone, "①");
    if (starts_with("−")) return symbol(TokenKind::Minus, "−");
    if (starts_with("·")) return symbol(TokenKind::Star, "·");
    if (starts_with("≤")) return symbol(TokenKind::LessEqual, "≤");
    if (starts_with("≥")) return symbol(TokenKind::GreaterEqual, "≥");
    if (starts_with("<=")) return symbol(TokenKind::LessEqual, "<=");
    if (starts_with(">=")) return symbol(TokenKind::GreaterEqual, ">=");
    switch (c) {
      case '+': return symbol(TokenKind::Plus, "+");
      case '-': return symbol(TokenKind::Minus, "-");
      case '*': return symbol(TokenKind::Star, "*");
      case '/': return symbol(TokenKind::Slash, "/");
      case '^': return symbol(TokenKind::Caret, "^");
      case '(': return symbol(TokenKind::LParen, "(");
      case ')': return symbol(TokenKind::RParen, ")");
      case '{': return symbol(TokenKind::LBrace, "{");
      case '}': return symbol(TokenKind::RBrace, "}");
      case ',': return symbol(TokenKind::Comma, ",");
      case ';': return symbol(TokenKind::Semicolon, ";");
      case '=': return symbol(TokenKind::Assign, "=");
      case '<': return symbol(TokenKind::Less, "<");
      case '>': return symbol(TokenKind::Greater, ">");
      default: break;
    }
    std::size_t len = utf8_length(static_cast<unsigned char>(c));
    throw ParseError(ErrorKind::UnknownCharacter, pos_,
                     "unknown character '" + std::string(in_.substr(i_, len)) + "'");
  }

  std::string_view in_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace detail

/// Splits UTF-8 text into tokens; the last token is always End.
/// G1 and U+2460 both lex as Grossone. '#' starts a comment.
inline std::vector<Token> lex(std::string_view input) { return detail::Lexer(input).run(); }

}  // namespace grossone

#endif  // GROSSONE_LEXER_HPP
