#include "fp2/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace fp2 {

namespace {

std::string position_message(const std::string& message, int line, int column) {
  std::ostringstream os;
  os << "parse error at " << line << ':' << column << ": " << message;
  return os.str();
}

enum class TokenKind {
  kLowerIdent,
  kVariable,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kPipe,
  kDot,
  kImplies,  // :-
  kEquals,
  kSlash,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    for (;;) {
      skip_blanks();
      Token t = next_token();
      out.push_back(t);
      if (t.kind == TokenKind::kEnd) break;
    }
    return out;
  }

 private:
  void skip_blanks() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
  }

  Token next_token() {
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= text_.size()) {
      t.kind = TokenKind::kEnd;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      t.text = std::string(text_.substr(start, pos_ - start));
      t.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_')
                   ? TokenKind::kVariable
                   : TokenKind::kLowerIdent;
      return t;
    }
    auto single = [&](TokenKind k) {
      t.kind = k;
      t.text = std::string(1, c);
      ++pos_;
      ++col_;
      return t;
    };
    switch (c) {
      case '(': return single(TokenKind::kLParen);
      case ')': return single(TokenKind::kRParen);
      case '[': return single(TokenKind::kLBracket);
      case ']': return single(TokenKind::kRBracket);
      case ',': return single(TokenKind::kComma);
      case '|': return single(TokenKind::kPipe);
      case '.': return single(TokenKind::kDot);
      case '=': return single(TokenKind::kEquals);
      case '/': return single(TokenKind::kSlash);
      case ':':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
          t.kind = TokenKind::kImplies;
          t.text = ":-";
          pos_ += 2;
          col_ += 2;
          return t;
        }
        throw ParseError("expected ':-'", line_, col_);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_, col_);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).tokenize()) {
    for (const Token& t : tokens_)
      if (t.kind == TokenKind::kVariable) seen_names_.insert(t.text);
  }

  Program parse_program() {
    Program p;
    while (peek().kind != TokenKind::kEnd) p.rules.push_back(parse_rule());
    return p;
  }

  Atom parse_query_atom() {
    if (peek().kind == TokenKind::kLowerIdent && peek().text == "not" &&
        !next_is_lparen())
      fail("a query must be a positive atom");
    Term t = parse_term();
    if (peek().kind == TokenKind::kEquals)
      fail("'=' is not allowed in a query atom");
    Atom a = to_atom(t, peek());
    expect(TokenKind::kEnd, "end of input");
    return a;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = index_ + ahead;
    if (i >= tokens_.size()) i = tokens_.size() - 1;
    return tokens_[i];
  }

  bool next_is_lparen() const { return peek(1).kind == TokenKind::kLParen; }

  Token take() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw ParseError(message, t.line, t.column);
  }

  Token expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what);
    return take();
  }

  Rule parse_rule() {
    Rule r;
    Literal head = parse_literal();
    if (head.negative) fail("a rule head cannot be negated");
    if (is_builtin_eq(head.atom)) fail("the built-in '=' cannot be redefined");
    r.head = head.atom;
    if (peek().kind == TokenKind::kImplies) {
      take();
      r.body.push_back(parse_literal());
      while (peek().kind == TokenKind::kComma) {
        take();
        r.body.push_back(parse_literal());
      }
    }
    expect(TokenKind::kDot, "'.'");
    return r;
  }

  Literal parse_literal() {
    Literal l;
    if (peek().kind == TokenKind::kLowerIdent && peek().text == "not" &&
        !next_is_lparen()) {
      take();
      l.negative = true;
    }
    Term t = parse_term();
    if (peek().kind == TokenKind::kEquals) {
      Token eq = take();
      (void)eq;
      Term u = parse_term();
      l.atom = Atom{kEqPredicate, {std::move(t), std::move(u)}};
      return l;
    }
    l.atom = to_atom(t, peek());
    return l;
  }

  Atom to_atom(const Term& t, const Token& at) const {
    if (t.is_variable())
      throw ParseError("a variable cannot be used as an atom", at.line, at.column);
    if (t.name() == "/")
      throw ParseError("expected an atom", at.line, at.column);
    return Atom{t.name(), t.args()};
  }

  Term parse_term() {
    Term t = parse_primary();
    while (peek().kind == TokenKind::kSlash) {
      take();
      Term u = parse_primary();
      t = Term::function("/", {std::move(t), std::move(u)});
    }
    return t;
  }

  Term parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kVariable: {
        Token v = take();
        if (v.text == "_") return Term::variable(fresh_anonymous());
        return Term::variable(v.text);
      }
      case TokenKind::kLowerIdent: {
        Token f = take();
        if (peek().kind != TokenKind::kLParen) return Term::constant(f.text);
        take();  // '('
        std::vector<Term> args;
        args.push_back(parse_term());
        while (peek().kind == TokenKind::kComma) {
          take();
          args.push_back(parse_term());
        }
        expect(TokenKind::kRParen, "')'");
        return Term::function(f.text, std::move(args));
      }
      case TokenKind::kLBracket:
        return parse_list();
      default:
        fail("expected a term");
    }
  }

  Term parse_list() {
    expect(TokenKind::kLBracket, "'['");
    if (peek().kind == TokenKind::kRBracket) {
      take();
      return make_nil();
    }
    std::vector<Term> elements;
    elements.push_back(parse_term());
    while (peek().kind == TokenKind::kComma) {
      take();
      elements.push_back(parse_term());
    }
    Term tail = make_nil();
    if (peek().kind == TokenKind::kPipe) {
      take();
      tail = parse_term();
    }
    expect(TokenKind::kRBracket, "']'");
    Term list = std::move(tail);
    for (auto it = elements.rbegin(); it != elements.rend(); ++it)
      list = make_cons(std::move(*it), std::move(list));
    return list;
  }

  std::string fresh_anonymous() {
    for (;;) {
      std::string name = "_A" + std::to_string(++anon_counter_);
      if (seen_names_.insert(name).second) return name;
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  std::set<std::string> seen_names_;
  int anon_counter_ = 0;
};

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(position_message(message, line, column)),
      line_(line),
      column_(column) {}

Program parse_program(std::string_view text) {
  return Parser(text).parse_program();
}

Atom parse_atom(std::string_view text) {
  return Parser(text).parse_query_atom();
}

}  // namespace fp2
