#include "ciore/parser.hpp"

#include <algorithm>
#include <cctype>

namespace ciore {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Tilde, Amp, Bar, Arrow, Iff, Turnstile, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_id_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_id = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_id_start(c)) {
      while (i < s.size() && is_id(s[i])) ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
      continue;
    }
    auto starts = [&](const char* lit) { return s.compare(i, std::char_traits<char>::length(lit), lit) == 0; };
    if (starts("<->")) {
      out.push_back({Tok::Iff, "<->", start});
      i += 3;
    } else if (starts("->")) {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
    } else if (starts("|-")) {
      out.push_back({Tok::Turnstile, "|-", start});
      i += 2;
    } else {
      Tok k;
      switch (c) {
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ',': k = Tok::Comma; break;
        case '.': k = Tok::Dot; break;
        case '~': k = Tok::Tilde; break;
        case '&': k = Tok::Amp; break;
        case '|': k = Tok::Bar; break;
        default:
          throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i));
      }
      out.push_back({k, std::string(1, c), start});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& id) { return id == "o" || id == "forall" || id == "exists"; }

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Formula formula() { return iff(); }

  Sequent sequent() {
    Sequent s;
    if (peek().kind != Tok::Turnstile) list(s.ante);
    expect(Tok::Turnstile, "'|-'");
    if (peek().kind != Tok::End) list(s.succ);
    return s;
  }

  Term term() {
    const Token& t = expect(Tok::Ident, "a term");
    if (peek().kind == Tok::LParen) {
      next();
      std::vector<Term> args;
      args.push_back(term());
      while (peek().kind == Tok::Comma) {
        next();
        args.push_back(term());
      }
      expect(Tok::RParen, "')'");
      return Term::apply(t.text, std::move(args));
    }
    if (std::find(scope_.begin(), scope_.end(), t.text) != scope_.end()) return Term::bound_var(t.text);
    if (is_free_var_name(t.text)) return Term::free_var(t.text);
    if (t.text.size() > 1 && t.text[0] == 'a' && std::all_of(t.text.begin() + 1, t.text.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      fail("malformed free variable " + t.text, t);
    return Term::constant(t.text);
  }

  void finish() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg + " at offset " + std::to_string(at.pos));
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what, peek());
    return next();
  }

  void list(FormulaSet& out) {
    out.insert(formula());
    while (peek().kind == Tok::Comma) {
      next();
      out.insert(formula());
    }
  }

  Formula iff() {
    Formula l = imp();
    if (peek().kind == Tok::Iff) {
      next();
      Formula r = imp();
      return Formula::iff(l, r);
    }
    return l;
  }

  Formula imp() {
    Formula l = disj();
    if (peek().kind == Tok::Arrow) {
      next();
      return Formula::imp(l, imp());
    }
    return l;
  }

  Formula disj() {
    Formula l = conj();
    while (peek().kind == Tok::Bar) {
      next();
      l = Formula::disj(l, conj());
    }
    return l;
  }

  Formula conj() {
    Formula l = unary();
    while (peek().kind == Tok::Amp) {
      next();
      l = Formula::conj(l, unary());
    }
    return l;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        next();
        return Formula::neg(unary());
      case Tok::LParen: {
        next();
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident:
        break;
      default:
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
    }
    next();
    if (t.text == "o") return Formula::circ(unary());
    if (t.text == "forall" || t.text == "exists") {
      const Token& v = expect(Tok::Ident, "a bound variable");
      if (is_free_var_name(v.text) || is_keyword(v.text)) fail("cannot bind " + v.text, v);
      if (std::find(scope_.begin(), scope_.end(), v.text) != scope_.end()) fail("nested rebinding of " + v.text, v);
      expect(Tok::Dot, "'.'");
      scope_.push_back(v.text);
      Formula body = formula();
      scope_.pop_back();
      return Formula::quantified(t.text == "forall" ? Quantifier::Forall : Quantifier::Exists, v.text, body);
    }
    if (std::isupper(static_cast<unsigned char>(t.text[0]))) {
      expect(Tok::LParen, "'(' after a predicate name");
      std::vector<Term> args;
      args.push_back(term());
      while (peek().kind == Tok::Comma) {
        next();
        args.push_back(term());
      }
      expect(Tok::RParen, "')'");
      return Formula::pred(t.text, std::move(args));
    }
    if (peek().kind == Tok::LParen) fail("propositional atom " + t.text + " takes no arguments", t);
    return Formula::atom(t.text);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::vector<std::string> scope_;
};

int prec(const Formula& f) {
  switch (f.op()) {
    case Connective::Imp:
      return 1;
    case Connective::Or:
      return 2;
    case Connective::And:
      return 3;
    case Connective::Forall:
    case Connective::Exists:
      return 0;
    default:
      return 4;
  }
}

std::string print(const Formula& f);

std::string operand(const Formula& g) {
  if (g.is_binary() || g.is_quantifier()) return "(" + print(g) + ")";
  return print(g);
}

std::string print(const Formula& f) {
  switch (f.op()) {
    case Connective::PropAtom:
      return f.name();
    case Connective::PredAtom: {
      std::string s = f.name() + "(";
      for (std::size_t i = 0; i < f.terms().size(); ++i) s += (i ? ", " : "") + to_string(f.terms()[i]);
      return s + ")";
    }
    case Connective::Neg:
      return "~" + operand(f.sub());
    case Connective::Circ:
      return "o " + operand(f.sub());
    case Connective::Forall:
    case Connective::Exists: {
      std::string body = print(f.sub());
      return (f.op() == Connective::Forall ? "forall " : "exists ") + f.name() + ". " + body;
    }
    default: {
      const int p = prec(f);
      const bool right_assoc = f.op() == Connective::Imp;
      const Formula& l = f.left();
      const Formula& r = f.right();
      bool lp = prec(l) < p || (prec(l) == p && right_assoc);
      bool rp = prec(r) < p || (prec(r) == p && !right_assoc);
      std::string ls = lp ? "(" + print(l) + ")" : print(l);
      std::string rs = rp ? "(" + print(r) + ")" : print(r);
      const char* sym = f.op() == Connective::And ? " & " : f.op() == Connective::Or ? " | " : " -> ";
      return ls + sym + rs;
    }
  }
}

}  // namespace

Formula parse_formula(const std::string& text) {
  try {
    Parser p(text);
    Formula f = p.formula();
    p.finish();
    check_well_formed(f);
    return f;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Sequent parse_sequent(const std::string& text) {
  try {
    Parser p(text);
    Sequent s = p.sequent();
    p.finish();
    std::vector<Formula> all = formulas_of(s);
    for (const auto& f : all) check_well_formed(f);
    infer_signature(all).validate();
    return s;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Term parse_term(const std::string& text) {
  try {
    Parser p(text);
    Term t = p.term();
    p.finish();
    return t;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const Term& t) {
  if (t.kind() != TermKind::FunApp) return t.name();
  std::string s = t.name() + "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) s += (i ? ", " : "") + to_string(t.args()[i]);
  return s + ")";
}

std::string to_string(const Formula& f) { return print(f); }

std::string to_string(const Sequent& s) {
  auto join = [](const FormulaSet& fs) {
    std::string out;
    for (const auto& f : fs) out += (out.empty() ? "" : ", ") + print(f);
    return out;
  };
  std::string a = join(s.ante), b = join(s.succ);
  std::string out = a.empty() ? "|-" : a + " |-";
  if (!b.empty()) out += " " + b;
  return out;
}

}  // namespace ciore
