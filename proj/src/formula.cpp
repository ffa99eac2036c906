#include "ucalc/formula.hpp"

#include <cctype>

#include "ucalc/error.hpp"

namespace ucalc {

struct Formula::Node {
  Kind kind;
  std::string name;                        // Atom
  std::vector<Formula> children;           // Not: 1, binary: 2

  Node(Kind k, std::string n, std::vector<Formula> c)
      : kind(k), name(std::move(n)), children(std::move(c)) {}
};

Formula Formula::make(Kind kind, std::string name,
                      std::vector<Formula> children) {
  return Formula(
      std::make_shared<Node>(kind, std::move(name), std::move(children)));
}

Formula Formula::top() { return make(Kind::Top, {}, {}); }
Formula Formula::bottom() { return make(Kind::Bottom, {}, {}); }

Formula Formula::atom(std::string name) {
  return make(Kind::Atom, std::move(name), {});
}

Formula Formula::negation(Formula f) {
  return make(Kind::Not, {}, {std::move(f)});
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Kind::And, {}, {std::move(lhs), std::move(rhs)});
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Kind::Or, {}, {std::move(lhs), std::move(rhs)});
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Kind::Implies, {}, {std::move(lhs), std::move(rhs)});
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return make(Kind::Iff, {}, {std::move(lhs), std::move(rhs)});
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const {
  if (kind() != Kind::Atom) throw Error("not an atom");
  return node_->name;
}

const Formula& Formula::child() const {
  if (node_->children.size() != 1) throw Error("not a unary formula");
  return node_->children[0];
}

const Formula& Formula::lhs() const {
  if (node_->children.size() != 2) throw Error("not a binary formula");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() != 2) throw Error("not a binary formula");
  return node_->children[1];
}

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  auto seen = [&out](const std::string& name) {
    for (const auto& a : out)
      if (a == name) return true;
    return false;
  };
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* node = stack.back();
    stack.pop_back();
    if (node->kind == Kind::Atom) {
      if (!seen(node->name)) out.push_back(node->name);
    }
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it)
      stack.push_back(it->node_.get());
  }
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.node_->name != b.node_->name) return false;
  if (a.node_->children.size() != b.node_->children.size()) return false;
  for (std::size_t i = 0; i < a.node_->children.size(); ++i)
    if (!(a.node_->children[i] == b.node_->children[i])) return false;
  return true;
}

namespace {

// ---------------------------------------------------------------------------
// Parser

enum class Tok { End, LParen, RParen, Not, And, Or, Implies, Iff,
                 True, False, Ident };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, "", start};
      return;
    }
    const char c = text_[pos_];
    auto emit = [&](Tok kind, std::size_t len) {
      current_ = {kind, std::string(text_.substr(start, len)), start};
      pos_ += len;
    };
    switch (c) {
      case '(': emit(Tok::LParen, 1); return;
      case ')': emit(Tok::RParen, 1); return;
      case '!': emit(Tok::Not, 1); return;
      case '&': emit(Tok::And, 1); return;
      case '|': emit(Tok::Or, 1); return;
      case '-':
        if (text_.substr(pos_).starts_with("->")) {
          emit(Tok::Implies, 2);
          return;
        }
        throw ParseError("stray '-' in formula", start, {"->"});
      case '<':
        if (text_.substr(pos_).starts_with("<->")) {
          emit(Tok::Iff, 3);
          return;
        }
        throw ParseError("stray '<' in formula", start, {"<->"});
      default: break;
    }
    // Unicode aliases, accepted on input only.
    struct Alias { std::string_view utf8; Tok kind; };
    static constexpr Alias aliases[] = {
        {"¬", Tok::Not},     {"∧", Tok::And},
        {"∨", Tok::Or},      {"→", Tok::Implies},
        {"↔", Tok::Iff},     {"⊤", Tok::True},
        {"⊥", Tok::False},
    };
    for (const Alias& a : aliases) {
      if (text_.substr(pos_).starts_with(a.utf8)) {
        emit(a.kind, a.utf8.size());
        return;
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 1;
      while (pos_ + len < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_ + len])) ||
              text_[pos_ + len] == '_'))
        ++len;
      std::string_view word = text_.substr(pos_, len);
      if (word == "true") emit(Tok::True, len);
      else if (word == "false") emit(Tok::False, len);
      else emit(Tok::Ident, len);
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start,
                     {"formula"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, "", 0};
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Formula parse() {
    Formula f = parse_iff();
    expect(Tok::End, {"end of input"});
    return f;
  }

 private:
  Formula parse_iff() {
    Formula f = parse_implies();
    while (lex_.peek().kind == Tok::Iff) {
      lex_.take();
      f = Formula::equivalence(std::move(f), parse_implies());
    }
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (lex_.peek().kind == Tok::Implies) {
      lex_.take();
      return Formula::implication(std::move(f), parse_implies());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (lex_.peek().kind == Tok::Or) {
      lex_.take();
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lex_.peek().kind == Tok::And) {
      lex_.take();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (lex_.peek().kind == Tok::Not) {
      lex_.take();
      return Formula::negation(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Tok::True: lex_.take(); return Formula::top();
      case Tok::False: lex_.take(); return Formula::bottom();
      case Tok::Ident: lex_.take(); return Formula::atom(t.text);
      case Tok::LParen: {
        lex_.take();
        Formula f = parse_iff();
        expect(Tok::RParen, {")"});
        return f;
      }
      default:
        throw ParseError(unexpected(t), t.offset,
                         {"atom", "true", "false", "!", "("});
    }
  }

  void expect(Tok kind, std::vector<std::string> expected) {
    const Token t = lex_.peek();
    if (t.kind != kind)
      throw ParseError(unexpected(t), t.offset, std::move(expected));
    lex_.take();
  }

  static std::string unexpected(const Token& t) {
    if (t.kind == Tok::End) return "unexpected end of formula";
    return "unexpected '" + t.text + "' at offset " +
           std::to_string(t.offset);
  }

  Lexer lex_;
};

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    default: return 6;
  }
}

void print_into(const Formula& f, int parent_prec, std::string& out) {
  const int prec = precedence(f.kind());
  switch (f.kind()) {
    case Formula::Kind::Top: out += "true"; return;
    case Formula::Kind::Bottom: out += "false"; return;
    case Formula::Kind::Atom: out += f.atom_name(); return;
    case Formula::Kind::Not:
      out += '!';
      print_into(f.child(), prec, out);
      return;
    default: break;
  }
  const bool parens = prec < parent_prec;
  if (parens) out += '(';
  const char* connective = nullptr;
  int lhs_prec = prec, rhs_prec = prec + 1;
  switch (f.kind()) {
    case Formula::Kind::And: connective = " & "; break;
    case Formula::Kind::Or: connective = " | "; break;
    case Formula::Kind::Implies:
      connective = " -> ";
      lhs_prec = prec + 1;  // right-associative
      rhs_prec = prec;
      break;
    case Formula::Kind::Iff: connective = " <-> "; break;
    default: break;
  }
  print_into(f.lhs(), lhs_prec, out);
  out += connective;
  print_into(f.rhs(), rhs_prec, out);
  if (parens) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) {
  return Parser(text).parse();
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

bool eval_world(const Formula& f, const WorldSpace& space,
                std::size_t world) {
  switch (f.kind()) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bottom: return false;
    case Formula::Kind::Atom: {
      auto atom = space.atom_index(f.atom_name());
      if (!atom)
        throw VocabularyError("unknown atom '" + f.atom_name() + "'");
      return space.atom_true_in(world, *atom);
    }
    case Formula::Kind::Not: return !eval_world(f.child(), space, world);
    case Formula::Kind::And:
      return eval_world(f.lhs(), space, world) &&
             eval_world(f.rhs(), space, world);
    case Formula::Kind::Or:
      return eval_world(f.lhs(), space, world) ||
             eval_world(f.rhs(), space, world);
    case Formula::Kind::Implies:
      return !eval_world(f.lhs(), space, world) ||
             eval_world(f.rhs(), space, world);
    case Formula::Kind::Iff:
      return eval_world(f.lhs(), space, world) ==
             eval_world(f.rhs(), space, world);
  }
  throw Error("bad formula kind");
}

Event eval_event(const Formula& f,
                 const std::shared_ptr<const WorldSpace>& space) {
  if (!space->is_assignment_space())
    throw VocabularyError("space has no atom vocabulary");
  for (const std::string& name : f.atoms()) {
    if (!space->atom_index(name))
      throw VocabularyError("unknown atom '" + name + "'");
  }
  std::vector<bool> bits(space->size());
  for (std::size_t w = 0; w < space->size(); ++w)
    bits[w] = eval_world(f, *space, w);
  return Event(space, std::move(bits));
}

}  // namespace ucalc
