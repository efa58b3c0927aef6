#include "paramat/formula.hpp"

#include <algorithm>
#include <sstream>

#include "paramat/error.hpp"

namespace paramat {

namespace {

// Binding strength used by the renderer: higher binds tighter.
int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Imp: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    case FormulaKind::Neg: return 4;
    case FormulaKind::Letter: return 5;
  }
  return 0;
}

const char* symbol(FormulaKind k) {
  switch (k) {
    case FormulaKind::Or: return " | ";
    case FormulaKind::And: return " & ";
    case FormulaKind::Imp: return " -> ";
    default: return "";
  }
}

FormulaKind kind_of(Connective c) {
  switch (c) {
    case Connective::Neg: return FormulaKind::Neg;
    case Connective::Or: return FormulaKind::Or;
    case Connective::And: return FormulaKind::And;
    case Connective::Imp: return FormulaKind::Imp;
  }
  return FormulaKind::Letter;
}

std::string wrap(const std::string& s, bool parens) { return parens ? "(" + s + ")" : s; }

}  // namespace

struct Formula::Node {
  FormulaKind kind;
  std::string name;
  std::vector<Formula> children;
  unsigned depth = 0;
  std::string text;
};

namespace {

bool is_letter_tail(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

bool is_letter_name(std::string_view name) {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), is_letter_tail);
}

Formula Formula::letter(std::string name) {
  if (!is_letter_name(name)) throw ParseError("invalid letter name '" + name + "'", 0);
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Letter;
  node->text = name;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::neg(Formula child) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Neg;
  node->depth = child.depth() + 1;
  node->text = "~" + wrap(child.text(), precedence(child.kind()) < precedence(FormulaKind::Neg));
  node->children.push_back(std::move(child));
  return Formula(std::move(node));
}

Formula Formula::binary(Connective op, Formula lhs, Formula rhs) {
  if (op == Connective::Neg) throw PreconditionError("negation is unary");
  const FormulaKind k = kind_of(op);
  const int p = precedence(k);
  // -> associates to the right, | and & to the left.
  const bool right_assoc = k == FormulaKind::Imp;
  const int lp = precedence(lhs.kind());
  const int rp = precedence(rhs.kind());
  const bool wrap_left = lp < p || (lp == p && right_assoc);
  const bool wrap_right = rp < p || (rp == p && !right_assoc);

  auto node = std::make_shared<Node>();
  node->kind = k;
  node->depth = std::max(lhs.depth(), rhs.depth()) + 1;
  node->text = wrap(lhs.text(), wrap_left) + symbol(k) + wrap(rhs.text(), wrap_right);
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return binary(Connective::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::conj(Formula lhs, Formula rhs) {
  return binary(Connective::And, std::move(lhs), std::move(rhs));
}
Formula Formula::imp(Formula lhs, Formula rhs) {
  return binary(Connective::Imp, std::move(lhs), std::move(rhs));
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const noexcept { return node_->name; }

const Formula& Formula::lhs() const {
  if (node_->children.empty()) throw PreconditionError("letter has no operands");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() < 2) throw PreconditionError("formula has no right operand");
  return node_->children[1];
}

unsigned Formula::depth() const noexcept { return node_->depth; }
const std::string& Formula::text() const noexcept { return node_->text; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  return a.node_ == b.node_ || a.node_->text == b.node_->text;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  return a.node_->text.compare(b.node_->text) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << f.text(); }

// ---------------------------------------------------------------------------
// FormulaSet

FormulaSet::FormulaSet(std::initializer_list<Formula> items)
    : FormulaSet(std::vector<Formula>(items)) {}

FormulaSet::FormulaSet(std::vector<Formula> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool FormulaSet::contains(const Formula& f) const {
  return std::binary_search(items_.begin(), items_.end(), f);
}

bool FormulaSet::is_subset_of(const FormulaSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

FormulaSet FormulaSet::with(const Formula& f) const {
  FormulaSet out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), f);
  if (it == out.items_.end() || !(*it == f)) out.items_.insert(it, f);
  return out;
}

FormulaSet FormulaSet::without(const Formula& f) const {
  FormulaSet out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), f);
  if (it != out.items_.end() && *it == f) out.items_.erase(it);
  return out;
}

FormulaSet FormulaSet::united(const FormulaSet& other) const {
  FormulaSet out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out.items_));
  return out;
}

std::string FormulaSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ", ";
    out += items_[i].text();
  }
  return out;
}

std::string FormulaSet::braced() const { return "{" + to_string() + "}"; }

std::strong_ordering operator<=>(const FormulaSet& a, const FormulaSet& b) {
  return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                b.items_.begin(), b.items_.end());
}

std::ostream& operator<<(std::ostream& os, const FormulaSet& s) { return os << s.braced(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Letter, Not, Or, And, Imp, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (i_ < src_.size() && (src_[i_] == ' ' || src_[i_] == '\t' || src_[i_] == '\n' || src_[i_] == '\r'))
      ++i_;
    const std::size_t start = i_;
    if (i_ >= src_.size()) return {Tok::End, start, ""};
    const char c = src_[i_];
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i_ + 1;
      while (j < src_.size() && is_letter_tail(src_[j])) ++j;
      std::string name(src_.substr(i_, j - i_));
      i_ = j;
      return {Tok::Letter, start, std::move(name)};
    }
    switch (c) {
      case '~': ++i_; return {Tok::Not, start, "~"};
      case '|': ++i_; return {Tok::Or, start, "|"};
      case '&': ++i_; return {Tok::And, start, "&"};
      case '(': ++i_; return {Tok::LParen, start, "("};
      case ')': ++i_; return {Tok::RParen, start, ")"};
      case '-':
        if (i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
          i_ += 2;
          return {Tok::Imp, start, "->"};
        }
        break;
      default: break;
    }
    // Unicode aliases (UTF-8): ¬ ∨ ∧ →
    if (match("\xC2\xAC")) return {Tok::Not, start, "~"};
    if (match("\xE2\x88\xA8")) return {Tok::Or, start, "|"};
    if (match("\xE2\x88\xA7")) return {Tok::And, start, "&"};
    if (match("\xE2\x86\x92")) return {Tok::Imp, start, "->"};
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  bool match(std::string_view lit) {
    if (src_.substr(i_, lit.size()) == lit) {
      i_ += lit.size();
      return true;
    }
    return false;
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Formula parse() {
    Formula f = imp();
    if (tok_.kind != Tok::End) throw ParseError("unexpected '" + tok_.text + "'", tok_.pos);
    return f;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  Formula imp() {
    Formula lhs = dis();
    if (tok_.kind == Tok::Imp) {
      advance();
      return Formula::imp(std::move(lhs), imp());
    }
    return lhs;
  }

  Formula dis() {
    Formula acc = con();
    while (tok_.kind == Tok::Or) {
      advance();
      acc = Formula::disj(std::move(acc), con());
    }
    return acc;
  }

  Formula con() {
    Formula acc = negation();
    while (tok_.kind == Tok::And) {
      advance();
      acc = Formula::conj(std::move(acc), negation());
    }
    return acc;
  }

  Formula negation() {
    std::size_t count = 0;
    while (tok_.kind == Tok::Not) {
      ++count;
      advance();
    }
    Formula f = atom();
    while (count--) f = Formula::neg(std::move(f));
    return f;
  }

  Formula atom() {
    if (tok_.kind == Tok::Letter) {
      Formula f = Formula::letter(tok_.text);
      advance();
      return f;
    }
    if (tok_.kind == Tok::LParen) {
      advance();
      Formula f = imp();
      if (tok_.kind != Tok::RParen) throw ParseError("expected ')'", tok_.pos);
      advance();
      return f;
    }
    if (tok_.kind == Tok::End) throw ParseError("unexpected end of input", tok_.pos);
    throw ParseError("unexpected '" + tok_.text + "'", tok_.pos);
  }

  Lexer lexer_;
  Token tok_{Tok::End, 0, ""};
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

FormulaSet parse_formula_set(std::string_view text) {
  std::vector<Formula> items;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return FormulaSet{};
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    try {
      items.push_back(parse_formula(item));
    } catch (const ParseError& e) {
      // Report positions relative to the whole input.
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at position "));
      throw ParseError(msg, start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return FormulaSet(std::move(items));
}

namespace {

void collect_letters(const Formula& f, LetterSet& out) {
  switch (f.kind()) {
    case FormulaKind::Letter: out.insert(f.name()); return;
    case FormulaKind::Neg: collect_letters(f.lhs(), out); return;
    default:
      collect_letters(f.lhs(), out);
      collect_letters(f.rhs(), out);
  }
}

}  // namespace

LetterSet letters(const Formula& f) {
  LetterSet out;
  collect_letters(f, out);
  return out;
}

LetterSet letters(const FormulaSet& s) {
  LetterSet out;
  for (const auto& f : s) collect_letters(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Generators

void enumerate_formulas(const LetterSet& letter_set, unsigned max_depth,
                        const std::function<bool(const Formula&)>& visit) {
  if (letter_set.empty()) throw PreconditionError("enumerate_formulas needs at least one letter");

  // `known` holds every formula of depth < d; [layer_begin, end) is depth d-1.
  std::vector<Formula> known;
  for (const auto& name : letter_set) {
    known.push_back(Formula::letter(name));
    if (!visit(known.back())) return;
  }
  std::size_t layer_begin = 0;
  for (unsigned d = 1; d <= max_depth; ++d) {
    const std::size_t n = known.size();
    const bool keep = d < max_depth;
    std::vector<Formula> layer;
    auto emit = [&](Formula f) {
      if (!visit(f)) return false;
      if (keep) layer.push_back(std::move(f));
      return true;
    };
    for (std::size_t i = layer_begin; i < n; ++i)
      if (!emit(Formula::neg(known[i]))) return;
    for (Connective op : {Connective::Or, Connective::And, Connective::Imp}) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i < layer_begin && j < layer_begin) continue;
          if (!emit(Formula::binary(op, known[i], known[j]))) return;
        }
      }
    }
    layer_begin = n;
    known.insert(known.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
}

std::vector<Formula> enumerate_formulas(const LetterSet& letter_set, unsigned max_depth) {
  std::vector<Formula> out;
  enumerate_formulas(letter_set, max_depth, [&](const Formula& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

Formula random_formula(const LetterSet& letter_set, unsigned max_depth, std::mt19937_64& rng) {
  if (letter_set.empty()) throw PreconditionError("random_formula needs at least one letter");
  const std::vector<std::string> names(letter_set.begin(), letter_set.end());
  std::function<Formula(unsigned)> build = [&](unsigned budget) -> Formula {
    // Uniform over {letter, ~, |, &, ->} while depth remains.
    const std::uint64_t choice = budget == 0 ? 0 : rng() % 5;
    switch (choice) {
      case 0: return Formula::letter(names[rng() % names.size()]);
      case 1: return Formula::neg(build(budget - 1));
      default: {
        const Connective op = choice == 2 ? Connective::Or : choice == 3 ? Connective::And : Connective::Imp;
        Formula lhs = build(budget - 1);
        Formula rhs = build(budget - 1);
        return Formula::binary(op, std::move(lhs), std::move(rhs));
      }
    }
  };
  return build(max_depth);
}

Formula random_formula(const LetterSet& letter_set, unsigned max_depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_formula(letter_set, max_depth, rng);
}

}  // namespace paramat
