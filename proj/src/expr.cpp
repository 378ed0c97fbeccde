#include "ufc/expr.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "ufc/error.hpp"

namespace ufc {

struct FeatureExpr::Node {
  Kind kind;
  std::string name;
  std::vector<FeatureExpr> kids;
  std::string text;
  bool canonical;
};

namespace {

std::string operand_text(const FeatureExpr& e) {
  return e.is_conjunction() ? "(" + e.text() + ")" : e.text();
}

}  // namespace

FeatureExpr FeatureExpr::primitive(std::string name) {
  if (!is_identifier(name)) throw Error("invalid primitive name '" + name + "'");
  auto node = std::make_shared<Node>();
  node->kind = Kind::primitive;
  node->text = name;
  node->name = std::move(name);
  node->canonical = true;
  return FeatureExpr(std::move(node));
}

FeatureExpr FeatureExpr::negation(FeatureExpr child) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::negation;
  node->text = "!" + operand_text(child);
  node->canonical = child.is_canonical() && !child.is_negation();
  node->kids.push_back(std::move(child));
  return FeatureExpr(std::move(node));
}

FeatureExpr FeatureExpr::conjunction(FeatureExpr left, FeatureExpr right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::conjunction;
  node->text = operand_text(left) + " & " + operand_text(right);
  node->canonical = left.is_canonical() && right.is_canonical() && left.text() <= right.text();
  node->kids.push_back(std::move(left));
  node->kids.push_back(std::move(right));
  return FeatureExpr(std::move(node));
}

FeatureExpr::Kind FeatureExpr::kind() const noexcept { return node_->kind; }
const std::string& FeatureExpr::name() const noexcept { return node_->name; }
const std::string& FeatureExpr::text() const noexcept { return node_->text; }
bool FeatureExpr::is_canonical() const noexcept { return node_->canonical; }

const FeatureExpr& FeatureExpr::child() const {
  if (node_->kids.empty()) throw Error("primitive has no operands");
  return node_->kids[0];
}

const FeatureExpr& FeatureExpr::right() const {
  if (node_->kids.size() < 2) throw Error("expression has no right operand");
  return node_->kids[1];
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FeatureExpr parse_all() {
    FeatureExpr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_ >= text_.size() ? what + " at end of input" : what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' || text_[pos_] == '\n')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FeatureExpr parse_expr() {
    FeatureExpr e = parse_term();
    while (accept('&')) e = FeatureExpr::conjunction(std::move(e), parse_term());
    return e;
  }

  FeatureExpr parse_term() {
    std::size_t bangs = 0;
    while (accept('!')) ++bangs;
    FeatureExpr e = parse_factor();
    for (; bangs > 0; --bangs) e = FeatureExpr::negation(std::move(e));
    return e;
  }

  FeatureExpr parse_factor() {
    skip_space();
    if (accept('(')) {
      FeatureExpr e = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    const std::size_t start = pos_;
    const auto ident_start = [](char c) {
      return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    };
    const auto ident_rest = [&](char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '-'; };
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected identifier or '('");
    ++pos_;
    while (pos_ < text_.size() && ident_rest(text_[pos_])) ++pos_;
    return FeatureExpr::primitive(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FeatureExpr parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Canonical form

FeatureExpr canonicalize(const FeatureExpr& e) {
  if (e.is_canonical()) return e;
  switch (e.kind()) {
    case FeatureExpr::Kind::primitive:
      return e;
    case FeatureExpr::Kind::negation: {
      FeatureExpr inner = canonicalize(e.child());
      if (inner.is_negation()) return inner.child();
      return FeatureExpr::negation(std::move(inner));
    }
    case FeatureExpr::Kind::conjunction: {
      FeatureExpr l = canonicalize(e.left());
      FeatureExpr r = canonicalize(e.right());
      if (r.text() < l.text()) std::swap(l, r);
      return FeatureExpr::conjunction(std::move(l), std::move(r));
    }
  }
  return e;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Dataset& d) : d_(d) {}

  const Extension& eval(const FeatureExpr& e) {
    if (auto it = memo_.find(e.identity()); it != memo_.end()) return it->second;
    Extension out;
    switch (e.kind()) {
      case FeatureExpr::Kind::primitive: {
        const auto idx = d_.index_of(e.name());
        if (!idx) throw Error("unknown primitive '" + e.name() + "'");
        out = d_.column(*idx);
        break;
      }
      case FeatureExpr::Kind::negation:
        out = ~eval(e.child());
        break;
      case FeatureExpr::Kind::conjunction:
        out = eval(e.left());
        out &= eval(e.right());
        break;
    }
    return memo_.emplace(e.identity(), std::move(out)).first->second;
  }

 private:
  const Dataset& d_;
  std::unordered_map<const void*, Extension> memo_;
};

}  // namespace

Extension evaluate(const FeatureExpr& e, const Dataset& d) { return Evaluator(d).eval(e); }

// ---------------------------------------------------------------------------
// Literals

std::set<Literal> literals(const FeatureExpr& e) {
  std::set<Literal> out;
  std::unordered_set<const void*> visited;
  // Leaves are recorded by their parent so that a shared primitive node keeps its sign context.
  const auto visit = [&](const auto& self, const FeatureExpr& node) -> void {
    if (!visited.insert(node.identity()).second) return;
    switch (node.kind()) {
      case FeatureExpr::Kind::primitive:
        out.insert({node.name(), false});
        break;
      case FeatureExpr::Kind::negation:
        if (node.child().is_primitive()) {
          out.insert({node.child().name(), true});
        } else {
          self(self, node.child());
        }
        break;
      case FeatureExpr::Kind::conjunction:
        for (const FeatureExpr* kid : {&node.left(), &node.right()}) {
          if (kid->is_primitive()) {
            out.insert({kid->name(), false});
          } else {
            self(self, *kid);
          }
        }
        break;
    }
  };
  visit(visit, canonicalize(e));
  return out;
}

std::size_t literal_count(const FeatureExpr& e) { return literals(e).size(); }

std::set<std::string> primitive_names(const FeatureExpr& e) {
  std::set<std::string> out;
  for (const auto& lit : literals(e)) out.insert(lit.name);
  return out;
}

// ---------------------------------------------------------------------------
// Feature-set files

std::vector<FeatureExpr> read_feature_file(std::istream& in) {
  std::vector<FeatureExpr> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse(line));
    } catch (const ParseError& err) {
      throw Error("feature file line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return out;
}

std::vector<FeatureExpr> read_feature_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open feature file '" + path + "'");
  return read_feature_file(in);
}

void write_feature_file(std::ostream& out, const std::vector<FeatureExpr>& features) {
  for (const auto& f : features) out << f.text() << '\n';
}

}  // namespace ufc
