#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ufc/bitvector.hpp"
#include "ufc/dataset.hpp"

namespace ufc {

/// Immutable Boolean feature expression over named primitives: a primitive, a negation or a
/// binary conjunction. Copies share structure. Each node caches its printed form, which is an
/// unambiguous rendering of the tree, so textual equality is structural equality.
class FeatureExpr {
 public:
  enum class Kind { primitive, negation, conjunction };

  static FeatureExpr primitive(std::string name);
  static FeatureExpr negation(FeatureExpr child);
  static FeatureExpr conjunction(FeatureExpr left, FeatureExpr right);

  Kind kind() const noexcept;
  bool is_primitive() const noexcept { return kind() == Kind::primitive; }
  bool is_negation() const noexcept { return kind() == Kind::negation; }
  bool is_conjunction() const noexcept { return kind() == Kind::conjunction; }

  /// Primitive name; empty for other kinds.
  const std::string& name() const noexcept;
  /// Negated operand (negation) or left operand (conjunction).
  const FeatureExpr& child() const;
  const FeatureExpr& left() const { return child(); }
  const FeatureExpr& right() const;

  /// Grammar rendering, e.g. "!(sky & building) & tree".
  const std::string& text() const noexcept;
  /// True when the tree is already in canonical form.
  bool is_canonical() const noexcept;

  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const FeatureExpr& a, const FeatureExpr& b) noexcept {
    return a.node_ == b.node_ || a.text() == b.text();
  }

 private:
  struct Node;
  explicit FeatureExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Literal: a primitive together with the sign written directly on it.
struct Literal {
  std::string name;
  bool negated = false;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Extension = BitVector;

/// expr := term ('&' term)* ; term := '!'* factor ; factor := IDENT | '(' expr ')'.
/// Throws ParseError carrying the byte offset.
FeatureExpr parse(std::string_view text);

inline const std::string& to_string(const FeatureExpr& e) noexcept { return e.text(); }

/// Removes double negations and orders every conjunction's operands by their canonical text.
FeatureExpr canonicalize(const FeatureExpr& e);
inline std::string canonical_string(const FeatureExpr& e) { return canonicalize(e).text(); }

/// Truth value of `e` per individual of `d`. Throws Error on an unknown primitive.
Extension evaluate(const FeatureExpr& e, const Dataset& d);

/// Distinct literals of the canonical form.
std::set<Literal> literals(const FeatureExpr& e);
std::size_t literal_count(const FeatureExpr& e);
/// Distinct primitive names referenced by `e`.
std::set<std::string> primitive_names(const FeatureExpr& e);

/// Feature-set text format: one expression per line; '#' comment lines and blank lines skipped.
std::vector<FeatureExpr> read_feature_file(std::istream& in);
std::vector<FeatureExpr> read_feature_file(const std::string& path);
void write_feature_file(std::ostream& out, const std::vector<FeatureExpr>& features);

}  // namespace ufc
