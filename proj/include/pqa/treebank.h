#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pqa {

// Constituency tree. A leaf is a tagged token: (NNP Dante) is one node with
// label "NNP" and token "Dante", so leaves double as preterminals. Inner
// nodes carry a phrase label and at least one child. Trees are immutable
// once built.
class ParseTree {
 public:
  // Empty placeholder; only useful as an assignment target.
  ParseTree() = default;

  static ParseTree leaf(std::string tag, std::string token);
  static ParseTree node(std::string label, std::vector<ParseTree> children);

  const std::string& label() const { return label_; }
  const std::string& token() const { return token_; }
  const std::vector<ParseTree>& children() const { return children_; }
  bool is_leaf() const { return children_.empty(); }

  std::size_t leaf_count() const;

  friend bool operator==(const ParseTree&, const ParseTree&) = default;

 private:
  std::string label_;
  std::string token_;
  std::vector<ParseTree> children_;
};

// Reads Penn bracketed notation. Function tags and indices ("NP-SBJ-1",
// "NP=2") are stripped; labels that begin with '-' ("-NONE-") are kept.
// Throws FormatError on unbalanced input, empty labels or trailing text.
ParseTree parse_bracketed(std::string_view text);

// Single-line canonical form: "(S (NP (NNP Dante)) (VP ...))".
std::string to_bracketed(const ParseTree& tree);

std::vector<std::string> leaves(const ParseTree& tree);

// Preorder: root first, children left to right.
std::vector<const ParseTree*> dfs_nodes(const ParseTree& tree);

// A node together with its leaf span [begin, end) and depth (root = 0).
struct SpannedNode {
  const ParseTree* node;
  std::size_t begin;
  std::size_t end;
  std::size_t depth;

  std::size_t length() const { return end - begin; }
};

// Preorder, like dfs_nodes. Pointers refer into `tree`.
std::vector<SpannedNode> spanned_nodes(const ParseTree& tree);

std::string strip_function_tags(std::string_view label);

// Tokens of the subtree, joined by single spaces.
std::string surface(const ParseTree& tree);

}  // namespace pqa
