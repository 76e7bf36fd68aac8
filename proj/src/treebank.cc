#include "pqa/treebank.h"

#include <cctype>
#include <utility>

#include "pqa/error.h"
#include "pqa/text.h"

namespace pqa {

ParseTree ParseTree::leaf(std::string tag, std::string token) {
  ParseTree t;
  t.label_ = std::move(tag);
  t.token_ = std::move(token);
  return t;
}

ParseTree ParseTree::node(std::string label, std::vector<ParseTree> children) {
  ParseTree t;
  t.label_ = std::move(label);
  t.children_ = std::move(children);
  return t;
}

std::size_t ParseTree::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& child : children_) n += child.leaf_count();
  return n;
}

std::string strip_function_tags(std::string_view label) {
  if (label.empty() || label[0] == '-') return std::string(label);
  auto cut = label.find_first_of("-=");
  return std::string(label.substr(0, cut));
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  ParseTree read_tree() {
    skip_space();
    if (pos_ >= text_.size()) throw FormatError("empty input", pos_ + 1);
    ParseTree tree = read_node();
    skip_space();
    if (pos_ != text_.size()) throw FormatError("unexpected text after tree", pos_ + 1);
    return tree;
  }

 private:
  ParseTree read_node() {
    expect('(');
    skip_space();
    std::size_t label_at = pos_;
    std::string raw = read_atom();
    if (raw.empty()) throw FormatError("empty label", label_at + 1);
    std::string label = strip_function_tags(raw);
    skip_space();
    if (pos_ >= text_.size()) throw FormatError("unbalanced parentheses", pos_ + 1);

    if (text_[pos_] != '(') {
      std::size_t token_at = pos_;
      std::string token = read_atom();
      if (token.empty()) throw FormatError("node without children or token", token_at + 1);
      skip_space();
      expect(')');
      return ParseTree::leaf(std::move(label), std::move(token));
    }

    std::vector<ParseTree> children;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) throw FormatError("unbalanced parentheses", pos_ + 1);
      if (text_[pos_] == ')') break;
      if (text_[pos_] != '(') throw FormatError("bare token beside subtrees", pos_ + 1);
      children.push_back(read_node());
    }
    ++pos_;
    return ParseTree::node(std::move(label), std::move(children));
  }

  std::string read_atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (pos_ >= text_.size()) throw FormatError("unbalanced parentheses", pos_ + 1);
    if (text_[pos_] != c) throw FormatError(std::string("expected '") + c + "'", pos_ + 1);
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write(const ParseTree& tree, std::string& out) {
  out += '(';
  out += tree.label();
  if (tree.is_leaf()) {
    out += ' ';
    out += tree.token();
  } else {
    for (const auto& child : tree.children()) {
      out += ' ';
      write(child, out);
    }
  }
  out += ')';
}

void collect_leaves(const ParseTree& tree, std::vector<std::string>& out) {
  if (tree.is_leaf()) {
    out.push_back(tree.token());
    return;
  }
  for (const auto& child : tree.children()) collect_leaves(child, out);
}

std::size_t collect_spans(const ParseTree& tree, std::size_t begin, std::size_t depth,
                          std::vector<SpannedNode>& out) {
  std::size_t slot = out.size();
  out.push_back({&tree, begin, begin, depth});
  std::size_t end = begin;
  if (tree.is_leaf()) {
    end = begin + 1;
  } else {
    for (const auto& child : tree.children()) end = collect_spans(child, end, depth + 1, out);
  }
  out[slot].end = end;
  return end;
}

}  // namespace

ParseTree parse_bracketed(std::string_view text) { return Reader(text).read_tree(); }

std::string to_bracketed(const ParseTree& tree) {
  std::string out;
  write(tree, out);
  return out;
}

std::vector<std::string> leaves(const ParseTree& tree) {
  std::vector<std::string> out;
  collect_leaves(tree, out);
  return out;
}

std::vector<const ParseTree*> dfs_nodes(const ParseTree& tree) {
  std::vector<const ParseTree*> out;
  std::vector<const ParseTree*> stack{&tree};
  while (!stack.empty()) {
    const ParseTree* node = stack.back();
    stack.pop_back();
    out.push_back(node);
    const auto& children = node->children();
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

std::vector<SpannedNode> spanned_nodes(const ParseTree& tree) {
  std::vector<SpannedNode> out;
  collect_spans(tree, 0, 0, out);
  return out;
}

std::string surface(const ParseTree& tree) { return join(leaves(tree)); }

}  // namespace pqa
