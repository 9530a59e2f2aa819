#include "nrgraph/trees.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace nrgraph {

namespace {

/// Vertices below `root` in an order where every child precedes its parent.
std::vector<std::size_t> postorder(const std::vector<std::vector<std::size_t>>& children, std::size_t root) {
  std::vector<std::size_t> order;
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (auto c : children[u]) stack.push_back(c);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::uint64_t checked_multiply(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("automorphism count exceeds 64 bits");
  return out;
}

}  // namespace

RootedTree::RootedTree(std::vector<std::optional<std::size_t>> parents)
    : parents_(std::move(parents)), children_(parents_.size()) {
  const std::size_t m = parents_.size();
  if (m == 0) throw std::invalid_argument("rooted tree needs at least one vertex");
  if (parents_[0]) throw std::invalid_argument("vertex 1 must be the root");
  for (std::size_t i = 1; i < m; ++i) {
    if (!parents_[i]) throw std::invalid_argument(fmt::format("vertex {} has no parent; only vertex 1 may be the root", i + 1));
    if (*parents_[i] >= m) throw std::invalid_argument(fmt::format("parent of vertex {} out of range", i + 1));
    if (*parents_[i] == i) throw std::invalid_argument(fmt::format("vertex {} is its own parent", i + 1));
    children_[*parents_[i]].push_back(i);
  }
  // Every vertex must reach the root in fewer than m steps.
  for (std::size_t i = 1; i < m; ++i) {
    std::size_t u = i;
    std::size_t steps = 0;
    while (parents_[u]) {
      u = *parents_[u];
      if (++steps > m) throw std::invalid_argument(fmt::format("parent links of vertex {} form a cycle", i + 1));
    }
  }
}

RootedTree RootedTree::single_vertex() { return RootedTree({std::nullopt}); }

RootedTree RootedTree::parse_parent_array(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::optional<std::size_t>> parents;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = -1;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value < 0)
      throw std::invalid_argument(fmt::format("malformed parent array: bad entry '{}'", token));
    if (value == 0)
      parents.emplace_back(std::nullopt);
    else
      parents.emplace_back(static_cast<std::size_t>(value - 1));
  }
  if (parents.empty()) throw std::invalid_argument("malformed parent array: empty");
  try {
    return RootedTree(std::move(parents));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("malformed parent array: ") + e.what());
  }
}

RootedTree RootedTree::parse_canonical(std::string_view text) {
  std::vector<std::optional<std::size_t>> parents;
  std::vector<std::size_t> open;
  bool closed_root = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (closed_root) throw std::invalid_argument("malformed tree string: text after the root closes");
    if (ch == '(') {
      parents.emplace_back(open.empty() ? std::nullopt : std::optional<std::size_t>(open.back()));
      open.push_back(parents.size() - 1);
    } else if (ch == ')') {
      if (open.empty()) throw std::invalid_argument("malformed tree string: unbalanced ')'");
      open.pop_back();
      closed_root = open.empty();
    } else {
      throw std::invalid_argument(fmt::format("malformed tree string: unexpected '{}'", ch));
    }
  }
  if (!closed_root) throw std::invalid_argument("malformed tree string: unbalanced '('");
  return RootedTree(std::move(parents));
}

RootedTree RootedTree::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '(') return parse_canonical(text);
  return parse_parent_array(text);
}

std::vector<std::size_t> RootedTree::degrees() const {
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = degree(i);
  return out;
}

std::string RootedTree::to_parent_array() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += parents_[i] ? std::to_string(*parents_[i] + 1) : "0";
  }
  return out;
}

std::string ahu_encode(const std::vector<std::vector<std::size_t>>& children, std::size_t root) {
  std::map<std::size_t, std::string> code;
  for (std::size_t u : postorder(children, root)) {
    std::vector<std::string> parts;
    parts.reserve(children[u].size());
    for (auto c : children[u]) parts.push_back(std::move(code.at(c)));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    s += ')';
    code[u] = std::move(s);
  }
  return code.at(root);
}

std::string canonical_form(const RootedTree& tree) { return ahu_encode(tree.child_lists(), 0); }

std::uint64_t automorphism_count(const RootedTree& tree) {
  const auto& children = tree.child_lists();
  std::vector<std::string> code(tree.size());
  std::uint64_t count = 1;
  for (std::size_t u : postorder(children, 0)) {
    std::vector<std::string> parts;
    for (auto c : children[u]) parts.push_back(code[c]);
    std::sort(parts.begin(), parts.end());
    // k identical sibling subtrees can be permuted in k! ways.
    std::size_t run = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
      count = checked_multiply(count, run);
    }
    std::string s = "(";
    for (auto& p : parts) s += p;
    s += ')';
    code[u] = std::move(s);
  }
  return count;
}

std::vector<RootedTree> all_rooted_trees(std::size_t m) {
  if (m == 0) return {};
  // Every rooted tree has a labelling with parent(i) < i (e.g. BFS order), so
  // enumerating those parent arrays reaches every isomorphism class.
  std::map<std::string, RootedTree> classes;
  std::vector<std::size_t> parent(m, 0);
  while (true) {
    std::vector<std::optional<std::size_t>> p(m);
    for (std::size_t i = 1; i < m; ++i) p[i] = parent[i];
    RootedTree t(std::move(p));
    classes.try_emplace(canonical_form(t), t);
    // Odometer increment with digit i ranging over [0, i).
    bool advanced = false;
    for (std::size_t i = m - 1; i >= 2 && !advanced; --i) {
      if (++parent[i] < i)
        advanced = true;
      else
        parent[i] = 0;
    }
    if (!advanced) break;
  }
  std::vector<RootedTree> out;
  for (auto& [code, t] : classes) out.push_back(std::move(t));
  return out;
}

}  // namespace nrgraph
