#pragma once

// Bifurcated ordered trees: every node has an ordered list of left-children
// and an ordered list of right-children.

#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ucycle {

enum class Side { left, right };

template <class Payload>
class Bot {
 public:
  using NodeId = std::size_t;

  explicit Bot(Payload root) { nodes_.push_back(Node{std::move(root), std::nullopt, Side::left, {}, {}}); }

  /// Appends a child at the end of the parent's `side` list.
  NodeId add_child(NodeId parent, Side side, Payload payload) {
    return insert_child(parent, side, children(parent, side).size(), std::move(payload));
  }

  NodeId insert_child(NodeId parent, Side side, std::size_t pos, Payload payload) {
    const NodeId id = nodes_.size();
    nodes_.push_back(Node{std::move(payload), parent, side, {}, {}});
    auto& list = side == Side::left ? nodes_[parent].left : nodes_[parent].right;
    list.insert(list.begin() + static_cast<std::ptrdiff_t>(pos), id);
    return id;
  }

  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const Payload& payload(NodeId v) const { return nodes_[v].payload; }
  Payload& payload(NodeId v) { return nodes_[v].payload; }
  std::optional<NodeId> parent(NodeId v) const { return nodes_[v].parent; }
  /// Side of v under its parent; meaningless for the root.
  Side side(NodeId v) const { return nodes_[v].side; }
  const std::vector<NodeId>& left_children(NodeId v) const { return nodes_[v].left; }
  const std::vector<NodeId>& right_children(NodeId v) const { return nodes_[v].right; }
  const std::vector<NodeId>& children(NodeId v, Side s) const {
    return s == Side::left ? nodes_[v].left : nodes_[v].right;
  }

  bool is_ancestor(NodeId a, NodeId v) const {
    while (true) {
      if (v == a) return true;
      const auto p = nodes_[v].parent;
      if (!p) return false;
      v = *p;
    }
  }

  NodeId leftmost_right_descendant(NodeId v) const {
    while (!nodes_[v].right.empty()) v = nodes_[v].right.front();
    return v;
  }

  NodeId rightmost_left_descendant(NodeId v) const {
    while (!nodes_[v].left.empty()) v = nodes_[v].left.back();
    return v;
  }

 private:
  struct Node {
    Payload payload;
    std::optional<NodeId> parent;
    Side side;
    std::vector<NodeId> left, right;
  };
  std::vector<Node> nodes_;
};

/// Right-children first to last, the node, then left-children first to last.
template <class P>
std::vector<std::size_t> rcl_order(const Bot<P>& t) {
  std::vector<std::size_t> order;
  order.reserve(t.size());
  // Frame: node and the phase reached (index into right list, then left list).
  struct Frame {
    std::size_t node;
    std::size_t next;
  };
  std::vector<Frame> stack{{t.root(), 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& r = t.right_children(f.node);
    const auto& l = t.left_children(f.node);
    if (f.next < r.size()) {
      const std::size_t c = r[f.next++];
      stack.push_back({c, 0});
      continue;
    }
    if (f.next == r.size()) {
      order.push_back(f.node);
      ++f.next;
    }
    const std::size_t k = f.next - r.size() - 1;
    if (k < l.size()) {
      ++f.next;
      stack.push_back({l[k], 0});
      continue;
    }
    stack.pop_back();
  }
  return order;
}

/// The six adjacency cases for y following x in cyclic RCL order:
/// a..c for consecutive positions, d..f for the wrap from last to first.
enum class AdjacentCase { a, b, c, d, e, f };

inline char to_char(AdjacentCase c) { return static_cast<char>('a' + static_cast<int>(c)); }

/// Throws std::invalid_argument when y does not cyclically follow x.
template <class P>
AdjacentCase classify_adjacent(const Bot<P>& t, std::size_t x, std::size_t y) {
  const auto order = rcl_order(t);
  std::vector<std::size_t> pos(t.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  const std::size_t n = order.size();
  if (x >= n || y >= n || order[(pos[x] + 1) % n] != y) {
    throw std::invalid_argument("classify_adjacent: nodes are not consecutive in RCL order");
  }
  const bool wrap = pos[x] == n - 1;
  if (!wrap) {
    if (t.is_ancestor(x, y)) return AdjacentCase::a;
    if (t.is_ancestor(y, x)) return AdjacentCase::b;
    return AdjacentCase::c;
  }
  if (x == t.root()) return AdjacentCase::d;
  if (y == t.root()) return AdjacentCase::e;
  return AdjacentCase::f;
}

/// Graphviz rendering; left edges are blue, right edges red.
template <class P>
std::string bot_to_dot(const Bot<P>& t, const std::function<std::string(std::size_t)>& label,
                       const std::string& name = "bot") {
  std::ostringstream out;
  out << "digraph " << name << " {\n  node [shape=box];\n";
  for (std::size_t v = 0; v < t.size(); ++v) out << "  n" << v << " [label=\"" << label(v) << "\"];\n";
  for (std::size_t v = 0; v < t.size(); ++v) {
    for (std::size_t c : t.left_children(v)) out << "  n" << v << " -> n" << c << " [color=blue];\n";
    for (std::size_t c : t.right_children(v)) out << "  n" << v << " -> n" << c << " [color=red];\n";
  }
  out << "}\n";
  return out.str();
}

using BigInt = boost::multiprecision::cpp_int;

/// Number of BOTs with n nodes.
BigInt count_bots(std::size_t n);

/// Canonical structural encoding: "(" left-children "|" right-children ")".
template <class P>
std::string bot_encoding(const Bot<P>& t, std::size_t v = 0) {
  std::string s = "(";
  for (std::size_t c : t.left_children(v)) s += bot_encoding(t, c);
  s += '|';
  for (std::size_t c : t.right_children(v)) s += bot_encoding(t, c);
  s += ')';
  return s;
}

/// Rebuilds a shape from its encoding; payloads are preorder indices.
Bot<std::size_t> bot_from_encoding(const std::string& code);

/// Every distinct BOT shape with n nodes, grown leaf by leaf and deduplicated
/// by encoding. Exponential; meant for small n.
std::vector<std::string> enumerate_bot_shapes(std::size_t n);

}  // namespace ucycle
