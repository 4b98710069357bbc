#include "ucycle/cyclejoin.hpp"

#include <algorithm>
#include <sstream>

namespace ucycle {

Word ConjugatePair::parent_word() const {
  Word w{parent_symbol};
  w.append(stem);
  return w;
}

Word ConjugatePair::child_word() const {
  Word w{child_symbol};
  w.append(stem);
  return w;
}

std::vector<ConjugatePair> conjugate_pairs_between(SymbolView child, SymbolView parent) {
  std::vector<ConjugatePair> out;
  if (child.size() != parent.size() || child.empty()) return out;
  const std::size_t pc = period(child), pp = period(parent);
  for (std::size_t r = 0; r < pc; ++r) {
    const Word u = rotate_left(child, r);
    for (std::size_t q = 0; q < pp; ++q) {
      const Word v = rotate_left(parent, q);
      if (u[0] == v[0]) continue;
      if (!std::equal(u.begin() + 1, u.end(), v.begin() + 1)) continue;
      out.push_back({Word(u.view().subspan(1)), v[0], u[0]});
    }
  }
  return out;
}

CycleJoiningTree::NodeId CycleJoiningTree::add_node(const Word& necklace) {
  if (necklace.size() != n_) throw TreeError("node " + necklace.str() + ": wrong length");
  for (Symbol s : necklace) {
    if (!alphabet_.contains(s)) throw TreeError("node " + necklace.str() + ": symbol outside alphabet");
  }
  if (!is_necklace(necklace)) throw TreeError("node " + necklace.str() + ": not a necklace");
  if (index_.count(necklace)) throw TreeError("node " + necklace.str() + ": duplicate class");
  const NodeId id = nodes_.size();
  nodes_.push_back(necklace);
  parent_.emplace_back();
  children_.emplace_back();
  index_.emplace(necklace, id);
  return id;
}

void CycleJoiningTree::link(NodeId child, NodeId parent, const ConjugatePair& pair) {
  if (child >= size() || parent >= size()) throw TreeError("link: unknown node");
  if (child == parent) throw TreeError("link: self loop at " + nodes_[child].str());
  if (parent_[child]) throw TreeError("link: " + nodes_[child].str() + " already has a parent");
  if (pair.parent_symbol == pair.child_symbol || pair.stem.size() + 1 != n_) {
    throw TreeError("link: malformed conjugate pair for " + nodes_[child].str());
  }
  if (necklace_of(pair.child_word()).necklace != nodes_[child] ||
      necklace_of(pair.parent_word()).necklace != nodes_[parent]) {
    throw TreeError("link: pair " + pair.child_word().str() + "/" + pair.parent_word().str() +
                    " does not join " + nodes_[child].str() + " to " + nodes_[parent].str());
  }
  parent_[child] = Edge{parent, pair};
  children_[parent].push_back(child);
}

void CycleJoiningTree::link(NodeId child, NodeId parent) {
  const auto pairs = conjugate_pairs_between(nodes_.at(child), nodes_.at(parent));
  if (pairs.size() != 1) {
    throw TreeError("link: " + std::to_string(pairs.size()) + " conjugate pairs between " +
                    nodes_[child].str() + " and " + nodes_[parent].str());
  }
  link(child, parent, pairs.front());
}

void CycleJoiningTree::validate() const {
  if (nodes_.empty()) return;
  if (root_ >= size()) throw TreeError("tree has no root");
  if (parent_[root_]) throw TreeError("root " + nodes_[root_].str() + " has a parent");
  for (NodeId v = 0; v < size(); ++v) {
    NodeId u = v;
    std::size_t steps = 0;
    while (u != root_) {
      if (!parent_[u]) throw TreeError("node " + nodes_[u].str() + " has no parent");
      u = parent_[u]->parent;
      if (++steps > size()) throw TreeError("cycle through " + nodes_[v].str());
    }
  }
  for (NodeId v = 0; v < size(); ++v) {
    std::vector<const Word*> stems;
    for (NodeId c : children_[v]) stems.push_back(&parent_[c]->pair.stem);
    std::sort(stems.begin(), stems.end(), [](const Word* a, const Word* b) { return *a < *b; });
    for (std::size_t i = 1; i < stems.size(); ++i) {
      if (*stems[i] == *stems[i - 1]) {
        throw TreeError("chain property violated at " + nodes_[v].str() + ": stem " + stems[i]->str());
      }
    }
  }
}

std::optional<CycleJoiningTree::NodeId> CycleJoiningTree::find(SymbolView necklace) const {
  auto it = index_.find(Word(necklace));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<CycleJoiningTree::NodeId> CycleJoiningTree::class_of(SymbolView w) const {
  if (w.size() != n_) return std::nullopt;
  return find(necklace_of(w).necklace);
}

std::size_t CycleJoiningTree::window_count() const {
  std::size_t total = 0;
  for (const Word& w : nodes_) total += period(w);
  return total;
}

std::size_t CycleJoiningTree::height() const {
  if (nodes_.empty()) return 0;
  std::size_t best = 0;
  std::vector<std::pair<NodeId, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto [v, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    for (NodeId c : children_[v]) stack.emplace_back(c, d + 1);
  }
  return best;
}

CycleJoiningTree build_tree(const FamilySpec& family) {
  const std::size_t len = family.root.size();
  CycleJoiningTree tree(len, family.alphabet);
  if (family.empty()) return tree;
  for_each_necklace(len, family.alphabet, [&](SymbolView w) {
    if (family.member(w)) tree.add_node(Word(w));
  });
  const auto root = tree.find(family.root);
  if (!root) throw TreeError("root " + family.root.str() + " is not a member");
  tree.set_root(*root);
  for (CycleJoiningTree::NodeId v = 0; v < tree.size(); ++v) {
    if (v == *root) continue;
    const Word& child = tree.node(v);
    const auto move = family.parent(child);
    if (!move) throw TreeError("parent rule undefined at " + child.str());
    if (move->index >= len || child[move->index] == move->symbol) {
      throw TreeError("parent rule is not a single substitution at " + child.str());
    }
    Word flipped = child;
    flipped[move->index] = move->symbol;
    const auto target = tree.find(necklace_of(flipped).necklace);
    if (!target) throw TreeError("parent of " + child.str() + " is a non-member " + flipped.str());
    const Word cw = rotate_left(child, move->index);
    tree.link(v, *target, ConjugatePair{Word(cw.view().subspan(1)), move->symbol, cw[0]});
  }
  tree.validate();
  return tree;
}

std::vector<Chain> find_chains(const CycleJoiningTree& tree) {
  using NodeId = CycleJoiningTree::NodeId;
  std::vector<Chain> chains;
  auto child_with_stem = [&](NodeId v, const Word& stem) -> std::optional<NodeId> {
    for (NodeId c : tree.children(v)) {
      if (tree.parent_edge(c)->pair.stem == stem) return c;
    }
    return std::nullopt;
  };
  for (NodeId v = 0; v < tree.size(); ++v) {
    const auto& edge = tree.parent_edge(v);
    if (!edge) continue;
    // Start only at the topmost edge of each chain.
    const auto& up = tree.parent_edge(edge->parent);
    if (up && up->pair.stem == edge->pair.stem) continue;
    Chain chain;
    chain.stem = edge->pair.stem;
    chain.nodes = {edge->parent, v};
    chain.symbols = {edge->pair.parent_symbol, edge->pair.child_symbol};
    NodeId cur = v;
    while (auto next = child_with_stem(cur, chain.stem)) {
      chain.nodes.push_back(*next);
      chain.symbols.push_back(tree.parent_edge(*next)->pair.child_symbol);
      cur = *next;
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::vector<std::size_t> up_derangement(std::size_t m) {
  std::vector<std::size_t> d(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = (i + 1) % m + 1;
  return d;
}

std::vector<std::size_t> down_derangement(std::size_t m) {
  std::vector<std::size_t> d(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = (i + m - 1) % m + 1;
  return d;
}

DerangementRule all_up() {
  return [](const Chain& c) { return up_derangement(c.nodes.size()); };
}

DerangementRule all_down() {
  return [](const Chain& c) { return down_derangement(c.nodes.size()); };
}

TreeSuccessor::TreeSuccessor(const CycleJoiningTree& tree, const DerangementRule& rule) : tree_(&tree) {
  for (const Chain& chain : find_chains(tree)) {
    const std::size_t m = chain.nodes.size();
    const auto d = rule(chain);
    if (d.size() != m) throw std::invalid_argument("derangement has wrong length");
    std::vector<bool> hit(m + 1, false);
    for (std::size_t i = 0; i < m; ++i) {
      if (d[i] < 1 || d[i] > m || hit[d[i]] || d[i] == i + 1) {
        throw std::invalid_argument("not a derangement for chain with stem " + chain.stem.str());
      }
      hit[d[i]] = true;
    }
    for (std::size_t i = 0; i < m; ++i) {
      Word key{chain.symbols[i]};
      key.append(chain.stem);
      next_.emplace(std::move(key), chain.symbols[d[i] - 1]);
    }
  }
}

Symbol TreeSuccessor::operator()(SymbolView w) const {
  auto it = next_.find(Word(w));
  if (it != next_.end()) return it->second;
  if (!in_domain(w)) throw std::out_of_range("successor: " + to_string(w) + " is outside the tree");
  return w[0];
}

Symbol successor_f1(const CycleJoiningTree& tree, const DerangementRule& rule, SymbolView w) {
  return TreeSuccessor(tree, rule)(w);
}

Symbol successor_up(const CycleJoiningTree& tree, SymbolView w) { return successor_f1(tree, all_up(), w); }

Symbol successor_down(const CycleJoiningTree& tree, SymbolView w) { return successor_f1(tree, all_down(), w); }

Word pcr_gamma(int variant, SymbolView stem) {
  const std::size_t n = stem.size() + 1;
  // a(i) is the 1-based symbol a_i of the word, i >= 2.
  auto a = [&](std::size_t i) { return stem[i - 2]; };
  Word g;
  switch (variant) {
    case 1: {
      std::size_t j = 2;
      while (j <= n && a(j) != 0) ++j;
      for (std::size_t i = j; i <= n; ++i) g.push_back(a(i));
      g.push_back(0);
      for (std::size_t i = 2; i < j; ++i) g.push_back(1);
      break;
    }
    case 2: {
      std::size_t j = n;
      while (j >= 2 && a(j) != 1) --j;
      if (j < 2) {
        for (std::size_t i = 1; i < n; ++i) g.push_back(0);
        g.push_back(1);
        break;
      }
      for (std::size_t i = j + 1; i <= n; ++i) g.push_back(a(i));
      g.push_back(1);
      for (std::size_t i = 2; i <= j; ++i) g.push_back(a(i));
      break;
    }
    case 3:
      g.append(stem);
      g.push_back(1);
      break;
    case 4:
      g.push_back(0);
      g.append(stem);
      break;
    default:
      throw std::invalid_argument("pcr variant must be 1..4");
  }
  return g;
}

Symbol pcr_rule(int variant, SymbolView w, const std::function<bool(SymbolView)>& membership) {
  const Symbol flipped_first = static_cast<Symbol>(1 - w[0]);
  const SymbolView stem = w.subspan(1);
  if (!is_necklace(pcr_gamma(variant, stem))) return w[0];
  Word shifted(stem);
  shifted.push_back(flipped_first);
  return membership(shifted) ? flipped_first : w[0];
}

std::string to_dot(const CycleJoiningTree& tree, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  node [shape=box];\n";
  for (std::size_t v = 0; v < tree.size(); ++v) {
    out << "  n" << v << " [label=\"" << tree.node(v).str() << "\"" << (v == tree.root() ? ", peripheries=2" : "")
        << "];\n";
  }
  for (std::size_t v = 0; v < tree.size(); ++v) {
    const auto& e = tree.parent_edge(v);
    if (!e) continue;
    out << "  n" << e->parent << " -> n" << v << " [label=\"" << e->pair.stem.str() << " "
        << static_cast<unsigned>(e->pair.parent_symbol) << "/" << static_cast<unsigned>(e->pair.child_symbol)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ucycle
