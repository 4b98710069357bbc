#pragma once

// PCR-based cycle-joining trees held explicitly, their chains, and the
// successor rules derived from them (generic f1 with per-chain derangements,
// and the closed-form binary rules for the four simple parent rules).

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ucycle/family_spec.hpp"
#include "ucycle/words.hpp"

namespace ucycle {

class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two words differing only in their first symbol: parent_symbol·stem lies
/// in the parent's rotation class, child_symbol·stem in the child's.
struct ConjugatePair {
  Word stem;
  Symbol parent_symbol = 0;
  Symbol child_symbol = 0;

  Word parent_word() const;
  Word child_word() const;
  bool operator==(const ConjugatePair&) const = default;
};

/// Every conjugate pair joining the classes of `child` and `parent`.
std::vector<ConjugatePair> conjugate_pairs_between(SymbolView child, SymbolView parent);

class CycleJoiningTree {
 public:
  using NodeId = std::size_t;
  static constexpr NodeId npos = std::numeric_limits<NodeId>::max();

  struct Edge {
    NodeId parent = npos;
    ConjugatePair pair;
  };

  CycleJoiningTree(std::size_t n, Alphabet alphabet) : n_(n), alphabet_(alphabet) {}

  /// Adds a node for the class of `necklace` (which must be its least rotation).
  NodeId add_node(const Word& necklace);
  void set_root(NodeId id) { root_ = id; }
  /// Joins child to parent; the pair must straddle the two classes.
  void link(NodeId child, NodeId parent, const ConjugatePair& pair);
  /// Joins child to parent using their unique conjugate pair.
  void link(NodeId child, NodeId parent);

  /// Checks tree shape (single root, every other node reaches it, no
  /// cycles) and the Chain Property. Throws TreeError.
  void validate() const;

  std::size_t order() const { return n_; }
  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  NodeId root() const { return root_; }
  const Word& node(NodeId id) const { return nodes_[id]; }
  const std::vector<Word>& nodes() const { return nodes_; }
  const std::optional<Edge>& parent_edge(NodeId id) const { return parent_[id]; }
  const std::vector<NodeId>& children(NodeId id) const { return children_[id]; }
  std::optional<NodeId> find(SymbolView necklace) const;
  /// Node whose rotation class contains w.
  std::optional<NodeId> class_of(SymbolView w) const;
  /// |S_T|: the sum of the node periods.
  std::size_t window_count() const;
  std::size_t height() const;

 private:
  std::size_t n_;
  Alphabet alphabet_;
  NodeId root_ = npos;
  std::vector<Word> nodes_;
  std::vector<std::optional<Edge>> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::unordered_map<Word, NodeId, WordHash> index_;
};

/// Enumerates the family's necklaces, attaches each non-root to its parent
/// and validates the result.
CycleJoiningTree build_tree(const FamilySpec& family);

/// Maximal parent-to-child path whose joining pairs all share one stem.
struct Chain {
  std::vector<CycleJoiningTree::NodeId> nodes;  // parent first
  Word stem;
  std::vector<Symbol> symbols;  // x_1..x_m: nodes[i] holds symbols[i]·stem
};

std::vector<Chain> find_chains(const CycleJoiningTree& tree);

/// d_1..d_m (1-based, fixed-point free) for a chain.
using DerangementRule = std::function<std::vector<std::size_t>(const Chain&)>;
std::vector<std::size_t> up_derangement(std::size_t m);    // 2 3 ... m 1
std::vector<std::size_t> down_derangement(std::size_t m);  // m 1 2 ... m-1
DerangementRule all_up();
DerangementRule all_down();

/// The f1 successor of an explicit tree: words on a chain map to the chain
/// symbol selected by its derangement, every other word keeps its first
/// symbol (pure cycling).
class TreeSuccessor {
 public:
  TreeSuccessor(const CycleJoiningTree& tree, const DerangementRule& rule);

  /// Throws std::out_of_range when w is not in S_T.
  Symbol operator()(SymbolView w) const;
  bool in_domain(SymbolView w) const { return tree_->class_of(w).has_value(); }

 private:
  const CycleJoiningTree* tree_;
  std::unordered_map<Word, Symbol, WordHash> next_;
};

Symbol successor_f1(const CycleJoiningTree& tree, const DerangementRule& rule, SymbolView w);
Symbol successor_up(const CycleJoiningTree& tree, SymbolView w);
Symbol successor_down(const CycleJoiningTree& tree, SymbolView w);

/// The rotation of the flipped word used by the closed-form binary rule
/// `variant` (1..4), built from the stem a_2..a_n.
Word pcr_gamma(int variant, SymbolView stem);

/// Closed-form binary successor for the subtree whose string set is
/// described by `membership` (rotation invariant).
Symbol pcr_rule(int variant, SymbolView w, const std::function<bool(SymbolView)>& membership);

/// Graphviz rendering: one node per necklace, edges labelled with the stem
/// and the two first symbols of the joining pair.
std::string to_dot(const CycleJoiningTree& tree, const std::string& name = "cycle_joining_tree");

}  // namespace ucycle
