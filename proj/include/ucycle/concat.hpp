#pragma once

// Concatenation trees: cycle-joining trees relabelled so that each node
// differs from its parent at one change index, arranged as a BOT.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "ucycle/bot.hpp"
#include "ucycle/cyclejoin.hpp"
#include "ucycle/family_spec.hpp"
#include "ucycle/words.hpp"

namespace ucycle {

class ConcatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed 1-based index interval.
struct IndexRange {
  std::size_t first = 1;
  std::size_t last = 0;
  bool contains(std::size_t i) const { return i >= first && i <= last; }
  bool operator==(const IndexRange&) const = default;
};

/// The period-aligned block [jp+1, jp+p] holding c.
IndexRange acceptable_range(SymbolView label, std::size_t c);

struct ConcatNode {
  Word label;
  std::size_t change_index = 1;
  CycleJoiningTree::NodeId source = CycleJoiningTree::npos;
};

struct ConcatTree {
  Bot<ConcatNode> bot;
  Mode mode = Mode::right;
};

/// Checks every labelling and ordering invariant; throws ConcatError.
void validate(const ConcatTree& tree);

ConcatTree convert(const CycleJoiningTree& tree, std::size_t c, Mode mode);

/// Node labels in RCL order.
std::vector<Word> rcl_labels(const ConcatTree& tree);
Word rcl_sequence(const ConcatTree& tree);

inline constexpr int kAbsent = -1;

struct OracleCost {
  std::uint64_t calls = 0;           // per-node table fills
  std::uint64_t work = 0;            // symbol-level operations
  std::uint64_t necklace_tests = 0;  // necklace tests performed
  std::uint64_t failed_tests = 0;    // necklace tests that rejected a candidate

  OracleCost& operator+=(const OracleCost& o) {
    calls += o.calls;
    work += o.work;
    necklace_tests += o.necklace_tests;
    failed_tests += o.failed_tests;
    return *this;
  }
};

/// Child lookup for a concatenation tree that is never stored. For a label
/// with change index c, fill() writes into out[i-1] the symbol that turns
/// position i into a child, or kAbsent. Only indices inside the acceptable
/// range can be non-absent.
class ChildOracle {
 public:
  virtual ~ChildOracle() = default;
  virtual void fill(SymbolView label, std::size_t c, std::span<int> out, OracleCost& cost) const = 0;

  /// Single-index query built on fill().
  int child(SymbolView label, std::size_t c, std::size_t i) const;
};

/// Inverts the family's parent rule by trying every symbol at every index.
class GenericChildOracle final : public ChildOracle {
 public:
  explicit GenericChildOracle(FamilySpec family) : family_(std::move(family)) {}
  void fill(SymbolView label, std::size_t c, std::span<int> out, OracleCost& cost) const override;

 private:
  FamilySpec family_;
};

std::shared_ptr<const ChildOracle> generic_child_oracle(const FamilySpec& family);

/// Receives one node's aperiodic prefix at a time.
class SymbolSink {
 public:
  virtual ~SymbolSink() = default;
  virtual void batch(SymbolView symbols, SymbolView label, std::size_t change_index) = 0;
};

class CollectSink final : public SymbolSink {
 public:
  void batch(SymbolView symbols, SymbolView, std::size_t) override { out_.append(symbols); }
  const Word& sequence() const { return out_; }

 private:
  Word out_;
};

class CountSink final : public SymbolSink {
 public:
  void batch(SymbolView symbols, SymbolView, std::size_t) override { count_ += symbols.size(); }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_ = 0;
};

struct NodeVisit {
  SymbolView label;
  std::size_t change_index;
  std::size_t depth;
  std::size_t children;
  OracleCost cost;  // spent filling this node's child table
};

struct StreamOptions {
  std::size_t depth_limit = 0;  // 0: unlimited
  std::function<void(const NodeVisit&)> observer;
};

struct StreamStats {
  std::uint64_t nodes = 0;
  std::uint64_t periodic_nodes = 0;
  std::uint64_t symbols = 0;
  std::size_t max_depth = 0;
  OracleCost cost;
  std::vector<std::uint64_t> failure_histogram;  // [k]: nodes with k failed tests
};

/// Iterative RCL traversal of the tree implied by the oracle. One label
/// buffer is mutated in place and restored after each subtree.
StreamStats stream_rcl(const Word& root, std::size_t c, Mode mode, const ChildOracle& oracle, SymbolSink& sink,
                       const StreamOptions& options = {});

/// Collects the whole stream into a word.
Word stream_sequence(const Word& root, std::size_t c, Mode mode, const ChildOracle& oracle);

}  // namespace ucycle
