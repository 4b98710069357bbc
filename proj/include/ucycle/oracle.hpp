#pragma once

// Brute-force ground truth used by tests, the CLI --verify flag and the
// acceptance suite.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ucycle/family_spec.hpp"
#include "ucycle/words.hpp"

namespace ucycle {

/// Set of length-n windows over an alphabet. Words are coded in radix
/// |alphabet|; small universes use a dense bitmap, larger ones a hash set.
class WindowSet {
 public:
  WindowSet(std::size_t n, Alphabet alphabet);

  bool insert(SymbolView w);
  bool contains(SymbolView w) const;
  bool contains_code(std::uint64_t code) const;
  bool insert_code(std::uint64_t code);
  std::uint64_t code(SymbolView w) const;

  std::size_t size() const { return size_; }
  std::size_t order() const { return n_; }
  Alphabet alphabet() const { return alphabet_; }
  std::uint64_t radix() const { return radix_; }
  std::uint64_t universe() const { return universe_; }

 private:
  std::size_t n_;
  Alphabet alphabet_;
  std::uint64_t radix_;
  std::uint64_t universe_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

/// Union of the rotation classes of all member necklaces.
WindowSet enumerate_set(const FamilySpec& family);
/// Same set by filtering every word of the alphabet; exponential.
WindowSet enumerate_set_by_filter(const FamilySpec& family);

struct Verdict {
  bool ok = false;
  std::size_t length = 0;
  std::size_t expected = 0;
  std::size_t foreign = 0;     // windows outside the set
  std::size_t duplicated = 0;  // repeated windows
  std::size_t missing = 0;     // set members never seen
  std::vector<std::string> offending;  // first ten foreign or repeated windows

  /// Line-oriented summary.
  std::string report() const;
};

/// Reads seq cyclically (index wrap, no doubling).
Verdict verify_universal_cycle(SymbolView seq, const WindowSet& set);

using SuccessorRule = std::function<Symbol(SymbolView)>;

/// Emits the first symbol of each window until `start` recurs. Throws
/// std::runtime_error when `limit` steps pass first.
Word iterate_successor(const SuccessorRule& rule, const Word& start, std::size_t limit);

/// Equal length and one is a rotation of the other.
bool cyclic_equal(SymbolView a, SymbolView b);

/// First cyclic window whose reversal is also a window of seq (including
/// palindromic windows), if any.
std::optional<Word> reversal_conflict(SymbolView seq, std::size_t n);

}  // namespace ucycle
