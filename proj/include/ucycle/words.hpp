#pragma once

// String primitives shared by every construction: rotations, periods,
// necklace and bracelet tests, and family membership predicates.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ucycle {

using Symbol = std::uint8_t;
using SymbolView = std::span<const Symbol>;

/// Closed symbol range [lo, hi]. Binary families use {0,1}; rank-valued
/// families (weak orders, shorthand permutations) use {1..n} directly.
struct Alphabet {
  Symbol lo = 0;
  Symbol hi = 1;

  static constexpr Alphabet binary() { return {0, 1}; }
  static constexpr Alphabet kary(unsigned k) { return {0, static_cast<Symbol>(k - 1)}; }
  static constexpr Alphabet ranks(unsigned n) { return {1, static_cast<Symbol>(n)}; }

  constexpr bool contains(Symbol s) const { return s >= lo && s <= hi; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(hi - lo) + 1; }
  bool operator==(const Alphabet&) const = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  explicit Word(SymbolView symbols) : symbols_(symbols.begin(), symbols.end()) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  /// Accepts contiguous digits ("0110") or comma-separated integers ("1,10,3").
  static Word parse(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol& operator[](std::size_t i) { return symbols_[i]; }
  SymbolView view() const { return symbols_; }
  operator SymbolView() const { return symbols_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }
  void push_back(Symbol s) { symbols_.push_back(s); }
  void append(SymbolView s) { symbols_.insert(symbols_.end(), s.begin(), s.end()); }

  std::string str() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

struct WordHash {
  std::size_t operator()(SymbolView w) const noexcept;
  std::size_t operator()(const Word& w) const noexcept { return (*this)(w.view()); }
};

namespace literals {
inline Word operator""_w(const char* text, std::size_t len) {
  return Word::parse(std::string_view(text, len));
}
}  // namespace literals

/// Digits when every symbol is at most 9, comma-separated decimals otherwise.
std::string to_string(SymbolView w);

/// Smallest p such that w is (w[0..p))^(|w|/p). Linear time.
std::size_t period(SymbolView w);
Word aperiodic_prefix(SymbolView w);
Word ap_concat(std::span<const Word> words);

Word rotate_left(SymbolView w, std::size_t r);
Word reversed(SymbolView w);

/// Least left-rotation amount producing the lexicographically smallest
/// rotation. Linear time.
std::size_t least_rotation(SymbolView w);

struct NecklaceRotation {
  Word necklace;
  std::size_t offset = 0;  // necklace == rotate_left(w, offset)
};
NecklaceRotation necklace_of(SymbolView w);

/// Linear-time test (prenecklace scan with Lyndon-prefix length).
bool is_necklace(SymbolView w);

std::vector<Word> rotation_class(SymbolView w);

Word bracelet_of(SymbolView w);
bool is_asymmetric_bracelet(SymbolView w);

/// Rank representation with ties: symbols in 1..n, |w| = n.
bool is_weak_order(SymbolView w);
/// Length n-1 prefix of a permutation of 1..n.
bool is_shorthand_perm(SymbolView w, std::size_t n);

std::size_t weight(SymbolView w);
/// Longest run of `s` when w is read cyclically; |w| if w is constant s.
std::size_t longest_cyclic_run(SymbolView w, Symbol s);

/// Visits every necklace of length n over the alphabet in lexicographic
/// order (FKM prenecklace generation filtered by n mod p == 0).
void for_each_necklace(std::size_t n, Alphabet alphabet,
                       const std::function<void(SymbolView)>& visit);

}  // namespace ucycle
