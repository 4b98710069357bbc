#include "ucycle/words.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace ucycle {

Word Word::parse(std::string_view text) {
  std::vector<Symbol> out;
  if (text.find(',') == std::string_view::npos) {
    out.reserve(text.size());
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("word: unexpected character '" + std::string(1, ch) + "'");
      }
      out.push_back(static_cast<Symbol>(ch - '0'));
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view tok = text.substr(pos, next - pos);
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value > 255) {
        throw std::invalid_argument("word: bad symbol '" + std::string(tok) + "'");
      }
      out.push_back(static_cast<Symbol>(value));
      pos = next + 1;
    }
  }
  if (out.empty()) throw std::invalid_argument("word: empty");
  return Word(std::move(out));
}

std::string Word::str() const { return to_string(symbols_); }

std::size_t WordHash::operator()(SymbolView w) const noexcept {
  // FNV-1a
  std::size_t h = 1469598103934665603ULL;
  for (Symbol s : w) {
    h ^= s;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string to_string(SymbolView w) {
  const bool digits = std::all_of(w.begin(), w.end(), [](Symbol s) { return s <= 9; });
  std::string out;
  if (digits) {
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(static_cast<unsigned>(w[i]));
  }
  return out;
}

std::size_t period(SymbolView w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  // KMP failure function; the smallest period dividing n is n - border(n).
  std::vector<std::size_t> fail(n + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  const std::size_t p = n - fail[n];
  return n % p == 0 ? p : n;
}

Word aperiodic_prefix(SymbolView w) { return Word(w.first(period(w))); }

Word ap_concat(std::span<const Word> words) {
  Word out;
  for (const Word& w : words) out.append(w.view().first(period(w)));
  return out;
}

Word rotate_left(SymbolView w, std::size_t r) {
  std::vector<Symbol> out(w.begin(), w.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r % out.size()), out.end());
  return Word(std::move(out));
}

Word reversed(SymbolView w) { return Word(std::vector<Symbol>(w.rbegin(), w.rend())); }

std::size_t least_rotation(SymbolView w) {
  const std::size_t n = w.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Symbol a = w[(i + k) % n];
    const Symbol b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

NecklaceRotation necklace_of(SymbolView w) {
  const std::size_t off = least_rotation(w);
  return {rotate_left(w, off), off};
}

bool is_necklace(SymbolView w) {
  const std::size_t n = w.size();
  std::size_t p = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (w[i] < w[i - p]) return false;
    if (w[i] > w[i - p]) p = i + 1;
  }
  return n % p == 0;
}

std::vector<Word> rotation_class(SymbolView w) {
  const std::size_t p = period(w);
  std::vector<Word> out;
  out.reserve(p);
  for (std::size_t r = 0; r < p; ++r) out.push_back(rotate_left(w, r));
  std::sort(out.begin(), out.end());
  return out;
}

Word bracelet_of(SymbolView w) {
  Word a = necklace_of(w).necklace;
  Word b = necklace_of(reversed(w)).necklace;
  return std::min(a, b);
}

bool is_asymmetric_bracelet(SymbolView w) {
  if (!is_necklace(w)) return false;
  const Word rev = necklace_of(reversed(w)).necklace;
  // w is the least rotation; it is the bracelet iff it does not exceed the
  // reversal's necklace, and asymmetric iff the two classes differ.
  return std::lexicographical_compare(w.begin(), w.end(), rev.begin(), rev.end());
}

bool is_weak_order(SymbolView w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  std::vector<std::size_t> count(n + 1, 0);
  for (Symbol s : w) {
    if (s < 1 || s > n) return false;
    ++count[s];
  }
  // Sorted ranks must be 1^c1 (c1+1)^c2 ... : each used rank equals one
  // plus the number of strictly smaller entries.
  std::size_t seen = 0;
  for (std::size_t v = 1; v <= n; ++v) {
    if (count[v] == 0) continue;
    if (v != seen + 1) return false;
    seen += count[v];
  }
  return true;
}

bool is_shorthand_perm(SymbolView w, std::size_t n) {
  if (n < 2 || w.size() != n - 1) return false;
  std::vector<bool> used(n + 1, false);
  for (Symbol s : w) {
    if (s < 1 || s > n || used[s]) return false;
    used[s] = true;
  }
  return true;
}

std::size_t weight(SymbolView w) {
  std::size_t total = 0;
  for (Symbol s : w) total += s;
  return total;
}

std::size_t longest_cyclic_run(SymbolView w, Symbol s) {
  const std::size_t n = w.size();
  if (std::all_of(w.begin(), w.end(), [s](Symbol x) { return x == s; })) return n;
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (w[i % n] == s) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best;
}

void for_each_necklace(std::size_t n, Alphabet alphabet,
                       const std::function<void(SymbolView)>& visit) {
  if (n == 0) return;
  std::vector<Symbol> a(n + 1, alphabet.lo);
  std::size_t p = 1;
  visit(SymbolView(a).subspan(1));
  while (true) {
    std::size_t i = n;
    while (i > 0 && a[i] == alphabet.hi) --i;
    if (i == 0) break;
    ++a[i];
    for (std::size_t j = i + 1; j <= n; ++j) a[j] = a[j - i];
    p = i;
    if (n % p == 0) visit(SymbolView(a).subspan(1));
  }
}

}  // namespace ucycle
