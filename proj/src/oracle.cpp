#include "ucycle/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ucycle {

namespace {
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 27;
}

WindowSet::WindowSet(std::size_t n, Alphabet alphabet) : n_(n), alphabet_(alphabet), radix_(alphabet.size()) {
  universe_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (universe_ > std::numeric_limits<std::uint64_t>::max() / radix_) {
      throw std::length_error("window universe does not fit in 64 bits");
    }
    universe_ *= radix_;
  }
  if (universe_ <= kDenseLimit) dense_.assign((universe_ + 63) / 64, 0);
}

std::uint64_t WindowSet::code(SymbolView w) const {
  std::uint64_t c = 0;
  for (Symbol s : w) c = c * radix_ + (s - alphabet_.lo);
  return c;
}

bool WindowSet::contains_code(std::uint64_t c) const {
  if (!dense_.empty()) return (dense_[c >> 6] >> (c & 63)) & 1;
  return sparse_.count(c) != 0;
}

bool WindowSet::insert_code(std::uint64_t c) {
  bool fresh;
  if (!dense_.empty()) {
    fresh = !((dense_[c >> 6] >> (c & 63)) & 1);
    dense_[c >> 6] |= std::uint64_t{1} << (c & 63);
  } else {
    fresh = sparse_.insert(c).second;
  }
  size_ += fresh;
  return fresh;
}

bool WindowSet::insert(SymbolView w) {
  if (w.size() != n_) throw std::invalid_argument("window has the wrong length");
  for (Symbol s : w) {
    if (!alphabet_.contains(s)) throw std::invalid_argument("window symbol outside alphabet");
  }
  return insert_code(code(w));
}

bool WindowSet::contains(SymbolView w) const {
  if (w.size() != n_) return false;
  for (Symbol s : w) {
    if (!alphabet_.contains(s)) return false;
  }
  return contains_code(code(w));
}

WindowSet enumerate_set(const FamilySpec& family) {
  const std::size_t len = family.root.size();
  WindowSet set(len, family.alphabet);
  if (family.empty()) return set;
  for_each_necklace(len, family.alphabet, [&](SymbolView w) {
    if (!family.member(w)) return;
    const std::size_t p = period(w);
    for (std::size_t r = 0; r < p; ++r) set.insert(rotate_left(w, r));
  });
  return set;
}

WindowSet enumerate_set_by_filter(const FamilySpec& family) {
  const std::size_t len = family.root.size();
  WindowSet set(len, family.alphabet);
  std::vector<Symbol> w(len, family.alphabet.lo);
  while (true) {
    if (family.member(w)) set.insert(w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] == family.alphabet.hi) w[--i] = family.alphabet.lo;
    if (i == 0) break;
    ++w[i - 1];
  }
  return set;
}

std::string Verdict::report() const {
  std::ostringstream out;
  out << "status " << (ok ? "OK" : "FAIL") << "\n"
      << "length " << length << " expected " << expected << "\n"
      << "foreign " << foreign << " duplicated " << duplicated << " missing " << missing << "\n";
  for (const auto& w : offending) out << "window " << w << "\n";
  return out.str();
}

Verdict verify_universal_cycle(SymbolView seq, const WindowSet& set) {
  Verdict v;
  v.length = seq.size();
  v.expected = set.size();
  const std::size_t n = set.order();
  const std::size_t len = seq.size();
  WindowSet seen(n, set.alphabet());
  auto note = [&](std::size_t start) {
    if (v.offending.size() >= 10) return;
    Word w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(seq[(start + k) % len]);
    v.offending.push_back(w.str());
  };
  const bool clean = std::all_of(seq.begin(), seq.end(), [&](Symbol s) { return set.alphabet().contains(s); });
  auto check = [&](std::size_t i, std::uint64_t code, bool valid) {
    if (!valid || !set.contains_code(code)) {
      ++v.foreign;
      note(i);
    } else if (!seen.insert_code(code)) {
      ++v.duplicated;
      note(i);
    }
  };
  if (len > 0 && clean) {
    const std::uint64_t top = set.universe() / set.radix();  // weight of the leading symbol
    const Symbol lo = set.alphabet().lo;
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < n; ++k) code = code * set.radix() + (seq[k % len] - lo);
    for (std::size_t i = 0; i < len; ++i) {
      if (i > 0) {
        code = (code - static_cast<std::uint64_t>(seq[i - 1] - lo) * top) * set.radix() + (seq[(i + n - 1) % len] - lo);
      }
      check(i, code, true);
    }
  } else {
    for (std::size_t i = 0; i < len; ++i) {
      Word w;
      for (std::size_t k = 0; k < n; ++k) w.push_back(seq[(i + k) % len]);
      const bool valid = set.contains(w);
      check(i, valid ? set.code(w) : 0, valid);
    }
  }
  v.missing = set.size() - seen.size();
  v.ok = v.foreign == 0 && v.duplicated == 0 && v.missing == 0 && len == set.size();
  return v;
}

Word iterate_successor(const SuccessorRule& rule, const Word& start, std::size_t limit) {
  const std::size_t n = start.size();
  std::vector<Symbol> buf(start.begin(), start.end());
  buf.reserve(n + std::min<std::size_t>(limit, std::size_t{1} << 26));
  for (std::size_t step = 1; step <= limit; ++step) {
    buf.push_back(rule(SymbolView(buf).subspan(step - 1, n)));
    if (std::equal(start.begin(), start.end(), buf.begin() + static_cast<std::ptrdiff_t>(step))) {
      buf.resize(step);
      return Word(std::move(buf));
    }
  }
  throw std::runtime_error("successor iteration did not return to " + start.str() + " within " +
                           std::to_string(limit) + " steps");
}

bool cyclic_equal(SymbolView a, SymbolView b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return rotate_left(a, least_rotation(a)) == rotate_left(b, least_rotation(b));
}

std::optional<Word> reversal_conflict(SymbolView seq, std::size_t n) {
  const std::size_t len = seq.size();
  if (len == 0) return std::nullopt;
  std::unordered_set<Word, WordHash> windows;
  std::vector<Word> order;
  for (std::size_t i = 0; i < len; ++i) {
    Word w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(seq[(i + k) % len]);
    windows.insert(w);
    order.push_back(std::move(w));
  }
  for (const Word& w : order) {
    if (windows.count(reversed(w))) return w;
  }
  return std::nullopt;
}

}  // namespace ucycle
