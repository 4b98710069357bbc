#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ucycle/bot.hpp"
#include "ucycle/concat.hpp"
#include "ucycle/cyclejoin.hpp"
#include "ucycle/families.hpp"
#include "ucycle/words.hpp"

namespace testing_support {

using namespace ucycle;

inline std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

namespace golden {
inline const std::string db4 = "0000100110101111";
inline const std::string w3 = "1113213122123";
inline const std::string w4 =
    "1 1114 3214 3124 2124 3114 1323 1324 13 1314 2214 2314 1133 1134 2133 2134 1222 1224 1233 1234";
inline const std::string perm4 = "123 124 132 143 243 142 134 234";
inline const std::string orientable8 = "00001011 11001011 10011011 10001001 10001011 00101011";
inline const std::string table1[4] = {
    "0 000001 000011 000101 000111 001 001011 001101 001111 01 010111 011 011111 1",
    "0 000001 001 000101 01 001101 000011 001011 011 000111 010111 001111 011111 1",
    "1 111110 111100 111000 110 110100 110000 101110 101100 10 101000 100 100000 0",
    "1 111110 110 100 100110 111010 10 110010 100010 111100 111000 110000 100000 0",
};
inline const char* bot_counts[] = {"1",      "2",      "7",       "30",      "143",      "728",
                                   "3876",   "21318",  "120175",  "690690",  "4032015",  "23841480"};
inline const std::string five_symbol_rcl = "011311 311 011210 011211 411211 211 011114 011111";
}  // namespace golden

/// Quadratic reference: compares w with every rotation.
inline bool naive_is_necklace(SymbolView w) {
  const Word x(w);
  for (std::size_t r = 1; r < w.size(); ++r) {
    if (rotate_left(w, r) < x) return false;
  }
  return true;
}

/// Every word of length n over the alphabet, in lexicographic order.
template <class F>
void for_each_word(std::size_t n, Alphabet a, F&& visit) {
  std::vector<Symbol> w(n, a.lo);
  while (true) {
    visit(SymbolView(w));
    auto it = w.rbegin();
    for (; it != w.rend() && *it == a.hi; ++it) *it = a.lo;
    if (it == w.rend()) return;
    ++*it;
  }
}

/// Hand-built tree over {0..4}, given as child necklace to parent necklace.
inline CycleJoiningTree five_symbol_tree() {
  CycleJoiningTree t(6, Alphabet::kary(5));
  const std::vector<std::pair<std::string, std::string>> edges = {
      {"001121", "011211"}, {"011114", "011111"}, {"011211", "011111"}, {"011311", "011211"},
      {"112112", "011211"}, {"112114", "112112"}, {"113113", "011311"}};
  std::map<std::string, CycleJoiningTree::NodeId> id;
  auto node = [&](const std::string& label) {
    const Word neck = necklace_of(Word::parse(label)).necklace;
    auto it = id.find(neck.str());
    if (it != id.end()) return it->second;
    return id[neck.str()] = t.add_node(neck);
  };
  t.set_root(node("011111"));
  for (const auto& [child, parent] : edges) {
    const auto c = node(child);
    const auto p = node(parent);
    t.link(c, p);
  }
  t.validate();
  return t;
}

struct PropertyReport {
  std::map<std::string, std::size_t> checks;
  std::map<std::string, std::size_t> failures;
  std::vector<std::string> messages;

  bool ok() const {
    for (const auto& [k, v] : failures) {
      if (v) return false;
    }
    return true;
  }
  void record(const std::string& property, bool holds, const std::string& detail) {
    ++checks[property];
    if (!holds) {
      ++failures[property];
      if (messages.size() < 10) messages.push_back(property + ": " + detail);
    }
  }
};

inline bool has_prefix(SymbolView w, SymbolView p) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}
inline bool has_suffix(SymbolView w, SymbolView s) {
  return s.size() <= w.size() && std::equal(s.begin(), s.end(), w.end() - static_cast<std::ptrdiff_t>(s.size()));
}
inline Word power(SymbolView w, std::size_t k) {
  Word out;
  for (std::size_t i = 0; i < k; ++i) out.append(w);
  return out;
}

/// Checks the prefix/suffix relations between RCL-adjacent nodes of a
/// concatenation tree built from `cj`.
inline void check_adjacent_properties(const CycleJoiningTree& cj, const ConcatTree& ct, PropertyReport& report) {
  const auto& t = ct.bot;
  const auto order = rcl_order(t);
  const std::size_t m = order.size();
  const std::size_t n = t.payload(t.root()).label.size();

  // Chain top symbol keyed on the parent word of each chain member.
  std::map<Word, Symbol> chain_top;
  for (const Chain& ch : find_chains(cj)) {
    for (Symbol s : ch.symbols) {
      Word w{s};
      w.append(ch.stem);
      chain_top[w] = ch.symbols.front();
    }
  }

  Word seq;
  std::vector<std::size_t> start(m);
  for (std::size_t j = 0; j < m; ++j) {
    start[j] = seq.size();
    seq.append(aperiodic_prefix(t.payload(order[j]).label));
  }
  const std::size_t total = seq.size();
  auto cyclic = [&](std::size_t from, std::size_t len) {
    Word w;
    for (std::size_t k = 0; k < len; ++k) w.push_back(seq[(from + k) % total]);
    return w;
  };

  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t v = order[j];
    const std::size_t next = order[(j + 1) % m];
    const std::size_t prev = order[(j + m - 1) % m];
    const Word& a = t.payload(v).label;
    const std::size_t c = t.payload(v).change_index;
    const SymbolView beta1 = a.view().first(c - 1);
    const SymbolView beta2 = a.view().subspan(c);
    const Word& an = t.payload(next).label;
    const Word& ap = t.payload(prev).label;
    const std::string where = a.str() + " (c=" + std::to_string(c) + ")";

    if (!t.is_ancestor(v, next)) {
      report.record("prefix", has_prefix(an, beta1), where + " next " + an.str());
      const std::size_t p = period(an);
      if (p < n) {
        const std::size_t k = (t.payload(next).change_index - 1) / p;
        report.record("prefix-range", c <= k * p + p, where + " next " + an.str());
      }
    }
    if (!t.is_ancestor(v, prev)) {
      const Word& parent = t.payload(*t.parent(v)).label;
      const Symbol y_prime = parent[c - 1];
      Symbol lead = y_prime;
      if (ct.mode == Mode::right) {
        Word key{y_prime};
        key.append(rotate_left(a, c).view().first(n - 1));
        const auto it = chain_top.find(key);
        report.record("suffix-chain", it != chain_top.end(), where + " has no chain for " + key.str());
        if (it != chain_top.end()) lead = it->second;
      }
      Word suffix{lead};
      suffix.append(beta2);
      report.record("suffix", has_suffix(ap, suffix), where + " prev " + ap.str() + " wants " + suffix.str());
      const std::size_t p = period(ap);
      if (p < n) {
        const std::size_t k = (t.payload(prev).change_index - 1) / p;
        report.record("suffix-range", c > k * p, where + " prev " + ap.str());
      }
    }
    const std::size_t p = period(a);
    if (p < n) {
      const std::size_t k = (c - 1) / p;
      const Word root = aperiodic_prefix(a);
      report.record("periodic-prefix", has_prefix(an, power(root, k)), where + " next " + an.str());
      report.record("periodic-suffix", has_suffix(ap, power(root, n / p - k - 1)), where + " prev " + ap.str());
      report.record("periodic-prefix-stream", cyclic(start[j], (k + 1) * p) == power(root, k + 1), where);
      const std::size_t tail = (n / p - k) * p;
      const std::size_t end = start[j] + p;
      report.record("periodic-suffix-stream", cyclic((end + total * ((tail / total) + 1) - tail) % total, tail) ==
                                                  power(root, n / p - k),
                    where);
    }
  }
}

}  // namespace testing_support
