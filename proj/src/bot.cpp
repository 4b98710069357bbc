#include "ucycle/bot.hpp"

#include <set>

namespace ucycle {

BigInt count_bots(std::size_t n) {
  if (n == 0) return 0;
  // forest[m]: ordered sequences of BOTs with m nodes in total.
  std::vector<BigInt> trees(n + 1, 0), forest(n + 1, 0);
  forest[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t a = 0; a < m; ++a) trees[m] += forest[a] * forest[m - 1 - a];
    for (std::size_t i = 1; i <= m; ++i) forest[m] += trees[i] * forest[m - i];
  }
  return trees[n];
}

Bot<std::size_t> bot_from_encoding(const std::string& code) {
  if (code.size() < 3 || code.front() != '(') throw std::invalid_argument("bad BOT encoding");
  Bot<std::size_t> t(0);
  struct Frame {
    std::size_t node;
    Side side;
  };
  std::vector<Frame> stack{{0, Side::left}};
  std::size_t next = 1;
  for (std::size_t i = 1; i < code.size(); ++i) {
    const char ch = code[i];
    if (stack.empty()) throw std::invalid_argument("bad BOT encoding");
    if (ch == '(') {
      const auto id = t.add_child(stack.back().node, stack.back().side, next++);
      stack.push_back({id, Side::left});
    } else if (ch == '|') {
      stack.back().side = Side::right;
    } else if (ch == ')') {
      stack.pop_back();
    } else {
      throw std::invalid_argument("bad BOT encoding");
    }
  }
  if (!stack.empty()) throw std::invalid_argument("bad BOT encoding");
  return t;
}

std::vector<std::string> enumerate_bot_shapes(std::size_t n) {
  if (n == 0) return {};
  std::set<std::string> level{"(|)"};
  for (std::size_t size = 2; size <= n; ++size) {
    std::set<std::string> grown;
    for (const std::string& code : level) {
      const Bot<std::size_t> base = bot_from_encoding(code);
      for (std::size_t v = 0; v < base.size(); ++v) {
        for (Side s : {Side::left, Side::right}) {
          for (std::size_t pos = 0; pos <= base.children(v, s).size(); ++pos) {
            Bot<std::size_t> t = base;
            t.insert_child(v, s, pos, 0);
            grown.insert(bot_encoding(t));
          }
        }
      }
    }
    level = std::move(grown);
  }
  return {level.begin(), level.end()};
}

}  // namespace ucycle
