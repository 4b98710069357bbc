#include "ucycle/concat.hpp"

#include <algorithm>
#include <deque>

namespace ucycle {

IndexRange acceptable_range(SymbolView label, std::size_t c) {
  const std::size_t n = label.size();
  if (c < 1 || c > n) throw ConcatError("change index " + std::to_string(c) + " outside 1.." + std::to_string(n));
  const std::size_t p = period(label);
  const std::size_t j = (c - 1) / p;
  return {j * p + 1, j * p + p};
}

namespace {

Side side_for(std::size_t child_c, std::size_t parent_c, Mode mode) {
  if (child_c < parent_c) return Side::left;
  if (child_c > parent_c) return Side::right;
  return mode == Mode::left ? Side::left : Side::right;
}

}  // namespace

void validate(const ConcatTree& tree) {
  const auto& bot = tree.bot;
  const std::size_t n = bot.payload(bot.root()).label.size();
  for (std::size_t v = 0; v < bot.size(); ++v) {
    const ConcatNode& node = bot.payload(v);
    if (node.label.size() != n) throw ConcatError("label " + node.label.str() + " has the wrong length");
    if (node.change_index < 1 || node.change_index > n) {
      throw ConcatError("change index of " + node.label.str() + " outside 1..n");
    }
    for (Side s : {Side::left, Side::right}) {
      const auto& kids = bot.children(v, s);
      for (std::size_t k = 0; k < kids.size(); ++k) {
        const ConcatNode& child = bot.payload(kids[k]);
        if (k > 0 && bot.payload(kids[k - 1]).change_index >= child.change_index) {
          throw ConcatError("children of " + node.label.str() + " are not ordered by change index");
        }
        if (side_for(child.change_index, node.change_index, tree.mode) != s) {
          throw ConcatError("child " + child.label.str() + " is on the wrong side of " + node.label.str());
        }
        std::size_t diffs = 0;
        for (std::size_t i = 0; i < n; ++i) diffs += child.label[i] != node.label[i];
        if (diffs != 1 || child.label[child.change_index - 1] == node.label[child.change_index - 1]) {
          throw ConcatError("child " + child.label.str() + " does not differ from " + node.label.str() +
                            " exactly at its change index");
        }
        if (!acceptable_range(node.label, node.change_index).contains(child.change_index)) {
          throw ConcatError("change index " + std::to_string(child.change_index) + " of " + child.label.str() +
                            " lies outside the acceptable range of " + node.label.str());
        }
      }
    }
  }
}

ConcatTree convert(const CycleJoiningTree& tree, std::size_t c, Mode mode) {
  if (tree.empty()) throw ConcatError("cannot convert an empty tree");
  const std::size_t n = tree.order();
  if (c < 1 || c > n) throw ConcatError("root change index outside 1..n");
  ConcatTree out{Bot<ConcatNode>(ConcatNode{tree.node(tree.root()), c, tree.root()}), mode};
  std::deque<std::size_t> queue{out.bot.root()};
  while (!queue.empty()) {
    const std::size_t b = queue.front();
    queue.pop_front();
    const ConcatNode parent = out.bot.payload(b);
    const IndexRange range = acceptable_range(parent.label, parent.change_index);
    std::vector<ConcatNode> kids;
    for (auto child : tree.children(parent.source)) {
      const ConjugatePair& pair = tree.parent_edge(child)->pair;
      const Word want = pair.parent_word();
      std::size_t placed = 0;
      for (std::size_t i = range.first; i <= range.last; ++i) {
        bool match = true;
        for (std::size_t k = 0; k < n && match; ++k) match = parent.label[(i - 1 + k) % n] == want[k];
        if (match) {
          placed = i;
          break;
        }
      }
      if (!placed) {
        throw ConcatError("no index in the acceptable range of " + parent.label.str() + " joins " +
                          tree.node(child).str());
      }
      Word label = parent.label;
      label[placed - 1] = pair.child_symbol;
      kids.push_back({std::move(label), placed, child});
    }
    std::sort(kids.begin(), kids.end(),
              [](const ConcatNode& a, const ConcatNode& b) { return a.change_index < b.change_index; });
    for (std::size_t k = 1; k < kids.size(); ++k) {
      if (kids[k].change_index == kids[k - 1].change_index) {
        throw ConcatError("two children of " + parent.label.str() + " share change index " +
                          std::to_string(kids[k].change_index));
      }
    }
    for (ConcatNode& kid : kids) {
      const Side s = side_for(kid.change_index, parent.change_index, mode);
      queue.push_back(out.bot.add_child(b, s, std::move(kid)));
    }
  }
  validate(out);
  return out;
}

std::vector<Word> rcl_labels(const ConcatTree& tree) {
  std::vector<Word> labels;
  for (std::size_t v : rcl_order(tree.bot)) labels.push_back(tree.bot.payload(v).label);
  return labels;
}

Word rcl_sequence(const ConcatTree& tree) { return ap_concat(rcl_labels(tree)); }

int ChildOracle::child(SymbolView label, std::size_t c, std::size_t i) const {
  std::vector<int> table(label.size(), kAbsent);
  OracleCost cost;
  fill(label, c, table, cost);
  return i >= 1 && i <= label.size() ? table[i - 1] : kAbsent;
}

void GenericChildOracle::fill(SymbolView label, std::size_t c, std::span<int> out, OracleCost& cost) const {
  const std::size_t n = label.size();
  std::fill(out.begin(), out.end(), kAbsent);
  ++cost.calls;
  const IndexRange range = acceptable_range(label, c);
  Word candidate(label);
  for (std::size_t i = range.first; i <= range.last; ++i) {
    const Symbol keep = label[i - 1];
    for (unsigned x = family_.alphabet.lo; x <= family_.alphabet.hi; ++x) {
      if (x == keep) continue;
      candidate[i - 1] = static_cast<Symbol>(x);
      cost.work += n;
      ++cost.necklace_tests;
      if (!family_.member(candidate)) continue;
      const auto [neck, offset] = necklace_of(candidate);
      const auto move = family_.parent(neck);
      if (!move || move->symbol != keep) continue;
      // Position i-1 of the candidate sits at (i-1-offset) mod n in the necklace.
      const std::size_t k = (i - 1 + n - offset % n) % n;
      const std::size_t q = period(neck);
      if (move->index % q != k % q) continue;
      out[i - 1] = static_cast<int>(x);
      break;
    }
    candidate[i - 1] = keep;
  }
}

std::shared_ptr<const ChildOracle> generic_child_oracle(const FamilySpec& family) {
  return std::make_shared<GenericChildOracle>(family);
}

StreamStats stream_rcl(const Word& root, std::size_t c, Mode mode, const ChildOracle& oracle, SymbolSink& sink,
                       const StreamOptions& options) {
  const std::size_t n = root.size();
  if (n == 0) throw ConcatError("empty root");
  if (c < 1 || c > n) throw ConcatError("root change index outside 1..n");
  const std::size_t ell = mode == Mode::left ? 1 : 0;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Frame {
    std::size_t c;
    std::size_t i;
    bool left_phase;
    std::size_t changed;
    Symbol saved;
  };

  StreamStats stats;
  Word label = root;
  std::vector<std::vector<int>> tables;
  std::vector<Frame> stack;

  auto enter = [&](std::size_t change_index) {
    const std::size_t depth = stack.size();
    if (options.depth_limit && depth >= options.depth_limit) {
      throw ConcatError("depth limit exceeded; the child oracle is inconsistent");
    }
    if (tables.size() <= depth) tables.emplace_back(n, kAbsent);
    OracleCost local;
    oracle.fill(label, change_index, tables[depth], local);
    stats.cost += local;
    if (stats.failure_histogram.size() <= local.failed_tests) stats.failure_histogram.resize(local.failed_tests + 1);
    ++stats.failure_histogram[local.failed_tests];
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    if (options.observer) {
      const auto& t = tables[depth];
      const auto kids = static_cast<std::size_t>(std::count_if(t.begin(), t.end(), [](int x) { return x != kAbsent; }));
      options.observer(NodeVisit{label, change_index, depth, kids, local});
    }
    stack.push_back({change_index, change_index + ell, false, kNone, 0});
  };

  auto descend = [&](Frame& f, std::size_t i, const std::vector<int>& table) {
    f.changed = i - 1;
    f.saved = label[i - 1];
    label[i - 1] = static_cast<Symbol>(table[i - 1]);
    enter(i);
  };

  enter(c);
  while (!stack.empty()) {
    const std::size_t depth = stack.size() - 1;
    Frame& f = stack.back();
    if (f.changed != kNone) {
      label[f.changed] = f.saved;
      f.changed = kNone;
    }
    const std::vector<int>& table = tables[depth];
    if (!f.left_phase) {
      while (f.i <= n && table[f.i - 1] == kAbsent) ++f.i;
      if (f.i <= n) {
        const std::size_t i = f.i++;
        descend(f, i, table);
        continue;
      }
      const std::size_t p = period(label);
      if (p < n) ++stats.periodic_nodes;
      stats.symbols += p;
      sink.batch(label.view().first(p), label, f.c);
      f.left_phase = true;
      f.i = 1;
    }
    const std::size_t end = f.c - 1 + ell;
    while (f.i <= end && table[f.i - 1] == kAbsent) ++f.i;
    if (f.i <= end) {
      const std::size_t i = f.i++;
      descend(f, i, table);
      continue;
    }
    stack.pop_back();
  }
  return stats;
}

Word stream_sequence(const Word& root, std::size_t c, Mode mode, const ChildOracle& oracle) {
  CollectSink sink;
  stream_rcl(root, c, mode, oracle, sink);
  return sink.sequence();
}

}  // namespace ucycle
