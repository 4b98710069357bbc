#include "ucycle/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "ucycle/bot.hpp"
#include "ucycle/concat.hpp"
#include "ucycle/cyclejoin.hpp"
#include "ucycle/oracle.hpp"

namespace ucycle::cli {

namespace {

constexpr std::uint64_t kVerifyUniverse = std::uint64_t{1} << 26;

struct Resolved {
  FamilySpec family;
  std::size_t c;
  Mode mode;
};

Resolved resolve(const RunConfig& cfg, std::size_t n) {
  if (cfg.family.empty()) throw std::invalid_argument("--family is required");
  if (n == 0) throw std::invalid_argument("--n is required");
  FamilySpec family = make_family(cfg.family, n, cfg.constraint);
  const std::size_t len = family.root.size();
  const std::size_t c = cfg.change_index ? cfg.change_index : family.default_change_index;
  if (c < 1 || c > len) throw std::invalid_argument("--change-index must lie in 1.." + std::to_string(len));
  Mode mode = family.default_mode;
  if (cfg.mode == "left") {
    mode = Mode::left;
  } else if (cfg.mode == "right") {
    mode = Mode::right;
  } else if (!cfg.mode.empty()) {
    throw std::invalid_argument("--mode must be left or right");
  }
  return {std::move(family), c, mode};
}

const ChildOracle& oracle_for(const FamilySpec& f, std::shared_ptr<const ChildOracle>& holder) {
  holder = f.fast_child ? f.fast_child : generic_child_oracle(f);
  return *holder;
}

class PerNodeSink final : public SymbolSink {
 public:
  PerNodeSink(std::ostream& out, Word& all) : out_(out), all_(all) {}
  void batch(SymbolView symbols, SymbolView label, std::size_t c) override {
    out_ << to_string(label) << ' ' << c << ' ' << to_string(symbols) << '\n';
    all_.append(symbols);
  }

 private:
  std::ostream& out_;
  Word& all_;
};

std::string concat_dot(const ConcatTree& ct, const std::string& name) {
  return bot_to_dot<ConcatNode>(
      ct.bot,
      [&](std::size_t v) {
        const auto& p = ct.bot.payload(v);
        return p.label.str() + " (" + std::to_string(p.change_index) + ")";
      },
      name);
}

// Symbols joined the way words serialize, without the per-word digit check.
std::string render(const Word& seq, const Alphabet& a) { return a.hi <= 9 ? seq.str() : to_string(seq); }

int verify(const FamilySpec& family, const Word& seq, std::ostream& err) {
  const std::size_t len = family.root.size();
  std::uint64_t universe = 1;
  for (std::size_t i = 0; i < len && universe <= kVerifyUniverse; ++i) universe *= family.alphabet.size();
  if (universe > kVerifyUniverse) {
    err << "verify skipped: window universe exceeds oracle bound\n";
    return kOk;
  }
  const Verdict v = verify_universal_cycle(seq, enumerate_set(family));
  err << v.report();
  bool ok = v.ok;
  if (family.name == "orientable" && !seq.empty()) {
    const auto bad = reversal_conflict(seq, len);
    err << "orientable " << (bad ? "FAIL " + bad->str() : std::string("OK")) << "\n";
    ok = ok && !bad;
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(cfg, cfg.n);
  Word seq;
  if (!r.family.empty()) {
    if (cfg.format == Format::dot) {
      out << concat_dot(convert(build_tree(r.family), r.c, r.mode), "concatenation_tree");
      return kOk;
    }
    std::shared_ptr<const ChildOracle> holder;
    const ChildOracle& oracle = oracle_for(r.family, holder);
    StreamOptions opts;
    opts.depth_limit = r.family.height_bound + 1;
    if (cfg.format == Format::per_node) {
      PerNodeSink sink(out, seq);
      stream_rcl(r.family.root, r.c, r.mode, oracle, sink, opts);
    } else {
      CollectSink sink;
      stream_rcl(r.family.root, r.c, r.mode, oracle, sink, opts);
      seq = sink.sequence();
    }
  }
  if (cfg.format == Format::raw) {
    Word shown = seq;
    if (!cfg.start.empty()) {
      const Word start = Word::parse(cfg.start);
      const std::size_t len = seq.size();
      std::size_t found = len;
      for (std::size_t i = 0; i < len && found == len; ++i) {
        bool match = true;
        for (std::size_t k = 0; k < start.size() && match; ++k) match = seq[(i + k) % len] == start[k];
        if (match) found = i;
      }
      if (found == len) throw std::invalid_argument("--start window " + cfg.start + " does not occur");
      shown = rotate_left(seq, found);
    }
    out << render(shown, r.family.alphabet) << '\n';
  }
  return cfg.verify ? verify(r.family, seq, err) : kOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Resolved r = resolve(cfg, cfg.n);
  if (r.family.empty()) {
    out << "empty family: nothing to compare\n";
    return kOk;
  }
  const CycleJoiningTree tree = build_tree(r.family);
  const Word rcl = rcl_sequence(convert(tree, r.c, r.mode));
  std::shared_ptr<const ChildOracle> holder;
  const Word streamed = stream_sequence(r.family.root, r.c, r.mode, oracle_for(r.family, holder));
  const TreeSuccessor succ(tree, r.mode == Mode::left ? all_up() : all_down());
  const std::size_t len = tree.order();
  Word start;
  for (std::size_t k = 0; k < len; ++k) start.push_back(rcl[k % rcl.size()]);
  const Word iterated = iterate_successor(std::cref(succ), start, rcl.size() + 1);
  const bool a = cyclic_equal(rcl, iterated);
  const bool b = rcl == streamed;
  out << "rcl-vs-successor " << (a ? "EQUAL" : "DIFFERENT") << "\n";
  out << "rcl-vs-stream " << (b ? "EQUAL" : "DIFFERENT") << "\n";
  return a && b ? kOk : kVerifyFailed;
}

int cmd_count_bots(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.bots == 0) throw std::invalid_argument("count-bots needs a positive node count");
  for (std::size_t i = 1; i <= cfg.bots; ++i) out << i << ' ' << count_bots(i) << '\n';
  return kOk;
}

int cmd_export_dot(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Resolved r = resolve(cfg, cfg.n);
  if (r.family.empty()) throw std::invalid_argument("family is empty at this order");
  const CycleJoiningTree tree = build_tree(r.family);
  out << to_dot(tree, "cycle_joining_tree");
  out << concat_dot(convert(tree, r.c, r.mode), "concatenation_tree");
  return kOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::size_t lo = cfg.n, hi = cfg.n;
  if (!cfg.n_range.empty()) {
    const auto dots = cfg.n_range.find("..");
    try {
      if (dots == std::string::npos) {
        lo = hi = std::stoul(cfg.n_range);
      } else {
        lo = std::stoul(cfg.n_range.substr(0, dots));
        hi = std::stoul(cfg.n_range.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("--n must be a number or a range A..B");
    }
  }
  if (lo == 0 || hi < lo) throw std::invalid_argument("bad --n range");
  double best_min = 0, best_max = 0;
  out << "n symbols seconds ns_per_symbol work_per_node periodic_nodes\n";
  for (std::size_t n = lo; n <= hi; ++n) {
    const Resolved r = resolve(cfg, n);
    if (r.family.empty()) continue;
    std::shared_ptr<const ChildOracle> holder;
    const ChildOracle& oracle = oracle_for(r.family, holder);
    double best = 1e300;
    StreamStats stats;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(cfg.reps, 1); ++rep) {
      CountSink sink;
      const auto t0 = std::chrono::steady_clock::now();
      stats = stream_rcl(r.family.root, r.c, r.mode, oracle, sink);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      best = std::min(best, secs);
    }
    const double per = best * 1e9 / static_cast<double>(stats.symbols);
    best_min = best_min == 0 ? per : std::min(best_min, per);
    best_max = std::max(best_max, per);
    out << n << ' ' << stats.symbols << ' ' << best << ' ' << per << ' '
        << static_cast<double>(stats.cost.work) / static_cast<double>(stats.nodes) << ' ' << stats.periodic_nodes
        << '\n';
  }
  if (best_min > 0) out << "ratio " << best_max / best_min << '\n';
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal cycle and de Bruijn sequence toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "raw";
  std::optional<std::size_t> min_w, max_w, no_zero, no_one;

  auto family_opts = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--family", cfg.family, "granddaddy|grandmama|granny|grandpa|perms|weak|orientable")->required();
    if (with_n) sub->add_option("--n", cfg.n, "order")->required();
    sub->add_option("--mode", cfg.mode, "left|right (default per family)");
    sub->add_option("--change-index", cfg.change_index, "root change index (default per family)");
    sub->add_option("--min-weight", min_w, "subtree: minimum weight (T1, T4)");
    sub->add_option("--max-weight", max_w, "subtree: maximum weight (T2, T3)");
    sub->add_option("--no-zero-run", no_zero, "subtree: forbid 0^s (T1, T4)");
    sub->add_option("--no-one-run", no_one, "subtree: forbid 1^s (T2, T3)");
  };

  auto* gen = app.add_subcommand("generate", "emit a universal cycle");
  family_opts(gen, true);
  gen->add_option("--format", format, "raw|per-node|dot")->check(CLI::IsMember({"raw", "per-node", "dot"}));
  gen->add_flag("--verify", cfg.verify, "check the output against the brute-force oracle");
  gen->add_option("--start", cfg.start, "rotate raw output to begin with this window");

  auto* cmp = app.add_subcommand("compare", "RCL concatenation versus successor-rule iteration");
  family_opts(cmp, true);

  auto* bots = app.add_subcommand("count-bots", "number of BOTs with 1..N nodes");
  bots->add_option("N", cfg.bots, "largest node count")->required();

  auto* dot = app.add_subcommand("export-dot", "cycle-joining and concatenation trees as DOT");
  family_opts(dot, true);

  auto* bench = app.add_subcommand("bench", "streaming throughput across orders");
  family_opts(bench, false);
  bench->add_option("--n", cfg.n_range, "order or range A..B")->required();
  bench->add_option("--reps", cfg.reps, "repetitions per order (minimum time is kept)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.constraint.min_weight = min_w;
  cfg.constraint.max_weight = max_w;
  cfg.constraint.no_zero_run = no_zero;
  cfg.constraint.no_one_run = no_one;
  cfg.format = format == "dot" ? Format::dot : format == "per-node" ? Format::per_node : Format::raw;

  try {
    if (gen->parsed()) return cmd_generate(cfg, out, err);
    if (cmp->parsed()) return cmd_compare(cfg, out, err);
    if (bots->parsed()) return cmd_count_bots(cfg, out, err);
    if (dot->parsed()) return cmd_export_dot(cfg, out, err);
    if (bench->parsed()) return cmd_bench(cfg, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace ucycle::cli
