#include "ucycle/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace ucycle {

bool DbConstraint::admits(SymbolView w) const {
  const std::size_t wt = weight(w);
  if (min_weight && wt < *min_weight) return false;
  if (max_weight && wt > *max_weight) return false;
  if (no_zero_run && longest_cyclic_run(w, 0) >= *no_zero_run) return false;
  if (no_one_run && longest_cyclic_run(w, 1) >= *no_one_run) return false;
  return true;
}

namespace {

std::optional<std::size_t> first_of(SymbolView w, Symbol s) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == s) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> last_of(SymbolView w, Symbol s) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] == s) return i;
  }
  return std::nullopt;
}

// Longest non-cyclic run of zeros in w[from, to).
std::size_t zero_run(SymbolView w, std::size_t from, std::size_t to) {
  std::size_t best = 0, run = 0;
  for (std::size_t i = from; i < to; ++i) {
    run = w[i] == 0 ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

struct NecklaceTester {
  OracleCost& cost;
  std::size_t n;
  bool operator()(SymbolView w) const {
    cost.work += n;
    ++cost.necklace_tests;
    const bool ok = is_necklace(w);
    if (!ok) ++cost.failed_tests;
    return ok;
  }
};

// Maps a table computed on the necklace of `label` onto label positions
// inside the acceptable range.
void remap(const std::vector<int>& neck_table, std::size_t offset, std::size_t p, IndexRange range,
           std::span<int> out) {
  const std::size_t n = out.size();
  for (std::size_t i = range.first; i <= range.last; ++i) {
    const std::size_t k = ((i - 1) + n - offset % n) % n % p;
    out[i - 1] = neck_table[k];
  }
}

class DbChildOracle final : public ChildOracle {
 public:
  DbChildOracle(int variant, DbConstraint constraint) : variant_(variant), constraint_(constraint) {}

  void fill(SymbolView label, std::size_t c, std::span<int> out, OracleCost& cost) const override {
    const std::size_t n = label.size();
    std::fill(out.begin(), out.end(), kAbsent);
    ++cost.calls;
    cost.work += n;
    const IndexRange range = acceptable_range(label, c);
    NecklaceTester test{cost, n};
    const Symbol child_bit = (variant_ == 1 || variant_ == 4) ? 0 : 1;
    const Symbol parent_bit = 1 - child_bit;
    auto admit = [&](SymbolView w) {
      if (!constraint_.any()) return true;
      cost.work += n;
      return constraint_.admits(w);
    };
    Word cand(label);
    cost.work += 2 * n;  // shape checks below

    // Pruned scans for labels of the documented shape.
    if (variant_ == 1 && is_necklace(label)) {
      const auto last0 = last_of(label, 0);
      if (last0 && *last0 + 1 == c) {
        for (std::size_t j = std::max(c + 1, range.first); j <= std::min(n, range.last); ++j) {
          if (label[j - 1] != parent_bit) continue;
          cand[j - 1] = child_bit;
          if (test(cand) && admit(cand)) out[j - 1] = child_bit;
          cand[j - 1] = parent_bit;
        }
        return;
      }
    }
    if (variant_ == 2 && is_necklace(label)) {
      const auto first1 = first_of(label, 1);
      if (first1 && *first1 + 1 == c) {
        const std::size_t z = zero_run(label, c, n);
        const std::size_t lo = std::max({z + 1, (c + 1) / 2, range.first});
        for (std::size_t j = lo; j < c && j <= range.last; ++j) {
          if (label[j - 1] != parent_bit) continue;
          cand[j - 1] = child_bit;
          if (test(cand) && admit(cand)) out[j - 1] = child_bit;
          cand[j - 1] = parent_bit;
        }
        return;
      }
    }
    if (variant_ == 3 && label[0] == 1 && label[c - 1] == 1 &&
        std::all_of(label.begin() + static_cast<std::ptrdiff_t>(c), label.end(), [](Symbol s) { return s == 0; }) &&
        is_necklace(rotate_left(label, c))) {
      const std::size_t z = zero_run(label, 0, c - 1);
      const std::size_t hi = std::min({n - (n - c) / 2, n - z, range.last});
      Word rot;
      for (std::size_t j = std::max(c + 1, range.first); j <= hi; ++j) {
        if (label[j - 1] != parent_bit) continue;
        rot = rotate_left(label, j);
        rot[n - 1] = child_bit;
        if (test(rot) && admit(rot)) out[j - 1] = child_bit;
      }
      return;
    }

    // Closed form at every index of the acceptable range.
    for (std::size_t i = range.first; i <= range.last; ++i) {
      if (label[i - 1] != parent_bit) continue;
      const Word rot = rotate_left(label, i);  // a_{i+1}..a_n a_1..a_i
      const SymbolView stem = rot.view().first(n - 1);
      if (!test(pcr_gamma(variant_, stem))) continue;
      Word child{child_bit};
      child.append(stem);
      if (admit(child)) out[i - 1] = child_bit;
    }
  }

 private:
  int variant_;
  DbConstraint constraint_;
};

class WeakChildOracle final : public ChildOracle {
 public:
  void fill(SymbolView label, std::size_t c, std::span<int> out, OracleCost& cost) const override {
    const std::size_t n = label.size();
    std::fill(out.begin(), out.end(), kAbsent);
    ++cost.calls;
    const IndexRange range = acceptable_range(label, c);
    const auto [neck, offset] = necklace_of(label);
    const WeakChildTable t = weak_child_table(neck);
    cost.work += n * (t.tests + 2);
    cost.necklace_tests += t.tests;
    cost.failed_tests += t.failures;
    remap(t.table, offset, period(neck), range, out);
  }
};

std::vector<int> perm_child_table(SymbolView neck, std::size_t n) {
  const std::size_t m = neck.size();
  std::vector<bool> used(n + 1, false);
  for (Symbol s : neck) used[s] = true;
  std::size_t z = 1;
  while (used[z]) ++z;
  std::vector<int> table(m, kAbsent);
  bool increasing = true;  // neck[0..j) is increasing
  for (std::size_t j = 0; j < m; ++j) {
    if (j >= 2 && neck[j - 1] < neck[j - 2]) increasing = false;
    if (neck[j] + std::size_t{1} == z) {
      table[j] = static_cast<int>(z);
    } else if (neck[j] == n && j >= 1 && increasing && z < neck[j - 1]) {
      Word cand(neck);
      cand[j] = static_cast<Symbol>(z);
      const auto [cn, off] = necklace_of(cand);
      const auto move = perm_parent(cn);
      if (move && move->index == (j + m - off) % m) table[j] = static_cast<int>(z);
    }
  }
  return table;
}

class PermChildOracle final : public ChildOracle {
 public:
  explicit PermChildOracle(std::size_t n) : n_(n) {}
  void fill(SymbolView label, std::size_t c, std::span<int> out, OracleCost& cost) const override {
    const std::size_t m = label.size();
    std::fill(out.begin(), out.end(), kAbsent);
    ++cost.calls;
    cost.work += 2 * m;
    const IndexRange range = acceptable_range(label, c);
    const auto [neck, offset] = necklace_of(label);
    remap(perm_child_table(neck, n_), offset, period(neck), range, out);
  }

 private:
  std::size_t n_;
};

// Binary specialization of the generic inversion: one candidate per index.
class OrientableChildOracle final : public ChildOracle {
 public:
  void fill(SymbolView label, std::size_t c, std::span<int> out, OracleCost& cost) const override {
    const std::size_t n = label.size();
    std::fill(out.begin(), out.end(), kAbsent);
    ++cost.calls;
    const IndexRange range = acceptable_range(label, c);
    Word cand(label);
    for (std::size_t i = range.first; i <= range.last; ++i) {
      const Symbol keep = label[i - 1];
      cand[i - 1] = 1 - keep;
      cost.work += 3 * n;
      ++cost.necklace_tests;
      const auto [neck, offset] = necklace_of(cand);
      if (is_asymmetric_bracelet(neck)) {
        const auto move = orientable_parent(neck);
        const std::size_t k = ((i - 1) + n - offset % n) % n;
        if (move && move->symbol == keep && move->index % period(neck) == k % period(neck)) {
          out[i - 1] = 1 - keep;
        }
      } else {
        ++cost.failed_tests;
      }
      cand[i - 1] = keep;
    }
  }
};

Word orientable_root(std::size_t n) {
  Word r(std::vector<Symbol>(n - 4, 0));
  r.append(Word{1, 0, 1, 1});
  return r;
}

}  // namespace

std::optional<ParentMove> db_parent(int variant, SymbolView w) {
  std::optional<std::size_t> pos;
  switch (variant) {
    case 1: pos = last_of(w, 0); break;
    case 2: pos = first_of(w, 1); break;
    case 3: pos = last_of(w, 1); break;
    case 4: pos = first_of(w, 0); break;
    default: throw std::invalid_argument("variant must be 1..4");
  }
  if (!pos) return std::nullopt;
  return ParentMove{*pos, static_cast<Symbol>(1 - w[*pos])};
}

FamilySpec db_family(int variant, std::size_t n, const DbConstraint& constraint) {
  if (variant < 1 || variant > 4) throw std::invalid_argument("variant must be 1..4");
  if (n < 1) throw std::invalid_argument("n must be positive");
  const bool ones_root = variant == 1 || variant == 4;
  if (ones_root && (constraint.max_weight || constraint.no_one_run)) {
    throw std::invalid_argument("T" + std::to_string(variant) + " admits only min-weight and no-zero-run subtrees");
  }
  if (!ones_root && (constraint.min_weight || constraint.no_zero_run)) {
    throw std::invalid_argument("T" + std::to_string(variant) + " admits only max-weight and no-one-run subtrees");
  }
  static const char* names[] = {"granddaddy", "grandmama", "granny", "grandpa"};
  FamilySpec f;
  f.name = names[variant - 1];
  f.n = n;
  f.alphabet = Alphabet::binary();
  f.root = Word(std::vector<Symbol>(n, ones_root ? 1 : 0));
  f.default_change_index = (variant == 1 || variant == 3) ? 1 : n;
  f.default_mode = (variant == 1 || variant == 3) ? Mode::right : Mode::left;
  if (constraint.any()) {
    f.member = [n, constraint](SymbolView w) { return w.size() == n && constraint.admits(w); };
  } else {
    f.member = [n](SymbolView w) { return w.size() == n; };
  }
  f.parent = [variant](SymbolView w) { return db_parent(variant, w); };
  f.fast_child = std::make_shared<DbChildOracle>(variant, constraint);
  f.height_bound = n;
  return f;
}

std::optional<ParentMove> perm_parent(SymbolView p) {
  const std::size_t n = p.size() + 1;
  std::vector<bool> used(n + 1, false);
  for (Symbol s : p) used[s] = true;
  std::size_t z = 1;
  while (z <= n && used[z]) ++z;
  if (z == n) {
    for (std::size_t j = 1; j < p.size(); ++j) {
      if (p[j] < p[j - 1]) return ParentMove{j, static_cast<Symbol>(z)};
    }
    return std::nullopt;  // 12...(n-1)
  }
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] == z + 1) return ParentMove{j, static_cast<Symbol>(z)};
  }
  return std::nullopt;
}

FamilySpec perm_family(std::size_t n) {
  if (n < 3) throw std::invalid_argument("shorthand permutations need n >= 3");
  FamilySpec f;
  f.name = "perms";
  f.n = n;
  f.alphabet = Alphabet::ranks(static_cast<unsigned>(n));
  std::vector<Symbol> root(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) root[i] = static_cast<Symbol>(i + 1);
  f.root = Word(std::move(root));
  f.default_change_index = n - 1;
  f.default_mode = Mode::left;
  f.member = [n](SymbolView w) { return is_shorthand_perm(w, n); };
  f.parent = perm_parent;
  f.fast_child = std::make_shared<PermChildOracle>(n);
  f.height_bound = n * n;
  return f;
}

std::optional<ParentMove> weak_parent(SymbolView w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> cnt(n + 2, 0);
  for (Symbol s : w) ++cnt[s];
  if (cnt[1] == n) return std::nullopt;
  bool w1 = true;
  for (std::size_t s = 2; s <= n; ++s) w1 = w1 && cnt[s] <= 1;
  if (w1) {
    const Symbol target = static_cast<Symbol>(cnt[1] + 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == target) return ParentMove{j, 1};
    }
    return std::nullopt;
  }
  for (std::size_t j = n; j-- > 0;) {
    if (w[j] != 1 && cnt[w[j]] > 1) return ParentMove{j, static_cast<Symbol>(w[j] + cnt[w[j]] - 1)};
  }
  return std::nullopt;
}

WeakChildTable weak_child_table(SymbolView w) {
  const std::size_t n = w.size();
  WeakChildTable out;
  out.table.assign(n, kAbsent);
  std::vector<std::size_t> cnt(n + 2, 0);
  for (Symbol s : w) ++cnt[s];
  bool w1 = true;
  for (std::size_t s = 2; s <= n; ++s) w1 = w1 && cnt[s] <= 1;
  if (w1 && cnt[1] >= 2) {
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] == 1) out.table[i] = static_cast<int>(cnt[1]);
    }
  }
  // below[v]: largest symbol of w smaller than v, or 0.
  std::vector<Symbol> below(n + 2, 0);
  for (std::size_t v = 1; v <= n + 1; ++v) below[v] = cnt[v - 1] ? static_cast<Symbol>(v - 1) : below[v - 1];
  std::vector<bool> visited(n + 2, false);
  Word cand(w);
  for (std::size_t i = n; i-- > 0;) {
    const Symbol s = w[i];
    if (s > 1 && cnt[s] > 1) break;
    const Symbol x = s > 1 ? below[s] : 0;
    if (x > 1) {
      cand[i] = x;
      ++out.tests;
      const bool ok = is_necklace(cand);
      if (!ok) ++out.failures;
      if (ok && !visited[x]) out.table[i] = x;
      cand[i] = s;
    }
    visited[s] = true;
  }
  return out;
}

FamilySpec weak_family(std::size_t n) {
  if (n < 2) throw std::invalid_argument("weak orders need n >= 2");
  FamilySpec f;
  f.name = "weak";
  f.n = n;
  f.alphabet = Alphabet::ranks(static_cast<unsigned>(n));
  f.root = Word(std::vector<Symbol>(n, 1));
  f.default_change_index = n;
  f.default_mode = Mode::left;
  f.member = [n](SymbolView w) { return w.size() == n && is_weak_order(w); };
  f.parent = weak_parent;
  f.fast_child = std::make_shared<WeakChildOracle>();
  f.height_bound = 2 * n;
  return f;
}

std::optional<ParentMove> orientable_parent(SymbolView a) {
  const std::size_t n = a.size();
  if (n < 5 || Word(a) == orientable_root(n)) return std::nullopt;
  std::vector<std::pair<std::size_t, Symbol>> moves;
  if (const auto i = first_of(a, 1)) moves.emplace_back(*i, 0);  // firstone
  if (a[n - 1] != 0) moves.emplace_back(n - 1, 0);                // lastone
  if (const auto j = last_of(a, 0)) moves.emplace_back(*j, 1);    // lastzero
  Word b(a);
  for (auto [pos, sym] : moves) {
    const Symbol keep = b[pos];
    b[pos] = sym;
    const bool ok = is_asymmetric_bracelet(necklace_of(b).necklace);
    b[pos] = keep;
    if (ok) return ParentMove{pos, sym};
  }
  return std::nullopt;
}

FamilySpec orientable_family(std::size_t n) {
  if (n < 5) throw std::invalid_argument("orientable sequences need n >= 5");
  FamilySpec f;
  f.name = "orientable";
  f.n = n;
  f.alphabet = Alphabet::binary();
  f.root = orientable_root(n);
  f.default_change_index = n;
  f.default_mode = Mode::right;
  f.member = [n](SymbolView w) { return w.size() == n && is_asymmetric_bracelet(necklace_of(w).necklace); };
  f.parent = orientable_parent;
  f.fast_child = std::make_shared<OrientableChildOracle>();
  f.height_bound = n * n;
  return f;
}

std::vector<std::string> family_names() {
  return {"granddaddy", "grandmama", "granny", "grandpa", "perms", "weak", "orientable"};
}

FamilySpec make_family(const std::string& name, std::size_t n, const DbConstraint& constraint) {
  const auto names = family_names();
  for (int v = 1; v <= 4; ++v) {
    if (name == names[static_cast<std::size_t>(v - 1)]) return db_family(v, n, constraint);
  }
  if (constraint.any()) throw std::invalid_argument("subtree modifiers apply only to the binary families");
  if (name == "perms") return perm_family(n);
  if (name == "weak") return weak_family(n);
  if (name == "orientable") return orientable_family(n);
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace ucycle
