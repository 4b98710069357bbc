#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ucycle/concat.hpp"
#include "ucycle/family_spec.hpp"

namespace ucycle {

/// Subtree restrictions for the binary trees. Weight and forbidden-run
/// tests apply to the whole rotation class (runs are measured cyclically).
struct DbConstraint {
  std::optional<std::size_t> min_weight;   // T1, T4
  std::optional<std::size_t> max_weight;   // T2, T3
  std::optional<std::size_t> no_zero_run;  // forbid 0^s; T1, T4
  std::optional<std::size_t> no_one_run;   // forbid 1^s; T2, T3

  bool any() const { return min_weight || max_weight || no_zero_run || no_one_run; }
  bool admits(SymbolView w) const;
};

/// Binary tree T_variant: 1 flips the last 0, 2 the first 1, 3 the last 1,
/// 4 the first 0. Throws std::invalid_argument for a constraint that would
/// not describe a subtree containing the root.
FamilySpec db_family(int variant, std::size_t n, const DbConstraint& constraint = {});

/// Shorthand permutations of order n (windows of length n - 1).
FamilySpec perm_family(std::size_t n);

/// Weak orders in rank representation.
FamilySpec weak_family(std::size_t n);

/// Asymmetric bracelets; empty below n = 6.
FamilySpec orientable_family(std::size_t n);

/// granddaddy, grandmama, granny, grandpa, perms, weak, orientable.
std::vector<std::string> family_names();
FamilySpec make_family(const std::string& name, std::size_t n, const DbConstraint& constraint = {});

// Parent rules, exposed for tests and tools. Arguments are member necklaces.
std::optional<ParentMove> db_parent(int variant, SymbolView necklace);
std::optional<ParentMove> perm_parent(SymbolView necklace);
std::optional<ParentMove> weak_parent(SymbolView necklace);
std::optional<ParentMove> orientable_parent(SymbolView necklace);

/// Child table of a weak-order necklace in its own frame (entry -1 when
/// absent), plus the number of candidate necklace tests that failed.
struct WeakChildTable {
  std::vector<int> table;
  std::size_t tests = 0;
  std::size_t failures = 0;
};
WeakChildTable weak_child_table(SymbolView necklace);

}  // namespace ucycle
