#ifndef PLONKA_SEMILATTICE_HPP
#define PLONKA_SEMILATTICE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plonka/errors.hpp"

namespace plonka {

/** A finite join-semilattice with least element, stored as its full join
 * table.
 *
 * Indices are dense integers 0..size-1; the least element is discovered by
 * validation and is not required to be 0.  Finiteness forces a top element,
 * the join of all indices.  Instances are only created by
 * validate_semilattice, so the laws can be assumed downstream.
 */
class JoinSemilattice {
 public:
  int size() const { return size_; }
  int join(int i, int j) const;
  /// i ≤ j ⇔ i ∨ j = j
  bool leq(int i, int j) const { return join(i, j) == j; }
  int least() const { return least_; }
  int top() const { return top_; }
  const std::vector<int>& table() const { return table_; }

  bool operator==(const JoinSemilattice&) const = default;

 private:
  friend struct SemilatticeCheck;
  JoinSemilattice(int size, std::vector<int> table, int least, int top)
      : size_(size), table_(std::move(table)), least_(least), top_(top) {}

  int size_;
  std::vector<int> table_;
  int least_;
  int top_;
};

enum class SemilatticeFault {
  None,
  EntryOutOfRange,
  NotIdempotent,
  NotCommutative,
  NotAssociative,
  NoLeastElement,
};

struct SemilatticeCheck {
  std::optional<JoinSemilattice> lattice;  // engaged iff the table validates
  SemilatticeFault fault = SemilatticeFault::None;
  int i = -1, j = -1, k = -1;  // witnessing tuple for the first violated law

  bool ok() const { return lattice.has_value(); }
  std::string describe() const;

  static SemilatticeCheck valid(int size, std::vector<int> table, int least, int top);
};

/// Checks idempotence, commutativity, associativity and the existence of a
/// least element, in that order; the first violation wins and carries its
/// witness.  The top element is computed as the join of all indices.
SemilatticeCheck validate_semilattice(int size, std::span<const int> join_table);

}  // namespace plonka

#endif
