#include "plonka/semilattice.hpp"

namespace plonka {

int JoinSemilattice::join(int i, int j) const {
  if (i < 0 || i >= size_ || j < 0 || j >= size_)
    throw IndexOutOfRange("semilattice index out of range");
  return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
                static_cast<std::size_t>(j)];
}

std::string SemilatticeCheck::describe() const {
  auto at = [](int i, int j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
  };
  switch (fault) {
    case SemilatticeFault::None:
      return "valid join-semilattice, least " + std::to_string(lattice->least()) + ", top " +
             std::to_string(lattice->top());
    case SemilatticeFault::EntryOutOfRange:
      return "entry out of range at " + at(i, j);
    case SemilatticeFault::NotIdempotent:
      return "not idempotent at " + std::to_string(i);
    case SemilatticeFault::NotCommutative:
      return "not commutative at " + at(i, j);
    case SemilatticeFault::NotAssociative:
      return "not associative at (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
             std::to_string(k) + ")";
    case SemilatticeFault::NoLeastElement:
      return "no least element";
  }
  return "?";
}

SemilatticeCheck SemilatticeCheck::valid(int size, std::vector<int> table, int least, int top) {
  SemilatticeCheck check;
  check.lattice = JoinSemilattice(size, std::move(table), least, top);
  return check;
}

SemilatticeCheck validate_semilattice(int size, std::span<const int> join_table) {
  SemilatticeCheck bad;
  if (size <= 0 || join_table.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    bad.fault = SemilatticeFault::EntryOutOfRange;
    return bad;
  }
  auto at = [&](int i, int j) {
    return join_table[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) +
                      static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (at(i, j) < 0 || at(i, j) >= size) {
        bad.fault = SemilatticeFault::EntryOutOfRange;
        bad.i = i, bad.j = j;
        return bad;
      }
  for (int i = 0; i < size; ++i)
    if (at(i, i) != i) {
      bad.fault = SemilatticeFault::NotIdempotent;
      bad.i = i;
      return bad;
    }
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (at(i, j) != at(j, i)) {
        bad.fault = SemilatticeFault::NotCommutative;
        bad.i = i, bad.j = j;
        return bad;
      }
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      for (int k = 0; k < size; ++k)
        if (at(i, at(j, k)) != at(at(i, j), k)) {
          bad.fault = SemilatticeFault::NotAssociative;
          bad.i = i, bad.j = j, bad.k = k;
          return bad;
        }
  int least = -1;
  for (int i = 0; i < size; ++i) {
    bool below_all = true;
    for (int j = 0; j < size; ++j)
      if (at(i, j) != j) {
        below_all = false;
        break;
      }
    if (below_all) {
      least = i;
      break;
    }
  }
  if (least == -1) {
    bad.fault = SemilatticeFault::NoLeastElement;
    return bad;
  }
  int top = 0;
  for (int i = 1; i < size; ++i) top = at(top, i);
  return SemilatticeCheck::valid(size, std::vector<int>(join_table.begin(), join_table.end()),
                                 least, top);
}

}  // namespace plonka
