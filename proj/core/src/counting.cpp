#include "plonka/counting.hpp"

#include <algorithm>
#include <numeric>

namespace plonka {

Int forests(int m) {
  if (m < 0) throw BadRange("forest count needs m ≥ 0");
  std::vector<Int> a(static_cast<std::size_t>(m) + 1);
  a[0] = 1;
  for (int v = 1; v <= m; ++v) {
    Int total = 0;
    for (int q = 1; q <= v; ++q) {
      Int trees = 1;  // Cayley's q^(q-2); the q = 1 term counts the single tree
      for (int e = 0; e < q - 2; ++e) trees *= q;
      total += binomial(v - 1, q - 1) * trees * a[static_cast<std::size_t>(v - q)];
    }
    a[static_cast<std::size_t>(v)] = total;
  }
  return a[static_cast<std::size_t>(m)];
}

namespace {

struct Uf {
  std::vector<int> parent;
  explicit Uf(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  /// false if the edge closes a cycle
  bool link(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

std::vector<std::pair<int, int>> all_edges(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) edges.emplace_back(a, b);
  return edges;
}

bool acyclic(int m, const std::vector<std::pair<int, int>>& edges, std::uint64_t picked) {
  Uf uf(m);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (picked >> e & 1 && !uf.link(edges[e].first, edges[e].second)) return false;
  return true;
}

}  // namespace

Int forest_oracle(int m) {
  if (m < 0) throw BadRange("forest count needs m ≥ 0");
  if (m > 7) throw OracleCapExceeded("oracle enumerates 2^C(m,2) graphs; m ≤ 7 required");
  const auto edges = all_edges(m);
  Int count = 0;
  for (std::uint64_t picked = 0; picked < (std::uint64_t{1} << edges.size()); ++picked)
    if (acyclic(m, edges, picked)) ++count;
  return count;
}

ChainFactor chain_factor(int n, int h) {
  if (h < 1 || h > n) throw BadRange("chain factor needs 1 ≤ h ≤ n");
  ChainFactor result{0, binomial(n + 1, h + 1)};
  // subsets of {1..n} of size h, grouped by their minimum s
  std::vector<int> pick(static_cast<std::size_t>(h));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    result.subset_route += pick.front();
    int i = h - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (h - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < h; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (result.subset_route != result.binomial_route)
    throw InternalInconsistency("chain factor routes disagree");
  return result;
}

CountingResult n_d(int n, int k) {
  if (n < 1 || k < 2 || k - 2 > n) throw BadRange("N_d needs n ≥ 1, k ≥ 2 and k-2 ≤ n");
  CountingResult result;
  result.n = n, result.k = k;
  result.chain_factor = k == 2 ? binomial(n + 1, 1) : chain_factor(n, k - 2).binomial_route;
  result.forest_count = forests(k - 2);
  result.value = result.chain_factor * result.forest_count;
  return result;
}

BooleanHom chain_inclusion(int l, int m) {
  if (l < 1 || m < l) throw BadRange("chain inclusion needs 1 ≤ l ≤ m");
  std::vector<int> dual(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) dual[static_cast<std::size_t>(t)] = std::min(t, l - 1);
  return BooleanHom(BooleanAlgebra(l), BooleanAlgebra(m), std::move(dual));
}

namespace {

/// Index poset of one candidate: bottom, h middle nodes on a forest skeleton
/// oriented by the (strictly increasing) middle labels, and a top node.
std::optional<JoinSemilattice> candidate_lattice(const std::vector<int>& middles,
                                                 const std::vector<std::pair<int, int>>& edges,
                                                 std::uint64_t picked) {
  const int h = static_cast<int>(middles.size());
  const int size = h + 2;  // 0 = bottom, 1..h = middles, h+1 = top
  const int bottom = 0, top = h + 1;
  std::vector<bool> leq(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), false);
  auto at = [&leq, size](int a, int b) -> std::vector<bool>::reference {
    return leq[static_cast<std::size_t>(a) * static_cast<std::size_t>(size) +
               static_cast<std::size_t>(b)];
  };
  for (int x = 0; x < size; ++x) at(x, x) = true;
  for (int x = 0; x < size; ++x) {
    at(bottom, x) = true;
    at(x, top) = true;
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!(picked >> e & 1)) continue;
    int u = edges[e].first, v = edges[e].second;
    if (middles[static_cast<std::size_t>(u)] > middles[static_cast<std::size_t>(v)])
      std::swap(u, v);
    at(u + 1, v + 1) = true;
  }
  for (int w = 0; w < size; ++w)  // transitive closure
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y)
        if (at(x, w) && at(w, y)) at(x, y) = true;
  std::vector<int> join_table(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      int least = -1;
      for (int z = 0; z < size; ++z) {
        if (!(at(x, z) && at(y, z))) continue;
        bool minimal = true;
        for (int w = 0; w < size; ++w)
          if (at(x, w) && at(y, w) && !at(z, w)) {
            minimal = false;
            break;
          }
        if (minimal) {
          least = z;
          break;
        }
      }
      if (least == -1) return std::nullopt;
      join_table[static_cast<std::size_t>(x) * static_cast<std::size_t>(size) +
                 static_cast<std::size_t>(y)] = least;
    }
  SemilatticeCheck check = validate_semilattice(size, join_table);
  if (!check.ok()) return std::nullopt;
  return check.lattice;
}

}  // namespace

InclusiveEnumeration enumerate_inclusive(int n, int k, const EnumerationCaps& caps) {
  if (n < 1 || k < 2 || k - 2 > n) throw BadRange("enumeration needs n ≥ 1, k ≥ 2, k-2 ≤ n");
  if (n > caps.max_n || k > caps.max_k)
    throw CapacityExceeded("enumeration capped at n ≤ " + std::to_string(caps.max_n) +
                           ", k ≤ " + std::to_string(caps.max_k));
  InclusiveEnumeration result;
  result.n = n, result.k = k;
  result.formula = n_d(n, k).value;
  const int h = k - 2;

  // all (k-2)-subsets of {1..n}, ascending
  std::vector<std::vector<int>> subsets;
  if (h == 0) {
    subsets.emplace_back();
  } else {
    std::vector<int> pick(static_cast<std::size_t>(h));
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      subsets.push_back(pick);
      int i = h - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (h - 1 - i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < h; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  const auto edges = all_edges(h);

  for (const std::vector<int>& middles : subsets) {
    const int s = middles.empty() ? n : middles.front();
    for (std::uint64_t picked = 0; picked < (std::uint64_t{1} << edges.size()); ++picked) {
      if (!acyclic(h, edges, picked)) continue;
      const auto lattice = candidate_lattice(middles, edges, picked);
      if (!lattice)
        throw InternalInconsistency("forest skeleton did not induce a semilattice");
      for (int bottom = 1; bottom <= s; ++bottom) {
        std::vector<int> node_atoms(static_cast<std::size_t>(k));
        node_atoms[0] = bottom;
        for (int v = 0; v < h; ++v)
          node_atoms[static_cast<std::size_t>(v + 1)] = middles[static_cast<std::size_t>(v)];
        node_atoms[static_cast<std::size_t>(k - 1)] = n;
        std::vector<BooleanAlgebra> components;
        components.reserve(static_cast<std::size_t>(k));
        for (int atoms : node_atoms) components.emplace_back(atoms);
        std::vector<HomSpec> homs;
        for (int x = 0; x < k; ++x)
          for (int y = 0; y < k; ++y)
            if (x != y && lattice->leq(x, y))
              homs.push_back({x, y,
                              chain_inclusion(node_atoms[static_cast<std::size_t>(x)],
                                              node_atoms[static_cast<std::size_t>(y)])});
        SystemCheck check = validate_system(*lattice, std::move(components), std::move(homs));
        if (!check.ok())
          throw InternalInconsistency("inclusive candidate failed validation: " +
                                      check.describe());
        const bool duplicate =
            std::ranges::any_of(result.classes, [&check](const DirectSystem& kept) {
              return systems_isomorphic(kept, *check.system);
            });
        if (!duplicate) result.classes.push_back(std::move(*check.system));
      }
    }
  }
  result.agrees = Int(result.classes.size()) == result.formula;
  if (k == 2)
    result.note =
        "k = 2: the formula's C(n+1,1) has no subset-enumeration counterpart "
        "(the Lemma-level identity needs h ≥ 1); the honest class count is n";
  else if (!result.agrees)
    result.note = "enumeration disagrees with the formula under this interpretation";
  return result;
}

}  // namespace plonka
