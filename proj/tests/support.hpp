#ifndef PLONKA_TESTS_SUPPORT_HPP
#define PLONKA_TESTS_SUPPORT_HPP

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "plonka/booleanisation.hpp"
#include "plonka/states.hpp"
#include "plonka/system.hpp"

namespace plonka::test {

// ---- the diamond example: 2/4/4/8-element components ----------------------
//
// index order: i0=0, i=1, j=2, k=3.  Raw ids of the materialized sum:
//   i0: 0=0, 1=1
//   i:  2=0_i, 3=a, 4=a', 5=1_i          (atom bits: a=1, a'=2)
//   j:  6=0_j, 7=b, 8=b', 9=1_j
//   k:  10=0_k, 11=c, 12=d, 13=e', 14=e, 15=d', 16=c', 17=1_k
//                                        (atom bits: c=1, d=2, e=4)

inline DirectSystem diamond_system() {
  const std::vector<int> table = {
      0, 1, 2, 3,  //
      1, 1, 3, 3,  //
      2, 3, 2, 3,  //
      3, 3, 3, 3,
  };
  SemilatticeCheck index = validate_semilattice(4, table);
  std::vector<BooleanAlgebra> components{BooleanAlgebra(1), BooleanAlgebra(2), BooleanAlgebra(2),
                                         BooleanAlgebra(3)};
  std::vector<HomSpec> homs;
  homs.push_back({0, 1, BooleanHom(components[0], components[1], {0, 0})});
  homs.push_back({0, 2, BooleanHom(components[0], components[2], {0, 0})});
  homs.push_back({0, 3, BooleanHom(components[0], components[3], {0, 0, 0})});
  homs.push_back({1, 3, BooleanHom(components[1], components[3], {0, 1, 1})});  // c=a d=a' e=a'
  homs.push_back({2, 3, BooleanHom(components[2], components[3], {1, 1, 0})});  // c=b' d=b' e=b
  SystemCheck check = validate_system(*index.lattice, components, std::move(homs));
  return *check.system;
}

// named sum elements of diamond_system()
namespace dia {
inline constexpr std::uint32_t zero = 0, one = 1;
inline constexpr std::uint32_t zero_i = 2, a = 3, a_c = 4, one_i = 5;
inline constexpr std::uint32_t zero_j = 6, b = 7, b_c = 8, one_j = 9;
inline constexpr std::uint32_t zero_k = 10, c = 11, d = 12, e_c = 13, e = 14, d_c = 15, c_c = 16,
                               one_k = 17;
}  // namespace dia

/// The faithful state of the running example: top weights (c,d,e) = (1/2, 1/6, 1/3).
inline State diamond_state(const DirectSystem& system) {
  return make_state(system,
                    Measure(system.component(3), {Rat(1, 2), Rat(1, 6), Rat(1, 3)}));
}

// ---- the 2-chain example: 6-element sum collapsing onto 2 elements --------

inline DirectSystem chain_system() {
  const std::vector<int> table = {0, 1, 1, 1};
  SemilatticeCheck index = validate_semilattice(2, table);
  std::vector<BooleanAlgebra> components{BooleanAlgebra(2), BooleanAlgebra(1)};
  std::vector<HomSpec> homs;
  homs.push_back({0, 1, BooleanHom(components[0], components[1], {0})});  // b=a
  SystemCheck check = validate_system(*index.lattice, components, std::move(homs));
  return *check.system;
}

// raw ids of plonka_sum(chain_system()): 0=0, 1=a, 2=a', 3=1, 4=b'(0_j), 5=b(1_j)
namespace chn {
inline constexpr std::uint32_t zero = 0, a = 1, a_c = 2, one = 3, b_c = 4, b = 5;
}

/// The unique state on the 2-chain example (the top has one atom).
inline State chain_state(const DirectSystem& system) {
  return make_state(system, Measure(system.component(1), {Rat(1)}));
}

// ---- file access for document/CLI tests -----------------------------------

inline std::string data_dir() {
  if (const char* env = std::getenv("PLONKA_DATA")) return env;
  return "data";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string data_file(const std::string& name) {
  return read_file(data_dir() + "/" + name);
}

// ---- random direct systems -------------------------------------------------

/** Samples valid direct systems over the join-semilattices with at most four
 * indices (chains, and the diamond) with components of at most three atoms.
 * Injective instances get monotone atom counts and surjective dual maps;
 * trivial-component instances make an up-set of components trivial.  Diamond
 * hom squares are sampled and re-validated, falling back to a one-atom bottom
 * (always coherent) after a few rejections. */
class SystemGenerator {
 public:
  explicit SystemGenerator(std::uint64_t seed) : rng_(seed) {}

  DirectSystem next(bool force_injective = false, bool allow_trivial = false) {
    while (true) {
      if (auto system = try_sample(force_injective, allow_trivial)) return *system;
    }
  }

  std::mt19937_64& rng() { return rng_; }

  Rat random_unit() {
    const int den = pick(1, 12);
    return Rat(pick(0, den), den);
  }

  /// A random state: strictly positive top weights when faithful.
  State random_state(const DirectSystem& system, bool faithful) {
    const BooleanAlgebra& top = system.component(system.index().top());
    std::vector<Rat> weights(static_cast<std::size_t>(top.atom_count()));
    Rat total = 0;
    for (Rat& w : weights) {
      w = Rat(pick(faithful ? 1 : 0, 6), 1);
      total += w;
    }
    if (total == 0) {
      weights[0] = 1;
      total = 1;
    }
    if (faithful)
      for (Rat& w : weights)
        if (w == 0) {
          w = 1;
          total += 1;
        }
    for (Rat& w : weights) w /= total;
    return make_state(system, Measure(top, std::move(weights)));
  }

 private:
  int pick(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::optional<DirectSystem> try_sample(bool force_injective, bool allow_trivial) {
    // shape: sizes 1..4; chains and the diamond are all the join-semilattices
    // with a least element on at most four points
    const int shape = pick(0, 4);
    int size = 0;
    std::vector<int> table;
    bool diamond = false;
    switch (shape) {
      case 0: size = 1; break;
      case 1: size = 2; break;
      case 2: size = 3; break;
      case 3: size = 4; break;
      case 4: size = 4; diamond = true; break;
    }
    if (!diamond) {
      table.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
          table[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) +
                static_cast<std::size_t>(j)] = std::max(i, j);
    } else {
      table = {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3};
    }
    // random relabelling so the least element is not always 0
    std::vector<int> relabel(static_cast<std::size_t>(size));
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng_);
    std::vector<int> shuffled(table.size());
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        shuffled[static_cast<std::size_t>(relabel[static_cast<std::size_t>(i)]) *
                     static_cast<std::size_t>(size) +
                 static_cast<std::size_t>(relabel[static_cast<std::size_t>(j)])] =
            relabel[static_cast<std::size_t>(
                table[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) +
                      static_cast<std::size_t>(j)])];
    SemilatticeCheck index_check = validate_semilattice(size, shuffled);
    const JoinSemilattice& index = *index_check.lattice;

    // heights drive monotone atom counts for injective sampling
    std::vector<int> height(static_cast<std::size_t>(size), 0);
    for (int rounds = 0; rounds < size; ++rounds)
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
          if (i != j && index.leq(i, j))
            height[static_cast<std::size_t>(j)] =
                std::max(height[static_cast<std::size_t>(j)],
                         height[static_cast<std::size_t>(i)] + 1);

    std::vector<int> atoms(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
      if (force_injective)
        atoms[static_cast<std::size_t>(i)] =
            std::min(3, pick(1, 2) + height[static_cast<std::size_t>(i)] -
                        (height[static_cast<std::size_t>(i)] > 0 ? pick(0, 1) : 0));
      else
        atoms[static_cast<std::size_t>(i)] = pick(1, 3);
    }
    if (force_injective) {
      // enforce monotonicity along the order explicitly
      for (int rounds = 0; rounds < size; ++rounds)
        for (int i = 0; i < size; ++i)
          for (int j = 0; j < size; ++j)
            if (i != j && index.leq(i, j))
              atoms[static_cast<std::size_t>(j)] =
                  std::max(atoms[static_cast<std::size_t>(j)], atoms[static_cast<std::size_t>(i)]);
    }
    if (allow_trivial && pick(0, 2) == 0) {
      const int base = pick(0, size - 1);
      for (int i = 0; i < size; ++i)
        if (index.leq(base, i)) atoms[static_cast<std::size_t>(i)] = 0;
    }

    std::vector<BooleanAlgebra> components;
    components.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) components.emplace_back(atoms[static_cast<std::size_t>(i)]);

    std::vector<HomSpec> homs;
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        if (i == j || !index.leq(i, j)) continue;
        // sample covers freely; composites are forced on chains, and the
        // validator rejects incoherent diamond squares
        std::vector<int> dual(static_cast<std::size_t>(atoms[static_cast<std::size_t>(j)]));
        if (atoms[static_cast<std::size_t>(i)] == 0) {
          if (atoms[static_cast<std::size_t>(j)] != 0) return std::nullopt;
        } else if (force_injective) {
          std::vector<int> targets(static_cast<std::size_t>(atoms[static_cast<std::size_t>(j)]));
          std::iota(targets.begin(), targets.end(), 0);
          std::shuffle(targets.begin(), targets.end(), rng_);
          for (std::size_t t = 0; t < dual.size(); ++t) dual[t] = -1;
          for (int s = 0; s < atoms[static_cast<std::size_t>(i)]; ++s)
            dual[static_cast<std::size_t>(targets[static_cast<std::size_t>(s)])] = s;
          for (std::size_t t = 0; t < dual.size(); ++t)
            if (dual[t] == -1) dual[t] = pick(0, atoms[static_cast<std::size_t>(i)] - 1);
        } else {
          for (std::size_t t = 0; t < dual.size(); ++t)
            dual[t] = pick(0, atoms[static_cast<std::size_t>(i)] - 1);
        }
        homs.push_back({i, j, BooleanHom(components[static_cast<std::size_t>(i)],
                                         components[static_cast<std::size_t>(j)],
                                         std::move(dual))});
      }

    // chains need their composites replaced by the actual compositions;
    // easiest is to recompute every non-cover hom from a covering path
    auto hom_at = [&homs](int i, int j) -> HomSpec& {
      for (HomSpec& spec : homs)
        if (spec.source == i && spec.target == j) return spec;
      throw Error("missing hom");
    };
    auto covers = [&index, size](int i, int j) {
      if (i == j || !index.leq(i, j)) return false;
      for (int w = 0; w < size; ++w)
        if (w != i && w != j && index.leq(i, w) && index.leq(w, j)) return false;
      return true;
    };
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        if (i == j || !index.leq(i, j) || covers(i, j)) continue;
        for (int w = 0; w < size; ++w)
          if (w != i && w != j && index.leq(i, w) && index.leq(w, j)) {
            hom_at(i, j).hom = compose(hom_at(w, j).hom, hom_at(i, w).hom);
            break;
          }
      }

    SystemCheck check = validate_system(index, components, homs);
    if (!check.ok()) return std::nullopt;
    if (force_injective && !is_injective_system(*check.system)) return std::nullopt;
    return std::move(check.system);
  }

  std::mt19937_64 rng_;
};

/// Plain union-find for oracle-side class computations.
struct OracleUnionFind {
  std::vector<std::uint32_t> parent;
  explicit OracleUnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace plonka::test

#endif
