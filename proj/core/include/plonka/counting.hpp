#ifndef PLONKA_COUNTING_HPP
#define PLONKA_COUNTING_HPP

#include <string>
#include <vector>

#include "plonka/system.hpp"

namespace plonka {

/** a(m): the number of labeled forests (acyclic simple graphs) on m
 * vertices, by the recursion a(m) = Σ_q C(m-1, q-1) q^(q-2) a(m-q) with
 * a(0) = 1.  The Cayley term q^(q-2) is taken as 1 for q = 1. */
Int forests(int m);

/// Independent oracle: enumerates all 2^C(m,2) labeled simple graphs and
/// counts the acyclic ones (cycle detection by union-find).  m ≤ 7.
Int forest_oracle(int m);

/** Both routes to the chain factor: the direct weighted subset enumeration
 * Σ_s s·|P_s(h)| over h-subsets of {1..n} grouped by minimum, and the closed
 * form C(n+1, h+1).  The routes are asserted equal; requires 1 ≤ h ≤ n. */
struct ChainFactor {
  Int subset_route;
  Int binomial_route;
};

ChainFactor chain_factor(int n, int h);

/** N_d(n, k) = C(n+1, k-1) · a(k-2): non-isomorphic inclusive sums over a
 * maximal subalgebra chain of length n with k-2 distinct middle subalgebras.
 * Requires k ≥ 2 and k-2 ≤ n.  For k = 2 the binomial factor is evaluated
 * directly (the subset route is empty there); see enumerate_inclusive for
 * what that means. */
struct CountingResult {
  int n = 0;
  int k = 0;
  Int chain_factor;
  Int forest_count;
  Int value;
};

CountingResult n_d(int n, int k);

/** One documented reading of the inclusive count, built and deduplicated
 * explicitly:
 *
 *   - fix the canonical maximal chain A_1 ⊂ ... ⊂ A_n of subalgebras of the
 *     n-atom algebra (A_m has m atoms; inclusions lump the tail atoms);
 *   - the index poset is a bottom node, k-2 middle nodes carrying distinct
 *     chain algebras arranged on a labeled forest skeleton (edges oriented by
 *     inclusion, so labels are order-monotone), and a top node carrying A_n;
 *   - the bottom node carries any of the s algebras at or below the least
 *     chosen middle algebra A_s (any of the n when there are no middles).
 *
 * Every candidate is materialized as a validated direct system; the result is
 * deduplicated by exhaustive isomorphism matching and compared against the
 * formula.  Disagreement is reported, never suppressed: at k = 2 the honest
 * class count is n while the formula gives n+1 (the subset identity behind
 * its chain factor has no h = 0 instance), and `agrees` is false.
 */
struct InclusiveEnumeration {
  int n = 0;
  int k = 0;
  std::vector<DirectSystem> classes;
  Int formula;
  bool agrees = false;
  std::string note;
};

struct EnumerationCaps {
  int max_n = 3;
  int max_k = 5;
};

InclusiveEnumeration enumerate_inclusive(int n, int k, const EnumerationCaps& caps = {});

/// The canonical inclusion A_l ↪ A_m of the maximal chain (l ≤ m ≤ n atoms).
BooleanHom chain_inclusion(int l, int m);

}  // namespace plonka

#endif
