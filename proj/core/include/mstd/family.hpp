#ifndef MSTD_FAMILY_HPP
#define MSTD_FAMILY_HPP

#include <cstdint>
#include <vector>

#include "mstd/analysis.hpp"
#include "mstd/int_set.hpp"

namespace mstd {

/// Parameters of one member of the fringe-preserving MSTD family.
///
/// The seed must be an MSTD P_n-set inside [1,2n] containing both 1 and 2n.
/// The construction splits it as L = seed ∩ [1,n], R = seed ∩ [n+1,2n] and
/// assembles
///
///   L ∪ [n+1, n+k] ∪ fill ∪ [n+k+m+1, n+2k+m] ∪ (R + 2k+m)
///
/// where fill ⊆ [n+k+1, n+k+m] has no run of k or more missing elements and
/// omits n+k+1 (which keeps members with different k distinct).
struct FamilySpec {
  IntSet seed;
  int n = 0;
  int k = 0;  // length of the two solid blocks, k >= n
  int m = 0;  // width of the fill window, m >= 0
  IntSet fill;

  /// Width of the inserted chunk (blocks plus fill window).
  int inserted_width() const { return 2 * k + m; }
  /// Total width of the constructed set, 2n + 2k + m.
  int total_width() const { return 2 * n + 2 * k + m; }
};

/// True iff `fill` lies inside [n+k+1, n+k+m], every window of k consecutive
/// integers starting in [n+k+1, n+m+1] meets it (vacuous when m < k), and
/// n+k+1 is not a member. Throws if fill has elements outside its window.
bool validate_fill(const IntSet& fill, int n, int k, int m);

/// All valid fills for (n, k, m), each exactly once, ordered by ascending
/// bitmask over the window positions. Requires m <= 24.
std::vector<IntSet> enumerate_fills(int n, int k, int m);

/// Number of subsets of an m-wide window with no run of k or more missing
/// elements (the gap condition alone, without the n+k+1 exclusion). This is
/// the population the block-counting lower bound applies to.
std::uint64_t count_gap_fills(int k, int m);

/// Block-counting lower bound 2^(r-2k) * (1 - 2^(-s))^(r/s - 3) on the number
/// of valid fills of width r - 2k, with block size s = floor(k/2).
/// Requires 2 <= k and r >= 2k.
double count_lower_bound(int k, double r);

/// Sum over k in [n, r/4] of 2^(-2k) * (1 - 2^(-k/2))^(r/(k/2)): the family's
/// lower bound (up to a universal constant) on the fraction of width-r
/// insertions that are valid. Requires r >= 4n.
double family_fraction_lower_bound(int n, double r);

/// Everything construct() verifies about a family member.
struct ConstructionReport {
  IntSet result;
  Classification seed_class;
  Classification result_class;
  FringeReport result_fringe;
  std::int64_t added_sums = 0;
  std::int64_t added_diffs = 0;
  /// True when the result re-verified as an MSTD P_n-set whose sum and
  /// difference counts both grew by exactly 2*(2k+m).
  bool verified = false;
};

/// Builds the family member for `spec` and re-verifies the claimed
/// properties instead of trusting them. Throws std::invalid_argument naming
/// the violated invariant if the spec is malformed (seed not MSTD, seed not
/// P_n, endpoints missing, bad fill, ...).
ConstructionReport construct(const FamilySpec& spec);

/// Convenience: construct() and return just the set.
IntSet construct_set(const FamilySpec& spec);

/// The perturbed-interval MSTD family
///   B ∪ {m-d, 2m-d, ..., km-d} ∪ (a*-B) ∪ {m},
/// with B = [0,m-1] \ {d} and a* = (k+1)m - 2d.
/// Requires m >= 4, 1 <= d <= m-1, d != m/2, and k >= 3 if d < m/2 else
/// k >= 4.
IntSet nathanson_set(int m, int d, int k);

/// Digit construction: { sum of a_i * base^(i-1), i = 1..t : a_i in A }.
/// Requires t >= 1 and base >= 1; throws on window overflow. Digits may
/// interact when the base is small relative to A (see
/// base_expand_may_interact); the expansion is still computed exactly.
IntSet base_expand(const IntSet& a, std::int64_t base, int t);

/// True when digit sums can carry between positions, i.e. the MSTD-status
/// inheritance argument does not apply: A must sit in [0, base-1] with
/// 2*max(A) < base for sums of digits to stay in one position.
bool base_expand_may_interact(const IntSet& a, std::int64_t base);

}  // namespace mstd

#endif  // MSTD_FAMILY_HPP
