#ifndef MSTD_ANALYSIS_HPP
#define MSTD_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mstd/int_set.hpp"

namespace mstd {

enum class SetKind { mstd, balanced, mdts };

std::string to_string(SetKind kind);

/// Sum/difference cardinality comparison of a set.
struct Classification {
  SetKind kind;
  std::int64_t sum_card;
  std::int64_t diff_card;
};

/// Compares |A+A| against |A-A|. Rejects the empty set.
Classification classify(const IntSet& a);

/// Result of the fringe check: with a = min A, b = max A, the sumset must
/// contain [2a+n, 2b-n] and the difference set [-(b-a)+n, (b-a)-n]. The
/// missing lists enumerate the violations inside those windows.
struct FringeReport {
  int n = 0;
  bool sum_ok = false;
  bool diff_ok = false;
  std::vector<std::int64_t> missing_sums;
  std::vector<std::int64_t> missing_diffs;
  bool ok() const { return sum_ok && diff_ok; }
};

/// Checks whether A is a P_n-set, reporting any fringe gaps.
/// Requires A nonempty and 1 <= n <= max A - min A.
FringeReport is_pn(const IntSet& a, int n);

/// Order-j generalization: every signed form with j terms (it suffices to
/// evaluate those with at least as many pluses as minuses) must contain all
/// but the first n and last n possible elements. Requires 1 in A, and n small
/// enough that the checked interval is nonempty.
bool is_pnj(const IntSet& a, int n, int j);

}  // namespace mstd

#endif  // MSTD_ANALYSIS_HPP
