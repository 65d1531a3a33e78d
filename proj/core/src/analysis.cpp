#include "mstd/analysis.hpp"

#include <stdexcept>

namespace mstd {

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::mstd: return "MSTD";
    case SetKind::balanced: return "balanced";
    case SetKind::mdts: return "MDTS";
  }
  return "?";
}

Classification classify(const IntSet& a) {
  if (a.empty()) throw std::invalid_argument("classify: empty set rejected");
  const auto s = static_cast<std::int64_t>(sumset(a, a).size());
  const auto d = static_cast<std::int64_t>(diffset(a, a).size());
  SetKind kind = SetKind::balanced;
  if (s > d) kind = SetKind::mstd;
  if (s < d) kind = SetKind::mdts;
  return {kind, s, d};
}

namespace {

std::vector<std::int64_t> missing_in(const IntSet& s, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) {
    if (!s.contains(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

FringeReport is_pn(const IntSet& a, int n) {
  if (a.empty()) throw std::invalid_argument("is_pn: empty set rejected");
  const std::int64_t lo = a.min(), hi = a.max();
  if (n < 1 || n > hi - lo) {
    throw std::invalid_argument("is_pn: n must satisfy 1 <= n <= max A - min A");
  }
  FringeReport rep;
  rep.n = n;
  const IntSet sums = sumset(a, a);
  const IntSet diffs = diffset(a, a);
  rep.missing_sums = missing_in(sums, 2 * lo + n, 2 * hi - n);
  rep.missing_diffs = missing_in(diffs, -(hi - lo) + n, (hi - lo) - n);
  rep.sum_ok = rep.missing_sums.empty();
  rep.diff_ok = rep.missing_diffs.empty();
  return rep;
}

bool is_pnj(const IntSet& a, int n, int j) {
  if (a.empty()) throw std::invalid_argument("is_pnj: empty set rejected");
  if (j < 2) throw std::invalid_argument("is_pnj: form order j must be at least 2");
  if (!a.contains(1) || a.min() != 1) {
    throw std::invalid_argument("is_pnj: requires A within [1, max A] with 1 in A");
  }
  const std::int64_t k = a.max();
  if (n < 1 || 2 * static_cast<std::int64_t>(n) > static_cast<std::int64_t>(j) * (k - 1)) {
    throw std::invalid_argument("is_pnj: n out of range for the order-j fringe windows");
  }
  // |f_{j1,j2}(A)| = |f_{j2,j1}(A)|, and the two are reflections of each
  // other, so forms with plus_terms >= minus_terms cover every case.
  for (int j1 = (j + 1) / 2; j1 <= j; ++j1) {
    const int j2 = j - j1;
    const IntSet f = eval_form({j1, j2}, a);
    const std::int64_t min_possible = j1 - static_cast<std::int64_t>(j2) * k;
    const std::int64_t max_possible = static_cast<std::int64_t>(j1) * k - j2;
    if (!f.contains_interval(min_possible + n, max_possible - n)) return false;
  }
  return true;
}

}  // namespace mstd
