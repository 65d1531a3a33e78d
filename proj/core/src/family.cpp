#include "mstd/family.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mstd/density.hpp"

namespace mstd {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

bool gap_condition(std::uint64_t mask, int k, int m) {
  // Window bit i corresponds to position n+k+1+i; the quantifier asks for a
  // member in every k-wide window starting at offsets 0..m-k.
  const std::uint64_t window = (k >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  for (int s = 0; s + k <= m; ++s) {
    if ((mask >> s & window) == 0) return false;
  }
  return true;
}

std::uint64_t fill_to_mask(const IntSet& fill, int n, int k, int m) {
  std::uint64_t mask = 0;
  fill.for_each([&](std::int64_t e) {
    if (e < n + k + 1 || e > n + k + m) {
      throw std::invalid_argument("fill element " + std::to_string(e) +
                                  " outside the window [n+k+1, n+k+m]");
    }
    mask |= std::uint64_t{1} << (e - (n + k + 1));
  });
  return mask;
}

IntSet mask_to_fill(std::uint64_t mask, int n, int k) {
  std::vector<std::int64_t> elems;
  while (mask != 0) {
    const int b = std::countr_zero(mask);
    elems.push_back(n + k + 1 + b);
    mask &= mask - 1;
  }
  return IntSet(std::span<const std::int64_t>(elems));
}

}  // namespace

bool validate_fill(const IntSet& fill, int n, int k, int m) {
  require(n >= 1, "n must be positive");
  require(k >= n, "k must be at least n");
  require(m >= 0, "m must be non-negative");
  require(m <= 62, "fill windows wider than 62 are not supported");
  const std::uint64_t mask = fill_to_mask(fill, n, k, m);
  if (mask & 1u) return false;  // n+k+1 must stay out
  return gap_condition(mask, k, m);
}

std::vector<IntSet> enumerate_fills(int n, int k, int m) {
  require(n >= 1, "n must be positive");
  require(k >= n, "k must be at least n");
  require(m >= 0 && m <= 24, "enumerate_fills supports 0 <= m <= 24");
  std::vector<IntSet> out;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if ((mask & 1u) == 0 && gap_condition(mask, k, m)) {
      out.push_back(mask_to_fill(mask, n, k));
    }
  }
  return out;
}

std::uint64_t count_gap_fills(int k, int m) {
  require(k >= 1, "k must be positive");
  require(m >= 0 && m <= 24, "count_gap_fills supports 0 <= m <= 24");
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (gap_condition(mask, k, m)) ++count;
  }
  return count;
}

double count_lower_bound(int k, double r) {
  require(k >= 2, "count_lower_bound requires k >= 2");
  require(r >= 2.0 * k, "count_lower_bound requires r >= 2k");
  const int block = k / 2;  // floor for odd k keeps the bound a lower bound
  return std::exp2(r - 2.0 * k) *
         std::pow(1.0 - std::exp2(-static_cast<double>(block)), r / block - 3.0);
}

double family_fraction_lower_bound(int n, double r) {
  return density_sum(DensityParams{2.0, 0.5, 0.5, n, r});
}

ConstructionReport construct(const FamilySpec& spec) {
  const int n = spec.n, k = spec.k, m = spec.m;
  require(n >= 1, "n must be positive");
  require(k >= n, "k must be at least n");
  require(m >= 0, "m must be non-negative");
  require(!spec.seed.empty(), "seed must be nonempty");
  require(spec.seed.min() == 1, "seed must contain 1 as its least element");
  require(spec.seed.max() == 2 * static_cast<std::int64_t>(n),
          "seed must contain 2n as its greatest element");
  if (!validate_fill(spec.fill, n, k, m)) {
    throw std::invalid_argument(
        "fill violates the gap condition or contains n+k+1");
  }

  ConstructionReport rep;
  rep.seed_class = classify(spec.seed);
  require(rep.seed_class.kind == SetKind::mstd, "seed is not an MSTD set");
  require(is_pn(spec.seed, n).ok(), "seed is not a P_n-set");

  const int shift = 2 * k + m;
  std::vector<std::int64_t> elems;
  spec.seed.for_each([&](std::int64_t e) {
    elems.push_back(e <= n ? e : e + shift);  // L verbatim, R translated
  });
  for (int v = n + 1; v <= n + k; ++v) elems.push_back(v);
  spec.fill.for_each([&](std::int64_t e) { elems.push_back(e); });
  for (int v = n + k + m + 1; v <= n + 2 * k + m; ++v) elems.push_back(v);
  rep.result = IntSet(std::span<const std::int64_t>(elems));

  rep.result_class = classify(rep.result);
  rep.result_fringe = is_pn(rep.result, n);
  rep.added_sums = rep.result_class.sum_card - rep.seed_class.sum_card;
  rep.added_diffs = rep.result_class.diff_card - rep.seed_class.diff_card;
  rep.verified = rep.result_class.kind == SetKind::mstd && rep.result_fringe.ok() &&
                 rep.added_sums == 2 * static_cast<std::int64_t>(shift) &&
                 rep.added_diffs == 2 * static_cast<std::int64_t>(shift);
  return rep;
}

IntSet construct_set(const FamilySpec& spec) { return construct(spec).result; }

IntSet nathanson_set(int m, int d, int k) {
  require(m >= 4, "nathanson_set requires m >= 4");
  require(1 <= d && d <= m - 1, "nathanson_set requires 1 <= d <= m-1");
  require(2 * d != m, "nathanson_set requires d != m/2");
  if (2 * d < m) {
    require(k >= 3, "nathanson_set requires k >= 3 when d < m/2");
  } else {
    require(k >= 4, "nathanson_set requires k >= 4 when d > m/2");
  }
  std::vector<std::int64_t> elems;
  const std::int64_t astar = static_cast<std::int64_t>(k + 1) * m - 2 * d;
  for (int b = 0; b <= m - 1; ++b) {
    if (b == d) continue;
    elems.push_back(b);          // B
    elems.push_back(astar - b);  // a* - B
  }
  for (int i = 1; i <= k; ++i) elems.push_back(static_cast<std::int64_t>(i) * m - d);
  elems.push_back(m);
  return IntSet(std::span<const std::int64_t>(elems));
}

IntSet base_expand(const IntSet& a, std::int64_t base, int t) {
  require(t >= 1, "base_expand requires t >= 1");
  require(base >= 1, "base_expand requires base >= 1");
  if (a.empty()) return a;
  IntSet acc = a;
  std::int64_t scale = 1;
  for (int i = 2; i <= t; ++i) {
    const __int128 next = static_cast<__int128>(scale) * base;
    if (next > IntSet::kMaxMagnitude) {
      throw std::overflow_error("base_expand digit weight exceeds the supported range");
    }
    scale = static_cast<std::int64_t>(next);
    acc = sumset(acc, affine(a, scale, 0));
  }
  return acc;
}

bool base_expand_may_interact(const IntSet& a, std::int64_t base) {
  if (a.empty()) return false;
  return a.min() < 0 || 2 * a.max() >= base;
}

}  // namespace mstd
