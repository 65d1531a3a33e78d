#ifndef MSTD_INT_SET_HPP
#define MSTD_INT_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mstd {

/// A finite set of integers stored as a bit window with an explicit offset.
///
/// Bit i of the word array corresponds to the integer `window_lo() + i`.
/// Sets are immutable after construction and always canonical: the window is
/// tight (bit 0 and the top bit are set for nonempty sets), so equality and
/// hashing are plain word comparisons regardless of how a set was produced.
///
/// The contiguous-window layout is what makes sumsets cheap: A+B is the OR of
/// B's word image shifted by each element of A, one word-parallel pass per
/// element of the smaller operand.
class IntSet {
 public:
  /// Widest representable window (in bits). Wider results are an error, not
  /// a silent wrap.
  static constexpr std::int64_t kMaxWindowBits = std::int64_t{1} << 24;
  /// Largest element magnitude; leaves headroom so order-6 linear forms
  /// cannot overflow 64-bit arithmetic.
  static constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 60;

  /// The empty set.
  IntSet() = default;

  /// Builds the set of the given elements; duplicates collapse.
  explicit IntSet(std::span<const std::int64_t> elements);
  IntSet(std::initializer_list<std::int64_t> elements);

  /// The full integer interval [lo, hi]; lo > hi yields the empty set.
  static IntSet interval(std::int64_t lo, std::int64_t hi);

  /// Parses the set literal grammar: comma-separated integers and inclusive
  /// ranges, e.g. "1,2,3,5,8-9,13,15-16". Whitespace is ignored; negative
  /// endpoints are written as-is ("-15--9"). Empty input is the empty set.
  static IntSet from_literal(std::string_view text);

  /// Parses {"elements":[...]} JSON.
  static IntSet from_json(std::string_view text);

  bool empty() const { return width_ == 0; }
  std::size_t size() const { return card_; }
  std::int64_t min() const;  ///< throws std::logic_error on the empty set
  std::int64_t max() const;
  bool contains(std::int64_t e) const;
  /// True iff every integer in [lo, hi] is a member. Requires lo <= hi.
  bool contains_interval(std::int64_t lo, std::int64_t hi) const;

  std::vector<std::int64_t> elements() const;

  /// Calls fn(e) for each member in ascending order.
  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(lo_ + static_cast<std::int64_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  /// Canonical sorted literal, runs of length >= 2 collapsed to "lo-hi".
  std::string to_literal() const;
  /// {"elements":[...]} with a sorted array.
  std::string to_json() const;

  std::size_t hash() const;

  friend bool operator==(const IntSet& a, const IntSet& b) {
    return a.lo_ == b.lo_ && a.width_ == b.width_ && a.words_ == b.words_;
  }

  std::int64_t window_lo() const { return lo_; }
  std::int64_t window_hi() const { return lo_ + width_ - 1; }

  friend IntSet sumset(const IntSet& a, const IntSet& b);
  friend IntSet negate(const IntSet& a);
  friend IntSet affine(const IntSet& a, std::int64_t alpha, std::int64_t beta);

 private:
  static IntSet from_ranges(std::span<const std::pair<std::int64_t, std::int64_t>> ranges);
  void set_bit(std::int64_t idx) { words_[idx >> 6] |= std::uint64_t{1} << (idx & 63); }
  void set_bit_range(std::int64_t i0, std::int64_t i1);
  bool test_bit(std::int64_t idx) const {
    return (words_[idx >> 6] >> (idx & 63)) & 1u;
  }
  void recount();
  void init_window(std::int64_t lo, std::int64_t hi);

  std::int64_t lo_ = 0;     // value of bit 0
  std::int64_t width_ = 0;  // bits in the window; 0 means empty
  std::vector<std::uint64_t> words_;
  std::size_t card_ = 0;
};

/// {a+b : a in A, b in B}. Empty operands yield the empty set (degenerate,
/// see is_degenerate_operand).
IntSet sumset(const IntSet& a, const IntSet& b);

/// {a-b : a in A, b in B}.
IntSet diffset(const IntSet& a, const IntSet& b);

/// {-a : a in A}.
IntSet negate(const IntSet& a);

/// {alpha*x + beta : x in A}; alpha must be nonzero.
IntSet affine(const IntSet& a, std::int64_t alpha, std::int64_t beta);

/// A signed linear form: `plus_terms` copies of +A and `minus_terms` of -A.
struct LinearForm {
  int plus_terms = 1;
  int minus_terms = 0;
  int order() const { return plus_terms + minus_terms; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Evaluates the iterated signed sumset of `form` at A. Supported orders are
/// 1 through 6. eval_form({1,0}, A) == A, {2,0} is the sumset, {1,1} the
/// difference set.
IntSet eval_form(const LinearForm& form, const IntSet& a);

/// True when a binary set operation received an empty operand and therefore
/// produced the (flagged) degenerate empty result.
inline bool is_degenerate_operand(const IntSet& a, const IntSet& b) {
  return a.empty() || b.empty();
}

}  // namespace mstd

template <>
struct std::hash<mstd::IntSet> {
  std::size_t operator()(const mstd::IntSet& s) const { return s.hash(); }
};

#endif  // MSTD_INT_SET_HPP
