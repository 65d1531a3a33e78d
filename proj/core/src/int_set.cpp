#include "mstd/int_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace mstd {

namespace {

std::size_t words_for(std::int64_t width) {
  return static_cast<std::size_t>((width + 63) >> 6);
}

void check_magnitude(std::int64_t e) {
  if (e > IntSet::kMaxMagnitude || e < -IntSet::kMaxMagnitude) {
    throw std::overflow_error("set element exceeds the supported magnitude 2^60");
  }
}

void check_width(std::int64_t lo, std::int64_t hi) {
  // lo/hi magnitudes are already bounded, so hi - lo cannot overflow.
  if (hi - lo + 1 > IntSet::kMaxWindowBits) {
    throw std::overflow_error("set window wider than the supported 2^24 elements");
  }
}

// dst |= src << shift, with dst at least wide enough for every nonzero bit.
void or_shifted(std::uint64_t* dst, std::size_t dst_words,
                const std::uint64_t* src, std::size_t src_words,
                std::uint64_t shift) {
  const std::size_t wo = shift >> 6;
  const unsigned bo = static_cast<unsigned>(shift & 63);
  if (bo == 0) {
    for (std::size_t i = 0; i < src_words; ++i) dst[wo + i] |= src[i];
    return;
  }
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < src_words; ++i) {
    dst[wo + i] |= (src[i] << bo) | carry;
    carry = src[i] >> (64 - bo);
  }
  if (wo + src_words < dst_words) {
    dst[wo + src_words] |= carry;
  }
  // carry past the last word can only hold bits beyond the result window,
  // which canonical inputs never produce.
}

}  // namespace

void IntSet::init_window(std::int64_t lo, std::int64_t hi) {
  check_magnitude(lo);
  check_magnitude(hi);
  check_width(lo, hi);
  lo_ = lo;
  width_ = hi - lo + 1;
  words_.assign(words_for(width_), 0);
}

void IntSet::set_bit_range(std::int64_t i0, std::int64_t i1) {
  std::int64_t w0 = i0 >> 6, w1 = i1 >> 6;
  const std::uint64_t first = ~std::uint64_t{0} << (i0 & 63);
  const std::uint64_t last = ~std::uint64_t{0} >> (63 - (i1 & 63));
  if (w0 == w1) {
    words_[w0] |= first & last;
    return;
  }
  words_[w0] |= first;
  for (std::int64_t w = w0 + 1; w < w1; ++w) words_[w] = ~std::uint64_t{0};
  words_[w1] |= last;
}

void IntSet::recount() {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  card_ = c;
}

IntSet::IntSet(std::span<const std::int64_t> elements) {
  if (elements.empty()) return;
  std::int64_t lo = elements[0], hi = elements[0];
  for (std::int64_t e : elements) {
    check_magnitude(e);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  init_window(lo, hi);
  for (std::int64_t e : elements) set_bit(e - lo_);
  recount();
}

IntSet::IntSet(std::initializer_list<std::int64_t> elements)
    : IntSet(std::span<const std::int64_t>(elements.begin(), elements.size())) {}

IntSet IntSet::interval(std::int64_t lo, std::int64_t hi) {
  IntSet s;
  if (lo > hi) return s;
  s.init_window(lo, hi);
  s.set_bit_range(0, s.width_ - 1);
  s.card_ = static_cast<std::size_t>(s.width_);
  return s;
}

IntSet IntSet::from_ranges(std::span<const std::pair<std::int64_t, std::int64_t>> ranges) {
  IntSet s;
  if (ranges.empty()) return s;
  std::int64_t lo = ranges[0].first, hi = ranges[0].second;
  for (const auto& [a, b] : ranges) {
    check_magnitude(a);
    check_magnitude(b);
    check_width(a, b);
    lo = std::min(lo, a);
    hi = std::max(hi, b);
  }
  s.init_window(lo, hi);
  for (const auto& [a, b] : ranges) s.set_bit_range(a - lo, b - lo);
  s.recount();
  return s;
}

std::int64_t IntSet::min() const {
  if (empty()) throw std::logic_error("min of the empty set");
  return lo_;  // canonical: bit 0 is set
}

std::int64_t IntSet::max() const {
  if (empty()) throw std::logic_error("max of the empty set");
  return lo_ + width_ - 1;
}

bool IntSet::contains(std::int64_t e) const {
  if (empty() || e < lo_ || e >= lo_ + width_) return false;
  return test_bit(e - lo_);
}

bool IntSet::contains_interval(std::int64_t lo, std::int64_t hi) const {
  if (lo > hi) throw std::invalid_argument("contains_interval requires lo <= hi");
  if (empty() || lo < lo_ || hi > lo_ + width_ - 1) return false;
  std::int64_t i = lo - lo_;
  const std::int64_t i1 = hi - lo_;
  while (i <= i1) {
    const std::int64_t w = i >> 6;
    std::uint64_t need = ~std::uint64_t{0} << (i & 63);
    const std::int64_t wtop = (w << 6) + 63;
    if (i1 < wtop) need &= ~std::uint64_t{0} >> (63 - (i1 & 63));
    if ((words_[w] & need) != need) return false;
    i = wtop + 1;
  }
  return true;
}

std::vector<std::int64_t> IntSet::elements() const {
  std::vector<std::int64_t> out;
  out.reserve(card_);
  for_each([&](std::int64_t e) { out.push_back(e); });
  return out;
}

std::string IntSet::to_literal() const {
  std::string out;
  bool have_run = false;
  std::int64_t run_lo = 0, run_hi = 0;
  auto flush = [&] {
    if (!have_run) return;
    if (!out.empty()) out += ',';
    out += std::to_string(run_lo);
    if (run_hi != run_lo) {
      out += '-';
      out += std::to_string(run_hi);
    }
  };
  for_each([&](std::int64_t e) {
    if (have_run && e == run_hi + 1) {
      run_hi = e;
      return;
    }
    flush();
    have_run = true;
    run_lo = run_hi = e;
  });
  flush();
  return out;
}

IntSet IntSet::from_literal(std::string_view text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_int = [&]() -> std::int64_t {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::int64_t value = 0;
    auto [p, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc() || p != text.data() + pos || pos == start) {
      throw std::invalid_argument("malformed set literal: expected an integer at position " +
                                  std::to_string(start));
    }
    return value;
  };
  skip_ws();
  if (pos == text.size()) return IntSet();
  while (true) {
    const std::int64_t a = parse_int();
    std::int64_t b = a;
    skip_ws();
    if (pos < text.size() && text[pos] == '-') {
      ++pos;
      b = parse_int();
      if (b < a) {
        throw std::invalid_argument("malformed set literal: descending range " +
                                    std::to_string(a) + "-" + std::to_string(b));
      }
      skip_ws();
    }
    ranges.emplace_back(a, b);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw std::invalid_argument("malformed set literal: expected ',' at position " +
                                  std::to_string(pos));
    }
    ++pos;
    skip_ws();
    if (pos == text.size()) {
      throw std::invalid_argument("malformed set literal: trailing ','");
    }
  }
  return from_ranges(ranges);
}

std::string IntSet::to_json() const {
  nlohmann::json j;
  j["elements"] = elements();
  return j.dump();
}

IntSet IntSet::from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
    throw std::invalid_argument("set JSON must be an object with an \"elements\" array");
  }
  std::vector<std::int64_t> elems;
  for (const auto& v : j["elements"]) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument("set JSON elements must be integers");
    }
    elems.push_back(v.get<std::int64_t>());
  }
  return IntSet(std::span<const std::int64_t>(elems));
}

std::size_t IntSet::hash() const {
  // FNV-1a over the window origin and word image.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(lo_));
  mix(static_cast<std::uint64_t>(width_));
  for (std::uint64_t w : words_) mix(w);
  return static_cast<std::size_t>(h);
}

IntSet sumset(const IntSet& a, const IntSet& b) {
  if (a.empty() || b.empty()) return IntSet();
  IntSet out;
  out.init_window(a.lo_ + b.lo_, (a.lo_ + a.width_ - 1) + (b.lo_ + b.width_ - 1));
  // Shift the word image of one operand by each element of the other;
  // iterating the smaller-cardinality side minimizes passes.
  const IntSet& iter = a.size() <= b.size() ? a : b;
  const IntSet& image = a.size() <= b.size() ? b : a;
  iter.for_each([&](std::int64_t e) {
    or_shifted(out.words_.data(), out.words_.size(), image.words_.data(),
               image.words_.size(), static_cast<std::uint64_t>(e - iter.lo_));
  });
  out.recount();
  return out;
}

IntSet negate(const IntSet& a) {
  if (a.empty()) return IntSet();
  IntSet out;
  out.init_window(-(a.lo_ + a.width_ - 1), -a.lo_);
  a.for_each([&](std::int64_t e) { out.set_bit(-e - out.lo_); });
  out.card_ = a.card_;
  return out;
}

IntSet diffset(const IntSet& a, const IntSet& b) {
  return sumset(a, negate(b));
}

IntSet affine(const IntSet& a, std::int64_t alpha, std::int64_t beta) {
  if (alpha == 0) throw std::invalid_argument("affine requires alpha != 0");
  if (a.empty()) return IntSet();
  if (alpha == 1) {
    IntSet out = a;
    check_magnitude(out.lo_ + beta);
    check_magnitude(out.lo_ + out.width_ - 1 + beta);
    out.lo_ += beta;
    return out;
  }
  if (alpha == -1) return affine(negate(a), 1, beta);
  // |alpha| >= 2: the image is sparse in its window; place bits one by one.
  auto scaled = [alpha, beta](std::int64_t e) {
    const __int128 v = static_cast<__int128>(alpha) * e + beta;
    if (v > IntSet::kMaxMagnitude || v < -IntSet::kMaxMagnitude) {
      throw std::overflow_error("affine image exceeds the supported magnitude 2^60");
    }
    return static_cast<std::int64_t>(v);
  };
  const std::int64_t lo = alpha > 0 ? scaled(a.min()) : scaled(a.max());
  const std::int64_t hi = alpha > 0 ? scaled(a.max()) : scaled(a.min());
  IntSet out;
  out.init_window(lo, hi);
  a.for_each([&](std::int64_t e) { out.set_bit(scaled(e) - out.lo_); });
  out.card_ = a.card_;
  return out;
}

IntSet eval_form(const LinearForm& form, const IntSet& a) {
  if (form.plus_terms < 0 || form.minus_terms < 0 || form.order() < 1) {
    throw std::invalid_argument("linear form must have non-negative counts and order >= 1");
  }
  if (form.order() > 6) {
    throw std::invalid_argument("linear forms are supported up to order 6");
  }
  if (a.empty()) return IntSet();
  const IntSet neg = form.minus_terms > 0 ? negate(a) : IntSet();
  IntSet acc = form.plus_terms > 0 ? a : neg;
  for (int i = 1; i < form.plus_terms; ++i) acc = sumset(acc, a);
  for (int i = form.plus_terms > 0 ? 0 : 1; i < form.minus_terms; ++i) acc = sumset(acc, neg);
  return acc;
}

}  // namespace mstd
