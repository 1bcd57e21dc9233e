#pragma once

#include "fzgraph/error.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fzg {

using Mask = std::uint64_t;

inline constexpr unsigned kMaxGenerators = 64;

/// Mask with the low `n` bits set.
constexpr Mask full_mask(unsigned n) noexcept {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

/// A subset I of {0, ..., n-1}, stored as an n-bit mask. Elements are always
/// read in ascending order; blade signs are taken relative to that order.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;

  MultiIndex(Mask bits, unsigned n) : bits_(bits), n_(n) {
    if (n > kMaxGenerators) {
      throw SizeLimitError("multi-index ambient size " + std::to_string(n) +
                           " exceeds " + std::to_string(kMaxGenerators));
    }
    if ((bits & ~full_mask(n)) != 0) {
      throw RangeError("multi-index has elements outside [0, " +
                       std::to_string(n) + ")");
    }
  }

  MultiIndex(std::initializer_list<unsigned> elems, unsigned n)
      : MultiIndex(mask_of(elems, n), n) {}

  static MultiIndex from_elements(const std::vector<unsigned>& elems,
                                  unsigned n) {
    Mask m = 0;
    for (unsigned e : elems) {
      if (e >= n) {
        throw RangeError("index " + std::to_string(e) + " outside [0, " +
                         std::to_string(n) + ")");
      }
      m |= Mask{1} << e;
    }
    return MultiIndex(m, n);
  }

  static MultiIndex empty(unsigned n) { return MultiIndex(0, n); }
  static MultiIndex full(unsigned n) { return MultiIndex(full_mask(n), n); }

  constexpr Mask bits() const noexcept { return bits_; }
  constexpr unsigned ambient() const noexcept { return n_; }
  constexpr unsigned size() const noexcept {
    return static_cast<unsigned>(std::popcount(bits_));
  }
  constexpr bool is_empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(unsigned i) const noexcept {
    return i < 64 && ((bits_ >> i) & 1U) != 0;
  }

  /// I' = [n] \ I.
  MultiIndex complement() const { return MultiIndex(~bits_ & full_mask(n_), n_); }

  std::vector<unsigned> elements() const {
    std::vector<unsigned> out;
    out.reserve(size());
    for (Mask m = bits_; m != 0; m &= m - 1) {
      out.push_back(static_cast<unsigned>(std::countr_zero(m)));
    }
    return out;
  }

  friend constexpr bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend constexpr auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  static Mask mask_of(std::initializer_list<unsigned> elems, unsigned n) {
    Mask m = 0;
    for (unsigned e : elems) {
      if (e >= n || e >= 64) {
        throw RangeError("index " + std::to_string(e) + " outside [0, " +
                         std::to_string(n) + ")");
      }
      m |= Mask{1} << e;
    }
    return m;
  }

  Mask bits_ = 0;
  unsigned n_ = 0;
};

/// Number of pairs (i in a, j in b) with i > j: the transpositions needed to
/// bring the concatenation gamma_a gamma_b into ascending order.
constexpr unsigned reorder_swaps(Mask a, Mask b) noexcept {
  unsigned swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) {
    swaps += static_cast<unsigned>(std::popcount(a & b));
  }
  return swaps;
}

}  // namespace fzg
