#pragma once

// Exact arithmetic in the zeon algebra (commuting, square-zero generators
// zeta_i) and the Euclidean Clifford algebra (anticommuting generators gamma_i
// with gamma_i^2 = 1). Both are 2^n-dimensional with basis blades indexed by
// subsets of [n]; they differ only in the blade product rule.
//
// Vectors built from matrix rows carry integer coefficients. The 1/sqrt(2)
// normalization of the vertex fermions is not applied, so top-grade
// coefficients of a product of row vectors are exactly det(B_I) (Clifford)
// or per(B_I) (zeon).

#include "fzgraph/bigint.hpp"
#include "fzgraph/error.hpp"
#include "fzgraph/multi_index.hpp"

#include <algorithm>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fzg {

/// Product of two basis blades: resulting mask and sign in {-1, 0, +1}.
struct BladeProduct {
  Mask blade;
  int sign;
};

/// zeta_I zeta_J = zeta_{I u J} if I and J are disjoint, else 0.
struct ZeonRule {
  static constexpr const char* symbol = "z";
  static constexpr BladeProduct multiply(Mask a, Mask b) noexcept {
    if ((a & b) != 0) return {0, 0};
    return {a | b, 1};
  }
};

/// gamma_I gamma_J = (-1)^swaps gamma_{I xor J}; shared generators contract to +1.
struct CliffordRule {
  static constexpr const char* symbol = "g";
  static constexpr BladeProduct multiply(Mask a, Mask b) noexcept {
    return {a ^ b, (reorder_swaps(a, b) & 1U) != 0 ? -1 : 1};
  }
};

/// Finite formal sum of basis blades with exact integer coefficients, held
/// in normalized form: sorted by blade mask, no stored zeros.
template <class Rule>
class BladeElement {
 public:
  using Term = std::pair<Mask, BigInt>;

  BladeElement() = default;
  explicit BladeElement(unsigned n) : n_(check_n(n)) {}

  static BladeElement scalar(unsigned n, const BigInt& c) {
    return blade(MultiIndex::empty(n), c);
  }

  static BladeElement blade(const MultiIndex& index, const BigInt& c = 1) {
    BladeElement out(index.ambient());
    if (c != 0) out.terms_.emplace_back(index.bits(), c);
    return out;
  }

  static BladeElement generator(unsigned i, unsigned n) {
    return blade(MultiIndex({i}, n));
  }

  unsigned ambient() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(Mask blade) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), blade,
        [](const Term& t, Mask m) { return t.first < m; });
    return (it != terms_.end() && it->first == blade) ? it->second : BigInt(0);
  }

  BigInt coefficient(const MultiIndex& index) const {
    if (index.ambient() != n_) {
      throw DimensionError("coefficient: multi-index over " +
                           std::to_string(index.ambient()) +
                           " generators, element over " + std::to_string(n_));
    }
    return coefficient(index.bits());
  }

  BladeElement grade_project(unsigned k) const {
    BladeElement out(n_);
    for (const auto& t : terms_) {
      if (static_cast<unsigned>(std::popcount(t.first)) == k) {
        out.terms_.push_back(t);
      }
    }
    return out;
  }

  BladeElement& operator+=(const BladeElement& rhs) {
    require_same(rhs, "addition");
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
      if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == terms_.end() || b->first < a->first) {
        merged.push_back(*b++);
      } else {
        BigInt c = a->second + b->second;
        if (c != 0) merged.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  BladeElement& operator*=(const BigInt& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend BladeElement operator+(BladeElement a, const BladeElement& b) {
    return a += b;
  }
  friend BladeElement operator-(const BladeElement& a) {
    BladeElement out = a;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }
  friend BladeElement operator-(BladeElement a, const BladeElement& b) {
    return a += -b;
  }
  friend BladeElement operator*(BladeElement a, const BigInt& c) { return a *= c; }
  friend BladeElement operator*(const BigInt& c, BladeElement a) { return a *= c; }

  /// Algebra product under Rule.
  friend BladeElement operator*(const BladeElement& a, const BladeElement& b) {
    a.require_same(b, "product");
    BladeElement out(a.n_);
    if (a.is_zero() || b.is_zero()) return out;
    const std::size_t pairs = a.terms_.size() * b.terms_.size();
    if (a.n_ <= kDenseLimit && pairs > (std::size_t{1} << a.n_)) {
      std::vector<BigInt> acc(std::size_t{1} << a.n_);
      std::vector<bool> touched(acc.size(), false);
      for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
          const BladeProduct p = Rule::multiply(ma, mb);
          if (p.sign == 0) continue;
          touched[p.blade] = true;
          if (p.sign > 0) {
            acc[p.blade] += ca * cb;
          } else {
            acc[p.blade] -= ca * cb;
          }
        }
      }
      for (std::size_t m = 0; m < acc.size(); ++m) {
        if (touched[m] && acc[m] != 0) out.terms_.emplace_back(m, std::move(acc[m]));
      }
      return out;
    }
    std::vector<Term> raw;
    raw.reserve(pairs);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        const BladeProduct p = Rule::multiply(ma, mb);
        if (p.sign == 0) continue;
        raw.emplace_back(p.blade, p.sign > 0 ? BigInt(ca * cb) : BigInt(-(ca * cb)));
      }
    }
    std::sort(raw.begin(), raw.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < raw.size();) {
      BigInt c = std::move(raw[i].second);
      std::size_t j = i + 1;
      for (; j < raw.size() && raw[j].first == raw[i].first; ++j) c += raw[j].second;
      if (c != 0) out.terms_.emplace_back(raw[i].first, std::move(c));
      i = j;
    }
    return out;
  }

  friend bool operator==(const BladeElement& a, const BladeElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << '-';
      first = false;
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (m == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag << '*';
      os << Rule::symbol << '{';
      bool sep = false;
      for (Mask r = m; r != 0; r &= r - 1) {
        if (sep) os << ',';
        os << std::countr_zero(r);
        sep = true;
      }
      os << '}';
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BladeElement& e) {
    return os << e.to_string();
  }

 private:
  static constexpr unsigned kDenseLimit = 16;

  static unsigned check_n(unsigned n) {
    if (n > kMaxGenerators) {
      throw SizeLimitError("algebra over " + std::to_string(n) +
                           " generators exceeds the cap of " +
                           std::to_string(kMaxGenerators));
    }
    return n;
  }

  void require_same(const BladeElement& other, const char* op) const {
    if (n_ != other.n_) {
      throw DimensionError(std::string(op) + ": ambient dimensions " +
                           std::to_string(n_) + " and " +
                           std::to_string(other.n_) + " differ");
    }
  }

  unsigned n_ = 0;
  std::vector<Term> terms_;
};

using ZeonElement = BladeElement<ZeonRule>;
using CliffordElement = BladeElement<CliffordRule>;

inline ZeonElement zeon_mul(const ZeonElement& a, const ZeonElement& b) { return a * b; }

inline CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) {
  return a * b;
}

template <class Rule>
BladeElement<Rule> grade_project(const BladeElement<Rule>& a, unsigned k) {
  return a.grade_project(k);
}

template <class Rule>
BigInt coefficient(const BladeElement<Rule>& a, const MultiIndex& index) {
  return a.coefficient(index);
}

/// sum_j row[j] * e_j, where e_j is the j-th generator of the chosen algebra.
template <class Element>
Element vector_from_row(std::span<const BigInt> row) {
  const auto n = static_cast<unsigned>(row.size());
  Element out(n);
  for (unsigned j = 0; j < n; ++j) {
    if (row[j] != 0) out += Element::generator(j, n) * row[j];
  }
  return out;
}

enum class Flavor { fermion, zeon };

}  // namespace fzg
