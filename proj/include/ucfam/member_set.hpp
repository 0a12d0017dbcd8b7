#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ucfam/errors.hpp"

namespace ucfam {

/// A subset of the ground set {1..n}, packed into one 64-bit word.
/// Element i occupies bit i-1, so the numeric value of the word orders
/// sets the same way their reversed characteristic vectors would.
class MemberSet {
 public:
  static constexpr int kMaxElements = 64;

  constexpr MemberSet() = default;

  static constexpr MemberSet from_bits(std::uint64_t bits) { return MemberSet(bits); }

  /// Builds a set from 1-based elements; duplicates are harmless here
  /// (callers that must reject duplicate *members* do so at the family level).
  static MemberSet from_elements(const std::vector<int>& elements) {
    std::uint64_t bits = 0;
    for (int e : elements) {
      if (e < 1 || e > kMaxElements)
        fail(ErrorKind::ElementOutOfRange,
             "element " + std::to_string(e) + " outside 1.." + std::to_string(kMaxElements));
      bits |= std::uint64_t{1} << (e - 1);
    }
    return MemberSet(bits);
  }

  /// The full set {1..n}.
  static constexpr MemberSet full(int n) {
    return MemberSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int cardinality() const { return std::popcount(bits_); }

  constexpr bool contains(int element) const {
    return element >= 1 && element <= kMaxElements &&
           (bits_ >> (element - 1)) & std::uint64_t{1};
  }

  constexpr MemberSet with(int element) const {
    return MemberSet(bits_ | (std::uint64_t{1} << (element - 1)));
  }
  constexpr MemberSet without(int element) const {
    return MemberSet(bits_ & ~(std::uint64_t{1} << (element - 1)));
  }

  constexpr bool subset_of(MemberSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(MemberSet other) const {
    return bits_ != other.bits_ && subset_of(other);
  }

  friend constexpr MemberSet operator|(MemberSet a, MemberSet b) {
    return MemberSet(a.bits_ | b.bits_);
  }
  friend constexpr MemberSet operator&(MemberSet a, MemberSet b) {
    return MemberSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr MemberSet operator-(MemberSet a, MemberSet b) {
    return MemberSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(MemberSet a, MemberSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(MemberSet a, MemberSet b) { return a.bits_ != b.bits_; }

  /// Elements in ascending order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
      out.push_back(std::countr_zero(rest) + 1);
    return out;
  }

  /// "{}" for the empty set, "{1,3}" otherwise.
  std::string to_string() const {
    if (bits_ == 0) return "{}";
    std::string out = "{";
    bool first = true;
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      if (!first) out += ',';
      out += std::to_string(std::countr_zero(rest) + 1);
      first = false;
    }
    out += '}';
    return out;
  }

 private:
  constexpr explicit MemberSet(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

/// Canonical member order: by cardinality, ties by numeric bit-vector value.
constexpr bool canonical_less(MemberSet a, MemberSet b) {
  int ca = a.cardinality(), cb = b.cardinality();
  if (ca != cb) return ca < cb;
  return a.bits() < b.bits();
}

}  // namespace ucfam
