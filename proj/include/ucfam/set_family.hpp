#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ucfam/errors.hpp"
#include "ucfam/member_set.hpp"

namespace ucfam {

/// A finite family of distinct subsets of the ground set {1..n}, stored in
/// canonical order (cardinality, then numeric bit-vector value). Immutable
/// after construction; all operations on families are pure functions.
///
/// The ground size may exceed the union of the members: elements that appear
/// in no member are legal, and element-quantified operations range over the
/// union only.
class SetFamily {
 public:
  static constexpr int kMaxGroundSize = MemberSet::kMaxElements;

  /// The empty family over an empty ground set.
  SetFamily() = default;

  /// Validates, sorts, and stores the members. Throws GroundTooLarge,
  /// ElementOutOfRange, or DuplicateMember.
  SetFamily(int ground_size, std::vector<MemberSet> members);

  int ground_size() const { return ground_size_; }
  const std::vector<MemberSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  MemberSet member(std::size_t index) const { return members_[index]; }

  bool contains(MemberSet m) const { return index_of(m).has_value(); }

  /// Position of m in canonical order, if m is a member.
  std::optional<std::size_t> index_of(MemberSet m) const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_size_ == b.ground_size_ && a.members_ == b.members_;
  }
  friend bool operator!=(const SetFamily& a, const SetFamily& b) { return !(a == b); }

 private:
  int ground_size_ = 0;
  std::vector<MemberSet> members_;
};

/// Builds a family from element lists, e.g. make_family(2, {{}, {1}, {1,2}}).
SetFamily make_family(int ground_size, const std::vector<std::vector<int>>& member_lists);

/// True iff A ∪ B is a member for every pair of members (vacuously true for
/// the empty and singleton families).
bool is_union_closed(const SetFamily& family);

/// Smallest union-closed family containing every member, computed by closing
/// pairwise unions to a fixed point. Ground size is preserved.
SetFamily union_closure(const SetFamily& family);

/// Union of all members (empty when the family has none).
MemberSet family_union(const SetFamily& family);

/// The subfamily of members containing the given element. Throws
/// ElementOutOfRange when the element is outside 1..ground_size.
SetFamily member_star(const SetFamily& family, int element);

/// Members with no proper subset in the family, in canonical order.
std::vector<MemberSet> minimal_members(const SetFamily& family);

/// The family without the given member. Throws NotAMember.
SetFamily remove_member(const SetFamily& family, MemberSet member);

/// Deterministic order on families: member count, then the canonical member
/// sequence, then ground size. Used to fix enumeration stream order.
bool canonical_family_less(const SetFamily& a, const SetFamily& b);

}  // namespace ucfam
