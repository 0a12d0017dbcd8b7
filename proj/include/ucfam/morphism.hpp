#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "ucfam/set_family.hpp"

namespace ucfam {

/// A total map from the members of one family to the members of another,
/// stored as target indices in the source's canonical member order. Map
/// identity survives renormalization because indices refer to canonical
/// positions, not representation details.
class FamilyMap {
 public:
  /// Throws InvalidMap unless the assignment is total on the source and every
  /// value indexes a member of the target.
  FamilyMap(SetFamily source, SetFamily target, std::vector<std::size_t> assignment);

  static FamilyMap identity(const SetFamily& family);

  const SetFamily& source() const { return source_; }
  const SetFamily& target() const { return target_; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

  /// Image of the source member at the given canonical index.
  MemberSet apply_index(std::size_t source_index) const {
    return target_.member(assignment_[source_index]);
  }

  /// Image of a source member given by value. Throws NotAMember.
  MemberSet apply(MemberSet source_member) const;

  friend bool operator==(const FamilyMap& a, const FamilyMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.assignment_ == b.assignment_;
  }
  friend bool operator!=(const FamilyMap& a, const FamilyMap& b) { return !(a == b); }

 private:
  SetFamily source_;
  SetFamily target_;
  std::vector<std::size_t> assignment_;
};

/// True iff h(A ∪ B) = h(A) ∪ h(B) over all member pairs (the diagonal
/// included). Throws SourceNotUnionClosed: A ∪ B must itself be a source
/// member for the left side to be defined.
bool is_homomorphism(const FamilyMap& map);

/// A bijective homomorphism. Throws SourceNotUnionClosed.
bool is_isomorphism(const FamilyMap& map);

/// {h(A) : A ∈ source} as a family over the target's ground set, deduplicated.
/// Throws NotAHomomorphism. The result is union-closed; violation of that
/// guarantee aborts with InternalContradiction.
SetFamily image_family(const FamilyMap& map);

inline constexpr std::size_t kFindAll = std::numeric_limits<std::size_t>::max();

/// Up to `limit` isomorphisms from `source` onto `target`, backtracking over
/// member assignments in decreasing-cardinality order. Prunes on member
/// count, minimal-member correspondence, partial union preservation, and —
/// when both families are pure — member cardinality. Results are sorted by
/// assignment. An empty result means no isomorphism exists; non-union-closed
/// input throws NotUnionClosed.
std::vector<FamilyMap> find_isomorphisms(const SetFamily& source, const SetFamily& target,
                                         std::size_t limit = kFindAll);

/// then ∘ first. Throws InvalidMap when the inner target differs from the
/// outer source.
FamilyMap compose(const FamilyMap& first, const FamilyMap& then);

/// Inverse of a bijective map. Throws NotAnIsomorphism when the assignment is
/// not a bijection.
FamilyMap inverse_map(const FamilyMap& map);

}  // namespace ucfam
