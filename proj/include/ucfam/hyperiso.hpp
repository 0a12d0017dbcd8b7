#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ucfam/morphism.hpp"

namespace ucfam {

/// A bijection between the ground unions of two families, H: ∪F1 → ∪F2,
/// stored as (source element, target element) pairs ascending by source.
class GroundMap {
 public:
  /// Validates totality on source_union, injectivity, and that the image is
  /// exactly target_union. Throws InvalidMap.
  GroundMap(MemberSet source_union, MemberSet target_union,
            std::vector<std::pair<int, int>> pairs);

  static GroundMap identity(MemberSet ground_union);

  MemberSet source_union() const { return source_union_; }
  MemberSet target_union() const { return target_union_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  /// Image of one element. Throws ElementNotInUnion.
  int apply(int element) const;

  /// Elementwise image of a set. Throws ElementNotInUnion when the set is not
  /// contained in the source union.
  MemberSet apply(MemberSet set) const;

  GroundMap inverse() const;

  friend bool operator==(const GroundMap& a, const GroundMap& b) {
    return a.source_union_ == b.source_union_ && a.target_union_ == b.target_union_ &&
           a.pairs_ == b.pairs_;
  }
  friend bool operator!=(const GroundMap& a, const GroundMap& b) { return !(a == b); }

 private:
  MemberSet source_union_;
  MemberSet target_union_;
  std::vector<std::pair<int, int>> pairs_;
};

/// Intersection of all members containing the given element. An empty
/// subfamily intersects to the ambient union ∪family by convention. Throws
/// ElementOutOfRange when the element is outside 1..ground_size.
MemberSet star_intersection(const SetFamily& family, int element);

/// The member map A ↦ H[A] induced by applying H elementwise. Requires H's
/// unions to equal ∪source and ∪target (InvalidMap otherwise) and every image
/// to be a member of the target (ImageNotInTarget otherwise).
FamilyMap induced_map(const GroundMap& ground_map, const SetFamily& source,
                      const SetFamily& target);

/// True iff the induced member map exists and is an isomorphism. Never
/// throws for mismatched inputs; any failure is a plain false.
bool is_hyperisomorphism(const GroundMap& ground_map, const SetFamily& source,
                         const SetFamily& target);

/// Recovers the ground bijection underlying an isomorphism between pure
/// union-closed families: for each i ∈ ∪source, H(i) is the one element j
/// whose member subfamily equals the image of i's member subfamily. The
/// candidate j is searched inside the intersection of that image. Requires a
/// verified isomorphism (NotAnIsomorphism) between pure families (NotPure).
/// Existence and uniqueness of j are guaranteed for such inputs; a violation
/// aborts with InternalContradiction, as does a recovered H whose induced map
/// differs from the input.
GroundMap extract_hyperisomorphism(const FamilyMap& map);

inline constexpr int kDefaultUnionCap = 8;

/// All ground bijections ∪source → ∪target whose induced member map equals
/// the given map, by exhaustive permutation search. Empty when the unions
/// differ in size; UnionTooLarge above the cap.
std::vector<GroundMap> brute_force_hyperisomorphism(const FamilyMap& map,
                                                    int union_cap = kDefaultUnionCap);

/// One (source size, image size) comparison; the two agree on every record
/// produced by verify_cardinality_theorem on valid input.
struct SizePair {
  int source = 0;
  int image = 0;

  friend bool operator==(const SizePair& a, const SizePair& b) {
    return a.source == b.source && a.image == b.image;
  }
};

/// Size-preservation evidence for one isomorphism between pure families:
/// member sizes |A| vs |h(A)|, the ground unions, and — over all ordered
/// member pairs — union, intersection, and difference sizes, plus complement
/// sizes relative to the respective ground unions.
struct CardinalityReport {
  SizePair union_size;
  std::vector<SizePair> member_sizes;
  std::vector<SizePair> pair_union_sizes;
  std::vector<SizePair> pair_intersection_sizes;
  std::vector<SizePair> pair_difference_sizes;
  std::vector<SizePair> complement_sizes;
  bool pass = false;  // true iff every recorded pair agrees
};

/// Measures every size pair above for a verified isomorphism between pure
/// families. Throws NotPure / NotAnIsomorphism on bad input; a false pass
/// flag on accepted input signals an implementation bug.
CardinalityReport verify_cardinality_theorem(const FamilyMap& map);

}  // namespace ucfam
