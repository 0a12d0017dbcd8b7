#pragma once

#include <functional>
#include <vector>

#include "ucfam/morphism.hpp"
#include "ucfam/set_family.hpp"

namespace ucfam {

/// True iff stripping z from every member keeps the member count, i.e. the
/// strip-z map is injective on the family. Throws ElementNotInUnion: the
/// question is only posed for elements of the union.
bool is_redundant(const SetFamily& family, int element);

/// Elements of the union that are redundant, ascending.
std::vector<int> redundant_elements(const SetFamily& family);

/// {X \ {z} : X ∈ F} for a redundant z; same member count, same ground size
/// (z merely vanishes from the union). Throws ElementNotInUnion and
/// NotRedundant (stripping a non-redundant element would merge members).
SetFamily reduce(const SetFamily& family, int element);

/// True iff no element of the union is redundant (vacuously true when the
/// union is empty).
bool is_pure(const SetFamily& family);

/// Which redundant element to remove at each purification step.
enum class RemovalOrder { kSmallestFirst, kLargestFirst };

struct PurificationStep {
  int removed_element;
  SetFamily before;
  SetFamily after;
};

struct PurificationResult {
  SetFamily family;                      // pure
  std::vector<PurificationStep> steps;   // empty when the input was already pure
};

/// Repeatedly removes a redundant element until none remains. The chooser
/// receives the current family and its redundant elements (ascending,
/// nonempty) and picks one of them. All removal orders yield the same family
/// up to relabeling of ground elements.
PurificationResult purify(
    const SetFamily& family,
    const std::function<int(const SetFamily&, const std::vector<int>&)>& choose);

/// Policy form of purify; the default removes the smallest redundant element
/// first.
PurificationResult purify(const SetFamily& family,
                          RemovalOrder order = RemovalOrder::kSmallestFirst);

/// The map A ↦ A \ {z} from the family onto reduce(family, z). An isomorphism
/// whenever z is redundant. Throws like reduce.
FamilyMap strip_map(const SetFamily& family, int element);

/// Composition of the per-step strip maps: an isomorphism from the original
/// family onto the purified one.
FamilyMap purification_isomorphism(const SetFamily& family,
                                   const std::vector<PurificationStep>& steps);

}  // namespace ucfam
