#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ucfam/set_family.hpp"

namespace ucfam {

/// Relabeling-invariant fingerprint: the lexicographically smallest canonical
/// member encoding over all permutations of ∪F. Equal fingerprints ⟺ some
/// ground-element bijection maps one member list onto the other.
struct CanonicalForm {
  std::vector<std::uint64_t> fingerprint;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.fingerprint == b.fingerprint;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.fingerprint < b.fingerprint;
  }
};

inline constexpr int kCanonicalFormUnionCap = 8;

/// Minimizes the relabeled encoding over all |∪F|! permutations; elements
/// outside ∪F are ignored. Throws UnionTooLarge above the factorial cap.
CanonicalForm canonical_form(const SetFamily& family);

/// True iff the fingerprints agree; for union-closed inputs this coincides
/// with the existence of a ground bijection inducing an isomorphism. Throws
/// UnionTooLarge as canonical_form does.
bool hyperisomorphic(const SetFamily& a, const SetFamily& b);

/// Two independent generators with disjoint implementations, used to
/// cross-validate each other:
///  - kDirectFilter tests all 2^(2^n) candidate families (n ≤ 4);
///  - kRecursiveSplit composes families over [n] from absorbing pairs of
///    families over [n-1], splitting members on element n (n ≤ 5).
enum class EnumerationMethod { kDirectFilter, kRecursiveSplit };

inline constexpr int kDirectFilterCap = 4;
inline constexpr int kRecursiveSplitCap = 5;

/// Visits every union-closed family over {1..ground_size} exactly once, in
/// canonical order (member count, then member sequence), optionally only
/// those containing ∅. Both methods produce identical streams. Throws
/// GroundTooLarge beyond the method's cap.
void enumerate_union_closed(int ground_size, bool require_empty, EnumerationMethod method,
                            const std::function<void(const SetFamily&)>& visit);

/// Materialized convenience form.
std::vector<SetFamily> enumerate_union_closed(
    int ground_size, bool require_empty = false,
    EnumerationMethod method = EnumerationMethod::kRecursiveSplit);

/// The pure union-closed families over {1..ground_size} with ∪F = {1..n},
/// in canonical order. Same cap as the recursive method.
std::vector<SetFamily> enumerate_pure(int ground_size);

}  // namespace ucfam
