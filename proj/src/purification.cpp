#include "ucfam/purification.hpp"

#include <algorithm>

namespace ucfam {

namespace {

std::vector<std::uint64_t> stripped_bits(const SetFamily& family, int element) {
  std::vector<std::uint64_t> bits;
  bits.reserve(family.size());
  for (MemberSet m : family.members()) bits.push_back(m.without(element).bits());
  std::sort(bits.begin(), bits.end());
  return bits;
}

void require_in_union(const SetFamily& family, int element) {
  if (!family_union(family).contains(element))
    fail(ErrorKind::ElementNotInUnion,
         "element " + std::to_string(element) + " is not in the union of the family");
}

}  // namespace

bool is_redundant(const SetFamily& family, int element) {
  require_in_union(family, element);
  auto bits = stripped_bits(family, element);
  return std::adjacent_find(bits.begin(), bits.end()) == bits.end();
}

std::vector<int> redundant_elements(const SetFamily& family) {
  std::vector<int> out;
  for (int z : family_union(family).elements())
    if (is_redundant(family, z)) out.push_back(z);
  return out;
}

SetFamily reduce(const SetFamily& family, int element) {
  require_in_union(family, element);
  auto bits = stripped_bits(family, element);
  if (std::adjacent_find(bits.begin(), bits.end()) != bits.end())
    fail(ErrorKind::NotRedundant, "stripping element " + std::to_string(element) +
                                      " would merge members");
  std::vector<MemberSet> members;
  members.reserve(bits.size());
  for (std::uint64_t b : bits) members.push_back(MemberSet::from_bits(b));
  return SetFamily(family.ground_size(), std::move(members));
}

bool is_pure(const SetFamily& family) { return redundant_elements(family).empty(); }

PurificationResult purify(
    const SetFamily& family,
    const std::function<int(const SetFamily&, const std::vector<int>&)>& choose) {
  PurificationResult result{family, {}};
  for (;;) {
    std::vector<int> candidates = redundant_elements(result.family);
    if (candidates.empty()) break;
    int z = choose(result.family, candidates);
    SetFamily reduced = reduce(result.family, z);
    result.steps.push_back({z, result.family, reduced});
    result.family = std::move(reduced);
  }
  return result;
}

PurificationResult purify(const SetFamily& family, RemovalOrder order) {
  return purify(family, [order](const SetFamily&, const std::vector<int>& candidates) {
    return order == RemovalOrder::kSmallestFirst ? candidates.front() : candidates.back();
  });
}

FamilyMap strip_map(const SetFamily& family, int element) {
  SetFamily reduced = reduce(family, element);
  std::vector<std::size_t> assignment;
  assignment.reserve(family.size());
  for (MemberSet m : family.members()) assignment.push_back(*reduced.index_of(m.without(element)));
  return FamilyMap(family, std::move(reduced), std::move(assignment));
}

FamilyMap purification_isomorphism(const SetFamily& family,
                                   const std::vector<PurificationStep>& steps) {
  FamilyMap map = FamilyMap::identity(family);
  for (const PurificationStep& step : steps) {
    if (step.before != map.target())
      fail(ErrorKind::InvalidMap, "trace step does not continue from the previous family");
    map = compose(map, strip_map(step.before, step.removed_element));
  }
  return map;
}

}  // namespace ucfam
