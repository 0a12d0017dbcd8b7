#include "ucfam/hyperiso.hpp"

#include <algorithm>

#include "ucfam/purification.hpp"

namespace ucfam {

GroundMap::GroundMap(MemberSet source_union, MemberSet target_union,
                     std::vector<std::pair<int, int>> pairs)
    : source_union_(source_union), target_union_(target_union), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  MemberSet seen_source;
  MemberSet seen_target;
  for (auto [from, to] : pairs_) {
    if (!source_union_.contains(from))
      fail(ErrorKind::InvalidMap, "pair maps " + std::to_string(from) + ", not a source element");
    if (!target_union_.contains(to))
      fail(ErrorKind::InvalidMap,
           "pair maps to " + std::to_string(to) + ", not a target element");
    if (seen_source.contains(from))
      fail(ErrorKind::InvalidMap, "element " + std::to_string(from) + " is mapped twice");
    if (seen_target.contains(to))
      fail(ErrorKind::InvalidMap, "element " + std::to_string(to) + " is hit twice");
    seen_source = seen_source.with(from);
    seen_target = seen_target.with(to);
  }
  if (seen_source != source_union_)
    fail(ErrorKind::InvalidMap, "the map does not cover the source union");
  if (seen_target != target_union_)
    fail(ErrorKind::InvalidMap, "the image does not cover the target union");
}

GroundMap GroundMap::identity(MemberSet ground_union) {
  std::vector<std::pair<int, int>> pairs;
  for (int e : ground_union.elements()) pairs.emplace_back(e, e);
  return GroundMap(ground_union, ground_union, std::move(pairs));
}

int GroundMap::apply(int element) const {
  for (auto [from, to] : pairs_)
    if (from == element) return to;
  fail(ErrorKind::ElementNotInUnion,
       "element " + std::to_string(element) + " is not in the source union");
}

MemberSet GroundMap::apply(MemberSet set) const {
  MemberSet image;
  for (int e : set.elements()) image = image.with(apply(e));
  return image;
}

GroundMap GroundMap::inverse() const {
  std::vector<std::pair<int, int>> flipped;
  flipped.reserve(pairs_.size());
  for (auto [from, to] : pairs_) flipped.emplace_back(to, from);
  return GroundMap(target_union_, source_union_, std::move(flipped));
}

MemberSet star_intersection(const SetFamily& family, int element) {
  SetFamily star = member_star(family, element);
  if (star.size() == 0) return family_union(family);
  MemberSet common = MemberSet::full(SetFamily::kMaxGroundSize);
  for (MemberSet m : star.members()) common = common & m;
  return common;
}

FamilyMap induced_map(const GroundMap& ground_map, const SetFamily& source,
                      const SetFamily& target) {
  if (ground_map.source_union() != family_union(source))
    fail(ErrorKind::InvalidMap, "the map's source union is not the source family's union");
  if (ground_map.target_union() != family_union(target))
    fail(ErrorKind::InvalidMap, "the map's target union is not the target family's union");
  std::vector<std::size_t> assignment;
  assignment.reserve(source.size());
  for (MemberSet m : source.members()) {
    MemberSet image = ground_map.apply(m);
    auto index = target.index_of(image);
    if (!index)
      fail(ErrorKind::ImageNotInTarget,
           "image " + image.to_string() + " of member " + m.to_string() +
               " is not a target member");
    assignment.push_back(*index);
  }
  return FamilyMap(source, target, std::move(assignment));
}

bool is_hyperisomorphism(const GroundMap& ground_map, const SetFamily& source,
                         const SetFamily& target) {
  try {
    return is_isomorphism(induced_map(ground_map, source, target));
  } catch (const Error&) {
    return false;
  }
}

namespace {

void require_pure_isomorphism(const FamilyMap& map) {
  if (!is_isomorphism(map)) fail(ErrorKind::NotAnIsomorphism, "the member map is not one");
  if (!is_pure(map.source())) fail(ErrorKind::NotPure, "the source family is not pure");
  if (!is_pure(map.target())) fail(ErrorKind::NotPure, "the target family is not pure");
}

// Target-index set of {h(A) : A ∈ member_star(source, i)}, ascending.
std::vector<std::size_t> image_star_indices(const FamilyMap& map, int element) {
  std::vector<std::size_t> indices;
  for (std::size_t s = 0; s < map.source().size(); ++s)
    if (map.source().member(s).contains(element)) indices.push_back(map.assignment()[s]);
  std::sort(indices.begin(), indices.end());
  return indices;
}

std::vector<std::size_t> star_indices(const SetFamily& family, int element) {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (family.member(i).contains(element)) indices.push_back(i);
  return indices;
}

}  // namespace

GroundMap extract_hyperisomorphism(const FamilyMap& map) {
  require_pure_isomorphism(map);
  const SetFamily& source = map.source();
  const SetFamily& target = map.target();
  MemberSet source_union = family_union(source);
  MemberSet target_union = family_union(target);
  if (source_union.cardinality() != target_union.cardinality())
    fail(ErrorKind::InternalContradiction, "ground unions of isomorphic pure families differ");

  std::vector<std::pair<int, int>> pairs;
  for (int i : source_union.elements()) {
    std::vector<std::size_t> image_star = image_star_indices(map, i);
    MemberSet common = MemberSet::full(SetFamily::kMaxGroundSize);
    for (std::size_t t : image_star) common = common & target.member(t);

    int match = 0;
    int found = 0;
    for (int j : common.elements()) {
      if (star_indices(target, j) == image_star) {
        match = j;
        ++found;
      }
    }
    if (found != 1)
      fail(ErrorKind::InternalContradiction,
           "expected one matching element for " + std::to_string(i) + ", found " +
               std::to_string(found));
    pairs.emplace_back(i, match);
  }

  GroundMap ground_map(source_union, target_union, std::move(pairs));
  if (induced_map(ground_map, source, target) != map)
    fail(ErrorKind::InternalContradiction, "the recovered map does not induce the input map");
  return ground_map;
}

std::vector<GroundMap> brute_force_hyperisomorphism(const FamilyMap& map, int union_cap) {
  MemberSet source_union = family_union(map.source());
  MemberSet target_union = family_union(map.target());
  if (source_union.cardinality() != target_union.cardinality()) return {};
  if (source_union.cardinality() > union_cap)
    fail(ErrorKind::UnionTooLarge, "union has " + std::to_string(source_union.cardinality()) +
                                       " elements; the search cap is " +
                                       std::to_string(union_cap));

  std::vector<int> from = source_union.elements();
  std::vector<int> to = target_union.elements();
  std::vector<GroundMap> found;
  do {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(from.size());
    for (std::size_t k = 0; k < from.size(); ++k) pairs.emplace_back(from[k], to[k]);
    GroundMap candidate(source_union, target_union, std::move(pairs));
    try {
      if (induced_map(candidate, map.source(), map.target()) == map)
        found.push_back(std::move(candidate));
    } catch (const Error&) {
      // some image is not a target member; not a witness
    }
  } while (std::next_permutation(to.begin(), to.end()));
  return found;
}

CardinalityReport verify_cardinality_theorem(const FamilyMap& map) {
  require_pure_isomorphism(map);
  const SetFamily& source = map.source();
  MemberSet source_union = family_union(source);
  MemberSet target_union = family_union(map.target());

  CardinalityReport report;
  report.union_size = {source_union.cardinality(), target_union.cardinality()};
  for (std::size_t i = 0; i < source.size(); ++i) {
    MemberSet a = source.member(i);
    MemberSet ha = map.apply_index(i);
    report.member_sizes.push_back({a.cardinality(), ha.cardinality()});
    report.complement_sizes.push_back(
        {(source_union - a).cardinality(), (target_union - ha).cardinality()});
    for (std::size_t j = 0; j < source.size(); ++j) {
      MemberSet b = source.member(j);
      MemberSet hb = map.apply_index(j);
      report.pair_union_sizes.push_back({(a | b).cardinality(), (ha | hb).cardinality()});
      report.pair_intersection_sizes.push_back({(a & b).cardinality(), (ha & hb).cardinality()});
      report.pair_difference_sizes.push_back({(a - b).cardinality(), (ha - hb).cardinality()});
    }
  }

  auto all_equal = [](const std::vector<SizePair>& pairs) {
    return std::all_of(pairs.begin(), pairs.end(),
                       [](const SizePair& p) { return p.source == p.image; });
  };
  report.pass = report.union_size.source == report.union_size.image &&
                all_equal(report.member_sizes) && all_equal(report.pair_union_sizes) &&
                all_equal(report.pair_intersection_sizes) &&
                all_equal(report.pair_difference_sizes) && all_equal(report.complement_sizes);
  return report;
}

}  // namespace ucfam
