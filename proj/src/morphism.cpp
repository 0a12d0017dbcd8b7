#include "ucfam/morphism.hpp"

#include <algorithm>
#include <numeric>

#include "ucfam/purification.hpp"

namespace ucfam {

FamilyMap::FamilyMap(SetFamily source, SetFamily target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size())
    fail(ErrorKind::InvalidMap, "assignment covers " + std::to_string(assignment_.size()) +
                                    " members, source has " + std::to_string(source_.size()));
  for (std::size_t value : assignment_) {
    if (value >= target_.size())
      fail(ErrorKind::InvalidMap,
           "assigned index " + std::to_string(value) + " has no member in the target");
  }
}

FamilyMap FamilyMap::identity(const SetFamily& family) {
  std::vector<std::size_t> assignment(family.size());
  std::iota(assignment.begin(), assignment.end(), std::size_t{0});
  return FamilyMap(family, family, std::move(assignment));
}

MemberSet FamilyMap::apply(MemberSet source_member) const {
  auto index = source_.index_of(source_member);
  if (!index)
    fail(ErrorKind::NotAMember, source_member.to_string() + " is not a source member");
  return apply_index(*index);
}

namespace {

void require_source_union_closed(const FamilyMap& map) {
  if (!is_union_closed(map.source()))
    fail(ErrorKind::SourceNotUnionClosed, "the source family is not union-closed");
}

bool assignment_is_bijection(const FamilyMap& map) {
  if (map.source().size() != map.target().size()) return false;
  std::vector<bool> hit(map.target().size(), false);
  for (std::size_t value : map.assignment()) {
    if (hit[value]) return false;
    hit[value] = true;
  }
  return true;
}

}  // namespace

bool is_homomorphism(const FamilyMap& map) {
  require_source_union_closed(map);
  const SetFamily& source = map.source();
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      std::size_t u = *source.index_of(source.member(i) | source.member(j));
      if (map.apply_index(u) != (map.apply_index(i) | map.apply_index(j))) return false;
    }
  }
  return true;
}

bool is_isomorphism(const FamilyMap& map) {
  return is_homomorphism(map) && assignment_is_bijection(map);
}

SetFamily image_family(const FamilyMap& map) {
  if (!is_homomorphism(map))
    fail(ErrorKind::NotAHomomorphism, "the map does not preserve unions");
  std::vector<MemberSet> image;
  for (std::size_t i = 0; i < map.source().size(); ++i) {
    MemberSet value = map.apply_index(i);
    if (std::find(image.begin(), image.end(), value) == image.end()) image.push_back(value);
  }
  SetFamily result(map.target().ground_size(), std::move(image));
  if (!is_union_closed(result))
    fail(ErrorKind::InternalContradiction,
         "image of a homomorphism is not union-closed; this cannot happen");
  return result;
}

namespace {

struct IsoSearch {
  const SetFamily& source;
  const SetFamily& target;
  std::size_t limit;
  bool both_pure;
  std::vector<bool> source_minimal;
  std::vector<bool> target_minimal;
  std::vector<std::size_t> order;           // source indices, decreasing cardinality
  std::vector<std::size_t> assignment;      // source index -> target index
  std::vector<bool> assigned;               // source index assigned yet
  std::vector<bool> used;                   // target index taken
  std::vector<std::vector<std::size_t>> found;

  bool consistent(std::size_t source_index, std::size_t target_index) const {
    MemberSet a = source.member(source_index);
    MemberSet ta = target.member(target_index);
    for (std::size_t depth = 0; depth < source.size(); ++depth) {
      std::size_t b = order[depth];
      if (!assigned[b] && b != source_index) continue;
      MemberSet tb = (b == source_index) ? ta : target.member(assignment[b]);
      std::size_t u = *source.index_of(source.member(b) | a);
      MemberSet tu = ta | tb;
      if (assigned[u] || u == source_index) {
        MemberSet expected = (u == source_index) ? ta : target.member(assignment[u]);
        if (expected != tu) return false;
      } else if (!target.contains(tu)) {
        return false;
      }
    }
    return true;
  }

  void search(std::size_t depth) {
    if (found.size() >= limit) return;
    if (depth == order.size()) {
      found.push_back(assignment);
      return;
    }
    std::size_t s = order[depth];
    for (std::size_t t = 0; t < target.size(); ++t) {
      if (used[t]) continue;
      if (both_pure &&
          target.member(t).cardinality() != source.member(s).cardinality())
        continue;
      if (source_minimal[s] != target_minimal[t]) continue;
      if (!consistent(s, t)) continue;
      assignment[s] = t;
      assigned[s] = true;
      used[t] = true;
      search(depth + 1);
      assigned[s] = false;
      used[t] = false;
      if (found.size() >= limit) return;
    }
  }
};

std::vector<bool> minimal_flags(const SetFamily& family) {
  std::vector<bool> flags(family.size(), false);
  for (MemberSet m : minimal_members(family)) flags[*family.index_of(m)] = true;
  return flags;
}

}  // namespace

std::vector<FamilyMap> find_isomorphisms(const SetFamily& source, const SetFamily& target,
                                         std::size_t limit) {
  if (!is_union_closed(source))
    fail(ErrorKind::NotUnionClosed, "the source family is not union-closed");
  if (!is_union_closed(target))
    fail(ErrorKind::NotUnionClosed, "the target family is not union-closed");
  if (source.size() != target.size() || limit == 0) return {};

  IsoSearch search{source,
                   target,
                   limit,
                   is_pure(source) && is_pure(target),
                   minimal_flags(source),
                   minimal_flags(target),
                   {},
                   std::vector<std::size_t>(source.size(), 0),
                   std::vector<bool>(source.size(), false),
                   std::vector<bool>(target.size(), false),
                   {}};
  search.order.resize(source.size());
  std::iota(search.order.begin(), search.order.end(), std::size_t{0});
  std::sort(search.order.begin(), search.order.end(), [&source](std::size_t a, std::size_t b) {
    int ca = source.member(a).cardinality(), cb = source.member(b).cardinality();
    if (ca != cb) return ca > cb;
    return source.member(a).bits() < source.member(b).bits();
  });
  search.search(0);

  std::sort(search.found.begin(), search.found.end());
  std::vector<FamilyMap> result;
  result.reserve(search.found.size());
  for (auto& assignment : search.found) {
    FamilyMap map(source, target, std::move(assignment));
    if (!is_isomorphism(map))
      fail(ErrorKind::InternalContradiction, "search produced a non-isomorphism");
    result.push_back(std::move(map));
  }
  return result;
}

FamilyMap compose(const FamilyMap& first, const FamilyMap& then) {
  if (first.target() != then.source())
    fail(ErrorKind::InvalidMap, "inner target and outer source differ");
  std::vector<std::size_t> assignment(first.source().size());
  for (std::size_t i = 0; i < assignment.size(); ++i)
    assignment[i] = then.assignment()[first.assignment()[i]];
  return FamilyMap(first.source(), then.target(), std::move(assignment));
}

FamilyMap inverse_map(const FamilyMap& map) {
  if (map.source().size() != map.target().size())
    fail(ErrorKind::NotAnIsomorphism, "member counts differ; the map is not bijective");
  std::vector<std::size_t> inverse(map.target().size(), map.target().size());
  for (std::size_t i = 0; i < map.assignment().size(); ++i) {
    std::size_t value = map.assignment()[i];
    if (inverse[value] != map.target().size())
      fail(ErrorKind::NotAnIsomorphism, "the assignment is not injective");
    inverse[value] = i;
  }
  return FamilyMap(map.target(), map.source(), std::move(inverse));
}

}  // namespace ucfam
