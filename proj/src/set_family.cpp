#include "ucfam/set_family.hpp"

#include <algorithm>

namespace ucfam {

SetFamily::SetFamily(int ground_size, std::vector<MemberSet> members)
    : ground_size_(ground_size), members_(std::move(members)) {
  if (ground_size < 0 || ground_size > kMaxGroundSize)
    fail(ErrorKind::GroundTooLarge, "ground size " + std::to_string(ground_size) +
                                        " outside 0.." + std::to_string(kMaxGroundSize));
  const MemberSet ground = MemberSet::full(ground_size);
  for (MemberSet m : members_) {
    if (!m.subset_of(ground))
      fail(ErrorKind::ElementOutOfRange, "member " + m.to_string() +
                                             " exceeds ground size " +
                                             std::to_string(ground_size));
  }
  std::sort(members_.begin(), members_.end(), canonical_less);
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i] == members_[i - 1])
      fail(ErrorKind::DuplicateMember, "member " + members_[i].to_string() + " listed twice");
  }
}

std::optional<std::size_t> SetFamily::index_of(MemberSet m) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), m, canonical_less);
  if (it == members_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

SetFamily make_family(int ground_size, const std::vector<std::vector<int>>& member_lists) {
  std::vector<MemberSet> members;
  members.reserve(member_lists.size());
  for (const auto& list : member_lists) {
    MemberSet m = MemberSet::from_elements(list);
    if (ground_size >= 0 && ground_size <= SetFamily::kMaxGroundSize &&
        !m.subset_of(MemberSet::full(ground_size)))
      fail(ErrorKind::ElementOutOfRange, "member " + m.to_string() +
                                             " exceeds ground size " +
                                             std::to_string(ground_size));
    members.push_back(m);
  }
  return SetFamily(ground_size, std::move(members));
}

bool is_union_closed(const SetFamily& family) {
  const auto& ms = family.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!family.contains(ms[i] | ms[j])) return false;
  return true;
}

SetFamily union_closure(const SetFamily& family) {
  std::vector<MemberSet> closed = family.members();
  auto known = [&closed](MemberSet m) {
    return std::find(closed.begin(), closed.end(), m) != closed.end();
  };
  // Pairwise unions to a fixed point; new members join the scan frontier.
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      MemberSet u = closed[i] | closed[j];
      if (!known(u)) closed.push_back(u);
    }
  }
  return SetFamily(family.ground_size(), std::move(closed));
}

MemberSet family_union(const SetFamily& family) {
  MemberSet u;
  for (MemberSet m : family.members()) u = u | m;
  return u;
}

SetFamily member_star(const SetFamily& family, int element) {
  if (element < 1 || element > family.ground_size())
    fail(ErrorKind::ElementOutOfRange, "element " + std::to_string(element) +
                                           " outside 1.." +
                                           std::to_string(family.ground_size()));
  std::vector<MemberSet> hits;
  for (MemberSet m : family.members())
    if (m.contains(element)) hits.push_back(m);
  return SetFamily(family.ground_size(), std::move(hits));
}

std::vector<MemberSet> minimal_members(const SetFamily& family) {
  std::vector<MemberSet> out;
  for (MemberSet candidate : family.members()) {
    bool minimal = true;
    for (MemberSet other : family.members()) {
      if (other.proper_subset_of(candidate)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(candidate);
  }
  return out;
}

SetFamily remove_member(const SetFamily& family, MemberSet member) {
  auto index = family.index_of(member);
  if (!index)
    fail(ErrorKind::NotAMember, member.to_string() + " is not a member of the family");
  std::vector<MemberSet> rest = family.members();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*index));
  return SetFamily(family.ground_size(), std::move(rest));
}

bool canonical_family_less(const SetFamily& a, const SetFamily& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.member(i) != b.member(i)) return canonical_less(a.member(i), b.member(i));
  }
  return a.ground_size() < b.ground_size();
}

}  // namespace ucfam
