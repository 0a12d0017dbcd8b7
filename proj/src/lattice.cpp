#include "ucfam/lattice.hpp"

#include <algorithm>

namespace ucfam {

Lattice to_lattice(const SetFamily& family) {
  if (!is_union_closed(family)) fail(ErrorKind::NotUnionClosed, "the family is not union-closed");
  std::vector<MemberSet> minima = minimal_members(family);
  if (minima.size() != 1)
    fail(ErrorKind::NoUniqueBottom,
         "the family has " + std::to_string(minima.size()) + " minimal members, not one");

  Lattice lattice;
  lattice.family_ = family;
  lattice.bottom_ = *family.index_of(minima.front());
  lattice.top_ = *family.index_of(family_union(family));

  std::size_t count = family.size();
  lattice.meet_table_.assign(count, std::vector<std::size_t>(count, 0));
  lattice.join_table_.assign(count, std::vector<std::size_t>(count, 0));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      lattice.join_table_[a][b] = *family.index_of(family.member(a) | family.member(b));
      // The unique minimal member lies below every member, so the set of
      // lower bounds of a ∩ b is nonempty; its union is the greatest one.
      MemberSet cap = family.member(a) & family.member(b);
      MemberSet lower;
      for (MemberSet m : family.members())
        if (m.subset_of(cap)) lower = lower | m;
      lattice.meet_table_[a][b] = *family.index_of(lower);
    }
  }

  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (!family.member(a).proper_subset_of(family.member(b))) continue;
      bool covered = true;
      for (std::size_t c = 0; c < count && covered; ++c)
        if (family.member(a).proper_subset_of(family.member(c)) &&
            family.member(c).proper_subset_of(family.member(b)))
          covered = false;
      if (covered) lattice.cover_edges_.emplace_back(a, b);
    }
  }
  std::sort(lattice.cover_edges_.begin(), lattice.cover_edges_.end());
  return lattice;
}

namespace {

std::size_t index_or_fail(const Lattice& lattice, MemberSet m) {
  auto index = lattice.family().index_of(m);
  if (!index) fail(ErrorKind::NotAMember, m.to_string() + " is not a lattice element");
  return *index;
}

}  // namespace

MemberSet meet(const Lattice& lattice, MemberSet a, MemberSet b) {
  return lattice.element(lattice.meet_index(index_or_fail(lattice, a), index_or_fail(lattice, b)));
}

MemberSet join(const Lattice& lattice, MemberSet a, MemberSet b) {
  return lattice.element(lattice.join_index(index_or_fail(lattice, a), index_or_fail(lattice, b)));
}

bool verify_lattice_laws(const Lattice& lattice) {
  std::size_t count = lattice.size();
  auto meet = [&](std::size_t a, std::size_t b) { return lattice.meet_index(a, b); };
  auto join = [&](std::size_t a, std::size_t b) { return lattice.join_index(a, b); };
  for (std::size_t a = 0; a < count; ++a) {
    if (meet(a, a) != a || join(a, a) != a) return false;
    for (std::size_t b = 0; b < count; ++b) {
      if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a)) return false;
      if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a) return false;
      for (std::size_t c = 0; c < count; ++c) {
        if (meet(a, meet(b, c)) != meet(meet(a, b), c)) return false;
        if (join(a, join(b, c)) != join(join(a, b), c)) return false;
      }
    }
  }
  return true;
}

std::vector<int> frankl_abundant_elements(const SetFamily& family) {
  if (!is_union_closed(family)) fail(ErrorKind::NotUnionClosed, "the family is not union-closed");
  MemberSet ground_union = family_union(family);
  if (ground_union.empty())
    fail(ErrorKind::NoNonemptyMember, "every member is empty; abundance is undefined");
  std::vector<int> abundant;
  for (int i : ground_union.elements())
    if (2 * member_star(family, i).size() >= family.size()) abundant.push_back(i);
  return abundant;
}

std::string export_dot(const Lattice& lattice) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    MemberSet m = lattice.element(i);
    out += "  n" + std::to_string(i) + " [label=\"";
    out += m.empty() ? std::string("∅") : m.to_string();
    out += "\"";
    if (i == lattice.bottom()) out += ", color=red";
    out += "];\n";
  }
  for (auto [lower, upper] : lattice.cover_edges())
    out += "  n" + std::to_string(lower) + " -> n" + std::to_string(upper) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ucfam
