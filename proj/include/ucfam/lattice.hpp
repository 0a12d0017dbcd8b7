#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ucfam/set_family.hpp"

namespace ucfam {

/// The inclusion lattice of a union-closed family with a unique minimal
/// member: join is set union, meet of (a, b) is the union of all members
/// contained in a ∩ b (a member itself, and the greatest lower bound).
/// Immutable; element indices are positions in the family's canonical order.
class Lattice {
 public:
  const SetFamily& family() const { return family_; }
  std::size_t size() const { return family_.size(); }
  MemberSet element(std::size_t index) const { return family_.member(index); }

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  /// Covering pairs (lower, upper) of the inclusion order — its transitive
  /// reduction — sorted by index pair.
  const std::vector<std::pair<std::size_t, std::size_t>>& cover_edges() const {
    return cover_edges_;
  }

  std::size_t meet_index(std::size_t a, std::size_t b) const { return meet_table_[a][b]; }
  std::size_t join_index(std::size_t a, std::size_t b) const { return join_table_[a][b]; }

 private:
  friend Lattice to_lattice(const SetFamily& family);
  Lattice() = default;

  SetFamily family_;
  std::vector<std::vector<std::size_t>> meet_table_;
  std::vector<std::vector<std::size_t>> join_table_;
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Builds the lattice. Throws NotUnionClosed, or NoUniqueBottom when the
/// family does not have exactly one minimal member (the empty family
/// included).
Lattice to_lattice(const SetFamily& family);

/// Meet / join by member value. Throws NotAMember.
MemberSet meet(const Lattice& lattice, MemberSet a, MemberSet b);
MemberSet join(const Lattice& lattice, MemberSet a, MemberSet b);

/// Checks commutativity, associativity, idempotence, and both absorption
/// laws over all element triples.
bool verify_lattice_laws(const Lattice& lattice);

/// Elements in at least half of the members (2·|F^i| ≥ |F|, exact integer
/// comparison), ascending. Throws NotUnionClosed, or NoNonemptyMember when
/// every member is empty.
std::vector<int> frankl_abundant_elements(const SetFamily& family);

/// DOT digraph of the cover edges, bottom-to-top, one statement per line:
/// nodes in canonical member order labeled by contents (∅ for the empty
/// set), minimal members drawn red, edges sorted by index pair. Output is
/// byte-identical across runs for equal input.
std::string export_dot(const Lattice& lattice);

}  // namespace ucfam
