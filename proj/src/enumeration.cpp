#include "ucfam/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>

#include "ucfam/purification.hpp"

namespace ucfam {

namespace {

// A family over {1..g} as a bitmask over the 2^g candidate members: bit p is
// the member whose element bit-vector equals p, so the powerset position is
// the member itself.

bool mask_union_closed(std::uint64_t family) {
  for (std::uint64_t rest_a = family; rest_a; rest_a &= rest_a - 1) {
    int a = std::countr_zero(rest_a);
    for (std::uint64_t rest_b = rest_a; rest_b; rest_b &= rest_b - 1)
      if (!(family >> (a | std::countr_zero(rest_b)) & 1)) return false;
  }
  return true;
}

std::vector<std::uint64_t> direct_filter_masks(int ground_size) {
  std::vector<std::uint64_t> out;
  std::uint64_t limit = 1ull << (1 << ground_size);
  for (std::uint64_t f = 0; f < limit; ++f)
    if (mask_union_closed(f)) out.push_back(f);
  return out;
}

// Builds families over {1..g} from pairs over {1..g-1} by splitting members
// on element g: f = f0 | f1 << 2^(g-1), with f0 the members avoiding g and f1
// the members containing it (stripped of g). Such f is union-closed exactly
// when f0 and f1 are and f1 absorbs every member of f0 under union — the
// mixed pairs land in the g-side. No member-pair testing is involved, so the
// method is independent of the direct filter.
const std::vector<std::uint64_t>& recursive_split_masks(int ground_size) {
  static std::mutex mutex;
  static std::vector<std::vector<std::uint64_t>> cache = {{0, 1}};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(cache.size()) <= ground_size) {
    const std::vector<std::uint64_t>& prev = cache.back();
    int half = 1 << (cache.size() - 1);
    std::vector<std::uint64_t> level;
    for (std::uint64_t f1 : prev) {
      std::uint64_t absorbed = 0;  // members a with {a ∪ b : b ∈ f1} ⊆ f1
      for (int a = 0; a < half; ++a) {
        bool ok = true;
        for (std::uint64_t rest = f1; rest && ok; rest &= rest - 1)
          ok = f1 >> (a | std::countr_zero(rest)) & 1;
        if (ok) absorbed |= 1ull << a;
      }
      for (std::uint64_t f0 : prev)
        if (!(f0 & ~absorbed)) level.push_back(f0 | f1 << half);
    }
    cache.push_back(std::move(level));
  }
  return cache[ground_size];
}

// Rank of each candidate member in canonical order (cardinality, then value).
std::vector<int> canonical_ranks(int ground_size) {
  int count = 1 << ground_size;
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [](int a, int b) {
    int ca = std::popcount(static_cast<unsigned>(a)), cb = std::popcount(static_cast<unsigned>(b));
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<int> rank(count);
  for (int r = 0; r < count; ++r) rank[order[r]] = r;
  return rank;
}

std::uint64_t remap_bits(std::uint64_t family, const std::vector<int>& rank) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = family; rest; rest &= rest - 1)
    out |= 1ull << rank[std::countr_zero(rest)];
  return out;
}

// Canonical family order on rank-remapped masks: member count first, then
// the member sequence — for equal counts the lower first-difference wins.
bool remapped_less(std::uint64_t a, std::uint64_t b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  std::uint64_t diff = a ^ b;
  return (a & (diff & (0 - diff))) != 0;
}

SetFamily mask_family(std::uint64_t family, int ground_size) {
  std::vector<MemberSet> members;
  members.reserve(static_cast<std::size_t>(std::popcount(family)));
  for (std::uint64_t rest = family; rest; rest &= rest - 1)
    members.push_back(MemberSet::from_bits(static_cast<std::uint64_t>(std::countr_zero(rest))));
  return SetFamily(ground_size, std::move(members));
}

}  // namespace

void enumerate_union_closed(int ground_size, bool require_empty, EnumerationMethod method,
                            const std::function<void(const SetFamily&)>& visit) {
  bool direct = method == EnumerationMethod::kDirectFilter;
  int cap = direct ? kDirectFilterCap : kRecursiveSplitCap;
  if (ground_size < 0 || ground_size > cap)
    fail(ErrorKind::GroundTooLarge, "ground size " + std::to_string(ground_size) +
                                        " is outside 0.." + std::to_string(cap) +
                                        (direct ? " (direct filter)" : " (recursive split)"));

  std::vector<std::uint64_t> masks =
      direct ? direct_filter_masks(ground_size) : recursive_split_masks(ground_size);
  if (require_empty)
    std::erase_if(masks, [](std::uint64_t f) { return !(f & 1); });

  std::vector<int> rank = canonical_ranks(ground_size);
  std::sort(masks.begin(), masks.end(), [&rank](std::uint64_t a, std::uint64_t b) {
    return remapped_less(remap_bits(a, rank), remap_bits(b, rank));
  });
  for (std::uint64_t f : masks) visit(mask_family(f, ground_size));
}

std::vector<SetFamily> enumerate_union_closed(int ground_size, bool require_empty,
                                              EnumerationMethod method) {
  std::vector<SetFamily> out;
  enumerate_union_closed(ground_size, require_empty, method,
                         [&out](const SetFamily& f) { out.push_back(f); });
  return out;
}

std::vector<SetFamily> enumerate_pure(int ground_size) {
  std::vector<SetFamily> out;
  MemberSet full = MemberSet::full(ground_size);
  enumerate_union_closed(ground_size, false, EnumerationMethod::kRecursiveSplit,
                         [&](const SetFamily& f) {
                           if (family_union(f) == full && is_pure(f)) out.push_back(f);
                         });
  return out;
}

CanonicalForm canonical_form(const SetFamily& family) {
  std::vector<int> ground_union = family_union(family).elements();
  if (static_cast<int>(ground_union.size()) > kCanonicalFormUnionCap)
    fail(ErrorKind::UnionTooLarge, "union has " + std::to_string(ground_union.size()) +
                                       " elements; the relabeling cap is " +
                                       std::to_string(kCanonicalFormUnionCap));

  std::vector<int> slot(ground_union.size());
  std::iota(slot.begin(), slot.end(), 0);
  std::vector<std::uint64_t> best;
  bool have_best = false;
  do {
    std::vector<std::uint64_t> encoded;
    encoded.reserve(family.size());
    for (MemberSet m : family.members()) {
      std::uint64_t bits = 0;
      for (std::size_t k = 0; k < ground_union.size(); ++k)
        if (m.contains(ground_union[k])) bits |= 1ull << slot[k];
      encoded.push_back(bits);
    }
    std::sort(encoded.begin(), encoded.end(), [](std::uint64_t a, std::uint64_t b) {
      int ca = std::popcount(a), cb = std::popcount(b);
      return ca != cb ? ca < cb : a < b;
    });
    if (!have_best || encoded < best) {
      best = std::move(encoded);
      have_best = true;
    }
  } while (std::next_permutation(slot.begin(), slot.end()));
  return CanonicalForm{std::move(best)};
}

bool hyperisomorphic(const SetFamily& a, const SetFamily& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace ucfam
