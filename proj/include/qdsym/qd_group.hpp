#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qdsym/modarith.hpp"

namespace qdsym {

/// Normal form a^exp b^refl with exp in Z_m and refl in {0, 1}.
/// The pair is the unique normal form of a group element.
struct GroupElement {
  Int exp = 0;
  int refl = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // Set order is (refl, exp): rotations first, then reflections.
  friend std::strong_ordering operator<=>(const GroupElement& a,
                                          const GroupElement& b) {
    if (a.refl != b.refl) return a.refl <=> b.refl;
    return a.exp <=> b.exp;
  }
};

GroupElement make_element(Int exp, int refl, const GroupParams& params);
inline GroupElement group_identity() { return GroupElement{0, 0}; }

GroupElement multiply(const GroupElement& x, const GroupElement& y,
                      const GroupParams& params);
GroupElement inverse(const GroupElement& x, const GroupParams& params);
Int element_order(const GroupElement& x, const GroupParams& params);

/// g x g^{-1} in normal form. Done directly (not via two multiplies) so the
/// oracle orbit loops stay allocation-light.
GroupElement conjugate(const GroupElement& g, const GroupElement& x,
                       const GroupParams& params);

/// Canonical text form: "1", "a^i", "b", "a^i*b" with 1 <= i < m.
std::string to_text(const GroupElement& x);

/// Immutable sorted set of group elements, ordered by (refl, exp).
struct ElementSet {
  GroupParams params;
  std::vector<GroupElement> members;

  ElementSet(GroupParams p, std::vector<GroupElement> elems);

  bool contains(const GroupElement& x) const;
  Int size() const { return static_cast<Int>(members.size()); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

ElementSet all_elements(const GroupParams& params);

/// Smallest superset of seed closed under multiply and inverse.
ElementSet closure(const ElementSet& seed);

bool is_subgroup(const ElementSet& s);

/// True when some g in s generates exactly s.
bool is_cyclic_set(const ElementSet& s);

}  // namespace qdsym
