#include "qdsym/qd_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdsym {

GroupElement make_element(Int exp, int refl, const GroupParams& params) {
  if (refl != 0 && refl != 1) {
    throw std::invalid_argument("make_element: refl must be 0 or 1");
  }
  return GroupElement{mod_reduce(exp, params.m), refl};
}

GroupElement multiply(const GroupElement& x, const GroupElement& y,
                      const GroupParams& params) {
  // ba^i = a^{i(n-1)}b, so a right factor's exponent is twisted by (n-1)
  // once for each b on its left.
  Int twist = x.refl ? params.n - 1 : 1;
  Int exp = mod_reduce(x.exp + y.exp * twist, params.m);
  return GroupElement{exp, x.refl ^ y.refl};
}

GroupElement inverse(const GroupElement& x, const GroupParams& params) {
  if (x.refl == 0) return GroupElement{mod_reduce(-x.exp, params.m), 0};
  // (a^e b)^2 = a^{en}; for e even this is 1, for e odd it is a^n.
  if (x.exp % 2 == 0) return x;
  return GroupElement{mod_reduce(x.exp + params.n, params.m), 1};
}

Int element_order(const GroupElement& x, const GroupParams& params) {
  GroupElement acc = x;
  Int v = 1;
  while (acc != group_identity()) {
    acc = multiply(acc, x, params);
    ++v;
    if (v > 2 * params.m) {
      throw std::logic_error("element_order: exceeded group order bound");
    }
  }
  return v;
}

GroupElement conjugate(const GroupElement& g, const GroupElement& x,
                       const GroupParams& params) {
  GroupElement gi = inverse(g, params);
  return multiply(multiply(g, x, params), gi, params);
}

std::string to_text(const GroupElement& x) {
  if (x.refl == 0) {
    if (x.exp == 0) return "1";
    return "a^" + std::to_string(x.exp);
  }
  if (x.exp == 0) return "b";
  return "a^" + std::to_string(x.exp) + "*b";
}

ElementSet::ElementSet(GroupParams p, std::vector<GroupElement> elems)
    : params(p), members(std::move(elems)) {
  for (auto& e : members) e.exp = mod_reduce(e.exp, params.m);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool ElementSet::contains(const GroupElement& x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

ElementSet all_elements(const GroupParams& params) {
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<size_t>(2 * params.m));
  for (int t = 0; t <= 1; ++t) {
    for (Int e = 0; e < params.m; ++e) elems.push_back(GroupElement{e, t});
  }
  return ElementSet(params, std::move(elems));
}

ElementSet closure(const ElementSet& seed) {
  if (seed.members.empty()) {
    throw std::invalid_argument("closure: seed must be non-empty");
  }
  const GroupParams& params = seed.params;
  std::vector<char> present(static_cast<size_t>(2 * params.m), 0);
  auto index = [&](const GroupElement& e) {
    return static_cast<size_t>(e.refl * params.m + e.exp);
  };
  std::vector<GroupElement> work = seed.members;
  for (const auto& e : work) present[index(e)] = 1;
  // Fixed-point iteration; bounded by the 2m possible elements.
  for (size_t i = 0; i < work.size(); ++i) {
    GroupElement inv = inverse(work[i], params);
    if (!present[index(inv)]) {
      present[index(inv)] = 1;
      work.push_back(inv);
    }
    for (size_t j = 0; j <= i; ++j) {
      for (const auto& prod : {multiply(work[i], work[j], params),
                               multiply(work[j], work[i], params)}) {
        if (!present[index(prod)]) {
          present[index(prod)] = 1;
          work.push_back(prod);
        }
      }
    }
  }
  return ElementSet(params, std::move(work));
}

bool is_subgroup(const ElementSet& s) {
  if (s.members.empty()) return false;
  for (const auto& x : s.members) {
    if (!s.contains(inverse(x, s.params))) return false;
    for (const auto& y : s.members) {
      if (!s.contains(multiply(x, y, s.params))) return false;
    }
  }
  return true;
}

bool is_cyclic_set(const ElementSet& s) {
  if (s.members.empty()) return false;
  for (const auto& g : s.members) {
    ElementSet gen = closure(ElementSet(s.params, {g}));
    if (gen == s) return true;
  }
  return false;
}

}  // namespace qdsym
