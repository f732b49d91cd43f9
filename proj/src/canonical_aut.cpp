#include "qdsym/canonical_aut.hpp"

#include <numeric>
#include <stdexcept>

namespace qdsym {

CanonicalAut make_canonical(Int r, Int s, const GroupParams& params) {
  Int rr = mod_reduce(r, params.m);
  if (std::gcd(rr, params.m) != 1) {
    throw std::invalid_argument("make_canonical: r = " + std::to_string(r) +
                                " is not a unit mod " +
                                std::to_string(params.m));
  }
  return CanonicalAut{rr, mod_reduce(s, params.n), params};
}

GroupElement apply(const CanonicalAut& theta, const GroupElement& g,
                   ActionKind kind) {
  const GroupParams& p = theta.params;
  Int exp;
  if (kind == ActionKind::Canonical) {
    exp = theta.r * g.exp + 2 * theta.s * g.refl;
  } else {
    Int t = g.refl;
    exp = theta.r * g.exp + ((t - 1) * p.n - (t - 2)) * theta.s;
  }
  return GroupElement{mod_reduce(exp, p.m), g.refl};
}

AutomorphismCheck is_automorphism(Int r, Int s, ActionKind kind,
                                  const GroupParams& params) {
  CanonicalAut theta{mod_reduce(r, params.m), mod_reduce(s, params.n), params};
  ElementSet g = all_elements(params);

  for (const auto& x : g.members) {
    for (const auto& y : g.members) {
      GroupElement lhs = apply(theta, multiply(x, y, params), kind);
      GroupElement rhs =
          multiply(apply(theta, x, kind), apply(theta, y, kind), params);
      if (lhs != rhs) {
        return {false, true, x, y,
                "not a homomorphism at (" + to_text(x) + ", " + to_text(y) +
                    ")"};
      }
    }
  }
  std::vector<char> hit(static_cast<size_t>(2 * params.m), 0);
  for (const auto& x : g.members) {
    GroupElement img = apply(theta, x, kind);
    size_t idx = static_cast<size_t>(img.refl * params.m + img.exp);
    if (hit[idx]) {
      return {false, true, x, x, "not injective at " + to_text(x)};
    }
    hit[idx] = 1;
  }
  return {true, false, {}, {}, ""};
}

bool is_rotation_homomorphism(Int r, Int s, ActionKind kind,
                              const GroupParams& params) {
  CanonicalAut theta{mod_reduce(r, params.m), mod_reduce(s, params.n), params};
  for (Int i = 0; i < params.m; ++i) {
    for (Int j = 0; j < params.m; ++j) {
      GroupElement x{i, 0}, y{j, 0};
      GroupElement lhs = apply(theta, multiply(x, y, params), kind);
      GroupElement rhs =
          multiply(apply(theta, x, kind), apply(theta, y, kind), params);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

CanonicalAut compose_canonical(const CanonicalAut& outer,
                               const CanonicalAut& inner) {
  if (!(outer.params == inner.params)) {
    throw std::invalid_argument(
        "compose_canonical: automorphisms live in different groups");
  }
  const GroupParams& p = outer.params;
  return CanonicalAut{mod_reduce(outer.r * inner.r, p.m),
                      mod_reduce(outer.r * inner.s + outer.s, p.n), p};
}

Int canonical_order(const CanonicalAut& theta) {
  CanonicalAut acc = theta;
  Int v = 1;
  Int bound = theta.params.m * theta.params.m + 1;
  while (!(mod_reduce(acc.r, theta.params.m) == 1 && acc.s == 0)) {
    acc = compose_canonical(theta, acc);
    ++v;
    if (v > bound) {
      throw std::logic_error("canonical_order: no finite order found");
    }
  }
  return v;
}

std::vector<CanonicalAut> enumerate_canonical(const GroupParams& params,
                                              Int max_k) {
  if (params.k > max_k) {
    throw std::invalid_argument(
        "enumerate_canonical: k = " + std::to_string(params.k) +
        " exceeds the size guard " + std::to_string(max_k) +
        "; raise the bound explicitly to proceed");
  }
  std::vector<CanonicalAut> out;
  for (Int r : units(params.m)) {
    for (Int s = 0; s < params.n; ++s) {
      out.push_back(CanonicalAut{r, s, params});
    }
  }
  return out;
}

std::string to_text(const CanonicalAut& theta) {
  return "(" + std::to_string(theta.r) + ", " + std::to_string(theta.s) +
         ") on QD_" + std::to_string(2 * theta.params.m);
}

}  // namespace qdsym
