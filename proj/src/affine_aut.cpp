#include "qdsym/affine_aut.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qdsym {

namespace {

void require_same_params(const AffineAut& a, const AffineAut& b,
                         const char* op) {
  if (!(a.params == b.params)) {
    throw std::invalid_argument(std::string(op) +
                                ": automorphisms live in different groups");
  }
}

bool sorted_contains(const std::vector<Int>& v, Int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

AffineAut make_affine(Int r, Int s, const GroupParams& params) {
  Int rr = mod_reduce(r, params.m);
  if (std::gcd(rr, params.m) != 1) {
    throw std::invalid_argument("make_affine: r = " + std::to_string(r) +
                                " is not a unit mod " +
                                std::to_string(params.m));
  }
  return AffineAut{rr, mod_reduce(s, params.n), params};
}

AffineAut affine_identity(const GroupParams& params) {
  return AffineAut{1, 0, params};
}

bool map_equal(const AffineAut& a, const AffineAut& b) {
  return a.params == b.params && mod_reduce(a.r, a.params.n) == mod_reduce(b.r, b.params.n) &&
         a.s == b.s;
}

bool is_identity_map(const AffineAut& a) {
  return mod_reduce(a.r, a.params.n) == mod_reduce(1, a.params.n) && a.s == 0;
}

Int apply_map(const AffineAut& a, Int x) {
  return mod_reduce(a.r * x + a.s, a.params.n);
}

AffineAut compose(const AffineAut& outer, const AffineAut& inner) {
  require_same_params(outer, inner, "compose");
  Int r = mod_reduce(outer.r * inner.r, outer.params.m);
  Int s = mod_reduce(outer.r * inner.s + outer.s, outer.params.n);
  return AffineAut{r, s, outer.params};
}

AffineAut inverse(const AffineAut& a) {
  Int finv = mod_inverse(a.r, a.params.n);
  // finv in [0, n) is the smaller of the two odd preimages in U_m.
  Int s = mod_reduce(-finv * a.s, a.params.n);
  return AffineAut{finv, s, a.params};
}

Int affine_order(const AffineAut& a) {
  AffineAut acc = a;
  Int v = 1;
  Int bound = a.params.n * a.params.n + 1;
  while (!is_identity_map(acc)) {
    acc = compose(a, acc);
    ++v;
    if (v > bound) throw std::logic_error("affine_order: no finite order found");
  }
  return v;
}

bool satisfies_order(const AffineAut& a, Int v) {
  if (v < 1) throw std::invalid_argument("satisfies_order: v must be >= 1");
  if (mod_pow(a.r, v, a.params.n) != mod_reduce(1, a.params.n)) return false;
  return mod_reduce(geometric_sum(a.r, v, a.params.n) * a.s, a.params.n) == 0;
}

std::vector<AffineAut> enumerate_aut_v(Int v, const GroupParams& params) {
  std::vector<AffineAut> out;
  for (Int r : roots_of_unity(v, params)) {
    for (Int s : zdiv(geometric_sum(r, v, params.n), params.n)) {
      out.push_back(AffineAut{r, s, params});
    }
  }
  return out;  // roots and shifts are ascending, so order is (r, s)
}

Int count_aut_v(Int v, const GroupParams& params) {
  Int total = 0;
  for (Int r : roots_of_unity(v, params)) {
    total += std::gcd(geometric_sum(r, v, params.n), params.n);
  }
  return total;
}

ConjugacyWitness are_conjugate(const AffineAut& t1, const AffineAut& t2) {
  require_same_params(t1, t2, "are_conjugate");
  const Int n = t1.params.n;
  if (mod_reduce(t1.r, n) != mod_reduce(t2.r, n)) return {};
  std::vector<Int> sub = cyclic_subgroup(t1.r - 1, n);
  for (Int f : units(t1.params.m)) {
    Int d = mod_reduce(f * t1.s - t2.s, n);
    if (!sorted_contains(sub, d)) continue;
    // Recover g from f s1 - s2 = g (r1 - 1).
    Int step = mod_reduce(t1.r - 1, n);
    for (Int g = 0; g < n; ++g) {
      if (mod_reduce(g * step, n) == d) return {true, f, g};
    }
  }
  return {};
}

ConjugacyWitness brute_conjugate(const AffineAut& t1, const AffineAut& t2) {
  require_same_params(t1, t2, "brute_conjugate");
  for (Int f : units(t1.params.m)) {
    for (Int g = 0; g < t1.params.n; ++g) {
      AffineAut sigma{f, g, t1.params};
      AffineAut conj = compose(compose(sigma, t1), inverse(sigma));
      if (map_equal(conj, t2)) return {true, f, g};
    }
  }
  return {};
}

std::vector<AutClass> equivalence_classes(Int v, const GroupParams& params) {
  std::vector<AutClass> out;
  const Int n = params.n;
  std::vector<Int> us = units(params.m);
  for (Int r : roots_of_unity(v, params)) {
    std::vector<Int> whole = zdiv(geometric_sum(r, v, n), n);
    std::vector<Int> sub = cyclic_subgroup(r - 1, n);
    std::vector<std::vector<Int>> cs = cosets(sub, whole, n);

    std::vector<Int> elem_to_coset(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < cs.size(); ++i) {
      for (Int x : cs[i]) elem_to_coset[static_cast<size_t>(x)] = static_cast<Int>(i);
    }
    // Union-find over cosets under multiplication by units.
    std::vector<Int> parent(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) parent[i] = static_cast<Int>(i);
    auto find = [&](Int x) {
      while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] =
            parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
      }
      return x;
    };
    auto unite = [&](Int a, Int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    };
    for (size_t i = 0; i < cs.size(); ++i) {
      for (Int u : us) {
        Int image = elem_to_coset[static_cast<size_t>(mod_reduce(u * cs[i][0], n))];
        unite(static_cast<Int>(i), image);
      }
    }
    std::vector<std::vector<Int>> groups(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) {
      groups[static_cast<size_t>(find(static_cast<Int>(i)))].push_back(
          static_cast<Int>(i));
    }
    for (const auto& g : groups) {
      if (g.empty()) continue;
      AutClass cls;
      cls.r = r;
      Int count = 0;
      Int least_shift = n;
      for (Int ci : g) {
        cls.orbit.push_back(cs[static_cast<size_t>(ci)]);
        count += static_cast<Int>(cs[static_cast<size_t>(ci)].size());
        least_shift = std::min(least_shift, cs[static_cast<size_t>(ci)][0]);
      }
      cls.member_count = count;
      cls.representative = AffineAut{r, least_shift, params};
      out.push_back(std::move(cls));
    }
  }
  std::sort(out.begin(), out.end(), [](const AutClass& a, const AutClass& b) {
    if (a.r != b.r) return a.r < b.r;
    return a.representative.s < b.representative.s;
  });
  return out;
}

std::optional<Int> orbit_count_formula(Int r, Int v,
                                       const GroupParams& params) {
  const Int n = params.n;
  Int numerator = std::gcd(mod_reduce(r - 1, n), n) *
                  std::gcd(geometric_sum(r, v, n), n);
  if (numerator % n != 0 || numerator / n < 1) return std::nullopt;
  return divisor_count(numerator / n);
}

Int involution_root_count(const GroupParams& params) {
  return static_cast<Int>(roots_of_unity(2, params).size());
}

namespace {

// alpha = v2(m), q = number of distinct odd primes of m.
std::pair<int, int> two_adic_shape(Int m) {
  int alpha = 0;
  int q = 0;
  for (auto [p, e] : factorize(m)) {
    if (p == 2) {
      alpha = e;
    } else {
      ++q;
    }
  }
  return {alpha, q};
}

}  // namespace

Int involution_root_count_formula(const GroupParams& params) {
  auto [alpha, q] = two_adic_shape(params.m);
  if (alpha == 2) return Int{1} << (q + 1);
  if (alpha == 3) return Int{1} << (q + 2);
  return Int{1} << (q + 3);
}

Int n_r(Int r, const GroupParams& params) {
  const Int n = params.n;
  std::vector<Int> whole = zdiv(r + 1, n);
  std::vector<Int> sub = cyclic_subgroup(r - 1, n);
  return static_cast<Int>(cosets(sub, whole, n).size());
}

Int involution_class_count_formula(const GroupParams& params) {
  auto [alpha, q] = two_adic_shape(params.m);
  if (alpha == 2) return Int{1} << (q + 1);
  return Int{1} << (q + 2);
}

std::vector<Int> involution_class_witness(const GroupParams& params) {
  std::vector<Int> out;
  for (Int r : roots_of_unity(2, params)) {
    if (n_r(r, params) == 2) out.push_back(r);
  }
  return out;
}

Int count_aut_2(const GroupParams& params) {
  Int total = 0;
  for (Int r : roots_of_unity(2, params)) total += std::gcd(r + 1, params.n);
  return total;
}

std::string to_text(const AffineAut& a) {
  return std::to_string(a.r) + "x+" + std::to_string(a.s) +
         " (mod n=" + std::to_string(a.params.n) + ")";
}

}  // namespace qdsym
