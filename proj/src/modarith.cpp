#include "qdsym/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qdsym {

GroupParams::GroupParams(Int k_) : k(k_), m(4 * k_), n(2 * k_) {
  if (k_ < 2) {
    throw std::invalid_argument("GroupParams: k must be >= 2, got " +
                                std::to_string(k_));
  }
}

Int mod_reduce(Int x, Int mod) {
  Int r = x % mod;
  return r < 0 ? r + mod : r;
}

Int mod_pow(Int base, Int exp, Int mod) {
  Int b = mod_reduce(base, mod);
  Int acc = mod_reduce(1, mod);
  while (exp > 0) {
    if (exp & 1) acc = (acc * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return acc;
}

Int mod_inverse(Int a, Int mod) {
  Int old_r = mod_reduce(a, mod), r = mod;
  Int old_t = 1, t = 0;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r != 1) {
    throw std::invalid_argument("mod_inverse: " + std::to_string(a) +
                                " is not a unit mod " + std::to_string(mod));
  }
  return mod_reduce(old_t, mod);
}

std::vector<std::pair<Int, int>> factorize(Int x) {
  if (x < 1) throw std::invalid_argument("factorize: x must be >= 1");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (x > 1) out.emplace_back(x, 1);
  return out;
}

Int euler_phi(Int x) {
  Int phi = 1;
  for (auto [p, e] : factorize(x)) {
    Int pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

std::vector<Int> units(Int modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("units: modulus must be >= 2, got " +
                                std::to_string(modulus));
  }
  std::vector<Int> out;
  for (Int r = 1; r < modulus; ++r) {
    if (std::gcd(r, modulus) == 1) out.push_back(r);
  }
  return out;
}

std::vector<Int> zdiv(Int c, Int n) {
  if (n < 2) throw std::invalid_argument("zdiv: n must be >= 2");
  Int cr = mod_reduce(c, n);
  std::vector<Int> out;
  for (Int y = 0; y < n; ++y) {
    if ((cr * y) % n == 0) out.push_back(y);
  }
  return out;
}

std::vector<Int> roots_of_unity(Int v, const GroupParams& params) {
  if (v < 1) throw std::invalid_argument("roots_of_unity: v must be >= 1");
  std::vector<Int> out;
  for (Int r : units(params.m)) {
    if (mod_pow(r, v, params.n) == mod_reduce(1, params.n)) out.push_back(r);
  }
  return out;
}

std::vector<Int> cyclic_subgroup(Int d, Int n) {
  if (n < 2) throw std::invalid_argument("cyclic_subgroup: n must be >= 2");
  Int dr = mod_reduce(d, n);
  std::vector<Int> out;
  Int x = 0;
  do {
    out.push_back(x);
    x = (x + dr) % n;
  } while (x != 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool sorted_contains(const std::vector<Int>& v, Int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

std::vector<std::vector<Int>> cosets(const std::vector<Int>& sub,
                                     const std::vector<Int>& whole, Int n) {
  if (n < 2) throw std::invalid_argument("cosets: n must be >= 2");
  if (!sorted_contains(sub, 0)) {
    throw std::invalid_argument("cosets: sub is not a subgroup (missing 0)");
  }
  for (Int a : sub) {
    for (Int b : sub) {
      Int c = (a + b) % n;
      if (!sorted_contains(sub, c)) {
        throw std::invalid_argument(
            "cosets: sub is not a subgroup of Z_" + std::to_string(n) +
            " (element " + std::to_string(c) + " escapes)");
      }
    }
  }
  for (Int x : sub) {
    if (!sorted_contains(whole, x)) {
      throw std::invalid_argument("cosets: sub element " + std::to_string(x) +
                                  " is not in whole");
    }
  }
  std::vector<std::vector<Int>> out;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (Int x : whole) {
    if (seen[static_cast<size_t>(x)]) continue;
    std::vector<Int> coset;
    for (Int h : sub) {
      Int y = (x + h) % n;
      if (!sorted_contains(whole, y)) {
        throw std::invalid_argument(
            "cosets: whole is not coset-closed (element " + std::to_string(y) +
            " of " + std::to_string(x) + " + sub is missing)");
      }
      coset.push_back(y);
      seen[static_cast<size_t>(y)] = 1;
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  // whole scanned in ascending order, so the list is already sorted by
  // least element.
  return out;
}

Int geometric_sum(Int r, Int v, Int n) {
  if (v < 1) throw std::invalid_argument("geometric_sum: v must be >= 1");
  Int rr = mod_reduce(r, n);
  Int acc = 0;
  for (Int i = 0; i < v; ++i) acc = (acc * rr + 1) % n;
  return acc;
}

Int divisor_count(Int x) {
  if (x < 1) throw std::invalid_argument("divisor_count: x must be >= 1");
  Int count = 1;
  for (auto [p, e] : factorize(x)) count *= (e + 1);
  return count;
}

}  // namespace qdsym
