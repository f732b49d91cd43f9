#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qdsym {

using Int = std::int64_t;

/// Parameters of the quasi-dihedral group QD_{8k}: m = 4k, n = 2k,
/// group order 2m = 8k. Rejects k < 2 (the k = 1 group is abelian and
/// the order lemmas below do not hold for it).
struct GroupParams {
  Int k;
  Int m;  // 4k, order of the rotation generator
  Int n;  // 2k, the index ring Z_n of the affine model

  explicit GroupParams(Int k_);

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Euclidean remainder in [0, mod); well-defined for negative x.
Int mod_reduce(Int x, Int mod);

Int mod_pow(Int base, Int exp, Int mod);

/// Inverse of a mod `mod`; throws std::invalid_argument when gcd(a, mod) != 1.
Int mod_inverse(Int a, Int mod);

/// Prime factorization by trial division, (prime, exponent) pairs ascending.
std::vector<std::pair<Int, int>> factorize(Int x);

Int euler_phi(Int x);

/// {r : 1 <= r < modulus, gcd(r, modulus) = 1}, ascending. modulus < 2 is
/// rejected as degenerate.
std::vector<Int> units(Int modulus);

/// ZDiv(c) = {y in Z_n : c*y = 0 (mod n)}. |ZDiv(c)| = gcd(c, n).
std::vector<Int> zdiv(Int c, Int n);

/// R^v_m = {r in U_m : r^v = 1 (mod n)}. Membership is tested mod m, the
/// power condition mod n; the mixed moduli are deliberate (the stricter
/// mod-m condition lives in canonical_aut).
std::vector<Int> roots_of_unity(Int v, const GroupParams& params);

/// Additive cyclic subgroup <d> of Z_n, sorted ascending.
std::vector<Int> cyclic_subgroup(Int d, Int n);

/// Distinct cosets x + sub for x in whole, each sorted, list ordered by
/// least element. Validates that sub is a subgroup of Z_n, sub is contained
/// in whole, and whole is a union of cosets; the error names the offending
/// element.
std::vector<std::vector<Int>> cosets(const std::vector<Int>& sub,
                                     const std::vector<Int>& whole, Int n);

/// (r^{v-1} + ... + r + 1) mod n by iterated multiply-add.
Int geometric_sum(Int r, Int v, Int n);

/// Number of positive divisors of x >= 1.
Int divisor_count(Int x);

}  // namespace qdsym
