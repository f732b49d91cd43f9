#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdsym/modarith.hpp"

namespace qdsym {

/// Automorphism label (r, s): r in U_m, s in Z_n. As a map on Z_n it acts
/// by x -> (r mod n) x + s. Counting operations count labels (two labels can
/// name the same map when they agree mod n); map_equal gives the functional
/// view.
struct AffineAut {
  Int r;
  Int s;
  GroupParams params;

  friend bool operator==(const AffineAut&, const AffineAut&) = default;
};

AffineAut make_affine(Int r, Int s, const GroupParams& params);
AffineAut affine_identity(const GroupParams& params);

/// Functional equality as maps on Z_n: (r mod n, s) pairs.
bool map_equal(const AffineAut& a, const AffineAut& b);

/// Identity test per the affine model: r = 1 (mod n) and s = 0.
bool is_identity_map(const AffineAut& a);

/// Evaluate the map at x in Z_n.
Int apply_map(const AffineAut& a, Int x);

/// Label r = outer.r * inner.r (mod m), shift s = outer.r * inner.s + outer.s
/// (mod n).
AffineAut compose(const AffineAut& outer, const AffineAut& inner);

/// The map f^{-1}x - f^{-1}g with f^{-1} inverted mod n; the label is lifted
/// back to U_m as the smaller of the two odd preimages. Any lift yields the
/// same map; the rule fixes determinism.
AffineAut inverse(const AffineAut& a);

/// Least v >= 1 with a^v the identity map, by iterated composition.
Int affine_order(const AffineAut& a);

/// Order criterion without iteration: r in R^v_m and
/// s in ZDiv(r^{v-1} + ... + r + 1).
bool satisfies_order(const AffineAut& a, Int v);

/// All labels (r, s) with r in R^v_m and s in ZDiv(geometric_sum(r, v, n)),
/// ordered by (r, s).
std::vector<AffineAut> enumerate_aut_v(Int v, const GroupParams& params);

/// Closed form: sum over r in R^v_m of gcd(r^{v-1} + ... + 1, n).
Int count_aut_v(Int v, const GroupParams& params);

struct ConjugacyWitness {
  bool conjugate = false;
  Int f = -1;  // valid on success
  Int g = -1;
};

/// Criterion check: r_1 = r_2 (as maps) and f s_1 - s_2 in <r_1 - 1> <= Z_n
/// for some f in U_m. The witness (f, g) satisfies sigma theta_1 sigma^{-1}
/// = theta_2 for sigma = f x + g.
ConjugacyWitness are_conjugate(const AffineAut& t1, const AffineAut& t2);

/// Independent route: scan all sigma = f x + g over U_m x Z_n.
ConjugacyWitness brute_conjugate(const AffineAut& t1, const AffineAut& t2);

/// One equivalence class of Aut_v: leading label r plus a U_m-orbit of
/// cosets of <r-1> inside ZDiv(geometric_sum(r, v, n)).
struct AutClass {
  Int r = 0;
  std::vector<std::vector<Int>> orbit;   // cosets, ordered by least element
  AffineAut representative;              // lexicographically least (r, s)
  Int member_count = 0;                  // labels (r, s) in the class
};

/// Classes of Aut_v indexed by (r, orbit), ordered by (r, representative.s).
std::vector<AutClass> equivalence_classes(Int v, const GroupParams& params);

/// Number of U_m-orbits for a fixed r in R^v_m: the divisor count of
/// gcd(r-1, n) * gcd(geometric_sum, n) / n. Returns nullopt when the
/// quotient is not a positive integer (reported upstream as a MISMATCH,
/// never thrown).
std::optional<Int> orbit_count_formula(Int r, Int v, const GroupParams& params);

/// |R^2_m| by direct count.
Int involution_root_count(const GroupParams& params);

/// |R^2_m| closed form from m = 2^alpha * p1^t1 ... pq^tq:
/// 2^{q+1} (alpha = 2), 2^{q+2} (alpha = 3), 2^{q+3} (alpha >= 4).
Int involution_root_count_formula(const GroupParams& params);

/// N_r = |ZDiv(r+1) / <r-1>|, computed by the coset construction.
Int n_r(Int r, const GroupParams& params);

/// C_{4k} case formula: 2^{q+1} (alpha = 2), 2^{q+2} (alpha >= 3).
Int involution_class_count_formula(const GroupParams& params);

/// {r in R^2_m : n_r(r) = 2} -- the witness set behind the C_{4k} formula.
std::vector<Int> involution_class_witness(const GroupParams& params);

/// |Aut_2| = sum over r in R^2_m of gcd(r+1, n).
Int count_aut_2(const GroupParams& params);

/// "17x+8 (mod n=12)"
std::string to_text(const AffineAut& a);

}  // namespace qdsym
