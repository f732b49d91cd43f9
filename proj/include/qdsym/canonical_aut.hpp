#pragma once

#include <string>
#include <vector>

#include "qdsym/modarith.hpp"
#include "qdsym/qd_group.hpp"

namespace qdsym {

/// Which action a (r, s) pair drives.
///
/// Canonical: theta(a) = a^r, theta(b) = a^{2s} b, i.e.
///   a^j b^t -> a^{(r j + 2 s t) mod m} b^t.
/// Always a genuine automorphism (verified by brute force, not assumed).
///
/// PaperEq1: the literal affine action
///   a^j b^t -> a^{r j + [(t-1)n - (t-2)] s} b^t,
/// kept verbatim as an evaluator. Its t = 0 branch adds (2-n)s to every
/// rotation exponent and is generally not a homomorphism.
enum class ActionKind { Canonical, PaperEq1 };

struct CanonicalAut {
  Int r;
  Int s;
  GroupParams params;

  friend bool operator==(const CanonicalAut&, const CanonicalAut&) = default;
};

CanonicalAut make_canonical(Int r, Int s, const GroupParams& params);
inline CanonicalAut canonical_identity(const GroupParams& params) {
  return CanonicalAut{1, 0, params};
}

GroupElement apply(const CanonicalAut& theta, const GroupElement& g,
                   ActionKind kind);

struct AutomorphismCheck {
  bool ok = false;
  bool has_witness = false;  // when !ok: (x, y) is the first violated pair,
  GroupElement x, y;         // or x alone when bijectivity fails
  std::string reason;
};

/// Brute-force check over all of G x G that the action is a homomorphism,
/// plus bijectivity over G. Pairs are scanned in (refl, exp) order and the
/// first violation is returned.
AutomorphismCheck is_automorphism(Int r, Int s, ActionKind kind,
                                  const GroupParams& params);

/// The t = 0 branch alone: is the action restricted to <a> a homomorphism?
/// For PaperEq1 this holds exactly when (2-n)s = 0 (mod m).
bool is_rotation_homomorphism(Int r, Int s, ActionKind kind,
                              const GroupParams& params);

/// (r2 r1 mod m, (r2 s1 + s2) mod n).
CanonicalAut compose_canonical(const CanonicalAut& outer,
                               const CanonicalAut& inner);

/// Least v >= 1 fixing every group element; equals the least v with
/// r^v = 1 (mod m) and geometric_sum(r, v, n) * s = 0 (mod n). Contrast
/// with affine_order, which only needs r^v = 1 (mod n).
Int canonical_order(const CanonicalAut& theta);

/// All (r, s) with r in U_m, s in Z_n, ordered by (r, s). Guarded by
/// max_k because callers typically follow with |G|^2 scans.
std::vector<CanonicalAut> enumerate_canonical(const GroupParams& params,
                                              Int max_k = 25);

std::string to_text(const CanonicalAut& theta);

}  // namespace qdsym
