#pragma once

#include <string>
#include <vector>

#include "qdsym/affine_aut.hpp"
#include "qdsym/canonical_aut.hpp"
#include "qdsym/modarith.hpp"
#include "qdsym/qd_group.hpp"

namespace qdsym {

/// Comparison verdict between a formula-layer index set (in Z_n) and an
/// oracle-layer element set (exponents in Z_m). Adapters are tried in a
/// fixed order and the first hit is reported:
///   EXACT         oracle exponents literally equal the indices
///   MOD_N_MATCH   oracle exponents mod n equal the indices
///   HALVING_MATCH all oracle exponents even and exponent/2 equals them
///   MISMATCH      none of the above
///   NOT_APPLICABLE the claim does not apply to this automorphism
enum class Status { Exact, ModNMatch, HalvingMatch, Mismatch, NotApplicable };

const char* to_string(Status s);

/// Formula-layer index sets, all inside Z_n. Reflection indices for H are
/// even by construction (the characterization restricts j' to even values).
struct IndexSets {
  GroupParams params;
  Int r = 0, s = 0;
  std::vector<Int> h_rot;   // {j : j(r+2s-1) = 0 (mod n)}
  std::vector<Int> h_refl;  // {j' even : j'(r+2s-1) = -s (mod n)}
  std::vector<Int> q;       // <r+2s-1> union {l(1-r)-s : l even}
  std::vector<Int> r_rot;   // {i : (r+1)i = -2s (mod n)}
  std::vector<Int> r_refl;  // {i : (r-1)i = -s (mod n)}
};

std::vector<Int> h_rot_formula(Int r, Int s, const GroupParams& params);
std::vector<Int> h_refl_formula(Int r, Int s, const GroupParams& params);
std::vector<Int> q_formula(Int r, Int s, const GroupParams& params);
std::vector<Int> r_rot_formula(Int r, Int s, const GroupParams& params);
std::vector<Int> r_refl_formula(Int r, Int s, const GroupParams& params);
IndexSets formula_sets(Int r, Int s, const GroupParams& params);

/// Oracle-layer sets computed by definition scans over all of G:
/// H = fixed points, Q = {x theta(x)^{-1}}, R = {x : theta(x) = x^{-1}}.
struct OracleSpaces {
  ElementSet h;
  ElementSet q;
  ElementSet r;
};

OracleSpaces oracle_spaces(const CanonicalAut& theta,
                           ActionKind kind = ActionKind::Canonical);

struct CompareResult {
  Status status = Status::NotApplicable;
  std::string adapter;  // "identity", "mod-n", "halved", "none"
};

/// H comparison. The oracle reflection part is restricted to even exponents
/// first: the formula's reflection indices are scoped to even j', so the
/// even slice is the comparable part. Whether the oracle holds odd-exponent
/// reflections too is reported separately (see harness claim S4.H-even-scope).
CompareResult compare_h(const IndexSets& f, const OracleSpaces& o);

CompareResult compare_q(const IndexSets& f, const OracleSpaces& o);

/// R comparison, both parts unfiltered. NOT_APPLICABLE unless theta is an
/// involution in the affine sense (r^2 = 1 mod n and (r+1)s = 0 mod n).
CompareResult compare_r(const IndexSets& f, const OracleSpaces& o);

/// H structure prediction from the printed case analysis (k even / k odd).
struct HClassification {
  bool applicable = false;
  std::string unmatched;  // condition that fell through, when !applicable
  bool cyclic = false;
  Int order = 0;
  std::string iso;  // "ZDiv(c)", "ZDiv(c)xZ2", "<a^(k/2)>+2refl", "{1,a^k,a^(2l)b}"
};

HClassification classify_h(Int r, Int s, const GroupParams& params);

/// Q cyclicity prediction from the printed case analysis.
struct QClassification {
  bool applicable = false;
  std::string unmatched;
  bool cyclic = false;
  Int order = 0;  // |q_formula|, recorded when applicable
};

QClassification classify_q(Int r, Int s, const GroupParams& params);

/// Predicted generator d with q_formula = <d> in Z_n, from the printed
/// |Q|-case analysis. Applicable only when |q_formula| falls in a printed
/// case for the parity of k.
struct PsiQ {
  bool applicable = false;
  std::string unmatched;
  Int generator = -1;
};

PsiQ psi_q(Int r, Int s, const GroupParams& params);

/// A set of Z_n indices is cyclic iff it is a subgroup of Z_n (all subgroups
/// of Z_n are cyclic); mixed formula sets are embedded literally into G and
/// tested there.
bool is_cyclic_index_set(const std::vector<Int>& set, Int n);

/// Literal embedding of formula indices: a^j for j in h_rot, a^{j'} b for
/// j' in h_refl, exponents taken as-is in Z_m.
ElementSet embed_h(const IndexSets& f);
ElementSet embed_q(const IndexSets& f);

/// Formula-layer predictor for the H-orbits on Q: index l gets the pair
/// {l, -l mod n} when H has a reflection part and l is even, else the
/// singleton {l}. Returned as a deduplicated partition of q.
std::vector<std::vector<Int>> h_orbits_formula(const IndexSets& f);

/// Oracle H acting on oracle Q by conjugation; blocks of rotation exponents.
std::vector<std::vector<Int>> h_orbits_oracle(const CanonicalAut& theta);

/// G acting on Q by twisted conjugation g.q = g q theta(g)^{-1}.
std::vector<std::vector<Int>> g_orbits_on_q(const CanonicalAut& theta);

CompareResult compare_orbits(const std::vector<std::vector<Int>>& formula,
                             const std::vector<std::vector<Int>>& oracle,
                             Int n);

struct ProductCheck {
  bool oracle_proper = false;   // {h q : h in oracle H, q in oracle Q} != G
  bool formula_proper = false;  // same with the embedded formula sets
};

ProductCheck hq_product_check(const CanonicalAut& theta);

struct RqCheck {
  bool q_subset_r = false;
  bool r_ne_q = false;
};

RqCheck r_vs_q_check(const CanonicalAut& theta);

struct SpaceStatuses {
  Status h = Status::NotApplicable;
  Status q = Status::NotApplicable;
  Status r = Status::NotApplicable;
  Status orbits = Status::NotApplicable;
  Status hq = Status::NotApplicable;  // oracle product check; id is scoped out
  Status rq = Status::NotApplicable;
};

struct SpaceReport {
  GroupParams params;
  Int r = 0, s = 0;
  IndexSets formula;
  OracleSpaces oracle;
  Int affine_order_v = 0;
  Int canonical_order_v = 0;
  HClassification h_class;
  QClassification q_class;
  PsiQ psi;
  ProductCheck products;
  RqCheck rq_facts;
  std::vector<std::vector<Int>> orbits_formula;
  std::vector<std::vector<Int>> orbits_oracle;
  std::string h_adapter, q_adapter, r_adapter, orbit_adapter;
  SpaceStatuses statuses;
};

SpaceReport build_space_report(Int r, Int s, const GroupParams& params);

}  // namespace qdsym
