#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "segre/arith.hpp"

// Closed-form invariants of vector bundles on a smooth projective curve:
// Segre invariants s_k, the Hirschowitz and Mukai-Sakai bounds, residue
// arithmetic for the generic value s_max, and the dimension formulas for
// the s_k-stratification of the moduli space M(r,d).
//
// All quantities are numeric classes (g, r, d, k, ...); no bundle data is
// represented. Every function is pure and exact (64-bit checked integers,
// exact rationals).

namespace segre::core {

using std::int64_t;

// Smooth projective curve, g >= 2.
struct CurveClass {
    int64_t g;
};

// Numeric class (genus, rank, degree) standing in for a bundle E.
struct BundleClass {
    int64_t g;
    int64_t r;
    int64_t d;

    Rat slope() const { return Rat(d, r); }
};

// A rank-k subbundle of given degree inside a bundle class.
struct SubbundlePair {
    BundleClass bundle;
    int64_t k;
    int64_t deg_f;

    int64_t pair_value() const;  // k*d - r*deg_f
};

// One stratum M^0(r,d,k,s) of the moduli space, fully evaluated.
struct StratumDescriptor {
    int64_t g, r, d, k, s;
    int64_t eps;        // residue epsilon_k in [0, r-1]
    int64_t d1;         // degree of maximal rank-k subbundles, (k*d - s)/r
    int64_t dim;        // dim M^0(r,d,k,s)
    int64_t codim;      // generic_dim - dim
    int64_t locus_dim;  // dim of the maximal-subbundle locus for general E
    bool is_generic;    // s >= k(r-k)(g-1), i.e. the stratum is dense
};

// Lower bounds for the Segre invariants of a maximal subbundle F and of
// the quotient E/F (stability of E assumed). A side is absent when nu is
// outside its index range.
struct NestedBounds {
    int64_t nu;
    std::optional<Rat> sub_bound;        // s_nu(F)   >= (k - nu*s)/r
    std::optional<Rat> quot_bound;       // s_nu(E/F) >= ((r-k) - (r-k-nu)*s)/r
    std::optional<int64_t> sub_bound_int;   // ceiling of sub_bound
    std::optional<int64_t> quot_bound_int;  // ceiling of quot_bound
};

struct DualParams {
    int64_t r, d, k;
};

// Argument validation. All operations call these; out-of-window values
// raise guard_error, other bad values domain_error.
void validate_genus(int64_t g);
void validate_rank(int64_t r);
void validate_degree(int64_t d);
void validate_subrank(int64_t r, int64_t k);

// s_k(E,F) = k*deg E - r*deg F for a rank-k subbundle F.
int64_t segre_pair(int64_t r, int64_t d, int64_t k, int64_t deg_f);

// s_k(E) <= k(r-k)(g-1) + (r-1).
int64_t hirschowitz_bound(int64_t g, int64_t r, int64_t k);

// s_k(E) <= k(r-k)g. Weaker than Hirschowitz; reported alongside it.
int64_t mukai_sakai_bound(int64_t g, int64_t r, int64_t k);

// The unique eps in [0, r-1] with k(r-k)(g-1) + eps == k*d (mod r).
int64_t epsilon_k(int64_t g, int64_t r, int64_t d, int64_t k);

// Generic value of s_k on M(r,d): k(r-k)(g-1) + epsilon_k.
int64_t s_max(int64_t g, int64_t r, int64_t d, int64_t k);

// All admissible stratum values: 0 < s <= s_max, s == k*d (mod r), ascending.
std::vector<int64_t> valid_s(int64_t g, int64_t r, int64_t d, int64_t k);

// Parameter involution induced by dualization: (r, d, k) -> (r, -d, r-k).
DualParams dual_params(int64_t r, int64_t d, int64_t k);

// dim M^0(r,d,k,s). Requires s in valid_s(g,r,d,k).
int64_t stratum_dim(int64_t g, int64_t r, int64_t d, int64_t k, int64_t s);

// dim M(r,d) = r^2(g-1) + 1.
int64_t generic_dim(int64_t g, int64_t r);

// dim of the locus of maximal rank-k subbundles for general E in the
// stratum: max(s - k(r-k)(g-1), 0).
int64_t maximal_locus_dim(int64_t g, int64_t r, int64_t k, int64_t s);

// Lower bounds for s_nu of a maximal subbundle / its quotient, with
// integer (ceiling) refinements. Requires s >= 1 (E stable) and nu inside
// at least one of the two index ranges.
NestedBounds nested_bounds(int64_t r, int64_t k, int64_t s, int64_t nu);

// Full stratification table for M(r,d): one row per (k, s), k ascending
// then s ascending. Row order is fixed so serialized output is byte-stable.
std::vector<StratumDescriptor> strata_table(int64_t g, int64_t r, int64_t d);

namespace detail {
// Unguarded closed forms for internal callers that walk outside the input
// window (e.g. shifted degrees d + N). Domain still assumed valid.
int64_t epsilon_k(int64_t g, int64_t r, int64_t d, int64_t k);
int64_t s_max(int64_t g, int64_t r, int64_t d, int64_t k);
}  // namespace detail

}  // namespace segre::core
