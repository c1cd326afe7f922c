#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segre/arith.hpp"

// Replays the constructive existence argument for the stratum
// M^0(r,d,k,s) as a checkable certificate: pick the number N_k of
// degree-dropping steps that lands s + N_k*k in the generic band, then
// bound s_i of the end bundle from below for every i != k, either
// directly or through the dual parameters (r, -d, r-k, s, r-i).
//
// Two bound routes are evaluated per i:
//   - the closed-form chain that drops residues (behind PaperGuaranteed),
//   - the sharp worst case s_max(g, r, d+N, i) - N*i with exact residues
//     (behind SharpGuaranteed).
// A verdict only ever asserts success of a route; failure of both proves
// nothing about the stratum, hence "Unknown" rather than "infeasible".

namespace segre::construct {

using std::int64_t;

enum class Verdict { PaperGuaranteed, SharpGuaranteed, Unknown };

const char* verdict_name(Verdict v);

enum class Reduction { Direct, Dual };

// The two closed-form chain values for one reduced index i:
//   first  = i(r-i)(g-1) - (i/k)(k(r-k)(g-1) - s + r - 1)
//   second = i(k-i)(g-1) - (i/k)(r-2)
// ok means both values are positive (and first >= second once s >= 1).
struct PaperChain {
    Rat first;
    Rat second;
    bool ok;
};

// Per-index record of the certificate.
struct CertLine {
    int64_t i;
    Reduction reduction;    // side whose worst-case bound is reported
    int64_t s_i_max;        // s_max(g, r, d_tilde, i) on the direct side
    int64_t worst_case_lb;  // best of the direct / dual sharp bounds
    PaperChain chain;       // proof-side chain (direct for i<k, dual for i>k)
    bool sharp_ok;          // worst_case_lb > 0
};

struct ConstructionCertificate {
    int64_t g, r, d, k, s;
    int64_t n_k;
    int64_t d_tilde;  // d + n_k
    int64_t window_lo, window_hi;
    std::vector<CertLine> per_i;
    bool sharp_ok;  // every i != k has a positive worst-case bound
    bool paper_ok;  // every i != k also passes its closed-form chain
    Verdict verdict;
    std::vector<std::string> notes;
};

// Minimal genus for which the bound chains close, per (r, k).
struct GenusRequirement {
    int64_t r, k;
    int64_t n;          // |r - 2k|
    Rat general_bound;  // (r+1)/2, uniform over k
    Rat refined_bound;  // 2 for k in {1, r-1}, else 3 + 2(n-1)/(r-n)
};

// Minimal N >= 0 with s + N*k inside [k(r-k)(g-1), k(r-k)(g-1) + r-1].
// The window spans r consecutive integers and k <= r-1, so N exists.
// Requires 0 < s <= k(r-k)(g-1) + r-1.
int64_t choose_nk(int64_t g, int64_t r, int64_t k, int64_t s);

// Chain values for one reduced index, 1 <= i <= k-1.
PaperChain paper_chain(int64_t g, int64_t r, int64_t k, int64_t s, int64_t i);

// Chain over the whole reduced range (vacuously true for k = 1).
bool paper_chain_ok(int64_t g, int64_t r, int64_t k, int64_t s);

// Full certificate for (g, r, d, k, s); s must lie in valid_s(g,r,d,k).
ConstructionCertificate sharp_feasibility(int64_t g, int64_t r, int64_t d, int64_t k, int64_t s);

GenusRequirement genus_requirement(int64_t r, int64_t k);

}  // namespace segre::construct
