#pragma once

#include <cstdint>
#include <vector>

#include "segre/arith.hpp"

// State machine for elementary transformations acting on Segre profiles.
//
// A SegreProfile is formal state: the vector (s_1, ..., s_{r-1}) attached
// to a numeric bundle class. The machine guarantees only necessary
// conditions (the congruence s_i == i*d mod r and the numeric caps);
// whether a given per-rank type combination is realized by an actual
// transformation point is geometric data outside this model. Every public
// entry point operates under that proviso.

namespace segre::transform {

using std::int64_t;

// A subbundle either lies inside the transformed bundle (type I) or not
// (type II); only this two-valued tag is modeled.
enum class StepType { I, II };

inline StepType flip(StepType t) { return t == StepType::I ? StepType::II : StepType::I; }

// One elementary transformation, seen only through its k-type for every
// sub-rank k. types[i-1] is the type at sub-rank i; size is r-1.
struct TransformStep {
    std::vector<StepType> types;

    StepType at(int64_t i) const { return types.at(static_cast<size_t>(i - 1)); }
};

// Full invariant vector (s_1, ..., s_{r-1}) of a bundle class.
// s[i-1] holds s_i; invariant: s_i == i*d (mod r).
struct SegreProfile {
    int64_t g;
    int64_t r;
    int64_t d;
    std::vector<int64_t> s;

    int64_t at(int64_t i) const { return s.at(static_cast<size_t>(i - 1)); }

    friend bool operator==(const SegreProfile& a, const SegreProfile& b) {
        return a.g == b.g && a.r == b.r && a.d == b.d && a.s == b.s;
    }
};

// Closed integer interval of possible values for dim M_k(E).
struct DimInterval {
    int64_t lo;
    int64_t hi;

    friend bool operator==(DimInterval a, DimInterval b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Per-sub-rank dimension intervals, clamped to [0, k(r-k)].
struct LocusDimBounds {
    int64_t r;
    std::vector<DimInterval> at;  // at[k-1] bounds dim M_k

    DimInterval interval(int64_t k) const { return at.at(static_cast<size_t>(k - 1)); }
};

// Checks invariants (g, r, d in domain; length r-1; congruences) and
// returns the profile. Degree is guarded only here; the machine itself
// may walk d below the input window.
SegreProfile make_profile(int64_t g, int64_t r, int64_t d, std::vector<int64_t> s);

// Profile of a general bundle in M(r,d): s_i = s_max(g,r,d,i) for every i.
SegreProfile general_profile(int64_t g, int64_t r, int64_t d);

// Step with every sub-rank assigned the same type.
TransformStep uniform_step(int64_t r, StepType t);

void validate_step(int64_t r, const TransformStep& t);

// One elementary transformation: d drops by 1; s_i drops by i (type I at i)
// or grows by r-i (type II at i). Congruence is preserved.
SegreProfile apply_step(const SegreProfile& p, const TransformStep& t);

// Pair-level transition for a single tracked subbundle.
struct SubbundleTransition {
    int64_t deg_f;       // degree of the transformed subbundle
    int64_t pair_value;  // s_k(E', F') = segre_pair(r, d-1, k, deg_f)
};
SubbundleTransition subbundle_transition(int64_t r, int64_t d, int64_t k, int64_t deg_f,
                                         StepType type);

// Dual elementary transformation: type at sub-rank i flips and moves to
// sub-rank r-i. Involution.
TransformStep dual_step(int64_t r, const TransformStep& t);

// Dual bundle class: (g, r, -d) with s'_i = s_{r-i}. Involution.
SegreProfile dual_profile(const SegreProfile& p);

// Necessary-condition filter: type I is always admissible; type II at
// sub-rank i only if the grown value stays within s_max at degree d-1.
// Passing the filter does not assert geometric realizability.
bool type_feasible(const SegreProfile& p, int64_t i, StepType type);

// Interval propagation for dim M_k under one step of the given type at k.
// Type I: the locus can lose at most k dimensions and cannot grow.
// Type II: only the upper bound grows (by r-k); no lower guarantee survives.
// Result is always clamped to [0, k(r-k)].
DimInterval locus_interval_step(DimInterval b, int64_t k, StepType type, int64_t r);

// Same propagation applied to the entry at sub-rank k of a full bounds table.
LocusDimBounds locus_dim_step(const LocusDimBounds& b, int64_t k, StepType type);

// Propagates every sub-rank of the table through one TransformStep.
LocusDimBounds locus_dim_apply(const LocusDimBounds& b, const TransformStep& t);

}  // namespace segre::transform
