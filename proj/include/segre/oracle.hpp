#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "segre/arith.hpp"
#include "segre/transform.hpp"

// Brute-force reference computations. These re-derive every quantity from
// the definitions (degree sweeps, residue scans, exhaustive step
// enumeration) and never call the closed forms they are used to check.

namespace segre::oracle {

using std::int64_t;

// Exhaustive adversarial search domain. Kept small enough to enumerate
// every type assignment: r <= 5 and steps <= 6.
struct SearchSpec {
    int64_t r;
    int64_t g;
    int64_t d0;
    std::vector<int64_t> initial_s;  // s_1..s_{r-1} at degree d0
    int64_t steps;
    int64_t controlled_rank;  // forced to type I on every step
    bool cap_filtered;        // restrict type II to cap-admissible choices
};

// Minimum value of each s_i reachable after `steps` transformations when
// an adversary picks the type at every rank except the controlled one.
// Result is indexed like the profile (entry i-1 for sub-rank i).
std::vector<int64_t> min_adversarial(const SearchSpec& spec);

// Admissible stratum values recovered from a literal subbundle-degree
// sweep: s = k*d - r*degF for integer degF, kept when 0 < s <= s_max.
std::vector<int64_t> brute_valid_s(int64_t g, int64_t r, int64_t d, int64_t k);

// Integer optimization behind the nested lower bounds: the least Segre
// pair value of a sub-subbundle (resp. quotient subbundle) compatible
// with stability of the ambient bundle. Sides follow the same index
// ranges as core::nested_bounds; an out-of-range side is absent.
struct BruteNested {
    std::optional<int64_t> sub_min;
    std::optional<int64_t> quot_min;
};
BruteNested brute_nested(int64_t r, int64_t d, int64_t k, int64_t s, int64_t nu);

// Seeded randomized sweep over profiles and step sequences asserting the
// machine invariants: congruence preservation, duality conjugation, and
// the cap-filtered reachability bound. Same seed, same report.
struct FuzzReport {
    std::uint64_t seed{0};
    int64_t trials{0};
    int64_t congruence_checks{0};
    int64_t duality_checks{0};
    int64_t cap_checks{0};
    int64_t failures{0};

    bool passed() const { return failures == 0; }
};
FuzzReport fuzz_congruence(std::uint64_t seed, int64_t trials);

}  // namespace segre::oracle
