#include "segre/oracle.hpp"

#include <limits>
#include <random>

namespace segre::oracle {

namespace {

// Residue scan for the generic value of s_k: try every eps in [0, r-1]
// until k(r-k)(g-1)+eps matches k*d mod r. Duplicates the library's
// closed form from the definition instead of calling it.
int64_t smax_scan(int64_t g, int64_t r, int64_t d, int64_t k) {
    const int64_t base = k * (r - k) * (g - 1);
    for (int64_t eps = 0; eps < r; ++eps) {
        if (mod_floor(base + eps - k * d, r) == 0) return base + eps;
    }
    throw domain_error("no residue found; r must be positive");
}

int64_t hirschowitz_scan(int64_t g, int64_t r, int64_t i) {
    return i * (r - i) * (g - 1) + (r - 1);
}

void dfs_min(std::vector<int64_t>& s, int64_t d, int64_t depth, const SearchSpec& spec,
             std::vector<int64_t>& mins) {
    const int64_t r = spec.r;
    if (depth == spec.steps) {
        for (size_t idx = 0; idx < s.size(); ++idx)
            if (s[idx] < mins[idx]) mins[idx] = s[idx];
        return;
    }
    const int64_t free_ranks = r - 2;  // every rank except the controlled one
    for (int64_t mask = 0; mask < (int64_t{1} << free_ranks); ++mask) {
        std::vector<int64_t> next(s.size());
        int64_t bit = 0;
        bool admissible = true;
        for (int64_t i = 1; i <= r - 1; ++i) {
            const size_t idx = static_cast<size_t>(i - 1);
            bool type_two = false;
            if (i != spec.controlled_rank) {
                type_two = (mask >> bit) & 1;
                ++bit;
            }
            if (type_two && spec.cap_filtered &&
                s[idx] + (r - i) > smax_scan(spec.g, r, d - 1, i)) {
                admissible = false;
                break;
            }
            next[idx] = type_two ? s[idx] + (r - i) : s[idx] - i;
        }
        if (admissible) dfs_min(next, d - 1, depth + 1, spec, mins);
    }
}

}  // namespace

std::vector<int64_t> min_adversarial(const SearchSpec& spec) {
    if (spec.r < 2 || spec.r > 5 || spec.steps < 0 || spec.steps > 6)
        throw domain_error("search domain too large (need r <= 5, steps <= 6)");
    if (spec.g < 2) throw domain_error("genus must be >= 2");
    if (spec.controlled_rank < 1 || spec.controlled_rank > spec.r - 1)
        throw domain_error("controlled rank must satisfy 1 <= k <= r-1");
    if (spec.initial_s.size() != static_cast<size_t>(spec.r - 1))
        throw domain_error("initial profile must list s_1..s_{r-1}");

    std::vector<int64_t> mins(spec.initial_s.size(), std::numeric_limits<int64_t>::max());
    std::vector<int64_t> s = spec.initial_s;
    dfs_min(s, spec.d0, 0, spec, mins);
    return mins;
}

std::vector<int64_t> brute_valid_s(int64_t g, int64_t r, int64_t d, int64_t k) {
    if (g < 2 || r < 2 || k < 1 || k > r - 1) throw domain_error("invalid (g, r, k)");
    const int64_t smax = smax_scan(g, r, d, k);
    std::vector<int64_t> out;
    // descending degF sweep produces ascending s values; the start value
    // floor((kd-1)/r) is the largest degree with positive pair value
    for (int64_t deg_f = floor_div(k * d - 1, r);; --deg_f) {
        const int64_t s = k * d - r * deg_f;
        if (s > smax) break;
        out.push_back(s);
    }
    return out;
}

BruteNested brute_nested(int64_t r, int64_t d, int64_t k, int64_t s, int64_t nu) {
    if (r < 2 || k < 1 || k > r - 1) throw domain_error("invalid (r, k)");
    if (mod_floor(k * d - s, r) != 0) throw domain_error("s must equal k*d mod r");
    const int64_t deg_f = (k * d - s) / r;

    BruteNested out;
    const int64_t abs_d = d < 0 ? -d : d;
    const int64_t abs_f = deg_f < 0 ? -deg_f : deg_f;
    const int64_t span = abs_d + abs_f + 4;  // covers every feasible degree

    if (nu >= 1 && nu <= k - 1) {
        // sub-subbundle F' of rank nu: stability of E forces
        // nu*d - r*degF' >= 1; minimize the pair value nu*degF - k*degF'.
        int64_t best = std::numeric_limits<int64_t>::max();
        for (int64_t deg_fp = -span; deg_fp <= span; ++deg_fp) {
            if (nu * d - r * deg_fp < 1) continue;
            const int64_t value = nu * deg_f - k * deg_fp;
            if (value < best) best = value;
        }
        out.sub_min = best;
    }
    if (nu >= 1 && nu <= r - k - 1) {
        // rank-nu subbundle of E/F pulls back to a rank k+nu subbundle of E
        // of degree degF + degQ'; stability of E bounds that degree.
        const int64_t deg_g = d - deg_f;
        int64_t best = std::numeric_limits<int64_t>::max();
        for (int64_t deg_qp = -span; deg_qp <= span; ++deg_qp) {
            if ((k + nu) * d - r * (deg_f + deg_qp) < 1) continue;
            const int64_t value = nu * deg_g - (r - k) * deg_qp;
            if (value < best) best = value;
        }
        out.quot_min = best;
    }
    return out;
}

namespace {

int64_t draw(std::mt19937_64& rng, int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

FuzzReport fuzz_congruence(std::uint64_t seed, int64_t trials) {
    if (trials < 0) throw domain_error("trials must be >= 0");
    FuzzReport rep;
    rep.seed = seed;
    rep.trials = trials;
    std::mt19937_64 rng(seed);

    using transform::SegreProfile;
    using transform::StepType;
    using transform::TransformStep;

    for (int64_t t = 0; t < trials; ++t) {
        const int64_t g = draw(rng, 2, 6);
        const int64_t r = draw(rng, 2, 5);
        const int64_t d = draw(rng, -8, 8);

        // arbitrary congruent profile
        std::vector<int64_t> s;
        for (int64_t i = 1; i <= r - 1; ++i) s.push_back(i * d + r * draw(rng, -3, 3));
        const SegreProfile p{g, r, d, s};

        TransformStep step{{}};
        for (int64_t i = 1; i <= r - 1; ++i)
            step.types.push_back(draw(rng, 0, 1) ? StepType::II : StepType::I);

        const SegreProfile p1 = transform::apply_step(p, step);
        ++rep.congruence_checks;
        bool ok = (p1.d == p.d - 1);
        for (int64_t i = 1; i <= r - 1; ++i)
            ok = ok && mod_floor(p1.at(i) - i * p1.d, r) == 0;
        if (!ok) ++rep.failures;

        // dual conjugation: the dual step carries dual(p1) back to dual(p)
        ++rep.duality_checks;
        const SegreProfile back =
            transform::apply_step(transform::dual_profile(p1), transform::dual_step(r, step));
        if (!(back == transform::dual_profile(p))) ++rep.failures;

        // cap-filtered walk from the general profile stays under Hirschowitz
        SegreProfile w = transform::general_profile(g, r, d);
        const int64_t walk = draw(rng, 1, 5);
        for (int64_t n = 0; n < walk; ++n) {
            TransformStep chosen{{}};
            for (int64_t i = 1; i <= r - 1; ++i) {
                const bool want_two = draw(rng, 0, 1) == 1;
                const bool two = want_two && transform::type_feasible(w, i, StepType::II);
                chosen.types.push_back(two ? StepType::II : StepType::I);
            }
            w = transform::apply_step(w, chosen);
            ++rep.cap_checks;
            for (int64_t i = 1; i <= r - 1; ++i)
                if (w.at(i) > hirschowitz_scan(g, r, i)) ++rep.failures;
        }
    }
    return rep;
}

}  // namespace segre::oracle
