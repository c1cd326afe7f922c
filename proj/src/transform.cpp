#include "segre/transform.hpp"

#include "segre/core.hpp"

namespace segre::transform {

SegreProfile make_profile(int64_t g, int64_t r, int64_t d, std::vector<int64_t> s) {
    core::validate_genus(g);
    core::validate_rank(r);
    core::validate_degree(d);
    if (s.size() != static_cast<size_t>(r - 1))
        throw domain_error("profile must list s_1..s_{r-1}");
    for (int64_t i = 1; i <= r - 1; ++i) {
        const int64_t si = s[static_cast<size_t>(i - 1)];
        if (mod_floor(checked_sub(si, checked_mul(i, d)), r) != 0)
            throw domain_error("profile violates s_i == i*d (mod r) at i=" + std::to_string(i));
    }
    return SegreProfile{g, r, d, std::move(s)};
}

SegreProfile general_profile(int64_t g, int64_t r, int64_t d) {
    core::validate_genus(g);
    core::validate_rank(r);
    core::validate_degree(d);
    std::vector<int64_t> s;
    s.reserve(static_cast<size_t>(r - 1));
    for (int64_t i = 1; i <= r - 1; ++i) s.push_back(core::detail::s_max(g, r, d, i));
    return SegreProfile{g, r, d, std::move(s)};
}

TransformStep uniform_step(int64_t r, StepType t) {
    core::validate_rank(r);
    return TransformStep{std::vector<StepType>(static_cast<size_t>(r - 1), t)};
}

void validate_step(int64_t r, const TransformStep& t) {
    if (t.types.size() != static_cast<size_t>(r - 1))
        throw domain_error("step must assign a type to every sub-rank 1..r-1");
}

SegreProfile apply_step(const SegreProfile& p, const TransformStep& t) {
    validate_step(p.r, t);
    SegreProfile q = p;
    q.d = checked_sub(p.d, 1);
    for (int64_t i = 1; i <= p.r - 1; ++i) {
        const size_t idx = static_cast<size_t>(i - 1);
        q.s[idx] = (t.types[idx] == StepType::I) ? checked_sub(p.s[idx], i)
                                                 : checked_add(p.s[idx], p.r - i);
    }
    return q;
}

SubbundleTransition subbundle_transition(int64_t r, int64_t d, int64_t k, int64_t deg_f,
                                         StepType type) {
    const int64_t pair = core::segre_pair(r, d, k, deg_f);
    SubbundleTransition out;
    if (type == StepType::I) {
        out.deg_f = deg_f;
        out.pair_value = checked_sub(pair, k);
    } else {
        out.deg_f = checked_sub(deg_f, 1);
        out.pair_value = checked_add(pair, r - k);
    }
    return out;
}

TransformStep dual_step(int64_t r, const TransformStep& t) {
    validate_step(r, t);
    TransformStep out{std::vector<StepType>(t.types.size())};
    for (int64_t i = 1; i <= r - 1; ++i)
        out.types[static_cast<size_t>(r - i - 1)] = flip(t.at(i));
    return out;
}

SegreProfile dual_profile(const SegreProfile& p) {
    SegreProfile q = p;
    q.d = checked_neg(p.d);
    for (int64_t i = 1; i <= p.r - 1; ++i)
        q.s[static_cast<size_t>(i - 1)] = p.at(p.r - i);
    return q;
}

bool type_feasible(const SegreProfile& p, int64_t i, StepType type) {
    core::validate_subrank(p.r, i);
    if (type == StepType::I) return true;
    const int64_t grown = checked_add(p.at(i), p.r - i);
    return grown <= core::detail::s_max(p.g, p.r, checked_sub(p.d, 1), i);
}

DimInterval locus_interval_step(DimInterval b, int64_t k, StepType type, int64_t r) {
    core::validate_subrank(r, k);
    const int64_t cap = checked_mul(k, r - k);
    if (b.lo < 0 || b.lo > b.hi || b.hi > cap)
        throw domain_error("interval outside [0, k(r-k)]");
    DimInterval out;
    if (type == StepType::I) {
        out.lo = b.lo - k > 0 ? b.lo - k : 0;
        out.hi = b.hi;
    } else {
        out.lo = 0;
        const int64_t grown = checked_add(b.hi, r - k);
        out.hi = grown < cap ? grown : cap;
    }
    return out;
}

LocusDimBounds locus_dim_step(const LocusDimBounds& b, int64_t k, StepType type) {
    core::validate_subrank(b.r, k);
    LocusDimBounds out = b;
    out.at[static_cast<size_t>(k - 1)] = locus_interval_step(b.interval(k), k, type, b.r);
    return out;
}

LocusDimBounds locus_dim_apply(const LocusDimBounds& b, const TransformStep& t) {
    validate_step(b.r, t);
    LocusDimBounds out = b;
    for (int64_t k = 1; k <= b.r - 1; ++k)
        out.at[static_cast<size_t>(k - 1)] = locus_interval_step(b.interval(k), k, t.at(k), b.r);
    return out;
}

}  // namespace segre::transform
