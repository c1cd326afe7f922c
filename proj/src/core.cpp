#include "segre/core.hpp"

namespace segre::core {

void validate_genus(int64_t g) {
    if (g < 2) throw domain_error("genus must be >= 2");
    if (g > kMaxGenus) throw guard_error("genus exceeds supported window (g <= 1e6)");
}

void validate_rank(int64_t r) {
    if (r < 2) throw domain_error("rank must be >= 2 (rank 1 has no proper subbundles)");
    if (r > kMaxRank) throw guard_error("rank exceeds supported window (r <= 64)");
}

void validate_degree(int64_t d) {
    if (d < -kMaxDegreeAbs || d > kMaxDegreeAbs)
        throw guard_error("degree exceeds supported window (|d| <= 1e9)");
}

void validate_subrank(int64_t r, int64_t k) {
    if (k < 1 || k > r - 1) throw domain_error("sub-rank must satisfy 1 <= k <= r-1");
}

int64_t SubbundlePair::pair_value() const {
    return segre_pair(bundle.r, bundle.d, k, deg_f);
}

int64_t segre_pair(int64_t r, int64_t d, int64_t k, int64_t deg_f) {
    validate_rank(r);
    validate_degree(d);
    validate_subrank(r, k);
    return checked_sub(checked_mul(k, d), checked_mul(r, deg_f));
}

int64_t hirschowitz_bound(int64_t g, int64_t r, int64_t k) {
    validate_genus(g);
    validate_rank(r);
    validate_subrank(r, k);
    return checked_add(checked_mul(checked_mul(k, r - k), g - 1), r - 1);
}

int64_t mukai_sakai_bound(int64_t g, int64_t r, int64_t k) {
    validate_genus(g);
    validate_rank(r);
    validate_subrank(r, k);
    return checked_mul(checked_mul(k, r - k), g);
}

namespace detail {

int64_t epsilon_k(int64_t g, int64_t r, int64_t d, int64_t k) {
    const int64_t base = checked_mul(checked_mul(k, r - k), g - 1);
    return mod_floor(checked_sub(checked_mul(k, d), base), r);
}

int64_t s_max(int64_t g, int64_t r, int64_t d, int64_t k) {
    const int64_t base = checked_mul(checked_mul(k, r - k), g - 1);
    return checked_add(base, epsilon_k(g, r, d, k));
}

}  // namespace detail

int64_t epsilon_k(int64_t g, int64_t r, int64_t d, int64_t k) {
    validate_genus(g);
    validate_rank(r);
    validate_degree(d);
    validate_subrank(r, k);
    return detail::epsilon_k(g, r, d, k);
}

int64_t s_max(int64_t g, int64_t r, int64_t d, int64_t k) {
    validate_genus(g);
    validate_rank(r);
    validate_degree(d);
    validate_subrank(r, k);
    return detail::s_max(g, r, d, k);
}

std::vector<int64_t> valid_s(int64_t g, int64_t r, int64_t d, int64_t k) {
    const int64_t smax = s_max(g, r, d, k);
    int64_t s0 = mod_floor(checked_mul(k, d), r);
    if (s0 == 0) s0 = r;  // smallest positive representative
    std::vector<int64_t> out;
    for (int64_t s = s0; s <= smax; s = checked_add(s, r)) out.push_back(s);
    return out;
}

DualParams dual_params(int64_t r, int64_t d, int64_t k) {
    validate_rank(r);
    validate_degree(d);
    validate_subrank(r, k);
    return DualParams{r, checked_neg(d), r - k};
}

int64_t generic_dim(int64_t g, int64_t r) {
    validate_genus(g);
    validate_rank(r);
    return checked_add(checked_mul(checked_mul(r, r), g - 1), 1);
}

int64_t stratum_dim(int64_t g, int64_t r, int64_t d, int64_t k, int64_t s) {
    const int64_t smax = s_max(g, r, d, k);
    if (s <= 0 || s > smax) throw domain_error("s outside the window 0 < s <= s_max");
    if (mod_floor(checked_sub(s, checked_mul(k, d)), r) != 0)
        throw domain_error("s incompatible with k*d mod r");
    const int64_t base = checked_mul(checked_mul(k, r - k), g - 1);
    if (s >= base) return generic_dim(g, r);
    const int64_t coeff = checked_sub(checked_add(checked_mul(r, r), checked_mul(k, k)),
                                      checked_mul(r, k));
    return checked_add(checked_add(checked_mul(coeff, g - 1), s), 1);
}

int64_t maximal_locus_dim(int64_t g, int64_t r, int64_t k, int64_t s) {
    validate_genus(g);
    validate_rank(r);
    validate_subrank(r, k);
    const int64_t base = checked_mul(checked_mul(k, r - k), g - 1);
    const int64_t diff = checked_sub(s, base);
    return diff > 0 ? diff : 0;
}

NestedBounds nested_bounds(int64_t r, int64_t k, int64_t s, int64_t nu) {
    validate_rank(r);
    validate_subrank(r, k);
    if (s < 1) throw domain_error("nested bounds assume a stable ambient bundle (s >= 1)");
    const bool sub_side = (nu >= 1 && nu <= k - 1);
    const bool quot_side = (nu >= 1 && nu <= r - k - 1);
    if (!sub_side && !quot_side)
        throw domain_error("nu outside both index ranges [1,k-1] and [1,r-k-1]");

    NestedBounds nb;
    nb.nu = nu;
    if (sub_side) {
        const Rat b = Rat(checked_sub(k, checked_mul(nu, s)), r);
        nb.sub_bound = b;
        nb.sub_bound_int = b.ceil();
    }
    if (quot_side) {
        const int64_t rk = r - k;
        const Rat b = Rat(checked_sub(rk, checked_mul(rk - nu, s)), r);
        nb.quot_bound = b;
        nb.quot_bound_int = b.ceil();
    }
    return nb;
}

std::vector<StratumDescriptor> strata_table(int64_t g, int64_t r, int64_t d) {
    validate_genus(g);
    validate_rank(r);
    validate_degree(d);
    std::vector<StratumDescriptor> rows;
    const int64_t gdim = generic_dim(g, r);
    for (int64_t k = 1; k <= r - 1; ++k) {
        const int64_t eps = detail::epsilon_k(g, r, d, k);
        const int64_t base = checked_mul(checked_mul(k, r - k), g - 1);
        for (int64_t s : valid_s(g, r, d, k)) {
            StratumDescriptor row;
            row.g = g;
            row.r = r;
            row.d = d;
            row.k = k;
            row.s = s;
            row.eps = eps;
            row.d1 = floor_div(checked_sub(checked_mul(k, d), s), r);
            row.dim = stratum_dim(g, r, d, k, s);
            row.codim = checked_sub(gdim, row.dim);
            row.locus_dim = maximal_locus_dim(g, r, k, s);
            row.is_generic = (s >= base);
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace segre::core
