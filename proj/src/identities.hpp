#pragma once

#include <functional>
#include <string>
#include <vector>

#include "determinant.hpp"
#include "report.hpp"

namespace sumsq {

// Row-subset expansion of det(w) (or chi(w)) in terms of v and v + w.
// Sequences are 1-based like hankel(): v[0], w[0] are ignored. by_size[p] is
// the sum of det(M_S) over |S| = p, where row i of M_S is taken from v + w
// when i is in S and from v otherwise; rhs = sum_p (-1)^{n-p} by_size[p].
enum class ExpandVariant { Hankel, Chi };

template <class T>
struct InclExcl {
    T lhs;
    T rhs;
    std::vector<T> by_size;
};

namespace detail {

// Column offsets of row i: 0..n-1 for Hankel, 0..n-2 and n for chi.
inline std::vector<int> expand_columns(int n, ExpandVariant variant) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) cols.push_back(variant == ExpandVariant::Chi && j == n - 1 ? n : j);
    return cols;
}

}  // namespace detail

template <class T>
InclExcl<T> incl_excl_expand(const std::vector<T>& v, const std::vector<T>& w, int n,
                             ExpandVariant variant) {
    size_t need = static_cast<size_t>(variant == ExpandVariant::Hankel ? 2 * n : 2 * n + 1);
    detail::require_length(v.size(), need);
    detail::require_length(w.size(), need);
    const T& like = w.back();
    InclExcl<T> r;
    r.lhs = variant == ExpandVariant::Hankel ? hankel(w, n, 1) : chi(w, n);
    r.by_size.assign(static_cast<size_t>(n) + 1, zero_like(like));
    if (n == 0) {
        r.by_size[0] = one_like(like);
        r.rhs = r.lhs;
        return r;
    }
    std::vector<int> cols = detail::expand_columns(n, variant);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Matrix<T> m(n, std::vector<T>(n));
        int p = 0;
        for (int i = 0; i < n; ++i) {
            bool in = (mask >> i) & 1u;
            p += in;
            for (int j = 0; j < n; ++j) {
                size_t idx = static_cast<size_t>(i + 1 + cols[j]);
                m[i][j] = in ? v[idx] + w[idx] : v[idx];
            }
        }
        r.by_size[p] += detail::det_dispatch(std::move(m), like);
    }
    r.rhs = zero_like(like);
    for (int p = 0; p <= n; ++p) {
        if ((n - p) % 2 == 0)
            r.rhs += r.by_size[p];
        else
            r.rhs -= r.by_size[p];
    }
    return r;
}

struct NamedConstant {
    std::string name;
    Rational value;
};

struct IdentityRecord;
using SeriesBuilder = std::function<QX(const IdentityRecord&, int n, long order)>;

struct IdentityRecord {
    std::string id;
    // s1 | s5_hankel | s5_chi | s5_19 | s5_20_21
    std::string group;
    // Parametric identities accept n in [n_min, n_max]; fixed ones ignore n.
    bool parametric = true;
    int n_min = 1, n_max = 8;
    // Every number the builders read from the record; perturbing one of them
    // must break the identity.
    std::vector<NamedConstant> constants;
    std::string degenerate_conventions;
    SeriesBuilder lhs, rhs;

    const Rational& c(const std::string& name) const;
    Rational& c(const std::string& name);
};

// Sorted by id.
const std::vector<IdentityRecord>& identity_records();
const IdentityRecord& identity_record(const std::string& id);
const std::vector<std::string>& identity_groups();

VerificationReport verify_identity(const std::string& id, int n, long order);
VerificationReport verify_record(const IdentityRecord& r, int n, long order);

// Every record of the group in id order; parametric ones at the given n,
// fixed ones once. Work is spread over `jobs` threads.
std::vector<VerificationReport> suite(const std::string& group, int n, long order, int jobs = 1);

// r_s(n) for s = 4, 8 (Jacobi), 16, 24 (divisor sums plus convolutions).
Integer r_formula(int s, long n);
// r_s(0..n_max) with r_s(0) = 1.
std::vector<Integer> r_formula_table(int s, long n_max);

}  // namespace sumsq
