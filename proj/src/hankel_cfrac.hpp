#pragma once

#include <string>
#include <vector>

#include "determinant.hpp"

namespace sumsq {

// 1 + a1 w/(1 + b1 w) - a2 w^2/(1 + b2 w) - ...
template <class T>
struct AssocCF {
    std::vector<T> alphas;
    std::vector<T> betas;
    int levels() const { return static_cast<int>(alphas.size()); }
};

// 1 + g1 w/(1 + g2 w/(1 + ...))
template <class T>
struct RegCF {
    std::vector<T> gammas;
    int levels() const { return static_cast<int>(gammas.size()); }
};

// Index 0 of each table holds the n = 0 convention (H = 1, chi = 0).
template <class T>
struct HankelTable {
    std::vector<T> H1, H2, Chi;
};

namespace detail {

// Truncated series over a ring whose constant term is 1.
template <class T>
std::vector<T> series_inverse_unit(const std::vector<T>& a) {
    size_t n = a.size();
    std::vector<T> r(n, zero_like(a[0]));
    if (n == 0) return r;
    r[0] = one_like(a[0]);
    for (size_t i = 1; i < n; ++i) {
        T s = zero_like(a[0]);
        for (size_t j = 1; j <= i; ++j) s += a[j] * r[i - j];
        r[i] = -s;
    }
    return r;
}

template <class T>
std::vector<T> series_mul(const std::vector<T>& a, const std::vector<T>& b) {
    size_t n = a.size();
    std::vector<T> r(n, zero_like(a[0]));
    for (size_t i = 0; i < n; ++i) {
        if (ring_is_zero(a[i])) continue;
        for (size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// num * w^shift / (1 + den * w + tail), truncated to n terms.
template <class T>
std::vector<T> cf_step(const T& num, int shift, const T& den, const std::vector<T>& tail) {
    size_t n = tail.size();
    std::vector<T> d = tail;
    d[0] += one_like(num);
    if (n > 1) d[1] += den;
    std::vector<T> inv = series_inverse_unit(d);
    std::vector<T> r(n, zero_like(num));
    for (size_t i = static_cast<size_t>(shift); i < n; ++i) r[i] = num * inv[i - shift];
    return r;
}

}  // namespace detail

// Direct determinants H_j^{(1)} and chi_j for j <= n, and H_j^{(2)} for
// j <= n when the sequence is long enough.
template <class T>
HankelTable<T> hankel_table(const std::vector<T>& seq, int n) {
    HankelTable<T> t;
    for (int j = 0; j <= n; ++j) {
        t.H1.push_back(hankel(seq, j, 1));
        t.Chi.push_back(chi(seq, j));
        if (static_cast<int>(seq.size()) >= 2 * j + 1) t.H2.push_back(hankel(seq, j, 2));
    }
    return t;
}

// Heilermann: alpha_n = H_n H_{n-2} / H_{n-1}^2, beta_n = chi_{n-1}/H_{n-1} - chi_n/H_n.
template <class T>
AssocCF<T> series_to_assoc(const std::vector<T>& seq, int n) {
    detail::require_length(seq.size(), static_cast<size_t>(2 * n + 1));
    AssocCF<T> cf;
    std::vector<T> H{one_like(seq.back())};
    std::vector<T> X{zero_like(seq.back())};
    for (int j = 1; j <= n; ++j) {
        H.push_back(hankel(seq, j, 1));
        if (ring_is_zero(H.back())) throw Error(ErrorKind::Degenerate, "vanishing Hankel determinant", j);
        X.push_back(chi(seq, j));
        T hm2 = j >= 2 ? H[j - 2] : one_like(seq.back());
        cf.alphas.push_back(ring_div(H[j] * hm2, H[j - 1] * H[j - 1]));
        cf.betas.push_back(ring_div(X[j - 1], H[j - 1]) - ring_div(X[j], H[j]));
    }
    return cf;
}

// gamma_1 = H_1^{(1)}, gamma_{2m} = -H_{m-1}^{(1)} H_m^{(2)} / (H_m^{(1)} H_{m-1}^{(2)}),
// gamma_{2m+1} = -H_{m+1}^{(1)} H_{m-1}^{(2)} / (H_m^{(1)} H_m^{(2)}).
template <class T>
RegCF<T> series_to_reg(const std::vector<T>& seq, int n) {
    detail::require_length(seq.size(), static_cast<size_t>(n + 1));
    RegCF<T> cf;
    const T& like = seq.back();
    std::vector<T> H1{one_like(like)}, H2{one_like(like)};
    auto h1 = [&](int j) -> const T& {
        while (static_cast<int>(H1.size()) <= j) {
            int i = static_cast<int>(H1.size());
            H1.push_back(hankel(seq, i, 1));
            if (ring_is_zero(H1.back())) throw Error(ErrorKind::Degenerate, "vanishing Hankel determinant", i);
        }
        return H1[j];
    };
    auto h2 = [&](int j) -> const T& {
        while (static_cast<int>(H2.size()) <= j) {
            int i = static_cast<int>(H2.size());
            H2.push_back(hankel(seq, i, 2));
            if (ring_is_zero(H2.back())) throw Error(ErrorKind::Degenerate, "vanishing shifted Hankel determinant", i);
        }
        return H2[j];
    };
    for (int g = 1; g <= n; ++g) {
        if (g == 1) {
            cf.gammas.push_back(h1(1));
        } else if (g % 2 == 0) {
            int m = g / 2;
            cf.gammas.push_back(-ring_div(h1(m - 1) * h2(m), h1(m) * h2(m - 1)));
        } else {
            int m = g / 2;
            cf.gammas.push_back(-ring_div(h1(m + 1) * h2(m - 1), h1(m) * h2(m)));
        }
    }
    return cf;
}

// Coefficients 0 .. terms-1 of the continued fraction, bottom-up.
template <class T>
std::vector<T> assoc_to_series(const AssocCF<T>& cf, int terms) {
    int L = cf.levels();
    if (L == 0 || terms > 2 * L + 1)
        throw Error(ErrorKind::Length, "not enough continued fraction levels", terms);
    const T& like = cf.alphas[0];
    std::vector<T> tail(terms, zero_like(like));
    for (int j = L - 1; j >= 1; --j) tail = detail::cf_step(T(-cf.alphas[j]), 2, cf.betas[j], tail);
    std::vector<T> r = detail::cf_step(cf.alphas[0], 1, cf.betas[0], tail);
    r[0] += one_like(like);
    return r;
}

template <class T>
std::vector<T> reg_to_series(const RegCF<T>& cf, int terms) {
    int L = cf.levels();
    if (L == 0 || terms > L + 1) throw Error(ErrorKind::Length, "not enough continued fraction levels", terms);
    const T& like = cf.gammas[0];
    T zero = zero_like(like);
    std::vector<T> tail(terms, zero);
    for (int j = L - 1; j >= 0; --j) tail = detail::cf_step(cf.gammas[j], 1, zero, tail);
    tail[0] += one_like(like);
    return tail;
}

// Even part: alpha_1 = g1, beta_1 = g2, alpha_n = g_{2n-2} g_{2n-1}, beta_n = g_{2n-1} + g_{2n}.
template <class T>
AssocCF<T> reg_even_part(const RegCF<T>& cf) {
    AssocCF<T> a;
    const auto& g = cf.gammas;
    int L = cf.levels() / 2;
    for (int n = 1; n <= L; ++n) {
        if (n == 1) {
            a.alphas.push_back(g[0]);
            a.betas.push_back(g[1]);
        } else {
            a.alphas.push_back(g[2 * n - 3] * g[2 * n - 2]);
            a.betas.push_back(g[2 * n - 2] + g[2 * n - 1]);
        }
    }
    return a;
}

// H_n = prod alpha_r^{n+1-r}, chi_n = -(beta_1 + .. + beta_n) H_n.
template <class T>
HankelTable<T> hankel_products(const AssocCF<T>& cf) {
    HankelTable<T> t;
    const T& like = cf.alphas.empty() ? T() : cf.alphas[0];
    T one = one_like(like);
    t.H1.push_back(one);
    t.Chi.push_back(zero_like(like));
    T prefix = one;  // alpha_1 ... alpha_n
    T bsum = zero_like(like);
    for (int n = 1; n <= cf.levels(); ++n) {
        prefix = prefix * cf.alphas[n - 1];
        t.H1.push_back(t.H1.back() * prefix);
        bsum = bsum + cf.betas[n - 1];
        t.Chi.push_back(-(bsum * t.H1.back()));
    }
    return t;
}

// Adds H_n^{(2)} = (-1)^n H_n^{(1)} prod_{r<=n} gamma_{2r}.
template <class T>
HankelTable<T> hankel_products(const RegCF<T>& cf) {
    HankelTable<T> t = hankel_products(reg_even_part(cf));
    T p = one_like(cf.gammas.empty() ? T() : cf.gammas[0]);
    t.H2.push_back(p);
    for (int n = 1; 2 * n <= cf.levels() && n < static_cast<int>(t.H1.size()); ++n) {
        p = p * cf.gammas[2 * n - 1];
        T v = t.H1[n] * p;
        t.H2.push_back(n % 2 ? T(-v) : v);
    }
    return t;
}

// Closed-form continued fractions of Jacobi elliptic quotients.
enum class CFShape { Assoc, Regular };

struct CFFamily {
    const char* name;     // "sn", "sc/d", or "reg:cn" for the regular C-fractions
    const char* series;   // elliptic family tag whose coefficients are the moments
    CFShape shape;
    int shift;            // c_m = (series)_{m + shift}
};

const std::vector<CFFamily>& cf_families();
const CFFamily& cf_family(const std::string& name);

// Level n >= 1. For associated fractions alpha is the level numerator
// coefficient (the displayed partial numerator is -alpha w^2 for n >= 2,
// alpha w for n = 1) and beta the denominator coefficient. For regular
// fractions alpha is gamma_n and beta is zero.
struct CFLevel {
    KPoly alpha;
    KPoly beta;
};

CFLevel cf_closed_form(const std::string& name, int n);

// c_0 = 1, c_m from the Maclaurin coefficients of the family, m <= terms.
std::vector<KPoly> cf_moments(const std::string& name, int terms);

// Displayed level in x: numerator and denominator strings.
std::string cf_level_numerator(const std::string& name, int n);
std::string cf_level_denominator(const std::string& name, int n);

}  // namespace sumsq
