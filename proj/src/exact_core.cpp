#include "exact_core.hpp"

#include <mutex>

namespace sumsq {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonUnit: return "NonUnitError";
        case ErrorKind::Grid: return "GridError";
        case ErrorKind::Bridge: return "BridgeError";
        case ErrorKind::Domain: return "DomainError";
        case ErrorKind::Length: return "LengthError";
        case ErrorKind::Degenerate: return "DegenerateError";
        case ErrorKind::Registry: return "RegistryError";
        case ErrorKind::Divisor: return "DivisorError";
    }
    return "Error";
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational frac(const Integer& n, const Integer& d) {
    if (d == 0) throw Error(ErrorKind::Domain, "zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw Error(ErrorKind::Domain, "not a rational: " + s);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

Rational pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw Error(ErrorKind::NonUnit, "zero to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Integer ipow(long base, unsigned long e) {
    Integer r;
    Integer b = base;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

namespace {

std::mutex memo_mutex;
std::vector<Rational> bern_memo{Rational(1)};
std::vector<Integer> euler_memo{Integer(1)};

}  // namespace

Rational bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(memo_mutex);
    while (bern_memo.size() <= n) {
        unsigned m = static_cast<unsigned>(bern_memo.size());
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rational s = 0;
        for (unsigned k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * bern_memo[k];
        Rational b = -s / Rational(m + 1);
        b.canonicalize();
        bern_memo.push_back(b);
    }
    return bern_memo[n];
}

Integer euler_number(unsigned n) {
    std::lock_guard<std::mutex> lock(memo_mutex);
    while (euler_memo.size() <= n) {
        unsigned m = static_cast<unsigned>(euler_memo.size());
        if (m % 2 == 1) {
            euler_memo.push_back(0);
            continue;
        }
        // sum_{k even} C(m,k) E_k = 0 for even m >= 2
        Integer s = 0;
        for (unsigned k = 0; k < m; k += 2) s += binomial(m, k) * euler_memo[k];
        euler_memo.push_back(-s);
    }
    return euler_memo[n];
}

Rational c_coeff(unsigned i) {
    if (i == 0) throw Error(ErrorKind::Domain, "c_coeff index must be >= 1");
    Rational v = Rational(ipow(2, 2 * i) - 1, 4 * i) * abs(bernoulli(2 * i));
    v.canonicalize();
    return (i % 2 == 1) ? v : Rational(-v);
}

Rational a_coeff(unsigned i) {
    if (i == 0) throw Error(ErrorKind::Domain, "a_coeff index must be >= 1");
    Rational v = Rational(ipow(2, 2 * i + 2) - 1, 4 * (i + 1)) * abs(bernoulli(2 * i + 2));
    v.canonicalize();
    return (i % 2 == 0) ? v : Rational(-v);
}

Rational b_coeff(unsigned i) {
    if (i == 0) throw Error(ErrorKind::Domain, "b_coeff index must be >= 1");
    Rational v(abs(euler_number(2 * i - 2)), 4);
    v.canonicalize();
    return (i % 2 == 1) ? v : Rational(-v);
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {}

bool Partition::valid() const {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

int Partition::length() const {
    int l = 0;
    for (int v : parts)
        if (v != 0) ++l;
    return l;
}

int Partition::size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

bool Partition::operator==(const Partition& o) const {
    size_t n = std::max(parts.size(), o.parts.size());
    for (size_t i = 0; i < n; ++i)
        if ((*this)[i] != o[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

}  // namespace sumsq
