#include "sumsq/sumsq.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "elliptic_lambert.hpp"
#include "hankel_cfrac.hpp"
#include "hankel_evals.hpp"
#include "identities.hpp"
#include "lambert_theta.hpp"
#include "oracle.hpp"
#include "qx_json.hpp"
#include "schur.hpp"

struct sumsq_series {
    sumsq::QX value;
};

struct sumsq_reports {
    std::vector<sumsq::VerificationReport> items;
};

namespace {

using namespace sumsq;

thread_local std::string last_error;

sumsq_status status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonUnit: return SUMSQ_ERR_NON_UNIT;
        case ErrorKind::Grid: return SUMSQ_ERR_GRID;
        case ErrorKind::Bridge: return SUMSQ_ERR_BRIDGE;
        case ErrorKind::Domain: return SUMSQ_ERR_DOMAIN;
        case ErrorKind::Length: return SUMSQ_ERR_LENGTH;
        case ErrorKind::Degenerate: return SUMSQ_ERR_DEGENERATE;
        case ErrorKind::Registry: return SUMSQ_ERR_REGISTRY;
        case ErrorKind::Divisor: return SUMSQ_ERR_DIVISOR;
    }
    return SUMSQ_ERR_INTERNAL;
}

sumsq_status fail(sumsq_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

template <class F>
sumsq_status guarded(F&& f) {
    try {
        last_error.clear();
        f();
        return SUMSQ_OK;
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::exception& e) {
        return fail(SUMSQ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SUMSQ_ERR_INTERNAL, "unknown failure");
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void need(const void* p, const char* what) {
    if (!p) throw Error(ErrorKind::Domain, std::string(what) + " is null");
}

std::string str(const char* p, const char* what) {
    need(p, what);
    return p;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    for (const auto& x : v)
        if (x == s) return true;
    return false;
}

const std::string kEllipticSuite = "s2";
const std::string kEvalSuite = "s4";

std::vector<std::string> all_suites() {
    std::vector<std::string> out = identity_groups();
    out.push_back(kEllipticSuite);
    out.push_back(kEvalSuite);
    for (const auto& g : schur_groups()) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

VerificationReport verify_one(const std::string& id, int n, long order) {
    if (contains(elliptic_lambert_ids(), id)) return verify_elliptic_lambert(id, n, order);
    if (id == "EQ_4_69") return verify_euler_hankel(n);
    for (const auto& c : eval_cases())
        if (c.id == id) return verify_eval(c, n);
    for (const auto& r : schur_records())
        if (r.id == id) return verify_record(r, n, order);
    return verify_identity(id, n, order);
}

std::vector<VerificationReport> verify_group(const std::string& suite_name, int n, long order, int jobs) {
    std::vector<VerificationReport> out;
    if (suite_name == kEllipticSuite) {
        NomeBridge b = nome_bridge(order);
        for (const auto& id : elliptic_lambert_ids()) out.push_back(verify_elliptic_lambert(id, n, order, b));
    } else if (suite_name == kEvalSuite) {
        for (const auto& c : eval_cases()) out.push_back(verify_eval(c, n));
        out.push_back(verify_euler_hankel(n));
    } else if (contains(schur_groups(), suite_name)) {
        out = schur_suite(suite_name, n, order, jobs);
    } else {
        out = suite(suite_name, n, order, jobs);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
    return out;
}

const VerificationReport& at(const sumsq_reports* r, size_t i) {
    need(r, "report list");
    if (i >= r->items.size()) throw Error(ErrorKind::Length, "report index out of range", static_cast<long>(i));
    return r->items[i];
}

void check_order(long order) {
    if (order < 4) throw Error(ErrorKind::Domain, "order must be at least 4 quarter units", order);
}

bool is_square_kind(int s) {
    for (int n = 1; 4 * n * n <= s; ++n)
        if (4 * n * n == s || 4 * n * (n + 1) == s) return true;
    return false;
}

}  // namespace

extern "C" {

const char* sumsq_status_name(sumsq_status s) {
    switch (s) {
        case SUMSQ_OK: return "OK";
        case SUMSQ_ERR_NON_UNIT: return "NonUnitError";
        case SUMSQ_ERR_GRID: return "GridError";
        case SUMSQ_ERR_BRIDGE: return "BridgeError";
        case SUMSQ_ERR_DOMAIN: return "DomainError";
        case SUMSQ_ERR_LENGTH: return "LengthError";
        case SUMSQ_ERR_DEGENERATE: return "DegenerateError";
        case SUMSQ_ERR_REGISTRY: return "RegistryError";
        case SUMSQ_ERR_DIVISOR: return "DivisorError";
        case SUMSQ_ERR_ARGUMENT: return "ArgumentError";
        case SUMSQ_ERR_INTERNAL: return "InternalError";
    }
    return "UnknownStatus";
}

const char* sumsq_last_error(void) { return last_error.c_str(); }

void sumsq_string_free(char* s) { std::free(s); }

sumsq_status sumsq_series_theta(const char* name, unsigned power, const char* transform, long order,
                                sumsq_series** out) {
    if (!out) return fail(SUMSQ_ERR_ARGUMENT, "out is null");
    return guarded([&] {
        check_order(order);
        Theta w = parse_theta(str(name, "name"));
        Transform t = transform ? parse_transform(transform) : Transform::Plain;
        *out = new sumsq_series{theta_pow(w, t, power, order)};
    });
}

sumsq_status sumsq_series_family(const char* name, unsigned s, const char* transform, long order,
                                 sumsq_series** out) {
    if (!out) return fail(SUMSQ_ERR_ARGUMENT, "out is null");
    return guarded([&] {
        check_order(order);
        Family f = parse_family(str(name, "name"));
        Transform t = transform ? parse_transform(transform) : Transform::Plain;
        *out = new sumsq_series{named_family(f, s, order, t)};
    });
}

sumsq_status sumsq_series_from_json(const char* json, sumsq_series** out) {
    if (!out) return fail(SUMSQ_ERR_ARGUMENT, "out is null");
    return guarded([&] {
        auto j = nlohmann::json::parse(str(json, "json"));
        *out = new sumsq_series{qx_from_json(j)};
    });
}

long sumsq_series_order(const sumsq_series* s) { return s ? s->value.order() : 0; }

sumsq_status sumsq_series_coeff(const sumsq_series* s, long e, char** out) {
    if (!s || !out) return fail(SUMSQ_ERR_ARGUMENT, "null argument");
    if (e < 0 || e >= s->value.order()) return fail(SUMSQ_ERR_ARGUMENT, "exponent outside the known range");
    return guarded([&] { *out = dup(to_string(s->value[e])); });
}

sumsq_status sumsq_series_to_json(const sumsq_series* s, char** out) {
    if (!s || !out) return fail(SUMSQ_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = dup(qx_to_json(s->value).dump()); });
}

void sumsq_series_free(sumsq_series* s) { delete s; }

sumsq_status sumsq_verify_id(const char* id, int n, long order, sumsq_reports** out) {
    if (!out) return fail(SUMSQ_ERR_ARGUMENT, "out is null");
    return guarded([&] {
        check_order(order);
        auto r = verify_one(str(id, "id"), n, order);
        *out = new sumsq_reports{{std::move(r)}};
    });
}

sumsq_status sumsq_verify_suite(const char* suite_name, int n, long order, int jobs, sumsq_reports** out) {
    if (!out) return fail(SUMSQ_ERR_ARGUMENT, "out is null");
    return guarded([&] {
        check_order(order);
        std::string name = str(suite_name, "suite");
        if (!contains(all_suites(), name)) throw Error(ErrorKind::Registry, "unknown suite: " + name);
        *out = new sumsq_reports{verify_group(name, n, order, jobs < 1 ? 1 : jobs)};
    });
}

sumsq_status sumsq_suite_names(char** out) {
    if (!out) return fail(SUMSQ_ERR_ARGUMENT, "out is null");
    return guarded([&] {
        std::string s;
        for (const auto& g : all_suites()) s += g + "\n";
        *out = dup(s);
    });
}

size_t sumsq_reports_count(const sumsq_reports* r) { return r ? r->items.size() : 0; }

int sumsq_reports_all_pass(const sumsq_reports* r) {
    if (!r) return 0;
    for (const auto& x : r->items)
        if (!x.pass) return 0;
    return 1;
}

sumsq_status sumsq_reports_pass(const sumsq_reports* r, size_t i, int* pass) {
    if (!r || !pass || i >= r->items.size()) return fail(SUMSQ_ERR_ARGUMENT, "bad report index");
    *pass = r->items[i].pass ? 1 : 0;
    return SUMSQ_OK;
}

sumsq_status sumsq_reports_line(const sumsq_reports* r, size_t i, char** out) {
    if (!r || !out || i >= r->items.size()) return fail(SUMSQ_ERR_ARGUMENT, "bad report index");
    return guarded([&] { *out = dup(report_line(at(r, i))); });
}

sumsq_status sumsq_reports_json(const sumsq_reports* r, size_t i, char** out) {
    if (!r || !out || i >= r->items.size()) return fail(SUMSQ_ERR_ARGUMENT, "bad report index");
    return guarded([&] { *out = dup(report_to_json(at(r, i)).dump()); });
}

void sumsq_reports_free(sumsq_reports* r) { delete r; }

sumsq_status sumsq_rs(int s, long N, const char* method, char** out) {
    if (!out) return fail(SUMSQ_ERR_ARGUMENT, "out is null");
    return guarded([&] {
        if (s < 1) throw Error(ErrorKind::Domain, "s must be >= 1", s);
        if (N < 0) throw Error(ErrorKind::Domain, "N must be >= 0", N);
        std::string m = method ? method : "oracle";
        Integer v;
        if (m == "oracle") {
            v = oracle::count_representations(oracle::CountKind::Squares, s, N)[N];
        } else if (m == "formula") {
            v = N == 0 ? Integer(1) : r_formula(s, N);
        } else if (m == "theta") {
            Rational c = theta_pow(Theta::T3, Transform::Plain, static_cast<unsigned>(s), 4 * N + 4).q_coeff(N);
            v = c.get_num();
        } else if (m == "schur") {
            if (!is_square_kind(s)) throw Error(ErrorKind::Domain, "schur method supports s = 4n^2, 4n(n+1)", s);
            v = r_count_via_schur(s, N);
        } else {
            throw Error(ErrorKind::Domain, "unknown method: " + m);
        }
        *out = dup(to_string(v));
    });
}

sumsq_status sumsq_ts(int s, long N, const char* method, char** out) {
    if (!out) return fail(SUMSQ_ERR_ARGUMENT, "out is null");
    return guarded([&] {
        if (s < 1) throw Error(ErrorKind::Domain, "s must be >= 1", s);
        if (N < 0) throw Error(ErrorKind::Domain, "N must be >= 0", N);
        std::string m = method ? method : "oracle";
        Integer v;
        if (m == "oracle") {
            v = oracle::count_representations(oracle::CountKind::Triangles, s, N)[N];
        } else if (m == "theta") {
            v = theta_pow(Theta::Triangle, Transform::Plain, static_cast<unsigned>(s), 4 * N + 4).q_coeff(N).get_num();
        } else if (m == "schur") {
            v = t_count(s, N);
        } else {
            throw Error(ErrorKind::Domain, "unknown method: " + m);
        }
        *out = dup(to_string(v));
    });
}

sumsq_status sumsq_tau(long n, const char* method, char** out) {
    if (!out) return fail(SUMSQ_ERR_ARGUMENT, "out is null");
    return guarded([&] {
        TauMethod m = parse_tau_method(method ? method : "eta");
        *out = dup(to_string(tau(n, m)));
    });
}

sumsq_status sumsq_cfrac_level(const char* family, int n, char** out) {
    if (!out) return fail(SUMSQ_ERR_ARGUMENT, "out is null");
    return guarded([&] {
        std::string f = str(family, "family");
        CFLevel l = cf_closed_form(f, n);
        nlohmann::json j = {{"level", n},
                            {"alpha", l.alpha.str()},
                            {"beta", l.beta.str()},
                            {"numerator", cf_level_numerator(f, n)},
                            {"denominator", cf_level_denominator(f, n)}};
        *out = dup(j.dump());
    });
}

sumsq_status sumsq_cfrac_families(char** out) {
    if (!out) return fail(SUMSQ_ERR_ARGUMENT, "out is null");
    return guarded([&] {
        std::string s;
        for (const auto& f : cf_families()) s += std::string(f.name) + "\n";
        *out = dup(s);
    });
}

}  // extern "C"
