#include <sumsq/sumsq.h>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Usage {
    std::string msg;
};

// Owned C string from the library.
struct CStr {
    char* p = nullptr;
    ~CStr() { sumsq_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

void check(sumsq_status s) {
    if (s != SUMSQ_OK) throw Usage{std::string(sumsq_status_name(s)) + ": " + sumsq_last_error()};
}

std::string call_str(const std::function<sumsq_status(char**)>& f) {
    CStr c;
    check(f(&c.p));
    return c.str();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        if (!l.empty()) out.push_back(l);
    return out;
}

long default_order() {
    if (const char* e = std::getenv("SUMSQ_DEFAULT_ORDER")) {
        try {
            return std::stol(e);
        } catch (const std::exception&) {
            throw Usage{"SUMSQ_DEFAULT_ORDER is not an integer"};
        }
    }
    return 200;
}

struct Options {
    std::optional<long> order;
    std::optional<long> order_q;
    std::string format = "text";
    int jobs = 1;

    long resolved_order() const {
        if (order && order_q) throw Usage{"--order and --order-q are exclusive"};
        long o = order ? *order : order_q ? 4 * *order_q : default_order();
        if (o < 4) throw Usage{"order must be at least 4 quarter units"};
        return o;
    }
};

void add_common(CLI::App* app, Options& o, bool with_order) {
    app->add_option("--format", o.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    if (with_order) {
        app->add_option("--order", o.order, "truncation order in quarter units (x = q^{1/4})");
        app->add_option("--order-q", o.order_q, "truncation order in powers of q");
        app->add_option("--jobs", o.jobs, "worker threads for suites")->check(CLI::PositiveNumber);
    }
}

// ---- rs / ts ----

bool formula_supports(int s) { return s == 4 || s == 8 || s == 16 || s == 24; }

bool schur_supports(int s) {
    for (int n = 1; 4 * n * n <= s; ++n)
        if (4 * n * n == s || 4 * n * (n + 1) == s) return true;
    return false;
}

int run_count(bool squares, int s, long N, const std::string& method, bool check_flag, const Options& o) {
    auto value = [&](const std::string& m) {
        return call_str([&](char** out) {
            return squares ? sumsq_rs(s, N, m.c_str(), out) : sumsq_ts(s, N, m.c_str(), out);
        });
    };
    std::string m = method;
    if (m.empty()) {
        if (squares)
            m = formula_supports(s) ? "formula" : schur_supports(s) ? "schur" : "theta";
        else
            m = "theta";
    }
    std::string v = value(m);
    std::optional<std::string> other;
    std::string other_method;
    if (check_flag) {
        other_method = m == "oracle" ? (squares && formula_supports(s) ? "formula" : "theta") : "oracle";
        other = value(other_method);
    }
    const char* what = squares ? "r" : "t";
    if (o.format == "json") {
        nlohmann::json j = {{"s", s}, {"N", N}, {"method", m}, {"value", v}};
        if (other) j["check"] = {{"method", other_method}, {"value", *other}, {"agree", *other == v}};
        std::cout << j.dump() << "\n";
    } else if (o.format == "csv") {
        std::cout << "s,N,method,value\n" << s << "," << N << "," << m << "," << v << "\n";
        if (other) std::cout << s << "," << N << "," << other_method << "," << *other << "\n";
    } else {
        std::cout << v << "\n";
        if (other && *other != v)
            std::cerr << what << "_" << s << "(" << N << "): " << m << " gives " << v << ", " << other_method
                      << " gives " << *other << "\n";
    }
    return other && *other != v ? kMismatch : kOk;
}

// ---- verify ----

struct ReportsDeleter {
    void operator()(sumsq_reports* r) const { sumsq_reports_free(r); }
};
using Reports = std::unique_ptr<sumsq_reports, ReportsDeleter>;

int run_verify(const std::string& id, const std::string& suite, int n, const Options& o) {
    if (id.empty() == suite.empty()) throw Usage{"give exactly one of --id or --suite"};
    long order = o.resolved_order();
    sumsq_reports* raw = nullptr;
    sumsq_status st = id.empty() ? sumsq_verify_suite(suite.c_str(), n, order, o.jobs, &raw)
                                 : sumsq_verify_id(id.c_str(), n, order, &raw);
    check(st);
    Reports r(raw);
    size_t count = sumsq_reports_count(r.get());
    nlohmann::json arr = nlohmann::json::array();
    if (o.format == "csv") std::cout << "id,status,order,mismatch_e,lhs,rhs\n";
    for (size_t i = 0; i < count; ++i) {
        if (o.format == "text") {
            std::cout << call_str([&](char** out) { return sumsq_reports_line(r.get(), i, out); }) << "\n";
            continue;
        }
        auto j = nlohmann::json::parse(call_str([&](char** out) { return sumsq_reports_json(r.get(), i, out); }));
        if (o.format == "json") {
            arr.push_back(j);
        } else {
            const auto& m = j["first_mismatch"];
            std::cout << j["id"].get<std::string>() << "," << j["status"].get<std::string>() << ","
                      << j["order"].get<long>() << ",";
            if (!m.is_null())
                std::cout << m["e"].get<long>() << "," << m["lhs"].get<std::string>() << ","
                          << m["rhs"].get<std::string>();
            else
                std::cout << ",,";
            std::cout << "\n";
        }
    }
    if (o.format == "json") std::cout << arr.dump(2) << "\n";
    return sumsq_reports_all_pass(r.get()) ? kOk : kMismatch;
}

// ---- series ----

struct SeriesDeleter {
    void operator()(sumsq_series* s) const { sumsq_series_free(s); }
};

int run_series(const std::string& name, const std::string& family, unsigned power, const std::string& transform,
               const Options& o) {
    if (name.empty() == family.empty()) throw Usage{"give exactly one of --name or --family"};
    long order = o.resolved_order();
    sumsq_series* raw = nullptr;
    check(name.empty() ? sumsq_series_family(family.c_str(), power, transform.c_str(), order, &raw)
                       : sumsq_series_theta(name.c_str(), power, transform.c_str(), order, &raw));
    std::unique_ptr<sumsq_series, SeriesDeleter> s(raw);
    if (o.format == "json") {
        std::cout << call_str([&](char** out) { return sumsq_series_to_json(s.get(), out); }) << "\n";
        return kOk;
    }
    std::vector<std::string> c(static_cast<size_t>(order));
    bool integral_grid = true;
    for (long e = 0; e < order; ++e) {
        c[e] = call_str([&](char** out) { return sumsq_series_coeff(s.get(), e, out); });
        if (e % 4 != 0 && c[e] != "0") integral_grid = false;
    }
    if (o.format == "csv") {
        std::cout << "e_quarter,coeff\n";
        for (long e = 0; e < order; ++e)
            if (c[e] != "0") std::cout << e << "," << c[e] << "\n";
    } else if (integral_grid) {
        // q-exponents 0, 1, 2, ...
        for (long e = 0; e < order; e += 4) std::cout << (e ? "," : "") << c[e];
        std::cout << "\n";
    } else {
        bool first = true;
        for (long e = 0; e < order; ++e) {
            if (c[e] == "0") continue;
            std::cout << (first ? "" : " + ") << c[e] << "*q^(" << e << "/4)";
            first = false;
        }
        std::cout << (first ? "0" : "") << "\n";
    }
    return kOk;
}

// ---- cfrac ----

int run_cfrac(const std::string& family, int levels, const Options& o) {
    if (family.empty()) {
        for (const auto& f : lines(call_str([](char** out) { return sumsq_cfrac_families(out); })))
            std::cout << f << "\n";
        return kOk;
    }
    if (levels < 1) throw Usage{"--levels must be >= 1"};
    nlohmann::json arr = nlohmann::json::array();
    if (o.format == "csv") std::cout << "level,alpha,beta,numerator,denominator\n";
    for (int n = 1; n <= levels; ++n) {
        auto j = nlohmann::json::parse(
            call_str([&](char** out) { return sumsq_cfrac_level(family.c_str(), n, out); }));
        if (o.format == "json") {
            arr.push_back(j);
        } else if (o.format == "csv") {
            std::cout << n << "," << j["alpha"].get<std::string>() << "," << j["beta"].get<std::string>() << ","
                      << j["numerator"].get<std::string>() << "," << j["denominator"].get<std::string>() << "\n";
        } else {
            std::cout << "level " << n << ": alpha = " << j["alpha"].get<std::string>()
                      << ", beta = " << j["beta"].get<std::string>() << "\n";
        }
    }
    if (o.format == "json") std::cout << nlohmann::json{{"family", family}, {"levels", arr}}.dump(2) << "\n";
    return kOk;
}

// ---- tau ----

int run_tau(long n, const std::string& method, const Options& o) {
    std::string v = call_str([&](char** out) { return sumsq_tau(n, method.c_str(), out); });
    if (o.format == "json")
        std::cout << nlohmann::json{{"n", n}, {"method", method}, {"value", v}}.dump() << "\n";
    else if (o.format == "csv")
        std::cout << "n,method,value\n" << n << "," << method << "," << v << "\n";
    else
        std::cout << v << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series identity engine for sums of squares and triangular numbers"};
    app.require_subcommand(1);
    Options o;

    int s = 0;
    long N = 0;
    std::string method;
    bool check_flag = false;
    auto* rs = app.add_subcommand("rs", "number of representations as a sum of s squares");
    rs->add_option("--s", s, "number of squares")->required();
    rs->add_option("--n", N, "the integer represented")->required();
    rs->add_option("--method", method, "oracle | formula | theta | schur");
    rs->add_flag("--check", check_flag, "compare with a second method");
    add_common(rs, o, false);

    auto* ts = app.add_subcommand("ts", "number of representations as a sum of s triangular numbers");
    ts->add_option("--s", s, "number of triangular numbers")->required();
    ts->add_option("--n", N, "the integer represented")->required();
    ts->add_option("--method", method, "oracle | theta | schur");
    ts->add_flag("--check", check_flag, "compare with a second method");
    add_common(ts, o, false);

    std::string id, suite;
    int n = 1;
    auto* verify = app.add_subcommand("verify", "verify identities by id or suite");
    verify->add_option("--id", id, "identity id");
    verify->add_option("--suite", suite, "suite name");
    verify->add_option("--n", n, "parameter n (m for elliptic ids, largest size for determinants)");
    add_common(verify, o, true);

    auto* suites = app.add_subcommand("suites", "list suite names");

    std::string name, family, transform = "plain";
    unsigned power = 1;
    auto* series = app.add_subcommand("series", "coefficients of a theta power or Lambert family");
    series->add_option("--name", name, "theta2 | theta3 | theta4 | triangle");
    series->add_option("--family", family, "Lambert family V, U, G, R, C, D, T, N, That, Chat, Ttilde");
    series->add_option("--power", power, "theta power, or family index s");
    series->add_option("--transform", transform, "plain | minus-q | q2 | sqrt-q");
    add_common(series, o, true);

    std::string cf_family;
    int levels = 3;
    auto* cfrac = app.add_subcommand("cfrac", "closed-form continued fraction levels");
    cfrac->add_option("--family", cf_family, "family name; omit to list families");
    cfrac->add_option("--levels", levels, "number of levels");
    add_common(cfrac, o, false);

    long tau_n = 1;
    std::string tau_method = "eta";
    auto* tau = app.add_subcommand("tau", "Ramanujan tau");
    tau->add_option("--n", tau_n, "argument")->required();
    tau->add_option("--method", tau_method, "eta | eq_1_15 | eq_1_29 | eq_1_30 | eq_1_31 | eq_1_32 | eq_1_33");
    add_common(tau, o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*rs) return run_count(true, s, N, method, check_flag, o);
        if (*ts) return run_count(false, s, N, method, check_flag, o);
        if (*verify) return run_verify(id, suite, n, o);
        if (*suites) {
            for (const auto& l : lines(call_str([](char** out) { return sumsq_suite_names(out); })))
                std::cout << l << "\n";
            return kOk;
        }
        if (*series) return run_series(name, family, power, transform, o);
        if (*cfrac) return run_cfrac(cf_family, levels, o);
        if (*tau) return run_tau(tau_n, tau_method, o);
    } catch (const Usage& u) {
        std::cerr << "error: " << u.msg << "\n";
        return kUsage;
    }
    return kUsage;
}
