// Command-line front end: evaluation of the series and their companions,
// named identity verification, and radial asymptotic tables.
//
//   falsetheta eval   --what F|F1|F2|E1|E2|E1sum|E2sum|shimura|K ...
//   falsetheta verify --identity <name> ...
//   falsetheta asympt --which F1|F2 --cusp h/k --p P --order M [--fit]
//
// Output formats: json (default), plain, csv.  Exit codes: 0 success/PASS,
// 1 verification FAIL, 2 invalid usage or parameters, 3 numerical
// tolerance/convergence failure.
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "falsetheta/verify.hpp"

using namespace ft;

namespace {

// ---- argument plumbing -----------------------------------------------------

struct Args {
    std::map<std::string, std::string> kv;
    bool has(const std::string& k) const { return kv.count(k) != 0; }
    std::string get(const std::string& k, const std::string& dflt = "") const {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    }
};

[[noreturn]] void usage_error(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    std::fprintf(stderr,
                 "usage: falsetheta <eval|verify|asympt> [--flag value]...\n");
    std::exit(2);
}

Args parse_args(int argc, char** argv, int start) {
    Args a;
    for (int i = start; i < argc; ++i) {
        std::string s = argv[i];
        if (s.rfind("--", 0) != 0) usage_error("unexpected argument " + s);
        std::string key = s.substr(2);
        if (key == "fit") {  // boolean flag
            a.kv[key] = "1";
            continue;
        }
        if (i + 1 >= argc) usage_error("missing value for --" + key);
        a.kv[key] = argv[++i];
    }
    if (a.has("config")) {
        std::ifstream f(a.get("config"));
        if (!f) usage_error("cannot open config file " + a.get("config"));
        std::string line;
        while (std::getline(f, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string k = line.substr(0, eq), v = line.substr(eq + 1);
            if (!a.has(k)) a.kv[k] = v;  // explicit flags win over config
        }
    }
    return a;
}

long long parse_ll(const Args& a, const std::string& key) {
    if (!a.has(key)) usage_error("missing --" + key);
    try {
        return std::stoll(a.get(key));
    } catch (...) {
        usage_error("bad integer for --" + key);
    }
}

// complex literal "a+bi" / "a-bi" / "bi" / "a"
cplx parse_complex(const std::string& s) {
    std::string t = s;
    if (t.empty()) throw std::invalid_argument("empty complex literal");
    bool has_i = t.back() == 'i';
    if (!has_i) return {std::stod(t), 0.0};
    t.pop_back();
    // find split sign (not at position 0, not right after an exponent e/E)
    size_t split = std::string::npos;
    for (size_t j = 1; j < t.size(); ++j)
        if ((t[j] == '+' || t[j] == '-') && t[j - 1] != 'e' && t[j - 1] != 'E')
            split = j;
    if (split == std::string::npos)
        return {0.0, t.empty() || t == "+" ? 1.0 : (t == "-" ? -1.0
                                                             : std::stod(t))};
    double re = std::stod(t.substr(0, split));
    std::string im_s = t.substr(split);
    double im = (im_s == "+") ? 1.0 : (im_s == "-") ? -1.0 : std::stod(im_s);
    return {re, im};
}

Cusp parse_cusp(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("cusp must be h/k");
    return Cusp(std::stoll(s.substr(0, slash)),
                std::stoll(s.substr(slash + 1)));
}

Matrix2 parse_matrix(const std::string& s) {
    std::array<long long, 4> e{};
    std::stringstream ss(s);
    std::string tok;
    for (int j = 0; j < 4; ++j) {
        if (!std::getline(ss, tok, ',')) throw std::invalid_argument("matrix must be a,b,c,d");
        e[j] = std::stoll(tok);
    }
    return Matrix2{e[0], e[1], e[2], e[3]};
}

// ---- output ----------------------------------------------------------------

struct Report {
    cplx value{};
    double err_est = 0.0;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, std::string>> cutoffs;
    std::string status = "ok";
};

std::string fmt_d(double x) {
    char b[40];
    std::snprintf(b, sizeof b, "%.16g", x);
    return b;
}

void emit(const Report& r, const std::string& format) {
    if (format == "plain") {
        std::printf("value = %.16g %+.16gi\n", r.value.real(), r.value.imag());
        std::printf("err_est = %.3e\nstatus = %s\n", r.err_est,
                    r.status.c_str());
        for (auto& [k, v] : r.params) std::printf("%s = %s\n", k.c_str(), v.c_str());
        return;
    }
    if (format == "csv") {
        std::printf("value_re,value_im,err_est,status\n%.16g,%.16g,%.3e,%s\n",
                    r.value.real(), r.value.imag(), r.err_est,
                    r.status.c_str());
        return;
    }
    std::printf("{\"value\":{\"re\":%s,\"im\":%s},\"err_est\":%s,\"params\":{",
                fmt_d(r.value.real()).c_str(), fmt_d(r.value.imag()).c_str(),
                fmt_d(r.err_est).c_str());
    for (size_t j = 0; j < r.params.size(); ++j)
        std::printf("%s\"%s\":\"%s\"", j ? "," : "", r.params[j].first.c_str(),
                    r.params[j].second.c_str());
    std::printf("},\"cutoffs\":{");
    for (size_t j = 0; j < r.cutoffs.size(); ++j)
        std::printf("%s\"%s\":\"%s\"", j ? "," : "",
                    r.cutoffs[j].first.c_str(), r.cutoffs[j].second.c_str());
    std::printf("},\"status\":\"%s\"}\n", r.status.c_str());
}

// ---- subcommands -----------------------------------------------------------

cplx tau_from_args(const Args& a) {
    if (a.has("tau")) return parse_complex(a.get("tau"));
    if (a.has("cusp")) {
        double t = a.has("t") ? std::stod(a.get("t")) : 1e-2;
        return tau_radial(parse_cusp(a.get("cusp")), t);
    }
    usage_error("need --tau a+bi or --cusp h/k [--t t]");
}

int cmd_eval(const Args& a, const RunConfig& rc, const std::string& format) {
    std::string what = a.get("what");
    if (what.empty()) usage_error("eval needs --what");
    Report rep;
    rep.err_est = rc.tol;
    rep.params.push_back({"what", what});
    rep.cutoffs.push_back({"tol", fmt_d(rc.tol)});

    if (what == "K") {
        Cusp c = parse_cusp(a.get("cusp", "1/1"));
        rep.value = kontsevich_K(c);
        rep.err_est = 0.0;  // finite sum
        rep.params.push_back({"cusp", a.get("cusp", "1/1")});
        emit(rep, format);
        return 0;
    }
    if (what == "shimura") {
        long long nu = parse_ll(a, "nu"), A = parse_ll(a, "A");
        long long h = parse_ll(a, "h"), N = parse_ll(a, "N");
        if (nu != 0 && nu != 1) usage_error("--nu must be 0 or 1");
        cplx tau = tau_from_args(a);
        if (tau.imag() <= 0) usage_error("tau must be in the upper half-plane");
        rep.value = shimura_theta(int(nu), A, h, N, tau, rc.tol);
        emit(rep, format);
        return 0;
    }

    long long p = parse_ll(a, "p");
    if (p < 2) usage_error("p >= 2 required");
    cplx tau = tau_from_args(a);
    if (tau.imag() <= 0) usage_error("tau must be in the upper half-plane");
    rep.params.push_back({"p", std::to_string(p)});
    rep.params.push_back({"tau", fmt_d(tau.real()) + "+" +
                                     fmt_d(tau.imag()) + "i"});

    if (what == "F" || what == "F1" || what == "F2") {
        long long nmax = f_trunc_bound(p, tau.imag(), rc.tol);
        rep.cutoffs.push_back({"series_terms", std::to_string(nmax)});
        rep.value = what == "F"    ? eval_F(p, tau, rc.tol)
                    : what == "F1" ? eval_F1(p, tau, rc.tol)
                                   : eval_F2(p, tau, rc.tol);
    } else if (what == "E1sum" || what == "E2sum") {
        rep.value = what == "E1sum" ? E1_theta_sum(p, tau, rc.tol)
                                    : E2_theta_sum(p, tau, rc.tol);
        rep.cutoffs.push_back({"shell_stop", fmt_d(rc.tol * 0.01)});
    } else if (what == "E1" || what == "E2") {
        double qt = std::max(rc.tol, 1e-9);  // iterated quadrature floor
        rep.err_est = qt;
        rep.cutoffs.push_back({"quad_tol", fmt_d(qt)});
        rep.value = what == "E1" ? E1_eichler(p, tau / double(p), qt)
                                 : E2_eichler(p, tau / double(p), qt);
    } else {
        usage_error("unknown --what " + what);
    }
    emit(rep, format);
    return 0;
}

int cmd_verify(const Args& a, const std::string& format) {
    std::string id = a.get("identity");
    if (id.empty()) usage_error("verify needs --identity");
    long long p = a.has("p") ? std::stoll(a.get("p")) : 2;
    long long h = a.has("h") ? std::stoll(a.get("h")) : 1;
    long long k = a.has("k") ? std::stoll(a.get("k")) : 3;
    unsigned n = a.has("n") ? unsigned(std::stoul(a.get("n"))) : 1u;
    Matrix2 M = a.has("matrix") ? parse_matrix(a.get("matrix"))
                                : Matrix2{1, 0, 24, 1};
    std::vector<cplx> taus;
    if (a.has("tau")) taus.push_back(parse_complex(a.get("tau")));

    VerifyResult r;
    if (id == "decomposition") r = verify_decomposition(p);
    else if (id == "weyl") r = verify_weyl(p);
    else if (id == "sums") r = verify_sums(h, k, p);
    else if (id == "sumsmatch") r = verify_sumsmatch(h, k, p);
    else if (id == "wantvanish") r = verify_wantvanish(h, k, p, n);
    else if (id == "alsowant") r = verify_alsowant(h, k, p, n);
    else if (id == "lemma61")
        r = verify_lemma61(taus.empty()
                               ? std::vector<cplx>{{0.0, 1.0}, {0.3, 0.8}}
                               : taus);
    else if (id == "lemma62")
        r = verify_lemma62(p, a.get("series", "1") == "2",
                           taus.empty()
                               ? std::vector<cplx>{{0.0, 1.0}, {0.4, 1.3}}
                               : taus,
                           a.get("series", "1") == "2" ? 1e-5 : 1e-6);
    else if (id == "prop81") r = verify_prop81();
    else if (id == "shuffle") r = verify_shuffle();
    else if (id == "cocycle-E1")
        r = verify_cocycle_E1(
            p, M, taus.empty() ? std::vector<cplx>{{0.0, 1.0}} : taus);
    else if (id == "cocycle-E2")
        r = verify_cocycle_E2(
            p, M, taus.empty() ? std::vector<cplx>{{0.0, 1.0}} : taus);
    else if (id == "vigneras") r = verify_vigneras();
    else if (id == "lowering")
        r = verify_lowering(taus.empty()
                                ? std::vector<cplx>{{0.0, 1.0}, {0.2, 0.7}}
                                : taus);
    else if (id == "shimura-transform") r = verify_shimura_transform();
    else if (id == "m2-dual") r = verify_m2_dual();
    else if (id == "limit-eq") r = verify_limit_eq();
    else usage_error("unknown identity " + id);

    if (format == "json") {
        std::printf(
            "{\"identity\":\"%s\",\"status\":\"%s\",\"residual\":%s,"
            "\"exact\":%s,\"tolerance\":%s,\"detail\":\"%s\"}\n",
            r.identity.c_str(), r.pass ? "PASS" : "FAIL",
            fmt_d(r.residual).c_str(), r.exact ? "true" : "false",
            fmt_d(r.tolerance).c_str(), r.detail.c_str());
    } else {
        std::printf("%s  %s  residual=%.3e%s  %s\n",
                    r.pass ? "PASS" : "FAIL", r.identity.c_str(), r.residual,
                    r.exact ? " (certified exact)" : "", r.detail.c_str());
    }
    return r.pass ? 0 : 1;
}

int cmd_asympt(const Args& a, const std::string& format) {
    std::string which = a.get("which");
    if (which != "F1" && which != "F2") usage_error("asympt needs --which F1|F2");
    Cusp c = parse_cusp(a.get("cusp", "1/1"));
    long long p = parse_ll(a, "p");
    if (p < 2) usage_error("p >= 2 required");
    long long order = a.has("order") ? std::stoll(a.get("order")) : 2;
    const long long max_order = 8;  // derivative/Bernoulli tables beyond this
                                    // are untested territory
    if (order < 0 || order > max_order)
        usage_error("--order must be in [0," + std::to_string(max_order) + "]");

    AsymptoticSeries ser = which == "F1"
                               ? asympt_F1(c.h, c.k, p, int(order))
                               : asympt_F2(c.h, c.k, p, int(order));
    if (format == "csv") {
        std::printf("m,re,im\n");
        for (size_t m = 0; m < ser.a.size(); ++m)
            std::printf("%zu,%.16g,%.16g\n", m, ser.a[m].real(),
                        ser.a[m].imag());
    } else {
        for (size_t m = 0; m < ser.a.size(); ++m)
            std::printf("c%zu = %+.12e %+.12ei\n", m, ser.a[m].real(),
                        ser.a[m].imag());
    }
    if (!a.has("fit")) return 0;

    // radial fit: direct evaluation of the series target, plus (for F1) the
    // companion lattice sum at the mirrored cusp
    std::vector<std::pair<double, double>> direct, companion;
    if (format == "csv")
        std::printf(which == "F1" ? "t,rem_direct,rem_companion\n"
                                  : "t,rem_direct\n");
    for (int i = 0; i < 10; ++i) {
        double t = std::pow(10.0, -3.0 + 2.0 * i / 9.0);
        cplx tau = tau_radial(c, t);
        cplx direct_val =
            which == "F1" ? eval_F1(p, tau) : eval_F2(p, tau);
        double rd = std::abs(direct_val - ser.eval(t));
        direct.push_back({t, rd});
        if (which == "F1") {
            cplx mirr = E1_theta_sum(p, tau_radial(Cusp(-c.h, c.k), t));
            cplx sm = 0.0;
            double tm = 1.0;
            for (size_t m = 0; m < ser.a.size(); ++m, tm *= -t)
                sm += ser.a[m] * tm;
            double rc = std::abs(mirr - sm);
            companion.push_back({t, rc});
            if (format == "csv")
                std::printf("%.6e,%.6e,%.6e\n", t, rd, rc);
        } else if (format == "csv") {
            std::printf("%.6e,%.6e\n", t, rd);
        }
    }
    double sd = loglog_slope(direct);
    std::printf("remainder_slope_direct = %.3f (order %lld => expect ~%lld)\n",
                sd, order, order + 1);
    if (which == "F1")
        std::printf("remainder_slope_companion = %.3f\n",
                    loglog_slope(companion));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) usage_error("missing subcommand");
    std::string cmd = argv[1];
    Args a = parse_args(argc, argv, 2);
    RunConfig rc = RunConfig::from_env();
    if (a.has("tol")) {
        double t = std::stod(a.get("tol"));
        if (t < 1e-14) usage_error("tolerance below supported floor");
        rc.tol = t;
    }
    std::string format = a.get("format", "json");
    if (format != "json" && format != "plain" && format != "csv")
        usage_error("unknown format " + format);
    try {
        if (cmd == "eval") return cmd_eval(a, rc, format);
        if (cmd == "verify") return cmd_verify(a, format);
        if (cmd == "asympt") return cmd_asympt(a, format);
        usage_error("unknown subcommand " + cmd);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        // convergence / tolerance failures surface as runtime errors
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
}
