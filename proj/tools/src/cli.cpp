#include "cli.hpp"

#include "io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace dfc::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Options {
    std::string input, poly, out, report, num, den, times, eps, nodes = "uniform";
    int degree = 0;
    long start_index = -1;
    int digits = 20;
    int count = 101;
    bool polygon = false, json_out = false, tight_kernel = false, eps_search = false;
};

void emit(const json& j, const std::string& path, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (path.empty()) out << text;
    else write_atomic(path, text);
}

Rational parse_eps(const std::string& text) {
    Rational e = parse_rational(text);
    if (e <= 0) throw InputError("--eps must be positive");
    return e;
}

// e ~ ||p - y||^2, estimated from the solver at a higher degree
Rational heuristic_eps(const IvpProblem& ivp, const ChebPoly& p) {
    RecOp P = chebyshev_recurrence(ivp.op);
    int d = std::max<int>(p.degree(), static_cast<int>(P.s) + 1) + 10;
    ChebPoly ref = approximate(ivp, d).poly;
    Rational est = norm_upper(ref - p);
    Rational e = est * est;
    Rational floor_eps = pow10(-30);
    if (e == 0) return floor_eps;
    return lower_dyadic(e, 16);
}

SolveOptions solve_options(const Options& o) {
    SolveOptions so;
    if (o.start_index >= 0) so.N = o.start_index;
    return so;
}

ValidateOptions validate_options(const Options& o) {
    ValidateOptions vo;
    vo.tight_kernel = o.tight_kernel;
    return vo;
}

// One validation, or the iterated choice eps <- B^2 while it keeps improving B.
ValidationReport run_validation(const IvpProblem& ivp, const ChebPoly& p, Rational eps, const Options& o) {
    ValidationReport rep = validate(ivp, p, eps, validate_options(o));
    if (!o.eps_search) return rep;
    for (int round = 0; round < 3; ++round) {
        Rational next = lower_dyadic(rep.B * rep.B, 16);
        if (next <= 0 || next >= eps) break;
        ValidationReport r2 = validate(ivp, p, next, validate_options(o));
        if (r2.B * 100 > rep.B * 99) {
            if (r2.B < rep.B) rep = r2;
            break;
        }
        rep = r2;
        eps = next;
    }
    return rep;
}

int cmd_recurrence(const Options& o, std::ostream& out) {
    ProblemFile pf = read_problem(o.input);
    RecOp P = chebyshev_recurrence(pf.ivp.op);
    std::vector<long> S = singularities(P);
    if (o.json_out) {
        json j;
        j["s"] = P.s;
        json coeffs = json::object();
        for (int k = -static_cast<int>(P.s); k <= P.s; ++k) coeffs[std::to_string(k)] = P.coeff(k).to_string("n");
        j["coefficients"] = coeffs;
        j["singular"] = S;
        if (o.polygon) {
            json edges = json::array();
            for (const auto& e : newton_polygon(P).edges) {
                json mods = json::array();
                for (const auto& r : e.roots) mods.push_back(std::abs(r));
                edges.push_back({{"slope", to_string(e.slope)},
                                 {"k_left", e.k_left},
                                 {"k_right", e.k_right},
                                 {"chi", e.chi.to_string("a")},
                                 {"root_moduli", mods}});
            }
            j["polygon"] = edges;
        }
        out << j.dump(2) << "\n";
        return kSuccess;
    }
    out << P.to_string() << "\n";
    out << "S = {";
    for (size_t i = 0; i < S.size(); ++i) out << (i ? ", " : "") << S[i];
    out << "}\n";
    if (o.polygon) {
        NewtonPolygon np = newton_polygon(P);
        out << "slopes:";
        for (size_t i = 0; i < np.edges.size(); ++i) out << (i ? ", " : " ") << to_string(np.edges[i].slope);
        out << "\n";
        for (const auto& e : np.edges) {
            out << "edge [" << e.k_left << ", " << e.k_right << "] slope " << to_string(e.slope) << " chi = "
                << e.chi.to_string("a") << " root moduli:";
            char buf[32];
            for (const auto& r : e.roots) {
                std::snprintf(buf, sizeof buf, " %.6g", std::abs(r));
                out << buf;
            }
            out << "\n";
        }
    }
    return kSuccess;
}

int cmd_approx(const Options& o, std::ostream& out) {
    ProblemFile pf = read_problem(o.input);
    auto t0 = Clock::now();
    SolveOutput s = approximate(pf.ivp, o.degree, solve_options(o));
    double t = seconds_since(t0);
    json j = coeffs_json(s.poly, o.digits);
    j["start_index"] = s.N_used;
    j["retries"] = s.retries;
    j["seconds"] = t;
    emit(j, o.out, out);
    if (!o.out.empty())
        out << "degree " << s.poly.degree() << ", N = " << s.N_used << ", " << t << " s -> " << o.out << "\n";
    return kSuccess;
}

json timings_json(double approx_s, double eps_s, double validate_s) {
    return {{"approx_s", approx_s}, {"eps_heuristic_s", eps_s}, {"validate_s", validate_s}};
}

void print_report(const ValidationReport& r, std::ostream& out) {
    out << "||y - p|| in [" << to_decimal(r.b, 3) << ", " << to_decimal(r.B, 3) << "]  (A = " << to_decimal(r.A, 4)
        << ", i = " << r.i << ", D = " << r.D << ", eps = " << to_decimal(r.epsilon, 3) << ")\n";
}

int validate_and_report(const IvpProblem& ivp, const ChebPoly& p, const Options& o, json base, double approx_s,
                        std::ostream& out, std::ostream& err) {
    auto t0 = Clock::now();
    Rational eps = o.eps.empty() ? heuristic_eps(ivp, p) : parse_eps(o.eps);
    double eps_s = seconds_since(t0);
    auto t1 = Clock::now();
    try {
        ValidationReport rep = run_validation(ivp, p, eps, o);
        json j = report_json(rep, o.digits);
        for (auto& [k, v] : base.items()) j[k] = v;
        j["status"] = "ok";
        j["timings"] = timings_json(approx_s, eps_s, seconds_since(t1));
        emit(j, o.report, out);
        if (!o.report.empty()) print_report(rep, out);
        return kSuccess;
    } catch (const InconclusiveError& e) {
        json j = base;
        j["status"] = "inconclusive";
        j["message"] = e.what();
        j["epsilon"] = to_string(eps);
        j["timings"] = timings_json(approx_s, eps_s, seconds_since(t1));
        emit(j, o.report, out);
        err << "validation inconclusive: " << e.what() << "\n";
        return kInconclusive;
    }
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    ProblemFile pf = read_problem(o.input);
    ChebPoly p = read_coeffs(o.poly);
    return validate_and_report(pf.ivp, p, o, json::object(), 0.0, out, err);
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
    ProblemFile pf = read_problem(o.input);
    auto t0 = Clock::now();
    SolveOutput s = approximate(pf.ivp, o.degree, solve_options(o));
    double approx_s = seconds_since(t0);
    json cj = coeffs_json(s.poly, o.digits);
    cj["start_index"] = s.N_used;
    cj["retries"] = s.retries;
    if (!o.out.empty()) write_atomic(o.out, cj.dump(2) + "\n");
    json base{{"degree", s.poly.degree()}, {"start_index", s.N_used}};
    if (o.out.empty()) base["coefficients"] = cj["coefficients"];
    return validate_and_report(pf.ivp, s.poly, o, base, approx_s, out, err);
}

std::vector<Rational> sample_nodes(const Options& o) {
    if (o.count < 2) throw InputError("--count must be at least 2");
    std::vector<Rational> xs;
    const int m = o.count;
    if (o.nodes == "uniform") {
        for (int k = 0; k < m; ++k) {
            Rational x(2 * k - (m - 1), m - 1);
            x.canonicalize();
            xs.push_back(std::move(x));
        }
    } else if (o.nodes == "chebyshev") {
        // extrema cos(pi k/(m-1)), increasing, endpoints exact
        for (int k = m - 1; k >= 0; --k) {
            if (k == 0) xs.push_back(1);
            else if (k == m - 1) xs.push_back(-1);
            else if (2 * k == m - 1) xs.push_back(0);
            else xs.push_back(from_double(std::cos(std::numbers::pi * k / (m - 1))));
        }
    } else {
        throw InputError("--nodes must be uniform or chebyshev");
    }
    return xs;
}

int cmd_sample(const Options& o, std::ostream& out) {
    ChebPoly p = read_coeffs(o.poly);
    std::ostringstream csv;
    csv << "x,value\n";
    for (const auto& x : sample_nodes(o)) csv << to_decimal(x, o.digits) << "," << to_decimal(eval(p, x), o.digits) << "\n";
    if (o.out.empty()) out << csv.str();
    else write_atomic(o.out, csv.str());
    return kSuccess;
}

int cmd_expand(const Options& o, std::ostream& out) {
    Poly a = parse_poly_list(o.num);
    Poly b = parse_poly_list(o.den);
    Rational eps = parse_eps(o.eps.empty() ? "1e-20" : o.eps);
    ChebPoly f = o.times.empty() ? ChebPoly::basis(0) : read_coeffs(o.times);
    ExpansionInfo info;
    auto t0 = Clock::now();
    ChebPoly y = expand_product(a, b, f, eps, &info);
    json j = coeffs_json(y, o.digits);
    j["epsilon"] = to_string(eps);
    j["tail_bound"] = to_string(info.tail);
    j["coefficient_error"] = to_string(info.coeff_error);
    j["seconds"] = seconds_since(t0);
    emit(j, o.out, out);
    return kSuccess;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chebyshev approximation of D-finite functions with certified error bounds", "dfc"};
    app.require_subcommand(1);
    Options o;

    auto* rec = app.add_subcommand("recurrence", "Print the Chebyshev recurrence of the operator");
    rec->add_option("--input", o.input, "Problem JSON file")->required();
    rec->add_flag("--polygon", o.polygon, "Also print the Newton polygon");
    rec->add_flag("--json", o.json_out, "JSON output");

    auto* apx = app.add_subcommand("approx", "Compute a degree-d approximation");
    apx->add_option("--input", o.input, "Problem JSON file")->required();
    apx->add_option("--degree", o.degree, "Degree d")->required()->check(CLI::PositiveNumber);
    apx->add_option("--start-index", o.start_index, "Start index N (default: from the growth model)");
    apx->add_option("--out", o.out, "Coefficient JSON output (default: stdout)");
    apx->add_option("--digits", o.digits, "Digits of decimal renderings")->check(CLI::PositiveNumber);

    auto* val = app.add_subcommand("validate", "Certify an error enclosure for a polynomial");
    val->add_option("--input", o.input, "Problem JSON file")->required();
    val->add_option("--poly", o.poly, "Coefficient JSON file")->required();
    val->add_option("--eps", o.eps, "Expansion accuracy (default: squared error estimate)");
    val->add_option("--report", o.report, "Report JSON output (default: stdout)");
    val->add_option("--digits", o.digits, "Digits of decimal renderings")->check(CLI::PositiveNumber);
    val->add_flag("--tight-kernel", o.tight_kernel, "Bound the kernel on a subdivision");
    val->add_flag("--eps-search", o.eps_search, "Iterate eps <- B^2 while the bound improves");

    auto* sol = app.add_subcommand("solve", "approx followed by validate");
    sol->add_option("--input", o.input, "Problem JSON file")->required();
    sol->add_option("--degree", o.degree, "Degree d")->required()->check(CLI::PositiveNumber);
    sol->add_option("--start-index", o.start_index, "Start index N");
    sol->add_option("--eps", o.eps, "Expansion accuracy");
    sol->add_option("--out", o.out, "Coefficient JSON output");
    sol->add_option("--report", o.report, "Report JSON output (default: stdout)");
    sol->add_option("--digits", o.digits, "Digits of decimal renderings")->check(CLI::PositiveNumber);
    sol->add_flag("--tight-kernel", o.tight_kernel, "Bound the kernel on a subdivision");
    sol->add_flag("--eps-search", o.eps_search, "Iterate eps <- B^2 while the bound improves");

    auto* smp = app.add_subcommand("sample", "Evaluate a polynomial on a grid (CSV)");
    smp->add_option("--poly", o.poly, "Coefficient JSON file")->required();
    smp->add_option("--count", o.count, "Number of points");
    smp->add_option("--nodes", o.nodes, "uniform or chebyshev");
    smp->add_option("--digits", o.digits, "Digits")->check(CLI::PositiveNumber);
    smp->add_option("--out", o.out, "CSV output (default: stdout)");

    auto* exr = app.add_subcommand("expand-rational", "Chebyshev expansion of f * num/den");
    exr->add_option("--num", o.num, "Numerator coefficients, low degree first, comma separated")->required();
    exr->add_option("--den", o.den, "Denominator coefficients, low degree first, comma separated")->required();
    exr->add_option("--eps", o.eps, "Accuracy (default 1e-20)");
    exr->add_option("--times", o.times, "Coefficient JSON of the polynomial factor f (default 1)");
    exr->add_option("--out", o.out, "Coefficient JSON output (default: stdout)");
    exr->add_option("--digits", o.digits, "Digits of decimal renderings")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*rec) return cmd_recurrence(o, out);
        if (*apx) return cmd_approx(o, out);
        if (*val) return cmd_validate(o, out, err);
        if (*sol) return cmd_solve(o, out, err);
        if (*smp) return cmd_sample(o, out);
        if (*exr) return cmd_expand(o, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const InconclusiveError& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}

} // namespace dfc::cli
