#include "io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace dfc::cli {

Rational parse_json_rational(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
    if (v.is_number_float()) {
        std::ostringstream os;
        os.precision(17);
        os << v.get<double>();
        return parse_rational(os.str());
    }
    throw InputError("expected a rational, got " + v.dump());
}

json rational_json(const Rational& q) { return to_string(q); }

namespace {

const json& member(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
    return *it;
}

Poly parse_poly(const json& j) {
    if (!j.is_array()) throw InputError("operator coefficients must be arrays of rationals");
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(parse_json_rational(v));
    return Poly(std::move(c));
}

int parse_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    long long v = j.get<long long>();
    if (v < 0 || v > 1000000) throw InputError(std::string(what) + " out of range");
    return static_cast<int>(v);
}

} // namespace

ProblemFile parse_problem(const json& j) {
    if (!j.is_object()) throw InputError("problem must be a JSON object");
    const json& op = member(j, "operator");
    if (!op.is_array() || op.size() < 2) throw InputError("operator must list a_0..a_r with r >= 1");
    std::vector<Poly> a;
    for (const auto& c : op) a.push_back(parse_poly(c));
    DiffOp L(std::move(a));

    IvpProblem ivp;
    ivp.op = L;
    bool has_iv = j.contains("initial_values"), has_cond = j.contains("conditions");
    if (has_iv == has_cond) throw InputError("give exactly one of \"initial_values\" and \"conditions\"");
    if (has_iv) {
        const json& iv = j["initial_values"];
        if (!iv.is_array()) throw InputError("initial_values must be an array");
        std::vector<Rational> vals;
        for (const auto& v : iv) vals.push_back(parse_json_rational(v));
        ivp = IvpProblem::from_initial_values(L, vals);
    } else {
        const json& cs = j["conditions"];
        if (!cs.is_array()) throw InputError("conditions must be an array");
        for (const auto& c : cs) {
            BoundaryCondition bc;
            for (const auto& t : member(c, "terms")) {
                ConditionTerm term;
                term.weight = parse_json_rational(member(t, "weight"));
                term.order = parse_int(member(t, "order"), "condition order");
                term.point = parse_json_rational(member(t, "point"));
                bc.terms.push_back(term);
            }
            bc.target = parse_json_rational(member(c, "target"));
            ivp.conditions.push_back(std::move(bc));
        }
    }
    ProblemFile pf;
    if (j.contains("interval")) {
        const json& iv = j["interval"];
        if (!iv.is_array() || iv.size() != 2) throw InputError("interval must be [a, b]");
        pf.a = parse_json_rational(iv[0]);
        pf.b = parse_json_rational(iv[1]);
        if (pf.a >= pf.b) throw InputError("interval must satisfy a < b");
    }
    pf.ivp = (pf.a == -1 && pf.b == 1) ? ivp : rescale_to_unit(ivp, pf.a, pf.b);
    pf.ivp.check();
    return pf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

json parse_json_text(const std::string& text, const std::string& path) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

} // namespace

ProblemFile read_problem(const std::string& path) {
    try {
        return parse_problem(parse_json_text(read_file(path), path));
    } catch (const json::exception& e) {
        throw InputError("invalid problem file " + path + ": " + e.what());
    }
}

ChebPoly parse_coeffs(const json& j) {
    const json* arr = &j;
    if (j.is_object()) arr = &member(j, "coefficients");
    if (!arr->is_array() || arr->empty()) throw InputError("coefficients must be a nonempty array");
    std::vector<Rational> u;
    for (const auto& v : *arr) u.push_back(parse_json_rational(v));
    return ChebPoly(std::move(u));
}

ChebPoly read_coeffs(const std::string& path) {
    try {
        return parse_coeffs(parse_json_text(read_file(path), path));
    } catch (const json::exception& e) {
        throw InputError("invalid coefficient file " + path + ": " + e.what());
    }
}

json coeffs_json(const ChebPoly& p, int digits) {
    json c = json::array(), d = json::array();
    for (const auto& u : p.coeffs()) {
        c.push_back(to_string(u));
        d.push_back(to_decimal(u, digits));
    }
    return json{{"basis", "chebyshev"}, {"degree", p.degree()}, {"coefficients", c}, {"decimal", d}};
}

json report_json(const ValidationReport& r, int digits) {
    json j;
    j["B"] = to_string(r.B);
    j["b"] = to_string(r.b);
    j["A"] = to_string(r.A);
    j["i"] = r.i;
    j["gamma"] = to_string(r.gamma);
    j["delta"] = to_string(r.delta);
    j["D"] = r.D;
    j["epsilon"] = to_string(r.epsilon);
    j["expA"] = to_string(r.expA);
    j["decimal"] = {{"B", to_decimal(r.B, digits)},         {"b", to_decimal(r.b, digits)},
                    {"A", to_decimal(r.A, digits)},         {"gamma", to_decimal(r.gamma, digits)},
                    {"delta", to_decimal(r.delta, digits)}, {"epsilon", to_decimal(r.epsilon, digits)},
                    {"expA", to_decimal(r.expA, digits)}};
    return j;
}

Poly parse_poly_list(const std::string& text) {
    std::vector<Rational> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
    if (c.empty()) throw InputError("empty coefficient list");
    return Poly(std::move(c));
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw InputError("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw InputError("cannot move output into place at " + path + ": " + ec.message());
    }
}

} // namespace dfc::cli
