#include "hq/report.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "hq/descent.hpp"

namespace hq {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("UnknownAlgebra", "no catalog entry or readable file named '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        return line.substr(b);
    }
    return "";
}

struct Ctx {
    Ctx(const Algebra& a, const CommandOptions& opt) : a(a), opt(opt) {}
    const Algebra& a;
    const CommandOptions& opt;
    Json results = Json::object();
    Json certificates = Json::object();
    Json verdicts = Json::object();
    std::optional<Character> pi0;  // presented integral character, once computed

    void verdict(const std::string& name, bool pass, const std::string& detail) {
        verdicts[name] = {{"pass", pass}, {"detail", detail}};
    }
    TruncationOptions trunc() const { return {opt.truncate, opt.window, opt.jobs}; }
};

// ---------------------------------------------------------------- serialization

Json poly_json(const HopfPresentation& h, const NCPoly& p) { return p.str(h.sys().names(), h.sys().order()); }

Json char_json(const HopfPresentation& h, const Character& c) {
    Json j = Json::object();
    for (size_t g = 0; g < c.values().size(); ++g) j[h.sys().names()[g]] = c.values()[g].str();
    return j;
}

Json map_json(const HopfPresentation& h, const AlgebraMap& m) {
    Json j = Json::object();
    for (size_t g = 0; g < m.images.size(); ++g) j[h.sys().names()[g]] = poly_json(h, m.images[g]);
    return j;
}

Json vec_json(const FDHopf& h, const Vec& v) {
    Json j = Json::object();
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) j[h.basis[i]] = v[i].str();
    return j;
}

// Column i is the image of basis element i.
Json matrix_json(const FDHopf& h, const Matrix& m) {
    Json j = Json::object();
    for (size_t i = 0; i < m.cols(); ++i) j[h.basis[i]] = h.vec_str(m.col(i));
    return j;
}

Json dims_json(const TruncatedDims& t) { return t.dims; }

Json trunc_cert_json(const TruncatedDims& t) {
    return {{"N", t.N},
            {"W", t.W},
            {"normalization", t.normalization},
            {"certified", t.certified},
            {"stable_tail", t.stable_tail},
            {"euler_applicable", t.euler_applicable},
            {"euler_passed", t.euler_passed}};
}

Json axioms_json(const AxiomReport& r) {
    Json failures = Json::array();
    for (const auto& c : r.failures())
        failures.push_back({{"axiom", c.axiom}, {"location", c.location}, {"status", c.status}, {"detail", c.detail}});
    size_t na = 0;
    for (const auto& c : r.checks) na += c.status == "not applicable";
    return {{"checks", r.checks.size()}, {"not_applicable", na}, {"failures", failures}};
}

std::string certified_detail(const TruncatedDims& t) {
    std::string bad;
    for (size_t i = 0; i < t.certified.size(); ++i)
        if (!t.certified[i]) bad += (bad.empty() ? "" : ",") + std::to_string(i);
    return bad.empty() ? "boundary dimensions stable for every degree" : "not stable in degrees " + bad;
}

std::string join_dims(const std::vector<size_t>& v) {
    std::string s;
    for (size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "(" + s + ")";
}

// ---------------------------------------------------------------- presented helpers

const CatalogEntry& require_entry(const Algebra& a, const std::string& what) {
    if (!a.entry) throw Error("MethodMismatch", what + " needs a catalog entry; " + a.name + " was read from a file");
    return *a.entry;
}

std::string resolve_method(const Algebra& a, const std::string& method) {
    if (method != "auto") return method;
    if (a.fd) return "exact";
    const CatalogEntry& e = require_entry(a, "choosing an integral method");
    if (e.descent) return "descent";
    if (e.homology) return "homology";
    throw Error("MethodMismatch", "no integral method applies to " + a.name);
}

Character run_descent(Ctx& ctx, const HopfPresentation& h) {
    const CatalogEntry& e = require_entry(ctx.a, "descent");
    auto chain = descent_chain(e, h);
    DescentOptions d;
    d.degree_bound = ctx.opt.degree_bound;
    DescentResult r = descend(h, chain, d);
    Json steps = Json::array();
    for (const auto& s : r.trace.steps) {
        steps.push_back({{"element", poly_json(h, s.element)},
                         {"tau", map_json(h, s.tau)},
                         {"tau_inverse", map_json(h, s.tau_inverse)},
                         {"diagonal", s.diagonal},
                         {"nonzerodivisor", {{"certified", s.certificate.certified},
                                             {"degree", s.certificate.degree},
                                             {"words_checked", s.certificate.words_checked},
                                             {"method", s.certificate.method}}}});
    }
    Json partial = Json::array();
    for (const auto& c : r.trace.partial) partial.push_back(char_json(h, c));
    ctx.certificates["descent"] = {{"steps", steps}, {"base_case", r.trace.base_case}, {"partial", partial}};
    return r.pi0;
}

Character run_homology(Ctx& ctx, const HopfPresentation& h) {
    const CatalogEntry& e = require_entry(ctx.a, "the homological integral");
    FreeComplex c = resolution(e, h);
    HomologicalIntegral r = homological_integral(h, c, ctx.trunc());
    ctx.results["ext_regular"] = dims_json(r.ext);
    ctx.certificates["homology"] = trunc_cert_json(r.ext);
    ctx.certificates["homology"]["resolution"] = {{"kind", c.kind}, {"ranks", c.ranks}};
    ctx.results["dimension"] = r.d;
    return r.pi0;
}

// Integral character by the requested method; "both" records agreement.
Character presented_pi0(Ctx& ctx, const HopfPresentation& h, const std::string& requested) {
    const std::string method = resolve_method(ctx.a, requested);
    if (method == "descent") return run_descent(ctx, h);
    if (method == "homology") return run_homology(ctx, h);
    if (method == "both") {
        Character d = run_descent(ctx, h), m = run_homology(ctx, h);
        ctx.results["pi0_descent"] = char_json(h, d);
        ctx.results["pi0_homology"] = char_json(h, m);
        ctx.verdict("methods-agree", d == m, d == m ? "descent and homology give the same character"
                                                     : "descent and homology characters differ");
        return d;
    }
    throw Error("MethodMismatch", "method " + method + " does not apply to presented algebras");
}

// Independent expectation for the integral character, where one is known.
void reference_character(Ctx& ctx, const Character& pi0) {
    if (!ctx.a.entry) return;
    if (auto g = lie_data(*ctx.a.entry)) {
        std::vector<Scalar> v;
        for (size_t i = 0; i < g->names.size(); ++i) v.emplace_back(g->ad_trace(i));
        Character tr = Character::unchecked(v);
        ctx.verdict("ad-trace", tr == pi0, "pi0(x) = tr(ad x) for every basis element");
    } else if (auto g = polycyclic_data(*ctx.a.entry)) {
        Character tr = adjoint_trace_character(*g);
        ctx.verdict("adjoint-trace", tr == pi0, "pi0 equals the product of conjugation determinants");
    }
}

AlgebraMap presented_twist_map(Ctx& ctx, const HopfPresentation& h) {
    if (ctx.opt.twist == "identity") return AlgebraMap::identity(h.num_gens());
    if (ctx.opt.twist == "custom-file") {
        if (ctx.opt.twist_file.empty()) throw Error("ParseError", "--twist custom-file needs --twist-file");
        AlgebraMap m = read_algebra_map(read_file(ctx.opt.twist_file), h.sys());
        if (!m.preserves_relations(h.sys())) throw Error("RelationViolation", "the custom twist does not preserve the relations");
        return m;
    }
    if (ctx.opt.twist == "nakayama") {
        ctx.pi0 = presented_pi0(ctx, h, ctx.opt.method);
        ctx.results["pi0"] = char_json(h, *ctx.pi0);
        return nakayama_presented(h, *ctx.pi0);
    }
    throw Error("ParseError", "unknown twist '" + ctx.opt.twist + "'");
}

// ---------------------------------------------------------------- FD helpers

Matrix fd_twist_matrix(Ctx& ctx, const FDHopf& h) {
    if (ctx.opt.twist == "identity") return Matrix::identity(h.n);
    if (ctx.opt.twist == "nakayama") return nakayama(h);
    throw Error("MethodMismatch", "twist " + ctx.opt.twist + " is not available for finite-dimensional algebras");
}

// xi^-1 S^-2 for the duality twist: winding by pi0 o S after S^-2.
Matrix fd_duality_sigma(const FDHopf& h) {
    Vec pi = modular_character(h);
    Vec pis = h.antipode.transpose() * pi;
    auto s2inv = inverse(h.antipode * h.antipode);
    if (!s2inv) throw Error("NotInvertible", "S^2 is singular");
    return winding_left(h, pis) * *s2inv;
}

// ---------------------------------------------------------------- commands

void cmd_axioms(Ctx& ctx) {
    AxiomReport r = ctx.a.fd ? verify_fd_axioms(*ctx.a.fd) : verify_hopf_axioms(*ctx.a.presented, ctx.opt.degree_bound);
    ctx.results["axioms"] = axioms_json(r);
    ctx.certificates["axioms"] = {{"degree", r.degree}};
    if (ctx.a.presented) ctx.certificates["axioms"]["rewrite_certificate"] = ctx.a.presented->sys().certificate();
    std::string detail = "all checks pass";
    if (!r.passed) {
        auto f = r.failures();
        detail = f.empty() ? "failed" : f.front().axiom + " fails at " + f.front().location;
    }
    ctx.verdict("axioms", r.passed, detail);
}

void cmd_integral(Ctx& ctx) {
    if (ctx.a.fd) {
        if (ctx.opt.method != "auto") throw Error("MethodMismatch", "finite-dimensional algebras use the exact method only");
        const FDHopf& h = *ctx.a.fd;
        auto left = left_integral_space(h), right = right_integral_space(h);
        Vec t = left_integral(h), pi = modular_character(h);
        ctx.results["left_integral"] = vec_json(h, t);
        ctx.results["pi0"] = vec_json(h, pi);
        ctx.results["integral_space_dims"] = {{"left", left.size()}, {"right", right.size()}};
        ctx.results["method"] = "exact";
        ctx.verdict("integral-space", left.size() == 1 && right.size() == 1, "left and right integral spaces are lines");
        ctx.verdict("pi0-character", is_character(h, pi), "pi0 is an algebra map");
        return;
    }
    const HopfPresentation& h = *ctx.a.presented;
    const std::string method = resolve_method(ctx.a, ctx.opt.method);
    ctx.results["method"] = method;
    Character pi0 = presented_pi0(ctx, h, method);
    ctx.results["pi0"] = char_json(h, pi0);
    ctx.verdict("pi0-character", pi0.annihilates_relations(h.sys()), "pi0 annihilates every rewrite rule");
    AlgebraMap xi = xi_of(h, pi0);
    ctx.results["xi"] = map_json(h, xi);
    reference_character(ctx, pi0);
}

void cmd_nakayama(Ctx& ctx) {
    if (ctx.a.fd) {
        const FDHopf& h = *ctx.a.fd;
        Vec pi = modular_character(h);
        Matrix nu = nakayama(h);
        Matrix s2xi = h.antipode * h.antipode * winding_left(h, pi);
        InnerSearch s = equal_up_to_inner(h, nu, s2xi, ctx.opt.seed);
        auto io = integral_order(h), o = nakayama_order(h);
        ctx.results["pi0"] = vec_json(h, pi);
        ctx.results["nu"] = matrix_json(h, nu);
        ctx.results["integral_order"] = io ? Json(*io) : Json(nullptr);
        ctx.results["nakayama_order"] = o ? Json(*o) : Json(nullptr);
        ctx.certificates["inner"] = {{"unit", s.unit ? Json(h.vec_str(*s.unit)) : Json(nullptr)},
                                     {"solution_dim", s.solution_dim},
                                     {"tried", s.tried},
                                     {"budget", s.budget},
                                     {"seed", s.seed}};
        ctx.verdict("nu-inner-to-s2-xi", s.unit.has_value(), "nu and S^2 xi differ by an inner automorphism");
        bool orders = io && o && (*o == *io || *o == 2 * *io);
        ctx.verdict("order-relation", orders, "nakayama order is io or 2 io");
        return;
    }
    const HopfPresentation& h = *ctx.a.presented;
    Character pi0 = presented_pi0(ctx, h, ctx.opt.method);
    AlgebraMap nu = nakayama_presented(h, pi0);
    ctx.results["pi0"] = char_json(h, pi0);
    ctx.results["xi"] = map_json(h, xi_of(h, pi0));
    ctx.results["s2"] = map_json(h, s_squared(h));
    ctx.results["nu"] = map_json(h, nu);
    if (auto d = nu.diagonal_scalars()) {
        Json scal = Json::object();
        for (size_t g = 0; g < d->size(); ++g) scal[h.sys().names()[g]] = (*d)[g].str();
        ctx.results["nu_diagonal"] = scal;
    }
    ctx.verdict("nu-preserves-relations", nu.preserves_relations(h.sys()), "nu maps every relation into the ideal");
}

void cmd_radford(Ctx& ctx) {
    if (!ctx.a.fd) throw Error("MethodMismatch", "the S^4 check needs a finite-dimensional algebra");
    const FDHopf& h = *ctx.a.fd;
    RadfordReport r = radford_s4_check(h);
    ctx.results["pi0"] = vec_json(h, r.pi0);
    ctx.results["g"] = vec_json(h, r.g);
    ctx.results["s4"] = matrix_json(h, r.s4);
    ctx.results["offending"] = r.offending ? Json(h.basis[*r.offending]) : Json(nullptr);
    ctx.verdict("s4-formula", r.passed,
                r.passed ? "S^4 = Ad_g o phi o xi^-1" : "fails at " + h.basis[r.offending.value_or(0)]);
    AdjointTensorReport b = adjoint_tensor_check(h, r.pi0);
    ctx.certificates["bimodule"] = {{"relation_rank", b.relation_rank}, {"expected_rank", b.expected_rank}};
    ctx.verdict("bimodule-identity", b.passed, b.detail.empty() ? "u (x) v -> v twist(u) is a bimodule isomorphism" : b.detail);
}

void cmd_hochschild(Ctx& ctx) {
    if (ctx.a.fd) {
        const FDHopf& h = *ctx.a.fd;
        Matrix tau = fd_twist_matrix(ctx, h), id = Matrix::identity(h.n);
        size_t deg = fd_default_degree(h);
        auto hh = fd_hochschild_homology(h, id, tau, deg);
        auto tor = fd_tor_adjoint(h, id, tau, deg);
        auto hc = fd_hochschild_cohomology(h, tau, id, deg);
        ctx.results["homology"] = hh;
        ctx.results["cohomology"] = hc;
        ctx.results["tor_adjoint"] = tor;
        ctx.certificates["exact"] = {{"max_degree", deg}};
        ctx.verdict("double-route", hh == tor, "Hochschild and adjoint Tor dimensions " + join_dims(hh) + " and " + join_dims(tor));
        return;
    }
    const HopfPresentation& h = *ctx.a.presented;
    const CatalogEntry& e = require_entry(ctx.a, "twisted Hochschild homology");
    AlgebraMap m = presented_twist_map(ctx, h);
    ctx.results["twist"] = map_json(h, m);
    FreeComplex c = resolution(e, h);
    TruncatedDims hh = twisted_hochschild_homology(h, c, TwistSpec::right_twist(m), ctx.trunc());
    TruncatedDims hc = twisted_hochschild_cohomology(h, c, TwistSpec::left_twist(m), ctx.trunc());
    const size_t d = c.length();
    ctx.results["homology"] = dims_json(hh);
    ctx.results["cohomology"] = dims_json(hc);
    ctx.results["top_degree"] = d;
    ctx.results["top_homology"] = hh.top(d);
    ctx.results["top_cohomology"] = hc.top(d);
    ctx.certificates["homology"] = trunc_cert_json(hh);
    ctx.certificates["cohomology"] = trunc_cert_json(hc);
    ctx.certificates["resolution"] = {{"kind", c.kind}, {"ranks", c.ranks}};
    ctx.verdict("homology-certified", hh.all_certified(), certified_detail(hh));
    ctx.verdict("cohomology-certified", hc.all_certified(), certified_detail(hc));
    if (hh.euler_applicable) ctx.verdict("euler", hh.euler_passed, "Euler characteristic of the filtered pieces");
}

void cmd_duality(Ctx& ctx) {
    if (ctx.a.fd) {
        const FDHopf& h = *ctx.a.fd;
        if (!fd_semisimple(h))
            throw Error("MethodMismatch", "duality needs finite global dimension; " + h.name + " is not semisimple");
        Matrix tau = fd_twist_matrix(ctx, h);
        Matrix sigma = fd_duality_sigma(h);
        size_t deg = fd_default_degree(h);
        auto hc = fd_hochschild_cohomology(h, Matrix::identity(h.n), tau, deg);
        auto hh = fd_hochschild_homology(h, sigma, tau, deg);
        ctx.results["dimension"] = 0;
        ctx.results["cohomology"] = hc;
        ctx.results["homology"] = hh;
        ctx.certificates["exact"] = {{"max_degree", deg}};
        ctx.verdict("duality-tables", hc == hh, "H^i " + join_dims(hc) + " against H_{-i} " + join_dims(hh));
        return;
    }
    const HopfPresentation& h = *ctx.a.presented;
    const CatalogEntry& e = require_entry(ctx.a, "duality");
    AlgebraMap m = presented_twist_map(ctx, h);
    if (!ctx.pi0) ctx.pi0 = presented_pi0(ctx, h, ctx.opt.method);
    const Character& pi0 = *ctx.pi0;
    ctx.results["pi0"] = char_json(h, pi0);
    FreeComplex c = resolution(e, h);
    DualityReport r = duality_check(h, c, pi0, TwistSpec::right_twist(m), ctx.trunc());
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"i", row.i},
                        {"cohomology", row.cohomology},
                        {"homology", row.homology},
                        {"certified", row.certified},
                        {"match", row.match}});
    ctx.results["dimension"] = r.d;
    ctx.results["rows"] = rows;
    ctx.certificates["duality_twist"] = r.twist;
    ctx.verdict("duality-tables", r.passed, "H^i and H_{d-i} tables agree and are certified");
}

void cmd_catalog(Ctx& ctx) {
    Json entries = Json::array();
    for (const auto& e : catalog()) {
        Json methods = Json::array();
        if (e.family == "fd") methods.push_back("exact");
        if (e.descent) methods.push_back("descent");
        if (e.homology) methods.push_back("homology");
        entries.push_back({{"name", e.name},
                           {"family", e.family},
                           {"params", e.params},
                           {"degree_bound", e.degree_bound},
                           {"truncate", e.truncate},
                           {"window", e.window},
                           {"methods", methods}});
    }
    ctx.results["entries"] = entries;
}

Json algebra_json(const Algebra& a) {
    Json j = {{"name", a.name}, {"family", a.family}, {"source", a.source}};
    if (a.presented) {
        j["field"] = a.presented->field().str();
        j["generators"] = a.presented->sys().names();
    } else if (a.fd) {
        j["field"] = a.fd->field.str();
        j["dimension"] = a.fd->n;
    }
    return j;
}

}  // namespace

Algebra load_algebra(const std::string& name_or_path, int degree_bound) {
    Algebra a;
    for (const auto& e : catalog()) {
        if (e.name != name_or_path) continue;
        a.name = e.name;
        a.family = e.family;
        a.source = "catalog";
        a.entry = e;
        if (e.family == "fd")
            a.fd = build_fd(e.name);
        else
            a.presented = build_presentation(e, degree_bound);
        return a;
    }
    std::string text = read_file(name_or_path);
    std::string head = first_line(text);
    a.family = "file";
    a.source = name_or_path;
    if (head.rfind("hopfpresentation", 0) == 0) {
        a.presented = read_presentation(text);
        a.name = a.presented->name();
    } else if (head.rfind("fdhopf", 0) == 0) {
        a.fd = read_fd(text);
        a.name = a.fd->name;
    } else {
        throw Error("ParseError", name_or_path + " is neither a presentation nor a structure-tensor file");
    }
    return a;
}

bool command_applies(const std::string& command, const CatalogEntry& e) {
    const bool fd = e.family == "fd";
    if (command == "axioms") return true;
    if (command == "integral" || command == "nakayama") return fd || e.descent || e.homology;
    if (command == "radford") return fd;
    if (command == "hochschild") return fd || e.homology;
    if (command == "duality") return e.homology || (fd && fd_semisimple(build_fd(e.name)));
    return false;
}

Json run_command(const std::string& command, const std::string& algebra, const CommandOptions& opt) {
    Json params = {{"degree_bound", opt.degree_bound},
                   {"truncate", opt.truncate},
                   {"window", opt.window},
                   {"seed", std::to_string(opt.seed)}};
    if (command == "integral" || command == "nakayama" || command == "hochschild" || command == "duality")
        params["method"] = opt.method;
    if (command == "hochschild" || command == "duality") {
        params["twist"] = opt.twist;
        if (opt.twist == "custom-file") params["twist_file"] = opt.twist_file;
    }
    Json report = {{"command", command}, {"params", params}, {"algebra", nullptr}};
    static const std::vector<std::string> methods = {"auto", "descent", "homology", "both"};
    try {
        if (std::find(methods.begin(), methods.end(), opt.method) == methods.end())
            throw Error("ParseError", "unknown method '" + opt.method + "'");
        if (command == "catalog") {
            Algebra none;
            CommandOptions o = opt;
            Ctx ctx{none, o};
            cmd_catalog(ctx);
            report["results"] = ctx.results;
            report["certificates"] = ctx.certificates;
            report["verdicts"] = ctx.verdicts;
            return report;
        }
        static const std::map<std::string, std::function<void(Ctx&)>> commands = {
            {"axioms", cmd_axioms},       {"integral", cmd_integral},     {"nakayama", cmd_nakayama},
            {"radford", cmd_radford},     {"hochschild", cmd_hochschild}, {"duality", cmd_duality}};
        auto it = commands.find(command);
        if (it == commands.end()) throw Error("UnknownCommand", "no command named '" + command + "'");
        Algebra a = load_algebra(algebra, opt.degree_bound);
        report["algebra"] = algebra_json(a);
        Ctx ctx{a, opt};
        it->second(ctx);
        report["results"] = ctx.results;
        report["certificates"] = ctx.certificates;
        report["verdicts"] = ctx.verdicts;
    } catch (const Error& e) {
        if (report["algebra"].is_null()) report["algebra"] = {{"name", algebra}};
        report["results"] = Json::object();
        report["certificates"] = Json::object();
        report["verdicts"] = {{"error", {{"pass", false}, {"kind", e.kind()}, {"detail", e.what()}}}};
    }
    return report;
}

bool all_pass(const Json& report) {
    for (const auto& [name, v] : report.at("verdicts").items())
        if (!v.at("pass").get<bool>()) return false;
    return true;
}

int exit_code(const Json& report) {
    if (report.at("verdicts").contains("error")) return 2;
    return all_pass(report) ? 0 : 1;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

std::string render_text(const Json& report) {
    std::ostringstream os;
    std::function<void(const std::string&, const Json&)> flat = [&](const std::string& prefix, const Json& j) {
        if (j.is_object() && !j.empty()) {
            for (const auto& [k, v] : j.items()) flat(prefix.empty() ? k : prefix + "." + k, v);
        } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array()) &&
                   !(j.front().is_array() && !j.front().empty() && j.front().front().is_number())) {
            for (size_t i = 0; i < j.size(); ++i) flat(prefix + "[" + std::to_string(i) + "]", j[i]);
        } else {
            os << "  " << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
        }
    };
    const Json& a = report.at("algebra");
    os << report.at("command").get<std::string>();
    if (a.is_object() && a.contains("name")) os << " " << a.at("name").get<std::string>();
    os << "\nparams:\n";
    flat("", report.at("params"));
    os << "results:\n";
    flat("", report.at("results"));
    os << "certificates:\n";
    flat("", report.at("certificates"));
    os << "verdicts:\n";
    for (const auto& [name, v] : report.at("verdicts").items())
        os << "  " << (v.at("pass").get<bool>() ? "PASS " : "FAIL ") << name << ": " << v.at("detail").get<std::string>()
           << "\n";
    return os.str();
}

}  // namespace hq
