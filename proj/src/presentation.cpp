#include <algorithm>
#include <sstream>

#include "hq/hopf.hpp"

namespace hq {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Splits "<generator> : <body>".
std::pair<std::string, std::string> split_colon(const std::string& rest, size_t lineno) {
    size_t c = rest.find(':');
    if (c == std::string::npos) throw Error("ParseError", "line " + std::to_string(lineno) + ": expected ':'");
    return {trim(rest.substr(0, c)), trim(rest.substr(c + 1))};
}

}  // namespace

std::string write_presentation(const HopfPresentation& h) {
    const RewriteSystem& sys = h.sys();
    const auto& names = sys.names();
    std::ostringstream os;
    os << "hopfpresentation 1\n";
    os << "name " << h.name() << "\n";
    os << "field " << sys.field().str() << "\n";
    os << "generators";
    for (const auto& n : names) os << " " << n;
    os << "\n";
    if (!sys.order().weights().empty()) {
        os << "weights";
        for (int w : sys.order().weights()) os << " " << w;
        os << "\n";
    }
    os << "certificate " << sys.certificate() << "\n";
    for (const auto& r : sys.rules()) os << "rule " << word_str(r.lhs, names) << " -> " << r.rhs.str(names, sys.order()) << "\n";
    for (const auto& r : h.relations) os << "relation " << r.str(names, sys.order()) << "\n";
    for (size_t g = 0; g < names.size(); ++g) {
        if (g < h.coproduct.size()) os << "coproduct " << names[g] << " : " << h.coproduct[g].str(names) << "\n";
        if (g < h.counit.size()) os << "counit " << names[g] << " : " << h.counit[g].str() << "\n";
        if (h.antipode) os << "antipode " << names[g] << " : " << (*h.antipode)[g].str(names, sys.order()) << "\n";
        if (h.antipode_inverse)
            os << "antipode-inverse " << names[g] << " : " << (*h.antipode_inverse)[g].str(names, sys.order()) << "\n";
    }
    return os.str();
}

HopfPresentation read_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line, name;
    std::vector<std::string> gens;
    std::vector<int> weights;
    Field field = Field::rationals();
    std::vector<std::pair<size_t, std::string>> rules, relations;
    std::vector<std::tuple<size_t, std::string, std::string>> structure;
    int certificate = 0;
    size_t lineno = 0;
    bool header = false;
    auto fail = [&](const std::string& msg) {
        throw Error("ParseError", "line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        size_t sp = line.find(' ');
        std::string key = line.substr(0, sp), rest = sp == std::string::npos ? "" : trim(line.substr(sp + 1));
        if (!header) {
            if (key != "hopfpresentation" || rest != "1") fail("expected 'hopfpresentation 1'");
            header = true;
        } else if (key == "name") {
            name = rest;
        } else if (key == "field") {
            field = Field::parse(rest);
        } else if (key == "generators" || key == "weights") {
            std::istringstream ls(rest);
            std::string tok;
            while (ls >> tok) {
                if (key == "generators") {
                    gens.push_back(tok);
                } else {
                    try {
                        weights.push_back(std::stoi(tok));
                    } catch (const std::exception&) {
                        fail("bad weight " + tok);
                    }
                }
            }
        } else if (key == "certificate") {
            try {
                certificate = std::stoi(rest);
            } catch (const std::exception&) {
                fail("bad certificate");
            }
        } else if (key == "rule") {
            rules.emplace_back(lineno, rest);
        } else if (key == "relation") {
            relations.emplace_back(lineno, rest);
        } else if (key == "coproduct" || key == "counit" || key == "antipode" || key == "antipode-inverse") {
            structure.emplace_back(lineno, key, rest);
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!header) throw Error("ParseError", "empty presentation");
    if (gens.empty()) throw Error("ParseError", "no generators");
    if (!weights.empty() && weights.size() != gens.size()) throw Error("ParseError", "weights do not match generators");
    RewriteSystem s(gens, field, weights);
    for (const auto& [ln, r] : rules) {
        lineno = ln;
        size_t arrow = r.find("->");
        if (arrow == std::string::npos) fail("rule needs '->'");
        NCPoly lhs = parse_ncpoly(trim(r.substr(0, arrow)), gens, field);
        if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one()) fail("rule left side must be a word");
        s.add_rule(lhs.terms().begin()->first, parse_ncpoly(trim(r.substr(arrow + 2)), gens, field));
    }
    s.set_certificate(certificate);
    HopfPresentation out(name, s);
    for (const auto& [ln, r] : relations) {
        lineno = ln;
        out.relations.push_back(parse_ncpoly(r, gens, field));
    }
    const size_t n = gens.size();
    out.coproduct.assign(n, Tensor(2));
    out.counit.assign(n, Scalar(0));
    std::vector<bool> seen_delta(n), seen_eps(n);
    std::vector<std::optional<NCPoly>> anti(n), anti_inv(n);
    for (const auto& [ln, key, rest] : structure) {
        lineno = ln;
        auto [gname, body] = split_colon(rest, ln);
        auto it = std::find(gens.begin(), gens.end(), gname);
        if (it == gens.end()) fail("unknown generator '" + gname + "'");
        size_t g = it - gens.begin();
        if (key == "coproduct") {
            out.coproduct[g] = parse_tensor(body, gens, field);
            seen_delta[g] = true;
        } else if (key == "counit") {
            out.counit[g] = parse_scalar(body, field);
            seen_eps[g] = true;
        } else if (key == "antipode") {
            anti[g] = parse_ncpoly(body, gens, field);
        } else {
            anti_inv[g] = parse_ncpoly(body, gens, field);
        }
    }
    for (size_t g = 0; g < n; ++g)
        if (!seen_delta[g] || !seen_eps[g])
            throw Error("ParseError", "generator " + gens[g] + " lacks a coproduct or counit");
    auto collect = [&](const std::vector<std::optional<NCPoly>>& v, const std::string& what)
        -> std::optional<std::vector<NCPoly>> {
        size_t have = std::count_if(v.begin(), v.end(), [](const auto& x) { return x.has_value(); });
        if (have == 0) return std::nullopt;
        if (have != n) throw Error("ParseError", what + " must be given for every generator");
        std::vector<NCPoly> r;
        for (const auto& x : v) r.push_back(*x);
        return r;
    };
    out.antipode = collect(anti, "antipode");
    out.antipode_inverse = collect(anti_inv, "antipode-inverse");
    return out;
}

std::string write_algebra_map(const AlgebraMap& m, const RewriteSystem& sys) {
    std::ostringstream os;
    os << "algebramap 1\n";
    for (size_t g = 0; g < m.images.size(); ++g)
        os << "image " << sys.names()[g] << " : " << m.images[g].str(sys.names(), sys.order()) << "\n";
    return os.str();
}

AlgebraMap read_algebra_map(const std::string& text, const RewriteSystem& sys) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::optional<NCPoly>> images(sys.num_gens());
    size_t lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (!header) {
            if (line != "algebramap 1") throw Error("ParseError", where + "expected 'algebramap 1'");
            header = true;
            continue;
        }
        if (line.rfind("image ", 0) != 0) throw Error("ParseError", where + "expected 'image'");
        auto [gname, body] = split_colon(line.substr(6), lineno);
        const auto& names = sys.names();
        auto it = std::find(names.begin(), names.end(), gname);
        if (it == names.end()) throw Error("ParseError", where + "unknown generator '" + gname + "'");
        images[it - names.begin()] = parse_ncpoly(body, names, sys.field());
    }
    AlgebraMap m;
    m.certificate_degree = sys.certificate();
    for (size_t g = 0; g < images.size(); ++g)
        m.images.push_back(images[g] ? *images[g] : NCPoly::gen(static_cast<Letter>(g)));
    return m;
}

}  // namespace hq
