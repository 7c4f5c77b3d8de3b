#include "hq/catalog.hpp"

#include "hq/descent.hpp"

namespace hq {

namespace {

using Structure = std::vector<std::vector<std::vector<Rational>>>;

LieData lie(std::vector<std::string> names) {
    const size_t d = names.size();
    return {std::move(names), Structure(d, std::vector(d, std::vector<Rational>(d, 0)))};
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> c;
    auto add = [&](std::string name, std::string family, std::map<std::string, std::string> params, bool descent,
                   bool homology) {
        CatalogEntry e;
        e.name = std::move(name);
        e.family = std::move(family);
        e.params = std::move(params);
        e.descent = descent;
        e.homology = homology;
        c.push_back(std::move(e));
    };
    for (const auto& name : fd_catalog_names()) add(name, "fd", {{"builder", "structure tensors"}}, false, false);
    add("oq-sl-2", "quantum", {{"n", "2"}, {"q", "q"}}, true, false);
    add("oq-sl-3", "quantum", {{"n", "3"}, {"q", "q"}}, true, false);
    add("oq-sl-2-classical", "quantum", {{"n", "2"}, {"q", "1"}}, true, false);
    add("oq-m-2", "quantum", {{"n", "2"}, {"q", "q"}, {"antipode", "none"}}, false, false);
    add("uq-sl2", "quantum", {{"q", "q"}}, false, false);
    add("u-abelian-1", "enveloping", {{"lie", "abelian"}, {"dim", "1"}}, true, true);
    add("u-abelian-2", "enveloping", {{"lie", "abelian"}, {"dim", "2"}}, true, true);
    add("u-abelian-3", "enveloping", {{"lie", "abelian"}, {"dim", "3"}}, true, true);
    add("u-solvable-2", "enveloping", {{"lie", "[x,y] = x"}, {"dim", "2"}}, true, true);
    add("u-heisenberg-3", "enveloping", {{"lie", "[x,y] = z"}, {"dim", "3"}}, true, true);
    add("u-sl2", "enveloping", {{"lie", "sl2"}, {"dim", "3"}}, false, true);
    add("laurent-1", "laurent", {{"rank", "1"}}, true, true);
    add("laurent-2", "laurent", {{"rank", "2"}}, true, true);
    add("laurent-3", "laurent", {{"rank", "3"}}, true, true);
    add("klein-bottle-group", "group", {{"relation", "t x t^-1 = x^-1"}}, true, true);
    add("heisenberg-group", "group", {{"relation", "y x y^-1 = z x, z central"}}, true, true);
    return c;
}

HopfPresentation renamed(const HopfPresentation& h, const std::string& name) {
    HopfPresentation r(name, h.sys());
    r.relations = h.relations;
    r.coproduct = h.coproduct;
    r.counit = h.counit;
    r.antipode = h.antipode;
    r.antipode_inverse = h.antipode_inverse;
    return r;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = make_catalog();
    return c;
}

const CatalogEntry& find_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw Error("UnknownAlgebra", "no catalog entry named '" + name + "'");
}

std::optional<LieData> lie_data(const CatalogEntry& e) {
    if (e.family != "enveloping") return std::nullopt;
    if (e.name == "u-abelian-1") return lie({"x"});
    if (e.name == "u-abelian-2") return lie({"x", "y"});
    if (e.name == "u-abelian-3") return lie({"x", "y", "z"});
    if (e.name == "u-solvable-2") {
        LieData g = lie({"x", "y"});
        g.c[0][1][0] = 1, g.c[1][0][0] = -1;
        return g;
    }
    if (e.name == "u-heisenberg-3") {
        LieData g = lie({"x", "y", "z"});
        g.c[0][1][2] = 1, g.c[1][0][2] = -1;
        return g;
    }
    if (e.name == "u-sl2") {
        // [h,e] = 2e, [h,f] = -2f, [e,f] = h
        LieData g = lie({"e", "f", "h"});
        g.c[2][0][0] = 2, g.c[0][2][0] = -2;
        g.c[2][1][1] = -2, g.c[1][2][1] = 2;
        g.c[0][1][2] = 1, g.c[1][0][2] = -1;
        return g;
    }
    return std::nullopt;
}

std::optional<PolycyclicData> polycyclic_data(const CatalogEntry& e) {
    if (e.name == "laurent-1") return PolycyclicData::free_abelian({"x"});
    if (e.name == "laurent-2") return PolycyclicData::free_abelian({"x", "y"});
    if (e.name == "laurent-3") return PolycyclicData::free_abelian({"x", "y", "z"});
    if (e.name == "klein-bottle-group") return PolycyclicData::klein_bottle();
    if (e.name == "heisenberg-group") return PolycyclicData::heisenberg();
    return std::nullopt;
}

HopfPresentation build_presentation(const CatalogEntry& e, int degree_bound) {
    if (e.family == "fd") throw Error("MethodMismatch", e.name + " is finite-dimensional, not presented");
    if (e.family == "quantum") {
        if (e.name == "uq-sl2") return renamed(build_uq_sl2(Scalar::q(), degree_bound), e.name);
        const int n = std::stoi(e.params.at("n"));
        const Scalar q = e.params.at("q") == "q" ? Scalar::q() : Scalar(std::stol(e.params.at("q")));
        if (e.params.count("antipode")) return renamed(build_quantum_matrices(n, q, degree_bound), e.name);
        return renamed(build_quantum_sl(n, q, degree_bound), e.name);
    }
    if (auto g = lie_data(e)) return renamed(build_enveloping(*g, degree_bound), e.name);
    if (auto g = polycyclic_data(e)) return renamed(build_group_algebra(*g, e.name, degree_bound), e.name);
    throw Error("UnknownAlgebra", "no builder for " + e.name);
}

std::vector<NCPoly> descent_chain(const CatalogEntry& e, const HopfPresentation& h) {
    if (!e.descent) throw Error("MethodMismatch", "no descent chain is known for " + e.name);
    if (e.family == "quantum") return quantum_sl_chain(h, std::stoi(e.params.at("n")));
    if (e.name == "u-solvable-2") return {h.gen("x")};
    if (e.name == "u-heisenberg-3") return {h.gen("z")};
    if (e.name == "klein-bottle-group") return {h.parse("x - 1")};
    if (e.name == "heisenberg-group") return {h.parse("z - 1")};
    return {};
}

FreeComplex resolution(const CatalogEntry& e, const HopfPresentation& h) {
    if (!e.homology) throw Error("MethodMismatch", "no resolution of k is available for " + e.name);
    if (auto g = lie_data(e)) return ce_resolution(*g, h);
    return tower_resolution(*polycyclic_data(e), h);
}

}  // namespace hq
