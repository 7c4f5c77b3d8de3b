#include <catch_amalgamated.hpp>

#include "hq/descent.hpp"
#include "hq/homology.hpp"

using namespace hq;

namespace {

LieData abelian(size_t d) {
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(d);
    return {names, std::vector(d, std::vector(d, std::vector<Rational>(d, 0)))};
}

LieData solvable() { return {{"x", "y"}, {{{0, 0}, {1, 0}}, {{-1, 0}, {0, 0}}}}; }

LieData heisenberg_lie() {
    LieData g = abelian(3);
    g.c[0][1][2] = 1, g.c[1][0][2] = -1;
    return g;
}

LieData sl2() {
    // [h,e] = 2e, [h,f] = -2f, [e,f] = h
    LieData g{{"e", "f", "h"}, std::vector(3, std::vector(3, std::vector<Rational>(3, 0)))};
    g.c[2][0][0] = 2, g.c[0][2][0] = -2;
    g.c[2][1][1] = -2, g.c[1][2][1] = 2;
    g.c[0][1][2] = 1, g.c[1][0][2] = -1;
    return g;
}

// Points of Z^d with l1 norm <= k, counted directly.
size_t ball(size_t d, int k) {
    if (d == 0) return 1;
    size_t s = 0;
    for (int a = -k; a <= k; ++a) s += ball(d - 1, k - std::abs(a));
    return s;
}

size_t binom(size_t n, size_t k) { return k > n ? 0 : k == 0 ? 1 : binom(n - 1, k - 1) * n / k; }

TruncationOptions opts(int N = 6, int W = 2) { return {N, W, 1}; }

}  // namespace

TEST_CASE("Chevalley-Eilenberg resolutions") {
    HopfPresentation a1 = build_enveloping(abelian(1));
    FreeComplex c1 = ce_resolution(abelian(1), a1);
    CHECK(c1.ranks == std::vector<size_t>{1, 1});
    CHECK(c1.d[1][0][0] == a1.gen("x"));

    HopfPresentation u = build_enveloping(solvable());
    FreeComplex c = ce_resolution(solvable(), u);
    CHECK(c.ranks == std::vector<size_t>{1, 2, 1});
    CHECK(c.labels[2][0] == "x^y");
    CHECK(c.d[2][0][0] == u.parse("-y - 1"));
    CHECK(c.d[2][0][1] == u.parse("x"));
    CHECK(squares_to_zero(c, u.sys()));

    for (const auto& g : {heisenberg_lie(), sl2(), abelian(3)}) {
        HopfPresentation h = build_enveloping(g);
        FreeComplex r = ce_resolution(g, h);
        CHECK(r.ranks == std::vector<size_t>{1, 3, 3, 1});
        CHECK(squares_to_zero(r, h.sys()));
        TruncatedDims t = resolution_homology(h, r, opts(4, 2));
        CHECK(t.all_certified());
        CHECK(t.dims[0] == std::vector<size_t>(5, 1));
        for (size_t i = 1; i <= 3; ++i) CHECK(t.dims[i] == std::vector<size_t>(5, 0));
    }
    LieData bad = abelian(3);
    bad.c[0][1][2] = 1, bad.c[1][0][2] = -1, bad.c[1][2][0] = 1, bad.c[2][1][0] = -1, bad.c[0][2][0] = 1,
    bad.c[2][0][0] = -1;
    CHECK_THROWS_AS(ce_resolution(bad, build_enveloping(abelian(3))), Error);
}

TEST_CASE("tower resolutions") {
    HopfPresentation z = build_laurent(1);
    FreeComplex cz = tower_resolution(PolycyclicData::free_abelian({"x"}), z);
    CHECK(cz.ranks == std::vector<size_t>{1, 1});
    CHECK(cz.d[1][0][0] == z.parse("x - 1"));

    HopfPresentation z2 = build_laurent(2);
    FreeComplex c2 = tower_resolution(PolycyclicData::free_abelian({"x", "y"}), z2);
    CHECK(c2.ranks == std::vector<size_t>{1, 2, 1});

    HopfPresentation k = build_group_algebra(PolycyclicData::klein_bottle(), "klein-bottle-group");
    FreeComplex ck = tower_resolution(PolycyclicData::klein_bottle(), k);
    CHECK(ck.ranks == std::vector<size_t>{1, 2, 1});
    CHECK(squares_to_zero(ck, k.sys()));
    TruncatedDims tk = resolution_homology(k, ck, opts(5, 2));
    CHECK(tk.all_certified());
    CHECK(tk.dims[0].back() == 1);
    CHECK(tk.dims[1].back() == 0);
    CHECK(tk.dims[2].back() == 0);

    HopfPresentation hz = build_group_algebra(PolycyclicData::heisenberg(), "heisenberg-group");
    FreeComplex ch = tower_resolution(PolycyclicData::heisenberg(), hz);
    CHECK(ch.ranks == std::vector<size_t>{1, 3, 3, 1});
    TruncatedDims th = resolution_homology(hz, ch, opts(3, 2));
    CHECK(th.dims[0].back() == 1);
    for (size_t i = 1; i <= 3; ++i) CHECK(th.dims[i].back() == 0);
}

TEST_CASE("homological integrals") {
    HopfPresentation z = build_laurent(1);
    auto rz = homological_integral(z, tower_resolution(PolycyclicData::free_abelian({"x"}), z), opts());
    CHECK(rz.pi0 == Character::counit(z));
    CHECK(rz.ext.dims[0].back() == 0);

    HopfPresentation u = build_enveloping(solvable());
    auto ru = homological_integral(u, ce_resolution(solvable(), u), opts());
    CHECK(ru.pi0.values() == std::vector<Scalar>{Scalar(0), Scalar(-1)});
    CHECK(ru.pi0 == descend(u, {u.gen("x")}).pi0);

    for (const auto& g : {heisenberg_lie(), sl2()}) {
        HopfPresentation h = build_enveloping(g);
        auto r = homological_integral(h, ce_resolution(g, h), opts(4, 2));
        std::vector<Scalar> tr;
        for (size_t i = 0; i < g.names.size(); ++i) tr.push_back(Scalar(g.ad_trace(i)));
        CHECK(r.pi0.values() == tr);
        CHECK(r.pi0 == Character::counit(h));
    }

    for (const auto& [g, name] : {std::pair{PolycyclicData::klein_bottle(), "klein"},
                                  std::pair{PolycyclicData::free_abelian({"x", "y"}), "z2"}}) {
        HopfPresentation a = build_group_algebra(g, name);
        auto r = homological_integral(a, tower_resolution(g, a), opts());
        CHECK(r.pi0 == adjoint_trace_character(g));
    }
}

TEST_CASE("homological integral errors") {
    HopfPresentation u = build_enveloping(solvable());
    FreeComplex c = ce_resolution(solvable(), u);
    FreeComplex shorter = c;
    shorter.ranks.pop_back();
    shorter.labels.pop_back();
    shorter.d.pop_back();
    try {
        homological_integral(u, shorter, opts());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == "TopNotOneDimensional");
    }
}

TEST_CASE("top homology of U([x,y]=x) with and without the Nakayama twist") {
    HopfPresentation u = build_enveloping(solvable());
    FreeComplex c = ce_resolution(solvable(), u);
    AlgebraMap nu = nakayama_presented(u, Character::make(u, {Scalar(0), Scalar(-1)}));
    TruncatedDims tw = twisted_hochschild_homology(u, c, TwistSpec::right_twist(nu), opts());
    CHECK(tw.certified[2]);
    CHECK(tw.top(2) == 1);
    TruncatedDims un = twisted_hochschild_homology(u, c, TwistSpec::identity(2), opts());
    CHECK(un.certified[2]);
    CHECK(un.top(2) == 0);
    CHECK(tw.euler_applicable);
    CHECK(tw.euler_passed);
    CHECK(un.euler_passed);
}

TEST_CASE("Laurent algebras follow the Koszul count") {
    for (size_t d = 1; d <= 3; ++d) {
        HopfPresentation a = build_laurent(static_cast<int>(d));
        std::vector<std::string> names(a.sys().names().size() / 2);
        for (size_t i = 0; i < d; ++i) names[i] = a.sys().names()[2 * i];
        FreeComplex c = tower_resolution(PolycyclicData::free_abelian(names), a);
        const int N = d == 3 ? 4 : 6;
        TruncatedDims t = twisted_hochschild_homology(a, c, TwistSpec::identity(2 * d), opts(N, 2));
        for (size_t i = 0; i <= d; ++i) {
            INFO("d = " << d << ", i = " << i);
            CHECK(t.certified[i]);
            for (int k = 0; k <= N; ++k) CHECK(t.dims[i][k] == binom(d, i) * ball(d, k));
        }
    }
}

TEST_CASE("twisting kZ by a scalar kills H_1") {
    HopfPresentation a = build_laurent(1);
    FreeComplex c = tower_resolution(PolycyclicData::free_abelian({"x"}), a);
    AlgebraMap sigma = AlgebraMap::diagonal({Scalar(3), Scalar(Rational(1, 3))});
    TruncatedDims t = twisted_hochschild_homology(a, c, TwistSpec::left_twist(sigma), opts());
    CHECK(t.certified[1]);
    CHECK(t.top(1) == 0);
    CHECK(t.top(0) == 0);
    AlgebraMap bad{{a.parse("x*x"), a.parse("X*X")}, 0};
    CHECK_THROWS_AS(twisted_hochschild_homology(a, c, TwistSpec::left_twist(bad), opts()), Error);
}

TEST_CASE("right adjoint of a twisted group algebra") {
    HopfPresentation k = build_group_algebra(PolycyclicData::klein_bottle(), "klein-bottle-group");
    AlgebraMap nu = nakayama_presented(k, adjoint_trace_character(PolycyclicData::klein_bottle()));
    CoefficientModule m = twisted_bimodule_coefficients(k, TwistSpec::left_twist(nu), CoefficientModule::Side::Right);
    NCPoly x = k.parse("x*t");
    // m.g = T(g) g^-1 m g
    CHECK(act(k, m, x, k.sys().letter("t")) == k.nf(k.parse("-T*x*t*t")));
    CHECK(act(k, m, x, k.sys().letter("x")) == k.nf(k.parse("X*x*t*x")));
}

TEST_CASE("degree zero agrees with the resolution route") {
    HopfPresentation u = build_enveloping(solvable());
    FreeComplex c = ce_resolution(solvable(), u);
    TwistSpec id = TwistSpec::identity(2);
    TruncatedDims z = zero_degree(u, id, opts());
    CHECK(z.dims[0] == twisted_hochschild_cohomology(u, c, id, opts()).dims[0]);
    CHECK(z.dims[1] == twisted_hochschild_homology(u, c, id, opts()).dims[0]);
    CHECK(z.top(0) == 1);

    HopfPresentation a = build_laurent(2);
    TruncatedDims za = zero_degree(a, TwistSpec::identity(4), opts(4, 2));
    for (int k = 0; k <= 4; ++k) {
        CHECK(za.dims[0][k] == ball(2, k));
        CHECK(za.dims[1][k] == ball(2, k));
    }
}

TEST_CASE("cohomology of kZ with the Nakayama twist is A/[A,A]") {
    HopfPresentation a = build_laurent(1);
    FreeComplex c = tower_resolution(PolycyclicData::free_abelian({"x"}), a);
    AlgebraMap nu = nakayama_presented(a, Character::counit(a));
    TruncatedDims t = twisted_hochschild_cohomology(a, c, TwistSpec::left_twist(nu), opts());
    TruncatedDims z = zero_degree(a, TwistSpec::identity(2), opts());
    CHECK(t.certified[1]);
    CHECK(t.dims[1] == z.dims[1]);
}

TEST_CASE("duality tables") {
    HopfPresentation z = build_laurent(1);
    FreeComplex cz = tower_resolution(PolycyclicData::free_abelian({"x"}), z);
    auto rz = duality_check(z, cz, Character::counit(z), TwistSpec::identity(2), opts());
    CHECK(rz.passed);

    HopfPresentation u = build_enveloping(solvable());
    FreeComplex cu = ce_resolution(solvable(), u);
    Character pi0 = homological_integral(u, cu, opts()).pi0;
    auto ru = duality_check(u, cu, pi0, TwistSpec::identity(2), opts());
    for (const auto& row : ru.rows) {
        INFO("i = " << row.i);
        CHECK(row.certified);
        CHECK(row.cohomology == row.homology);
    }
    CHECK(ru.passed);
}

TEST_CASE("invariant report") {
    HopfPresentation u = build_enveloping(solvable());
    InvariantReport r = invariant_report(u, ce_resolution(solvable(), u), opts());
    CHECK(r.d == 2);
    CHECK(r.thdim_witness == std::optional<size_t>(1));
    CHECK(r.hdim_top == std::optional<size_t>(0));
    CHECK(r.thcodim_witness.has_value());
}

TEST_CASE("complex export round-trip") {
    HopfPresentation k = build_group_algebra(PolycyclicData::klein_bottle(), "klein-bottle-group");
    FreeComplex c = tower_resolution(PolycyclicData::klein_bottle(), k);
    std::string text = export_complex(c, k);
    FreeComplex back = import_complex(text, k);
    CHECK(back.ranks == c.ranks);
    CHECK(back.labels == c.labels);
    CHECK(back.d == c.d);
    CHECK(export_complex(back, k) == text);
    CHECK_THROWS_AS(import_complex("complex 1\nentry 1 0 0 x\n", k), Error);
}

TEST_CASE("bar resolutions") {
    FDHopf k = build_fd("group-c1");
    BarComplex bk = bar_resolution(k, 3);
    CHECK(bk.dims == std::vector<size_t>{1, 1, 1, 1});
    CHECK(bar_squares_to_zero(bk));
    CHECK(bar_exact(bk));

    FDHopf c2 = build_fd("group-c2");
    BarComplex b = bar_resolution(c2, 2);
    CHECK(b.free_ranks() == std::vector<size_t>{1, 2, 4});
    CHECK(b.dims == std::vector<size_t>{4, 8, 16});
    CHECK(bar_squares_to_zero(b));
    CHECK(bar_exact(b));
    CHECK(bar_exact(bar_resolution(build_sweedler(), 2)));
}

TEST_CASE("finite-dimensional Hochschild homology by two routes") {
    for (const auto& name : {"group-c2", "sweedler", "group-s3", "group-c2xc2-dual", "taft-3"}) {
        FDHopf h = build_fd(name);
        INFO(name);
        const size_t deg = fd_default_degree(h);
        Matrix id = Matrix::identity(h.n);
        LinearAuto nu = nakayama(h);
        for (const auto& [s, t] : {std::pair{id, id}, std::pair{nu, id}, std::pair{id, nu}}) {
            auto hh = fd_hochschild_homology(h, s, t, deg);
            CHECK(hh == fd_tor_adjoint(h, s, t, deg));
            auto [zm, cm] = fd_zero_degree(h, s, t);
            CHECK(hh[0] == cm);
            CHECK(fd_hochschild_cohomology(h, s, t, 0)[0] == zm);
        }
    }
    FDHopf s3 = build_fd("group-s3");
    CHECK(fd_semisimple(s3));
    CHECK_FALSE(fd_semisimple(build_sweedler()));
    Matrix id = Matrix::identity(6);
    CHECK(fd_hochschild_cohomology(s3, id, id, 1) == std::vector<size_t>{3, 0});
    CHECK(fd_hochschild_homology(s3, id, id, 1) == std::vector<size_t>{3, 0});
    // Sweedler: HH_0 = A/[A,A] has dimension 2.
    Matrix i4 = Matrix::identity(4);
    CHECK(fd_hochschild_homology(build_sweedler(), i4, i4, 0)[0] == 2);
}
