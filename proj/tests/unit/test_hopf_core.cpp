#include <catch_amalgamated.hpp>

#include <random>

#include "hq/hopf.hpp"

using namespace hq;

namespace {

NCPoly P(const HopfPresentation& h, const std::string& s) { return h.parse(s); }

// Characters of O_q(SL_2) are diagonal: a -> t, d -> 1/t.
Character sl2_character(const HopfPresentation& h, const Scalar& t) {
    return Character::make(h, {t, Scalar(0), Scalar(0), t.inv()});
}

Character laurent_character(const HopfPresentation& h, const std::vector<Scalar>& vals) {
    std::vector<Scalar> v;
    for (const auto& s : vals) {
        v.push_back(s);
        v.push_back(s.inv());
    }
    return Character::make(h, v);
}

Scalar random_unit(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 5), den(1, 4), sign(0, 1);
    return Scalar::frac((sign(rng) ? 1 : -1) * num(rng), den(rng));
}

LieData solvable2() { return {{"x", "y"}, {{{0, 0}, {1, 0}}, {{-1, 0}, {0, 0}}}}; }

}  // namespace

TEST_CASE("quantum SL_2 presentation") {
    HopfPresentation h = build_quantum_sl(2);
    CHECK(h.num_gens() == 4);
    // Six quantum-matrix relations plus the determinant.
    CHECK(h.relations.size() == 7);
    AxiomReport rep = verify_hopf_axioms(h, 6);
    CHECK(rep.passed);
    CHECK(rep.degree == 6);
    CHECK(h.S(P(h, "X12")) == P(h, "-q^-1*X12"));
    CHECK(h.S(P(h, "X21")) == P(h, "-q*X21"));
    CHECK(h.S(P(h, "X11")) == P(h, "X22"));
    CHECK(h.nf(P(h, "X11*X22 - q*X12*X21")) == P(h, "1"));
}

TEST_CASE("S^2 on quantum SL_n scales X_ij by q^(2(i-j))") {
    for (int n : {2, 3}) {
        HopfPresentation h = build_quantum_sl(n);
        AlgebraMap s2 = s_squared(h);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                NCPoly x = NCPoly::gen(static_cast<Letter>(i * n + j));
                CHECK(h.nf(s2.images[i * n + j]) == x * Scalar::q().pow(2 * (i - j)));
            }
        CHECK(pi_of(h, s2) == Character::counit(h));
    }
}

TEST_CASE("quantum SL_3 satisfies the Hopf axioms") {
    HopfPresentation h = build_quantum_sl(3);
    CHECK(h.num_gens() == 9);
    AxiomReport rep = verify_hopf_axioms(h, 6);
    for (const auto& f : rep.failures()) INFO(f.axiom + " at " + f.location + ": " + f.detail);
    CHECK(rep.passed);
}

TEST_CASE("quantum matrices have no antipode") {
    HopfPresentation h = build_quantum_matrices(2);
    AxiomReport rep = verify_hopf_axioms(h, 6);
    CHECK(rep.passed);
    size_t na = 0;
    for (const auto& c : rep.checks) na += c.status == "not applicable";
    CHECK(na == 8);
}

TEST_CASE("a corrupted antipode is located") {
    HopfPresentation h = build_quantum_sl(2);
    (*h.antipode)[1] = -(*h.antipode)[1];
    h.antipode_inverse.reset();
    AxiomReport rep = verify_hopf_axioms(h, 6);
    CHECK_FALSE(rep.passed);
    auto fails = rep.failures();
    REQUIRE_FALSE(fails.empty());
    bool located = false;
    for (const auto& f : fails) located |= f.axiom.rfind("antipode", 0) == 0 && f.location == "X12";
    CHECK(located);
}

TEST_CASE("group algebras and Laurent algebras") {
    HopfPresentation l1 = build_laurent(1);
    CHECK(l1.S(P(l1, "x")) == P(l1, "X"));
    CHECK(verify_hopf_axioms(l1, 6).passed);
    for (const auto& h : {build_laurent(3), build_group_algebra(PolycyclicData::klein_bottle(), "klein-bottle-group"),
                          build_group_algebra(PolycyclicData::heisenberg(), "heisenberg-group")}) {
        AxiomReport rep = verify_hopf_axioms(h, 6);
        for (const auto& f : rep.failures()) INFO(h.name() + ": " + f.axiom + " at " + f.location);
        CHECK(rep.passed);
        CHECK(s_squared(h).equals(AlgebraMap::identity(h.num_gens()), h.sys()));
    }
    HopfPresentation k = build_group_algebra(PolycyclicData::klein_bottle(), "klein-bottle-group");
    CHECK(k.nf(P(k, "t*x*T")) == P(k, "X"));
    HopfPresentation hz = build_group_algebra(PolycyclicData::heisenberg(), "heisenberg-group");
    CHECK(hz.nf(P(hz, "y*x*Y*X")) == P(hz, "z"));
    CHECK(hz.nf(P(hz, "x*y*X*Y")) == P(hz, "Z"));
}

TEST_CASE("non-invertible conjugation data is rejected") {
    PolycyclicData d = PolycyclicData::klein_bottle();
    d.conj[1][0] = {2};
    CHECK_THROWS_AS(build_group_algebra(d, "bad"), Error);
    CHECK(PolycyclicData::klein_bottle().action_sign(1, 0) == -1);
}

TEST_CASE("enveloping algebras") {
    HopfPresentation u = build_enveloping(solvable2());
    CHECK(u.num_gens() == 2);
    REQUIRE(u.sys().rules().size() == 1);
    CHECK(u.sys().rules()[0].lhs == Word{1, 0});
    CHECK(u.sys().rules()[0].rhs == P(u, "x*y - x"));
    CHECK(verify_hopf_axioms(u, 6).passed);
    CHECK(solvable2().ad_trace(1) == -1);
    CHECK(solvable2().ad_trace(0) == 0);

    // sl2 with [e,f]=h, [h,e]=2e, [h,f]=-2f.
    LieData sl2{{"e", "f", "h"}, std::vector(3, std::vector(3, std::vector<Rational>(3, 0)))};
    sl2.c[0][1][2] = 1, sl2.c[1][0][2] = -1;
    sl2.c[2][0][0] = 2, sl2.c[0][2][0] = -2;
    sl2.c[2][1][1] = -2, sl2.c[1][2][1] = 2;
    CHECK(verify_hopf_axioms(build_enveloping(sl2), 6).passed);

    LieData bad = sl2;
    bad.c[2][0][0] = 3, bad.c[0][2][0] = -3;
    CHECK_THROWS_AS(build_enveloping(bad), Error);
}

TEST_CASE("quantum sl2 enveloping algebra") {
    HopfPresentation h = build_uq_sl2();
    AxiomReport rep = verify_hopf_axioms(h, 6);
    for (const auto& f : rep.failures()) INFO(f.axiom + " at " + f.location + ": " + f.detail);
    CHECK(rep.passed);
}

TEST_CASE("characters are validated at construction") {
    HopfPresentation h = build_quantum_sl(2);
    CHECK_THROWS_AS(Character::make(h, {Scalar(2), Scalar(0), Scalar(0), Scalar(1)}), Error);
    CHECK_THROWS_AS(Character::make(h, {Scalar(1), Scalar(1), Scalar(0), Scalar(1)}), Error);
    CHECK_NOTHROW(sl2_character(h, Scalar(3)));
    HopfPresentation u = build_enveloping(solvable2());
    CHECK_THROWS_AS(Character::make(u, {Scalar(1), Scalar(0)}), Error);
}

TEST_CASE("winding automorphisms on known families") {
    HopfPresentation h = build_quantum_sl(2);
    const Scalar q = Scalar::q();
    Character pi0 = sl2_character(h, q.pow(2));
    AlgebraMap xi = winding_left(h, pi0);
    CHECK(xi.images[0] == P(h, "q^2*X11"));
    CHECK(xi.images[1] == P(h, "q^2*X12"));
    CHECK(xi.images[2] == P(h, "q^-2*X21"));
    CHECK(xi.images[3] == P(h, "q^-2*X22"));
    AlgebraMap phi = winding_right(h, pi0);
    CHECK(phi.images[0] == P(h, "q^2*X11"));
    CHECK(phi.images[1] == P(h, "q^-2*X12"));
    CHECK(phi.images[2] == P(h, "q^2*X21"));
    CHECK(winding_left(h, Character::counit(h)).equals(AlgebraMap::identity(4), h.sys()));

    HopfPresentation u = build_enveloping(solvable2());
    Character c = Character::make(u, {Scalar(0), Scalar(-1)});
    CHECK(winding_right(u, c).images[1] == P(u, "y - 1"));

    HopfPresentation l2 = build_laurent(2);
    Character g = laurent_character(l2, {Scalar(2), Scalar(-3)});
    CHECK(winding_left(l2, g).images[0] == P(l2, "2*x"));
    CHECK(winding_left(l2, g).images[3] == P(l2, "-1/3*Y"));
    Character gg = convolve(l2, g, g);
    CHECK(gg.values()[2] == Scalar(9));
}

TEST_CASE("winding identities on random characters") {
    std::mt19937 rng(5);
    HopfPresentation sl2 = build_quantum_sl(2);
    HopfPresentation l2 = build_laurent(2);
    HopfPresentation u = build_enveloping(solvable2());
    for (int t = 0; t < 12; ++t) {
        std::vector<std::pair<const HopfPresentation*, std::pair<Character, Character>>> cases;
        cases.push_back({&sl2, {sl2_character(sl2, random_unit(rng)), sl2_character(sl2, random_unit(rng))}});
        cases.push_back({&l2, {laurent_character(l2, {random_unit(rng), random_unit(rng)}),
                               laurent_character(l2, {random_unit(rng), random_unit(rng)})}});
        cases.push_back({&u, {Character::make(u, {Scalar(0), random_unit(rng)}),
                              Character::make(u, {Scalar(0), random_unit(rng)})}});
        for (const auto& [hp, chars] : cases) {
            const HopfPresentation& h = *hp;
            const auto& [a, b] = chars;
            const RewriteSystem& sys = h.sys();
            AlgebraMap wa = winding_left(h, a), wb = winding_left(h, b);
            CHECK(winding_left(h, convolve(h, a, b)).equals(compose(wb, wa, sys), sys));
            CHECK(compose(wa, winding_left(h, char_antipode_dual(h, a)), sys).equals(AlgebraMap::identity(h.num_gens()), sys));
            CHECK(pi_of(h, wa) == a);
            CHECK(twist_character(h, a, s_squared(h)) == a);
            CHECK(compose(wa, s_squared(h), sys).equals(compose(s_squared(h), wa, sys), sys));
            AlgebraMap rb = winding_right(h, b);
            CHECK(compose(wa, rb, sys).equals(compose(rb, wa, sys), sys));
            CHECK(convolve(h, a, Character::counit(h)) == a);
            CHECK(convolve(h, a, char_antipode_dual(h, a)) == Character::counit(h));
        }
    }
}

TEST_CASE("tensor text round-trips") {
    HopfPresentation h = build_quantum_sl(2);
    for (size_t g = 0; g < h.num_gens(); ++g) {
        Tensor d = h.delta(NCPoly::gen(static_cast<Letter>(g)));
        CHECK(parse_tensor(d.str(h.sys().names()), h.sys().names(), h.field()) == d);
    }
    HopfPresentation uq = build_uq_sl2();
    Tensor t = uq.delta(P(uq, "E*F")) * Scalar::frac(-3, 2) + Tensor::pure({P(uq, "1"), P(uq, "K")}, Scalar::q());
    CHECK(parse_tensor(t.str(uq.sys().names()), uq.sys().names(), uq.field()) == t);
    CHECK(parse_tensor("X11 (x) X11 + X12 (x) X21", h.sys().names(), h.field()) == h.delta(P(h, "X11")));
}

TEST_CASE("presentation files round-trip") {
    LieData solv{{"x", "y"}, {{{0, 0}, {1, 0}}, {{-1, 0}, {0, 0}}}};
    std::vector<HopfPresentation> hs{build_quantum_sl(2), build_quantum_matrices(2), build_enveloping(solv),
                                     build_group_algebra(PolycyclicData::heisenberg(), "heisenberg-group"),
                                     build_laurent(2)};
    for (const auto& h : hs) {
        INFO(h.name());
        std::string text = write_presentation(h);
        HopfPresentation back = read_presentation(text);
        CHECK(write_presentation(back) == text);
        CHECK(back.sys().rules().size() == h.sys().rules().size());
        CHECK(back.antipode_bijective() == h.antipode_bijective());
        CHECK(verify_hopf_axioms(back, 4).passed == verify_hopf_axioms(h, 4).passed);
    }
    CHECK_THROWS_AS(read_presentation("hopfpresentation 1\ngenerators x\n"), Error);
    CHECK_THROWS_AS(read_presentation("hopfpresentation 1\ngenerators x\nrule x -> x*x\n"), Error);
    CHECK_THROWS_AS(read_presentation("nonsense"), Error);

    HopfPresentation u = build_enveloping(solv);
    AlgebraMap m{{u.parse("x"), u.parse("y - 1")}, 0};
    AlgebraMap r = read_algebra_map(write_algebra_map(m, u.sys()), u.sys());
    CHECK(r.images == m.images);
    CHECK(read_algebra_map("algebramap 1\nimage y : y + 2\n", u.sys()).images[0] == u.parse("x"));
    CHECK_THROWS_AS(read_algebra_map("algebramap 1\nimage w : 1\n", u.sys()), Error);
}
