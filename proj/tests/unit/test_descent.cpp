#include <catch_amalgamated.hpp>

#include <functional>

#include "hq/descent.hpp"

using namespace hq;

namespace {

bool throws_kind(const std::function<void()>& f, const std::string& kind) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

LieData heisenberg_lie() {
    LieData g{{"x", "y", "z"}, std::vector(3, std::vector(3, std::vector<Rational>(3, 0)))};
    g.c[0][1][2] = 1, g.c[1][0][2] = -1;
    return g;
}

}  // namespace

TEST_CASE("descent on quantum SL_2") {
    HopfPresentation h = build_quantum_sl(2);
    const Scalar q = Scalar::q();
    auto r = descend(h, quantum_sl_chain(h, 2));
    CHECK(r.pi0.values() == std::vector<Scalar>{q.pow(2), Scalar(0), Scalar(0), q.pow(-2)});
    REQUIRE(r.trace.steps.size() == 2);
    CHECK(r.trace.steps[0].diagonal);
    CHECK(*r.trace.steps[0].tau.diagonal_scalars() == std::vector<Scalar>{q.inv(), Scalar(1), Scalar(1), q});
    CHECK(r.trace.steps[0].certificate.certified);

    auto rev = descend(h, {h.gen("X21"), h.gen("X12")});
    CHECK(rev.pi0 == r.pi0);

    AlgebraMap nu = nakayama_presented(h, r.pi0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(nu.images[2 * i + j] == NCPoly::gen(static_cast<Letter>(2 * i + j), q.pow(2 * (3 - i - j - 2))));
}

TEST_CASE("descent at q = 1 gives the counit") {
    HopfPresentation h = build_quantum_sl(2, Scalar(1));
    auto r = descend(h, quantum_sl_chain(h, 2));
    CHECK(r.pi0 == Character::counit(h));
}

TEST_CASE("descent on quantum SL_3") {
    HopfPresentation h = build_quantum_sl(3);
    const Scalar q = Scalar::q();
    auto r = descend(h, quantum_sl_chain(h, 3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(r.pi0.values()[3 * i + j] == (i == j ? q.pow(2 * (4 - 2 * (i + 1))) : Scalar(0)));
    AlgebraMap nu = nakayama_presented(h, r.pi0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(nu.images[3 * i + j] == NCPoly::gen(static_cast<Letter>(3 * i + j), q.pow(2 * (4 - i - j - 2))));
}

TEST_CASE("descent with general normalizing maps") {
    LieData solv{{"x", "y"}, {{{0, 0}, {1, 0}}, {{-1, 0}, {0, 0}}}};
    HopfPresentation u = build_enveloping(solv);
    auto r = descend(u, {u.gen("x")});
    CHECK(r.pi0.values() == std::vector<Scalar>{Scalar(0), Scalar(-1)});
    CHECK_FALSE(r.trace.steps[0].diagonal);
    AlgebraMap nu = nakayama_presented(u, r.pi0);
    CHECK(nu.images[1] == u.parse("y - 1"));
    CHECK(nu.images[0] == u.parse("x"));

    HopfPresentation hl = build_enveloping(heisenberg_lie());
    CHECK(descend(hl, {hl.gen("z")}).pi0 == Character::counit(hl));

    HopfPresentation k = build_group_algebra(PolycyclicData::klein_bottle(), "klein-bottle-group");
    auto rk = descend(k, {k.parse("x - 1")});
    CHECK(rk.pi0 == adjoint_trace_character(PolycyclicData::klein_bottle()));
    AlgebraMap nuk = nakayama_presented(k, rk.pi0);
    CHECK(nuk.images[2] == k.parse("-t"));
    CHECK(nuk.images[0] == k.parse("x"));

    HopfPresentation hz = build_group_algebra(PolycyclicData::heisenberg(), "heisenberg-group");
    CHECK(descend(hz, {hz.parse("z - 1")}).pi0 == Character::counit(hz));

    HopfPresentation l3 = build_laurent(3);
    CHECK(descend(l3, {}).pi0 == Character::counit(l3));
}

TEST_CASE("adjoint trace") {
    CHECK(adjoint_trace(PolycyclicData::free_abelian({"x", "y", "z"})) == std::vector<int>{1, 1, 1});
    CHECK(adjoint_trace(PolycyclicData::klein_bottle()) == std::vector<int>{1, -1});
    CHECK(adjoint_trace(PolycyclicData::heisenberg()) == std::vector<int>{1, 1, 1});
}

TEST_CASE("descent failures name their kind") {
    HopfPresentation h = build_quantum_sl(2);
    CHECK(throws_kind([&] { descend(h, {h.parse("X11 - X22")}); }, "NotNormal"));
    CHECK(throws_kind([&] { descend(h, {h.gen("X11")}); }, "NotAugmented"));
    CHECK(throws_kind([&] { descend(h, {h.gen("X12")}); }, "BaseCaseUnrecognized"));
    RewriteSystem shallow = h.sys();
    shallow.set_certificate(1);
    HopfPresentation weak = h.with_system(shallow);
    CHECK(throws_kind([&] { descend(weak, {weak.gen("X12")}); }, "CertificateTooWeak"));
}

TEST_CASE("normal generator candidates") {
    HopfPresentation h = build_quantum_sl(2);
    CHECK(normal_generator_candidates(h) == std::vector<std::string>{"X12", "X21"});
}
