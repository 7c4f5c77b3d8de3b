#include <catch_amalgamated.hpp>

#include <random>

#include "hq/matrix.hpp"

using namespace hq;

namespace {

Scalar qs() { return Scalar::q(); }

UPoly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), co(-3, 3);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = co(rng);
    return UPoly(c);
}

Scalar random_ratfunc(std::mt19937& rng) {
    UPoly d = random_poly(rng, 2);
    while (d.is_zero()) d = random_poly(rng, 2);
    return Scalar(RatFunc(random_poly(rng, 3), d));
}

Scalar random_cyclo(std::mt19937& rng, int level) {
    return Scalar(Cyclo(level, random_poly(rng, 6)));
}

}  // namespace

TEST_CASE("rational function canonical form") {
    Scalar a = (qs() * qs() - 1) / (qs() + 1);
    CHECK(a == qs() - 1);
    CHECK(a.str() == "q-1");
    Scalar b = qs().inv();
    CHECK(b.str() == "1/q");
    Scalar c = (qs() * qs() - 1) / (qs() * qs() + 1);
    CHECK(c.str() == "(q^2-1)/(q^2+1)");
    CHECK((qs() / qs()).is_one());
    CHECK((Scalar(2) * qs() / (Scalar(4) * qs() + 2)).str() == "1/2*q/(q+1/2)");
}

TEST_CASE("fractions are canonical") {
    CHECK(Scalar::frac(0, 3) == Scalar(0));
    CHECK(Scalar::frac(0, 3).str() == "0");
    CHECK(Scalar::frac(2, 4) == Scalar::frac(1, 2));
    CHECK(Scalar::frac(1, -2) == Scalar::frac(-1, 2));
    CHECK(Scalar::frac(6, 3).is_rational());
    CHECK(Scalar::frac(6, 3) == Scalar(2));
}

TEST_CASE("scalar text round-trips through the parser") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Scalar a = random_ratfunc(rng);
        CHECK(parse_scalar(a.str(), Field::rational_functions()) == a);
        Scalar z = random_cyclo(rng, 5);
        CHECK(parse_scalar(z.str(), Field::cyclotomic(5)) == z);
    }
    CHECK(parse_scalar("-3/4", Field::rationals()) == Scalar::frac(-3, 4));
    CHECK(parse_scalar("q^-2", Field::rational_functions()) == qs().pow(-2));
    CHECK_THROWS_AS(parse_scalar("q", Field::rationals()), Error);
}

TEST_CASE("polynomial gcd matches a hand factorisation") {
    // (t-1)(t+2) and (t-1)(t-3) share exactly t-1.
    UPoly a({-2, 1, 1}), b({3, -4, 1});
    CHECK(UPoly::gcd(a, b) == UPoly({-1, 1}));
    CHECK(UPoly::gcd(UPoly({Rational(1, 2), Rational(1, 3)}), UPoly({3, 2})) == UPoly({Rational(3, 2), 1}));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(3) == UPoly({1, 1, 1}));
    CHECK(cyclotomic_polynomial(5) == UPoly({1, 1, 1, 1, 1}));
    CHECK(cyclotomic_polynomial(9) == UPoly({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(15).degree() == 8);
}

TEST_CASE("specialize examples") {
    RatFunc q = RatFunc::q();
    CHECK(Scalar(specialize(q * q, 3)) == Scalar::zeta(3).pow(2));

    // Oracle: (z-1)(a z + b) = 1 with z^2 = -z-1 gives b = 2a, -3a = 1.
    Cyclo inv = specialize(RatFunc(UPoly::constant(1), UPoly({-1, 1})), 3);
    Scalar expect = Scalar::frac(-1, 3) * Scalar::zeta(3) + Scalar::frac(-2, 3);
    CHECK(Scalar(inv) == expect);

    // (q^3-1)/(q-1) reduces to q^2+q+1 = Phi_3.
    RatFunc f(UPoly({-1, 0, 0, 1}), UPoly({-1, 1}));
    CHECK(f.num() == UPoly({1, 1, 1}));
    CHECK(specialize(f, 3).is_zero());

    RatFunc bad(UPoly::constant(1), UPoly({1, 1, 1}));
    try {
        specialize(bad, 3);
        FAIL("expected DenominatorVanishes");
    } catch (const Error& e) {
        CHECK(e.kind() == "DenominatorVanishes");
    }
}

TEST_CASE("specialize is multiplicative") {
    std::mt19937 rng(11);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        Scalar f = random_ratfunc(rng), g = random_ratfunc(rng);
        if (!f.is_ratfunc() || !g.is_ratfunc()) continue;
        try {
            Cyclo a = specialize(f.ratfunc(), 5), b = specialize(g.ratfunc(), 5);
            Scalar fg = f * g;
            Cyclo c = fg.is_ratfunc() ? specialize(fg.ratfunc(), 5) : Cyclo(5, fg.rational());
            CHECK(Scalar(a * b) == Scalar(c));
            ++checked;
        } catch (const Error& e) {
            CHECK(e.kind() == "DenominatorVanishes");
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(3);
    for (int round = 0; round < 40; ++round) {
        for (int fld = 0; fld < 2; ++fld) {
            auto pick = [&] { return fld == 0 ? random_ratfunc(rng) : random_cyclo(rng, 7); };
            Scalar a = pick(), b = pick(), c = pick();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        }
    }
}

TEST_CASE("mixing Q(q) with a cyclotomic field is rejected") {
    CHECK_THROWS_AS(Scalar::q() + Scalar::zeta(3), Error);
    CHECK(Scalar::q() + Scalar(1) == parse_scalar("q+1", Field::rational_functions()));
}

TEST_CASE("rref, kernel and solve examples") {
    Matrix id = Matrix::identity(3);
    RrefResult r = rref(id);
    CHECK(r.rank == 3);
    CHECK(r.form == id);
    Matrix z(3, 3);
    CHECK(rref(z).rank == 0);
    CHECK(kernel(z).size() == 3);
    CHECK(kernel(id).empty());

    Matrix m = Matrix::from_rows({{1, qs()}, {qs(), qs() * qs()}});
    CHECK(rref(m).rank == 1);
    CHECK(rank(m) == 1);

    auto k = kernel(Matrix::from_rows({{1, qs()}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -qs());
    CHECK(k[0][1] == Scalar(1));

    Vec b{Scalar(4), Scalar(5), Scalar(6)};
    CHECK(solve(id, b).value() == b);
    CHECK_FALSE(solve(Matrix::from_rows({{1}, {1}}), Vec{1, 2}).has_value());
    auto x = solve(Matrix::from_rows({{qs()}}), Vec{qs() * qs()});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == qs());
}

TEST_CASE("rref idempotence and rank-nullity on random matrices") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dim(1, 5), co(-2, 2);
    for (int t = 0; t < 40; ++t) {
        size_t r = dim(rng), c = dim(rng);
        Matrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m(i, j) = t % 2 ? Scalar(co(rng)) : Scalar(co(rng)) * qs() + co(rng);
        RrefResult a = rref(m);
        CHECK(rref(a.form).form == a.form);
        auto ker = kernel(m);
        CHECK(a.rank + ker.size() == c);
        CHECK(rank(m) == a.rank);
        for (const auto& v : ker) CHECK(is_zero(m * v));
        auto inv = inverse(m);
        if (r == c) {
            CHECK(inv.has_value() == (a.rank == r));
            if (inv) CHECK((m * *inv).is_identity());
        }
    }
}

TEST_CASE("row reducer agrees with dense rank") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> co(-1, 1);
    for (int t = 0; t < 20; ++t) {
        Matrix m(6, 8);
        RowReducer red;
        for (size_t i = 0; i < 6; ++i) {
            SparseVec v;
            for (size_t j = 0; j < 8; ++j) {
                m(i, j) = co(rng);
                if (!m(i, j).is_zero()) v.emplace_back(static_cast<uint32_t>(j), m(i, j));
            }
            red.insert(v);
        }
        CHECK(red.rank() == rref(m).rank);
    }
}
