#include <catch_amalgamated.hpp>

#include <random>

#include "hq/rewrite.hpp"

using namespace hq;

namespace {

const Field QQ = Field::rational_functions();

NCPoly P(const std::string& s, const RewriteSystem& sys) { return parse_ncpoly(s, sys.names(), sys.field()); }

RewriteSystem quantum_plane() {
    RewriteSystem s({"x", "y"}, QQ);
    s.add_relation(P("y*x - q*x*y", s));
    return s;
}

// Quantum 2x2 matrices with a = X11, b = X12, c = X21, d = X22, written out by hand.
RewriteSystem oq_m2() {
    RewriteSystem s({"a", "b", "c", "d"}, QQ);
    for (const char* r : {"a*b - q*b*a", "a*c - q*c*a", "b*d - q*d*b", "c*d - q*d*c", "b*c - c*b",
                          "a*d - d*a - (q - q^-1)*b*c"})
        s.add_relation(P(r, s));
    return s;
}

NCPoly random_poly(std::mt19937& rng, size_t gens, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), co(-2, 2), g(0, static_cast<int>(gens) - 1);
    NCPoly p;
    for (int t = 0; t < 3; ++t) {
        Word w(len(rng));
        for (auto& l : w) l = static_cast<Letter>(g(rng));
        p.add_term(w, Scalar(co(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("normal form examples in the quantum plane") {
    RewriteSystem s = quantum_plane();
    CHECK(s.normal_form(P("x", s)) == P("x", s));
    CHECK(s.normal_form(P("y*x", s)) == P("q*x*y", s));
    // Two applications of y*x -> q*x*y.
    CHECK(s.normal_form(P("y*y*x", s)) == P("q^2*x*y*y", s));
}

TEST_CASE("rules must decrease in the monomial order") {
    RewriteSystem s({"x", "y"}, QQ);
    CHECK_THROWS_AS(s.add_rule(Word{0, 1}, NCPoly::word(Word{1, 0})), Error);
    CHECK_THROWS_AS(s.add_relation(NCPoly(Scalar(1))), Error);
}

TEST_CASE("completion leaves confluent systems unchanged") {
    RewriteSystem comm({"x", "y", "z"}, Field::rationals());
    comm.add_relation(P("y*x - x*y", comm));
    comm.add_relation(P("z*x - x*z", comm));
    comm.add_relation(P("z*y - y*z", comm));
    RewriteSystem c = complete(comm, 6);
    CHECK(c.rules().size() == 3);
    CHECK(c.certificate() == 6);

    RewriteSystem qp = complete(quantum_plane(), 6);
    CHECK(qp.rules().size() == 1);

    RewriteSystem m2 = oq_m2();
    CHECK(unresolved_overlaps(m2, 6).empty());
    RewriteSystem m2c = complete(m2, 6);
    CHECK(m2c.rules().size() == 6);
    CHECK(m2c.certificate() == 6);
}

TEST_CASE("completion adds the missing consequence") {
    // x*x -> y: the overlap x*x*x forces x*y = y*x, which completion must orient.
    RewriteSystem s({"x", "y"}, Field::rationals());
    s.add_relation(P("x*x - y", s));
    CHECK_FALSE(unresolved_overlaps(s, 3).empty());
    RewriteSystem c = complete(s, 6);
    CHECK(unresolved_overlaps(c, 6).empty());
    CHECK(c.normal_form(P("y*x - x*y", c)).is_zero());
}

TEST_CASE("tau-normal elements") {
    RewriteSystem comm({"x", "y"}, Field::rationals());
    comm.add_relation(P("y*x - x*y", comm));
    comm = complete(comm, 6);
    auto t0 = is_tau_normal(P("x", comm), comm);
    REQUIRE(t0);
    CHECK(t0->equals(AlgebraMap::identity(2), comm));

    RewriteSystem qp = complete(quantum_plane(), 6);
    auto t1 = is_tau_normal(P("x", qp), qp);
    REQUIRE(t1);
    CHECK(t1->images[1] == P("q^-1*y", qp));
    CHECK(t1->images[0] == P("x", qp));

    RewriteSystem m2 = complete(oq_m2(), 6);
    auto t2 = is_tau_normal(P("b", m2), m2);
    REQUIRE(t2);
    auto sc = t2->diagonal_scalars();
    REQUIRE(sc);
    CHECK((*sc)[0] == Scalar::q().inv());
    CHECK((*sc)[3] == Scalar::q());
    CHECK((*sc)[1] == Scalar(1));
    CHECK((*sc)[2] == Scalar(1));

    // a is not normal in O_q(M_2): d*a involves b*c.
    CHECK_FALSE(is_tau_normal(P("a", m2), m2).has_value());

    RewriteSystem shallow = oq_m2();
    CHECK_THROWS_AS(is_tau_normal(P("b", shallow), shallow), Error);
}

TEST_CASE("general normalizing maps") {
    // [x,y] = x in U(g): x*y = (y+1)*x.
    RewriteSystem u({"x", "y"}, Field::rationals());
    u.add_relation(P("y*x - x*y + x", u));
    u = complete(u, 6);
    CHECK_FALSE(is_tau_normal(P("x", u), u).has_value());
    auto t = find_normalizing_map(P("x", u), u, 2);
    REQUIRE(t);
    CHECK(u.normal_form(t->images[1]) == P("y + 1", u));
    auto inv = invert_map(*t, u, 2);
    REQUIRE(inv);
    CHECK(u.normal_form(inv->images[1]) == P("y - 1", u));
}

TEST_CASE("quotients") {
    RewriteSystem m2 = complete(oq_m2(), 6);
    RewriteSystem qb = quotient(m2, P("b", m2), 6);
    CHECK(qb.normal_form(P("b", qb)).is_zero());
    CHECK(qb.normal_form(P("d*a", qb)) == P("a*d", qb));
    CHECK(qb.normal_form(P("c*a", qb)) == P("q^-1*a*c", qb));

    RewriteSystem comm({"x", "y"}, Field::rationals());
    comm.add_relation(P("y*x - x*y", comm));
    RewriteSystem qx = quotient(complete(comm, 6), P("x - 1", comm), 6);
    CHECK(qx.normal_form(P("x*y*x", qx)) == P("y", qx));

    RewriteSystem sl2 = oq_m2();
    sl2.add_relation(P("a*d - q*b*c - 1", sl2));
    sl2 = complete(sl2, 6);
    RewriteSystem s1 = quotient(sl2, P("b", sl2), 6);
    RewriteSystem s2 = quotient(s1, P("c", s1), 6);
    CHECK(s2.normal_form(P("a*d", s2)) == P("1", s2));
    CHECK(s2.normal_form(P("d*a", s2)) == P("1", s2));
    for (const char* g : {"a", "b", "c", "d"})
        for (const char* h : {"a", "b", "c", "d"})
            CHECK(s2.normal_form(P(std::string(g) + "*" + h + " - " + h + "*" + g, s2)).is_zero());
}

TEST_CASE("nonzerodivisor certificates") {
    RewriteSystem m2 = complete(oq_m2(), 6);
    auto cert = certify_nonzerodivisor(P("b", m2), m2, 5);
    CHECK(cert.certified);
    RewriteSystem nil({"x"}, Field::rationals());
    nil.add_relation(P("x*x", nil));
    nil = complete(nil, 6);
    CHECK_FALSE(certify_nonzerodivisor(P("x", nil), nil, 4).certified);
}

TEST_CASE("normal form is idempotent, linear and multiplicative") {
    RewriteSystem m2 = complete(oq_m2(), 8);
    std::mt19937 rng(17);
    for (int t = 0; t < 40; ++t) {
        NCPoly p = random_poly(rng, 4, 3), r = random_poly(rng, 4, 3);
        NCPoly np = m2.normal_form(p), nr = m2.normal_form(r);
        CHECK(m2.normal_form(np) == np);
        CHECK(m2.normal_form(p + r * Scalar::q()) == np + nr * Scalar::q());
        CHECK(m2.normal_form(p * r) == m2.normal_form(np * nr));
    }
}

TEST_CASE("reduction order does not matter after completion") {
    RewriteSystem m2 = oq_m2();
    m2.add_relation(P("a*d - q*b*c - 1", m2));
    m2 = complete(m2, 6);
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        NCPoly p = random_poly(rng, 4, 6);
        CHECK(m2.normal_form_randomized(p, rng) == m2.normal_form(p));
    }
}

TEST_CASE("tau found by is_tau_normal satisfies the defining identity") {
    RewriteSystem m2 = complete(oq_m2(), 6);
    for (const char* x : {"b", "c"}) {
        NCPoly xp = P(x, m2);
        auto t = is_tau_normal(xp, m2);
        REQUIRE(t);
        for (size_t g = 0; g < 4; ++g) {
            NCPoly gp = NCPoly::gen(static_cast<Letter>(g));
            CHECK(m2.normal_form(xp * gp - t->images[g] * xp).is_zero());
        }
    }
}

TEST_CASE("polynomial text round-trips") {
    RewriteSystem m2 = oq_m2();
    std::mt19937 rng(4);
    for (int t = 0; t < 30; ++t) {
        NCPoly p = random_poly(rng, 4, 3) * (Scalar::q() + Scalar(2)).inv();
        CHECK(P(p.str(m2.names(), m2.order()), m2) == p);
    }
}
