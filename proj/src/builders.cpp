#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "hq/hopf.hpp"

namespace hq {

// ------------------------------------------------------ quantum matrices

namespace {

std::string xname(int i, int j) { return "X" + std::to_string(i + 1) + std::to_string(j + 1); }

std::vector<std::string> matrix_names(int n) {
    if (n < 1 || n > 9) throw Error("InvalidArgument", "quantum matrices need 1 <= n <= 9");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) names.push_back(xname(i, j));
    return names;
}

NCPoly X(int n, int i, int j) { return NCPoly::gen(static_cast<Letter>(i * n + j)); }

int inversions(const std::vector<int>& p) {
    int c = 0;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++c;
    return c;
}

// Quantum minor on the given rows and columns (both increasing), expanded
// along rows: sum over bijections of (-q)^inv * X_{r1 c_p1} ... X_{rm c_pm}.
NCPoly quantum_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols, const Scalar& q) {
    std::vector<int> p(rows.size());
    std::iota(p.begin(), p.end(), 0);
    NCPoly out;
    do {
        NCPoly term((-q).pow(inversions(p)));
        for (size_t a = 0; a < rows.size(); ++a) term = term * X(n, rows[a], cols[p[a]]);
        out += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

RewriteSystem quantum_matrix_system(int n, const Scalar& q) {
    RewriteSystem s(matrix_names(n), field_of(q));
    Scalar qq = q - q.inv();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = i; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (k == i && l <= j) continue;
                    if (i == k) {
                        s.add_relation(X(n, i, j) * X(n, i, l) - X(n, i, l) * X(n, i, j) * q);
                    } else if (j == l) {
                        s.add_relation(X(n, i, j) * X(n, k, j) - X(n, k, j) * X(n, i, j) * q);
                    } else if (j > l) {
                        // X_il X_kj = X_kj X_il with i < k, l < j.
                        s.add_relation(X(n, i, j) * X(n, k, l) - X(n, k, l) * X(n, i, j));
                    } else {
                        s.add_relation(X(n, i, j) * X(n, k, l) - X(n, k, l) * X(n, i, j) -
                                       X(n, i, l) * X(n, k, j) * qq);
                    }
                }
    return s;
}

void set_matrix_coalgebra(HopfPresentation& h, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Tensor t(2);
            for (int k = 0; k < n; ++k) t += Tensor::pure({X(n, i, k), X(n, k, j)});
            h.coproduct.push_back(t);
            h.counit.push_back(Scalar(i == j ? 1 : 0));
        }
}

}  // namespace

NCPoly quantum_determinant(int n, const Scalar& q) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return quantum_minor(n, all, all, q);
}

HopfPresentation build_quantum_matrices(int n, const Scalar& q, int degree_bound) {
    RewriteSystem s = quantum_matrix_system(n, q);
    HopfPresentation h("oq-m-" + std::to_string(n), complete(s, degree_bound));
    h.relations = s.relations();
    set_matrix_coalgebra(h, n);
    return h;
}

HopfPresentation build_quantum_sl(int n, const Scalar& q, int degree_bound) {
    RewriteSystem s = quantum_matrix_system(n, q);
    s.add_relation(quantum_determinant(n, q) - NCPoly(Scalar(1)));
    HopfPresentation h("oq-sl-" + std::to_string(n), complete(s, degree_bound));
    h.relations = s.relations();
    set_matrix_coalgebra(h, n);
    std::vector<NCPoly> anti, anti_inv;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);
            for (int c = 0; c < n; ++c)
                if (c != i) cols.push_back(c);
            NCPoly sij = h.nf(quantum_minor(n, rows, cols, q) * (-q).pow(i - j));
            anti.push_back(sij);
            // S^2(X_ij) = q^{2(i-j)} X_ij, so S^-1(X_ij) = q^{2(j-i)} S(X_ij).
            anti_inv.push_back(sij * q.pow(2 * (j - i)));
        }
    h.antipode = anti;
    h.antipode_inverse = anti_inv;
    return h;
}

// ------------------------------------------------- enveloping algebras

Rational LieData::ad_trace(size_t i) const {
    Rational t = 0;
    for (size_t k = 0; k < names.size(); ++k) t += c[i][k][k];
    return t;
}

void LieData::check_jacobi() const {
    const size_t n = names.size();
    if (c.size() != n) throw Error("DimensionMismatch", "structure constants need n x n x n entries");
    for (size_t i = 0; i < n; ++i) {
        if (c[i].size() != n) throw Error("DimensionMismatch", "structure constants need n x n x n entries");
        for (size_t j = 0; j < n; ++j) {
            if (c[i][j].size() != n) throw Error("DimensionMismatch", "structure constants need n x n x n entries");
            for (size_t k = 0; k < n; ++k)
                if (c[i][j][k] != -c[j][i][k])
                    throw Error("JacobiViolation", "bracket is not antisymmetric at [" + names[i] + "," + names[j] + "]");
        }
    }
    // [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] = 0.
    auto br = [&](size_t a, const std::vector<Rational>& v) {
        std::vector<Rational> out(n);
        for (size_t b = 0; b < n; ++b)
            if (v[b] != 0)
                for (size_t m = 0; m < n; ++m) out[m] += v[b] * c[a][b][m];
        return out;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                auto a = br(i, c[j][k]), b = br(j, c[k][i]), d = br(k, c[i][j]);
                for (size_t m = 0; m < n; ++m)
                    if (a[m] + b[m] + d[m] != 0)
                        throw Error("JacobiViolation", "Jacobi identity fails on (" + names[i] + ", " + names[j] +
                                                           ", " + names[k] + ")");
            }
}

HopfPresentation build_enveloping(const LieData& g, int degree_bound) {
    g.check_jacobi();
    const size_t n = g.names.size();
    RewriteSystem s(g.names, Field::rationals());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            NCPoly rhs = NCPoly::gen(static_cast<Letter>(i)) * NCPoly::gen(static_cast<Letter>(j));
            for (size_t k = 0; k < n; ++k) rhs.add_term(Word{static_cast<Letter>(k)}, Scalar(-g.c[i][j][k]));
            s.add_rule(Word{static_cast<Letter>(j), static_cast<Letter>(i)}, rhs);
        }
    HopfPresentation h("enveloping", complete(s, degree_bound));
    h.relations = s.relations();
    std::vector<NCPoly> anti;
    for (size_t i = 0; i < n; ++i) {
        NCPoly x = NCPoly::gen(static_cast<Letter>(i));
        h.coproduct.push_back(Tensor::pure({x, NCPoly(Scalar(1))}) + Tensor::pure({NCPoly(Scalar(1)), x}));
        h.counit.push_back(Scalar(0));
        anti.push_back(-x);
    }
    h.antipode = anti;
    h.antipode_inverse = anti;
    return h;
}

// ------------------------------------------------------- group algebras

int PolycyclicData::action_sign(size_t k, size_t i) const {
    int e = conj.at(k).at(i).at(i);
    if (e != 1 && e != -1)
        throw Error("NonInvertibleAction", "conjugation by " + names[k] + " does not act by +-1 on the factor of " +
                                               names[i]);
    return e;
}

PolycyclicData PolycyclicData::free_abelian(const std::vector<std::string>& names) {
    PolycyclicData d;
    d.names = names;
    for (const auto& n : names) {
        std::string inv = n;
        inv[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(inv[0])));
        if (inv == n) inv = n + "inv";
        d.inverse_names.push_back(inv);
    }
    const size_t h = names.size();
    d.conj.resize(h);
    d.conj_inv.resize(h);
    for (size_t k = 0; k < h; ++k)
        for (size_t i = 0; i < k; ++i) {
            std::vector<int> e(k, 0);
            e[i] = 1;
            d.conj[k].push_back(e);
            d.conj_inv[k].push_back(e);
        }
    return d;
}

PolycyclicData PolycyclicData::klein_bottle() {
    PolycyclicData d;
    d.names = {"x", "t"};
    d.inverse_names = {"X", "T"};
    d.conj = {{}, {{-1}}};
    d.conj_inv = {{}, {{-1}}};
    return d;
}

PolycyclicData PolycyclicData::heisenberg() {
    // z central, y x y^-1 = z x.
    PolycyclicData d;
    d.names = {"z", "x", "y"};
    d.inverse_names = {"Z", "X", "Y"};
    d.conj = {{}, {{1}}, {{1, 0}, {1, 1}}};
    d.conj_inv = {{}, {{1}}, {{1, 0}, {-1, 1}}};
    return d;
}

HopfPresentation build_group_algebra(const PolycyclicData& g, const std::string& name, int degree_bound) {
    const size_t h = g.hirsch_length();
    if (g.inverse_names.size() != h || g.conj.size() != h || g.conj_inv.size() != h)
        throw Error("DimensionMismatch", "polycyclic data is incomplete");
    for (size_t k = 0; k < h; ++k) {
        if (g.conj[k].size() != k || g.conj_inv[k].size() != k)
            throw Error("DimensionMismatch", "conjugation data of " + g.names[k] + " is incomplete");
        for (size_t i = 0; i < k; ++i) {
            g.action_sign(k, i);
            int e = g.conj_inv[k][i].at(i);
            if (e != g.conj[k][i][i]) throw Error("NonInvertibleAction", "inverse conjugation data is inconsistent");
        }
    }
    // Letters a_1, A_1, a_2, A_2, ...; tails of conjugates get weight 0 so
    // that collection rules decrease.
    std::vector<std::string> names;
    for (size_t i = 0; i < h; ++i) {
        names.push_back(g.names[i]);
        names.push_back(g.inverse_names[i]);
    }
    std::vector<int> weights(2 * h, 1);
    for (size_t k = 0; k < h; ++k)
        for (size_t i = 0; i < k; ++i)
            for (const auto* e : {&g.conj[k][i], &g.conj_inv[k][i]})
                for (size_t j = 0; j < e->size(); ++j)
                    if (j != i && (*e)[j] != 0) weights[2 * j] = weights[2 * j + 1] = 0;
    bool weighted = std::find(weights.begin(), weights.end(), 0) != weights.end();
    RewriteSystem s(names, Field::rationals(), weighted ? weights : std::vector<int>{});
    auto letter = [](size_t i, int sign) { return static_cast<Letter>(2 * i + (sign > 0 ? 0 : 1)); };
    auto word_of = [&](const std::vector<int>& e, int sign) {
        Word w;
        for (size_t j = 0; j < e.size(); ++j)
            for (int r = 0; r < std::abs(e[j]); ++r) w.push_back(letter(j, e[j]));
        if (sign < 0) {
            std::reverse(w.begin(), w.end());
            for (auto& l : w) l ^= 1;
        }
        return w;
    };
    for (size_t i = 0; i < h; ++i) {
        s.add_rule(Word{letter(i, 1), letter(i, -1)}, NCPoly(Scalar(1)));
        s.add_rule(Word{letter(i, -1), letter(i, 1)}, NCPoly(Scalar(1)));
    }
    for (size_t k = 0; k < h; ++k)
        for (size_t i = 0; i < k; ++i)
            for (int sk : {1, -1})
                for (int si : {1, -1}) {
                    Word img = word_of(sk > 0 ? g.conj[k][i] : g.conj_inv[k][i], si);
                    img.push_back(letter(k, sk));
                    s.add_rule(Word{letter(k, sk), letter(i, si)}, NCPoly::word(img));
                }
    HopfPresentation hp(name, complete(s, degree_bound));
    hp.relations = s.relations();
    std::vector<NCPoly> anti;
    for (size_t l = 0; l < 2 * h; ++l) {
        NCPoly x = NCPoly::gen(static_cast<Letter>(l));
        hp.coproduct.push_back(Tensor::pure({x, x}));
        hp.counit.push_back(Scalar(1));
        anti.push_back(NCPoly::gen(static_cast<Letter>(l ^ 1)));
    }
    hp.antipode = anti;
    hp.antipode_inverse = anti;
    return hp;
}

HopfPresentation build_laurent(int n, int degree_bound) {
    if (n < 1) throw Error("InvalidArgument", "laurent algebra needs n >= 1");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(n <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1));
    PolycyclicData d = PolycyclicData::free_abelian(names);
    if (n > 3)
        for (int i = 0; i < n; ++i) d.inverse_names[i] = "X" + std::to_string(i + 1);
    return build_group_algebra(d, "laurent-" + std::to_string(n), degree_bound);
}

// ---------------------------------------------------------------- U_q(sl2)

HopfPresentation build_uq_sl2(const Scalar& q, int degree_bound) {
    RewriteSystem s({"E", "F", "K", "Ki"}, field_of(q));
    const NCPoly E = NCPoly::gen(0), F = NCPoly::gen(1), K = NCPoly::gen(2), Ki = NCPoly::gen(3);
    const NCPoly one(Scalar(1));
    s.add_relation(K * Ki - one);
    s.add_relation(Ki * K - one);
    s.add_relation(K * E - E * K * q.pow(2));
    s.add_relation(K * F - F * K * q.pow(-2));
    s.add_relation(Ki * E - E * Ki * q.pow(-2));
    s.add_relation(Ki * F - F * Ki * q.pow(2));
    s.add_relation(E * F - F * E - (K - Ki) * (q - q.inv()).inv());
    HopfPresentation h("uq-sl2", complete(s, degree_bound));
    h.relations = s.relations();
    h.coproduct = {Tensor::pure({E, K}) + Tensor::pure({one, E}), Tensor::pure({F, one}) + Tensor::pure({Ki, F}),
                   Tensor::pure({K, K}), Tensor::pure({Ki, Ki})};
    h.counit = {Scalar(0), Scalar(0), Scalar(1), Scalar(1)};
    h.antipode = std::vector<NCPoly>{h.nf(-(E * Ki)), h.nf(-(K * F)), Ki, K};
    // S^-1(E) = -Ki*E, S^-1(F) = -F*K.
    h.antipode_inverse = std::vector<NCPoly>{h.nf(-(Ki * E)), h.nf(-(F * K)), Ki, K};
    return h;
}

}  // namespace hq
