#include "hq/fd_hopf.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace hq {

// ------------------------------------------------------------- FDHopf

Vec FDHopf::basis_vector(size_t i) const {
    Vec v(n);
    v[i] = 1;
    return v;
}

Vec FDHopf::mul(const Vec& a, const Vec& b) const {
    Vec r(n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const Scalar ab = a[i] * b[j];
            for (size_t k = 0; k < n; ++k)
                if (!m(i, j, k).is_zero()) r[k] += ab * m(i, j, k);
        }
    }
    return r;
}

Matrix FDHopf::left_mult(const Vec& a) const {
    std::vector<Vec> cols;
    for (size_t j = 0; j < n; ++j) cols.push_back(mul(a, basis_vector(j)));
    return Matrix::from_columns(n, cols);
}

Matrix FDHopf::right_mult(const Vec& a) const {
    std::vector<Vec> cols;
    for (size_t j = 0; j < n; ++j) cols.push_back(mul(basis_vector(j), a));
    return Matrix::from_columns(n, cols);
}

Vec FDHopf::coproduct(const Vec& a) const {
    Vec r(n * n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t jk = 0; jk < n * n; ++jk)
            if (!comult[i * n * n + jk].is_zero()) r[jk] += a[i] * comult[i * n * n + jk];
    }
    return r;
}

Scalar FDHopf::eps(const Vec& a) const {
    Scalar s;
    for (size_t i = 0; i < n; ++i)
        if (!a[i].is_zero() && !counit[i].is_zero()) s += a[i] * counit[i];
    return s;
}

std::string FDHopf::vec_str(const Vec& v) const {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += v[i].is_one() ? basis[i] : "(" + v[i].str() + ")*" + basis[i];
    }
    return out.empty() ? "0" : out;
}

namespace {

// Product in A (x) A of flattened n*n vectors.
Vec tensor_mul(const FDHopf& h, const Vec& x, const Vec& y) {
    const size_t n = h.n;
    Vec r(n * n);
    for (size_t a = 0; a < n * n; ++a) {
        if (x[a].is_zero()) continue;
        for (size_t b = 0; b < n * n; ++b) {
            if (y[b].is_zero()) continue;
            const Scalar c = x[a] * y[b];
            const size_t j = a / n, k = a % n, l = b / n, mm = b % n;
            for (size_t p = 0; p < n; ++p) {
                const Scalar& c1 = h.m(j, l, p);
                if (c1.is_zero()) continue;
                for (size_t s = 0; s < n; ++s)
                    if (!h.m(k, mm, s).is_zero()) r[p * n + s] += c * c1 * h.m(k, mm, s);
            }
        }
    }
    return r;
}

Vec outer(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

Vec axpy(Vec x, const Scalar& a, const Vec& y) {
    for (size_t i = 0; i < x.size(); ++i)
        if (!y[i].is_zero()) x[i] += a * y[i];
    return x;
}

Vec scaled(Vec x, const Scalar& a) {
    for (auto& c : x) c *= a;
    return x;
}

std::vector<size_t> algebra_generators(const FDHopf& h) {
    if (!h.generators.empty()) return h.generators;
    std::vector<size_t> all(h.n);
    for (size_t i = 0; i < h.n; ++i) all[i] = i;
    return all;
}

Matrix stack(const std::vector<Matrix>& blocks, size_t cols) {
    size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    Matrix m(rows, cols);
    size_t r0 = 0;
    for (const auto& b : blocks) {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < cols; ++j) m(r0 + i, j) = b(i, j);
        r0 += b.rows();
    }
    return m;
}

Matrix scalar_id(size_t n, const Scalar& s) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(static_cast<uint32_t>(i), v[i]);
    return s;
}

std::vector<Scalar> roots_of_unity(const Field& f) {
    std::vector<Scalar> r{Scalar(1), Scalar(-1)};
    if (f.kind == Field::Cyclotomic) {
        Scalar z = Scalar::zeta(f.level);
        for (int k = 1; k < f.level; ++k) {
            r.push_back(z.pow(k));
            r.push_back(-z.pow(k));
        }
    }
    return r;
}

}  // namespace

// ------------------------------------------------------------- axioms

AxiomReport verify_fd_axioms(const FDHopf& h) {
    AxiomReport rep;
    const size_t n = h.n;
    auto record = [&](const std::string& axiom, const std::string& where, bool ok, const std::string& detail) {
        rep.checks.push_back({axiom, where, ok ? "pass" : "fail", ok ? "" : detail});
        if (!ok) rep.passed = false;
    };
    std::vector<Vec> e(n);
    for (size_t i = 0; i < n; ++i) e[i] = h.basis_vector(i);
    std::vector<Vec> delta(n);
    for (size_t i = 0; i < n; ++i) delta[i] = h.coproduct(e[i]);
    const Vec one = h.unit;

    for (size_t i = 0; i < n; ++i) {
        const std::string& w = h.basis[i];
        record("unit", w, h.mul(one, e[i]) == e[i] && h.mul(e[i], one) == e[i], "1*e != e or e*1 != e");

        bool assoc = true;
        for (size_t j = 0; j < n && assoc; ++j) {
            Vec ij = h.mul(e[i], e[j]);
            for (size_t k = 0; k < n && assoc; ++k) assoc = h.mul(ij, e[k]) == h.mul(e[i], h.mul(e[j], e[k]));
        }
        record("associativity", w, assoc, "(e_i e_j) e_k != e_i (e_j e_k) for some j, k");

        Vec left(n * n * n), right(n * n * n);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const Scalar& c = delta[i][j * n + k];
                if (c.is_zero()) continue;
                for (size_t ab = 0; ab < n * n; ++ab) {
                    if (!delta[j][ab].is_zero()) left[ab * n + k] += c * delta[j][ab];
                    if (!delta[k][ab].is_zero()) right[j * n * n + ab] += c * delta[k][ab];
                }
            }
        record("coassociativity", w, left == right, "(Delta x id) Delta != (id x Delta) Delta");

        Vec cl(n), cr(n);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const Scalar& c = delta[i][j * n + k];
                if (c.is_zero()) continue;
                cl[k] += c * h.counit[j];
                cr[j] += c * h.counit[k];
            }
        record("counit-left", w, cl == e[i], "(eps x id) Delta(e) = " + h.vec_str(cl));
        record("counit-right", w, cr == e[i], "(id x eps) Delta(e) = " + h.vec_str(cr));

        bool dmul = true, emul = true;
        for (size_t j = 0; j < n; ++j) {
            Vec ij = h.mul(e[i], e[j]);
            dmul = dmul && h.coproduct(ij) == tensor_mul(h, delta[i], delta[j]);
            emul = emul && h.eps(ij) == h.counit[i] * h.counit[j];
        }
        record("coproduct-multiplicative", w, dmul, "Delta(e_i e_j) != Delta(e_i) Delta(e_j) for some j");
        record("counit-multiplicative", w, emul, "eps(e_i e_j) != eps(e_i) eps(e_j) for some j");

        Vec sl(n), sr(n);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const Scalar& c = delta[i][j * n + k];
                if (c.is_zero()) continue;
                sl = axpy(sl, c, h.mul(h.antipode.col(j), e[k]));
                sr = axpy(sr, c, h.mul(e[j], h.antipode.col(k)));
            }
        const Vec target = scaled(one, h.counit[i]);
        record("antipode-left", w, sl == target, "S(e1) e2 = " + h.vec_str(sl));
        record("antipode-right", w, sr == target, "e1 S(e2) = " + h.vec_str(sr));
    }
    record("unit-coproduct", "1", h.coproduct(one) == outer(one, one), "Delta(1) != 1 (x) 1");
    record("unit-counit", "1", h.eps(one) == Scalar(1), "eps(1) != 1");
    record("antipode-invertible", "S", inverse(h.antipode).has_value(), "antipode matrix is singular");
    return rep;
}

bool is_algebra_map(const FDHopf& h, const Matrix& f) {
    if (f * h.unit != h.unit) return false;
    for (size_t i = 0; i < h.n; ++i)
        for (size_t j = 0; j < h.n; ++j)
            if (f * h.mul(h.basis_vector(i), h.basis_vector(j)) != h.mul(f.col(i), f.col(j))) return false;
    return true;
}

bool is_character(const FDHopf& h, const Vec& pi) {
    if (pi.size() != h.n) return false;
    auto val = [&](const Vec& v) {
        Scalar s;
        for (size_t i = 0; i < h.n; ++i)
            if (!v[i].is_zero()) s += v[i] * pi[i];
        return s;
    };
    if (val(h.unit) != Scalar(1)) return false;
    for (size_t i = 0; i < h.n; ++i)
        for (size_t j = 0; j < h.n; ++j)
            if (val(h.mul(h.basis_vector(i), h.basis_vector(j))) != pi[i] * pi[j]) return false;
    return true;
}

// ------------------------------------------------------------- integrals

std::vector<Vec> left_integral_space(const FDHopf& h) {
    std::vector<Matrix> blocks;
    for (size_t a = 0; a < h.n; ++a)
        blocks.push_back(h.left_mult(h.basis_vector(a)) - scalar_id(h.n, h.counit[a]));
    return kernel(stack(blocks, h.n));
}

std::vector<Vec> right_integral_space(const FDHopf& h) {
    std::vector<Matrix> blocks;
    for (size_t a = 0; a < h.n; ++a)
        blocks.push_back(h.right_mult(h.basis_vector(a)) - scalar_id(h.n, h.counit[a]));
    return kernel(stack(blocks, h.n));
}

Vec left_integral(const FDHopf& h) {
    auto sp = left_integral_space(h);
    if (sp.size() != 1)
        throw Error("NotUnimodularDimension",
                    h.name + ": left integral space has dimension " + std::to_string(sp.size()));
    return sp[0];
}

Vec modular_character(const FDHopf& h) {
    const Vec t = left_integral(h);
    size_t p = 0;
    while (t[p].is_zero()) ++p;
    Vec pi(h.n);
    for (size_t i = 0; i < h.n; ++i) {
        Vec ti = h.mul(t, h.basis_vector(i));
        pi[i] = ti[p] / t[p];
        if (ti != scaled(t, pi[i]))
            throw Error("NotCharacter", h.name + ": t*" + h.basis[i] + " is not a multiple of t");
    }
    return pi;
}

FDHopf dual(const FDHopf& h) {
    const size_t n = h.n;
    FDHopf d;
    d.name = h.name + "-dual";
    d.field = h.field;
    d.n = n;
    for (const auto& b : h.basis) d.basis.push_back("d_" + b);
    d.mult.assign(n * n * n, Scalar());
    d.comult.assign(n * n * n, Scalar());
    for (size_t i = 0; i < n; ++i)
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                d.mult[(a * n + b) * n + i] = h.d(i, a, b);
                d.comult[(i * n + a) * n + b] = h.m(a, b, i);
            }
    d.unit = h.counit;
    d.counit = h.unit;
    d.antipode = h.antipode.transpose();
    return d;
}

Vec frobenius_functional(const FDHopf& h) { return left_integral(dual(h)); }

LinearAuto nakayama(const FDHopf& h) {
    const Vec lambda = frobenius_functional(h);
    Matrix b(h.n, h.n);
    for (size_t i = 0; i < h.n; ++i)
        for (size_t j = 0; j < h.n; ++j)
            for (size_t k = 0; k < h.n; ++k)
                if (!h.m(i, j, k).is_zero()) b(i, j) += h.m(i, j, k) * lambda[k];
    auto btinv = inverse(b.transpose());
    if (!btinv) throw Error("DegenerateForm", h.name + ": the form (a, b) -> lambda(ab) is degenerate");
    // lambda(nu(a) b) = (B^T N)[b][a] must equal lambda(b a) = B[b][a].
    Matrix nu = *btinv * b;
    if (!is_algebra_map(h, nu)) throw Error("DegenerateForm", h.name + ": nakayama map is not multiplicative");
    return nu;
}

LinearAuto winding_left(const FDHopf& h, const Vec& pi) {
    Matrix w(h.n, h.n);
    for (size_t i = 0; i < h.n; ++i)
        for (size_t j = 0; j < h.n; ++j) {
            if (pi[j].is_zero()) continue;
            for (size_t k = 0; k < h.n; ++k)
                if (!h.d(i, j, k).is_zero()) w(k, i) += h.d(i, j, k) * pi[j];
        }
    return w;
}

LinearAuto winding_right(const FDHopf& h, const Vec& pi) {
    Matrix w(h.n, h.n);
    for (size_t i = 0; i < h.n; ++i)
        for (size_t j = 0; j < h.n; ++j)
            for (size_t k = 0; k < h.n; ++k)
                if (!pi[k].is_zero() && !h.d(i, j, k).is_zero()) w(j, i) += h.d(i, j, k) * pi[k];
    return w;
}

std::optional<Vec> inverse_element(const FDHopf& h, const Vec& u) {
    auto y = solve(h.left_mult(u), h.unit);
    if (!y || h.mul(*y, u) != h.unit) return std::nullopt;
    return y;
}

LinearAuto inner(const FDHopf& h, const Vec& u) {
    auto ui = inverse_element(h, u);
    if (!ui) throw Error("NotInvertible", h.name + ": " + h.vec_str(u) + " is not a unit");
    std::vector<Vec> cols;
    for (size_t a = 0; a < h.n; ++a) cols.push_back(h.mul(h.mul(u, h.basis_vector(a)), *ui));
    return Matrix::from_columns(h.n, cols);
}

InnerSearch equal_up_to_inner(const FDHopf& h, const LinearAuto& f, const LinearAuto& g, uint64_t seed,
                              size_t budget) {
    InnerSearch res;
    res.seed = seed;
    res.budget = budget;
    std::vector<Matrix> blocks;
    for (size_t a = 0; a < h.n; ++a) blocks.push_back(h.left_mult(f.col(a)) - h.right_mult(g.col(a)));
    const auto sol = kernel(stack(blocks, h.n));
    res.solution_dim = sol.size();
    auto try_unit = [&](const Vec& u) {
        ++res.tried;
        if (inverse_element(h, u)) res.unit = u;
        return res.unit.has_value();
    };
    for (const auto& v : sol)
        if (try_unit(v)) return res;
    if (sol.size() < 2) return res;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (size_t t = 0; t < budget; ++t) {
        Vec u(h.n);
        for (const auto& v : sol) u = axpy(u, Scalar(coef(rng)), v);
        if (!is_zero(u) && try_unit(u)) return res;
    }
    return res;
}

Vec distinguished_grouplike(const FDHopf& h) { return modular_character(dual(h)); }

RadfordReport radford_s4_check(const FDHopf& h) {
    RadfordReport r;
    r.pi0 = modular_character(h);
    r.g = distinguished_grouplike(h);
    r.xi = winding_left(h, r.pi0);
    r.phi = winding_right(h, r.pi0);
    r.s4 = h.antipode.pow(4);
    auto xi_inv = inverse(r.xi);
    if (!xi_inv) {
        r.offending = 0;
        return r;
    }
    Matrix rhs = inner(h, *inverse_element(h, r.g)) * r.phi * *xi_inv;
    for (size_t a = 0; a < h.n && !r.offending; ++a)
        if (rhs.col(a) != r.s4.col(a)) r.offending = a;
    r.passed = !r.offending.has_value();
    return r;
}

std::optional<int> integral_order(const FDHopf& h, int bound) {
    const Matrix xi = winding_left(h, modular_character(h));
    Matrix p = xi;
    for (int m = 1; m <= bound; ++m, p = p * xi)
        if (p.is_identity()) return m;
    return std::nullopt;
}

std::optional<int> nakayama_order(const FDHopf& h, int bound) {
    const Matrix nu = nakayama(h);
    const Matrix id = Matrix::identity(h.n);
    Matrix p = nu;
    for (int m = 1; m <= bound; ++m, p = p * nu)
        if (equal_up_to_inner(h, p, id).unit) return m;
    return std::nullopt;
}

std::vector<Vec> group_likes(const FDHopf& h) {
    const size_t n = h.n;
    // T_i x = (e^i x id) Delta(x); a group-like is a joint eigenvector whose
    // eigenvalues are its own coordinates.
    std::vector<Matrix> T;
    for (size_t i = 0; i < n; ++i) {
        Matrix t(n, n);
        for (size_t a = 0; a < n; ++a)
            for (size_t k = 0; k < n; ++k) t(k, a) = h.d(a, i, k);
        T.push_back(t);
    }
    std::vector<Scalar> cand = roots_of_unity(h.field);
    cand.insert(cand.begin(), Scalar(0));
    std::vector<Vec> out;
    std::function<void(size_t, const Matrix&, Vec&)> rec = [&](size_t i, const Matrix& basis, Vec& y) {
        if (i == n) {
            if (h.coproduct(y) == outer(y, y) && h.eps(y) == Scalar(1) &&
                std::find(out.begin(), out.end(), y) == out.end())
                out.push_back(y);
            return;
        }
        for (const auto& lam : cand) {
            auto ker = kernel((T[i] - scalar_id(n, lam)) * basis);
            if (ker.empty()) continue;
            std::vector<Vec> cols;
            for (const auto& k : ker) cols.push_back(basis * k);
            y[i] = lam;
            rec(i + 1, Matrix::from_columns(n, cols), y);
        }
    };
    Vec y(n);
    rec(0, Matrix::identity(n), y);
    return out;
}

std::vector<Vec> center(const FDHopf& h) {
    std::vector<Matrix> blocks;
    for (size_t a : algebra_generators(h))
        blocks.push_back(h.left_mult(h.basis_vector(a)) - h.right_mult(h.basis_vector(a)));
    return kernel(stack(blocks, h.n));
}

AdjointTensorReport adjoint_tensor_check(const FDHopf& h, const Vec& pi) {
    AdjointTensorReport rep;
    const size_t n = h.n;
    rep.expected_rank = n * n - n;
    if (!is_character(h, pi)) {
        rep.detail = "pi is not a character";
        return rep;
    }
    const Matrix s2 = h.antipode * h.antipode;
    const Matrix xi = winding_left(h, pi);
    rep.twist = s2 * xi;
    if (rep.twist != xi * s2) {
        rep.detail = "Xi[pi] does not commute with S^2";
        return rep;
    }
    if (!is_algebra_map(h, rep.twist) || !inverse(rep.twist)) {
        rep.detail = "twist is not an algebra automorphism";
        return rep;
    }
    std::vector<Vec> e(n);
    for (size_t i = 0; i < n; ++i) e[i] = h.basis_vector(i);
    // prod[j][u] = e_j e_u, sprod[v][k] = e_v S(e_k), psi[u][v] = e_v twist(e_u).
    std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n)), sprod = prod, psi = prod;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            prod[a][b] = h.mul(e[a], e[b]);
            sprod[a][b] = h.mul(e[a], h.antipode.col(b));
            psi[a][b] = h.mul(e[b], rep.twist.col(a));
        }
    auto Psi = [&](const Vec& w) {
        Vec r(n);
        for (size_t uv = 0; uv < n * n; ++uv)
            if (!w[uv].is_zero()) r = axpy(r, w[uv], psi[uv / n][uv % n]);
        return r;
    };

    RowReducer J;
    bool killed = true;
    std::string where;
    for (size_t a : algebra_generators(h))
        for (size_t u = 0; u < n; ++u)
            for (size_t v = 0; v < n; ++v) {
                // (e_a - pi(a)) . (e_u (x) e_v)
                Vec w(n * n);
                w[u * n + v] = -pi[a];
                for (size_t j = 0; j < n; ++j)
                    for (size_t k = 0; k < n; ++k)
                        if (!h.d(a, j, k).is_zero())
                            w = axpy(w, h.d(a, j, k), outer(prod[j][u], sprod[v][k]));
                if (killed && !is_zero(Psi(w))) {
                    killed = false;
                    where = h.basis[a] + " . (" + h.basis[u] + " (x) " + h.basis[v] + ")";
                }
                J.insert(to_sparse(w));
            }
    rep.relation_rank = J.rank();

    bool equivariant = true;
    for (size_t u = 0; u < n && equivariant; ++u)
        for (size_t v = 0; v < n && equivariant; ++v)
            for (size_t b : algebra_generators(h)) {
                // (u (x) v)(b (x) c) = ub (x) cv, Psi of it = c Psi(u (x) v) twist(b).
                Vec right = Psi(outer(prod[u][b], e[v]));
                Vec left = Psi(outer(e[u], prod[b][v]));
                if (right != h.mul(psi[u][v], rep.twist.col(b)) || left != h.mul(e[b], psi[u][v])) {
                    equivariant = false;
                    break;
                }
            }

    rep.passed = killed && equivariant && rep.relation_rank == rep.expected_rank;
    if (!killed) rep.detail = "relation " + where + " is not in the kernel of u (x) v -> v twist(u)";
    else if (!equivariant) rep.detail = "u (x) v -> v twist(u) is not a bimodule map";
    else if (rep.relation_rank != rep.expected_rank)
        rep.detail = "relation rank " + std::to_string(rep.relation_rank) + ", expected " +
                     std::to_string(rep.expected_rank);
    return rep;
}

// ------------------------------------------------------------- builders

namespace {

FDHopf empty_fd(const std::string& name, const Field& f, size_t n) {
    FDHopf h;
    h.name = name;
    h.field = f;
    h.n = n;
    h.mult.assign(n * n * n, Scalar());
    h.comult.assign(n * n * n, Scalar());
    h.unit.assign(n, Scalar());
    h.counit.assign(n, Scalar());
    h.antipode = Matrix(n, n);
    return h;
}

}  // namespace

FDHopf build_taft(int l) {
    if (l < 2) throw Error("InvalidParameter", "Taft algebra needs l >= 2");
    const bool sweedler = l == 2;
    const Scalar zeta = sweedler ? Scalar(-1) : Scalar::zeta(l);
    const size_t L = static_cast<size_t>(l);
    FDHopf h = empty_fd(sweedler ? "sweedler" : "taft-" + std::to_string(l),
                        sweedler ? Field::rationals() : Field::cyclotomic(l), L * L);
    auto idx = [&](size_t a, size_t b) { return a * L + b; };
    for (size_t a = 0; a < L; ++a)
        for (size_t b = 0; b < L; ++b) {
            std::string nm;
            if (a) nm += "g" + (a > 1 ? "^" + std::to_string(a) : "");
            if (b) nm += "x" + (b > 1 ? "^" + std::to_string(b) : "");
            h.basis.push_back(nm.empty() ? "1" : nm);
        }
    for (size_t a = 0; a < L; ++a)
        for (size_t b = 0; b < L; ++b)
            for (size_t c = 0; c < L; ++c)
                for (size_t d = 0; b + d < L; ++d)
                    h.mult[(idx(a, b) * h.n + idx(c, d)) * h.n + idx((a + c) % L, b + d)] =
                        zeta.pow(static_cast<long>(b * c));
    h.unit[idx(0, 0)] = 1;
    for (size_t a = 0; a < L; ++a) h.counit[idx(a, 0)] = 1;
    h.generators = {idx(1, 0), idx(0, 1)};

    const Vec g = h.basis_vector(idx(1, 0)), x = h.basis_vector(idx(0, 1)), one = h.unit;
    const Vec dg = outer(g, g);
    const Vec dx = axpy(outer(x, one), Scalar(1), outer(g, x));
    const Vec sg = h.basis_vector(idx(L - 1, 0));
    const Vec sx = scaled(h.basis_vector(idx(L - 1, 1)), Scalar(-1));
    for (size_t a = 0; a < L; ++a)
        for (size_t b = 0; b < L; ++b) {
            Vec d = outer(one, one), s = one;
            for (size_t i = 0; i < a; ++i) {
                d = tensor_mul(h, d, dg);
                s = h.mul(sg, s);
            }
            for (size_t i = 0; i < b; ++i) {
                d = tensor_mul(h, d, dx);
                s = h.mul(sx, s);
            }
            const size_t e = idx(a, b);
            for (size_t jk = 0; jk < h.n * h.n; ++jk) h.comult[e * h.n * h.n + jk] = d[jk];
            for (size_t r = 0; r < h.n; ++r) h.antipode(r, e) = s[r];
        }
    return h;
}

FDHopf build_sweedler() { return build_taft(2); }

FDHopf build_perm_group_algebra(const std::string& name, const std::vector<std::vector<int>>& gens) {
    using Perm = std::vector<int>;
    const size_t deg = gens.empty() ? 1 : gens[0].size();
    Perm id(deg);
    for (size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
    auto compose = [](const Perm& p, const Perm& q) {
        Perm r(p.size());
        for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
        return r;
    };
    std::vector<Perm> elems{id};
    std::vector<std::string> words{"1"};
    std::map<Perm, size_t> index{{id, 0}};
    for (size_t cur = 0; cur < elems.size(); ++cur)
        for (size_t g = 0; g < gens.size(); ++g) {
            Perm p = compose(elems[cur], gens[g]);
            if (index.count(p)) continue;
            index[p] = elems.size();
            elems.push_back(p);
            words.push_back((cur == 0 ? "" : words[cur]) + static_cast<char>('a' + g));
        }
    const size_t n = elems.size();
    FDHopf h = empty_fd(name, Field::rationals(), n);
    h.basis = words;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) h.mult[(i * n + j) * n + index.at(compose(elems[i], elems[j]))] = 1;
        h.comult[(i * n + i) * n + i] = 1;
        h.counit[i] = 1;
        Perm inv(deg);
        for (size_t k = 0; k < deg; ++k) inv[elems[i][k]] = static_cast<int>(k);
        h.antipode(index.at(inv), i) = 1;
    }
    h.unit[0] = 1;
    for (const auto& g : gens) h.generators.push_back(index.at(g));
    if (h.generators.empty()) h.generators.push_back(0);
    std::sort(h.generators.begin(), h.generators.end());
    h.generators.erase(std::unique(h.generators.begin(), h.generators.end()), h.generators.end());
    return h;
}

const std::vector<FDGroupEntry>& small_groups() {
    static const std::vector<FDGroupEntry> groups = {
        {"c1", 1, {}},
        {"c2", 2, {{1, 0}}},
        {"c3", 3, {{1, 2, 0}}},
        {"c4", 4, {{1, 2, 3, 0}}},
        {"c2xc2", 4, {{1, 0, 2, 3}, {0, 1, 3, 2}}},
        {"c5", 5, {{1, 2, 3, 4, 0}}},
        {"c6", 6, {{1, 2, 0, 4, 3}}},
        {"s3", 6, {{1, 2, 0}, {1, 0, 2}}},
        {"c7", 7, {{1, 2, 3, 4, 5, 6, 0}}},
        {"c8", 8, {{1, 2, 3, 4, 5, 6, 7, 0}}},
        {"c4xc2", 8, {{1, 2, 3, 0, 4, 5}, {0, 1, 2, 3, 5, 4}}},
        {"c2xc2xc2", 8, {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}}},
        {"d4", 8, {{1, 2, 3, 0}, {2, 1, 0, 3}}},
        // (0 1 3 6)(2 5 7 4) and (0 2 3 7)(1 4 6 5)
        {"q8", 8, {{1, 3, 5, 6, 2, 7, 0, 4}, {2, 4, 3, 7, 6, 1, 5, 0}}},
    };
    return groups;
}

std::vector<std::string> fd_catalog_names() {
    std::vector<std::string> out{"sweedler", "taft-3", "taft-5"};
    for (const auto& g : small_groups()) {
        out.push_back("group-" + g.name);
        out.push_back("group-" + g.name + "-dual");
    }
    return out;
}

FDHopf build_fd(const std::string& name) {
    if (name == "sweedler") return build_sweedler();
    if (name == "taft-3") return build_taft(3);
    if (name == "taft-5") return build_taft(5);
    for (const auto& g : small_groups()) {
        const std::string base = "group-" + g.name;
        if (name == base) return build_perm_group_algebra(base, g.gens);
        if (name == base + "-dual") return dual(build_perm_group_algebra(base, g.gens));
    }
    throw Error("UnknownAlgebra", "no finite-dimensional catalog entry named '" + name + "'");
}

// ------------------------------------------------------------- file format

std::string write_fd(const FDHopf& h) {
    std::ostringstream os;
    os << "fdhopf 1\n";
    os << "name " << h.name << "\n";
    os << "field " << h.field.str() << "\n";
    os << "dimension " << h.n << "\n";
    os << "basis";
    for (const auto& b : h.basis) os << " " << b;
    os << "\n";
    if (!h.generators.empty()) {
        os << "generators";
        for (size_t g : h.generators) os << " " << g;
        os << "\n";
    }
    for (size_t i = 0; i < h.n; ++i)
        if (!h.unit[i].is_zero()) os << "unit " << i << " " << h.unit[i].str() << "\n";
    for (size_t i = 0; i < h.n; ++i)
        if (!h.counit[i].is_zero()) os << "counit " << i << " " << h.counit[i].str() << "\n";
    const size_t n = h.n;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (!h.m(i, j, k).is_zero()) os << "mult " << i << " " << j << " " << k << " " << h.m(i, j, k).str() << "\n";
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (!h.d(i, j, k).is_zero())
                    os << "comult " << i << " " << j << " " << k << " " << h.d(i, j, k).str() << "\n";
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            if (!h.antipode(r, c).is_zero()) os << "antipode " << r << " " << c << " " << h.antipode(r, c).str() << "\n";
    return os.str();
}

FDHopf read_fd(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    FDHopf h;
    bool sized = false, have_field = false;
    size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw Error("ParseError", "structure tensor line " + std::to_string(lineno) + ": " + msg);
    };
    auto index = [&](std::istringstream& ls) {
        long long v = -1;
        if (!(ls >> v) || v < 0 || static_cast<size_t>(v) >= h.n) fail("index out of range");
        return static_cast<size_t>(v);
    };
    auto scalar = [&](std::istringstream& ls) {
        std::string rest;
        std::getline(ls, rest);
        auto b = rest.find_first_not_of(' ');
        if (b == std::string::npos) fail("missing scalar");
        return parse_scalar(rest.substr(b), h.field);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "fdhopf") {
            int version = 0;
            ls >> version;
            if (version != 1) fail("unsupported version");
        } else if (key == "name") {
            ls >> h.name;
        } else if (key == "field") {
            std::string f;
            ls >> f;
            h.field = Field::parse(f);
            have_field = true;
        } else if (key == "dimension") {
            if (!(ls >> h.n) || h.n == 0) fail("bad dimension");
            h = empty_fd(h.name, h.field, h.n);
            sized = true;
        } else if (!sized || !have_field) {
            fail("field and dimension must precede '" + key + "'");
        } else if (key == "basis") {
            std::string b;
            while (ls >> b) h.basis.push_back(b);
            if (h.basis.size() != h.n) fail("basis has " + std::to_string(h.basis.size()) + " names");
        } else if (key == "generators") {
            while (ls >> std::ws && !ls.eof()) h.generators.push_back(index(ls));
        } else if (key == "unit" || key == "counit") {
            size_t i = index(ls);
            (key == "unit" ? h.unit : h.counit)[i] = scalar(ls);
        } else if (key == "mult" || key == "comult") {
            size_t i = index(ls), j = index(ls), k = index(ls);
            (key == "mult" ? h.mult : h.comult)[(i * h.n + j) * h.n + k] = scalar(ls);
        } else if (key == "antipode") {
            size_t r = index(ls), c = index(ls);
            h.antipode(r, c) = scalar(ls);
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!sized) throw Error("ParseError", "structure tensor: missing dimension");
    if (h.basis.empty())
        for (size_t i = 0; i < h.n; ++i) h.basis.push_back("e" + std::to_string(i));
    return h;
}

}  // namespace hq
