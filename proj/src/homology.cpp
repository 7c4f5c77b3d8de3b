#include "hq/homology.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "hq/descent.hpp"

namespace hq {

namespace {

using Chain = std::vector<NCPoly>;

void run_tasks(const std::vector<std::function<void()>>& tasks, int jobs) {
    if (jobs <= 1 || tasks.size() <= 1) {
        for (const auto& t : tasks) t();
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    std::vector<std::thread> pool;
    for (int j = 0; j < std::min<int>(jobs, static_cast<int>(tasks.size())); ++j)
        pool.emplace_back([&] {
            for (size_t i = next++; i < tasks.size(); i = next++) {
                try {
                    tasks[i]();
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, const RewriteSystem& sys) {
    const size_t cols = b.empty() ? 0 : b[0].size();
    PolyMatrix out(a.size(), Chain(cols));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < cols; ++j) {
            NCPoly s;
            for (size_t k = 0; k < b.size(); ++k)
                if (!a[i][k].is_zero() && !b[k][j].is_zero()) s += a[i][k] * b[k][j];
            out[i][j] = sys.normal_form(s);
        }
    return out;
}

// Row vector v with v * D = target, entries supported on the given words.
std::optional<Chain> solve_row(const PolyMatrix& D, const Chain& target, const RewriteSystem& sys,
                               const std::vector<Word>& support) {
    std::map<std::pair<size_t, Word>, size_t> coord;
    auto index = [&](size_t k, const Word& w) {
        auto [it, fresh] = coord.emplace(std::make_pair(k, w), coord.size());
        return it->second;
    };
    std::vector<std::vector<std::pair<size_t, Scalar>>> cols;
    for (size_t j = 0; j < D.size(); ++j)
        for (const auto& w : support) {
            std::vector<std::pair<size_t, Scalar>> col;
            for (size_t k = 0; k < D[j].size(); ++k) {
                if (D[j][k].is_zero()) continue;
                for (const auto& [u, c] : sys.normal_form(NCPoly::word(w) * D[j][k]).terms())
                    col.emplace_back(index(k, u), c);
            }
            cols.push_back(std::move(col));
        }
    std::vector<std::pair<size_t, Scalar>> rhs;
    for (size_t k = 0; k < target.size(); ++k)
        for (const auto& [u, c] : target[k].terms()) {
            auto it = coord.find({k, u});
            if (it == coord.end()) return std::nullopt;
            rhs.emplace_back(it->second, c);
        }
    Matrix m(coord.size(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, s] : cols[c]) m(r, c) += s;
    Vec b(coord.size());
    for (const auto& [r, s] : rhs) b[r] += s;
    auto x = solve(m, b);
    if (!x) return std::nullopt;
    Chain v(D.size());
    size_t c = 0;
    for (size_t j = 0; j < D.size(); ++j)
        for (const auto& w : support) v[j] += NCPoly::word(w, (*x)[c++]);
    return v;
}

std::vector<Word> words_in(const RewriteSystem& sys, const std::vector<Letter>& allowed, int len) {
    std::vector<Word> out;
    for (auto& w : sys.normal_words(len))
        if (std::all_of(w.begin(), w.end(),
                        [&](Letter l) { return std::find(allowed.begin(), allowed.end(), l) != allowed.end(); }))
            out.push_back(std::move(w));
    return out;
}

std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// ------------------------------------------------------ module actions

// Caches the action of generators on normal words.
class Actor {
public:
    Actor(HopfPresentation h, CoefficientModule m) : h_(std::move(h)), m_(std::move(m)) {}

    const NCPoly& on_word(const Word& w, Letter g) {
        auto key = std::make_pair(w, g);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        NCPoly x = NCPoly::word(w);
        NCPoly out;
        for (const auto& t : m_.action[g]) out += t.left * x * t.right * t.c;
        return cache_.emplace(key, h_.nf(out)).first->second;
    }

    NCPoly on(const NCPoly& x, Letter g) {
        NCPoly out;
        for (const auto& [w, c] : x.terms()) out += on_word(w, g) * c;
        return out;
    }

    // x.a for a right module, a.x for a left module.
    NCPoly by(const NCPoly& x, const NCPoly& a) {
        NCPoly out;
        for (const auto& [w, c] : a.terms()) {
            NCPoly y = x;
            if (m_.side == CoefficientModule::Side::Right)
                for (Letter l : w) y = on(y, l);
            else
                for (auto it = w.rbegin(); it != w.rend(); ++it) y = on(y, *it);
            out += y * c;
        }
        return out;
    }

    const HopfPresentation& h() const { return h_; }

private:
    HopfPresentation h_;
    CoefficientModule m_;
    std::map<std::pair<Word, Letter>, NCPoly> cache_;
};

// ------------------------------------------------------ filtered engine

struct Filtered {
    std::vector<Word> words;  // normal words by length
    std::vector<size_t> upto;  // upto[L]: number of words of length <= L

    Filtered(const RewriteSystem& sys, int L) : words(sys.normal_words(L)), upto(L + 1, 0) {
        for (const auto& w : words) ++upto[w.size()];
        for (int i = 1; i <= L; ++i) upto[i] += upto[i - 1];
    }
    size_t begin(size_t len) const { return len == 0 ? 0 : upto[len - 1]; }
};

// Images of the basis of A^src, ordered by (length, slot, word).
struct Images {
    size_t src_rank = 0, tgt_rank = 0;
    std::vector<int> len;
    std::vector<Chain> img;
    bool bounded = true;  // no image raises degree
};

using ImageFn = std::function<Chain(Actor&, size_t slot, const Word& w)>;

Images compute_images(Actor& actor, const Filtered& f, size_t src, size_t tgt, int L, const ImageFn& fn) {
    Images out;
    out.src_rank = src;
    out.tgt_rank = tgt;
    for (int len = 0; len <= L; ++len)
        for (size_t slot = 0; slot < src; ++slot)
            for (size_t i = f.begin(len); i < f.upto[len]; ++i) {
                Chain c = fn(actor, slot, f.words[i]);
                for (const auto& p : c)
                    if (p.degree() > len) out.bounded = false;
                out.len.push_back(len);
                out.img.push_back(std::move(c));
            }
    return out;
}

class CoordIndex {
public:
    uint32_t operator()(size_t slot, const Word& w) {
        auto [it, fresh] = idx_.emplace(std::make_pair(slot, w), static_cast<uint32_t>(idx_.size()));
        return it->second;
    }
    SparseVec vec(const Chain& c) {
        SparseVec v;
        for (size_t k = 0; k < c.size(); ++k)
            for (const auto& [w, s] : c[k].terms()) v.emplace_back((*this)(k, w), s);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

private:
    std::map<std::pair<size_t, Word>, uint32_t> idx_;
};

// Z(k) = dim ker(out) on F_k of A^rank.
std::vector<size_t> cycle_dims(const Images* out, size_t rank, const Filtered& f, int N) {
    std::vector<size_t> z(N + 1);
    if (!out) {
        for (int k = 0; k <= N; ++k) z[k] = rank * f.upto[k];
        return z;
    }
    CoordIndex idx;
    RowReducer red;
    size_t e = 0;
    for (int k = 0; k <= N; ++k) {
        for (; e < out->img.size() && out->len[e] == k; ++e) red.insert(idx.vec(out->img[e]));
        z[k] = rank * f.upto[k] - red.rank();
    }
    return z;
}

// Boundaries with coordinates ordered by decreasing degree, so that
// echelon rows with pivot in degree <= k span the image inside F_k.
struct Boundaries {
    std::vector<std::vector<size_t>> b;  // [k][s-1]: dim(in(F_{k+s}) cap F_k)
    std::vector<size_t> rank_upto;       // rank of in restricted to F_L
    RowReducer red;
    std::map<std::pair<size_t, Word>, uint32_t> index;
    uint32_t next = 0;

    SparseVec vec(const Chain& c) {
        SparseVec v;
        for (size_t k = 0; k < c.size(); ++k)
            for (const auto& [w, s] : c[k].terms()) {
                auto [it, fresh] = index.emplace(std::make_pair(k, w), next);
                if (fresh) ++next;
                v.emplace_back(it->second, s);
            }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }
};

Boundaries boundary_dims(const Images* in, int N, int W) {
    Boundaries r;
    r.b.assign(N + 1, std::vector<size_t>(W, 0));
    r.rank_upto.assign(N + W + 1, 0);
    if (!in) return r;
    std::vector<std::pair<int, std::pair<size_t, Word>>> coords;
    for (const auto& c : in->img)
        for (size_t k = 0; k < c.size(); ++k)
            for (const auto& [w, s] : c[k].terms()) coords.push_back({-static_cast<int>(w.size()), {k, w}});
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    std::vector<int> degree;
    for (const auto& [neg, key] : coords) {
        r.index.emplace(key, r.next++);
        degree.push_back(-neg);
    }
    std::vector<size_t> pivots_by_degree;
    auto count_upto = [&](int k) {
        size_t s = 0;
        for (int d = 0; d <= k && d < static_cast<int>(pivots_by_degree.size()); ++d) s += pivots_by_degree[d];
        return s;
    };
    size_t e = 0;
    for (int L = 0; L <= N + W; ++L) {
        for (; e < in->img.size() && in->len[e] == L; ++e)
            if (r.red.insert(r.vec(in->img[e]))) {
                int d = degree[r.red.rows().back().front().first];
                if (static_cast<int>(pivots_by_degree.size()) <= d) pivots_by_degree.resize(d + 1, 0);
                ++pivots_by_degree[d];
            }
        r.rank_upto[L] = r.red.rank();
        for (int s = 1; s <= W; ++s)
            if (L - s >= 0 && L - s <= N) r.b[L - s][s - 1] = count_upto(L - s);
    }
    return r;
}

// Homology of a complex of filtered spaces A^{ranks[p]}. out[p] and in[p]
// index into maps (or -1): out leaves degree p, in arrives at degree p.
struct ComplexSpec {
    std::vector<size_t> ranks;
    std::vector<int> out, in;
};

TruncatedDims filtered_homology(const ComplexSpec& spec, const std::vector<Images>& maps, const Filtered& f,
                                const TruncationOptions& o, std::string normalization) {
    const size_t P = spec.ranks.size();
    TruncatedDims t;
    t.N = o.N;
    t.W = o.W;
    t.normalization = std::move(normalization);
    t.dims.assign(P, {});
    t.stable.assign(P, {});
    t.certified.assign(P, false);
    t.stable_tail.assign(P, false);
    std::vector<std::vector<size_t>> z(P), rank_in(P);
    std::vector<std::function<void()>> tasks;
    for (size_t p = 0; p < P; ++p)
        tasks.push_back([&, p] {
            const Images* out = spec.out[p] >= 0 ? &maps[spec.out[p]] : nullptr;
            const Images* in = spec.in[p] >= 0 ? &maps[spec.in[p]] : nullptr;
            z[p] = cycle_dims(out, spec.ranks[p], f, o.N);
            Boundaries b = boundary_dims(in, o.N, o.W);
            rank_in[p] = b.rank_upto;
            t.certified[p] = true;
            for (int k = 0; k <= o.N; ++k) {
                const auto& row = b.b[k];
                bool st = std::all_of(row.begin(), row.end(), [&](size_t v) { return v == row.front(); });
                t.stable[p].push_back(st);
                t.certified[p] = t.certified[p] && st;
                t.dims[p].push_back(z[p][k] - row.back());
            }
            const auto& d = t.dims[p];
            t.stable_tail[p] =
                o.W <= o.N + 1 && std::all_of(d.end() - o.W, d.end(), [&](size_t v) { return v == d.back(); });
        });
    run_tasks(tasks, o.jobs);

    t.euler_applicable = std::all_of(maps.begin(), maps.end(), [](const Images& m) { return m.bounded; });
    if (t.euler_applicable) {
        t.euler_passed = true;
        for (int k = 0; k <= o.N; ++k) {
            long chain = 0, hom = 0;
            for (size_t p = 0; p < P; ++p) {
                long sign = p % 2 ? -1 : 1;
                chain += sign * static_cast<long>(spec.ranks[p] * f.upto[k]);
                hom += sign * static_cast<long>(z[p][k] - rank_in[p][k]);
            }
            t.euler_passed = t.euler_passed && chain == hom;
        }
    }
    return t;
}

void check_twist(const HopfPresentation& h, const TwistSpec& t) {
    for (const AlgebraMap* m : {&t.left, &t.right}) {
        if (m->images.size() != h.num_gens())
            throw Error("DimensionMismatch", "twist has " + std::to_string(m->images.size()) + " images");
        for (size_t g = 0; g < m->images.size(); ++g)
            if (h.nf(m->images[g]).degree() > 1)
                throw Error("FiltrationIncompatible",
                            "twist raises the degree of generator " + h.sys().names()[g]);
    }
}

std::string map_str(const HopfPresentation& h, const AlgebraMap& m) {
    if (m.equals(AlgebraMap::identity(h.num_gens()), h.sys())) return "id";
    std::vector<std::string> parts;
    for (size_t g = 0; g < m.images.size(); ++g)
        parts.push_back(h.sys().names()[g] + " -> " + h.nf(m.images[g]).str(h.sys().names(), h.sys().order()));
    return "{" + join(parts, ", ") + "}";
}

std::string twist_str(const HopfPresentation& h, const TwistSpec& t) {
    return "sigma = " + map_str(h, t.left) + ", tau = " + map_str(h, t.right);
}

struct Computed {
    ComplexSpec spec;
    std::vector<Images> maps;
};

// Chains M^{r_i} with (m_j) -> (sum_j m_j . d_jk)_k.
Computed homology_chains(const HopfPresentation& h, const FreeComplex& c, const CoefficientModule& m,
                         const Filtered& f, const TruncationOptions& o) {
    const size_t d = c.length();
    Computed r;
    r.spec.ranks = c.ranks;
    r.spec.out.assign(d + 1, -1);
    r.spec.in.assign(d + 1, -1);
    r.maps.resize(d);
    std::vector<std::function<void()>> tasks;
    for (size_t i = 1; i <= d; ++i) {
        r.spec.out[i] = static_cast<int>(i - 1);
        r.spec.in[i - 1] = static_cast<int>(i - 1);
        tasks.push_back([&, i] {
            Actor actor(h, m);
            const PolyMatrix& D = c.d[i];
            r.maps[i - 1] = compute_images(actor, f, c.ranks[i], c.ranks[i - 1], o.N + o.W,
                                           [&](Actor& a, size_t j, const Word& w) {
                                               Chain out(c.ranks[i - 1]);
                                               for (size_t k = 0; k < out.size(); ++k)
                                                   if (!D[j][k].is_zero()) out[k] = a.by(NCPoly::word(w), D[j][k]);
                                               return out;
                                           });
        });
    }
    run_tasks(tasks, o.jobs);
    return r;
}

// Cochains M^{r_i} with (delta phi)_j = sum_k d_jk . phi_k.
Computed cohomology_chains(const HopfPresentation& h, const FreeComplex& c, const CoefficientModule& m,
                           const Filtered& f, const TruncationOptions& o) {
    const size_t d = c.length();
    Computed r;
    r.spec.ranks = c.ranks;
    r.spec.out.assign(d + 1, -1);
    r.spec.in.assign(d + 1, -1);
    r.maps.resize(d);
    std::vector<std::function<void()>> tasks;
    for (size_t i = 1; i <= d; ++i) {
        r.spec.out[i - 1] = static_cast<int>(i - 1);
        r.spec.in[i] = static_cast<int>(i - 1);
        tasks.push_back([&, i] {
            Actor actor(h, m);
            const PolyMatrix& D = c.d[i];
            r.maps[i - 1] = compute_images(actor, f, c.ranks[i - 1], c.ranks[i], o.N + o.W,
                                           [&](Actor& a, size_t k, const Word& w) {
                                               Chain out(c.ranks[i]);
                                               for (size_t j = 0; j < out.size(); ++j)
                                                   if (!D[j][k].is_zero()) out[j] = a.by(NCPoly::word(w), D[j][k]);
                                               return out;
                                           });
        });
    }
    run_tasks(tasks, o.jobs);
    return r;
}

void check_options(const TruncationOptions& o) {
    if (o.N < 0 || o.W < 1) throw Error("InvalidArgument", "need N >= 0 and W >= 1");
}

}  // namespace

// ------------------------------------------------------ complexes

bool squares_to_zero(const FreeComplex& c, const RewriteSystem& sys) {
    for (size_t i = 2; i <= c.length(); ++i) {
        PolyMatrix p = mat_mul(c.d[i], c.d[i - 1], sys);
        for (const auto& row : p)
            for (const auto& e : row)
                if (!e.is_zero()) return false;
    }
    return true;
}

FreeComplex ce_resolution(const LieData& g, const HopfPresentation& u) {
    g.check_jacobi();
    const size_t n = g.names.size();
    std::vector<Letter> letter;
    for (const auto& name : g.names) letter.push_back(u.sys().letter(name));
    FreeComplex c;
    c.kind = "chevalley-eilenberg";
    std::vector<std::vector<std::vector<size_t>>> basis;
    for (size_t i = 0; i <= n; ++i) {
        basis.push_back(subsets(n, i));
        c.ranks.push_back(basis.back().size());
        std::vector<std::string> labels;
        for (const auto& s : basis.back()) {
            std::vector<std::string> names;
            for (size_t k : s) names.push_back(g.names[k]);
            labels.push_back(names.empty() ? "1" : join(names, "^"));
        }
        c.labels.push_back(std::move(labels));
    }
    c.d.resize(n + 1);
    for (size_t i = 1; i <= n; ++i) {
        auto position = [&](const std::vector<size_t>& t) {
            return static_cast<size_t>(std::find(basis[i - 1].begin(), basis[i - 1].end(), t) - basis[i - 1].begin());
        };
        PolyMatrix D(c.ranks[i], Chain(c.ranks[i - 1]));
        for (size_t r = 0; r < basis[i].size(); ++r) {
            const auto& S = basis[i][r];
            for (size_t j = 0; j < S.size(); ++j) {
                std::vector<size_t> rest = S;
                rest.erase(rest.begin() + j);
                D[r][position(rest)] += NCPoly::gen(letter[S[j]], Scalar(j % 2 ? -1 : 1));
            }
            for (size_t j = 0; j < S.size(); ++j)
                for (size_t l = j + 1; l < S.size(); ++l)
                    for (size_t m = 0; m < n; ++m) {
                        const Rational& coef = g.c[S[j]][S[l]][m];
                        if (coef == 0) continue;
                        std::vector<size_t> rest;
                        for (size_t k = 0; k < S.size(); ++k)
                            if (k != j && k != l) rest.push_back(S[k]);
                        if (std::find(rest.begin(), rest.end(), m) != rest.end()) continue;
                        size_t pos = std::lower_bound(rest.begin(), rest.end(), m) - rest.begin();
                        rest.insert(rest.begin() + pos, m);
                        int sign = ((j + l) % 2 ? -1 : 1) * (pos % 2 ? -1 : 1);
                        D[r][position(rest)] += NCPoly(Scalar(coef) * Scalar(sign));
                    }
        }
        c.d[i] = std::move(D);
    }
    return c;
}

FreeComplex tower_resolution(const PolycyclicData& g, const HopfPresentation& a) {
    const RewriteSystem& sys = a.sys();
    const size_t hl = g.hirsch_length();
    for (size_t k = 0; k < hl; ++k)
        for (size_t i = 0; i < k; ++i) g.action_sign(k, i);

    FreeComplex q;
    q.kind = "tower";
    q.ranks = {1};
    q.labels = {{"1"}};
    q.d = {{}};
    std::vector<Letter> allowed;
    for (size_t k = 0; k < hl; ++k) {
        const Letter t = sys.letter(g.names[k]), T = sys.letter(g.inverse_names[k]);
        const size_t len = q.length();
        auto conj = [&](const NCPoly& b) { return sys.normal_form(NCPoly::gen(T) * b * NCPoly::gen(t)); };

        // Lift of b -> t^-1 b t to a chain map: M_i d_i = conj(d_i) M_{i-1}.
        std::vector<PolyMatrix> M(len + 1);
        M[0] = {{NCPoly(Scalar(1))}};
        for (size_t i = 1; i <= len; ++i) {
            PolyMatrix twisted = q.d[i];
            for (auto& row : twisted)
                for (auto& e : row) e = conj(e);
            PolyMatrix rhs = mat_mul(twisted, M[i - 1], sys);
            for (const auto& row : rhs) {
                int deg = 0;
                for (const auto& e : row) deg = std::max(deg, e.degree());
                std::optional<Chain> sol;
                for (int L = std::max(0, deg - 1); L <= deg + 4 && !sol; ++L)
                    sol = solve_row(q.d[i], row, sys, words_in(sys, allowed, L));
                if (!sol)
                    throw Error("TruncationInconclusive",
                                "no chain-map lift for " + g.names[k] + " in degree " + std::to_string(i));
                M[i].push_back(std::move(*sol));
            }
        }
        // F_i = t M_i - 1 lifts right multiplication by t - 1.
        std::vector<PolyMatrix> F(len + 1);
        for (size_t i = 0; i <= len; ++i) {
            F[i] = M[i];
            for (size_t r = 0; r < F[i].size(); ++r)
                for (size_t s = 0; s < F[i][r].size(); ++s) {
                    F[i][r][s] = sys.normal_form(NCPoly::gen(t) * F[i][r][s]);
                    if (r == s) F[i][r][s] -= NCPoly(Scalar(1));
                }
        }

        FreeComplex c;
        c.kind = "tower";
        for (size_t i = 0; i <= len + 1; ++i) {
            size_t lo = i >= 1 ? q.ranks[i - 1] : 0, hi = i <= len ? q.ranks[i] : 0;
            c.ranks.push_back(lo + hi);
            std::vector<std::string> labels;
            if (i >= 1)
                for (const auto& l : q.labels[i - 1]) labels.push_back(l == "1" ? g.names[k] : l + "^" + g.names[k]);
            if (i <= len)
                for (const auto& l : q.labels[i]) labels.push_back(l);
            c.labels.push_back(std::move(labels));
        }
        c.d.resize(len + 2);
        for (size_t i = 1; i <= len + 1; ++i) {
            PolyMatrix D(c.ranks[i], Chain(c.ranks[i - 1]));
            const size_t offset = i >= 2 ? q.ranks[i - 2] : 0;
            // Rows from Q_{i-1}: (-d_{i-1}, F_{i-1}).
            for (size_t r = 0; r < q.ranks[i - 1]; ++r) {
                if (i >= 2)
                    for (size_t s = 0; s < q.ranks[i - 2]; ++s) D[r][s] = -q.d[i - 1][r][s];
                for (size_t s = 0; s < q.ranks[i - 1]; ++s) D[r][offset + s] = F[i - 1][r][s];
            }
            // Rows from Q_i: (0, d_i).
            if (i <= len)
                for (size_t r = 0; r < q.ranks[i]; ++r)
                    for (size_t s = 0; s < q.ranks[i - 1]; ++s) D[q.ranks[i - 1] + r][offset + s] = q.d[i][r][s];
            c.d[i] = std::move(D);
        }
        q = std::move(c);
        allowed.push_back(t);
        allowed.push_back(T);
    }
    if (!squares_to_zero(q, sys)) throw Error("InternalError", "tower differential does not square to zero");
    return q;
}

std::string export_complex(const FreeComplex& c, const HopfPresentation& h) {
    const auto& names = h.sys().names();
    std::ostringstream out;
    out << "complex 1\n";
    out << "kind " << c.kind << "\n";
    out << "algebra " << h.name() << "\n";
    out << "side " << c.side << "\n";
    out << "generators " << join(names, " ") << "\n";
    out << "ranks";
    for (size_t r : c.ranks) out << " " << r;
    out << "\n";
    for (size_t i = 0; i < c.labels.size(); ++i)
        for (size_t j = 0; j < c.labels[i].size(); ++j) out << "label " << i << " " << j << " " << c.labels[i][j] << "\n";
    for (size_t i = 1; i <= c.length(); ++i)
        for (size_t r = 0; r < c.d[i].size(); ++r)
            for (size_t s = 0; s < c.d[i][r].size(); ++s)
                if (!c.d[i][r][s].is_zero())
                    out << "entry " << i << " " << r << " " << s << " " << c.d[i][r][s].str(names, h.sys().order())
                        << "\n";
    return out.str();
}

FreeComplex import_complex(const std::string& text, const HopfPresentation& h) {
    FreeComplex c;
    std::istringstream in(text);
    std::string line;
    bool header = false, have_ranks = false;
    size_t lineno = 0;
    auto fail = [&](const std::string& msg) { throw Error("ParseError", "line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest;
        std::getline(ls, rest);
        if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
        if (!header) {
            if (key != "complex" || rest != "1") fail("expected 'complex 1'");
            header = true;
        } else if (key == "kind") {
            c.kind = rest;
        } else if (key == "side") {
            c.side = rest;
        } else if (key == "algebra") {
            if (rest != h.name()) fail("complex is over " + rest + ", not " + h.name());
        } else if (key == "generators") {
            if (rest != join(h.sys().names(), " ")) fail("generator names differ");
        } else if (key == "ranks") {
            std::istringstream rs(rest);
            size_t r;
            while (rs >> r) c.ranks.push_back(r);
            if (c.ranks.empty()) fail("no ranks");
            c.labels.assign(c.ranks.size(), {});
            for (size_t i = 0; i < c.ranks.size(); ++i) c.labels[i].assign(c.ranks[i], "");
            c.d.assign(c.ranks.size(), {});
            for (size_t i = 1; i < c.ranks.size(); ++i) c.d[i].assign(c.ranks[i], Chain(c.ranks[i - 1]));
            have_ranks = true;
        } else if (key == "label" || key == "entry") {
            if (!have_ranks) fail("ranks must come first");
            std::istringstream rs(rest);
            size_t i, r, s = 0;
            if (!(rs >> i >> r) || (key == "entry" && !(rs >> s))) fail("bad indices");
            std::string body;
            std::getline(rs, body);
            if (!body.empty() && body[0] == ' ') body.erase(0, 1);
            if (key == "label") {
                if (i >= c.ranks.size() || r >= c.ranks[i]) fail("label out of range");
                c.labels[i][r] = body;
            } else {
                if (i == 0 || i >= c.ranks.size() || r >= c.ranks[i] || s >= c.ranks[i - 1])
                    fail("entry out of range");
                c.d[i][r][s] = h.nf(h.parse(body));
            }
        } else {
            fail("unknown key " + key);
        }
    }
    if (!have_ranks) throw Error("ParseError", "missing ranks");
    return c;
}

// ------------------------------------------------------ coefficients

TwistSpec TwistSpec::identity(size_t gens) { return {AlgebraMap::identity(gens), AlgebraMap::identity(gens)}; }
TwistSpec TwistSpec::left_twist(const AlgebraMap& sigma) {
    return {sigma, AlgebraMap::identity(sigma.images.size())};
}
TwistSpec TwistSpec::right_twist(const AlgebraMap& tau) { return {AlgebraMap::identity(tau.images.size()), tau}; }

CoefficientModule twisted_bimodule_coefficients(const HopfPresentation& h, const TwistSpec& t,
                                                CoefficientModule::Side side) {
    if (!h.has_antipode()) throw Error("MissingAntipode", h.name() + " has no antipode");
    CoefficientModule m;
    m.side = side;
    const bool right = side == CoefficientModule::Side::Right;
    m.description = std::string(right ? "(^sigma A^tau)': m.a = sum sigma(S(a2)) m tau(a1)"
                                      : "L(^sigma A^tau): a.m = sum sigma(a1) m tau(S(a2))") +
                    "; " + twist_str(h, t);
    const RewriteSystem& sys = h.sys();
    for (size_t g = 0; g < h.num_gens(); ++g) {
        std::vector<CoefficientModule::Term> terms;
        for (const auto& [key, c] : h.delta(NCPoly::gen(static_cast<Letter>(g))).terms()) {
            NCPoly a1 = NCPoly::word(key[0]), a2 = NCPoly::word(key[1]);
            if (right)
                terms.push_back({c, h.nf(t.left.apply(h.S(a2), sys)), h.nf(t.right.apply(a1, sys))});
            else
                terms.push_back({c, h.nf(t.left.apply(a1, sys)), h.nf(t.right.apply(h.S(a2), sys))});
        }
        m.action.push_back(std::move(terms));
    }
    return m;
}

CoefficientModule regular_module(const HopfPresentation& h, CoefficientModule::Side side) {
    CoefficientModule m;
    m.side = side;
    const bool right = side == CoefficientModule::Side::Right;
    m.description = right ? "A_A: m.a = m a" : "_A A: a.m = a m";
    const NCPoly one(Scalar(1));
    for (size_t g = 0; g < h.num_gens(); ++g) {
        NCPoly x = NCPoly::gen(static_cast<Letter>(g));
        m.action.push_back({right ? CoefficientModule::Term{Scalar(1), one, x} : CoefficientModule::Term{Scalar(1), x, one}});
    }
    return m;
}

NCPoly act(const HopfPresentation& h, const CoefficientModule& m, const NCPoly& x, Letter g) {
    NCPoly out;
    for (const auto& t : m.action.at(g)) out += t.left * x * t.right * t.c;
    return h.nf(out);
}

// ------------------------------------------------------ truncated homology

bool TruncatedDims::all_certified() const {
    return std::all_of(certified.begin(), certified.end(), [](bool b) { return b; });
}

TruncatedDims resolution_homology(const HopfPresentation& h, const FreeComplex& c, const TruncationOptions& o) {
    check_options(o);
    Filtered f(h.sys(), o.N + o.W);
    Computed r = homology_chains(h, c, regular_module(h, CoefficientModule::Side::Right), f, o);
    return filtered_homology(r.spec, r.maps, f, o, "A (x)_A P: homology of the complex itself");
}

TruncatedDims twisted_hochschild_homology(const HopfPresentation& h, const FreeComplex& c, const TwistSpec& t,
                                          const TruncationOptions& o) {
    check_options(o);
    check_twist(h, t);
    Filtered f(h.sys(), o.N + o.W);
    CoefficientModule m = twisted_bimodule_coefficients(h, t, CoefficientModule::Side::Right);
    Computed r = homology_chains(h, c, m, f, o);
    return filtered_homology(r.spec, r.maps, f, o, "H_i(A, ^sigma A^tau) as Tor_i(" + m.description + ", k)");
}

TruncatedDims twisted_hochschild_cohomology(const HopfPresentation& h, const FreeComplex& c, const TwistSpec& t,
                                            const TruncationOptions& o) {
    check_options(o);
    check_twist(h, t);
    if (!h.antipode_bijective())
        throw Error("AntipodeInverseRequired", h.name() + " has no recorded inverse antipode");
    Filtered f(h.sys(), o.N + o.W);
    CoefficientModule m = twisted_bimodule_coefficients(h, t, CoefficientModule::Side::Left);
    Computed r = cohomology_chains(h, c, m, f, o);
    return filtered_homology(r.spec, r.maps, f, o, "H^i(A, ^sigma A^tau) as Ext^i(k, " + m.description + ")");
}

TruncatedDims zero_degree(const HopfPresentation& h, const TwistSpec& t, const TruncationOptions& o) {
    check_options(o);
    check_twist(h, t);
    const size_t G = h.num_gens();
    const RewriteSystem& sys = h.sys();
    std::vector<NCPoly> sg, tg;
    for (size_t g = 0; g < G; ++g) {
        sg.push_back(h.nf(t.left.images[g]));
        tg.push_back(h.nf(t.right.images[g]));
    }
    Filtered f(sys, o.N + o.W);
    CoefficientModule none;
    Actor actor(h, none);
    auto commutator = [&](size_t g, const Word& w) {
        NCPoly m = NCPoly::word(w);
        return sys.normal_form(sg[g] * m - m * tg[g]);
    };
    std::vector<Images> maps(2);
    // m -> (sigma(g) m - m tau(g))_g and (m_g) -> sum_g sigma(g) m_g - m_g tau(g).
    maps[0] = compute_images(actor, f, 1, G, o.N + o.W, [&](Actor&, size_t, const Word& w) {
        Chain out(G);
        for (size_t g = 0; g < G; ++g) out[g] = commutator(g, w);
        return out;
    });
    maps[1] = compute_images(actor, f, G, 1, o.N + o.W,
                             [&](Actor&, size_t g, const Word& w) { return Chain{commutator(g, w)}; });
    TruncatedDims center = filtered_homology({{1}, {0}, {-1}}, maps, f, o, "");
    TruncatedDims coinv = filtered_homology({{1}, {-1}, {1}}, maps, f, o, "");
    TruncatedDims r = center;
    r.normalization = "Z(M) and M/[A,M] for M = ^sigma A^tau; " + twist_str(h, t);
    r.dims.push_back(coinv.dims[0]);
    r.stable.push_back(coinv.stable[0]);
    r.certified.push_back(coinv.certified[0]);
    r.stable_tail.push_back(coinv.stable_tail[0]);
    r.euler_applicable = false;
    r.euler_passed = false;
    return r;
}

HomologicalIntegral homological_integral(const HopfPresentation& h, const FreeComplex& c,
                                         const TruncationOptions& o) {
    check_options(o);
    const size_t d = c.length();
    if (c.ranks.back() != 1) throw Error("TopNotOneDimensional", "top module of the resolution has rank " +
                                                                     std::to_string(c.ranks.back()));
    Filtered f(h.sys(), o.N + o.W);
    Computed r = cohomology_chains(h, c, regular_module(h, CoefficientModule::Side::Left), f, o);
    HomologicalIntegral res;
    res.d = d;
    res.ext = filtered_homology(r.spec, r.maps, f, o, "Ext^i_A(k, A) with A as a left module");
    for (size_t i = 0; i <= d; ++i) {
        if (!res.ext.certified[i])
            throw Error("TruncationInconclusive", "Ext^" + std::to_string(i) + " not stable at N = " +
                                                      std::to_string(o.N) + ", W = " + std::to_string(o.W));
        size_t want = i == d ? 1 : 0;
        if (res.ext.top(i) != want)
            throw Error("TopNotOneDimensional", "Ext^" + std::to_string(i) + " has dimension " +
                                                    std::to_string(res.ext.top(i)) + " in degree <= " +
                                                    std::to_string(o.N));
    }

    // Right action on the top class: the class of m is sent to that of m g.
    Boundaries b;
    if (d > 0) b = boundary_dims(&r.maps[d - 1], o.N, o.W);
    const RewriteSystem& sys = h.sys();
    auto remainder = [&](const NCPoly& p) { return b.red.reduce(b.vec(Chain{p})); };
    std::optional<Word> rep;
    SparseVec rep_rem;
    for (const auto& w : f.words) {
        rep_rem = remainder(NCPoly::word(w));
        if (!rep_rem.empty()) {
            rep = w;
            break;
        }
    }
    if (!rep) throw Error("TopNotOneDimensional", "no nonzero top class found");
    std::vector<Scalar> values;
    for (size_t g = 0; g < h.num_gens(); ++g) {
        SparseVec rg = remainder(sys.normal_form(NCPoly::word(*rep) * NCPoly::gen(static_cast<Letter>(g))));
        Scalar ratio(0);
        if (!rg.empty()) {
            auto it = std::find_if(rg.begin(), rg.end(), [&](const auto& e) { return e.first == rep_rem.front().first; });
            if (it != rg.end()) ratio = it->second / rep_rem.front().second;
        }
        if (!(ratio.is_zero() ? rg : sparse_axpy(rg, -ratio, rep_rem)).empty())
            throw Error("TruncationInconclusive",
                        "generator " + sys.names()[g] + " does not act by a scalar on the truncated top class");
        values.push_back(ratio);
    }
    res.pi0 = Character::make(h, std::move(values));
    return res;
}

DualityReport duality_check(const HopfPresentation& h, const FreeComplex& c, const Character& pi0,
                            const TwistSpec& m, const TruncationOptions& o) {
    const RewriteSystem& sys = h.sys();
    AlgebraMap xi_inv = winding_left(h, char_antipode_dual(h, pi0));
    AlgebraMap sigma = compose(xi_inv, s_inverse_squared(h), sys);
    TwistSpec twisted{compose(m.left, sigma, sys), m.right};
    DualityReport rep;
    rep.d = c.length();
    rep.twist = "xi^-1 S^-2 = " + map_str(h, sigma);
    TruncatedDims coh = twisted_hochschild_cohomology(h, c, m, o);
    TruncatedDims hom = twisted_hochschild_homology(h, c, twisted, o);
    rep.passed = true;
    for (size_t i = 0; i <= rep.d; ++i) {
        DualityRow row;
        row.i = i;
        row.cohomology = coh.dims[i];
        row.homology = hom.dims[rep.d - i];
        row.certified = coh.certified[i] && hom.certified[rep.d - i];
        row.match = row.cohomology == row.homology;
        rep.passed = rep.passed && row.certified && row.match;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

InvariantReport invariant_report(const HopfPresentation& h, const FreeComplex& c, const TruncationOptions& o) {
    InvariantReport rep;
    rep.d = c.length();
    HomologicalIntegral hi = homological_integral(h, c, o);
    rep.pi0 = hi.pi0;
    rep.nu = nakayama_presented(h, rep.pi0);
    const size_t d = rep.d;
    const size_t G = h.num_gens();
    auto top = [&](const TruncatedDims& t, size_t i, bool need_nonzero) -> std::optional<size_t> {
        if (!t.certified[i]) return std::nullopt;
        if (need_nonzero && t.top(i) == 0) return std::nullopt;
        return t.top(i);
    };
    try {
        rep.thdim_witness = top(twisted_hochschild_homology(h, c, TwistSpec::right_twist(rep.nu), o), d, true);
        if (!rep.thdim_witness) rep.notes.push_back("H_d(A, A^nu) not certified nonzero");
        rep.hdim_top = top(twisted_hochschild_homology(h, c, TwistSpec::identity(G), o), d, false);
    } catch (const Error& e) {
        rep.notes.push_back(std::string("homology: ") + e.what());
    }
    try {
        rep.thcodim_witness = top(twisted_hochschild_cohomology(h, c, TwistSpec::left_twist(rep.nu), o), d, true);
        if (!rep.thcodim_witness) rep.notes.push_back("H^d(A, ^nu A) not certified nonzero");
        rep.hcodim_top = top(twisted_hochschild_cohomology(h, c, TwistSpec::identity(G), o), d, false);
    } catch (const Error& e) {
        rep.notes.push_back(std::string("cohomology: ") + e.what());
    }
    return rep;
}

// ------------------------------------------------------ finite-dimensional

namespace {

size_t ipow(size_t n, size_t e) {
    size_t r = 1;
    while (e--) r *= n;
    return r;
}

std::vector<size_t> digits(size_t idx, size_t n, size_t len) {
    std::vector<size_t> t(len);
    for (size_t i = len; i-- > 0;) {
        t[i] = idx % n;
        idx /= n;
    }
    return t;
}

size_t undigits(const std::vector<size_t>& t, size_t n) {
    size_t idx = 0;
    for (size_t x : t) idx = idx * n + x;
    return idx;
}

SparseVec to_sparse(const std::map<uint32_t, Scalar>& m) {
    SparseVec v;
    for (const auto& [i, s] : m)
        if (!s.is_zero()) v.emplace_back(i, s);
    return v;
}

size_t rank_of(const std::vector<SparseVec>& images) {
    RowReducer red;
    for (const auto& v : images) red.insert(v);
    return red.rank();
}

std::vector<Matrix> mult_matrices(const FDHopf& h, const Matrix& f, bool left) {
    std::vector<Matrix> out;
    for (size_t a = 0; a < h.n; ++a) {
        Vec x = f * h.basis_vector(a);
        out.push_back(left ? h.left_mult(x) : h.right_mult(x));
    }
    return out;
}

// M (x) A^{(x)i} -> M (x) A^{(x)(i-1)}; first(a) acts on m from the right,
// last(a) closes the cycle.
std::vector<SparseVec> chain_map(const FDHopf& h, size_t i, const std::vector<Matrix>& first,
                                 const std::function<void(size_t m, size_t a, std::map<uint32_t, Scalar>& out,
                                                          const std::vector<size_t>& rest, const Scalar& sign)>& last) {
    const size_t n = h.n, tuples = ipow(n, i), lower = ipow(n, i - 1);
    std::vector<SparseVec> images;
    images.reserve(n * tuples);
    for (size_t m = 0; m < n; ++m)
        for (size_t ti = 0; ti < tuples; ++ti) {
            std::vector<size_t> t = digits(ti, n, i);
            std::map<uint32_t, Scalar> out;
            std::vector<size_t> tail(t.begin() + 1, t.end());
            const size_t tail_idx = undigits(tail, n);
            for (size_t p = 0; p < n; ++p)
                if (!first[t[0]](p, m).is_zero()) out[p * lower + tail_idx] += first[t[0]](p, m);
            for (size_t j = 1; j < i; ++j) {
                const Scalar sign(j % 2 ? -1 : 1);
                for (size_t c = 0; c < n; ++c) {
                    const Scalar& s = h.m(t[j - 1], t[j], c);
                    if (s.is_zero()) continue;
                    std::vector<size_t> u(t.begin(), t.begin() + j - 1);
                    u.push_back(c);
                    u.insert(u.end(), t.begin() + j + 1, t.end());
                    out[m * lower + undigits(u, n)] += sign * s;
                }
            }
            std::vector<size_t> head(t.begin(), t.end() - 1);
            last(m, t[i - 1], out, head, Scalar(i % 2 ? -1 : 1));
            images.push_back(to_sparse(out));
        }
    return images;
}

std::vector<size_t> homology_from_ranks(const std::vector<size_t>& dims, const std::vector<size_t>& ranks,
                                        size_t max_degree) {
    // ranks[i]: rank of the differential leaving degree i (ranks[0] = 0).
    std::vector<size_t> h;
    for (size_t i = 0; i <= max_degree; ++i) h.push_back(dims[i] - ranks[i] - ranks[i + 1]);
    return h;
}

}  // namespace

std::vector<size_t> BarComplex::free_ranks() const {
    std::vector<size_t> r;
    for (size_t i = 0; i < dims.size(); ++i) r.push_back(ipow(n, i));
    return r;
}

BarComplex bar_resolution(const FDHopf& h, size_t length) {
    BarComplex b;
    const size_t n = h.n;
    b.n = n;
    for (size_t i = 0; i <= length; ++i) {
        const size_t arity = i + 2;
        b.dims.push_back(ipow(n, arity));
        std::vector<SparseVec> images;
        for (size_t idx = 0; idx < b.dims.back(); ++idx) {
            std::vector<size_t> t = digits(idx, n, arity);
            std::map<uint32_t, Scalar> out;
            // Degree 0 maps to A by multiplication.
            const size_t last_j = i == 0 ? 0 : i;
            for (size_t j = 0; j <= last_j; ++j) {
                const Scalar sign(j % 2 ? -1 : 1);
                for (size_t c = 0; c < n; ++c) {
                    const Scalar& s = h.m(t[j], t[j + 1], c);
                    if (s.is_zero()) continue;
                    std::vector<size_t> u(t.begin(), t.begin() + j);
                    u.push_back(c);
                    u.insert(u.end(), t.begin() + j + 2, t.end());
                    out[undigits(u, n)] += sign * s;
                }
            }
            images.push_back(to_sparse(out));
        }
        b.image.push_back(std::move(images));
    }
    return b;
}

bool bar_squares_to_zero(const BarComplex& b) {
    for (size_t i = 1; i < b.image.size(); ++i)
        for (const auto& v : b.image[i]) {
            std::map<uint32_t, Scalar> out;
            for (const auto& [j, s] : v)
                for (const auto& [k, t] : b.image[i - 1][j]) out[k] += s * t;
            if (!to_sparse(out).empty()) return false;
        }
    return true;
}

bool bar_exact(const BarComplex& b) {
    if (b.image.empty()) return true;
    std::vector<size_t> r;
    for (const auto& im : b.image) r.push_back(rank_of(im));
    if (r[0] != b.n) return false;
    for (size_t i = 0; i + 1 < r.size(); ++i)
        if (r[i] + r[i + 1] != b.dims[i]) return false;
    return true;
}

size_t fd_default_degree(const FDHopf& h) {
    size_t i = 0;
    while (i < 2 && ipow(h.n, i + 3) <= 16384) ++i;
    return i;
}

std::vector<size_t> fd_hochschild_homology(const FDHopf& h, const Matrix& sigma, const Matrix& tau,
                                           size_t max_degree) {
    const size_t n = h.n;
    auto R = mult_matrices(h, tau, false), L = mult_matrices(h, sigma, true);
    std::vector<size_t> dims, ranks{0};
    for (size_t i = 0; i <= max_degree + 1; ++i) dims.push_back(ipow(n, i + 1));
    for (size_t i = 1; i <= max_degree + 1; ++i) {
        const size_t lower = ipow(n, i - 1);
        auto images = chain_map(h, i, R,
                                [&](size_t m, size_t a, std::map<uint32_t, Scalar>& out,
                                    const std::vector<size_t>& head, const Scalar& sign) {
                                    const size_t hi = undigits(head, n);
                                    for (size_t p = 0; p < n; ++p)
                                        if (!L[a](p, m).is_zero()) out[p * lower + hi] += sign * L[a](p, m);
                                });
        ranks.push_back(rank_of(images));
    }
    return homology_from_ranks(dims, ranks, max_degree);
}

std::vector<size_t> fd_tor_adjoint(const FDHopf& h, const Matrix& sigma, const Matrix& tau, size_t max_degree) {
    const size_t n = h.n;
    // m.a = sum sigma(S(a2)) m tau(a1).
    std::vector<Matrix> Rp;
    auto R = mult_matrices(h, tau, false);
    std::vector<Matrix> LS;
    for (size_t k = 0; k < n; ++k) LS.push_back(h.left_mult(sigma * (h.antipode * h.basis_vector(k))));
    for (size_t a = 0; a < n; ++a) {
        Matrix acc(n, n);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (!h.d(a, j, k).is_zero()) {
                    Matrix t = LS[k] * R[j];
                    for (size_t r = 0; r < n; ++r)
                        for (size_t c = 0; c < n; ++c) acc(r, c) += h.d(a, j, k) * t(r, c);
                }
        Rp.push_back(std::move(acc));
    }
    std::vector<size_t> dims, ranks{0};
    for (size_t i = 0; i <= max_degree + 1; ++i) dims.push_back(ipow(n, i + 1));
    for (size_t i = 1; i <= max_degree + 1; ++i) {
        const size_t lower = ipow(n, i - 1);
        auto images = chain_map(h, i, Rp,
                                [&](size_t m, size_t a, std::map<uint32_t, Scalar>& out,
                                    const std::vector<size_t>& head, const Scalar& sign) {
                                    if (!h.counit[a].is_zero())
                                        out[m * lower + undigits(head, n)] += sign * h.counit[a];
                                });
        ranks.push_back(rank_of(images));
    }
    return homology_from_ranks(dims, ranks, max_degree);
}

std::vector<size_t> fd_hochschild_cohomology(const FDHopf& h, const Matrix& sigma, const Matrix& tau,
                                             size_t max_degree) {
    const size_t n = h.n;
    auto R = mult_matrices(h, tau, false), L = mult_matrices(h, sigma, true);
    std::vector<size_t> dims, ranks;  // ranks[i]: delta^i : C^i -> C^{i+1}
    for (size_t i = 0; i <= max_degree; ++i) dims.push_back(ipow(n, i + 1));
    for (size_t i = 0; i <= max_degree; ++i) {
        const size_t tuples = ipow(n, i);
        std::vector<SparseVec> images;
        for (size_t ti = 0; ti < tuples; ++ti) {
            std::vector<size_t> t = digits(ti, n, i);
            for (size_t m = 0; m < n; ++m) {
                std::map<uint32_t, Scalar> out;
                for (size_t a = 0; a < n; ++a) {
                    std::vector<size_t> u{a};
                    u.insert(u.end(), t.begin(), t.end());
                    const size_t ui = undigits(u, n);
                    for (size_t p = 0; p < n; ++p)
                        if (!L[a](p, m).is_zero()) out[ui * n + p] += L[a](p, m);
                }
                for (size_t j = 1; j <= i; ++j) {
                    const Scalar sign(j % 2 ? -1 : 1);
                    for (size_t b = 0; b < n; ++b)
                        for (size_t c = 0; c < n; ++c) {
                            const Scalar& s = h.m(b, c, t[j - 1]);
                            if (s.is_zero()) continue;
                            std::vector<size_t> u(t.begin(), t.begin() + j - 1);
                            u.push_back(b);
                            u.push_back(c);
                            u.insert(u.end(), t.begin() + j, t.end());
                            out[undigits(u, n) * n + m] += sign * s;
                        }
                }
                const Scalar sign((i + 1) % 2 ? -1 : 1);
                for (size_t a = 0; a < n; ++a) {
                    std::vector<size_t> u = t;
                    u.push_back(a);
                    const size_t ui = undigits(u, n);
                    for (size_t p = 0; p < n; ++p)
                        if (!R[a](p, m).is_zero()) out[ui * n + p] += sign * R[a](p, m);
                }
                images.push_back(to_sparse(out));
            }
        }
        ranks.push_back(rank_of(images));
    }
    std::vector<size_t> out;
    for (size_t i = 0; i <= max_degree; ++i) out.push_back(dims[i] - ranks[i] - (i ? ranks[i - 1] : 0));
    return out;
}

std::pair<size_t, size_t> fd_zero_degree(const FDHopf& h, const Matrix& sigma, const Matrix& tau) {
    const size_t n = h.n;
    auto R = mult_matrices(h, tau, false), L = mult_matrices(h, sigma, true);
    // Rows of the stacked map m -> (sigma(a) m - m tau(a))_a, and its columns.
    std::vector<SparseVec> cols, rows;
    for (size_t m = 0; m < n; ++m) {
        std::map<uint32_t, Scalar> out;
        for (size_t a = 0; a < n; ++a)
            for (size_t p = 0; p < n; ++p) out[a * n + p] += L[a](p, m) - R[a](p, m);
        cols.push_back(to_sparse(out));
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t m = 0; m < n; ++m) {
            std::map<uint32_t, Scalar> out;
            for (size_t p = 0; p < n; ++p) out[p] += L[a](p, m) - R[a](p, m);
            rows.push_back(to_sparse(out));
        }
    return {n - rank_of(cols), n - rank_of(rows)};
}

bool fd_semisimple(const FDHopf& h) { return !h.eps(left_integral(h)).is_zero(); }

}  // namespace hq
