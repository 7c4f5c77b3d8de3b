#include "hq/rewrite.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hq/matrix.hpp"

namespace hq {

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (Letter l : w) h = (h ^ l) * 1099511628211ull;
        return h;
    }
};

struct RewriteCache {
    std::mutex mu;
    std::unordered_map<Word, NCPoly, WordHash> nf;
};

RewriteSystem::RewriteSystem(std::vector<std::string> names, Field field, std::vector<int> weights)
    : names_(std::move(names)), field_(field), order_(std::move(weights)),
      cache_(std::make_shared<RewriteCache>()) {
    if (!order_.weights().empty() && order_.weights().size() != names_.size())
        throw Error("DimensionMismatch", "one weight per generator is required");
    index_rules();
}

Letter RewriteSystem::letter(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Letter>(i);
    throw Error("UnknownGenerator", name);
}

void RewriteSystem::reset_cache() { cache_ = std::make_shared<RewriteCache>(); }

void RewriteSystem::index_rules() {
    by_first_.assign(names_.size(), {});
    for (size_t i = 0; i < rules_.size(); ++i) by_first_[rules_[i].lhs.front()].push_back(i);
    reset_cache();
}

void RewriteSystem::add_rule(const Word& lhs, const NCPoly& rhs) {
    if (lhs.empty()) throw Error("OrderViolation", "rule with empty left-hand side");
    for (const auto& [w, c] : rhs.terms())
        if (!order_.less(w, lhs))
            throw Error("OrderViolation", "rule " + word_str(lhs, names_) + " -> " + rhs.str(names_, order_) +
                                              " is not decreasing");
    rules_.push_back({lhs, rhs});
    index_rules();
}

void RewriteSystem::add_relation(const NCPoly& p) {
    if (p.is_zero()) return;
    Word lm = p.leading(order_);
    if (lm.empty())
        throw Error("OrderViolation", "relation " + p.str(names_, order_) + " makes 1 = 0");
    Scalar c = p.coeff(lm);
    NCPoly rest = p - NCPoly::word(lm, c);
    add_rule(lm, rest * (-c.inv()));
}

bool RewriteSystem::find_redex(const Word& w, size_t start, size_t& pos, size_t& rule) const {
    for (size_t p = start; p < w.size(); ++p) {
        for (size_t r : by_first_[w[p]]) {
            const Word& l = rules_[r].lhs;
            if (p + l.size() > w.size()) continue;
            if (std::equal(l.begin(), l.end(), w.begin() + p)) {
                pos = p;
                rule = r;
                return true;
            }
        }
    }
    return false;
}

bool RewriteSystem::is_normal(const Word& w) const {
    size_t p, r;
    return !find_redex(w, 0, p, r);
}

const NCPoly& RewriteSystem::nf_word(const Word& w, size_t& steps) const {
    RewriteCache& cache = *cache_;
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.nf.find(w);
        if (it != cache.nf.end()) return it->second;
    }
    NCPoly res;
    size_t pos, r;
    if (!find_redex(w, 0, pos, r)) {
        res = NCPoly::word(w);
    } else {
        if (++steps > step_budget_)
            throw Error("StepBudgetExceeded", "more than " + std::to_string(step_budget_) +
                                                  " reductions while normalizing " + word_str(w, names_));
        const Rule& rule = rules_[r];
        Word pre(w.begin(), w.begin() + pos);
        Word suf(w.begin() + pos + rule.lhs.size(), w.end());
        for (const auto& [m, c] : rule.rhs.terms()) {
            Word nw = concat(concat(pre, m), suf);
            const NCPoly& sub = nf_word(nw, steps);
            for (const auto& [u, d] : sub.terms()) res.add_term(u, c * d);
        }
    }
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.nf.emplace(w, std::move(res)).first->second;
}

NCPoly RewriteSystem::normal_form(const Word& w) const {
    size_t steps = 0;
    return nf_word(w, steps);
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
    size_t steps = 0;
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        const NCPoly& n = nf_word(w, steps);
        for (const auto& [u, d] : n.terms()) out.add_term(u, c * d);
    }
    return out;
}

NCPoly RewriteSystem::normal_form_randomized(const NCPoly& p, std::mt19937& rng) const {
    NCPoly cur = p;
    size_t steps = 0;
    for (;;) {
        std::vector<std::pair<Word, std::pair<size_t, size_t>>> redexes;
        for (const auto& [w, c] : cur.terms()) {
            size_t start = 0, pos, r;
            while (start < w.size() && find_redex(w, start, pos, r)) {
                // Collect every rule matching at this position.
                for (size_t rr : by_first_[w[pos]]) {
                    const Word& l = rules_[rr].lhs;
                    if (pos + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + pos))
                        redexes.push_back({w, {pos, rr}});
                }
                start = pos + 1;
            }
        }
        if (redexes.empty()) return cur;
        if (++steps > step_budget_) throw Error("StepBudgetExceeded", "randomized reduction");
        std::uniform_int_distribution<size_t> pick(0, redexes.size() - 1);
        const auto& [w, at] = redexes[pick(rng)];
        const Rule& rule = rules_[at.second];
        Scalar c = cur.coeff(w);
        Word pre(w.begin(), w.begin() + at.first);
        Word suf(w.begin() + at.first + rule.lhs.size(), w.end());
        NCPoly repl = NCPoly::word(pre) * rule.rhs * NCPoly::word(suf) * c;
        cur -= NCPoly::word(w, c);
        cur += repl;
    }
}

std::vector<Word> RewriteSystem::normal_words(int max_len) const {
    std::vector<Word> out{Word{}};
    size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        size_t end = out.size();
        for (size_t i = begin; i < end; ++i) {
            for (size_t g = 0; g < names_.size(); ++g) {
                Word w = out[i];
                w.push_back(static_cast<Letter>(g));
                bool ok = true;
                for (const auto& rule : rules_) {
                    const Word& l = rule.lhs;
                    if (l.size() <= w.size() && std::equal(l.begin(), l.end(), w.end() - l.size())) {
                        ok = false;
                        break;
                    }
                }
                if (ok) out.push_back(std::move(w));
            }
        }
        begin = end;
    }
    return out;
}

std::vector<NCPoly> RewriteSystem::relations() const {
    std::vector<NCPoly> out;
    for (const auto& r : rules_) out.push_back(NCPoly::word(r.lhs) - r.rhs);
    return out;
}

namespace {

bool contains_subword(const Word& big, const Word& small) {
    if (small.size() > big.size()) return false;
    return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

}  // namespace

void RewriteSystem::inter_reduce() {
    for (int round = 0;; ++round) {
        if (round > 10000) throw Error("StepBudgetExceeded", "inter-reduction does not settle");
        std::vector<NCPoly> pending;
        std::vector<Rule> kept;
        for (size_t i = 0; i < rules_.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < rules_.size() && !redundant; ++j) {
                if (i == j) continue;
                const Word& a = rules_[i].lhs;
                const Word& b = rules_[j].lhs;
                if (a == b ? j < i : contains_subword(a, b)) redundant = true;
            }
            if (redundant)
                pending.push_back(NCPoly::word(rules_[i].lhs) - rules_[i].rhs);
            else
                kept.push_back(rules_[i]);
        }
        rules_ = std::move(kept);
        index_rules();
        bool changed = false;
        for (const auto& p : pending) {
            NCPoly r = normal_form(p);
            if (!r.is_zero()) {
                add_relation(r);
                changed = true;
            }
        }
        if (changed) continue;
        // Normalize right-hand sides against the settled set of left-hand sides.
        std::vector<Rule> updated = rules_;
        bool rhs_changed = false;
        for (auto& rule : updated) {
            NCPoly n = normal_form(rule.rhs);
            if (n != rule.rhs) {
                rule.rhs = std::move(n);
                rhs_changed = true;
            }
        }
        if (rhs_changed) {
            rules_ = std::move(updated);
            index_rules();
        }
        return;
    }
}

std::string RewriteSystem::describe() const {
    std::ostringstream os;
    for (const auto& r : rules_) os << word_str(r.lhs, names_) << " -> " << r.rhs.str(names_, order_) << "\n";
    return os.str();
}

// ------------------------------------------------------------ completion

namespace {

template <class Fn>
void for_each_overlap(const RewriteSystem& s, int degree_bound, Fn fn) {
    const auto& rules = s.rules();
    for (size_t i = 0; i < rules.size(); ++i) {
        for (size_t j = 0; j < rules.size(); ++j) {
            const Word& a = rules[i].lhs;
            const Word& b = rules[j].lhs;
            size_t kmax = std::min(a.size(), b.size()) - 1;
            for (size_t k = 1; k <= kmax; ++k) {
                if (static_cast<int>(a.size() + b.size() - k) > degree_bound) continue;
                if (!std::equal(a.end() - k, a.end(), b.begin())) continue;
                Word tail(b.begin() + k, b.end());
                Word head(a.begin(), a.end() - k);
                Word whole = concat(a, tail);
                NCPoly r1 = rules[i].rhs * NCPoly::word(tail);
                NCPoly r2 = NCPoly::word(head) * rules[j].rhs;
                fn(whole, r1, r2);
            }
        }
    }
}

}  // namespace

std::vector<Word> unresolved_overlaps(const RewriteSystem& sys, int degree_bound) {
    std::vector<Word> bad;
    for_each_overlap(sys, degree_bound, [&](const Word& w, const NCPoly& r1, const NCPoly& r2) {
        if (sys.normal_form(r1) != sys.normal_form(r2)) bad.push_back(w);
    });
    return bad;
}

RewriteSystem complete(const RewriteSystem& sys, int degree_bound) {
    RewriteSystem s = sys;
    s.inter_reduce();
    for (int round = 0;; ++round) {
        if (round > 200) throw Error("StepBudgetExceeded", "completion did not close within 200 rounds");
        std::vector<NCPoly> diffs;
        for_each_overlap(s, degree_bound, [&](const Word&, const NCPoly& r1, const NCPoly& r2) {
            NCPoly d = s.normal_form(r1) - s.normal_form(r2);
            if (!d.is_zero()) diffs.push_back(std::move(d));
        });
        if (diffs.empty()) break;
        const MonomialOrder& ord = s.order();
        std::sort(diffs.begin(), diffs.end(), [&](const NCPoly& a, const NCPoly& b) {
            const Word& la = a.leading(ord);
            const Word& lb = b.leading(ord);
            if (la != lb) return ord.less(la, lb);
            return a.str(s.names()) < b.str(s.names());
        });
        for (const auto& d : diffs) {
            NCPoly r = s.normal_form(d);
            if (r.is_zero()) continue;
            Scalar c = r.coeff(r.leading(ord));
            s.add_relation(r * c.inv());
        }
        s.inter_reduce();
    }
    s.certificate_ = degree_bound;
    return s;
}

// ----------------------------------------------------------- AlgebraMap

AlgebraMap AlgebraMap::identity(size_t n) {
    AlgebraMap m;
    for (size_t i = 0; i < n; ++i) m.images.push_back(NCPoly::gen(static_cast<Letter>(i)));
    return m;
}

AlgebraMap AlgebraMap::diagonal(const std::vector<Scalar>& scalars) {
    AlgebraMap m;
    for (size_t i = 0; i < scalars.size(); ++i) m.images.push_back(NCPoly::gen(static_cast<Letter>(i), scalars[i]));
    return m;
}

NCPoly AlgebraMap::apply(const NCPoly& p, const RewriteSystem& sys) const {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        NCPoly acc(c);
        for (Letter l : w) {
            acc = sys.normal_form(acc * images.at(l));
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return sys.normal_form(out);
}

bool AlgebraMap::preserves_relations(const RewriteSystem& sys) const {
    for (const auto& rule : sys.rules())
        if (!(apply(NCPoly::word(rule.lhs), sys) - apply(rule.rhs, sys)).is_zero()) return false;
    return true;
}

bool AlgebraMap::equals(const AlgebraMap& o, const RewriteSystem& sys) const {
    if (images.size() != o.images.size()) return false;
    for (size_t i = 0; i < images.size(); ++i)
        if (sys.normal_form(images[i]) != sys.normal_form(o.images[i])) return false;
    return true;
}

std::optional<std::vector<Scalar>> AlgebraMap::diagonal_scalars() const {
    std::vector<Scalar> out;
    for (size_t i = 0; i < images.size(); ++i) {
        const NCPoly& p = images[i];
        if (p.size() != 1) return std::nullopt;
        const auto& [w, c] = *p.terms().begin();
        if (w != Word{static_cast<Letter>(i)}) return std::nullopt;
        out.push_back(c);
    }
    return out;
}

AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g, const RewriteSystem& sys) {
    AlgebraMap h;
    h.certificate_degree = std::min(f.certificate_degree, g.certificate_degree);
    for (const auto& img : g.images) h.images.push_back(f.apply(img, sys));
    return h;
}

// ------------------------------------------------------- normal elements

std::optional<AlgebraMap> is_tau_normal(const NCPoly& x, const RewriteSystem& sys) {
    if (x.degree() + 1 > sys.certificate())
        throw Error("InsufficientConfluence", "need confluence to degree " + std::to_string(x.degree() + 1) +
                                                  ", certificate is " + std::to_string(sys.certificate()));
    std::vector<Scalar> scalars;
    for (size_t g = 0; g < sys.num_gens(); ++g) {
        NCPoly gp = NCPoly::gen(static_cast<Letter>(g));
        NCPoly a = sys.normal_form(x * gp);
        NCPoly b = sys.normal_form(gp * x);
        if (a.is_zero() && b.is_zero()) {
            scalars.push_back(1);
            continue;
        }
        if (a.is_zero() || b.is_zero()) return std::nullopt;
        const Word& lw = b.leading(sys.order());
        Scalar c = a.coeff(lw) / b.coeff(lw);
        if (c.is_zero() || a != b * c) return std::nullopt;
        scalars.push_back(c);
    }
    AlgebraMap m = AlgebraMap::diagonal(scalars);
    m.certificate_degree = sys.certificate();
    return m;
}

namespace {

// Finds y in span(words) with sum_w y_w * column(w) = target, columns given
// as normal-form polynomials.
std::optional<NCPoly> linear_preimage(const std::vector<Word>& words, const std::vector<NCPoly>& columns,
                                      const NCPoly& target) {
    std::map<Word, size_t> row_of;
    auto index = [&](const NCPoly& p) {
        for (const auto& [w, c] : p.terms()) row_of.emplace(w, 0);
    };
    for (const auto& c : columns) index(c);
    index(target);
    size_t r = 0;
    for (auto& [w, i] : row_of) i = r++;
    Matrix m(row_of.size(), columns.size());
    for (size_t j = 0; j < columns.size(); ++j)
        for (const auto& [w, c] : columns[j].terms()) m(row_of[w], j) = c;
    Vec b(row_of.size());
    for (const auto& [w, c] : target.terms()) b[row_of[w]] = c;
    auto sol = solve(m, b);
    if (!sol) return std::nullopt;
    NCPoly y;
    for (size_t j = 0; j < words.size(); ++j) y.add_term(words[j], (*sol)[j]);
    return y;
}

}  // namespace

std::optional<AlgebraMap> find_normalizing_map(const NCPoly& x, const RewriteSystem& sys, int max_len) {
    std::vector<Word> words = sys.normal_words(max_len);
    std::vector<NCPoly> cols;
    for (const auto& w : words) cols.push_back(sys.normal_form(NCPoly::word(w) * x));
    AlgebraMap m;
    m.certificate_degree = sys.certificate();
    for (size_t g = 0; g < sys.num_gens(); ++g) {
        NCPoly gp = NCPoly::gen(static_cast<Letter>(g));
        NCPoly target = sys.normal_form(x * gp);
        if (target.is_zero() && sys.normal_form(gp).is_zero()) {
            m.images.push_back(gp);
            continue;
        }
        auto y = linear_preimage(words, cols, target);
        if (!y) return std::nullopt;
        m.images.push_back(*y);
    }
    return m;
}

std::optional<AlgebraMap> invert_map(const AlgebraMap& f, const RewriteSystem& sys, int max_len) {
    std::vector<Word> words = sys.normal_words(max_len);
    std::vector<NCPoly> cols;
    for (const auto& w : words) cols.push_back(f.apply(NCPoly::word(w), sys));
    AlgebraMap inv;
    inv.certificate_degree = f.certificate_degree;
    for (size_t g = 0; g < sys.num_gens(); ++g) {
        NCPoly gp = NCPoly::gen(static_cast<Letter>(g));
        NCPoly target = sys.normal_form(gp);
        if (target.is_zero()) {
            inv.images.push_back(gp);
            continue;
        }
        auto y = linear_preimage(words, cols, target);
        if (!y) return std::nullopt;
        inv.images.push_back(*y);
    }
    return inv;
}

RewriteSystem quotient(const RewriteSystem& sys, const NCPoly& x, int degree_bound) {
    RewriteSystem s = sys;
    NCPoly p = s.normal_form(x);
    if (p.is_zero()) return s;
    s.add_relation(p);
    return complete(s, degree_bound);
}

ZeroDivisorCertificate certify_nonzerodivisor(const NCPoly& x, const RewriteSystem& sys, int degree) {
    ZeroDivisorCertificate cert;
    cert.degree = degree;
    cert.method = "leading-words";
    NCPoly p = sys.normal_form(x);
    if (p.is_zero()) return cert;
    int len = std::max(0, degree - p.degree());
    std::vector<Word> words = sys.normal_words(len);
    cert.words_checked = words.size();
    for (int side = 0; side < 2; ++side) {
        std::vector<NCPoly> prods;
        std::set<Word> leads;
        bool distinct = true;
        for (const auto& w : words) {
            NCPoly v = sys.normal_form(side == 0 ? p * NCPoly::word(w) : NCPoly::word(w) * p);
            if (v.is_zero()) return cert;
            if (!leads.insert(v.leading(sys.order())).second) distinct = false;
            prods.push_back(std::move(v));
        }
        if (distinct) continue;
        cert.method = "rank";
        std::map<Word, uint32_t> col;
        for (const auto& v : prods)
            for (const auto& [w, c] : v.terms()) col.emplace(w, 0);
        uint32_t k = 0;
        for (auto& [w, i] : col) i = k++;
        RowReducer red;
        for (const auto& v : prods) {
            SparseVec sv;
            for (const auto& [w, c] : v.terms()) sv.emplace_back(col[w], c);
            std::sort(sv.begin(), sv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            red.insert(std::move(sv));
        }
        if (red.rank() != prods.size()) return cert;
    }
    cert.certified = true;
    return cert;
}

}  // namespace hq
