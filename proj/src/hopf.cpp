#include "hq/hopf.hpp"

#include <algorithm>

namespace hq {

// ---------------------------------------------------------------- Tensor

Tensor Tensor::pure(const std::vector<NCPoly>& factors, const Scalar& c) {
    Tensor t(factors.size());
    std::vector<std::pair<Key, Scalar>> acc{{Key{}, c}};
    for (const auto& f : factors) {
        std::vector<std::pair<Key, Scalar>> next;
        for (const auto& [k, a] : acc)
            for (const auto& [w, b] : f.terms()) {
                Key nk = k;
                nk.push_back(w);
                next.push_back({std::move(nk), a * b});
            }
        acc = std::move(next);
    }
    for (const auto& [k, a] : acc) t.add_term(k, a);
    return t;
}

void Tensor::add_term(const Key& k, const Scalar& c) {
    if (k.size() != arity_) throw Error("DimensionMismatch", "tensor term of wrong arity");
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

Tensor& Tensor::operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

Tensor Tensor::operator+(const Tensor& o) const {
    Tensor r = *this;
    r += o;
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
    Tensor r = *this;
    for (const auto& [k, c] : o.t_) r.add_term(k, -c);
    return r;
}

Tensor Tensor::operator*(const Scalar& s) const {
    Tensor r(arity_);
    for (const auto& [k, c] : t_) r.add_term(k, c * s);
    return r;
}

Tensor Tensor::operator*(const Tensor& o) const {
    if (arity_ != o.arity_) throw Error("DimensionMismatch", "tensor product of different arities");
    Tensor r(arity_);
    for (const auto& [a, ca] : t_)
        for (const auto& [b, cb] : o.t_) {
            Key k(arity_);
            for (size_t i = 0; i < arity_; ++i) k[i] = concat(a[i], b[i]);
            r.add_term(k, ca * cb);
        }
    return r;
}

Tensor Tensor::normal_form(const RewriteSystem& sys) const {
    Tensor r(arity_);
    for (const auto& [k, c] : t_) {
        std::vector<NCPoly> factors;
        for (const auto& w : k) factors.push_back(sys.normal_form(w));
        r += pure(factors, c);
    }
    return r;
}

std::string Tensor::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c0] : t_) {
        Scalar c = c0;
        bool neg = c.is_rational() && c.rational() < 0;
        if (neg) c = -c;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        if (!c.is_one()) {
            std::string cs = c.str();
            bool plain = c.is_rational() && c.rational().get_den() == 1;
            out += (plain ? cs : "(" + cs + ")") + "*";
        }
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) out += " (x) ";
            out += word_str(k[i], names);
        }
    }
    return out;
}

Tensor parse_tensor(const std::string& text, const std::vector<std::string>& names, const Field& field) {
    // The separator becomes an extra letter so the polynomial parser does the work.
    static const std::string sep_name = "__tensor_sep__";
    std::string s = text;
    for (size_t p; (p = s.find("(x)")) != std::string::npos;) s.replace(p, 3, "*" + sep_name + "*");
    std::vector<std::string> ext = names;
    ext.push_back(sep_name);
    const Letter sep = static_cast<Letter>(names.size());
    NCPoly p = parse_ncpoly(s, ext, field);
    if (p.is_zero()) throw Error("ParseError", "empty tensor '" + text + "'");
    size_t arity = 0;
    std::vector<std::pair<Tensor::Key, Scalar>> terms;
    for (const auto& [w, c] : p.terms()) {
        Tensor::Key k(1);
        for (Letter l : w) {
            if (l == sep)
                k.emplace_back();
            else
                k.back().push_back(l);
        }
        if (arity == 0) arity = k.size();
        if (k.size() != arity || arity < 2) throw Error("ParseError", "inconsistent tensor arity in '" + text + "'");
        terms.push_back({std::move(k), c});
    }
    Tensor t(arity);
    for (const auto& [k, c] : terms) t.add_term(k, c);
    return t;
}

// ------------------------------------------------------ HopfPresentation

Tensor HopfPresentation::delta(const NCPoly& p) const {
    Tensor out(2);
    for (const auto& [w, c] : p.terms()) {
        Tensor acc = Tensor::pure({NCPoly(Scalar(1)), NCPoly(Scalar(1))}, c);
        for (Letter l : w) {
            acc = (acc * coproduct.at(l)).normal_form(sys_);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out.normal_form(sys_);
}

Scalar HopfPresentation::epsilon(const NCPoly& p) const {
    Scalar s;
    for (const auto& [w, c] : p.terms()) {
        Scalar t = c;
        for (Letter l : w) t *= counit.at(l);
        s += t;
    }
    return s;
}

namespace {

NCPoly anti_apply(const std::vector<NCPoly>& images, const NCPoly& p, const RewriteSystem& sys) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        NCPoly acc(c);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            acc = sys.normal_form(acc * images.at(*it));
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return sys.normal_form(out);
}

}  // namespace

NCPoly HopfPresentation::S(const NCPoly& p) const {
    if (!antipode) throw Error("NoAntipode", name_ + " has no antipode");
    return anti_apply(*antipode, p, sys_);
}

NCPoly HopfPresentation::S_inv(const NCPoly& p) const {
    if (!antipode_inverse) throw Error("NoAntipode", name_ + " has no inverse antipode");
    return anti_apply(*antipode_inverse, p, sys_);
}

HopfPresentation HopfPresentation::with_system(RewriteSystem sys) const {
    HopfPresentation h(name_, std::move(sys));
    h.relations = relations;
    for (const auto& t : coproduct) h.coproduct.push_back(t.normal_form(h.sys_));
    h.counit = counit;
    auto renorm = [&](const std::optional<std::vector<NCPoly>>& v) -> std::optional<std::vector<NCPoly>> {
        if (!v) return std::nullopt;
        std::vector<NCPoly> out;
        for (const auto& p : *v) out.push_back(h.sys_.normal_form(p));
        return out;
    };
    h.antipode = renorm(antipode);
    h.antipode_inverse = renorm(antipode_inverse);
    return h;
}

// ---------------------------------------------------------------- axioms

std::vector<AxiomCheck> AxiomReport::failures() const {
    std::vector<AxiomCheck> out;
    for (const auto& c : checks)
        if (c.status == "fail") out.push_back(c);
    return out;
}

namespace {

std::string clip(std::string s) {
    if (s.size() > 240) s = s.substr(0, 237) + "...";
    return s;
}

}  // namespace

AxiomReport verify_hopf_axioms(const HopfPresentation& h, int degree_bound) {
    AxiomReport rep;
    rep.degree = degree_bound;
    const RewriteSystem& sys = h.sys();
    const auto& names = sys.names();
    auto record = [&](const std::string& axiom, const std::string& where, bool ok, const std::string& detail) {
        rep.checks.push_back({axiom, where, ok ? "pass" : "fail", ok ? "" : clip(detail)});
        if (!ok) rep.passed = false;
    };
    auto not_applicable = [&](const std::string& axiom, const std::string& where, const std::string& why) {
        rep.checks.push_back({axiom, where, "not applicable", why});
    };
    auto poly_str = [&](const NCPoly& p) { return p.str(names, sys.order()); };

    if (sys.certificate() < degree_bound) {
        record("confluence", "system", false,
               "certificate degree " + std::to_string(sys.certificate()) + " is below " + std::to_string(degree_bound));
    }

    for (size_t g = 0; g < h.num_gens(); ++g) {
        const std::string& gname = names[g];
        NCPoly gp = sys.normal_form(NCPoly::gen(static_cast<Letter>(g)));
        Tensor d = h.delta(NCPoly::gen(static_cast<Letter>(g)));

        Tensor left(3), right(3);
        for (const auto& [k, c] : d.terms()) {
            for (const auto& [k1, c1] : h.delta(NCPoly::word(k[0])).terms()) left.add_term({k1[0], k1[1], k[1]}, c * c1);
            for (const auto& [k2, c2] : h.delta(NCPoly::word(k[1])).terms()) right.add_term({k[0], k2[0], k2[1]}, c * c2);
        }
        Tensor diff = (left - right).normal_form(sys);
        record("coassociativity", gname, diff.is_zero(), diff.str(names));

        NCPoly cl, cr;
        for (const auto& [k, c] : d.terms()) {
            cl += sys.normal_form(k[1]) * (c * h.epsilon(NCPoly::word(k[0])));
            cr += sys.normal_form(k[0]) * (c * h.epsilon(NCPoly::word(k[1])));
        }
        record("counit-left", gname, cl == gp, poly_str(cl - gp));
        record("counit-right", gname, cr == gp, poly_str(cr - gp));

        if (!h.has_antipode()) {
            not_applicable("antipode-left", gname, "no antipode");
            not_applicable("antipode-right", gname, "no antipode");
            continue;
        }
        NCPoly eg(h.counit[g]);
        NCPoly al, ar;
        for (const auto& [k, c] : d.terms()) {
            al += sys.normal_form(h.S(NCPoly::word(k[0])) * NCPoly::word(k[1])) * c;
            ar += sys.normal_form(NCPoly::word(k[0]) * h.S(NCPoly::word(k[1]))) * c;
        }
        al = sys.normal_form(al);
        ar = sys.normal_form(ar);
        record("antipode-left", gname, al == eg, poly_str(al - eg));
        record("antipode-right", gname, ar == eg, poly_str(ar - eg));
        if (h.antipode_bijective()) {
            NCPoly a = h.S(h.S_inv(NCPoly::gen(static_cast<Letter>(g))));
            NCPoly b = h.S_inv(h.S(NCPoly::gen(static_cast<Letter>(g))));
            record("antipode-inverse", gname, a == gp && b == gp, poly_str(a - gp) + " ; " + poly_str(b - gp));
        }
    }

    std::vector<NCPoly> rels = h.relations.empty() ? sys.relations() : h.relations;
    for (const auto& rel : rels) {
        std::string where = poly_str(rel);
        if (rel.degree() > degree_bound) {
            not_applicable("relations", where, "relation degree exceeds the bound");
            continue;
        }
        Tensor dd = h.delta(rel);
        record("coproduct-multiplicative", where, dd.is_zero(), dd.str(names));
        Scalar de = h.epsilon(rel);
        record("counit-multiplicative", where, de.is_zero(), de.str());
        if (h.has_antipode()) {
            NCPoly ds = h.S(rel);
            record("antipode-antimultiplicative", where, ds.is_zero(), poly_str(ds));
        }
        if (h.antipode_bijective()) {
            NCPoly ds = h.S_inv(rel);
            record("inverse-antipode-antimultiplicative", where, ds.is_zero(), poly_str(ds));
        }
    }
    return rep;
}

// ------------------------------------------------------------- Character

Character Character::unchecked(std::vector<Scalar> values) {
    Character c;
    c.v_ = std::move(values);
    return c;
}

Character Character::make(const HopfPresentation& h, std::vector<Scalar> values) {
    if (values.size() != h.num_gens())
        throw Error("DimensionMismatch", "character needs one value per generator");
    Character c = unchecked(std::move(values));
    for (const auto& rule : h.sys().rules()) {
        Scalar d = c(NCPoly::word(rule.lhs)) - c(rule.rhs);
        if (!d.is_zero())
            throw Error("RelationViolation", "character does not annihilate " + word_str(rule.lhs, h.sys().names()) +
                                                 " -> " + rule.rhs.str(h.sys().names(), h.sys().order()) +
                                                 " (defect " + d.str() + ")");
    }
    return c;
}

Character Character::counit(const HopfPresentation& h) { return unchecked(h.counit); }

Scalar Character::operator()(const NCPoly& p) const {
    Scalar s;
    for (const auto& [w, c] : p.terms()) {
        Scalar t = c;
        for (Letter l : w) {
            t *= v_.at(l);
            if (t.is_zero()) break;
        }
        s += t;
    }
    return s;
}

bool Character::annihilates_relations(const RewriteSystem& sys) const {
    for (const auto& rule : sys.rules())
        if ((*this)(NCPoly::word(rule.lhs)) != (*this)(rule.rhs)) return false;
    return true;
}

// -------------------------------------------------------- winding maps

namespace {

AlgebraMap winding(const HopfPresentation& h, const Character& pi, bool left) {
    AlgebraMap m;
    m.certificate_degree = h.sys().certificate();
    for (size_t g = 0; g < h.num_gens(); ++g) {
        NCPoly img;
        for (const auto& [k, c] : h.delta(NCPoly::gen(static_cast<Letter>(g))).terms()) {
            Scalar v = pi(NCPoly::word(left ? k[0] : k[1]));
            if (!v.is_zero()) img.add_term(left ? k[1] : k[0], c * v);
        }
        m.images.push_back(h.nf(img));
    }
    if (!m.preserves_relations(h.sys()))
        throw Error("RelationViolation", std::string(left ? "left" : "right") + " winding map does not preserve relations");
    return m;
}

}  // namespace

AlgebraMap winding_left(const HopfPresentation& h, const Character& pi) { return winding(h, pi, true); }
AlgebraMap winding_right(const HopfPresentation& h, const Character& pi) { return winding(h, pi, false); }

Character convolve(const HopfPresentation& h, const Character& a, const Character& b) {
    std::vector<Scalar> v;
    for (size_t g = 0; g < h.num_gens(); ++g) {
        Scalar s;
        for (const auto& [k, c] : h.delta(NCPoly::gen(static_cast<Letter>(g))).terms())
            s += c * a(NCPoly::word(k[0])) * b(NCPoly::word(k[1]));
        v.push_back(s);
    }
    return Character::unchecked(std::move(v));
}

Character char_antipode_dual(const HopfPresentation& h, const Character& pi) {
    std::vector<Scalar> v;
    for (size_t g = 0; g < h.num_gens(); ++g) v.push_back(pi(h.S(NCPoly::gen(static_cast<Letter>(g)))));
    return Character::unchecked(std::move(v));
}

Character pi_of(const HopfPresentation& h, const AlgebraMap& sigma) {
    std::vector<Scalar> v;
    for (const auto& img : sigma.images) v.push_back(h.epsilon(h.nf(img)));
    return Character::unchecked(std::move(v));
}

Character twist_character(const HopfPresentation& h, const Character& pi, const AlgebraMap& sigma) {
    std::vector<Scalar> v;
    for (const auto& img : sigma.images) v.push_back(pi(h.nf(img)));
    return Character::unchecked(std::move(v));
}

AlgebraMap s_squared(const HopfPresentation& h) {
    AlgebraMap m;
    m.certificate_degree = h.sys().certificate();
    for (size_t g = 0; g < h.num_gens(); ++g) m.images.push_back(h.S(h.S(NCPoly::gen(static_cast<Letter>(g)))));
    return m;
}

AlgebraMap s_inverse_squared(const HopfPresentation& h) {
    AlgebraMap m;
    m.certificate_degree = h.sys().certificate();
    for (size_t g = 0; g < h.num_gens(); ++g)
        m.images.push_back(h.S_inv(h.S_inv(NCPoly::gen(static_cast<Letter>(g)))));
    return m;
}

}  // namespace hq
