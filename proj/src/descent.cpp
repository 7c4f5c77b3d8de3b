#include "hq/descent.hpp"

namespace hq {

namespace {

std::string step_name(size_t i, const NCPoly& x, const RewriteSystem& sys) {
    return "step " + std::to_string(i + 1) + " (" + x.str(sys.names(), sys.order()) + ")";
}

// Base case: commutative, and every surviving generator is group-like,
// primitive, or invertible by another generator.
std::string recognize_base(const HopfPresentation& base) {
    const RewriteSystem& sys = base.sys();
    const size_t n = sys.num_gens();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            NCPoly x = NCPoly::gen(static_cast<Letter>(a)), y = NCPoly::gen(static_cast<Letter>(b));
            if (!sys.normal_form(x * y - y * x).is_zero())
                throw Error("BaseCaseUnrecognized",
                            "generators " + sys.names()[a] + " and " + sys.names()[b] + " do not commute in the base");
        }
    const NCPoly one(Scalar(1));
    size_t group_like = 0, primitive = 0;
    for (size_t a = 0; a < n; ++a) {
        NCPoly x = sys.normal_form(NCPoly::gen(static_cast<Letter>(a)));
        if (x.degree() <= 0) continue;
        Tensor d = base.delta(x);
        if (d == Tensor::pure({x, x}).normal_form(sys)) {
            ++group_like;
            continue;
        }
        if (d == (Tensor::pure({x, one}) + Tensor::pure({one, x})).normal_form(sys)) {
            ++primitive;
            continue;
        }
        bool invertible = false;
        for (size_t b = 0; b < n && !invertible; ++b)
            invertible = sys.normal_form(x * NCPoly::gen(static_cast<Letter>(b))) == one;
        if (!invertible)
            throw Error("BaseCaseUnrecognized", "generator " + sys.names()[a] +
                                                    " is neither group-like, primitive nor invertible in the base");
    }
    return "commutative: " + std::to_string(group_like) + " group-like, " + std::to_string(primitive) + " primitive";
}

}  // namespace

DescentResult descend(const HopfPresentation& h, const std::vector<NCPoly>& chain, const DescentOptions& opt) {
    DescentResult res;
    RewriteSystem cur = h.sys();
    for (size_t i = 0; i < chain.size(); ++i) {
        const std::string where = step_name(i, chain[i], h.sys());
        NCPoly x = cur.normal_form(chain[i]);
        if (x.is_zero()) throw Error("NotNormal", where + ": element is already zero");
        if (!h.epsilon(x).is_zero()) throw Error("NotAugmented", where + ": counit value " + h.epsilon(x).str());

        DescentStep step;
        step.element = chain[i];
        std::optional<AlgebraMap> tau;
        try {
            tau = is_tau_normal(x, cur);
        } catch (const Error& e) {
            if (e.kind() == "InsufficientConfluence") throw Error("CertificateTooWeak", where + ": " + e.what());
            throw;
        }
        step.diagonal = tau.has_value();
        if (!tau) tau = find_normalizing_map(x, cur, opt.search_length);
        if (!tau) throw Error("NotNormal", where + ": no tau with x*g = tau(g)*x");
        auto inv = step.diagonal ? std::optional<AlgebraMap>() : invert_map(*tau, cur, opt.search_length);
        if (step.diagonal) {
            std::vector<Scalar> s = *tau->diagonal_scalars();
            for (auto& c : s) c = c.inv();
            inv = AlgebraMap::diagonal(s);
            inv->certificate_degree = tau->certificate_degree;
        }
        if (!inv || !compose(*tau, *inv, cur).equals(AlgebraMap::identity(cur.num_gens()), cur) ||
            !compose(*inv, *tau, cur).equals(AlgebraMap::identity(cur.num_gens()), cur))
            throw Error("NotNormal", where + ": normalizing map is not invertible within the search bound");
        step.tau = *tau;
        step.tau_inverse = *inv;
        step.certificate = certify_nonzerodivisor(x, cur, opt.certificate_degree);
        if (!step.certificate.certified)
            throw Error("CertificateTooWeak", where + ": nonzerodivisor status not certified to degree " +
                                                   std::to_string(opt.certificate_degree));
        cur = quotient(cur, x, opt.degree_bound);
        step.quotient = cur;
        res.trace.steps.push_back(std::move(step));
    }

    HopfPresentation base = h.with_system(cur);
    res.trace.base_case = recognize_base(base);

    // pi_{i-1}(g) = pi_i(tau_i^-1(g)), evaluated in the i-th quotient.
    std::vector<Character> partial(chain.size() + 1);
    partial[chain.size()] = Character::unchecked(h.counit);
    for (size_t i = chain.size(); i-- > 0;) {
        const DescentStep& st = res.trace.steps[i];
        std::vector<Scalar> v;
        for (const auto& img : st.tau_inverse.images) v.push_back(partial[i + 1](st.quotient.normal_form(img)));
        partial[i] = Character::unchecked(std::move(v));
    }
    res.pi0 = Character::make(h, partial[0].values());
    res.trace.partial = std::move(partial);
    return res;
}

std::vector<std::string> normal_generator_candidates(const HopfPresentation& h) {
    std::vector<std::string> out;
    for (size_t g = 0; g < h.num_gens(); ++g) {
        NCPoly x = NCPoly::gen(static_cast<Letter>(g));
        if (!h.epsilon(x).is_zero()) continue;
        if (is_tau_normal(h.nf(x), h.sys())) out.push_back(h.sys().names()[g]);
    }
    return out;
}

std::vector<NCPoly> quantum_sl_chain(const HopfPresentation& h, int n) {
    std::vector<NCPoly> chain;
    for (int j = n; j >= 2; --j)
        for (int i = 1; i < j; ++i) {
            chain.push_back(h.gen("X" + std::to_string(i) + std::to_string(j)));
            chain.push_back(h.gen("X" + std::to_string(j) + std::to_string(i)));
        }
    return chain;
}

AlgebraMap xi_of(const HopfPresentation& h, const Character& pi0) { return winding_left(h, pi0); }

AlgebraMap nakayama_presented(const HopfPresentation& h, const Character& pi0) {
    AlgebraMap nu = compose(s_squared(h), xi_of(h, pi0), h.sys());
    if (!nu.preserves_relations(h.sys())) throw Error("RelationViolation", "nakayama map does not preserve relations");
    return nu;
}

std::vector<int> adjoint_trace(const PolycyclicData& g) {
    std::vector<int> t(g.hirsch_length(), 1);
    for (size_t k = 0; k < g.hirsch_length(); ++k)
        for (size_t i = 0; i < k; ++i) t[k] *= g.action_sign(k, i);
    return t;
}

Character adjoint_trace_character(const PolycyclicData& g) {
    std::vector<Scalar> v;
    for (int s : adjoint_trace(g)) {
        v.push_back(Scalar(s));
        v.push_back(Scalar(s));
    }
    return Character::unchecked(std::move(v));
}

}  // namespace hq
