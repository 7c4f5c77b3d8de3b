#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hq/ncpoly.hpp"

namespace hq {

struct Rule {
    Word lhs;
    NCPoly rhs;
};

struct RewriteCache;

// Presentation k<generators>/(relations) by oriented rewrite rules.
// Generator index order is the precedence used by the monomial order.
class RewriteSystem {
public:
    RewriteSystem() : RewriteSystem({}, Field::rationals()) {}
    RewriteSystem(std::vector<std::string> names, Field field, std::vector<int> weights = {});

    const std::vector<std::string>& names() const { return names_; }
    size_t num_gens() const { return names_.size(); }
    const Field& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Rule>& rules() const { return rules_; }
    int certificate() const { return certificate_; }
    void set_certificate(int d) { certificate_ = d; }
    size_t step_budget() const { return step_budget_; }
    void set_step_budget(size_t b) { step_budget_ = b; }
    Letter letter(const std::string& name) const;

    // Adds the relation p = 0 oriented by its leading word. Throws
    // OrderViolation when the leading word is empty (a unit became zero).
    void add_relation(const NCPoly& p);
    // Adds an explicit rule; throws OrderViolation unless lhs is larger than
    // every word of rhs.
    void add_rule(const Word& lhs, const NCPoly& rhs);

    NCPoly normal_form(const NCPoly& p) const;
    NCPoly normal_form(const Word& w) const;
    bool is_normal(const Word& w) const;
    // Reduction along randomly chosen redexes without caching; used to test
    // that the result does not depend on the reduction path.
    NCPoly normal_form_randomized(const NCPoly& p, std::mt19937& rng) const;

    // Normal words of length <= max_len, in increasing length then lex order.
    std::vector<Word> normal_words(int max_len) const;

    // Relations lhs - rhs for all rules.
    std::vector<NCPoly> relations() const;

    // Removes rules whose lhs contains another lhs and normalizes right-hand
    // sides. Returns the relations set aside while doing so.
    void inter_reduce();

    std::string describe() const;

private:
    friend RewriteSystem complete(const RewriteSystem&, int);
    bool find_redex(const Word& w, size_t start, size_t& pos, size_t& rule) const;
    const NCPoly& nf_word(const Word& w, size_t& steps) const;
    void reset_cache();
    void index_rules();

    std::vector<std::string> names_;
    Field field_;
    MonomialOrder order_;
    std::vector<Rule> rules_;
    std::vector<std::vector<size_t>> by_first_;
    int certificate_ = 0;
    size_t step_budget_ = 2000000;
    std::shared_ptr<RewriteCache> cache_;
};

// Resolves all overlap ambiguities of total length <= degree_bound, adding
// rules until they resolve. The certificate records degree_bound.
RewriteSystem complete(const RewriteSystem& sys, int degree_bound);

// Overlap ambiguities of length <= degree_bound that do not resolve.
std::vector<Word> unresolved_overlaps(const RewriteSystem& sys, int degree_bound);

// Algebra endomorphism given on generators, extended multiplicatively.
struct AlgebraMap {
    std::vector<NCPoly> images;
    int certificate_degree = 0;

    static AlgebraMap identity(size_t n);
    static AlgebraMap diagonal(const std::vector<Scalar>& scalars);
    NCPoly apply(const NCPoly& p, const RewriteSystem& sys) const;
    // Every relation maps into the ideal (checked by normal forms).
    bool preserves_relations(const RewriteSystem& sys) const;
    // Images equal as normal forms.
    bool equals(const AlgebraMap& o, const RewriteSystem& sys) const;
    // Scalars when every generator maps to a multiple of itself.
    std::optional<std::vector<Scalar>> diagonal_scalars() const;
};

// f after g.
AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g, const RewriteSystem& sys);

// Diagonal tau with x*g = tau(g)*x for every generator, if one exists.
// Throws InsufficientConfluence when deg(x)+1 exceeds the certificate.
std::optional<AlgebraMap> is_tau_normal(const NCPoly& x, const RewriteSystem& sys);

// Bounded search for a general tau: for each generator the unique y among
// normal words of length <= max_len with y*x = x*g.
std::optional<AlgebraMap> find_normalizing_map(const NCPoly& x, const RewriteSystem& sys, int max_len);

// Preimages of the generators under an automorphism, searched among normal
// words of length <= max_len.
std::optional<AlgebraMap> invert_map(const AlgebraMap& f, const RewriteSystem& sys, int max_len);

// Presentation of A/<x>, completed to degree_bound.
RewriteSystem quotient(const RewriteSystem& sys, const NCPoly& x, int degree_bound);

struct ZeroDivisorCertificate {
    bool certified = false;
    int degree = 0;         // longest product inspected
    size_t words_checked = 0;
    std::string method;     // "leading-words" or "rank"
};

// Left and right multiplication by x are injective on normal words of length
// <= degree - deg(x).
ZeroDivisorCertificate certify_nonzerodivisor(const NCPoly& x, const RewriteSystem& sys, int degree);

}  // namespace hq
