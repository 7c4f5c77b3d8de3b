#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hq/rewrite.hpp"

namespace hq {

// Element of A^{(x)k}: a combination of k-tuples of words.
class Tensor {
public:
    using Key = std::vector<Word>;
    using Terms = std::map<Key, Scalar>;

    explicit Tensor(size_t arity = 2) : arity_(arity) {}
    static Tensor pure(const std::vector<NCPoly>& factors, const Scalar& c = Scalar(1));

    size_t arity() const { return arity_; }
    bool is_zero() const { return t_.empty(); }
    const Terms& terms() const& { return t_; }
    Terms terms() && { return std::move(t_); }
    void add_term(const Key& k, const Scalar& c);

    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator*(const Tensor& o) const;  // factorwise product
    Tensor operator*(const Scalar& s) const;
    Tensor& operator+=(const Tensor& o);
    bool operator==(const Tensor& o) const { return arity_ == o.arity_ && t_ == o.t_; }

    Tensor normal_form(const RewriteSystem& sys) const;
    std::string str(const std::vector<std::string>& names) const;

private:
    size_t arity_;
    Terms t_;
};

Tensor parse_tensor(const std::string& text, const std::vector<std::string>& names, const Field& field);

class HopfPresentation {
public:
    HopfPresentation(std::string name, RewriteSystem sys) : name_(std::move(name)), sys_(std::move(sys)) {}

    const std::string& name() const { return name_; }
    const RewriteSystem& sys() const { return sys_; }
    RewriteSystem& mutable_sys() { return sys_; }
    size_t num_gens() const { return sys_.num_gens(); }
    const Field& field() const { return sys_.field(); }

    // Defining relations; the rewrite rules are consequences of these.
    std::vector<NCPoly> relations;
    std::vector<Tensor> coproduct;   // per generator, arity 2
    std::vector<Scalar> counit;      // per generator
    std::optional<std::vector<NCPoly>> antipode;
    std::optional<std::vector<NCPoly>> antipode_inverse;

    bool has_antipode() const { return antipode.has_value(); }
    bool antipode_bijective() const { return antipode_inverse.has_value(); }

    NCPoly nf(const NCPoly& p) const { return sys_.normal_form(p); }
    NCPoly gen(const std::string& name) const { return NCPoly::gen(sys_.letter(name)); }
    NCPoly parse(const std::string& text) const { return parse_ncpoly(text, sys_.names(), sys_.field()); }

    Tensor delta(const NCPoly& p) const;        // multiplicative extension, normalized
    Scalar epsilon(const NCPoly& p) const;      // multiplicative extension
    NCPoly S(const NCPoly& p) const;            // anti-multiplicative extension, normalized
    NCPoly S_inv(const NCPoly& p) const;

    // Same coproduct, counit and antipode data over another presentation of
    // the algebra (e.g. a quotient); images are renormalized.
    HopfPresentation with_system(RewriteSystem sys) const;

private:
    std::string name_;
    RewriteSystem sys_;
};

struct AxiomCheck {
    std::string axiom;      // e.g. "coassociativity", "antipode-left"
    std::string location;   // generator or relation
    std::string status;     // "pass", "fail", "not applicable"
    std::string detail;
};

struct AxiomReport {
    bool passed = true;
    int degree = 0;
    std::vector<AxiomCheck> checks;
    std::vector<AxiomCheck> failures() const;
};

// Checks every Hopf axiom on generators and on the defining relations
// (the rewrite rules when none are recorded), modulo the relations.
AxiomReport verify_hopf_axioms(const HopfPresentation& h, int degree_bound);

// One-dimensional representation given by its values on generators.
class Character {
public:
    Character() = default;
    // Rejects values that do not annihilate every relation (RelationViolation).
    static Character make(const HopfPresentation& h, std::vector<Scalar> values);
    static Character counit(const HopfPresentation& h);
    static Character unchecked(std::vector<Scalar> values);

    const std::vector<Scalar>& values() const { return v_; }
    Scalar operator()(const NCPoly& p) const;
    bool annihilates_relations(const RewriteSystem& sys) const;
    bool operator==(const Character& o) const { return v_ == o.v_; }
    bool operator!=(const Character& o) const { return !(*this == o); }

private:
    std::vector<Scalar> v_;
};

AlgebraMap winding_left(const HopfPresentation& h, const Character& pi);
AlgebraMap winding_right(const HopfPresentation& h, const Character& pi);
Character convolve(const HopfPresentation& h, const Character& a, const Character& b);
Character char_antipode_dual(const HopfPresentation& h, const Character& pi);  // pi o S
Character pi_of(const HopfPresentation& h, const AlgebraMap& sigma);           // eps o sigma
Character twist_character(const HopfPresentation& h, const Character& pi, const AlgebraMap& sigma);
AlgebraMap s_squared(const HopfPresentation& h);
AlgebraMap s_inverse_squared(const HopfPresentation& h);

// Presentation text format (see README): field, generators with weights,
// oriented rules, defining relations and the Hopf structure on generators.
std::string write_presentation(const HopfPresentation& h);
HopfPresentation read_presentation(const std::string& text);  // ParseError

// Algebra map text format: one "image <generator> : <poly>" line per generator.
std::string write_algebra_map(const AlgebraMap& m, const RewriteSystem& sys);
AlgebraMap read_algebra_map(const std::string& text, const RewriteSystem& sys);

// ------------------------------------------------------------- builders

HopfPresentation build_quantum_matrices(int n, const Scalar& q = Scalar::q(), int degree_bound = 6);
HopfPresentation build_quantum_sl(int n, const Scalar& q = Scalar::q(), int degree_bound = 6);
// Quantum determinant of O_q(M_n) as a polynomial in the X_ij generators.
NCPoly quantum_determinant(int n, const Scalar& q);

// Lie algebra with basis names and brackets [x_i, x_j] = sum_k c[i][j][k] x_k.
struct LieData {
    std::vector<std::string> names;
    std::vector<std::vector<std::vector<Rational>>> c;
    // Matrix of ad(x_i) and its trace, computed directly from c.
    Rational ad_trace(size_t i) const;
    void check_jacobi() const;  // throws JacobiViolation
};

HopfPresentation build_enveloping(const LieData& g, int degree_bound = 6);

// Poly-Z group a_1, ..., a_d in which G_k = <a_1..a_k> is normal in G.
// conj[k][i] and conj_inv[k][i] (i < k) are the collected exponent vectors
// of a_k a_i a_k^-1 and a_k^-1 a_i a_k over a_1..a_{k-1}.
struct PolycyclicData {
    std::vector<std::string> names;
    std::vector<std::string> inverse_names;
    std::vector<std::vector<std::vector<int>>> conj;
    std::vector<std::vector<std::vector<int>>> conj_inv;

    size_t hirsch_length() const { return names.size(); }
    static PolycyclicData free_abelian(const std::vector<std::string>& names);
    static PolycyclicData klein_bottle();
    static PolycyclicData heisenberg();
    // Sign of the exponent of a_i in a_k a_i a_k^-1; throws NonInvertibleAction
    // unless it is +-1.
    int action_sign(size_t k, size_t i) const;
};

HopfPresentation build_group_algebra(const PolycyclicData& g, const std::string& name, int degree_bound = 6);
HopfPresentation build_laurent(int n, int degree_bound = 6);
HopfPresentation build_uq_sl2(const Scalar& q = Scalar::q(), int degree_bound = 6);

}  // namespace hq
