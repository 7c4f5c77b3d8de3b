#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hq/hopf.hpp"
#include "hq/matrix.hpp"

namespace hq {

// Finite-dimensional Hopf algebra given by structure tensors in a basis
// e_0..e_{n-1}. Linear maps are matrices whose column i is the image of e_i.
struct FDHopf {
    std::string name;
    Field field;
    size_t n = 0;
    std::vector<std::string> basis;
    std::vector<Scalar> mult;    // [(i*n+j)*n+k]: coefficient of e_k in e_i e_j
    std::vector<Scalar> comult;  // [(i*n+j)*n+k]: coefficient of e_j (x) e_k in Delta(e_i)
    Vec unit;
    Vec counit;
    Matrix antipode;
    std::vector<size_t> generators;  // basis indices generating the algebra; empty = all

    const Scalar& m(size_t i, size_t j, size_t k) const { return mult[(i * n + j) * n + k]; }
    const Scalar& d(size_t i, size_t j, size_t k) const { return comult[(i * n + j) * n + k]; }

    Vec basis_vector(size_t i) const;
    Vec mul(const Vec& a, const Vec& b) const;
    Matrix left_mult(const Vec& a) const;   // x -> a x
    Matrix right_mult(const Vec& a) const;  // x -> x a
    Vec coproduct(const Vec& a) const;      // flattened n*n vector, index j*n+k
    Scalar eps(const Vec& a) const;
    std::string vec_str(const Vec& v) const;
};

using LinearAuto = Matrix;

// Associativity, unit, coassociativity, counit, multiplicativity of Delta
// and epsilon, antipode laws and invertibility of the antipode matrix.
AxiomReport verify_fd_axioms(const FDHopf& h);

bool is_algebra_map(const FDHopf& h, const Matrix& f);

// Solution spaces of a t = eps(a) t and t a = eps(a) t.
std::vector<Vec> left_integral_space(const FDHopf& h);
std::vector<Vec> right_integral_space(const FDHopf& h);
// The unique left integral up to scalar; NotUnimodularDimension otherwise.
Vec left_integral(const FDHopf& h);
// pi0 with t a = pi0(a) t, as a covector; NotCharacter if not scalar.
Vec modular_character(const FDHopf& h);
bool is_character(const FDHopf& h, const Vec& pi);

FDHopf dual(const FDHopf& h);

// Frobenius functional: a left integral of the dual, as a covector on A.
Vec frobenius_functional(const FDHopf& h);
// nu with lambda(nu(a) b) = lambda(b a), so that A* = ^nu A as bimodules;
// DegenerateForm if the form is singular.
LinearAuto nakayama(const FDHopf& h);

LinearAuto winding_left(const FDHopf& h, const Vec& pi);   // a -> sum pi(a1) a2
LinearAuto winding_right(const FDHopf& h, const Vec& pi);  // a -> sum a1 pi(a2)
LinearAuto inner(const FDHopf& h, const Vec& u);           // a -> u a u^-1
std::optional<Vec> inverse_element(const FDHopf& h, const Vec& u);

struct InnerSearch {
    std::optional<Vec> unit;   // f(a) u = u g(a) for all a
    size_t solution_dim = 0;
    size_t tried = 0;          // candidates tested
    size_t budget = 0;         // random combinations allowed
    uint64_t seed = 0;
};

// Sweeps the solution-space basis, then seeded random combinations with
// coefficients in [-3, 3].
InnerSearch equal_up_to_inner(const FDHopf& h, const LinearAuto& f, const LinearAuto& g, uint64_t seed = 0,
                              size_t budget = 64);

// The group-like g with lambda * f = f(g) lambda for the Frobenius functional.
Vec distinguished_grouplike(const FDHopf& h);

struct RadfordReport {
    bool passed = false;
    Vec pi0;
    Vec g;
    LinearAuto xi, phi, s4;
    std::optional<size_t> offending;  // basis element where the identity fails
};

// S^4 = Ad_g o phi o xi^-1 with Ad_g(a) = g^-1 a g.
RadfordReport radford_s4_check(const FDHopf& h);

// Smallest m <= bound with xi^m = id, or nullopt.
std::optional<int> integral_order(const FDHopf& h, int bound = 64);
// Smallest m <= bound with nu^m inner, or nullopt.
std::optional<int> nakayama_order(const FDHopf& h, int bound = 64);

std::vector<Vec> group_likes(const FDHopf& h);
std::vector<Vec> center(const FDHopf& h);

struct AdjointTensorReport {
    bool passed = false;
    size_t relation_rank = 0;  // rank of the relation subspace J in A (x) A
    size_t expected_rank = 0;  // n^2 - n
    LinearAuto twist;          // Xi[pi] S^2
    std::string detail;
};

// Builds k_pi (x)_A L(A^e) as (A (x) A)/J with a.(u (x) v) = a1 u (x) v S(a2),
// and checks that u (x) v -> v twist(u) is a bimodule isomorphism onto
// ^1 A^{twist}.
AdjointTensorReport adjoint_tensor_check(const FDHopf& h, const Vec& pi);

// ------------------------------------------------------------- builders

// Taft algebra T_l, basis g^a x^b, x g = zeta g x. l = 2 is Sweedler over Q.
FDHopf build_taft(int l);
FDHopf build_sweedler();
// Group algebra of the permutation group generated by gens (images of
// 0..m-1); basis elements are named by shortest words in a, b, c.
FDHopf build_perm_group_algebra(const std::string& name, const std::vector<std::vector<int>>& gens);

struct FDGroupEntry {
    std::string name;
    size_t order;
    std::vector<std::vector<int>> gens;
};
const std::vector<FDGroupEntry>& small_groups();

std::vector<std::string> fd_catalog_names();
FDHopf build_fd(const std::string& name);  // UnknownAlgebra

// Structure-tensor text format.
std::string write_fd(const FDHopf& h);
FDHopf read_fd(const std::string& text);

}  // namespace hq
