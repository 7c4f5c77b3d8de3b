#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hq/fd_hopf.hpp"
#include "hq/hopf.hpp"

namespace hq {

using PolyMatrix = std::vector<std::vector<NCPoly>>;

// Free resolution of the trivial left module k. Degree i is A^{ranks[i]};
// elements are row vectors and the differential acts by right
// multiplication: v -> v * d[i], d[i] a ranks[i] x ranks[i-1] matrix.
struct FreeComplex {
    std::string kind;                              // "chevalley-eilenberg" or "tower"
    std::string side = "left modules, right-multiplication differentials";
    std::vector<size_t> ranks;
    std::vector<std::vector<std::string>> labels;  // basis labels per degree
    std::vector<PolyMatrix> d;                     // d[0] is empty

    size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
};

// Every product d[i+1] * d[i] reduces to zero.
bool squares_to_zero(const FreeComplex& c, const RewriteSystem& sys);

// U(g) (x) Lambda^i g with the standard differential; JacobiViolation.
FreeComplex ce_resolution(const LieData& g, const HopfPresentation& u);
// Iterated mapping cones over G_1 < G_2 < ... for the group algebra built
// by build_group_algebra(g); NonInvertibleAction, TruncationInconclusive
// when a chain-map lift is not found.
FreeComplex tower_resolution(const PolycyclicData& g, const HopfPresentation& a);

// Text format: header lines, then one "entry i row col <poly>" per nonzero
// entry. See README for the grammar.
std::string export_complex(const FreeComplex& c, const HopfPresentation& h);
FreeComplex import_complex(const std::string& text, const HopfPresentation& h);

// ------------------------------------------------------ coefficients

// The bimodule ^sigma A^tau: a.m.b = sigma(a) m tau(b).
struct TwistSpec {
    AlgebraMap left;
    AlgebraMap right;
    static TwistSpec identity(size_t gens);
    static TwistSpec left_twist(const AlgebraMap& sigma);
    static TwistSpec right_twist(const AlgebraMap& tau);
};

// One-sided module structure on A, given on generators as
// g acting on m = sum c * left * m * right.
struct CoefficientModule {
    enum class Side { Right, Left };
    struct Term {
        Scalar c;
        NCPoly left, right;
    };
    Side side = Side::Right;
    std::string description;
    std::vector<std::vector<Term>> action;  // per generator
};

// Right adjoint (^sigma A^tau)': m.a = sum sigma(S(a2)) m tau(a1), or left
// adjoint L(^sigma A^tau): a.m = sum sigma(a1) m tau(S(a2)).
CoefficientModule twisted_bimodule_coefficients(const HopfPresentation& h, const TwistSpec& t,
                                                CoefficientModule::Side side);
CoefficientModule regular_module(const HopfPresentation& h, CoefficientModule::Side side);
// Action of a single generator on an element.
NCPoly act(const HopfPresentation& h, const CoefficientModule& m, const NCPoly& x, Letter g);

// ------------------------------------------------------ truncated homology

struct TruncationOptions {
    int N = 8;  // largest internal degree reported
    int W = 3;  // boundaries are taken from degrees up to k + W
    int jobs = 1;
};

// Internal degree is the length of normal words. dims[i][k] is the dimension
// of classes represented in degree <= k, with boundaries from degree <= k + W.
struct TruncatedDims {
    int N = 0, W = 0;
    std::string normalization;
    std::vector<std::vector<size_t>> dims;
    std::vector<std::vector<bool>> stable;  // [i][k]: boundary part equal for slack 1..W
    std::vector<bool> certified;            // [i]: stable at every k <= N
    std::vector<bool> stable_tail;          // [i]: dims equal over the last W internal degrees
    // Euler bookkeeping on the filtered subcomplexes, when the differential
    // does not raise degree.
    bool euler_applicable = false;
    bool euler_passed = false;

    size_t top(size_t i) const { return dims[i].back(); }
    bool all_certified() const;
};

// Tor^A(A, k) along the complex: 1 in degree 0, 0 above for a resolution.
TruncatedDims resolution_homology(const HopfPresentation& h, const FreeComplex& c, const TruncationOptions& o);

// H_i(A, ^sigma A^tau) = Tor^A_i((^sigma A^tau)', k).
TruncatedDims twisted_hochschild_homology(const HopfPresentation& h, const FreeComplex& c, const TwistSpec& t,
                                          const TruncationOptions& o);
// H^i(A, ^sigma A^tau) = Ext^i_A(k, L(^sigma A^tau)); AntipodeInverseRequired.
TruncatedDims twisted_hochschild_cohomology(const HopfPresentation& h, const FreeComplex& c, const TwistSpec& t,
                                            const TruncationOptions& o);

// dims[0]: Z(M) = {m : sigma(a) m = m tau(a)}, dims[1]: M/[A,M].
TruncatedDims zero_degree(const HopfPresentation& h, const TwistSpec& t, const TruncationOptions& o);

struct HomologicalIntegral {
    Character pi0;
    TruncatedDims ext;  // Ext^i_A(k, A)
    size_t d = 0;
};

// TopNotOneDimensional, TruncationInconclusive.
HomologicalIntegral homological_integral(const HopfPresentation& h, const FreeComplex& c,
                                         const TruncationOptions& o);

struct DualityRow {
    size_t i = 0;
    std::vector<size_t> cohomology;  // H^i(A, M)
    std::vector<size_t> homology;    // H_{d-i}(A, ^{xi^-1 S^-2} M)
    bool certified = false;
    bool match = false;
};

struct DualityReport {
    size_t d = 0;
    std::string twist;
    std::vector<DualityRow> rows;
    bool passed = false;
};

DualityReport duality_check(const HopfPresentation& h, const FreeComplex& c, const Character& pi0,
                            const TwistSpec& m, const TruncationOptions& o);

struct InvariantReport {
    size_t d = 0;
    Character pi0;
    AlgebraMap nu;
    std::optional<size_t> thdim_witness;    // dim H_d(A, A^nu) at N when certified nonzero
    std::optional<size_t> thcodim_witness;  // dim H^d(A, ^nu A) at N when certified nonzero
    std::optional<size_t> hdim_top;         // dim H_d(A, A) at N when certified
    std::optional<size_t> hcodim_top;       // dim H^d(A, A) at N when certified
    std::vector<std::string> notes;
};

InvariantReport invariant_report(const HopfPresentation& h, const FreeComplex& c, const TruncationOptions& o);

// ------------------------------------------------------ finite-dimensional

// Bar resolution of A over A^e: degree i is A^{(x)(i+2)}, image[i][b] the
// sparse image of basis element b in degree i-1 (degree -1 is A).
struct BarComplex {
    size_t n = 0;
    std::vector<size_t> dims;
    std::vector<std::vector<SparseVec>> image;
    std::vector<size_t> free_ranks() const;  // A^e-ranks n^i
};

BarComplex bar_resolution(const FDHopf& h, size_t length);
bool bar_squares_to_zero(const BarComplex& b);
bool bar_exact(const BarComplex& b);

// Exact dimensions for degrees 0..max_degree with coefficients ^sigma A^tau.
std::vector<size_t> fd_hochschild_homology(const FDHopf& h, const Matrix& sigma, const Matrix& tau, size_t max_degree);
std::vector<size_t> fd_hochschild_cohomology(const FDHopf& h, const Matrix& sigma, const Matrix& tau,
                                             size_t max_degree);
// Tor^A_i(M', k) through the bar resolution of k.
std::vector<size_t> fd_tor_adjoint(const FDHopf& h, const Matrix& sigma, const Matrix& tau, size_t max_degree);
// Largest degree computed by default, limited by the size of the chain spaces.
size_t fd_default_degree(const FDHopf& h);

// {dim Z(M), dim M/[A,M]}.
std::pair<size_t, size_t> fd_zero_degree(const FDHopf& h, const Matrix& sigma, const Matrix& tau);
bool fd_semisimple(const FDHopf& h);

}  // namespace hq
