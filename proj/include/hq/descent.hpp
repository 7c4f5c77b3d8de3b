#pragma once

#include <string>
#include <vector>

#include "hq/hopf.hpp"

namespace hq {

struct DescentStep {
    NCPoly element;                       // in the generators of the original algebra
    AlgebraMap tau;                       // element * g = tau(g) * element
    AlgebraMap tau_inverse;
    bool diagonal = false;                // tau scales every generator
    ZeroDivisorCertificate certificate;
    RewriteSystem quotient;               // current system with the element killed
};

struct DescentTrace {
    std::vector<DescentStep> steps;
    std::string base_case;                // e.g. "commutative: group-like x2"
    std::vector<Character> partial;       // partial[i]: integral character of the i-th quotient
};

struct DescentResult {
    Character pi0;
    DescentTrace trace;
};

struct DescentOptions {
    int degree_bound = 6;        // completion degree of each quotient
    int certificate_degree = 4;  // products inspected by the nonzerodivisor check
    int search_length = 2;       // word length for general normalizing maps
};

// Left integral character by descent through a chain of normal elements.
// Errors (Error::kind): NotAugmented, NotNormal, CertificateTooWeak,
// BaseCaseUnrecognized; the message names the failing step.
DescentResult descend(const HopfPresentation& h, const std::vector<NCPoly>& chain, const DescentOptions& opt = {});

// Generators that are tau-normal and lie in the augmentation ideal.
std::vector<std::string> normal_generator_candidates(const HopfPresentation& h);

// {X_1n, X_n1}, {X_2n, X_n2}, ..., {X_12, X_21}.
std::vector<NCPoly> quantum_sl_chain(const HopfPresentation& h, int n);

AlgebraMap xi_of(const HopfPresentation& h, const Character& pi0);
// nu = S^2 o xi.
AlgebraMap nakayama_presented(const HopfPresentation& h, const Character& pi0);

// Product over the infinite factors of the determinant of conjugation, one
// value per polycyclic generator.
std::vector<int> adjoint_trace(const PolycyclicData& g);
// The same as a character of the group algebra (letters a_1, A_1, a_2, ...).
Character adjoint_trace_character(const PolycyclicData& g);

}  // namespace hq
