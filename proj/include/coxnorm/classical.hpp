#pragma once

#include "coxnorm/group.hpp"
#include "coxnorm/normalizer.hpp"
#include "coxnorm/rootsys.hpp"

#include <string>
#include <vector>

namespace coxnorm {

// A signed permutation of the points 1..n: point v goes to images[v-1] (negative = sign change).
using SignedPerm = std::vector<int>;

SignedPerm signed_compose(const SignedPerm& a, const SignedPerm& b); // apply a, then b
std::string format_signed(const SignedPerm& s);

struct NamedElement {
    std::string name; // "x1", "y2", "y'1", "z3", "z0", "z'13"
    SignedPerm points;
    Perm perm;
};

// Explicit complement generators for the standard parabolic W_lambda of a classical group.
//
// Points are numbered as in the usual signed-permutation model: for B and D the B_l or D_l factor
// sits on the points 1..l and the blocks of lambda follow.  In our root system the short root
// (type B) and the fork (type D) sit at the end of the diagram, so point q is our coordinate n+1-q.
struct ClassicalGenerators {
    CoxeterLabel group;
    std::vector<int> lambda; // non-increasing parts
    int l = 0;               // points in the B_l / D_l factor
    int sign = 0;            // +1 / -1 for even partitions of n in type D
    char regime = 0;         // D only: 'i', 'a' (case ii, a1 <= 1), 'b' (case ii, a1 > 1), 'A', 'B' (case iii)
    std::vector<int> subset; // 0-based simple indices of P
    std::vector<NamedElement> Q, A, B, C;
};

// Throws std::invalid_argument if lambda is not a label of the group.
ClassicalGenerators classical_complement_generators(const RootSystem& rs, std::vector<int> lambda, int sign = 0);

// The element of W acting on the roots as the given signed permutation (must lie in W).
Perm signed_to_perm(const RootSystem& rs, const SignedPerm& s);

// All labels (lambda, sign) of a classical group in the convention above.
std::vector<std::pair<std::vector<int>, int>> classical_labels(const CoxeterLabel& L);

// Q, A, B equal the groups generated by the classical generators; C has the same order and
// <A, B, C> = D.  (C itself is only determined up to the choice of complement.)
CheckReport check_classical(const ShapeCatalog& cat, const ClassicalGenerators& g);

} // namespace coxnorm
