#pragma once

#include "coxnorm/group.hpp"
#include "coxnorm/parabolic.hpp"

#include <cstdint>
#include <vector>

namespace coxnorm {

struct CheckReport;
struct Decomposition;

struct InvolutionRecord {
    Perm u;
    int degree = 0;   // dimension of the (-1)-eigenspace
    int shape = 0;    // shape of the associated parabolic
    std::uint64_t centralizer_order = 0;
};

// Parabolic whose roots are the roots negated by u.  Throws std::invalid_argument unless u^2 = 1.
Subsystem fixed_parabolic(const RootSystem& rs, const Perm& u);
int involution_degree(const RootSystem& rs, const Perm& u);

// P is an involution centralizer shape iff its longest element acts as -1 on the span of its roots.
bool is_involution_shape(const ShapeCatalog& cat, int index);
std::vector<int> mark_involution_shapes(const ShapeCatalog& cat);

// One involution per class: the longest element of each marked shape.
std::vector<InvolutionRecord> involution_classes(const ShapeCatalog& cat);

// C_W(u) = N_W(fixed_parabolic(u)), by double inclusion on explicit element sets (needs W enumerated).
CheckReport centralizer_equals_normalizer(const RootSystem& rs, const Perm& u, const GroupSet& W);

// The observations on orthogonal closures and involution centralizers, as checks.  `decs` holds
// the decompositions of every shape in catalog order.
CheckReport closure_involution_checks(const ShapeCatalog& cat, const std::vector<Decomposition>& decs);

} // namespace coxnorm
