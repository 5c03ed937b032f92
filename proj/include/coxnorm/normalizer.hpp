#pragma once

#include "coxnorm/galois.hpp"
#include "coxnorm/group.hpp"
#include "coxnorm/parabolic.hpp"
#include "coxnorm/repr.hpp"

#include <string>
#include <utility>
#include <vector>

namespace coxnorm {

struct CheckReport {
    std::string name;
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> skipped; // parts left out because a group was too large to enumerate
    int checked = 0;

    void require(bool cond, const std::string& what) {
        ++checked;
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
    void merge(const CheckReport& o) {
        ok = ok && o.ok;
        checked += o.checked;
        for (auto& f : o.failures) failures.push_back(o.name.empty() ? f : o.name + ": " + f);
        for (auto& f : o.skipped) skipped.push_back(o.name.empty() ? f : o.name + ": " + f);
    }
};

// N_W(P) as the set stabilizer of the root subsystem of P (generators and order).
Stabilizer normalizer(const RootSystem& rs, const Subsystem& P);
// The same group as an explicit element set; only for moderate orders.
GroupSet normalizer_elements(const RootSystem& rs, const Subsystem& P, std::size_t limit = 2'000'000);

// {a in ambient : a keeps the positive roots of R positive}.  Throws std::invalid_argument naming a
// witness if R is not normalized by the ambient group.
GroupSet howlett_complement(const RootSystem& rs, const Subsystem& R, const GroupSet& ambient);

struct GoursatSections {
    std::vector<Perm> G1, G2, H1, H2, G0, H0;      // sorted
    std::vector<std::pair<Perm, Perm>> theta0;     // matched pairs g0 -> h0
    bool theta_well_defined = false;               // G2 g -> H2 h is a function and injective
    bool is_graph = false;                         // L = {gh : theta(G2 g) = H2 h}
    bool complements_ok = false;                   // G1 = G2 G0, H1 = H2 H0, trivial intersections
    bool theta0_isomorphism = false;
};

// L as a list of pairs (g, h).  `complement` optionally lists the pairs of a complement of G2 x H2.
GoursatSections goursat_sections(const std::vector<std::pair<Perm, Perm>>& L, const Perm& idG, const Perm& idH,
                                 const std::vector<std::pair<Perm, Perm>>& complement = {});
// Splits a group of W along two complementary invariant subspaces.
GoursatSections goursat_sections(const RootSystem& rs, const GroupSet& L, const Subspace& first,
                                 const Subspace& second, const std::vector<Perm>& complement = {});

struct Decomposition {
    CoxeterLabel group;
    int shape_index = 0;
    std::string P_label, Q_label;
    Subsystem P, Q, PQ, closure, pq_closure;
    int q_shape = 0, closure_shape = 0, pq_closure_shape = 0;
    bool pq_is_parabolic = false;
    bool pq_closure_is_W = false;
    std::vector<Perm> N_gens;
    std::uint64_t N_order = 0, P_order = 1, Q_order = 1;
    GroupSet D, A, B, AB, C;
    bool described = false;
    InvariantSplit split;
    ActionRecord actions[3]; // x_perp, x_cap_y, y_perp
    SubgroupName A_name, B_name, C_name;
    bool involution_centralizer = false;

    std::string closure_cell() const;
    std::string q_cell() const;
};

// The decomposition N = (P x Q) x| ((A x B) x| C) for a catalog shape.  With describe = false the
// subspace actions and subgroup names are skipped.
Decomposition decompose(const ShapeCatalog& cat, int shape_index, bool describe = true);
// Same, for the standard parabolic on the simple subset J instead of the catalog representative.
Decomposition decompose(const ShapeCatalog& cat, const std::vector<int>& J, bool describe = true);

// PQAB is normal in N of index |C| <= 2, and the orders multiply out.
CheckReport verify_decomposition(const RootSystem& rs, const Decomposition& d);

// JSON record with the fixed field order used for fixture diffs.
std::string decomposition_json(const Decomposition& d, int indent = 2);

} // namespace coxnorm
