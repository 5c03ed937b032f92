#pragma once

#include "coxnorm/diagram.hpp"
#include "coxnorm/group.hpp"
#include "coxnorm/linalg.hpp"
#include "coxnorm/parabolic.hpp"

#include <string>
#include <vector>

namespace coxnorm {

enum class Role { X_PERP, X_CAP_Y, Y_PERP };
std::string role_name(Role r);

struct InvariantSplit {
    Subspace x_perp, x_cap_y, y_perp;
};

// V = X^perp + (X cap Y) + Y^perp for P and its orthogonal complement Q.
InvariantSplit invariant_split(const RootSystem& rs, const Subsystem& P, const Subsystem& Q);

// The distinct nonzero orthogonal projections of the roots onto a subspace S.  They span S, so
// elements of W leaving S invariant act faithfully on them; the restriction of w is recorded as a
// permutation of these vectors.  Coordinates are taken in the echelon basis of S with the
// restricted Gram form carried along.
class Restriction {
public:
    Restriction(const RootSystem& rs, const Subspace& S);

    int dim() const { return dim_; }
    int size() const { return (int)psi_.size(); }
    const Vec& vector(int k) const { return psi_[k]; }
    const Mat& form() const { return form_; }
    Scalar inner(const Vec& a, const Vec& b) const;

    bool leaves_invariant(const Perm& w) const;
    // Throws std::invalid_argument if S is not w-invariant.
    Perm restrict(const Perm& w) const;
    Perm identity() const;
    Perm minus_one() const;

    // If the permutation is a reflection of S, its root (up to sign); otherwise an empty vector.
    Vec reflection_root(const Perm& g) const;
    // Exact matrix of the restricted map in the basis of S (columns are images of basis vectors).
    Mat matrix(const Perm& g) const;

private:
    const RootSystem& rs_;
    Subspace S_;
    int dim_ = 0;
    Mat form_;
    std::vector<Vec> psi_;
    std::vector<std::vector<double>> approx_;
    std::vector<int> rep_root_;   // a root projecting onto psi_k
    std::vector<int> psi_of_root_; // -1 for roots orthogonal to S
};

// The reflection structure of a finite group acting on S through permutations of the projections.
struct ImageGroup {
    std::vector<Perm> elements;          // sorted
    std::vector<Perm> reflections;       // elements acting as reflections
    std::vector<Vec> roots;              // their roots, made positive by a generic functional
    std::vector<int> simple;             // indices into reflections
    DiagramType type;                    // type of the reflection subgroup
    std::uint64_t reflection_order = 1;  // order of the subgroup generated by the reflections
    std::string quotient;                // "" if generated by reflections, else "2", "3", "2*2", ...
    bool minus_one = false;              // the group is {1, -1} on a space of dimension >= 2

    std::uint64_t order() const { return elements.size(); }
    bool is_reflection_group() const { return quotient.empty(); }
};

ImageGroup image_group(const Restriction& S, const std::vector<Perm>& restricted_gens);

// Recognizes the type of the group generated by a list of reflections given by their roots.
DiagramType recognize_diagram(const std::vector<Vec>& roots, const Mat& form);

struct ActionRecord {
    Role role = Role::X_PERP;
    std::string subgroup;       // acting group: "PD", "D", "QD"
    std::string classification; // trivial, reflection, minus-identity, diagram-automorphism, mixed
    DiagramType diagram;        // type of the reflection part
    int white = 0;              // simple reflections not coming from P or Q
    std::string quotient;
    std::string marker;         // "", HEART, DIAMOND, CLUB, SPADE
    int dim = 0;

    // Table cell: "", "-1", a type such as "B3A1", or "^2(A4)"; `with_nodes` appends "{white}".
    std::string cell(bool with_nodes = true) const;
};

// Action of <base reflections, extra> on one summand.  `base` are the reflections of P (on X^perp),
// of Q (on Y^perp), or nothing (on X cap Y).
ActionRecord describe_action(const RootSystem& rs, Role role, const Subspace& S, const Subsystem* base,
                             const std::vector<Perm>& extra);

// Name of a subgroup H of the complement D (the A, B, C columns): its reflection type on the first
// summand where it acts faithfully as a reflection group, with the idiosyncrasy marker.
struct SubgroupName {
    std::string type;   // "" for the trivial group
    std::string marker; // HEART, DIAMOND, CLUB, SPADE or ""
    std::string cell() const { return marker.empty() ? type : type + " " + marker; }
};

SubgroupName name_subgroup(const RootSystem& rs, const InvariantSplit& split, const std::vector<Perm>& H,
                           const std::vector<Perm>* AB = nullptr);

} // namespace coxnorm
