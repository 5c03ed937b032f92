#pragma once

#include "coxnorm/diagram.hpp"
#include "coxnorm/group.hpp"
#include "coxnorm/linalg.hpp"
#include "coxnorm/rootsys.hpp"

#include <map>
#include <string>
#include <vector>

namespace coxnorm {

// A reflection subgroup, recorded through its root subsystem.
struct Subsystem {
    RootSet roots;
    RootSet positive;
    std::vector<int> simple; // root indices of its simple system (positive roots)

    int size() const { return roots.count(); }
    bool operator==(const Subsystem& o) const { return roots == o.roots; }
};

// Closes the given roots under their own reflections.
Subsystem subsystem_from_roots(const RootSystem& rs, const std::vector<int>& generators);
// `closed` must already be closed under its reflections.
Subsystem subsystem_of(const RootSystem& rs, const RootSet& closed);
Subsystem standard_subsystem(const RootSystem& rs, const std::vector<int>& J);
Subsystem join(const RootSystem& rs, const Subsystem& a, const Subsystem& b);

std::vector<std::vector<int>> coxeter_matrix(const RootSystem& rs, const std::vector<int>& simple_roots);
DiagramType subsystem_type(const RootSystem& rs, const Subsystem& R);

bool normalizes(const Perm& w, const Subsystem& R);
// Strips the W_R part of an element normalizing Phi_R, leaving the factor that keeps Phi_R^+ positive.
Perm reduce_modulo(const RootSystem& rs, Perm d, const Subsystem& R);
bool in_subgroup(const RootSystem& rs, const Perm& w, const Subsystem& R);
std::vector<Perm> reflections_of(const RootSystem& rs, const Subsystem& R);
std::vector<Perm> simple_reflections_of(const RootSystem& rs, const Subsystem& R);

Subspace root_span(const RootSystem& rs, const RootSet& roots);
Subspace fixed_space(const RootSystem& rs, const Subsystem& U);
Subsystem pointwise_stabilizer(const RootSystem& rs, const Subspace& X);
Subsystem parabolic_closure(const RootSystem& rs, const Subsystem& U);
bool is_parabolic(const RootSystem& rs, const Subsystem& U);

struct Shape {
    int index = 0;               // 1-based position in the catalog
    std::vector<int> rep;        // lexicographically least standard subset (0-based simple indices)
    std::vector<std::vector<int>> members;
    std::string label;           // e.g. "A2A1^2 [3 2 2 1]", "(A1^3)+ [2 2 2]", "A5'"
    std::string type;            // plain diagram type, "∅" for the trivial group
    DiagramType diagram;
    int rank = 0;
    std::uint64_t order = 1;
};

class ShapeCatalog {
public:
    explicit ShapeCatalog(const RootSystem& rs);
    explicit ShapeCatalog(RootSystem&&) = delete; // keeps a reference to the root system

    const RootSystem& root_system() const { return rs_; }
    const std::vector<Shape>& shapes() const { return shapes_; }
    int size() const { return (int)shapes_.size(); }
    const Shape& at(int index) const { return shapes_.at(index - 1); }

    int shape_of_subset(const std::vector<int>& J) const;
    int shape_of(const Subsystem& parabolic) const;
    Subsystem standard(int index) const { return standard_subsystem(rs_, at(index).rep); }
    // Index, label, type, partition or "s1,s3" simple subset; 0 if nothing matches, -1 if ambiguous.
    int find(const std::string& selector) const;
    int whole_group() const { return size(); }

private:
    const RootSystem& rs_;
    std::vector<Shape> shapes_;
    std::vector<int> class_of_mask_; // mask -> 1-based shape index
};

std::string format_subset(const std::vector<int>& J);

} // namespace coxnorm
