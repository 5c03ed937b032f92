#pragma once

#include "coxnorm/parabolic.hpp"

#include <string>
#include <utility>
#include <vector>

namespace coxnorm {

// Reflections orthogonal to every root of U.
Subsystem orthogonal_complement(const RootSystem& rs, const Subsystem& U);
Subsystem orthogonal_closure(const RootSystem& rs, const Subsystem& P);
bool orthogonally_closed(const RootSystem& rs, const Subsystem& P);

// Shape of the orthogonal complement / closure of a catalog shape.
int complement_shape(const ShapeCatalog& cat, int index);
int closure_shape(const ShapeCatalog& cat, int index);

// [a] <= [b]: some conjugate of the shape a lies inside a member of b.
bool shape_leq(const ShapeCatalog& cat, int a, int b);

struct FormalConcept {
    int left = 0; // the smaller catalog index
    int right = 0;
};

std::vector<FormalConcept> parabolic_concepts(const ShapeCatalog& cat);

struct ClosureGraph {
    std::vector<int> closure;                   // closure[i-1] = shape index of the orthogonal closure
    std::vector<bool> closed;
    std::vector<std::pair<int, int>> hasse;     // (lower, upper)
};

ClosureGraph shape_closure_graph(const ShapeCatalog& cat);
std::string graph_dot(const ShapeCatalog& cat, const ClosureGraph& g);
std::string graph_json(const ShapeCatalog& cat, const ClosureGraph& g);

} // namespace coxnorm
