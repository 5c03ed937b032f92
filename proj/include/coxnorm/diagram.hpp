#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coxnorm {

// One irreducible component.  Dihedral ranks are normalized: I2(3)=A2, I2(4)=B2, I2(5)=H2, I2(6)=G2.
struct Component {
    char family = 'A'; // A B D E F G H I
    int rank = 1;
    int m = 0; // family I only
    bool operator==(const Component&) const = default;
};

// Multiset of components in canonical order (rank descending, then family order E F H D B G I A).
struct DiagramType {
    std::vector<Component> parts;

    bool empty() const { return parts.empty(); }
    int rank() const;
    std::uint64_t order() const;
    std::string str() const; // "" for the trivial group
    bool operator==(const DiagramType& o) const { return parts == o.parts; }
    void canonicalize();
};

Component make_component(char family, int rank, int m = 0);
std::uint64_t component_order(const Component& c);

// Recognizes a Coxeter matrix (entries m_ij, diagonal 1).  Throws std::invalid_argument if the
// diagram is not a finite type.
DiagramType classify_coxeter_matrix(const std::vector<std::vector<int>>& M);

// Parses strings like "A2A1^2", "I2(10)", "B2G2", "E6".  "" and "∅" give the trivial type.
DiagramType parse_diagram(const std::string& s);

} // namespace coxnorm
