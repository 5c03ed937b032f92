#include "coxnorm/galois.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace coxnorm {

Subsystem orthogonal_complement(const RootSystem& rs, const Subsystem& U) {
    RootSet s = rs.all_roots();
    U.positive.for_each([&](int i) { s &= rs.orthogonal_to(i); });
    return subsystem_of(rs, s);
}

Subsystem orthogonal_closure(const RootSystem& rs, const Subsystem& P) {
    return orthogonal_complement(rs, orthogonal_complement(rs, P));
}

bool orthogonally_closed(const RootSystem& rs, const Subsystem& P) {
    return orthogonal_closure(rs, P).roots == P.roots;
}

int complement_shape(const ShapeCatalog& cat, int index) {
    return cat.shape_of(orthogonal_complement(cat.root_system(), cat.standard(index)));
}

int closure_shape(const ShapeCatalog& cat, int index) {
    return cat.shape_of(orthogonal_closure(cat.root_system(), cat.standard(index)));
}

bool shape_leq(const ShapeCatalog& cat, int a, int b) {
    const auto& big = cat.at(b).rep;
    for (const auto& m : cat.at(a).members)
        if (std::includes(big.begin(), big.end(), m.begin(), m.end())) return true;
    return false;
}

std::vector<FormalConcept> parabolic_concepts(const ShapeCatalog& cat) {
    std::set<std::pair<int, int>> seen;
    std::vector<FormalConcept> out;
    for (int i = 1; i <= cat.size(); ++i) {
        if (closure_shape(cat, i) != i) continue;
        int j = complement_shape(cat, i);
        auto key = std::minmax(i, j);
        if (seen.insert(key).second) out.push_back({key.first, key.second});
    }
    return out;
}

ClosureGraph shape_closure_graph(const ShapeCatalog& cat) {
    int n = cat.size();
    ClosureGraph g;
    for (int i = 1; i <= n; ++i) {
        g.closure.push_back(closure_shape(cat, i));
        g.closed.push_back(g.closure.back() == i);
    }
    std::vector<std::vector<bool>> le(n + 1, std::vector<bool>(n + 1, false));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) le[a][b] = shape_leq(cat, a, b);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b || !le[a][b]) continue;
            bool covered = true;
            for (int c = 1; c <= n && covered; ++c)
                if (c != a && c != b && le[a][c] && le[c][b]) covered = false;
            if (covered) g.hasse.push_back({a, b});
        }
    return g;
}

namespace {
std::string node_label(const Shape& s) { return std::to_string(s.index) + ": " + s.label; }
} // namespace

std::string graph_dot(const ShapeCatalog& cat, const ClosureGraph& g) {
    std::ostringstream o;
    o << "digraph shapes {\n  rankdir=BT;\n";
    for (const auto& s : cat.shapes()) {
        o << "  s" << s.index << " [label=\"" << node_label(s) << "\"";
        if (g.closed[s.index - 1]) o << ", shape=box";
        o << "];\n";
    }
    for (auto [a, b] : g.hasse) o << "  s" << a << " -> s" << b << " [type=hasse];\n";
    for (int i = 1; i <= cat.size(); ++i)
        if (!g.closed[i - 1])
            o << "  s" << i << " -> s" << g.closure[i - 1] << " [type=closure, color=blue, penwidth=3];\n";
    o << "}\n";
    return o.str();
}

std::string graph_json(const ShapeCatalog& cat, const ClosureGraph& g) {
    nlohmann::ordered_json j;
    j["group"] = cat.root_system().label().str();
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& s : cat.shapes()) {
        nlohmann::ordered_json n;
        n["index"] = s.index;
        n["label"] = s.label;
        n["closed"] = (bool)g.closed[s.index - 1];
        j["nodes"].push_back(n);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : g.hasse) j["edges"].push_back({{"from", a}, {"to", b}, {"type", "hasse"}});
    for (int i = 1; i <= cat.size(); ++i)
        if (!g.closed[i - 1]) j["edges"].push_back({{"from", i}, {"to", g.closure[i - 1]}, {"type", "closure"}});
    return j.dump(2);
}

} // namespace coxnorm
