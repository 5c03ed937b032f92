#include <doctest.h>

#include "coxnorm/normalizer.hpp"
#include "coxnorm/oracle.hpp"
#include "coxnorm/repr.hpp"

using namespace coxnorm;

namespace {

RootSystem make(const std::string& s) { return RootSystem(CoxeterLabel::parse(s)); }

std::vector<int> all_simple(const RootSystem& rs) {
    std::vector<int> J(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) J[i] = i;
    return J;
}

} // namespace

TEST_CASE("diagram strings round trip") {
    for (std::string s : {"A1", "A2A1^2", "B3", "D4", "E6", "F4", "H3", "I2(10)", "A3B2"}) {
        DiagramType t = parse_diagram(s);
        CHECK(parse_diagram(t.str()) == t);
    }
    CHECK(parse_diagram("∅").empty());
    CHECK(parse_diagram("A1A1") == parse_diagram("A1^2"));
    CHECK(parse_diagram("B2").order() == 8);
    CHECK(parse_diagram("I2(5)").order() == 10);
}

TEST_CASE("invariant split in the degenerate cases") {
    auto rs = make("B3");
    int n = rs.rank();
    Subsystem W = standard_subsystem(rs, all_simple(rs)), one = standard_subsystem(rs, {});
    InvariantSplit a = invariant_split(rs, W, one);
    CHECK(a.x_perp.dim() == n);
    CHECK(a.x_cap_y.dim() == 0);
    CHECK(a.y_perp.dim() == 0);
    InvariantSplit b = invariant_split(rs, one, W);
    CHECK(b.x_perp.dim() == 0);
    CHECK(b.x_cap_y.dim() == 0);
    CHECK(b.y_perp.dim() == n);
    // dimensions always add up
    ShapeCatalog cat(rs);
    for (auto& sh : cat.shapes()) {
        Subsystem P = cat.standard(sh.index);
        InvariantSplit s = invariant_split(rs, P, orthogonal_complement(rs, P));
        CHECK(s.x_perp.dim() + s.x_cap_y.dim() + s.y_perp.dim() == n);
    }
}

TEST_CASE("recognizing small diagrams") {
    auto a2 = make("A2");
    CHECK(recognize_diagram({a2.root(0)}, a2.gram()).str() == "A1");
    CHECK(recognize_diagram({a2.root(0), a2.root(1)}, a2.gram()).str() == "A2");
    auto b2 = make("B2");
    CHECK(recognize_diagram({b2.root(0), b2.root(1)}, b2.gram()).str() == "B2");
    auto h3 = make("H3");
    CHECK(recognize_diagram({h3.root(0), h3.root(1), h3.root(2)}, h3.gram()).str() == "H3");
}

TEST_CASE("restrictions") {
    auto rs = make("A9");
    Subsystem P = standard_subsystem(rs, {4, 6, 8});
    Subspace X = fixed_space(rs, P), Xp = perp(X, rs.gram());
    CHECK(Xp.dim() == 3);
    Restriction RX(rs, X), RXp(rs, Xp);
    for (auto& s : simple_reflections_of(rs, P)) {
        CHECK(RX.restrict(s) == RX.identity());
        CHECK(RXp.reflection_root(RXp.restrict(s)).size() > 0);
    }
    CHECK(RX.restrict(rs.identity()) == RX.identity());

    ShapeCatalog cat(rs);
    Decomposition d = decompose(cat, {4, 6, 8});
    // D acts on X-perp as the symmetric group S3
    std::vector<Perm> img;
    for (auto& x : d.D.gens) img.push_back(RXp.restrict(x));
    ImageGroup g = image_group(RXp, img);
    CHECK(g.order() == 6);
    CHECK(g.type.str() == "A2");
    CHECK(g.is_reflection_group());
    // P and D together act on X-perp as a reflection group of type B3
    CHECK(d.actions[0].classification == "reflection");
    CHECK(d.actions[0].diagram.str() == "B3");

    auto b2 = make("B2");
    Restriction full(b2, Subspace::full(2));
    Perm w0 = longest_element(b2, all_simple(b2));
    CHECK(full.restrict(w0) == full.minus_one());
}

TEST_CASE("action cells of a few table rows") {
    auto rs = make("B5");
    ShapeCatalog cat(rs);
    Decomposition d = decompose(cat, 8);
    CHECK(d.actions[2].diagram.rank() >= 1);
    for (auto& sh : cat.shapes()) {
        Decomposition e = decompose(cat, sh.index);
        // the acting groups fix the summand they should
        CHECK(e.actions[0].subgroup == "PD");
        CHECK(e.actions[1].subgroup == "D");
        CHECK(e.actions[2].subgroup == "QD");
        CHECK(e.actions[0].dim == e.split.x_perp.dim());
    }
}

TEST_CASE("markers on D6 only where the reference table has them") {
    auto rs = make("D6");
    ShapeCatalog cat(rs);
    std::vector<std::pair<int, std::string>> marked;
    for (auto& sh : cat.shapes()) {
        Decomposition d = decompose(cat, sh.index);
        for (auto* n : {&d.A_name, &d.B_name, &d.C_name})
            if (!n->marker.empty()) marked.push_back({sh.index, n->marker});
    }
    std::vector<std::pair<int, std::string>> want = {{cat.find("[3 1]"), "CLUB"}, {cat.find("[5 1]"), "HEART"}};
    CHECK(marked == want);
}
