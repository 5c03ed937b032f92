#include <doctest.h>

#include "coxnorm/normalizer.hpp"
#include "coxnorm/oracle.hpp"

#include "json.hpp"

using namespace coxnorm;

namespace {

RootSystem make(const std::string& s) { return RootSystem(CoxeterLabel::parse(s)); }

std::vector<int> all_simple(const RootSystem& rs) {
    std::vector<int> J(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) J[i] = i;
    return J;
}

} // namespace

TEST_CASE("normalizers of the trivial and the full parabolic") {
    for (std::string s : {"A4", "B3", "H3", "E6"}) {
        auto rs = make(s);
        CHECK(normalizer(rs, standard_subsystem(rs, {})).order == rs.order());
        CHECK(normalizer(rs, standard_subsystem(rs, all_simple(rs))).order == rs.order());
    }
}

TEST_CASE("stabilizer normalizer agrees with the brute-force oracle on D5 and B4") {
    for (std::string s : {"D5", "B4", "H3"}) {
        auto rs = make(s);
        ShapeCatalog cat(rs);
        GroupSet W = brute_group(rs);
        for (auto& sh : cat.shapes()) {
            Subsystem P = cat.standard(sh.index);
            GroupSet bn = brute_normalizer(rs, W, P);
            GroupSet fast = normalizer_elements(rs, P);
            CHECK_MESSAGE(fast.elements == bn.elements, s << " shape " << sh.index);
        }
    }
}

TEST_CASE("the A9 example: P = <s5, s7, s9>") {
    auto rs = make("A9");
    ShapeCatalog cat(rs);
    Subsystem P = standard_subsystem(rs, {4, 6, 8});
    CHECK(normalizer(rs, P).order == 1152);
    Decomposition d = decompose(cat, {4, 6, 8});
    CHECK(d.P_order == 8);
    CHECK(d.Q_order == 24);
    CHECK(d.D.size() == 6);
    CHECK(d.split.x_perp.dim() == 3);

    // the complement of PQ in N is the Howlett complement of the reflection subgroup PQ
    GroupSet N = normalizer_elements(rs, P);
    GroupSet H = howlett_complement(rs, d.PQ, N);
    CHECK(H.elements == d.D.elements);

    // Goursat along X-perp and X: the kernels are P (order 8) and Q (order 24)
    Subspace X = fixed_space(rs, P);
    GoursatSections s = goursat_sections(rs, N, perp(X, rs.gram()), X, d.D.elements);
    CHECK(s.G2.size() == 8);
    CHECK(s.H2.size() == 24);
    CHECK(s.theta_well_defined);
    CHECK(s.is_graph);
    CHECK(s.complements_ok);
    CHECK(s.theta0_isomorphism);
}

TEST_CASE("howlett complement in the degenerate cases") {
    auto rs = make("B3");
    GroupSet W = brute_group(rs);
    Subsystem all = standard_subsystem(rs, all_simple(rs));
    Subsystem none = standard_subsystem(rs, {});
    CHECK(howlett_complement(rs, all, W).size() == 1);
    CHECK(howlett_complement(rs, none, W).elements == W.elements);
    // a subsystem not normalized by W is rejected
    CHECK_THROWS_AS(howlett_complement(rs, standard_subsystem(rs, {0}), W), std::invalid_argument);
}

TEST_CASE("goursat sections of direct products and diagonals") {
    auto rs = make("A2");
    GroupSet W = brute_group(rs);
    Perm id = rs.identity();
    std::vector<std::pair<Perm, Perm>> prod, diag;
    for (auto& g : W.elements) {
        diag.push_back({g, g});
        for (auto& h : W.elements) prod.push_back({g, h});
    }
    GoursatSections p = goursat_sections(prod, id, id);
    CHECK(p.G2.size() == 6);
    CHECK(p.H2.size() == 6);
    CHECK(p.is_graph);
    GoursatSections d = goursat_sections(diag, id, id, diag);
    CHECK(d.G2.size() == 1);
    CHECK(d.H2.size() == 1);
    CHECK(d.is_graph);
    CHECK(d.theta0_isomorphism);
    // not a subgroup graph: drop one pair
    auto broken = diag;
    broken.push_back({W.elements[1], W.elements[2]});
    CHECK_FALSE(goursat_sections(broken, id, id).theta_well_defined);
}

TEST_CASE("decompositions from the reference tables") {
    {
        auto rs = make("A7");
        ShapeCatalog cat(rs);
        Decomposition d = decompose(cat, cat.find("[2222]"));
        CHECK(d.shape_index == 8);
        CHECK(d.q_cell() == "∅");
        CHECK(d.D.size() == 24);
        CHECK(d.A.size() == 24);
        CHECK(d.A_name.cell() == "A3");
        CHECK(d.B.size() == 1);
        CHECK(d.C.size() == 1);
    }
    {
        auto rs = make("E7");
        ShapeCatalog cat(rs);
        Decomposition d = decompose(cat, 7);
        CHECK(cat.at(7).type == "A2A1");
        CHECK(d.q_shape == 8);
        CHECK(cat.at(8).type == "A3");
        CHECK(d.D.size() == 2);
        CHECK(d.A.size() == 1);
        CHECK(d.B.size() == 1);
        CHECK(d.C.size() == 2);
        CHECK(verify_decomposition(rs, d).ok);
        Decomposition d14 = decompose(cat, 14);
        CHECK(cat.at(14).type == "A4");
        CHECK(d14.C.size() == 2);
        CHECK(verify_decomposition(rs, d14).ok);
    }
    {
        auto rs = make("D6");
        ShapeCatalog cat(rs);
        Decomposition d = decompose(cat, 5);
        CHECK(cat.at(5).type == "A2");
        CHECK(d.C.size() == 2);
        CHECK(d.C_name.cell() == "A1");
        CHECK(verify_decomposition(rs, d).ok);
    }
    {
        auto rs = make("H3");
        ShapeCatalog cat(rs);
        Decomposition d = decompose(cat, cat.find("∅"));
        CHECK(d.q_shape == 6);
        CHECK(d.D.size() == 1);
    }
}

TEST_CASE("decomposition checks on every shape of small groups") {
    for (std::string s : {"A5", "B4", "D5", "F4", "H3", "I2(8)"}) {
        auto rs = make(s);
        ShapeCatalog cat(rs);
        for (auto& sh : cat.shapes()) {
            Decomposition d = decompose(cat, sh.index, false);
            CheckReport r = verify_decomposition(rs, d);
            CHECK_MESSAGE(r.ok, s << " shape " << sh.index);
            CHECK(d.N_order == d.P_order * d.Q_order * d.A.size() * d.B.size() * d.C.size());
            CHECK(d.C.size() <= 2);
            if (d.pq_closure_is_W) CHECK(d.B.size() == d.D.size());
        }
    }
}

TEST_CASE("json field order is fixed") {
    auto rs = make("B3");
    ShapeCatalog cat(rs);
    std::string a = decomposition_json(decompose(cat, 3)), b = decomposition_json(decompose(cat, 3));
    CHECK(a == b);
    auto j = nlohmann::ordered_json::parse(a);
    std::vector<std::string> keys;
    for (auto& [k, v] : j.items()) keys.push_back(k);
    REQUIRE(keys.size() >= 4);
    CHECK(keys[0] == "group");
    CHECK(keys[1] == "shape_index");
    CHECK(keys[2] == "P");
    CHECK(j["actions"].contains("y_perp"));
}
