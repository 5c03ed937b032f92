#include <doctest.h>

#include "coxnorm/galois.hpp"
#include "coxnorm/involution.hpp"
#include "coxnorm/normalizer.hpp"
#include "coxnorm/oracle.hpp"
#include "coxnorm/table.hpp"

#include <set>

using namespace coxnorm;

namespace {

RootSystem make(const std::string& s) { return RootSystem(CoxeterLabel::parse(s)); }

std::vector<int> all_simple(const RootSystem& rs) {
    std::vector<int> J(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) J[i] = i;
    return J;
}

std::vector<Perm> involutions(const GroupSet& W) {
    std::vector<Perm> out;
    for (auto& w : W.elements)
        if (!is_identity(w) && is_identity(compose(w, w))) out.push_back(w);
    return out;
}

} // namespace

TEST_CASE("fixed parabolic of simple involutions") {
    auto b2 = make("B2");
    CHECK(fixed_parabolic(b2, b2.identity()).size() == 0);
    CHECK(fixed_parabolic(b2, longest_element(b2, all_simple(b2))).roots == b2.all_roots());
    auto a3 = make("A3");
    for (int i = 0; i < a3.num_positive(); ++i) {
        Subsystem F = fixed_parabolic(a3, a3.reflection(i));
        CHECK(F.size() == 2);
        CHECK(F.roots.test(i));
    }
    Perm s1s2 = compose(a3.reflection(0), a3.reflection(1));
    CHECK_THROWS_AS(fixed_parabolic(a3, s1s2), std::invalid_argument);
}

TEST_CASE("centralizers of involutions are normalizers of their parabolics") {
    for (std::string s : {"A3", "B3", "F4", "H3"}) {
        auto rs = make(s);
        GroupSet W = brute_group(rs);
        for (auto& u : involutions(W)) {
            CheckReport r = centralizer_equals_normalizer(rs, u, W);
            CHECK_MESSAGE(r.ok, s);
            CHECK(involution_degree(rs, u) == subsystem_type(rs, fixed_parabolic(rs, u)).rank());
        }
    }
}

TEST_CASE("involution classes are counted by the marked shapes") {
    // oracle: conjugacy classes of involutions by brute force
    for (std::string s : {"A4", "B4", "D4", "H3"}) {
        auto rs = make(s);
        GroupSet W = brute_group(rs);
        std::set<Perm> seen;
        int classes = 0;
        for (auto& u : involutions(W)) {
            if (seen.count(u)) continue;
            ++classes;
            for (auto& w : W.elements) seen.insert(compose(compose(inverse(w), u), w));
        }
        ShapeCatalog cat(rs);
        // the trivial shape stands for the identity
        CHECK_MESSAGE((int)mark_involution_shapes(cat).size() == classes + 1, s);
    }
}

TEST_CASE("marked shapes") {
    auto a7_rs = make("A7");
    ShapeCatalog a7(a7_rs);
    CHECK(mark_involution_shapes(a7) == std::vector<int>{1, 2, 3, 5, 8});
    auto b5_rs = make("B5");
    ShapeCatalog b5(b5_rs);
    auto m = mark_involution_shapes(b5);
    CHECK(m.size() == 12);
    CHECK(m.back() == 19);
    auto a1_rs = make("A1");
    ShapeCatalog a1(a1_rs);
    CHECK(mark_involution_shapes(a1) == std::vector<int>{1, 2});
}

TEST_CASE("closure and centralizer observations") {
    for (std::string s : {"B4", "B6", "E6", "H3", "D6"}) {
        auto rs = make(s);
        ShapeCatalog cat(rs);
        auto decs = decompose_all(cat, 1, false);
        CheckReport r = closure_involution_checks(cat, decs);
        CHECK_MESSAGE(r.ok, s << (r.failures.empty() ? "" : ": " + r.failures[0]));
        CHECK(r.checked > 0);
    }
    // -1 central in B6: involution shapes are exactly the orthogonally closed ones
    auto rs = make("B6");
    ShapeCatalog cat(rs);
    for (auto& sh : cat.shapes())
        CHECK(is_involution_shape(cat, sh.index) == orthogonally_closed(rs, cat.standard(sh.index)));
}
