#include <doctest.h>

#include "coxnorm/oracle.hpp"
#include "coxnorm/parabolic.hpp"

#include <set>

using namespace coxnorm;

namespace {

RootSystem make(const std::string& s) { return RootSystem(CoxeterLabel::parse(s)); }

int shape_count(const std::string& s) {
    auto rs = make(s);
    return ShapeCatalog(rs).size();
}

int partitions(int n) {
    std::vector<int> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int i = k; i <= n; ++i) p[i] += p[i - k];
    return p[n];
}

// Oracle: number of W-classes of standard parabolics, by applying every element of W to every
// standard root subsystem.
int brute_shape_count(const RootSystem& rs) {
    GroupSet W = brute_group(rs);
    int r = rs.rank();
    std::vector<RootSet> sub;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) J.push_back(i);
        sub.push_back(standard_subsystem(rs, J).roots);
    }
    std::vector<int> cls(sub.size(), -1);
    int count = 0;
    for (size_t a = 0; a < sub.size(); ++a) {
        if (cls[a] >= 0) continue;
        cls[a] = count;
        for (auto& w : W.elements) {
            RootSet img = apply_set(w, sub[a]);
            for (size_t b = a + 1; b < sub.size(); ++b)
                if (cls[b] < 0 && img == sub[b]) cls[b] = count;
        }
        ++count;
    }
    return count;
}

} // namespace

TEST_CASE("shape counts agree with the brute-force conjugacy oracle") {
    for (std::string s : {"A1", "A3", "A4", "B3", "B4", "D4", "H3", "F4", "I2(5)", "I2(6)"}) {
        auto rs = make(s);
        ShapeCatalog cat(rs);
        CHECK_MESSAGE(cat.size() == brute_shape_count(rs), s);
    }
}

TEST_CASE("shape counts of the classical families") {
    for (int n = 2; n <= 8; ++n) CHECK(shape_count("A" + std::to_string(n - 1)) == partitions(n));
    CHECK(partitions(8) == 22);
    for (int n = 2; n <= 6; ++n) {
        int expect = 0;
        for (int m = 0; m <= n; ++m) expect += partitions(m);
        CHECK(shape_count("B" + std::to_string(n)) == expect);
    }
    CHECK(shape_count("D5") == 14);
    CHECK(shape_count("D6") == 26);
    CHECK(shape_count("A7") == 22);
    CHECK(shape_count("B5") == 19);
    CHECK(shape_count("E8") == 41);
}

TEST_CASE("D6 keeps the two classes of A1^3 apart") {
    auto rs = make("D6");
    ShapeCatalog cat(rs);
    int plus = cat.find("(A1^3)+"), minus = cat.find("(A1^3)-");
    REQUIRE(plus > 0);
    REQUIRE(minus > 0);
    CHECK(plus != minus);
    CHECK(cat.at(plus).type == cat.at(minus).type);
}

TEST_CASE("shape_of is constant on conjugates") {
    auto rs = make("B4");
    ShapeCatalog cat(rs);
    GroupSet W = brute_group(rs);
    for (auto& sh : cat.shapes()) {
        Subsystem P = cat.standard(sh.index);
        for (size_t k = 0; k < W.size(); k += 37) {
            RootSet img = apply_set(W.elements[k], P.roots);
            CHECK(cat.shape_of(subsystem_of(rs, img)) == sh.index);
        }
    }
}

TEST_CASE("selectors") {
    auto rs = make("A7");
    ShapeCatalog cat(rs);
    CHECK(cat.find("[2222]") == cat.find("[2 2 2 2]"));
    CHECK(cat.find("8") == 8);
    CHECK(cat.find("s1,s3,s5,s7") == cat.find("A1^4"));
    CHECK(cat.find("nonsense") == 0);
    CHECK(cat.find("99") == 0);
    CHECK(cat.find("∅") == 1);
}

TEST_CASE("fixed spaces and pointwise stabilizers") {
    auto rs = make("A3");
    int n = rs.rank();
    Subsystem trivial = standard_subsystem(rs, {});
    CHECK(fixed_space(rs, trivial).dim() == n);
    CHECK(pointwise_stabilizer(rs, Subspace::zero(n)).roots == rs.all_roots());
    CHECK(pointwise_stabilizer(rs, Subspace::full(n)).size() == 0);
    for (int i = 0; i < rs.num_positive(); ++i)
        CHECK(fixed_space(rs, subsystem_from_roots(rs, {i})).dim() == n - 1);

    // A2: no root is orthogonal to alpha_1
    auto a2 = make("A2");
    CHECK(pointwise_stabilizer(a2, Subspace::span({a2.root(0)}, 2)).size() == 0);

    // A9 with P = <s5, s7, s9>: X has dimension 9 - 3 = 6
    auto a9 = make("A9");
    CHECK(fixed_space(a9, standard_subsystem(a9, {4, 6, 8})).dim() == 6);
}

TEST_CASE("parabolic closure") {
    auto rs = make("B4");
    ShapeCatalog cat(rs);
    for (auto& sh : cat.shapes()) {
        Subsystem P = cat.standard(sh.index);
        CHECK(parabolic_closure(rs, P) == P);
        CHECK(is_parabolic(rs, P));
    }
    for (int i = 0; i < rs.num_positive(); ++i) {
        Subsystem s = subsystem_from_roots(rs, {i});
        CHECK(parabolic_closure(rs, s) == s);
    }
    // two orthogonal short roots of B2 span a subsystem whose closure is all of B2
    auto b2 = make("B2");
    std::vector<int> shorts;
    for (int i = 0; i < b2.num_positive(); ++i)
        if (b2.inner_roots(i, i).to_double() < 1.5) shorts.push_back(i);
    REQUIRE(shorts.size() == 2);
    Subsystem U = subsystem_from_roots(b2, shorts);
    CHECK(U.size() == 4);
    CHECK(!is_parabolic(b2, U));
    CHECK(parabolic_closure(b2, U).roots == b2.all_roots());
}

TEST_CASE("subsystem types") {
    auto rs = make("E6");
    CHECK(subsystem_type(rs, standard_subsystem(rs, {0, 1, 2, 3, 4, 5})).order() == 51840);
    ShapeCatalog cat(rs);
    std::set<std::string> types;
    for (auto& s : cat.shapes()) types.insert(s.type);
    CHECK(types.count("A5"));
    CHECK(types.count("D5"));
    CHECK(types.count("A2^2A1"));
}
