#include <doctest.h>

#include "coxnorm/group.hpp"

#include <random>

using namespace coxnorm;

namespace {

RootSystem make(const std::string& s) { return RootSystem(CoxeterLabel::parse(s)); }

Perm word(const RootSystem& rs, std::initializer_list<int> simple_one_based) {
    Perm w = rs.identity();
    for (int s : simple_one_based) w = compose(w, rs.reflection(s - 1));
    return w;
}

} // namespace

TEST_CASE("composition is a right action") {
    auto rs = make("A2");
    auto s = rs.simple_reflections();
    Perm st = compose(s[0], s[1]);
    for (int a = 0; a < rs.num_roots(); ++a) CHECK(img(st, a) == img(s[1], img(s[0], a)));
    CHECK(element_order(st) == 3);
    CHECK(compose(st, rs.identity()) == st);
    CHECK(is_identity(compose(s[0], s[0])));
}

TEST_CASE("enumerated group orders") {
    for (std::string s : {"A1", "A3", "A5", "B3", "B5", "D4", "D5", "F4", "H3", "H4", "E6", "I2(7)", "I2(10)"}) {
        auto rs = make(s);
        auto W = generate(rs.simple_reflections(), rs.identity());
        CHECK_MESSAGE(W.size() == rs.order(), s);
        if (W.size() > 2000) continue;
        // idempotence
        auto W2 = generate(W.elements, rs.identity());
        CHECK(W2.elements == W.elements);
    }
    auto rs = make("A3");
    CHECK(generate({}, rs.identity()).size() == 1);
}

TEST_CASE("Schreier-Sims orders") {
    for (std::string s : {"A7", "B6", "D6", "E6", "E7", "E8", "F4", "H4"}) {
        auto rs = make(s);
        StabChain c(rs.simple_reflections(), rs.num_roots());
        CHECK_MESSAGE(c.order() == rs.order(), s);
        CHECK(c.contains(rs.reflection(rs.num_positive() - 1)));
    }
    // a proper subgroup: the A2 inside A3 does not contain s3
    auto rs = make("A3");
    StabChain c({rs.reflection(0), rs.reflection(1)}, rs.num_roots());
    CHECK(c.order() == 6);
    CHECK_FALSE(c.contains(rs.reflection(2)));
}

TEST_CASE("longest elements") {
    auto a1 = make("A1");
    CHECK(longest_element(a1, std::vector<int>{0}) == a1.reflection(0));
    auto b2 = make("B2");
    Perm w0 = longest_element(b2, std::vector<int>{0, 1});
    for (int i = 0; i < b2.num_roots(); ++i) CHECK(img(w0, i) == b2.neg(i));
    CHECK(w0 == longest_element(b2, generate(b2.simple_reflections(), b2.identity())));
    auto a2 = make("A2");
    Perm v0 = longest_element(a2, std::vector<int>{0, 1});
    // conjugation by w0 swaps s1 and s2
    CHECK(compose(compose(v0, a2.reflection(0)), v0) == a2.reflection(1));
}

TEST_CASE("relative length") {
    auto rs = make("A3");
    RootSet one;
    one.set(0);
    CHECK(relative_length(rs, rs.identity(), one) == 0);
    CHECK(relative_length(rs, rs.reflection(0), one) == 1);
    // zero relative length iff the positive subsystem is mapped into itself
    auto W = generate(rs.simple_reflections(), rs.identity());
    RootSet pos;
    for (int i = 0; i < rs.num_positive(); ++i) pos.set(i);
    for (auto& w : W.elements) {
        bool into = apply_set(w, pos) == pos;
        CHECK((relative_length(rs, w, pos) == 0) == into);
    }
}

TEST_CASE("set stabilizer matches brute force filtering") {
    std::mt19937 rng(3);
    for (std::string s : {"A4", "B4", "D4", "F4", "H3"}) {
        auto rs = make(s);
        auto W = generate(rs.simple_reflections(), rs.identity());
        for (int t = 0; t < 8; ++t) {
            RootSet target;
            for (int i = 0; i < rs.num_positive(); ++i)
                if (rng() % 4 == 0) {
                    target.set(i);
                    if (t % 2 == 0) target.set(rs.neg(i));
                }
            std::size_t brute = 0;
            for (auto& w : W.elements) brute += apply_set(w, target) == target;
            auto st = set_stabilizer(rs, rs.simple_reflections(), rs.order(), target);
            CHECK(st.order == brute);
            CHECK(st.order * st.orbit_size == rs.order());
            for (auto& g : st.gens) CHECK(apply_set(g, target) == target);
            StabChain c(st.gens, rs.num_roots());
            CHECK(c.order() == brute);
        }
        auto full = set_stabilizer(rs, rs.simple_reflections(), rs.order(), rs.all_roots());
        CHECK(full.order == rs.order());
    }
}

TEST_CASE("normalizer example in A9") {
    auto rs = make("A9");
    RootSet phiP;
    for (int s : {5, 7, 9}) {
        phiP.set(s - 1);
        phiP.set(rs.neg(s - 1));
    }
    auto st = set_stabilizer(rs, rs.simple_reflections(), rs.order(), phiP);
    CHECK(st.order == 1152);
    Perm t1 = word(rs, {6, 5, 7, 6});
    Perm t2 = word(rs, {8, 7, 9, 8});
    RootSet posP;
    for (int s : {5, 7, 9}) posP.set(s - 1);
    CHECK(relative_length(rs, t1, posP) == 0);
    CHECK(relative_length(rs, t2, posP) == 0);
    CHECK(apply_set(t1, phiP) == phiP);
    CHECK(generate({t1, t2}, rs.identity()).size() == 6);
}
