#include <doctest.h>

#include "coxnorm/group.hpp"
#include "coxnorm/rootsys.hpp"

#include <random>
#include <set>

using namespace coxnorm;

namespace {

// Oracle: close the simple roots under reflections in every root found so far, using only the
// Gram matrix and the reflection formula.
std::size_t naive_root_count(const CoxeterLabel& L) {
    Mat G = gram_matrix(L);
    int n = L.rank;
    auto ip = [&](const Vec& a, const Vec& b) {
        Scalar s;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += a[i] * G[i][j] * b[j];
        return s;
    };
    std::vector<Vec> roots;
    std::set<std::string> seen;
    for (int i = 0; i < n; ++i) {
        Vec e(n, Scalar(0));
        e[i] = 1;
        roots.push_back(e);
        seen.insert(key(e));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = roots;
        for (auto& a : snapshot)
            for (auto& b : snapshot) {
                Scalar c = Scalar(2) * ip(b, a) / ip(a, a);
                Vec r = b;
                for (int k = 0; k < n; ++k) r[k] -= c * a[k];
                if (seen.insert(key(r)).second) {
                    roots.push_back(r);
                    grew = true;
                }
            }
    }
    return roots.size();
}

} // namespace

TEST_CASE("scalar field axioms on random triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    auto rnd = [&] {
        int q1 = d(rng), q2 = d(rng);
        return Scalar(mpq_class(d(rng), q1 == 0 ? 1 : std::abs(q1)), mpq_class(d(rng), q2 == 0 ? 1 : std::abs(q2)));
    };
    for (int t = 0; t < 200; ++t) {
        Scalar a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
        CHECK(((a < b) || (b < a) || (a == b)));
        CHECK((a - b).sign() == (a.to_double() > b.to_double() ? 1 : (a == b ? 0 : -1)));
    }
    CHECK(Scalar::phi() * Scalar::phi() == Scalar::phi() + Scalar(1));
    CHECK(Scalar::sqrt5() > Scalar(2));
    CHECK(Scalar::sqrt5() < Scalar::frac(9, 4));
}

TEST_CASE("label grammar round trips") {
    for (std::string s : {"A1", "A7", "B2", "D4", "E7", "F4", "H3", "H4", "I2(7)", "I2(12)"})
        CHECK(CoxeterLabel::parse(s).str() == s);
    CHECK(CoxeterLabel::parse("e6").str() == "E6");
    CHECK_THROWS_AS(CoxeterLabel::parse("D3"), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterLabel::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterLabel::parse("I2(2)"), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterLabel::parse("X3"), std::invalid_argument);
}

TEST_CASE("root counts match the naive closure") {
    for (std::string s : {"A1", "A3", "B2", "B4", "D4", "D5", "E6", "F4", "H3", "H4"}) {
        auto L = CoxeterLabel::parse(s);
        RootSystem rs(L);
        CHECK_MESSAGE(rs.num_roots() == (int)naive_root_count(L), s);
    }
    CHECK(RootSystem(CoxeterLabel::parse("A3")).num_roots() == 12);
    CHECK(RootSystem(CoxeterLabel::parse("A3")).num_positive() == 6);
    CHECK(RootSystem(CoxeterLabel::parse("A1")).num_roots() == 2);
    CHECK(RootSystem(CoxeterLabel::parse("E7")).num_roots() == 126);
    CHECK(RootSystem(CoxeterLabel::parse("E8")).num_roots() == 240);
}

TEST_CASE("B2 has two root lengths, long roots have norm 2") {
    RootSystem rs(CoxeterLabel::parse("B2"));
    CHECK(rs.num_roots() == 8);
    std::set<std::string> norms;
    for (int i = 0; i < rs.num_roots(); ++i) norms.insert(rs.inner_roots(i, i).str());
    CHECK(norms == std::set<std::string>{"1", "2"});
    for (int i = 0; i < rs.num_roots(); ++i) CHECK(rs.inner_roots(i, rs.neg(i)) == -rs.inner_roots(i, i));
}

TEST_CASE("reflections permute roots and positive roots are nonnegative") {
    for (std::string s : {"A4", "B5", "D5", "E6", "E7", "F4", "H3", "H4"}) {
        RootSystem rs(CoxeterLabel::parse(s));
        for (int i = 0; i < rs.num_positive(); ++i) {
            for (auto& c : rs.root(i)) CHECK(c.sign() >= 0);
            const Perm& r = rs.reflection(i);
            CHECK(img(r, i) == rs.neg(i));
            CHECK(is_identity(compose(r, r)));
            for (int j = 0; j < rs.num_roots(); ++j) {
                CHECK(img(r, rs.neg(j)) == rs.neg(img(r, j)));
                if (rs.orthogonal(i, j)) CHECK(img(r, j) == j);
            }
        }
        // reflection formula agrees with the permutation on a sample of roots
        for (int i = 0; i < rs.num_positive(); i += 3)
            for (int j = 0; j < rs.num_roots(); j += 5) CHECK(rs.find_root(rs.reflect(rs.root(j), i)) == img(rs.reflection(i), j));
    }
}

TEST_CASE("A2: s1 applied to alpha2 gives alpha1 + alpha2") {
    RootSystem rs(CoxeterLabel::parse("A2"));
    Vec sum{Scalar(1), Scalar(1)};
    CHECK(img(rs.reflection(0), 1) == rs.find_root(sum));
}

TEST_CASE("commuting simple roots in D4 are orthogonal") {
    RootSystem rs(CoxeterLabel::parse("D4"));
    CHECK(rs.orthogonal(0, 2));
    CHECK(rs.orthogonal(0, 3));
    CHECK(rs.orthogonal(2, 3));
    CHECK_FALSE(rs.orthogonal(0, 1));
}

TEST_CASE("dihedral systems") {
    for (int m = 3; m <= 12; ++m) {
        RootSystem rs(CoxeterLabel::parse("I2(" + std::to_string(m) + ")"));
        CHECK(rs.num_roots() == 2 * m);
        auto s = rs.simple_reflections();
        CHECK(element_order(compose(s[0], s[1])) == m);
        int northo = 0;
        for (int i = 0; i < rs.num_positive(); ++i)
            for (int j = 0; j < rs.num_positive(); ++j) northo += rs.orthogonal(i, j);
        CHECK(northo == (m % 2 == 0 ? m : 0));
        // orthogonal reflections commute, non-orthogonal distinct ones do not
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j) {
                    bool comm = compose(rs.reflection(i), rs.reflection(j)) == compose(rs.reflection(j), rs.reflection(i));
                    CHECK(comm == rs.orthogonal(i, j));
                }
    }
}
