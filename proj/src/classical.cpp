#include "coxnorm/classical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace coxnorm {

SignedPerm signed_compose(const SignedPerm& a, const SignedPerm& b) {
    SignedPerm c(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
        int w = a[v];
        int t = b[std::abs(w) - 1];
        c[v] = w < 0 ? -t : t;
    }
    return c;
}

std::string format_signed(const SignedPerm& s) {
    std::string o = "[";
    for (std::size_t i = 0; i < s.size(); ++i) o += (i ? " " : "") + std::to_string(s[i]);
    return o + "]";
}

namespace {

// e-coordinates of the simple roots; A_{n-1} uses n points, B_n and D_n use n points.
std::vector<std::vector<int>> simple_evectors(const CoxeterLabel& L) {
    int r = L.rank;
    int n = L.family == 'A' ? r + 1 : r;
    std::vector<std::vector<int>> e(r, std::vector<int>(n, 0));
    for (int k = 0; k + 1 < n && k < r; ++k) {
        e[k][k] = 1;
        e[k][k + 1] = -1;
    }
    if (L.family == 'B') e[r - 1] = std::vector<int>(n, 0), e[r - 1][n - 1] = 1;
    if (L.family == 'D') e[r - 1] = std::vector<int>(n, 0), e[r - 1][n - 2] = 1, e[r - 1][n - 1] = 1;
    return e;
}

bool reversed(const CoxeterLabel& L) { return L.family != 'A'; }

} // namespace

Perm signed_to_perm(const RootSystem& rs, const SignedPerm& s) {
    const CoxeterLabel& L = rs.label();
    if (L.family != 'A' && L.family != 'B' && L.family != 'D') throw std::invalid_argument("not a classical group");
    auto E = simple_evectors(L);
    int n = (int)E[0].size();
    if ((int)s.size() != n) throw std::invalid_argument("signed permutation has the wrong degree");
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> ev(rs.num_roots());
    for (int i = 0; i < rs.num_roots(); ++i) {
        std::vector<int> v(n, 0);
        const Vec& c = rs.root(i);
        for (int k = 0; k < rs.rank(); ++k) {
            long ck = c[k].rat().get_num().get_si();
            for (int t = 0; t < n; ++t) v[t] += (int)ck * E[k][t];
        }
        ev[i] = v;
        index[v] = i;
    }
    // point q of the model is coordinate n+1-q for B and D
    auto coord = [&](int q) { return reversed(L) ? n - q : q - 1; };
    Perm p(rs.num_roots(), '\0');
    for (int i = 0; i < rs.num_roots(); ++i) {
        std::vector<int> w(n, 0);
        for (int q = 1; q <= n; ++q) {
            int c = ev[i][coord(q)];
            if (!c) continue;
            int t = s[q - 1];
            w[coord(std::abs(t))] += t < 0 ? -c : c;
        }
        auto it = index.find(w);
        if (it == index.end()) throw std::invalid_argument("signed permutation " + format_signed(s) + " is not in W");
        p[i] = static_cast<char>(it->second);
    }
    return p;
}

std::vector<std::pair<std::vector<int>, int>> classical_labels(const CoxeterLabel& L) {
    int n = L.family == 'A' ? L.rank + 1 : L.rank;
    std::vector<std::pair<std::vector<int>, int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            int m = std::accumulate(cur.begin(), cur.end(), 0);
            if (L.family == 'D' && m == n && std::all_of(cur.begin(), cur.end(), [](int x) { return x % 2 == 0; })) {
                out.push_back({cur, 1});
                out.push_back({cur, -1});
            } else {
                out.push_back({cur, 0});
            }
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    for (int m = n; m >= 0; --m) {
        if (L.family == 'A' && m != n) break;
        if (L.family == 'D' && m == n - 1) continue;
        rec(m, m);
    }
    return out;
}

ClassicalGenerators classical_complement_generators(const RootSystem& rs, std::vector<int> lambda, int sign) {
    const CoxeterLabel& L = rs.label();
    char f = L.family;
    if (f != 'A' && f != 'B' && f != 'D') throw std::invalid_argument("classical generators need type A, B or D");
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    lambda.erase(std::remove(lambda.begin(), lambda.end(), 0), lambda.end());
    int n = f == 'A' ? L.rank + 1 : L.rank;
    int m = std::accumulate(lambda.begin(), lambda.end(), 0);
    bool even = m == n && std::all_of(lambda.begin(), lambda.end(), [](int x) { return x % 2 == 0; });
    auto bad = [&](const std::string& why) { return std::invalid_argument("invalid label for " + L.str() + ": " + why); };
    if (f == 'A' && m != n) throw bad("the partition must have sum " + std::to_string(n));
    if (m > n) throw bad("the partition is too large");
    if (f == 'D' && m == n - 1) throw bad("partitions of n-1 are not labels in type D");
    if (f == 'D' && even && sign != 1 && sign != -1) throw bad("even partitions of n need a sign");
    if (!(f == 'D' && even)) sign = 0;

    ClassicalGenerators g;
    g.group = L;
    g.lambda = lambda;
    g.l = n - m;
    g.sign = sign;
    int p = (int)lambda.size();
    std::vector<int> u(p + 2, g.l); // u[i] for 1-based i, u[p+1] = n
    for (int i = 2; i <= p + 1; ++i) u[i] = u[i - 1] + lambda[i - 2];
    auto lam = [&](int i) { return lambda[i - 1]; };

    SignedPerm id(n);
    std::iota(id.begin(), id.end(), 1);
    auto x = [&](int i) {
        SignedPerm s = id;
        int k = lam(i);
        for (int v = u[i] + 1; v <= u[i] + k; ++v) s[v - 1] = v + k, s[v + k - 1] = v;
        return s;
    };
    // the printed formula drops u_i; the worked examples all have u_i = 0
    auto y = [&](int i) {
        SignedPerm s = id;
        for (int v = u[i] + 1; v <= u[i + 1]; ++v) s[v - 1] = -(u[i] + u[i + 1] + 1 - v);
        return s;
    };
    auto z = [&](int i) {
        SignedPerm s = y(i);
        s[0] = -1;
        return s;
    };
    auto yp = [&](int i) { return signed_compose(signed_compose(x(i), y(i)), y(i + 1)); };
    auto zp = [&](int i, int j) { return signed_compose(y(i), y(j)); };

    auto add = [&](std::vector<NamedElement>& to, const std::string& name, const SignedPerm& s) {
        to.push_back({name, s, {}});
    };
    auto I = [](int v) { return std::to_string(v); };
    auto equal_pairs = [&](auto pred) {
        std::vector<int> out;
        for (int i = 1; i < p; ++i)
            if (lam(i) == lam(i + 1) && pred(lam(i))) out.push_back(i);
        return out;
    };
    auto parts = [&](auto pred) {
        std::vector<int> out;
        for (int j = 1; j <= p; ++j)
            if (pred(lam(j))) out.push_back(j);
        return out;
    };
    int a1 = (int)parts([](int k) { return k == 1; }).size();

    if (f == 'A') {
        for (int i : equal_pairs([](int k) { return k == 1; })) add(g.Q, "x" + I(i), x(i));
        for (int i : equal_pairs([](int k) { return k > 1; })) add(g.A, "x" + I(i), x(i));
    } else if (f == 'B') {
        for (int i : equal_pairs([](int k) { return k == 1; })) add(g.Q, "x" + I(i), x(i));
        for (int j : parts([](int k) { return k <= 2; })) add(g.Q, "y" + I(j), y(j));
        for (int i : equal_pairs([](int k) { return k > 2; })) add(g.A, "x" + I(i), x(i));
        for (int j : parts([](int k) { return k > 2; })) add(g.A, "y" + I(j), y(j));
        for (int i : equal_pairs([](int k) { return k == 2; })) add(g.B, "x" + I(i), x(i));
    } else if (even) {
        g.regime = 'i';
        for (int j : parts([](int k) { return k == 2; })) add(g.Q, "y" + I(j), y(j));
        for (int i : equal_pairs([](int k) { return k > 2; })) add(g.A, "x" + I(i), x(i));
        for (int j : parts([](int k) { return k > 2; })) add(g.A, "y" + I(j), y(j));
        for (int i : equal_pairs([](int k) { return k == 2; })) add(g.B, "x" + I(i), x(i));
    } else if (m < n - 1) {
        auto yz = [&](std::vector<NamedElement>& to, int j) {
            if (lam(j) % 2 == 0)
                add(to, "y" + I(j), y(j));
            else
                add(to, "z" + I(j), z(j));
        };
        for (int j : parts([](int k) { return k == 2; })) add(g.Q, "y" + I(j), y(j));
        for (int i : equal_pairs([](int k) { return k > 2; })) add(g.A, "x" + I(i), x(i));
        for (int i : equal_pairs([](int k) { return k == 2; })) add(g.B, "x" + I(i), x(i));
        if (a1 <= 1) {
            g.regime = 'a';
            for (int j : parts([](int k) { return k != 2; })) yz(g.A, j);
        } else {
            g.regime = 'b';
            // the sign changes y_j of single points are not in W(D_n); the D_{a_1} factor comes from x_i and y'_i
            for (int i : equal_pairs([](int k) { return k == 1; })) {
                add(g.Q, "x" + I(i), x(i));
                add(g.Q, "y'" + I(i), yp(i));
            }
            for (int j : parts([](int k) { return k > 2; })) yz(g.A, j);
            int j0 = parts([](int k) { return k == 1; }).front();
            add(g.B, "z0", z(j0));
        }
    } else {
        g.regime = a1 <= 1 ? 'A' : 'B';
        for (int j : parts([](int k) { return k == 2; })) add(g.Q, "y" + I(j), y(j));
        for (int i : equal_pairs([](int k) { return k > 2 && k % 2 == 0; })) add(g.A, "x" + I(i), x(i));
        for (int j : parts([](int k) { return k > 2 && k % 2 == 0; })) add(g.A, "y" + I(j), y(j));
        for (int i : equal_pairs([](int k) { return k > 2 && k % 2 == 1; })) {
            add(g.A, "x" + I(i), x(i));
            add(g.A, "y'" + I(i), yp(i));
        }
        int qmin = a1 <= 1 ? 1 : 3;
        auto odd = parts([&](int k) { return k % 2 == 1 && k >= qmin; });
        for (std::size_t s = 0; s < odd.size(); ++s)
            for (std::size_t t = s + 1; t < odd.size(); ++t)
                if (lam(odd[s]) > lam(odd[t])) add(g.A, "z'" + I(odd[s]) + I(odd[t]), zp(odd[s], odd[t]));
        for (int i : equal_pairs([](int k) { return k == 2; })) add(g.B, "x" + I(i), x(i));
        if (a1 > 1) {
            for (int i : equal_pairs([](int k) { return k == 1; })) {
                add(g.Q, "x" + I(i), x(i));
                add(g.Q, "y'" + I(i), yp(i));
            }
            auto r = parts([](int k) { return k > 1 && k % 2 == 1; });
            if (!r.empty()) add(g.C, "z'" + I(r.front()) + I(p), zp(r.front(), p));
        }
    }

    // P: the B_l / D_l factor on points 1..l, then one symmetric group per block
    auto coord = [&](int q) { return f == 'A' ? q - 1 : n - q; }; // 0-based coordinate of point q
    for (int i = 1; i <= p; ++i)
        for (int v = u[i] + 1; v < u[i + 1]; ++v) g.subset.push_back(std::min(coord(v), coord(v + 1)));
    if (f == 'B')
        for (int v = 1; v <= g.l; ++v) g.subset.push_back(n - v); // e_{n-v+1} - e_{n-v+2} ... and e_n
    if (f == 'D' && g.l >= 2) {
        for (int v = 1; v < g.l; ++v) g.subset.push_back(coord(v + 1));
        g.subset.push_back(n - 1);
    }

    // the class lambda^- is the image of lambda^+ under the graph automorphism, i.e. under
    // conjugation by the sign change of point 1
    SignedPerm t = id;
    t[0] = -1;
    for (auto* set : {&g.Q, &g.A, &g.B, &g.C})
        for (auto& e : *set) {
            if (sign == -1) e.points = signed_compose(signed_compose(t, e.points), t);
            e.perm = signed_to_perm(rs, e.points);
        }
    if (sign == -1)
        for (int& j : g.subset)
            if (j >= n - 2) j = j == n - 2 ? n - 1 : n - 2;
    std::sort(g.subset.begin(), g.subset.end());
    g.subset.erase(std::unique(g.subset.begin(), g.subset.end()), g.subset.end());
    return g;
}

CheckReport check_classical(const ShapeCatalog& cat, const ClassicalGenerators& g) {
    const RootSystem& rs = cat.root_system();
    CheckReport rep;
    std::string lab = "[";
    for (std::size_t i = 0; i < g.lambda.size(); ++i) lab += (i ? " " : "") + std::to_string(g.lambda[i]);
    lab += "]";
    if (g.sign) lab += g.sign > 0 ? "+" : "-";
    rep.name = rs.label().str() + " " + lab;
    Decomposition d = decompose(cat, g.subset, false);
    const Perm id = rs.identity();
    auto gen = [&](const std::vector<NamedElement>& v) {
        std::vector<Perm> p;
        for (auto& e : v) p.push_back(e.perm);
        return generate(p, id).elements;
    };
    rep.require(gen(g.Q) == generate(reflections_of(rs, d.Q), id).elements, "Q differs");
    rep.require(gen(g.A) == d.A.elements, "A differs");
    rep.require(gen(g.B) == d.B.elements, "B differs");
    // z'_{rl} normalizes P but can send roots of Q negative; its class modulo PQ lies in D
    std::vector<NamedElement> all = g.A;
    all.insert(all.end(), g.B.begin(), g.B.end());
    for (auto e : g.C) {
        rep.require(normalizes(e.perm, d.P), e.name + " does not normalize P");
        e.perm = reduce_modulo(rs, e.perm, d.PQ);
        all.push_back(e);
    }
    std::vector<NamedElement> c(all.end() - g.C.size(), all.end());
    rep.require(gen(c).size() == d.C.size(), "|C| differs");
    rep.require(gen(all) == d.D.elements, "<A, B, C> differs from D");
    return rep;
}

} // namespace coxnorm
