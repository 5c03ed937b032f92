#include "coxnorm/rootsys.hpp"
#include "coxnorm/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

namespace coxnorm {

CoxeterLabel CoxeterLabel::parse(const std::string& raw) {
    std::string s;
    for (char c : raw) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("invalid Coxeter label '" + raw + "': " + why);
    };
    if (s.size() < 2) throw bad("expected <FAMILY><RANK> or I2(<m>)");
    CoxeterLabel L;
    L.family = s[0];
    if (L.family == 'I') {
        if (s.rfind("I2(", 0) != 0 || s.back() != ')') throw bad("dihedral labels are written I2(m)");
        std::string mid = s.substr(3, s.size() - 4);
        if (mid.empty() || !std::all_of(mid.begin(), mid.end(), ::isdigit)) throw bad("m must be an integer");
        L.rank = 2;
        L.m = std::stoi(mid);
        if (L.m < 3) throw bad("I2(m) needs m >= 3");
        if (L.m > 127) throw bad("I2(m) is supported for m <= 127");
        return L;
    }
    std::string num = s.substr(1);
    if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit) || num.size() > 3)
        throw bad("rank must be a positive integer");
    L.rank = std::stoi(num);
    int n = L.rank;
    switch (L.family) {
    case 'A': if (n < 1) throw bad("A_n needs n >= 1"); break;
    case 'B': if (n < 2) throw bad("B_n needs n >= 2 (B1 is A1)"); break;
    case 'D': if (n < 4) throw bad("D_n needs n >= 4 (D2 = A1xA1 and D3 = A3 are not accepted as labels)"); break;
    case 'E': if (n < 6 || n > 8) throw bad("E_n exists for n = 6, 7, 8"); break;
    case 'F': if (n != 4) throw bad("only F4 exists"); break;
    case 'H': if (n != 3 && n != 4) throw bad("H_n exists for n = 3, 4 (H2 is I2(5))"); break;
    default: throw bad("unknown family (use A, B, D, E, F, H or I2(m))");
    }
    if (n > 100) throw bad("rank too large");
    return L;
}

std::string CoxeterLabel::str() const {
    if (family == 'I') return "I2(" + std::to_string(m) + ")";
    return std::string(1, family) + std::to_string(rank);
}

std::uint64_t group_order(const CoxeterLabel& L) {
    auto fact = [](int n) {
        std::uint64_t f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    int n = L.rank;
    switch (L.family) {
    case 'A': return fact(n + 1);
    case 'B': return (std::uint64_t(1) << n) * fact(n);
    case 'D': return (std::uint64_t(1) << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'H': return n == 3 ? 120 : 14400;
    case 'I': return 2 * L.m;
    }
    return 0;
}

Mat gram_matrix(const CoxeterLabel& L) {
    int n = L.rank;
    Mat G(n, Vec(n, Scalar(0)));
    for (int i = 0; i < n; ++i) G[i][i] = 2;
    auto link = [&](int i, int j, const Scalar& v) { G[i][j] = v; G[j][i] = v; };
    switch (L.family) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'B':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        G[n - 1][n - 1] = 1;
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
    case 'E':
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'F':
        link(0, 1, -1);
        link(1, 2, -1);
        link(2, 3, Scalar::frac(-1, 2));
        G[2][2] = 1;
        G[3][3] = 1;
        break;
    case 'H':
        link(0, 1, -Scalar::phi());
        for (int i = 1; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    default:
        throw std::logic_error("no Gram matrix for dihedral labels");
    }
    return G;
}

RootSystem::RootSystem(const CoxeterLabel& label) : label_(label), rank_(label.rank) {
    if (combinatorial())
        build_dihedral();
    else
        build_geometric();
}

Scalar RootSystem::inner(const Vec& v, const Vec& w) const {
    Scalar s;
    for (int i = 0; i < rank_; ++i) {
        if (v[i].is_zero()) continue;
        Scalar t;
        for (int j = 0; j < rank_; ++j)
            if (!w[j].is_zero() && !gram_[i][j].is_zero()) t += gram_[i][j] * w[j];
        s += v[i] * t;
    }
    return s;
}

Scalar RootSystem::inner_root(int i, const Vec& v) const {
    Scalar s;
    const Vec& d = dual_[i];
    for (int k = 0; k < rank_; ++k)
        if (!d[k].is_zero() && !v[k].is_zero()) s += d[k] * v[k];
    return s;
}

Vec RootSystem::reflect(const Vec& v, int r) const {
    Scalar c = Scalar(2) * inner_root(r, v) / inner_roots(r, r);
    Vec out = v;
    if (c.is_zero()) return out;
    for (int k = 0; k < rank_; ++k)
        if (!roots_[r][k].is_zero()) out[k] -= c * roots_[r][k];
    return out;
}

Vec RootSystem::apply(const Vec& v, const Perm& w) const {
    Vec out(rank_, Scalar(0));
    for (int i = 0; i < rank_; ++i) {
        if (v[i].is_zero()) continue;
        const Vec& r = roots_[img(w, i)];
        for (int k = 0; k < rank_; ++k)
            if (!r[k].is_zero()) out[k] += v[i] * r[k];
    }
    return out;
}

int RootSystem::find_root(const Vec& v) const {
    auto it = index_.find(key(v));
    return it == index_.end() ? -1 : it->second;
}

Perm RootSystem::identity() const {
    Perm p(num_roots(), '\0');
    for (int i = 0; i < num_roots(); ++i) p[i] = static_cast<char>(i);
    return p;
}

std::vector<Perm> RootSystem::simple_reflections() const {
    return std::vector<Perm>(refl_.begin(), refl_.begin() + rank_);
}

RootSet RootSystem::all_roots() const {
    RootSet s;
    for (int i = 0; i < num_roots(); ++i) s.set(i);
    return s;
}

std::uint64_t RootSystem::order() const { return group_order(label_); }

int RootSystem::dihedral_angle(int i) const {
    int m = label_.m;
    if (i >= m) return dihedral_angle(i - m) + m;
    if (i == 0) return 0;
    if (i == 1) return m - 1;
    return i - 1;
}

int RootSystem::dihedral_index(int a) const {
    int m = label_.m;
    a = ((a % (2 * m)) + 2 * m) % (2 * m);
    if (a >= m) return dihedral_index(a - m) + m;
    if (a == 0) return 0;
    if (a == m - 1) return 1;
    return a + 1;
}

void RootSystem::build_dihedral() {
    int m = label_.m;
    npos_ = m;
    refl_.assign(m, Perm(2 * m, '\0'));
    for (int j = 0; j < m; ++j) {
        int aj = dihedral_angle(j);
        for (int i = 0; i < 2 * m; ++i)
            refl_[j][i] = static_cast<char>(dihedral_index(2 * aj + m - dihedral_angle(i)));
    }
    orth_.assign(2 * m, RootSet{});
    if (m % 2 == 0)
        for (int i = 0; i < 2 * m; ++i)
            for (int j = 0; j < 2 * m; ++j)
                if (((dihedral_angle(i) - dihedral_angle(j)) % m + m) % m == m / 2) orth_[i].set(j);
}

void RootSystem::build_geometric() {
    gram_ = gram_matrix(label_);
    int n = rank_;
    // breadth-first closure of the simple roots under simple reflections
    std::vector<Vec> found;
    std::unordered_map<std::string, int> seen;
    std::deque<int> queue;
    auto simple_reflect = [&](const Vec& v, int j) {
        Scalar ip;
        for (int k = 0; k < n; ++k)
            if (!v[k].is_zero() && !gram_[j][k].is_zero()) ip += gram_[j][k] * v[k];
        Vec out = v;
        out[j] -= Scalar(2) * ip / gram_[j][j];
        return out;
    };
    for (int i = 0; i < n; ++i) {
        Vec e(n, Scalar(0));
        e[i] = 1;
        seen.emplace(key(e), (int)found.size());
        queue.push_back((int)found.size());
        found.push_back(e);
    }
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            Vec r = simple_reflect(found[cur], j);
            auto k = key(r);
            if (seen.count(k)) continue;
            if (found.size() >= 256) throw std::runtime_error("root system too large");
            seen.emplace(k, (int)found.size());
            queue.push_back((int)found.size());
            found.push_back(std::move(r));
        }
    }
    std::vector<Vec> pos;
    for (auto& v : found) {
        bool nonneg = true;
        for (auto& c : v)
            if (c.sign() < 0) nonneg = false;
        if (nonneg) pos.push_back(v);
    }
    auto height = [](const Vec& v) {
        Scalar h;
        for (auto& c : v) h += c;
        return h;
    };
    std::sort(pos.begin(), pos.end(), [&](const Vec& a, const Vec& b) {
        Scalar ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return a[k] > b[k];
        return false;
    });
    npos_ = (int)pos.size();
    if (2 * npos_ != (int)found.size()) throw std::logic_error("root system not symmetric");
    roots_ = pos;
    for (auto& v : pos) {
        Vec w = v;
        for (auto& c : w) c = -c;
        roots_.push_back(std::move(w));
    }
    for (int i = 0; i < (int)roots_.size(); ++i) index_.emplace(key(roots_[i]), i);
    dual_.resize(roots_.size());
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        Vec d(n, Scalar(0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!gram_[a][b].is_zero() && !roots_[i][b].is_zero()) d[a] += gram_[a][b] * roots_[i][b];
        dual_[i] = std::move(d);
    }

    int N = num_roots();
    refl_.assign(npos_, Perm());
    for (int j = 0; j < n; ++j) {
        Perm p(N, '\0');
        for (int i = 0; i < N; ++i) {
            int t = find_root(simple_reflect(roots_[i], j));
            if (t < 0) throw std::logic_error("reflection does not permute roots");
            p[i] = static_cast<char>(t);
        }
        refl_[j] = std::move(p);
    }
    // remaining reflections by conjugation: s_{gamma.s} = s s_gamma s
    for (int b = n; b < npos_; ++b) {
        bool done = false;
        for (int j = 0; j < n && !done; ++j) {
            int g = img(refl_[j], b);
            if (g < b && is_positive(g) && !refl_[g].empty()) {
                refl_[b] = compose(compose(refl_[j], refl_[g]), refl_[j]);
                done = true;
            }
        }
        if (!done) throw std::logic_error("could not derive reflection");
    }
    orth_.assign(N, RootSet{});
    for (int i = 0; i < npos_; ++i)
        for (int j = i + 1; j < npos_; ++j)
            if (inner_roots(i, j).is_zero())
                for (int a : {i, i + npos_})
                    for (int b : {j, j + npos_}) {
                        orth_[a].set(b);
                        orth_[b].set(a);
                    }
}

} // namespace coxnorm
