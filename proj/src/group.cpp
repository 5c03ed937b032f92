#include "coxnorm/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace coxnorm {

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: elements of different groups");
    Perm c(a.size(), '\0');
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<unsigned char>(a[i])];
    return c;
}

Perm inverse(const Perm& a) {
    Perm c(a.size(), '\0');
    for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<unsigned char>(a[i])] = static_cast<char>(i);
    return c;
}

bool is_identity(const Perm& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (static_cast<unsigned char>(a[i]) != i) return false;
    return true;
}

int element_order(const Perm& a) {
    Perm p = a;
    int k = 1;
    while (!is_identity(p)) {
        p = compose(p, a);
        ++k;
    }
    return k;
}

Perm power(const Perm& a, int k) {
    Perm p(a.size(), '\0');
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = static_cast<char>(i);
    for (int j = 0; j < k; ++j) p = compose(p, a);
    return p;
}

RootSet apply_set(const Perm& w, const RootSet& s) {
    RootSet t;
    s.for_each([&](int i) { t.set(img(w, i)); });
    return t;
}

std::vector<int> encode(const RootSystem& rs, const Perm& w) {
    std::vector<int> v(rs.num_positive());
    for (int i = 0; i < rs.num_positive(); ++i) v[i] = img(w, i);
    return v;
}

bool encoding_less(const RootSystem& rs, const Perm& a, const Perm& b) {
    return a.compare(0, rs.num_positive(), b, 0, rs.num_positive()) < 0;
}

bool GroupSet::contains(const Perm& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

GroupSet generate(const std::vector<Perm>& gens, const Perm& identity, std::size_t limit) {
    std::unordered_set<Perm> seen{identity};
    std::vector<Perm> frontier{identity};
    std::vector<Perm> gs;
    for (auto& g : gens)
        if (!is_identity(g)) gs.push_back(g);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (auto& x : frontier)
            for (auto& g : gs) {
                Perm y = compose(x, g);
                if (seen.insert(y).second) {
                    if (seen.size() > limit) throw SizeLimitExceeded("group enumeration exceeds size limit");
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    GroupSet G;
    G.elements.assign(seen.begin(), seen.end());
    std::sort(G.elements.begin(), G.elements.end());
    G.gens = gens;
    return G;
}

int relative_length(const RootSystem& rs, const Perm& w, const RootSet& sub_positive) {
    int c = 0;
    sub_positive.for_each([&](int a) {
        if (sub_positive.test(rs.neg(img(w, a)))) ++c;
    });
    return c;
}

Perm longest_element(const RootSystem& rs, const std::vector<int>& simple) {
    Perm w = rs.identity();
    for (;;) {
        bool moved = false;
        for (int j : simple)
            if (rs.is_positive(img(w, j))) {
                w = compose(rs.reflection(j), w);
                moved = true;
                break;
            }
        if (!moved) return w;
    }
}

Perm longest_element(const RootSystem& rs, const GroupSet& W) {
    for (auto& w : W.elements) {
        bool all = true;
        for (int i = 0; i < rs.num_positive() && all; ++i)
            if (rs.is_positive(img(w, i))) all = false;
        if (all) return w;
    }
    throw std::invalid_argument("longest_element: group does not contain w0");
}

// ---------------------------------------------------------------- Schreier-Sims

StabChain::StabChain(const std::vector<Perm>& gens, int npoints) : n_(npoints) {
    for (auto& g : gens)
        if (!is_identity(g)) gens_.push_back(g);
    rebuild();
}

int StabChain::moved_point(const Perm& h) const {
    for (int i = 0; i < n_; ++i)
        if (img(h, i) != i) return i;
    return -1;
}

void StabChain::compute_orbit(Level& L) const {
    L.orbit.assign(1, L.point);
    L.trans.assign(n_, Perm());
    Perm id(n_, '\0');
    for (int i = 0; i < n_; ++i) id[i] = static_cast<char>(i);
    L.trans[L.point] = id;
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
        int b = L.orbit[k];
        for (auto& s : L.gens) {
            int c = img(s, b);
            if (L.trans[c].empty()) {
                L.trans[c] = compose(L.trans[b], s);
                L.orbit.push_back(c);
            }
        }
    }
}

int StabChain::strip(Perm& h, int from) const {
    for (int j = from; j < (int)levels_.size(); ++j) {
        const Level& L = levels_[j];
        int b = img(h, L.point);
        if (L.trans[b].empty()) return j;
        h = compose(h, inverse(L.trans[b]));
    }
    return (int)levels_.size();
}

void StabChain::rebuild() {
    levels_.clear();
    for (auto& g : gens_) {
        bool fixes_all = true;
        for (auto& L : levels_)
            if (img(g, L.point) != L.point) fixes_all = false;
        if (fixes_all) {
            Level L;
            L.point = moved_point(g);
            levels_.push_back(std::move(L));
        }
    }
    auto level_gens = [&](int i) {
        std::vector<Perm> out;
        for (auto& g : gens_) {
            bool ok = true;
            for (int j = 0; j < i; ++j)
                if (img(g, levels_[j].point) != levels_[j].point) ok = false;
            if (ok) out.push_back(g);
        }
        return out;
    };
    for (int i = 0; i < (int)levels_.size(); ++i) {
        levels_[i].gens = level_gens(i);
        compute_orbit(levels_[i]);
    }
    int i = (int)levels_.size() - 1;
    while (i >= 0) {
        bool extended = false;
        for (std::size_t k = 0; !extended && k < levels_[i].orbit.size(); ++k) {
            int b = levels_[i].orbit[k];
            for (std::size_t si = 0; !extended && si < levels_[i].gens.size(); ++si) {
                const Level& L = levels_[i];
                int c = img(L.gens[si], b);
                Perm h = compose(compose(L.trans[b], L.gens[si]), inverse(L.trans[c]));
                if (is_identity(h)) continue;
                int j = strip(h, i + 1);
                if (j == (int)levels_.size() && is_identity(h)) continue;
                if (j == (int)levels_.size()) {
                    Level nl;
                    nl.point = moved_point(h);
                    levels_.push_back(std::move(nl));
                }
                for (int l = i + 1; l <= j; ++l) {
                    levels_[l].gens.push_back(h);
                    compute_orbit(levels_[l]);
                }
                i = j;
                extended = true;
            }
        }
        if (!extended) --i;
    }
}

bool StabChain::contains(const Perm& g) const {
    Perm h = g;
    int j = strip(h, 0);
    return j == (int)levels_.size() && is_identity(h);
}

std::uint64_t StabChain::order() const {
    std::uint64_t o = 1;
    for (auto& L : levels_) o *= L.orbit.size();
    return o;
}

bool StabChain::add_generator(const Perm& g) {
    if (contains(g)) return false;
    gens_.push_back(g);
    rebuild();
    return true;
}

// ---------------------------------------------------------------- set stabilizer

Stabilizer set_stabilizer(const RootSystem& rs, const std::vector<Perm>& gens, std::uint64_t group_order,
                          const RootSet& target) {
    std::vector<RootSet> orbit{target};
    std::vector<int> parent{-1}, via{-1};
    std::unordered_map<RootSet, int, RootSetHash> index{{target, 0}};
    for (std::size_t k = 0; k < orbit.size(); ++k)
        for (int g = 0; g < (int)gens.size(); ++g) {
            RootSet t = apply_set(gens[g], orbit[k]);
            if (index.emplace(t, (int)orbit.size()).second) {
                orbit.push_back(t);
                parent.push_back((int)k);
                via.push_back(g);
            }
        }
    Stabilizer out;
    out.orbit_size = orbit.size();
    if (group_order % orbit.size() != 0) throw std::logic_error("set_stabilizer: orbit size does not divide |G|");
    out.order = group_order / orbit.size();

    auto transversal = [&](int o) {
        std::vector<int> path;
        for (int x = o; parent[x] >= 0; x = parent[x]) path.push_back(via[x]);
        Perm u = rs.identity();
        for (auto it = path.rbegin(); it != path.rend(); ++it) u = compose(u, gens[*it]);
        return u;
    };
    StabChain chain({}, rs.num_roots());
    if (out.order == 1) return out;
    for (int o = 0; o < (int)orbit.size(); ++o) {
        std::optional<Perm> uo;
        for (int g = 0; g < (int)gens.size(); ++g) {
            int t = index.at(apply_set(gens[g], orbit[o]));
            if (parent[t] == o && via[t] == g) continue;
            if (!uo) uo = transversal(o);
            Perm sg = compose(compose(*uo, gens[g]), inverse(transversal(t)));
            if (chain.add_generator(sg)) {
                out.gens.push_back(sg);
                if (chain.order() == out.order) return out;
            }
        }
    }
    throw std::logic_error("set_stabilizer: Schreier generators did not reach the expected order");
}

} // namespace coxnorm
