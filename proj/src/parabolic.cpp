#include "coxnorm/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxnorm {

Subsystem subsystem_from_roots(const RootSystem& rs, const std::vector<int>& generators) {
    RootSet s;
    std::vector<int> list;
    auto add = [&](int r) {
        if (s.test(r)) return;
        s.set(r);
        list.push_back(r);
    };
    for (int g : generators) {
        add(g);
        add(rs.neg(g));
    }
    for (std::size_t k = 0; k < list.size(); ++k) {
        int r = list[k];
        for (std::size_t j = 0; j <= k; ++j) {
            add(img(rs.reflection(r), list[j]));
            add(img(rs.reflection(list[j]), r));
        }
    }
    return subsystem_of(rs, s);
}

Subsystem subsystem_of(const RootSystem& rs, const RootSet& closed) {
    Subsystem R;
    R.roots = closed;
    closed.for_each([&](int i) {
        if (rs.is_positive(i)) R.positive.set(i);
    });
    R.positive.for_each([&](int g) {
        const Perm& s = rs.reflection(g);
        int flipped = 0;
        R.positive.for_each([&](int b) { flipped += !rs.is_positive(img(s, b)); });
        if (flipped == 1) R.simple.push_back(g);
    });
    return R;
}

Subsystem standard_subsystem(const RootSystem& rs, const std::vector<int>& J) {
    RootSet s;
    if (rs.combinatorial()) {
        for (int j : J) {
            s.set(j);
            s.set(rs.neg(j));
        }
        if (J.size() == 2) s = rs.all_roots();
        return subsystem_of(rs, s);
    }
    std::vector<bool> inJ(rs.rank(), false);
    for (int j : J) inJ[j] = true;
    for (int i = 0; i < rs.num_positive(); ++i) {
        bool ok = true;
        for (int k = 0; k < rs.rank() && ok; ++k)
            if (!inJ[k] && !rs.root(i)[k].is_zero()) ok = false;
        if (ok) {
            s.set(i);
            s.set(rs.neg(i));
        }
    }
    return subsystem_of(rs, s);
}

Subsystem join(const RootSystem& rs, const Subsystem& a, const Subsystem& b) {
    std::vector<int> gens = a.simple;
    gens.insert(gens.end(), b.simple.begin(), b.simple.end());
    return subsystem_from_roots(rs, gens);
}

std::vector<std::vector<int>> coxeter_matrix(const RootSystem& rs, const std::vector<int>& simple) {
    int k = (int)simple.size();
    std::vector<std::vector<int>> M(k, std::vector<int>(k, 1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int m = element_order(compose(rs.reflection(simple[i]), rs.reflection(simple[j])));
            M[i][j] = M[j][i] = m;
        }
    return M;
}

DiagramType subsystem_type(const RootSystem& rs, const Subsystem& R) {
    return classify_coxeter_matrix(coxeter_matrix(rs, R.simple));
}

bool normalizes(const Perm& w, const Subsystem& R) { return apply_set(w, R.roots) == R.roots; }

Perm reduce_modulo(const RootSystem& rs, Perm d, const Subsystem& R) {
    for (;;) {
        bool moved = false;
        for (int g : R.simple)
            if (!rs.is_positive(img(d, g))) {
                d = compose(rs.reflection(g), d);
                moved = true;
                break;
            }
        if (!moved) return d;
    }
}

bool in_subgroup(const RootSystem& rs, const Perm& w, const Subsystem& R) {
    return normalizes(w, R) && is_identity(reduce_modulo(rs, w, R));
}

std::vector<Perm> reflections_of(const RootSystem& rs, const Subsystem& R) {
    std::vector<Perm> out;
    R.positive.for_each([&](int i) { out.push_back(rs.reflection(i)); });
    return out;
}

std::vector<Perm> simple_reflections_of(const RootSystem& rs, const Subsystem& R) {
    std::vector<Perm> out;
    for (int g : R.simple) out.push_back(rs.reflection(g));
    return out;
}

Subspace root_span(const RootSystem& rs, const RootSet& roots) {
    if (rs.combinatorial()) {
        Subspace s;
        s.ambient = 2;
        s.symbolic = true;
        int c = roots.count();
        s.symbolic_dim = c == 0 ? 0 : c == 2 ? 1 : 2;
        return s;
    }
    std::vector<Vec> v;
    roots.for_each([&](int i) {
        if (rs.is_positive(i)) v.push_back(rs.root(i));
    });
    return Subspace::span(v, rs.rank());
}

Subspace fixed_space(const RootSystem& rs, const Subsystem& U) {
    return perp(root_span(rs, U.roots), rs.gram());
}

Subsystem pointwise_stabilizer(const RootSystem& rs, const Subspace& X) {
    RootSet s;
    if (X.symbolic) {
        if (X.dim() == 0) return subsystem_of(rs, rs.all_roots());
        if (X.dim() == 2) return subsystem_of(rs, s);
        throw std::logic_error("pointwise_stabilizer: a dihedral line needs coordinates");
    }
    for (int i = 0; i < rs.num_positive(); ++i) {
        bool ok = true;
        for (auto& x : X.basis)
            if (!rs.inner_root(i, x).is_zero()) {
                ok = false;
                break;
            }
        if (ok) {
            s.set(i);
            s.set(rs.neg(i));
        }
    }
    return subsystem_of(rs, s);
}

Subsystem parabolic_closure(const RootSystem& rs, const Subsystem& U) {
    if (rs.combinatorial()) {
        if (U.roots.count() <= 2) return U;
        return subsystem_of(rs, rs.all_roots());
    }
    Subspace S = root_span(rs, U.roots);
    RootSet s;
    for (int i = 0; i < rs.num_positive(); ++i)
        if (S.contains(rs.root(i))) {
            s.set(i);
            s.set(rs.neg(i));
        }
    return subsystem_of(rs, s);
}

bool is_parabolic(const RootSystem& rs, const Subsystem& U) {
    return parabolic_closure(rs, U).roots == U.roots;
}

std::string format_subset(const std::vector<int>& J) {
    std::string s;
    for (int j : J) s += (s.empty() ? "s" : ",s") + std::to_string(j + 1);
    return s.empty() ? "{}" : s;
}

// ---------------------------------------------------------------- catalog

namespace {

std::vector<int> mask_list(unsigned mask) {
    std::vector<int> v;
    for (int i = 0; mask >> i; ++i)
        if ((mask >> i) & 1) v.push_back(i);
    return v;
}

unsigned list_mask(const std::vector<int>& J) {
    unsigned m = 0;
    for (int j : J) m |= 1u << j;
    return m;
}

// connected components of J in the Coxeter graph, as sorted index lists
std::vector<std::vector<int>> components(const RootSystem& rs, const std::vector<int>& J) {
    std::vector<std::vector<int>> out;
    std::vector<bool> used(J.size(), false);
    for (std::size_t a = 0; a < J.size(); ++a) {
        if (used[a]) continue;
        std::vector<int> comp{J[a]};
        used[a] = true;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (std::size_t b = 0; b < J.size(); ++b)
                if (!used[b] && !rs.orthogonal(comp[k], J[b])) {
                    used[b] = true;
                    comp.push_back(J[b]);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

std::string type_string(const DiagramType& t) { return t.empty() ? "∅" : t.str(); }

std::string decorate(const DiagramType& t, const std::string& mark) {
    std::string s = type_string(t);
    bool single = t.parts.size() == 1;
    return (single ? s : "(" + s + ")") + mark;
}

std::string partition_string(std::vector<int> parts) {
    std::sort(parts.rbegin(), parts.rend());
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + std::to_string(parts[i]);
    return s + "]";
}

DiagramType a_type(const std::vector<int>& run_sizes) {
    DiagramType t;
    for (int r : run_sizes) t.parts.push_back({'A', r, 0});
    t.canonicalize();
    return t;
}

std::string strip_spaces(const std::string& s) {
    std::string o;
    for (char c : s)
        if (c != ' ') o += c;
    return o;
}

} // namespace

ShapeCatalog::ShapeCatalog(const RootSystem& rs) : rs_(rs) {
    int n = rs.rank();
    unsigned total = 1u << n;
    std::vector<unsigned> parent(total);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](unsigned x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<Perm> w0(total);
    auto longest = [&](unsigned L) -> const Perm& {
        if (w0[L].empty()) w0[L] = longest_element(rs, mask_list(L));
        return w0[L];
    };
    for (unsigned J = 0; J < total; ++J)
        for (int s = 0; s < n; ++s) {
            if ((J >> s) & 1) continue;
            unsigned L = J | (1u << s);
            const Perm& w = longest(L);
            unsigned image = 0;
            for (int j : mask_list(J)) {
                int t = rs.neg(img(w, j));
                if (t >= n) throw std::logic_error("longest element does not permute simple roots");
                image |= 1u << t;
            }
            unsigned a = find(J), b = find(image);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<unsigned, std::vector<std::vector<int>>> classes;
    for (unsigned J = 0; J < total; ++J) classes[find(J)].push_back(mask_list(J));

    std::vector<Shape> list;
    for (auto& [root, members] : classes) {
        Shape sh;
        std::sort(members.begin(), members.end());
        sh.members = members;
        sh.rep = members.front();
        Subsystem R = standard_subsystem(rs, sh.rep);
        sh.diagram = subsystem_type(rs, R);
        sh.type = type_string(sh.diagram);
        sh.rank = (int)sh.rep.size();
        sh.order = sh.diagram.order();
        list.push_back(std::move(sh));
    }

    char fam = rs.label().family;
    if (fam == 'A' || fam == 'B' || fam == 'D') {
        for (auto& sh : list) {
            auto comps = components(rs, sh.rep);
            std::vector<int> parts, a_runs;
            int special = 0; // size of the B or D part
            for (auto& c : comps) {
                bool has_end = fam == 'B' && std::count(c.begin(), c.end(), n - 1);
                bool has_fork = fam == 'D' && std::count(c.begin(), c.end(), n - 1) && std::count(c.begin(), c.end(), n - 2);
                if (has_end || has_fork) {
                    special = (int)c.size();
                } else {
                    parts.push_back((int)c.size() + 1);
                    a_runs.push_back((int)c.size());
                }
            }
            // D2 = {s_{n-1}, s_n} is disconnected in the diagram
            if (fam == 'D' && !special && std::count(sh.rep.begin(), sh.rep.end(), n - 1) &&
                std::count(sh.rep.begin(), sh.rep.end(), n - 2)) {
                special = 2;
                parts.clear();
                a_runs.clear();
                for (auto& c : comps)
                    if (c != std::vector<int>{n - 1} && c != std::vector<int>{n - 2}) {
                        parts.push_back((int)c.size() + 1);
                        a_runs.push_back((int)c.size());
                    }
            }
            int points = fam == 'A' ? n + 1 : n - special;
            int used = std::accumulate(parts.begin(), parts.end(), 0);
            for (int k = used; k < points; ++k) parts.push_back(1);
            DiagramType at = a_type(a_runs);
            std::string prefix;
            if (special) prefix = std::string(1, fam) + std::to_string(special);
            std::string body = prefix + (at.empty() ? "" : at.str());
            if (body.empty()) body = "∅";
            bool even = fam == 'D' && !special && std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
            if (even) {
                // "+" is the class of blocks laid out along s1, ..., s_{n-1}
                std::vector<int> sorted = parts;
                std::sort(sorted.rbegin(), sorted.rend());
                std::vector<int> J;
                int start = 0;
                for (int p : sorted) {
                    for (int k = 0; k < p - 1; ++k) J.push_back(start + k);
                    start += p;
                }
                bool plus = std::find(sh.members.begin(), sh.members.end(), J) != sh.members.end();
                body = decorate(at, plus ? "+" : "-");
            }
            sh.label = body + " " + partition_string(parts);
        }
    } else {
        std::map<std::string, std::vector<Shape*>> by_type;
        for (auto& sh : list) by_type[sh.type].push_back(&sh);
        for (auto& [t, v] : by_type) {
            if (v.size() == 1) {
                v[0]->label = t;
                continue;
            }
            // the class with the larger orthogonal complement gets the single prime
            auto perp_size = [&](Shape* sh) {
                RootSet r = rs.all_roots();
                standard_subsystem(rs, sh->rep).positive.for_each([&](int i) { r &= rs.orthogonal_to(i); });
                return r.count();
            };
            std::sort(v.begin(), v.end(), [&](Shape* a, Shape* b) {
                int pa = perp_size(a), pb = perp_size(b);
                return pa != pb ? pa > pb : a->rep < b->rep;
            });
            for (std::size_t k = 0; k < v.size(); ++k) v[k]->label = decorate(v[k]->diagram, std::string(k + 1, '\''));
        }
    }

    std::sort(list.begin(), list.end(), [](const Shape& a, const Shape& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (a.order != b.order) return a.order < b.order;
        return a.label < b.label;
    });
    class_of_mask_.assign(total, 0);
    for (std::size_t k = 0; k < list.size(); ++k) {
        list[k].index = (int)k + 1;
        for (auto& m : list[k].members) class_of_mask_[list_mask(m)] = (int)k + 1;
    }
    shapes_ = std::move(list);
}

int ShapeCatalog::shape_of_subset(const std::vector<int>& J) const { return class_of_mask_.at(list_mask(J)); }

int ShapeCatalog::shape_of(const Subsystem& P) const {
    const RootSystem& rs = rs_;
    if (rs.combinatorial()) {
        int c = P.roots.count();
        if (c == 0) return shape_of_subset({});
        if (c > 2) return shape_of_subset({0, 1});
        int i = P.positive.list().at(0);
        int m = rs.label().m;
        if (m % 2 == 1 || rs.dihedral_angle(i) % 2 == 0) return shape_of_subset({0});
        return shape_of_subset({1});
    }
    Subspace X = fixed_space(rs, P);
    int n = rs.rank();
    if (X.dim() == 0) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        return shape_of_subset(all);
    }
    std::mt19937 rng(12345);
    Vec v;
    for (int attempt = 0;; ++attempt) {
        v.assign(n, Scalar(0));
        for (std::size_t k = 0; k < X.basis.size(); ++k) {
            long c = attempt == 0 ? (long)(1 + 7 * k * k + 3 * k) : (long)(rng() % 997 + 1);
            for (int j = 0; j < n; ++j) v[j] += Scalar(c) * X.basis[k][j];
        }
        int zeros = 0;
        for (int i = 0; i < rs.num_positive(); ++i) zeros += rs.inner_root(i, v).is_zero();
        if (2 * zeros == P.size()) break;
        if (attempt > 50) throw std::logic_error("shape_of: no generic vector found (not parabolic?)");
    }
    const Mat& G = rs.gram();
    for (;;) {
        Vec gv = mat_vec(G, v);
        int s = -1;
        for (int j = 0; j < n && s < 0; ++j)
            if (gv[j].sign() < 0) s = j;
        if (s < 0) {
            std::vector<int> J;
            for (int j = 0; j < n; ++j)
                if (gv[j].is_zero()) J.push_back(j);
            return shape_of_subset(J);
        }
        v[s] -= Scalar(2) * gv[s] / G[s][s];
    }
}

int ShapeCatalog::find(const std::string& raw) const {
    std::string sel = strip_spaces(raw);
    if (sel.empty()) return 0;
    if (std::all_of(sel.begin(), sel.end(), ::isdigit)) {
        int k = std::stoi(sel);
        return (k >= 1 && k <= size()) ? k : 0;
    }
    if (sel == "empty" || sel == "{}" || sel == "∅") return shape_of_subset({});
    if (sel[0] == 's' || sel[0] == 'S') {
        std::vector<int> J;
        std::stringstream ss(sel);
        std::string tok;
        bool ok = true;
        while (std::getline(ss, tok, ',')) {
            if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S') ||
                !std::all_of(tok.begin() + 1, tok.end(), ::isdigit)) {
                ok = false;
                break;
            }
            int j = std::stoi(tok.substr(1)) - 1;
            if (j < 0 || j >= rs_.rank()) return 0;
            J.push_back(j);
        }
        if (ok) {
            std::sort(J.begin(), J.end());
            J.erase(std::unique(J.begin(), J.end()), J.end());
            return shape_of_subset(J);
        }
    }
    int hit = 0, count = 0;
    for (auto& sh : shapes_) {
        std::string lab = strip_spaces(sh.label);
        if (lab == sel) return sh.index;
        auto br = lab.find('[');
        std::string head = br == std::string::npos ? lab : lab.substr(0, br);
        std::string part = br == std::string::npos ? "" : lab.substr(br);
        if (head == sel || part == sel || sh.type == sel) {
            hit = sh.index;
            ++count;
        }
    }
    if (count == 1) return hit;
    return count == 0 ? 0 : -1;
}

} // namespace coxnorm
