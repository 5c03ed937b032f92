#include "coxnorm/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace coxnorm {

namespace {

const std::string kFamilyOrder = "EFHDBGIA";

int family_pos(char f) { return (int)kFamilyOrder.find(f); }

std::string component_name(const Component& c) {
    if (c.family == 'I') return "I2(" + std::to_string(c.m) + ")";
    return std::string(1, c.family) + std::to_string(c.rank);
}

} // namespace

Component make_component(char family, int rank, int m) {
    if (family == 'C') family = 'B';
    if (family == 'I') {
        switch (m) {
        case 3: return {'A', 2, 0};
        case 4: return {'B', 2, 0};
        case 5: return {'H', 2, 0};
        case 6: return {'G', 2, 0};
        default:
            if (m < 3) throw std::invalid_argument("I2(m) needs m >= 3");
            return {'I', 2, m};
        }
    }
    if (family == 'B' && rank == 1) return {'A', 1, 0};
    return {family, rank, 0};
}

std::uint64_t component_order(const Component& c) {
    auto fact = [](int n) {
        std::uint64_t f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    int n = c.rank;
    switch (c.family) {
    case 'A': return fact(n + 1);
    case 'B': return (std::uint64_t(1) << n) * fact(n);
    case 'D': return (std::uint64_t(1) << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    case 'H': return n == 2 ? 10 : n == 3 ? 120 : 14400;
    case 'I': return 2 * c.m;
    }
    return 0;
}

int DiagramType::rank() const {
    int r = 0;
    for (auto& c : parts) r += c.rank;
    return r;
}

std::uint64_t DiagramType::order() const {
    std::uint64_t o = 1;
    for (auto& c : parts) o *= component_order(c);
    return o;
}

void DiagramType::canonicalize() {
    std::sort(parts.begin(), parts.end(), [](const Component& a, const Component& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        if (a.family != b.family) return family_pos(a.family) < family_pos(b.family);
        return a.m > b.m;
    });
}

std::string DiagramType::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        s += component_name(parts[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

DiagramType classify_coxeter_matrix(const std::vector<std::vector<int>>& M) {
    int n = (int)M.size();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i};
        comp[i] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (w != v && M[v][w] != 2 && comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    DiagramType T;
    for (int c = 0; c < nc; ++c) {
        std::vector<int> vs;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) vs.push_back(i);
        int k = (int)vs.size();
        auto fail = [&] { return std::invalid_argument("Coxeter matrix is not of finite type"); };
        if (k == 1) {
            T.parts.push_back({'A', 1, 0});
            continue;
        }
        if (k == 2) {
            int m = M[vs[0]][vs[1]];
            if (m == 0) throw fail(); // infinite order
            T.parts.push_back(make_component('I', 2, m));
            continue;
        }
        std::map<int, std::vector<int>> adj;
        std::vector<int> big;
        for (int a : vs)
            for (int b : vs)
                if (a < b && M[a][b] != 2) {
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                    if (M[a][b] != 3) big.push_back(M[a][b]);
                }
        int edges = 0;
        for (auto& [v, l] : adj) edges += (int)l.size();
        edges /= 2;
        if (edges != k - 1) throw fail(); // cycle
        std::vector<int> branch;
        for (int v : vs)
            if (adj[v].size() > 3) throw fail();
            else if (adj[v].size() == 3) branch.push_back(v);
        if (branch.empty()) {
            // a path
            int end = -1;
            for (int v : vs)
                if (adj[v].size() == 1) end = v;
            std::vector<int> path{end};
            while ((int)path.size() < k) {
                int v = path.back();
                for (int w : adj[v])
                    if (path.size() < 2 || w != path[path.size() - 2]) {
                        path.push_back(w);
                        break;
                    }
            }
            std::vector<int> labels;
            for (int i = 0; i + 1 < k; ++i) labels.push_back(M[path[i]][path[i + 1]]);
            if (big.empty()) {
                T.parts.push_back({'A', k, 0});
            } else if (big.size() == 1 && big[0] == 4) {
                if (labels.front() == 4 || labels.back() == 4)
                    T.parts.push_back({'B', k, 0});
                else if (k == 4 && labels[1] == 4)
                    T.parts.push_back({'F', 4, 0});
                else
                    throw fail();
            } else if (big.size() == 1 && big[0] == 5 && (labels.front() == 5 || labels.back() == 5) && k <= 4) {
                T.parts.push_back({'H', k, 0});
            } else {
                throw fail();
            }
            continue;
        }
        if (branch.size() != 1 || !big.empty()) throw fail();
        int b = branch[0];
        std::vector<int> arms;
        for (int s : adj[b]) {
            int len = 1, prev = b, cur = s;
            while (adj[cur].size() == 2) {
                int nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nx;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1)
            T.parts.push_back({'D', k, 0});
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
            T.parts.push_back({'E', k, 0});
        else
            throw fail();
    }
    T.canonicalize();
    return T;
}

DiagramType parse_diagram(const std::string& raw) {
    DiagramType T;
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "∅" || s == "1") return T;
    std::size_t i = 0;
    auto number = [&] {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad diagram string '" + raw + "'");
        int v = std::stoi(s.substr(i, j - i));
        i = j;
        return v;
    };
    while (i < s.size()) {
        char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i++])));
        if (std::string("ABCDEFGHI").find(f) == std::string::npos)
            throw std::invalid_argument("bad diagram string '" + raw + "'");
        int r = number();
        std::vector<Component> add;
        if (f == 'I') {
            if (i >= s.size() || s[i] != '(') throw std::invalid_argument("bad diagram string '" + raw + "'");
            ++i;
            int m = number();
            if (i >= s.size() || s[i] != ')') throw std::invalid_argument("bad diagram string '" + raw + "'");
            ++i;
            add.push_back(make_component('I', 2, m));
        } else if (f == 'D' && r == 2) {
            add = {{'A', 1, 0}, {'A', 1, 0}};
        } else if (f == 'D' && r == 3) {
            add = {{'A', 3, 0}};
        } else if (f == 'G') {
            add = {{'G', 2, 0}};
        } else if (f == 'H' && r == 2) {
            add = {{'H', 2, 0}};
        } else {
            add = {make_component(f, r)};
        }
        int mult = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            mult = number();
        }
        for (int k = 0; k < mult; ++k) T.parts.insert(T.parts.end(), add.begin(), add.end());
    }
    T.canonicalize();
    return T;
}

} // namespace coxnorm
