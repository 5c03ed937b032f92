#pragma once

#include "coxnorm/scalar.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace coxnorm {

struct CoxeterLabel {
    char family = 'A';
    int rank = 1;
    int m = 0; // dihedral order, family I only

    static CoxeterLabel parse(const std::string& s);
    std::string str() const;
    bool operator==(const CoxeterLabel&) const = default;
};

// A group element is the permutation it induces on the root indices, one byte per root.
using Perm = std::string;

inline int img(const Perm& p, int i) { return static_cast<unsigned char>(p[i]); }

// Fixed-size bitset over root indices (at most 256 roots).
struct RootSet {
    std::array<std::uint64_t, 4> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
    RootSet& operator&=(const RootSet& o) { for (int k = 0; k < 4; ++k) w[k] &= o.w[k]; return *this; }
    RootSet& operator|=(const RootSet& o) { for (int k = 0; k < 4; ++k) w[k] |= o.w[k]; return *this; }
    friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
    friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
    bool subset_of(const RootSet& o) const {
        for (int k = 0; k < 4; ++k)
            if (w[k] & ~o.w[k]) return false;
        return true;
    }
    bool operator==(const RootSet&) const = default;
    bool operator<(const RootSet& o) const { return w < o.w; }

    template <class F> void for_each(F&& f) const {
        for (int k = 0; k < 4; ++k) {
            auto x = w[k];
            while (x) {
                int b = std::countr_zero(x);
                f(k * 64 + b);
                x &= x - 1;
            }
        }
    }
    std::vector<int> list() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }
};

struct RootSetHash {
    std::size_t operator()(const RootSet& s) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : s.w) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
        return h;
    }
};

class RootSystem {
public:
    explicit RootSystem(const CoxeterLabel& label);

    const CoxeterLabel& label() const { return label_; }
    int rank() const { return rank_; }
    int num_roots() const { return 2 * npos_; }
    int num_positive() const { return npos_; }
    // I2(m) is realized by index arithmetic only; no coordinates are available.
    bool combinatorial() const { return label_.family == 'I'; }

    int neg(int i) const { return i < npos_ ? i + npos_ : i - npos_; }
    bool is_positive(int i) const { return i < npos_; }
    int positive_of(int i) const { return i < npos_ ? i : i - npos_; }

    const Vec& root(int i) const { return roots_[i]; }
    const Mat& gram() const { return gram_; }
    Scalar inner(const Vec& v, const Vec& w) const;
    Scalar inner_root(int i, const Vec& v) const;
    Scalar inner_roots(int i, int j) const { return inner_root(i, roots_[j]); }
    bool orthogonal(int i, int j) const { return orth_[i].test(j); }
    const RootSet& orthogonal_to(int i) const { return orth_[i]; }

    const Perm& reflection(int i) const { return refl_[positive_of(i)]; }
    Perm identity() const;
    std::vector<Perm> simple_reflections() const;

    // -1 if v is not a root.
    int find_root(const Vec& v) const;
    Vec reflect(const Vec& v, int root_index) const;
    // Linear action of a group element on a vector in simple-root coordinates.
    Vec apply(const Vec& v, const Perm& w) const;

    RootSet all_roots() const;
    std::uint64_t order() const;

    // dihedral helpers: angle index k in [0, 2m) of root i
    int dihedral_angle(int i) const;
    int dihedral_index(int angle) const;

private:
    void build_geometric();
    void build_dihedral();

    CoxeterLabel label_;
    int rank_ = 0;
    int npos_ = 0;
    Mat gram_;
    std::vector<Vec> roots_, dual_;
    std::vector<Perm> refl_;
    std::vector<RootSet> orth_;
    std::unordered_map<std::string, int> index_;
};

Mat gram_matrix(const CoxeterLabel& label);
std::uint64_t group_order(const CoxeterLabel& label);

} // namespace coxnorm
