#pragma once

#include "coxnorm/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace coxnorm {

// Right action: root i is sent to b[a[i]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
bool is_identity(const Perm& a);
int element_order(const Perm& a);
Perm power(const Perm& a, int k);
RootSet apply_set(const Perm& w, const RootSet& s);

// Images of the positive roots; the canonical external encoding of an element.
std::vector<int> encode(const RootSystem& rs, const Perm& w);
// Lexicographic order on encodings (positive-root images are a prefix of the permutation).
bool encoding_less(const RootSystem& rs, const Perm& a, const Perm& b);

struct GroupSet {
    std::vector<Perm> elements; // sorted
    std::vector<Perm> gens;

    std::size_t size() const { return elements.size(); }
    bool contains(const Perm& p) const;
};

class SizeLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GroupSet generate(const std::vector<Perm>& gens, const Perm& identity, std::size_t limit = 10'000'000);

// #{alpha in sub_positive : alpha.w in -sub_positive}
int relative_length(const RootSystem& rs, const Perm& w, const RootSet& sub_positive);

// Longest element of the standard parabolic on the given simple indices.
Perm longest_element(const RootSystem& rs, const std::vector<int>& simple);
// Element of a complete group sending every positive root negative.
Perm longest_element(const RootSystem& rs, const GroupSet& W);

// Deterministic Schreier-Sims stabilizer chain for permutation groups on up to 256 points.
class StabChain {
public:
    StabChain() = default;
    explicit StabChain(const std::vector<Perm>& gens, int npoints);

    bool contains(const Perm& g) const;
    std::uint64_t order() const;
    const std::vector<Perm>& generators() const { return gens_; }
    // Returns false if g was already a member.
    bool add_generator(const Perm& g);

private:
    struct Level {
        int point = 0;
        std::vector<Perm> gens;
        std::vector<int> orbit;
        std::vector<Perm> trans; // trans[p] maps the base point to p; empty if p is not in the orbit
    };
    void rebuild();
    void compute_orbit(Level& L) const;
    int strip(Perm& h, int from) const;
    int moved_point(const Perm& h) const;

    int n_ = 0;
    std::vector<Perm> gens_;
    std::vector<Level> levels_;
};

struct Stabilizer {
    std::vector<Perm> gens;
    std::uint64_t order = 0;
    std::uint64_t orbit_size = 0;
};

// Orbit-stabilizer with Schreier generators; keeps only generators that enlarge the group found so far
// and stops once the order |G|/|orbit| is reached.
Stabilizer set_stabilizer(const RootSystem& rs, const std::vector<Perm>& gens, std::uint64_t group_order,
                          const RootSet& target);

} // namespace coxnorm
