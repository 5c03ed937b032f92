#include "coxnorm/oracle.hpp"

#include <set>

namespace coxnorm {

GroupSet brute_group(const RootSystem& rs) {
    if (rs.order() > kOracleLimit)
        throw OracleTooLarge(rs.label().str() + " has order " + std::to_string(rs.order()) + ", above the oracle limit");
    return generate(rs.simple_reflections(), rs.identity(), kOracleLimit);
}

GroupSet brute_normalizer(const RootSystem& rs, const GroupSet& W, const Subsystem& P) {
    GroupSet N;
    for (const Perm& w : W.elements)
        if (apply_set(w, P.roots) == P.roots) N.elements.push_back(w);
    N.gens = N.elements;
    return N;
}

GroupSet brute_normalizer(const RootSystem& rs, const Subsystem& P) { return brute_normalizer(rs, brute_group(rs), P); }

Subsystem brute_orthogonal_complement(const RootSystem& rs, const Subsystem& U) {
    if (rs.order() > kOracleLimit) throw OracleTooLarge("group too large for the oracle");
    std::vector<Perm> us;
    U.positive.for_each([&](int a) { us.push_back(rs.reflection(a)); });
    std::vector<int> gens;
    for (int r = 0; r < rs.num_positive(); ++r) {
        const Perm& t = rs.reflection(r);
        bool ok = true;
        for (const Perm& s : us)
            if (s == t || compose(s, t) != compose(t, s)) {
                ok = false;
                break;
            }
        if (ok) gens.push_back(r);
    }
    return subsystem_from_roots(rs, gens);
}

} // namespace coxnorm
