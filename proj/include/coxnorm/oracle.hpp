#pragma once

#include "coxnorm/group.hpp"
#include "coxnorm/parabolic.hpp"

namespace coxnorm {

// Brute-force reference implementations.  They enumerate W and refuse groups larger than this.
constexpr std::uint64_t kOracleLimit = 1'000'000;

struct OracleTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GroupSet brute_group(const RootSystem& rs);
// {w in W : P^w = P}, by filtering all of W.
GroupSet brute_normalizer(const RootSystem& rs, const Subsystem& P);
GroupSet brute_normalizer(const RootSystem& rs, const GroupSet& W, const Subsystem& P);
// Generated by the reflections t with st = ts and s != t for every reflection s of U.  Uses the
// reflections as group elements only, no inner products.
Subsystem brute_orthogonal_complement(const RootSystem& rs, const Subsystem& U);

} // namespace coxnorm
