#pragma once

#include <vector>

#include "sober/bitset.hpp"
#include "sober/spectrum.hpp"

namespace sober {

/// Finite topological space presented by its closed-set family over points
/// 0..points-1, in canonical order. A valid family contains the empty set and
/// the full set and is closed under pairwise union and intersection.
struct FiniteSpace {
    unsigned points = 0;
    std::vector<Bitset> closed_sets;
};

/// An irreducible closed set together with the points whose closure it is.
struct GenericPointEntry {
    Bitset closed_set;
    std::vector<unsigned> generic_points;
};

struct SoberSpaceResult {
    bool sober = false;
    std::vector<GenericPointEntry> irreducibles;
};

/// Prime spectrum with its natural topology: points are the primes in
/// canonical order, closed sets are the vanishing loci of ideals.
FiniteSpace spec_space(const RingPtr& r);

/// Validates the closed-set family (invalid_argument on violation), then
/// decides soberness: every nonempty irreducible closed set must have exactly
/// one generic point.
SoberSpaceResult check_sober_space(const FiniteSpace& t);

inline bool is_sober_space(const FiniteSpace& t) { return check_sober_space(t).sober; }

}  // namespace sober
