#pragma once

#include <string>
#include <vector>

#include "sober/bitset.hpp"
#include "sober/finite_ring.hpp"

namespace sober {

/// Ideal of a finite ring, stored as its member set. Always contains zero,
/// closed under addition and absorbing under ring multiplication.
struct Ideal {
    RingPtr ring;
    Bitset members;

    bool is_whole_ring() const { return members.count() == ring->order; }
    bool proper() const { return !is_whole_ring(); }

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.ring == b.ring && a.members == b.members;
    }
};

struct Containment {
    bool subset = false;
    bool strict = false;
};

bool is_ideal(const FiniteRing& r, const Bitset& members);

Ideal zero_ideal(const RingPtr& r);
Ideal whole_ring_ideal(const RingPtr& r);
Ideal principal_ideal(const RingPtr& r, uint16_t a);
/// Smallest ideal containing all generators; empty list gives the zero ideal.
Ideal ideal_generated(const RingPtr& r, const std::vector<uint16_t>& gens);

/// Every ideal, in canonical order (size, then membership-lex). Closure of the
/// principal ideals under pairwise sum.
std::vector<Ideal> all_ideals(const RingPtr& r, unsigned cap = kDefaultOrderCap);

Ideal sum(const Ideal& i, const Ideal& j);
Ideal intersect(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
Containment is_subset(const Ideal& i, const Ideal& j);

/// Greedy minimum generating set: a single generator when one exists, else
/// smallest-first greedy extension. The zero ideal reports {0}.
std::vector<uint16_t> minimal_generators(const Ideal& i);
/// "(g1,g2)" display form from minimal_generators.
std::string ideal_label(const Ideal& i);

}  // namespace sober
