#include "sober/topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sober {

FiniteSpace spec_space(const RingPtr& r) {
    auto lattice = all_ideals(r);
    std::vector<Ideal> primes;
    for (const Ideal& i : lattice)
        if (is_prime(i)) primes.push_back(i);

    unsigned n = static_cast<unsigned>(primes.size());
    std::set<Bitset, CanonicalLess> closed;
    // Vanishing locus of an ideal: the primes containing it.
    for (const Ideal& i : lattice) {
        Bitset v(n);
        for (unsigned k = 0; k < n; ++k)
            if (primes[k].members.contains(i.members)) v.set(k);
        closed.insert(v);
    }

    // The loci of the whole ring and of the zero ideal give the empty and
    // full sets; complete the family under pairwise union and intersection.
    std::vector<Bitset> work(closed.begin(), closed.end());
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            Bitset u = work[i] | work[j];
            if (closed.insert(u).second) work.push_back(std::move(u));
            Bitset v = work[i] & work[j];
            if (closed.insert(v).second) work.push_back(std::move(v));
        }

    FiniteSpace t;
    t.points = n;
    t.closed_sets.assign(closed.begin(), closed.end());
    return t;
}

SoberSpaceResult check_sober_space(const FiniteSpace& t) {
    std::set<Bitset, CanonicalLess> family;
    for (const Bitset& c : t.closed_sets) {
        if (c.universe() != t.points)
            throw std::invalid_argument("closed set over the wrong point universe");
        family.insert(c);
    }
    if (!family.count(Bitset(t.points)))
        throw std::invalid_argument("closed-set family lacks the empty set");
    if (!family.count(Bitset::all(t.points)))
        throw std::invalid_argument("closed-set family lacks the full set");
    for (const Bitset& a : family)
        for (const Bitset& b : family) {
            if (!family.count(a | b))
                throw std::invalid_argument("closed-set family is not closed under union");
            if (!family.count(a & b))
                throw std::invalid_argument("closed-set family is not closed under intersection");
        }

    // Closure of a point: smallest closed set containing it.
    auto closure_of = [&](unsigned x) {
        Bitset acc = Bitset::all(t.points);
        for (const Bitset& c : family)
            if (c.test(x)) acc &= c;
        return acc;
    };
    std::vector<Bitset> closures(t.points, Bitset(t.points));
    for (unsigned x = 0; x < t.points; ++x) closures[x] = closure_of(x);

    SoberSpaceResult res;
    res.sober = true;
    for (const Bitset& c : family) {
        if (c.none()) continue;
        // Irreducible: not the union of two strictly smaller closed sets.
        std::vector<const Bitset*> subs;
        for (const Bitset& a : family)
            if (a != c && c.contains(a)) subs.push_back(&a);
        bool irreducible = true;
        for (size_t i = 0; i < subs.size() && irreducible; ++i)
            for (size_t j = 0; j <= i && irreducible; ++j)
                if ((*subs[i] | *subs[j]) == c) irreducible = false;
        if (!irreducible) continue;

        GenericPointEntry entry;
        entry.closed_set = c;
        for (unsigned x = 0; x < t.points; ++x)
            if (c.test(x) && closures[x] == c) entry.generic_points.push_back(x);
        if (entry.generic_points.size() != 1) res.sober = false;
        res.irreducibles.push_back(std::move(entry));
    }
    return res;
}

}  // namespace sober
