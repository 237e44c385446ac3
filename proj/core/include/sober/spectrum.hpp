#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sober/ideal.hpp"
#include "sober/verdict.hpp"

namespace sober {

/// Strict-containment relation over the prime ideals of one ring.
/// `strict_edges` holds every pair (i, j) with primes[i] strictly inside
/// primes[j]; rendering reduces this to covering edges.
struct PrimePoset {
    std::vector<Ideal> primes;  // canonical order
    std::vector<std::pair<unsigned, unsigned>> strict_edges;
};

struct RingInvariants {
    std::vector<Ideal> spec;
    std::vector<Ideal> max_spec;
    Ideal nilradical;
    Ideal jacobson_radical;
    /// Longest strict chain length in the prime poset; nullopt for the zero
    /// ring, whose spectrum is empty.
    std::optional<unsigned> krull_dim;
    bool is_domain = false;
    bool is_field = false;
};

/// Proper, and xy in I forces x in I or y in I.
bool is_prime(const Ideal& i);
/// Quotient-is-a-field route; used to cross-check is_maximal.
bool quotient_is_field(const Ideal& i);
/// Lattice route (no ideal strictly between i and the ring), cross-checked
/// against quotient_is_field; a disagreement throws logic_error.
bool is_maximal(const Ideal& i);

std::vector<Ideal> spec(const RingPtr& r);
std::vector<Ideal> max_spec(const RingPtr& r);

/// Elements with some power equal to zero; oracle for nilradical.
Bitset nilpotent_elements(const FiniteRing& r);
Ideal nilradical(const RingPtr& r);
Ideal jacobson_radical(const RingPtr& r);

std::optional<unsigned> krull_dimension(const RingPtr& r);

/// Intersection of the primes strictly containing i; the empty family yields
/// the whole ring.
Ideal strict_over_intersection(const RingPtr& r, const Ideal& i);

/// Exhaustive check: no non-maximal prime equals the intersection of the
/// primes strictly above it. Fills per-prime evidence; when every prime is
/// maximal the verdict is Sober with a "vacuous" note.
SoberVerdict is_sober_bruteforce(const RingPtr& r);

/// Every prime is an intersection of maximal ideals.
bool is_jacobson_ring_bruteforce(const RingPtr& r);

PrimePoset prime_poset(const RingPtr& r);
/// Graphviz rendering of the covering relation (transitive reduction),
/// deterministic node order and labels.
std::string poset_dot(const PrimePoset& p);

/// One-pass bundle of the spectral invariants.
RingInvariants analyze_ring(const RingPtr& r);

}  // namespace sober
