#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sober/bitset.hpp"
#include "sober/errors.hpp"

namespace sober {

/// Finite commutative ring with identity on element indices 0..order-1, given
/// by complete addition and multiplication tables. Treated as immutable after
/// construction; `recipe` is the canonical JSON of the construction and is the
/// identity used for corpus deduplication.
struct FiniteRing {
    unsigned order = 0;
    std::vector<uint16_t> add_table;  // order*order, row-major
    std::vector<uint16_t> mul_table;
    uint16_t zero = 0;
    uint16_t one = 0;
    std::string recipe;

    uint16_t add(uint16_t a, uint16_t b) const { return add_table[static_cast<size_t>(a) * order + b]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_table[static_cast<size_t>(a) * order + b]; }
    bool trivial() const { return order == 1; }
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// One broken ring axiom plus the elements witnessing the break.
struct AxiomViolation {
    std::string axiom;
    std::vector<uint16_t> witness;
};

/// Z/nZ with elements 0..n-1. n == 1 gives the zero ring (zero == one).
RingPtr zmod(uint64_t n, unsigned cap = kDefaultOrderCap);

/// F_p[x]/(f) for f the monic associate of `modulus` (little-endian
/// coefficients, reduced mod p; degree d >= 1 required). Element index
/// encodes the residue digits: index = sum c_i p^i.
RingPtr poly_quotient(uint64_t p, const std::vector<uint64_t>& modulus,
                      unsigned cap = kDefaultOrderCap);

/// Direct product; element index (a, b) -> a * b.order + b.
RingPtr product(const RingPtr& a, const RingPtr& b, unsigned cap = kDefaultOrderCap);

/// Quotient by an ideal given as its member set. Cosets are relabelled
/// 0..order/|I|-1 in increasing order of their smallest representative.
RingPtr quotient(const RingPtr& r, const Bitset& ideal_members);

/// Checks every commutative-ring-with-identity axiom by exhaustive sweep and
/// returns one witnessed violation per broken axiom (empty means valid).
/// Table shape problems are reported as "shape" violations instead of UB.
std::vector<AxiomViolation> validate(const FiniteRing& r);

/// Copy of r with a single table entry overwritten; for defect injection.
RingPtr mutate_table_entry(const FiniteRing& r, bool in_mul_table, unsigned row,
                           unsigned col, uint16_t value, std::string recipe);

}  // namespace sober
