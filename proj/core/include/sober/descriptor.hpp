#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sober/finite_ring.hpp"

namespace sober {

struct RingDescriptor;

/// The ring of integers.
struct ZRing {
    friend bool operator==(const ZRing&, const ZRing&) = default;
};

/// Univariate polynomial ring over the field with q = p^k elements.
struct PolyRingOverFq {
    uint64_t q = 0;
    uint64_t p = 0;
    unsigned k = 0;

    friend bool operator==(const PolyRingOverFq&, const PolyRingOverFq&) = default;
};

/// Integers with every prime outside `primes` inverted; semilocal with
/// maximal ideals (p) for p in `primes` (sorted, distinct, certified prime).
struct ZLocalizedAt {
    std::vector<uint64_t> primes;

    friend bool operator==(const ZLocalizedAt&, const ZLocalizedAt&) = default;
};

/// Abstract discrete valuation ring; `label` names the uniformizer or source.
struct Dvr {
    std::string label;

    friend bool operator==(const Dvr&, const Dvr&) = default;
};

struct ZmodDesc {
    uint64_t n = 0;

    friend bool operator==(const ZmodDesc&, const ZmodDesc&) = default;
};

/// F_p[x]/(modulus); coefficients little-endian, already reduced mod p.
struct PolyQuotientDesc {
    uint64_t p = 0;
    std::vector<uint16_t> modulus;

    friend bool operator==(const PolyQuotientDesc&, const PolyQuotientDesc&) = default;
};

struct ProductDesc {
    std::vector<RingDescriptor> factors;
};
bool operator==(const ProductDesc& a, const ProductDesc& b);

struct RingDescriptor {
    std::variant<ZRing, PolyRingOverFq, ZLocalizedAt, Dvr, ZmodDesc, PolyQuotientDesc, ProductDesc>
        node;
};
bool operator==(const RingDescriptor& a, const RingDescriptor& b);

/// Parses descriptor JSON; DescriptorError names the offending field.
/// Normalizations applied: ZLocalizedAt primes sorted and deduplicated is an
/// error (must be distinct), PolyQuotient coefficients reduced mod p.
RingDescriptor parse_descriptor(const std::string& json_text);

/// Canonical compact JSON (sorted keys); parse round-trips losslessly.
std::string descriptor_to_json(const RingDescriptor& d);

/// Human-readable name, e.g. "Z/12", "F_4[x]", "Z localized at {2,5}".
std::string descriptor_label(const RingDescriptor& d);

/// True when the descriptor names a ring this library can realize as tables:
/// Zmod, PolyQuotient, and products of such.
bool is_finite_descriptor(const RingDescriptor& d);

/// Builds the tables for a finite descriptor; the result's recipe is the
/// canonical descriptor JSON. invalid_argument for symbolic descriptors,
/// CapExceeded when the order would pass the cap.
RingPtr realize_finite(const RingDescriptor& d, unsigned cap = kDefaultOrderCap);

}  // namespace sober
