#pragma once

#include <cstdint>

#include "sober/descriptor.hpp"
#include "sober/poly.hpp"
#include "sober/verdict.hpp"

namespace sober {

inline constexpr uint64_t kDefaultCertificateSeed = 0x5eedcafe;

/// The maximal-ideal generators of the integers, ascending: 2, 3, 5, ...
class PrimeStream {
public:
    uint64_t next();
    void reset() { last_ = 1; }

private:
    uint64_t last_ = 1;
};

/// Monic irreducibles over F_q, ordered by degree then canonical counter.
class IrreducibleStream {
public:
    explicit IrreducibleStream(uint64_t q, unsigned cap = kDefaultOrderCap);
    explicit IrreducibleStream(GaloisField field);

    const GaloisField& field() const { return field_; }
    Poly next();
    void reset();

private:
    GaloisField field_;
    unsigned degree_ = 1;
    uint64_t counter_ = 0;
};

/// Smallest prime not dividing x; exists for every x != 0 because x has
/// finitely many prime factors. x == 0 is rejected (zero lies in every
/// maximal ideal).
uint64_t witness_excluding_prime(uint64_t x);
/// First irreducible (degree, counter order) not dividing x; same contract.
Poly witness_excluding_prime(const GaloisField& F, const Poly& x);

/// First `count` maximal-ideal generators of a symbolic ring with an infinite
/// enumerable maximal spectrum (the integers or a polynomial ring);
/// invalid_argument otherwise.
std::vector<Literal> maximal_spectrum_prefix(const RingDescriptor& d, unsigned count);

/// Division-verified (sample, excluder) pairs for the integers or a
/// polynomial ring: deterministic sample prefix (1, then products of the
/// first k maximal-ideal generators), seeded pseudorandom tail for the
/// integers. invalid_argument for descriptors without this certificate shape.
NonSoberCertificate non_sober_certificate(const RingDescriptor& d, unsigned sample_count,
                                          uint64_t seed = kDefaultCertificateSeed);

}  // namespace sober
