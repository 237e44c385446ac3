#include "sober/witnesses.hpp"

#include <random>
#include <stdexcept>

#include "sober/primes.hpp"

namespace sober {

uint64_t PrimeStream::next() {
    last_ = next_prime_after(last_);
    return last_;
}

IrreducibleStream::IrreducibleStream(uint64_t q, unsigned cap) : field_(q, cap) {}
IrreducibleStream::IrreducibleStream(GaloisField field) : field_(std::move(field)) {}

void IrreducibleStream::reset() {
    degree_ = 1;
    counter_ = 0;
}

Poly IrreducibleStream::next() {
    for (;;) {
        uint64_t span = 1;
        for (unsigned i = 0; i < degree_; ++i) span *= field_.size();
        while (counter_ < span) {
            Poly f = monic_poly(field_, degree_, counter_++);
            if (poly_is_irreducible(field_, f)) return f;
        }
        ++degree_;
        counter_ = 0;
    }
}

uint64_t witness_excluding_prime(uint64_t x) {
    if (x == 0)
        throw std::invalid_argument("witness_excluding_prime: zero lies in every maximal ideal");
    PrimeStream s;
    for (;;) {
        uint64_t p = s.next();
        if (x % p != 0) return p;
    }
}

Poly witness_excluding_prime(const GaloisField& F, const Poly& x) {
    if (poly_trim(x).empty())
        throw std::invalid_argument("witness_excluding_prime: zero lies in every maximal ideal");
    IrreducibleStream s(F);
    for (;;) {
        Poly g = s.next();
        if (!poly_divides(F, g, x)) return g;
    }
}

std::vector<Literal> maximal_spectrum_prefix(const RingDescriptor& d, unsigned count) {
    std::vector<Literal> out;
    if (std::holds_alternative<ZRing>(d.node)) {
        PrimeStream s;
        for (unsigned i = 0; i < count; ++i) out.emplace_back(s.next());
        return out;
    }
    if (const auto* pr = std::get_if<PolyRingOverFq>(&d.node)) {
        IrreducibleStream s(pr->q);
        for (unsigned i = 0; i < count; ++i) out.emplace_back(s.next());
        return out;
    }
    throw std::invalid_argument(
        "maximal_spectrum_prefix: stream defined only for the integers and polynomial rings");
}

NonSoberCertificate non_sober_certificate(const RingDescriptor& d, unsigned sample_count,
                                          uint64_t seed) {
    NonSoberCertificate cert;
    cert.witness_prime = "(0)";
    cert.rule = "zero-ideal-is-intersection-of-maximals";

    if (std::holds_alternative<ZRing>(d.node)) {
        // 1, then primorial products 6, 30, 210, ... while they fit; seeded
        // pseudorandom nonzero samples beyond.
        std::vector<uint64_t> samples{1};
        PrimeStream s;
        uint64_t acc = s.next();  // 2, never emitted alone
        for (;;) {
            uint64_t p = s.next();
            if (acc > UINT64_MAX / p) break;
            acc *= p;
            samples.push_back(acc);
        }
        std::mt19937_64 rng(seed);
        while (samples.size() < sample_count) {
            uint64_t v = rng();
            if (v != 0) samples.push_back(v);
        }
        samples.resize(sample_count);
        for (uint64_t x : samples) {
            uint64_t w = witness_excluding_prime(x);
            if (x % w == 0) throw std::logic_error("certificate pair failed division check");
            cert.pairs.push_back({Literal{x}, Literal{w}});
        }
        return cert;
    }

    if (const auto* pr = std::get_if<PolyRingOverFq>(&d.node)) {
        // Sample k: product of the first k+2 irreducibles. Deterministic for
        // every seed; the stream never runs out.
        GaloisField F(pr->q);
        for (unsigned k = 0; k < sample_count; ++k) {
            IrreducibleStream s(F);
            Poly x{1};
            for (unsigned i = 0; i < k + 2; ++i) x = poly_mul(F, x, s.next());
            Poly w = witness_excluding_prime(F, x);
            if (poly_divides(F, w, x)) throw std::logic_error("certificate pair failed division check");
            cert.pairs.push_back({Literal{x}, Literal{w}});
        }
        return cert;
    }

    throw std::invalid_argument(
        "non_sober_certificate: certificates are built only for the integers and polynomial rings");
}

}  // namespace sober
