#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sober/errors.hpp"

namespace sober {

/// Polynomial over a small finite field, little-endian field-element indices.
/// Normal form has no trailing zero coefficients; the zero polynomial is {}.
using Poly = std::vector<uint16_t>;

/// Arithmetic tables for the field with q elements, q = p^k a prime power.
/// Prime fields are residues mod p; extension fields are F_p[x]/(f) for the
/// first irreducible monic f of degree k in the canonical enumeration order,
/// with element index sum c_i p^i.
class GaloisField {
public:
    explicit GaloisField(uint64_t q, unsigned cap = kDefaultOrderCap);

    uint64_t size() const { return q_; }
    uint64_t characteristic() const { return p_; }
    unsigned extension_degree() const { return k_; }

    uint16_t add(uint16_t a, uint16_t b) const { return add_[static_cast<size_t>(a) * q_ + b]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_[static_cast<size_t>(a) * q_ + b]; }
    uint16_t neg(uint16_t a) const { return neg_[a]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }
    /// a != 0 required.
    uint16_t inv(uint16_t a) const { return inv_[a]; }

private:
    uint64_t q_ = 0, p_ = 0;
    unsigned k_ = 0;
    std::vector<uint16_t> add_, mul_, neg_, inv_;
};

int poly_degree(const Poly& f);  // -1 for the zero polynomial
Poly poly_trim(Poly f);
Poly poly_add(const GaloisField& F, const Poly& a, const Poly& b);
Poly poly_sub(const GaloisField& F, const Poly& a, const Poly& b);
Poly poly_mul(const GaloisField& F, const Poly& a, const Poly& b);
/// Quotient and remainder; g must be nonzero.
std::pair<Poly, Poly> poly_divmod(const GaloisField& F, const Poly& f, const Poly& g);
bool poly_divides(const GaloisField& F, const Poly& g, const Poly& f);
Poly poly_monic(const GaloisField& F, const Poly& f);

/// Monic polynomial of the given degree whose non-leading coefficients are the
/// base-q digits of `counter` (little-endian). This is the canonical
/// enumeration order: degree first, then counter.
Poly monic_poly(const GaloisField& F, unsigned degree, uint64_t counter);

/// Trial division by monic polynomials of degree <= deg(f)/2. deg(f) >= 1
/// required; constants are rejected with invalid_argument.
bool poly_is_irreducible(const GaloisField& F, const Poly& f);

/// "x^2+x+1" style rendering, coefficients as field-element indices.
std::string poly_to_string(const Poly& f);

}  // namespace sober
