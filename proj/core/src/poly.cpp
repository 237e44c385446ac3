#include "sober/poly.hpp"

#include <stdexcept>

#include "sober/primes.hpp"

namespace sober {

namespace {

std::vector<uint16_t> index_digits(uint64_t index, uint64_t p, unsigned len) {
    std::vector<uint16_t> d(len);
    for (unsigned i = 0; i < len; ++i) {
        d[i] = static_cast<uint16_t>(index % p);
        index /= p;
    }
    return d;
}

uint64_t digits_index(const std::vector<uint16_t>& d, uint64_t p) {
    uint64_t idx = 0;
    for (size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
    return idx;
}

}  // namespace

GaloisField::GaloisField(uint64_t q, unsigned cap) {
    auto pf = prime_power_factor(q);
    if (!pf) throw std::invalid_argument("field size must be a prime power >= 2");
    if (q > cap) throw CapExceeded("field of size " + std::to_string(q) + " exceeds the order cap " + std::to_string(cap));
    p_ = pf->first;
    k_ = pf->second;
    q_ = q;

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);

    if (k_ == 1) {
        for (uint64_t a = 0; a < q; ++a) {
            neg_[a] = static_cast<uint16_t>((q - a) % q);
            for (uint64_t b = 0; b < q; ++b) {
                add_[a * q + b] = static_cast<uint16_t>((a + b) % q);
                mul_[a * q + b] = static_cast<uint16_t>((a * b) % q);
            }
        }
    } else {
        GaloisField base(p_, cap);
        Poly f;
        for (uint64_t counter = 0;; ++counter) {
            f = monic_poly(base, k_, counter);
            if (poly_is_irreducible(base, f)) break;
        }
        for (uint64_t a = 0; a < q; ++a) {
            Poly pa = poly_trim(index_digits(a, p_, k_));
            Poly na(k_, 0);
            for (unsigned i = 0; i < pa.size(); ++i) na[i] = base.neg(pa[i]);
            neg_[a] = static_cast<uint16_t>(digits_index(na, p_));
            for (uint64_t b = 0; b < q; ++b) {
                Poly pb = poly_trim(index_digits(b, p_, k_));
                Poly s = poly_add(base, pa, pb);
                s.resize(k_, 0);
                add_[a * q + b] = static_cast<uint16_t>(digits_index(s, p_));
                Poly m = poly_divmod(base, poly_mul(base, pa, pb), f).second;
                m.resize(k_, 0);
                mul_[a * q + b] = static_cast<uint16_t>(digits_index(m, p_));
            }
        }
    }
    for (uint64_t a = 1; a < q; ++a) {
        for (uint64_t b = 1; b < q; ++b) {
            if (mul_[a * q + b] == 1) {
                inv_[a] = static_cast<uint16_t>(b);
                break;
            }
        }
    }
}

int poly_degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_add(const GaloisField& F, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint16_t x = i < a.size() ? a[i] : 0;
        uint16_t y = i < b.size() ? b[i] : 0;
        out[i] = F.add(x, y);
    }
    return poly_trim(std::move(out));
}

Poly poly_sub(const GaloisField& F, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint16_t x = i < a.size() ? a[i] : 0;
        uint16_t y = i < b.size() ? b[i] : 0;
        out[i] = F.sub(x, y);
    }
    return poly_trim(std::move(out));
}

Poly poly_mul(const GaloisField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return poly_trim(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const GaloisField& F, const Poly& f, const Poly& g) {
    if (g.empty()) throw std::invalid_argument("polynomial division by zero");
    Poly rem = poly_trim(f);
    int dg = poly_degree(g);
    if (poly_degree(rem) < dg) return {Poly{}, rem};
    Poly quot(rem.size() - g.size() + 1, 0);
    uint16_t lead_inv = F.inv(g.back());
    while (poly_degree(rem) >= dg) {
        int shift = poly_degree(rem) - dg;
        uint16_t c = F.mul(rem.back(), lead_inv);
        quot[shift] = c;
        for (size_t i = 0; i < g.size(); ++i) {
            size_t k = shift + i;
            rem[k] = F.sub(rem[k], F.mul(c, g[i]));
        }
        rem = poly_trim(std::move(rem));
    }
    return {poly_trim(std::move(quot)), rem};
}

bool poly_divides(const GaloisField& F, const Poly& g, const Poly& f) {
    return poly_divmod(F, f, g).second.empty();
}

Poly poly_monic(const GaloisField& F, const Poly& f) {
    Poly t = poly_trim(f);
    if (t.empty() || t.back() == 1) return t;
    uint16_t s = F.inv(t.back());
    for (auto& c : t) c = F.mul(c, s);
    return t;
}

Poly monic_poly(const GaloisField& F, unsigned degree, uint64_t counter) {
    Poly f(degree + 1, 0);
    uint64_t q = F.size();
    for (unsigned i = 0; i < degree; ++i) {
        f[i] = static_cast<uint16_t>(counter % q);
        counter /= q;
    }
    f[degree] = 1;
    return f;
}

bool poly_is_irreducible(const GaloisField& F, const Poly& f) {
    int d = poly_degree(poly_trim(f));
    if (d < 1) throw std::invalid_argument("irreducibility is defined for degree >= 1");
    Poly m = poly_monic(F, f);
    uint64_t q = F.size();
    for (int e = 1; 2 * e <= d; ++e) {
        uint64_t n = 1;
        for (int i = 0; i < e; ++i) n *= q;
        for (uint64_t counter = 0; counter < n; ++counter) {
            if (poly_divides(F, monic_poly(F, e, counter), m)) return false;
        }
    }
    return true;
}

std::string poly_to_string(const Poly& f) {
    Poly t = poly_trim(f);
    if (t.empty()) return "0";
    std::string out;
    for (size_t i = t.size(); i-- > 0;) {
        if (t[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(t[i]);
        } else {
            if (t[i] != 1) out += std::to_string(t[i]) + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace sober
