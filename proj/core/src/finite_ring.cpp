#include "sober/finite_ring.hpp"

#include <stdexcept>

#include <json.hpp>

#include "sober/poly.hpp"
#include "sober/primes.hpp"

namespace sober {

namespace {

using nlohmann::json;

json recipe_as_json(const std::string& recipe) {
    // Constructor-produced recipes are always JSON; arbitrary strings (planted
    // defects) are embedded verbatim.
    if (auto parsed = json::parse(recipe, nullptr, false); !parsed.is_discarded()) return parsed;
    return json(recipe);
}

std::shared_ptr<FiniteRing> blank_ring(unsigned order) {
    auto r = std::make_shared<FiniteRing>();
    r->order = order;
    r->add_table.resize(static_cast<size_t>(order) * order);
    r->mul_table.resize(static_cast<size_t>(order) * order);
    return r;
}

}  // namespace

RingPtr zmod(uint64_t n, unsigned cap) {
    if (n == 0) throw std::invalid_argument("zmod: n must be >= 1 (n = 1 is the zero ring)");
    if (n > cap) throw CapExceeded("zmod: order " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
    auto r = blank_ring(static_cast<unsigned>(n));
    for (uint64_t a = 0; a < n; ++a) {
        for (uint64_t b = 0; b < n; ++b) {
            r->add_table[a * n + b] = static_cast<uint16_t>((a + b) % n);
            r->mul_table[a * n + b] = static_cast<uint16_t>((a * b) % n);
        }
    }
    r->zero = 0;
    r->one = n == 1 ? 0 : 1;
    r->recipe = json{{"n", n}, {"type", "Zmod"}}.dump();
    return r;
}

RingPtr poly_quotient(uint64_t p, const std::vector<uint64_t>& modulus, unsigned cap) {
    if (!is_prime_u64(p)) throw std::invalid_argument("poly_quotient: p must be prime");
    if (modulus.size() < 2) throw std::invalid_argument("poly_quotient: modulus degree must be >= 1");
    Poly f(modulus.size());
    for (size_t i = 0; i < modulus.size(); ++i) f[i] = static_cast<uint16_t>(modulus[i] % p);
    if (f.back() == 0)
        throw std::invalid_argument("poly_quotient: modulus leading coefficient is zero mod p");
    unsigned d = static_cast<unsigned>(f.size()) - 1;

    uint64_t order = 1;
    for (unsigned i = 0; i < d; ++i) {
        order *= p;
        if (order > cap)
            throw CapExceeded("poly_quotient: order p^d exceeds the cap " + std::to_string(cap));
    }

    GaloisField base(p, cap);
    Poly monic = poly_monic(base, f);

    auto r = blank_ring(static_cast<unsigned>(order));
    // Residue digits of index a, little-endian, length d.
    auto digits = [&](uint64_t a) {
        Poly out(d);
        for (unsigned i = 0; i < d; ++i) {
            out[i] = static_cast<uint16_t>(a % p);
            a /= p;
        }
        return poly_trim(std::move(out));
    };
    auto index_of = [&](Poly g) {
        g.resize(d, 0);
        uint64_t idx = 0;
        for (size_t i = g.size(); i-- > 0;) idx = idx * p + g[i];
        return static_cast<uint16_t>(idx);
    };
    for (uint64_t a = 0; a < order; ++a) {
        Poly pa = digits(a);
        for (uint64_t b = 0; b < order; ++b) {
            Poly pb = digits(b);
            r->add_table[a * order + b] = index_of(poly_add(base, pa, pb));
            r->mul_table[a * order + b] =
                index_of(poly_divmod(base, poly_mul(base, pa, pb), monic).second);
        }
    }
    r->zero = 0;
    r->one = 1;
    json jmod = json::array();
    for (uint16_t c : f) jmod.push_back(c);
    r->recipe = json{{"modulus", jmod}, {"p", p}, {"type", "PolyQuotient"}}.dump();
    return r;
}

RingPtr product(const RingPtr& a, const RingPtr& b, unsigned cap) {
    uint64_t order = static_cast<uint64_t>(a->order) * b->order;
    if (order > cap)
        throw CapExceeded("product: order " + std::to_string(order) + " exceeds the cap " + std::to_string(cap));
    auto r = blank_ring(static_cast<unsigned>(order));
    unsigned ob = b->order;
    for (unsigned a1 = 0; a1 < a->order; ++a1) {
        for (unsigned a2 = 0; a2 < ob; ++a2) {
            unsigned lhs = a1 * ob + a2;
            for (unsigned b1 = 0; b1 < a->order; ++b1) {
                for (unsigned b2 = 0; b2 < ob; ++b2) {
                    unsigned rhs = b1 * ob + b2;
                    r->add_table[static_cast<size_t>(lhs) * order + rhs] =
                        static_cast<uint16_t>(a->add(a1, b1) * ob + b->add(a2, b2));
                    r->mul_table[static_cast<size_t>(lhs) * order + rhs] =
                        static_cast<uint16_t>(a->mul(a1, b1) * ob + b->mul(a2, b2));
                }
            }
        }
    }
    r->zero = static_cast<uint16_t>(a->zero * ob + b->zero);
    r->one = static_cast<uint16_t>(a->one * ob + b->one);
    r->recipe = json{{"factors", json::array({recipe_as_json(a->recipe), recipe_as_json(b->recipe)})},
                     {"type", "Product"}}
                    .dump();
    return r;
}

std::vector<AxiomViolation> validate(const FiniteRing& r) {
    std::vector<AxiomViolation> out;
    size_t n = r.order;
    if (n == 0 || r.add_table.size() != n * n || r.mul_table.size() != n * n ||
        r.zero >= n || r.one >= n) {
        out.push_back({"shape", {}});
        return out;
    }
    for (uint16_t v : r.add_table) {
        if (v >= n) {
            out.push_back({"shape", {v}});
            return out;
        }
    }
    for (uint16_t v : r.mul_table) {
        if (v >= n) {
            out.push_back({"shape", {v}});
            return out;
        }
    }

    auto sweep_pairs = [&](const char* name, auto&& bad) {
        for (uint16_t a = 0; a < n; ++a)
            for (uint16_t b = a; b < n; ++b)
                if (bad(a, b)) {
                    out.push_back({name, {a, b}});
                    return;
                }
    };
    auto sweep_triples = [&](const char* name, auto&& bad) {
        for (uint16_t a = 0; a < n; ++a)
            for (uint16_t b = 0; b < n; ++b)
                for (uint16_t c = 0; c < n; ++c)
                    if (bad(a, b, c)) {
                        out.push_back({name, {a, b, c}});
                        return;
                    }
    };
    auto sweep_elements = [&](const char* name, auto&& bad) {
        for (uint16_t x = 0; x < n; ++x)
            if (bad(x)) {
                out.push_back({name, {x}});
                return;
            }
    };

    sweep_pairs("add-commutativity", [&](uint16_t a, uint16_t b) { return r.add(a, b) != r.add(b, a); });
    sweep_triples("add-associativity", [&](uint16_t a, uint16_t b, uint16_t c) {
        return r.add(r.add(a, b), c) != r.add(a, r.add(b, c));
    });
    sweep_elements("add-identity", [&](uint16_t x) { return r.add(x, r.zero) != x; });
    sweep_elements("add-inverse", [&](uint16_t x) {
        for (uint16_t y = 0; y < n; ++y)
            if (r.add(x, y) == r.zero) return false;
        return true;
    });
    sweep_pairs("mul-commutativity", [&](uint16_t a, uint16_t b) { return r.mul(a, b) != r.mul(b, a); });
    sweep_triples("mul-associativity", [&](uint16_t a, uint16_t b, uint16_t c) {
        return r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c));
    });
    sweep_elements("mul-identity", [&](uint16_t x) { return r.mul(x, r.one) != x; });
    sweep_triples("distributivity", [&](uint16_t a, uint16_t b, uint16_t c) {
        return r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c));
    });
    if (n > 1 && r.zero == r.one) out.push_back({"zero-one-distinct", {r.zero}});
    return out;
}

RingPtr mutate_table_entry(const FiniteRing& r, bool in_mul_table, unsigned row, unsigned col,
                           uint16_t value, std::string recipe) {
    auto m = std::make_shared<FiniteRing>(r);
    auto& table = in_mul_table ? m->mul_table : m->add_table;
    table.at(static_cast<size_t>(row) * r.order + col) = value;
    m->recipe = std::move(recipe);
    return m;
}

}  // namespace sober
