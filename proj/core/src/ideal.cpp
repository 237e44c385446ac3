#include "sober/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace sober {

namespace {

void require_same_ring(const Ideal& i, const Ideal& j) {
    if (i.ring != j.ring)
        throw std::invalid_argument("ideal operation across two different ambient rings");
}

/// Closes a zero-containing set under addition. Absorption is preserved: if
/// every seed member absorbs ring multiplication, sums do too.
Bitset close_add(const FiniteRing& r, Bitset b) {
    std::vector<uint16_t> members = b.elements();
    std::vector<uint16_t> work = members;
    while (!work.empty()) {
        uint16_t m = work.back();
        work.pop_back();
        for (size_t i = 0; i < members.size(); ++i) {
            uint16_t s = r.add(m, members[i]);
            if (!b.test(s)) {
                b.set(s);
                members.push_back(s);
                work.push_back(s);
            }
        }
    }
    return b;
}

Bitset principal_members(const FiniteRing& r, uint16_t a) {
    Bitset b(r.order);
    for (unsigned x = 0; x < r.order; ++x) b.set(r.mul(static_cast<uint16_t>(x), a));
    return b;
}

}  // namespace

bool is_ideal(const FiniteRing& r, const Bitset& members) {
    if (members.universe() != r.order || !members.test(r.zero)) return false;
    auto elems = members.elements();
    for (uint16_t i : elems)
        for (uint16_t j : elems)
            if (!members.test(r.add(i, j))) return false;
    for (unsigned x = 0; x < r.order; ++x)
        for (uint16_t i : elems)
            if (!members.test(r.mul(static_cast<uint16_t>(x), i))) return false;
    return true;
}

Ideal zero_ideal(const RingPtr& r) {
    Bitset b(r->order);
    b.set(r->zero);
    return {r, b};
}

Ideal whole_ring_ideal(const RingPtr& r) { return {r, Bitset::all(r->order)}; }

Ideal principal_ideal(const RingPtr& r, uint16_t a) {
    if (a >= r->order) throw std::invalid_argument("principal_ideal: element out of range");
    return {r, principal_members(*r, a)};
}

Ideal ideal_generated(const RingPtr& r, const std::vector<uint16_t>& gens) {
    Bitset b(r->order);
    b.set(r->zero);
    for (uint16_t g : gens) {
        if (g >= r->order) throw std::invalid_argument("ideal_generated: element out of range");
        b |= principal_members(*r, g);
    }
    return {r, close_add(*r, std::move(b))};
}

std::vector<Ideal> all_ideals(const RingPtr& r, unsigned cap) {
    if (r->order > cap)
        throw CapExceeded("all_ideals: ring order " + std::to_string(r->order) +
                          " exceeds the cap " + std::to_string(cap));
    std::set<Bitset, CanonicalLess> found;
    std::vector<Bitset> work;
    for (unsigned a = 0; a < r->order; ++a) {
        Bitset p = principal_members(*r, static_cast<uint16_t>(a));
        if (found.insert(p).second) work.push_back(std::move(p));
    }
    // Pairwise joins until fixpoint; the join of two ideals is the additive
    // closure of their union.
    for (size_t i = 0; i < work.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            Bitset s = close_add(*r, work[i] | work[j]);
            if (found.insert(s).second) work.push_back(std::move(s));
        }
    }
    std::vector<Ideal> out;
    out.reserve(found.size());
    for (const Bitset& b : found) out.push_back({r, b});
    return out;
}

Ideal sum(const Ideal& i, const Ideal& j) {
    require_same_ring(i, j);
    return {i.ring, close_add(*i.ring, i.members | j.members)};
}

Ideal intersect(const Ideal& i, const Ideal& j) {
    require_same_ring(i, j);
    return {i.ring, i.members & j.members};
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
    require_same_ring(i, j);
    const FiniteRing& r = *i.ring;
    Bitset b(r.order);
    b.set(r.zero);
    for (uint16_t a : i.members.elements())
        for (uint16_t c : j.members.elements()) b.set(r.mul(a, c));
    return {i.ring, close_add(r, std::move(b))};
}

Containment is_subset(const Ideal& i, const Ideal& j) {
    require_same_ring(i, j);
    bool sub = j.members.contains(i.members);
    return {sub, sub && i.members != j.members};
}

std::vector<uint16_t> minimal_generators(const Ideal& i) {
    const RingPtr& r = i.ring;
    for (uint16_t a : i.members.elements())
        if (principal_members(*r, a) == i.members) return {a};
    std::vector<uint16_t> gens;
    Bitset current(r->order);
    current.set(r->zero);
    while (current != i.members) {
        uint16_t next = 0;
        for (uint16_t a : i.members.elements())
            if (!current.test(a)) {
                next = a;
                break;
            }
        gens.push_back(next);
        current = ideal_generated(r, gens).members;
    }
    return gens;
}

std::string ideal_label(const Ideal& i) {
    std::string out = "(";
    auto gens = minimal_generators(i);
    for (size_t k = 0; k < gens.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(gens[k]);
    }
    return out + ")";
}

RingPtr quotient(const RingPtr& r, const Bitset& ideal_members) {
    if (!is_ideal(*r, ideal_members))
        throw std::invalid_argument("quotient: member set is not an ideal of the ring");
    unsigned n = r->order;
    std::vector<uint16_t> rep(n);
    std::vector<uint16_t> coset_index(n);
    std::vector<uint16_t> reps;
    std::vector<bool> seen(n, false);
    for (unsigned x = 0; x < n; ++x) {
        if (seen[x]) continue;
        // x is the smallest member of its coset x + I.
        reps.push_back(static_cast<uint16_t>(x));
        for (uint16_t m : ideal_members.elements()) {
            uint16_t y = r->add(static_cast<uint16_t>(x), m);
            seen[y] = true;
            rep[y] = static_cast<uint16_t>(x);
        }
    }
    for (size_t k = 0; k < reps.size(); ++k) coset_index[reps[k]] = static_cast<uint16_t>(k);

    unsigned m = static_cast<unsigned>(reps.size());
    auto q = std::make_shared<FiniteRing>();
    q->order = m;
    q->add_table.resize(static_cast<size_t>(m) * m);
    q->mul_table.resize(static_cast<size_t>(m) * m);
    for (unsigned a = 0; a < m; ++a) {
        for (unsigned b = 0; b < m; ++b) {
            q->add_table[static_cast<size_t>(a) * m + b] = coset_index[rep[r->add(reps[a], reps[b])]];
            q->mul_table[static_cast<size_t>(a) * m + b] = coset_index[rep[r->mul(reps[a], reps[b])]];
        }
    }
    q->zero = coset_index[rep[r->zero]];
    q->one = coset_index[rep[r->one]];

    nlohmann::json ring_part;
    if (auto parsed = nlohmann::json::parse(r->recipe, nullptr, false); !parsed.is_discarded())
        ring_part = parsed;
    else
        ring_part = r->recipe;
    nlohmann::json ideal_part = nlohmann::json::array();
    for (uint16_t x : ideal_members.elements()) ideal_part.push_back(x);
    q->recipe =
        nlohmann::json{{"ideal", ideal_part}, {"ring", ring_part}, {"type", "QuotientOf"}}.dump();
    return q;
}

}  // namespace sober
