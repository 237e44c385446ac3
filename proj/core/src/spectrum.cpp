#include "sober/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace sober {

namespace {

bool maximal_in_lattice(const std::vector<Ideal>& lattice, const Ideal& i) {
    if (!i.proper()) return false;
    for (const Ideal& j : lattice) {
        if (!j.proper()) continue;
        if (j.members != i.members && j.members.contains(i.members)) return false;
    }
    return true;
}

bool checked_maximal(const std::vector<Ideal>& lattice, const Ideal& i) {
    bool lattice_route = maximal_in_lattice(lattice, i);
    bool field_route = quotient_is_field(i);
    if (lattice_route != field_route)
        throw std::logic_error("maximality routes disagree (lattice vs quotient field)");
    return lattice_route;
}

Ideal intersect_all(const RingPtr& r, const std::vector<const Ideal*>& family) {
    Bitset acc = Bitset::all(r->order);
    for (const Ideal* i : family) acc &= i->members;
    return {r, acc};
}

}  // namespace

bool is_prime(const Ideal& i) {
    const FiniteRing& r = *i.ring;
    if (!i.proper()) return false;
    std::vector<uint16_t> outside;
    for (unsigned x = 0; x < r.order; ++x)
        if (!i.members.test(x)) outside.push_back(static_cast<uint16_t>(x));
    for (size_t a = 0; a < outside.size(); ++a)
        for (size_t b = a; b < outside.size(); ++b)
            if (i.members.test(r.mul(outside[a], outside[b]))) return false;
    return true;
}

bool quotient_is_field(const Ideal& i) {
    RingPtr q = quotient(i.ring, i.members);
    if (q->order < 2) return false;
    for (unsigned x = 0; x < q->order; ++x) {
        if (x == q->zero) continue;
        bool unit = false;
        for (unsigned y = 0; y < q->order; ++y) {
            if (q->mul(static_cast<uint16_t>(x), static_cast<uint16_t>(y)) == q->one) {
                unit = true;
                break;
            }
        }
        if (!unit) return false;
    }
    return true;
}

bool is_maximal(const Ideal& i) { return checked_maximal(all_ideals(i.ring), i); }

std::vector<Ideal> spec(const RingPtr& r) {
    std::vector<Ideal> out;
    for (const Ideal& i : all_ideals(r))
        if (is_prime(i)) out.push_back(i);
    return out;
}

std::vector<Ideal> max_spec(const RingPtr& r) {
    auto lattice = all_ideals(r);
    std::vector<Ideal> out;
    for (const Ideal& i : lattice)
        if (checked_maximal(lattice, i)) out.push_back(i);
    return out;
}

Bitset nilpotent_elements(const FiniteRing& r) {
    Bitset out(r.order);
    for (unsigned x = 0; x < r.order; ++x) {
        uint16_t p = static_cast<uint16_t>(x);
        // x^k cycles within order steps; nilpotent iff the cycle hits zero.
        for (unsigned k = 0; k < r.order; ++k) {
            if (p == r.zero) {
                out.set(x);
                break;
            }
            p = r.mul(p, static_cast<uint16_t>(x));
        }
        if (x == r.zero) out.set(x);
    }
    return out;
}

Ideal nilradical(const RingPtr& r) {
    auto primes = spec(r);
    std::vector<const Ideal*> fam;
    for (const Ideal& p : primes) fam.push_back(&p);
    Ideal nil = intersect_all(r, fam);
    if (nil.members != nilpotent_elements(*r))
        throw std::logic_error("nilradical routes disagree (prime intersection vs nilpotents)");
    return nil;
}

Ideal jacobson_radical(const RingPtr& r) {
    auto maxes = max_spec(r);
    std::vector<const Ideal*> fam;
    for (const Ideal& m : maxes) fam.push_back(&m);
    return intersect_all(r, fam);
}

std::optional<unsigned> krull_dimension(const RingPtr& r) {
    auto primes = spec(r);
    if (primes.empty()) return std::nullopt;
    // Canonical order lists smaller sets first, so it is topological for
    // strict containment.
    std::vector<unsigned> longest(primes.size(), 0);
    unsigned best = 0;
    for (size_t j = 0; j < primes.size(); ++j) {
        for (size_t i = 0; i < j; ++i) {
            if (primes[j].members != primes[i].members &&
                primes[j].members.contains(primes[i].members))
                longest[j] = std::max(longest[j], longest[i] + 1);
        }
        best = std::max(best, longest[j]);
    }
    return best;
}

Ideal strict_over_intersection(const RingPtr& r, const Ideal& i) {
    if (i.ring != r) throw std::invalid_argument("strict_over_intersection: ideal of a different ring");
    Bitset acc = Bitset::all(r->order);
    for (const Ideal& q : spec(r))
        if (q.members != i.members && q.members.contains(i.members)) acc &= q.members;
    return {r, acc};
}

SoberVerdict is_sober_bruteforce(const RingPtr& r) {
    auto lattice = all_ideals(r);
    std::vector<Ideal> primes;
    for (const Ideal& i : lattice)
        if (is_prime(i)) primes.push_back(i);

    SoberVerdict v;
    v.value = Soberness::Sober;
    bool any_non_maximal = false;
    for (const Ideal& p : primes) {
        PrimeEvidence e;
        e.prime = ideal_label(p);
        e.members = p.members.elements();
        e.maximal = checked_maximal(lattice, p);
        if (!e.maximal) {
            any_non_maximal = true;
            Bitset acc = Bitset::all(r->order);
            for (const Ideal& q : primes)
                if (q.members != p.members && q.members.contains(p.members)) acc &= q.members;
            bool equal = acc == p.members;
            e.equals_strict_intersection = equal;
            if (equal) v.value = Soberness::NotSober;
        }
        v.evidence.push_back(std::move(e));
    }
    if (!any_non_maximal) v.note = "vacuous: every prime ideal is maximal";
    return v;
}

bool is_jacobson_ring_bruteforce(const RingPtr& r) {
    auto lattice = all_ideals(r);
    std::vector<Ideal> primes, maxes;
    for (const Ideal& i : lattice) {
        if (is_prime(i)) primes.push_back(i);
        if (checked_maximal(lattice, i)) maxes.push_back(i);
    }
    for (const Ideal& p : primes) {
        Bitset acc = Bitset::all(r->order);
        for (const Ideal& m : maxes)
            if (m.members.contains(p.members)) acc &= m.members;
        if (acc != p.members) return false;
    }
    return true;
}

PrimePoset prime_poset(const RingPtr& r) {
    PrimePoset p;
    p.primes = spec(r);
    for (size_t i = 0; i < p.primes.size(); ++i)
        for (size_t j = 0; j < p.primes.size(); ++j) {
            if (i == j) continue;
            if (p.primes[j].members != p.primes[i].members &&
                p.primes[j].members.contains(p.primes[i].members))
                p.strict_edges.emplace_back(static_cast<unsigned>(i), static_cast<unsigned>(j));
        }
    std::sort(p.strict_edges.begin(), p.strict_edges.end());
    return p;
}

std::string poset_dot(const PrimePoset& p) {
    auto has_edge = [&](unsigned a, unsigned b) {
        return std::binary_search(p.strict_edges.begin(), p.strict_edges.end(),
                                  std::make_pair(a, b));
    };
    std::string out = "digraph prime_poset {\n  rankdir=BT;\n";
    for (size_t i = 0; i < p.primes.size(); ++i)
        out += "  p" + std::to_string(i) + " [label=\"" + ideal_label(p.primes[i]) + "\"];\n";
    for (auto [a, b] : p.strict_edges) {
        bool covering = true;
        for (size_t k = 0; k < p.primes.size() && covering; ++k)
            if (k != a && k != b && has_edge(a, static_cast<unsigned>(k)) &&
                has_edge(static_cast<unsigned>(k), b))
                covering = false;
        if (covering) out += "  p" + std::to_string(a) + " -> p" + std::to_string(b) + ";\n";
    }
    out += "}\n";
    return out;
}

RingInvariants analyze_ring(const RingPtr& r) {
    auto lattice = all_ideals(r);
    RingInvariants inv;
    for (const Ideal& i : lattice)
        if (is_prime(i)) inv.spec.push_back(i);
    for (const Ideal& i : lattice)
        if (checked_maximal(lattice, i)) inv.max_spec.push_back(i);

    std::vector<const Ideal*> fam;
    for (const Ideal& p : inv.spec) fam.push_back(&p);
    inv.nilradical = intersect_all(r, fam);
    if (inv.nilradical.members != nilpotent_elements(*r))
        throw std::logic_error("nilradical routes disagree (prime intersection vs nilpotents)");
    fam.clear();
    for (const Ideal& m : inv.max_spec) fam.push_back(&m);
    inv.jacobson_radical = intersect_all(r, fam);

    if (!inv.spec.empty()) {
        std::vector<unsigned> longest(inv.spec.size(), 0);
        unsigned best = 0;
        for (size_t j = 0; j < inv.spec.size(); ++j) {
            for (size_t i = 0; i < j; ++i)
                if (inv.spec[j].members != inv.spec[i].members &&
                    inv.spec[j].members.contains(inv.spec[i].members))
                    longest[j] = std::max(longest[j], longest[i] + 1);
            best = std::max(best, longest[j]);
        }
        inv.krull_dim = best;
    }

    inv.is_domain = is_prime(zero_ideal(r));
    inv.is_field = false;
    if (r->order >= 2) {
        inv.is_field = true;
        for (unsigned x = 0; x < r->order && inv.is_field; ++x) {
            if (x == r->zero) continue;
            bool unit = false;
            for (unsigned y = 0; y < r->order; ++y)
                if (r->mul(static_cast<uint16_t>(x), static_cast<uint16_t>(y)) == r->one) {
                    unit = true;
                    break;
                }
            if (!unit) inv.is_field = false;
        }
    }
    return inv;
}

}  // namespace sober
