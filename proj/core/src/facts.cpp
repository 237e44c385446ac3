#include "sober/facts.hpp"

#include "sober/spectrum.hpp"

namespace sober {

namespace {

RingFacts finite_facts(const RingPtr& r) {
    RingInvariants inv = analyze_ring(r);
    RingFacts f;
    f.dim = inv.krull_dim;
    f.artinian = true;  // finite descending chains only
    f.semilocal = true;
    f.domain = inv.is_domain;
    f.field = inv.is_field;
    bool all_principal = true;
    for (const Ideal& i : all_ideals(r)) {
        bool principal = false;
        for (uint16_t a : i.members.elements())
            if (principal_ideal(r, a).members == i.members) {
                principal = true;
                break;
            }
        if (!principal) {
            all_principal = false;
            break;
        }
    }
    f.pid = inv.is_domain && all_principal;
    // A finite domain is a field, so the Dedekind conditions (domain, not a
    // field) are never met by a finite ring.
    f.dedekind = false;
    Bitset just_zero(r->order);
    just_zero.set(r->zero);
    f.jacobson_radical_zero = inv.jacobson_radical.members == just_zero;
    f.jacobson_ring = is_jacobson_ring_bruteforce(r);
    return f;
}

RingFacts euclidean_domain_facts() {
    // Shared by the integers and univariate polynomials over a field:
    // dimension-one PIDs with infinitely many maximal ideals.
    RingFacts f;
    f.dim = 1;
    f.artinian = false;
    f.semilocal = false;
    f.domain = true;
    f.field = false;
    f.pid = true;
    f.dedekind = true;  // closure: pid and not a field
    f.jacobson_radical_zero = true;
    f.jacobson_ring = true;
    return f;
}

RingFacts semilocal_pid_facts() {
    // Localizations of the integers at finitely many primes, and abstract
    // DVRs: dimension-one semilocal PIDs with nonzero Jacobson radical.
    RingFacts f;
    f.dim = 1;
    f.artinian = false;
    f.semilocal = true;
    f.domain = true;
    f.field = false;
    f.pid = true;
    f.dedekind = true;  // closure: pid and not a field
    f.jacobson_radical_zero = false;
    f.jacobson_ring = false;
    return f;
}

}  // namespace

RingFacts classify(const RingDescriptor& d, unsigned cap) {
    if (is_finite_descriptor(d)) return finite_facts(realize_finite(d, cap));
    return std::visit(
        [&](const auto& node) -> RingFacts {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZRing> || std::is_same_v<T, PolyRingOverFq>) {
                return euclidean_domain_facts();
            } else if constexpr (std::is_same_v<T, ZLocalizedAt> || std::is_same_v<T, Dvr>) {
                return semilocal_pid_facts();
            } else {
                (void)node;
                return RingFacts{};  // symbolic product: everything unknown
            }
        },
        d.node);
}

}  // namespace sober
