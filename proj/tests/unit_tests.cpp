#include <doctest.h>

#include <set>

#include "sober/errors.hpp"
#include "sober/ideal.hpp"
#include "sober/poly.hpp"
#include "sober/primes.hpp"
#include "sober/spectrum.hpp"
#include "sober/topology.hpp"

#include "support.hpp"

using namespace sober;
using sober_test::bits;
using sober_test::divisor_count;
using sober_test::ideals_by_subset_filter;

TEST_CASE("bitset ordering ranks by size then earliest difference") {
    Bitset a = bits(12, {0});
    Bitset b = bits(12, {0, 6});
    Bitset c = bits(12, {0, 4, 8});
    Bitset d = bits(12, {0, 3, 6, 9});
    CHECK(canonical_less(a, b));
    CHECK(canonical_less(b, c));
    CHECK(canonical_less(c, d));
    CHECK(!canonical_less(b, a));
    // Same size: the set holding the first differing element comes first.
    CHECK(canonical_less(bits(6, {0, 1}), bits(6, {0, 2})));
    CHECK(!canonical_less(bits(6, {0, 2}), bits(6, {0, 1})));
    CHECK(bits(6, {0, 3}) == bits(6, {0, 3}));
    CHECK(Bitset::all(6).count() == 6);
    CHECK(Bitset(6).none());
    CHECK(bits(6, {0, 3}).elements() == std::vector<uint16_t>{0, 3});
    CHECK(bits(6, {0, 2, 4}).contains(bits(6, {0, 4})));
    CHECK(!bits(6, {0, 2, 4}).contains(bits(6, {0, 1})));
}

TEST_CASE("integer quotient ring tables") {
    RingPtr r = zmod(6);
    CHECK(r->order == 6);
    CHECK(r->zero == 0);
    CHECK(r->one == 1);
    CHECK(r->add(4, 5) == 3);
    CHECK(r->mul(4, 5) == 2);
    CHECK(r->mul(2, 3) == 0);
    CHECK(validate(*r).empty());
    CHECK(r->recipe == "{\"n\":6,\"type\":\"Zmod\"}");
}

TEST_CASE("order-one ring is accepted with coinciding zero and one") {
    RingPtr r = zmod(1);
    CHECK(r->order == 1);
    CHECK(r->zero == r->one);
    CHECK(r->trivial());
    CHECK(validate(*r).empty());
}

TEST_CASE("ring constructors reject bad arguments") {
    CHECK_THROWS_AS(zmod(0), std::invalid_argument);
    CHECK_THROWS_AS(zmod(257), CapExceeded);
    CHECK_NOTHROW(zmod(256));
    CHECK_THROWS_AS(poly_quotient(4, {1, 1, 1}), std::invalid_argument);   // composite base
    CHECK_THROWS_AS(poly_quotient(2, {1}), std::invalid_argument);         // degree zero
    CHECK_THROWS_AS(poly_quotient(2, {1, 1, 2}), std::invalid_argument);   // leading coeff reduces to zero
    CHECK_THROWS_AS(poly_quotient(2, {1, 1, 1, 0, 0, 0, 0, 0, 0, 1}), CapExceeded);  // order 512
    CHECK_THROWS_AS(product(zmod(16), zmod(32)), CapExceeded);
}

TEST_CASE("quartic field arithmetic via an irreducible quadratic") {
    // Indices encode polynomials little-endian: 2 is x, 3 is x+1.
    RingPtr f4 = poly_quotient(2, {1, 1, 1});
    CHECK(f4->order == 4);
    CHECK(validate(*f4).empty());
    CHECK(f4->mul(2, 2) == 3);   // x*x = x+1
    CHECK(f4->mul(2, 3) == 1);   // x*(x+1) = 1
    CHECK(f4->add(2, 3) == 1);
    CHECK(f4->recipe == "{\"modulus\":[1,1,1],\"p\":2,\"type\":\"PolyQuotient\"}");
}

TEST_CASE("reducible modulus produces a nilpotent") {
    RingPtr r = poly_quotient(2, {0, 0, 1});  // modulus x^2
    CHECK(r->order == 4);
    CHECK(validate(*r).empty());
    CHECK(r->mul(2, 2) == 0);  // x*x = 0
}

TEST_CASE("product ring matches the remainder-pair construction") {
    RingPtr r = product(zmod(2), zmod(3));
    CHECK(r->order == 6);
    CHECK(validate(*r).empty());
    // Index (a, b) -> a*3 + b. one = (1, 1) -> 4.
    CHECK(r->one == 4);
    CHECK(r->mul(4, 4) == 4);
    CHECK(all_ideals(r).size() == 4);
    CHECK(all_ideals(zmod(6)).size() == 4);
}

TEST_CASE("axiom sweep pinpoints a planted table defect") {
    RingPtr base = zmod(6);

    RingPtr bad_add = mutate_table_entry(*base, false, 1, 2, 4, "planted");
    auto v1 = validate(*bad_add);
    REQUIRE(!v1.empty());
    bool saw_add_comm = false;
    for (const auto& v : v1) saw_add_comm |= v.axiom == "add-commutativity";
    CHECK(saw_add_comm);

    RingPtr bad_mul = mutate_table_entry(*base, true, 2, 3, 1, "planted");
    auto v2 = validate(*bad_mul);
    bool saw_mul_comm = false;
    for (const auto& v : v2) saw_mul_comm |= v.axiom == "mul-commutativity";
    CHECK(saw_mul_comm);

    // A diagonal defect keeps commutativity and surfaces through associativity.
    RingPtr bad_diag = mutate_table_entry(*base, true, 2, 2, 5, "planted");
    auto v3 = validate(*bad_diag);
    bool saw_comm = false, saw_assoc = false;
    for (const auto& v : v3) {
        saw_comm |= v.axiom == "mul-commutativity";
        if (v.axiom == "mul-associativity") {
            saw_assoc = true;
            CHECK(v.witness == std::vector<uint16_t>{2, 2, 3});
        }
    }
    CHECK(!saw_comm);
    CHECK(saw_assoc);
}

TEST_CASE("principal ideal collects all multiples") {
    CHECK(principal_ideal(zmod(8), 6).members == bits(8, {0, 2, 4, 6}));
    CHECK(principal_ideal(zmod(12), 0).members == bits(12, {0}));
    CHECK(principal_ideal(zmod(12), 1).members.full());
}

TEST_CASE("generated ideal joins its generators") {
    RingPtr r = zmod(12);
    CHECK(ideal_generated(r, {4, 6}).members == bits(12, {0, 2, 4, 6, 8, 10}));
    CHECK(ideal_generated(r, {}).members == bits(12, {0}));
}

TEST_CASE("full ideal lattice of a highly composite quotient") {
    RingPtr r = zmod(12);
    auto ideals = all_ideals(r);
    REQUIRE(ideals.size() == 6);
    std::vector<std::string> labels;
    for (const auto& i : ideals) labels.push_back(ideal_label(i));
    CHECK(labels == std::vector<std::string>{"(0)", "(6)", "(4)", "(3)", "(2)", "(1)"});
    CHECK(ideals[1].members == bits(12, {0, 6}));
    CHECK(ideals[2].members == bits(12, {0, 4, 8}));
}

TEST_CASE("ideal count of an integer quotient equals the divisor count") {
    for (unsigned n = 1; n <= 32; ++n)
        CHECK(all_ideals(zmod(n)).size() == divisor_count(n));
}

TEST_CASE("lattice operations on integer quotient ideals") {
    RingPtr r = zmod(12);
    Ideal two = principal_ideal(r, 2), three = principal_ideal(r, 3);
    Ideal four = principal_ideal(r, 4), six = principal_ideal(r, 6);
    CHECK(intersect(two, three).members == bits(12, {0, 6}));
    CHECK(sum(four, six) == two);
    CHECK(ideal_product(two, two) == four);
    CHECK(ideal_product(two, three) == six);
    CHECK_THROWS_AS(sum(two, principal_ideal(zmod(6), 2)), std::invalid_argument);
}

TEST_CASE("lattice is closed under sum, intersection, and product") {
    for (unsigned n : {8u, 12u, 16u}) {
        RingPtr r = zmod(n);
        auto ideals = all_ideals(r);
        std::set<Bitset, CanonicalLess> family;
        for (const auto& i : ideals) family.insert(i.members);
        for (const auto& i : ideals) {
            for (const auto& j : ideals) {
                Ideal s = sum(i, j), m = intersect(i, j), p = ideal_product(i, j);
                CHECK(family.count(s.members) == 1);
                CHECK(family.count(m.members) == 1);
                CHECK(family.count(p.members) == 1);
                CHECK(m.members.contains(p.members));
                CHECK(i.members.contains(m.members));
                CHECK(s.members.contains(i.members));
            }
        }
    }
}

TEST_CASE("lattice construction agrees with subset filtering") {
    std::vector<RingPtr> rings;
    for (unsigned n = 1; n <= 16; ++n) rings.push_back(zmod(n));
    rings.push_back(poly_quotient(2, {1, 1, 1}));
    rings.push_back(poly_quotient(2, {0, 0, 1}));
    rings.push_back(poly_quotient(2, {1, 1, 0, 1}));
    rings.push_back(poly_quotient(3, {2, 0, 1}));
    rings.push_back(product(zmod(2), zmod(2)));
    rings.push_back(product(zmod(2), zmod(6)));
    rings.push_back(product(zmod(4), zmod(4)));
    for (const RingPtr& r : rings) {
        auto got = all_ideals(r);
        auto want = ideals_by_subset_filter(*r);
        REQUIRE(got.size() == want.size());
        for (size_t k = 0; k < got.size(); ++k) CHECK(got[k].members == want[k]);
    }
}

TEST_CASE("membership set must absorb multiplication to be an ideal") {
    RingPtr r = zmod(4);
    CHECK(is_ideal(*r, bits(4, {0, 2})));
    CHECK(!is_ideal(*r, bits(4, {0, 1})));  // 1+1=2 escapes
    CHECK(!is_ideal(*r, bits(4, {1, 2})));  // missing zero
    CHECK(is_ideal(*r, Bitset::all(4)));
}

TEST_CASE("minimal generators prefer a single generator") {
    RingPtr r = zmod(12);
    CHECK(minimal_generators(principal_ideal(r, 2)) == std::vector<uint16_t>{2});
    CHECK(minimal_generators(zero_ideal(r)) == std::vector<uint16_t>{0});
    CHECK(minimal_generators(whole_ring_ideal(r)) == std::vector<uint16_t>{1});
    CHECK(ideal_label(ideal_generated(r, {4, 6})) == "(2)");
    CHECK(ideal_label(principal_ideal(zmod(8), 6)) == "(2)");
}

TEST_CASE("quotient by an ideal relabels cosets into a smaller ring") {
    RingPtr r = zmod(12);
    RingPtr q = quotient(r, bits(12, {0, 6}));
    CHECK(q->order == 6);
    CHECK(validate(*q).empty());
    CHECK(all_ideals(q).size() == 4);
    // Coset representatives are the smallest members, so arithmetic matches zmod(6).
    RingPtr z6 = zmod(6);
    for (uint16_t a = 0; a < 6; ++a)
        for (uint16_t b = 0; b < 6; ++b) {
            CHECK(q->add(a, b) == z6->add(a, b));
            CHECK(q->mul(a, b) == z6->mul(a, b));
        }
    CHECK_THROWS_AS(quotient(r, bits(12, {0, 1})), std::invalid_argument);
}

TEST_CASE("primality of ideals by the outside-pairs test") {
    RingPtr r = zmod(12);
    CHECK(is_prime(principal_ideal(r, 2)));
    CHECK(is_prime(principal_ideal(r, 3)));
    CHECK(!is_prime(principal_ideal(r, 4)));
    CHECK(!is_prime(principal_ideal(r, 6)));
    CHECK(!is_prime(zero_ideal(r)));
    CHECK(!is_prime(whole_ring_ideal(r)));  // proper ideals only
    CHECK(is_prime(zero_ideal(zmod(7))));
}

TEST_CASE("maximality agrees between the lattice and quotient-field routes") {
    RingPtr r = zmod(12);
    CHECK(is_maximal(principal_ideal(r, 2)));
    CHECK(is_maximal(principal_ideal(r, 3)));
    CHECK(!is_maximal(principal_ideal(r, 4)));
    CHECK(quotient_is_field(principal_ideal(r, 2)));
    CHECK(!quotient_is_field(principal_ideal(r, 4)));
    CHECK(is_maximal(zero_ideal(zmod(5))));
}

TEST_CASE("prime spectrum of an integer quotient") {
    auto primes = spec(zmod(12));
    REQUIRE(primes.size() == 2);
    CHECK(primes[0].members == bits(12, {0, 3, 6, 9}));
    CHECK(primes[1].members == bits(12, {0, 2, 4, 6, 8, 10}));
    CHECK(max_spec(zmod(12)).size() == 2);
    CHECK(spec(poly_quotient(2, {1, 1, 1})).size() == 1);
    CHECK(spec(zmod(1)).empty());
}

TEST_CASE("nilradical is the nilpotent set and the intersection of primes") {
    RingPtr r = poly_quotient(2, {0, 0, 1});
    CHECK(nilradical(r).members == bits(4, {0, 2}));
    CHECK(nilpotent_elements(*r) == bits(4, {0, 2}));
    CHECK(nilradical(zmod(12)).members == bits(12, {0, 6}));
    CHECK(nilradical(zmod(8)).members == bits(8, {0, 2, 4, 6}));
    CHECK(nilradical(zmod(6)).members == bits(6, {0}));
}

TEST_CASE("jacobson radical is the intersection of the maximal ideals") {
    CHECK(jacobson_radical(zmod(12)).members == bits(12, {0, 6}));
    CHECK(jacobson_radical(zmod(6)).members == bits(6, {0}));
    CHECK(jacobson_radical(zmod(4)).members == bits(4, {0, 2}));
    // No maximal ideals at all: the empty intersection is the whole ring.
    CHECK(jacobson_radical(zmod(1)).members.full());
}

TEST_CASE("krull dimension of a finite ring is zero when the spectrum is nonempty") {
    CHECK(krull_dimension(zmod(12)) == 0u);
    CHECK(krull_dimension(zmod(7)) == 0u);
    CHECK(krull_dimension(poly_quotient(2, {0, 0, 1})) == 0u);
    CHECK(!krull_dimension(zmod(1)).has_value());
}

TEST_CASE("intersection of the primes strictly above an ideal") {
    RingPtr r = zmod(12);
    CHECK(strict_over_intersection(r, principal_ideal(r, 4)).members ==
          bits(12, {0, 2, 4, 6, 8, 10}));
    // Nothing sits strictly above a maximal ideal: empty intersection, whole ring.
    CHECK(strict_over_intersection(r, principal_ideal(r, 2)).members.full());
    RingPtr s = poly_quotient(2, {0, 0, 1});
    CHECK(strict_over_intersection(s, zero_ideal(s)).members == bits(4, {0, 2}));
    CHECK_THROWS_AS(strict_over_intersection(r, zero_ideal(zmod(6))), std::invalid_argument);
}

TEST_CASE("exhaustive soberness test is vacuously positive on finite rings") {
    SoberVerdict v = is_sober_bruteforce(zmod(12));
    CHECK(v.value == Soberness::Sober);
    CHECK(v.note == "vacuous: every prime ideal is maximal");
    REQUIRE(v.evidence.size() == 2);
    CHECK(v.evidence[0].prime == "(3)");
    CHECK(v.evidence[0].maximal);
    CHECK(!v.evidence[0].equals_strict_intersection.has_value());
    CHECK(v.evidence[1].prime == "(2)");
    for (unsigned n = 1; n <= 24; ++n)
        CHECK(is_sober_bruteforce(zmod(n)).value == Soberness::Sober);
}

TEST_CASE("finite rings satisfy the intersection-of-maximals property") {
    for (unsigned n = 1; n <= 24; ++n) CHECK(is_jacobson_ring_bruteforce(zmod(n)));
    CHECK(is_jacobson_ring_bruteforce(product(zmod(4), zmod(9))));
}

TEST_CASE("prime poset of a zero-dimensional ring has no edges") {
    PrimePoset p = prime_poset(zmod(12));
    CHECK(p.primes.size() == 2);
    CHECK(p.strict_edges.empty());
    CHECK(poset_dot(p) ==
          "digraph prime_poset {\n"
          "  rankdir=BT;\n"
          "  p0 [label=\"(3)\"];\n"
          "  p1 [label=\"(2)\"];\n"
          "}\n");
}

TEST_CASE("poset rendering emits only covering edges") {
    // Synthetic chain (0) < (4) < (2) in zmod(8); the long edge (0) < (2)
    // must be dropped by transitive reduction.
    RingPtr r = zmod(8);
    PrimePoset p;
    p.primes = {zero_ideal(r), principal_ideal(r, 4), principal_ideal(r, 2)};
    p.strict_edges = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(poset_dot(p) ==
          "digraph prime_poset {\n"
          "  rankdir=BT;\n"
          "  p0 [label=\"(0)\"];\n"
          "  p1 [label=\"(4)\"];\n"
          "  p2 [label=\"(2)\"];\n"
          "  p0 -> p1;\n"
          "  p1 -> p2;\n"
          "}\n");
}

TEST_CASE("one-pass invariants bundle matches the individual routines") {
    RingPtr r = zmod(12);
    RingInvariants inv = analyze_ring(r);
    CHECK(inv.spec.size() == 2);
    CHECK(inv.max_spec.size() == 2);
    CHECK(inv.nilradical.members == bits(12, {0, 6}));
    CHECK(inv.jacobson_radical.members == bits(12, {0, 6}));
    CHECK(inv.krull_dim == 0u);
    CHECK(!inv.is_domain);
    CHECK(!inv.is_field);
    RingInvariants f = analyze_ring(zmod(7));
    CHECK(f.is_domain);
    CHECK(f.is_field);
    CHECK(f.spec.size() == 1);
}

TEST_CASE("spectrum space of an integer quotient is discrete") {
    FiniteSpace t = spec_space(zmod(12));
    CHECK(t.points == 2);
    REQUIRE(t.closed_sets.size() == 4);
    CHECK(t.closed_sets[0] == Bitset(2));
    CHECK(t.closed_sets[1] == bits(2, {0}));
    CHECK(t.closed_sets[2] == bits(2, {1}));
    CHECK(t.closed_sets[3] == Bitset::all(2));
    SoberSpaceResult res = check_sober_space(t);
    CHECK(res.sober);
    // Irreducibles are the two points; the doubleton splits as their union.
    REQUIRE(res.irreducibles.size() == 2);
    CHECK(res.irreducibles[0].generic_points == std::vector<unsigned>{0});
    CHECK(res.irreducibles[1].generic_points == std::vector<unsigned>{1});
}

TEST_CASE("one-point and local spectra are sober") {
    CHECK(is_sober_space(spec_space(zmod(7))));
    CHECK(is_sober_space(spec_space(zmod(8))));
    CHECK(is_sober_space(spec_space(zmod(1))));  // empty space, no irreducibles
    for (unsigned n = 1; n <= 24; ++n) CHECK(is_sober_space(spec_space(zmod(n))));
}

TEST_CASE("indiscrete doubleton fails soberness with two generic points") {
    FiniteSpace t{2, {Bitset(2), Bitset::all(2)}};
    SoberSpaceResult res = check_sober_space(t);
    CHECK(!res.sober);
    REQUIRE(res.irreducibles.size() == 1);
    CHECK(res.irreducibles[0].closed_set == Bitset::all(2));
    CHECK(res.irreducibles[0].generic_points == std::vector<unsigned>{0, 1});
}

TEST_CASE("two-point space with one closed point is sober") {
    FiniteSpace t{2, {Bitset(2), bits(2, {0}), Bitset::all(2)}};
    CHECK(is_sober_space(t));
}

TEST_CASE("closed-set family validation rejects structural gaps") {
    CHECK_THROWS_AS(check_sober_space(FiniteSpace{2, {Bitset::all(2)}}), std::invalid_argument);
    CHECK_THROWS_AS(check_sober_space(FiniteSpace{2, {Bitset(2)}}), std::invalid_argument);
    // Union of {0} and {1} is missing.
    CHECK_THROWS_AS(
        check_sober_space(FiniteSpace{3, {Bitset(3), bits(3, {0}), bits(3, {1}), Bitset::all(3)}}),
        std::invalid_argument);
}

TEST_CASE("polynomial arithmetic over small fields") {
    GaloisField f2(2);
    CHECK(poly_mul(f2, {1, 1}, {1, 1}) == Poly{1, 0, 1});  // (x+1)^2 = x^2+1
    CHECK(poly_add(f2, {1, 1}, {1, 1}) == Poly{});
    CHECK(poly_degree(Poly{}) == -1);
    CHECK(poly_degree(Poly{0, 1}) == 1);
    auto [q, rem] = poly_divmod(f2, {1, 0, 0, 1}, {1, 1});  // x^3+1 = (x+1)(x^2+x+1)
    CHECK(q == Poly{1, 1, 1});
    CHECK(rem == Poly{});
    CHECK(poly_divides(f2, {1, 1}, {1, 0, 0, 1}));
    CHECK(!poly_divides(f2, {0, 1}, {1, 0, 0, 1}));
    GaloisField f3(3);
    CHECK(poly_monic(f3, {2, 0, 2}) == Poly{1, 0, 1});
}

TEST_CASE("monic enumeration walks base-q digits below the leading term") {
    GaloisField f2(2);
    CHECK(monic_poly(f2, 2, 0) == Poly{0, 0, 1});
    CHECK(monic_poly(f2, 2, 1) == Poly{1, 0, 1});
    CHECK(monic_poly(f2, 2, 2) == Poly{0, 1, 1});
    CHECK(monic_poly(f2, 2, 3) == Poly{1, 1, 1});
    GaloisField f3(3);
    CHECK(monic_poly(f3, 1, 2) == Poly{2, 1});
}

TEST_CASE("irreducibility by trial division") {
    GaloisField f2(2);
    CHECK(poly_is_irreducible(f2, {1, 1, 1}));
    CHECK(!poly_is_irreducible(f2, {1, 0, 1}));  // (x+1)^2
    CHECK(!poly_is_irreducible(f2, {0, 0, 1}));  // x^2
    CHECK(poly_is_irreducible(f2, {1, 1, 0, 1}));
    CHECK(poly_is_irreducible(f2, {1, 0, 1, 1}));
    CHECK(!poly_is_irreducible(f2, {1, 1, 1, 1}));  // (x+1)(x^2+x+1)
    GaloisField f3(3);
    CHECK(poly_is_irreducible(f3, {1, 0, 1}));  // x^2+1 has no root mod 3
    CHECK(!poly_is_irreducible(f3, {2, 0, 1}));  // x^2+2 = (x+1)(x+2)
    CHECK_THROWS_AS(poly_is_irreducible(f2, {1}), std::invalid_argument);
}

TEST_CASE("polynomial rendering uses caret powers and explicit coefficients") {
    CHECK(poly_to_string({1, 1, 1}) == "x^2+x+1");
    CHECK(poly_to_string({0, 1}) == "x");
    CHECK(poly_to_string({}) == "0");
    CHECK(poly_to_string({5}) == "5");
    CHECK(poly_to_string({0, 0, 2}) == "2*x^2");
    CHECK(poly_to_string({2, 1, 0, 1}) == "x^3+x+2");
}

TEST_CASE("extension field built from the first irreducible of its degree") {
    GaloisField f4(4);
    CHECK(f4.size() == 4);
    CHECK(f4.characteristic() == 2);
    CHECK(f4.extension_degree() == 2);
    CHECK(f4.mul(2, 2) == 3);  // x*x = x+1 mod x^2+x+1
    GaloisField f8(8);
    CHECK(f8.mul(4, 2) == 3);  // x^2*x = x+1 mod x^3+x+1
    GaloisField f9(9);
    CHECK(f9.characteristic() == 3);
    // Every nonzero element must invert.
    for (uint16_t a = 1; a < 9; ++a) CHECK(f9.mul(a, f9.inv(a)) == 1);
    CHECK_THROWS_AS(GaloisField(6), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(512), CapExceeded);
}

TEST_CASE("primality and prime-power factoring of machine integers") {
    CHECK(!is_prime_u64(0));
    CHECK(!is_prime_u64(1));
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(!is_prime_u64(561));  // Carmichael number
    CHECK(is_prime_u64(97));
    CHECK(is_prime_u64((uint64_t{1} << 61) - 1));
    CHECK(!is_prime_u64(uint64_t{3215031751}));  // strong pseudoprime to small bases
    CHECK(next_prime_after(1) == 2);
    CHECK(next_prime_after(2) == 3);
    CHECK(next_prime_after(89) == 97);
    auto pp = prime_power_factor(8);
    REQUIRE(pp.has_value());
    CHECK(pp->first == 2);
    CHECK(pp->second == 3);
    CHECK(prime_power_factor(49) == std::make_pair(uint64_t{7}, 2u));
    CHECK(!prime_power_factor(12).has_value());
    CHECK(!prime_power_factor(1).has_value());
}
