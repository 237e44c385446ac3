#include "sober/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "sober/primes.hpp"
#include "sober/rules.hpp"
#include "sober/spectrum.hpp"
#include "sober/topology.hpp"
#include "sober/witnesses.hpp"

namespace sober {

using nlohmann::json;

namespace {

uint64_t descriptor_order(const RingDescriptor& d) {
    return std::visit(
        [](const auto& node) -> uint64_t {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZmodDesc>) {
                return node.n;
            } else if constexpr (std::is_same_v<T, PolyQuotientDesc>) {
                uint64_t order = 1;
                for (size_t i = 1; i < node.modulus.size(); ++i) {
                    if (order > UINT64_MAX / node.p) return UINT64_MAX;
                    order *= node.p;
                }
                return order;
            } else if constexpr (std::is_same_v<T, ProductDesc>) {
                uint64_t order = 1;
                for (const RingDescriptor& f : node.factors) {
                    uint64_t o = descriptor_order(f);
                    if (o != 0 && order > UINT64_MAX / o) return UINT64_MAX;
                    order *= o;
                }
                return order;
            } else {
                return UINT64_MAX;  // symbolic: infinite
            }
        },
        d.node);
}

std::vector<RingDescriptor> flatten_factors(const RingDescriptor& d) {
    if (const auto* p = std::get_if<ProductDesc>(&d.node)) return p->factors;
    return {d};
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

/// Planted single-entry table mutations, derived from valid rings. Cells are
/// chosen so each class is guaranteed detectable: off-diagonal cells break
/// commutativity outright; the diagonal multiplication cell preserves
/// commutativity and surfaces through associativity/distributivity instead.
std::vector<RingPtr> planted_defects(unsigned cap) {
    std::vector<RingPtr> out;
    for (const RingPtr& base : {zmod(6, cap), poly_quotient(2, {1, 1, 1}, cap)}) {
        auto bump = [&](uint16_t v) { return static_cast<uint16_t>((v + 1) % base->order); };
        out.push_back(mutate_table_entry(*base, false, 1, 2, bump(base->add(1, 2)),
                                         "planted:add-entry:" + base->recipe));
        out.push_back(mutate_table_entry(*base, true, 2, 3, bump(base->mul(2, 3)),
                                         "planted:mul-entry:" + base->recipe));
        out.push_back(mutate_table_entry(*base, true, 2, 2, bump(base->mul(2, 2)),
                                         "planted:assoc-entry:" + base->recipe));
    }
    return out;
}

std::string join_u16(const std::vector<uint16_t>& xs) {
    std::string out = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "}";
}

/// Direct transcription of the defining condition, deliberately sharing as
/// little code as possible with is_sober_bruteforce: maximality via the
/// quotient-field route, intersections via raw membership arrays.
bool sober_by_definition(const FiniteRing& r, const std::vector<Ideal>& primes) {
    for (const Ideal& p : primes) {
        if (quotient_is_field(p)) continue;  // maximal primes are exempt
        std::vector<char> inter(r.order, 1);
        for (const Ideal& q : primes) {
            bool subset = true, equal = true;
            for (unsigned x = 0; x < r.order; ++x) {
                bool in_p = p.members.test(x), in_q = q.members.test(x);
                if (in_p && !in_q) subset = false;
                if (in_p != in_q) equal = false;
            }
            if (!subset || equal) continue;
            for (unsigned x = 0; x < r.order; ++x)
                if (!q.members.test(x)) inter[x] = 0;
        }
        bool matches = true;
        for (unsigned x = 0; x < r.order; ++x)
            if (static_cast<bool>(inter[x]) != p.members.test(x)) {
                matches = false;
                break;
            }
        if (matches) return false;  // non-maximal prime equal to its strict-over intersection
    }
    return true;
}

/// Carry-less division check over F_2 for certificate re-verification,
/// independent of the polynomial routines (degrees must stay below 64).
bool gf2_divides(uint64_t g, uint64_t f) {
    if (g == 0) return f == 0;
    int dg = 63 - __builtin_clzll(g);
    while (f != 0) {
        int df = 63 - __builtin_clzll(f);
        if (df < dg) return false;
        f ^= g << (df - dg);
    }
    return true;
}

uint64_t poly_to_mask(const std::vector<uint16_t>& coeffs) {
    uint64_t m = 0;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i]) m |= uint64_t{1} << i;
    return m;
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(const CorpusConfig& cfg) {
    if (cfg.max_order > cfg.cap)
        throw CapExceeded("generate_corpus: max_order " + std::to_string(cfg.max_order) +
                          " exceeds the ring cap " + std::to_string(cfg.cap));
    for (uint64_t p : cfg.poly_primes)
        if (!is_prime_u64(p))
            throw std::invalid_argument("generate_corpus: poly_primes contains the composite " +
                                        std::to_string(p));

    std::vector<CorpusEntry> entries;
    std::set<std::string> seen;
    auto push = [&](RingDescriptor d) -> bool {
        if (descriptor_order(d) > cfg.max_order) return false;
        std::string recipe = descriptor_to_json(d);
        if (!seen.insert(recipe).second) return false;
        RingPtr r = realize_finite(d, cfg.cap);
        entries.push_back({std::move(d), std::move(r)});
        return true;
    };

    for (uint64_t n = 1; n <= cfg.zmod_max; ++n) push(RingDescriptor{ZmodDesc{n}});

    for (uint64_t p : cfg.poly_primes) {
        for (unsigned deg = 1; deg <= cfg.poly_max_degree; ++deg) {
            uint64_t span = 1;
            bool fits = true;
            for (unsigned i = 0; i < deg; ++i) {
                span *= p;
                if (span > cfg.max_order) {
                    fits = false;
                    break;
                }
            }
            if (!fits) break;
            for (uint64_t counter = 0; counter < span; ++counter) {
                std::vector<uint16_t> coeffs(deg + 1, 0);
                uint64_t c = counter;
                for (unsigned i = 0; i < deg; ++i) {
                    coeffs[i] = static_cast<uint16_t>(c % p);
                    c /= p;
                }
                coeffs[deg] = 1;
                push(RingDescriptor{PolyQuotientDesc{p, std::move(coeffs)}});
            }
        }
    }

    // Product rounds: pair the pool with itself, flattening factor lists and
    // sorting them canonically so A x B and B x A share one recipe.
    std::vector<RingDescriptor> pool;
    for (const CorpusEntry& e : entries) pool.push_back(e.desc);
    for (unsigned round = 0; round < cfg.product_depth; ++round) {
        std::vector<RingDescriptor> added;
        size_t pool_size = pool.size();
        for (size_t i = 0; i < pool_size; ++i) {
            for (size_t j = i; j < pool_size; ++j) {
                uint64_t oi = descriptor_order(pool[i]), oj = descriptor_order(pool[j]);
                if (oi > cfg.max_order / oj) continue;
                std::vector<RingDescriptor> factors = flatten_factors(pool[i]);
                for (RingDescriptor& f : flatten_factors(pool[j])) factors.push_back(std::move(f));
                std::sort(factors.begin(), factors.end(),
                          [](const RingDescriptor& a, const RingDescriptor& b) {
                              return descriptor_to_json(a) < descriptor_to_json(b);
                          });
                RingDescriptor d{ProductDesc{std::move(factors)}};
                if (push(d)) added.push_back(std::move(d));
            }
        }
        for (RingDescriptor& d : added) pool.push_back(std::move(d));
    }
    return entries;
}

CheckReport check_propositions(const std::vector<CorpusEntry>& corpus, const CorpusConfig& cfg) {
    CheckReport report;
    report.config = cfg;
    report.corpus_size = static_cast<unsigned>(corpus.size());

    auto run_check = [&](const std::string& name, const std::string& statement,
                         const std::string& note, auto&& body) {
        CheckResult res;
        res.name = name;
        res.statement = statement;
        res.note = note;
        Timer t;
        body(res);
        res.wall_ms = t.ms();
        report.checks.push_back(std::move(res));
    };

    run_check("axioms",
              "every corpus ring satisfies the commutative-ring-with-identity axioms over its "
              "full tables",
              cfg.include_planted_defects
                  ? "planted-defect mode: mutated tables are swept too and must fail"
                  : "",
              [&](CheckResult& res) {
                  auto sweep = [&](const RingPtr& r) {
                      ++res.rings_tested;
                      for (const AxiomViolation& v : validate(*r))
                          res.failures.push_back({r->recipe, v.axiom + " at " + join_u16(v.witness)});
                  };
                  for (const CorpusEntry& e : corpus) sweep(e.ring);
                  if (cfg.include_planted_defects) {
                      for (const RingPtr& r : planted_defects(cfg.cap)) {
                          size_t before = res.failures.size();
                          sweep(r);
                          if (res.failures.size() == before)
                              res.failures.push_back({r->recipe, "defect escaped the axiom sweep"});
                      }
                  }
              });

    run_check("zero-dim-sober", "every zero-dimensional ring is sober", "",
              [&](CheckResult& res) {
                  for (const CorpusEntry& e : corpus) {
                      ++res.rings_tested;
                      auto dim = krull_dimension(e.ring);
                      if (!dim || *dim != 0) continue;  // implication is vacuous otherwise
                      if (is_sober_bruteforce(e.ring).value != Soberness::Sober)
                          res.failures.push_back({e.ring->recipe, "dim 0 ring judged not sober"});
                  }
              });

    run_check("artinian-sober",
              "every Artinian ring is sober and zero-dimensional; finite rings are Artinian",
              "the zero ring reports its dimension as undefined (empty spectrum) and is "
              "checked for the Sober verdict only",
              [&](CheckResult& res) {
                  for (const CorpusEntry& e : corpus) {
                      ++res.rings_tested;
                      auto dim = krull_dimension(e.ring);
                      if (e.ring->order > 1 && (!dim || *dim != 0))
                          res.failures.push_back(
                              {e.ring->recipe,
                               "krull_dimension = " + (dim ? std::to_string(*dim) : "undefined")});
                      if (is_sober_bruteforce(e.ring).value != Soberness::Sober)
                          res.failures.push_back({e.ring->recipe, "verdict is not Sober"});
                  }
              });

    run_check("definition-direct",
              "the exhaustive sober verdict matches a direct transcription of the defining "
              "intersection condition",
              "", [&](CheckResult& res) {
                  for (const CorpusEntry& e : corpus) {
                      ++res.rings_tested;
                      bool brute = is_sober_bruteforce(e.ring).value == Soberness::Sober;
                      bool direct = sober_by_definition(*e.ring, spec(e.ring));
                      if (brute != direct)
                          res.failures.push_back(
                              {e.ring->recipe, std::string("bruteforce=") + (brute ? "Sober" : "NotSober") +
                                                   " direct=" + (direct ? "Sober" : "NotSober")});
                  }
              });

    run_check("radicals",
              "the Jacobson radical is the intersection of the maximal ideals; the nilradical "
              "is both the intersection of the primes and the set of nilpotents, and lies "
              "inside the Jacobson radical",
              "", [&](CheckResult& res) {
                  for (const CorpusEntry& e : corpus) {
                      ++res.rings_tested;
                      RingInvariants inv = analyze_ring(e.ring);
                      Bitset jac = Bitset::all(e.ring->order);
                      for (const Ideal& m : inv.max_spec) jac &= m.members;
                      if (inv.jacobson_radical.members != jac)
                          res.failures.push_back({e.ring->recipe, "jacobson radical mismatch"});
                      if (inv.nilradical.members != nilpotent_elements(*e.ring))
                          res.failures.push_back({e.ring->recipe, "nilradical != nilpotent set"});
                      if (!inv.jacobson_radical.members.contains(inv.nilradical.members))
                          res.failures.push_back(
                              {e.ring->recipe, "nilradical not inside the jacobson radical"});
                  }
              });

    run_check("jacobson-rings",
              "every prime ideal of a finite ring is an intersection of maximal ideals",
              "no tension with soberness: the non-soberness consequence of the Jacobson "
              "property needs Krull dimension at least one, and every corpus ring has "
              "dimension zero",
              [&](CheckResult& res) {
                  for (const CorpusEntry& e : corpus) {
                      ++res.rings_tested;
                      if (!is_jacobson_ring_bruteforce(e.ring))
                          res.failures.push_back({e.ring->recipe, "not a Jacobson ring"});
                  }
              });

    run_check("sober-spaces",
              "the prime spectrum with its vanishing-locus topology is a sober space",
              "includes a negative control: the indiscrete two-point space must be rejected",
              [&](CheckResult& res) {
                  for (const CorpusEntry& e : corpus) {
                      ++res.rings_tested;
                      if (!check_sober_space(spec_space(e.ring)).sober)
                          res.failures.push_back({e.ring->recipe, "spectrum space not sober"});
                  }
                  FiniteSpace indiscrete{2, {Bitset(2), Bitset::all(2)}};
                  SoberSpaceResult control = check_sober_space(indiscrete);
                  if (control.sober)
                      res.failures.push_back(
                          {"control:indiscrete-two-point", "accepted a space whose irreducible "
                                                           "closed set has two generic points"});
              });

    run_check("rule-agreement",
              "the guarded rule engine and the exhaustive test agree on every finite descriptor",
              "", [&](CheckResult& res) {
                  DecideOptions opts;
                  opts.cap = cfg.cap;
                  opts.certificate_samples = cfg.certificate_samples;
                  opts.certificate_seed = cfg.certificate_seed;
                  for (const CorpusEntry& e : corpus) {
                      ++res.rings_tested;
                      try {
                          SoberVerdict rules = decide_sober(e.desc, opts);
                          SoberVerdict brute = is_sober_bruteforce(e.ring);
                          if (rules.value != brute.value)
                              res.failures.push_back({e.ring->recipe,
                                                      "rules=" + to_string(rules.value) +
                                                          " brute=" + to_string(brute.value)});
                      } catch (const std::logic_error& err) {
                          res.failures.push_back({e.ring->recipe, err.what()});
                      }
                  }
              });

    run_check("certificates",
              "every non-soberness certificate pair verifies by exact division: the sample "
              "lies outside the maximal ideal generated by its excluder",
              "", [&](CheckResult& res) {
                  unsigned samples = std::max(10u, cfg.certificate_samples);

                  res.rings_tested++;
                  NonSoberCertificate zc =
                      non_sober_certificate(RingDescriptor{ZRing{}}, samples, cfg.certificate_seed);
                  if (zc.pairs.size() != samples)
                      res.failures.push_back({"{\"type\":\"Z\"}", "wrong pair count"});
                  for (const CertificatePair& pr : zc.pairs) {
                      uint64_t x = std::get<uint64_t>(pr.sample);
                      uint64_t g = std::get<uint64_t>(pr.excluder);
                      if (x == 0 || !is_prime_u64(g) || x % g == 0)
                          res.failures.push_back(
                              {"{\"type\":\"Z\"}", "pair (" + std::to_string(x) + ", " +
                                                       std::to_string(g) + ") fails division"});
                  }

                  res.rings_tested++;
                  RingDescriptor f2 = parse_descriptor("{\"type\":\"PolyRing\",\"q\":2}");
                  NonSoberCertificate pc = non_sober_certificate(f2, samples, cfg.certificate_seed);
                  if (pc.pairs.size() != samples)
                      res.failures.push_back({descriptor_to_json(f2), "wrong pair count"});
                  for (const CertificatePair& pr : pc.pairs) {
                      const auto& x = std::get<std::vector<uint16_t>>(pr.sample);
                      const auto& g = std::get<std::vector<uint16_t>>(pr.excluder);
                      if (x.size() >= 64 || g.size() >= 64) {
                          res.failures.push_back({descriptor_to_json(f2), "degree out of oracle range"});
                          continue;
                      }
                      uint64_t xm = poly_to_mask(x), gm = poly_to_mask(g);
                      if (xm == 0 || gm == 0 || gf2_divides(gm, xm))
                          res.failures.push_back(
                              {descriptor_to_json(f2), "pair (" + poly_to_string(x) + ", " +
                                                           poly_to_string(g) + ") fails division"});
                  }
              });

    report.all_passed = true;
    for (const CheckResult& c : report.checks)
        if (!c.passed()) report.all_passed = false;
    return report;
}

CheckReport run_verification(const CorpusConfig& cfg) {
    return check_propositions(generate_corpus(cfg), cfg);
}

std::string report_to_json(const CheckReport& report, bool include_timings) {
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
        json failures = json::array();
        for (const CheckFailure& f : c.failures)
            failures.push_back(json{{"recipe", f.recipe}, {"witness", f.witness}});
        json jc{{"failures", std::move(failures)},
                {"name", c.name},
                {"note", c.note},
                {"rings_tested", c.rings_tested},
                {"statement", c.statement}};
        if (include_timings && c.wall_ms) jc["wall_ms"] = *c.wall_ms;
        checks.push_back(std::move(jc));
    }
    json cfg{{"cap", report.config.cap},
             {"certificate_samples", report.config.certificate_samples},
             {"certificate_seed", report.config.certificate_seed},
             {"max_order", report.config.max_order},
             {"planted_defects", report.config.include_planted_defects},
             {"poly_max_degree", report.config.poly_max_degree},
             {"poly_primes", report.config.poly_primes},
             {"product_depth", report.config.product_depth},
             {"zmod_max", report.config.zmod_max}};
    json out{{"all_passed", report.all_passed},
             {"checks", std::move(checks)},
             {"config", std::move(cfg)},
             {"corpus_size", report.corpus_size},
             {"schema_version", 1}};
    return out.dump(2) + "\n";
}

CheckReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    CheckReport report;
    const json& c = j.at("config");
    report.config.cap = c.at("cap").get<unsigned>();
    report.config.certificate_samples = c.at("certificate_samples").get<unsigned>();
    report.config.certificate_seed = c.at("certificate_seed").get<uint64_t>();
    report.config.max_order = c.at("max_order").get<unsigned>();
    report.config.include_planted_defects = c.at("planted_defects").get<bool>();
    report.config.poly_max_degree = c.at("poly_max_degree").get<unsigned>();
    report.config.poly_primes = c.at("poly_primes").get<std::vector<uint64_t>>();
    report.config.product_depth = c.at("product_depth").get<unsigned>();
    report.config.zmod_max = c.at("zmod_max").get<unsigned>();
    report.corpus_size = j.at("corpus_size").get<unsigned>();
    report.all_passed = j.at("all_passed").get<bool>();
    for (const json& jc : j.at("checks")) {
        CheckResult res;
        res.name = jc.at("name").get<std::string>();
        res.statement = jc.at("statement").get<std::string>();
        res.note = jc.at("note").get<std::string>();
        res.rings_tested = jc.at("rings_tested").get<unsigned>();
        if (jc.contains("wall_ms")) res.wall_ms = jc.at("wall_ms").get<double>();
        for (const json& jf : jc.at("failures"))
            res.failures.push_back(
                {jf.at("recipe").get<std::string>(), jf.at("witness").get<std::string>()});
        report.checks.push_back(std::move(res));
    }
    return report;
}

std::string report_to_text(const CheckReport& report) {
    std::string out = "verification over " + std::to_string(report.corpus_size) +
                      " rings (orders <= " + std::to_string(report.config.max_order) + ")\n";
    for (const CheckResult& c : report.checks) {
        out += c.passed() ? "[PASS] " : "[FAIL] ";
        out += c.name;
        out += std::string(c.name.size() < 18 ? 18 - c.name.size() : 1, ' ');
        out += "rings=" + std::to_string(c.rings_tested);
        if (!c.passed()) out += " failures=" + std::to_string(c.failures.size());
        out += "  " + c.statement + "\n";
        if (!c.note.empty()) out += "       note: " + c.note + "\n";
        for (const CheckFailure& f : c.failures)
            out += "       - " + f.recipe + ": " + f.witness + "\n";
    }
    out += report.all_passed ? "result: all checks passed\n" : "result: checks FAILED\n";
    return out;
}

}  // namespace sober
