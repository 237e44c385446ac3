#include <doctest.h>

#include <set>

#include "sober/analysis.hpp"
#include "sober/verifier.hpp"

#include "support.hpp"

using namespace sober;

namespace {

CorpusConfig small_config() {
    CorpusConfig cfg;
    cfg.max_order = 24;
    cfg.zmod_max = 12;
    cfg.poly_primes = {2, 3};
    cfg.poly_max_degree = 2;
    return cfg;
}

}  // namespace

TEST_CASE("default corpus covers quotients, polynomial quotients, and products") {
    std::vector<CorpusEntry> corpus = generate_corpus(CorpusConfig{});
    CHECK(corpus.size() == 1416);

    std::set<std::string> recipes;
    unsigned zmods = 0, polys2 = 0, products = 0;
    for (const CorpusEntry& e : corpus) {
        CHECK(recipes.insert(e.ring->recipe).second);  // no duplicates
        CHECK(e.ring->order <= 64);
        CHECK(descriptor_to_json(e.desc) == e.ring->recipe);
        if (auto* z = std::get_if<ZmodDesc>(&e.desc.node)) {
            ++zmods;
            (void)z;
        } else if (auto* p = std::get_if<PolyQuotientDesc>(&e.desc.node)) {
            if (p->p == 2) ++polys2;
        } else if (auto* pr = std::get_if<ProductDesc>(&e.desc.node)) {
            ++products;
            CHECK(pr->factors.size() >= 2);
            std::string prev;
            for (const RingDescriptor& f : pr->factors) {
                // Factors stay flat and canonically sorted.
                CHECK(!std::holds_alternative<ProductDesc>(f.node));
                std::string cur = descriptor_to_json(f);
                CHECK(prev <= cur);
                prev = std::move(cur);
            }
        }
    }
    CHECK(zmods == 32);
    CHECK(polys2 == 2 + 4 + 8 + 16);  // every monic modulus per degree, reducible included
    CHECK(products > 0);

    // Reducible moduli are present by name.
    CHECK(recipes.count("{\"modulus\":[0,0,1],\"p\":2,\"type\":\"PolyQuotient\"}") == 1);
    CHECK(recipes.count("{\"modulus\":[1,1,1],\"p\":2,\"type\":\"PolyQuotient\"}") == 1);
    // Commuted factor order shares one canonical recipe.
    CHECK(recipes.count("{\"factors\":[{\"n\":2,\"type\":\"Zmod\"},{\"n\":3,\"type\":\"Zmod\"}],"
                        "\"type\":\"Product\"}") == 1);
    CHECK(recipes.count("{\"factors\":[{\"n\":3,\"type\":\"Zmod\"},{\"n\":2,\"type\":\"Zmod\"}],"
                        "\"type\":\"Product\"}") == 0);
}

TEST_CASE("corpus generation is deterministic") {
    std::vector<CorpusEntry> a = generate_corpus(small_config());
    std::vector<CorpusEntry> b = generate_corpus(small_config());
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].ring->recipe == b[i].ring->recipe);
}

TEST_CASE("corpus generation rejects impossible configurations") {
    CorpusConfig over;
    over.max_order = 300;  // beyond the table cap
    CHECK_THROWS_AS(generate_corpus(over), CapExceeded);
    CorpusConfig composite = small_config();
    composite.poly_primes = {4};
    CHECK_THROWS_AS(generate_corpus(composite), std::invalid_argument);
}

TEST_CASE("proposition checks pass on a small corpus") {
    CheckReport report = run_verification(small_config());
    CHECK(report.all_passed);
    REQUIRE(report.checks.size() == 9);
    std::vector<std::string> names;
    for (const CheckResult& c : report.checks) {
        names.push_back(c.name);
        CHECK(c.failures.empty());
        CHECK(c.wall_ms.has_value());
    }
    CHECK(names == std::vector<std::string>{"axioms", "zero-dim-sober", "artinian-sober",
                                            "definition-direct", "radicals", "jacobson-rings",
                                            "sober-spaces", "rule-agreement", "certificates"});
    for (size_t i = 0; i + 1 < report.checks.size(); ++i)
        CHECK(report.checks[i].rings_tested == report.corpus_size);
    CHECK(report.checks.back().rings_tested == 2);
}

TEST_CASE("planted defects are caught and fail the run") {
    CorpusConfig cfg = small_config();
    cfg.include_planted_defects = true;
    CheckReport report = run_verification(cfg);
    CHECK(!report.all_passed);
    const CheckResult& axioms = report.checks.front();
    REQUIRE(axioms.name == "axioms");
    CHECK(!axioms.failures.empty());
    unsigned add_entry = 0, mul_entry = 0, assoc_entry = 0;
    for (const CheckFailure& f : axioms.failures) {
        CHECK(f.recipe.rfind("planted:", 0) == 0);  // corpus rings stay clean
        if (f.recipe.rfind("planted:add-entry:", 0) == 0) ++add_entry;
        if (f.recipe.rfind("planted:mul-entry:", 0) == 0) ++mul_entry;
        if (f.recipe.rfind("planted:assoc-entry:", 0) == 0) ++assoc_entry;
    }
    CHECK(add_entry >= 2);    // both base rings
    CHECK(mul_entry >= 2);
    CHECK(assoc_entry >= 2);
    for (size_t i = 1; i < report.checks.size(); ++i) CHECK(report.checks[i].passed());
}

TEST_CASE("verification reports round-trip through JSON") {
    CheckReport report = run_verification(small_config());
    for (bool timings : {true, false}) {
        std::string text = report_to_json(report, timings);
        CheckReport parsed = report_from_json(text);
        CHECK(report_to_json(parsed, timings) == text);
        CHECK(parsed.all_passed == report.all_passed);
        CHECK(parsed.corpus_size == report.corpus_size);
        CHECK(parsed.config.max_order == report.config.max_order);
        CHECK(parsed.config.poly_primes == report.config.poly_primes);
        CHECK(parsed.checks.size() == report.checks.size());
        CHECK(parsed.checks[0].statement == report.checks[0].statement);
    }
    std::string masked = report_to_json(report, false);
    CHECK(masked.find("wall_ms") == std::string::npos);
}

TEST_CASE("masked reports are byte-identical across runs") {
    CheckReport a = run_verification(small_config());
    CheckReport b = run_verification(small_config());
    CHECK(report_to_json(a, false) == report_to_json(b, false));
    CHECK(report_to_text(a).find("[PASS] axioms") != std::string::npos);
    CHECK(report_to_text(a).find("result: all checks passed") != std::string::npos);
}

TEST_CASE("analysis of a finite ring collects invariants and a verdict") {
    AnalyzeOptions opts;
    opts.include_timings = false;
    AnalysisReport rep = analyze_descriptor(parse_descriptor("{\"type\":\"Zmod\",\"n\":12}"), opts);
    CHECK(rep.kind == "finite");
    CHECK(rep.label == "Z/12");
    CHECK(rep.descriptor == "{\"n\":12,\"type\":\"Zmod\"}");
    CHECK(rep.facts.dim == 0u);
    REQUIRE(rep.invariants.has_value());
    CHECK(rep.invariants->order == 12);
    CHECK(rep.invariants->ideal_count == 6);
    CHECK(rep.invariants->krull_dim == 0u);
    REQUIRE(rep.invariants->spec.size() == 2);
    CHECK(rep.invariants->spec[0].label == "(3)");
    CHECK(rep.invariants->spec[1].label == "(2)");
    CHECK(rep.invariants->jacobson_radical.members == std::vector<uint16_t>{0, 6});
    CHECK(rep.invariants->nilradical.members == std::vector<uint16_t>{0, 6});
    CHECK(!rep.invariants->is_domain);
    CHECK(rep.verdict.value == Soberness::Sober);
    CHECK(!rep.poset_dot.has_value());
    CHECK(!rep.total_ms.has_value());

    AnalysisReport parsed = analysis_from_json(analysis_to_json(rep));
    CHECK(parsed == rep);
}

TEST_CASE("analysis of a symbolic ring skips invariants and keeps the certificate") {
    AnalysisReport rep = analyze_descriptor(parse_descriptor("{\"type\":\"Z\"}"));
    CHECK(rep.kind == "symbolic");
    CHECK(!rep.invariants.has_value());
    CHECK(rep.verdict.value == Soberness::NotSober);
    REQUIRE(rep.verdict.certificate.has_value());
    CHECK(rep.verdict.certificate->pairs.size() == 10);
    CHECK(rep.total_ms.has_value());

    AnalysisReport parsed = analysis_from_json(analysis_to_json(rep));
    CHECK(parsed == rep);  // timings included: the JSON carries them exactly
}

TEST_CASE("analysis can embed the prime poset rendering") {
    AnalyzeOptions opts;
    opts.include_dot = true;
    opts.include_timings = false;
    AnalysisReport rep = analyze_descriptor(parse_descriptor("{\"type\":\"Zmod\",\"n\":8}"), opts);
    REQUIRE(rep.poset_dot.has_value());
    CHECK(rep.poset_dot->find("digraph prime_poset") == 0);
    CHECK(analysis_from_json(analysis_to_json(rep)) == rep);
}

TEST_CASE("analysis of an undecidable product is explicit about unknowns") {
    AnalyzeOptions opts;
    opts.include_timings = false;
    AnalysisReport rep = analyze_descriptor(
        parse_descriptor(
            "{\"type\":\"Product\",\"factors\":[{\"type\":\"Z\"},{\"type\":\"Zmod\",\"n\":4}]}"),
        opts);
    CHECK(rep.kind == "symbolic");
    CHECK(rep.verdict.value == Soberness::Unknown);
    CHECK(!rep.facts.artinian.has_value());
    CHECK(analysis_from_json(analysis_to_json(rep)) == rep);
}

TEST_CASE("analysis renders to readable text") {
    AnalyzeOptions opts;
    opts.include_timings = false;
    AnalysisReport rep = analyze_descriptor(parse_descriptor("{\"type\":\"Zmod\",\"n\":12}"), opts);
    std::string text = analysis_to_text(rep);
    CHECK(text.find("ring: Z/12") != std::string::npos);
    CHECK(text.find("krull dimension: 0") != std::string::npos);
    CHECK(text.find("jacobson radical: (6) = {0,6}") != std::string::npos);
    CHECK(text.find("verdict: Sober") != std::string::npos);
    CHECK(text.find("vacuous") != std::string::npos);

    std::string ztext = analysis_to_text(analyze_descriptor(parse_descriptor("{\"type\":\"Z\"}")));
    CHECK(ztext.find("verdict: NotSober") != std::string::npos);
    CHECK(ztext.find("principal ideal domain that is not a field") != std::string::npos);
    CHECK(ztext.find("sample 30 excluded by 7") != std::string::npos);
}
