#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sober/descriptor.hpp"
#include "sober/witnesses.hpp"

namespace sober {

struct CorpusConfig {
    unsigned max_order = 64;   // every corpus ring's order stays at or below this
    unsigned zmod_max = 32;    // Z/n for n = 1..zmod_max
    std::vector<uint64_t> poly_primes = {2, 3, 5};
    unsigned poly_max_degree = 4;  // all monic moduli per (p, degree), reducible included
    unsigned product_depth = 1;    // rounds of pairing the pool with itself
    bool include_planted_defects = false;
    unsigned certificate_samples = 10;
    uint64_t certificate_seed = kDefaultCertificateSeed;
    unsigned cap = kDefaultOrderCap;

    friend bool operator==(const CorpusConfig&, const CorpusConfig&) = default;
};

struct CorpusEntry {
    RingDescriptor desc;
    RingPtr ring;
};

/// Deterministic corpus: all Z/n in range, every monic modulus over each
/// listed prime up to the degree bound, then product rounds; deduplicated by
/// canonical recipe and filtered by max_order. Throws CapExceeded when
/// max_order passes cfg.cap and DescriptorError on a composite poly prime.
std::vector<CorpusEntry> generate_corpus(const CorpusConfig& cfg);

struct CheckFailure {
    std::string recipe;
    std::string witness;

    friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct CheckResult {
    std::string name;
    std::string statement;  // the general fact this check exercises
    std::string note;
    unsigned rings_tested = 0;
    std::vector<CheckFailure> failures;
    std::optional<double> wall_ms;

    bool passed() const { return failures.empty(); }

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct CheckReport {
    CorpusConfig config;
    unsigned corpus_size = 0;
    std::vector<CheckResult> checks;
    bool all_passed = false;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Runs the full battery over the corpus: table axioms (with planted defects
/// when configured), zero-dimensionality, vacuous soberness, the exhaustive
/// check against a direct transcription of the definition, radical identities,
/// the Jacobson property, spectrum-space soberness (with an always-on
/// indiscrete-space control), rule-engine agreement, and certificate
/// re-verification.
CheckReport check_propositions(const std::vector<CorpusEntry>& corpus, const CorpusConfig& cfg);

/// generate_corpus + check_propositions.
CheckReport run_verification(const CorpusConfig& cfg);

std::string report_to_json(const CheckReport& report, bool include_timings);
CheckReport report_from_json(const std::string& text);
std::string report_to_text(const CheckReport& report);

}  // namespace sober
