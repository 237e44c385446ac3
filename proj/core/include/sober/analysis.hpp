#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sober/descriptor.hpp"
#include "sober/facts.hpp"
#include "sober/rules.hpp"

namespace sober {

struct IdealSummary {
    std::string label;
    std::vector<uint16_t> members;

    friend bool operator==(const IdealSummary&, const IdealSummary&) = default;
};

/// Measured invariants of a realized finite ring.
struct InvariantSummary {
    unsigned order = 0;
    std::optional<unsigned> krull_dim;
    std::vector<IdealSummary> spec;
    std::vector<IdealSummary> max_spec;
    IdealSummary nilradical;
    IdealSummary jacobson_radical;
    bool is_domain = false;
    bool is_field = false;
    unsigned ideal_count = 0;

    friend bool operator==(const InvariantSummary&, const InvariantSummary&) = default;
};

/// Full analysis of one descriptor: facts, invariants where the ring is
/// finite, the soberness verdict with its rule trace, and optionally the
/// prime poset as DOT.
struct AnalysisReport {
    std::string descriptor;  // canonical descriptor JSON
    std::string label;
    std::string kind;  // "finite" or "symbolic"
    RingFacts facts;
    std::optional<InvariantSummary> invariants;
    SoberVerdict verdict;
    std::optional<std::string> poset_dot;
    std::optional<double> total_ms;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
    unsigned cap = kDefaultOrderCap;
    unsigned certificate_samples = 10;
    uint64_t certificate_seed = kDefaultCertificateSeed;
    bool include_dot = false;
    bool include_timings = true;
};

AnalysisReport analyze_descriptor(const RingDescriptor& d, const AnalyzeOptions& opts = {});

/// Reports round-trip losslessly through JSON, timings excepted: timings are
/// emitted only when present and never compared.
std::string analysis_to_json(const AnalysisReport& report);
AnalysisReport analysis_from_json(const std::string& text);
std::string analysis_to_text(const AnalysisReport& report);

}  // namespace sober
