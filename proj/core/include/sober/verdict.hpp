#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sober {

enum class Soberness { Sober, NotSober, Unknown };

std::string to_string(Soberness v);
std::optional<Soberness> soberness_from_string(const std::string& s);

/// Element literal of a symbolic ring: an integer, or a polynomial as
/// little-endian field-element indices.
using Literal = std::variant<uint64_t, std::vector<uint16_t>>;

std::string literal_to_string(const Literal& l);

/// One rule evaluation. `statement` is the general fact the rule encodes;
/// `detail` says how this descriptor met (or missed) the guard.
struct RuleTraceEntry {
    std::string rule;
    std::string statement;
    std::string detail;
    bool matched = false;
    bool decisive = false;

    friend bool operator==(const RuleTraceEntry&, const RuleTraceEntry&) = default;
};

/// sample lies outside the maximal ideal generated by excluder; verified by
/// exact division at construction time.
struct CertificatePair {
    Literal sample;
    Literal excluder;

    friend bool operator==(const CertificatePair&, const CertificatePair&) = default;
};

/// Constructive evidence that a ring is not sober: the witness prime is
/// non-maximal, yet every listed sample is excluded from some maximal ideal
/// above it, showing the intersection of the maximal ideals stays at zero.
struct NonSoberCertificate {
    std::string witness_prime;
    std::string rule;
    std::vector<CertificatePair> pairs;

    friend bool operator==(const NonSoberCertificate&, const NonSoberCertificate&) = default;
};

/// Per-prime record from the exhaustive finite check.
struct PrimeEvidence {
    std::string prime;
    std::vector<uint16_t> members;
    bool maximal = false;
    /// Set for non-maximal primes: whether the prime equals the intersection
    /// of the primes strictly containing it.
    std::optional<bool> equals_strict_intersection;

    friend bool operator==(const PrimeEvidence&, const PrimeEvidence&) = default;
};

struct SoberVerdict {
    Soberness value = Soberness::Unknown;
    std::string note;
    std::vector<RuleTraceEntry> trace;
    std::vector<PrimeEvidence> evidence;
    std::optional<NonSoberCertificate> certificate;

    friend bool operator==(const SoberVerdict&, const SoberVerdict&) = default;
};

}  // namespace sober
