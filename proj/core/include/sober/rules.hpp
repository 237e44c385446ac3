#pragma once

#include "sober/facts.hpp"
#include "sober/verdict.hpp"
#include "sober/witnesses.hpp"

namespace sober {

struct DecideOptions {
    unsigned cap = kDefaultOrderCap;
    unsigned certificate_samples = 10;
    uint64_t certificate_seed = kDefaultCertificateSeed;
    bool attach_certificate = true;
};

/// Decides soberness from classify(d) facts via a fixed-precedence rule list,
/// first match wins; the trace records every matching rule (or, when nothing
/// matches, every rule with the guard it missed). Finite descriptors are
/// additionally cross-checked against the exhaustive test, which also fills
/// the per-prime evidence; a disagreement throws logic_error. NotSober
/// verdicts for the integers or a polynomial ring attach a division-verified
/// certificate.
SoberVerdict decide_sober(const RingDescriptor& d, const DecideOptions& opts = {});

}  // namespace sober
