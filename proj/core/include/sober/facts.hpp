#pragma once

#include <optional>

#include "sober/descriptor.hpp"

namespace sober {

/// Tri-state ring-theoretic facts about a descriptor; unset means unknown.
/// Closure applied at construction: pid and not field implies dedekind.
struct RingFacts {
    std::optional<unsigned> dim;  // Krull dimension; unset for the zero ring or unknown
    std::optional<bool> artinian;
    std::optional<bool> semilocal;  // finitely many maximal ideals
    std::optional<bool> domain;
    std::optional<bool> field;
    std::optional<bool> pid;
    std::optional<bool> dedekind;
    std::optional<bool> jacobson_radical_zero;
    std::optional<bool> jacobson_ring;  // every prime is an intersection of maximals

    friend bool operator==(const RingFacts&, const RingFacts&) = default;
};

/// Facts for symbolic descriptors come from the construction; finite
/// descriptors are realized and measured. Mixed symbolic products are all
/// unknown.
RingFacts classify(const RingDescriptor& d, unsigned cap = kDefaultOrderCap);

}  // namespace sober
