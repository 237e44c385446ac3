#pragma once

#include <stdexcept>
#include <string>

namespace sober {

/// Hard ceiling on the order of any explicitly realized ring. Constructions
/// that would exceed the caller-supplied cap throw CapExceeded instead of
/// allocating.
inline constexpr unsigned kDefaultOrderCap = 256;

/// A construction or analysis would exceed the configured order cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Descriptor text that is not valid JSON or violates the descriptor grammar.
/// The message names the offending field.
class DescriptorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sober
