#include "sober/verdict.hpp"

#include "sober/poly.hpp"

namespace sober {

std::string to_string(Soberness v) {
    switch (v) {
        case Soberness::Sober: return "Sober";
        case Soberness::NotSober: return "NotSober";
        case Soberness::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::optional<Soberness> soberness_from_string(const std::string& s) {
    if (s == "Sober") return Soberness::Sober;
    if (s == "NotSober") return Soberness::NotSober;
    if (s == "Unknown") return Soberness::Unknown;
    return std::nullopt;
}

std::string literal_to_string(const Literal& l) {
    if (std::holds_alternative<uint64_t>(l)) return std::to_string(std::get<uint64_t>(l));
    return poly_to_string(std::get<std::vector<uint16_t>>(l));
}

}  // namespace sober
