#include "sober/descriptor.hpp"

#include <algorithm>

#include <json.hpp>

#include "sober/poly.hpp"
#include "sober/primes.hpp"

namespace sober {

using nlohmann::json;

bool operator==(const ProductDesc& a, const ProductDesc& b) { return a.factors == b.factors; }
bool operator==(const RingDescriptor& a, const RingDescriptor& b) { return a.node == b.node; }

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DescriptorError(msg); }

uint64_t require_uint(const json& j, const char* field) {
    if (!j.contains(field)) fail(std::string("descriptor field '") + field + "' is missing");
    const json& v = j.at(field);
    if (!v.is_number_unsigned()) fail(std::string("field '") + field + "' must be a non-negative integer");
    return v.get<uint64_t>();
}

RingDescriptor parse_node(const json& j) {
    if (!j.is_object()) fail("descriptor must be a JSON object");
    if (!j.contains("type")) fail("descriptor field 'type' is missing");
    if (!j.at("type").is_string()) fail("field 'type' must be a string");
    std::string type = j.at("type").get<std::string>();

    if (type == "Z") return {ZRing{}};

    if (type == "PolyRing") {
        uint64_t q = require_uint(j, "q");
        auto pf = prime_power_factor(q);
        if (!pf) fail("field 'q' must be a prime power >= 2");
        return {PolyRingOverFq{q, pf->first, pf->second}};
    }

    if (type == "ZLocalized") {
        if (!j.contains("primes")) fail("descriptor field 'primes' is missing");
        const json& arr = j.at("primes");
        if (!arr.is_array() || arr.empty()) fail("field 'primes' must be a nonempty array");
        std::vector<uint64_t> ps;
        for (const json& e : arr) {
            if (!e.is_number_unsigned()) fail("field 'primes' must contain non-negative integers");
            uint64_t p = e.get<uint64_t>();
            if (!is_prime_u64(p)) fail("field 'primes' contains " + std::to_string(p) + ", which is not prime");
            ps.push_back(p);
        }
        std::sort(ps.begin(), ps.end());
        if (std::adjacent_find(ps.begin(), ps.end()) != ps.end())
            fail("field 'primes' must contain distinct primes");
        return {ZLocalizedAt{std::move(ps)}};
    }

    if (type == "DVR") {
        if (!j.contains("label")) fail("descriptor field 'label' is missing");
        if (!j.at("label").is_string()) fail("field 'label' must be a string");
        return {Dvr{j.at("label").get<std::string>()}};
    }

    if (type == "Zmod") {
        uint64_t n = require_uint(j, "n");
        if (n == 0) fail("field 'n' must be >= 1");
        return {ZmodDesc{n}};
    }

    if (type == "PolyQuotient") {
        uint64_t p = require_uint(j, "p");
        if (!is_prime_u64(p)) fail("field 'p' must be prime");
        if (!j.contains("modulus")) fail("descriptor field 'modulus' is missing");
        const json& arr = j.at("modulus");
        if (!arr.is_array() || arr.size() < 2)
            fail("field 'modulus' must be an array of at least two coefficients (degree >= 1)");
        std::vector<uint16_t> coeffs;
        for (const json& e : arr) {
            if (!e.is_number_unsigned()) fail("field 'modulus' must contain non-negative integers");
            coeffs.push_back(static_cast<uint16_t>(e.get<uint64_t>() % p));
        }
        if (coeffs.back() == 0) fail("field 'modulus' has a zero leading coefficient mod p");
        return {PolyQuotientDesc{p, std::move(coeffs)}};
    }

    if (type == "Product") {
        if (!j.contains("factors")) fail("descriptor field 'factors' is missing");
        const json& arr = j.at("factors");
        if (!arr.is_array() || arr.empty()) fail("field 'factors' must be a nonempty array");
        ProductDesc prod;
        for (const json& e : arr) prod.factors.push_back(parse_node(e));
        return {std::move(prod)};
    }

    fail("unknown descriptor type '" + type + "'");
}

json node_to_json(const RingDescriptor& d) {
    return std::visit(
        [](const auto& node) -> json {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZRing>) {
                return json{{"type", "Z"}};
            } else if constexpr (std::is_same_v<T, PolyRingOverFq>) {
                return json{{"q", node.q}, {"type", "PolyRing"}};
            } else if constexpr (std::is_same_v<T, ZLocalizedAt>) {
                return json{{"primes", node.primes}, {"type", "ZLocalized"}};
            } else if constexpr (std::is_same_v<T, Dvr>) {
                return json{{"label", node.label}, {"type", "DVR"}};
            } else if constexpr (std::is_same_v<T, ZmodDesc>) {
                return json{{"n", node.n}, {"type", "Zmod"}};
            } else if constexpr (std::is_same_v<T, PolyQuotientDesc>) {
                return json{{"modulus", node.modulus}, {"p", node.p}, {"type", "PolyQuotient"}};
            } else {
                json factors = json::array();
                for (const RingDescriptor& f : node.factors) factors.push_back(node_to_json(f));
                return json{{"factors", std::move(factors)}, {"type", "Product"}};
            }
        },
        d.node);
}

}  // namespace

RingDescriptor parse_descriptor(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) fail("descriptor is not valid JSON");
    return parse_node(j);
}

std::string descriptor_to_json(const RingDescriptor& d) { return node_to_json(d).dump(); }

std::string descriptor_label(const RingDescriptor& d) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZRing>) {
                return "Z";
            } else if constexpr (std::is_same_v<T, PolyRingOverFq>) {
                return "F_" + std::to_string(node.q) + "[x]";
            } else if constexpr (std::is_same_v<T, ZLocalizedAt>) {
                std::string out = "Z localized at {";
                for (size_t i = 0; i < node.primes.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(node.primes[i]);
                }
                return out + "}";
            } else if constexpr (std::is_same_v<T, Dvr>) {
                return "DVR(" + node.label + ")";
            } else if constexpr (std::is_same_v<T, ZmodDesc>) {
                return "Z/" + std::to_string(node.n);
            } else if constexpr (std::is_same_v<T, PolyQuotientDesc>) {
                return "F_" + std::to_string(node.p) + "[x]/(" + poly_to_string(node.modulus) + ")";
            } else {
                std::string out;
                for (size_t i = 0; i < node.factors.size(); ++i) {
                    if (i) out += " x ";
                    out += descriptor_label(node.factors[i]);
                }
                return out;
            }
        },
        d.node);
}

bool is_finite_descriptor(const RingDescriptor& d) {
    return std::visit(
        [](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZmodDesc> || std::is_same_v<T, PolyQuotientDesc>) {
                return true;
            } else if constexpr (std::is_same_v<T, ProductDesc>) {
                for (const RingDescriptor& f : node.factors)
                    if (!is_finite_descriptor(f)) return false;
                return true;
            } else {
                return false;
            }
        },
        d.node);
}

RingPtr realize_finite(const RingDescriptor& d, unsigned cap) {
    if (!is_finite_descriptor(d))
        throw std::invalid_argument("realize_finite: descriptor '" + descriptor_label(d) +
                                    "' names an infinite ring");
    RingPtr built = std::visit(
        [&](const auto& node) -> RingPtr {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZmodDesc>) {
                return zmod(node.n, cap);
            } else if constexpr (std::is_same_v<T, PolyQuotientDesc>) {
                std::vector<uint64_t> mod(node.modulus.begin(), node.modulus.end());
                return poly_quotient(node.p, mod, cap);
            } else if constexpr (std::is_same_v<T, ProductDesc>) {
                RingPtr acc = realize_finite(node.factors[0], cap);
                for (size_t i = 1; i < node.factors.size(); ++i)
                    acc = product(acc, realize_finite(node.factors[i], cap), cap);
                return acc;
            } else {
                throw std::invalid_argument("realize_finite: unreachable");
            }
        },
        d.node);
    auto canon = std::make_shared<FiniteRing>(*built);
    canon->recipe = descriptor_to_json(d);
    return canon;
}

}  // namespace sober
