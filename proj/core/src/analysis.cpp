#include "sober/analysis.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "sober/ideal.hpp"
#include "sober/spectrum.hpp"

namespace sober {

using nlohmann::json;

namespace {

json opt_bool_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

std::optional<bool> opt_bool_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<bool>();
}

json opt_dim_json(const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); }

std::optional<unsigned> opt_dim_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<unsigned>();
}

json literal_json(const Literal& l) {
    if (const auto* n = std::get_if<uint64_t>(&l)) return json(*n);
    return json(std::get<std::vector<uint16_t>>(l));
}

Literal literal_from(const json& j) {
    if (j.is_array()) return j.get<std::vector<uint16_t>>();
    return j.get<uint64_t>();
}

json facts_json(const RingFacts& f) {
    return json{{"artinian", opt_bool_json(f.artinian)},
                {"dedekind", opt_bool_json(f.dedekind)},
                {"dim", opt_dim_json(f.dim)},
                {"domain", opt_bool_json(f.domain)},
                {"field", opt_bool_json(f.field)},
                {"jacobson_radical_zero", opt_bool_json(f.jacobson_radical_zero)},
                {"jacobson_ring", opt_bool_json(f.jacobson_ring)},
                {"pid", opt_bool_json(f.pid)},
                {"semilocal", opt_bool_json(f.semilocal)}};
}

RingFacts facts_from(const json& j) {
    RingFacts f;
    f.artinian = opt_bool_from(j.at("artinian"));
    f.dedekind = opt_bool_from(j.at("dedekind"));
    f.dim = opt_dim_from(j.at("dim"));
    f.domain = opt_bool_from(j.at("domain"));
    f.field = opt_bool_from(j.at("field"));
    f.jacobson_radical_zero = opt_bool_from(j.at("jacobson_radical_zero"));
    f.jacobson_ring = opt_bool_from(j.at("jacobson_ring"));
    f.pid = opt_bool_from(j.at("pid"));
    f.semilocal = opt_bool_from(j.at("semilocal"));
    return f;
}

json ideal_summary_json(const IdealSummary& s) {
    return json{{"label", s.label}, {"members", s.members}};
}

IdealSummary ideal_summary_from(const json& j) {
    return {j.at("label").get<std::string>(), j.at("members").get<std::vector<uint16_t>>()};
}

json verdict_json(const SoberVerdict& v) {
    json trace = json::array();
    for (const RuleTraceEntry& e : v.trace)
        trace.push_back(json{{"decisive", e.decisive},
                             {"detail", e.detail},
                             {"matched", e.matched},
                             {"rule", e.rule},
                             {"statement", e.statement}});
    json evidence = json::array();
    for (const PrimeEvidence& e : v.evidence) {
        json je{{"maximal", e.maximal}, {"members", e.members}, {"prime", e.prime}};
        je["equals_strict_intersection"] =
            e.equals_strict_intersection ? json(*e.equals_strict_intersection) : json(nullptr);
        evidence.push_back(std::move(je));
    }
    json cert(nullptr);
    if (v.certificate) {
        json pairs = json::array();
        for (const CertificatePair& p : v.certificate->pairs)
            pairs.push_back(
                json{{"excluder", literal_json(p.excluder)}, {"sample", literal_json(p.sample)}});
        cert = json{{"pairs", std::move(pairs)},
                    {"rule", v.certificate->rule},
                    {"witness_prime", v.certificate->witness_prime}};
    }
    return json{{"certificate", std::move(cert)},
                {"evidence", std::move(evidence)},
                {"note", v.note},
                {"trace", std::move(trace)},
                {"value", to_string(v.value)}};
}

SoberVerdict verdict_from(const json& j) {
    SoberVerdict v;
    auto value = soberness_from_string(j.at("value").get<std::string>());
    if (!value) throw std::invalid_argument("analysis_from_json: bad verdict value");
    v.value = *value;
    v.note = j.at("note").get<std::string>();
    for (const json& je : j.at("trace")) {
        RuleTraceEntry e;
        e.decisive = je.at("decisive").get<bool>();
        e.detail = je.at("detail").get<std::string>();
        e.matched = je.at("matched").get<bool>();
        e.rule = je.at("rule").get<std::string>();
        e.statement = je.at("statement").get<std::string>();
        v.trace.push_back(std::move(e));
    }
    for (const json& je : j.at("evidence")) {
        PrimeEvidence e;
        e.prime = je.at("prime").get<std::string>();
        e.members = je.at("members").get<std::vector<uint16_t>>();
        e.maximal = je.at("maximal").get<bool>();
        e.equals_strict_intersection = opt_bool_from(je.at("equals_strict_intersection"));
        v.evidence.push_back(std::move(e));
    }
    const json& jc = j.at("certificate");
    if (!jc.is_null()) {
        NonSoberCertificate c;
        c.witness_prime = jc.at("witness_prime").get<std::string>();
        c.rule = jc.at("rule").get<std::string>();
        for (const json& jp : jc.at("pairs"))
            c.pairs.push_back({literal_from(jp.at("sample")), literal_from(jp.at("excluder"))});
        v.certificate = std::move(c);
    }
    return v;
}

IdealSummary summarize(const Ideal& i) { return {ideal_label(i), i.members.elements()}; }

}  // namespace

AnalysisReport analyze_descriptor(const RingDescriptor& d, const AnalyzeOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    AnalysisReport rep;
    rep.descriptor = descriptor_to_json(d);
    rep.label = descriptor_label(d);
    rep.facts = classify(d, opts.cap);

    DecideOptions dopts;
    dopts.cap = opts.cap;
    dopts.certificate_samples = opts.certificate_samples;
    dopts.certificate_seed = opts.certificate_seed;
    rep.verdict = decide_sober(d, dopts);

    if (is_finite_descriptor(d)) {
        rep.kind = "finite";
        RingPtr r = realize_finite(d, opts.cap);
        RingInvariants inv = analyze_ring(r);
        InvariantSummary s;
        s.order = r->order;
        s.krull_dim = inv.krull_dim;
        for (const Ideal& i : inv.spec) s.spec.push_back(summarize(i));
        for (const Ideal& i : inv.max_spec) s.max_spec.push_back(summarize(i));
        s.nilradical = summarize(inv.nilradical);
        s.jacobson_radical = summarize(inv.jacobson_radical);
        s.is_domain = inv.is_domain;
        s.is_field = inv.is_field;
        s.ideal_count = static_cast<unsigned>(all_ideals(r, opts.cap).size());
        rep.invariants = std::move(s);
        if (opts.include_dot) rep.poset_dot = poset_dot(prime_poset(r));
    } else {
        rep.kind = "symbolic";
    }

    if (opts.include_timings)
        rep.total_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    return rep;
}

std::string analysis_to_json(const AnalysisReport& report) {
    json inv(nullptr);
    if (report.invariants) {
        const InvariantSummary& s = *report.invariants;
        json spec = json::array(), max_spec = json::array();
        for (const IdealSummary& i : s.spec) spec.push_back(ideal_summary_json(i));
        for (const IdealSummary& i : s.max_spec) max_spec.push_back(ideal_summary_json(i));
        inv = json{{"ideal_count", s.ideal_count},
                   {"is_domain", s.is_domain},
                   {"is_field", s.is_field},
                   {"jacobson_radical", ideal_summary_json(s.jacobson_radical)},
                   {"krull_dim", opt_dim_json(s.krull_dim)},
                   {"max_spec", std::move(max_spec)},
                   {"nilradical", ideal_summary_json(s.nilradical)},
                   {"order", s.order},
                   {"spec", std::move(spec)}};
    }
    json out{{"descriptor", json::parse(report.descriptor)},
             {"facts", facts_json(report.facts)},
             {"invariants", std::move(inv)},
             {"kind", report.kind},
             {"label", report.label},
             {"poset_dot", report.poset_dot ? json(*report.poset_dot) : json(nullptr)},
             {"schema_version", 1},
             {"verdict", verdict_json(report.verdict)}};
    if (report.total_ms) out["total_ms"] = *report.total_ms;
    return out.dump(2) + "\n";
}

AnalysisReport analysis_from_json(const std::string& text) {
    json j = json::parse(text);
    AnalysisReport rep;
    rep.descriptor = j.at("descriptor").dump();
    rep.label = j.at("label").get<std::string>();
    rep.kind = j.at("kind").get<std::string>();
    rep.facts = facts_from(j.at("facts"));
    const json& ji = j.at("invariants");
    if (!ji.is_null()) {
        InvariantSummary s;
        s.order = ji.at("order").get<unsigned>();
        s.krull_dim = opt_dim_from(ji.at("krull_dim"));
        for (const json& je : ji.at("spec")) s.spec.push_back(ideal_summary_from(je));
        for (const json& je : ji.at("max_spec")) s.max_spec.push_back(ideal_summary_from(je));
        s.nilradical = ideal_summary_from(ji.at("nilradical"));
        s.jacobson_radical = ideal_summary_from(ji.at("jacobson_radical"));
        s.is_domain = ji.at("is_domain").get<bool>();
        s.is_field = ji.at("is_field").get<bool>();
        s.ideal_count = ji.at("ideal_count").get<unsigned>();
        rep.invariants = std::move(s);
    }
    rep.verdict = verdict_from(j.at("verdict"));
    const json& jd = j.at("poset_dot");
    if (!jd.is_null()) rep.poset_dot = jd.get<std::string>();
    if (j.contains("total_ms")) rep.total_ms = j.at("total_ms").get<double>();
    return rep;
}

std::string analysis_to_text(const AnalysisReport& report) {
    auto tri = [](const std::optional<bool>& v) {
        return !v ? std::string("unknown") : (*v ? std::string("true") : std::string("false"));
    };
    std::string out;
    out += "ring: " + report.label + "\n";
    out += "descriptor: " + report.descriptor + "\n";
    out += "kind: " + report.kind + "\n";
    const RingFacts& f = report.facts;
    out += "facts: dim=" + (f.dim ? std::to_string(*f.dim) : std::string("undefined")) +
           " artinian=" + tri(f.artinian) + " semilocal=" + tri(f.semilocal) +
           " domain=" + tri(f.domain) + " field=" + tri(f.field) + " pid=" + tri(f.pid) +
           " dedekind=" + tri(f.dedekind) + " jacobson_radical_zero=" +
           tri(f.jacobson_radical_zero) + " jacobson_ring=" + tri(f.jacobson_ring) + "\n";
    if (report.invariants) {
        const InvariantSummary& s = *report.invariants;
        out += "order: " + std::to_string(s.order) + "\n";
        out += "ideal count: " + std::to_string(s.ideal_count) + "\n";
        out += "krull dimension: " +
               (s.krull_dim ? std::to_string(*s.krull_dim) : std::string("undefined")) + "\n";
        auto list = [&](const char* name, const std::vector<IdealSummary>& xs) {
            out += std::string(name) + ":";
            if (xs.empty()) out += " (none)";
            for (const IdealSummary& i : xs) out += " " + i.label;
            out += "\n";
        };
        list("spec", s.spec);
        list("max spec", s.max_spec);
        auto members = [](const IdealSummary& i) {
            std::string m = "{";
            for (size_t k = 0; k < i.members.size(); ++k)
                m += (k ? "," : "") + std::to_string(i.members[k]);
            return m + "}";
        };
        out += "nilradical: " + s.nilradical.label + " = " + members(s.nilradical) + "\n";
        out += "jacobson radical: " + s.jacobson_radical.label + " = " +
               members(s.jacobson_radical) + "\n";
        out += std::string("domain: ") + (s.is_domain ? "true" : "false") +
               "  field: " + (s.is_field ? "true" : "false") + "\n";
    }
    out += "verdict: " + to_string(report.verdict.value) + "\n";
    if (!report.verdict.note.empty()) out += "note: " + report.verdict.note + "\n";
    if (!report.verdict.trace.empty()) {
        out += "trace:\n";
        for (const RuleTraceEntry& e : report.verdict.trace) {
            out += std::string("  [") + (e.decisive ? "decisive" : (e.matched ? "matched" : "no match")) +
                   "] " + e.rule + ": " + e.statement;
            if (!e.detail.empty()) out += " (" + e.detail + ")";
            out += "\n";
        }
    }
    if (!report.verdict.evidence.empty()) {
        out += "evidence:\n";
        for (const PrimeEvidence& e : report.verdict.evidence) {
            out += "  " + e.prime + (e.maximal ? " maximal" : " non-maximal");
            if (e.equals_strict_intersection)
                out += *e.equals_strict_intersection ? ", equals the intersection above it"
                                                     : ", below the intersection above it";
            out += "\n";
        }
    }
    if (report.verdict.certificate) {
        const NonSoberCertificate& c = *report.verdict.certificate;
        out += "certificate: witness prime " + c.witness_prime + ", rule " + c.rule + "\n";
        for (const CertificatePair& p : c.pairs)
            out += "  sample " + literal_to_string(p.sample) + " excluded by " +
                   literal_to_string(p.excluder) + "\n";
    }
    if (report.total_ms) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3f", *report.total_ms);
        out += std::string("total ms: ") + buf + "\n";
    }
    if (report.poset_dot) out += "poset dot:\n" + *report.poset_dot;
    return out;
}

}  // namespace sober
