#include "sober/rules.hpp"

#include <stdexcept>

#include "sober/spectrum.hpp"

namespace sober {

namespace {

struct GuardPart {
    std::string text;  // e.g. "Krull dimension 0"
    std::optional<bool> met;
};

struct RuleEval {
    RuleTraceEntry entry;
    Soberness verdict = Soberness::Unknown;
};

RuleEval eval_rule(const std::string& name, const std::string& statement, Soberness verdict,
                   const std::vector<GuardPart>& parts) {
    RuleEval ev;
    ev.verdict = verdict;
    ev.entry.rule = name;
    ev.entry.statement = statement;
    ev.entry.matched = true;
    std::string met_text, missed_text;
    for (const GuardPart& g : parts) {
        if (g.met && *g.met) {
            if (!met_text.empty()) met_text += ", ";
            met_text += g.text;
        } else {
            ev.entry.matched = false;
            if (!missed_text.empty()) missed_text += ", ";
            missed_text += g.text + (g.met ? " fails" : " unknown");
        }
    }
    ev.entry.detail = ev.entry.matched ? "facts: " + met_text : "needs: " + missed_text;
    return ev;
}

std::optional<bool> dim_is(const std::optional<unsigned>& dim, unsigned v) {
    if (!dim) return std::nullopt;
    return *dim == v;
}

std::optional<bool> dim_at_least(const std::optional<unsigned>& dim, unsigned v) {
    if (!dim) return std::nullopt;
    return *dim >= v;
}

}  // namespace

SoberVerdict decide_sober(const RingDescriptor& d, const DecideOptions& opts) {
    RingFacts f = classify(d, opts.cap);

    std::vector<RuleEval> evals;
    evals.push_back(eval_rule("zero-dimensional", "every zero-dimensional ring is sober",
                              Soberness::Sober, {{"Krull dimension 0", dim_is(f.dim, 0)}}));
    evals.push_back(eval_rule("artinian",
                              "every Artinian ring is sober (the descending chain condition "
                              "forces every prime ideal to be maximal)",
                              Soberness::Sober, {{"Artinian", f.artinian}}));
    evals.push_back(eval_rule(
        "semilocal-dim-1", "a semilocal domain of Krull dimension one is sober",
        Soberness::Sober,
        {{"semilocal (finitely many maximal ideals)", f.semilocal},
         {"Krull dimension 1", dim_is(f.dim, 1)},
         // Domain guard: the argument picks a nonzero element in each maximal
         // ideal and multiplies them, which needs nonzero products.
         {"integral domain", f.domain}}));
    evals.push_back(eval_rule(
        "dedekind-j-zero",
        "a Dedekind domain that is not a field with zero Jacobson radical is not sober (the "
        "zero ideal is a non-maximal prime equal to the intersection of all maximal ideals)",
        Soberness::NotSober,
        {{"Dedekind domain", f.dedekind},
         {"not a field", f.field ? std::optional<bool>(!*f.field) : std::nullopt},
         {"zero Jacobson radical", f.jacobson_radical_zero}}));
    evals.push_back(eval_rule(
        "pid-j-zero",
        "a principal ideal domain that is not a field with zero Jacobson radical is not sober "
        "(every such ring is a Dedekind domain)",
        Soberness::NotSober,
        {{"principal ideal domain", f.pid},
         {"not a field", f.field ? std::optional<bool>(!*f.field) : std::nullopt},
         {"zero Jacobson radical", f.jacobson_radical_zero}}));
    evals.push_back(eval_rule(
        "jacobson-dim-ge-1",
        "a Jacobson ring of Krull dimension at least one is not sober (a non-maximal prime "
        "is the intersection of the maximal ideals containing it)",
        Soberness::NotSober,
        {{"Jacobson ring", f.jacobson_ring},
         {"Krull dimension >= 1", dim_at_least(f.dim, 1)}}));

    SoberVerdict v;
    bool decided = false;
    for (RuleEval& ev : evals) {
        if (!ev.entry.matched) continue;
        if (!decided) {
            decided = true;
            v.value = ev.verdict;
            ev.entry.decisive = true;
        }
        v.trace.push_back(ev.entry);
    }
    if (!decided) {
        v.value = Soberness::Unknown;
        v.note = "no rule matched the known facts";
        for (RuleEval& ev : evals) v.trace.push_back(ev.entry);
    }

    if (is_finite_descriptor(d)) {
        SoberVerdict brute = is_sober_bruteforce(realize_finite(d, opts.cap));
        if (v.value != brute.value)
            throw std::logic_error(
                "rule engine disagrees with the exhaustive soberness test on a finite ring");
        v.evidence = std::move(brute.evidence);
        if (!brute.note.empty()) v.note = brute.note;
    }

    if (v.value == Soberness::NotSober && opts.attach_certificate &&
        (std::holds_alternative<ZRing>(d.node) || std::holds_alternative<PolyRingOverFq>(d.node)))
        v.certificate =
            non_sober_certificate(d, opts.certificate_samples, opts.certificate_seed);

    return v;
}

}  // namespace sober
