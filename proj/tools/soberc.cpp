#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sober/analysis.hpp"
#include "sober/spectrum.hpp"
#include "sober/verifier.hpp"
#include "sober/witnesses.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;

std::string members_of(const sober::Ideal& i) {
    std::string out = "{";
    bool first = true;
    for (uint16_t x : i.members.elements()) {
        if (!first) out += ",";
        out += std::to_string(x);
        first = false;
    }
    return out + "}";
}

std::string load_descriptor(const std::string& arg) {
    size_t first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return arg;
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw sober::DescriptorError("cannot read descriptor file: " + arg);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

int write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitBadInput;
    }
    out << content;
    return kExitOk;
}

int cmd_analyze(const std::string& descriptor, unsigned samples, uint64_t seed, bool dot,
                bool text, bool no_timings) {
    sober::RingDescriptor d = sober::parse_descriptor(descriptor);
    sober::AnalyzeOptions opts;
    opts.certificate_samples = samples;
    opts.certificate_seed = seed;
    opts.include_dot = dot;
    opts.include_timings = !no_timings;
    sober::AnalysisReport rep = sober::analyze_descriptor(d, opts);
    std::cout << (text ? sober::analysis_to_text(rep) : sober::analysis_to_json(rep));
    return kExitOk;
}

int cmd_sober(const std::string& descriptor, unsigned samples, uint64_t seed) {
    sober::RingDescriptor d = sober::parse_descriptor(descriptor);
    sober::DecideOptions opts;
    opts.certificate_samples = samples;
    opts.certificate_seed = seed;
    sober::SoberVerdict v = sober::decide_sober(d, opts);
    std::string rule;
    for (const sober::RuleTraceEntry& e : v.trace)
        if (e.decisive) rule = e.rule;
    std::cout << sober::to_string(v.value);
    if (!rule.empty()) std::cout << " (rule: " << rule << ")";
    std::cout << "\n";
    if (v.value == sober::Soberness::Unknown && !v.note.empty())
        std::cout << "note: " << v.note << "\n";
    if (v.certificate) {
        std::cout << "witness prime " << v.certificate->witness_prime << ", zero Jacobson radical shown by:\n";
        for (const sober::CertificatePair& p : v.certificate->pairs)
            std::cout << "  sample " << sober::literal_to_string(p.sample) << " excluded by "
                      << sober::literal_to_string(p.excluder) << "\n";
    }
    return kExitOk;
}

int cmd_spec(const std::string& descriptor, unsigned limit, const std::string& dot_path) {
    sober::RingDescriptor d = sober::parse_descriptor(descriptor);
    if (sober::is_finite_descriptor(d)) {
        sober::RingPtr r = sober::realize_finite(d);
        for (const sober::Ideal& p : sober::spec(r)) {
            std::cout << sober::ideal_label(p) << " = " << members_of(p);
            if (sober::is_maximal(p)) std::cout << " [maximal]";
            std::cout << "\n";
        }
        if (!dot_path.empty())
            return write_file(dot_path, sober::poset_dot(sober::prime_poset(r)));
        return kExitOk;
    }
    if (!dot_path.empty()) {
        std::cerr << "error: --dot needs a finite ring\n";
        return kExitBadInput;
    }
    for (const sober::Literal& g : sober::maximal_spectrum_prefix(d, limit))
        std::cout << sober::literal_to_string(g) << "\n";
    return kExitOk;
}

int cmd_verify(const sober::CorpusConfig& cfg, const std::string& report_path, bool json,
               bool no_timings) {
    sober::CheckReport report = sober::run_verification(cfg);
    if (!report_path.empty()) {
        int rc = write_file(report_path, sober::report_to_json(report, !no_timings));
        if (rc != kExitOk) return rc;
    }
    std::cout << (json ? sober::report_to_json(report, !no_timings)
                       : sober::report_to_text(report));
    return report.all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite and symbolic commutative ring analyzer"};
    app.require_subcommand(1);

    std::string descriptor;
    unsigned samples = 10;
    uint64_t seed = sober::kDefaultCertificateSeed;
    bool dot = false, text = false, no_timings = false, json = false;
    unsigned limit = 5;
    std::string dot_path, report_path;
    sober::CorpusConfig cfg;

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one ring descriptor");
    analyze->add_option("descriptor", descriptor, "descriptor file path, or inline JSON")->required();
    analyze->add_option("--samples", samples, "certificate sample count");
    analyze->add_option("--seed", seed, "certificate sampling seed");
    analyze->add_flag("--dot", dot, "include the prime poset as DOT");
    analyze->add_flag("--text", text, "human-readable text instead of JSON");
    analyze->add_flag("--no-timings", no_timings, "omit wall-clock timings");

    CLI::App* sober_cmd = app.add_subcommand("sober", "soberness verdict for one descriptor");
    sober_cmd->add_option("descriptor", descriptor, "descriptor file path, or inline JSON")->required();
    sober_cmd->add_option("--samples", samples, "certificate sample count");
    sober_cmd->add_option("--seed", seed, "certificate sampling seed");

    CLI::App* spec_cmd = app.add_subcommand("spec", "prime spectrum of one descriptor");
    spec_cmd->add_option("descriptor", descriptor, "descriptor file path, or inline JSON")->required();
    spec_cmd->add_option("--limit", limit, "maximal ideals to list for a symbolic ring");
    spec_cmd->add_option("--dot", dot_path, "write the prime poset as DOT to this file ('-' for stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the proposition checks over a generated corpus");
    verify->add_option("--max-order", cfg.max_order, "largest ring order in the corpus");
    verify->add_option("--zmod-max", cfg.zmod_max, "largest modulus for the integer quotients");
    verify->add_option("--poly-primes", cfg.poly_primes, "coefficient primes for polynomial quotients")
        ->delimiter(',');
    verify->add_option("--poly-max-degree", cfg.poly_max_degree, "largest modulus degree");
    verify->add_option("--product-depth", cfg.product_depth, "rounds of pairwise products");
    verify->add_flag("--plant-defects", cfg.include_planted_defects,
                     "mutate known-good tables and demand the checks catch them");
    verify->add_option("--samples", cfg.certificate_samples, "certificate sample count");
    verify->add_option("--seed", cfg.certificate_seed, "certificate sampling seed");
    verify->add_option("--report", report_path, "write the JSON report to this file");
    verify->add_flag("--json", json, "print the JSON report instead of text");
    verify->add_flag("--no-timings", no_timings, "omit wall-clock timings from the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*analyze) return cmd_analyze(load_descriptor(descriptor), samples, seed, dot, text, no_timings);
        if (*sober_cmd) return cmd_sober(load_descriptor(descriptor), samples, seed);
        if (*spec_cmd) return cmd_spec(load_descriptor(descriptor), limit, dot_path);
        if (*verify) return cmd_verify(cfg, report_path, json, no_timings);
    } catch (const sober::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const sober::DescriptorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitBadInput;
}
