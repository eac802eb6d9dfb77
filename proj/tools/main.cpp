#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codespec.hpp"
#include "pcdec/sim.hpp"
#include "selftest.hpp"

namespace {

using namespace pcdec;

int default_threads() {
    if (const char* env = std::getenv("PCDEC_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

struct CsvOut {
    std::FILE* f = stdout;
    bool owned = false;

    ~CsvOut() {
        if (owned && f) std::fclose(f);
    }

    void open(const std::string& path) {
        if (path.empty() || path == "-") return;
        f = std::fopen(path.c_str(), "w");
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        owned = true;
    }

    void header() {
        std::fputs(
            "decoder,code,orientation,p,frames,frame_errors,failures,miscorrections,"
            "pp_invocations,fer,ser,gamma,fer_ci95\n",
            f);
        std::fflush(f);
    }

    // The code field carries commas, so it is the one quoted column.
    void row(const std::string& decoder, const std::string& code, Orientation orient,
             const PointStats& s) {
        std::fprintf(f, "%s,\"%s\",%s,%.10g,%ld,%ld,%ld,%ld,%ld,%.6e,%.6e,%.6e,%.6e\n",
                     decoder.c_str(), code.c_str(), orientation_name(orient), s.p, s.frames,
                     s.frame_errors, s.decode_failures, s.miscorrections, s.pp_invocations,
                     s.fer(), s.ser(), s.gamma(), s.fer_ci95());
        std::fflush(f);
    }
};

struct CommonFlags {
    std::string code_spec;
    std::vector<double> p_list;
    std::string p_range;  // "hi:lo:step", descending
    std::uint64_t seed = 1;
    long min_errors = 100;
    long max_frames = 10'000'000;
    std::string orientation = "column-first";
    int max_iters = kDefaultMaxIters;
    int threads = default_threads();
    std::string out_path;
};

void add_common_flags(CLI::App* cmd, CommonFlags& cf) {
    cmd->add_option("--code", cf.code_spec, "product code, e.g. rs(16,8,4)xrs(16,8,6)")
        ->required();
    cmd->add_option("--p-list", cf.p_list, "symbol error probabilities")->delimiter(',');
    cmd->add_option("--p-range", cf.p_range, "sweep hi:lo:step (linear, descending)");
    cmd->add_option("--seed", cf.seed, "RNG seed");
    cmd->add_option("--min-errors", cf.min_errors, "stop after this many frame errors");
    cmd->add_option("--max-frames", cf.max_frames, "hard frame cap per point");
    cmd->add_option("--orientation", cf.orientation, "column-first | row-first");
    cmd->add_option("--max-iters", cf.max_iters, "iterative decoder round cap");
    cmd->add_option("--threads", cf.threads, "worker threads (env PCDEC_THREADS)");
    cmd->add_option("--out", cf.out_path, "CSV output file (default stdout)");
}

std::vector<double> resolve_p_values(const CommonFlags& cf) {
    std::vector<double> ps = cf.p_list;
    if (!cf.p_range.empty()) {
        double hi = 0, lo = 0, step = 0;
        if (std::sscanf(cf.p_range.c_str(), "%lf:%lf:%lf", &hi, &lo, &step) != 3 || step <= 0 ||
            hi < lo)
            throw std::invalid_argument("bad --p-range, want hi:lo:step with hi >= lo, step > 0");
        for (double p = hi; p >= lo - 1e-12; p -= step) ps.push_back(p);
    }
    if (ps.empty()) throw std::invalid_argument("no p values given (--p-list or --p-range)");
    for (const double p : ps)
        if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("p values must lie in (0,1)");
    std::sort(ps.begin(), ps.end(), std::greater<double>());
    return ps;
}

SimConfig make_config(const CommonFlags& cf) {
    SimConfig cfg;
    cfg.orientation = parse_orientation(cf.orientation);
    cfg.stop = StopRule{cf.min_errors, cf.max_frames};
    cfg.seed = cf.seed;
    cfg.max_iters = cf.max_iters;
    cfg.threads = cf.threads;
    cfg.p_values = resolve_p_values(cf);
    return cfg;
}

int cmd_simulate(const CommonFlags& cf, const std::string& decoder, const std::string& pp) {
    const cli::CodeSpec cs = cli::parse_code_spec(cf.code_spec);
    const ProductCode pc = cli::build_product_code(cs);

    SimConfig cfg = make_config(cf);
    cfg.decoder = parse_decoder_spec(decoder);
    if (!pp.empty()) {
        // --pp turns the plain iterative decoder into iterative+pp and picks
        // the technique for itpp/combined.
        switch (cfg.decoder.kind) {
            case DecoderKind::iterative: cfg.decoder = parse_decoder_spec("itpp:" + pp); break;
            case DecoderKind::iterative_pp: cfg.decoder = parse_decoder_spec("itpp:" + pp); break;
            case DecoderKind::combined: cfg.decoder = parse_decoder_spec("combined:" + pp); break;
            default:
                throw std::invalid_argument("--pp does not apply to decoder '" + decoder + "'");
        }
    }

    CsvOut csv;
    csv.open(cf.out_path);
    csv.header();
    run_sweep(pc, cfg, [&](const PointStats& s) {
        csv.row(decoder_name(cfg.decoder), cs.canonical(), cfg.orientation, s);
    });
    return 0;
}

int cmd_compare(const CommonFlags& cf, const std::vector<std::string>& decoders, bool unpaired) {
    const cli::CodeSpec cs = cli::parse_code_spec(cf.code_spec);
    const ProductCode pc = cli::build_product_code(cs);

    SimConfig cfg = make_config(cf);
    std::vector<RunEntry> entries;
    for (const auto& d : decoders) entries.push_back({parse_decoder_spec(d), cfg.orientation});
    if (entries.empty()) throw std::invalid_argument("no decoders given");

    CsvOut csv;
    csv.open(cf.out_path);
    csv.header();
    for (const double p : cfg.p_values) {
        if (unpaired) {
            for (size_t i = 0; i < entries.size(); ++i) {
                SimConfig one = cfg;
                one.decoder = entries[i].decoder;
                one.seed = cfg.seed + 0x9E3779B9u * (i + 1);  // independent channels
                const PointStats s = run_point(pc, one, p);
                csv.row(decoder_name(entries[i].decoder), cs.canonical(), cfg.orientation, s);
            }
        } else {
            const auto stats =
                run_point_multi(pc, entries, p, cfg.stop, cfg.seed, cfg.max_iters, cfg.threads);
            for (size_t i = 0; i < entries.size(); ++i)
                csv.row(decoder_name(entries[i].decoder), cs.canonical(), cfg.orientation,
                        stats[i]);
        }
    }
    return 0;
}

int cmd_selftest(bool quick, int inject_fault) {
    const auto results = cli::run_selftest(quick, inject_fault);
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%s %s (%s)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"product-code decoding and frame-error-rate simulation"};
    app.require_subcommand(1);

    CommonFlags sim_flags;
    std::string sim_decoder = "iterative";
    std::string sim_pp;
    CLI::App* sim = app.add_subcommand("simulate", "Monte-Carlo FER sweep for one decoder");
    add_common_flags(sim, sim_flags);
    sim->add_option("--decoder", sim_decoder,
                    "iterative | gmd | gd | itpp[:PP] | combined[:PP] | PP name");
    sim->add_option("--pp", sim_pp, "post-processing: kreshchuk | emmadi | condo | proposed");

    CommonFlags cmp_flags;
    std::vector<std::string> cmp_decoders;
    bool unpaired = false;
    CLI::App* cmp = app.add_subcommand("compare", "paired multi-decoder comparison");
    add_common_flags(cmp, cmp_flags);
    cmp->add_option("--decoders", cmp_decoders, "comma list of decoder specs")
        ->delimiter(',')
        ->required();
    cmp->add_flag("--unpaired", unpaired, "independent channel draws per decoder");

    bool quick = false;
    int inject_fault = -1;
    CLI::App* st = app.add_subcommand("selftest", "run the brute-force property suite");
    st->add_flag("--quick", quick, "smaller sample sizes");
    st->add_option("--inject-fault", inject_fault)->group("");  // harness hook, hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sim_flags, sim_decoder, sim_pp);
        if (cmp->parsed()) return cmd_compare(cmp_flags, cmp_decoders, unpaired);
        if (st->parsed()) return cmd_selftest(quick, inject_fault);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
