#include "pcdec/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace pcdec {

double PointStats::fer_ci95() const {
    if (frames <= 0) return 0.0;
    const double f = fer();
    return 1.96 * std::sqrt(f * (1.0 - f) / static_cast<double>(frames));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::mt19937_64 frame_rng(std::uint64_t seed, double p, std::uint64_t frame) {
    const std::uint64_t pk = splitmix64(std::bit_cast<std::uint64_t>(p));
    return std::mt19937_64(splitmix64(splitmix64(seed ^ pk) ^ frame));
}

void channel_apply(const GfTable& field, double p, WordMatrix& word, std::mt19937_64& rng) {
    const std::uint64_t q = field.q();
    for (int c = 0; c < word.cols(); ++c)
        for (int r = 0; r < word.rows(); ++r)
            if (uniform01(rng) < p) {
                const gf_elem off = static_cast<gf_elem>(1 + rng() % (q - 1));
                word.set(r, c, word.get(r, c) ^ off);
            }
}

DecodeReport dispatch_decode(const DecoderSpec& d, const ProductCode& pc,
                             const WordMatrix& r, int max_iters) {
    switch (d.kind) {
        case DecoderKind::iterative: return decode_iterative(pc, r, max_iters);
        case DecoderKind::gmd: return decode_gmd(pc, r);
        case DecoderKind::gd: return decode_gd(pc, r);
        case DecoderKind::iterative_pp: return decode_iterative_pp(pc, r, d.pp, max_iters);
        case DecoderKind::combined: return decode_combined(pc, r, d.pp, max_iters);
    }
    throw std::logic_error("dispatch_decode: unknown decoder");
}

namespace {

struct FrameOutcome {
    bool failure = false;
    bool miscorrection = false;
    bool pp_invoked = false;
    int symbol_errors = 0;
};

int hamming_symbols(const WordMatrix& a, const WordMatrix& b) {
    int w = 0;
    for (int c = 0; c < a.cols(); ++c)
        for (int r = 0; r < a.rows(); ++r)
            if (a.get(r, c) != b.get(r, c)) ++w;
    return w;
}

struct FrameData {
    WordMatrix tx, rx;
};

FrameData make_frame(const ProductCode& pc, double p, std::mt19937_64& rng) {
    const std::uint64_t mask = pc.field().q() - 1;
    std::vector<gf_elem> msg(pc.msg_rows() * pc.msg_cols());
    for (auto& s : msg) s = static_cast<gf_elem>(rng() & mask);
    FrameData f;
    f.tx = pc.encode(msg);
    f.rx = f.tx;
    channel_apply(pc.field(), p, f.rx, rng);
    return f;
}

FrameOutcome decode_entry(const ProductCode& pc, const ProductCode& pc_swapped,
                          const RunEntry& entry, const FrameData& frame, int max_iters) {
    FrameOutcome o;
    DecodeReport rep;
    if (entry.orientation == Orientation::column_first) {
        rep = dispatch_decode(entry.decoder, pc, frame.rx, max_iters);
        o.pp_invoked = rep.pp_invoked;
        if (rep.decoded) {
            o.symbol_errors = hamming_symbols(rep.word, frame.tx);
            o.miscorrection = o.symbol_errors != 0;
            return o;
        }
    } else {
        rep = dispatch_decode(entry.decoder, pc_swapped, transpose(frame.rx), max_iters);
        o.pp_invoked = rep.pp_invoked;
        if (rep.decoded) {
            const WordMatrix back = transpose(rep.word);
            o.symbol_errors = hamming_symbols(back, frame.tx);
            o.miscorrection = o.symbol_errors != 0;
            return o;
        }
    }
    o.failure = true;
    o.symbol_errors = hamming_symbols(frame.rx, frame.tx);
    return o;
}

}  // namespace

std::vector<PointStats> run_point_multi(const ProductCode& pc,
                                        const std::vector<RunEntry>& entries, double p,
                                        const StopRule& stop, std::uint64_t seed,
                                        int max_iters, int threads) {
    if (entries.empty()) throw std::invalid_argument("run_point_multi: no entries");
    if (stop.min_frame_errors <= 0 && stop.max_frames <= 0)
        throw std::invalid_argument("run_point_multi: stop rule must be positive");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("run_point_multi: p outside [0,1]");
    threads = std::max(1, threads);

    const ProductCode pc_swapped = pc.swapped();
    const int ne = static_cast<int>(entries.size());

    std::vector<PointStats> stats(ne);
    for (auto& s : stats) {
        s.p = p;
        s.symbols_per_frame = pc.rows() * pc.cols();
    }

    const long max_frames = stop.max_frames > 0 ? stop.max_frames : std::numeric_limits<long>::max();
    const long chunk = 256;
    long next_frame = 0;
    bool done = false;

    while (!done && next_frame < max_frames) {
        const long batch = std::min<long>(static_cast<long>(threads) * chunk,
                                          max_frames - next_frame);
        std::vector<FrameOutcome> outcomes(static_cast<size_t>(batch) * ne);

        auto worker = [&](long lo, long hi) {
            for (long f = lo; f < hi; ++f) {
                auto rng = frame_rng(seed, p, static_cast<std::uint64_t>(next_frame + f));
                const FrameData frame = make_frame(pc, p, rng);
                for (int e = 0; e < ne; ++e)
                    outcomes[static_cast<size_t>(f) * ne + e] =
                        decode_entry(pc, pc_swapped, entries[e], frame, max_iters);
            }
        };

        if (threads == 1 || batch < 2 * chunk) {
            worker(0, batch);
        } else {
            std::vector<std::thread> pool;
            const long per = (batch + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                const long lo = t * per, hi = std::min<long>(batch, lo + per);
                if (lo < hi) pool.emplace_back(worker, lo, hi);
            }
            for (auto& th : pool) th.join();
        }

        // Fold in frame order so the stop decision is thread-count agnostic.
        const bool use_err_stop = stop.min_frame_errors > 0;
        for (long f = 0; f < batch && !done; ++f) {
            bool all_reached = use_err_stop;
            for (int e = 0; e < ne; ++e) {
                const FrameOutcome& o = outcomes[static_cast<size_t>(f) * ne + e];
                PointStats& s = stats[e];
                ++s.frames;
                s.decode_failures += o.failure;
                s.miscorrections += o.miscorrection;
                s.frame_errors += o.failure || o.miscorrection;
                s.pp_invocations += o.pp_invoked;
                s.symbol_errors += o.symbol_errors;
                all_reached = all_reached && s.frame_errors >= stop.min_frame_errors;
            }
            if (all_reached || stats[0].frames >= max_frames) done = true;
        }
        next_frame = stats[0].frames;
    }
    return stats;
}

PointStats run_point(const ProductCode& pc, const SimConfig& cfg, double p) {
    const std::vector<RunEntry> entries{{cfg.decoder, cfg.orientation}};
    return run_point_multi(pc, entries, p, cfg.stop, cfg.seed, cfg.max_iters, cfg.threads)[0];
}

std::vector<PointStats> run_sweep(const ProductCode& pc, const SimConfig& cfg,
                                  const std::function<void(const PointStats&)>& on_row) {
    if (cfg.p_values.empty()) throw std::invalid_argument("run_sweep: no p values");
    std::vector<double> ps = cfg.p_values;
    std::sort(ps.begin(), ps.end(), std::greater<double>());
    std::vector<PointStats> rows;
    rows.reserve(ps.size());
    for (const double p : ps) {
        rows.push_back(run_point(pc, cfg, p));
        if (on_row) on_row(rows.back());
    }
    return rows;
}

namespace {

PostProc parse_pp(const std::string& s) {
    if (s == "kreshchuk") return PostProc::kreshchuk;
    if (s == "condo" || s == "mod-condo" || s == "condo-modified") return PostProc::condo_modified;
    if (s == "emmadi") return PostProc::emmadi;
    if (s == "proposed") return PostProc::proposed;
    throw std::invalid_argument("unknown post-processing technique: " + s);
}

}  // namespace

DecoderSpec parse_decoder_spec(const std::string& s) {
    const auto colon = s.find(':');
    const std::string head = colon == std::string::npos ? s : s.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : s.substr(colon + 1);

    DecoderSpec spec;
    if (head == "iterative" || head == "iter") {
        spec.kind = DecoderKind::iterative;
        if (!tail.empty()) throw std::invalid_argument("decoder takes no variant: " + s);
        return spec;
    }
    if (head == "gmd" || head == "gd") {
        spec.kind = head == "gmd" ? DecoderKind::gmd : DecoderKind::gd;
        if (!tail.empty()) throw std::invalid_argument("decoder takes no variant: " + s);
        return spec;
    }
    if (head == "itpp" || head == "iterative+pp") {
        spec.kind = DecoderKind::iterative_pp;
        if (!tail.empty()) spec.pp = parse_pp(tail);
        return spec;
    }
    if (head == "combined") {
        spec.kind = DecoderKind::combined;
        if (!tail.empty()) spec.pp = parse_pp(tail);
        return spec;
    }
    // Bare technique name = iterative decoder with that post-processing.
    spec.kind = DecoderKind::iterative_pp;
    spec.pp = parse_pp(s);
    return spec;
}

std::string decoder_name(const DecoderSpec& spec) {
    switch (spec.kind) {
        case DecoderKind::iterative: return "iterative";
        case DecoderKind::gmd: return "gmd";
        case DecoderKind::gd: return "gd";
        case DecoderKind::iterative_pp: return std::string("itpp:") + postproc_name(spec.pp);
        case DecoderKind::combined: return std::string("combined:") + postproc_name(spec.pp);
    }
    return "?";
}

const char* orientation_name(Orientation o) {
    return o == Orientation::column_first ? "column-first" : "row-first";
}

Orientation parse_orientation(const std::string& s) {
    if (s == "column-first" || s == "col" || s == "column") return Orientation::column_first;
    if (s == "row-first" || s == "row") return Orientation::row_first;
    throw std::invalid_argument("unknown orientation: " + s);
}

}  // namespace pcdec
