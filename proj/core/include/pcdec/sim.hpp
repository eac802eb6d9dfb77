#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pcdec/postproc.hpp"

namespace pcdec {

enum class DecoderKind { iterative, gmd, gd, iterative_pp, combined };

struct DecoderSpec {
    DecoderKind kind = DecoderKind::iterative;
    PostProc pp = PostProc::proposed;  // used by iterative_pp and combined
};

// Accepted forms: iterative, gmd, gd, itpp[:PP], iterative+pp[:PP],
// combined[:PP], or a bare PP name (kreshchuk, emmadi, condo, proposed)
// meaning the iterative decoder with that post-processing.
DecoderSpec parse_decoder_spec(const std::string& s);
std::string decoder_name(const DecoderSpec& spec);

// column_first decodes the word as received; row_first decodes the
// transposed word with the component roles exchanged.
enum class Orientation { column_first, row_first };
const char* orientation_name(Orientation o);
Orientation parse_orientation(const std::string& s);

// Stop at min_frame_errors or at max_frames, whichever comes first.
// min_frame_errors <= 0 disables the error target (run to max_frames).
struct StopRule {
    long min_frame_errors = 100;
    long max_frames = 10'000'000;
};

struct SimConfig {
    DecoderSpec decoder;
    Orientation orientation = Orientation::column_first;
    StopRule stop;
    std::uint64_t seed = 1;
    int max_iters = kDefaultMaxIters;
    int threads = 1;
    std::vector<double> p_values;
};

struct PointStats {
    double p = 0;
    int symbols_per_frame = 0;
    long frames = 0;
    long frame_errors = 0;       // decode_failures + miscorrections
    long decode_failures = 0;    // decoder reported failure
    long miscorrections = 0;     // decoder returned the wrong codeword
    long pp_invocations = 0;
    long long symbol_errors = 0;

    double fer() const { return frames ? static_cast<double>(frame_errors) / frames : 0.0; }
    double ser() const {
        const double total = static_cast<double>(frames) * symbols_per_frame;
        return total > 0 ? static_cast<double>(symbol_errors) / total : 0.0;
    }
    double gamma() const { return frames ? static_cast<double>(pp_invocations) / frames : 0.0; }
    double fer_ci95() const;
};

// q-ary symmetric channel: each symbol independently replaced, with
// probability p, by a uniformly random different symbol.  Never erases.
void channel_apply(const GfTable& field, double p, WordMatrix& word, std::mt19937_64& rng);

// The per-frame generator: a fixed function of (seed, p, frame index), so a
// run is reproducible no matter how frames are distributed over workers.
std::mt19937_64 frame_rng(std::uint64_t seed, double p, std::uint64_t frame);

struct RunEntry {
    DecoderSpec decoder;
    Orientation orientation = Orientation::column_first;
};

// Paired Monte-Carlo estimation: every entry decodes the same channel
// realizations frame by frame.  Stops once every entry reached
// min_frame_errors or at max_frames, whichever first; all entries report the
// identical frame count.  Bit-identical results for fixed (code, entries,
// p, seed) regardless of `threads`.
std::vector<PointStats> run_point_multi(const ProductCode& pc,
                                        const std::vector<RunEntry>& entries, double p,
                                        const StopRule& stop, std::uint64_t seed,
                                        int max_iters, int threads);

PointStats run_point(const ProductCode& pc, const SimConfig& cfg, double p);

// Points in descending p order; on_row fires after each point so partial
// output can be flushed incrementally.
std::vector<PointStats> run_sweep(const ProductCode& pc, const SimConfig& cfg,
                                  const std::function<void(const PointStats&)>& on_row = {});

// Decode dispatch used by the simulator, exposed for tests.
DecodeReport dispatch_decode(const DecoderSpec& d, const ProductCode& pc,
                             const WordMatrix& r, int max_iters);

}  // namespace pcdec
