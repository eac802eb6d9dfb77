#pragma once

#include <optional>
#include <vector>

#include "pcdec/gmd.hpp"
#include "pcdec/product.hpp"

namespace pcdec {

// Fixed-point iteration cap.  Convergence is observed within a handful of
// rounds; the cap only guards against miscorrection-induced oscillation.
inline constexpr int kDefaultMaxIters = 50;

enum class PostProc { kreshchuk, condo_modified, emmadi, proposed };

// Per-round line bookkeeping of the iterative decoder.  "changed" means the
// line decoder succeeded and corrected something (including filling
// erasures); "failed" means it rejected the line.
struct IterationTrace {
    struct Round {
        std::vector<std::uint8_t> col_changed, col_failed;  // size n'
        std::vector<std::uint8_t> row_changed, row_failed;  // size n
    };
    std::vector<Round> rounds;
    bool stalled = false;  // fixed point with flags set, or iteration cap hit
};

struct DecodeReport {
    bool decoded = false;
    WordMatrix word;  // decoded word on success, the decoder's final word on failure
    const char* decoder_id = "";
    bool pp_invoked = false;
    int iterations = 0;
    long row_decoder_calls = 0;
    std::optional<IterationTrace> trace;
};

struct IterativeOptions {
    int max_iters = kDefaultMaxIters;
    // Erase a whole line whenever its decode fails (the behavior the
    // erasure-marking post-processing runs with) instead of passing it
    // through unchanged.
    bool erase_failed_lines = false;
};

// Column pass then row pass per round until a round leaves the word
// untouched.  Success only when the final round saw no corrections and no
// failures; otherwise the report carries the stall word and the full trace.
DecodeReport run_iterative(const ProductCode& pc, const WordMatrix& r,
                           const IterativeOptions& opt);

DecodeReport decode_iterative(const ProductCode& pc, const WordMatrix& r,
                              int max_iters = kDefaultMaxIters);

// Column pass assigning reliability weights, then generalized minimum
// distance row decoding.  With carry enabled each row starts from the trial
// the previous row accepted, bounding the row decoder calls per word by
// n + m - 1.  Input must carry no erasures.
DecodeReport decode_gmd(const ProductCode& pc, const WordMatrix& r, bool carry = true);

// Same column phase, generalized distance row decoding: all viable trials,
// best metric wins, no acceptance gate.  Input must carry no erasures.
DecodeReport decode_gd(const ProductCode& pc, const WordMatrix& r);

// decode_gmd first; when it fails, the iterative decoder plus the given
// post-processing runs on the original received word.
DecodeReport decode_combined(const ProductCode& pc, const WordMatrix& r, PostProc pp,
                             int max_iters = kDefaultMaxIters);

inline ProductCode orientation_swap(const ProductCode& pc) { return pc.swapped(); }

}  // namespace pcdec
