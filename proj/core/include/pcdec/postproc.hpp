#pragma once

#include "pcdec/decoders.hpp"

namespace pcdec {

// Everything the stall-pattern post-processing techniques consume: the word
// the iterative decoder stalled on plus the line flags of its final round.
struct StallContext {
    WordMatrix u;
    std::vector<int> rows_changed_or_failed, cols_changed_or_failed;
    std::vector<int> rows_failed, cols_failed;
};

// Builds the context from a failed iterative report (trace required).
StallContext make_stall_context(const DecodeReport& report);

// Erase the cross product of changed-or-failed rows and columns in u, rerun
// the iterative decoder.
DecodeReport pp_kreshchuk(const ProductCode& pc, const StallContext& ctx,
                          int max_iters = kDefaultMaxIters);

// Same, but only rows and columns whose decode failed.
DecodeReport pp_condo_modified(const ProductCode& pc, const StallContext& ctx,
                               int max_iters = kDefaultMaxIters);

// Erase every failed row of u whole, then iterate with failed lines being
// erased as they are encountered.
DecodeReport pp_emmadi(const ProductCode& pc, const StallContext& ctx,
                       int max_iters = kDefaultMaxIters);

// Hand the stall word (not the channel word) to the gd decoder.
DecodeReport pp_proposed(const ProductCode& pc, const StallContext& ctx);

DecodeReport run_postproc(PostProc pp, const ProductCode& pc, const StallContext& ctx,
                          int max_iters = kDefaultMaxIters);

// The iterative decoder with one post-processing technique bolted on; the
// report's pp_invoked says whether the second stage ran.
DecodeReport decode_iterative_pp(const ProductCode& pc, const WordMatrix& r, PostProc pp,
                                 int max_iters = kDefaultMaxIters);

const char* postproc_name(PostProc pp);

}  // namespace pcdec
