#include "pcdec/postproc.hpp"

#include <stdexcept>

namespace pcdec {

namespace {

std::vector<int> flagged(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
                         bool either) {
    std::vector<int> out;
    for (size_t i = 0; i < a.size(); ++i) {
        const bool hit = either ? (a[i] || b[i]) : b[i];
        if (hit) out.push_back(static_cast<int>(i));
    }
    return out;
}

DecodeReport rerun_with_cross_erasures(const ProductCode& pc, const StallContext& ctx,
                                       const std::vector<int>& rows,
                                       const std::vector<int>& cols, int max_iters,
                                       const char* id) {
    WordMatrix u = ctx.u;
    for (const int r : rows)
        for (const int c : cols) u.erase(r, c);
    DecodeReport rep = decode_iterative(pc, u, max_iters);
    rep.decoder_id = id;
    return rep;
}

}  // namespace

StallContext make_stall_context(const DecodeReport& report) {
    if (report.decoded || !report.trace || report.trace->rounds.empty())
        throw std::invalid_argument("make_stall_context: needs a failed iterative report");
    const auto& last = report.trace->rounds.back();
    StallContext ctx;
    ctx.u = report.word;
    ctx.rows_changed_or_failed = flagged(last.row_changed, last.row_failed, true);
    ctx.cols_changed_or_failed = flagged(last.col_changed, last.col_failed, true);
    ctx.rows_failed = flagged(last.row_changed, last.row_failed, false);
    ctx.cols_failed = flagged(last.col_changed, last.col_failed, false);
    return ctx;
}

DecodeReport pp_kreshchuk(const ProductCode& pc, const StallContext& ctx, int max_iters) {
    return rerun_with_cross_erasures(pc, ctx, ctx.rows_changed_or_failed,
                                     ctx.cols_changed_or_failed, max_iters, "pp-kreshchuk");
}

DecodeReport pp_condo_modified(const ProductCode& pc, const StallContext& ctx, int max_iters) {
    return rerun_with_cross_erasures(pc, ctx, ctx.rows_failed, ctx.cols_failed, max_iters,
                                     "pp-condo");
}

DecodeReport pp_emmadi(const ProductCode& pc, const StallContext& ctx, int max_iters) {
    WordMatrix u = ctx.u;
    for (const int r : ctx.rows_failed)
        for (int c = 0; c < u.cols(); ++c) u.erase(r, c);
    DecodeReport rep = run_iterative(pc, u, IterativeOptions{max_iters, /*erase_failed_lines=*/true});
    rep.decoder_id = "pp-emmadi";
    return rep;
}

DecodeReport pp_proposed(const ProductCode& pc, const StallContext& ctx) {
    DecodeReport rep = decode_gd(pc, ctx.u);
    rep.decoder_id = "pp-proposed";
    return rep;
}

DecodeReport run_postproc(PostProc pp, const ProductCode& pc, const StallContext& ctx,
                          int max_iters) {
    switch (pp) {
        case PostProc::kreshchuk: return pp_kreshchuk(pc, ctx, max_iters);
        case PostProc::condo_modified: return pp_condo_modified(pc, ctx, max_iters);
        case PostProc::emmadi: return pp_emmadi(pc, ctx, max_iters);
        case PostProc::proposed: return pp_proposed(pc, ctx);
    }
    throw std::logic_error("run_postproc: unknown technique");
}

DecodeReport decode_iterative_pp(const ProductCode& pc, const WordMatrix& r, PostProc pp,
                                 int max_iters) {
    DecodeReport it = decode_iterative(pc, r, max_iters);
    if (it.decoded) {
        it.decoder_id = "iterative+pp";
        return it;
    }
    const StallContext ctx = make_stall_context(it);
    DecodeReport rep = run_postproc(pp, pc, ctx, max_iters);
    rep.decoder_id = "iterative+pp";
    rep.pp_invoked = true;
    rep.iterations += it.iterations;
    rep.row_decoder_calls += it.row_decoder_calls;
    return rep;
}

const char* postproc_name(PostProc pp) {
    switch (pp) {
        case PostProc::kreshchuk: return "kreshchuk";
        case PostProc::condo_modified: return "condo";
        case PostProc::emmadi: return "emmadi";
        case PostProc::proposed: return "proposed";
    }
    return "?";
}

}  // namespace pcdec
