#include "pcdec/decoders.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcdec/postproc.hpp"

namespace pcdec {

namespace {

// One line pass (all columns or all rows).  Returns true when the word state
// changed.  Flags record per-line decoder outcomes.
bool line_pass(const ProductCode& pc, WordMatrix& word, bool row_pass,
               bool erase_failed_lines, std::vector<std::uint8_t>& changed,
               std::vector<std::uint8_t>& failed, long* decode_calls) {
    const RsCode& code = row_pass ? pc.row_code() : pc.col_code();
    const int lines = row_pass ? word.rows() : word.cols();
    const int len = code.n();

    std::vector<gf_elem> line(len), out(len);
    std::vector<int> erasures;
    erasures.reserve(len);
    bool state_changed = false;

    for (int li = 0; li < lines; ++li) {
        erasures.clear();
        if (row_pass) {
            for (int c = 0; c < len; ++c) {
                line[c] = word.get(li, c);
                if (word.erased(li, c)) erasures.push_back(c);
            }
        } else {
            const auto col = word.column(li);
            std::copy(col.begin(), col.end(), line.begin());
            for (int r = 0; r < len; ++r)
                if (word.erased(r, li)) erasures.push_back(r);
        }

        if (decode_calls) ++*decode_calls;
        const auto res = code.decode(line, erasures, out);
        if (res) {
            const bool diff = !erasures.empty() || !std::equal(line.begin(), line.end(), out.begin());
            changed[li] = diff;
            if (diff) {
                state_changed = true;
                for (int i = 0; i < len; ++i) {
                    const int r = row_pass ? li : i;
                    const int c = row_pass ? i : li;
                    word.clear_erasure(r, c);
                    word.set(r, c, out[i]);
                }
            }
        } else {
            failed[li] = 1;
            if (erase_failed_lines && static_cast<int>(erasures.size()) < len) {
                state_changed = true;
                for (int i = 0; i < len; ++i)
                    word.erase(row_pass ? li : i, row_pass ? i : li);
            }
        }
    }
    return state_changed;
}

}  // namespace

DecodeReport run_iterative(const ProductCode& pc, const WordMatrix& r,
                           const IterativeOptions& opt) {
    if (opt.max_iters < 1) throw std::invalid_argument("run_iterative: max_iters < 1");
    if (r.rows() != pc.rows() || r.cols() != pc.cols())
        throw std::invalid_argument("run_iterative: word shape mismatch");

    DecodeReport rep;
    rep.decoder_id = "iterative";
    rep.word = r;
    rep.trace.emplace();

    for (int iter = 0; iter < opt.max_iters; ++iter) {
        auto& round = rep.trace->rounds.emplace_back();
        round.col_changed.assign(pc.cols(), 0);
        round.col_failed.assign(pc.cols(), 0);
        round.row_changed.assign(pc.rows(), 0);
        round.row_failed.assign(pc.rows(), 0);

        const WordMatrix before = rep.word;
        bool touched = line_pass(pc, rep.word, /*row_pass=*/false, opt.erase_failed_lines,
                                 round.col_changed, round.col_failed, nullptr);
        touched |= line_pass(pc, rep.word, /*row_pass=*/true, opt.erase_failed_lines,
                             round.row_changed, round.row_failed, &rep.row_decoder_calls);
        rep.iterations = iter + 1;

        const bool any_failed =
            std::count(round.col_failed.begin(), round.col_failed.end(), 1) ||
            std::count(round.row_failed.begin(), round.row_failed.end(), 1);

        if (!touched && !any_failed) {
            rep.decoded = true;
            rep.trace->stalled = false;
            return rep;
        }
        // The repeat test is on net change; a pass that corrects and a pass
        // that reverts within one round is a stall, not progress.
        if (rep.word == before) break;
    }
    rep.decoded = false;
    rep.trace->stalled = true;
    return rep;
}

DecodeReport decode_iterative(const ProductCode& pc, const WordMatrix& r, int max_iters) {
    return run_iterative(pc, r, IterativeOptions{max_iters, false});
}

namespace {

// Column phase shared by gmd and gd: decode every column without erasures,
// write back successes, and derive the reliability weights.
ReliabilityVector column_phase(const ProductCode& pc, WordMatrix& word) {
    const RsCode& col_code = pc.col_code();
    std::vector<int> nums(pc.cols(), 0);
    std::vector<gf_elem> out(col_code.n());
    for (int c = 0; c < pc.cols(); ++c) {
        const auto res = col_code.decode(word.column(c), {}, out);
        if (res) {
            std::copy(out.begin(), out.end(), word.column(c).begin());
            nums[c] = column_reliability(col_code.d(), true, res->errors);
        }
    }
    return {col_code.d(), std::move(nums)};
}

}  // namespace

DecodeReport decode_gmd(const ProductCode& pc, const WordMatrix& r, bool carry) {
    if (r.any_erased())
        throw std::invalid_argument("decode_gmd: erasure-carrying input not supported");

    DecodeReport rep;
    rep.decoder_id = "gmd";
    rep.word = r;
    rep.iterations = 1;

    const ReliabilityVector alpha = column_phase(pc, rep.word);
    const auto [sched, plan] = build_schedule(alpha, pc.row_code().d());

    std::vector<gf_elem> row(pc.cols());
    int start = plan.viable.front();
    for (int i = 0; i < pc.rows(); ++i) {
        for (int c = 0; c < pc.cols(); ++c) row[c] = rep.word.get(i, c);
        const auto res = gmd_row_decode(pc.row_code(), row, alpha, sched, plan,
                                        carry ? start : plan.viable.front(),
                                        &rep.row_decoder_calls);
        if (!res) return rep;  // rep.decoded stays false; word holds the working state
        for (int c = 0; c < pc.cols(); ++c) rep.word.set(i, c, res->codeword[c]);
        if (carry) start = res->used_j;
    }

    rep.decoded = pc.is_codeword(rep.word);
    return rep;
}

DecodeReport decode_gd(const ProductCode& pc, const WordMatrix& r) {
    if (r.any_erased())
        throw std::invalid_argument("decode_gd: erasure-carrying input not supported");

    DecodeReport rep;
    rep.decoder_id = "gd";
    rep.word = r;
    rep.iterations = 1;

    const ReliabilityVector alpha = column_phase(pc, rep.word);
    const auto [sched, plan] = build_schedule(alpha, pc.row_code().d());

    std::vector<gf_elem> row(pc.cols());
    for (int i = 0; i < pc.rows(); ++i) {
        for (int c = 0; c < pc.cols(); ++c) row[c] = rep.word.get(i, c);
        const auto res = gd_row_decode(pc.row_code(), row, alpha, sched, plan,
                                       &rep.row_decoder_calls);
        if (!res) return rep;
        for (int c = 0; c < pc.cols(); ++c) rep.word.set(i, c, (*res)[c]);
    }

    rep.decoded = pc.is_codeword(rep.word);
    return rep;
}

DecodeReport decode_combined(const ProductCode& pc, const WordMatrix& r, PostProc pp,
                             int max_iters) {
    DecodeReport first = decode_gmd(pc, r);
    if (first.decoded) {
        first.decoder_id = "combined";
        return first;
    }

    DecodeReport it = decode_iterative(pc, r, max_iters);
    if (it.decoded) {
        it.decoder_id = "combined";
        it.row_decoder_calls += first.row_decoder_calls;
        return it;
    }

    const StallContext ctx = make_stall_context(it);
    DecodeReport rep = run_postproc(pp, pc, ctx, max_iters);
    rep.decoder_id = "combined";
    rep.pp_invoked = true;
    rep.iterations += it.iterations;
    rep.row_decoder_calls += first.row_decoder_calls + it.row_decoder_calls;
    return rep;
}

}  // namespace pcdec
