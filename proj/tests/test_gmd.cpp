#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "pcdec/decoders.hpp"
#include "pcdec/gmd.hpp"

using namespace pcdec;

namespace {

ProductCode pc_64() {
    const GfTable f16(4);
    return {RsCode(f16, 8, 4), RsCode(f16, 8, 6)};
}

// The column phase redone in test code: decode every column without
// erasures, recording weights and which columns went wrong.
struct ColumnPhase {
    WordMatrix xhat;
    std::vector<int> alpha_nums;
    int wrong_or_failed = 0;  // |I_E| relative to the transmitted word
};

ColumnPhase column_phase_oracle(const ProductCode& pc, const WordMatrix& rx,
                                const WordMatrix& tx) {
    ColumnPhase cp{rx, std::vector<int>(pc.cols(), 0), 0};
    const RsCode& cc = pc.col_code();
    std::vector<gf_elem> out(cc.n());
    for (int c = 0; c < pc.cols(); ++c) {
        const auto res = cc.decode(rx.column(c), {}, out);
        bool ok_vs_tx = false;
        if (res) {
            cp.alpha_nums[c] = column_reliability(cc.d(), true, res->errors);
            ok_vs_tx = std::equal(out.begin(), out.end(), tx.column(c).begin());
            for (int r = 0; r < pc.rows(); ++r) cp.xhat.set(r, c, out[r]);
        }
        if (!ok_vs_tx) ++cp.wrong_or_failed;
    }
    return cp;
}

std::vector<gf_elem> row_of(const WordMatrix& w, int r) {
    std::vector<gf_elem> out(w.cols());
    for (int c = 0; c < w.cols(); ++c) out[c] = w.get(r, c);
    return out;
}

}  // namespace

TEST_CASE("gmd: column reliability weights") {
    CHECK(column_reliability(5, true, 0) == 5);   // alpha = 1
    CHECK(column_reliability(5, true, 1) == 3);   // alpha = 3/5
    CHECK(column_reliability(5, true, 2) == 1);   // alpha = 1/5
    CHECK(column_reliability(5, true, 3) == 0);   // beyond t
    CHECK(column_reliability(5, false, 0) == 0);  // decoding failure
    CHECK(column_reliability(3, true, 1) == 1);
}

TEST_CASE("gmd: Forney metric") {
    const std::vector<gf_elem> r = {1, 2, 3, 4, 5, 6, 7, 8};
    ReliabilityVector ones(5, std::vector<int>(8, 5));

    auto m = forney_metric(r, r, ones);
    CHECK(m.num == 40);
    CHECK(m.den == 5);  // metric 8: all agree

    std::vector<gf_elem> c = r;
    for (auto& x : c) x ^= 9;
    m = forney_metric(r, c, ones);
    CHECK(m.num == -40);  // metric -8: all disagree

    // alpha = (1,1,1,3/5,3/5,1/5,0,0), disagreement exactly at the last three
    ReliabilityVector alpha(5, {5, 5, 5, 3, 3, 1, 0, 0});
    c = r;
    c[5] ^= 1;
    c[6] ^= 2;
    c[7] ^= 3;
    m = forney_metric(r, c, alpha);
    CHECK(m.num == 20);
    CHECK(m.den == 5);  // (1+1+1+3/5+3/5) - (1/5+0+0) = 4

    CHECK_THROWS_AS(ReliabilityVector(5, {6}), std::invalid_argument);
    CHECK_THROWS_AS(ReliabilityVector(5, {-1}), std::invalid_argument);
    CHECK_THROWS_AS(ReliabilityVector(5, {2}), std::invalid_argument);  // (5-2) odd
    CHECK_THROWS_AS(ReliabilityVector(5, {4}), std::invalid_argument);
}

TEST_CASE("gmd: acceptance is strictly greater-than") {
    CHECK(gmd_accepts({8, 1}, 8, 3));    // 8 > 5
    CHECK(!gmd_accepts({5, 1}, 8, 3));   // boundary
    CHECK(gmd_accepts({20, 5}, 8, 5));   // 4 > 3
    CHECK(!gmd_accepts({15, 5}, 8, 5));  // 3 > 3 fails
}

TEST_CASE("gmd: schedule classes and nesting") {
    // d = 5: attainable numerators {0,1,3,5}, J = 4.
    ReliabilityVector alpha(5, {0, 1, 3, 5, 5, 3, 1, 0});
    const auto [sched, plan] = build_schedule(alpha, 3);
    CHECK(sched.class_nums == std::vector<int>{0, 1, 3, 5});
    REQUIRE(sched.sets.size() == 4);
    CHECK(sched.sets[0] == std::vector<int>{0, 7});
    CHECK(sched.sets[1] == std::vector<int>{0, 1, 6, 7});
    CHECK(sched.sets[2] == std::vector<int>{0, 1, 2, 5, 6, 7});
    CHECK(sched.sets[3] == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
    for (size_t j = 1; j < sched.sets.size(); ++j)
        CHECK(std::includes(sched.sets[j].begin(), sched.sets[j].end(),
                            sched.sets[j - 1].begin(), sched.sets[j - 1].end()));
    // m = (min(5,3)+1)/2 = 2 caps the trials
    CHECK(plan.viable.size() <= 2);
    CHECK(plan.viable.front() == 1);
}

TEST_CASE("gmd: all-reliable word yields a single viable trial") {
    ReliabilityVector alpha(5, std::vector<int>(8, 5));
    const auto [sched, plan] = build_schedule(alpha, 5);
    CHECK(plan.viable == std::vector<int>{1});  // other classes are empty
}

TEST_CASE("gmd: parity rule skips the one-short erasure set") {
    // d = 5 classes [0,1,3,5]; sizes |E_1| = 1, |E_2| = 3, |E_3| = 4 with
    // d' = 5: d' - |E_2| = 2 even and |E_3| = |E_2| + 1, so trial 2 goes.
    ReliabilityVector alpha(5, {0, 1, 1, 3, 5, 5, 5, 5});
    const auto [sched, plan] = build_schedule(alpha, 5);
    CHECK(sched.sets[0].size() == 1);
    CHECK(sched.sets[1].size() == 3);
    CHECK(sched.sets[2].size() == 4);
    CHECK(plan.viable == std::vector<int>{1, 3});
}

TEST_CASE("gmd: row decode basics") {
    const auto pc = pc_64();
    const RsCode& row_code = pc.row_code();  // [8,6,3]
    std::mt19937_64 rng(43);

    // Error-free row with every column reliable decodes at the first trial.
    ReliabilityVector ones(5, std::vector<int>(8, 5));
    const auto [sched1, plan1] = build_schedule(ones, row_code.d());
    const auto cw = row_code.encode(oracle::random_message(row_code, rng));
    const auto res = gmd_row_decode(row_code, cw, ones, sched1, plan1, plan1.viable.front());
    REQUIRE(res);
    CHECK(res->codeword == cw);
    CHECK(res->used_j == plan1.viable.front());

    CHECK_THROWS_AS(gmd_row_decode(row_code, cw, ones, sched1, plan1, 99),
                    std::invalid_argument);

    const auto gd = gd_row_decode(row_code, cw, ones, sched1, plan1);
    REQUIRE(gd);
    CHECK(*gd == cw);  // clean row maximizes the metric at n'

}

TEST_CASE("gmd: gate rejection on a decodable trial, gd still answers") {
    // alpha: one failed column (0), the rest at 3/5.  A row agreeing with a
    // codeword everywhere but the failed column decodes at trial 1, yet its
    // metric 21/5 cannot beat n - d = 5.
    const auto pc = pc_64();
    const RsCode& row_code = pc.row_code();
    std::mt19937_64 rng(47);

    std::vector<int> nums(8, 3);
    nums[0] = 0;
    ReliabilityVector alpha(5, nums);
    const auto [sched, plan] = build_schedule(alpha, row_code.d());
    REQUIRE(plan.viable.front() == 1);
    REQUIRE(sched.sets[0] == std::vector<int>{0});

    const auto cw = row_code.encode(oracle::random_message(row_code, rng));
    auto row = cw;
    row[0] ^= oracle::rand_nonzero(rng, 16);

    long calls = 0;
    const auto gated = gmd_row_decode(row_code, row, alpha, sched, plan, 1, &calls);
    CHECK(!gated);

    const auto gd = gd_row_decode(row_code, row, alpha, sched, plan);
    REQUIRE(gd);
    CHECK(*gd == cw);
    // direct metric evaluation: agreement everywhere except the 0-weight column
    const auto metric = forney_metric(row, *gd, alpha);
    CHECK(metric.num == 21);
    CHECK(!gmd_accepts(metric, row_code.n(), row_code.d()));

    // No codeword at all satisfies the acceptance bound for this row.
    long satisfying = 0;
    oracle::for_each_codeword(row_code, [&](std::span<const gf_elem> c) {
        long long num = 0;
        for (int i = 0; i < 8; ++i) num += c[i] == row[i] ? nums[i] : -nums[i];
        if (num > static_cast<long long>(row_code.n() - row_code.d()) * 5) ++satisfying;
    });
    CHECK(satisfying == 0);
}

TEST_CASE("gmd: trial 1 fails, trial 2 decodes, gate still rejects") {
    const auto pc = pc_64();
    const RsCode& row_code = pc.row_code();  // d' = 3
    std::mt19937_64 rng(53);

    std::vector<int> nums(8, 3);
    nums[0] = 0;  // E_1 = {0}
    nums[1] = 1;  // E_2 = {0,1}
    ReliabilityVector alpha(5, nums);
    const auto [sched, plan] = build_schedule(alpha, row_code.d());
    REQUIRE(plan.viable == std::vector<int>{1, 2});

    // Corrupt a codeword at columns 0 and 1; find values where trial 1
    // genuinely fails (no miscorrection).
    for (int attempt = 0; attempt < 200; ++attempt) {
        const auto cw = row_code.encode(oracle::random_message(row_code, rng));
        auto row = cw;
        row[0] ^= oracle::rand_nonzero(rng, 16);
        row[1] ^= oracle::rand_nonzero(rng, 16);

        std::vector<gf_elem> out(8);
        if (row_code.decode(row, sched.sets[0], out)) continue;  // miscorrected; resample

        const auto gd = gd_row_decode(row_code, row, alpha, sched, plan);
        REQUIRE(gd);
        CHECK(*gd == cw);  // recovered via the second trial
        const auto metric = forney_metric(row, *gd, alpha);
        CHECK(!gmd_accepts(metric, row_code.n(), row_code.d()));
        CHECK(!gmd_row_decode(row_code, row, alpha, sched, plan, 1));
        return;
    }
    FAIL("no non-miscorrecting two-error instance found");
}

TEST_CASE("gmd: accepted rows come from the unique bound-beating codeword") {
    // Bounded-regime instances: after the column phase of a 2 w_D < d d'
    // pattern, every row must decode, and a full scan of the row code must
    // confirm the output as the only codeword beating the bound.
    const auto pc = pc_64();
    const RsCode& row_code = pc.row_code();
    std::mt19937_64 rng(59);

    for (int s = 0; s < 3; ++s) {
        const WordMatrix tx = pc.encode(oracle::random_product_message(pc, rng));
        WordMatrix rx = tx;
        oracle::add_pattern(rx, oracle::sample_wd_bounded(pc, rng));
        const ColumnPhase cp = column_phase_oracle(pc, rx, tx);

        ReliabilityVector alpha(pc.col_code().d(), cp.alpha_nums);
        const auto [sched, plan] = build_schedule(alpha, row_code.d());

        const int r = static_cast<int>(rng() % pc.rows());
        const auto row = row_of(cp.xhat, r);
        const auto res = gmd_row_decode(row_code, row, alpha, sched, plan, plan.viable.front());
        REQUIRE(res);
        CHECK(res->codeword == row_of(tx, r));

        long satisfying = 0;
        bool ours = false;
        oracle::for_each_codeword(row_code, [&](std::span<const gf_elem> c) {
            long long num = 0;
            for (int i = 0; i < 8; ++i)
                num += c[i] == row[i] ? cp.alpha_nums[i] : -cp.alpha_nums[i];
            if (num > static_cast<long long>(row_code.n() - row_code.d()) * alpha.den()) {
                ++satisfying;
                ours = ours || std::equal(c.begin(), c.end(), res->codeword.begin());
            }
        });
        CHECK(satisfying == 1);
        CHECK(ours);
    }
}

TEST_CASE("gmd: theorem 1 uniqueness on the tiny code") {
    const GfTable f4(2);
    const RsCode code(f4, 4, 2);
    const auto words = oracle::all_codewords(code);
    std::mt19937_64 rng(61);

    for (int s = 0; s < 10000; ++s) {
        gf_elem r[4];
        long long num[4];
        const long long den = 12;
        for (int i = 0; i < 4; ++i) {
            r[i] = static_cast<gf_elem>(rng() & 3);
            num[i] = static_cast<long long>(rng() % (den + 1));
        }
        int hits = 0;
        for (const auto& c : words) {
            long long metric = 0;
            for (int i = 0; i < 4; ++i) metric += c[i] == r[i] ? num[i] : -num[i];
            if (metric > (4 - 3) * den) ++hits;
        }
        CHECK(hits <= 1);
    }
}

TEST_CASE("gmd: theorem 3 erasure-growth soundness") {
    std::mt19937_64 rng(67);
    const GfTable f16(4);
    const RsCode codes[2] = {RsCode(f16, 8, 4), RsCode(f16, 8, 6)};

    long checked = 0;
    while (checked < 10000) {
        const RsCode& code = codes[rng() % 2];
        const int n = code.n(), d = code.d();

        auto r = code.encode(oracle::random_message(code, rng));
        const int noise = static_cast<int>(rng() % (code.t() + 2));
        for (int i = 0; i < noise; ++i) r[rng() % n] ^= oracle::rand_nonzero(rng, 16);

        std::vector<int> sizes;
        for (int s1 = 1; s1 < d; ++s1)
            if ((d - s1) % 2 == 0) sizes.push_back(s1);
        const auto pos = oracle::random_positions(n, sizes[rng() % sizes.size()] + 1, rng);
        std::vector<int> f1(pos.begin(), pos.end() - 1);
        const std::vector<int>& f2 = pos;

        std::vector<gf_elem> out1(n), out2(n);
        const auto res1 = code.decode(r, f1, out1);
        if (!res1) continue;
        ++checked;
        const auto res2 = code.decode(r, f2, out2);
        REQUIRE(res2);
        CHECK(out1 == out2);
    }
}

TEST_CASE("gmd: skipped trials never change a row outcome") {
    // [8,4,5] x [8,4,5]: all J-1 = 3 trials survive the cap, so any plan gap
    // comes from the empty-class and parity rules alone.  A no-skip decoder
    // over every j must agree with the planned one.
    const GfTable f16(4);
    const ProductCode pc(RsCode(f16, 8, 4), RsCode(f16, 8, 4));
    const RsCode& row_code = pc.row_code();
    std::mt19937_64 rng(71);

    long compared = 0, skips_seen = 0;
    for (int s = 0; s < 2000; ++s) {
        const WordMatrix tx = pc.encode(oracle::random_product_message(pc, rng));
        WordMatrix rx = tx;
        const int w = static_cast<int>(rng() % 14);
        for (int i = 0; i < w; ++i)
            rx.set(static_cast<int>(rng() % 8), static_cast<int>(rng() % 8),
                   rx.get(rng() % 8, rng() % 8) ^ oracle::rand_nonzero(rng, 16));
        const ColumnPhase cp = column_phase_oracle(pc, rx, tx);

        ReliabilityVector alpha(pc.col_code().d(), cp.alpha_nums);
        const auto [sched, plan] = build_schedule(alpha, row_code.d());
        const int num_classes = static_cast<int>(sched.sets.size());
        if (static_cast<int>(plan.viable.size()) < num_classes - 1) ++skips_seen;

        std::vector<gf_elem> out(8);
        for (int r = 0; r < pc.rows(); ++r) {
            const auto row = row_of(cp.xhat, r);

            // planned decode
            const auto planned =
                gmd_row_decode(row_code, row, alpha, sched, plan, plan.viable.front());

            // no-skip decode: every j in [J-1]
            std::optional<std::vector<gf_elem>> noskip;
            for (int j = 1; j <= num_classes - 1 && !noskip; ++j) {
                if (!row_code.decode(row, sched.sets[j - 1], out)) continue;
                if (gmd_accepts(forney_metric(row, out, alpha), row_code.n(), row_code.d()))
                    noskip = out;
            }

            ++compared;
            if (planned) {
                REQUIRE(noskip);
                CHECK(*noskip == planned->codeword);
            } else {
                CHECK(!noskip);
            }

            // gd against a no-skip gd: same candidate-by-metric outcome
            const auto gd = gd_row_decode(row_code, row, alpha, sched, plan);
            if (planned) {
                REQUIRE(gd);
                CHECK(*gd == planned->codeword);
            }
        }
    }
    CHECK(compared > 0);
    CHECK(skips_seen > 0);  // the rules actually fired somewhere
}

TEST_CASE("gmd: class-zero columns can always be pre-erased") {
    // Where 2 |I_E| < d', prepending a no-erasure trial never changes the
    // outcome of the planned decode that starts at E_1.
    const auto pc = pc_64();
    const RsCode& row_code = pc.row_code();
    std::mt19937_64 rng(73);

    long eligible = 0;
    for (int s = 0; s < 4000 && eligible < 500; ++s) {
        const WordMatrix tx = pc.encode(oracle::random_product_message(pc, rng));
        WordMatrix rx = tx;
        const int w = static_cast<int>(rng() % 10);
        for (int i = 0; i < w; ++i)
            rx.set(static_cast<int>(rng() % 8), static_cast<int>(rng() % 8),
                   rx.get(rng() % 8, rng() % 8) ^ oracle::rand_nonzero(rng, 16));
        const ColumnPhase cp = column_phase_oracle(pc, rx, tx);
        if (2 * cp.wrong_or_failed >= row_code.d()) continue;
        ++eligible;

        ReliabilityVector alpha(pc.col_code().d(), cp.alpha_nums);
        const auto [sched, plan] = build_schedule(alpha, row_code.d());

        std::vector<gf_elem> out(8);
        for (int r = 0; r < pc.rows(); ++r) {
            const auto row = row_of(cp.xhat, r);
            const auto planned =
                gmd_row_decode(row_code, row, alpha, sched, plan, plan.viable.front());

            // zero-trial first, then the plan
            std::optional<std::vector<gf_elem>> with_zero;
            if (row_code.decode(row, {}, out) &&
                gmd_accepts(forney_metric(row, out, alpha), row_code.n(), row_code.d()))
                with_zero = out;
            if (!with_zero && planned) with_zero = planned->codeword;

            if (planned) {
                REQUIRE(with_zero);
                CHECK(*with_zero == planned->codeword);
            } else {
                CHECK(!with_zero);
            }
        }
    }
    CHECK(eligible >= 500);
}

TEST_CASE("gmd: carry and trial budget over whole words") {
    const GfTable f16(4);
    const ProductCode pc(RsCode(f16, 8, 4), RsCode(f16, 8, 4));  // n=8, m=3
    const long budget = 8 + 3 - 1;
    std::mt19937_64 rng(79);

    for (int s = 0; s < 500; ++s) {
        const WordMatrix tx = pc.encode(oracle::random_product_message(pc, rng));
        WordMatrix rx = tx;
        oracle::add_pattern(rx, oracle::sample_wd_bounded(pc, rng));

        const DecodeReport with_carry = decode_gmd(pc, rx, true);
        const DecodeReport without = decode_gmd(pc, rx, false);
        REQUIRE(with_carry.decoded);
        REQUIRE(without.decoded);
        CHECK(with_carry.word == tx);
        CHECK(without.word == tx);
        CHECK(with_carry.row_decoder_calls <= budget);
        CHECK(without.row_decoder_calls >= with_carry.row_decoder_calls);
    }

    // random (possibly undecodable) frames still respect the budget
    for (int s = 0; s < 2000; ++s) {
        const WordMatrix tx = pc.encode(oracle::random_product_message(pc, rng));
        WordMatrix rx = tx;
        const int w = static_cast<int>(rng() % 20);
        for (int i = 0; i < w; ++i)
            rx.set(static_cast<int>(rng() % 8), static_cast<int>(rng() % 8),
                   rx.get(rng() % 8, rng() % 8) ^ oracle::rand_nonzero(rng, 16));
        const DecodeReport rep = decode_gmd(pc, rx, true);
        CHECK(rep.row_decoder_calls <= budget);
    }
}

TEST_CASE("gmd: even-distance component codes") {
    // [8,5,4] over GF(16): d = 4, t = 1, attainable numerators {0, 2, 4},
    // m = (4+1)/2 = 2 trials.
    const GfTable f16(4);
    const ProductCode pc(RsCode(f16, 8, 5), RsCode(f16, 8, 5));
    CHECK(pc.min_distance() == 16);
    CHECK(column_reliability(4, true, 0) == 4);
    CHECK(column_reliability(4, true, 1) == 2);
    CHECK(column_reliability(4, true, 2) == 0);  // beyond t
    CHECK_THROWS_AS(ReliabilityVector(4, {1}), std::invalid_argument);

    ReliabilityVector alpha(4, {0, 2, 4, 4, 4, 4, 4, 2});
    const auto [sched, plan] = build_schedule(alpha, 4);
    CHECK(sched.class_nums == std::vector<int>{0, 2, 4});
    CHECK(plan.viable.size() <= 2);
    CHECK(plan.viable.front() == 1);

    std::mt19937_64 rng(181);
    for (int s = 0; s < 500; ++s) {
        const WordMatrix tx = pc.encode(oracle::random_product_message(pc, rng));
        WordMatrix rx = tx;
        oracle::add_pattern(rx, oracle::sample_wd_bounded(pc, rng));
        const DecodeReport rep = decode_gmd(pc, rx);
        REQUIRE(rep.decoded);
        CHECK(rep.word == tx);
        CHECK(rep.row_decoder_calls <= 8 + 2 - 1);
        const DecodeReport gd = decode_gd(pc, rx);
        REQUIRE(gd.decoded);
        CHECK(gd.word == tx);
    }
}

TEST_CASE("gmd: all columns unreliable leaves no decodable trial") {
    const auto pc = pc_64();
    const RsCode& row_code = pc.row_code();
    ReliabilityVector alpha(5, std::vector<int>(8, 0));
    const auto [sched, plan] = build_schedule(alpha, row_code.d());
    REQUIRE(plan.viable.front() == 1);
    CHECK(sched.sets[0].size() == 8);  // E_1 is everything

    std::mt19937_64 rng(191);
    const auto cw = row_code.encode(oracle::random_message(row_code, rng));
    CHECK(!gmd_row_decode(row_code, cw, alpha, sched, plan, 1));
    CHECK(!gd_row_decode(row_code, cw, alpha, sched, plan));
}
