#include "selftest.hpp"

#include <algorithm>
#include <random>

#include "pcdec/decoders.hpp"
#include "pcdec/product.hpp"

namespace pcdec::cli {

namespace {

std::vector<std::vector<gf_elem>> all_codewords(const RsCode& code) {
    const int q = static_cast<int>(code.field().q());
    std::vector<gf_elem> msg(code.k(), 0);
    std::vector<std::vector<gf_elem>> words;
    for (;;) {
        words.push_back(code.encode(msg));
        int i = 0;
        while (i < code.k() && msg[i] == static_cast<gf_elem>(q - 1)) msg[i++] = 0;
        if (i == code.k()) return words;
        ++msg[i];
    }
}

int weight(const std::vector<gf_elem>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](gf_elem x) { return x != 0; }));
}

// At most one codeword may beat the generalized distance bound for any
// reliability assignment; checked by full codeword scan on a tiny code.
PropResult theorem1_uniqueness(long samples, bool fault) {
    const GfTable f4(2);
    const RsCode code(f4, 4, 2);  // [4,2,3] over GF(4)
    const auto words = all_codewords(code);
    const int n = code.n(), d = code.d();
    const long long den = 12;

    std::mt19937_64 rng(0x51e57e57);
    long worst = 0;
    for (long s = 0; s < samples; ++s) {
        gf_elem r[4];
        long long num[4];
        for (int i = 0; i < n; ++i) {
            r[i] = static_cast<gf_elem>(rng() & 3);
            num[i] = static_cast<long long>(rng() % (den + 1));
        }
        long hits = 0;
        for (const auto& c : words) {
            long long metric = 0;
            for (int i = 0; i < n; ++i) metric += c[i] == r[i] ? num[i] : -num[i];
            if (metric > static_cast<long long>(n - d) * den) ++hits;
        }
        worst = std::max(worst, hits);
    }
    const long bound = fault ? 0 : 1;
    return {"theorem1-uniqueness",
            worst <= bound,
            std::to_string(samples) + " samples, max codewords per bound: " + std::to_string(worst)};
}

// Dropping one erasure-set size when d - |F1| is even never changes a
// successful decode.
PropResult theorem3_skip(long samples, bool fault) {
    const GfTable f16(4);
    const RsCode codes[2] = {RsCode(f16, 8, 4), RsCode(f16, 8, 6)};

    std::mt19937_64 rng(0x7e0e3);
    long checked = 0, violations = 0, guard = 0;
    while (checked < samples && guard < samples * 64) {
        ++guard;
        const RsCode& code = codes[rng() % 2];
        const int n = code.n(), d = code.d();

        std::vector<gf_elem> msg(code.k());
        for (auto& x : msg) x = static_cast<gf_elem>(rng() & 15);
        std::vector<gf_elem> r = code.encode(msg);
        const int noise = static_cast<int>(rng() % (code.t() + 2));
        for (int i = 0; i < noise; ++i)
            r[rng() % n] ^= static_cast<gf_elem>(1 + rng() % 15);

        std::vector<int> odd_sizes;
        for (int s = 1; s < d; s += 2)
            if ((d - s) % 2 == 0) odd_sizes.push_back(s);
        if (odd_sizes.empty()) continue;
        const int f1_size = odd_sizes[rng() % odd_sizes.size()];

        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> f1(perm.begin(), perm.begin() + f1_size);
        std::vector<int> f2(perm.begin(), perm.begin() + f1_size + 1);
        std::sort(f1.begin(), f1.end());
        std::sort(f2.begin(), f2.end());

        std::vector<gf_elem> out1(n), out2(n);
        const auto res1 = code.decode(r, f1, out1);
        if (!res1) continue;
        ++checked;
        const auto res2 = code.decode(r, f2, out2);
        if (!res2 || out1 != out2) ++violations;
    }
    if (fault) violations += 1;
    return {"theorem3-skip",
            violations == 0 && checked >= samples,
            std::to_string(checked) + " non-failure instances, " + std::to_string(violations) +
                " violations"};
}

// Random pattern with 2 w_D < d d' on the [8,4,5]x[8,6,3] product.
WordMatrix sample_wd_pattern(const ProductCode& pc, std::mt19937_64& rng) {
    const int n = pc.rows(), np = pc.cols();
    const int d = pc.col_code().d();
    const int budget = (pc.min_distance() - 1) / 2;  // w_D <= 7
    WordMatrix e(n, np);
    if (rng() % 2 == 0) {
        // Scattered: plain weight <= budget.
        const int w = static_cast<int>(rng() % (budget + 1));
        for (int i = 0; i < w; ++i) {
            const int r = static_cast<int>(rng() % n), c = static_cast<int>(rng() % np);
            e.set(r, c, static_cast<gf_elem>(1 + rng() % 15));
        }
    } else {
        // One saturated column (clamped at d) plus a few stray symbols.
        const int c = static_cast<int>(rng() % np);
        const int heavy = d + static_cast<int>(rng() % (n - d + 1));
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < heavy; ++i)
            e.set(perm[i], c, static_cast<gf_elem>(1 + rng() % 15));
        const int extra = static_cast<int>(rng() % (budget - d + 1));
        for (int i = 0; i < extra; ++i) {
            int r, cc;
            do {
                r = static_cast<int>(rng() % n);
                cc = static_cast<int>(rng() % np);
            } while (cc == c);
            e.set(r, cc, static_cast<gf_elem>(1 + rng() % 15));
        }
    }
    return e;
}

PropResult wd_bound(long samples, bool fault) {
    const GfTable f16(4);
    const ProductCode pc(RsCode(f16, 8, 4), RsCode(f16, 8, 6));

    std::mt19937_64 rng(0xbadc0de5);
    long failures = 0;
    for (long s = 0; s < samples; ++s) {
        std::vector<gf_elem> msg(pc.msg_rows() * pc.msg_cols());
        for (auto& x : msg) x = static_cast<gf_elem>(rng() & 15);
        const WordMatrix tx = pc.encode(msg);

        WordMatrix e = sample_wd_pattern(pc, rng);
        while (2 * weight_wd(pc, e) >= pc.min_distance()) e = sample_wd_pattern(pc, rng);

        WordMatrix rx = tx;
        for (int c = 0; c < pc.cols(); ++c)
            for (int r = 0; r < pc.rows(); ++r)
                rx.set(r, c, rx.get(r, c) ^ e.get(r, c));

        const DecodeReport rep = decode_gmd(pc, rx);
        if (!rep.decoded || !(rep.word == tx)) ++failures;
    }
    if (fault) failures += 1;
    return {"wd-bound",
            failures == 0,
            std::to_string(samples) + " patterns with 2*w_D < 15, " + std::to_string(failures) +
                " decode misses"};
}

PropResult mds_weights(bool fault) {
    const GfTable f16(4);
    const RsCode rs84(f16, 8, 4);
    int min_w = 9;
    for (const auto& w : all_codewords(rs84)) {
        const int wt = weight(w);
        if (wt > 0) min_w = std::min(min_w, wt);
    }

    const GfTable f4(2);
    const RsCode tiny(f4, 4, 2);
    int min_tiny = 5;
    for (const auto& w : all_codewords(tiny)) {
        const int wt = weight(w);
        if (wt > 0) min_tiny = std::min(min_tiny, wt);
    }

    const ProductCode pp(tiny, tiny);
    const int min_prod = min_distance_exhaustive(pp);

    const int want84 = fault ? 4 : 5;
    const bool pass = min_w == want84 && min_tiny == 3 && min_prod == 9;
    return {"mds-weights",
            pass,
            "[8,4]: " + std::to_string(min_w) + ", [4,2]: " + std::to_string(min_tiny) +
                ", product: " + std::to_string(min_prod)};
}

}  // namespace

std::vector<PropResult> run_selftest(bool quick, int inject_fault) {
    const long n = quick ? 2000 : 10000;
    std::vector<PropResult> out;
    out.push_back(theorem1_uniqueness(n, inject_fault == 0));
    out.push_back(theorem3_skip(n, inject_fault == 1));
    out.push_back(wd_bound(n, inject_fault == 2));
    out.push_back(mds_weights(inject_fault == 3));
    return out;
}

}  // namespace pcdec::cli
