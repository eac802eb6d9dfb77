#include "pcdec/gmd.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcdec {

ReliabilityVector::ReliabilityVector(int den, std::vector<int> numerators)
    : den_(den), num_(std::move(numerators)) {
    if (den_ <= 0) throw std::invalid_argument("ReliabilityVector: denominator must be positive");
    const int t = (den_ - 1) / 2;
    for (const int v : num_) {
        // attainable weights: 0, or (d - 2w)/d for 0 <= w <= t
        const bool ok = v == 0 || (v <= den_ && v >= den_ - 2 * t && (den_ - v) % 2 == 0);
        if (!ok) throw std::invalid_argument("ReliabilityVector: unattainable weight");
    }
}

int column_reliability(int d, bool decode_ok, int err_weight) {
    const int t = (d - 1) / 2;
    if (!decode_ok || err_weight > t) return 0;
    return d - 2 * err_weight;
}

Rational forney_metric(std::span<const gf_elem> r, std::span<const gf_elem> c,
                       const ReliabilityVector& alpha) {
    if (r.size() != c.size() || static_cast<int>(r.size()) != alpha.size())
        throw std::invalid_argument("forney_metric: length mismatch");
    long long num = 0;
    for (size_t i = 0; i < r.size(); ++i)
        num += r[i] == c[i] ? alpha.num(static_cast<int>(i)) : -alpha.num(static_cast<int>(i));
    return {num, alpha.den()};
}

bool gmd_accepts(const Rational& metric, int n, int d) {
    return metric.num > static_cast<long long>(n - d) * metric.den;
}

std::pair<ErasureSchedule, TrialPlan> build_schedule(const ReliabilityVector& alpha,
                                                     int d_row) {
    const int d = alpha.den();
    const int t = (d - 1) / 2;
    const int num_classes = t + 2;  // J

    ErasureSchedule sched;
    sched.class_nums.reserve(num_classes);
    sched.class_nums.push_back(0);
    for (int w = t; w >= 0; --w) sched.class_nums.push_back(d - 2 * w);

    sched.sets.resize(num_classes);
    for (int j = 0; j < num_classes; ++j) {
        const int a = sched.class_nums[j];
        for (int i = 0; i < alpha.size(); ++i)
            if (alpha.num(i) <= a) sched.sets[j].push_back(i);
    }

    TrialPlan plan;
    const size_t m = static_cast<size_t>((std::min(d, d_row) + 1) / 2);
    for (int j = 1; j <= num_classes - 1 && plan.viable.size() < m; ++j) {
        if (j > 1) {
            const int sz = static_cast<int>(sched.sets[j - 1].size());
            if (sz == static_cast<int>(sched.sets[j - 2].size())) continue;  // empty class
            const int next_sz = static_cast<int>(sched.sets[j].size());
            if ((d_row - sz) % 2 == 0 && next_sz == sz + 1) continue;  // parity skip
        }
        plan.viable.push_back(j);
    }
    return {std::move(sched), std::move(plan)};
}

std::optional<RowDecodeResult> gmd_row_decode(const RsCode& row_code,
                                              std::span<const gf_elem> row,
                                              const ReliabilityVector& alpha,
                                              const ErasureSchedule& sched,
                                              const TrialPlan& plan, int start_j,
                                              long* decode_calls) {
    auto it = std::find(plan.viable.begin(), plan.viable.end(), start_j);
    if (it == plan.viable.end())
        throw std::invalid_argument("gmd_row_decode: start trial not in plan");

    std::vector<gf_elem> cand(row.size());
    for (; it != plan.viable.end(); ++it) {
        const int j = *it;
        if (decode_calls) ++*decode_calls;
        const auto res = row_code.decode(row, sched.sets[j - 1], cand);
        if (!res) continue;
        if (gmd_accepts(forney_metric(row, cand, alpha), row_code.n(), row_code.d()))
            return RowDecodeResult{cand, j};
    }
    return std::nullopt;
}

std::optional<std::vector<gf_elem>> gd_row_decode(const RsCode& row_code,
                                                  std::span<const gf_elem> row,
                                                  const ReliabilityVector& alpha,
                                                  const ErasureSchedule& sched,
                                                  const TrialPlan& plan,
                                                  long* decode_calls) {
    std::vector<gf_elem> cand(row.size());
    std::optional<std::vector<gf_elem>> best;
    Rational best_metric;
    for (const int j : plan.viable) {
        if (decode_calls) ++*decode_calls;
        const auto res = row_code.decode(row, sched.sets[j - 1], cand);
        if (!res) continue;
        const Rational metric = forney_metric(row, cand, alpha);
        if (!best || metric.num > best_metric.num) {  // shared denominator
            best = cand;
            best_metric = metric;
        }
    }
    return best;
}

}  // namespace pcdec
