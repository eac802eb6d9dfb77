#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pcdec/rs.hpp"

namespace pcdec {

// Exact rational, kept exact because the acceptance test of generalized
// minimum distance decoding is a strict inequality that floating point
// would corrupt near the boundary.
struct Rational {
    long long num = 0;
    long long den = 1;  // > 0
};

// Per-column reliability weights alpha_i = num_i / d where d is the column
// code distance.  Attainable numerators are 0 (failure or w > t) and d - 2w
// for correction weights 0 <= w <= t.
class ReliabilityVector {
public:
    ReliabilityVector(int den, std::vector<int> numerators);

    int den() const { return den_; }
    int size() const { return static_cast<int>(num_.size()); }
    int num(int i) const { return num_[i]; }
    const std::vector<int>& nums() const { return num_; }

private:
    int den_;
    std::vector<int> num_;
};

// Reliability numerator after decoding one column: d - 2w on success with
// w <= t, otherwise 0.
int column_reliability(int d, bool decode_ok, int err_weight);

// alpha . f(r, c): sum of +alpha_i where r_i == c_i and -alpha_i elsewhere.
Rational forney_metric(std::span<const gf_elem> r, std::span<const gf_elem> c,
                       const ReliabilityVector& alpha);

// Strict acceptance test: metric > n - d, evaluated exactly.
bool gmd_accepts(const Rational& metric, int n, int d);

// Nested erasure sets E_1 <= ... <= E_J over the J = t + 2 attainable
// reliability classes, E_j = { i : alpha_i <= a_j }.
struct ErasureSchedule {
    std::vector<int> class_nums;         // ascending numerators a_1 .. a_J
    std::vector<std::vector<int>> sets;  // sets[j-1] = E_j, sorted positions
};

// Ordered trial indices j in [J-1].  j = 1 always runs; a later j is dropped
// when its class is empty (E_j = E_{j-1}) or when d' - |E_j| is even and
// |E_{j+1}| = |E_j| + 1 (the one-extra-erasure trial decides identically).
// At most m = floor((min{d, d'} + 1) / 2) trials are kept.
struct TrialPlan {
    std::vector<int> viable;
};

std::pair<ErasureSchedule, TrialPlan> build_schedule(const ReliabilityVector& alpha,
                                                     int d_row);

struct RowDecodeResult {
    std::vector<gf_elem> codeword;
    int used_j = 0;
};

// Runs viable trials from start_j upward and returns the first candidate
// passing the acceptance test, together with the trial that produced it.
// start_j must be a member of the plan.  *decode_calls, when given, is
// incremented once per component decoder invocation.
std::optional<RowDecodeResult> gmd_row_decode(const RsCode& row_code,
                                              std::span<const gf_elem> row,
                                              const ReliabilityVector& alpha,
                                              const ErasureSchedule& sched,
                                              const TrialPlan& plan, int start_j,
                                              long* decode_calls = nullptr);

// Runs every viable trial and returns the candidate maximizing the metric,
// ties broken toward the smallest trial index.  No acceptance gate.
std::optional<std::vector<gf_elem>> gd_row_decode(const RsCode& row_code,
                                                  std::span<const gf_elem> row,
                                                  const ReliabilityVector& alpha,
                                                  const ErasureSchedule& sched,
                                                  const TrialPlan& plan,
                                                  long* decode_calls = nullptr);

}  // namespace pcdec
