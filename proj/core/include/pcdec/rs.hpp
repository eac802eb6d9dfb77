#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pcdec/gf.hpp"

namespace pcdec {

// Erasure positions: sorted, duplicate-free indices into [0, n).
using ErasureSet = std::vector<int>;

// A bounded-distance error-and-erasure decode outcome.  `errors` is the
// number of non-erased positions that were corrected.
struct RsDecoded {
    int errors = 0;
};

// [n, k, d = n-k+1] Reed-Solomon code over GF(2^m).
//
// For n <= q-1 this is the [q-1, q-1-(n-k)] mother code shortened by
// leading zero coefficients, encoded systematically through the generator
// polynomial, and decoded with syndromes + Berlekamp-Massey (erasure
// initialized) + Chien search + Forney values.
//
// n == q is additionally supported through the evaluation-code construction
// on all q field points.  No generator polynomial exists there, and decoding
// falls back to an exhaustive bounded-distance scan, so this form is gated
// to codes with at most 2^20 codewords.  It exists for the tiny MDS codes
// the exhaustive structure checks need.
//
// Immutable after construction; decode uses only per-call stack scratch, so
// concurrent decodes on one RsCode are safe.
class RsCode {
public:
    RsCode(const GfTable& field, int n, int k);

    const GfTable& field() const { return field_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int d() const { return n_ - k_ + 1; }
    int t() const { return (d() - 1) / 2; }

    // Empty for the n == q evaluation form.
    const std::vector<gf_elem>& gen_poly() const { return gen_poly_; }
    // k x n systematic generator matrix; message symbols occupy the last k
    // positions of a codeword verbatim.
    const std::vector<std::vector<gf_elem>>& gen_matrix() const { return gen_matrix_; }

    void encode(std::span<const gf_elem> msg, std::span<gf_elem> out) const;
    std::vector<gf_elem> encode(std::span<const gf_elem> msg) const;

    // Bounded-distance decode.  Values at erased positions are ignored.
    // Returns the unique codeword c with 2*w_E(received - c) + |E| < d when
    // one exists; otherwise failure.  Every non-failure output is re-verified
    // to be a codeword within that radius, so a miscorrection can only ever
    // be another codeword inside the radius, never a word outside it.
    std::optional<RsDecoded> decode(std::span<const gf_elem> received,
                                    std::span<const int> erasures,
                                    std::span<gf_elem> out) const;

    bool is_codeword(std::span<const gf_elem> word) const;

private:
    std::optional<RsDecoded> decode_bm(std::span<const gf_elem> received,
                                       std::span<const int> erasures,
                                       std::span<gf_elem> out) const;
    std::optional<RsDecoded> decode_exhaustive(std::span<const gf_elem> received,
                                               std::span<const int> erasures,
                                               std::span<gf_elem> out) const;

    GfTable field_;
    int n_, k_;
    bool evaluation_form_;             // n == q construction
    std::vector<gf_elem> gen_poly_;    // monic, degree n-k (cyclic form only)
    std::vector<std::vector<gf_elem>> gen_matrix_;
    std::vector<gf_elem> eval_points_; // evaluation form only
};

}  // namespace pcdec
