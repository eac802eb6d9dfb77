#pragma once

#include <cstdint>
#include <vector>

namespace pcdec {

// A field element is a plain integer in [0, q).  All arithmetic goes through
// a GfTable, which owns the exp/log tables of one GF(2^m).
using gf_elem = std::uint16_t;

// GF(2^m) arithmetic for m in {2,3,4,5,8} via exp/log tables.  The primitive
// polynomial per degree is fixed so results are reproducible everywhere.
// Immutable after construction; safe for concurrent reads.
class GfTable {
public:
    explicit GfTable(unsigned m);

    unsigned m() const { return m_; }
    unsigned q() const { return q_; }
    unsigned prim_poly() const { return prim_; }

    gf_elem add(gf_elem a, gf_elem b) const { return a ^ b; }

    gf_elem mul(gf_elem a, gf_elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    gf_elem inv(gf_elem a) const;
    gf_elem div(gf_elem a, gf_elem b) const;
    gf_elem pow(gf_elem a, unsigned e) const;

    // alpha^i for the fixed primitive element alpha = 2.
    gf_elem exp(unsigned i) const { return exp_[i % (q_ - 1)]; }
    unsigned log(gf_elem a) const;

    // Same field iff same degree and modulus.
    bool operator==(const GfTable& o) const { return m_ == o.m_ && prim_ == o.prim_; }

private:
    unsigned m_, q_, prim_;
    std::vector<gf_elem> exp_;        // length 2q; exp_[i] = alpha^(i mod (q-1))
    std::vector<std::uint16_t> log_;  // length q; log_[0] unused
};

}  // namespace pcdec
