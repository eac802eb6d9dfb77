#include "pcdec/gf.hpp"

#include <stdexcept>
#include <string>

namespace pcdec {

namespace {

unsigned prim_poly_for(unsigned m) {
    switch (m) {
        case 2: return 0x7;    // x^2 + x + 1
        case 3: return 0xB;    // x^3 + x + 1
        case 4: return 0x13;   // x^4 + x + 1
        case 5: return 0x25;   // x^5 + x^2 + 1
        case 8: return 0x11D;  // x^8 + x^4 + x^3 + x^2 + 1
        default:
            throw std::invalid_argument("GfTable: unsupported extension degree m=" +
                                        std::to_string(m));
    }
}

}  // namespace

GfTable::GfTable(unsigned m)
    : m_(m), q_(1u << m), prim_(prim_poly_for(m)), exp_(2 * q_), log_(q_, 0) {
    unsigned x = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
        exp_[i] = static_cast<gf_elem>(x);
        log_[x] = static_cast<std::uint16_t>(i);
        x <<= 1;
        if (x & q_) x ^= prim_;
    }
    for (unsigned i = q_ - 1; i < 2 * q_; ++i) exp_[i] = exp_[i - (q_ - 1)];
}

gf_elem GfTable::inv(gf_elem a) const {
    if (a == 0) throw std::domain_error("GfTable: inverse of zero");
    return exp_[q_ - 1 - log_[a]];
}

gf_elem GfTable::div(gf_elem a, gf_elem b) const {
    if (b == 0) throw std::domain_error("GfTable: division by zero");
    if (a == 0) return 0;
    return exp_[log_[a] + q_ - 1 - log_[b]];
}

gf_elem GfTable::pow(gf_elem a, unsigned e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[static_cast<unsigned>(
        (static_cast<unsigned long long>(log_[a]) * e) % (q_ - 1))];
}

unsigned GfTable::log(gf_elem a) const {
    if (a == 0) throw std::domain_error("GfTable: log of zero");
    return log_[a];
}

}  // namespace pcdec
