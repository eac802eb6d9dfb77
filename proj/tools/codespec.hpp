#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

#include "pcdec/product.hpp"

namespace pcdec::cli {

// Textual product-code form "rs(q,n,k)xrs(q,n',k')", both over the same field.
struct CodeSpec {
    unsigned q = 0;
    int n1 = 0, k1 = 0;
    int n2 = 0, k2 = 0;

    std::string canonical() const {
        char buf[96];
        std::snprintf(buf, sizeof buf, "rs(%u,%d,%d)xrs(%u,%d,%d)", q, n1, k1, q, n2, k2);
        return buf;
    }
};

inline CodeSpec parse_code_spec(const std::string& s) {
    CodeSpec cs;
    unsigned q2 = 0;
    int consumed = -1;
    const int got = std::sscanf(s.c_str(), "rs(%u,%d,%d)xrs(%u,%d,%d)%n", &cs.q, &cs.n1,
                                &cs.k1, &q2, &cs.n2, &cs.k2, &consumed);
    if (got != 6 || consumed != static_cast<int>(s.size()))
        throw std::invalid_argument("bad code spec '" + s + "' (want rs(q,n,k)xrs(q,n,k))");
    if (q2 != cs.q)
        throw std::invalid_argument("bad code spec '" + s + "': component fields differ");
    return cs;
}

inline unsigned degree_for_q(unsigned q) {
    for (unsigned m : {2u, 3u, 4u, 5u, 8u})
        if (q == (1u << m)) return m;
    throw std::invalid_argument("unsupported field size q=" + std::to_string(q));
}

inline ProductCode build_product_code(const CodeSpec& cs) {
    const GfTable field(degree_for_q(cs.q));
    return {RsCode(field, cs.n1, cs.k1), RsCode(field, cs.n2, cs.k2)};
}

}  // namespace pcdec::cli
