#include "pcdec/product.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcdec {

bool WordMatrix::any_erased() const {
    return std::any_of(erased_.begin(), erased_.end(), [](std::uint8_t f) { return f != 0; });
}

int WordMatrix::weight() const {
    int w = 0;
    for (size_t i = 0; i < sym_.size(); ++i)
        if (sym_[i] != 0 && erased_[i] == 0) ++w;
    return w;
}

WordMatrix transpose(const WordMatrix& w) {
    WordMatrix t(w.cols(), w.rows());
    for (int c = 0; c < w.cols(); ++c)
        for (int r = 0; r < w.rows(); ++r) {
            t.set(c, r, w.get(r, c));
            if (w.erased(r, c)) t.erase(c, r);
        }
    return t;
}

ProductCode::ProductCode(RsCode col_code, RsCode row_code)
    : col_(std::move(col_code)), row_(std::move(row_code)) {
    if (!(col_.field() == row_.field()))
        throw std::invalid_argument("ProductCode: component codes over different fields");
}

WordMatrix ProductCode::encode(std::span<const gf_elem> msg) const {
    const int k = col_.k(), kp = row_.k(), n = col_.n(), np = row_.n();
    if (static_cast<int>(msg.size()) != k * kp)
        throw std::invalid_argument("ProductCode::encode: bad message size");

    // Rows of the k x k' message through C', giving a k x n' array...
    std::vector<gf_elem> mrow(kp), crow(np);
    std::vector<gf_elem> inter(k * np);  // column-major k x n'
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < kp; ++c) mrow[c] = msg[c * k + r];
        row_.encode(mrow, crow);
        for (int c = 0; c < np; ++c) inter[c * k + r] = crow[c];
    }
    // ...then each of its columns through C.
    WordMatrix out(n, np);
    for (int c = 0; c < np; ++c)
        col_.encode(std::span<const gf_elem>(inter.data() + c * k, k), out.column(c));
    return out;
}

std::vector<gf_elem> ProductCode::extract_message(const WordMatrix& word) const {
    const int k = col_.k(), kp = row_.k();
    const int r0 = col_.n() - k, c0 = row_.n() - kp;
    std::vector<gf_elem> msg(k * kp);
    for (int c = 0; c < kp; ++c)
        for (int r = 0; r < k; ++r) msg[c * k + r] = word.get(r0 + r, c0 + c);
    return msg;
}

bool ProductCode::is_codeword(const WordMatrix& word) const {
    if (word.rows() != rows() || word.cols() != cols() || word.any_erased()) return false;
    for (int c = 0; c < cols(); ++c)
        if (!col_.is_codeword(word.column(c))) return false;
    std::vector<gf_elem> row(cols());
    for (int r = 0; r < rows(); ++r) {
        for (int c = 0; c < cols(); ++c) row[c] = word.get(r, c);
        if (!row_.is_codeword(row)) return false;
    }
    return true;
}

int weight_wd(const ProductCode& pc, const WordMatrix& e) {
    if (e.any_erased())
        throw std::invalid_argument("weight_wd: pattern carries erasure flags");
    const int d = pc.col_code().d();
    int total = 0;
    for (int c = 0; c < e.cols(); ++c) {
        int w = 0;
        for (const gf_elem v : e.column(c))
            if (v != 0) ++w;
        total += std::min(w, d);
    }
    return total;
}

int min_distance_exhaustive(const ProductCode& pc) {
    const long long q = pc.field().q();
    const int km = pc.msg_rows() * pc.msg_cols();
    long long words = 1;
    for (int i = 0; i < km; ++i) {
        words *= q;
        if (words > (1LL << 24))
            throw std::length_error("min_distance_exhaustive: message space too large");
    }

    std::vector<gf_elem> msg(km, 0);
    int best = pc.rows() * pc.cols() + 1;
    for (long long it = 1; it < words; ++it) {
        int i = 0;
        while (msg[i] == static_cast<gf_elem>(q - 1)) msg[i++] = 0;
        ++msg[i];
        const WordMatrix w = pc.encode(msg);
        best = std::min(best, w.weight());
    }
    return best;
}

}  // namespace pcdec
