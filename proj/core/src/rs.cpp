#include "pcdec/rs.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace pcdec {

namespace {

constexpr int kMaxN = 256;
// n == q construction is only for codes small enough to enumerate.
constexpr long long kMaxEvalCodewords = 1LL << 20;

}  // namespace

RsCode::RsCode(const GfTable& field, int n, int k)
    : field_(field), n_(n), k_(k), evaluation_form_(n == static_cast<int>(field.q())) {
    const int q = static_cast<int>(field_.q());
    if (k < 1 || k >= n || n > q) {
        throw std::invalid_argument("RsCode: invalid parameters n=" + std::to_string(n) +
                                    " k=" + std::to_string(k) + " over GF(" +
                                    std::to_string(q) + ")");
    }

    if (evaluation_form_) {
        long long words = 1;
        for (int i = 0; i < k; ++i) {
            words *= q;
            if (words > kMaxEvalCodewords)
                throw std::invalid_argument("RsCode: n == q form limited to small codes");
        }
        // Points: alpha^0 .. alpha^(q-2), then 0.
        eval_points_.resize(n_);
        for (int j = 0; j < q - 1; ++j) eval_points_[j] = field_.exp(j);
        eval_points_[q - 1] = 0;

        // Row-reduce [V | M] where M is the k x n monomial evaluation matrix
        // and V its last k columns, so the generator comes out systematic in
        // the last k positions.
        std::vector<std::vector<gf_elem>> aug(k_, std::vector<gf_elem>(k_ + n_, 0));
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < n_; ++j) {
                const gf_elem v = field_.pow(eval_points_[j], static_cast<unsigned>(i));
                aug[i][k_ + j] = v;
                if (j >= n_ - k_) aug[i][j - (n_ - k_)] = v;
            }
        for (int col = 0; col < k_; ++col) {
            int pivot = -1;
            for (int r = col; r < k_; ++r)
                if (aug[r][col] != 0) { pivot = r; break; }
            if (pivot < 0) throw std::logic_error("RsCode: singular systematic submatrix");
            std::swap(aug[col], aug[pivot]);
            const gf_elem piv_inv = field_.inv(aug[col][col]);
            for (auto& x : aug[col]) x = field_.mul(x, piv_inv);
            for (int r = 0; r < k_; ++r) {
                if (r == col || aug[r][col] == 0) continue;
                const gf_elem f = aug[r][col];
                for (int c = 0; c < k_ + n_; ++c)
                    aug[r][c] ^= field_.mul(f, aug[col][c]);
            }
        }
        gen_matrix_.assign(k_, std::vector<gf_elem>(n_, 0));
        for (int i = 0; i < k_; ++i)
            std::copy(aug[i].begin() + k_, aug[i].end(), gen_matrix_[i].begin());
        return;
    }

    // Cyclic construction: g(x) = prod_{i=1..n-k} (x - alpha^i).
    const int rho = n_ - k_;
    gen_poly_.assign(rho + 1, 0);
    gen_poly_[0] = 1;
    for (int i = 1; i <= rho; ++i) {
        const gf_elem root = field_.exp(static_cast<unsigned>(i));
        for (int j = i; j >= 1; --j)
            gen_poly_[j] = gen_poly_[j - 1] ^ field_.mul(gen_poly_[j], root);
        gen_poly_[0] = field_.mul(gen_poly_[0], root);
    }

    gen_matrix_.assign(k_, std::vector<gf_elem>(n_, 0));
    std::vector<gf_elem> unit(k_, 0);
    for (int i = 0; i < k_; ++i) {
        unit[i] = 1;
        encode(unit, gen_matrix_[i]);
        unit[i] = 0;
    }
}

void RsCode::encode(std::span<const gf_elem> msg, std::span<gf_elem> out) const {
    if (static_cast<int>(msg.size()) != k_ || static_cast<int>(out.size()) != n_)
        throw std::invalid_argument("RsCode::encode: bad buffer size");

    if (evaluation_form_) {
        std::fill(out.begin(), out.end(), 0);
        for (int i = 0; i < k_; ++i) {
            if (msg[i] == 0) continue;
            const auto& row = gen_matrix_[i];
            for (int j = 0; j < n_; ++j) out[j] ^= field_.mul(msg[i], row[j]);
        }
        return;
    }

    const int rho = n_ - k_;  // >= 1 since k < n
    std::array<gf_elem, kMaxN> rem{};
    for (int i = k_ - 1; i >= 0; --i) {
        const gf_elem fb = msg[i] ^ rem[rho - 1];
        for (int j = rho - 1; j >= 1; --j)
            rem[j] = rem[j - 1] ^ field_.mul(fb, gen_poly_[j]);
        rem[0] = field_.mul(fb, gen_poly_[0]);
    }
    for (int j = 0; j < rho; ++j) out[j] = rem[j];
    for (int i = 0; i < k_; ++i) out[rho + i] = msg[i];
}

std::vector<gf_elem> RsCode::encode(std::span<const gf_elem> msg) const {
    std::vector<gf_elem> out(n_);
    encode(msg, out);
    return out;
}

bool RsCode::is_codeword(std::span<const gf_elem> word) const {
    if (static_cast<int>(word.size()) != n_) return false;
    std::array<gf_elem, kMaxN> ref;
    encode(word.subspan(n_ - k_, k_), std::span<gf_elem>(ref.data(), n_));
    return std::equal(word.begin(), word.end(), ref.begin());
}

std::optional<RsDecoded> RsCode::decode(std::span<const gf_elem> received,
                                        std::span<const int> erasures,
                                        std::span<gf_elem> out) const {
    if (static_cast<int>(received.size()) != n_ || static_cast<int>(out.size()) != n_)
        throw std::invalid_argument("RsCode::decode: bad buffer size");
    int prev = -1;
    for (const int p : erasures) {
        if (p <= prev || p >= n_)
            throw std::invalid_argument("RsCode::decode: bad erasure set");
        prev = p;
    }
    if (static_cast<int>(erasures.size()) >= d()) return std::nullopt;
    return evaluation_form_ ? decode_exhaustive(received, erasures, out)
                            : decode_bm(received, erasures, out);
}

std::optional<RsDecoded> RsCode::decode_exhaustive(std::span<const gf_elem> received,
                                                   std::span<const int> erasures,
                                                   std::span<gf_elem> out) const {
    const int q = static_cast<int>(field_.q());
    const int ne = static_cast<int>(erasures.size());
    std::vector<gf_elem> msg(k_, 0), cand(n_);
    // Odometer over all q^k messages; the radius makes the hit unique.
    for (;;) {
        encode(msg, cand);
        int w = 0;
        auto er = erasures.begin();
        for (int p = 0; p < n_; ++p) {
            if (er != erasures.end() && *er == p) { ++er; continue; }
            if (cand[p] != received[p]) ++w;
        }
        if (2 * w + ne < d()) {
            std::copy(cand.begin(), cand.end(), out.begin());
            return RsDecoded{w};
        }
        int i = 0;
        while (i < k_ && msg[i] == static_cast<gf_elem>(q - 1)) msg[i++] = 0;
        if (i == k_) return std::nullopt;
        ++msg[i];
    }
}

std::optional<RsDecoded> RsCode::decode_bm(std::span<const gf_elem> received,
                                           std::span<const int> erasures,
                                           std::span<gf_elem> out) const {
    const int rho = n_ - k_;
    const int ne = static_cast<int>(erasures.size());

    std::array<gf_elem, kMaxN> y;
    std::copy(received.begin(), received.end(), y.begin());
    for (const int p : erasures) y[p] = 0;

    // Syndromes S_r = y(alpha^r), r = 1..rho (stored shifted down by one).
    std::array<gf_elem, kMaxN> syn{};
    bool all_zero = true;
    for (int r = 1; r <= rho; ++r) {
        const gf_elem z = field_.exp(static_cast<unsigned>(r));
        gf_elem acc = 0;
        for (int p = n_ - 1; p >= 0; --p) acc = field_.mul(acc, z) ^ y[p];
        syn[r - 1] = acc;
        all_zero = all_zero && acc == 0;
    }
    if (all_zero) {
        std::copy(y.begin(), y.begin() + n_, out.begin());
        return RsDecoded{0};
    }

    // Locator seeded with the erasure locator, then Berlekamp-Massey over
    // the remaining syndrome constraints.
    std::array<gf_elem, kMaxN> lam{}, bb{}, tmp{};
    lam[0] = 1;
    for (const int p : erasures) {
        const gf_elem root = field_.exp(static_cast<unsigned>(p));
        for (int j = ne; j >= 1; --j) lam[j] ^= field_.mul(lam[j - 1], root);
    }
    std::copy(lam.begin(), lam.begin() + rho + 1, bb.begin());
    int len = ne;

    for (int r = ne + 1; r <= rho; ++r) {
        gf_elem delta = 0;
        const int hi = std::min(r - 1, rho);
        for (int i = 0; i <= hi; ++i) {
            if (lam[i] != 0 && syn[r - i - 1] != 0) delta ^= field_.mul(lam[i], syn[r - i - 1]);
        }
        if (delta == 0) {
            for (int j = rho; j >= 1; --j) bb[j] = bb[j - 1];
            bb[0] = 0;
        } else if (2 * len <= r + ne - 1) {
            for (int j = 0; j <= rho; ++j) tmp[j] = lam[j];
            for (int j = rho; j >= 1; --j) lam[j] ^= field_.mul(delta, bb[j - 1]);
            const gf_elem dinv = field_.inv(delta);
            for (int j = 0; j <= rho; ++j) bb[j] = field_.mul(tmp[j], dinv);
            len = r + ne - len;
        } else {
            for (int j = rho; j >= 1; --j) lam[j] ^= field_.mul(delta, bb[j - 1]);
            for (int j = rho; j >= 1; --j) bb[j] = bb[j - 1];
            bb[0] = 0;
        }
    }

    if (2 * len > rho + ne) return std::nullopt;
    int deg = 0;
    for (int j = rho; j >= 0; --j)
        if (lam[j] != 0) { deg = j; break; }
    if (deg != len || lam[0] == 0) return std::nullopt;

    // Chien search restricted to the shortened support [0, n).
    std::array<int, kMaxN> roots;
    int nroots = 0;
    const unsigned qm1 = field_.q() - 1;
    for (int p = 0; p < n_ && nroots <= len; ++p) {
        const gf_elem z = field_.exp(qm1 - static_cast<unsigned>(p) % qm1);
        gf_elem acc = 0;
        for (int j = len; j >= 0; --j) acc = field_.mul(acc, z) ^ lam[j];
        if (acc == 0) roots[nroots++] = p;
    }
    if (nroots != len) return std::nullopt;

    // Omega = lam * S mod x^rho, then Forney values at each locator root.
    std::array<gf_elem, kMaxN> omega{};
    for (int i = 0; i <= std::min(len, rho - 1); ++i) {
        if (lam[i] == 0) continue;
        for (int j = 0; i + j < rho; ++j)
            if (syn[j] != 0) omega[i + j] ^= field_.mul(lam[i], syn[j]);
    }

    std::copy(y.begin(), y.begin() + n_, out.begin());
    for (int idx = 0; idx < nroots; ++idx) {
        const int p = roots[idx];
        const gf_elem z = field_.exp(qm1 - static_cast<unsigned>(p) % qm1);
        gf_elem num = 0;
        for (int j = rho - 1; j >= 0; --j) num = field_.mul(num, z) ^ omega[j];
        // lam'(z): odd-degree terms only in characteristic 2.
        gf_elem den = 0;
        const gf_elem z2 = field_.mul(z, z);
        for (int j = (len % 2 == 1) ? len : len - 1; j >= 1; j -= 2)
            den = field_.mul(den, z2) ^ lam[j];
        if (den == 0) return std::nullopt;
        out[p] ^= field_.div(num, den);
    }

    // Enforce the bounded-distance contract independently of the solver.
    if (!is_codeword(out)) return std::nullopt;
    int w = 0;
    auto er = erasures.begin();
    for (int p = 0; p < n_; ++p) {
        if (er != erasures.end() && *er == p) { ++er; continue; }
        if (out[p] != received[p]) ++w;
    }
    if (2 * w + ne >= d()) return std::nullopt;
    return RsDecoded{w};
}

}  // namespace pcdec
