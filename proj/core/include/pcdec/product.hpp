#pragma once

#include <span>
#include <vector>

#include "pcdec/rs.hpp"

namespace pcdec {

// n x n' array of field symbols with per-position erasure flags, stored
// column-major (decoding is column-first, so columns are contiguous).
// An erased position carries no symbol value; its stored value is forced
// to zero so whole-state equality is semantic equality.
class WordMatrix {
public:
    WordMatrix() : rows_(0), cols_(0) {}
    WordMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), sym_(rows * cols, 0), erased_(rows * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    gf_elem get(int r, int c) const { return sym_[c * rows_ + r]; }
    void set(int r, int c, gf_elem v) { sym_[c * rows_ + r] = v; }

    bool erased(int r, int c) const { return erased_[c * rows_ + r] != 0; }
    void erase(int r, int c) {
        erased_[c * rows_ + r] = 1;
        sym_[c * rows_ + r] = 0;
    }
    void clear_erasure(int r, int c) { erased_[c * rows_ + r] = 0; }

    std::span<const gf_elem> column(int c) const { return {sym_.data() + c * rows_, static_cast<size_t>(rows_)}; }
    std::span<gf_elem> column(int c) { return {sym_.data() + c * rows_, static_cast<size_t>(rows_)}; }

    bool any_erased() const;
    int weight() const;  // nonzero symbols, erased positions excluded

    bool operator==(const WordMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && sym_ == o.sym_ && erased_ == o.erased_;
    }

private:
    int rows_, cols_;
    std::vector<gf_elem> sym_;
    std::vector<std::uint8_t> erased_;
};

WordMatrix transpose(const WordMatrix& w);

// Product of a column code C = [n,k,d] and a row code C' = [n',k',d'] over
// the same field: codewords are the n x n' matrices whose columns lie in C
// and rows in C'.  Composite parameters are [n*n', k*k', d*d'].
class ProductCode {
public:
    ProductCode(RsCode col_code, RsCode row_code);

    const RsCode& col_code() const { return col_; }
    const RsCode& row_code() const { return row_; }
    const GfTable& field() const { return col_.field(); }

    int rows() const { return col_.n(); }
    int cols() const { return row_.n(); }
    int msg_rows() const { return col_.k(); }
    int msg_cols() const { return row_.k(); }
    int min_distance() const { return col_.d() * row_.d(); }

    // msg is k x k' column-major.  Encodes rows with C' then columns with C;
    // the message block sits at [n-k, n) x [n'-k', n') verbatim.
    WordMatrix encode(std::span<const gf_elem> msg) const;
    std::vector<gf_elem> extract_message(const WordMatrix& word) const;

    // Every column in C and every row in C' (no erasures allowed).
    bool is_codeword(const WordMatrix& word) const;

    // The same code with component roles exchanged: decoding a word with the
    // swap equals transposing, decoding, and transposing back.
    ProductCode swapped() const { return ProductCode(row_, col_); }

private:
    RsCode col_, row_;
};

// Column-clamped weight: sum over columns of min(column weight, d).  The
// error pattern must carry no erasure flags.
int weight_wd(const ProductCode& pc, const WordMatrix& e);

// Exact minimum nonzero codeword weight by enumerating all q^(k*k')
// messages.  Guarded: throws std::length_error when q^(k*k') > 2^24.
int min_distance_exhaustive(const ProductCode& pc);

}  // namespace pcdec
