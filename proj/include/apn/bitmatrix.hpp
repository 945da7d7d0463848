#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace apn {

// Row-major packed GF(2) matrix. Rows are padded to whole 64-bit words;
// trailing pad bits stay zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(uint64_t rows, uint64_t cols);

    uint64_t rows() const { return rows_; }
    uint64_t cols() const { return cols_; }
    uint64_t words_per_row() const { return wpr_; }

    bool get(uint64_t r, uint64_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(uint64_t r, uint64_t c, bool v) {
        uint64_t& w = data_[r * wpr_ + (c >> 6)];
        uint64_t m = uint64_t(1) << (c & 63);
        w = v ? (w | m) : (w & ~m);
    }
    uint64_t* row(uint64_t r) { return data_.data() + r * wpr_; }
    const uint64_t* row(uint64_t r) const { return data_.data() + r * wpr_; }
    void xor_row(uint64_t dst, uint64_t src);

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    uint64_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

// GF(2) rank by row reduction; the input is copied.
uint64_t bitmatrix_rank(const BitMatrix& m);

// Basis of the right kernel {x : Mx = 0}; returns cols - rank vectors,
// each packed into ceil(cols/64) words.
std::vector<std::vector<uint64_t>> kernel_basis(const BitMatrix& m);

// Dense bit-packed file format: 16-byte header (8-byte magic "APNBITM\0",
// uint32 LE rows, uint32 LE cols) followed by row-major rows padded to
// 64-bit little-endian words.
void save_bitmatrix(const BitMatrix& m, const std::string& path);
BitMatrix load_bitmatrix(const std::string& path);

}  // namespace apn
