#include "apn/bitmatrix.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace apn {

BitMatrix::BitMatrix(uint64_t rows, uint64_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

void BitMatrix::xor_row(uint64_t dst, uint64_t src) {
    uint64_t* d = row(dst);
    const uint64_t* s = row(src);
    for (uint64_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

namespace {

// index of lowest set bit in a packed row, or -1
int64_t lowest_bit(const uint64_t* r, uint64_t words) {
    for (uint64_t w = 0; w < words; ++w) {
        if (r[w]) return int64_t(w) * 64 + std::countr_zero(r[w]);
    }
    return -1;
}

}  // namespace

uint64_t bitmatrix_rank(const BitMatrix& m) {
    BitMatrix a = m;
    const uint64_t wpr = a.words_per_row();
    std::vector<int64_t> pivot_of_bit(a.cols(), -1);  // bit -> row owning it
    uint64_t rank = 0;
    for (uint64_t r = 0; r < a.rows(); ++r) {
        uint64_t* row = a.row(r);
        for (;;) {
            int64_t lb = lowest_bit(row, wpr);
            if (lb < 0) break;
            int64_t p = pivot_of_bit[lb];
            if (p < 0) {
                pivot_of_bit[lb] = int64_t(r);
                ++rank;
                break;
            }
            const uint64_t* prow = a.row(uint64_t(p));
            for (uint64_t w = 0; w < wpr; ++w) row[w] ^= prow[w];
        }
    }
    return rank;
}

std::vector<std::vector<uint64_t>> kernel_basis(const BitMatrix& m) {
    // column-reduce a copy, tracking combinations: kernel vectors are the
    // combination columns of zero columns
    const uint64_t rows = m.rows(), cols = m.cols();
    const uint64_t kw = (cols + 63) / 64;
    // work column-major: col[c] = bits of column c (rows packed)
    const uint64_t cw = (rows + 63) / 64;
    std::vector<std::vector<uint64_t>> col(cols, std::vector<uint64_t>(cw, 0));
    for (uint64_t r = 0; r < rows; ++r)
        for (uint64_t c = 0; c < cols; ++c)
            if (m.get(r, c)) col[c][r >> 6] |= uint64_t(1) << (r & 63);
    std::vector<std::vector<uint64_t>> comb(cols, std::vector<uint64_t>(kw, 0));
    for (uint64_t c = 0; c < cols; ++c) comb[c][c >> 6] = uint64_t(1) << (c & 63);

    std::vector<bool> used(cols, false);
    for (uint64_t r = 0; r < rows; ++r) {
        int64_t pivot = -1;
        for (uint64_t c = 0; c < cols; ++c) {
            if (!used[c] && ((col[c][r >> 6] >> (r & 63)) & 1)) { pivot = int64_t(c); break; }
        }
        if (pivot < 0) continue;
        used[pivot] = true;
        for (uint64_t c = 0; c < cols; ++c) {
            if (int64_t(c) == pivot) continue;
            if ((col[c][r >> 6] >> (r & 63)) & 1) {
                for (uint64_t w = 0; w < cw; ++w) col[c][w] ^= col[pivot][w];
                for (uint64_t w = 0; w < kw; ++w) comb[c][w] ^= comb[pivot][w];
            }
        }
    }
    std::vector<std::vector<uint64_t>> basis;
    for (uint64_t c = 0; c < cols; ++c) {
        bool zero = true;
        for (uint64_t w = 0; w < cw; ++w) zero &= (col[c][w] == 0);
        if (zero && !used[c]) basis.push_back(comb[c]);
    }
    return basis;
}

static const char kMagic[8] = {'A', 'P', 'N', 'B', 'I', 'T', 'M', '\0'};

void save_bitmatrix(const BitMatrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for write: " + path);
    out.write(kMagic, 8);
    uint32_t rows = static_cast<uint32_t>(m.rows()), cols = static_cast<uint32_t>(m.cols());
    out.write(reinterpret_cast<const char*>(&rows), 4);
    out.write(reinterpret_cast<const char*>(&cols), 4);
    if (m.rows() > 0)
        out.write(reinterpret_cast<const char*>(m.row(0)),
                  std::streamsize(m.rows() * m.words_per_row() * 8));
    if (!out) throw std::runtime_error("write failed: " + path);
}

BitMatrix load_bitmatrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error("bad bitmatrix magic: " + path);
    uint32_t rows = 0, cols = 0;
    in.read(reinterpret_cast<char*>(&rows), 4);
    in.read(reinterpret_cast<char*>(&cols), 4);
    BitMatrix m(rows, cols);
    if (rows > 0)
        in.read(reinterpret_cast<char*>(m.row(0)),
                std::streamsize(uint64_t(rows) * m.words_per_row() * 8));
    if (!in) throw std::runtime_error("truncated bitmatrix: " + path);
    return m;
}

}  // namespace apn
