#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace apn {

// Element of GF(2^n) in polynomial-basis coordinates, packed into one word.
// Bits at positions >= n are always zero; addition is bitwise XOR.
struct Fe {
    uint32_t v = 0;
    friend bool operator==(Fe a, Fe b) { return a.v == b.v; }
    friend bool operator!=(Fe a, Fe b) { return a.v != b.v; }
    friend bool operator<(Fe a, Fe b) { return a.v < b.v; }
    friend Fe operator^(Fe a, Fe b) { return Fe{a.v ^ b.v}; }
};

inline constexpr Fe fe_zero{0};
inline constexpr Fe fe_one{1};

// Concrete model of GF(2^n), 2 <= n <= 24. The modulus is the
// lexicographically smallest primitive polynomial of degree n (coefficient
// masks compared as integers), so the generator g = x has order 2^n - 1 and
// the spec is identical across runs and platforms.
struct FieldSpec {
    int n = 0;
    uint32_t modulus = 0;  // (n+1)-bit mask of the defining polynomial
    Fe generator{2};       // residue class of x
    uint64_t order = 0;    // 2^n - 1
    std::vector<std::pair<uint64_t, int>> factorization;  // of 2^n - 1
    std::vector<uint64_t> factor_list;                    // distinct primes
};

class Field {
public:
    explicit Field(int n);

    const FieldSpec& spec() const { return spec_; }
    int n() const { return spec_.n; }
    uint64_t order() const { return spec_.order; }
    Fe generator() const { return spec_.generator; }

    Fe add(Fe a, Fe b) const { return a ^ b; }
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;  // throws on a = 0
    // pow(a, e) = a^(e mod 2^n-1) for a != 0; pow(0, e) = 0 for e > 0,
    // pow(0, 0) = 1, pow(0, e < 0) throws.
    Fe pow(Fe a, int64_t e) const;
    // a^(2^(i mod n)); negative i is the inverse Frobenius, a^(2^(n - (-i mod n))).
    Fe frobenius(Fe a, int i) const;
    int trace(Fe a) const;  // in {0, 1}
    bool is_primitive(Fe a) const;  // throws on a = 0
    bool in_subfield(Fe a, int k) const;  // requires k | n
    bool seventh_power_class(Fe a) const;  // requires 3 | n, a != 0
    // g^((2^n-1)/(2^k-1)), a generator of the GF(2^k) subfield's mult. group.
    Fe subfield_generator(int k) const;

    // Canonical element text: "0", "1", "g", "g^i", or a hex mask "0x2a".
    Fe parse(std::string_view text) const;
    std::string format(Fe a) const;

    // Discrete log base g; defined for a != 0. O(n) via table for n <= 16,
    // linear scan otherwise (diagnostics only at large n).
    uint64_t dlog(Fe a) const;

private:
    FieldSpec spec_;
    std::vector<uint32_t> exp_;  // g^i, i in [0, 2^n-2]; built for n <= 16
    std::vector<uint32_t> log_;
    Fe mul_noredtab(Fe a, Fe b) const;
};

using FieldPtr = std::shared_ptr<const Field>;

// Canonical field for n; 2 <= n <= 24, throws std::invalid_argument otherwise.
FieldPtr make_field(int n);

}  // namespace apn
