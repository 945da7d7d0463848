#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apn/gf2n.hpp"

namespace apn {

struct Term {
    Fe coeff;      // nonzero in canonical form
    uint64_t exp;  // in [0, 2^n-2]; 2^n-1 is not representable
};

// f : GF(2^n) -> GF(2^n) as a sparse univariate polynomial with a
// materialized truth table. Canonical form: exponents strictly increasing,
// coefficients nonzero. Table-backed functions (e.g. EA transforms) carry
// no sparse form.
class FunctionSpec {
public:
    static FunctionSpec from_terms(FieldPtr field,
                                   const std::vector<std::pair<std::string, uint64_t>>& terms);
    static FunctionSpec from_terms(FieldPtr field, std::vector<Term> terms);
    static FunctionSpec from_table(FieldPtr field, std::vector<Fe> table);

    const FieldPtr& field() const { return field_; }
    int n() const { return field_->n(); }
    // null for table-backed functions
    const std::vector<Term>* terms() const { return sparse_ ? &terms_ : nullptr; }
    const std::vector<Fe>& table() const { return table_; }
    Fe operator()(Fe x) const { return table_[x.v]; }

    // re-evaluates the sparse form at x (consistency checks)
    Fe eval_terms(Fe x) const;

private:
    FunctionSpec() = default;
    FieldPtr field_;
    bool sparse_ = false;
    std::vector<Term> terms_;
    std::vector<Fe> table_;
};

struct Spectrum {
    enum class Kind { differential, walsh_extended, dual_weights };
    Kind kind;
    // sorted (value, multiplicity) pairs, multiplicities positive
    std::vector<std::pair<int64_t, uint64_t>> counts;

    uint64_t total() const;
    int64_t max_value() const;
    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.kind == b.kind && a.counts == b.counts;
    }
};

struct SpectraOptions {
    int cap = 16;     // refuse spectra above this degree unless raised
    int workers = 0;  // 0 = hardware concurrency
};

// Histogram of solution counts of f(x+q)+f(x) = p over all (q != 0, p).
Spectrum differential_spectrum(const FunctionSpec& f, const SpectraOptions& opts = {});
int64_t differential_uniformity(const FunctionSpec& f, const SpectraOptions& opts = {});
// per-q verbose row: histogram over p of solution counts
std::vector<uint32_t> differential_row(const FunctionSpec& f, Fe q);

// Kernel-rank method for quadratic f: max over q != 0 of
// 2^(n - rank(x -> f(x+q)+f(x)+f(q)+f(0))). Throws if f is not quadratic.
int64_t differential_uniformity_quadratic(const FunctionSpec& f);

// W_f(a,b) = sum_x (-1)^(tr(b f(x)) + tr(a x)).
// The extended spectrum is the multiset of |W| over (a, b != 0), each
// b-row produced by one fast Walsh-Hadamard transform of the sign vector.
Spectrum walsh_spectrum(const FunctionSpec& f, const SpectraOptions& opts = {});
int64_t walsh_value(const FunctionSpec& f, Fe a, Fe b);
// one transformed row: W(a,b) for all a, indexed by linear-form mask;
// index of field element a is walsh_mask(field, a)
std::vector<int32_t> walsh_row(const FunctionSpec& f, Fe b);
uint32_t walsh_mask(const Field& field, Fe a);

// max 2-weight of exponents in the sparse form; table-backed functions are
// measured through the coordinate-function ANF (Mobius transform).
int algebraic_degree(const FunctionSpec& f);
bool is_quadratic(const FunctionSpec& f);

}  // namespace apn
