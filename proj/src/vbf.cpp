#include "apn/vbf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <thread>

#include "apn/bitmatrix.hpp"

namespace apn {

namespace {

void check_exponent(const Field& f, uint64_t e) {
    if (e >= f.order())
        throw std::invalid_argument(
            "exponent out of range [0, 2^n-2]: " + std::to_string(e) +
            " (exponent 2^n-1 is not representable)");
}

int effective_workers(int requested, uint64_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    int w = requested > 0 ? requested : int(hw ? hw : 1);
    if (uint64_t(w) > jobs) w = int(jobs);
    return w < 1 ? 1 : w;
}

// partition [0, jobs) across workers; merge maps by summing
template <typename Body>
std::map<int64_t, uint64_t> parallel_histogram(uint64_t jobs, int workers, Body body) {
    int w = effective_workers(workers, jobs);
    std::vector<std::map<int64_t, uint64_t>> parts(size_t(w));
    std::vector<std::thread> threads;
    uint64_t chunk = (jobs + uint64_t(w) - 1) / uint64_t(w);
    for (int t = 0; t < w; ++t) {
        uint64_t lo = uint64_t(t) * chunk, hi = std::min(jobs, lo + chunk);
        threads.emplace_back([&, t, lo, hi] { body(lo, hi, parts[size_t(t)]); });
    }
    for (auto& th : threads) th.join();
    std::map<int64_t, uint64_t> merged;
    for (auto& p : parts)
        for (auto& [v, m] : p) merged[v] += m;
    return merged;
}

Spectrum to_spectrum(Spectrum::Kind kind, const std::map<int64_t, uint64_t>& hist) {
    Spectrum s{kind, {}};
    s.counts.assign(hist.begin(), hist.end());
    return s;
}

}  // namespace

uint64_t Spectrum::total() const {
    uint64_t t = 0;
    for (auto& [v, m] : counts) t += m;
    return t;
}

int64_t Spectrum::max_value() const {
    int64_t best = 0;
    for (auto& [v, m] : counts)
        if (m > 0 && v > best) best = v;
    return best;
}

FunctionSpec FunctionSpec::from_terms(
    FieldPtr field, const std::vector<std::pair<std::string, uint64_t>>& terms) {
    std::vector<Term> parsed;
    parsed.reserve(terms.size());
    for (auto& [txt, e] : terms) parsed.push_back({field->parse(txt), e});
    return from_terms(std::move(field), std::move(parsed));
}

FunctionSpec FunctionSpec::from_terms(FieldPtr field, std::vector<Term> terms) {
    const Field& F = *field;
    // canonicalize: reduce nothing (exponents must already be in range),
    // merge equal exponents by coefficient addition, drop zeros
    std::map<uint64_t, Fe> merged;
    for (const Term& t : terms) {
        check_exponent(F, t.exp);
        if (t.coeff == fe_zero) continue;
        Fe& c = merged[t.exp];
        c = c ^ t.coeff;
        if (c == fe_zero) merged.erase(t.exp);
    }
    FunctionSpec f;
    f.field_ = std::move(field);
    f.sparse_ = true;
    for (auto& [e, c] : merged) f.terms_.push_back({c, e});

    // materialize the table: walk x through generator powers, keeping one
    // running power per term (one mul per term per element)
    const uint64_t N = F.order() + 1;
    f.table_.assign(N, fe_zero);
    Fe at_zero = fe_zero;  // constant term
    for (const Term& t : f.terms_)
        if (t.exp == 0) at_zero = at_zero ^ t.coeff;
    f.table_[0] = at_zero;
    size_t k = f.terms_.size();
    std::vector<Fe> powers(k), steps(k);
    for (size_t i = 0; i < k; ++i) {
        powers[i] = f.terms_[i].coeff;  // coeff * (g^0)^e
        steps[i] = F.pow(F.generator(), int64_t(f.terms_[i].exp));
    }
    Fe x = fe_one;
    for (uint64_t j = 0; j < F.order(); ++j) {
        Fe acc = fe_zero;
        for (size_t i = 0; i < k; ++i) acc = acc ^ powers[i];
        f.table_[x.v] = acc;
        for (size_t i = 0; i < k; ++i) powers[i] = F.mul(powers[i], steps[i]);
        x = F.mul(x, F.generator());
    }
    return f;
}

FunctionSpec FunctionSpec::from_table(FieldPtr field, std::vector<Fe> table) {
    if (table.size() != field->order() + 1)
        throw std::invalid_argument("table size must be 2^n");
    FunctionSpec f;
    f.field_ = std::move(field);
    f.sparse_ = false;
    f.table_ = std::move(table);
    return f;
}

Fe FunctionSpec::eval_terms(Fe x) const {
    if (!sparse_) throw std::logic_error("eval_terms on table-backed function");
    const Field& F = *field_;
    Fe acc = fe_zero;
    for (const Term& t : terms_) acc = acc ^ F.mul(t.coeff, F.pow(x, int64_t(t.exp)));
    return acc;
}

std::vector<uint32_t> differential_row(const FunctionSpec& f, Fe q) {
    if (q == fe_zero) throw std::invalid_argument("differential_row: q must be nonzero");
    const uint64_t N = f.field()->order() + 1;
    std::vector<uint32_t> hist(N, 0);
    const auto& T = f.table();
    for (uint64_t x = 0; x < N; ++x) ++hist[(T[x] ^ T[x ^ q.v]).v];
    return hist;
}

namespace {

void check_cap(const FunctionSpec& f, const SpectraOptions& opts) {
    if (f.n() > opts.cap)
        throw std::invalid_argument("spectra capped at n <= " + std::to_string(opts.cap) +
                                    " (raise the cap to override)");
}

}  // namespace

Spectrum differential_spectrum(const FunctionSpec& f, const SpectraOptions& opts) {
    check_cap(f, opts);
    const uint64_t N = f.field()->order() + 1;
    const auto& T = f.table();
    auto hist = parallel_histogram(
        N - 1, opts.workers, [&](uint64_t lo, uint64_t hi, std::map<int64_t, uint64_t>& out) {
            std::vector<uint32_t> row(N);
            for (uint64_t qi = lo; qi < hi; ++qi) {
                uint64_t q = qi + 1;
                std::fill(row.begin(), row.end(), 0);
                for (uint64_t x = 0; x < N; ++x) ++row[(T[x] ^ T[x ^ q]).v];
                for (uint64_t p = 0; p < N; ++p) ++out[row[p]];
            }
        });
    return to_spectrum(Spectrum::Kind::differential, hist);
}

int64_t differential_uniformity(const FunctionSpec& f, const SpectraOptions& opts) {
    return differential_spectrum(f, opts).max_value();
}

int64_t differential_uniformity_quadratic(const FunctionSpec& f) {
    if (!is_quadratic(f)) throw std::invalid_argument("function is not quadratic");
    const Field& F = *f.field();
    const int n = F.n();
    const auto& T = f.table();
    const uint64_t N = F.order() + 1;
    int64_t best = 0;
    for (uint64_t q = 1; q < N; ++q) {
        // columns of the linearized map x -> f(x+q)+f(x)+f(q)+f(0)
        BitMatrix m(uint64_t(n), uint64_t(n));
        for (int j = 0; j < n; ++j) {
            uint64_t b = uint64_t(1) << j;
            uint32_t img = (T[b ^ q] ^ T[b] ^ T[q] ^ T[0]).v;
            for (int i = 0; i < n; ++i)
                if ((img >> i) & 1) m.set(uint64_t(i), uint64_t(j), true);
        }
        int64_t ker = int64_t(1) << (n - int(bitmatrix_rank(m)));
        if (ker > best) best = ker;
    }
    return best;
}

uint32_t walsh_mask(const Field& field, Fe a) {
    uint32_t m = 0;
    for (int i = 0; i < field.n(); ++i)
        if (field.trace(field.mul(a, Fe{uint32_t(1) << i}))) m |= uint32_t(1) << i;
    return m;
}

std::vector<int32_t> walsh_row(const FunctionSpec& f, Fe b) {
    const Field& F = *f.field();
    const uint64_t N = F.order() + 1;
    const auto& T = f.table();
    std::vector<int32_t> row(N);
    for (uint64_t x = 0; x < N; ++x) row[x] = F.trace(F.mul(b, T[x])) ? -1 : 1;
    for (uint64_t len = 1; len < N; len <<= 1) {
        for (uint64_t i = 0; i < N; i += len << 1) {
            for (uint64_t j = i; j < i + len; ++j) {
                int32_t u = row[j], v = row[j + len];
                row[j] = u + v;
                row[j + len] = u - v;
            }
        }
    }
    return row;
}

int64_t walsh_value(const FunctionSpec& f, Fe a, Fe b) {
    auto row = walsh_row(f, b);
    return row[walsh_mask(*f.field(), a)];
}

Spectrum walsh_spectrum(const FunctionSpec& f, const SpectraOptions& opts) {
    check_cap(f, opts);
    const uint64_t N = f.field()->order() + 1;
    auto hist = parallel_histogram(
        N - 1, opts.workers, [&](uint64_t lo, uint64_t hi, std::map<int64_t, uint64_t>& out) {
            for (uint64_t bi = lo; bi < hi; ++bi) {
                auto row = walsh_row(f, Fe{uint32_t(bi + 1)});
                for (int32_t w : row) ++out[w < 0 ? -int64_t(w) : int64_t(w)];
            }
        });
    return to_spectrum(Spectrum::Kind::walsh_extended, hist);
}

int algebraic_degree(const FunctionSpec& f) {
    if (const auto* terms = f.terms()) {
        int d = 0;
        for (const Term& t : *terms) d = std::max(d, std::popcount(t.exp));
        return d;
    }
    // ANF of all coordinate functions at once via the Mobius transform on the
    // n-bit-packed table
    const int n = f.n();
    const uint64_t N = f.field()->order() + 1;
    std::vector<uint32_t> anf(N);
    for (uint64_t x = 0; x < N; ++x) anf[x] = f.table()[x].v;
    for (int i = 0; i < n; ++i) {
        uint64_t bit = uint64_t(1) << i;
        for (uint64_t x = 0; x < N; ++x)
            if (x & bit) anf[x] ^= anf[x ^ bit];
    }
    int d = 0;
    for (uint64_t x = 0; x < N; ++x)
        if (anf[x]) d = std::max(d, std::popcount(x));
    return d;
}

bool is_quadratic(const FunctionSpec& f) { return algebraic_degree(f) <= 2; }

}  // namespace apn
