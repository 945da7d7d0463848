#include "apn/gf2n.hpp"

#include <charconv>
#include <stdexcept>

namespace apn {

namespace {

constexpr int kMinDegree = 2;
constexpr int kMaxDegree = 24;
constexpr int kLogTableMaxDegree = 16;

// Carryless multiply mod the defining polynomial, one bit of b at a time.
uint32_t mulmod(uint32_t a, uint32_t b, uint32_t modulus, int n) {
    uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> n) & 1) a ^= modulus;
    }
    return r;
}

uint32_t poly_rem(uint64_t a, uint64_t b) {
    int db = 63 - __builtin_clzll(b);
    while (a >= (uint64_t(1) << db)) {
        int da = 63 - __builtin_clzll(a);
        if (da < db) break;
        a ^= b << (da - db);
        if (a == 0) break;
    }
    return static_cast<uint32_t>(a);
}

bool is_irreducible(uint32_t p, int n) {
    for (int d = 1; d <= n / 2; ++d) {
        for (uint32_t m = uint32_t(1) << d; m < (uint32_t(2) << d); ++m) {
            if (poly_rem(p, m) == 0) return false;
        }
    }
    return true;
}

std::vector<std::pair<uint64_t, int>> factorize(uint64_t x) {
    std::vector<std::pair<uint64_t, int>> fs;
    for (uint64_t d = 2; d * d <= x; ++d) {
        if (x % d) continue;
        int mult = 0;
        while (x % d == 0) { x /= d; ++mult; }
        fs.emplace_back(d, mult);
    }
    if (x > 1) fs.emplace_back(x, 1);
    return fs;
}

uint32_t powmod(uint32_t a, uint64_t e, uint32_t modulus, int n) {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, modulus, n);
        a = mulmod(a, a, modulus, n);
        e >>= 1;
    }
    return r;
}

uint32_t smallest_primitive_poly(int n, const std::vector<uint64_t>& primes) {
    const uint64_t order = (uint64_t(1) << n) - 1;
    for (uint32_t m = (uint32_t(1) << n) + 1; m < (uint32_t(2) << n); m += 2) {
        if (!is_irreducible(m, n)) continue;
        bool primitive = true;
        for (uint64_t p : primes) {
            if (powmod(2, order / p, m, n) == 1) { primitive = false; break; }
        }
        if (primitive) return m;
    }
    throw std::logic_error("no primitive polynomial found");  // unreachable
}

}  // namespace

Field::Field(int n) {
    if (n < kMinDegree || n > kMaxDegree)
        throw std::invalid_argument("field degree out of range [2, 24]: " + std::to_string(n));
    spec_.n = n;
    spec_.order = (uint64_t(1) << n) - 1;
    spec_.factorization = factorize(spec_.order);
    for (auto& [p, mult] : spec_.factorization) spec_.factor_list.push_back(p);
    spec_.modulus = smallest_primitive_poly(n, spec_.factor_list);
    spec_.generator = Fe{2};
    if (n <= kLogTableMaxDegree) {
        exp_.resize(spec_.order);
        log_.assign(spec_.order + 1, 0);
        uint32_t v = 1;
        for (uint64_t i = 0; i < spec_.order; ++i) {
            exp_[i] = v;
            log_[v] = static_cast<uint32_t>(i);
            v = mulmod(v, 2, spec_.modulus, n);
        }
    }
}

Fe Field::mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return fe_zero;
    if (!exp_.empty()) {
        uint64_t l = uint64_t(log_[a.v]) + log_[b.v];
        if (l >= spec_.order) l -= spec_.order;
        return Fe{exp_[l]};
    }
    return Fe{mulmod(a.v, b.v, spec_.modulus, spec_.n)};
}

Fe Field::inv(Fe a) const {
    if (a.v == 0) throw std::invalid_argument("inversion of zero");
    return pow(a, -1);
}

Fe Field::pow(Fe a, int64_t e) const {
    if (a.v == 0) {
        if (e > 0) return fe_zero;
        if (e == 0) return fe_one;
        throw std::invalid_argument("inversion of zero");
    }
    int64_t order = static_cast<int64_t>(spec_.order);
    int64_t r = e % order;
    if (r < 0) r += order;
    if (!exp_.empty()) {
        uint64_t l = (uint64_t(log_[a.v]) * uint64_t(r)) % spec_.order;
        return Fe{exp_[l]};
    }
    uint32_t acc = 1, base = a.v;
    uint64_t ee = static_cast<uint64_t>(r);
    while (ee) {
        if (ee & 1) acc = mulmod(acc, base, spec_.modulus, spec_.n);
        base = mulmod(base, base, spec_.modulus, spec_.n);
        ee >>= 1;
    }
    return Fe{acc};
}

Fe Field::frobenius(Fe a, int i) const {
    int r = i % spec_.n;
    if (r < 0) r += spec_.n;
    Fe acc = a;
    for (int j = 0; j < r; ++j) acc = mul(acc, acc);
    return acc;
}

int Field::trace(Fe a) const {
    Fe acc = fe_zero;
    Fe p = a;
    for (int i = 0; i < spec_.n; ++i) {
        acc = acc ^ p;
        p = mul(p, p);
    }
    // trace lands in the prime field
    return acc.v & 1;
}

bool Field::is_primitive(Fe a) const {
    if (a.v == 0) throw std::invalid_argument("is_primitive: zero input");
    for (uint64_t p : spec_.factor_list) {
        if (pow(a, static_cast<int64_t>(spec_.order / p)) == fe_one) return false;
    }
    return true;
}

bool Field::in_subfield(Fe a, int k) const {
    if (k <= 0 || spec_.n % k != 0)
        throw std::invalid_argument("in_subfield: k does not divide n");
    return frobenius(a, k) == a;
}

bool Field::seventh_power_class(Fe a) const {
    if (spec_.n % 3 != 0)
        throw std::invalid_argument("seventh_power_class: n not divisible by 3");
    if (a.v == 0) throw std::invalid_argument("seventh_power_class: zero input");
    return pow(a, static_cast<int64_t>(spec_.order / 7)) == fe_one;
}

Fe Field::subfield_generator(int k) const {
    if (k <= 0 || spec_.n % k != 0)
        throw std::invalid_argument("subfield_generator: k does not divide n");
    uint64_t sub = (uint64_t(1) << k) - 1;
    return pow(spec_.generator, static_cast<int64_t>(spec_.order / sub));
}

uint64_t Field::dlog(Fe a) const {
    if (a.v == 0) throw std::invalid_argument("dlog of zero");
    if (!log_.empty()) return log_[a.v];
    Fe acc = fe_one;
    for (uint64_t i = 0; i < spec_.order; ++i) {
        if (acc == a) return i;
        acc = mul(acc, spec_.generator);
    }
    throw std::logic_error("dlog: element not in group");  // unreachable
}

Fe Field::parse(std::string_view text) const {
    auto fail = [&] {
        throw std::invalid_argument("malformed element text: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    if (text == "0") return fe_zero;
    if (text == "1") return fe_one;
    if (text == "g") return spec_.generator;
    if (text.starts_with("g^")) {
        int64_t e = 0;
        auto body = text.substr(2);
        auto [p, ec] = std::from_chars(body.begin(), body.end(), e);
        if (ec != std::errc{} || p != body.end()) fail();
        return pow(spec_.generator, e);
    }
    if (text.starts_with("0x") || text.starts_with("0X")) {
        uint32_t v = 0;
        auto body = text.substr(2);
        auto [p, ec] = std::from_chars(body.begin(), body.end(), v, 16);
        if (ec != std::errc{} || p != body.end()) fail();
        if (v > spec_.order) fail();  // mask must fit in n bits
        return Fe{v};
    }
    fail();
    return fe_zero;
}

std::string Field::format(Fe a) const {
    if (a.v == 0) return "0";
    if (a.v == 1) return "1";
    if (!log_.empty()) return "g^" + std::to_string(log_[a.v]);
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", a.v);
    return buf;
}

FieldPtr make_field(int n) { return std::make_shared<Field>(n); }

}  // namespace apn
