#include "apn/families.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace apn {

namespace {

std::string join(const std::vector<std::string>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "; " : "") << v[i];
    return os.str();
}

// 2^(i mod n) as an exponent value mod 2^n-1
uint64_t e2(int i, int n) {
    int r = i % n;
    if (r < 0) r += n;
    return uint64_t(1) << r;
}

}  // namespace

FamilyError::FamilyError(std::vector<std::string> v)
    : std::runtime_error("invalid family parameters: " + join(v)), violations(std::move(v)) {}

int family_degree(int family_id, int k) {
    switch (family_id) {
        case 1: case 5: case 6: case 7: return 3 * k;
        case 2: return 4 * k;
        case 3: return 2 * k;
        case 4: throw std::invalid_argument("family 4 has no k; use the field's n");
        default: throw std::invalid_argument("unknown family id");
    }
}

std::vector<std::string> validate(const Field& F, const FamilyParams& p) {
    std::vector<std::string> out;
    const int n = F.n();
    auto require = [&](bool ok, const std::string& msg) {
        if (!ok) out.push_back(msg);
    };
    auto gcd_is_one = [](int a, int b) { return std::gcd(a, b) == 1; };

    if (p.family_id < 1 || p.family_id > 7) return {"unknown family id"};
    if (p.family_id == 4) return out;  // no parameters

    if (p.k < 2) return {"k must be at least 2"};
    if (family_degree(p.family_id, p.k) != n)
        return {"field degree mismatch: family " + std::to_string(p.family_id) +
                " with k = " + std::to_string(p.k) + " needs n = " +
                std::to_string(family_degree(p.family_id, p.k))};
    if (p.s < 1 || p.s >= n) return {"s must be in [1, n-1]"};

    switch (p.family_id) {
        case 1:
            require(p.k >= 3, "k must be at least 3");
            require(gcd_is_one(p.k, 3), "k must be coprime to 3");
            require(gcd_is_one(p.s, 3 * p.k), "s must be coprime to 3k");
            require(p.t.v != 0 && F.is_primitive(p.t), "t must be primitive");
            break;
        case 2:
            require(p.k >= 3, "k must be at least 3");
            require(p.k % 2 == 1, "k must be odd");
            require(gcd_is_one(p.s, 2 * p.k), "s must be coprime to 2k");
            require(p.t.v != 0 && F.is_primitive(p.t), "t must be primitive");
            break;
        case 3:
            require(p.k >= 3, "k must be at least 3");
            require(p.k % 2 == 1, "k must be odd");
            require(p.s % 2 == 1, "s must be odd");
            require(gcd_is_one(p.k, p.s), "k and s must be coprime");
            require(p.alpha.v != 0 && F.is_primitive(p.alpha), "alpha must be primitive");
            require(p.beta.v != 0 && F.is_primitive(p.beta), "beta must be primitive");
            require(p.gamma.size() == size_t(p.k - 1),
                    "gamma must list k-1 subfield elements");
            for (size_t i = 0; i < p.gamma.size(); ++i)
                require(F.in_subfield(p.gamma[i], p.k),
                        "gamma_" + std::to_string(i + 1) + " must lie in GF(2^k)");
            break;
        case 5: case 6: case 7: {
            require((p.k + p.s) % 3 == 0, "k+s not divisible by 3");
            require(gcd_is_one(p.s, 3 * p.k), "s must be coprime to 3k");
            require(gcd_is_one(3, p.k), "k must be coprime to 3");
            require(p.u.v != 0 && F.is_primitive(p.u), "u must be primitive");
            if (p.family_id == 5) {
                require(F.in_subfield(p.v, p.k), "v must lie in GF(2^k)");
                require(p.w.v == 0, "family 5 takes no w");
            } else {
                require(F.in_subfield(p.v, p.k), "v must lie in GF(2^k)");
                require(F.in_subfield(p.w, p.k), "w must lie in GF(2^k)");
                if (p.family_id == 6)
                    require(p.w.v == 0, "family 6 requires w = 0");
                if (F.mul(p.v, p.w) == fe_one) out.push_back("vw must differ from 1");
            }
            break;
        }
        default: break;
    }
    return out;
}

namespace {

// coefficient-exponent pairs for the quadrinomial shape shared by
// families 5, 6, 7; family 5 has its own coefficient pattern
std::vector<Term> family567_terms(const Field& F, const FamilyParams& p) {
    const int n = F.n(), k = p.k, s = p.s;
    if (p.family_id == 5) {
        return {{p.u, e2(-k, n) + e2(k + s, n)},
                {F.frobenius(p.u, k), e2(s, n) + 1},
                {p.v, e2(k + s, n) + e2(s, n)}};
    }
    Fe wcoef = F.mul(p.w, F.pow(p.u, int64_t((uint64_t(1) << k) + 1)));
    return {{F.frobenius(p.u, k), e2(-k, n) + e2(k + s, n)},
            {p.u, e2(s, n) + 1},
            {p.v, e2(-k, n) + 1},
            {wcoef, e2(k + s, n) + e2(s, n)}};
}

std::vector<Term> family12_terms(const Field& F, const FamilyParams& p) {
    const int n = F.n(), k = p.k, s = p.s;
    Fe alpha = F.pow(p.t, int64_t((uint64_t(1) << k) - 1));
    int i, m;
    if (p.family_id == 1) {
        i = (s * k) % 3;
        m = (3 - i) % 3;
    } else {
        i = (s * k) % 4;
        m = 4 - i;
    }
    return {{fe_one, e2(s, n) + 1},
            {alpha, e2(i * k, n) + e2(m * k + s, n)}};
}

std::vector<Term> family3_terms(const Field& F, const FamilyParams& p) {
    const int n = F.n(), k = p.k, s = p.s;
    std::vector<Term> t = {{p.alpha, e2(s, n) + 1},
                           {F.frobenius(p.alpha, k), e2(k + s, n) + e2(k, n)},
                           {p.beta, e2(k, n) + 1}};
    for (int i = 1; i < k; ++i)
        t.push_back({p.gamma[size_t(i - 1)], e2(k + i, n) + e2(i, n)});
    return t;
}

std::vector<Term> family4_terms(const Field& F) {
    const int n = F.n();
    std::vector<Term> t = {{fe_one, 3}};
    for (int i = 0; i < n; ++i) {
        uint64_t e = (uint64_t(9) << i) % F.order();
        t.push_back({fe_one, e});
    }
    return t;
}

}  // namespace

FunctionSpec build_family(FieldPtr field, const FamilyParams& p) {
    const Field& F = *field;
    if (!p.bypass_validation) {
        auto violations = validate(F, p);
        if (!violations.empty()) throw FamilyError(std::move(violations));
    }
    if (p.family_id == 4 && F.n() < 3)
        throw FamilyError({"family 4 needs n >= 3 (x^9 degenerates below GF(2^3))"});

    std::vector<Term> terms;
    switch (p.family_id) {
        case 1: case 2: terms = family12_terms(F, p); break;
        case 3: terms = family3_terms(F, p); break;
        case 4: terms = family4_terms(F); break;
        default: terms = family567_terms(F, p); break;
    }
    // family terms with nonzero coefficients must have pairwise distinct
    // exponents; a collision means malformed hand-built params (family 4's
    // trace conjugates are the legitimate exception and merge canonically)
    if (p.family_id != 4) {
        std::map<uint64_t, int> seen;
        for (const Term& t : terms)
            if (t.coeff != fe_zero && ++seen[t.exp] > 1)
                throw FamilyError({"term exponent collision at " + std::to_string(t.exp)});
    }
    return FunctionSpec::from_terms(std::move(field), std::move(terms));
}

std::vector<FunctionSpec> paper_table_n12() {
    FieldPtr F = make_field(12);
    Fe u = F->generator();
    Fe wsub = F->pow(u, 273);  // generates the GF(2^4) subfield
    std::vector<std::pair<Fe, Fe>> vw = {
        {fe_one, wsub}, {fe_one, fe_zero}, {fe_zero, wsub}, {fe_zero, fe_zero}};
    std::vector<FunctionSpec> out;
    for (auto& [v, w] : vw) {
        FamilyParams p;
        p.family_id = 7;
        p.k = 4;
        p.s = 5;
        p.u = u;
        p.v = v;
        p.w = w;
        out.push_back(build_family(F, p));
    }
    return out;
}

std::vector<FunctionSpec> paper_forms_n6(FieldPtr field, Fe u, Fe v, Fe w) {
    if (field->n() != 6) throw std::invalid_argument("paper_forms_n6 needs GF(2^6)");
    std::vector<std::pair<Fe, Fe>> vw = {{v, w}, {v, fe_zero}, {fe_zero, w}, {fe_zero, fe_zero}};
    std::vector<FunctionSpec> out;
    for (auto& [vv, ww] : vw) {
        FamilyParams p;
        p.family_id = 7;
        p.k = 2;
        p.s = 1;
        p.u = u;
        p.v = vv;
        p.w = ww;
        out.push_back(build_family(field, p));
    }
    return out;
}

}  // namespace apn
