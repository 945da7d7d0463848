#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apn/gf2n.hpp"
#include "apn/vbf.hpp"

namespace apn {

// Parameters for the seven function families. Per-family requirements:
//   1: n = 3k, gcd(k,3) = gcd(s,3k) = 1, k >= 3; alpha = t^(2^k-1), t primitive
//   2: n = 4k, gcd(k,2) = gcd(s,2k) = 1, k >= 3; alpha = t^(2^k-1), t primitive
//   3: n = 2k, gcd(k,s) = 1, k odd (>= 3), s odd; alpha, beta primitive;
//      gamma_i in GF(2^k), i = 1..k-1
//   4: f = x^3 + Tr(x^9), any n >= 3; no parameters
//   5: n = 3k, u primitive, v in GF(2^k), gcd(s,3k) = gcd(3,k) = 1, 3 | (k+s)
//   6: family 7 with w = 0
//   7: n = 3k, 3 | (k+s), gcd(s,3k) = gcd(3,k) = 1, u primitive,
//      v, w in GF(2^k), vw != 1
struct FamilyParams {
    int family_id = 0;
    int k = 0;
    int s = 0;
    Fe u, t, alpha, beta, v, w;
    std::vector<Fe> gamma;          // family 3 only
    bool bypass_validation = false; // test-only escape hatch; flagged in reports
};

struct FamilyError : std::runtime_error {
    explicit FamilyError(std::vector<std::string> v);
    std::vector<std::string> violations;
};

// extension degree implied by (family_id, k); throws on unknown family
int family_degree(int family_id, int k);

// Empty iff build_family would succeed. Each entry names the failed condition.
std::vector<std::string> validate(const Field& field, const FamilyParams& p);

// Validated constructor; throws FamilyError listing every violation.
// Exponents of the form 2^-k are realized as 2^(n-k); term collisions abort.
FunctionSpec build_family(FieldPtr field, const FamilyParams& p);

// The four GF(2^12) functions of the reference table, built with
// (k, s) = (4, 5), u = g and (v, w) in {(1, g^273), (1, 0), (0, g^273), (0, 0)}.
std::vector<FunctionSpec> paper_table_n12();

// The four specialized GF(2^6) forms (quadrinomial, two trinomials, binomial)
// for a primitive u and v, w in the GF(4) subfield.
std::vector<FunctionSpec> paper_forms_n6(FieldPtr field, Fe u, Fe v, Fe w);

}  // namespace apn
