#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "apn/families.hpp"
#include "apn/gf2n.hpp"

namespace apn {

// Per-q context for the APN proof of the quadrinomial family: the four
// coefficients of the linearized kernel polynomial
//   Delta(x) = A x + B x^(2^-k) + C x^(2^s) + D x^(2^(k+s))
// and the obstruction value a = u^(2^k-1) q^(2^-k + 2^(k+s) - 2^s - 1).
// Construction verifies A+B+C+D = 0, A,B,C,D all nonzero, a != 1 and a not
// a seventh power.
struct ProofContext {
    FieldPtr field;
    FamilyParams params;
    Fe q;
    Fe A, B, C, D;
    Fe a_value;
};

ProofContext make_context(FieldPtr field, const FamilyParams& params, Fe q);

Fe delta_eval(const ProofContext& ctx, Fe x);

// Exact root set of Delta over GF(2^n), via the kernel of its n x n binary
// matrix. {0, 1} for valid family-7 parameters.
std::vector<Fe> delta_roots(const ProofContext& ctx);

// L_theta(T) = T + theta T^(2^k) + theta^(2^k+1) T^(2^-k) annihilates
// T = theta x + x^(2^-k) whenever theta is a (2^k-1)-th power. Returns true
// iff that holds over the sample. Throws if theta is not in the power class.
bool check_annihilator(const Field& field, int k, Fe theta, std::span<const Fe> sample);

// a is never 1 and never a seventh power; also recomputes a from the
// factored form u^(2^k-1) q^((2^(k+s)-1)(1-2^-k)) and confirms equality.
bool check_seventh_power_obstruction(const ProofContext& ctx);

// Left sides of the two derived linearized equations at x (both vanish on
// every root of Delta):
//   (1)  (1+a^-2^(k-s)) x + (a^2^-s + a^-2^(k-s)) x^(2^k) + (1+a^2^-s) x^(2^-k)
//   (2)  (1+a^-2^-k) x + (1+a) x^(2^k) + (a + a^-2^-k) x^(2^-k)
std::pair<Fe, Fe> derived_equation_residuals(const ProofContext& ctx, Fe x);

enum class QMode { exhaustive, sample };

struct ProofStep {
    std::string name;
    bool pass = false;
    uint64_t checked = 0;
    std::string witness;  // first counterexample, if any
};

struct ProofReport {
    bool validation_bypassed = false;
    std::vector<ProofStep> steps;
    bool all_pass() const;
};

// Runs every proof step over q != 0 (exhaustive, or `samples` seeded draws).
ProofReport run_proof_suite(FieldPtr field, const FamilyParams& params, QMode mode,
                            uint64_t samples = 10000, uint64_t seed = 1729);

}  // namespace apn
