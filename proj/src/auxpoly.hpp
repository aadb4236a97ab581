#pragma once

#include <cstdint>
#include <vector>

#include "intpoly.hpp"

namespace eisen {

// Offset pair (ell, m) with ell > m > 0 and gcd(ell, m) = 1. The pair
// parameterizes the whole family: a zero mu of X_n corresponds to the
// candidate triple (mu, mu + m, mu + ell).
struct OffsetPair {
    std::uint64_t ell = 0;
    std::uint64_t m = 0;
};

// Throws std::invalid_argument naming the violated constraint.
void validate_pair(const OffsetPair& pair);

enum class AuxKind { X, Y, Z };

const char* aux_kind_name(AuxKind kind);

// Q_k(a, b) = sum_{i=0}^{k-1} a^(k-1-i) * b^i. Equals (a^k - b^k) / (a - b)
// when a != b, but the summation form is also defined at a = b and for
// negative arguments; k >= 1.
mpz_class q_value(unsigned k, const mpz_class& a, const mpz_class& b);

// The monic degree-n polynomial of the requested kind. Coefficient of
// t^(n-k), k = 1..n:
//   X: -C(n,k) * (ell - m) * Q_k(ell, m)
//   Y: (-1)^k * C(n,k) * ell * Q_k(m, m - ell)
//   Z: (-1)^k * C(n,k) * (ell^k + (ell - m)^k)
IntPoly build_aux(AuxKind kind, unsigned n, const OffsetPair& pair);

// Checks the closed three-term binomial form against the built coefficients:
//   X_n(t) = t^n + (t + m)^n - (t + ell)^n
//   Y_n(t) = (t - m)^n + t^n - (t + ell - m)^n
//   Z_n(t) = (t - ell)^n + (t - (ell - m))^n - t^n
// Exact coefficient-for-coefficient comparison.
bool verify_zero_identity(AuxKind kind, unsigned n, const OffsetPair& pair);

// Checks X_n(t - m) = Y_n(t) and X_n(t - ell) = Z_n(t) exactly.
bool verify_shift_equivalence(unsigned n, const OffsetPair& pair);

// All integer roots of a monic polynomial, sorted ascending, with
// multiplicity. Candidates are divisors of the constant term, bounded by
// Fujiwara's root bound; a small-prime residue filter certifies most
// root-free inputs without scanning. Throws if f is not monic.
std::vector<mpz_class> integer_root_scan(const IntPoly& f);

}  // namespace eisen
