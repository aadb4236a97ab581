#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "auxpoly.hpp"
#include "intpoly.hpp"

namespace eisen {

// Deterministic primality for the full 64-bit range (Miller-Rabin with a
// fixed witness set; no probabilistic paths).
bool is_prime(std::uint64_t k);

// Exact factorization of a >= 1, sorted by prime. Trial division for small
// factors, Pollard rho for any large cofactor.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t a);

// All primes p with p || a (p divides a, p^2 does not). Empty iff a is
// powerful; a = 1 has no prime divisors and counts as powerful.
std::vector<std::uint64_t> singly_dividing_primes(std::uint64_t a);

// Eisenstein indicator: p does not divide the leading coefficient, divides
// every other coefficient, and p^2 does not divide the constant term.
// True certifies irreducibility over the integers. Throws when p is not
// prime or f has degree 0.
bool eis(const IntPoly& f, std::uint64_t p);

enum class TheoremTag { T1, T2, T3 };

struct TheoremResult {
    bool applies = false;
    std::optional<std::uint64_t> witness;
};

// T1: some p || (ell - m) with p not dividing n  -> X_n irreducible.
// T2: some p || ell with p not dividing n        -> Y_n irreducible.
// T3: 2*ell - m singly even (any n)              -> Z_n irreducible.
// The smallest admissible witness prime is returned.
TheoremResult theorem_applies(TheoremTag tag, unsigned n, const OffsetPair& pair);

enum class ResidualKind {
    None,      // every exponent n >= 2 is covered (T3 holds)
    All,       // no theorem applies at any exponent
    Multiples  // exactly the n >= 2 divisible by the modulus remain
};

struct ResidualClass {
    ResidualKind kind = ResidualKind::All;
    std::uint64_t modulus = 0;  // set when kind == Multiples; squarefree
};

struct PairVerdict {
    OffsetPair pair;
    std::vector<std::uint64_t> t1_primes;  // p || (ell - m), ascending
    std::vector<std::uint64_t> t2_primes;  // p || ell, ascending
    bool t3_applies = false;
    ResidualClass residual;
};

// Aggregates the exponent-independent data of all three theorems. The
// residual is None when T3 applies, All when no witness primes exist, and
// otherwise Multiples of the product of the witness primes (an exponent n
// is covered exactly when some witness prime does not divide n).
PairVerdict classify_pair(const OffsetPair& pair);

// Checks Q_n(ell, m) = n * m^(n-1) != 0 (mod p) by evaluating both sides
// honestly. Preconditions (n > 1, p prime, p | ell - m, p does not divide
// n, valid pair) are enforced with std::invalid_argument; they make the
// statement inapplicable, not false.
bool lemma_q_check(unsigned n, const OffsetPair& pair, std::uint64_t p);

}  // namespace eisen
