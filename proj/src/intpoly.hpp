#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace eisen {

// Dense polynomial over arbitrary-precision integers. Coefficients are
// stored leading-first, so coeffs()[0] is the leading coefficient and
// coeffs()[k] multiplies t^(degree-k). The zero polynomial is the single
// coefficient 0; any other polynomial has a nonzero leading coefficient.
class IntPoly {
public:
    IntPoly() : c_{mpz_class(0)} {}
    explicit IntPoly(std::vector<mpz_class> coeffs);

    std::size_t degree() const { return c_.size() - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const { return c_.front(); }
    const mpz_class& constant() const { return c_.back(); }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
    bool is_monic() const { return c_[0] == 1; }

    bool operator==(const IntPoly& other) const { return c_ == other.c_; }

private:
    std::vector<mpz_class> c_;
};

struct LinearSplit {
    IntPoly quotient;
    mpz_class remainder;
};

// f(x), evaluated exactly by Horner's scheme.
mpz_class eval_at(const IntPoly& f, const mpz_class& x);

// (t + c)^n as a monic degree-n polynomial; n >= 1.
IntPoly expand_binomial_power(const mpz_class& c, unsigned n);

// g(t) = f(t - r), exact, same degree and leading coefficient.
IntPoly compose_shift(const IntPoly& f, const mpz_class& r);

// Splits a monic f of degree >= 1 as f(t) = (t - r) * quotient(t) + remainder.
// The quotient coefficients, read leading-first, are the values at r of the
// successive leading truncations of f. Throws std::invalid_argument when f
// is not monic or has degree 0.
LinearSplit horner_split(const IntPoly& f, const mpz_class& r);

// Sum and difference, for assembling identity checks.
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);

namespace detail {
// Synthetic division by (t - r) without the monic requirement.
LinearSplit divide_linear(const IntPoly& f, const mpz_class& r);
}  // namespace detail

}  // namespace eisen
