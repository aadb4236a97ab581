#include "intpoly.hpp"

#include <stdexcept>
#include <utility>

namespace eisen {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) {
        c_.push_back(mpz_class(0));
        return;
    }
    // Strip leading zeros down to a single coefficient.
    std::size_t lead = 0;
    while (lead + 1 < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
}

mpz_class eval_at(const IntPoly& f, const mpz_class& x) {
    mpz_class acc = f.coeffs().front();
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        acc *= x;
        acc += f.coeffs()[i];
    }
    return acc;
}

IntPoly expand_binomial_power(const mpz_class& c, unsigned n) {
    if (n < 1) throw std::invalid_argument("expand_binomial_power: n must be >= 1");
    std::vector<mpz_class> out(n + 1);
    out[0] = 1;
    mpz_class bin = 1;   // C(n, k) by the multiplicative recurrence
    mpz_class cpow = 1;  // c^k
    for (unsigned k = 1; k <= n; ++k) {
        bin *= n - k + 1;
        mpz_divexact_ui(bin.get_mpz_t(), bin.get_mpz_t(), k);
        cpow *= c;
        out[k] = bin * cpow;
    }
    return IntPoly(std::move(out));
}

namespace detail {

LinearSplit divide_linear(const IntPoly& f, const mpz_class& r) {
    const auto& a = f.coeffs();
    std::vector<mpz_class> q(a.size() - 1);
    mpz_class acc = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        q[i - 1] = acc;
        acc *= r;
        acc += a[i];
    }
    return LinearSplit{IntPoly(std::move(q)), std::move(acc)};
}

}  // namespace detail

IntPoly compose_shift(const IntPoly& f, const mpz_class& r) {
    if (f.degree() == 0) return f;
    // Expand f around -r by repeated synthetic division: the successive
    // remainders are the coefficients of f(t - r) from the constant term up.
    const mpz_class root = -r;
    std::vector<mpz_class> work = f.coeffs();
    std::vector<mpz_class> shifted(work.size());
    const std::size_t n = work.size() - 1;
    for (std::size_t j = 0; j < n; ++j) {
        mpz_class acc = work[0];
        for (std::size_t i = 1; i < work.size(); ++i) {
            mpz_class next = acc * root + work[i];
            work[i - 1] = std::move(acc);
            acc = std::move(next);
        }
        shifted[n - j] = std::move(acc);  // remainder = coefficient of t^j
        work.pop_back();
    }
    shifted[0] = std::move(work[0]);
    return IntPoly(std::move(shifted));
}

LinearSplit horner_split(const IntPoly& f, const mpz_class& r) {
    if (f.degree() < 1) throw std::invalid_argument("horner_split: degree must be >= 1");
    if (!f.is_monic()) throw std::invalid_argument("horner_split: polynomial must be monic");
    return detail::divide_linear(f, r);
}

static IntPoly combine(const IntPoly& a, const IntPoly& b, bool negate_b) {
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    const std::size_t n = std::max(ca.size(), cb.size());
    std::vector<mpz_class> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class v = 0;
        if (i + ca.size() >= n) v += ca[i + ca.size() - n];
        if (i + cb.size() >= n) {
            if (negate_b)
                v -= cb[i + cb.size() - n];
            else
                v += cb[i + cb.size() - n];
        }
        out[i] = std::move(v);
    }
    return IntPoly(std::move(out));
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return combine(a, b, false); }
IntPoly sub(const IntPoly& a, const IntPoly& b) { return combine(a, b, true); }

}  // namespace eisen
