#include "auxpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace eisen {

void validate_pair(const OffsetPair& pair) {
    if (pair.m == 0) throw std::invalid_argument("offset pair: m must be positive");
    if (pair.ell <= pair.m) throw std::invalid_argument("offset pair: ell must exceed m");
    if (pair.ell > (std::uint64_t{1} << 62))
        throw std::invalid_argument("offset pair: ell exceeds the supported range (2^62)");
    if (std::gcd(pair.ell, pair.m) != 1)
        throw std::invalid_argument("offset pair: gcd(ell, m) must be 1");
}

const char* aux_kind_name(AuxKind kind) {
    switch (kind) {
        case AuxKind::X: return "X";
        case AuxKind::Y: return "Y";
        case AuxKind::Z: return "Z";
    }
    return "?";
}

mpz_class q_value(unsigned k, const mpz_class& a, const mpz_class& b) {
    if (k < 1) throw std::invalid_argument("q_value: k must be >= 1");
    // Horner in a: each step multiplies by a and adds the next power of b.
    mpz_class acc = 0;
    mpz_class bpow = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= a;
        acc += bpow;
        if (i + 1 < k) bpow *= b;
    }
    return acc;
}

IntPoly build_aux(AuxKind kind, unsigned n, const OffsetPair& pair) {
    validate_pair(pair);
    if (n < 1) throw std::invalid_argument("build_aux: n must be >= 1");

    const mpz_class ell(pair.ell);
    const mpz_class m(pair.m);
    const mpz_class diff = ell - m;

    std::vector<mpz_class> out(n + 1);
    out[0] = 1;

    mpz_class bin = 1;  // C(n, k), multiplicative recurrence

    switch (kind) {
        case AuxKind::X: {
            mpz_class q = 0;     // Q_k(ell, m)
            mpz_class bpow = 1;  // m^(k-1)
            for (unsigned k = 1; k <= n; ++k) {
                bin *= n - k + 1;
                mpz_divexact_ui(bin.get_mpz_t(), bin.get_mpz_t(), k);
                q *= ell;
                q += bpow;
                bpow *= m;
                out[k] = -bin * diff * q;
            }
            break;
        }
        case AuxKind::Y: {
            const mpz_class second = m - ell;
            mpz_class q = 0;     // Q_k(m, m - ell)
            mpz_class bpow = 1;  // (m - ell)^(k-1)
            for (unsigned k = 1; k <= n; ++k) {
                bin *= n - k + 1;
                mpz_divexact_ui(bin.get_mpz_t(), bin.get_mpz_t(), k);
                q *= m;
                q += bpow;
                bpow *= second;
                out[k] = (k % 2 == 0) ? mpz_class(bin * ell * q) : mpz_class(-bin * ell * q);
            }
            break;
        }
        case AuxKind::Z: {
            mpz_class lpow = 1;  // ell^k
            mpz_class dpow = 1;  // (ell - m)^k
            for (unsigned k = 1; k <= n; ++k) {
                bin *= n - k + 1;
                mpz_divexact_ui(bin.get_mpz_t(), bin.get_mpz_t(), k);
                lpow *= ell;
                dpow *= diff;
                mpz_class term = bin * (lpow + dpow);
                out[k] = (k % 2 == 0) ? term : mpz_class(-term);
            }
            break;
        }
    }
    return IntPoly(std::move(out));
}

bool verify_zero_identity(AuxKind kind, unsigned n, const OffsetPair& pair) {
    const IntPoly built = build_aux(kind, n, pair);
    const mpz_class ell(pair.ell);
    const mpz_class m(pair.m);

    IntPoly combo;
    switch (kind) {
        case AuxKind::X:
            combo = sub(add(expand_binomial_power(0, n), expand_binomial_power(m, n)),
                        expand_binomial_power(ell, n));
            break;
        case AuxKind::Y:
            combo = sub(add(expand_binomial_power(-m, n), expand_binomial_power(0, n)),
                        expand_binomial_power(ell - m, n));
            break;
        case AuxKind::Z:
            combo = sub(add(expand_binomial_power(-ell, n), expand_binomial_power(m - ell, n)),
                        expand_binomial_power(0, n));
            break;
    }
    return built == combo;
}

bool verify_shift_equivalence(unsigned n, const OffsetPair& pair) {
    const IntPoly x = build_aux(AuxKind::X, n, pair);
    const IntPoly y = build_aux(AuxKind::Y, n, pair);
    const IntPoly z = build_aux(AuxKind::Z, n, pair);
    return compose_shift(x, mpz_class(pair.m)) == y &&
           compose_shift(x, mpz_class(pair.ell)) == z;
}

namespace {

// Small odd primes for the residue filter. f has an integer root only if it
// has a root mod q for every prime q, so one rootless modulus settles it.
constexpr unsigned kFilterPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                      37, 41, 43, 47, 53, 59, 61, 67, 71, 73};

bool certainly_root_free(const IntPoly& f) {
    for (unsigned q : kFilterPrimes) {
        std::vector<unsigned long> rc(f.coeffs().size());
        for (std::size_t i = 0; i < rc.size(); ++i)
            rc[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), q);
        bool any_root = false;
        for (unsigned x = 0; x < q && !any_root; ++x) {
            unsigned long acc = rc[0];
            for (std::size_t i = 1; i < rc.size(); ++i) acc = (acc * x + rc[i]) % q;
            any_root = (acc == 0);
        }
        if (!any_root) return true;
    }
    return false;
}

// Fujiwara: every complex root has |z| <= 2 * max_k |a_k / a_0|^(1/k).
// Rounded up termwise, so the returned bound is never an underestimate.
mpz_class fujiwara_bound(const IntPoly& f) {
    mpz_class best = 0;
    const auto& c = f.coeffs();
    for (std::size_t k = 1; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        mpz_class mag = abs(c[k]);
        mpz_class root;
        const int exact = mpz_root(root.get_mpz_t(), mag.get_mpz_t(), static_cast<unsigned long>(k));
        if (!exact) root += 1;
        if (root > best) best = root;
    }
    return best * 2;
}

// Complete divisor scan: returns one integer root of f if any exists.
bool find_integer_root(const IntPoly& f, mpz_class& out) {
    const mpz_class bound = fujiwara_bound(f);
    const mpz_class an = abs(f.constant());
    mpz_class d = 1;
    while (d <= bound) {
        if (mpz_divisible_p(an.get_mpz_t(), d.get_mpz_t())) {
            if (eval_at(f, d) == 0) {
                out = d;
                return true;
            }
            mpz_class neg = -d;
            if (eval_at(f, neg) == 0) {
                out = std::move(neg);
                return true;
            }
        }
        d += 1;
    }
    return false;
}

}  // namespace

std::vector<mpz_class> integer_root_scan(const IntPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("integer_root_scan: polynomial must be monic");
    std::vector<mpz_class> roots;
    IntPoly cur = f;
    while (cur.degree() >= 1) {
        if (cur.constant() == 0) {
            roots.emplace_back(0);
            cur = detail::divide_linear(cur, 0).quotient;
            continue;
        }
        if (certainly_root_free(cur)) break;
        mpz_class root;
        if (!find_integer_root(cur, root)) break;
        cur = detail::divide_linear(cur, root).quotient;
        roots.push_back(std::move(root));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace eisen
