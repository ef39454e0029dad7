// Additive/quadratic characters, Gauss sums and the Weil sums
//   R(A,B,C) = sum_{x in F_{q^ell}} chi1(A x^(q^r+1) + B x + C)
// evaluated both by exhaustive summation and through the closed-form branch
// table, with an exact bridge between the two value spaces.

#pragma once

#include "hermarc/cyclo.hpp"
#include "hermarc/gf.hpp"

#include <cstdint>
#include <string>

namespace hermarc::charsums {

using cyclo::BigInt;
using cyclo::CycloInt;
using gf::Elem;
using gf::Field;

/// eps * i^j * zeta_p^k * q^(h/2), or 0.
struct ClosedValue {
    bool zero = true;
    int sign = 1;
    std::uint32_t i_pow = 0;     // mod 4
    std::uint32_t zeta_exp = 0;  // mod p; always 0 in characteristic 2
    std::uint32_t q_half_exp = 0;

    static ClosedValue nil() { return {}; }
    static ClosedValue make(int sign, std::uint32_t i_pow, std::uint32_t zeta_exp, std::uint32_t h);

    bool operator==(const ClosedValue&) const = default;
    std::string to_string() const;
};

/// The Jacobi symbol (2/v) for odd v.
struct JacobiTwo {
    std::int64_t v;
    int value;
};
JacobiTwo jacobi_two(std::int64_t v);

/// Index of the cyclotomic ring holding chi1 values: p, or 2 when p = 2.
std::uint32_t character_modulus(std::uint32_t p);
/// Index of the ring holding closed values: 4p, or 2 when p = 2.
std::uint32_t closed_modulus(std::uint32_t p);

/// zeta_p^t(x).
CycloInt chi1(const Field& f, Elem x);

/// sum_{h in F_q^*} eta(h) chi(F h) over the subfield F_q, in closed form.
ClosedValue gauss_eta(const Field& f, Elem F);
/// sum_{h in F_q^*} chi(F h): q - 1 for F = 0, else -1.
std::int64_t gauss_trivial(const Field& f, Elem F);

/// Exact sum over all Q elements.
CycloInt weil_brute(const Field& f, Elem A, Elem B, Elem C, std::uint32_t r);

struct WeilClosed {
    ClosedValue value;
    std::string branch;
};
/// Closed form of R(a,b,c) for a != 0.
WeilClosed weil_closed(const Field& f, Elem a, Elem b, Elem c, std::uint32_t r);

/// sqrt(p) in Z[zeta_4p], built from the quadratic Gauss sum.
CycloInt sqrt_p(std::uint32_t p);
/// Embed a closed value into Z[zeta_4p] (Z[zeta_2] for p = 2).
CycloInt closed_to_cyclo(const ClosedValue& v, std::uint32_t p, std::uint32_t n);

/// gcd(ell, r) with gcd(ell, 0) = ell.
std::uint32_t ratio_gcd(std::uint32_t ell, std::uint32_t r);
/// x^(q^r + 1).
inline Elem norm_power(const Field& f, Elem x, std::uint32_t r)
{
    return f.mul(f.frobenius_q(x, r), x);
}

} // namespace hermarc::charsums
