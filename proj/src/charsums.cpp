#include "hermarc/charsums.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hermarc::charsums {

namespace {

int minus_one_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

std::uint32_t mod_p(std::int64_t v, std::uint32_t p)
{
    const auto pp = static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(((v % pp) + pp) % pp);
}

/// For p = 2 the zeta_p factor is a sign; fold it in so that zeta_exp = 0.
ClosedValue normalise(ClosedValue v, std::uint32_t p)
{
    if (v.zero)
        return ClosedValue::nil();
    if (p == 2) {
        if (v.zeta_exp % 2 != 0)
            v.sign = -v.sign;
        v.zeta_exp = 0;
    } else {
        v.zeta_exp %= p;
    }
    v.i_pow %= 4;
    return v;
}

} // namespace

ClosedValue ClosedValue::make(int sign, std::uint32_t i_pow, std::uint32_t zeta_exp, std::uint32_t h)
{
    ClosedValue v;
    v.zero = false;
    v.sign = sign;
    v.i_pow = i_pow % 4;
    v.zeta_exp = zeta_exp;
    v.q_half_exp = h;
    return v;
}

std::string ClosedValue::to_string() const
{
    if (zero)
        return "0";
    std::ostringstream os;
    os << (sign < 0 ? "-" : "+");
    if (i_pow != 0)
        os << "i^" << i_pow << "*";
    if (zeta_exp != 0)
        os << "zeta^" << zeta_exp << "*";
    os << "q^(" << q_half_exp << "/2)";
    return os.str();
}

JacobiTwo jacobi_two(std::int64_t v)
{
    if (v % 2 == 0)
        throw std::invalid_argument("(2/v) needs odd v");
    const std::int64_t r = ((v % 8) + 8) % 8;
    return {v, (r == 1 || r == 7) ? 1 : -1};
}

std::uint32_t character_modulus(std::uint32_t p) { return p == 2 ? 2 : p; }
std::uint32_t closed_modulus(std::uint32_t p) { return p == 2 ? 2 : 4 * p; }

std::uint32_t ratio_gcd(std::uint32_t ell, std::uint32_t r)
{
    return std::gcd(ell, r); // std::gcd(ell, 0) == ell
}

CycloInt chi1(const Field& f, Elem x)
{
    return CycloInt::zeta_pow(character_modulus(f.p()), f.absolute_trace(x));
}

ClosedValue gauss_eta(const Field& f, Elem F)
{
    const std::uint32_t p = f.p();
    if (p == 2)
        throw gf::FieldError("quadratic Gauss sum needs odd characteristic");
    if (!f.in_subfield(F, f.n()))
        throw gf::FieldError("Gauss sum argument must lie in F_q");
    if (F.is_zero())
        return ClosedValue::nil();
    const std::int64_t n = f.n();
    int sign = minus_one_pow(n - 1) * f.quadratic_character(F, f.q());
    // (-1)^(n/2) read as i^n for p = 3 mod 4.
    const std::uint32_t i_pow = (p % 4 == 3) ? static_cast<std::uint32_t>(n % 4) : 0;
    return ClosedValue::make(sign, i_pow, 0, 1);
}

std::int64_t gauss_trivial(const Field& f, Elem F)
{
    if (!f.in_subfield(F, f.n()))
        throw gf::FieldError("Gauss sum argument must lie in F_q");
    return F.is_zero() ? static_cast<std::int64_t>(f.q()) - 1 : -1;
}

CycloInt weil_brute(const Field& f, Elem A, Elem B, Elem C, std::uint32_t r)
{
    const std::uint32_t m = character_modulus(f.p());
    std::vector<std::int64_t> counts(m, 0);
    for (std::uint64_t code = 0; code < f.order(); ++code) {
        const Elem x{static_cast<std::uint32_t>(code)};
        const Elem v = f.add(f.add(f.mul(A, norm_power(f, x, r)), f.mul(B, x)), C);
        ++counts[f.absolute_trace(v)];
    }
    return CycloInt::from_exponent_counts(m, counts);
}

WeilClosed weil_closed(const Field& f, Elem a, Elem b, Elem c, std::uint32_t r)
{
    if (a.is_zero())
        throw std::invalid_argument("closed-form Weil sum needs a != 0");
    const std::uint32_t p = f.p();
    const std::int64_t n = f.n();
    const std::uint32_t ell = f.ell();
    const std::uint32_t u = ratio_gcd(ell, r);
    const std::uint32_t v = ell / u;
    const std::int64_t n_ell = n * ell;
    const std::uint32_t tc = f.absolute_trace(c);

    if (v % 2 == 1) {
        if (p == 2) {
            if (b.is_zero())
                return {ClosedValue::nil(), "odd-ratio/char2/b-zero"};
            const std::uint64_t e = gf::ipow(f.q(), r % ell) + 1;
            const Elem a1 = f.invert_exponent_solve(a, e);
            const Elem b1 = f.div(b, a1);
            if (f.trace_u(b1, u) != f.one())
                return {ClosedValue::nil(), "odd-ratio/char2/trace-not-one"};
            const gf::LinearSystem g(f, gf::artin_schreier_map(f, f.one(), r));
            const auto w = g.solve(f.sub(b1, f.one()));
            if (!w)
                throw std::logic_error("b = w^(q^2r) + w + 1 has no solution although T_u(b) = 1");
            int sign = f.absolute_trace(f.add(norm_power(f, *w, r), *w)) % 2 ? -1 : 1;
            if ((n * u) % 2 == 1)
                sign *= jacobi_two(v).value;
            return {normalise(ClosedValue::make(sign, 0, tc, ell + u), p), "odd-ratio/char2/trace-one"};
        }
        const int eta_a = f.quadratic_character(a);
        if (b.is_zero()) {
            // (-1)^(n ell / 2) read as i^(n ell) for p = 3 mod 4.
            const std::uint32_t i_pow = (p % 4 == 3) ? static_cast<std::uint32_t>(n_ell % 4) : 0;
            return {normalise(ClosedValue::make(minus_one_pow(n_ell - 1) * eta_a, i_pow, tc, ell), p),
                    "odd-ratio/odd-char/b-zero"};
        }
        const gf::LinearSystem fs(f, gf::artin_schreier_map(f, a, r));
        if (!fs.is_permutation())
            throw std::logic_error("a^(q^r) x^(q^2r) + a x is expected to permute the field");
        const Elem x0 = *fs.solve(f.neg(f.frobenius_q(b, r)));
        const std::uint32_t tx = f.absolute_trace(f.mul(a, norm_power(f, x0, r)));
        const int sign = minus_one_pow(n_ell - 1) * f.quadratic_character(f.neg(a));
        const std::uint32_t i_pow = (p % 4 == 3) ? static_cast<std::uint32_t>((3 * n_ell) % 4) : 0;
        return {normalise(ClosedValue::make(sign, i_pow, mod_p(std::int64_t{tc} - tx, p), ell), p),
                "odd-ratio/odd-char"};
    }

    const gf::LinearSystem fs(f, gf::artin_schreier_map(f, a, r));
    const auto x0 = fs.solve(f.neg(f.frobenius_q(b, r)));
    if (!x0)
        return {ClosedValue::nil(), "even-ratio/unsolvable"};
    const std::uint32_t tx = f.absolute_trace(f.mul(a, norm_power(f, *x0, r)));
    const std::uint32_t zeta = mod_p(std::int64_t{tc} - tx, p);
    const std::int64_t half = v / 2;
    if (fs.is_permutation())
        return {normalise(ClosedValue::make(minus_one_pow(half), 0, zeta, ell), p), "even-ratio/permutation"};
    return {normalise(ClosedValue::make(minus_one_pow(half + 1), 0, zeta, ell + 2 * u), p),
            "even-ratio/non-permutation"};
}

CycloInt sqrt_p(std::uint32_t p)
{
    if (p == 2 || !gf::is_prime(p))
        throw std::invalid_argument("sqrt_p needs an odd prime");
    const std::uint32_t m = 4 * p;
    std::vector<std::int64_t> counts(m, 0);
    for (std::uint64_t t = 0; t < p; ++t)
        ++counts[(4 * (t * t % p)) % m];
    CycloInt g = CycloInt::from_exponent_counts(m, counts);
    if (p % 4 == 1)
        return g;
    // g^2 = -p here, so sqrt(p) = -i g.
    return -(CycloInt::zeta_pow(m, p) * g);
}

CycloInt closed_to_cyclo(const ClosedValue& v, std::uint32_t p, std::uint32_t n)
{
    const std::uint32_t m = closed_modulus(p);
    if (v.zero)
        return CycloInt(m);
    const std::uint64_t nh = std::uint64_t{n} * v.q_half_exp;
    BigInt scale = 1;
    for (std::uint64_t k = 0; k < nh / 2; ++k)
        scale *= p;
    if (p == 2) {
        if (v.i_pow % 2 != 0 || nh % 2 != 0)
            throw std::invalid_argument("closed value is not an integer in characteristic 2");
        int sign = v.sign * ((v.i_pow % 4 == 2) ? -1 : 1);
        return CycloInt::integer(2, scale * sign);
    }
    CycloInt out = CycloInt::zeta_pow(m, std::int64_t{v.i_pow % 4} * p + 4LL * (v.zeta_exp % p));
    out = out.scaled(scale * v.sign);
    if (nh % 2 == 1)
        out = out * sqrt_p(p);
    return out;
}

} // namespace hermarc::charsums
