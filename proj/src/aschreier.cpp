#include "hermarc/aschreier.hpp"

#include "hermarc/charsums.hpp"

#include <stdexcept>

namespace hermarc::aschreier {

namespace {

using charsums::norm_power;

int minus_one_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

std::int64_t qpow(const Field& f, std::uint64_t k)
{
    return static_cast<std::int64_t>(gf::ipow(f.q(), k));
}

BigInt big_pow(std::uint64_t base, std::uint64_t e)
{
    BigInt out = 1;
    for (std::uint64_t i = 0; i < e; ++i)
        out *= base;
    return out;
}

} // namespace

std::uint32_t CurveParams::u(const Field& f) const { return charsums::ratio_gcd(f.ell(), r); }

ClosedFormEvaluator::ClosedFormEvaluator(const Field& f, std::uint32_t r, Elem a)
    : f_(&f),
      r_(r),
      a_(a),
      u_(charsums::ratio_gcd(f.ell(), r)),
      ratio_(f.ell() / u_),
      f_system_(f, gf::artin_schreier_map(f, a, r))
{
    if (a.is_zero())
        throw std::invalid_argument("curve coefficient a must be nonzero");
    if (f.p() == 2 && ratio_ % 2 == 1) {
        a1_ = f.invert_exponent_solve(a, gf::ipow(f.q(), r % f.ell()) + 1);
        omega_system_.emplace(f, gf::artin_schreier_map(f, f.one(), r));
    }
}

ClosedCount ClosedFormEvaluator::count(Elem b, Elem c) const
{
    if (ratio_ % 2 == 0)
        return count_even_ratio(b, c);
    if (f_->p() == 2)
        return count_char2_odd(b, c);
    return count_odd_char_odd(b, c);
}

ClosedCount ClosedFormEvaluator::count_char2_odd(Elem b, Elem c) const
{
    const Field& f = *f_;
    ClosedCount out;
    out.witnesses.a1 = a1_;
    out.witnesses.f_is_perm = f_system_.is_permutation();
    const std::int64_t base = static_cast<std::int64_t>(f.order());

    // N(a,b,c) = N(1, b a1^-1, c)
    const Elem b1 = f.div(b, *a1_);
    const Elem tu = f.trace_u(b1, u_);
    if (tu.is_zero() || !f.in_subfield(tu, f.n())) {
        out.value = base;
        out.branch = "char2/odd-ratio/trace-outside";
        return out;
    }
    const Elem tu_inv = f.inv(tu);
    const auto omega = omega_system_->solve(f.sub(f.mul(b1, tu_inv), f.one()));
    if (!omega)
        throw std::logic_error("b T_u(b)^-1 = w^(q^2r) + w + 1 has no solution");
    out.witnesses.omega = omega;

    int sign = (f.absolute_trace(f.add(norm_power(f, *omega, r_), *omega)) % 2) ? -1 : 1;
    if ((std::uint64_t{f.n()} * u_) % 2 == 1)
        sign *= charsums::jacobi_two(ratio_).value;
    if (f.absolute_trace(f.mul(f.mul(tu_inv, tu_inv), c)) % 2)
        sign = -sign;
    out.value = base + sign * qpow(f, (f.ell() + u_) / 2);
    out.branch = "char2/odd-ratio/trace-in-Fq*";
    return out;
}

ClosedCount ClosedFormEvaluator::count_odd_char_odd(Elem b, Elem c) const
{
    const Field& f = *f_;
    ClosedCount out;
    out.witnesses.f_is_perm = f_system_.is_permutation();
    if (!out.witnesses.f_is_perm)
        throw std::logic_error("a^(q^r) x^(q^2r) + a x is expected to permute the field");
    const Elem x0 = *f_system_.solve(f.neg(f.frobenius_q(b, r_)));
    const Elem c1 = f.sub(f.mul(a_, norm_power(f, x0, r_)), c);
    out.witnesses.x0 = x0;
    out.witnesses.c1 = c1;
    const Elem tr = f.trace(c1);
    const std::int64_t n = f.n();
    const std::int64_t ell = f.ell();
    const std::int64_t base = static_cast<std::int64_t>(f.order());
    const bool p1 = f.p() % 4 == 1;

    if (ell % 2 == 1) {
        if (tr.is_zero()) {
            out.value = base;
            out.branch = "odd-char/odd-ratio/ell-odd/trace-zero";
            return out;
        }
        int sign = f.quadratic_character(f.mul(a_, tr));
        if (p1) {
            out.branch = "odd-char/odd-ratio/ell-odd/p1";
        } else if (b.is_zero()) {
            // printed form: (-1)^(n(ell+1)/2)
            const int printed = sign * minus_one_pow(n * (ell + 1) / 2);
            sign *= minus_one_pow(n * (3 * ell + 1) / 2);
            if (printed != sign)
                out.as_printed = base + printed * qpow(f, (ell + 1) / 2);
            out.branch = "odd-char/odd-ratio/ell-odd/p3/b-zero";
        } else {
            sign *= minus_one_pow(n * (3 * ell + 1) / 2);
            out.branch = "odd-char/odd-ratio/ell-odd/p3/b-nonzero";
        }
        out.value = base + sign * qpow(f, (ell + 1) / 2);
        return out;
    }

    const int eta_a = f.quadratic_character(a_);
    const std::int64_t half = qpow(f, ell / 2);
    const std::int64_t q = static_cast<std::int64_t>(f.q());
    if (p1) {
        if (tr.is_zero()) {
            out.value = base - half * (q - 1) * eta_a;
            out.branch = "odd-char/odd-ratio/ell-even/p1/trace-zero";
        } else {
            out.value = base + half * eta_a;
            out.branch = "odd-char/odd-ratio/ell-even/p1/trace-nonzero";
        }
    } else {
        if (tr.is_zero()) {
            out.value = base + minus_one_pow(1 + n * ell / 2) * half * (q - 1) * eta_a;
            out.branch = "odd-char/odd-ratio/ell-even/p3/trace-zero";
        } else {
            out.value = base + minus_one_pow(n * ell / 2) * half * eta_a;
            out.branch = "odd-char/odd-ratio/ell-even/p3/trace-nonzero";
        }
    }
    return out;
}

ClosedCount ClosedFormEvaluator::count_even_ratio(Elem b, Elem c) const
{
    const Field& f = *f_;
    ClosedCount out;
    out.witnesses.f_is_perm = f_system_.is_permutation();
    const std::int64_t base = static_cast<std::int64_t>(f.order());
    const auto x0 = f_system_.solve(f.neg(f.frobenius_q(b, r_)));
    if (!x0) {
        out.value = base;
        out.branch = "even-ratio/unsolvable";
        return out;
    }
    const Elem c1 = f.sub(f.mul(a_, norm_power(f, *x0, r_)), c);
    out.witnesses.x0 = x0;
    out.witnesses.c1 = c1;
    const bool trace_zero = f.trace(c1).is_zero();
    const std::int64_t half = ratio_ / 2;
    const std::int64_t q = static_cast<std::int64_t>(f.q());
    const std::int64_t ell = f.ell();
    if (out.witnesses.f_is_perm) {
        const std::int64_t mag = qpow(f, ell / 2);
        out.value = trace_zero ? base + minus_one_pow(half) * mag * (q - 1)
                               : base + minus_one_pow(half + 1) * mag;
        out.branch = trace_zero ? "even-ratio/permutation/trace-zero" : "even-ratio/permutation/trace-nonzero";
    } else {
        const std::int64_t mag = qpow(f, ell / 2 + u_);
        out.value = trace_zero ? base + minus_one_pow(half + 1) * mag * (q - 1)
                               : base + minus_one_pow(half) * mag;
        out.branch =
            trace_zero ? "even-ratio/non-permutation/trace-zero" : "even-ratio/non-permutation/trace-nonzero";
    }
    return out;
}

ClosedCount closed_count(const Field& f, const CurveParams& params)
{
    return ClosedFormEvaluator(f, params.r, params.a).count(params.b, params.c);
}

std::int64_t count_brute(const Field& f, const CurveParams& params)
{
    std::int64_t zeros = 0;
    for (std::uint64_t code = 0; code < f.order(); ++code) {
        const Elem x{static_cast<std::uint32_t>(code)};
        const Elem v = f.add(f.add(f.mul(params.a, norm_power(f, x, params.r)), f.mul(params.b, x)), params.c);
        zeros += f.trace(v).is_zero() ? 1 : 0;
    }
    return zeros * static_cast<std::int64_t>(f.q());
}

std::int64_t count_brute_rhs(const Field& f, const std::function<Elem(Elem)>& rhs)
{
    std::int64_t zeros = 0;
    for (std::uint64_t code = 0; code < f.order(); ++code)
        zeros += f.trace(rhs(Elem{static_cast<std::uint32_t>(code)})).is_zero() ? 1 : 0;
    return zeros * static_cast<std::int64_t>(f.q());
}

CurveParams reduce_linearized(const Field& f, std::uint32_t r, Elem a, const gf::LinearizedPoly& L, Elem c)
{
    if (a.is_zero())
        throw std::invalid_argument("curve coefficient a must be nonzero");
    Elem b = f.zero();
    for (std::size_t i = 0; i < L.coeffs.size(); ++i)
        b = f.add(b, f.frobenius_q(L.coeffs[i], f.ell() - (i % f.ell())));
    return CurveParams{r, a, b, c};
}

std::int64_t genus(std::uint64_t q, std::uint32_t r)
{
    const std::uint64_t twice = gf::ipow(q, r) * (q - 1);
    if (twice % 2 != 0)
        throw std::invalid_argument("q^r (q-1) / 2 is not an integer");
    return static_cast<std::int64_t>(twice / 2);
}

HasseWeilInterval hasse_weil_interval(std::uint64_t q, std::uint32_t ell, std::uint64_t g)
{
    const BigInt big_q = big_pow(q, ell);
    const BigInt root = boost::multiprecision::sqrt(big_q);
    HasseWeilInterval out;
    BigInt bound;
    if (root * root == big_q) {
        out.exact = true;
        bound = 2 * BigInt{g} * root;
    } else {
        bound = boost::multiprecision::sqrt(4 * BigInt{g} * BigInt{g} * big_q);
    }
    out.lower = big_q + 1 - bound;
    out.upper = big_q + 1 + bound;
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Maximal:
        return "Maximal";
    case Verdict::Minimal:
        return "Minimal";
    case Verdict::Neither:
        break;
    }
    return "Neither";
}

std::optional<BigInt> extremal_count(const Field& f, std::uint32_t r, int sign)
{
    const std::uint64_t n_ell = std::uint64_t{f.n()} * f.ell();
    if (n_ell % 2 != 0)
        return std::nullopt;
    const BigInt dev = big_pow(f.p(), n_ell / 2) * big_pow(f.q(), r) * BigInt{f.q() - 1};
    return BigInt{f.order()} + (sign > 0 ? dev : BigInt{-dev});
}

MaximalityVerdict classify(const Field& f, const CurveParams& params)
{
    const ClosedFormEvaluator eval(f, params.r, params.a);
    const ClosedCount closed = eval.count(params.b, params.c);

    MaximalityVerdict out;
    out.affine_count = closed.value;
    out.branch = closed.branch;
    auto& cond = out.conditions;
    const std::uint32_t ell = f.ell();
    const std::uint32_t r = params.r;
    const std::uint64_t n_ell = std::uint64_t{f.n()} * ell;
    cond.degree_even = n_ell % 2 == 0;

    const auto& fs = eval.f_system();
    if (auto sols = fs.solve_all(f.neg(f.frobenius_q(params.b, r)))) {
        auto trace_zero_at = [&](Elem x0) {
            return f.trace(f.sub(f.mul(params.a, charsums::norm_power(f, x0, r)), params.c)).is_zero();
        };
        // Enumerate the solution coset when it is small.
        const std::size_t dim = sols->kernel.size();
        if (dim <= 12 && gf::ipow(f.p(), dim) <= 4096) {
            const std::uint64_t total = gf::ipow(f.p(), dim);
            for (std::uint64_t idx = 0; idx < total && !cond.solvable_trace_zero; ++idx) {
                Elem x = sols->particular;
                std::uint64_t rest = idx;
                for (const Elem k : sols->kernel) {
                    x = f.add(x, f.mul(f.constant(static_cast<std::int64_t>(rest % f.p())), k));
                    rest /= f.p();
                }
                cond.solvable_trace_zero = trace_zero_at(x);
            }
        } else {
            cond.solvable_trace_zero = trace_zero_at(sols->particular);
        }
    }

    const bool nonperm = !fs.is_permutation();
    if (f.p() != 2 && r == 0 && ell % 2 == 0) {
        const bool square = f.quadratic_character(params.a) == 1;
        const bool half_odd = (n_ell / 2) % 2 == 1;
        if (f.p() % 4 == 1) {
            cond.max_r0_p1 = !square;
            cond.min_r0_p1 = square;
        } else {
            cond.max_r0_p3 = (half_odd && square) || (!half_odd && !square);
            cond.min_r0_p3 = (half_odd && !square) || (!half_odd && square);
        }
    }
    if (r >= 1 && ell % (2 * r) == 0 && nonperm) {
        const bool odd = (ell / (2 * r)) % 2 == 1;
        cond.max_half_ratio_odd = odd;
        cond.min_half_ratio_even = !odd;
    }

    if (cond.degree_even && cond.solvable_trace_zero) {
        if (cond.max_r0_p1 || cond.max_r0_p3 || cond.max_half_ratio_odd)
            out.verdict = Verdict::Maximal;
        else if (cond.min_r0_p1 || cond.min_r0_p3 || cond.min_half_ratio_even)
            out.verdict = Verdict::Minimal;
    }

    const auto hi = extremal_count(f, r, +1);
    const auto lo = extremal_count(f, r, -1);
    if (hi && BigInt{closed.value} == *hi)
        out.count_verdict = Verdict::Maximal;
    else if (lo && BigInt{closed.value} == *lo)
        out.count_verdict = Verdict::Minimal;
    out.consistent = out.count_verdict == out.verdict;
    return out;
}

} // namespace hermarc::aschreier
