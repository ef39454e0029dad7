// Affine point counts N(a,b,c) of y^q - y = a x^(q^r+1) + b x + c over
// F_{q^ell}: exhaustive counting, the closed-form branch table, genus,
// Hasse-Weil interval and the maximal/minimal classifier.

#pragma once

#include "hermarc/cyclo.hpp"
#include "hermarc/gf.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hermarc::aschreier {

using cyclo::BigInt;
using gf::Elem;
using gf::Field;

struct CurveParams {
    std::uint32_t r = 0;
    Elem a{1};
    Elem b{0};
    Elem c{0};

    /// gcd(ell, r), with gcd(ell, 0) = ell.
    std::uint32_t u(const Field& f) const;
};

struct WitnessBundle {
    std::optional<Elem> a1;     // x^(q^r+1) = a, characteristic 2
    std::optional<Elem> omega;  // b T_u(b)^-1 = w^(q^2r) + w + 1
    std::optional<Elem> x0;     // f(x) = -b^(q^r)
    std::optional<Elem> c1;     // a x0^(q^r+1) - c
    bool f_is_perm = false;
};

struct ClosedCount {
    std::int64_t value = 0;
    std::string branch;
    WitnessBundle witnesses;
    /// Set when the printed closed form differs from `value` (odd ell,
    /// p = 3 mod 4, b = 0, n odd).
    std::optional<std::int64_t> as_printed;
};

/// Per-(r, a) state for the closed form: the linear systems and a1 are shared
/// across every (b, c).
class ClosedFormEvaluator {
public:
    ClosedFormEvaluator(const Field& f, std::uint32_t r, Elem a);

    ClosedCount count(Elem b, Elem c) const;
    const gf::LinearSystem& f_system() const { return f_system_; }

private:
    ClosedCount count_char2_odd(Elem b, Elem c) const;
    ClosedCount count_odd_char_odd(Elem b, Elem c) const;
    ClosedCount count_even_ratio(Elem b, Elem c) const;

    const Field* f_;
    std::uint32_t r_;
    Elem a_;
    std::uint32_t u_;
    std::uint32_t ratio_;
    gf::LinearSystem f_system_;
    std::optional<gf::LinearSystem> omega_system_;
    std::optional<Elem> a1_;
};

ClosedCount closed_count(const Field& f, const CurveParams& params);
inline std::int64_t count_closed(const Field& f, const CurveParams& params)
{
    return closed_count(f, params).value;
}

/// q * #{x : T(a x^(q^r+1) + b x + c) = 0}.
std::int64_t count_brute(const Field& f, const CurveParams& params);
/// q * #{x : T(g(x)) = 0} for an arbitrary right-hand side g.
std::int64_t count_brute_rhs(const Field& f, const std::function<Elem(Elem)>& rhs);

/// Fold a linearized term L(x) = sum b_i x^(q^i) into b = sum b_i^(q^(ell-i)).
CurveParams reduce_linearized(const Field& f, std::uint32_t r, Elem a, const gf::LinearizedPoly& L, Elem c);

/// q^r (q-1) / 2; throws when that is not an integer.
std::int64_t genus(std::uint64_t q, std::uint32_t r);

struct HasseWeilInterval {
    BigInt lower;
    BigInt upper;
    bool exact = false; // q^(ell/2) is an integer
};
HasseWeilInterval hasse_weil_interval(std::uint64_t q, std::uint32_t ell, std::uint64_t g);

enum class Verdict { Maximal, Minimal, Neither };
std::string to_string(Verdict v);

struct MaximalityConditions {
    bool degree_even = false;          // n ell even
    bool solvable_trace_zero = false;  // f(x) = -b^(q^r) has x0 with T(c1) = 0
    bool max_r0_p1 = false;
    bool max_r0_p3 = false;
    bool max_half_ratio_odd = false;
    bool min_r0_p1 = false;
    bool min_r0_p3 = false;
    bool min_half_ratio_even = false;
};

struct MaximalityVerdict {
    Verdict verdict = Verdict::Neither;
    MaximalityConditions conditions;
    std::int64_t affine_count = 0;         // closed form
    Verdict count_verdict = Verdict::Neither;
    bool consistent = true;                // classifier and count agree
    std::string branch;
};

MaximalityVerdict classify(const Field& f, const CurveParams& params);

/// q^ell +/- q^(ell/2 + r)(q - 1), if n ell is even.
std::optional<BigInt> extremal_count(const Field& f, std::uint32_t r, int sign);

} // namespace hermarc::aschreier
