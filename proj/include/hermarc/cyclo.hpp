// Exact arithmetic in Z[zeta_m] for m = 2, m = p and m = 4p (p an odd prime).
//
// Elements are stored in the basis 1, zeta, ..., zeta^(phi(m)-1), reduced
// modulo the cyclotomic polynomial, so equality is coefficient equality.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hermarc::cyclo {

using BigInt = boost::multiprecision::cpp_int;

class CycloInt {
public:
    /// Zero of Z[zeta_m].
    explicit CycloInt(std::uint32_t m);

    static CycloInt integer(std::uint32_t m, const BigInt& v);
    static CycloInt zeta_pow(std::uint32_t m, std::int64_t k);
    /// sum_k counts[k] zeta^k with counts indexed modulo m.
    static CycloInt from_exponent_counts(std::uint32_t m, const std::vector<std::int64_t>& counts);

    std::uint32_t m() const { return m_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    CycloInt operator+(const CycloInt& o) const;
    CycloInt operator-(const CycloInt& o) const;
    CycloInt operator-() const;
    CycloInt operator*(const CycloInt& o) const;
    CycloInt& operator+=(const CycloInt& o);
    CycloInt scaled(const BigInt& k) const;

    bool operator==(const CycloInt& o) const;
    bool is_zero() const;

    /// zeta -> zeta^-1.
    CycloInt conj() const;
    CycloInt norm_sq() const { return *this * conj(); }
    std::optional<BigInt> as_rational_integer() const;

    /// Re-express in Z[zeta_target] with target a multiple of m.
    CycloInt lift(std::uint32_t target) const;

    /// Floating-point value with zeta = exp(2 pi i / m); diagnostics only.
    std::complex<double> to_complex() const;

    /// Polynomial string in z (zeta_m); debug rendering.
    std::string to_string() const;

private:
    static void check_modulus(std::uint32_t m);
    /// Reduce a dense polynomial of any length modulo Phi_m.
    static std::vector<BigInt> reduce(std::uint32_t m, std::vector<BigInt> poly);
    void require_same(const CycloInt& o) const;

    std::uint32_t m_;
    std::vector<BigInt> coeffs_;
};

/// Euler phi for the supported moduli.
std::uint32_t phi(std::uint32_t m);
/// Ascending integer coefficients of Phi_m for m in {2, p, 4p}.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t m);

} // namespace hermarc::cyclo
