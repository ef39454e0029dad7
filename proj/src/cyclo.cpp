#include "hermarc/cyclo.hpp"

#include "hermarc/gf.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hermarc::cyclo {

namespace {

bool odd_prime(std::uint32_t v) { return v > 2 && gf::is_prime(v); }

} // namespace

std::uint32_t phi(std::uint32_t m)
{
    if (m == 2)
        return 1;
    if (odd_prime(m))
        return m - 1;
    if (m % 4 == 0 && odd_prime(m / 4))
        return 2 * (m / 4 - 1);
    throw std::invalid_argument("unsupported cyclotomic index " + std::to_string(m));
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t m)
{
    if (m == 2)
        return {1, 1};
    if (odd_prime(m))
        return std::vector<std::int64_t>(m, 1);
    if (m % 4 == 0 && odd_prime(m / 4)) {
        // (x^(2p) + 1) / (x^2 + 1) = sum_{k<p} (-1)^k x^(2(p-1-k))
        const std::uint32_t p = m / 4;
        std::vector<std::int64_t> out(2 * (p - 1) + 1, 0);
        for (std::uint32_t k = 0; k < p; ++k)
            out[2 * (p - 1 - k)] = (k % 2 == 0) ? 1 : -1;
        return out;
    }
    throw std::invalid_argument("unsupported cyclotomic index " + std::to_string(m));
}

void CycloInt::check_modulus(std::uint32_t m) { (void)phi(m); }

CycloInt::CycloInt(std::uint32_t m) : m_(m)
{
    coeffs_.assign(phi(m), BigInt{0});
}

std::vector<BigInt> CycloInt::reduce(std::uint32_t m, std::vector<BigInt> poly)
{
    const auto phi_m = cyclotomic_polynomial(m);
    const std::size_t d = phi_m.size() - 1;
    for (std::size_t top = poly.size(); top-- > d;) {
        const BigInt c = poly[top];
        if (c == 0)
            continue;
        const std::size_t shift = top - d;
        for (std::size_t i = 0; i <= d; ++i)
            if (phi_m[i] != 0)
                poly[shift + i] -= c * phi_m[i];
    }
    poly.resize(d, BigInt{0});
    return poly;
}

CycloInt CycloInt::integer(std::uint32_t m, const BigInt& v)
{
    CycloInt out(m);
    out.coeffs_[0] = v;
    return out;
}

CycloInt CycloInt::zeta_pow(std::uint32_t m, std::int64_t k)
{
    check_modulus(m);
    std::vector<BigInt> poly(m, BigInt{0});
    const auto mm = static_cast<std::int64_t>(m);
    poly[static_cast<std::size_t>(((k % mm) + mm) % mm)] = 1;
    CycloInt out(m);
    out.coeffs_ = reduce(m, std::move(poly));
    return out;
}

CycloInt CycloInt::from_exponent_counts(std::uint32_t m, const std::vector<std::int64_t>& counts)
{
    check_modulus(m);
    std::vector<BigInt> poly(m, BigInt{0});
    for (std::size_t k = 0; k < counts.size(); ++k)
        poly[k % m] += counts[k];
    CycloInt out(m);
    out.coeffs_ = reduce(m, std::move(poly));
    return out;
}

void CycloInt::require_same(const CycloInt& o) const
{
    if (m_ != o.m_)
        throw std::invalid_argument("mixed cyclotomic indices " + std::to_string(m_) + " and " +
                                    std::to_string(o.m_));
}

CycloInt CycloInt::operator+(const CycloInt& o) const
{
    CycloInt out = *this;
    out += o;
    return out;
}

CycloInt& CycloInt::operator+=(const CycloInt& o)
{
    require_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloInt CycloInt::operator-() const
{
    CycloInt out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

CycloInt CycloInt::operator-(const CycloInt& o) const { return *this + (-o); }

CycloInt CycloInt::operator*(const CycloInt& o) const
{
    require_same(o);
    std::vector<BigInt> prod(2 * coeffs_.size(), BigInt{0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    CycloInt out(m_);
    out.coeffs_ = reduce(m_, std::move(prod));
    return out;
}

CycloInt CycloInt::scaled(const BigInt& k) const
{
    CycloInt out = *this;
    for (auto& c : out.coeffs_)
        c *= k;
    return out;
}

bool CycloInt::operator==(const CycloInt& o) const
{
    return m_ == o.m_ && coeffs_ == o.coeffs_;
}

bool CycloInt::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

CycloInt CycloInt::conj() const
{
    std::vector<BigInt> poly(m_, BigInt{0});
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        poly[(m_ - k) % m_] += coeffs_[k];
    CycloInt out(m_);
    out.coeffs_ = reduce(m_, std::move(poly));
    return out;
}

std::optional<BigInt> CycloInt::as_rational_integer() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return std::nullopt;
    return coeffs_[0];
}

CycloInt CycloInt::lift(std::uint32_t target) const
{
    if (target % m_ != 0)
        throw std::invalid_argument("lift target must be a multiple of the index");
    check_modulus(target);
    const std::uint32_t step = target / m_;
    std::vector<BigInt> poly(target, BigInt{0});
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        poly[(k * step) % target] += coeffs_[k];
    CycloInt out(target);
    out.coeffs_ = reduce(target, std::move(poly));
    return out;
}

std::complex<double> CycloInt::to_complex() const
{
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / m_;
        acc += coeffs_[k].convert_to<double>() * std::polar(1.0, angle);
    }
    return acc;
}

std::string CycloInt::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0)
            continue;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << '-';
        first = false;
        const BigInt mag = c < 0 ? BigInt{-c} : c;
        if (k == 0 || mag != 1)
            os << mag;
        if (k >= 1)
            os << 'z';
        if (k >= 2)
            os << '^' << k;
    }
    if (first)
        os << '0';
    os << " (m=" << m_ << ')';
    return os.str();
}

} // namespace hermarc::cyclo
