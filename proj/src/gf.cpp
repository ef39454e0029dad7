#include "hermarc/gf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hermarc::gf {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t mod)
{
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (e != 0) {
        if (e & 1U)
            result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        e >>= 1U;
    }
    return result;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p)
{
    return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0)
                v /= d;
        }
    }
    if (v > 1)
        out.push_back(v);
    return out;
}

// ---- dense polynomial helpers over F_p ------------------------------------

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() > dm) {
        const std::uint32_t factor = static_cast<std::uint32_t>(
            std::uint64_t{a.back()} * lead_inv % p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = std::uint64_t{factor} * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    Poly out(acc.begin(), acc.end());
    return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p)
{
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (e != 0) {
        if (e & 1U)
            result = poly_mulmod(result, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1U;
    }
    return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    return std::gcd(a, b);
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t e)
{
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (base != 0 && result > UINT64_MAX / base)
            throw std::overflow_error("integer power overflows 64 bits");
        result *= base;
    }
    return result;
}

bool is_prime(std::uint64_t v)
{
    if (v < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

std::uint64_t TowerSpec::q() const { return ipow(p, n); }
std::uint64_t TowerSpec::order() const { return ipow(p, std::uint64_t{n} * ell); }

bool is_irreducible(std::uint32_t p, const Poly& f)
{
    if (f.size() < 2 || f.back() == 0)
        return false;
    const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
    if (m == 1)
        return true;
    // frob[i] = t^(p^i) mod f
    std::vector<Poly> frob(m + 1);
    frob[0] = poly_mod(Poly{0, 1}, f, p);
    for (std::uint32_t i = 1; i <= m; ++i)
        frob[i] = poly_powmod(frob[i - 1], p, f, p);
    const Poly t = poly_mod(Poly{0, 1}, f, p);
    if (frob[m] != t)
        return false;
    for (std::uint64_t s : prime_factors(m)) {
        const Poly g = poly_gcd(f, poly_sub(frob[m / s], t, p), p);
        if (g.size() != 1)
            return false;
    }
    return true;
}

Poly find_irreducible(std::uint32_t p, std::uint32_t m)
{
    if (!is_prime(p) || m == 0)
        throw std::invalid_argument("find_irreducible needs a prime p and degree >= 1");
    const std::uint64_t count = ipow(p, m);
    Poly f(m + 1, 0);
    f[m] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        if (is_irreducible(p, f))
            return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

TowerSpec make_tower(std::uint32_t p, std::uint32_t n, std::uint32_t ell)
{
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime");
    if (n == 0 || ell == 0)
        throw std::invalid_argument("n and ell must be positive");
    TowerSpec spec{p, n, ell, {}};
    if (static_cast<long double>(n) * ell * std::log2(static_cast<long double>(p)) > 31.0L)
        throw std::invalid_argument("field order exceeds 2^31");
    spec.modulus = find_irreducible(p, n * ell);
    return spec;
}

std::string poly_to_string(const Poly& f)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0)
            continue;
        if (!first)
            os << '+';
        first = false;
        if (i == 0 || f[i] != 1)
            os << f[i];
        if (i >= 1)
            os << 'x';
        if (i >= 2)
            os << '^' << i;
    }
    if (first)
        os << '0';
    return os.str();
}

// ---- Field ------------------------------------------------------------------

Field::Field(TowerSpec spec) : spec_(std::move(spec))
{
    if (!is_prime(spec_.p))
        throw std::invalid_argument("p must be prime");
    if (spec_.n == 0 || spec_.ell == 0)
        throw std::invalid_argument("n and ell must be positive");
    m_ = spec_.n * spec_.ell;
    if (spec_.modulus.size() != m_ + 1 || spec_.modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree n*ell");
    for (auto c : spec_.modulus)
        if (c >= spec_.p)
            throw std::invalid_argument("modulus coefficient out of range");
    pow_p_.resize(m_ + 1);
    pow_p_[0] = 1;
    for (std::uint32_t i = 1; i <= m_; ++i) {
        pow_p_[i] = pow_p_[i - 1] * spec_.p;
        if (pow_p_[i] > kOrderLimit)
            throw std::invalid_argument("field order exceeds 2^31");
    }
    if (!is_irreducible(spec_.p, spec_.modulus))
        throw std::invalid_argument("modulus is not irreducible");
    q_ = pow_p_[spec_.n];
    order_ = pow_p_[m_];
    primitive_ = find_primitive();
    if (order_ <= kTableLimit)
        build_tables();
}

Elem Field::constant(std::int64_t k) const
{
    const auto p = static_cast<std::int64_t>(spec_.p);
    return Elem{static_cast<std::uint32_t>(((k % p) + p) % p)};
}

Elem Field::generator_t() const
{
    if (m_ == 1)
        return constant(-static_cast<std::int64_t>(spec_.modulus[0]));
    return Elem{spec_.p};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const
{
    if (coeffs.size() > m_)
        throw std::invalid_argument("too many coordinates for this field");
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= spec_.p)
            throw std::invalid_argument("coordinate out of range [0, p)");
        code += coeffs[i] * pow_p_[i];
    }
    return Elem{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const
{
    std::vector<std::uint32_t> out(m_);
    std::uint32_t c = x.code();
    for (std::uint32_t i = 0; i < m_; ++i) {
        out[i] = c % spec_.p;
        c /= spec_.p;
    }
    return out;
}

Elem Field::element(std::uint64_t code) const
{
    if (code >= order_)
        throw std::out_of_range("element code out of range");
    return Elem{static_cast<std::uint32_t>(code)};
}

Elem Field::add_digits(Elem x, Elem y) const
{
    if (spec_.p == 2)
        return Elem{x.code() ^ y.code()};
    std::uint32_t a = x.code(), b = y.code();
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < m_ && (a | b) != 0; ++i) {
        out += ((a % spec_.p + b % spec_.p) % spec_.p) * pow_p_[i];
        a /= spec_.p;
        b /= spec_.p;
    }
    return Elem{static_cast<std::uint32_t>(out)};
}

Elem Field::neg_digits(Elem x) const
{
    if (spec_.p == 2)
        return x;
    std::uint32_t a = x.code();
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < m_ && a != 0; ++i) {
        out += ((spec_.p - a % spec_.p) % spec_.p) * pow_p_[i];
        a /= spec_.p;
    }
    return Elem{static_cast<std::uint32_t>(out)};
}

Elem Field::add(Elem x, Elem y) const
{
    if (spec_.p == 2)
        return Elem{x.code() ^ y.code()};
    if (add_lo_.empty())
        return add_digits(x, y);
    const std::uint32_t xl = x.code() % lo_size_, xh = x.code() / lo_size_;
    const std::uint32_t yl = y.code() % lo_size_, yh = y.code() / lo_size_;
    return Elem{add_lo_[xl * lo_size_ + yl] + add_hi_[xh * hi_size_ + yh] * lo_size_};
}

Elem Field::neg(Elem x) const
{
    if (spec_.p == 2 || x.is_zero())
        return x;
    if (log_.empty())
        return neg_digits(x);
    return Elem{exp_[log_[x.code()] + (order_ - 1) / 2]};
}

Elem Field::mul(Elem x, Elem y) const
{
    if (x.is_zero() || y.is_zero())
        return Elem{0};
    if (log_.empty())
        return mul_reference(x, y);
    return Elem{exp_[log_[x.code()] + log_[y.code()]]};
}

Elem Field::inv(Elem x) const
{
    if (x.is_zero())
        throw FieldError("inverse of zero");
    if (log_.empty())
        return pow_reference(x, order_ - 2);
    return Elem{exp_[(order_ - 1) - log_[x.code()]]};
}

Elem Field::pow(Elem x, std::uint64_t e) const
{
    if (e == 0)
        return one();
    if (x.is_zero())
        return x;
    if (log_.empty())
        return pow_reference(x, e);
    const std::uint64_t n1 = order_ - 1;
    return Elem{exp_[mulmod(log_[x.code()], e % n1, n1)]};
}

Elem Field::frobenius(Elem x, std::uint64_t k) const
{
    return pow(x, pow_p_[k % m_]);
}

std::uint64_t Field::log(Elem x) const
{
    if (x.is_zero())
        throw FieldError("log of zero");
    if (!log_.empty())
        return log_[x.code()];
    Elem acc = one();
    for (std::uint64_t k = 0; k + 1 < order_; ++k) {
        if (acc == x)
            return k;
        acc = mul_reference(acc, primitive_);
    }
    throw std::logic_error("discrete log not found");
}

Elem Field::relative_trace(Elem x, std::uint32_t from_degree, std::uint32_t to_degree) const
{
    if (to_degree == 0 || from_degree == 0 || m_ % from_degree != 0 || from_degree % to_degree != 0)
        throw FieldError("trace target degree must divide the source degree");
    Elem acc = zero();
    Elem term = x;
    for (std::uint32_t i = 0; i < from_degree / to_degree; ++i) {
        acc = add(acc, term);
        term = frobenius(term, to_degree);
    }
    return acc;
}

Elem Field::trace_to(Elem x, std::uint32_t target_degree) const
{
    return relative_trace(x, m_, target_degree);
}

Elem Field::trace(Elem x) const
{
    if (!trace_q_.empty())
        return Elem{trace_q_[x.code()]};
    return trace_to(x, spec_.n);
}

std::uint32_t Field::absolute_trace(Elem x) const
{
    if (!abs_trace_.empty())
        return abs_trace_[x.code()];
    return trace_to(x, 1).code();
}

int Field::quadratic_character(Elem x, std::uint64_t field_order) const
{
    if (spec_.p == 2)
        throw FieldError("quadratic character is undefined in characteristic 2");
    if (x.is_zero())
        return 0;
    const Elem v = pow(x, (field_order - 1) / 2);
    if (v == one())
        return 1;
    if (v == constant(-1))
        return -1;
    throw FieldError("argument does not lie in the subfield of the given order");
}

bool Field::in_subfield(Elem x, std::uint32_t degree) const
{
    if (degree == 0 || m_ % degree != 0)
        throw FieldError("subfield degree must divide the absolute degree");
    return frobenius(x, degree) == x;
}

std::vector<Elem> Field::subfield_elements(std::uint32_t degree) const
{
    if (degree == 0 || m_ % degree != 0)
        throw FieldError("subfield degree must divide the absolute degree");
    const std::uint64_t sub = pow_p_[degree];
    const std::uint64_t step = (order_ - 1) / (sub - 1);
    std::vector<Elem> out;
    out.reserve(sub);
    out.push_back(zero());
    const Elem g = pow(primitive_, step);
    Elem acc = one();
    for (std::uint64_t k = 0; k + 1 < sub; ++k) {
        out.push_back(acc);
        acc = mul(acc, g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Elem Field::invert_exponent_solve(Elem a, std::uint64_t e) const
{
    if (a.is_zero())
        throw FieldError("invert_exponent_solve needs a != 0");
    const std::uint64_t n1 = order_ - 1;
    if (n1 == 1)
        return a;
    const std::uint64_t er = e % n1;
    if (std::gcd(er, n1) != 1)
        throw FieldError("exponent is not invertible modulo Q-1");
    // extended Euclid on (er, n1)
    __int128 old_r = er, r = n1, old_s = 1, s = 0;
    while (r != 0) {
        const __int128 quo = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - quo * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - quo * s);
    }
    __int128 inv = old_s % static_cast<__int128>(n1);
    if (inv < 0)
        inv += n1;
    return pow(a, static_cast<std::uint64_t>(inv));
}

Elem Field::mul_reference(Elem x, Elem y) const
{
    if (x.is_zero() || y.is_zero())
        return zero();
    const auto a = coeffs(x);
    const auto b = coeffs(y);
    Poly prod = poly_mulmod(Poly(a.begin(), a.end()), Poly(b.begin(), b.end()), spec_.modulus, spec_.p);
    return from_coeffs(prod);
}

Elem Field::pow_reference(Elem x, std::uint64_t e) const
{
    Elem result = one();
    Elem base = x;
    while (e != 0) {
        if (e & 1U)
            result = mul_reference(result, base);
        base = mul_reference(base, base);
        e >>= 1U;
    }
    return result;
}

Elem Field::find_primitive() const
{
    const std::uint64_t n1 = order_ - 1;
    if (n1 == 1)
        return one();
    const auto factors = prime_factors(n1);
    for (std::uint64_t code = 1; code < order_; ++code) {
        const Elem g{static_cast<std::uint32_t>(code)};
        bool ok = true;
        for (auto s : factors) {
            if (pow_reference(g, n1 / s) == one()) {
                ok = false;
                break;
            }
        }
        if (ok)
            return g;
    }
    throw std::logic_error("no primitive element");
}

void Field::build_tables()
{
    const std::uint32_t p = spec_.p;
    const std::uint64_t n1 = order_ - 1;

    if (p != 2) {
        lo_digits_ = m_ / 2;
        lo_size_ = static_cast<std::uint32_t>(pow_p_[lo_digits_]);
        hi_size_ = static_cast<std::uint32_t>(order_ / lo_size_);
        auto digit_add = [p](std::uint32_t a, std::uint32_t b, std::uint32_t digits) {
            std::uint32_t out = 0, scale = 1;
            for (std::uint32_t i = 0; i < digits; ++i) {
                out += ((a % p + b % p) % p) * scale;
                a /= p;
                b /= p;
                scale *= p;
            }
            return out;
        };
        add_lo_.resize(std::size_t{lo_size_} * lo_size_);
        for (std::uint32_t a = 0; a < lo_size_; ++a)
            for (std::uint32_t b = 0; b < lo_size_; ++b)
                add_lo_[std::size_t{a} * lo_size_ + b] = digit_add(a, b, lo_digits_);
        add_hi_.resize(std::size_t{hi_size_} * hi_size_);
        for (std::uint32_t a = 0; a < hi_size_; ++a)
            for (std::uint32_t b = 0; b < hi_size_; ++b)
                add_hi_[std::size_t{a} * hi_size_ + b] = digit_add(a, b, m_ - lo_digits_);
    }

    // Multiplication by the primitive element as a fold over scaled basis
    // images: x*g = sum_j c_j (c * g * t^j).
    std::vector<Elem> scaled(std::size_t{m_} * p);
    for (std::uint32_t j = 0; j < m_; ++j) {
        const Elem basis_g = mul_reference(Elem{static_cast<std::uint32_t>(pow_p_[j])}, primitive_);
        for (std::uint32_t c = 0; c < p; ++c)
            scaled[std::size_t{j} * p + c] = mul_reference(constant(c), basis_g);
    }
    auto mul_g = [&](std::uint32_t code) {
        Elem acc = zero();
        for (std::uint32_t j = 0; j < m_ && code != 0; ++j) {
            acc = add(acc, scaled[std::size_t{j} * p + code % p]);
            code /= p;
        }
        return acc.code();
    };

    exp_.assign(2 * n1, 0);
    log_.assign(order_, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t k = 0; k < n1; ++k) {
        exp_[k] = cur;
        exp_[k + n1] = cur;
        log_[cur] = static_cast<std::uint32_t>(k);
        cur = mul_g(cur);
    }
    if (cur != 1)
        throw std::logic_error("primitive element has wrong order");

    // Traces are F_p-linear: fold the traces of the basis elements.
    std::vector<Elem> basis_tr(m_);
    for (std::uint32_t j = 0; j < m_; ++j)
        basis_tr[j] = relative_trace(Elem{static_cast<std::uint32_t>(pow_p_[j])}, m_, spec_.n);
    std::vector<Elem> scaled_tr(std::size_t{m_} * p);
    for (std::uint32_t j = 0; j < m_; ++j)
        for (std::uint32_t c = 0; c < p; ++c)
            scaled_tr[std::size_t{j} * p + c] = mul(constant(c), basis_tr[j]);
    trace_q_.resize(order_);
    abs_trace_.resize(order_);
    for (std::uint64_t code = 0; code < order_; ++code) {
        std::uint32_t c = static_cast<std::uint32_t>(code);
        Elem acc = zero();
        for (std::uint32_t j = 0; j < m_ && c != 0; ++j) {
            acc = add(acc, scaled_tr[std::size_t{j} * p + c % p]);
            c /= p;
        }
        trace_q_[code] = acc.code();
    }
    // absolute trace = Tr_{F_q/F_p} o T
    std::vector<std::uint8_t> sub_abs(order_, 0);
    for (const Elem s : subfield_elements(spec_.n))
        sub_abs[s.code()] = static_cast<std::uint8_t>(relative_trace(s, spec_.n, 1).code());
    for (std::uint64_t code = 0; code < order_; ++code)
        abs_trace_[code] = sub_abs[trace_q_[code]];
}

// ---- linear algebra over F_p --------------------------------------------------

Elem LinearizedPoly::eval(const Field& f, Elem x) const
{
    Elem acc = f.zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero())
            acc = f.add(acc, f.mul(coeffs[i], f.frobenius_q(x, i)));
    return acc;
}

LinearizedPoly artin_schreier_map(const Field& f, Elem a, std::uint32_t r)
{
    LinearizedPoly L;
    L.coeffs.assign(f.ell(), f.zero());
    const std::uint32_t idx = static_cast<std::uint32_t>((2ULL * r) % f.ell());
    L.coeffs[idx] = f.add(L.coeffs[idx], f.frobenius_q(a, r));
    L.coeffs[0] = f.add(L.coeffs[0], a);
    return L;
}

LinearSystem::LinearSystem(const Field& field, const LinearizedPoly& poly)
    : LinearSystem(field, [&](Elem x) { return poly.eval(field, x); })
{
}

LinearSystem::LinearSystem(const Field& field, const std::function<Elem(Elem)>& map)
    : field_(&field), p_(field.p()), dim_(field.degree())
{
    matrix_.assign(dim_, Row(dim_, 0));
    std::uint64_t basis = 1;
    for (std::uint32_t j = 0; j < dim_; ++j, basis *= p_) {
        const auto image = field.coeffs(map(field.element(basis)));
        for (std::uint32_t i = 0; i < dim_; ++i)
            matrix_[i][j] = image[i];
    }
    reduce();
}

void LinearSystem::reduce()
{
    const std::uint32_t p = p_;
    transform_.assign(dim_, Row(dim_, 0));
    for (std::uint32_t i = 0; i < dim_; ++i)
        transform_[i][i] = 1;

    auto axpy = [p](Row& dst, const Row& src, std::uint32_t factor) {
        if (factor == 0)
            return;
        for (std::size_t k = 0; k < dst.size(); ++k)
            dst[k] = static_cast<std::uint32_t>((dst[k] + std::uint64_t{factor} * src[k]) % p);
    };
    auto scale = [p](Row& row, std::uint32_t factor) {
        for (auto& v : row)
            v = static_cast<std::uint32_t>(std::uint64_t{v} * factor % p);
    };

    rank_ = 0;
    pivot_col_.clear();
    for (std::uint32_t col = 0; col < dim_ && rank_ < dim_; ++col) {
        std::uint32_t piv = rank_;
        while (piv < dim_ && matrix_[piv][col] == 0)
            ++piv;
        if (piv == dim_)
            continue;
        std::swap(matrix_[piv], matrix_[rank_]);
        std::swap(transform_[piv], transform_[rank_]);
        const std::uint32_t inv = inv_mod_p(matrix_[rank_][col], p);
        scale(matrix_[rank_], inv);
        scale(transform_[rank_], inv);
        for (std::uint32_t i = 0; i < dim_; ++i) {
            if (i == rank_ || matrix_[i][col] == 0)
                continue;
            const std::uint32_t factor = p - matrix_[i][col];
            axpy(matrix_[i], matrix_[rank_], factor);
            axpy(transform_[i], transform_[rank_], factor);
        }
        pivot_col_.push_back(col);
        ++rank_;
    }

    // Kernel vectors from the free columns.
    std::vector<Row> kern;
    for (std::uint32_t f = 0; f < dim_; ++f) {
        if (std::find(pivot_col_.begin(), pivot_col_.end(), f) != pivot_col_.end())
            continue;
        Row v(dim_, 0);
        v[f] = 1;
        for (std::uint32_t i = 0; i < rank_; ++i)
            v[pivot_col_[i]] = (p - matrix_[i][f]) % p;
        kern.push_back(std::move(v));
    }
    // Reduced echelon form keyed on the most significant coordinate.
    std::uint32_t done = 0;
    kernel_pivot_.clear();
    for (std::uint32_t c = dim_; c-- > 0 && done < kern.size();) {
        std::uint32_t piv = done;
        while (piv < kern.size() && kern[piv][c] == 0)
            ++piv;
        if (piv == kern.size())
            continue;
        std::swap(kern[piv], kern[done]);
        scale(kern[done], inv_mod_p(kern[done][c], p));
        for (std::uint32_t i = 0; i < kern.size(); ++i)
            if (i != done && kern[i][c] != 0)
                axpy(kern[i], kern[done], p - kern[i][c]);
        kernel_pivot_.push_back(c);
        ++done;
    }
    kernel_.clear();
    for (const auto& v : kern)
        kernel_.push_back(field_->from_coeffs(v));
}

std::optional<std::vector<std::uint32_t>> LinearSystem::particular_coords(Elem rhs) const
{
    const auto y = field_->coeffs(rhs);
    std::vector<std::uint32_t> z(dim_, 0);
    for (std::uint32_t i = 0; i < dim_; ++i) {
        std::uint64_t acc = 0;
        for (std::uint32_t k = 0; k < dim_; ++k)
            acc += std::uint64_t{transform_[i][k]} * y[k];
        z[i] = static_cast<std::uint32_t>(acc % p_);
    }
    for (std::uint32_t i = rank_; i < dim_; ++i)
        if (z[i] != 0)
            return std::nullopt;
    std::vector<std::uint32_t> x(dim_, 0);
    for (std::uint32_t i = 0; i < rank_; ++i)
        x[pivot_col_[i]] = z[i];
    for (std::size_t k = 0; k < kernel_.size(); ++k) {
        const std::uint32_t c = kernel_pivot_[k];
        const std::uint32_t factor = x[c];
        if (factor == 0)
            continue;
        const auto kv = field_->coeffs(kernel_[k]);
        for (std::uint32_t i = 0; i < dim_; ++i)
            x[i] = static_cast<std::uint32_t>((x[i] + std::uint64_t{p_ - factor} * kv[i]) % p_);
    }
    return x;
}

bool LinearSystem::solvable(Elem rhs) const
{
    return particular_coords(rhs).has_value();
}

std::optional<Elem> LinearSystem::solve(Elem rhs) const
{
    auto x = particular_coords(rhs);
    if (!x)
        return std::nullopt;
    return field_->from_coeffs(*x);
}

std::optional<SolutionSet> LinearSystem::solve_all(Elem rhs) const
{
    auto x = solve(rhs);
    if (!x)
        return std::nullopt;
    return SolutionSet{*x, kernel_};
}

} // namespace hermarc::gf
