// Finite field tower F_p ⊆ F_q ⊆ F_{q^ell}, realised as a single absolute
// extension F_p[t]/(modulus) of degree n*ell.
//
// Elements are packed as the integer sum c_i p^i of their power-basis
// coordinates. That integer is also the canonical element ordering: 0 comes
// first, 1 second, and the constant coordinate varies fastest.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermarc::gf {

/// Raised for arithmetic that has no value (inverse of zero, non-divisor
/// subfield degrees, non-invertible exponents, ...).
class FieldError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Polynomials over F_p, ascending coefficients.
using Poly = std::vector<std::uint32_t>;

/// Field description; serialised verbatim into every report.
struct TowerSpec {
    std::uint32_t p = 2;
    std::uint32_t n = 1;
    std::uint32_t ell = 2;
    Poly modulus; // monic, degree n*ell

    std::uint32_t degree() const { return n * ell; }
    std::uint64_t q() const;
    std::uint64_t order() const;

    bool operator==(const TowerSpec&) const = default;
};

bool is_prime(std::uint64_t v);

/// Rabin irreducibility test: t^(p^m) = t mod f and gcd(t^(p^(m/s)) - t, f) = 1
/// for every prime s | m.
bool is_irreducible(std::uint32_t p, const Poly& f);

/// The monic irreducible polynomial of degree m over F_p whose coefficient
/// vector (c_0, ..., c_{m-1}) has the smallest packed value sum c_i p^i.
Poly find_irreducible(std::uint32_t p, std::uint32_t m);

/// Tower F_p ⊆ F_{p^n} ⊆ F_{p^{n ell}} with the default modulus.
TowerSpec make_tower(std::uint32_t p, std::uint32_t n, std::uint32_t ell);

std::string poly_to_string(const Poly& f);

class Elem {
public:
    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t code) : code_(code) {}

    constexpr std::uint32_t code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }

    constexpr auto operator<=>(const Elem&) const = default;

private:
    std::uint32_t code_ = 0;
};

/// Fields up to this order get log/antilog and trace tables.
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;
/// Largest supported order (packed codes must fit in 32 bits).
inline constexpr std::uint64_t kOrderLimit = std::uint64_t{1} << 31;

/// Arithmetic context for one tower. Immutable after construction and safe
/// for concurrent use.
class Field {
public:
    explicit Field(TowerSpec spec);

    const TowerSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t n() const { return spec_.n; }
    std::uint32_t ell() const { return spec_.ell; }
    std::uint32_t degree() const { return m_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t order() const { return order_; }
    bool has_tables() const { return !log_.empty(); }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    /// The constant k mod p.
    Elem constant(std::int64_t k) const;
    /// Root of the modulus (the power-basis generator t).
    Elem generator_t() const;
    /// Primitive element: the smallest code of multiplicative order Q-1.
    Elem primitive() const { return primitive_; }

    Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Elem x) const;
    Elem element(std::uint64_t code) const;

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem pow(Elem x, std::uint64_t e) const;
    /// x^(p^k); k is reduced modulo the absolute degree.
    Elem frobenius(Elem x, std::uint64_t k) const;
    /// x^(q^i) for the base field q = p^n.
    Elem frobenius_q(Elem x, std::uint64_t i) const { return frobenius(x, (i % ell()) * n()); }

    /// Discrete log to base primitive(); x != 0.
    std::uint64_t log(Elem x) const;

    /// Trace from F_{p^from} down to F_{p^to}; x must lie in F_{p^from}.
    Elem relative_trace(Elem x, std::uint32_t from_degree, std::uint32_t to_degree) const;
    /// Trace from the big field to the subfield of absolute degree d.
    Elem trace_to(Elem x, std::uint32_t target_degree) const;
    /// T: F_{q^ell} -> F_q.
    Elem trace(Elem x) const;
    /// T_u: F_{q^ell} -> F_{q^u}.
    Elem trace_u(Elem x, std::uint32_t u) const { return trace_to(x, u * n()); }
    /// t: F_{q^ell} -> F_p as an integer in [0, p).
    std::uint32_t absolute_trace(Elem x) const;

    /// Quadratic character of the subfield of the given order that contains x.
    /// Returns 0 for x = 0. Throws for p = 2.
    int quadratic_character(Elem x, std::uint64_t field_order) const;
    int quadratic_character(Elem x) const { return quadratic_character(x, order_); }

    bool in_subfield(Elem x, std::uint32_t degree) const;
    /// Elements of F_{p^d} in code order.
    std::vector<Elem> subfield_elements(std::uint32_t degree) const;

    /// The unique x with x^e = a; needs gcd(e, Q-1) = 1 and a != 0.
    Elem invert_exponent_solve(Elem a, std::uint64_t e) const;

    /// Reference arithmetic via polynomial products; used without tables and
    /// as a test oracle for the table path.
    Elem mul_reference(Elem x, Elem y) const;
    Elem pow_reference(Elem x, std::uint64_t e) const;

private:
    Elem add_digits(Elem x, Elem y) const;
    Elem neg_digits(Elem x) const;
    void build_tables();
    Elem find_primitive() const;

    TowerSpec spec_;
    std::uint32_t m_;
    std::uint64_t q_;
    std::uint64_t order_;
    std::vector<std::uint64_t> pow_p_; // p^i, i <= m

    // Split addition tables: codes are cut into a low part of `lo_digits_`
    // coordinates and a high part.
    std::uint32_t lo_digits_ = 0;
    std::uint32_t lo_size_ = 1;
    std::uint32_t hi_size_ = 1;
    std::vector<std::uint32_t> add_lo_;
    std::vector<std::uint32_t> add_hi_;

    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_; // length 2(Q-1)
    std::vector<std::uint32_t> trace_q_;
    std::vector<std::uint8_t> abs_trace_;
    Elem primitive_{1};
};

/// L(x) = sum_i b_i x^(q^i), i < ell.
struct LinearizedPoly {
    std::vector<Elem> coeffs;

    Elem eval(const Field& f, Elem x) const;
};

/// The particular solution is the smallest element of its coset.
struct SolutionSet {
    Elem particular;
    std::vector<Elem> kernel;
};

/// Matrix form of an F_p-linear map of the big field to itself, in the
/// power basis, reduced once so that many right-hand sides solve cheaply.
class LinearSystem {
public:
    LinearSystem(const Field& field, const std::function<Elem(Elem)>& map);
    LinearSystem(const Field& field, const LinearizedPoly& poly);

    std::uint32_t rank() const { return rank_; }
    std::uint32_t kernel_dimension() const { return dim_ - rank_; }
    bool is_permutation() const { return rank_ == dim_; }
    /// Kernel basis in reduced echelon form with respect to the
    /// most-significant coordinate first.
    const std::vector<Elem>& kernel() const { return kernel_; }

    bool solvable(Elem rhs) const;
    std::optional<Elem> solve(Elem rhs) const;
    std::optional<SolutionSet> solve_all(Elem rhs) const;

private:
    using Row = std::vector<std::uint32_t>;

    void reduce();
    std::optional<std::vector<std::uint32_t>> particular_coords(Elem rhs) const;

    const Field* field_;
    std::uint32_t p_;
    std::uint32_t dim_;
    std::vector<Row> matrix_;      // row = output coordinate, col = input basis index
    std::vector<Row> transform_;   // E with E * A = R
    std::vector<std::uint32_t> pivot_col_;
    std::uint32_t rank_ = 0;
    std::vector<Elem> kernel_;
    std::vector<std::uint32_t> kernel_pivot_; // most-significant nonzero coordinate
};

/// f(x) = a^(q^r) x^(q^(2r)) + a x, the map attached to y^q - y = a x^(q^r+1) + ...
LinearizedPoly artin_schreier_map(const Field& f, Elem a, std::uint32_t r);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// Integer power with overflow checking.
std::uint64_t ipow(std::uint64_t base, std::uint64_t e);

} // namespace hermarc::gf
