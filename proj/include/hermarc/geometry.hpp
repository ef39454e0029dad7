// PG(2, Q) incidence, the generalized Hermitian curve H, its secant census,
// the six arc constructions and the completeness verifier.

#pragma once

#include "hermarc/gf.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hermarc::geometry {

using gf::Elem;
using gf::Field;

using Triple = std::array<Elem, 3>;

/// Points and lines share one dense indexing:
///   (1:a:b) -> a Q + b,  (0:1:b) -> Q^2 + b,  (0:0:1) -> Q^2 + Q.
/// A line index names [alpha:beta:gamma], meaning alpha X + beta Y + gamma Z = 0.
class Plane {
public:
    explicit Plane(const Field& f);

    const Field& field() const { return *f_; }
    std::uint64_t order() const { return Q_; }
    std::uint64_t size() const { return Q_ * Q_ + Q_ + 1; }

    /// Normalizes so that the leftmost nonzero coordinate is 1.
    std::uint64_t index(const Triple& t) const;
    Triple triple(std::uint64_t idx) const;

    bool incident(std::uint64_t point, std::uint64_t line) const;

    /// Indices of the Q+1 objects incident with `idx`; by duality this is both
    /// lines-through-a-point and points-on-a-line.
    template <class Visit>
    void for_each_incident(std::uint64_t idx, Visit&& visit) const;
    std::vector<std::uint64_t> incident_with(std::uint64_t idx) const;

    std::uint64_t affine_point(Elem x, Elem y) const;
    std::uint64_t infinite_point(Elem B) const { return code(B) * Q_; } // (1:B:0)
    std::uint64_t vertical_point() const { return Q_ * Q_; }       // (0:1:0)

    /// y + b x + c = 0.
    std::uint64_t affine_line(Elem b, Elem c) const;
    /// x = alpha.
    std::uint64_t vertical_line(Elem alpha) const;
    std::uint64_t line_at_infinity() const { return Q_ * Q_ + Q_; }

private:
    static std::uint64_t code(Elem x) { return x.code(); }
    Elem el(std::uint64_t c) const { return Elem{static_cast<std::uint32_t>(c)}; }

    const Field* f_;
    std::uint64_t Q_;
};

template <class Visit>
void Plane::for_each_incident(std::uint64_t idx, Visit&& visit) const
{
    const Field& f = *f_;
    const std::uint64_t QQ = Q_ * Q_;
    if (idx == QQ + Q_) {
        // (0:0:1): [1:b:0] and [0:1:0]
        for (std::uint64_t b = 0; b < Q_; ++b)
            visit(b * Q_);
        visit(QQ);
        return;
    }
    if (idx >= QQ) {
        // (0:1:Z): [1:-gZ:g], plus [0:1:-1/Z] or [0:0:1]
        const Elem z = el(idx - QQ);
        const Elem mz = f.neg(z);
        for (std::uint64_t g = 0; g < Q_; ++g)
            visit(code(f.mul(mz, el(g))) * Q_ + g);
        visit(z.is_zero() ? QQ + Q_ : QQ + code(f.neg(f.inv(z))));
        return;
    }
    const Elem y = el(idx / Q_);
    const Elem z = el(idx % Q_);
    if (!z.is_zero()) {
        // (1:Y:Z): [1:b:-(1+bY)/Z] and [0:1:-Y/Z]
        const Elem mzi = f.neg(f.inv(z));
        for (std::uint64_t b = 0; b < Q_; ++b) {
            const Elem g = f.mul(f.add(f.one(), f.mul(el(b), y)), mzi);
            visit(b * Q_ + code(g));
        }
        visit(QQ + code(f.mul(y, mzi)));
        return;
    }
    if (!y.is_zero()) {
        // (1:Y:0): [1:-1/Y:g] and [0:0:1]
        const std::uint64_t base = code(f.neg(f.inv(y))) * Q_;
        for (std::uint64_t g = 0; g < Q_; ++g)
            visit(base + g);
        visit(QQ + Q_);
        return;
    }
    // (1:0:0): [0:1:g] and [0:0:1]
    for (std::uint64_t g = 0; g < Q_; ++g)
        visit(QQ + g);
    visit(QQ + Q_);
}

/// The smallest r >= ell/2 with gcd(ell, r) = 1, in closed form.
std::uint32_t r_of_ell(std::uint32_t ell);

struct Arc {
    std::vector<std::uint64_t> points; // sorted ascending
    std::vector<std::uint8_t> member;  // indexed by point
    int construction = 0;              // 0 = plain curve arc, else 1..6
    std::uint64_t claimed_N = 0;
    std::uint64_t claimed_d = 0;
    std::uint64_t adjoined = 0;        // points added on the line at infinity

    std::uint64_t size() const { return points.size(); }
    static Arc from_points(const Plane& plane, std::vector<std::uint64_t> pts);
};

struct SecantDistribution {
    std::vector<std::uint32_t> line_counts;          // per line
    std::map<std::uint64_t, std::uint64_t> histogram; // size -> number of lines
    std::map<std::uint64_t, std::uint64_t> witness;   // size -> first line with that size
    std::uint64_t max_size = 0;
    std::uint64_t incidence_total = 0;
    bool double_counting_ok = false;
};

/// The curve H: T(y) = T(x^(q^r+1)) with r = r_of_ell(ell), plus (0:1:0).
/// Throws if the size differs from q^(2 ell - 1) + 1.
Arc curve_points(const Plane& plane, int workers = 0);

/// Number of points of H on a line, from the closed-form point count.
std::uint64_t secant_size_closed(const Plane& plane, std::uint64_t line);

/// {B : x^(q^2r) + x = B^(q^r) is solvable}, in code order.
std::vector<Elem> H_set(const Field& f, std::uint32_t r);

/// Case selection from (p, n, ell); 0 when no case applies.
int auto_case(const gf::TowerSpec& spec);
/// Throws std::invalid_argument when the case hypotheses fail.
void check_case(const gf::TowerSpec& spec, int construction);

struct ArcOptions {
    int construction = 0; // 0 = auto
    std::optional<std::uint64_t> subset_seed;
    int workers = 0;
};
Arc build_arc(const Plane& plane, const ArcOptions& opts = {});

SecantDistribution secant_distribution(const Plane& plane, const Arc& arc, int workers = 0);

struct CompletenessReport {
    std::uint64_t d = 0;
    bool is_degree_d_arc = false;
    bool is_complete = false;
    std::uint64_t max_secant = 0;
    std::uint64_t external_points = 0;
    std::uint64_t uncovered_count = 0;
    std::vector<std::uint64_t> uncovered_points; // first few
    std::vector<std::int64_t> witness_lines;     // per point; -1 for arc points and uncovered points
};
CompletenessReport verify_complete(const Plane& plane, const Arc& arc, const SecantDistribution& dist,
                                   std::uint64_t d, int workers = 0);

struct TheoremReport {
    int construction = 0;
    std::uint32_t r = 0;
    std::uint64_t claimed_N = 0;
    std::uint64_t actual_N = 0;
    std::uint64_t claimed_d = 0;
    std::uint64_t empirical_max_secant = 0;
    bool complete_at_claimed_d = false;
    bool complete_at_empirical_d = false;
    std::uint64_t uncovered_at_claimed_d = 0;
    std::uint64_t line_at_infinity_count = 0;
    std::uint64_t adjoined = 0;
    bool double_counting_ok = false;
    SecantDistribution distribution;
    bool confirmed = false;
};
TheoremReport verify_theorem_case(const Plane& plane, const Arc& arc, int workers = 0);

} // namespace hermarc::geometry
