// Data-parallel kernels behind the census, completeness scan, curve scan and
// count sweeps. Each has an OpenMP version and a serial reference with the
// same result; workers <= 0 means the OpenMP default.

#pragma once

#include "hermarc/geometry.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hermarc::kernels {

using geometry::Plane;
using gf::Elem;
using gf::Field;

struct CompletenessScan {
    std::uint64_t external = 0;
    std::uint64_t uncovered = 0;
    std::vector<std::uint64_t> uncovered_points; // ascending, capped
    std::vector<std::int64_t> witness_lines;     // first d-secant through each external point, else -1
};

struct SweepMismatch {
    Elem a, b, c;
    std::int64_t closed = 0;
    std::int64_t brute = 0;
    std::string branch;
};

struct SweepResult {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t printed_differs = 0; // triples where the printed form would disagree with the oracle
    std::vector<SweepMismatch> first_mismatches; // capped, in enumeration order
    std::map<std::string, std::uint64_t> branches;
};

struct Triple3 {
    Elem a, b, c;
};

inline constexpr std::size_t kMaxListed = 16;

namespace serial {
std::vector<std::uint32_t> line_counts(const Plane& plane, const std::vector<std::uint64_t>& points);
CompletenessScan completeness(const Plane& plane, const std::vector<std::uint8_t>& member,
                              const std::vector<std::uint32_t>& counts, std::uint64_t d);
std::vector<std::uint64_t> curve_points(const Plane& plane, std::uint32_t r);
SweepResult sweep(const Field& f, std::uint32_t r, const std::vector<Triple3>& triples);
} // namespace serial

namespace parallel {
std::vector<std::uint32_t> line_counts(const Plane& plane, const std::vector<std::uint64_t>& points,
                                       int workers = 0);
CompletenessScan completeness(const Plane& plane, const std::vector<std::uint8_t>& member,
                              const std::vector<std::uint32_t>& counts, std::uint64_t d, int workers = 0);
std::vector<std::uint64_t> curve_points(const Plane& plane, std::uint32_t r, int workers = 0);
SweepResult sweep(const Field& f, std::uint32_t r, const std::vector<Triple3>& triples, int workers = 0);
} // namespace parallel

/// Every (a, b, c) with a != 0, in code order.
std::vector<Triple3> all_triples(const Field& f);
/// Uniform triples with a != 0 from mt19937_64(seed).
std::vector<Triple3> sample_triples(const Field& f, std::uint64_t count, std::uint64_t seed);

int available_workers();

} // namespace hermarc::kernels
