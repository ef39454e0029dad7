#include "hermarc/kernels.hpp"

#include "hermarc/aschreier.hpp"
#include "hermarc/charsums.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <utility>

#include <omp.h>

namespace hermarc::kernels {

namespace {

int resolve(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

Elem el(std::uint64_t c) { return Elem{static_cast<std::uint32_t>(c)}; }

/// Reuses the per-a linear algebra across consecutive triples with equal a.
class EvaluatorCache {
public:
    EvaluatorCache(const Field& f, std::uint32_t r) : f_(f), r_(r) {}

    const aschreier::ClosedFormEvaluator& get(Elem a)
    {
        if (!eval_ || a_ != a) {
            eval_.emplace(f_, r_, a);
            a_ = a;
        }
        return *eval_;
    }

private:
    const Field& f_;
    std::uint32_t r_;
    Elem a_;
    std::optional<aschreier::ClosedFormEvaluator> eval_;
};

void check_one(const Field& f, std::uint32_t r, const Triple3& t, EvaluatorCache& cache, SweepResult& res,
               std::vector<std::pair<std::uint64_t, SweepMismatch>>& bad, std::uint64_t idx)
{
    const auto closed = cache.get(t.a).count(t.b, t.c);
    const std::int64_t brute = aschreier::count_brute(f, {r, t.a, t.b, t.c});
    ++res.checked;
    ++res.branches[closed.branch];
    if (closed.as_printed && *closed.as_printed != brute)
        ++res.printed_differs;
    if (closed.value != brute) {
        ++res.mismatches;
        if (bad.size() < kMaxListed)
            bad.push_back({idx, {t.a, t.b, t.c, closed.value, brute, closed.branch}});
    }
}

} // namespace

int available_workers() { return omp_get_max_threads(); }

std::vector<Triple3> all_triples(const Field& f)
{
    const std::uint64_t Q = f.order();
    std::vector<Triple3> out;
    out.reserve((Q - 1) * Q * Q);
    for (std::uint64_t a = 1; a < Q; ++a)
        for (std::uint64_t b = 0; b < Q; ++b)
            for (std::uint64_t c = 0; c < Q; ++c)
                out.push_back({el(a), el(b), el(c)});
    return out;
}

std::vector<Triple3> sample_triples(const Field& f, std::uint64_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, f.order() - 1);
    std::uniform_int_distribution<std::uint64_t> any(0, f.order() - 1);
    std::vector<Triple3> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const Elem a = el(nonzero(rng));
        const Elem b = el(any(rng));
        const Elem c = el(any(rng));
        out.push_back({a, b, c});
    }
    return out;
}

namespace serial {

std::vector<std::uint32_t> line_counts(const Plane& plane, const std::vector<std::uint64_t>& points)
{
    std::vector<std::uint32_t> counts(plane.size(), 0);
    for (const auto pt : points)
        plane.for_each_incident(pt, [&](std::uint64_t line) { ++counts[line]; });
    return counts;
}

CompletenessScan completeness(const Plane& plane, const std::vector<std::uint8_t>& member,
                              const std::vector<std::uint32_t>& counts, std::uint64_t d)
{
    CompletenessScan out;
    out.witness_lines.assign(plane.size(), -1);
    for (std::uint64_t pt = 0; pt < plane.size(); ++pt) {
        if (member[pt])
            continue;
        ++out.external;
        std::int64_t witness = -1;
        plane.for_each_incident(pt, [&](std::uint64_t line) {
            if (witness < 0 && counts[line] == d)
                witness = static_cast<std::int64_t>(line);
        });
        out.witness_lines[pt] = witness;
        if (witness < 0) {
            ++out.uncovered;
            if (out.uncovered_points.size() < kMaxListed)
                out.uncovered_points.push_back(pt);
        }
    }
    return out;
}

std::vector<std::uint64_t> curve_points(const Plane& plane, std::uint32_t r)
{
    const Field& f = plane.field();
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < f.order(); ++x) {
        const Elem tx = f.trace(charsums::norm_power(f, el(x), r));
        for (std::uint64_t y = 0; y < f.order(); ++y)
            if (f.trace(el(y)) == tx)
                out.push_back(plane.affine_point(el(x), el(y)));
    }
    out.push_back(plane.vertical_point());
    std::sort(out.begin(), out.end());
    return out;
}

SweepResult sweep(const Field& f, std::uint32_t r, const std::vector<Triple3>& triples)
{
    SweepResult res;
    EvaluatorCache cache(f, r);
    std::vector<std::pair<std::uint64_t, SweepMismatch>> bad;
    for (std::uint64_t i = 0; i < triples.size(); ++i)
        check_one(f, r, triples[i], cache, res, bad, i);
    for (auto& [idx, m] : bad)
        res.first_mismatches.push_back(std::move(m));
    return res;
}

} // namespace serial

namespace parallel {

std::vector<std::uint32_t> line_counts(const Plane& plane, const std::vector<std::uint64_t>& points, int workers)
{
    const std::size_t L = plane.size();
    std::vector<std::uint32_t> counts(L, 0);
    const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel num_threads(resolve(workers))
    {
        std::vector<std::uint32_t> local(L, 0);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i)
            plane.for_each_incident(points[i], [&](std::uint64_t line) { ++local[line]; });
#pragma omp critical
        for (std::size_t j = 0; j < L; ++j)
            counts[j] += local[j];
    }
    return counts;
}

CompletenessScan completeness(const Plane& plane, const std::vector<std::uint8_t>& member,
                              const std::vector<std::uint32_t>& counts, std::uint64_t d, int workers)
{
    CompletenessScan out;
    out.witness_lines.assign(plane.size(), -1);
    const auto n = static_cast<std::int64_t>(plane.size());
    std::uint64_t external = 0;
    std::uint64_t uncovered = 0;
    std::vector<std::uint64_t> listed;
#pragma omp parallel num_threads(resolve(workers))
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 1024) reduction(+ : external, uncovered)
        for (std::int64_t pt = 0; pt < n; ++pt) {
            if (member[pt])
                continue;
            ++external;
            std::int64_t witness = -1;
            plane.for_each_incident(static_cast<std::uint64_t>(pt), [&](std::uint64_t line) {
                if (witness < 0 && counts[line] == d)
                    witness = static_cast<std::int64_t>(line);
            });
            out.witness_lines[pt] = witness;
            if (witness < 0) {
                ++uncovered;
                if (local.size() < kMaxListed)
                    local.push_back(static_cast<std::uint64_t>(pt));
            }
        }
#pragma omp critical
        listed.insert(listed.end(), local.begin(), local.end());
    }
    // Each thread keeps its own smallest uncovered points, so the merged
    // prefix equals the serial one.
    std::sort(listed.begin(), listed.end());
    if (listed.size() > kMaxListed)
        listed.resize(kMaxListed);
    out.external = external;
    out.uncovered = uncovered;
    out.uncovered_points = std::move(listed);
    return out;
}

std::vector<std::uint64_t> curve_points(const Plane& plane, std::uint32_t r, int workers)
{
    const Field& f = plane.field();
    const std::uint64_t Q = f.order();
    std::vector<std::vector<Elem>> fibre(Q);
    for (std::uint64_t y = 0; y < Q; ++y)
        fibre[f.trace(el(y)).code()].push_back(el(y));

    std::vector<std::uint64_t> out;
    const auto n = static_cast<std::int64_t>(Q);
#pragma omp parallel num_threads(resolve(workers))
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(static)
        for (std::int64_t x = 0; x < n; ++x) {
            const Elem ex = el(static_cast<std::uint64_t>(x));
            for (const Elem y : fibre[f.trace(charsums::norm_power(f, ex, r)).code()])
                local.push_back(plane.affine_point(ex, y));
        }
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
    out.push_back(plane.vertical_point());
    std::sort(out.begin(), out.end());
    return out;
}

SweepResult sweep(const Field& f, std::uint32_t r, const std::vector<Triple3>& triples, int workers)
{
    SweepResult res;
    std::vector<std::pair<std::uint64_t, SweepMismatch>> bad;
    const auto n = static_cast<std::int64_t>(triples.size());
#pragma omp parallel num_threads(resolve(workers))
    {
        SweepResult local;
        EvaluatorCache cache(f, r);
        std::vector<std::pair<std::uint64_t, SweepMismatch>> local_bad;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i)
            check_one(f, r, triples[i], cache, local, local_bad, static_cast<std::uint64_t>(i));
#pragma omp critical
        {
            res.checked += local.checked;
            res.mismatches += local.mismatches;
            res.printed_differs += local.printed_differs;
            for (const auto& [name, k] : local.branches)
                res.branches[name] += k;
            bad.insert(bad.end(), local_bad.begin(), local_bad.end());
        }
    }
    std::sort(bad.begin(), bad.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    if (bad.size() > kMaxListed)
        bad.resize(kMaxListed);
    for (auto& [idx, m] : bad)
        res.first_mismatches.push_back(std::move(m));
    return res;
}

} // namespace parallel

} // namespace hermarc::kernels
