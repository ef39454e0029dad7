// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "hermarc/aschreier.hpp"
#include "hermarc/charsums.hpp"
#include "hermarc/cli.hpp"
#include "hermarc/geometry.hpp"
#include "hermarc/kernels.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace hermarc;
using nlohmann::json;

namespace {

struct Params {
    std::uint32_t p, n, l, r;
};

const std::vector<Params> kFullSweep{{2, 1, 3, 1}, {2, 1, 3, 2}, {2, 2, 3, 2}, {3, 1, 3, 2}, {3, 1, 2, 1},
                                     {3, 1, 4, 1}, {3, 1, 4, 2}, {3, 1, 4, 4}, {2, 1, 4, 3}, {2, 1, 5, 3}};

std::string label(const Params& s)
{
    return "(" + std::to_string(s.p) + "," + std::to_string(s.n) + "," + std::to_string(s.l) + "," +
           std::to_string(s.r) + ")";
}

gf::Field field(std::uint32_t p, std::uint32_t n, std::uint32_t l) { return gf::Field(gf::make_tower(p, n, l)); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        pass = false;
        if (!detail.empty())
            detail += "; ";
        detail += why;
    }
    void note(const std::string& s)
    {
        if (!detail.empty())
            detail += "; ";
        detail += s;
    }
};

Outcome full_sweeps()
{
    Outcome o;
    std::uint64_t total = 0, printed = 0;
    for (const auto& s : kFullSweep) {
        const auto f = field(s.p, s.n, s.l);
        const auto res = kernels::parallel::sweep(f, s.r, kernels::all_triples(f));
        total += res.checked;
        printed += res.printed_differs;
        if (res.checked != (f.order() - 1) * f.order() * f.order())
            o.fail(label(s) + " checked " + std::to_string(res.checked));
        if (res.mismatches)
            o.fail(label(s) + " " + std::to_string(res.mismatches) + " mismatches");
    }
    o.note(std::to_string(total) + " triples");
    if (printed)
        o.note(std::to_string(printed) + " triples where the printed sign would disagree");
    return o;
}

Outcome sampled_sweeps()
{
    Outcome o;
    for (const Params& s : {Params{5, 1, 3, 2}, Params{3, 1, 6, 5}}) {
        const auto f = field(s.p, s.n, s.l);
        const auto res = kernels::parallel::sweep(f, s.r, kernels::sample_triples(f, 10000, 20240601));
        if (res.checked != 10000 || res.mismatches)
            o.fail(label(s) + " " + std::to_string(res.mismatches) + " mismatches of " + std::to_string(res.checked));
        else
            o.note(label(s) + " 10000 agree");
    }
    return o;
}

Outcome weil_identities()
{
    Outcome o;
    std::mt19937_64 rng(3);
    std::uint64_t checked = 0;
    for (const auto& s : kFullSweep) {
        const auto f = field(s.p, s.n, s.l);
        const std::uint32_t u = charsums::ratio_gcd(s.l, s.r);
        const cyclo::BigInt Q = cyclo::BigInt{f.order()};
        const cyclo::BigInt qu = cyclo::BigInt{gf::ipow(f.q(), u)};
        const std::vector<cyclo::BigInt> allowed{0, Q, Q * qu, Q * qu * qu};
        std::uniform_int_distribution<std::uint64_t> any(0, f.order() - 1), nonzero(1, f.order() - 1);
        for (int i = 0; i < 200; ++i) {
            const gf::Elem a = f.element(nonzero(rng)), b = f.element(any(rng)), c = f.element(any(rng));
            const auto brute = charsums::weil_brute(f, a, b, c, s.r);
            const auto wc = charsums::weil_closed(f, a, b, c, s.r);
            const auto closed = charsums::closed_to_cyclo(wc.value, s.p, s.n);
            const auto lifted = brute.m() == closed.m() ? brute : brute.lift(closed.m());
            if (!(lifted == closed)) {
                o.fail(label(s) + " closed form differs on branch " + wc.branch);
                break;
            }
            const auto n2 = brute.norm_sq().as_rational_integer();
            if (!n2 || std::find(allowed.begin(), allowed.end(), *n2) == allowed.end()) {
                o.fail(label(s) + " unexpected |R|^2");
                break;
            }
            cyclo::CycloInt sum(charsums::character_modulus(s.p));
            for (const gf::Elem h : f.subfield_elements(s.n))
                sum += charsums::weil_brute(f, f.mul(h, a), f.mul(h, b), f.mul(h, c), s.r);
            const auto as_int = sum.as_rational_integer();
            if (!as_int || *as_int != aschreier::count_brute(f, {s.r, a, b, c})) {
                o.fail(label(s) + " sum over h differs from the point count");
                break;
            }
            ++checked;
        }
    }
    o.note(std::to_string(checked) + " triples");
    return o;
}

Outcome maximality()
{
    Outcome o;
    const auto f9 = field(3, 1, 2);
    const auto hw = aschreier::hasse_weil_interval(3, 2, static_cast<std::uint64_t>(aschreier::genus(3, 0)));
    const auto square = aschreier::classify(f9, {0, f9.one(), f9.zero(), f9.zero()});
    if (square.verdict != aschreier::Verdict::Maximal || square.affine_count + 1 != 16 || hw.upper != 16)
        o.fail("y^3 - y = x^2 not maximal with 16 points");
    gf::Elem nonsquare = f9.zero();
    for (std::uint64_t c = 1; c < 9; ++c)
        if (f9.quadratic_character(f9.element(c)) == -1) {
            nonsquare = f9.element(c);
            break;
        }
    const auto ns = aschreier::classify(f9, {0, nonsquare, f9.zero(), f9.zero()});
    if (ns.verdict != aschreier::Verdict::Minimal || ns.affine_count + 1 != 4)
        o.fail("non-square a not minimal with 4 points");

    std::uint64_t checked = 0, maximal = 0, minimal = 0;
    for (const auto& s : kFullSweep) {
        const auto f = field(s.p, s.n, s.l);
        const bool even = (s.n * s.l) % 2 == 0;
        const std::int64_t Q = static_cast<std::int64_t>(f.order());
        const std::int64_t dev =
            even ? static_cast<std::int64_t>(gf::ipow(s.p, s.n * s.l / 2) * gf::ipow(f.q(), s.r) * (f.q() - 1)) : 0;
        bool ok = true;
        for (const auto& t : kernels::all_triples(f)) {
            const auto v = aschreier::classify(f, {s.r, t.a, t.b, t.c});
            const std::int64_t N = v.affine_count;
            const bool is_max = even && N == Q + dev;
            const bool is_min = even && N == Q - dev;
            ++checked;
            maximal += v.verdict == aschreier::Verdict::Maximal;
            minimal += v.verdict == aschreier::Verdict::Minimal;
            if ((v.verdict == aschreier::Verdict::Maximal) != is_max ||
                (v.verdict == aschreier::Verdict::Minimal) != is_min || !v.consistent) {
                ok = false;
                break;
            }
        }
        if (!ok)
            o.fail(label(s) + " classifier disagrees with the count");
    }
    o.note(std::to_string(checked) + " triples, " + std::to_string(maximal) + " maximal, " +
           std::to_string(minimal) + " minimal");
    return o;
}

Outcome curve_census()
{
    Outcome o;
    for (auto [p, n, l] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 3}, {2, 1, 4}, {2, 1, 5}, {3, 1, 3}, {3, 1, 4}, {2, 2, 3}}) {
        const auto f = field(p, n, l);
        const geometry::Plane plane(f);
        const auto pts = kernels::parallel::curve_points(plane, geometry::r_of_ell(l));
        const auto expected = gf::ipow(f.q(), 2 * l - 1) + 1;
        const std::string tag = "q=" + std::to_string(f.q()) + ",l=" + std::to_string(l);
        if (pts.size() != expected)
            o.fail(tag + " has " + std::to_string(pts.size()) + " points");
        else
            o.note(tag + ": " + std::to_string(expected));
    }
    return o;
}

Outcome secant_closed_form()
{
    Outcome o;
    for (auto [p, n, l] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 3}, {2, 1, 4}, {3, 1, 3}}) {
        const auto f = field(p, n, l);
        const geometry::Plane plane(f);
        const auto K = kernels::serial::curve_points(plane, geometry::r_of_ell(l));
        const auto counts = kernels::serial::line_counts(plane, K);
        std::uint64_t bad = 0;
        for (std::uint64_t line = 0; line < plane.size(); ++line)
            bad += geometry::secant_size_closed(plane, line) != counts[line];
        const std::string tag = "PG(2," + std::to_string(f.order()) + ")";
        if (bad)
            o.fail(tag + " " + std::to_string(bad) + " lines differ");
        else
            o.note(tag + " " + std::to_string(plane.size()) + " lines");
    }
    return o;
}

Outcome arc_confirmations()
{
    Outcome o;
    struct Claim {
        std::uint32_t p, n, l;
        std::uint64_t N, d;
    };
    for (const auto& c : std::vector<Claim>{{3, 1, 3, 244, 12},
                                            {5, 1, 3, 3126, 30},
                                            {2, 1, 4, 140, 12},
                                            {2, 2, 3, 1041, 20},
                                            {2, 1, 6, 2088, 40},
                                            {3, 1, 6, 177148, 252}}) {
        const auto start = std::chrono::steady_clock::now();
        const auto f = field(c.p, c.n, c.l);
        const geometry::Plane plane(f);
        const auto arc = geometry::build_arc(plane);
        const auto t = geometry::verify_theorem_case(plane, arc);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string tag = "(" + std::to_string(c.N) + "," + std::to_string(c.d) + ") in PG(2," +
                                std::to_string(f.order()) + ")";
        if (!t.confirmed || t.actual_N != c.N || t.claimed_N != c.N || t.claimed_d != c.d ||
            t.empirical_max_secant != c.d || !t.complete_at_claimed_d)
            o.fail(tag + " not confirmed: N=" + std::to_string(t.actual_N) +
                   " max secant=" + std::to_string(t.empirical_max_secant));
        else {
            std::ostringstream s;
            s.precision(2);
            s << std::fixed << tag << " " << secs << "s";
            o.note(s.str());
        }
    }
    return o;
}

Outcome case_four_audit()
{
    Outcome o;
    std::ostringstream out, err;
    const int rc = cli::run({"arc", "check-theorem", "--p", "2", "--n", "1", "--l", "3", "--case", "4"}, out, err);
    json rep;
    try {
        rep = json::parse(out.str()).at("report");
    } catch (const std::exception& e) {
        o.fail(std::string("malformed report: ") + e.what());
        return o;
    }
    if (rc != cli::kExitOk && rc != cli::kExitRefuted)
        o.fail("exit code " + std::to_string(rc));
    if (rep.at("confirmed").get<bool>() != (rc == cli::kExitOk))
        o.fail("exit code disagrees with the verdict");
    const std::uint64_t q = 2, l = 3;
    const std::uint64_t infinity_expected = gf::ipow(q, l) - gf::ipow(q, l - 1) + 1;
    if (!rep.at("double_counting_ok").get<bool>())
        o.fail("double counting fails");
    if (rep.at("line_at_infinity_count").get<std::uint64_t>() != infinity_expected)
        o.fail("line at infinity has " + rep.at("line_at_infinity_count").dump() + " points");

    // second pass: recount every line, visiting the points in shuffled order
    const auto f = field(2, 1, 3);
    const geometry::Plane plane(f);
    auto pts = geometry::build_arc(plane, {4, std::nullopt, 1}).points;
    std::mt19937_64 rng(8);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<std::uint64_t> counts(plane.size(), 0);
    for (const auto pt : pts)
        for (std::uint64_t line = 0; line < plane.size(); ++line)
            counts[line] += plane.incident(pt, line);
    std::map<std::uint64_t, std::uint64_t> hist;
    std::uint64_t total = 0;
    for (const auto k : counts) {
        ++hist[k];
        total += k;
    }
    std::map<std::uint64_t, std::uint64_t> reported;
    for (const auto& row : rep.at("distribution").at("histogram"))
        reported[row.at("secant_size").get<std::uint64_t>()] = row.at("line_count").get<std::uint64_t>();
    if (hist != reported)
        o.fail("recount histogram differs from the report");
    if (total != pts.size() * (f.order() + 1) || pts.size() != rep.at("actual_N").get<std::uint64_t>())
        o.fail("recount incidence total differs");
    if (counts[plane.line_at_infinity()] != infinity_expected)
        o.fail("recount line at infinity differs");

    std::ostringstream s;
    s << "N=" << rep.at("actual_N") << " claimed (" << rep.at("claimed_N") << "," << rep.at("claimed_d")
      << "), max secant " << rep.at("empirical_max_secant") << ", line at infinity " << infinity_expected << ", "
      << (rep.at("confirmed").get<bool>() ? "claim confirmed" : "claim refuted");
    o.note(s.str());
    return o;
}

Outcome property_suites()
{
    Outcome o;
    std::mt19937_64 rng(11);

    // trace transitivity and additivity
    for (auto [p, n, l] : std::vector<std::array<std::uint32_t, 3>>{{2, 2, 3}, {3, 1, 4}, {2, 3, 2}, {5, 1, 3}}) {
        const auto f = field(p, n, l);
        for (int i = 0; i < 500; ++i) {
            const auto x = f.element(rng() % f.order()), y = f.element(rng() % f.order());
            if (f.relative_trace(f.trace(x), n, 1) != f.relative_trace(x, n * l, 1) ||
                f.trace(f.add(x, y)) != f.add(f.trace(x), f.trace(y)) || !f.in_subfield(f.trace(x), n)) {
                o.fail("trace property fails over p=" + std::to_string(p));
                break;
            }
        }
    }

    // additive character orthogonality
    for (auto [p, n, l] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 4}, {3, 1, 3}, {5, 1, 2}, {2, 2, 3}}) {
        const auto f = field(p, n, l);
        for (int i = 0; i < 4; ++i) {
            const auto a = f.element(1 + rng() % (f.order() - 1));
            cyclo::CycloInt sum(charsums::character_modulus(p));
            for (std::uint64_t x = 0; x < f.order(); ++x)
                sum += charsums::chi1(f, f.mul(a, f.element(x)));
            if (!sum.is_zero())
                o.fail("character sum nonzero over p=" + std::to_string(p));
        }
    }

    // cyclotomic ring laws
    for (std::uint32_t m : {2u, 3u, 5u, 12u, 20u}) {
        auto random = [&] {
            std::vector<std::int64_t> c(m);
            for (auto& x : c)
                x = static_cast<std::int64_t>(rng() % 11) - 5;
            return cyclo::CycloInt::from_exponent_counts(m, c);
        };
        for (int i = 0; i < 300; ++i) {
            const auto x = random(), y = random(), z = random();
            if (!((x * y) * z == x * (y * z)) || !(x * (y + z) == x * y + x * z) || !(x * y == y * x)) {
                o.fail("ring law fails for m=" + std::to_string(m));
                break;
            }
        }
    }

    // incidence axioms
    for (auto [p, n, l] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 3}, {3, 1, 2}, {2, 1, 4}}) {
        const auto f = field(p, n, l);
        const geometry::Plane plane(f);
        bool ok = true;
        for (std::uint64_t a = 0; a < plane.size() && ok; ++a) {
            std::uint64_t on = 0;
            for (std::uint64_t line = 0; line < plane.size(); ++line)
                on += plane.incident(a, line);
            ok = on == plane.order() + 1;
            for (std::uint64_t b = a + 1; b < plane.size() && ok; ++b) {
                std::uint64_t common = 0;
                for (const auto line : plane.incident_with(a))
                    common += plane.incident(b, line);
                ok = common == 1;
            }
        }
        if (!ok)
            o.fail("incidence axioms fail in PG(2," + std::to_string(f.order()) + ")");
    }

    // double counting for every construction that fits a small plane
    for (auto [p, n, l] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 3}, {3, 1, 3}, {2, 1, 4}, {2, 1, 5}}) {
        const auto f = field(p, n, l);
        const geometry::Plane plane(f);
        const auto arc = geometry::build_arc(plane);
        if (!geometry::secant_distribution(plane, arc).double_counting_ok)
            o.fail("double counting fails in PG(2," + std::to_string(f.order()) + ")");
    }
    if (o.pass)
        o.note("trace, characters, ring laws, incidence, double counting");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle equivalence, full sweeps", full_sweeps},
        {"oracle equivalence, sampled", sampled_sweeps},
        {"Weil sum identities", weil_identities},
        {"maximality", maximality},
        {"curve census", curve_census},
        {"secant closed form", secant_closed_form},
        {"arc confirmations", arc_confirmations},
        {"odd-degree characteristic-2 audit", case_four_audit},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " [" << o.detail
                  << "] (" << static_cast<std::int64_t>(secs * 1000) << " ms)" << std::endl;
    }
    return failed ? 1 : 0;
}
