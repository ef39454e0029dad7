#include "hermarc/report.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hermarc::report {

std::string tool_version()
{
    return std::string(kToolName) + " " + HERMARC_VERSION + " (report format " + std::to_string(kFormatVersion) +
           ")";
}

json field_json(const gf::TowerSpec& spec)
{
    return {{"p", spec.p}, {"n", spec.n}, {"ell", spec.ell}, {"modulus", spec.modulus}};
}

gf::TowerSpec field_from_json(const json& j)
{
    gf::TowerSpec spec;
    spec.p = j.at("p").get<std::uint32_t>();
    spec.n = j.at("n").get<std::uint32_t>();
    spec.ell = j.at("ell").get<std::uint32_t>();
    spec.modulus = j.at("modulus").get<gf::Poly>();
    if (!gf::is_prime(spec.p) || spec.n == 0 || spec.ell < 2)
        throw std::invalid_argument("field record needs prime p, n >= 1 and ell >= 2");
    if (spec.modulus.size() != spec.degree() + 1 || spec.modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree n*ell");
    for (const auto c : spec.modulus)
        if (c >= spec.p)
            throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    if (!gf::is_irreducible(spec.p, spec.modulus))
        throw std::invalid_argument("modulus " + gf::poly_to_string(spec.modulus) + " is reducible");
    return spec;
}

json elem_json(const gf::Field& f, gf::Elem x) { return f.coeffs(x); }

json bigint_json(const cyclo::BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

json cyclo_json(const cyclo::CycloInt& z)
{
    json coeffs = json::array();
    for (const auto& c : z.coeffs())
        coeffs.push_back(bigint_json(c));
    json out{{"m", z.m()}, {"coeffs", coeffs}, {"text", z.to_string()}};
    if (auto v = z.as_rational_integer())
        out["integer"] = bigint_json(*v);
    return out;
}

json witnesses_json(const gf::Field& f, const aschreier::WitnessBundle& w)
{
    json out{{"f_is_perm", w.f_is_perm}};
    auto put = [&](const char* key, const std::optional<gf::Elem>& x) {
        if (x)
            out[key] = elem_json(f, *x);
    };
    put("a1", w.a1);
    put("omega", w.omega);
    put("x0", w.x0);
    put("c1", w.c1);
    return out;
}

json conditions_json(const aschreier::MaximalityConditions& c)
{
    return {{"degree_even", c.degree_even},
            {"solvable_trace_zero", c.solvable_trace_zero},
            {"max_r0_p1", c.max_r0_p1},
            {"max_r0_p3", c.max_r0_p3},
            {"max_half_ratio_odd", c.max_half_ratio_odd},
            {"min_r0_p1", c.min_r0_p1},
            {"min_r0_p3", c.min_r0_p3},
            {"min_half_ratio_even", c.min_half_ratio_even}};
}

json sweep_json(const gf::Field& f, const kernels::SweepResult& s)
{
    json bad = json::array();
    for (const auto& m : s.first_mismatches)
        bad.push_back({{"a", elem_json(f, m.a)},
                       {"b", elem_json(f, m.b)},
                       {"c", elem_json(f, m.c)},
                       {"N_closed", m.closed},
                       {"N_brute", m.brute},
                       {"branch", m.branch}});
    return {{"checked", s.checked}, {"mismatches", s.mismatches},
            {"printed_form_disagreements", s.printed_differs}, {"first_mismatches", bad},
            {"branches", s.branches}};
}

json distribution_json(const geometry::SecantDistribution& d)
{
    json hist = json::array();
    for (const auto& [size, count] : d.histogram)
        hist.push_back({{"secant_size", size}, {"line_count", count}, {"witness_line", d.witness.at(size)}});
    return {{"histogram", hist},
            {"max_size", d.max_size},
            {"incidence_total", d.incidence_total},
            {"double_counting_ok", d.double_counting_ok}};
}

json theorem_json(const geometry::TheoremReport& t)
{
    return {{"case", t.construction},
            {"r", t.r},
            {"claimed_N", t.claimed_N},
            {"actual_N", t.actual_N},
            {"claimed_d", t.claimed_d},
            {"empirical_max_secant", t.empirical_max_secant},
            {"is_complete_at_claimed_d", t.complete_at_claimed_d},
            {"is_complete_at_empirical_d", t.complete_at_empirical_d},
            {"uncovered_at_claimed_d", t.uncovered_at_claimed_d},
            {"line_at_infinity_count", t.line_at_infinity_count},
            {"adjoined_points", t.adjoined},
            {"double_counting_ok", t.double_counting_ok},
            {"distribution", distribution_json(t.distribution)},
            {"confirmed", t.confirmed}};
}

json arc_file_json(const gf::TowerSpec& spec, const geometry::Arc& arc)
{
    return {{"format_version", kFormatVersion},
            {"field", field_json(spec)},
            {"case", arc.construction},
            {"claimed_N", arc.claimed_N},
            {"claimed_d", arc.claimed_d},
            {"adjoined", arc.adjoined},
            {"points", arc.points}};
}

LoadedArc load_arc_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open arc file " + path);
    LoadedArc out;
    try {
        out.raw = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("arc file " + path + " is not valid JSON: " + e.what());
    }
    out.spec = field_from_json(out.raw.at("field"));
    return out;
}

geometry::Arc arc_from_json(const geometry::Plane& plane, const json& j)
{
    auto arc = geometry::Arc::from_points(plane, j.at("points").get<std::vector<std::uint64_t>>());
    arc.construction = j.value("case", 0);
    arc.claimed_N = j.value("claimed_N", std::uint64_t{0});
    arc.claimed_d = j.value("claimed_d", std::uint64_t{0});
    arc.adjoined = j.value("adjoined", std::uint64_t{0});
    return arc;
}

void write_census_csv(std::ostream& out, const geometry::SecantDistribution& d)
{
    out << "secant_size,line_count\n";
    for (const auto& [size, count] : d.histogram)
        out << size << ',' << count << '\n';
}

} // namespace hermarc::report
