#include "hermarc/cli.hpp"

#include "hermarc/aschreier.hpp"
#include "hermarc/charsums.hpp"
#include "hermarc/geometry.hpp"
#include "hermarc/kernels.hpp"
#include "hermarc/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

namespace hermarc::cli {

namespace {

using report::json;

struct FieldArgs {
    std::uint32_t p = 0;
    std::uint32_t n = 1;
    std::uint32_t l = 0;
};

struct CurveArgs {
    std::uint32_t r = 0;
    std::string a = "1";
    std::string b = "0";
    std::string c = "0";
    bool brute = false;
    bool closed = false;
    bool both = false;
};

void add_field_options(CLI::App* cmd, FieldArgs& fa)
{
    cmd->add_option("--p", fa.p, "characteristic")->required();
    cmd->add_option("--n", fa.n, "q = p^n")->capture_default_str();
    cmd->add_option("--l", fa.l, "extension degree ell")->required();
}

void add_curve_options(CLI::App* cmd, CurveArgs& ca, bool with_mode)
{
    cmd->add_option("--r", ca.r, "exponent q^r + 1")->required();
    cmd->add_option("--a", ca.a, "coefficient vector or scalar")->capture_default_str();
    cmd->add_option("--b", ca.b, "coefficient vector or scalar")->capture_default_str();
    cmd->add_option("--c", ca.c, "coefficient vector or scalar")->capture_default_str();
    if (with_mode) {
        auto* g = cmd->add_option_group("mode");
        g->add_flag("--brute", ca.brute, "exhaustive value only");
        g->add_flag("--closed", ca.closed, "closed form only");
        g->add_flag("--both", ca.both, "both, with a match flag (default)");
        g->require_option(0, 1);
    }
}

std::unique_ptr<gf::Field> make_field(const FieldArgs& fa)
{
    if (fa.l < 2)
        throw std::invalid_argument("--l must be at least 2");
    return std::make_unique<gf::Field>(gf::make_tower(fa.p, fa.n, fa.l));
}

json params_json(const gf::Field& f, const aschreier::CurveParams& cp)
{
    return {{"r", cp.r},
            {"u", cp.u(f)},
            {"a", report::elem_json(f, cp.a)},
            {"b", report::elem_json(f, cp.b)},
            {"c", report::elem_json(f, cp.c)}};
}

aschreier::CurveParams curve_from(const gf::Field& f, const CurveArgs& ca)
{
    aschreier::CurveParams cp{ca.r, parse_element(f, ca.a), parse_element(f, ca.b), parse_element(f, ca.c)};
    if (cp.a.is_zero())
        throw std::invalid_argument("--a must be nonzero");
    return cp;
}

int parse_case(const std::string& text)
{
    if (text == "auto")
        return 0;
    int c = 0;
    try {
        std::size_t used = 0;
        c = std::stoi(text, &used);
        if (used != text.size())
            c = -1;
    } catch (const std::exception&) {
        c = -1;
    }
    if (c < 1 || c > 6)
        throw std::invalid_argument("--case expects 1..6 or auto, got '" + text + "'");
    return c;
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int emit(json body, const std::string& command, int code)
    {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        body["command"] = command;
        body["tool"] = report::kToolName;
        body["tool_version"] = report::tool_version();
        body["format_version"] = report::kFormatVersion;
        body["timing"] = {{"seconds", secs}};
        out_ << body.dump(2) << '\n';
        return code;
    }

    std::ostream& err() { return err_; }
    void restart() { start_ = std::chrono::steady_clock::now(); }

private:
    std::ostream& out_;
    std::ostream& err_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_csv(const std::string& path, const geometry::SecantDistribution& d)
{
    std::ofstream csv(path);
    if (!csv)
        throw std::invalid_argument("cannot write " + path);
    report::write_census_csv(csv, d);
}

} // namespace

gf::Elem parse_element(const gf::Field& f, const std::string& text)
{
    const std::uint32_t m = f.degree();
    auto shape_error = [&](const std::string& why) {
        return std::invalid_argument("bad element '" + text + "': " + why + "; expected " + std::to_string(m) +
                                     " comma-separated residues in [0," + std::to_string(f.p()) +
                                     ") or a single scalar");
    };
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw shape_error("non-numeric entry");
        if (part.size() > 9)
            throw shape_error("entry out of range");
        const auto v = static_cast<std::uint32_t>(std::stoul(part));
        if (v >= f.p())
            throw shape_error("entry " + part + " out of range");
        coeffs.push_back(v);
    }
    if (text.empty() || text.back() == ',')
        throw shape_error("empty entry");
    if (coeffs.size() == 1)
        return f.constant(coeffs[0]);
    if (coeffs.size() != m)
        throw shape_error("got " + std::to_string(coeffs.size()) + " entries");
    return f.from_coeffs(coeffs);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Artin-Schreier point counts, maximality and complete arcs from the curve H"};
    app.name("hermarc");
    app.set_version_flag("--version", report::tool_version());
    app.require_subcommand(1);
    app.fallthrough();
    int workers = 0;
    app.add_option("--workers", workers, "parallel workers (default: all)");

    Runner runner(out, err);
    int code = kExitOk;
    std::function<void()> action;

    FieldArgs fa;
    CurveArgs ca;

    auto* info = app.add_subcommand("field-info", "describe the field tower");
    add_field_options(info, fa);
    info->callback([&] {
        action = [&] {
            const auto f = make_field(fa);
            json body{{"field", report::field_json(f->spec())},
                      {"modulus_text", gf::poly_to_string(f->spec().modulus)},
                      {"q", f->q()},
                      {"Q", f->order()},
                      {"primitive", report::elem_json(*f, f->primitive())},
                      {"tables", f->has_tables()}};
            code = runner.emit(body, "field-info", kExitOk);
        };
    });

    auto* count = app.add_subcommand("count", "affine point count of y^q - y = a x^(q^r+1) + b x + c");
    add_field_options(count, fa);
    add_curve_options(count, ca, true);
    count->callback([&] {
        action = [&] {
            const auto f = make_field(fa);
            const auto cp = curve_from(*f, ca);
            const bool want_closed = !ca.brute;
            const bool want_brute = !ca.closed;
            json body{{"field", report::field_json(f->spec())}, {"params", params_json(*f, cp)}};
            std::optional<std::int64_t> closed, brute;
            if (want_closed) {
                const auto cc = aschreier::closed_count(*f, cp);
                closed = cc.value;
                body["N_closed"] = cc.value;
                body["branch"] = cc.branch;
                if (cc.as_printed)
                    body["N_as_printed"] = *cc.as_printed;
                body["witnesses"] = report::witnesses_json(*f, cc.witnesses);
            }
            if (want_brute) {
                brute = aschreier::count_brute(*f, cp);
                body["N_brute"] = *brute;
            }
            int rc = kExitOk;
            if (closed && brute) {
                body["match"] = *closed == *brute;
                rc = *closed == *brute ? kExitOk : kExitRefuted;
            }
            code = runner.emit(body, "count", rc);
        };
    });

    auto* classify = app.add_subcommand("classify", "maximal / minimal classification");
    add_field_options(classify, fa);
    add_curve_options(classify, ca, false);
    classify->callback([&] {
        action = [&] {
            const auto f = make_field(fa);
            const auto cp = curve_from(*f, ca);
            const auto v = aschreier::classify(*f, cp);
            json body{{"field", report::field_json(f->spec())},
                      {"params", params_json(*f, cp)},
                      {"verdict", aschreier::to_string(v.verdict)},
                      {"conditions", report::conditions_json(v.conditions)},
                      {"N_closed", v.affine_count},
                      {"projective_count", v.affine_count + 1},
                      {"branch", v.branch},
                      {"count_verdict", aschreier::to_string(v.count_verdict)},
                      {"consistent", v.consistent}};
            try {
                const auto g = aschreier::genus(f->q(), cp.r);
                const auto hw = aschreier::hasse_weil_interval(f->q(), f->ell(), static_cast<std::uint64_t>(g));
                body["genus"] = g;
                body["hasse_weil"] = {{"lower", report::bigint_json(hw.lower)},
                                      {"upper", report::bigint_json(hw.upper)},
                                      {"exact", hw.exact}};
            } catch (const std::invalid_argument& e) {
                body["genus"] = nullptr;
                body["genus_note"] = e.what();
            }
            code = runner.emit(body, "classify", v.consistent ? kExitOk : kExitRefuted);
        };
    });

    auto* weil = app.add_subcommand("weil", "the Weil sum R(a,b,c) over F_{q^ell}");
    add_field_options(weil, fa);
    add_curve_options(weil, ca, true);
    weil->callback([&] {
        action = [&] {
            const auto f = make_field(fa);
            const auto cp = curve_from(*f, ca);
            json body{{"field", report::field_json(f->spec())}, {"params", params_json(*f, cp)}};
            std::optional<cyclo::CycloInt> closed, brute;
            if (!ca.brute) {
                const auto wc = charsums::weil_closed(*f, cp.a, cp.b, cp.c, cp.r);
                closed = charsums::closed_to_cyclo(wc.value, f->p(), f->n());
                body["closed"] = {{"symbolic", wc.value.to_string()},
                                  {"branch", wc.branch},
                                  {"value", report::cyclo_json(*closed)}};
            }
            if (!ca.closed) {
                brute = charsums::weil_brute(*f, cp.a, cp.b, cp.c, cp.r);
                body["brute"] = {{"value", report::cyclo_json(*brute)},
                                 {"norm_sq", report::cyclo_json(brute->norm_sq())}};
            }
            int rc = kExitOk;
            if (closed && brute) {
                const auto lifted = brute->m() == closed->m() ? *brute : brute->lift(closed->m());
                const bool ok = *closed == lifted;
                body["match"] = ok;
                rc = ok ? kExitOk : kExitRefuted;
            }
            code = runner.emit(body, "weil", rc);
        };
    });

    std::uint64_t sample = 0;
    std::uint64_t seed = 1;
    auto* sweep = app.add_subcommand("sweep", "closed form against exhaustive counts over many (a,b,c)");
    add_field_options(sweep, fa);
    sweep->add_option("--r", ca.r, "exponent q^r + 1")->required();
    sweep->add_option("--sample", sample, "random triples instead of all (0 = all)");
    sweep->add_option("--seed", seed, "sampling seed")->capture_default_str();
    sweep->callback([&] {
        action = [&] {
            const auto f = make_field(fa);
            const auto triples = sample ? kernels::sample_triples(*f, sample, seed) : kernels::all_triples(*f);
            const auto res = kernels::parallel::sweep(*f, ca.r, triples, workers);
            json body{{"field", report::field_json(f->spec())},
                      {"r", ca.r},
                      {"mode", sample ? "sampled" : "exhaustive"},
                      {"result", report::sweep_json(*f, res)}};
            if (sample)
                body["seed"] = seed;
            code = runner.emit(body, "sweep", res.mismatches == 0 ? kExitOk : kExitRefuted);
        };
    });

    auto* arc = app.add_subcommand("arc", "arc construction and verification");
    arc->require_subcommand(1);
    arc->fallthrough();
    std::string case_text = "auto";
    std::optional<std::uint64_t> subset_seed;
    std::string out_path, in_path, csv_path;

    auto add_arc_build_options = [&](CLI::App* cmd) {
        add_field_options(cmd, fa);
        cmd->add_option("--case", case_text, "1..6 or auto")->capture_default_str();
        cmd->add_option("--subset-seed", subset_seed, "permute the choice of adjoined points");
    };

    auto* build = arc->add_subcommand("build", "construct an arc and write it to a file");
    add_arc_build_options(build);
    build->add_option("--out", out_path, "arc file")->required();
    build->callback([&] {
        action = [&] {
            const auto f = make_field(fa);
            const geometry::Plane plane(*f);
            const auto a = geometry::build_arc(plane, {parse_case(case_text), subset_seed, workers});
            std::ofstream file(out_path);
            if (!file)
                throw std::invalid_argument("cannot write " + out_path);
            file << report::arc_file_json(f->spec(), a).dump() << '\n';
            json body{{"field", report::field_json(f->spec())},
                      {"case", a.construction},
                      {"claimed_N", a.claimed_N},
                      {"claimed_d", a.claimed_d},
                      {"size", a.size()},
                      {"out", out_path}};
            if (subset_seed)
                body["subset_seed"] = *subset_seed;
            code = runner.emit(body, "arc build", kExitOk);
        };
    });

    auto* verify = arc->add_subcommand("verify", "check an arc file against its claimed (N, d)");
    verify->add_option("--in", in_path, "arc file")->required()->check(CLI::ExistingFile);
    verify->add_option("--csv", csv_path, "census CSV output");
    verify->callback([&] {
        action = [&] {
            const auto loaded = report::load_arc_file(in_path);
            const gf::Field f(loaded.spec);
            const geometry::Plane plane(f);
            const auto a = report::arc_from_json(plane, loaded.raw);
            const auto t = geometry::verify_theorem_case(plane, a, workers);
            if (!csv_path.empty())
                write_csv(csv_path, t.distribution);
            json body{{"field", report::field_json(f.spec())}, {"in", in_path}, {"report", report::theorem_json(t)}};
            code = runner.emit(body, "arc verify", t.confirmed ? kExitOk : kExitRefuted);
        };
    });

    auto* census = arc->add_subcommand("census", "secant distribution of an arc file");
    census->add_option("--in", in_path, "arc file")->required()->check(CLI::ExistingFile);
    census->add_option("--csv", csv_path, "census CSV output");
    census->callback([&] {
        action = [&] {
            const auto loaded = report::load_arc_file(in_path);
            const gf::Field f(loaded.spec);
            const geometry::Plane plane(f);
            const auto a = report::arc_from_json(plane, loaded.raw);
            const auto d = geometry::secant_distribution(plane, a, workers);
            if (!csv_path.empty())
                write_csv(csv_path, d);
            json body{{"field", report::field_json(f.spec())},
                      {"in", in_path},
                      {"size", a.size()},
                      {"line_at_infinity_count", d.line_counts[plane.line_at_infinity()]},
                      {"distribution", report::distribution_json(d)}};
            code = runner.emit(body, "arc census", d.double_counting_ok ? kExitOk : kExitRefuted);
        };
    });

    auto* check = arc->add_subcommand("check-theorem", "build the case arc and verify its claims");
    add_arc_build_options(check);
    check->add_option("--csv", csv_path, "census CSV output");
    check->callback([&] {
        action = [&] {
            const auto f = make_field(fa);
            const geometry::Plane plane(*f);
            const auto a = geometry::build_arc(plane, {parse_case(case_text), subset_seed, workers});
            const auto t = geometry::verify_theorem_case(plane, a, workers);
            if (!csv_path.empty())
                write_csv(csv_path, t.distribution);
            json body{{"field", report::field_json(f->spec())}, {"report", report::theorem_json(t)}};
            if (subset_seed)
                body["subset_seed"] = *subset_seed;
            code = runner.emit(body, "arc check-theorem", t.confirmed ? kExitOk : kExitRefuted);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        runner.restart();
        if (action)
            action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return code;
}

} // namespace hermarc::cli
