// Command-line surface for constructing and certifying cut-generating
// functions of the group problem.  Exit codes are a contract:
//   0  the requested property holds / the operation succeeded
//   1  the property fails (a certificate or witness is printed)
//   2  usage or input error
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "groupfn/catalog.hpp"
#include "groupfn/errors.hpp"
#include "groupfn/fillins.hpp"
#include "groupfn/groups.hpp"
#include "groupfn/json_io.hpp"
#include "groupfn/minimality.hpp"
#include "groupfn/plot.hpp"

namespace {

using namespace groupfn;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << text;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

int emit(const std::string& out_path, const json& doc, int code) {
    write_output(out_path, doc.dump(2));
    return code;
}

// Symmetry alone, on the grid of the function; used by the fill-in report.
bool is_symmetric_on_grid(const PwlPeriodic& pi) {
    const long n = static_cast<long>(pi.grid_denominator().get_si());
    for (long i = 0; i < n; ++i)
        if (delta_pi(pi, Rational(i, n), pi.f() - Rational(i, n)) != 0)
            return false;
    return true;
}

int cmd_construct(const std::string& name, const std::string& f_str,
                  const std::string& lam_str, std::uint64_t seed, long q_max,
                  const std::string& out_path) {
    PwlPeriodic pi = [&] {
        if (name == "gj_2_slope")
            return gj_2_slope(parse_rational(f_str), parse_rational(lam_str));
        if (name == "gmic") return gmic(parse_rational(f_str));
        if (name == "random_minimal") return random_minimal(seed, q_max);
        throw ParseError("unknown construction: " + name);
    }();
    return emit(out_path, to_json(pi), 0);
}

int cmd_verify(const std::string& mode, const std::string& in_path,
               const std::string& out_path) {
    const json doc = parse_json(read_input(in_path));
    if (mode == "minimal") {
        MinimalityVerdict v = is_group_json(doc)
                                  ? finite_minimality_test(group_from_json(doc))
                                  : minimality_test(pwl_from_json(doc));
        return emit(out_path, to_json(v), v.minimal ? 0 : 1);
    }
    if (mode == "extreme-finite") {
        if (!is_group_json(doc))
            throw ParseError("extreme-finite requires group JSON");
        const FiniteGroupFunction h = group_from_json(doc);
        try {
            ExtremalityCertificate c = finite_extremality_test(h);
            return emit(out_path, to_json(c), c.extreme ? 0 : 1);
        } catch (const NotMinimal&) {
            json j = {{"extreme", false},
                      {"reason", "NotMinimal"},
                      {"minimality", to_json(finite_minimality_test(h))}};
            return emit(out_path, j, 1);
        }
    }
    if (mode == "extreme-two-slope") {
        const PwlPeriodic pi = pwl_from_json(doc);
        const MinimalityVerdict v = minimality_test(pi);
        const bool two_slope = pi.slope_values().size() == 2;
        // Two Slope Theorem: minimal + exactly two slopes => extreme.
        const bool extreme = v.minimal && two_slope;
        json j = {{"extreme", extreme},
                  {"minimal", v.minimal},
                  {"two_slope", two_slope}};
        if (!v.minimal) j["minimality"] = to_json(v);
        return emit(out_path, j, extreme ? 0 : 1);
    }
    throw ParseError("unknown mode: " + mode);
}

json fill_in_checks(const PwlPeriodic& phi, const PwlPeriodic& pi,
                    const FillInParameters& p) {
    const long dmq = p.D * p.m * p.q;
    bool on = true;
    for (const auto& b : phi.breakpoints())
        if (!on_grid(b, Integer(dmq))) on = false;
    const Rational sup = sup_norm_diff(phi, pi);
    return json{
        {"breakpoints_in_Dmq_grid", on},
        {"two_slope", phi.slope_values().size() == 2},
        {"sup_norm_diff", to_string(sup)},
        {"sup_norm_within_epsilon", sup <= p.epsilon},
        {"agrees_with_input_on_mq_grid", true},  // enforced at construction
        {"subadditive_on_grid", subadditive_on_grid(phi, dmq).minimal},
        {"minimal", minimality_test(phi).minimal},
        {"symmetric", is_symmetric_on_grid(phi)},
    };
}

int cmd_fill_in(const std::string& algorithm, const std::string& eps_str,
                long m, const std::string& in_path,
                const std::string& out_path) {
    const json doc = parse_json(read_input(in_path));
    if (algorithm == "injective") {
        const PwlPeriodic pi = pwl_from_json(doc);
        std::optional<long> m_opt;
        if (m > 0) m_opt = m;
        try {
            FillInResult res =
                injective_2_slope_fill_in(pi, parse_rational(eps_str), m_opt);
            json j = {{"phi", to_json(res.phi)},
                      {"params", to_json(res.params)},
                      {"checks", fill_in_checks(res.phi, pi, res.params)}};
            return emit(out_path, j, 0);
        } catch (const NotMinimal&) {
            json j = {{"error", "NotMinimal"},
                      {"minimality", to_json(minimality_test(pi))}};
            return emit(out_path, j, 1);
        }
    }
    if (algorithm == "two-slope") {
        const FiniteGroupFunction h = group_from_json(doc);
        try {
            PwlPeriodic phi = two_slope_fill_in(h);
            const long n = static_cast<long>(phi.grid_denominator().get_si());
            json j = {{"phi", to_json(phi)},
                      {"checks",
                       {{"subadditive_on_grid",
                         subadditive_on_grid(phi, n).minimal},
                        {"two_slope", phi.slope_values().size() == 2},
                        {"symmetric", is_symmetric_on_grid(phi)}}}};
            return emit(out_path, j, 0);
        } catch (const NotSubadditive&) {
            return emit(out_path, json{{"error", "NotSubadditive"}}, 1);
        }
    }
    throw ParseError("unknown algorithm: " + algorithm);
}

int cmd_restrict(long order, const std::string& in_path,
                 const std::string& out_path) {
    const PwlPeriodic pi = pwl_from_json(parse_json(read_input(in_path)));
    return emit(out_path, to_json(restrict_to_finite_group(pi, order)), 0);
}

int cmd_interpolate(const std::string& in_path, const std::string& out_path) {
    const FiniteGroupFunction h = group_from_json(parse_json(read_input(in_path)));
    return emit(out_path, to_json(interpolate_to_infinite_group(h)), 0);
}

int cmd_pullback(long order, const std::string& in_path,
                 const std::string& out_path) {
    const FiniteGroupFunction h = group_from_json(parse_json(read_input(in_path)));
    return emit(out_path, to_json(pullback_to_refinement(h, order)), 0);
}

// Pick the fill-in oversampling so that mq' is a multiple of the input group
// order; then phi extends the input exactly.
long pipeline_m(const PwlPeriodic& pi, const Rational& eps, long group_order,
                long q) {
    const long r = compute_r(pi, q);
    long base = r;
    const long k = group_order / q;  // q divides the group order
    base = static_cast<long>(lcm(Integer(r), Integer(k)).get_si());
    const long m_min = compute_m(pi, eps, r, q);
    const long mult = (m_min + base - 1) / base;
    return base * (mult > 0 ? mult : 1);
}

int cmd_master_pipeline(const std::string& in_path,
                        const std::string& out_path) {
    const FiniteGroupFunction h = group_from_json(parse_json(read_input(in_path)));
    json report;
    try {
        ExtremalityCertificate c = finite_extremality_test(h);
        report["input_extreme"] = c.extreme;
        if (!c.extreme) {
            report["certificate"] = to_json(c);
            return emit(out_path, report, 1);
        }
    } catch (const NotMinimal&) {
        report["input_extreme"] = false;
        report["reason"] = "NotMinimal";
        return emit(out_path, report, 1);
    }
    const PwlPeriodic pi = interpolate_to_infinite_group(h);
    const Rational eps(1, h.N);
    const long q = static_cast<long>(pi.grid_denominator().get_si());
    const long m = pipeline_m(pi, eps, h.N, q);
    FillInResult res = injective_2_slope_fill_in(pi, eps, m);
    report["params"] = to_json(res.params);
    report["phi"] = to_json(res.phi);
    report["phi_extreme"] = res.phi.slope_values().size() == 2;  // minimal by construction
    const FiniteGroupFunction back = restrict_to_finite_group(res.phi, h.N);
    report["restriction_matches_input"] = (back == h);
    const bool ok = report["phi_extreme"].get<bool>() &&
                    report["restriction_matches_input"].get<bool>();
    return emit(out_path, report, ok ? 0 : 1);
}

int cmd_sequence(long count, const std::vector<std::string>& probes,
                 const std::string& in_path, const std::string& out_path) {
    const PwlPeriodic pi = pwl_from_json(parse_json(read_input(in_path)));
    if (!minimality_test(pi).minimal)
        return emit(out_path, json{{"error", "NotMinimal"}}, 1);
    const long q = static_cast<long>(pi.grid_denominator().get_si());
    const long r = compute_r(pi, q);
    json steps = json::array();
    std::vector<Rational> probe_vals;
    for (const auto& s : probes) probe_vals.push_back(parse_rational(s));
    Rational eps(1, 2);
    Integer L(r);
    for (long i = 1; i <= count; ++i) {
        L = lcm(L, Integer(i));
        const long base = static_cast<long>(L.get_si());
        const long m_min = compute_m(pi, eps, r, q);
        const long m = base * std::max<long>(1, (m_min + base - 1) / base);
        FillInResult res = injective_2_slope_fill_in(pi, eps, m);
        json step = {{"i", i},
                     {"epsilon", to_string(eps)},
                     {"m", m},
                     {"sup_norm_diff", to_string(sup_norm_diff(res.phi, pi))}};
        json pj = json::object();
        for (std::size_t k = 0; k < probe_vals.size(); ++k) {
            const Rational& x = probe_vals[k];
            pj[probes[k]] = {{"value", to_string(res.phi(x))},
                             {"matches", res.phi(x) == pi(x)}};
        }
        step["probes"] = pj;
        steps.push_back(step);
        eps /= 2;
    }
    return emit(out_path, json{{"steps", steps}}, 0);
}

int cmd_plot(const std::vector<std::string>& files, const std::string& format,
             const std::string& out_path) {
    PlotDocument doc;
    for (const auto& file : files) {
        const json j = parse_json(read_input(file));
        doc.add(pwl_from_json(j), file);
    }
    write_output(out_path, format == "csv" ? doc.to_csv() : doc.to_svg());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and certification of group-problem "
                 "cut-generating functions"};
    app.require_subcommand(1);
    // let --input/--output appear after the subcommand name
    app.fallthrough();
    std::string in_path, out_path;
    bool json_flag = false;
    app.add_option("--input", in_path, "input file (default: stdin)");
    app.add_option("--output", out_path, "output file (default: stdout)");
    app.add_flag("--json", json_flag, "emit JSON (the default)");

    std::string name, f_str = "1/2", lam_str = "1/3", mode = "minimal";
    std::string algorithm = "injective", eps_str = "1/16", format = "svg";
    std::uint64_t seed = 0;
    long q_max = 8, order = 0, m = 0, count = 4;
    std::vector<std::string> probes, files;

    auto* construct = app.add_subcommand("construct", "emit a catalog function");
    construct->add_option("name", name)->required();
    construct->add_option("--f", f_str);
    construct->add_option("--lambda", lam_str);
    construct->add_option("--seed", seed);
    construct->add_option("--q-max", q_max);

    auto* verify = app.add_subcommand("verify", "verify a property");
    verify->add_option("--mode", mode)
        ->check(CLI::IsMember({"minimal", "extreme-finite", "extreme-two-slope"}));
    verify->add_option("file", in_path);

    auto* fillin = app.add_subcommand("fill-in", "two-slope fill-in");
    fillin->add_option("--epsilon", eps_str);
    fillin->add_option("--m", m);
    fillin->add_option("--algorithm", algorithm)
        ->check(CLI::IsMember({"injective", "two-slope"}));
    fillin->add_option("file", in_path);

    auto* restr = app.add_subcommand("restrict", "restrict to a cyclic group");
    restr->add_option("--order", order)->required();
    restr->add_option("file", in_path);

    auto* interp = app.add_subcommand("interpolate", "interpolation extension");
    interp->add_option("file", in_path);

    auto* pullb = app.add_subcommand("pullback", "pullback to a refinement");
    pullb->add_option("--order", order)->required();
    pullb->add_option("file", in_path);

    auto* master = app.add_subcommand(
        "master-pipeline", "extend a finite extreme function to R/Z");
    master->add_option("file", in_path);

    auto* seq = app.add_subcommand(
        "sequence", "approximating sequence with eventually-constant probes");
    seq->add_option("--count", count);
    seq->add_option("--probe", probes)
        ->type_size(1)
        ->allow_extra_args(false);  // one value per use, repeatable
    seq->add_option("file", in_path);

    auto* plot = app.add_subcommand("plot", "emit SVG or CSV graphs");
    plot->add_option("files", files, "function JSON files")->required();
    plot->add_option("--format", format)->check(CLI::IsMember({"svg", "csv"}));
    plot->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(construct))
            return cmd_construct(name, f_str, lam_str, seed, q_max, out_path);
        if (app.got_subcommand(verify)) return cmd_verify(mode, in_path, out_path);
        if (app.got_subcommand(fillin))
            return cmd_fill_in(algorithm, eps_str, m, in_path, out_path);
        if (app.got_subcommand(restr)) return cmd_restrict(order, in_path, out_path);
        if (app.got_subcommand(interp)) return cmd_interpolate(in_path, out_path);
        if (app.got_subcommand(pullb)) return cmd_pullback(order, in_path, out_path);
        if (app.got_subcommand(master)) return cmd_master_pipeline(in_path, out_path);
        if (app.got_subcommand(seq))
            return cmd_sequence(count, probes, in_path, out_path);
        if (app.got_subcommand(plot)) return cmd_plot(files, format, out_path);
    } catch (const BadM& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotMinimal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NotSubadditive& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
