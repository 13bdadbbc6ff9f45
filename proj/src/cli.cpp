#include "quot/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quot/json_io.hpp"
#include "quot/verify.hpp"

namespace quot {

namespace {

using nlohmann::json;

struct CommonFlags {
    std::string field = "q";
    std::string format = "text";

    Field parsed_field() const { return Field::parse(field); }
    bool json_out() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--field", flags.field, "coefficient field: q or fp:<prime>")
        ->capture_default_str();
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

std::vector<unsigned> parse_chart_list(const std::string& text) {
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        try {
            parts.push_back(static_cast<unsigned>(std::stoul(item)));
        } catch (const std::exception&) {
            throw UsageError("bad chart part '" + item + "'");
        }
        pos = comma + 1;
    }
    return parts;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void print_ideal_text(std::ostream& out, const std::vector<Polynomial>& polys) {
    for (const auto& g : polys) out << g.str() << "\n";
}

// Assembled in a display ring with T first under lex so the text groups by
// powers of T.
std::string char_poly_text(const std::vector<Polynomial>& coeffs, const Ring& ring) {
    std::vector<std::string> vars{"T"};
    for (const auto& v : ring->vars()) vars.push_back(v);
    Ring disp = make_ring(ring->field(), std::move(vars), MonomialOrder::lex());
    Polynomial chi = Polynomial::zero(disp);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        chi += coeffs[k].map_to(disp) *
               Polynomial::variable(disp, std::size_t{0}, static_cast<std::uint32_t>(k));
    return chi.str();
}

int cmd_chart_ideal(const CommonFlags& flags, unsigned d, unsigned r,
                    const std::string& chart_text, unsigned t, bool reduced,
                    const std::string& order_name, std::ostream& out) {
    MonomialOrder order =
        order_name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    ChartIndex chart(d, r, parse_chart_list(chart_text));
    Ideal I = chart_ideal(chart, t == 0 ? d : t, flags.parsed_field(), order);
    const std::vector<Polynomial>& polys = reduced ? I.reduced_basis() : I.gens();
    if (flags.json_out()) {
        Ideal view(I.ring(), polys);
        out << ideal_to_json(view).dump(2) << "\n";
    } else {
        print_ideal_text(out, polys);
    }
    return 0;
}

int cmd_reduced_eqs(const CommonFlags& flags, unsigned d, unsigned r,
                    const std::string& chart_text, bool reduced, std::ostream& out) {
    ChartIndex chart(d, r, parse_chart_list(chart_text));
    Ideal I = reduced_chart_equations(chart, flags.parsed_field());
    const std::vector<Polynomial>& polys = reduced ? I.reduced_basis() : I.gens();
    if (flags.json_out()) {
        Ideal view(I.ring(), polys);
        out << ideal_to_json(view).dump(2) << "\n";
    } else {
        print_ideal_text(out, polys);
    }
    return 0;
}

int cmd_char_poly(const CommonFlags& flags, unsigned d, unsigned r,
                  const std::string& chart_text, std::ostream& out) {
    ChartIndex chart(d, r, parse_chart_list(chart_text));
    Ring ring = chart_ring(flags.parsed_field(), d, r);
    std::vector<Polynomial> coeffs = char_poly(generic_p_matrix(chart, ring));
    if (flags.json_out()) {
        json jc = json::array();
        for (const auto& c : coeffs) jc.push_back(c.str());
        out << json{{"degree", d}, {"vars", ring->vars()}, {"coeffs", std::move(jc)}}.dump(2)
            << "\n";
    } else {
        out << char_poly_text(coeffs, ring) << "\n";
    }
    return 0;
}

int cmd_hilb_support(const CommonFlags& flags, const std::string& point_path,
                     std::ostream& out) {
    QuotPoint pt = quot_point_from_json(load_json(point_path), flags.parsed_field());
    BinaryForm form = hilb_support(pt);
    if (flags.json_out())
        out << binary_form_to_json(form).dump(2) << "\n";
    else
        out << form.str() << "\n";
    return 0;
}

int cmd_xi_map(const CommonFlags& flags, unsigned d, unsigned r,
               const std::string& chart_text, std::ostream& out) {
    ChartIndex chart(d, r, parse_chart_list(chart_text));
    std::vector<Polynomial> coords = xi_chart_map(chart, flags.parsed_field());
    if (flags.json_out()) {
        json jc = json::array();
        for (const auto& c : coords) jc.push_back(c.str());
        out << json{{"d", d}, {"r", r}, {"coords", std::move(jc)}}.dump(2) << "\n";
    } else {
        print_ideal_text(out, coords);
    }
    return 0;
}

int cmd_detect_chart(const CommonFlags& flags, const std::string& point_path,
                     const std::string& matrix_path, std::ostream& out) {
    const Field f = flags.parsed_field();
    std::optional<CMatrix> C;
    if (!matrix_path.empty()) {
        ScalarMatrix m = scalar_matrix_from_json(load_json(matrix_path), f);
        if (m.rows() == 0 || m.cols() % (m.rows() + 1) != 0)
            throw UsageError("matrix shape is not d x (d+1)r");
        C.emplace(static_cast<unsigned>(m.rows()),
                  static_cast<unsigned>(m.cols() / (m.rows() + 1)), std::move(m));
    } else if (!point_path.empty()) {
        QuotPoint pt = quot_point_from_json(load_json(point_path), f);
        C.emplace(expand_point(pt));
    } else {
        throw UsageError("detect-chart needs --matrix or --point");
    }
    DetectResult res = detect_chart(*C);
    if (flags.json_out()) {
        json point = quot_point_to_json(res.point);
        out << json{{"chart", res.chart.parts()},
                    {"frame", point["frame"]},
                    {"cmatrix", scalar_matrix_to_json(res.normalized.m)},
                    {"point", std::move(point)}}
                   .dump(2)
            << "\n";
    } else {
        out << "chart " << res.chart.str() << "\n";
        out << "gl2:\n" << res.frame.gl2.str();
        out << "glr:\n" << res.frame.glr.str();
        out << "normalized matrix:\n" << res.normalized.m.str();
    }
    return 0;
}

int cmd_pluecker(const CommonFlags& flags, const std::string& point_path, std::ostream& out) {
    QuotPoint pt = quot_point_from_json(load_json(point_path), flags.parsed_field());
    PlueckerVector pv = pluecker_coords(expand_point(pt));
    if (flags.json_out()) {
        out << pluecker_to_json(pv).dump(2) << "\n";
    } else {
        for (const auto& [cols, value] : pv.coords) {
            for (std::size_t k = 0; k < cols.size(); ++k)
                out << (k ? "," : "") << cols[k] + 1;
            out << ": " << value.str() << "\n";
        }
    }
    return 0;
}

int cmd_fiber(const CommonFlags& flags, const std::string& point_path, std::ostream& out) {
    QuotPoint pt = quot_point_from_json(load_json(point_path), flags.parsed_field());
    auto comps = fiber_decompose(pt);
    if (flags.json_out()) {
        out << fiber_components_to_json(comps).dump(2) << "\n";
    } else {
        for (const auto& c : comps) {
            out << "root " << c.root_form.str() << "  multiplicity " << c.multiplicity
                << "  chart " << c.restricted.chart.str() << "\n";
            out << "  restricted point: " << quot_point_to_json(c.restricted).dump() << "\n";
        }
    }
    return 0;
}

int cmd_tangent(const CommonFlags& flags, const std::string& ideal_path,
                const std::string& at_text, std::ostream& out) {
    Ideal I = ideal_from_json(load_json(ideal_path));
    Assignment point = assignment_from_string(at_text, I.ring());
    TangentReport rep = tangent_report(I, point);
    if (flags.json_out()) {
        out << tangent_report_to_json(rep).dump(2) << "\n";
    } else {
        out << "jacobian_rank " << rep.jacobian_rank << "\n";
        out << "tangent_dim " << rep.tangent_dim << "\n";
        out << "krull_dim " << rep.dim << "\n";
        out << "verdict " << rep.verdict() << "\n";
    }
    return 0;
}

int cmd_component(const CommonFlags& flags, const std::string& ideal_path,
                  const std::string& at_text, std::ostream& out) {
    Ideal I = ideal_from_json(load_json(ideal_path));
    Assignment point = assignment_from_string(at_text, I.ring());
    ComponentKind kind = component_at(I, point);
    if (flags.json_out())
        out << json{{"component", component_kind_name(kind)}}.dump(2) << "\n";
    else
        out << component_kind_name(kind) << "\n";
    return 0;
}

const char* status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::skipped: return "skipped";
    }
    return "?";
}

int cmd_verify_paper(const CommonFlags& flags, unsigned max_d, std::ostream& out) {
    VerifyOptions opts;
    opts.max_d = max_d;
    opts.field = flags.parsed_field();
    opts.threads = threads_from_env();
    VerificationReport rep = run_verification(opts);
    if (flags.json_out()) {
        json claims = json::array();
        for (const auto& c : rep.claims)
            claims.push_back(json{{"id", c.id},
                                  {"anchor", c.anchor},
                                  {"status", status_name(c.status)},
                                  {"elapsed_s", c.elapsed_s},
                                  {"budget_s", c.budget_s},
                                  {"details", c.details}});
        out << json{{"max_d", rep.max_d},
                    {"field", rep.field.str()},
                    {"claims", std::move(claims)},
                    {"passed", rep.count(ClaimStatus::pass)},
                    {"failed", rep.count(ClaimStatus::fail)},
                    {"skipped", rep.count(ClaimStatus::skipped)}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& c : rep.claims) {
            std::ostringstream line;
            line << c.id << "  " << status_name(c.status) << "  " << std::fixed
                 << std::setprecision(3) << c.elapsed_s << "s  " << c.anchor;
            out << line.str() << "\n";
            if (c.status == ClaimStatus::fail) out << "      " << c.details << "\n";
        }
        out << (rep.all_passed() ? "all claims passed" : "SOME CLAIMS FAILED") << "\n";
    }
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact local models of degree-d quotients on the projective line"};
    app.require_subcommand(1);

    CommonFlags flags;
    unsigned d = 0, r = 0, t = 0, max_d = 4;
    std::string chart_text, point_path, ideal_path, matrix_path, at_text, order_name = "grevlex";
    bool reduced = false;

    auto add_chart_flags = [&](CLI::App* cmd) {
        cmd->add_option("-d,--degree", d, "degree of the quotient")->required();
        cmd->add_option("-r,--rank", r, "rank of the free module")->required();
        cmd->add_option("--chart", chart_text, "chart parts, e.g. 2,1")->required();
        add_common(cmd, flags);
    };

    CLI::App* ci = app.add_subcommand("chart-ideal", "defining ideal of a fat-point chart");
    add_chart_flags(ci);
    ci->add_option("-t,--fat", t, "fat-point degree (defaults to d)");
    ci->add_flag("--reduced", reduced, "print the reduced basis instead of the generators");
    ci->add_option("--order", order_name, "monomial order")
        ->check(CLI::IsMember({"lex", "grevlex"}))
        ->capture_default_str();

    CLI::App* re = app.add_subcommand("reduced-eqs",
                                      "characteristic-coefficient equations of a chart");
    add_chart_flags(re);
    re->add_flag("--reduced", reduced, "print the reduced basis instead of the generators");

    CLI::App* cp = app.add_subcommand("char-poly", "characteristic polynomial of the chart matrix");
    add_chart_flags(cp);

    CLI::App* hs = app.add_subcommand("hilb-support", "support form of a point");
    hs->add_option("--point", point_path, "point JSON file")->required();
    add_common(hs, flags);

    CLI::App* xi = app.add_subcommand("xi-map", "symbolic support coordinates of a chart");
    add_chart_flags(xi);

    CLI::App* dc = app.add_subcommand("detect-chart", "find the chart containing a module");
    dc->add_option("--point", point_path, "point JSON file (expanded first)");
    dc->add_option("--matrix", matrix_path, "presentation matrix JSON file");
    add_common(dc, flags);

    CLI::App* pl = app.add_subcommand("pluecker", "maximal minors of a point's presentation");
    pl->add_option("--point", point_path, "point JSON file")->required();
    add_common(pl, flags);

    CLI::App* fb = app.add_subcommand("fiber", "decompose a point along its support");
    fb->add_option("--point", point_path, "point JSON file")->required();
    add_common(fb, flags);

    CLI::App* tg = app.add_subcommand("tangent", "tangent-space report at a point of an ideal");
    tg->add_option("--ideal", ideal_path, "ideal JSON file")->required();
    tg->add_option("--at", at_text, "point, e.g. \"w_1_1=0,w_1_2=1\" (missing vars are 0)");
    add_common(tg, flags);

    CLI::App* co = app.add_subcommand("component", "component type of an ideal at a point");
    co->add_option("--ideal", ideal_path, "ideal JSON file")->required();
    co->add_option("--at", at_text, "point, e.g. \"w_1_1=0\" (missing vars are 0)");
    add_common(co, flags);

    CLI::App* vp = app.add_subcommand("verify-paper", "run the verification claim suite");
    vp->add_option("--max-d", max_d, "size bound for the parameterized claims")
        ->capture_default_str();
    add_common(vp, flags);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (ci->parsed())
            return cmd_chart_ideal(flags, d, r, chart_text, t, reduced, order_name, out);
        if (re->parsed()) return cmd_reduced_eqs(flags, d, r, chart_text, reduced, out);
        if (cp->parsed()) return cmd_char_poly(flags, d, r, chart_text, out);
        if (hs->parsed()) return cmd_hilb_support(flags, point_path, out);
        if (xi->parsed()) return cmd_xi_map(flags, d, r, chart_text, out);
        if (dc->parsed()) return cmd_detect_chart(flags, point_path, matrix_path, out);
        if (pl->parsed()) return cmd_pluecker(flags, point_path, out);
        if (fb->parsed()) return cmd_fiber(flags, point_path, out);
        if (tg->parsed()) return cmd_tangent(flags, ideal_path, at_text, out);
        if (co->parsed()) return cmd_component(flags, ideal_path, at_text, out);
        if (vp->parsed()) return cmd_verify_paper(flags, max_d, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidChart& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no command\n";
    return 2;
}

}  // namespace quot
