// kq: quandle presentations, Alexander polynomials and colorings of knot
// diagrams in S^3, the solid torus and lens spaces.

#include "kq/alexander.hpp"
#include "kq/coloring.hpp"
#include "kq/diagram.hpp"
#include "kq/errors.hpp"
#include "kq/finiteq.hpp"
#include "kq/laurent.hpp"
#include "kq/lmatrix.hpp"
#include "kq/presentation.hpp"
#include "kq/satellite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw kq::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

kq::Diagram load_diagram(const std::string& path) { return kq::parse_diagram(slurp(path)); }

ordered_json presentation_json(const kq::QPresentation& p) {
    ordered_json j;
    auto names = [](const std::vector<kq::Sym>& syms) {
        ordered_json arr = ordered_json::array();
        for (const auto& s : syms)
            arr.push_back(s.str());
        return arr;
    };
    j["primary"] = names(p.primary_gens);
    j["operators"] = names(p.operator_gens);
    ordered_json rels = ordered_json::array();
    for (const auto& r : p.primary_rels)
        rels.push_back(r.str());
    j["relations"] = std::move(rels);
    ordered_json oprels = ordered_json::array();
    for (const auto& w : p.operator_rels)
        oprels.push_back(w.str());
    j["operator_relations"] = std::move(oprels);
    return j;
}

kq::QPresentation present_any(const kq::Diagram& d) {
    switch (d.kind) {
    case kq::DiagramKind::classical: return kq::present_knot(d);
    case kq::DiagramKind::solid_torus: return kq::present_solid_torus(d);
    case kq::DiagramKind::lens: return kq::present_lens(d);
    }
    throw std::logic_error("unreachable");
}

// present: quandle presentation of a diagram (kind-dispatched)
struct PresentArgs {
    std::string diagram;
    bool close = false;
    bool wirtinger = false;
    bool json = false;
};

int run_present(const PresentArgs& a) {
    kq::Diagram d = load_diagram(a.diagram);
    if (a.wirtinger) {
        kq::GroupPresentation g = kq::wirtinger_group(d);
        if (a.json) {
            ordered_json j;
            ordered_json gens = ordered_json::array();
            for (const auto& s : g.gens)
                gens.push_back(s.str());
            j["generators"] = std::move(gens);
            ordered_json rels = ordered_json::array();
            for (const auto& w : g.relators)
                rels.push_back(w.str());
            j["relators"] = std::move(rels);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << g.str();
        }
        return 0;
    }
    kq::QPresentation p = present_any(d);
    if (a.close)
        p = kq::close_in_sphere(p);
    if (a.json) {
        ordered_json j;
        j["kind"] = kq::kind_name(d.kind);
        j.update(presentation_json(p));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << p.str();
    }
    return 0;
}

// satellite: presentation / Alexander matrix / delta of a satellite knot
struct SatelliteArgs {
    std::string pattern;
    std::string companion;
    int meridian_arc = 0;
    bool preferred_framing = false;
    std::string emit = "presentation";
    bool json = false;
};

int run_satellite(const SatelliteArgs& a) {
    kq::SatelliteSpec spec;
    spec.pattern = load_diagram(a.pattern);
    spec.companion = load_diagram(a.companion);
    if (a.meridian_arc > 0)
        spec.meridian_arc = a.meridian_arc;
    spec.preferred_framing = a.preferred_framing;

    if (a.emit == "presentation") {
        kq::QPresentation p = kq::satellite_presentation(spec);
        if (a.json)
            std::cout << presentation_json(p).dump(2) << "\n";
        else
            std::cout << p.str();
    } else if (a.emit == "matrix") {
        std::cout << kq::satellite_alexander_matrix(spec).to_json() << "\n";
    } else if (a.emit == "delta") {
        kq::LaurentPoly d = kq::delta_poly(kq::satellite_alexander_matrix(spec), 1);
        if (a.json) {
            ordered_json j;
            j["delta1"] = d.str();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << d.str() << "\n";
        }
    }
    return 0;
}

// alexander: delta polynomials, module factors, colorability verdicts
struct AlexanderArgs {
    std::string diagram;
    int delta_n = 0;
    bool factors = false;
    bool colorability = false;
    bool target = false;
    bool json = false;
};

int run_alexander(const AlexanderArgs& a) {
    kq::Diagram d = load_diagram(a.diagram);
    kq::QPresentation p;
    if (d.kind == kq::DiagramKind::classical)
        p = kq::present_knot(d);
    else if (d.kind == kq::DiagramKind::solid_torus)
        p = kq::close_in_sphere(kq::present_solid_torus(d));
    else
        throw kq::WrongKind(
            "alexander invariants are computed in S^3; lens diagrams are not supported");
    kq::LMatrix m = kq::linearize(p);

    bool any = a.delta_n > 0 || a.factors || a.colorability || a.target;
    int delta_n = a.delta_n > 0 ? a.delta_n : 1;

    ordered_json j;
    std::ostringstream text;
    if (a.delta_n > 0 || !any) {
        kq::LaurentPoly dn = kq::delta_poly(m, delta_n);
        j["delta"] = ordered_json{{"n", delta_n}, {"poly", dn.str()}};
        text << dn.str() << "\n";
    }
    if (a.factors) {
        ordered_json arr = ordered_json::array();
        for (const auto& [poly, exact] : kq::module_factors(m)) {
            arr.push_back(ordered_json{{"poly", poly.str()}, {"exact", exact}});
            text << "factor: " << poly.str() << (exact ? "" : " (division not exact)") << "\n";
        }
        j["factors"] = std::move(arr);
    }
    if (a.colorability) {
        kq::AffineColorability c = kq::affine_colorability(m);
        j["colorability"] = c.colorable ? "colorable" : "not_colorable";
        if (c.delta1_zero)
            j["warning"] = "delta1 = 0";
        text << (c.colorable ? "colorable" : "not_colorable") << "\n";
        if (c.delta1_zero)
            text << "warning: delta1 = 0\n";
    }
    if (a.target) {
        kq::ColoringTarget t = kq::coloring_target(m);
        j["target"] = ordered_json{{"delta1", t.delta1.str()},
                                   {"j", t.j},
                                   {"multiplier", t.multiplier.str()}};
        text << "target: Aff(Lambda/(" << t.delta1.str() << "), t)\n"
             << "j: " << t.j << "\n"
             << "multiplier: " << t.multiplier.str() << "\n";
    }
    if (a.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

// color: coloring counts by an affine quandle or an explicit table
struct ColorArgs {
    std::string diagram;
    std::string affine;
    std::string table;
};

int run_color(const ColorArgs& a) {
    kq::Diagram d = load_diagram(a.diagram);
    ordered_json j;
    std::optional<kq::Coloring> sample;
    if (!a.affine.empty()) {
        int n = 0;
        long long m = 0;
        char extra = 0;
        if (std::sscanf(a.affine.c_str(), "%d,%lld%c", &n, &m, &extra) != 2)
            throw kq::ParseError("--affine expects n,m");
        kq::AffineColoringCount c = kq::affine_colorings(d, n, m);
        j["count"] = c.count;
        sample = c.sample;
    } else {
        kq::FiniteQuandle q = kq::FiniteQuandle::from_json(slurp(a.table));
        j["count"] = count_colorings(d, q).count;
        sample = kq::find_nontrivial_coloring(d, q);
    }
    j["nontrivial"] = sample.has_value();
    if (sample) {
        ordered_json s;
        for (const auto& [arc, color] : *sample)
            s[std::to_string(arc)] = color;
        j["sample"] = std::move(s);
    } else {
        j["sample"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

// finiteq: axioms and structure report for a finite quandle table
struct FiniteqArgs {
    std::string table;
    bool report = false;
    bool json = false;
};

int run_finiteq(const FiniteqArgs& a) {
    kq::FiniteQuandle q = kq::FiniteQuandle::from_json(slurp(a.table));
    if (!a.report) {
        std::cout << "axioms: ok\n";
        return 0;
    }
    kq::InnDis groups = kq::inn_dis(q);
    auto orbit_list = groups.dis.orbits();
    bool connected = orbit_list.size() == 1;
    bool abelian = groups.dis.is_abelian() && groups.dis.is_semiregular();

    if (a.json) {
        ordered_json j;
        j["size"] = q.size();
        j["axioms"] = "ok";
        j["inn_order"] = groups.inn.order();
        j["dis_order"] = groups.dis.order();
        j["orbits"] = orbit_list;
        j["connected"] = connected;
        j["abelian"] = abelian;
        if (connected) {
            kq::Congruence g = kq::gamma_quotient(q);
            j["gamma_quotient"] = ordered_json{{"size", g.quotient.size()},
                                               {"table", g.quotient.table()},
                                               {"class_of", g.class_of}};
        } else {
            j["gamma_quotient"] = nullptr;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "size: " << q.size() << "\n";
    std::cout << "axioms: ok\n";
    std::cout << "inn_order: " << groups.inn.order() << "\n";
    std::cout << "dis_order: " << groups.dis.order() << "\n";
    std::cout << "orbits:";
    for (const auto& orbit : orbit_list) {
        std::cout << " {";
        for (size_t i = 0; i < orbit.size(); ++i)
            std::cout << (i ? "," : "") << orbit[i];
        std::cout << "}";
    }
    std::cout << "\n";
    std::cout << "connected: " << (connected ? "true" : "false") << "\n";
    std::cout << "abelian: " << (abelian ? "true" : "false") << "\n";
    if (connected) {
        kq::Congruence g = kq::gamma_quotient(q);
        std::cout << "gamma_quotient_size: " << g.quotient.size() << "\n";
        std::cout << "gamma_quotient_table:";
        for (const auto& row : g.quotient.table()) {
            std::cout << " [";
            for (size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "," : "") << row[i];
            std::cout << "]";
        }
        std::cout << "\n";
    } else {
        std::cout << "gamma_quotient: skipped (quandle not connected)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quandle presentations and Alexander invariants of knot diagrams"};
    app.require_subcommand(1);

    PresentArgs present_args;
    auto* present = app.add_subcommand("present", "print the quandle presentation of a diagram");
    present->add_option("--diagram", present_args.diagram, "diagram JSON file")->required();
    present->add_flag("--close", present_args.close,
                      "close the solid-torus diagram in the sphere first");
    present->add_flag("--wirtinger", present_args.wirtinger,
                      "print the Wirtinger group presentation instead");
    present->add_flag("--json", present_args.json, "JSON output");

    SatelliteArgs satellite_args;
    auto* satellite = app.add_subcommand("satellite", "satellite knot from pattern and companion");
    satellite->add_option("--pattern", satellite_args.pattern, "solid-torus diagram JSON")
        ->required();
    satellite->add_option("--companion", satellite_args.companion, "classical diagram JSON")
        ->required();
    satellite->add_option("--meridian-arc", satellite_args.meridian_arc,
                          "companion arc used as the meridian (default: arc 1)");
    satellite->add_flag("--preferred-framing", satellite_args.preferred_framing,
                        "use the null-homologous longitude");
    satellite->add_option("--emit", satellite_args.emit, "what to print")
        ->check(CLI::IsMember({"presentation", "matrix", "delta"}));
    satellite->add_flag("--json", satellite_args.json, "JSON output");

    AlexanderArgs alexander_args;
    auto* alexander = app.add_subcommand("alexander", "Alexander polynomials of a knot diagram");
    alexander->add_option("--diagram", alexander_args.diagram, "diagram JSON file")->required();
    alexander->add_option("--delta", alexander_args.delta_n, "print the n-th Alexander polynomial")
        ->check(CLI::PositiveNumber);
    alexander->add_flag("--factors", alexander_args.factors, "print the module factor list");
    alexander->add_flag("--colorability", alexander_args.colorability,
                        "print the affine colorability verdict");
    alexander->add_flag("--target", alexander_args.target, "print the affine coloring target");
    alexander->add_flag("--json", alexander_args.json, "JSON output");

    ColorArgs color_args;
    auto* color = app.add_subcommand("color", "count quandle colorings of a diagram");
    color->add_option("--diagram", color_args.diagram, "diagram JSON file")->required();
    auto* affine_opt = color->add_option("--affine", color_args.affine,
                                         "affine quandle Aff(Z_n, m) given as n,m");
    auto* table_opt =
        color->add_option("--table", color_args.table, "finite quandle table JSON file");
    affine_opt->excludes(table_opt);
    bool color_json = false; // output is a JSON object either way
    color->add_flag("--json", color_json, "JSON output (the default for this subcommand)");

    FiniteqArgs finiteq_args;
    auto* finiteq = app.add_subcommand("finiteq", "finite quandle structure report");
    finiteq->add_option("--table", finiteq_args.table, "finite quandle table JSON file")
        ->required();
    finiteq->add_flag("--report", finiteq_args.report,
                      "print Inn/Dis orders, orbits, connectivity, abelianness, gamma quotient");
    finiteq->add_flag("--json", finiteq_args.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*present)
            return run_present(present_args);
        if (*satellite)
            return run_satellite(satellite_args);
        if (*alexander)
            return run_alexander(alexander_args);
        if (*color) {
            if (color_args.affine.empty() && color_args.table.empty()) {
                std::cerr << "color: exactly one of --affine or --table is required\n";
                return 2;
            }
            return run_color(color_args);
        }
        if (*finiteq)
            return run_finiteq(finiteq_args);
    } catch (const kq::Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
