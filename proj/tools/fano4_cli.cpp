#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fano4/chow.hpp"
#include "fano4/errors.hpp"
#include "fano4/families.hpp"
#include "fano4/invariants.hpp"
#include "fano4/surfaces.hpp"
#include "fano4/tables.hpp"
#include "fano4/threefolds.hpp"
#include "fano4/tower.hpp"

namespace {

using fano4::Rat;
using nlohmann::json;

json rat_json(const Rat& x) {
    if (fano4::is_integral(x)) return fano4::as_integer(x);
    return fano4::to_string(x);
}

json record_json(const fano4::FourfoldRecord& rec) {
    return json{{"rho", rec.rho},
                {"k4", rat_json(rec.k4)},
                {"k2c2", rat_json(rec.k2c2)},
                {"chi_mk", rat_json(rec.chi_mk)},
                {"h11", rec.h11},
                {"h22", rec.h22},
                {"h13", rec.h13},
                {"b3", rec.b3},
                {"chi_t", rat_json(rec.chi_t)}};
}

json surface_json(const fano4::SurfaceData& s) {
    return json{{"ks2", s.ks2},   {"ks_dot_kw", s.ks_dot_kw}, {"kw2", s.kw2},
                {"c2n", s.c2n},   {"chios", s.chios},         {"h11s", s.h11s},
                {"h20s", s.h20s}, {"b1s", s.b1s}};
}

std::string record_text(const fano4::FourfoldRecord& rec, const std::string& indent = "  ") {
    std::ostringstream out;
    out << indent << "rho     = " << rec.rho << "\n"
        << indent << "K^4     = " << fano4::to_string(rec.k4) << "\n"
        << indent << "K^2.c2  = " << fano4::to_string(rec.k2c2) << "\n"
        << indent << "chi(-K) = " << fano4::to_string(rec.chi_mk) << "\n"
        << indent << "h11     = " << rec.h11 << "\n"
        << indent << "h22     = " << rec.h22 << "\n"
        << indent << "h13     = " << rec.h13 << "\n"
        << indent << "b3      = " << rec.b3 << "\n"
        << indent << "chi(T)  = " << fano4::to_string(rec.chi_t) << "\n";
    return out.str();
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

int run_tables(bool check, const std::string& format) {
    if (check) {
        const auto mismatches = fano4::check_tables(fano4::expected_tables());
        if (mismatches.empty()) {
            std::cout << "all tables match the frozen values\n";
            return 0;
        }
        for (const auto& m : mismatches)
            std::cout << "table " << m.table << ", row " << m.row << ", column " << m.column
                      << ": got " << fano4::to_string(m.got) << ", want "
                      << fano4::to_string(m.want) << "\n";
        return 1;
    }
    const auto tables = fano4::emit_all_tables();
    if (format == "json") {
        std::cout << fano4::render_json(tables) << "\n";
    } else if (format == "tsv") {
        for (const auto& t : tables) std::cout << fano4::render_tsv(t) << "\n";
    } else {
        for (const auto& t : tables) std::cout << fano4::render_markdown(t) << "\n";
    }
    return 0;
}

int run_family(const std::string& name, bool have_r, int r, const std::string& format) {
    if (lowercase(name) == "cone") fano4::cone_family();
    if (!have_r)
        throw fano4::precondition_error("family " + name + " requires --r");
    const fano4::Family f = fano4::family_from_string(name);

    fano4::FamilySpec spec;
    bool has_construction = true;
    switch (f) {
        case fano4::Family::W:
            spec = fano4::FamilySpec{f, r, fano4::fano_model_W(r + 1), {}, fano4::p4_record()};
            has_construction = false;
            break;
        case fano4::Family::A: spec = fano4::family_A(r); break;
        case fano4::Family::B: spec = fano4::family_B(r); break;
        case fano4::Family::C: spec = fano4::family_C(r); break;
        case fano4::Family::E: spec = fano4::family_E(r); break;
    }

    if (format == "json") {
        json out{{"family", fano4::to_string(spec.family)},
                 {"r", spec.r},
                 {"record", record_json(spec.record)}};
        if (has_construction) {
            out["surface"] = surface_json(spec.surface);
            out["base"] = record_json(spec.base);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "family " << fano4::to_string(spec.family) << ", r = " << spec.r << "\n"
                  << record_text(spec.record);
    }
    return 0;
}

int run_certify(const std::string& name, bool have_r, int r, const std::string& format) {
    if (lowercase(name) == "cone") fano4::cone_family();
    if (!have_r)
        throw fano4::precondition_error("certify " + name + " requires --r");
    const fano4::Family f = fano4::family_from_string(name);
    const fano4::CertificateReport report = fano4::decomposition_certificate(f, r);

    if (format == "json") {
        json coeffs = json::array();
        for (const auto& [cname, value] : report.coefficients)
            coeffs.push_back(json{{"name", cname}, {"value", rat_json(value)}});
        const json out{{"family", fano4::to_string(report.family)},
                       {"r", report.r},
                       {"identity_ok", report.identity_ok},
                       {"coefficients_nonneg", report.coefficients_nonneg},
                       {"k4_positive", report.k4_positive},
                       {"k4", rat_json(report.k4)},
                       {"coefficients", coeffs}};
        std::cout << out.dump(2) << "\n";
    } else {
        const auto yes = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "certificate for family " << fano4::to_string(report.family)
                  << ", r = " << report.r << "\n"
                  << "  identity holds exactly: " << yes(report.identity_ok) << "\n"
                  << "  coefficients >= 0:      " << yes(report.coefficients_nonneg) << "\n"
                  << "  K^4 > 0:                " << yes(report.k4_positive)
                  << " (K^4 = " << fano4::to_string(report.k4) << ")\n"
                  << "  coefficients:           ";
        bool first = true;
        for (const auto& [cname, value] : report.coefficients) {
            std::cout << (first ? "" : ", ") << cname << " = " << fano4::to_string(value);
            first = false;
        }
        std::cout << "\n"
                  << (report.all_ok() ? "certificate OK" : "certificate FAILED") << "\n";
    }
    return report.all_ok() ? 0 : 1;
}

int run_audit(int points, const std::string& format) {
    const auto entries = fano4::general_position_audit(points);
    if (format == "json") {
        json out = json::array();
        for (const auto& e : entries)
            out.push_back(json{{"curve", e.curve},
                               {"degree", e.degree},
                               {"verdict", fano4::to_string(e.verdict)}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "general-position audit for " << points << " point(s):\n";
        for (const auto& e : entries)
            std::cout << "  " << e.curve << ": degree " << e.degree << ", "
                      << fano4::to_string(e.verdict) << "\n";
    }
    return 0;
}

int run_bounds(int min_rho, const std::string& format) {
    const fano4::ScanResult scan = fano4::elementary_bound_scan(min_rho);
    if (format == "json") {
        json rows = json::array();
        for (const auto& row : scan.rows)
            rows.push_back(json{{"name", row.base.name},
                                {"kind", fano4::to_string(row.base.kind)},
                                {"minus_k3", row.base.minus_k3},
                                {"rho", row.base.rho},
                                {"r_max", row.r_max},
                                {"rho_x", row.rho_x}});
        const json out{{"rows", rows}, {"global_max_rho", scan.global_max_rho}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "bases reaching rho_X >= " << min_rho << ":\n";
        for (const auto& row : scan.rows)
            std::cout << "  " << row.base.name << " (" << fano4::to_string(row.base.kind)
                      << ", -K^3 = " << row.base.minus_k3 << ", rho = " << row.base.rho
                      << "): r_max = " << row.r_max << ", rho_X = " << row.rho_x << "\n";
        std::cout << "global maximum rho_X = " << scan.global_max_rho << "\n";
    }
    return 0;
}

int run_tower_cmd(const std::string& path, bool trace, const std::string& format) {
    std::ifstream file(path);
    if (!file) throw fano4::precondition_error("cannot read config file: " + path);
    std::ostringstream slurp;
    slurp << file.rdbuf();
    const fano4::TowerConfig cfg = fano4::parse_tower(slurp.str());
    const auto records = fano4::run_tower(cfg);

    if (format == "json") {
        json out;
        out["steps"] = cfg.steps.size();
        if (trace) {
            json list = json::array();
            for (const auto& rec : records) list.push_back(record_json(rec));
            out["trace"] = list;
        }
        out["final"] = record_json(records.back());
        std::cout << out.dump(2) << "\n";
    } else if (trace) {
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (i == 0) std::cout << "start:\n";
            else std::cout << "after step " << i << " (" << to_string(cfg.steps[i - 1].op) << "):\n";
            std::cout << record_text(records[i]);
        }
    } else {
        std::cout << "final record after " << cfg.steps.size() << " step(s):\n"
                  << record_text(records.back());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant calculator for Fano 4-folds built from P^4"};
    app.require_subcommand(1);

    // tables
    auto* tables_cmd = app.add_subcommand("tables", "emit or verify the five invariant tables");
    bool tables_check = false;
    std::string tables_format = "md";
    tables_cmd->add_flag("--check", tables_check, "verify recomputed tables against frozen values");
    tables_cmd->add_option("--format", tables_format, "output format")
        ->check(CLI::IsMember({"md", "tsv", "json"}))
        ->capture_default_str();

    // family
    auto* family_cmd = app.add_subcommand("family", "invariants of one family member");
    std::string family_name;
    int family_r = 0;
    std::string family_format = "text";
    family_cmd->add_option("name", family_name, "family tag: W, A, B, C, E, or cone")->required();
    auto* family_ropt = family_cmd->add_option("--r", family_r, "parameter r");
    family_cmd->add_option("--format", family_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "check a positivity certificate");
    std::string certify_name;
    int certify_r = 0;
    std::string certify_format = "text";
    certify_cmd->add_option("name", certify_name, "family tag: A, B, or C")->required();
    auto* certify_ropt = certify_cmd->add_option("--r", certify_r, "parameter r");
    certify_cmd->add_option("--format", certify_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "general-position audit of point configurations");
    int audit_points = 0;
    std::string audit_format = "text";
    audit_cmd->add_option("--points", audit_points, "number of blown-up points")->required();
    audit_cmd->add_option("--format", audit_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Picard-number bound scan over 3-fold bases");
    int bounds_min = 0;
    std::string bounds_format = "text";
    bounds_cmd->add_option("--min-rho", bounds_min, "keep rows with rho_X at least this")
        ->required();
    bounds_cmd->add_option("--format", bounds_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // tower
    auto* tower_cmd = app.add_subcommand("tower", "evaluate a tower config file");
    std::string tower_path;
    bool tower_trace = false;
    std::string tower_format = "text";
    tower_cmd->add_option("config", tower_path, "path to a tower config")->required();
    tower_cmd->add_flag("--trace", tower_trace, "print every intermediate record");
    tower_cmd->add_option("--format", tower_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (app.got_subcommand(tables_cmd)) return run_tables(tables_check, tables_format);
        if (app.got_subcommand(family_cmd))
            return run_family(family_name, family_ropt->count() > 0, family_r, family_format);
        if (app.got_subcommand(certify_cmd))
            return run_certify(certify_name, certify_ropt->count() > 0, certify_r,
                               certify_format);
        if (app.got_subcommand(audit_cmd)) return run_audit(audit_points, audit_format);
        if (app.got_subcommand(bounds_cmd)) return run_bounds(bounds_min, bounds_format);
        if (app.got_subcommand(tower_cmd))
            return run_tower_cmd(tower_path, tower_trace, tower_format);
    } catch (const fano4::unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
