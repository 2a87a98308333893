// Command line front end: exact invariants of rank-2 bundles on Z_k.
//
// Exit codes: 0 success, 2 usage error, 3 ill-posed bundle data,
// 4 failed stabilization, 5 oracle mismatch.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zkinv/endo.hpp"
#include "zkinv/errors.hpp"
#include "zkinv/invariants.hpp"
#include "zkinv/tables.hpp"

namespace {

using json = nlohmann::ordered_json;
using zkinv::InvariantRecord;

struct SpecArgs {
    int k = 1;
    int j = 0;
    std::string p = "0";
    std::string format = "text";
    bool oracle = false;
};

void add_spec_options(CLI::App* cmd, SpecArgs& args, bool with_oracle) {
    cmd->add_option("-k", args.k, "Degree of the base line bundle O(-k)")->required();
    cmd->add_option("-j", args.j, "Splitting type")->required();
    cmd->add_option("-p", args.p, "Extension polynomial in z, u")->capture_default_str();
    cmd->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    if (with_oracle)
        cmd->add_flag("--oracle", args.oracle,
                      "Cross-check height and h1_end against the truncated cocycle count");
}

zkinv::BundleSpec to_spec(const SpecArgs& args) {
    return {args.k, args.j, zkinv::parse_poly(args.p)};
}

json opt_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json record_json(const InvariantRecord& rec, bool with_ms) {
    json o;
    o["k"] = rec.k;
    o["j"] = rec.j;
    o["p"] = rec.p_raw;
    o["p_normalized"] = rec.p_normalized;
    o["width"] = rec.width;
    o["height"] = rec.height;
    o["chi_loc"] = rec.chi_loc;
    o["h1_end"] = opt_json(rec.h1_end);
    o["delta"] = opt_json(rec.delta);
    o["h1_minus_delta"] = opt_json(rec.h1_minus_delta);
    o["conjecture_match"] = rec.conjecture_match ? json(*rec.conjecture_match) : json(nullptr);
    if (with_ms) {
        json ms;
        for (const auto& [name, t] : rec.ms) ms[name] = t;
        o["ms"] = ms;
    }
    return o;
}

constexpr const char* kCsvHeader = "k,j,p,width,height,chi_loc,h1_end,delta,h1_minus_delta";

std::string csv_field(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

std::string record_csv(const InvariantRecord& rec) {
    std::string line = std::to_string(rec.k) + "," + std::to_string(rec.j) + "," + rec.p_raw;
    line += "," + std::to_string(rec.width) + "," + std::to_string(rec.height) + "," +
            std::to_string(rec.chi_loc);
    line += "," + csv_field(rec.h1_end) + "," + csv_field(rec.delta) + "," +
            csv_field(rec.h1_minus_delta);
    return line;
}

std::string text_cell(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

void print_report_text(const InvariantRecord& rec) {
    std::cout << "bundle (k=" << rec.k << ", j=" << rec.j << ", p=" << rec.p_raw << ")\n";
    if (rec.p_normalized != rec.p_raw)
        std::cout << "  p normalized   = " << rec.p_normalized << "\n";
    std::cout << "  width          = " << rec.width << "\n";
    std::cout << "  height         = " << rec.height << "\n";
    std::cout << "  chi_loc        = " << rec.chi_loc << "\n";
    std::cout << "  h1_end         = " << text_cell(rec.h1_end) << "\n";
    std::cout << "  delta          = " << text_cell(rec.delta) << "\n";
    std::cout << "  h1 - delta     = " << text_cell(rec.h1_minus_delta) << "\n";
    if (rec.conjecture_match)
        std::cout << "  k*(h1-delta-j) + 2j == 2k*chi_loc : "
                  << (*rec.conjecture_match ? "holds" : "fails") << "\n";
    std::cout << "timings (ms)\n";
    for (const auto& [name, t] : rec.ms) {
        std::printf("  %-8s = %.1f\n", name.c_str(), t);
    }
}

void emit_record(const InvariantRecord& rec, const std::string& format,
                 const std::optional<int>& single) {
    if (format == "json") {
        std::cout << record_json(rec, true).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << kCsvHeader << "\n" << record_csv(rec) << "\n";
    } else if (single) {
        std::cout << *single << "\n";
    } else {
        print_report_text(rec);
    }
}

void emit_table(const std::vector<InvariantRecord>& recs, const std::string& format) {
    if (format == "json") {
        json rows = json::array();
        for (const auto& rec : recs) rows.push_back(record_json(rec, false));
        std::cout << rows.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << kCsvHeader << "\n";
        for (const auto& rec : recs) std::cout << record_csv(rec) << "\n";
        return;
    }
    std::printf("%-3s %-3s %-22s %6s %7s %8s %7s %6s %9s\n", "k", "j", "p", "width", "height",
                "chi_loc", "h1_end", "delta", "h1-delta");
    for (const auto& rec : recs) {
        std::printf("%-3d %-3d %-22s %6d %7d %8d %7s %6s %9s\n", rec.k, rec.j,
                    rec.p_raw.c_str(), rec.width, rec.height, rec.chi_loc,
                    text_cell(rec.h1_end).c_str(), text_cell(rec.delta).c_str(),
                    text_cell(rec.h1_minus_delta).c_str());
    }
}

int run(const std::string& cmd, const SpecArgs& args, int n, const std::string& suite) {
    if (cmd == "h0end") {
        zkinv::BundleSpec spec = to_spec(args);
        zkinv::validate(spec);
        long value = zkinv::h0_end(spec, n);
        if (args.format == "json") {
            json o;
            o["k"] = spec.k;
            o["j"] = spec.j;
            o["p"] = spec.p.str();
            o["p_normalized"] = zkinv::normalize_p(spec).str();
            o["n"] = n;
            o["h0_end"] = value;
            std::cout << o.dump(2) << "\n";
        } else if (args.format == "csv") {
            std::cout << "k,j,p,n,h0_end\n"
                      << spec.k << "," << spec.j << "," << spec.p.str() << "," << n << ","
                      << value << "\n";
        } else {
            std::cout << value << "\n";
        }
        return 0;
    }

    if (cmd == "table") {
        zkinv::ReportOptions opts;
        std::vector<InvariantRecord> recs;
        for (const auto& row : zkinv::table_suite(suite)) {
            zkinv::BundleSpec spec{row.k, row.j, zkinv::parse_poly(row.p)};
            recs.push_back(zkinv::compute_record(spec, opts));
        }
        emit_table(recs, args.format);
        return 0;
    }

    zkinv::ReportOptions opts;
    opts.with_h1 = cmd == "h1end" || cmd == "report";
    opts.with_delta = cmd == "delta" || cmd == "report";
    opts.oracle = args.oracle;
    InvariantRecord rec = compute_record(to_spec(args), opts);

    std::optional<int> single;
    if (cmd == "width") single = rec.width;
    if (cmd == "height") single = rec.height;
    if (cmd == "chiloc") single = rec.chi_loc;
    if (cmd == "h1end") single = rec.h1_end;
    if (cmd == "delta") single = rec.delta;
    emit_record(rec, args.format, single);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of rank-2 bundles with c1 = 0 on Z_k = Tot(O_P1(-k))"};
    app.set_version_flag("--version", "1.0.0");
    app.require_subcommand(1);

    SpecArgs args;
    int n = 0;
    std::string suite = "all";

    struct SubSpec {
        const char* name;
        const char* help;
        bool oracle;
    };
    const std::vector<SubSpec> subs = {
        {"width", "Width of the bundle (cokernel of the double dual evaluation)", false},
        {"height", "Height of the bundle (obstructed cocycle classes)", true},
        {"chiloc", "Local holomorphic Euler characteristic width + height", true},
        {"h1end", "h^1 of the endomorphism bundle", true},
        {"delta", "Stabilized h^0 deficit of the endomorphism bundle", false},
        {"report", "All invariants of one bundle, with timings", true},
    };
    for (const auto& sub : subs) {
        CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
        add_spec_options(cmd, args, sub.oracle);
    }

    CLI::App* h0cmd = app.add_subcommand("h0end", "h^0 of End on the n-th neighborhood");
    add_spec_options(h0cmd, args, false);
    h0cmd->add_option("--n", n, "Neighborhood order (u-degree cutoff)")
        ->required()
        ->check(CLI::NonNegativeNumber);

    CLI::App* tablecmd = app.add_subcommand("table", "Evaluate the built-in bundle suites");
    tablecmd->add_option("--suite", suite, "Which suite")
        ->check(CLI::IsMember({"instanton", "noninstanton", "all"}))
        ->capture_default_str();
    tablecmd->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return run(cmd, args, n, suite);
    } catch (const zkinv::OracleMismatchError& e) {
        std::cerr << "oracle mismatch: " << e.what() << "\n";
        return 5;
    } catch (const zkinv::NoStabilizationError& e) {
        std::cerr << "no stabilization: " << e.what() << "\n";
        return 4;
    } catch (const zkinv::ParseError& e) {
        std::cerr << "bad polynomial: " << e.what() << "\n";
        return 3;
    } catch (const zkinv::InvalidKError& e) {
        std::cerr << "bad k: " << e.what() << "\n";
        return 3;
    } catch (const zkinv::InvalidJError& e) {
        std::cerr << "bad j: " << e.what() << "\n";
        return 3;
    } catch (const zkinv::NonzeroPForJZeroError& e) {
        std::cerr << "bad p: " << e.what() << "\n";
        return 3;
    } catch (const zkinv::IllPosedError& e) {
        std::cerr << "ill-posed bundle: " << e.what() << "\n";
        return 3;
    } catch (const zkinv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
