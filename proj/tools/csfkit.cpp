// csfkit: chromatic symmetric functions in the elementary basis, the
// trinacria Y-decomposition, and machine-checked e-positivity certificates.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "csfkit/certify_y0.hpp"
#include "csfkit/certify_y1.hpp"
#include "csfkit/certify_y2.hpp"
#include "csfkit/csf.hpp"
#include "csfkit/json_io.hpp"
#include "csfkit/trinacria.hpp"

namespace {

using namespace csfkit;

std::uint64_t oracle_budget_from_env() {
    const char* raw = std::getenv("CSFKIT_ORACLE_BUDGET");
    if (!raw) return kDefaultOracleBudget;
    std::istringstream is{std::string(raw)};
    std::uint64_t value = 0;
    if (!(is >> value) || value == 0 || !is.eof())
        throw std::invalid_argument("CSFKIT_ORACLE_BUDGET must be a positive integer");
    return value;
}

std::string positivity_line(const PositivityResult& pos) {
    if (pos.positive) return "e-positive: true";
    return "e-positive: false, witness e" + pos.witness->first.to_string() + " = " +
           to_compact_string(pos.witness->second);
}

/// Expansion commands share one output shape.
int emit_esym(const std::string& command, const json& params, const ESym& x,
              const std::string& format) {
    PositivityResult pos = is_e_positive(x);
    std::ostringstream out;
    if (format == "json") {
        json doc;
        doc["command"] = command;
        for (auto it = params.begin(); it != params.end(); ++it) doc[it.key()] = it.value();
        doc["csf"] = expansion_to_json(x);
        doc["e_positive"] = pos.positive;
        doc["witness"] = witness_to_json(pos.witness);
        out << doc.dump(2) << "\n";
    } else {
        out << to_table_string(x) << "\n" << positivity_line(pos) << "\n";
    }
    std::cout << out.str();
    return 0;
}

std::string report_table(const CertificateReport& report) {
    std::ostringstream out;
    out << "certificate " << report.target << " (b = " << report.b << ")\n";
    for (const StepRecord& s : report.steps) {
        out << "  " << (s.passed() ? "ok  " : "FAIL") << "  " << s.name
            << " (checked " << s.checked << ")";
        if (!s.passed()) {
            out << " [" << s.failure_total << " failures]";
            for (const std::string& msg : s.failures) out << "\n        " << msg;
        }
        out << "\n";
    }
    out << (report.verified ? "verified: true" : "verified: false") << "\n";
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"chromatic symmetric function toolkit"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    std::int64_t n = 0;
    auto* cmd_path = app.add_subcommand("path", "e-expansion of a path");
    cmd_path->add_option("n", n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    auto* cmd_cycle = app.add_subcommand("cycle", "e-expansion of a cycle (oracle)");
    cmd_cycle->add_option("n", n, "vertex count")->required();

    std::int64_t legA = 0, legB = 0, legC = 0;
    auto* cmd_spider = app.add_subcommand("spider", "e-expansion of a three-leg spider");
    cmd_spider->add_option("a", legA)->required();
    cmd_spider->add_option("b", legB)->required();
    cmd_spider->add_option("c", legC)->required();

    std::string method = "formula";
    auto* cmd_trin = app.add_subcommand("trinacria", "e-expansion of a trinacria graph");
    cmd_trin->add_option("a", legA)->required();
    cmd_trin->add_option("b", legB)->required();
    cmd_trin->add_option("c", legC)->required();
    cmd_trin->add_option("--method", method, "formula or oracle")
        ->check(CLI::IsMember({"formula", "oracle"}))
        ->capture_default_str();

    std::string file;
    auto* cmd_graph = app.add_subcommand("graph", "e-expansion of a graph from an edge list (oracle)");
    cmd_graph->add_option("--file", file, "edge-list file")->required();

    std::int64_t b = 1;
    auto* cmd_decompose = app.add_subcommand("decompose", "Y2/Y1/Y0 decomposition of T_{(b+2)b2}");
    cmd_decompose->add_option("--b", b, "leg parameter")->required();

    std::string target;
    auto* cmd_certify = app.add_subcommand("certify", "run one e-positivity certificate");
    cmd_certify->add_option("target", target, "y0, y1 or y2")
        ->required()
        ->check(CLI::IsMember({"y0", "y1", "y2"}));
    cmd_certify->add_option("--b", b, "leg parameter")->required();

    std::int64_t bmin = 1, bmax = 5;
    auto* cmd_verify = app.add_subcommand("verify-theorem",
                                          "all certificates plus reconstruction for a range of b");
    cmd_verify->add_option("--b-min", bmin, "first b")->capture_default_str();
    cmd_verify->add_option("--b-max", bmax, "last b")->capture_default_str();

    // Let trailing global flags (e.g. `path 3 --format json`) reach the app.
    for (CLI::App* sub : {cmd_path, cmd_cycle, cmd_spider, cmd_trin, cmd_graph,
                          cmd_decompose, cmd_certify, cmd_verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const std::uint64_t budget = oracle_budget_from_env();

    if (cmd_path->parsed()) {
        json params;
        params["n"] = n;
        return emit_esym("path", params, project(csf_path(n)), format);
    }
    if (cmd_cycle->parsed()) {
        if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
        json params;
        params["n"] = n;
        return emit_esym("cycle", params, csf_oracle(Graph::cycle(static_cast<int>(n)), budget), format);
    }
    if (cmd_spider->parsed()) {
        json params;
        params["a"] = legA, params["b"] = legB, params["c"] = legC;
        return emit_esym("spider", params, csf_spider_abc(legA, legB, legC), format);
    }
    if (cmd_trin->parsed()) {
        json params;
        params["a"] = legA, params["b"] = legB, params["c"] = legC;
        params["method"] = method;
        ESym x = method == "formula"
                     ? csf_trinacria(legA, legB, legC)
                     : csf_oracle(Graph::trinacria(legA, legB, legC), budget);
        return emit_esym("trinacria", params, x, format);
    }
    if (cmd_graph->parsed()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("graph: cannot open " + file);
        Graph g = Graph::from_edge_list(in);
        json params;
        params["file"] = file;
        return emit_esym("graph", params, csf_oracle(g, budget), format);
    }
    if (cmd_decompose->parsed()) {
        YDecomposition d = decompose_trinacria(b);
        bool matches = reconstruct(d) == csf_trinacria(b + 2, b, 2);
        std::ostringstream out;
        if (format == "json") {
            json doc;
            doc["command"] = "decompose";
            doc["b"] = b;
            doc["n"] = 2 * b + 7;
            doc["Y2"] = expansion_to_json(d.Y2);
            doc["Y1"] = expansion_to_json(d.Y1);
            doc["Y0"] = expansion_to_json(d.Y0);
            doc["reconstruction_matches"] = matches;
            out << doc.dump(2) << "\n";
        } else {
            out << "X_{T_{(b+2)b2}} = Y2 e1^2 + Y1 e1 + Y0  (b = " << b << ", n = " << 2 * b + 7 << ")\n";
            out << "Y2 = " << to_table_string(d.Y2) << "\n";
            out << "Y1 = " << to_table_string(d.Y1) << "\n";
            out << "Y0 = " << to_table_string(d.Y0) << "\n";
            out << "reconstruction matches trinacria formula: " << (matches ? "true" : "false") << "\n";
        }
        std::cout << out.str();
        return matches ? 0 : 1;
    }
    if (cmd_certify->parsed()) {
        CertificateReport report;
        if (target == "y2") report = certify_Y2(b);
        if (target == "y1") report = certify_Y1(b);
        if (target == "y0") report = certify_Y0(b);
        std::cout << (format == "json" ? report_to_json(report).dump(2) + "\n" : report_table(report));
        return report.verified ? 0 : 1;
    }
    if (cmd_verify->parsed()) {
        if (bmin < 1 || bmax < bmin)
            throw std::invalid_argument("verify-theorem: need 1 <= b-min <= b-max");
        bool all_ok = true;
        json rows = json::array();
        std::ostringstream table;
        for (Part bb = bmin; bb <= bmax; ++bb) {
            CertificateReport y2 = certify_Y2(bb);
            CertificateReport y1 = certify_Y1(bb);
            CertificateReport y0 = certify_Y0(bb);
            ESym x = reconstruct(bb);
            bool recon = x == csf_trinacria(bb + 2, bb, 2);
            PositivityResult pos = is_e_positive(x);
            bool ok = y2.verified && y1.verified && y0.verified && recon && pos.positive;
            all_ok = all_ok && ok;
            if (format == "json") {
                json row;
                row["b"] = bb;
                row["y2_verified"] = y2.verified;
                row["y1_verified"] = y1.verified;
                row["y0_verified"] = y0.verified;
                row["reconstruction_matches"] = recon;
                row["e_positive"] = pos.positive;
                rows.push_back(std::move(row));
            } else {
                table << "b=" << bb << "  Y2=" << (y2.verified ? "ok" : "FAIL")
                      << "  Y1=" << (y1.verified ? "ok" : "FAIL")
                      << "  Y0=" << (y0.verified ? "ok" : "FAIL")
                      << "  reconstruction=" << (recon ? "ok" : "FAIL")
                      << "  e-positive=" << (pos.positive ? "ok" : "FAIL") << "\n";
            }
        }
        if (format == "json") {
            json doc;
            doc["command"] = "verify-theorem";
            doc["results"] = std::move(rows);
            doc["all_verified"] = all_ok;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << table.str();
            std::cout << "all verified: " << (all_ok ? "true" : "false") << "\n";
        }
        return all_ok ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const oracle_budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
