// Command-line front end: icanonical transition tables, tensor-power
// decomposition tables, and the named verification suites.

#include "CLI11.hpp"
#include "json.hpp"

#include "dqs/suites.hpp"
#include "dqs/vmodule.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

using dqs::Laurent;
using nlohmann::json;

json laurent_json(const Laurent& c) {
    json o = json::object();
    for (const auto& [e, a] : c.coeffs()) o[std::to_string(e)] = a.str();
    return o;
}

std::string laurent_text(const Laurent& c) { return c.is_zero() ? "0" : c.to_string(); }

// (l+1) x (l+1) transition matrix: column n holds the coordinates of the
// n-th icanonical element on the standard basis (rows).
std::vector<std::vector<Laurent>> icanon_matrix(int l) {
    std::vector<std::vector<Laurent>> m(l + 1, std::vector<Laurent>(l + 1));
    for (int n = 0; n <= l; ++n) {
        dqs::VlElt b = dqs::icanonical(l, n);
        for (int r = 0; r <= l; ++r) m[r][n] = b.coords[r];
    }
    return m;
}

void emit_matrix(const std::vector<std::vector<Laurent>>& m, const std::string& format,
                 const char* kind, int l, int n_extra) {
    if (format == "json") {
        json rows = json::array();
        for (const auto& row : m) {
            json r = json::array();
            for (const auto& c : row) r.push_back(laurent_json(c));
            rows.push_back(r);
        }
        json out = {{"kind", kind}, {"l", l}, {"matrix", rows}};
        if (n_extra >= 0) out["n"] = n_extra;
        std::cout << out.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << "\\begin{array}{" << std::string(m.empty() ? 0 : m[0].size(), 'c')
                  << "}\n";
        for (size_t r = 0; r < m.size(); ++r) {
            for (size_t c = 0; c < m[r].size(); ++c)
                std::cout << (c ? " & " : "") << m[r][c].to_latex();
            std::cout << (r + 1 < m.size() ? " \\\\" : "") << "\n";
        }
        std::cout << "\\end{array}\n";
    } else {
        for (const auto& row : m) {
            for (size_t c = 0; c < row.size(); ++c)
                std::cout << (c ? "  " : "") << laurent_text(row[c]);
            std::cout << "\n";
        }
    }
}

int cmd_icanon(int l, const std::string& format) {
    emit_matrix(icanon_matrix(l), format, "icanonical-transition", l, -1);
    return 0;
}

int cmd_decompose(int l, int n, const std::string& format) {
    // graded multiplicities of the m-th summand in the n-th tensor power
    std::vector<Laurent> mult = dqs::monomial_expand(n, l);
    if (format == "json") {
        json arr = json::array();
        for (const auto& c : mult) arr.push_back(laurent_json(c));
        json out = {{"kind", "tensor-power-decomposition"},
                    {"l", l},
                    {"n", n},
                    {"multiplicities", arr}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << "\\begin{array}{cc}\n";
        for (size_t m = 0; m < mult.size(); ++m)
            std::cout << m << " & " << mult[m].to_latex()
                      << (m + 1 < mult.size() ? " \\\\" : "") << "\n";
        std::cout << "\\end{array}\n";
    } else {
        for (size_t m = 0; m < mult.size(); ++m)
            std::cout << m << ": " << laurent_text(mult[m]) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int l, unsigned long seed,
               const std::string& format) {
    dqs::Report rep = dqs::run_suite(suite, l, seed);
    if (format == "json") {
        json checks = json::array();
        for (const auto& c : rep.checks) {
            json jc = {{"name", c.name}, {"paper_ref", c.paper_ref}, {"status", c.status}};
            if (c.status == "fail") jc["witness"] = c.witness;
            checks.push_back(jc);
        }
        json out = {{"suite", rep.suite},
                    {"l", rep.l},
                    {"checks", checks},
                    {"elapsed_ms", rep.elapsed_ms}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << "\\begin{array}{ll}\n";
        for (size_t i = 0; i < rep.checks.size(); ++i)
            std::cout << "\\texttt{" << rep.checks[i].name << "} & \\text{"
                      << rep.checks[i].status << "}"
                      << (i + 1 < rep.checks.size() ? " \\\\" : "") << "\n";
        std::cout << "\\end{array}\n";
    } else {
        std::cout << "suite " << rep.suite << " at l=" << rep.l << " (" << rep.elapsed_ms
                  << " ms)\n";
        for (const auto& c : rep.checks) {
            std::cout << "  " << c.name << ": " << c.status;
            if (c.status == "fail") std::cout << "  [" << c.witness << "]";
            if (c.status == "skipped") std::cout << "  (" << c.paper_ref << ")";
            std::cout << "\n";
        }
        std::cout << (rep.all_pass() ? "all checks passed" : "FAILURES present") << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tables and verification for the level-l module and its "
                 "bimodule realization"};
    app.require_subcommand(1);

    int l = 2, n = 0;
    unsigned long seed = 0;
    std::string format = "text", suite = "all";
    auto add_common = [&](CLI::App* sub, bool with_n, bool with_suite) {
        sub->add_option("--l", l, "level parameter l");
        if (with_n) sub->add_option("--n", n, "tensor power / index n");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "latex", "text"}));
        sub->add_option("--seed", seed, "seed for randomized property checks");
        if (with_suite)
            sub->add_option("--suite", suite, "verification suite")
                ->check(CLI::IsMember(dqs::suite_names()));
    };

    CLI::App* icanon = app.add_subcommand(
        "icanon", "transition matrix from the standard to the icanonical basis");
    add_common(icanon, false, false);
    CLI::App* decompose = app.add_subcommand(
        "decompose", "graded multiplicities in the n-th tensor power");
    add_common(decompose, true, false);
    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    add_common(verify, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (icanon->parsed()) {
            if (l < 0) {
                std::cerr << "icanon: l must be >= 0\n";
                return 2;
            }
            return cmd_icanon(l, format);
        }
        if (decompose->parsed()) {
            if (l < 0 || n < 0) {
                std::cerr << "decompose: l and n must be >= 0\n";
                return 2;
            }
            return cmd_decompose(l, n, format);
        }
        return cmd_verify(suite, l, seed, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
