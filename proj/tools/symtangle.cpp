// symtangle: generate permutation-harmonic bases, analyze states, and verify
// the reference value sets.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "symtangle/harmonics.hpp"
#include "symtangle/measures.hpp"
#include "symtangle/serialize.hpp"
#include "symtangle/tables.hpp"

namespace {

using namespace symtangle;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int max_n() {
    const char *env = std::getenv("SYMTANGLE_MAX_N");
    if (env == nullptr || *env == '\0') {
        return 6;
    }
    try {
        const int v = std::stoi(env);
        if (v < 2 || v > kMaxQubits) {
            throw UsageError("SYMTANGLE_MAX_N must be in 2.." + std::to_string(kMaxQubits));
        }
        return v;
    } catch (const std::logic_error &) {
        throw UsageError(std::string("SYMTANGLE_MAX_N is not an integer: ") + env);
    }
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw UsageError("cannot write " + out_path);
    }
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

struct GenerateArgs {
    int n = 0;
    int tableau = 0;
    bool symmetric = false;
    std::string format = "json";
    std::string out;
};

int run_generate(const GenerateArgs &a) {
    if (a.n < 2 || a.n > max_n()) {
        throw UsageError("--n must be in 2.." + std::to_string(max_n()));
    }
    std::vector<LabeledState> states;
    if (a.symmetric) {
        states = symmetric_basis(a.n);
        if (a.tableau != 0) {
            std::erase_if(states, [&](const LabeledState &s) { return s.lambda != a.tableau; });
        }
    } else {
        states = a.tableau == 0 ? harmonic_basis(a.n) : tableau_basis(a.n, a.tableau);
    }
    emit(a.format == "tsv" ? listing_to_tsv(states) : dump(listing_to_json(states)), a.out);
    return kExitOk;
}

struct AnalyzeArgs {
    std::string name;
    std::string state_file;
    bool table_row = false;
    std::string format = "json";
    std::string out;
};

StateSource load_state(const AnalyzeArgs &a, std::string &id) {
    if (!a.name.empty()) {
        id = a.name;
        const LabeledState s = named_state(a.name);
        return StateSource{s.state, s.state.to_float()};
    }
    std::ifstream in(a.state_file, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + a.state_file);
    }
    id = a.state_file;
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception &e) {
        throw UsageError("cannot parse " + a.state_file + ": " + e.what());
    }
    return state_from_json(j);
}

int run_analyze(const AnalyzeArgs &a) {
    if (a.name.empty() == a.state_file.empty()) {
        throw UsageError("give exactly one of --name or --state");
    }
    std::string id;
    StateSource src;
    try {
        src = load_state(a, id);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    } catch (const std::domain_error &e) {
        throw UsageError(e.what());
    }
    const int n = src.approx.n();
    if (n < 2 || n > max_n()) {
        throw UsageError("state must have 2.." + std::to_string(max_n()) + " qubits");
    }
    const EntanglementReport report = analyze(src.input(), id);
    if (a.table_row || a.format == "tsv") {
        emit(report_to_table_tsv(report), a.out);
    } else {
        emit(dump(report_to_json(report)), a.out);
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string tables;
    double tolerance = 1e-9;
    bool strict = false;
    std::string inject_fault;
    std::string format = "tsv";
    std::string out;
};

int run_verify(const VerifyArgs &a) {
    VerifyOptions opt;
    if (!a.tables.empty()) {
        opt.sets = split_list(a.tables);
    }
    opt.tolerance = a.tolerance;
    opt.strict = a.strict;
    if (!a.inject_fault.empty()) {
        opt.inject_fault = a.inject_fault;
    }
    VerifyReport report;
    try {
        report = verify_tables(opt);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    emit(a.format == "json" ? dump(report.json()) : report.text(), a.out);
    return report.exit_code() == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Permutation-harmonic bases and entanglement measures for identical qubits"};
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"json", "tsv"});

    GenerateArgs gen;
    auto *g = app.add_subcommand("generate", "List the basis generated from Young tableaux");
    g->add_option("--n", gen.n, "Number of qubits")->required();
    g->add_option("--tableau", gen.tableau, "Restrict to one standard tableau (1-based)")->check(CLI::PositiveNumber);
    g->add_flag("--symmetric", gen.symmetric, "List the T+- images instead of the tableau images");
    g->add_option("--format", gen.format, "Output format")->check(formats);
    g->add_option("--out", gen.out, "Write to this file instead of stdout");

    AnalyzeArgs an;
    auto *z = app.add_subcommand("analyze", "Entanglement report for one state");
    z->add_option("--name", an.name, "Registry name, e.g. W3+ or R");
    z->add_option("--state", an.state_file, "State JSON file");
    z->add_flag("--table-row", an.table_row, "Emit table-shaped TSV rows");
    z->add_option("--format", an.format, "Output format")->check(formats);
    z->add_option("--out", an.out, "Write to this file instead of stdout");

    VerifyArgs ver;
    auto *v = app.add_subcommand("verify", "Recompute the reference sets I..V and compare");
    v->add_option("--tables", ver.tables, "Comma-separated subset of I,II,III,IV,V");
    v->add_option("--tolerance", ver.tolerance, "Tolerance for numeric cells")->check(CLI::PositiveNumber);
    v->add_flag("--strict", ver.strict, "Count erratum cells as failures");
    v->add_option("--inject-fault", ver.inject_fault, "Negate the computed value of one cell (negative control)");
    v->add_option("--format", ver.format, "Output format")->check(formats);
    v->add_option("--out", ver.out, "Write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*g) {
            return run_generate(gen);
        }
        if (*z) {
            return run_analyze(an);
        }
        return run_verify(ver);
    } catch (const UsageError &e) {
        std::cerr << "symtangle: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "symtangle: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "symtangle: " << e.what() << '\n';
        return kExitUsage;
    }
}
