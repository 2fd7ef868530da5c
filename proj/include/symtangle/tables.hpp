#pragma once

// Reference value sets I..V and the engine that recomputes every cell and
// compares it: angular-momentum labels (I: n = 2, 3; III: n = 4), entanglement
// tests (II: n = 2, 3; IV: n = 4) and concurrences/tangles (V: n = 4).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace symtangle {

enum class CellStatus {
    Normal,
    Advisory,  // comparison semantics are not fixed; never affects the exit code
    Erratum,   // the recorded value disagrees with exact recomputation
};

struct CellResult {
    std::string id;  // set/row/column, e.g. "II/W3+/a/tr_rhoI2"
    std::string expected;
    std::string computed;
    bool match = false;
    CellStatus status = CellStatus::Normal;
    std::string note;
};

struct VerifyOptions {
    std::vector<std::string> sets{"I", "II", "III", "IV", "V"};
    double tolerance = 1e-9;
    /// Negates the computed value of this cell before comparing.
    std::optional<std::string> inject_fault;
    /// Count errata as failures.
    bool strict = false;
};

struct SetSummary {
    std::string set;
    int rows = 0;
    int cells = 0;
    int mismatches = 0;
    int errata = 0;
    int advisory = 0;
};

struct VerifyReport {
    std::vector<CellResult> cells;
    std::vector<SetSummary> sets;
    bool strict = false;

    /// Mismatched cells that count against the exit code.
    std::vector<const CellResult *> failures() const;
    int exit_code() const { return failures().empty() ? 0 : 1; }
    std::string text() const;
    nlohmann::ordered_json json() const;
};

std::vector<std::string> fixture_sets();
/// Throws std::invalid_argument for unknown sets or an unknown fault cell.
VerifyReport verify_tables(const VerifyOptions &options);

}  // namespace symtangle
