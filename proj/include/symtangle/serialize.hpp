#pragma once

// Text and JSON forms: state JSON, matrix dumps, basis listings, and
// entanglement reports.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symtangle/density.hpp"
#include "symtangle/harmonics.hpp"
#include "symtangle/measures.hpp"
#include "symtangle/qstate.hpp"

namespace symtangle {

using Json = nlohmann::ordered_json;

/// A state read from JSON: exact when every amplitude is an integer.
struct StateSource {
    std::optional<ExactState> exact;
    FloatState approx;

    PureInput input() const { return exact ? PureInput::from(*exact) : PureInput::from(approx); }
};

Json state_to_json(const ExactState &s);
Json state_to_json(const FloatState &s);
/// Throws std::invalid_argument on malformed input or the zero vector.
StateSource state_from_json(const Json &j);

/// "2|001> - |100> - |010>" in display order.
std::string ket_expansion(const ExactState &s);

/// Entries "re+imj" (exact rationals when available), display order.
std::string matrix_to_tsv(const DensityMatrix &m);
Json matrix_to_json(const DensityMatrix &m);
DensityMatrix matrix_from_tsv(int n, const std::string &text);
DensityMatrix matrix_from_json(const Json &j);

std::string format_complex(const GaussRational &z);
std::string format_complex(Complex z);
/// Inverse of format_complex; exact when both parts are rationals.
std::optional<GaussRational> parse_exact_complex(const std::string &text);
Complex parse_complex(const std::string &text);

std::string format_double(double v);
/// sqrt of a non-negative rational in lowest surd form, e.g. 5/9 -> "sqrt(5)/3".
std::string surd_text(const Rational &squared);

Json listing_to_json(const std::vector<LabeledState> &states);
std::string listing_to_tsv(const std::vector<LabeledState> &states);

Json report_to_json(const EntanglementReport &r);
/// Rows shaped like the reference tables: one row per single-qubit I for
/// n <= 3 (with concurrences), per split for n >= 4 plus a concurrence row.
std::string report_to_table_tsv(const EntanglementReport &r);

}  // namespace symtangle
