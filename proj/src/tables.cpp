#include "symtangle/tables.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "symtangle/harmonics.hpp"
#include "symtangle/measures.hpp"
#include "symtangle/serialize.hpp"

namespace symtangle {

namespace {

using Notes = std::map<std::string, std::string>;

// ---- fixture data -----------------------------------------------------------

struct SpinRow {
    const char *state;
    std::vector<std::pair<const char *, long>> partial;  // subset, twice the spin
    long twice_j;
    long twice_abs_m;
    std::vector<const char *> compat;
    std::vector<const char *> symmetric;
    Notes errata;
};

struct TestRow {
    const char *state;
    std::vector<const char *> masks;
    bool rhoT_equals_rho;
    const char *det_rhoT;
    bool rhoI_pure;
    const char *tr_rhoI2;
    std::optional<bool> rem_equals;
    std::optional<int> rem_sign;
    const char *c_jk;       // nullptr: no column
    const char *c_i_sq;     // squared; nullptr: no column
    Notes errata;
};

struct StateTotals {
    const char *state;
    const char *e_tau;
    const char *tau3;
};

struct ConcurrenceRow {
    const char *state;
    std::vector<std::pair<const char *, const char *>> pairs;    // "*" covers the rest
    std::vector<std::pair<const char *, const char *>> singles;  // squared; "*" covers the rest
    const char *tau4;
};

const std::vector<const char *> kBell{"Phi+", "Phi-", "Psi+", "Psi-"};
const std::vector<const char *> kThree{"Psi3+", "Psi3-", "W3+", "W3-", "U3+", "U3-", "V3+", "V3-"};

std::vector<SpinRow> set_one() {
    const Notes f_notes{{"s_bc", "F is a singlet in (a,b) times a qubit c state; exact s_ab = 0"},
                        {"sym", "F is antisymmetric under (ab); no exchange symmetry involves c"}};
    return {
        {"Phi+", {}, 2, 2, {}, {"ab"}, {}},
        {"Phi-", {}, 2, 2, {}, {"ab"}, {}},
        {"Psi+", {}, 2, 0, {}, {"ab"}, {}},
        {"Psi-", {}, 0, 0, {}, {"ab"}, {}},
        {"Psi3+", {{"ab", 2}}, 3, 3, {"Phi+", "Phi-"}, {"abc"}, {}},
        {"Psi3-", {{"ab", 2}}, 3, 3, {"Phi+", "Phi-"}, {"abc"}, {}},
        {"W3+", {{"ab", 2}}, 3, 1, {"Phi+", "Phi-", "Psi+"}, {"abc"}, {}},
        {"W3-", {{"ab", 2}}, 3, 1, {"Phi+", "Phi-", "Psi+"}, {"abc"}, {}},
        {"U3+", {{"ab", 2}}, 1, 1, {"Phi+", "Phi-", "Psi+", "Psi-"}, {"ab"}, {}},
        {"U3-", {{"ab", 2}}, 1, 1, {"Phi+", "Phi-", "Psi+", "Psi-"}, {"ab"}, {}},
        {"V3+", {{"ac", 2}}, 1, 1, {"Phi+", "Phi-", "Psi+", "Psi-"}, {"ac"}, {}},
        {"V3-", {{"ac", 2}}, 1, 1, {"Phi+", "Phi-", "Psi+", "Psi-"}, {"ac"}, {}},
        {"F+", {{"bc", 0}}, 1, 1, {"Psi-"}, {"bc"}, f_notes},
        {"F-", {{"bc", 0}}, 1, 1, {"Psi-"}, {"bc"}, f_notes},
    };
}

std::vector<SpinRow> set_three() {
    const char *abd_note = "the tableau symmetrizes a, b, d, so their total spin is 3/2";
    const char *acd_note = "the tableau symmetrizes a, c, d, so their total spin is 3/2";
    return {
        {"Psi4+", {{"abc", 3}}, 4, 4, {"Psi3+", "Psi3-"}, {"abcd"}, {}},
        {"Psi4-", {{"abc", 3}}, 4, 4, {"Psi3+", "Psi3-"}, {"abcd"}, {}},
        {"W4+", {{"abc", 3}}, 4, 2, {"Psi3+", "Psi3-", "W3+", "W3-"}, {"abcd"}, {}},
        {"W4-", {{"abc", 3}}, 4, 2, {"Psi3+", "Psi3-", "W3+", "W3-"}, {"abcd"}, {}},
        {"C1+", {{"abc", 3}}, 4, 0, {"W3+", "W3-"}, {"abcd"}, {}},
        {"X4+", {{"abc", 3}}, 2, 2, {"Psi3+", "Psi3-", "W3+", "W3-"}, {"abc"}, {}},
        {"X4-", {{"abc", 3}}, 2, 2, {"Psi3+", "Psi3-", "W3+", "W3-"}, {"abc"}, {}},
        {"C1-", {{"abc", 3}}, 2, 0, {"W3+", "W3-", "U3+", "U3-"}, {"abc"}, {}},
        {"Y4+", {{"abd", 1}}, 2, 2, {"U3+", "U3-"}, {"abd"}, {{"s_abd", abd_note}}},
        {"Y4-", {{"abd", 1}}, 2, 2, {"U3+", "U3-"}, {"abd"}, {{"s_abd", abd_note}}},
        {"C2-", {{"abd", 1}}, 2, 0, {"U3+", "U3-"}, {"abd"}, {{"s_abd", abd_note}}},
        {"Z4+", {{"acd", 1}}, 2, 2, {"V3+", "V3-"}, {"acd"}, {{"s_acd", acd_note}}},
        {"Z4-", {{"acd", 1}}, 2, 2, {"V3+", "V3-"}, {"acd"}, {{"s_acd", acd_note}}},
        {"C3-", {{"acd", 1}}, 2, 0, {"V3+", "V3-"}, {"acd"}, {{"s_acd", acd_note}}},
        {"C2+", {{"ab", 2}, {"cd", 2}}, 0, 0, {"U3+", "U3-"}, {"ab", "cd"}, {}},
        {"C3+", {{"ac", 2}, {"bd", 2}}, 0, 0, {"V3+", "V3-"}, {"ac", "bd"}, {}},
    };
}

std::vector<TestRow> set_two() {
    const Notes bell{{"det_rhoT", "spectrum {-1/2, 1/2, 1/2, 1/2} has determinant -1/16"}};
    const Notes f_ab{{"det_rhoI_TJ", "rho_I is (I/2) x |c><c|, invariant under transposition; determinant 0"}};
    std::vector<TestRow> rows;
    for (const char *s : kBell) {
        rows.push_back({s, {"a", "b"}, false, "-1/2", false, "1/2", std::nullopt, std::nullopt, "1", nullptr, bell});
    }
    for (const char *s : {"Psi3+", "Psi3-"}) {
        rows.push_back({s, {"a", "b", "c"}, false, "0", false, "1/2", true, 0, "0", "1", {}});
    }
    for (const char *s : {"W3+", "W3-"}) {
        rows.push_back({s, {"a", "b", "c"}, false, "0", false, "13/18", false, -1, "1/3", "5/9", {}});
    }
    for (const char *s : {"U3+", "U3-"}) {
        rows.push_back({s, {"c"}, false, "0", false, "5/9", false, -1, "1/3", "8/9", {}});
        rows.push_back({s, {"a", "b"}, false, "0", false, "13/18", false, -1, "2/3", "5/9", {}});
    }
    for (const char *s : {"V3+", "V3-"}) {
        rows.push_back({s, {"b"}, false, "0", false, "5/9", false, -1, "1/3", "8/9", {}});
        rows.push_back({s, {"a", "c"}, false, "0", false, "13/18", false, -1, "2/3", "5/9", {}});
    }
    for (const char *s : {"F+", "F-"}) {
        rows.push_back({s, {"c"}, true, "0", true, "1", false, -1, "1", "0", {}});
        rows.push_back({s, {"a", "b"}, false, "0", false, "1/2", true, -1, "0", "1", f_ab});
    }
    for (const char *s : {"Q2+", "Q2-"}) {
        rows.push_back({s, {"a", "b", "c"}, false, "0", false, "5/9", false, -1, "2/3", "8/9", {}});
    }
    return rows;
}

std::vector<StateTotals> set_two_totals() {
    return {{"Psi3+", "0", "1"}, {"Psi3-", "0", "1"}, {"W3+", "1/3", "1/3"}, {"W3-", "1/3", "1/3"},
            {"U3+", "1", "0"},   {"U3-", "1", "0"},   {"V3+", "1", "0"},     {"V3-", "1", "0"},
            {"F+", "1", "0"},    {"F-", "1", "0"},    {"Q2+", "4/3", "0"},   {"Q2-", "4/3", "0"}};
}

std::vector<TestRow> set_four() {
    const Notes w4minus{{"rhoI_TJ", "exact rho_I^{T_J} differs from rho_I for W4-; W4+ satisfies it"}};
    const std::vector<const char *> singles{"a", "b", "c", "d"};
    const std::vector<const char *> with_a{"a", "b", "c", "d", "ab", "ac", "ad"};
    std::vector<TestRow> rows;
    for (const char *s : {"Psi4+", "Psi4-", "W4+", "W4-"}) {
        Notes notes;
        if (std::string(s) == "W4-") {
            notes = w4minus;
        }
        rows.push_back({s, with_a, false, "0", false, "1/2", true, 0, nullptr, nullptr, notes});
    }
    rows.push_back({"C1+", singles, false, "0", false, "1/2", false, 0, nullptr, nullptr, {}});
    rows.push_back({"C1+", {"ab", "ac", "ad"}, false, "0", false, "1/2", false, -1, nullptr, nullptr, {}});
    for (const char *s : {"X4+", "X4-"}) {
        rows.push_back({s, singles, false, "0", false, "1/2", false, 0, nullptr, nullptr, {}});
        rows.push_back({s, {"ad", "bd", "cd", "ba", "bc"}, false, "0", false, "1/2", false, -1, nullptr, nullptr, {}});
    }
    rows.push_back({"C1-", singles, false, "0", false, "1/2", false, 0, nullptr, nullptr, {}});
    rows.push_back({"C1-", {"cd", "ba"}, false, "0", false, "1/2", false, -1, nullptr, nullptr, {}});
    rows.push_back({"C2+", {"cd", "ab"}, false, "0", false, "1/3", false, 1, nullptr, nullptr, {}});
    rows.push_back({"C2+", {"c", "d"}, false, "0", false, "1/2", false, 1, nullptr, nullptr, {}});
    rows.push_back({"C2+", {"a", "b"}, false, "0", false, "1/2", false, 0, nullptr, nullptr, {}});
    rows.push_back({"C2+", {"ad", "bd", "ac", "bc"}, false, "0", false, "7/12", false, -1, nullptr, nullptr, {}});
    return rows;
}

std::vector<ConcurrenceRow> set_five() {
    std::vector<ConcurrenceRow> rows;
    for (const char *s : {"Psi4+", "Psi4-", "W4+", "W4-"}) {
        rows.push_back({s, {{"*", "0"}}, {{"*", "1"}}, "1"});
    }
    for (const char *s : {"C1+", "X4+", "X4-", "C1-"}) {
        rows.push_back({s, {{"*", "1/3"}}, {{"*", "1"}}, "1"});
    }
    rows.push_back({"C2+", {{"cd", "0"}, {"ab", "0"}, {"*", "1/2"}}, {{"*", "1"}}, "1"});
    for (const char *s : {"E+", "E-"}) {
        rows.push_back({s, {{"*", "0"}}, {{"*", "0"}}, "0"});
    }
    for (const char *s : {"G+", "G-"}) {
        rows.push_back({s, {{"*", "1/2"}}, {{"*", "3/4"}}, "0"});
    }
    for (const char *s : {"L+", "L-"}) {
        rows.push_back({s,
                        {{"ad", "1/2"}, {"bd", "1/2"}, {"cd", "1/2"}, {"ab", "1/6"}, {"bc", "1/6"}, {"ac", "1/6"}},
                        {{"d", "3/4"}, {"*", "11/36"}},
                        "0"});
    }
    rows.push_back({"R", {{"ac", "1"}, {"bd", "1"}, {"*", "0"}}, {{"*", "1"}}, "1"});
    return rows;
}

// ---- engine -----------------------------------------------------------------

struct Cached {
    LabeledState labeled;
    PureInput input;
};

std::string sorted_join(std::vector<std::string> items) {
    std::sort(items.begin(), items.end());
    std::string out;
    for (const std::string &s : items) {
        out += (out.empty() ? "" : ",") + s;
    }
    return out.empty() ? "{}" : out;
}

std::string halfint_text(const std::optional<HalfInt> &h) { return h ? h->str() : "none"; }

class Engine {
   public:
    explicit Engine(const VerifyOptions &opt) : opt_(opt) {}

    const Cached &state(const std::string &name) {
        auto it = cache_.find(name);
        if (it == cache_.end()) {
            LabeledState ls = named_state(name);
            PureInput in = PureInput::from(ls.state);
            it = cache_.emplace(name, std::make_unique<Cached>(Cached{std::move(ls), std::move(in)})).first;
        }
        return *it->second;
    }

    void begin(const std::string &set) {
        set_ = set;
        report_.sets.push_back({set, 0, 0, 0, 0, 0});
    }
    void row() { ++report_.sets.back().rows; }

    void rational(const std::string &id, const Rational &expected, std::optional<Rational> exact, double approx,
                  const Notes &notes, const std::string &column) {
        if (faulted(id)) {
            approx = -approx;
            if (exact) {
                exact = Rational(-*exact);
            }
        }
        const bool match = exact ? *exact == expected : std::abs(approx - expected.get_d()) <= opt_.tolerance;
        add(id, expected.get_str(), exact ? exact->get_str() : format_double(approx), match, notes, column);
    }

    void numeric(const std::string &id, const Rational &expected, double approx, const Notes &notes,
                 const std::string &column) {
        rational(id, expected, std::nullopt, approx, notes, column);
    }

    void surd(const std::string &id, const Rational &expected_sq, std::optional<Rational> exact_sq,
              double approx_value, const Notes &notes, const std::string &column) {
        if (faulted(id)) {
            approx_value = -approx_value;
            if (exact_sq) {
                exact_sq = Rational(-*exact_sq);
            }
        }
        bool match = false;
        std::string computed;
        if (exact_sq) {
            match = *exact_sq == expected_sq;
            computed = sgn(*exact_sq) >= 0 ? surd_text(*exact_sq) : "-(" + exact_sq->get_str() + ")^(1/2)";
        } else {
            match = approx_value >= 0 && std::abs(approx_value * approx_value - expected_sq.get_d()) <= opt_.tolerance;
            computed = format_double(approx_value);
        }
        add(id, surd_text(expected_sq), computed, match, notes, column);
    }

    void sign(const std::string &id, int expected, int computed, const Notes &notes, const std::string &column) {
        if (faulted(id)) {
            computed = -computed;
        }
        auto text = [](int s) { return s < 0 ? std::string("<0") : (s > 0 ? ">0" : "0"); };
        add(id, text(expected), text(computed), expected == computed, notes, column);
    }

    void boolean(const std::string &id, bool expected, bool computed, const char *what, const Notes &notes,
                 const std::string &column) {
        if (faulted(id)) {
            computed = !computed;
        }
        auto text = [what](bool b) { return std::string(b ? "=" : "!=") + what; };
        add(id, text(expected), text(computed), expected == computed, notes, column);
    }

    void halfint(const std::string &id, long expected_twice, std::optional<HalfInt> computed, bool magnitude,
                 const Notes &notes, const std::string &column) {
        if (faulted(id) && computed) {
            computed = HalfInt::from_twice(-computed->twice);
        }
        if (magnitude && computed) {
            computed = HalfInt::from_twice(std::abs(computed->twice));
        }
        const HalfInt expected = HalfInt::from_twice(expected_twice);
        add(id, (magnitude && expected_twice != 0 ? "+-" : "") + expected.str(),
            (magnitude && computed && computed->twice != 0 ? "+-" : "") + halfint_text(computed),
            computed && *computed == expected, notes, column);
    }

    void set_cell(const std::string &id, const std::vector<std::string> &expected, std::vector<std::string> computed,
                  const Notes &notes, const std::string &column, bool advisory) {
        if (faulted(id)) {
            computed.clear();
        }
        const std::string e = sorted_join(expected);
        const std::string c = sorted_join(computed);
        Notes local = notes;
        if (advisory && !local.count(column)) {
            local[column] = "overlap Tr(rho_I sigma) > 1e-9 for some traced qubit; matching rule is not fixed";
        }
        add(id, e, c, e == c, local, column, advisory);
    }

    VerifyReport finish() {
        if (opt_.inject_fault && !fault_used_) {
            throw std::invalid_argument("no cell named " + *opt_.inject_fault);
        }
        report_.strict = opt_.strict;
        return std::move(report_);
    }

    const VerifyOptions &options() const { return opt_; }

   private:
    bool faulted(const std::string &id) {
        if (opt_.inject_fault && *opt_.inject_fault == id) {
            fault_used_ = true;
            return true;
        }
        return false;
    }

    void add(const std::string &id, std::string expected, std::string computed, bool match, const Notes &notes,
             const std::string &column, bool advisory = false) {
        CellResult c;
        c.id = id;
        c.expected = std::move(expected);
        c.computed = std::move(computed);
        c.match = match;
        if (advisory) {
            c.status = CellStatus::Advisory;
            if (auto it = notes.find(column); it != notes.end()) {
                c.note = it->second;
            }
        } else if (auto it = notes.find(column); it != notes.end()) {
            c.status = CellStatus::Erratum;
            c.note = it->second;
        }
        SetSummary &sum = report_.sets.back();
        ++sum.cells;
        if (!c.match) {
            switch (c.status) {
                case CellStatus::Normal:
                    ++sum.mismatches;
                    break;
                case CellStatus::Erratum:
                    ++sum.errata;
                    break;
                case CellStatus::Advisory:
                    ++sum.advisory;
                    break;
            }
        }
        report_.cells.push_back(std::move(c));
    }

    VerifyOptions opt_;
    VerifyReport report_;
    std::string set_;
    bool fault_used_ = false;
    std::map<std::string, std::unique_ptr<Cached>> cache_;
};

std::vector<Candidate> candidates(Engine &eng, const std::vector<const char *> &names) {
    std::vector<Candidate> out;
    for (const char *name : names) {
        out.push_back({name, eng.state(name).input.state});
    }
    return out;
}

void run_spin_set(Engine &eng, const std::string &set, const std::vector<SpinRow> &rows,
                  const std::vector<const char *> &smaller) {
    eng.begin(set);
    for (const SpinRow &r : rows) {
        eng.row();
        const Cached &st = eng.state(r.state);
        const int n = st.input.n();
        const std::string base = set + "/" + r.state + "/";
        for (const auto &[subset, twice] : r.partial) {
            const std::string column = std::string("s_") + subset;
            eng.halfint(base + column, twice, subset_spin(st.labeled.state, parse_mask(subset, n)), false, r.errata,
                        column);
        }
        eng.halfint(base + "J", r.twice_j, st.labeled.labels.j, false, r.errata, "J");
        // States outside every J_z eigenspace carry the m_J of the state T acted on.
        const std::optional<HalfInt> m = st.labeled.labels.m_j ? st.labeled.labels.m_j : st.labeled.source_m_j;
        eng.halfint(base + "m_J", r.twice_abs_m, m, true, r.errata, "m_J");
        if (!r.compat.empty()) {
            const Compatibility c = compatibility(st.input, candidates(eng, smaller));
            eng.set_cell(base + "compat", {r.compat.begin(), r.compat.end()}, c.matched, r.errata, "compat", true);
        }
        std::vector<std::string> groups;
        for (QubitMask g : exchange_symmetric_groups(st.labeled.state)) {
            groups.push_back(mask_label(g));
        }
        eng.set_cell(base + "sym", {r.symmetric.begin(), r.symmetric.end()}, groups, r.errata, "sym", false);
    }
}

void run_test_set(Engine &eng, const std::string &set, const std::vector<TestRow> &rows, bool spectral_det) {
    eng.begin(set);
    std::vector<std::string> seen;
    for (const TestRow &r : rows) {
        eng.row();
        const Cached &st = eng.state(r.state);
        const int n = st.input.n();
        const DensityMatrix &rho = st.input.rho;
        const std::string base = set + "/" + r.state + "/";
        if (std::find(seen.begin(), seen.end(), r.state) == seen.end()) {
            seen.emplace_back(r.state);
            eng.boolean(base + "rho2", true, purity(rho).is_pure, "rho", r.errata, "rho2");
        }
        for (const char *mask_text : r.masks) {
            const SubsystemMask mask = parse_mask(mask_text, n);
            const std::string cell = base + mask_text + "/";
            const SplitEntry e = split_entry(rho, mask);
            eng.boolean(cell + "rhoT", r.rhoT_equals_rho, e.transpose.equals_rho, "rho", r.errata, "rhoT");
            if (spectral_det) {
                eng.numeric(cell + "det_rhoT", parse_rational(r.det_rhoT), e.transpose.det, r.errata, "det_rhoT");
            } else {
                eng.rational(cell + "det_rhoT", parse_rational(r.det_rhoT), e.transpose.exact_det, e.transpose.det,
                             r.errata, "det_rhoT");
            }
            const bool reduced_pure =
                e.purity.exact_tr_rho2 ? *e.purity.exact_tr_rho2 == 1 : !e.purity.below_one;
            eng.boolean(cell + "rhoI2", r.rhoI_pure, reduced_pure, "rho_I", r.errata, "rhoI2");
            eng.rational(cell + "tr_rhoI2", parse_rational(r.tr_rhoI2), e.purity.exact_tr_rho2, e.purity.tr_rho2,
                         r.errata, "tr_rhoI2");
            if (r.rem_equals && e.remainder) {
                eng.boolean(cell + "rhoI_TJ", *r.rem_equals, e.remainder->equals, "rho_I", r.errata, "rhoI_TJ");
            }
            if (r.rem_sign && e.remainder) {
                eng.sign(cell + "det_rhoI_TJ", *r.rem_sign, e.remainder->det_sign, r.errata, "det_rhoI_TJ");
            }
            if (r.c_jk) {
                // The pair left after removing I (the only pair for two qubits).
                const SubsystemMask all = (SubsystemMask{1} << n) - 1;
                const SubsystemMask pair = n == 2 ? all : (all & ~mask);
                const int j = std::countr_zero(pair);
                const int k = 31 - std::countl_zero(pair);
                eng.numeric(cell + "C_JK", parse_rational(r.c_jk), concurrence_pair(st.input, j, k), r.errata,
                            "C_JK");
            }
            if (r.c_i_sq) {
                const SplitConcurrence c = concurrence_split(st.input, std::countr_zero(mask));
                eng.surd(cell + "C_I", parse_rational(r.c_i_sq), c.exact_squared, c.value, r.errata, "C_I");
            }
        }
    }
}

void run_totals(Engine &eng, const std::string &set, const std::vector<StateTotals> &rows) {
    for (const StateTotals &t : rows) {
        const Cached &st = eng.state(t.state);
        const std::string base = set + "/" + t.state + "/";
        eng.numeric(base + "E_tau", parse_rational(t.e_tau), e_tau(st.input), {}, "E_tau");
        eng.numeric(base + "tau3", parse_rational(t.tau3), three_tangle(st.input).value, {}, "tau3");
    }
}

const char *lookup(const std::vector<std::pair<const char *, const char *>> &table, const std::string &key) {
    const char *fallback = nullptr;
    for (const auto &[k, v] : table) {
        if (key == k) {
            return v;
        }
        if (std::string(k) == "*") {
            fallback = v;
        }
    }
    return fallback;
}

void run_concurrence_set(Engine &eng, const std::vector<ConcurrenceRow> &rows) {
    eng.begin("V");
    for (const ConcurrenceRow &r : rows) {
        eng.row();
        const Cached &st = eng.state(r.state);
        const int n = st.input.n();
        const std::string base = std::string("V/") + r.state + "/";
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const std::string pair{label_char(j), label_char(k)};
                const char *expected = lookup(r.pairs, pair);
                eng.numeric(base + "C_" + pair, parse_rational(expected), concurrence_pair(st.input, j, k), {},
                            "C_" + pair);
            }
        }
        for (int q = 0; q < n; ++q) {
            const std::string label(1, label_char(q));
            const SplitConcurrence c = concurrence_split(st.input, q);
            eng.surd(base + "C_" + label + "(rest)", parse_rational(lookup(r.singles, label)), c.exact_squared,
                     c.value, {}, "C_I");
        }
        const NTangle tau = n_tangle(st.input);
        eng.rational(base + "tau4", parse_rational(r.tau4), tau.exact, tau.value, {}, "tau4");
    }

    // The two-pair singlet state: its literal expansion is (ac)-(bd)
    // separable, while the difference of the two singlet tableau states is
    // (ad)-(bc) separable.
    eng.row();
    const Cached &r = eng.state("R");
    const Cached &diff = eng.state("C2+-C3+");
    eng.boolean("V/R/separable_ac", true, pm_entry(r.input.rho, parse_mask("ac", 4)).exact_tr_rho2 == Rational(1),
                "product", {}, "separable_ac");
    eng.boolean("V/C2+-C3+/separable_ad", true,
                pm_entry(diff.input.rho, parse_mask("ad", 4)).exact_tr_rho2 == Rational(1), "product", {},
                "separable_ad");
    eng.set_cell("V/R/equals_C2+-C3+", {"C2+-C3+"},
                 equal_up_to_sign(r.labeled.state, diff.labeled.state) ? std::vector<std::string>{"C2+-C3+"}
                                                                       : std::vector<std::string>{"differs"},
                 {{"equals", "R pairs singlets on (ac)-(bd); C2+-C3+ pairs them on (ad)-(bc)"}}, "equals", true);
}

const char *status_text(const CellResult &c) {
    if (c.match) {
        return "ok";
    }
    switch (c.status) {
        case CellStatus::Advisory:
            return "advisory";
        case CellStatus::Erratum:
            return "erratum";
        case CellStatus::Normal:
            break;
    }
    return "MISMATCH";
}

}  // namespace

std::vector<std::string> fixture_sets() { return {"I", "II", "III", "IV", "V"}; }

std::vector<const CellResult *> VerifyReport::failures() const {
    std::vector<const CellResult *> out;
    for (const CellResult &c : cells) {
        if (!c.match && (c.status == CellStatus::Normal || (strict && c.status == CellStatus::Erratum))) {
            out.push_back(&c);
        }
    }
    return out;
}

std::string VerifyReport::text() const {
    std::ostringstream out;
    out << "status\tcell\texpected\tcomputed\tnote\n";
    for (const CellResult &c : cells) {
        out << status_text(c) << '\t' << c.id << '\t' << c.expected << '\t' << c.computed << '\t' << c.note << '\n';
    }
    out << '\n';
    for (const SetSummary &s : sets) {
        out << "set " << s.set << ": " << s.rows << " rows, " << s.cells << " cells, " << s.mismatches
            << " mismatches, " << s.errata << " errata, " << s.advisory << " advisory\n";
    }
    const auto fails = failures();
    out << (fails.empty() ? "PASS" : "FAIL") << ": " << fails.size() << " failing cells"
        << (strict ? " (errata counted)" : "") << '\n';
    for (const CellResult *c : fails) {
        out << "failing cell: " << c->id << " expected " << c->expected << " computed " << c->computed << '\n';
    }
    return out.str();
}

nlohmann::ordered_json VerifyReport::json() const {
    nlohmann::ordered_json cells_json = nlohmann::ordered_json::array();
    for (const CellResult &c : cells) {
        cells_json.push_back({{"cell", c.id},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"match", c.match},
                              {"status", status_text(c)},
                              {"note", c.note}});
    }
    nlohmann::ordered_json sets_json = nlohmann::ordered_json::array();
    for (const SetSummary &s : sets) {
        sets_json.push_back({{"set", s.set},
                             {"rows", s.rows},
                             {"cells", s.cells},
                             {"mismatches", s.mismatches},
                             {"errata", s.errata},
                             {"advisory", s.advisory}});
    }
    nlohmann::ordered_json failing = nlohmann::ordered_json::array();
    for (const CellResult *c : failures()) {
        failing.push_back(c->id);
    }
    return {{"pass", failing.empty()}, {"strict", strict}, {"sets", sets_json}, {"failing", failing},
            {"cells", cells_json}};
}

VerifyReport verify_tables(const VerifyOptions &options) {
    const std::vector<std::string> known = fixture_sets();
    for (const std::string &s : options.sets) {
        if (std::find(known.begin(), known.end(), s) == known.end()) {
            throw std::invalid_argument("unknown reference set: " + s);
        }
    }
    auto wanted = [&](const char *s) {
        return std::find(options.sets.begin(), options.sets.end(), s) != options.sets.end();
    };
    Engine eng(options);
    if (wanted("I")) {
        run_spin_set(eng, "I", set_one(), kBell);
    }
    if (wanted("II")) {
        run_test_set(eng, "II", set_two(), false);
        run_totals(eng, "II", set_two_totals());
    }
    if (wanted("III")) {
        run_spin_set(eng, "III", set_three(), kThree);
    }
    if (wanted("IV")) {
        run_test_set(eng, "IV", set_four(), true);
    }
    if (wanted("V")) {
        run_concurrence_set(eng, set_five());
    }
    return eng.finish();
}

}  // namespace symtangle
