#include "symtangle/serialize.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace symtangle {

namespace {

Json integer_json(const Integer &v) {
    if (v.fits_slong_p()) {
        return Json(v.get_si());
    }
    return Json(v.get_str());
}

Json optional_rational(const std::optional<Rational> &q) {
    return q ? Json(q->get_str()) : Json(nullptr);
}

Json finite(double v) {
    if (!std::isfinite(v)) {
        throw std::logic_error("non-finite value in report");
    }
    return Json(v == 0.0 ? 0.0 : v);
}

std::string short_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v == 0.0 ? 0.0 : v);
    return buf;
}

// Amplitude value from JSON: an exact rational when possible.
struct Amp {
    std::optional<Rational> exact;
    double approx = 0.0;
};

Amp read_amp(const Json &v, const char *field) {
    if (v.is_null()) {
        return {Rational(0), 0.0};
    }
    if (v.is_number_integer()) {
        const Rational q = v.is_number_unsigned() ? Rational(std::to_string(v.get<unsigned long long>()))
                                                  : Rational(std::to_string(v.get<long long>()));
        return {q, q.get_d()};
    }
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            throw std::invalid_argument(std::string("non-finite amplitude in '") + field + "'");
        }
        return {std::nullopt, d};
    }
    if (v.is_string()) {
        const Rational q = parse_rational(v.get<std::string>());
        return {q, q.get_d()};
    }
    throw std::invalid_argument(std::string("amplitude field '") + field + "' must be a number or string");
}

std::string mask_text(QubitMask m) { return mask_label(m); }

std::string eq_text(bool equal, const char *what) { return std::string(equal ? "=" : "!=") + what; }

std::string sign_text(int s) { return s < 0 ? "<0" : (s > 0 ? ">0" : "0"); }

std::string det_text(double det, const std::optional<Rational> &exact) {
    return exact ? exact->get_str() : short_double(det);
}

bool entry_pure(const PmEntry &e) {
    return e.exact_tr_rho2 ? *e.exact_tr_rho2 == 1 : !e.below_one;
}

std::string single_text(const SplitConcurrence &c) {
    return c.exact_squared ? surd_text(*c.exact_squared) : short_double(c.value);
}

std::string pair_label(int j, int k) { return std::string{label_char(j), label_char(k)}; }

}  // namespace

Json state_to_json(const ExactState &s) {
    Json terms = Json::array();
    for (std::size_t row = 0; row < s.dim(); ++row) {
        const Ket k = ket_at_display(row, s.n());
        const GaussInt &a = s.amp(k);
        if (!a.is_zero()) {
            terms.push_back({{"ket", ket_string(k, s.n())}, {"re", integer_json(a.re)}, {"im", integer_json(a.im)}});
        }
    }
    return Json{{"n", s.n()}, {"terms", terms}, {"exact", true}, {"norm2", integer_json(s.norm2())}};
}

Json state_to_json(const FloatState &s) {
    Json terms = Json::array();
    for (std::size_t row = 0; row < s.dim(); ++row) {
        const Ket k = ket_at_display(row, s.n());
        const Complex a = s.amp(k);
        if (a != Complex{0.0, 0.0}) {
            terms.push_back({{"ket", ket_string(k, s.n())}, {"re", finite(a.real())}, {"im", finite(a.imag())}});
        }
    }
    return Json{{"n", s.n()}, {"terms", terms}, {"exact", false}};
}

StateSource state_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("state JSON needs an integer field 'n'");
    }
    const int n = j["n"].get<int>();
    check_qubit_count(n);
    if (!j.contains("terms") || !j["terms"].is_array()) {
        throw std::invalid_argument("state JSON needs an array field 'terms'");
    }
    struct Term {
        Ket ket;
        Amp re, im;
    };
    std::vector<Term> terms;
    bool all_exact = !(j.contains("exact") && j["exact"].is_boolean() && !j["exact"].get<bool>());
    for (const Json &t : j["terms"]) {
        if (!t.is_object() || !t.contains("ket") || !t["ket"].is_string()) {
            throw std::invalid_argument("each term needs a string field 'ket'");
        }
        const std::string bits = t["ket"].get<std::string>();
        if (static_cast<int>(bits.size()) != n) {
            throw std::invalid_argument("ket '" + bits + "' does not have n bits");
        }
        Term term{parse_ket(bits), read_amp(t.value("re", Json(nullptr)), "re"),
                  read_amp(t.value("im", Json(nullptr)), "im")};
        all_exact = all_exact && term.re.exact && term.im.exact;
        terms.push_back(std::move(term));
    }
    StateSource out;
    FloatState approx(n);
    for (const Term &t : terms) {
        approx.amps()[t.ket] += Complex{t.re.approx, t.im.approx};
    }
    if (all_exact) {
        // Clear rational denominators so the amplitudes are Gaussian integers.
        Integer denom = 1;
        for (const Term &t : terms) {
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), t.re.exact->get_den_mpz_t());
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), t.im.exact->get_den_mpz_t());
        }
        ExactState s(n);
        for (const Term &t : terms) {
            const Rational re = *t.re.exact * denom;
            const Rational im = *t.im.exact * denom;
            s.add(t.ket, GaussInt(re.get_num(), im.get_num()));
        }
        if (s.is_zero()) {
            throw std::invalid_argument("state is the zero vector");
        }
        if (denom == 1 && j.contains("norm2") && !j["norm2"].is_null()) {
            const Amp declared = read_amp(j["norm2"], "norm2");
            if (!declared.exact || *declared.exact != Rational(s.norm2())) {
                throw std::invalid_argument("declared norm2 does not match the amplitudes");
            }
        }
        out.exact = s;
        out.approx = s.to_float();
        return out;
    }
    if (approx.is_zero()) {
        throw std::invalid_argument("state is the zero vector");
    }
    out.approx = approx;
    return out;
}

std::string ket_expansion(const ExactState &s) {
    std::string out;
    for (std::size_t row = 0; row < s.dim(); ++row) {
        const Ket k = ket_at_display(row, s.n());
        const GaussInt &a = s.amp(k);
        if (a.is_zero()) {
            continue;
        }
        std::string coef;
        bool negative = false;
        if (sgn(a.im) == 0) {
            negative = sgn(a.re) < 0;
            const Integer mag = abs(a.re);
            coef = mag == 1 ? "" : mag.get_str();
        } else {
            coef = "(" + to_string(GaussRational(a)) + ")";
        }
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coef + "|" + ket_string(k, s.n()) + ">";
    }
    return out.empty() ? "0" : out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string format_complex(const GaussRational &z) { return to_string(z); }

std::string format_complex(Complex z) {
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    return format_double(z.real()) + (std::signbit(im) ? "-" : "+") + format_double(std::abs(im)) + "j";
}

namespace {

std::pair<std::string, std::string> split_complex(const std::string &text) {
    if (text.size() < 2 || text.back() != 'j') {
        throw std::invalid_argument("complex entry must end in 'j': " + text);
    }
    const std::string body = text.substr(0, text.size() - 1);
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            return {body.substr(0, i), body.substr(i)};
        }
    }
    throw std::invalid_argument("malformed complex entry: " + text);
}

}  // namespace

std::optional<GaussRational> parse_exact_complex(const std::string &text) {
    const auto [re, im] = split_complex(text);
    try {
        return GaussRational(parse_rational(re), parse_rational(im));
    } catch (const std::invalid_argument &) {
        return std::nullopt;
    }
}

Complex parse_complex(const std::string &text) {
    const auto [re, im] = split_complex(text);
    std::size_t used_re = 0;
    std::size_t used_im = 0;
    double r = 0.0;
    double i = 0.0;
    try {
        r = std::stod(re, &used_re);
        i = std::stod(im, &used_im);
    } catch (const std::exception &) {
        if (auto q = parse_exact_complex(text)) {
            return q->to_complex();
        }
        throw std::invalid_argument("malformed complex entry: " + text);
    }
    if (used_re != re.size() || used_im != im.size()) {
        if (auto q = parse_exact_complex(text)) {
            return q->to_complex();
        }
        throw std::invalid_argument("malformed complex entry: " + text);
    }
    return {r, i};
}

std::string surd_text(const Rational &squared) {
    if (sgn(squared) < 0) {
        throw std::domain_error("square root of a negative rational");
    }
    if (auto root = exact_sqrt(squared)) {
        return root->get_str();
    }
    // sqrt(p/q) = sqrt(p q) / q = k sqrt(m) / q with m square-free.
    const Integer pq = squared.get_num() * squared.get_den();
    Integer k = 1;
    Integer m = pq;
    for (Integer f = 2; f * f <= m; ++f) {
        while (m % (f * f) == 0) {
            m /= f * f;
            k *= f;
        }
    }
    Integer den = squared.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), den.get_mpz_t());
    k /= g;
    den /= g;
    std::string out = (k == 1 ? "" : k.get_str()) + "sqrt(" + m.get_str() + ")";
    if (den != 1) {
        out += "/" + den.get_str();
    }
    return out;
}

std::string matrix_to_tsv(const DensityMatrix &m) {
    std::ostringstream out;
    const std::size_t dim = m.dim();
    for (std::size_t r = 0; r < dim; ++r) {
        const std::size_t ir = ket_at_display(r, m.n());
        for (std::size_t c = 0; c < dim; ++c) {
            const std::size_t ic = ket_at_display(c, m.n());
            out << (c ? "\t" : "") << (m.exact() ? format_complex((*m.exact())(ir, ic)) : format_complex(m(ir, ic)));
        }
        out << '\n';
    }
    return out.str();
}

Json matrix_to_json(const DensityMatrix &m) {
    Json rows = Json::array();
    const std::size_t dim = m.dim();
    for (std::size_t r = 0; r < dim; ++r) {
        const std::size_t ir = ket_at_display(r, m.n());
        Json row = Json::array();
        for (std::size_t c = 0; c < dim; ++c) {
            const std::size_t ic = ket_at_display(c, m.n());
            row.push_back(m.exact() ? format_complex((*m.exact())(ir, ic)) : format_complex(m(ir, ic)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.n()},         {"order", "display"},          {"exact", m.is_exact()},
                {"transposed", m.transposed()}, {"rows", std::move(rows)}};
}

namespace {

DensityMatrix matrix_from_cells(int n, const std::vector<std::vector<std::string>> &cells, bool transposed) {
    check_qubit_count(n);
    const std::size_t dim = std::size_t{1} << n;
    if (cells.size() != dim) {
        throw std::invalid_argument("matrix dump must have 2^n rows");
    }
    CMatrix f(dim, dim);
    QMatrix q(dim, dim);
    bool exact = true;
    for (std::size_t r = 0; r < dim; ++r) {
        if (cells[r].size() != dim) {
            throw std::invalid_argument("matrix dump must have 2^n columns");
        }
        const std::size_t ir = ket_at_display(r, n);
        for (std::size_t c = 0; c < dim; ++c) {
            const std::size_t ic = ket_at_display(c, n);
            f(ir, ic) = parse_complex(cells[r][c]);
            if (exact) {
                if (auto z = parse_exact_complex(cells[r][c])) {
                    q(ir, ic) = *z;
                } else {
                    exact = false;
                }
            }
        }
    }
    if (exact) {
        return DensityMatrix(n, std::move(f), std::move(q), transposed);
    }
    return DensityMatrix(n, std::move(f), std::nullopt, transposed);
}

}  // namespace

DensityMatrix matrix_from_tsv(int n, const std::string &text) {
    std::vector<std::vector<std::string>> cells;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> row;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, '\t')) {
            row.push_back(cell);
        }
        cells.push_back(std::move(row));
    }
    return matrix_from_cells(n, cells, false);
}

DensityMatrix matrix_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows") || !j["rows"].is_array()) {
        throw std::invalid_argument("matrix JSON needs 'n' and 'rows'");
    }
    std::vector<std::vector<std::string>> cells;
    for (const Json &row : j["rows"]) {
        std::vector<std::string> r;
        for (const Json &c : row) {
            r.push_back(c.get<std::string>());
        }
        cells.push_back(std::move(r));
    }
    return matrix_from_cells(j["n"].get<int>(), cells, j.value("transposed", false));
}

Json listing_to_json(const std::vector<LabeledState> &states) {
    Json out = Json::array();
    for (const LabeledState &s : states) {
        out.push_back({{"label", s.label()},
                       {"n", s.n},
                       {"lambda", s.lambda},
                       {"t", s.t},
                       {"tableau", s.tableau},
                       {"name", s.name.empty() ? Json(nullptr) : Json(s.name)},
                       {"J", s.labels.j ? Json(s.labels.j->str()) : Json(nullptr)},
                       {"m_J", s.labels.m_j ? Json(s.labels.m_j->str()) : Json(nullptr)},
                       {"t_sign", s.t_sign},
                       {"source", s.source.empty() ? Json(nullptr) : Json(s.source)},
                       {"expansion", ket_expansion(s.state)},
                       {"state", state_to_json(s.state)}});
    }
    return out;
}

std::string listing_to_tsv(const std::vector<LabeledState> &states) {
    std::ostringstream out;
    out << "label\tn\tlambda\tt\ttableau\tname\tJ\tm_J\texpansion\n";
    for (const LabeledState &s : states) {
        out << s.label() << '\t' << s.n << '\t' << s.lambda << '\t' << s.t << '\t' << s.tableau << '\t'
            << (s.name.empty() ? "-" : s.name) << '\t' << (s.labels.j ? s.labels.j->str() : "-") << '\t'
            << (s.labels.m_j ? s.labels.m_j->str() : "-") << '\t' << ket_expansion(s.state) << '\n';
    }
    return out.str();
}

Json report_to_json(const EntanglementReport &r) {
    Json splits = Json::array();
    for (const SplitEntry &e : r.splits) {
        Json rem(nullptr);
        if (e.remainder) {
            rem = {{"J", std::string(1, label_char(e.remainder->j))},
                   {"det_rhoI_TJ", finite(e.remainder->det)},
                   {"det_rhoI_TJ_exact", optional_rational(e.remainder->exact_det)},
                   {"det_sign", e.remainder->det_sign},
                   {"rhoI_TJ_equals_rhoI", e.remainder->equals}};
        }
        splits.push_back({{"mask", mask_text(e.mask)},
                          {"rhoT_equals_rho", e.transpose.equals_rho},
                          {"det_rhoT", finite(e.transpose.det)},
                          {"det_rhoT_exact", optional_rational(e.transpose.exact_det)},
                          {"min_eig_rhoT", finite(e.transpose.min_eig)},
                          {"negative", e.transpose.negative},
                          {"tr_rhoI2", finite(e.purity.tr_rho2)},
                          {"tr_rhoI2_exact", optional_rational(e.purity.exact_tr_rho2)},
                          {"rhoI_pure", entry_pure(e.purity)},
                          {"remainder", rem}});
    }
    Json pairs = Json::array();
    for (const PairEntry &p : r.pairs) {
        pairs.push_back({{"pair", pair_label(p.j, p.k)}, {"value", finite(p.value)}});
    }
    Json singles = Json::array();
    for (std::size_t q = 0; q < r.singles.size(); ++q) {
        const SplitConcurrence &c = r.singles[q];
        singles.push_back({{"qubit", std::string(1, label_char(static_cast<int>(q)))},
                           {"value", finite(c.value)},
                           {"squared", finite(c.squared)},
                           {"squared_exact", optional_rational(c.exact_squared)},
                           {"text", single_text(c)}});
    }
    Json separable = Json::array();
    for (SubsystemMask m : r.classification.separable_splits) {
        separable.push_back(mask_text(m));
    }
    Json out{{"id", r.id},
             {"n", r.n},
             {"is_pure", r.is_pure},
             {"classification", {{"label", r.classification.label}, {"separable_splits", separable}}},
             {"any_negative_split", r.any_negative},
             {"pm_entangled", r.pm_entangled},
             {"splits", splits},
             {"concurrence_pairs", pairs},
             {"concurrence_single", singles},
             {"e_tau", r.e_tau ? finite(*r.e_tau) : Json(nullptr)}};
    if (r.tau3) {
        out["tau3"] = {{"value", finite(r.tau3->value)},
                       {"raw", finite(r.tau3->raw)},
                       {"per_focus", {finite(r.tau3->per_focus[0]), finite(r.tau3->per_focus[1]),
                                      finite(r.tau3->per_focus[2])}}};
    } else {
        out["tau3"] = nullptr;
    }
    if (r.tau_n) {
        out["tau_n"] = {{"value", finite(r.tau_n->value)}, {"exact", optional_rational(r.tau_n->exact)}};
    } else {
        out["tau_n"] = nullptr;
    }
    return out;
}

std::string report_to_table_tsv(const EntanglementReport &r) {
    std::ostringstream out;
    const char *rho2 = r.is_pure ? "rho" : "!=rho";
    if (r.n <= 3) {
        out << "state\trho^2\tI\trho^T_I\tdet rho^T_I\trho_I^2\tTr rho_I^2\trho_I^T_J\tdet rho_I^T_J\tC_JK\tC_I(JK)"
               "\tE_tau\ttau3\n";
        for (const SplitEntry &e : r.splits) {
            const bool pair_only = r.n == 2;
            const int q = std::countr_zero(e.mask);
            std::string cjk;
            for (const PairEntry &p : r.pairs) {
                if (pair_only || (p.j != q && p.k != q)) {
                    cjk = short_double(p.value);
                }
            }
            out << r.id << '\t' << rho2 << '\t' << (pair_only ? "a,b" : mask_text(e.mask)) << '\t'
                << eq_text(e.transpose.equals_rho, "rho") << '\t' << det_text(e.transpose.det, e.transpose.exact_det)
                << '\t' << eq_text(entry_pure(e.purity), "rho_I") << '\t'
                << det_text(e.purity.tr_rho2, e.purity.exact_tr_rho2) << '\t';
            if (e.remainder) {
                out << eq_text(e.remainder->equals, "rho_I") << '\t' << sign_text(e.remainder->det_sign);
            } else {
                out << '\t';
            }
            out << '\t' << cjk << '\t' << (pair_only ? "" : single_text(r.singles[static_cast<std::size_t>(q)]))
                << '\t' << (r.e_tau ? short_double(*r.e_tau) : "") << '\t'
                << (r.tau3 ? short_double(r.tau3->value) : "") << '\n';
        }
        return out.str();
    }
    out << "state\trho^2\tI\trho^T_I\tdet rho^T_I\trho_I^2\tTr rho_I^2\tJ\trho_I^T_J\tdet rho_I^T_J\n";
    for (const SplitEntry &e : r.splits) {
        out << r.id << '\t' << rho2 << '\t' << mask_text(e.mask) << '\t' << eq_text(e.transpose.equals_rho, "rho")
            << '\t' << det_text(e.transpose.det, e.transpose.exact_det) << '\t'
            << eq_text(entry_pure(e.purity), "rho_I") << '\t' << det_text(e.purity.tr_rho2, e.purity.exact_tr_rho2)
            << '\t';
        if (e.remainder) {
            out << label_char(e.remainder->j) << '\t' << eq_text(e.remainder->equals, "rho_I") << '\t'
                << sign_text(e.remainder->det_sign);
        } else {
            out << "\t\t";
        }
        out << '\n';
    }
    out << "\nstate\tC_JK\tC_I(rest)\ttau_n\n" << r.id << '\t';
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
        out << (i ? " " : "") << pair_label(r.pairs[i].j, r.pairs[i].k) << ':' << short_double(r.pairs[i].value);
    }
    out << '\t';
    for (std::size_t q = 0; q < r.singles.size(); ++q) {
        out << (q ? " " : "") << label_char(static_cast<int>(q)) << ':' << single_text(r.singles[q]);
    }
    out << '\t' << (r.tau_n ? (r.tau_n->exact ? r.tau_n->exact->get_str() : short_double(r.tau_n->value)) : "")
        << '\n';
    return out.str();
}

}  // namespace symtangle
