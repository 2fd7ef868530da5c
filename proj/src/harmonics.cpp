#include "symtangle/harmonics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "symtangle/exact.hpp"

namespace symtangle {

namespace {

using NameTable = std::vector<std::vector<std::string>>;

// Conventional names per tableau, in t order.
const NameTable *harmonic_names(int n) {
    static const NameTable n2{{"A+", "A-", "B+"}, {"B-"}};
    static const NameTable n3{{"Q1+", "Q1-", "Q2+", "Q2-"}, {"D1+", "D1-"}, {"D2+", "D2-"}};
    static const NameTable n4{{"E+", "E-", "G+", "G-", "C1+"}, {"L+", "L-", "C1-"}, {"M+", "M-", "C2-"},
                              {"N+", "N-", "C3-"}, {"C2+"}, {"C3+"}};
    switch (n) {
        case 2:
            return &n2;
        case 3:
            return &n3;
        case 4:
            return &n4;
        default:
            return nullptr;
    }
}

const NameTable *symmetric_names(int n) {
    static const NameTable n2{{"PhiBell+", "PhiBell-", "PsiBell+"}, {"PsiBell-"}};
    static const NameTable n3{{"Psi3GHZ+", "Psi3GHZ-", "W3+", "W3-"}, {"U3+", "U3-"}, {"V3+", "V3-"}};
    static const NameTable n4{{"Psi4GHZ+", "Psi4GHZ-", "W4+", "W4-", "C1+"}, {"X4+", "X4-", "C1-"},
                              {"Y4+", "Y4-", "C2-"}, {"Z4+", "Z4-", "C3-"}, {"C2+"}, {"C3+"}};
    switch (n) {
        case 2:
            return &n2;
        case 3:
            return &n3;
        case 4:
            return &n4;
        default:
            return nullptr;
    }
}

void attach_names(std::vector<LabeledState> &states, const NameTable *table) {
    if (table == nullptr) {
        return;
    }
    for (LabeledState &s : states) {
        const auto lam = static_cast<std::size_t>(s.lambda - 1);
        if (lam < table->size() && static_cast<std::size_t>(s.t - 1) < (*table)[lam].size()) {
            s.name = (*table)[lam][static_cast<std::size_t>(s.t - 1)];
        }
    }
}

std::size_t first_display_row(const ExactState &s) {
    for (std::size_t row = 0; row < s.dim(); ++row) {
        if (!s.amp(ket_at_display(row, s.n())).is_zero()) {
            return row;
        }
    }
    return s.dim();
}

// Young symmetrizer applied factor by factor: column antisymmetrizers first,
// then row symmetrizers (e = R * C acts as R(C|k>)).
ExactState apply_tableau(const YoungTableau &t, const ExactState &s) {
    ExactState cur = s;
    for (const auto &col : t.columns()) {
        if (col.size() > 1) {
            cur = apply_algebra_element(symmetrizer(t.n(), col, true), cur);
            if (cur.is_zero()) {
                return cur;
            }
        }
    }
    for (const auto &row : t.rows) {
        if (row.size() > 1) {
            cur = apply_algebra_element(symmetrizer(t.n(), row, false), cur);
        }
    }
    return cur;
}

void check_basis_n(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::out_of_range("n must be in 1.." + std::to_string(kMaxQubits));
    }
}

LabeledState make_labeled(const ExactState &s, int n, int lambda, int t, const std::string &tableau) {
    LabeledState out;
    out.state = s;
    out.n = n;
    out.lambda = lambda;
    out.t = t;
    out.tableau = tableau;
    out.labels = spin_labels(s, partial_spin_subsets(n));
    return out;
}

std::vector<LabeledState> tableau_basis_impl(const YoungTableau &tab, int lambda) {
    const int n = tab.n();
    std::vector<ExactState> found;
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t row = 0; row < dim; ++row) {
        const ExactState img = apply_tableau(tab, ExactState::basis(n, ket_at_display(row, n)));
        if (img.is_zero()) {
            continue;
        }
        const ExactState c = img.canonical();
        if (std::find(found.begin(), found.end(), c) == found.end()) {
            found.push_back(c);
        }
    }
    struct Keyed {
        ExactState s;
        int twice_m;
        std::size_t first_row;
    };
    std::vector<Keyed> keyed;
    for (ExactState &s : found) {
        const SpinLabels l = spin_labels(s);
        if (!l.m_j) {
            throw std::logic_error("tableau image is not a J_z eigenstate");
        }
        const std::size_t fr = first_display_row(s);
        keyed.push_back({std::move(s), static_cast<int>(l.m_j->twice), fr});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed &x, const Keyed &y) {
        const int ax = std::abs(x.twice_m);
        const int ay = std::abs(y.twice_m);
        if (ax != ay) {
            return ax > ay;
        }
        if (x.twice_m != y.twice_m) {
            return x.twice_m > y.twice_m;
        }
        return x.first_row < y.first_row;
    });
    std::vector<LabeledState> out;
    int t = 1;
    for (const Keyed &k : keyed) {
        out.push_back(make_labeled(k.s, n, lambda, t++, tab.str()));
    }
    return out;
}

std::vector<LabeledState> symmetric_from(const std::vector<LabeledState> &pre) {
    std::vector<LabeledState> out;
    int t = 1;
    for (const LabeledState &s : pre) {
        const long twice_m = s.labels.m_j ? s.labels.m_j->twice : 0;
        if (twice_m < 0) {
            continue;
        }
        for (int sign : {1, -1}) {
            const ExactState img = t_operator(sign, s.state);
            if (img.is_zero()) {
                continue;
            }
            LabeledState ls = make_labeled(img.canonical(), s.n, s.lambda, t++, s.tableau);
            ls.t_sign = sign;
            ls.source = s.id();
            ls.source_m_j = s.labels.m_j;
            out.push_back(std::move(ls));
        }
    }
    return out;
}

const std::map<std::string, std::string> &aliases() {
    static const std::map<std::string, std::string> a{
        {"Phi+", "PhiBell+"},   {"Phi-", "PhiBell-"},   {"Psi+", "PsiBell+"},   {"Psi-", "PsiBell-"},
        {"Psi3+", "Psi3GHZ+"},  {"Psi3-", "Psi3GHZ-"},  {"Psi4+", "Psi4GHZ+"},  {"Psi4-", "Psi4GHZ-"},
    };
    return a;
}

const std::vector<YoungTableau> &tableaux_for(int n) {
    static std::map<int, std::vector<YoungTableau>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, standard_tableaux(n)).first;
    }
    return it->second;
}

ExactState raw_image(int n, int lambda, const std::string &ket) {
    return apply_tableau(tableaux_for(n).at(static_cast<std::size_t>(lambda - 1)),
                         ExactState::basis(n, parse_ket(ket)));
}

LabeledState extra_state(const std::string &name, const ExactState &s) {
    LabeledState out = make_labeled(s.canonical(), s.n(), 0, 0, "");
    out.name = name;
    return out;
}

}  // namespace

std::string LabeledState::label() const {
    return "|" + std::to_string(n) + "," + std::to_string(lambda) + "," + std::to_string(t) + ">";
}

std::string LabeledState::id() const { return name.empty() ? label() : name; }

std::vector<QubitMask> partial_spin_subsets(int n) {
    std::vector<QubitMask> out;
    const QubitMask all = (QubitMask{1} << n) - 1;
    for (QubitMask m = 1; m < all; ++m) {
        if (mask_size(m) >= 2) {
            out.push_back(m);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](QubitMask x, QubitMask y) {
        if (mask_size(x) != mask_size(y)) {
            return mask_size(x) < mask_size(y);
        }
        return mask_label(x) < mask_label(y);
    });
    return out;
}

std::vector<LabeledState> tableau_basis(int n, int lambda) {
    check_basis_n(n);
    const auto &tabs = tableaux_for(n);
    if (lambda < 1 || static_cast<std::size_t>(lambda) > tabs.size()) {
        throw std::out_of_range("tableau index out of range for n=" + std::to_string(n));
    }
    std::vector<LabeledState> out = tableau_basis_impl(tabs[static_cast<std::size_t>(lambda - 1)], lambda);
    attach_names(out, harmonic_names(n));
    return out;
}

std::vector<LabeledState> harmonic_basis(int n) {
    check_basis_n(n);
    std::vector<LabeledState> out;
    for (std::size_t i = 0; i < tableaux_for(n).size(); ++i) {
        std::vector<LabeledState> part = tableau_basis(n, static_cast<int>(i + 1));
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<LabeledState> symmetric_basis(int n) {
    check_basis_n(n);
    std::vector<LabeledState> out;
    for (std::size_t i = 0; i < tableaux_for(n).size(); ++i) {
        std::vector<LabeledState> part = symmetric_from(tableau_basis(n, static_cast<int>(i + 1)));
        out.insert(out.end(), part.begin(), part.end());
    }
    attach_names(out, symmetric_names(n));
    return out;
}

LabeledState named_state(const std::string &name) {
    std::string key = name;
    if (auto it = aliases().find(key); it != aliases().end()) {
        key = it->second;
    }
    if (key == "F+" || key == "F-") {
        // D1 + 2 D2 built from the raw symmetrizer images, whose norms agree.
        const bool plus = key == "F+";
        const ExactState d1 = raw_image(3, 2, plus ? "001" : "110");
        const ExactState d2 = raw_image(3, 3, plus ? "010" : "101");
        return extra_state(key, d1 + d2.scaled(GaussInt(2)));
    }
    if (key == "R") {
        return extra_state(key, ExactState::from_terms(4, {{"0011", 1}, {"1100", 1}, {"1001", -1}, {"0110", -1}}));
    }
    if (key == "C2+-C3+") {
        return extra_state(key, raw_image(4, 5, "0011") - raw_image(4, 6, "0101"));
    }
    for (int n = 2; n <= 4; ++n) {
        for (const LabeledState &s : symmetric_basis(n)) {
            if (s.name == key) {
                return s;
            }
        }
        for (const LabeledState &s : harmonic_basis(n)) {
            if (s.name == key) {
                return s;
            }
        }
    }
    throw std::invalid_argument("unknown state name: " + name);
}

std::vector<std::string> registry_names() {
    std::vector<std::string> out;
    for (int n = 2; n <= 4; ++n) {
        for (const auto *table : {harmonic_names(n), symmetric_names(n)}) {
            for (const auto &row : *table) {
                out.insert(out.end(), row.begin(), row.end());
            }
        }
    }
    for (const auto &[alias, target] : aliases()) {
        out.push_back(alias);
    }
    for (const char *extra : {"F+", "F-", "R", "C2+-C3+"}) {
        out.emplace_back(extra);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t gram_rank(const std::vector<ExactState> &states) {
    if (states.empty()) {
        throw std::invalid_argument("gram_rank of an empty list");
    }
    const std::size_t m = states.size();
    QMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            g(i, j) = GaussRational(inner_product(states[i], states[j]).raw);
        }
    }
    return rank(g);
}

std::size_t gram_rank(const std::vector<LabeledState> &states) {
    std::vector<ExactState> raw;
    raw.reserve(states.size());
    for (const LabeledState &s : states) {
        raw.push_back(s.state);
    }
    return gram_rank(raw);
}

}  // namespace symtangle
