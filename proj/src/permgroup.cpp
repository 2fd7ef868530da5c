#include "symtangle/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace symtangle {

char label_char(int label) {
    if (label < 0 || label >= kMaxLabels) {
        throw std::out_of_range("qubit label out of range");
    }
    return static_cast<char>('a' + label);
}

int label_index(char c) {
    if (c < 'a' || c >= 'a' + kMaxLabels) {
        throw std::invalid_argument(std::string("unknown qubit label '") + c + "'");
    }
    return c - 'a';
}

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxLabels) {
        throw std::out_of_range("number of labels must be in 1.." + std::to_string(kMaxLabels));
    }
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("group algebra coefficient overflow");
    }
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("group algebra coefficient overflow");
    }
    return r;
}

void skip_space(const std::string &s, std::size_t &pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
    }
}

// Parses "e" or a product of cycles starting at pos.
Permutation parse_product(const std::string &s, std::size_t &pos, int n) {
    skip_space(s, pos);
    if (pos < s.size() && s[pos] == 'e') {
        ++pos;
        return Permutation::identity(n);
    }
    if (pos >= s.size() || s[pos] != '(') {
        throw std::invalid_argument("expected 'e' or '(' in permutation text: " + s);
    }
    Permutation acc = Permutation::identity(n);
    while (pos < s.size() && s[pos] == '(') {
        ++pos;
        std::vector<int> cycle;
        while (pos < s.size() && s[pos] != ')') {
            if (!std::isspace(static_cast<unsigned char>(s[pos]))) {
                const int label = label_index(s[pos]);
                if (label >= n) {
                    throw std::invalid_argument("label beyond n in permutation text: " + s);
                }
                if (std::find(cycle.begin(), cycle.end(), label) != cycle.end()) {
                    throw std::invalid_argument("repeated label in cycle: " + s);
                }
                cycle.push_back(label);
            }
            ++pos;
        }
        if (pos >= s.size()) {
            throw std::invalid_argument("unterminated cycle: " + s);
        }
        ++pos;
        if (cycle.size() < 2) {
            throw std::invalid_argument("cycle needs at least two labels: " + s);
        }
        std::vector<int> m(static_cast<std::size_t>(n));
        std::iota(m.begin(), m.end(), 0);
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            m[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
        }
        acc = compose(acc, Permutation(m));
        skip_space(s, pos);
    }
    return acc;
}

}  // namespace

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
    check_n(n());
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
        if (v < 0 || v >= n() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation mapping is not a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    check_n(n);
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation Permutation::transposition(int n, int i, int j) {
    check_n(n);
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
        throw std::invalid_argument("bad transposition labels");
    }
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    std::swap(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
    return Permutation(std::move(m));
}

Permutation Permutation::parse(const std::string &text, int n) {
    check_n(n);
    std::size_t pos = 0;
    Permutation p = parse_product(text, pos, n);
    skip_space(text, pos);
    if (pos != text.size()) {
        throw std::invalid_argument("trailing characters in permutation text: " + text);
    }
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
    }
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const { return support_size() == 0; }

int Permutation::support_size() const {
    int moved = 0;
    for (std::size_t i = 0; i < map_.size(); ++i) {
        moved += map_[i] != static_cast<int>(i) ? 1 : 0;
    }
    return moved;
}

int Permutation::sign() const {
    std::vector<bool> seen(map_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(map_[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) {
            s = -s;
        }
    }
    return s;
}

std::string Permutation::str() const {
    if (is_identity()) {
        return "e";
    }
    std::string out;
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (seen[i] || map_[i] == static_cast<int>(i)) {
            continue;
        }
        std::vector<int> cycle;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(map_[j])) {
            seen[j] = true;
            cycle.push_back(static_cast<int>(j));
        }
        bool tail_decreasing = cycle.size() >= 3;
        for (std::size_t k = 2; k < cycle.size() && tail_decreasing; ++k) {
            tail_decreasing = cycle[k] < cycle[k - 1];
        }
        if (tail_decreasing) {
            std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
        }
        out += '(';
        for (int v : cycle) {
            out += label_char(v);
        }
        out += ')';
    }
    return out;
}

Permutation compose(const Permutation &p, const Permutation &q) {
    if (p.n() != q.n()) {
        throw std::invalid_argument("compose: permutations act on different n");
    }
    std::vector<int> m(static_cast<std::size_t>(p.n()));
    for (int i = 0; i < p.n(); ++i) {
        m[static_cast<std::size_t>(i)] = p(q(i));
    }
    return Permutation(std::move(m));
}

std::vector<Permutation> group_elements(int n) {
    check_n(n);
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(m);
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
}

GroupAlgebraElement GroupAlgebraElement::identity(int n) { return of(Permutation::identity(n)); }

GroupAlgebraElement GroupAlgebraElement::of(const Permutation &p, std::int64_t coefficient) {
    GroupAlgebraElement x(p.n());
    x.add(p, coefficient);
    return x;
}

GroupAlgebraElement GroupAlgebraElement::parse(const std::string &text, int n) {
    check_n(n);
    GroupAlgebraElement x(n);
    std::size_t pos = 0;
    skip_space(text, pos);
    if (text.substr(pos) == "0") {
        return x;
    }
    bool first = true;
    while (true) {
        skip_space(text, pos);
        if (pos >= text.size()) {
            break;
        }
        std::int64_t sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_space(text, pos);
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms: " + text);
        }
        std::int64_t magnitude = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            magnitude = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                magnitude = checked_add(checked_mul(magnitude, 10), text[pos] - '0');
                ++pos;
            }
        }
        const Permutation p = parse_product(text, pos, n);
        x.add(p, checked_mul(sign, magnitude));
        first = false;
    }
    if (first) {
        throw std::invalid_argument("empty group algebra text");
    }
    return x;
}

std::int64_t GroupAlgebraElement::coefficient(const Permutation &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

void GroupAlgebraElement::add(const Permutation &p, std::int64_t coefficient) {
    if (p.n() != n_) {
        throw std::invalid_argument("group algebra: permutation size mismatch");
    }
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(p, coefficient);
    if (!inserted) {
        it->second = checked_add(it->second, coefficient);
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement &o) const {
    GroupAlgebraElement r = *this;
    for (const auto &[p, c] : o.terms_) {
        r.add(p, c);
    }
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement &o) const {
    return *this + o.scaled(-1);
}

GroupAlgebraElement GroupAlgebraElement::scaled(std::int64_t k) const {
    GroupAlgebraElement r(n_);
    for (const auto &[p, c] : terms_) {
        r.add(p, checked_mul(c, k));
    }
    return r;
}

std::vector<std::pair<Permutation, std::int64_t>> GroupAlgebraElement::ordered_terms() const {
    std::vector<std::pair<Permutation, std::int64_t>> out(terms_.begin(), terms_.end());
    std::stable_sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
        const int sx = x.first.support_size();
        const int sy = y.first.support_size();
        if (sx != sy) {
            return sx < sy;
        }
        return x.first.str() < y.first.str();
    });
    return out;
}

std::string GroupAlgebraElement::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[p, c] : ordered_terms()) {
        const std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) {
            out += std::to_string(mag);
        }
        out += p.str();
        first = false;
    }
    return out;
}

GroupAlgebraElement algebra_product(const GroupAlgebraElement &x, const GroupAlgebraElement &y) {
    if (x.n() != y.n()) {
        throw std::invalid_argument("algebra_product: elements act on different n");
    }
    GroupAlgebraElement r(x.n());
    for (const auto &[p, a] : x.terms()) {
        for (const auto &[q, b] : y.terms()) {
            r.add(compose(p, q), checked_mul(a, b));
        }
    }
    return r;
}

GroupAlgebraElement symmetrizer(int n, const std::vector<int> &labels, bool antisymmetric) {
    check_n(n);
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    GroupAlgebraElement r(n);
    std::vector<int> images = sorted;
    do {
        std::vector<int> m(static_cast<std::size_t>(n));
        std::iota(m.begin(), m.end(), 0);
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            m[static_cast<std::size_t>(sorted[k])] = images[k];
        }
        const Permutation p(std::move(m));
        r.add(p, antisymmetric ? p.sign() : 1);
    } while (std::next_permutation(images.begin(), images.end()));
    return r;
}

std::optional<std::pair<std::int64_t, std::int64_t>> proportionality(const GroupAlgebraElement &x,
                                                                     const GroupAlgebraElement &y) {
    if (x.n() != y.n() || x.size() != y.size() || x.is_zero()) {
        return std::nullopt;
    }
    const auto &[p0, x0] = *x.terms().begin();
    const std::int64_t y0 = y.coefficient(p0);
    if (y0 == 0) {
        return std::nullopt;
    }
    for (const auto &[p, c] : x.terms()) {
        // y[p] / c == y0 / x0  <=>  y[p] * x0 == y0 * c
        if (checked_mul(y.coefficient(p), x0) != checked_mul(y0, c)) {
            return std::nullopt;
        }
    }
    std::int64_t g = std::gcd(y0, x0);
    std::int64_t num = y0 / g;
    std::int64_t den = x0 / g;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return std::make_pair(num, den);
}

int YoungDiagram::n() const { return std::accumulate(row_lengths.begin(), row_lengths.end(), 0); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &current, std::vector<YoungDiagram> &out) {
    if (remaining == 0) {
        out.push_back(YoungDiagram{current});
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

void fill_rec(const YoungDiagram &d, int next_label, std::vector<std::vector<int>> &rows,
              std::vector<YoungTableau> &out) {
    if (next_label == d.n()) {
        out.push_back(YoungTableau{d, rows});
        return;
    }
    // A label may go at the end of row r if the row is not full and the cell
    // above (row r-1, same column) is already filled.
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::size_t col = rows[r].size();
        if (static_cast<int>(col) >= d.row_lengths[r]) {
            continue;
        }
        if (r > 0 && rows[r - 1].size() <= col) {
            continue;
        }
        rows[r].push_back(next_label);
        fill_rec(d, next_label + 1, rows, out);
        rows[r].pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> partitions(int n) {
    check_n(n);
    std::vector<YoungDiagram> out;
    std::vector<int> current;
    partitions_rec(n, n, current, out);
    return out;
}

std::vector<std::vector<int>> YoungTableau::columns() const {
    std::vector<std::vector<int>> cols;
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (cols.size() <= c) {
                cols.emplace_back();
            }
            cols[c].push_back(row[c]);
        }
    }
    return cols;
}

std::vector<int> YoungTableau::reading_word() const {
    std::vector<int> word;
    for (const auto &row : rows) {
        word.insert(word.end(), row.begin(), row.end());
    }
    return word;
}

bool YoungTableau::is_standard() const {
    if (rows.size() != diagram.row_lengths.size()) {
        return false;
    }
    std::vector<bool> seen(static_cast<std::size_t>(n()), false);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != diagram.row_lengths[r]) {
            return false;
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const int v = rows[r][c];
            if (v < 0 || v >= n() || seen[static_cast<std::size_t>(v)]) {
                return false;
            }
            seen[static_cast<std::size_t>(v)] = true;
            if (c > 0 && rows[r][c - 1] >= v) {
                return false;
            }
            if (r > 0 && rows[r - 1][c] >= v) {
                return false;
            }
        }
    }
    return true;
}

std::string YoungTableau::str() const {
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) {
            out += '/';
        }
        for (int v : rows[r]) {
            out += label_char(v);
        }
    }
    return out;
}

std::vector<YoungTableau> standard_tableaux(int n, std::optional<int> max_rows) {
    std::vector<YoungTableau> out;
    for (const YoungDiagram &d : partitions(n)) {
        if (max_rows && d.rows() > *max_rows) {
            continue;
        }
        std::vector<YoungTableau> batch;
        std::vector<std::vector<int>> rows(d.row_lengths.size());
        fill_rec(d, 0, rows, batch);
        std::sort(batch.begin(), batch.end(), [](const YoungTableau &x, const YoungTableau &y) {
            return x.reading_word() < y.reading_word();
        });
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

GroupAlgebraElement young_idempotent(const YoungTableau &t) {
    if (!t.is_standard()) {
        throw std::invalid_argument("young_idempotent: tableau is not standard");
    }
    const int n = t.n();
    GroupAlgebraElement rows = GroupAlgebraElement::identity(n);
    for (const auto &row : t.rows) {
        if (row.size() > 1) {
            rows = algebra_product(rows, symmetrizer(n, row, false));
        }
    }
    GroupAlgebraElement cols = GroupAlgebraElement::identity(n);
    for (const auto &col : t.columns()) {
        if (col.size() > 1) {
            cols = algebra_product(cols, symmetrizer(n, col, true));
        }
    }
    return algebra_product(rows, cols);
}

}  // namespace symtangle
