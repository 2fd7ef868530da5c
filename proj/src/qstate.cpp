#include "symtangle/qstate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <type_traits>

#include "symtangle/kernels.hpp"

namespace symtangle {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::out_of_range("qubit count must be in 1.." + std::to_string(kMaxQubits));
    }
}

std::string ket_string(Ket k, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        s[static_cast<std::size_t>(q)] = ket_bit(k, q, n) ? '1' : '0';
    }
    return s;
}

Ket parse_ket(const std::string &bits) {
    if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("ket bitstring has bad length: '" + bits + "'");
    }
    Ket k = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("ket bitstring must contain only 0/1: '" + bits + "'");
        }
        k = (k << 1) | static_cast<Ket>(c - '0');
    }
    return k;
}

int hamming_weight(Ket k) { return __builtin_popcount(k); }

std::string mask_label(QubitMask mask) {
    std::string s;
    for (int q = 0; q < kMaxQubits; ++q) {
        if (mask & (1U << q)) {
            s += label_char(q);
        }
    }
    return s;
}

QubitMask parse_mask(const std::string &labels, int n) {
    QubitMask m = 0;
    for (char c : labels) {
        const int q = label_index(c);
        if (q >= n) {
            throw std::invalid_argument("qubit label beyond n: " + labels);
        }
        if (m & (1U << q)) {
            throw std::invalid_argument("repeated qubit label: " + labels);
        }
        m |= 1U << q;
    }
    return m;
}

int mask_size(QubitMask mask) { return __builtin_popcount(mask); }

namespace {

void check_same_n(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("states act on different numbers of qubits");
    }
}

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) {
        throw std::out_of_range("qubit index out of range");
    }
}

GaussInt times_i(const GaussInt &z) { return {-z.im, z.re}; }

// Image of every ket under the permutation of tensor positions.
std::vector<Ket> permuted_kets(const Permutation &p, int n) {
    check_same_n(p.n(), n);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Ket> out(dim);
    for (Ket k = 0; k < dim; ++k) {
        Ket img = 0;
        for (int q = 0; q < n; ++q) {
            if (ket_bit(k, q, n)) {
                img |= Ket{1} << (n - 1 - p(q));
            }
        }
        out[k] = img;
    }
    return out;
}

Integer lcm_of_denominators(const std::vector<GaussRational> &v) {
    Integer l = 1;
    for (const GaussRational &z : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re.get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im.get_den_mpz_t());
    }
    return l;
}

}  // namespace

ExactState::ExactState(int n) : n_(n) {
    check_qubit_count(n);
    amps_.assign(std::size_t{1} << n, GaussInt(0));
}

ExactState ExactState::basis(int n, Ket k) {
    ExactState s(n);
    if (k >= s.dim()) {
        throw std::out_of_range("ket index out of range");
    }
    s.amps_[k] = GaussInt(1);
    return s;
}

ExactState ExactState::from_terms(int n, const std::vector<std::pair<std::string, long>> &terms) {
    ExactState s(n);
    for (const auto &[bits, c] : terms) {
        if (bits.size() != static_cast<std::size_t>(n)) {
            throw std::invalid_argument("ket '" + bits + "' does not have " + std::to_string(n) + " qubits");
        }
        s.add(parse_ket(bits), GaussInt(c));
    }
    return s;
}

Integer ExactState::norm2() const {
    Integer acc = 0;
    for (const GaussInt &z : amps_) {
        acc += z.norm();
    }
    return acc;
}

bool ExactState::is_zero() const {
    for (const GaussInt &z : amps_) {
        if (!z.is_zero()) {
            return false;
        }
    }
    return true;
}

bool ExactState::is_real() const {
    for (const GaussInt &z : amps_) {
        if (sgn(z.im) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Ket> ExactState::support() const {
    std::vector<Ket> out;
    for (Ket k = 0; k < amps_.size(); ++k) {
        if (!amps_[k].is_zero()) {
            out.push_back(k);
        }
    }
    return out;
}

ExactState ExactState::operator+(const ExactState &o) const {
    check_same_n(n_, o.n_);
    ExactState r = *this;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        r.amps_[k] += o.amps_[k];
    }
    return r;
}

ExactState ExactState::operator-(const ExactState &o) const {
    check_same_n(n_, o.n_);
    ExactState r = *this;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        r.amps_[k] -= o.amps_[k];
    }
    return r;
}

ExactState ExactState::scaled(const GaussInt &k) const {
    ExactState r = *this;
    for (GaussInt &z : r.amps_) {
        z = z * k;
    }
    return r;
}

ExactState ExactState::canonical() const {
    Integer g = 0;
    for (const GaussInt &z : amps_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.re.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.im.get_mpz_t());
    }
    if (sgn(g) == 0) {
        return *this;
    }
    ExactState r = *this;
    for (GaussInt &z : r.amps_) {
        mpz_divexact(z.re.get_mpz_t(), z.re.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(z.im.get_mpz_t(), z.im.get_mpz_t(), g.get_mpz_t());
    }
    for (std::size_t row = 0; row < r.dim(); ++row) {
        const GaussInt &z = r.amps_[ket_at_display(row, n_)];
        if (z.is_zero()) {
            continue;
        }
        GaussInt unit(1);
        if (sgn(z.re) > 0 && sgn(z.im) >= 0) {
            unit = GaussInt(1);
        } else if (sgn(z.re) <= 0 && sgn(z.im) > 0) {
            unit = GaussInt(0, -1);
        } else if (sgn(z.re) < 0 && sgn(z.im) <= 0) {
            unit = GaussInt(-1);
        } else {
            unit = GaussInt(0, 1);
        }
        return r.scaled(unit);
    }
    return r;
}

FloatState ExactState::to_float() const {
    if (is_zero()) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    const double inv = 1.0 / std::sqrt(norm2().get_d());
    std::vector<Complex> a(amps_.size());
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        a[k] = amps_[k].to_complex() * inv;
    }
    return FloatState(n_, std::move(a));
}

std::optional<GaussRational> ratio(const ExactState &from, const ExactState &to) {
    check_same_n(from.n(), to.n());
    std::size_t pivot = from.dim();
    for (std::size_t k = 0; k < from.dim(); ++k) {
        if (!from.amps()[k].is_zero()) {
            pivot = k;
            break;
        }
    }
    if (pivot == from.dim()) {
        return std::nullopt;
    }
    const GaussInt &f0 = from.amps()[pivot];
    const GaussInt &t0 = to.amps()[pivot];
    for (std::size_t k = 0; k < from.dim(); ++k) {
        if (!(to.amps()[k] * f0 == from.amps()[k] * t0)) {
            return std::nullopt;
        }
    }
    return GaussRational(t0) / GaussRational(f0);
}

bool equal_up_to_sign(const ExactState &a, const ExactState &b) {
    if (a.n() != b.n() || a.is_zero() || b.is_zero()) {
        return false;
    }
    const auto r = ratio(a, b);
    return r && r->is_real();
}

FloatState::FloatState(int n) : n_(n) {
    check_qubit_count(n);
    amps_.assign(std::size_t{1} << n, Complex{0.0, 0.0});
}

FloatState::FloatState(int n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {
    check_qubit_count(n);
    if (amps_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("amplitude vector length must be 2^n");
    }
}

double FloatState::norm() const {
    double s = 0.0;
    for (const Complex &z : amps_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

FloatState FloatState::normalized() const {
    const double nrm = norm();
    if (nrm <= 1e-300) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    FloatState r = *this;
    for (Complex &z : r.amps_) {
        z /= nrm;
    }
    return r;
}

ExactState apply_permutation(const Permutation &p, const ExactState &s) {
    const std::vector<Ket> img = permuted_kets(p, s.n());
    ExactState r(s.n());
    for (Ket k = 0; k < s.dim(); ++k) {
        r.set(img[k], s.amp(k));
    }
    return r;
}

FloatState apply_permutation(const Permutation &p, const FloatState &s) {
    const std::vector<Ket> img = permuted_kets(p, s.n());
    FloatState r(s.n());
    for (Ket k = 0; k < s.dim(); ++k) {
        r.amps()[img[k]] = s.amp(k);
    }
    r.tolerance = s.tolerance;
    return r;
}

ExactState apply_algebra_element(const GroupAlgebraElement &x, const ExactState &s) {
    check_same_n(x.n(), s.n());
    ExactState r(s.n());
    for (const auto &[p, c] : x.terms()) {
        const std::vector<Ket> img = permuted_kets(p, s.n());
        const Integer coeff(static_cast<long>(c));
        for (Ket k = 0; k < s.dim(); ++k) {
            if (!s.amp(k).is_zero()) {
                r.add(img[k], s.amp(k) * coeff);
            }
        }
    }
    return r;
}

ExactState pauli_apply(char axis, int qubit, const ExactState &s) {
    check_qubit(qubit, s.n());
    const Ket bit = Ket{1} << (s.n() - 1 - qubit);
    ExactState r(s.n());
    for (Ket k = 0; k < s.dim(); ++k) {
        const GaussInt &a = s.amp(k);
        if (a.is_zero()) {
            continue;
        }
        switch (axis) {
            case 'x':
            case 'X':
                r.add(k ^ bit, a);
                break;
            case 'y':
            case 'Y':
                // Y|0> = i|1>, Y|1> = -i|0>
                r.add(k ^ bit, (k & bit) ? -times_i(a) : times_i(a));
                break;
            case 'z':
            case 'Z':
                r.add(k, (k & bit) ? -a : a);
                break;
            default:
                throw std::invalid_argument(std::string("unknown Pauli axis '") + axis + "'");
        }
    }
    return r;
}

FloatState pauli_apply(char axis, int qubit, const FloatState &s) {
    check_qubit(qubit, s.n());
    const Ket bit = Ket{1} << (s.n() - 1 - qubit);
    FloatState r(s.n());
    r.tolerance = s.tolerance;
    const Complex i{0.0, 1.0};
    for (Ket k = 0; k < s.dim(); ++k) {
        const Complex a = s.amp(k);
        switch (axis) {
            case 'x':
            case 'X':
                r.amps()[k ^ bit] += a;
                break;
            case 'y':
            case 'Y':
                r.amps()[k ^ bit] += (k & bit) ? -i * a : i * a;
                break;
            case 'z':
            case 'Z':
                r.amps()[k] += (k & bit) ? -a : a;
                break;
            default:
                throw std::invalid_argument(std::string("unknown Pauli axis '") + axis + "'");
        }
    }
    return r;
}

PauliString PauliString::on(int n, char axis, const std::vector<int> &qubits) {
    check_qubit_count(n);
    PauliString p{std::string(static_cast<std::size_t>(n), 'I')};
    for (int q : qubits) {
        check_qubit(q, n);
        p.ops[static_cast<std::size_t>(q)] = static_cast<char>(std::toupper(static_cast<unsigned char>(axis)));
    }
    return p;
}

int PauliOperator::n() const { return terms.empty() ? 0 : static_cast<int>(terms.front().second.ops.size()); }

PauliOperator PauliOperator::sum(int n, char axis, const std::vector<std::vector<int>> &groups, Rational weight,
                                 Rational scale_sq) {
    PauliOperator op;
    op.scale_sq = std::move(scale_sq);
    for (const auto &g : groups) {
        op.terms.emplace_back(weight, PauliString::on(n, axis, g));
    }
    return op;
}

namespace {

template <typename State>
State apply_string(const PauliString &p, const State &s) {
    if (p.ops.size() != static_cast<std::size_t>(s.n())) {
        throw std::invalid_argument("Pauli string length does not match qubit count");
    }
    State r = s;
    for (int q = 0; q < s.n(); ++q) {
        const char c = p.ops[static_cast<std::size_t>(q)];
        if (c != 'I') {
            r = pauli_apply(c, q, r);
        }
    }
    return r;
}

}  // namespace

std::vector<GaussRational> pauli_operator_image(const PauliOperator &op, const ExactState &s) {
    std::vector<GaussRational> out(s.dim());
    for (const auto &[w, p] : op.terms) {
        const ExactState img = apply_string(p, s);
        for (std::size_t k = 0; k < s.dim(); ++k) {
            if (!img.amps()[k].is_zero()) {
                out[k] = out[k] + GaussRational(w) * GaussRational(img.amps()[k]);
            }
        }
    }
    return out;
}

ExactState pauli_string_apply(const PauliOperator &op, const ExactState &s) {
    const std::vector<GaussRational> img = pauli_operator_image(op, s);
    const Integer l = lcm_of_denominators(img);
    ExactState r(s.n());
    for (std::size_t k = 0; k < img.size(); ++k) {
        const Rational re = img[k].re * l;
        const Rational im = img[k].im * l;
        r.set(static_cast<Ket>(k), GaussInt(re.get_num(), im.get_num()));
    }
    return r;
}

FloatState pauli_string_apply(const PauliOperator &op, const FloatState &s) {
    FloatState out(s.n());
    out.tolerance = s.tolerance;
    const double scale = std::sqrt(op.scale_sq.get_d());
    for (const auto &[w, p] : op.terms) {
        const FloatState img = apply_string(p, s);
        const double wd = w.get_d() * scale;
        for (std::size_t k = 0; k < s.dim(); ++k) {
            out.amps()[k] += wd * img.amps()[k];
        }
    }
    return out;
}

bool maps_to(const PauliOperator &op, const ExactState &s, const ExactState &t, const GaussRational &expected) {
    check_same_n(s.n(), t.n());
    if (s.is_zero() || t.is_zero()) {
        throw std::domain_error("maps_to: zero state");
    }
    const std::vector<GaussRational> v = pauli_operator_image(op, s);
    if (expected.is_zero()) {
        for (const GaussRational &z : v) {
            if (!z.is_zero()) {
                return false;
            }
        }
        return true;
    }
    // v must equal q * t for a single q.
    std::size_t pivot = 0;
    while (t.amps()[pivot].is_zero()) {
        ++pivot;
    }
    const GaussRational q = v[pivot] / GaussRational(t.amps()[pivot]);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!(v[k] == q * GaussRational(t.amps()[k]))) {
            return false;
        }
    }
    // q = expected * sqrt(Ns / (scale_sq * Nt)), a positive real multiple.
    const GaussRational phase = q * expected.conj();
    if (sgn(phase.im) != 0 || sgn(phase.re) <= 0) {
        return false;
    }
    return q.norm() * op.scale_sq * Rational(t.norm2()) == expected.norm() * Rational(s.norm2());
}

ExactState t_operator(int sign, const ExactState &s) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("t_operator sign must be +1 or -1");
    }
    ExactState r(s.n());
    const Ket top = static_cast<Ket>(s.dim() - 1);
    for (Ket k = 0; k < s.dim(); ++k) {
        const GaussInt &flipped = s.amp(top - k);
        r.set(k, sign > 0 ? s.amp(k) + flipped : s.amp(k) - flipped);
    }
    return r;
}

FloatState t_operator(int sign, const FloatState &s) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("t_operator sign must be +1 or -1");
    }
    FloatState r(s.n());
    r.tolerance = s.tolerance;
    const Ket top = static_cast<Ket>(s.dim() - 1);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Ket k = 0; k < s.dim(); ++k) {
        r.amps()[k] = inv_sqrt2 * (s.amp(k) + static_cast<double>(sign) * s.amp(top - k));
    }
    return r;
}

namespace {

std::vector<int> mask_members(QubitMask mask, int n) {
    std::vector<int> out;
    for (int q = 0; q < n; ++q) {
        if (mask & (1U << q)) {
            out.push_back(q);
        }
    }
    return out;
}

// 4 S^2 s = (3m - m(m-1)) s + 4 sum_{i<j} SWAP_ij s for the m qubits in mask.
template <typename State, typename Scale>
State four_s_squared(const State &s, QubitMask mask, Scale scale) {
    const std::vector<int> members = mask_members(mask, s.n());
    const long m = static_cast<long>(members.size());
    State acc = scale(s, 3 * m - m * (m - 1));
    for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
            const State swapped = apply_permutation(Permutation::transposition(s.n(), members[x], members[y]), s);
            const State term = scale(swapped, 4);
            for (std::size_t k = 0; k < s.dim(); ++k) {
                if constexpr (std::is_same_v<State, ExactState>) {
                    acc.add(static_cast<Ket>(k), term.amps()[k]);
                } else {
                    acc.amps()[k] += term.amps()[k];
                }
            }
        }
    }
    return acc;
}

std::optional<HalfInt> spin_from_casimir_exact(const Rational &c) {
    // c = 4 s (s + 1)  =>  (2s + 1)^2 = c + 1
    if (sgn(c) < 0 || c.get_den() != 1) {
        return std::nullopt;
    }
    const auto root = exact_sqrt(Integer(c.get_num() + 1));
    if (!root) {
        return std::nullopt;
    }
    return HalfInt::from_twice(root->get_si() - 1);
}

std::optional<HalfInt> spin_from_casimir_float(double c) {
    const double root = std::sqrt(std::max(0.0, c + 1.0));
    const long twice = std::lround(root) - 1;
    if (twice < 0 || std::abs(static_cast<double>((twice + 1) * (twice + 1)) - (c + 1.0)) > 1e-8) {
        return std::nullopt;
    }
    return HalfInt::from_twice(twice);
}

QubitMask all_qubits(int n) { return (QubitMask{1} << n) - 1; }

std::optional<HalfInt> subset_spin_float(const FloatState &s, QubitMask mask) {
    const auto scale = [](const FloatState &st, long k) {
        FloatState r = st;
        for (Complex &z : r.amps()) {
            z *= static_cast<double>(k);
        }
        return r;
    };
    const FloatState v = four_s_squared(s, mask, scale);
    const Complex c = inner_product(s, v) / std::norm(s.norm());
    double resid = 0.0;
    for (std::size_t k = 0; k < s.dim(); ++k) {
        resid += std::norm(v.amps()[k] - c * s.amps()[k]);
    }
    if (std::sqrt(resid) > 1e-8 * std::max(1.0, s.norm()) || std::abs(c.imag()) > 1e-8) {
        return std::nullopt;
    }
    return spin_from_casimir_float(c.real());
}

}  // namespace

std::optional<HalfInt> subset_spin(const ExactState &s, QubitMask mask) {
    if (s.is_zero()) {
        throw std::domain_error("spin of the zero vector");
    }
    const auto scale = [](const ExactState &st, long k) { return st.scaled(GaussInt(k)); };
    const ExactState v = four_s_squared(s, mask, scale);
    const auto c = ratio(s, v);
    if (!c || !c->is_real()) {
        return std::nullopt;
    }
    return spin_from_casimir_exact(c->re);
}

SpinLabels spin_labels(const ExactState &s, const std::vector<QubitMask> &subsets) {
    if (s.is_zero()) {
        throw std::domain_error("spin labels of the zero vector");
    }
    SpinLabels out;
    const std::vector<Ket> supp = s.support();
    const int w = hamming_weight(supp.front());
    bool same = true;
    for (Ket k : supp) {
        same = same && hamming_weight(k) == w;
    }
    if (same) {
        out.m_j = HalfInt::from_twice(s.n() - 2 * w);
    }
    out.j = subset_spin(s, all_qubits(s.n()));
    for (QubitMask m : subsets) {
        out.partial.push_back({m, subset_spin(s, m)});
    }
    return out;
}

SpinLabels spin_labels(const FloatState &s, const std::vector<QubitMask> &subsets) {
    if (s.is_zero()) {
        throw std::domain_error("spin labels of the zero vector");
    }
    SpinLabels out;
    const double tol = s.tolerance * std::max(1.0, s.norm());
    int w = -1;
    bool same = true;
    for (Ket k = 0; k < s.dim(); ++k) {
        if (std::abs(s.amp(k)) <= tol) {
            continue;
        }
        if (w < 0) {
            w = hamming_weight(k);
        }
        same = same && hamming_weight(k) == w;
    }
    if (same && w >= 0) {
        out.m_j = HalfInt::from_twice(s.n() - 2 * w);
    }
    out.j = subset_spin_float(s, all_qubits(s.n()));
    for (QubitMask m : subsets) {
        out.partial.push_back({m, subset_spin_float(s, m)});
    }
    return out;
}

std::vector<QubitMask> exchange_symmetric_groups(const ExactState &s) {
    const int n = s.n();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const ExactState swapped = apply_permutation(Permutation::transposition(n, i, j), s);
            const auto r = ratio(s, swapped);
            if (r && r->is_real() && (r->re == 1 || r->re == -1)) {
                parent[static_cast<std::size_t>(find(j))] = find(i);
            }
        }
    }
    std::vector<QubitMask> groups;
    for (int root = 0; root < n; ++root) {
        QubitMask m = 0;
        for (int q = 0; q < n; ++q) {
            if (find(q) == root) {
                m |= 1U << q;
            }
        }
        if (mask_size(m) >= 2) {
            groups.push_back(m);
        }
    }
    return groups;
}

std::optional<GaussRational> ExactOverlap::exact_value() const {
    const auto root = exact_sqrt(norm_product);
    if (!root) {
        return std::nullopt;
    }
    return GaussRational(raw) / GaussRational(Rational(*root));
}

Rational ExactOverlap::abs_squared() const {
    Rational r(raw.norm(), norm_product);
    r.canonicalize();
    return r;
}

Complex ExactOverlap::value() const { return raw.to_complex() / std::sqrt(norm_product.get_d()); }

ExactOverlap inner_product(const ExactState &s, const ExactState &t) {
    check_same_n(s.n(), t.n());
    GaussInt acc(0);
    for (std::size_t k = 0; k < s.dim(); ++k) {
        if (!s.amps()[k].is_zero() && !t.amps()[k].is_zero()) {
            acc += s.amps()[k].conj() * t.amps()[k];
        }
    }
    return {acc, s.norm2() * t.norm2()};
}

Complex inner_product(const FloatState &s, const FloatState &t) {
    check_same_n(s.n(), t.n());
    return active_kernels().dotc(s.amps().data(), t.amps().data(), s.dim());
}

}  // namespace symtangle
