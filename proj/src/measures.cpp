#include "symtangle/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symtangle/linalg.hpp"

namespace symtangle {

namespace {

SubsystemMask all_qubits(int n) { return (SubsystemMask{1} << n) - 1; }

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) {
        throw std::out_of_range("qubit index out of range");
    }
}

// sigma_y (x) sigma_y is real: -1 on the anti-diagonal corners, +1 inside.
double yy(std::size_t r, std::size_t c) {
    if (r + c != 3) {
        return 0.0;
    }
    return (r == 0 || r == 3) ? -1.0 : 1.0;
}

double from_descending(std::vector<double> sv) {
    std::sort(sv.begin(), sv.end(), std::greater<>());
    sv.resize(4, 0.0);
    return std::max(0.0, sv[0] - sv[1] - sv[2] - sv[3]);
}

// Given rho = W W^H (W is 4 x r), the Wootters lambdas are the singular
// values of tau = W^T Y W, read off the Hermitian dilation [[0, tau], [tau^H, 0]].
double wootters_from_factor(const CMatrix &w) {
    const std::size_t r = w.cols();
    CMatrix tau(r, r);
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
            Complex acc{0.0, 0.0};
            for (std::size_t row = 0; row < 4; ++row) {
                acc += w(row, a) * yy(row, 3 - row) * w(3 - row, b);
            }
            tau(a, b) = acc;
        }
    }
    CMatrix dilation(2 * r, 2 * r);
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
            dilation(a, r + b) = tau(a, b);
            dilation(r + b, a) = std::conj(tau(a, b));
        }
    }
    const EigenDecomposition eig = hermitian_eigen(dilation);
    std::vector<double> sv(eig.values.end() - static_cast<std::ptrdiff_t>(r), eig.values.end());
    for (double &v : sv) {
        v = std::max(0.0, v);
    }
    return from_descending(sv);
}

int sign_of(double det, const std::optional<Rational> &exact) {
    if (exact) {
        return sgn(*exact);
    }
    if (std::abs(det) < 1e-12) {
        return 0;
    }
    return det < 0 ? -1 : 1;
}

bool purity_is_one(const PmEntry &e) {
    if (e.exact_tr_rho2) {
        return *e.exact_tr_rho2 == 1;
    }
    return !e.below_one;
}

}  // namespace

PureInput PureInput::from(const ExactState &s) {
    if (s.is_zero()) {
        throw std::domain_error("state is the zero vector");
    }
    return PureInput{s.to_float().normalized(), s, density_from_pure(s)};
}

PureInput PureInput::from(const FloatState &s) {
    FloatState u = s.normalized();
    DensityMatrix rho = density_from_pure(u);
    return PureInput{std::move(u), std::nullopt, std::move(rho)};
}

double concurrence(const DensityMatrix &rho2) {
    if (rho2.n() != 2) {
        throw std::invalid_argument("concurrence needs a two-qubit matrix");
    }
    // Factor rho = W W^H from its spectrum. Eigenvalues at round-off level are
    // dropped: their square roots (~1e-8) would otherwise leak into lambda.
    const EigenDecomposition eig = hermitian_eigen(rho2.values());
    const double cutoff = 1e-14 * std::max(1.0, eig.values.back());
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
        if (eig.values[k] > cutoff) {
            kept.push_back(k);
        }
    }
    if (kept.empty()) {
        throw std::invalid_argument("concurrence of a zero matrix");
    }
    CMatrix w(4, kept.size());
    for (std::size_t c = 0; c < kept.size(); ++c) {
        const double scale = std::sqrt(eig.values[kept[c]]);
        for (std::size_t row = 0; row < 4; ++row) {
            w(row, c) = eig.vectors(row, kept[c]) * scale;
        }
    }
    return wootters_from_factor(w);
}

double concurrence_pair(const DensityMatrix &rho, int j, int k) {
    const int n = rho.n();
    check_qubit(j, n);
    check_qubit(k, n);
    if (j == k) {
        throw std::invalid_argument("concurrence needs two distinct qubits");
    }
    if (n == 2) {
        return concurrence(rho);
    }
    const SubsystemMask keep = (1U << j) | (1U << k);
    return concurrence(partial_trace(rho, all_qubits(n) & ~keep));
}

double concurrence_pair(const PureInput &s, int j, int k) {
    const int n = s.n();
    check_qubit(j, n);
    check_qubit(k, n);
    if (j == k) {
        throw std::invalid_argument("concurrence needs two distinct qubits");
    }
    // rho_jk = M M^H with M indexed by (pair bits, remaining bits).
    const std::size_t r = std::size_t{1} << (n - 2);
    CMatrix m(4, r);
    for (Ket ket = 0; ket < s.state.dim(); ++ket) {
        const std::size_t row = static_cast<std::size_t>(2 * ket_bit(ket, j, n) + ket_bit(ket, k, n));
        std::size_t col = 0;
        for (int q = 0; q < n; ++q) {
            if (q != j && q != k) {
                col = (col << 1) | static_cast<std::size_t>(ket_bit(ket, q, n));
            }
        }
        m(row, col) = s.state.amp(ket);
    }
    return wootters_from_factor(m);
}

SplitConcurrence concurrence_split(const PureInput &s, int qubit) {
    const int n = s.n();
    check_qubit(qubit, n);
    if (n < 2) {
        throw std::invalid_argument("split concurrence needs at least two qubits");
    }
    const DensityMatrix one = partial_trace(s.rho, all_qubits(n) & ~(1U << qubit));
    const CMatrix &v = one.values();
    SplitConcurrence out;
    const double det = (v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0)).real();
    out.squared = std::max(0.0, 4.0 * det);
    out.value = std::sqrt(out.squared);
    out.purity_route = std::max(0.0, 2.0 * (1.0 - purity(one).tr_rho2));
    if (std::abs(out.squared - out.purity_route) > 1e-10) {
        throw std::logic_error("determinant and purity routes disagree for C_I(rest)");
    }
    if (one.exact()) {
        const GaussRational d = determinant(*one.exact());
        out.exact_squared = Rational(4 * d.re);
    }
    return out;
}

ThreeTangle three_tangle(const PureInput &s) {
    if (s.n() != 3) {
        throw std::invalid_argument("the 3-tangle needs exactly three qubits");
    }
    ThreeTangle out;
    for (int f = 0; f < 3; ++f) {
        const int g = (f + 1) % 3;
        const int h = (f + 2) % 3;
        const double cfg = concurrence_pair(s, f, g);
        const double cfh = concurrence_pair(s, f, h);
        out.per_focus[static_cast<std::size_t>(f)] = concurrence_split(s, f).squared - cfg * cfg - cfh * cfh;
    }
    const auto [lo, hi] = std::minmax_element(out.per_focus.begin(), out.per_focus.end());
    if (*hi - *lo > 1e-10) {
        throw std::logic_error("3-tangle depends on the focus qubit");
    }
    out.raw = out.per_focus[0];
    out.value = std::clamp(out.raw, 0.0, 1.0);
    return out;
}

double e_tau(const PureInput &s) {
    if (s.n() != 3) {
        throw std::invalid_argument("E_tau needs exactly three qubits");
    }
    double sum = 0.0;
    for (auto [j, k] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        const double c = concurrence_pair(s, j, k);
        sum += c * c;
    }
    return sum;
}

NTangle n_tangle(const PureInput &s) {
    const int n = s.n();
    if (n == 3) {
        return NTangle{three_tangle(s).value, std::nullopt};
    }
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("the n-tangle is defined for n = 2, 3 and even n");
    }
    const Ket flip = static_cast<Ket>(all_qubits(n));
    NTangle out;
    Complex acc{0.0, 0.0};
    for (Ket k = 0; k < s.state.dim(); ++k) {
        const double sign = hamming_weight(k) % 2 ? -1.0 : 1.0;
        acc += sign * s.state.amp(k) * s.state.amp(k ^ flip);
    }
    out.value = std::norm(acc);
    if (s.exact) {
        GaussInt raw;
        for (Ket k = 0; k < s.exact->dim(); ++k) {
            const GaussInt term = s.exact->amp(k) * s.exact->amp(k ^ flip);
            if (hamming_weight(k) % 2) {
                raw -= term;
            } else {
                raw += term;
            }
        }
        const Integer norm2 = s.exact->norm2();
        Rational v(raw.norm(), norm2 * norm2);
        v.canonicalize();
        out.exact = v;
    }
    return out;
}

PhSplit ph_split(const DensityMatrix &rho, SubsystemMask mask) {
    const DensityMatrix t = partial_transpose(rho, mask);
    const SpectralSummary sum = spectral_summary(t);
    PhSplit out;
    out.mask = mask;
    out.min_eig = sum.min_eig;
    out.det = sum.det;
    out.exact_det = sum.exact_det;
    out.equals_rho = same_matrix(t, rho);
    out.negative = sum.exact_det ? sgn(*sum.exact_det) < 0 : sum.min_eig < kNegativityThreshold;
    return out;
}

PhResult ph_test(const DensityMatrix &rho) {
    PhResult out;
    for (SubsystemMask m : split_representatives(rho.n())) {
        out.splits.push_back(ph_split(rho, m));
        out.any_negative = out.any_negative || out.splits.back().negative;
    }
    return out;
}

PmEntry pm_entry(const DensityMatrix &rho, SubsystemMask traced) {
    const Purity p = purity(partial_trace(rho, traced));
    PmEntry out;
    out.traced = traced;
    out.tr_rho2 = p.tr_rho2;
    out.exact_tr_rho2 = p.exact_tr_rho2;
    if (p.exact_tr_rho2) {
        out.below_one = *p.exact_tr_rho2 < 1;
    } else {
        out.below_one = p.tr_rho2 < 1.0 - kPurityMargin;
        out.boundary = !out.below_one && std::abs(p.tr_rho2 - 1.0) > 1e-14;
    }
    return out;
}

PmResult pm_test(const PureInput &s) {
    PmResult out;
    out.entangled = true;
    for (SubsystemMask m : proper_subsystems(s.n())) {
        out.entries.push_back(pm_entry(s.rho, m));
        out.entangled = out.entangled && out.entries.back().below_one;
    }
    return out;
}

int default_remainder_qubit(int n, SubsystemMask traced) {
    if (n - mask_size(traced) < 2) {
        return -1;
    }
    for (int q = 0; q < n; ++q) {
        if (!(traced & (1U << q))) {
            return q;
        }
    }
    return -1;
}

Remainder remainder_test(const DensityMatrix &rho, SubsystemMask traced, int j) {
    const int n = rho.n();
    check_qubit(j, n);
    if (traced & (1U << j)) {
        throw std::invalid_argument("transposed qubit must survive the partial trace");
    }
    if (n - mask_size(traced) < 2) {
        throw std::invalid_argument("remainder test needs at least two remaining qubits");
    }
    const DensityMatrix reduced = partial_trace(rho, traced);
    const DensityMatrix t = partial_transpose(reduced, 1U << reduced_position(j, traced));
    const SpectralSummary sum = spectral_summary(t);
    Remainder out;
    out.traced = traced;
    out.j = j;
    out.equals = same_matrix(t, reduced);
    out.det = sum.det;
    out.exact_det = sum.exact_det;
    out.det_sign = sign_of(sum.det, sum.exact_det);
    return out;
}

Classification classify(const PureInput &s) {
    const PhResult ph = ph_test(s.rho);
    const PmResult pm = pm_test(s);
    Classification out;
    const std::vector<SubsystemMask> reps = split_representatives(s.n());
    for (SubsystemMask m : reps) {
        if (purity_is_one(pm_entry(s.rho, m))) {
            out.separable_splits.push_back(m);
        }
    }
    if (out.separable_splits.size() == reps.size()) {
        out.label = "product";
    } else if (ph.any_negative) {
        out.label = "NPT-entangled";
    } else if (pm.entangled) {
        out.label = "bound-entangled";
    } else {
        out.label = "separable-splits";
    }
    return out;
}

Compatibility compatibility(const PureInput &big, const std::vector<Candidate> &candidates) {
    if (candidates.empty()) {
        throw std::invalid_argument("compatibility needs at least one candidate");
    }
    const int n = big.n();
    for (const Candidate &c : candidates) {
        if (c.state.n() + 1 != n) {
            throw std::invalid_argument("candidate " + c.id + " must have one qubit fewer than the state");
        }
    }
    Compatibility out;
    std::vector<bool> hit(candidates.size(), false);
    for (int q = 0; q < n; ++q) {
        const DensityMatrix reduced = partial_trace(big.rho, 1U << q);
        CompatibilityMatch match{q, {}};
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const FloatState sigma = candidates[i].state.normalized();
            Complex overlap{0.0, 0.0};
            for (std::size_t r = 0; r < reduced.dim(); ++r) {
                for (std::size_t c = 0; c < reduced.dim(); ++c) {
                    overlap += std::conj(sigma.amps()[r]) * reduced(r, c) * sigma.amps()[c];
                }
            }
            if (overlap.real() > kOverlapThreshold) {
                match.matched.push_back(candidates[i].id);
                hit[i] = true;
            }
        }
        out.per_qubit.push_back(std::move(match));
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (hit[i]) {
            out.matched.push_back(candidates[i].id);
        }
    }
    return out;
}

SplitEntry split_entry(const DensityMatrix &rho, SubsystemMask mask) {
    SplitEntry out;
    out.mask = mask;
    out.transpose = ph_split(rho, mask);
    out.purity = pm_entry(rho, mask);
    const int j = default_remainder_qubit(rho.n(), mask);
    if (j >= 0) {
        out.remainder = remainder_test(rho, mask, j);
    }
    return out;
}

EntanglementReport analyze(const PureInput &s, const std::string &id) {
    const int n = s.n();
    if (n < 2) {
        throw std::invalid_argument("analysis needs at least two qubits");
    }
    EntanglementReport out;
    out.id = id;
    out.n = n;
    out.is_pure = purity(s.rho).is_pure;
    for (SubsystemMask m : split_representatives(n)) {
        out.splits.push_back(split_entry(s.rho, m));
        out.any_negative = out.any_negative || out.splits.back().transpose.negative;
    }
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            out.pairs.push_back({j, k, concurrence_pair(s, j, k)});
        }
        out.singles.push_back(concurrence_split(s, j));
    }
    if (n == 3) {
        out.e_tau = e_tau(s);
        out.tau3 = three_tangle(s);
    }
    if (n % 2 == 0) {
        out.tau_n = n_tangle(s);
    }
    out.pm_entangled = pm_test(s).entangled;
    out.classification = classify(s);
    return out;
}

}  // namespace symtangle
