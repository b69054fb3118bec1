#include "catgen/oracles.hpp"

#include <cmath>

namespace catgen {
namespace oracles {

using hilbert::Subsystem;

namespace {
constexpr double pi = two_pi / 2.0;
constexpr double sqrt3 = 1.7320508075688772;
}

DressedQubitBasis dressed_qubit_basis(double Omega, double Delta) {
    if (Omega < 0) throw std::invalid_argument("dressed_qubit_basis: Omega < 0");
    if (Omega == 0 && Delta == 0)
        throw std::invalid_argument("dressed_qubit_basis: Omega = Delta = 0");
    DressedQubitBasis b;
    b.theta = std::atan2(Omega, Delta);
    b.epsilon = std::hypot(Omega, Delta);
    double c = std::cos(0.5 * b.theta), s = std::sin(0.5 * b.theta);
    b.plus_state << s, c;
    b.minus_state << c, -s;
    return b;
}

Complex alpha_resonant(double t, double g, double delta) {
    const Complex i(0, 1);
    double x = delta * t;
    if (std::abs(x) < 1e-6) {
        // -g(e^{ix}-1)/(2 delta) = -(i g t/2)(1 + ix/2 - x^2/6 + ...)
        return -0.5 * i * g * t * (1.0 + 0.5 * i * x - x * x / 6.0);
    }
    return -g * (std::polar(1.0, x) - 1.0) / (2.0 * delta);
}

Complex alpha_detuned(double t, double g, double Omega, double Delta, double delta) {
    if (Omega == 0 && Delta == 0)
        throw std::invalid_argument("alpha_detuned: Omega = Delta = 0");
    double eps = std::hypot(Omega, Delta);
    return (Omega / eps) * alpha_resonant(t, g, delta);
}

QutritDressedBasis qutrit_dark_basis(double Omega1) {
    if (Omega1 < 0) throw std::invalid_argument("qutrit_dark_basis: Omega1 < 0");
    QutritDressedBasis b;
    double lam = 0.5 * sqrt3 * Omega1;
    b.eigenvalues = {lam, 0.0, -lam};
    const double is3 = 1.0 / sqrt3, is2 = 1.0 / std::sqrt(2.0);
    // columns: v+, v0, v-
    b.eigenvectors.col(0) << is3 * is2, is3 * std::sqrt(1.5), is3;
    b.eigenvectors.col(1) << -std::sqrt(2.0) * is3, 0.0, is3;
    b.eigenvectors.col(2) << is3 * is2, -is3 * std::sqrt(1.5), is3;
    b.normalizers = {1.0, 1.0, 1.0};
    return b;
}

QutritDressedBasis cubic_dressed_eigs(double Omega1, double Omega2, double Sigma) {
    if (Omega1 < 0 || Omega2 < 0)
        throw std::invalid_argument("cubic_dressed_eigs: drive strengths < 0");
    const double a = -0.5 * Sigma;
    const double b = -0.25 * (Omega1 * Omega1 + Omega2 * Omega2);
    const double c = 0.125 * Sigma * Omega1 * Omega1;
    const double scale = std::max({std::abs(Omega1), std::abs(Omega2), std::abs(Sigma)});
    const double p = std::sqrt(std::max(0.0, a * a - 3.0 * b));
    if (p <= 1e-14 * std::max(scale, 1.0))
        throw std::invalid_argument(
            "cubic_dressed_eigs: triply degenerate dressed spectrum (p = 0)");
    double ct = -(27.0 * c + 2.0 * a * a * a - 9.0 * a * b) / (2.0 * p * p * p);
    if (std::abs(ct) > 1.0) {
        if (std::abs(ct) > 1.0 + 1e-9)
            throw std::domain_error("cubic_dressed_eigs: cos(theta) = " +
                                    std::to_string(ct) + " outside [-1, 1]");
        ct = std::clamp(ct, -1.0, 1.0);
    }
    const double theta = std::acos(ct);
    std::array<double, 3> lam = {
        -a / 3.0 + (2.0 * p / 3.0) * std::cos(theta / 3.0),
        -a / 3.0 - (2.0 * p / 3.0) * std::cos(theta / 3.0 + pi / 3.0),
        -a / 3.0 - (2.0 * p / 3.0) * std::cos(theta / 3.0 - pi / 3.0)};
    std::sort(lam.begin(), lam.end(), std::greater<double>());

    QutritDressedBasis basis;
    basis.eigenvalues = lam;
    for (int k = 0; k < 3; ++k) {
        const double l = lam[k];
        const double lmS = l - 0.5 * Sigma;
        Eigen::Vector3d v(Omega1 * lmS, 2.0 * l * lmS, l * Omega2);
        double norm = v.norm();
        basis.normalizers[k] =
            std::sqrt(l * l * Omega2 * Omega2 +
                      (4.0 * l * l + Omega1 * Omega1) * lmS * lmS);
        if (norm <= 1e-9 * scale * scale) {
            // parametrization degenerates (decoupled level or dark state):
            // take the dense eigenvector of the matching eigenvalue instead
            Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
            h(0, 1) = h(1, 0) = 0.5 * Omega1;
            h(1, 2) = h(2, 1) = 0.5 * Omega2;
            h(2, 2) = 0.5 * Sigma;
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(h);
            int best = 0;
            for (int j = 1; j < 3; ++j)
                if (std::abs(es.eigenvalues()(j) - l) <
                    std::abs(es.eigenvalues()(best) - l))
                    best = j;
            v = es.eigenvectors().col(best);
            basis.normalizers[k] = 0.0;
            norm = 1.0;
        }
        basis.eigenvectors.col(k) = (v / norm).cast<Complex>();
    }
    return basis;
}

std::array<double, 3> effective_couplings(const QutritDressedBasis& basis, double g1,
                                          double g2, double Omega1, double Omega2,
                                          double Sigma) {
    std::array<double, 3> gk{};
    for (int k = 0; k < 3; ++k) {
        const double l = basis.eigenvalues[k];
        const double lmS = l - 0.5 * Sigma;
        const double N = basis.normalizers[k];
        if (N > 0) {
            gk[k] = 2.0 * l * lmS * (g1 * Omega1 * lmS + g2 * Omega2 * l) / (N * N);
            continue;
        }
        // degenerate parametrization: evaluate <v|(g1 s1+ + g2 s2+)|v> directly
        Eigen::Vector3cd v = basis.eigenvectors.col(k);
        double norm = v.norm();
        if (norm < 1e-12)
            throw std::invalid_argument("effective_couplings: null eigenvector (N_k = 0)");
        Complex val = g1 * std::conj(v(1)) * v(0) + g2 * std::conj(v(2)) * v(1);
        gk[k] = val.real() / (norm * norm);
    }
    return gk;
}

double photon_envelope(double t, double g, double Omega, double Delta, double kappa) {
    if (kappa < 0) throw std::invalid_argument("photon_envelope: kappa < 0");
    double scale = 1.0;
    if (Delta != 0.0) {
        double eps = std::hypot(Omega, Delta);
        scale = (Omega / eps) * (Omega / eps);
    }
    return 0.25 * g * g * t * t * std::exp(-kappa * t) * scale;
}

double envelope_peak_time(double kappa) {
    if (kappa < 0) throw std::invalid_argument("envelope_peak_time: kappa < 0");
    if (kappa == 0) return std::numeric_limits<double>::infinity();
    return 2.0 / kappa;
}

double qcmap_cat_size(double chi, double t) {
    double x = chi * t - pi;
    return x <= 0 ? 0.0 : 7.5 * x;
}

namespace {

/// Unnormalized coherent amplitudes e^{-|a|^2/2} a^n / sqrt(n!).
Vector coherent_amplitudes(Complex alpha, int N) {
    Vector v(N);
    v(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < N; ++n) v(n) = v(n - 1) * alpha / std::sqrt(double(n));
    return v;
}

QuantumState joint_from_atom_coherent(
    const std::vector<std::pair<Eigen::VectorXcd, Complex>>& branches,
    const SpaceDescriptor& space) {
    // branches: (atom vector, coherent amplitude); overall norm fixed by the
    // orthonormality of the atom vectors
    const int N = space.fock_cutoff;
    Vector psi = Vector::Zero(space.dim());
    for (const auto& [atom, alpha] : branches) {
        hilbert::require_displacement_fits(alpha, space, "analytic_state");
        Vector coh = coherent_amplitudes(alpha, N);
        for (int k = 0; k < space.atom_levels; ++k)
            psi.segment(k * N, N) += atom(k) * coh;
    }
    psi.normalize();
    QuantumState s = hilbert::pure_state(std::move(psi), space);
    // headroom check on the resonator content
    QuantumState probe = s;
    hilbert::require_fock_headroom(probe, "analytic_state");
    return s;
}

}  // namespace

QuantumState analytic_cat(Complex alpha, int sign, const SpaceDescriptor& space) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("analytic_cat: sign must be +1 (even) or -1 (odd)");
    hilbert::require_displacement_fits(alpha, space, "analytic_cat");
    const int N = space.fock_cutoff;
    Vector plus = coherent_amplitudes(alpha, N);
    Vector minus = coherent_amplitudes(-alpha, N);
    double a2 = std::norm(alpha);
    double norm = std::sqrt(2.0 * (1.0 + sign * std::exp(-2.0 * a2)));
    Vector cat = (plus + double(sign) * minus) / norm;
    QuantumState s;
    s.kind = hilbert::StateKind::Pure;
    s.vec = std::move(cat);
    s.space = space;
    s.part = Subsystem::Resonator;
    double drift = std::abs(s.vec.norm() - 1.0);
    if (drift > 1e-9)
        throw CutoffError("analytic_cat: truncated norm off by " + std::to_string(drift));
    hilbert::require_fock_headroom(s, "analytic_cat");
    return s;
}

QuantumState analytic_state(const AnalyticRecipe& r, double t) {
    using Kind = AnalyticRecipe::Kind;
    const SpaceDescriptor& space = r.space;
    const double is2 = 1.0 / std::sqrt(2.0);

    switch (r.kind) {
        case Kind::QubitResonant: {
            Complex alpha = alpha_resonant(t, r.qubit.g, r.qubit.delta());
            Eigen::VectorXcd plus(2), minus(2);
            plus << is2, is2;
            minus << is2, -is2;
            return joint_from_atom_coherent(
                {{is2 * plus, alpha}, {is2 * minus, -alpha}}, space);
        }
        case Kind::QubitDetuned: {
            auto b = dressed_qubit_basis(r.qubit.Omega, r.qubit.Delta());
            Complex alpha = alpha_detuned(t, r.qubit.g, r.qubit.Omega, r.qubit.Delta(),
                                          r.qubit.delta());
            Complex cp = std::sin(0.5 * b.theta), cm = std::cos(0.5 * b.theta);
            Eigen::VectorXcd vp = b.plus_state, vm = b.minus_state;
            return joint_from_atom_coherent({{cp * vp, alpha}, {cm * vm, -alpha}},
                                            space);
        }
        case Kind::QubitEncode: {
            Complex alpha = alpha_resonant(t, r.qubit.g, r.qubit.delta());
            Eigen::VectorXcd plus(2), minus(2);
            plus << is2, is2;
            minus << is2, -is2;
            return joint_from_atom_coherent(
                {{r.c_g * plus, alpha}, {r.c_e * minus, -alpha}}, space);
        }
        case Kind::QutritFromG0:
        case Kind::QutritFromE0:
        case Kind::QutritEncode: {
            if (space.atom_levels != 3)
                throw std::invalid_argument("analytic_state: qutrit recipe on qubit space");
            auto b = qutrit_dark_basis(r.qutrit.Omega1);
            Complex alpha = alpha_resonant(t, sqrt3 * r.qutrit.g1, r.qutrit.delta());
            Eigen::VectorXcd vp = b.eigenvectors.col(0), v0 = b.eigenvectors.col(1),
                             vm = b.eigenvectors.col(2);
            if (r.kind == Kind::QutritFromG0) {
                // |g,0> = -sqrt(2/3)|v0> + (|v+> + |v->)/sqrt6
                Complex c0 = -std::sqrt(2.0 / 3.0), cpm = 1.0 / std::sqrt(6.0);
                return joint_from_atom_coherent(
                    {{c0 * v0, 0.0}, {cpm * vp, alpha}, {cpm * vm, -alpha}}, space);
            }
            if (r.kind == Kind::QutritFromE0) {
                // |e,0> = (|v+> - |v->)/sqrt2
                return joint_from_atom_coherent(
                    {{is2 * vp, alpha}, {-is2 * vm, -alpha}}, space);
            }
            return joint_from_atom_coherent(
                {{r.c_g * vp, alpha}, {r.c_e * vm, -alpha}}, space);
        }
        case Kind::ArbitraryAnharmonic: {
            if (space.atom_levels != 3)
                throw std::invalid_argument("analytic_state: qutrit recipe on qubit space");
            auto b = cubic_dressed_eigs(r.qutrit.Omega1, r.qutrit.Omega2,
                                        r.qutrit.Sigma());
            auto gk = effective_couplings(b, r.qutrit.g1, r.qutrit.g2, r.qutrit.Omega1,
                                          r.qutrit.Omega2, r.qutrit.Sigma());
            std::vector<std::pair<Eigen::VectorXcd, Complex>> branches;
            for (int k = 0; k < 3; ++k)
                branches.push_back({r.coeffs[k] * b.eigenvectors.col(k),
                                    alpha_resonant(t, gk[k], r.qutrit.delta())});
            return joint_from_atom_coherent(branches, space);
        }
    }
    throw std::logic_error("analytic_state: unreachable");
}

}  // namespace oracles
}  // namespace catgen
