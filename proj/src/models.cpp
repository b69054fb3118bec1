#include "catgen/models.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace catgen {
namespace models {

using hilbert::Selection;
using hilbert::Subsystem;

namespace {

constexpr double sqrt2 = 1.4142135623730951;

bool rel_close(double a, double b, double tol) {
    double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 || std::abs(a - b) <= tol * scale;
}

SparseMatrix to_sparse(const Matrix& m) {
    return m.sparseView(1.0, 1e-300);
}

/// Collects A e^{iwt} T terms; add_pair appends a term and its conjugate.
class TermAccumulator {
public:
    explicit TermAccumulator(SpaceDescriptor space) : space_(space) {}

    void add(Complex amplitude, double rate, const Matrix& op) {
        if (std::abs(amplitude) == 0.0) return;
        terms_.push_back({amplitude, rate, to_sparse(op)});
    }
    /// A e^{iwt} T + conj(A) e^{-iwt} T^dag
    void add_pair(Complex amplitude, double rate, const Matrix& op) {
        add(amplitude, rate, op);
        add(std::conj(amplitude), -rate, Matrix(op.adjoint()));
    }
    /// Static Hermitian piece.
    void add_static(const Matrix& op) { add(1.0, 0.0, op); }
    /// amp * cos(w t + phase) * T for Hermitian T.
    void add_cosine(double amp, double rate, double phase, const Matrix& op) {
        add_pair(0.5 * amp * std::polar(1.0, phase), rate, op);
    }

    TimeDependentHamiltonian build(double max_freq, const std::string& name) {
        return TimeDependentHamiltonian(space_, std::move(terms_), max_freq, name);
    }

private:
    SpaceDescriptor space_;
    std::vector<HamiltonianTerm> terms_;
};

struct QubitOps {
    Matrix sz, sp, sm, a, ad, n, id;
};

QubitOps qubit_ops(const SpaceDescriptor& space) {
    using namespace hilbert;
    QubitOps o;
    auto t = atom_transition_ops(space, Selection::Cascade);
    o.sz = tensor(sigma_z(space), identity_on(space, Subsystem::Resonator)).mat;
    o.sp = tensor(t.raise1, identity_on(space, Subsystem::Resonator)).mat;
    o.sm = tensor(t.lower1, identity_on(space, Subsystem::Resonator)).mat;
    o.a = annihilation(space).mat;
    o.ad = creation(space).mat;
    o.n = number(space).mat;
    o.id = Matrix::Identity(space.dim(), space.dim());
    return o;
}

Matrix dressed_projector_difference(const SpaceDescriptor& space, double theta) {
    // |+~><+~| - |-~><-~| on the atom factor; theta = pi/2 is the resonant |+->.
    Eigen::Vector2cd plus(std::sin(theta / 2), std::cos(theta / 2));
    Eigen::Vector2cd minus(std::cos(theta / 2), -std::sin(theta / 2));
    Matrix m = plus * plus.adjoint() - minus * minus.adjoint();
    auto op = hilbert::make_operator(m, space, Subsystem::Atom);
    return hilbert::tensor(op, hilbert::identity_on(space, Subsystem::Resonator)).mat;
}

void require_two_level(const SpaceDescriptor& space, const char* who) {
    if (space.atom_levels != 2)
        throw std::invalid_argument(std::string(who) + ": needs a 2-level atom");
}

void require_three_level(const SpaceDescriptor& space, const char* who) {
    if (space.atom_levels != 3)
        throw std::invalid_argument(std::string(who) + ": needs a 3-level atom");
}

void require_resonant(double Delta, double scale, const char* who) {
    if (std::abs(Delta) > 1e-9 * std::max(scale, 1.0))
        throw std::invalid_argument(std::string(who) +
                                    ": derivation assumes Delta = 0, got Delta = " +
                                    std::to_string(Delta));
}

}  // namespace

void QubitParams::validate() const {
    if (omega_q <= 0 || omega_r <= 0 || omega_d <= 0)
        throw std::invalid_argument("QubitParams: base frequencies must be > 0");
    if (g < 0 || Omega < 0)
        throw std::invalid_argument("QubitParams: couplings must be >= 0");
}

bool QutritParams::is_harmonic_toy(double rel_tol) const {
    return std::abs(tilde_chi()) <= rel_tol * std::max(omega_d, 1.0) &&
           rel_close(g2, sqrt2 * g1, rel_tol) &&
           rel_close(Omega2, sqrt2 * Omega1, rel_tol);
}

bool QutritParams::has_matched_coupling_ratio(double rel_tol) const {
    // g1/g2 == Omega1/Omega2, cross-multiplied to dodge division by zero
    return rel_close(g1 * Omega2, g2 * Omega1,
                     rel_tol);
}

void QutritParams::validate() const {
    if (omega_eg <= 0 || omega_fe <= 0 || omega_r <= 0 || omega_d <= 0)
        throw std::invalid_argument("QutritParams: base frequencies must be > 0");
    if (g1 < 0 || g2 < 0 || Omega1 < 0 || Omega2 < 0)
        throw std::invalid_argument("QutritParams: couplings must be >= 0");
}

void DecoherenceParams::validate() const {
    if (gamma1 < 0 || gamma_phi < 0 || kappa < 0)
        throw std::invalid_argument("DecoherenceParams: rates must be >= 0");
}

void SpuriousDriveParams::validate() {
    if (omega_prime < 0 || omega_c < 0)
        throw std::invalid_argument("SpuriousDriveParams: strengths must be >= 0");
    auto wrap = [](double phi) {
        phi = std::fmod(phi, two_pi);
        return phi < 0 ? phi + two_pi : phi;
    };
    phi_prime = wrap(phi_prime);
    phi_c = wrap(phi_c);
}

TimeDependentHamiltonian::TimeDependentHamiltonian(SpaceDescriptor space,
                                                   std::vector<HamiltonianTerm> terms,
                                                   double suggested_max_angular_frequency,
                                                   const std::string& builder_name)
    : space_(space), terms_(std::move(terms)) {
    max_angular_frequency_ = suggested_max_angular_frequency;
    for (const auto& t : terms_) {
        if (t.angular_rate != 0.0) is_static_ = false;
        max_angular_frequency_ = std::max(max_angular_frequency_, std::abs(t.angular_rate));
        double row_sum = 0;
        for (int k = 0; k < t.op.outerSize(); ++k) {
            double r = 0;
            for (SparseMatrix::InnerIterator it(t.op, k); it; ++it) r += std::abs(it.value());
            row_sum = std::max(row_sum, r);
        }
        norm_bound_ += std::abs(t.amplitude) * row_sum;
    }
    // Hermiticity spot-check at 16 deterministic pseudo-random times.
    std::mt19937 rng(0x51c0ffee);
    double horizon = is_static_ ? 1.0 : two_pi / max_angular_frequency_;
    std::uniform_real_distribution<double> dist(0.0, 16.0 * horizon);
    for (int k = 0; k < 16; ++k) {
        Matrix h = evaluate(dist(rng)).mat;
        double scale = std::max(hilbert::max_abs(h), 1e-300);
        if (hilbert::max_abs(h - h.adjoint()) > 1e-11 * scale)
            throw std::logic_error(builder_name + ": evaluator is not Hermitian");
        if (is_static_) break;
    }
}

Operator TimeDependentHamiltonian::evaluate(double t) const {
    Matrix h = Matrix::Zero(space_.dim(), space_.dim());
    for (const auto& term : terms_) {
        Complex c = term.amplitude;
        if (term.angular_rate != 0.0) c *= std::polar(1.0, term.angular_rate * t);
        h += c * Matrix(term.op);
    }
    return hilbert::make_operator(std::move(h), space_, Subsystem::Joint);
}

Matrix TimeDependentHamiltonian::static_part() const {
    Matrix h = Matrix::Zero(space_.dim(), space_.dim());
    for (const auto& term : terms_)
        if (term.angular_rate == 0.0) h += term.amplitude * Matrix(term.op);
    return h;
}

void TimeDependentHamiltonian::apply(double t, const Vector& v, Vector& out) const {
    out.setZero(v.size());
    for (const auto& term : terms_) {
        Complex c = term.amplitude;
        if (term.angular_rate != 0.0) c *= std::polar(1.0, term.angular_rate * t);
        out.noalias() += c * (term.op * v);
    }
}

void TimeDependentHamiltonian::apply_left(double t, const Matrix& rho, Matrix& out) const {
    out.setZero(rho.rows(), rho.cols());
    for (const auto& term : terms_) {
        Complex c = term.amplitude;
        if (term.angular_rate != 0.0) c *= std::polar(1.0, term.angular_rate * t);
        out.noalias() += c * (term.op * rho);
    }
}

TimeDependentHamiltonian build_driven_qrm_lab(const QubitParams& p,
                                              const SpaceDescriptor& space) {
    require_two_level(space, "build_driven_qrm_lab");
    p.validate();
    auto o = qubit_ops(space);
    TermAccumulator acc(space);
    acc.add_static(0.5 * p.omega_q * o.sz + p.omega_r * o.n +
                   p.g * (o.sp + o.sm) * (o.ad + o.a));
    acc.add_cosine(p.Omega, p.omega_d, 0.0, o.sp + o.sm);
    double fmax = std::max({p.omega_q, p.omega_r, p.omega_d, p.Omega, p.g});
    return acc.build(fmax, "build_driven_qrm_lab");
}

TimeDependentHamiltonian build_rwa_frame(const QubitParams& p,
                                         const SpaceDescriptor& space, bool force) {
    require_two_level(space, "build_rwa_frame");
    p.validate();
    if (!force) {
        auto report = check_rwa_report(p);
        if (!report.hard_ok())
            throw std::invalid_argument("build_rwa_frame: validity condition '" +
                                        report.first_failure() +
                                        "' fails; pass force to build anyway");
    }
    auto o = qubit_ops(space);
    TermAccumulator acc(space);
    acc.add_static(0.5 * p.Delta() * o.sz + p.delta() * o.n +
                   p.g * (o.sp * o.a + o.sm * o.ad) + 0.5 * p.Omega * (o.sp + o.sm));
    double fmax = std::max({std::abs(p.Delta()), std::abs(p.delta()), p.Omega, p.g});
    return acc.build(fmax, "build_rwa_frame");
}

TimeDependentHamiltonian build_driven_qrm_drive_frame(const QubitParams& p,
                                                      const SpaceDescriptor& space) {
    require_two_level(space, "build_driven_qrm_drive_frame");
    p.validate();
    auto o = qubit_ops(space);
    TermAccumulator acc(space);
    acc.add_static(0.5 * p.Delta() * o.sz + p.delta() * o.n +
                   p.g * (o.sp * o.a + o.sm * o.ad) + 0.5 * p.Omega * (o.sp + o.sm));
    acc.add_pair(p.g, 2 * p.omega_d, o.sp * o.ad);
    acc.add_pair(0.5 * p.Omega, 2 * p.omega_d, o.sp);
    double fmax = std::max({2 * p.omega_d, std::abs(p.Delta()), std::abs(p.delta()),
                            p.Omega, p.g});
    return acc.build(fmax, "build_driven_qrm_drive_frame");
}

TimeDependentHamiltonian build_effective_resonant(const QubitParams& p,
                                                  const SpaceDescriptor& space) {
    require_two_level(space, "build_effective_resonant");
    p.validate();
    require_resonant(p.Delta(), p.omega_q, "build_effective_resonant");
    auto o = qubit_ops(space);
    Matrix pdiff = dressed_projector_difference(space, two_pi / 4.0);  // theta = pi/2
    TermAccumulator acc(space);
    double delta = p.delta();
    if (delta == 0.0) {
        acc.add_static(0.5 * p.g * pdiff * (o.ad + o.a));
    } else {
        acc.add_pair(0.5 * p.g, delta, pdiff * o.ad);
    }
    double N = space.fock_cutoff;
    double fmax = std::max(p.g * std::sqrt(N), std::abs(delta));
    return acc.build(fmax, "build_effective_resonant");
}

TimeDependentHamiltonian build_effective_detuned(const QubitParams& p,
                                                 const SpaceDescriptor& space) {
    require_two_level(space, "build_effective_detuned");
    p.validate();
    if (p.epsilon() == 0.0)
        throw std::invalid_argument("build_effective_detuned: Omega = Delta = 0");
    auto o = qubit_ops(space);
    double theta = std::atan2(p.Omega, p.Delta());
    Matrix pdiff = dressed_projector_difference(space, theta);
    double prefactor = 0.5 * p.g * p.Omega / p.epsilon();
    TermAccumulator acc(space);
    double delta = p.delta();
    if (delta == 0.0) {
        acc.add_static(prefactor * pdiff * (o.ad + o.a));
    } else {
        acc.add_pair(prefactor, delta, pdiff * o.ad);
    }
    double N = space.fock_cutoff;
    double fmax = std::max(p.g * std::sqrt(N), std::abs(delta));
    return acc.build(fmax, "build_effective_detuned");
}

TimeDependentHamiltonian build_deformation_hamiltonian(const QubitParams& p,
                                                       const SpaceDescriptor& space) {
    require_two_level(space, "build_deformation_hamiltonian");
    p.validate();
    require_resonant(p.Delta(), p.omega_q, "build_deformation_hamiltonian");
    // (g/2)(e^{i Om t}|+><-| - e^{-i Om t}|-><+|) a e^{-i delta t} + H.c.
    Eigen::Vector2cd plus(1.0 / sqrt2, 1.0 / sqrt2), minus(1.0 / sqrt2, -1.0 / sqrt2);
    Matrix s_pm = plus * minus.adjoint();
    Matrix s_mp = minus * plus.adjoint();
    auto lift = [&](const Matrix& m) {
        return hilbert::tensor(hilbert::make_operator(m, space, Subsystem::Atom),
                               hilbert::identity_on(space, Subsystem::Resonator)).mat;
    };
    auto o = qubit_ops(space);
    double delta = p.delta();
    TermAccumulator acc(space);
    acc.add_pair(0.5 * p.g, p.Omega - delta, lift(s_pm) * o.a);
    acc.add_pair(-0.5 * p.g, -(p.Omega + delta), lift(s_mp) * o.a);
    double N = space.fock_cutoff;
    double fmax = std::max({p.Omega, std::abs(delta), p.g * std::sqrt(N)});
    return acc.build(fmax, "build_deformation_hamiltonian");
}

namespace {

struct QutritOps {
    Matrix s1p, s1m, s2p, s2m, pg, pe, pf, a, ad, n;
};

QutritOps qutrit_ops(const SpaceDescriptor& space, Selection sel) {
    using namespace hilbert;
    QutritOps o;
    auto t = atom_transition_ops(space, sel);
    auto id_r = identity_on(space, Subsystem::Resonator);
    o.s1p = tensor(t.raise1, id_r).mat;
    o.s1m = tensor(t.lower1, id_r).mat;
    o.s2p = tensor(t.raise2, id_r).mat;
    o.s2m = tensor(t.lower2, id_r).mat;
    o.pg = tensor(atom_projector(space, 0), id_r).mat;
    o.pe = tensor(atom_projector(space, 1), id_r).mat;
    o.pf = tensor(atom_projector(space, 2), id_r).mat;
    o.a = annihilation(space).mat;
    o.ad = creation(space).mat;
    o.n = number(space).mat;
    return o;
}

}  // namespace

TimeDependentHamiltonian build_qutrit_lab(const QutritParams& p,
                                          const SpaceDescriptor& space) {
    require_three_level(space, "build_qutrit_lab");
    p.validate();
    auto o = qutrit_ops(space, p.selection);
    TermAccumulator acc(space);
    acc.add_static(0.5 * p.omega_eg * (o.pe - o.pg) + 0.5 * p.tilde_omega_f() * o.pf +
                   p.omega_r * o.n +
                   (p.g1 * (o.s1p + o.s1m) + p.g2 * (o.s2p + o.s2m)) * (o.ad + o.a));
    acc.add_cosine(p.Omega1, p.omega_d, 0.0, o.s1p + o.s1m);
    acc.add_cosine(p.Omega2, p.omega_d, 0.0, o.s2p + o.s2m);
    double fmax = std::max({p.omega_eg, p.omega_fe, p.omega_r, p.omega_d,
                            0.5 * (std::abs(p.tilde_omega_f()) + p.omega_eg),
                            p.Omega1, p.Omega2});
    return acc.build(fmax, "build_qutrit_lab");
}

TimeDependentHamiltonian build_qutrit_drive_frame(const QutritParams& p,
                                                  const SpaceDescriptor& space) {
    require_three_level(space, "build_qutrit_drive_frame");
    p.validate();
    if (p.selection != Selection::Cascade)
        throw std::invalid_argument(
            "build_qutrit_drive_frame: frame transform implemented for cascade only");
    auto o = qutrit_ops(space, p.selection);
    const double wd = p.omega_d;
    const double wf = p.tilde_omega_f();
    const double chi = p.tilde_chi();
    TermAccumulator acc(space);
    acc.add_static(0.5 * p.Delta1() * (o.pe - o.pg) + p.delta() * o.n);
    // first-transition drive
    acc.add_static(0.5 * p.Omega1 * (o.s1p + o.s1m));
    acc.add_pair(0.5 * p.Omega1, 2 * wd, o.s1p);
    // second-transition drive
    acc.add_pair(0.5 * p.Omega2, 0.5 * chi, o.s2p);
    acc.add_pair(0.5 * p.Omega2, 0.5 * (wf + wd), o.s2p);
    // interaction
    acc.add_static(p.g1 * (o.s1p * o.a + o.s1m * o.ad));
    acc.add_pair(p.g1, 2 * wd, o.s1p * o.ad);
    acc.add_pair(p.g2, 0.5 * (wf + wd), o.s2p * o.ad);
    acc.add_pair(p.g2, 0.5 * chi, o.s2p * o.a);
    double fmax = std::max({2 * wd, 0.5 * std::abs(wf + wd), 0.5 * std::abs(chi),
                            p.Omega1, p.Omega2, std::abs(p.Delta1()), std::abs(p.delta())});
    return acc.build(fmax, "build_qutrit_drive_frame");
}

TimeDependentHamiltonian build_qutrit_rwa_harmonic(const QutritParams& p,
                                                   const SpaceDescriptor& space) {
    require_three_level(space, "build_qutrit_rwa_harmonic");
    p.validate();
    if (!p.is_harmonic_toy())
        throw std::invalid_argument(
            "build_qutrit_rwa_harmonic: needs the harmonic toy model "
            "(tilde_chi = 0, g2 = sqrt2 g1, Omega2 = sqrt2 Omega1)");
    auto o = qutrit_ops(space, p.selection);
    TermAccumulator acc(space);
    acc.add_static(0.5 * p.Omega1 * (o.s1p + o.s1m + sqrt2 * (o.s2p + o.s2m)) +
                   p.delta() * o.n +
                   p.g1 * ((o.s1p + sqrt2 * o.s2p) * o.a + (o.s1m + sqrt2 * o.s2m) * o.ad));
    double N = space.fock_cutoff;
    double fmax = std::max({p.Omega1 * std::sqrt(3.0), std::abs(p.delta()),
                            p.g1 * std::sqrt(3.0 * N)});
    return acc.build(fmax, "build_qutrit_rwa_harmonic");
}

TimeDependentHamiltonian build_arbitrary_anharmonic(const QutritParams& p,
                                                    const SpaceDescriptor& space) {
    require_three_level(space, "build_arbitrary_anharmonic");
    p.validate();
    if (!p.has_matched_coupling_ratio())
        throw std::invalid_argument(
            "build_arbitrary_anharmonic: needs g1/g2 = Omega1/Omega2");
    require_resonant(p.Delta1(), p.omega_eg, "build_arbitrary_anharmonic");
    auto o = qutrit_ops(space, p.selection);
    TermAccumulator acc(space);
    acc.add_static(0.5 * p.Sigma() * o.pf + p.delta() * o.n +
                   0.5 * p.Omega1 * (o.s1p + o.s1m) + 0.5 * p.Omega2 * (o.s2p + o.s2m) +
                   (p.g1 * o.s1p + p.g2 * o.s2p) * o.a +
                   (p.g1 * o.s1m + p.g2 * o.s2m) * o.ad);
    double N = space.fock_cutoff;
    double fmax = std::max({std::abs(p.Sigma()), p.Omega1, p.Omega2, std::abs(p.delta()),
                            (p.g1 + p.g2) * std::sqrt(N)});
    return acc.build(fmax, "build_arbitrary_anharmonic");
}

namespace {

void add_resonator_drives(TermAccumulator& acc, const QubitParams& p,
                          const SpuriousDriveParams& s, const Matrix& ad_plus_a) {
    acc.add_cosine(s.omega_prime, p.omega_d, s.phi_prime, ad_plus_a);
    acc.add_cosine(s.omega_c, p.omega_d, s.phi_c, ad_plus_a);
}

}  // namespace

TimeDependentHamiltonian build_spurious_model(const QubitParams& p,
                                              const SpuriousDriveParams& s_in,
                                              const SpaceDescriptor& space) {
    require_two_level(space, "build_spurious_model");
    p.validate();
    SpuriousDriveParams s = s_in;
    s.validate();
    auto o = qubit_ops(space);
    TermAccumulator acc(space);
    acc.add_static(0.5 * p.omega_q * o.sz + p.omega_r * o.n +
                   p.g * (o.sp + o.sm) * (o.ad + o.a));
    acc.add_cosine(p.Omega, p.omega_d, 0.0, o.sp + o.sm);
    add_resonator_drives(acc, p, s, o.ad + o.a);
    double fmax = std::max({p.omega_q, p.omega_r, p.omega_d, p.Omega});
    return acc.build(fmax, "build_spurious_model");
}

TimeDependentHamiltonian build_spurious_drive_frame(const QubitParams& p,
                                                    const SpuriousDriveParams& s_in,
                                                    const SpaceDescriptor& space) {
    require_two_level(space, "build_spurious_drive_frame");
    p.validate();
    SpuriousDriveParams s = s_in;
    s.validate();
    auto o = qubit_ops(space);
    TermAccumulator acc(space);
    acc.add_static(0.5 * p.Delta() * o.sz + p.delta() * o.n +
                   p.g * (o.sp * o.a + o.sm * o.ad) + 0.5 * p.Omega * (o.sp + o.sm));
    acc.add_pair(p.g, 2 * p.omega_d, o.sp * o.ad);
    acc.add_pair(0.5 * p.Omega, 2 * p.omega_d, o.sp);
    // cos(wd t + phi)(e^{iwd t} ad + e^{-iwd t} a) per resonator drive
    for (auto [amp, phi] : {std::pair{s.omega_prime, s.phi_prime},
                            std::pair{s.omega_c, s.phi_c}}) {
        acc.add_pair(0.5 * amp * std::polar(1.0, phi), 2 * p.omega_d, o.ad);
        acc.add_pair(0.5 * amp * std::polar(1.0, phi), 0.0, o.a);
    }
    double fmax = std::max({2 * p.omega_d, std::abs(p.Delta()), std::abs(p.delta()),
                            p.Omega, p.g});
    return acc.build(fmax, "build_spurious_drive_frame");
}

double inverse_capacitance_coupling(const Eigen::Matrix3d& C) {
    if ((C - C.transpose()).cwiseAbs().maxCoeff() > 1e-12 * C.cwiseAbs().maxCoeff())
        throw std::invalid_argument("inverse_capacitance_coupling: matrix not symmetric");
    double det = C.determinant();
    if (det == 0.0)
        throw std::invalid_argument("inverse_capacitance_coupling: singular matrix");
    return (C(0, 1) * C(1, 2) - C(0, 2) * C(1, 1)) / det;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Marginal: return "marginal";
        case Verdict::Fail: return "fail";
    }
    return "?";
}

Verdict verdict_for_ratio(double ratio) {
    if (ratio < 0.1) return Verdict::Pass;
    if (ratio <= 0.33) return Verdict::Marginal;
    return Verdict::Fail;
}

Verdict ValidityReport::worst() const {
    Verdict w = Verdict::Pass;
    for (const auto& c : checks)
        if (static_cast<int>(c.verdict) > static_cast<int>(w)) w = c.verdict;
    return w;
}

std::string ValidityReport::first_failure() const {
    for (const auto& c : checks)
        if (c.verdict == Verdict::Fail) return c.name;
    return {};
}

std::string ValidityReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-42s ratio = %.6g  [%s]\n", c.name.c_str(),
                      c.ratio, to_string(c.verdict).c_str());
        os << buf;
    }
    for (const auto& n : notes) os << "note: " << n << "\n";
    return os.str();
}

namespace {

void push_check(ValidityReport& r, const std::string& name, double lhs, double rhs) {
    double ratio = (rhs > 0) ? lhs / rhs : (lhs > 0 ? 1e300 : 0.0);
    r.checks.push_back({name, lhs, rhs, ratio, verdict_for_ratio(ratio)});
}

}  // namespace

ValidityReport check_rwa_report(const QubitParams& p) {
    p.validate();
    ValidityReport r;
    push_check(r, "|omega_q - omega_r| << omega_q + omega_r",
               std::abs(p.omega_q - p.omega_r), p.omega_q + p.omega_r);
    push_check(r, "g << min(omega_q, omega_r)", p.g, std::min(p.omega_q, p.omega_r));
    push_check(r, "g << 2*omega_d", p.g, 2 * p.omega_d);
    push_check(r, "Omega << 4*omega_d", p.Omega, 4 * p.omega_d);
    // strong-driving window (lower bounds on Omega; upper bound is the line above)
    push_check(r, "g << Omega (strong driving)", p.g, p.Omega);
    push_check(r, "|delta| << Omega (strong driving)", std::abs(p.delta()), p.Omega);
    if (p.Delta() != 0.0) {
        double eps = p.epsilon();
        push_check(r, "g << epsilon (strong driving-detuning)", p.g, eps);
        push_check(r, "|delta| << epsilon (strong driving-detuning)",
                   std::abs(p.delta()), eps);
        push_check(r, "epsilon << 4*omega_d", eps, 4 * p.omega_d);
    }
    for (const auto& c : r.checks) {
        if (c.name.rfind("g << Omega", 0) == 0 && c.verdict != Verdict::Pass) {
            r.notes.push_back(
                "drive is weak relative to g: expect a deformed cat "
                "(drive-modulated displacement terms are not negligible)");
        }
    }
    return r;
}

ValidityReport check_rwa_report(const QutritParams& p) {
    p.validate();
    ValidityReport r;
    if (p.is_harmonic_toy(1e-6) || p.selection == Selection::Cascade) {
        push_check(r, "|omega_eg - omega_r| << omega_eg + omega_r",
                   std::abs(p.omega_eg - p.omega_r), p.omega_eg + p.omega_r);
        push_check(r, "sqrt2*g1 << min(omega_eg, omega_r)", sqrt2 * p.g1,
                   std::min(p.omega_eg, p.omega_r));
        push_check(r, "sqrt2*g1 << 2*omega_d", sqrt2 * p.g1, 2 * p.omega_d);
        push_check(r, "sqrt2*Omega1 << 4*omega_d", sqrt2 * p.Omega1, 4 * p.omega_d);
        push_check(r, "g1 << Omega1 (strong driving)", p.g1, p.Omega1);
        push_check(r, "|delta| << Omega1 (strong driving)", std::abs(p.delta()),
                   p.Omega1);
        push_check(r, "Omega1 << 4*omega_d/sqrt2", p.Omega1, 4 * p.omega_d / sqrt2);
    }
    // generalized set for arbitrary couplings
    push_check(r, "g1 << 2*omega_d", p.g1, 2 * p.omega_d);
    push_check(r, "Omega1 << 4*omega_d", p.Omega1, 4 * p.omega_d);
    push_check(r, "|omega_fe - omega_r| << omega_fe + omega_r",
               std::abs(p.omega_fe - p.omega_r), p.omega_fe + p.omega_r);
    push_check(r, "g2 << min(omega_fe, omega_r)", p.g2, std::min(p.omega_fe, p.omega_r));
    push_check(r, "g2 << 2*omega_d", p.g2, 2 * p.omega_d);
    push_check(r, "Omega2 << 4*omega_d", p.Omega2, 4 * p.omega_d);
    // dressed-splitting separation, from the 3x3 dressed eigenproblem
    Eigen::Matrix3d h3 = Eigen::Matrix3d::Zero();
    h3(0, 1) = h3(1, 0) = 0.5 * p.Omega1;
    h3(1, 2) = h3(2, 1) = 0.5 * p.Omega2;
    h3(2, 2) = 0.5 * p.Sigma();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(h3);
    double min_gap = 1e300;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            min_gap = std::min(min_gap,
                               std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)));
    if (min_gap < 1e300 && min_gap > 0) {
        push_check(r, "g1 << min |dressed splitting|", p.g1, min_gap);
        push_check(r, "g2 << min |dressed splitting|", p.g2, min_gap);
        push_check(r, "|delta| << min |dressed splitting|", std::abs(p.delta()), min_gap);
    }
    if (std::abs(p.xi()) > 0 &&
        std::abs(p.xi()) < 10 * std::max(p.Omega1, sqrt2 * p.g1)) {
        r.notes.push_back("anharmonicity is comparable to the drive: neither the "
                          "harmonic toy nor the strongly-anharmonic limit applies "
                          "cleanly");
    }
    return r;
}

}  // namespace models
}  // namespace catgen
