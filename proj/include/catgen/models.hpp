#ifndef CATGEN_MODELS_HPP
#define CATGEN_MODELS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "catgen/hilbert.hpp"

namespace catgen {
namespace models {

using hilbert::Operator;
using hilbert::SpaceDescriptor;

/// Driven qubit-resonator parameters, all angular (rad/s).
struct QubitParams {
    double omega_q = 0;   // qubit transition
    double omega_r = 0;   // resonator
    double omega_d = 0;   // drive
    double g = 0;         // qubit-resonator coupling
    double Omega = 0;     // drive strength

    double Delta() const { return omega_q - omega_d; }
    double delta() const { return omega_r - omega_d; }
    double epsilon() const { return std::hypot(Omega, Delta()); }
    void validate() const;
};

/// Driven cascade/lambda/vee qutrit-resonator parameters (rad/s).
struct QutritParams {
    double omega_eg = 0;
    double omega_fe = 0;
    double omega_r = 0;
    double omega_d = 0;
    double g1 = 0, g2 = 0;
    double Omega1 = 0, Omega2 = 0;
    hilbert::Selection selection = hilbert::Selection::Cascade;

    double xi() const { return omega_fe - omega_eg; }          // anharmonicity
    double Delta1() const { return omega_eg - omega_d; }
    double delta() const { return omega_r - omega_d; }
    double tilde_omega_f() const { return 2 * omega_fe + omega_eg; }
    double tilde_chi() const { return tilde_omega_f() - 3 * omega_d; }
    double Sigma() const { return tilde_omega_f() + omega_d; }

    /// Harmonic toy model: tilde_chi = 0, g2 = sqrt2 g1, Omega2 = sqrt2 Omega1.
    bool is_harmonic_toy(double rel_tol = 1e-9) const;
    /// Shared coupling mechanism: g1/g2 = Omega1/Omega2.
    bool has_matched_coupling_ratio(double rel_tol = 1e-9) const;
    void validate() const;
};

/// Plain rates in 1/s (not angular). gamma2 < 0 means the qutrit default 2*gamma1.
struct DecoherenceParams {
    double gamma1 = 0;
    double gamma2 = -1;
    double gamma_phi = 0;
    double kappa = 0;

    double gamma2_or_default() const { return gamma2 < 0 ? 2 * gamma1 : gamma2; }
    bool any() const {
        return gamma1 > 0 || gamma2_or_default() > 0 || gamma_phi > 0 || kappa > 0;
    }
    void validate() const;
};

struct SpuriousDriveParams {
    double omega_prime = 0;  // spurious strength (rad/s)
    double phi_prime = 0;    // phase, normalized into [0, 2pi)
    double omega_c = 0;      // cancellation strength
    double phi_c = 0;
    void validate();         // normalizes phases
};

/// One term A e^{i w t} T with constant sparse T. Hermitian models are sums of
/// conjugate pairs (or single terms with w = 0, A real, T Hermitian).
struct HamiltonianTerm {
    Complex amplitude;
    double angular_rate = 0;
    SparseMatrix op;
};

/// Time-dependent Hamiltonian as a term list; evaluator is Hermitian at every t.
class TimeDependentHamiltonian {
public:
    TimeDependentHamiltonian() = default;
    TimeDependentHamiltonian(SpaceDescriptor space, std::vector<HamiltonianTerm> terms,
                             double suggested_max_angular_frequency,
                             const std::string& builder_name);

    const SpaceDescriptor& space() const { return space_; }
    bool is_static() const { return is_static_; }
    /// Largest angular frequency relevant for step-size selection (rad/s).
    double max_angular_frequency() const { return max_angular_frequency_; }
    /// Upper bound on the operator infinity-norm over all t.
    double norm_bound() const { return norm_bound_; }
    const std::vector<HamiltonianTerm>& terms() const { return terms_; }

    /// Dense matrix at time t.
    Operator evaluate(double t) const;
    /// Sum of the w = 0 terms (the part a one-drive-period average keeps).
    Matrix static_part() const;
    /// out = H(t) v without forming the dense matrix.
    void apply(double t, const Vector& v, Vector& out) const;
    /// out = H(t) rho (dense rho), accumulating sparse products.
    void apply_left(double t, const Matrix& rho, Matrix& out) const;

private:
    SpaceDescriptor space_;
    std::vector<HamiltonianTerm> terms_;
    bool is_static_ = true;
    double max_angular_frequency_ = 0;
    double norm_bound_ = 0;
};

// --- qubit models ---

/// Lab-frame driven quantum Rabi model.
TimeDependentHamiltonian build_driven_qrm_lab(const QubitParams& p,
                                              const SpaceDescriptor& space);

/// Static drive-frame model after the rotating-wave approximation. Refuses
/// parameter sets whose validity report hard-fails unless force is set.
TimeDependentHamiltonian build_rwa_frame(const QubitParams& p,
                                         const SpaceDescriptor& space,
                                         bool force = false);

/// Exact drive-frame transform of the lab model, counter-rotating terms kept.
TimeDependentHamiltonian build_driven_qrm_drive_frame(const QubitParams& p,
                                                      const SpaceDescriptor& space);

/// Interaction-picture conditional displacement, resonant drive (Delta = 0).
TimeDependentHamiltonian build_effective_resonant(const QubitParams& p,
                                                  const SpaceDescriptor& space);

/// Conditional displacement in the detuned dressed basis.
TimeDependentHamiltonian build_effective_detuned(const QubitParams& p,
                                                 const SpaceDescriptor& space);

/// Drive-modulated remainder separating the full interaction-picture model
/// from the conditional displacement.
TimeDependentHamiltonian build_deformation_hamiltonian(const QubitParams& p,
                                                       const SpaceDescriptor& space);

// --- qutrit models ---

TimeDependentHamiltonian build_qutrit_lab(const QutritParams& p,
                                          const SpaceDescriptor& space);

/// Exact rotating-frame transform of the cascade qutrit lab model.
TimeDependentHamiltonian build_qutrit_drive_frame(const QutritParams& p,
                                                  const SpaceDescriptor& space);

/// Static RWA model of the harmonic toy qutrit.
TimeDependentHamiltonian build_qutrit_rwa_harmonic(const QutritParams& p,
                                                   const SpaceDescriptor& space);

/// Static RWA model in the frame putting both transitions on equal footing;
/// valid for arbitrary anharmonicity with matched coupling ratios, Delta1 = 0.
TimeDependentHamiltonian build_arbitrary_anharmonic(const QutritParams& p,
                                                    const SpaceDescriptor& space);

// --- resonator cross-talk ---

TimeDependentHamiltonian build_spurious_model(const QubitParams& p,
                                              const SpuriousDriveParams& s,
                                              const SpaceDescriptor& space);
TimeDependentHamiltonian build_spurious_drive_frame(const QubitParams& p,
                                                    const SpuriousDriveParams& s,
                                                    const SpaceDescriptor& space);

/// (C^-1)_13 of a symmetric 3x3 capacitance matrix via the cofactor form.
double inverse_capacitance_coupling(const Eigen::Matrix3d& C);

// --- validity reporting ---

enum class Verdict { Pass, Marginal, Fail };

std::string to_string(Verdict v);

struct ConditionCheck {
    std::string name;    // the inequality, e.g. "g << 2*omega_d"
    double lhs = 0, rhs = 0, ratio = 0;
    Verdict verdict = Verdict::Pass;
};

struct ValidityReport {
    std::vector<ConditionCheck> checks;
    std::vector<std::string> notes;

    Verdict worst() const;
    bool hard_ok() const { return worst() != Verdict::Fail; }
    /// First failing condition name, empty when none fail.
    std::string first_failure() const;
    std::string to_text() const;
};

/// Ratio verdicts: pass r < 0.1, marginal 0.1 <= r <= 0.33, fail r > 0.33.
Verdict verdict_for_ratio(double ratio);

ValidityReport check_rwa_report(const QubitParams& p);
ValidityReport check_rwa_report(const QutritParams& p);

}  // namespace models
}  // namespace catgen

#endif
