#ifndef CATGEN_ORACLES_HPP
#define CATGEN_ORACLES_HPP

#include <array>

#include "catgen/models.hpp"

namespace catgen {
namespace oracles {

using hilbert::QuantumState;
using hilbert::SpaceDescriptor;

/// Driven-qubit dressed basis; theta = atan2(Omega, Delta), pi/2 on resonance.
struct DressedQubitBasis {
    double theta = 0;
    double epsilon = 0;  // sqrt(Omega^2 + Delta^2)
    Eigen::Vector2cd plus_state, minus_state;
};

DressedQubitBasis dressed_qubit_basis(double Omega, double Delta);

/// Conditional-displacement amplitude -g(e^{i delta t} - 1)/(2 delta); series
/// branch below |delta t| = 1e-6, limit -i g t / 2.
Complex alpha_resonant(double t, double g, double delta);

/// Detuned amplitude, (Omega/epsilon) times the resonant one.
Complex alpha_detuned(double t, double g, double Omega, double Delta, double delta);

/// Dressed qutrit eigensystem. Eigenvalues sorted descending; eigenvectors are
/// the columns; normalizers carry the closed-form N_k (0 marks a corner where
/// the closed-form parametrization degenerates and a dense vector was used).
struct QutritDressedBasis {
    std::array<double, 3> eigenvalues{};
    Eigen::Matrix3cd eigenvectors;
    std::array<double, 3> normalizers{};
};

/// Harmonic-toy dressed states: the dark state at eigenvalue 0 and the pair at
/// +- sqrt(3) Omega1 / 2.
QutritDressedBasis qutrit_dark_basis(double Omega1);

/// Trigonometric closed-form eigensystem of the equal-footing dressed qutrit
/// (drive part Sigma/2 |f><f| + Omega1 sx1/2 + Omega2 sx2/2).
QutritDressedBasis cubic_dressed_eigs(double Omega1, double Omega2, double Sigma);

/// Conditional displacement rates per dressed state; the final state under the
/// effective model is sum_k c_k |v_k>|alpha_k(t)> with
/// alpha_k = -g_k (e^{i delta t} - 1)/(2 delta).
std::array<double, 3> effective_couplings(const QutritDressedBasis& basis, double g1,
                                          double g2, double Omega1, double Omega2,
                                          double Sigma);

/// Open-system photon-number estimate g^2 Omega^2 t^2 e^{-kappa t}/(4 eps^2);
/// resonant specialization g^2 t^2 e^{-kappa t}/4 at Delta = 0.
double photon_envelope(double t, double g, double Omega, double Delta, double kappa);
/// Time 2/kappa where the envelope peaks (infinity when kappa = 0).
double envelope_peak_time(double kappa);

/// Dispersive-protocol cat size (15/2)(chi t - pi), clamped at 0 before onset.
double qcmap_cat_size(double chi, double t);

/// (|alpha> + sign |-alpha>) with the closed-form 2(1 +- e^{-2|a|^2})
/// normalization; sign +1 is the even cat.
QuantumState analytic_cat(Complex alpha, int sign, const SpaceDescriptor& space);

/// Closed-form time-evolved joint states in the interaction picture.
struct AnalyticRecipe {
    enum class Kind {
        QubitResonant,        // from |g,0>, resonant drive
        QubitDetuned,         // from |g,0>, detuned drive
        QubitEncode,          // from (c_g|+> + c_e|->)|0>
        QutritFromG0,         // harmonic toy from |g,0>
        QutritFromE0,         // harmonic toy from |e,0>
        QutritEncode,         // from (c_g|v+> + c_e|v->)|0>
        ArbitraryAnharmonic,  // sum_k c_k |v_k>|alpha_k>
    };
    Kind kind = Kind::QubitResonant;
    models::QubitParams qubit;
    models::QutritParams qutrit;
    Complex c_g = 1.0, c_e = 0.0;
    std::array<Complex, 3> coeffs{1.0, 0.0, 0.0};
    SpaceDescriptor space;
};

QuantumState analytic_state(const AnalyticRecipe& recipe, double t);

}  // namespace oracles
}  // namespace catgen

#endif
