#ifndef CATGEN_ANALYSIS_HPP
#define CATGEN_ANALYSIS_HPP

#include <string>
#include <vector>

#include "catgen/hilbert.hpp"

namespace catgen {
namespace analysis {

using hilbert::Operator;
using hilbert::QuantumState;

/// <O> = <psi|O|psi> or Tr(O rho). Hermitian O gives a real result.
Complex expectation(const Operator& op, const QuantumState& state);

struct MeasurementOutcome {
    double probability = 0;
    QuantumState conditional_state;  // resonator factor, renormalized
};

/// Projective measurement of the atom in an arbitrary state.  Labels:
/// "g", "e", "f", "plus", "minus" (bare and resonant-dressed states).
Vector atom_state_from_label(const std::string& label, int atom_levels);
MeasurementOutcome project_atom(const QuantumState& joint, const Vector& atom_state);
MeasurementOutcome project_atom(const QuantumState& joint, const std::string& label);

struct WignerGridSpec {
    int points = 161;        // per axis
    double half_width = 0;   // 0: auto, 1.25 * max(|alpha|, 1) from <n>
};

/// W(a) = (1/pi) Tr(rho D(2a) exp(i pi n)); range [-1/pi, +1/pi].
struct WignerGrid {
    std::vector<double> re_axis, im_axis;
    Eigen::MatrixXd values;  // values(i, j) = W(re_axis[j] + i im_axis[i])
    double convention_scale = 0.3183098861837907;  // 1/pi

    /// Riemann sum of W d2a; 1/2 for a normalized state under this convention.
    double integral() const;
};

WignerGrid wigner(const QuantumState& resonator_state, const WignerGridSpec& spec);
/// Single phase-space point of the same convention.
double wigner_point(const QuantumState& resonator_state, Complex alpha);

/// Re Tr(rho exp(i pi n)) = pi * W(0).
double parity(const QuantumState& resonator_state);

/// Uhlmann fidelity; |<a|b>|^2 for pure pairs.
double fidelity(const QuantumState& a, const QuantumState& b);

struct CatLobeWeights {
    double w_plus = 0, w_minus = 0;  // <+-a|rho|+-a>
    Complex cross;                   // <a|rho|-a>
    bool ill_conditioned = false;    // |alpha_ref| <= 1: lobes not quasiorthogonal
};

CatLobeWeights cat_lobe_weights(const QuantumState& resonator_state, Complex alpha_ref);

}  // namespace analysis
}  // namespace catgen

#endif
