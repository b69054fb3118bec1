#ifndef CATGEN_DYNAMICS_HPP
#define CATGEN_DYNAMICS_HPP

#include <map>
#include <string>
#include <vector>

#include "catgen/models.hpp"

namespace catgen {
namespace dynamics {

using hilbert::Operator;
using hilbert::QuantumState;
using models::TimeDependentHamiltonian;

struct CollapseChannel {
    Operator op;      // joint-space jump operator
    double rate = 0;  // 1/s
};

/// Zero-temperature channel sets. Qubit: sqrt(g1) s-, sqrt(gphi/2) sz, sqrt(k) a.
/// Qutrit adds sqrt(g2) s2- and dephases through sz + 2|f><f|.
std::vector<CollapseChannel> qubit_channels(const models::DecoherenceParams& d,
                                            const hilbert::SpaceDescriptor& space);
std::vector<CollapseChannel> qutrit_channels(const models::DecoherenceParams& d,
                                             const hilbert::SpaceDescriptor& space,
                                             hilbert::Selection sel);

struct IntegratorConfig {
    double dt = 0;               // s; 0 selects the default step rule
    int sample_stride = 1;       // record every k-th step
    bool store_states = false;   // keep full states at samples (capped at 1e4)
    std::vector<double> capture_times;  // states to keep regardless of store_states
    bool check_positivity = true;
};

/// Default step: min of 20 points per fastest model period and the RK4
/// stability bound on the operator norm.
double default_time_step(const TimeDependentHamiltonian& h);

struct Trajectory {
    std::vector<double> times;
    std::map<std::string, std::vector<double>> series;
    std::vector<QuantumState> states;              // when store_states
    std::vector<std::pair<double, QuantumState>> captured;
    QuantumState final_state;
    double norm_drift = 0;   // max |  |psi|-1 | (closed) or | tr rho - 1 | (open)
    double dt = 0;
    std::size_t steps = 0;
    std::vector<std::string> warnings;
};

/// Named operators sampled along the run; "purity" is always recorded.
using ObservableSet = std::vector<std::pair<std::string, Operator>>;

Trajectory evolve_schrodinger(const TimeDependentHamiltonian& h,
                              const QuantumState& psi0, IntegratorConfig cfg,
                              double t_end, const ObservableSet& observables = {});

Trajectory evolve_lindblad(const TimeDependentHamiltonian& h,
                           const std::vector<CollapseChannel>& channels,
                           const QuantumState& rho0, IntegratorConfig cfg,
                           double t_end, const ObservableSet& observables = {});

/// Applies exp(+i G t) to a state (conjugation for density matrices).
QuantumState frame_transform(const QuantumState& state, const Operator& generator,
                             double t);
/// De-rotates every stored/captured state at its own sample time.
Trajectory frame_transform(const Trajectory& traj, const Operator& generator);

}  // namespace dynamics
}  // namespace catgen

#endif
