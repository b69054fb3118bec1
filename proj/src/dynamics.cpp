#include "catgen/dynamics.hpp"

#include <cmath>

namespace catgen {
namespace dynamics {

using hilbert::StateKind;
using hilbert::Subsystem;

std::vector<CollapseChannel> qubit_channels(const models::DecoherenceParams& d,
                                            const hilbert::SpaceDescriptor& space) {
    d.validate();
    using namespace hilbert;
    std::vector<CollapseChannel> out;
    auto id_r = identity_on(space, Subsystem::Resonator);
    auto t = atom_transition_ops(space, Selection::Cascade);
    if (d.gamma1 > 0) out.push_back({tensor(t.lower1, id_r), d.gamma1});
    if (d.gamma_phi > 0)
        out.push_back({tensor(sigma_z(space), id_r), 0.5 * d.gamma_phi});
    if (d.kappa > 0) out.push_back({annihilation(space), d.kappa});
    return out;
}

std::vector<CollapseChannel> qutrit_channels(const models::DecoherenceParams& d,
                                             const hilbert::SpaceDescriptor& space,
                                             hilbert::Selection sel) {
    d.validate();
    using namespace hilbert;
    if (space.atom_levels != 3)
        throw std::invalid_argument("qutrit_channels: needs a 3-level atom");
    std::vector<CollapseChannel> out;
    auto id_r = identity_on(space, Subsystem::Resonator);
    auto t = atom_transition_ops(space, sel);
    if (d.gamma1 > 0) out.push_back({tensor(t.lower1, id_r), d.gamma1});
    double g2 = d.gamma2_or_default();
    if (g2 > 0) out.push_back({tensor(t.lower2, id_r), g2});
    if (d.gamma_phi > 0) {
        Matrix dephase = sigma_z(space).mat + 2.0 * atom_projector(space, 2).mat;
        out.push_back({tensor(make_operator(dephase, space, Subsystem::Atom), id_r),
                       0.5 * d.gamma_phi});
    }
    if (d.kappa > 0) out.push_back({annihilation(space), d.kappa});
    return out;
}

double default_time_step(const TimeDependentHamiltonian& h) {
    double dt = 1e300;
    if (h.max_angular_frequency() > 0)
        dt = two_pi / (20.0 * h.max_angular_frequency());
    if (h.norm_bound() > 0) dt = std::min(dt, 2.4 / h.norm_bound());
    if (dt >= 1e300)
        throw std::invalid_argument("default_time_step: model has no frequency scale");
    return dt;
}

namespace {

struct SampleSchedule {
    std::size_t nsteps;
    double dt;
    std::vector<std::size_t> capture_steps;
};

SampleSchedule plan(const TimeDependentHamiltonian& h, const IntegratorConfig& cfg,
                    double t_end) {
    if (t_end <= 0) throw std::invalid_argument("evolve: t_end must be > 0");
    if (cfg.sample_stride < 1)
        throw std::invalid_argument("evolve: sample_stride must be >= 1");
    double dt = cfg.dt > 0 ? cfg.dt : default_time_step(h);
    double dt_rule = 1e300;
    if (h.max_angular_frequency() > 0)
        dt_rule = two_pi / (20.0 * h.max_angular_frequency());
    if (dt > dt_rule * (1 + 1e-12))
        throw std::invalid_argument(
            "evolve: dt exceeds 1/(20 f_max) for this model; pass a smaller step");
    SampleSchedule s;
    s.nsteps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    s.dt = t_end / double(s.nsteps);
    for (double tc : cfg.capture_times) {
        if (tc < 0 || tc > t_end * (1 + 1e-9))
            throw std::invalid_argument("evolve: capture time outside the run");
        s.capture_steps.push_back(
            static_cast<std::size_t>(std::llround(tc / s.dt)));
    }
    return s;
}

double purity_of(const Matrix& rho) { return rho.squaredNorm(); }

void record_observables(Trajectory& traj, const ObservableSet& obs,
                        const Vector* psi, const Matrix* rho) {
    for (const auto& [name, op] : obs) {
        double v;
        if (psi)
            v = std::real(Complex(psi->dot(op.mat * (*psi))));
        else
            v = std::real((op.mat * (*rho)).trace());
        traj.series[name].push_back(v);
    }
    traj.series["purity"].push_back(psi ? 1.0 : purity_of(*rho));
}

constexpr std::size_t max_stored_states = 10000;

}  // namespace

Trajectory evolve_schrodinger(const TimeDependentHamiltonian& h,
                              const QuantumState& psi0, IntegratorConfig cfg,
                              double t_end, const ObservableSet& observables) {
    if (psi0.kind != StateKind::Pure)
        throw std::invalid_argument("evolve_schrodinger: needs a pure state");
    if (psi0.part != Subsystem::Joint || psi0.space != h.space())
        throw std::invalid_argument("evolve_schrodinger: state/model space mismatch");
    auto sched = plan(h, cfg, t_end);
    const double dt = sched.dt;

    Trajectory traj;
    traj.dt = dt;
    traj.steps = sched.nsteps;

    Vector psi = psi0.vec;
    Vector k1(psi.size()), k2(psi.size()), k3(psi.size()), k4(psi.size()),
        tmp(psi.size());
    auto rhs = [&](double t, const Vector& v, Vector& out) {
        h.apply(t, v, out);
        out *= Complex(0, -1);
    };

    for (std::size_t step = 0; step <= sched.nsteps; ++step) {
        double t = step * dt;
        bool sample = (step % cfg.sample_stride == 0) || step == sched.nsteps;
        if (sample) {
            traj.times.push_back(t);
            record_observables(traj, observables, &psi, nullptr);
            double drift = std::abs(psi.norm() - 1.0);
            traj.norm_drift = std::max(traj.norm_drift, drift);
            if (drift > 1e-5)
                throw NumericsError(
                    "evolve_schrodinger: norm drift " + std::to_string(drift) +
                    " at t = " + std::to_string(t) + " s exceeds 1e-5; the step dt = " +
                    std::to_string(dt) + " s under-resolves the occupied spectrum, "
                    "reduce it");
            if (cfg.store_states && traj.states.size() < max_stored_states)
                traj.states.push_back(hilbert::pure_state(psi.normalized(), psi0.space));
        }
        for (std::size_t cs : sched.capture_steps)
            if (cs == step)
                traj.captured.emplace_back(t, hilbert::pure_state(psi.normalized(),
                                                                  psi0.space));
        if (step == sched.nsteps) break;
        rhs(t, psi, k1);
        tmp = psi + (0.5 * dt) * k1;
        rhs(t + 0.5 * dt, tmp, k2);
        tmp = psi + (0.5 * dt) * k2;
        rhs(t + 0.5 * dt, tmp, k3);
        tmp = psi + dt * k3;
        rhs(t + dt, tmp, k4);
        psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    traj.final_state = hilbert::pure_state(psi.normalized(), psi0.space);
    return traj;
}

namespace {

/// Lindblad right-hand side on Hermitian rho:
///   -i(H rho - (H rho)^dag) + sum_c rate (O rho O^dag - (W rho + (W rho)^dag)/2)
class LindbladRhs {
public:
    LindbladRhs(const TimeDependentHamiltonian& h,
                const std::vector<CollapseChannel>& channels)
        : h_(h) {
        for (const auto& c : channels) {
            if (c.rate < 0)
                throw std::invalid_argument("CollapseChannel: rate must be >= 0");
            if (c.rate == 0) continue;
            SparseMatrix o = c.op.mat.sparseView(1.0, 1e-300);
            SparseMatrix od = SparseMatrix(o.adjoint());
            chans_.push_back({c.rate, o, od, SparseMatrix(od * o)});
        }
        int dim = h.space().dim();
        hr_.resize(dim, dim);
        s_.resize(dim, dim);
    }

    void operator()(double t, const Matrix& rho, Matrix& out) {
        h_.apply_left(t, rho, hr_);
        out = Complex(0, -1) * (hr_ - hr_.adjoint());
        for (const auto& c : chans_) {
            s_.noalias() = c.o * rho;           // O rho
            out.noalias() += c.rate * (s_ * c.od);
            hr_.noalias() = c.w * rho;          // W rho, W = O^dag O
            out.noalias() -= (0.5 * c.rate) * hr_;
            out.noalias() -= (0.5 * c.rate) * hr_.adjoint();
        }
    }

private:
    struct Chan {
        double rate;
        SparseMatrix o, od, w;
    };
    const TimeDependentHamiltonian& h_;
    std::vector<Chan> chans_;
    Matrix hr_, s_;
};

}  // namespace

Trajectory evolve_lindblad(const TimeDependentHamiltonian& h,
                           const std::vector<CollapseChannel>& channels,
                           const QuantumState& rho0, IntegratorConfig cfg,
                           double t_end, const ObservableSet& observables) {
    if (rho0.part != Subsystem::Joint || rho0.space != h.space())
        throw std::invalid_argument("evolve_lindblad: state/model space mismatch");
    auto sched = plan(h, cfg, t_end);
    const double dt = sched.dt;

    Trajectory traj;
    traj.dt = dt;
    traj.steps = sched.nsteps;

    Matrix rho = rho0.density();
    LindbladRhs rhs(h, channels);
    const int dim = rho.rows();
    Matrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), tmp(dim, dim);
    bool warned_negative = false;

    for (std::size_t step = 0; step <= sched.nsteps; ++step) {
        double t = step * dt;
        bool sample = (step % cfg.sample_stride == 0) || step == sched.nsteps;
        if (sample) {
            traj.times.push_back(t);
            record_observables(traj, observables, nullptr, &rho);
            double drift = std::abs(rho.trace().real() - 1.0);
            traj.norm_drift = std::max(traj.norm_drift, drift);
            if (drift > 1e-5)
                throw NumericsError(
                    "evolve_lindblad: trace drift " + std::to_string(drift) +
                    " at t = " + std::to_string(t) +
                    " s exceeds 1e-5; reduce the step dt = " + std::to_string(dt));
            if (cfg.check_positivity && !warned_negative) {
                Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
                double lam = es.eigenvalues().minCoeff();
                if (lam < -1e-6) {
                    traj.warnings.push_back(
                        "negative density eigenvalue " + std::to_string(lam) +
                        " at t = " + std::to_string(t) + " s");
                    warned_negative = true;
                }
            }
            if (cfg.store_states && traj.states.size() < max_stored_states)
                traj.states.push_back(hilbert::mixed_state(
                    rho / rho.trace().real(), rho0.space));
        }
        for (std::size_t cs : sched.capture_steps)
            if (cs == step)
                traj.captured.emplace_back(
                    t, hilbert::mixed_state(rho / rho.trace().real(), rho0.space));
        if (step == sched.nsteps) break;
        rhs(t, rho, k1);
        tmp = rho + (0.5 * dt) * k1;
        rhs(t + 0.5 * dt, tmp, k2);
        tmp = rho + (0.5 * dt) * k2;
        rhs(t + 0.5 * dt, tmp, k3);
        tmp = rho + dt * k3;
        rhs(t + dt, tmp, k4);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rho = 0.5 * (rho + rho.adjoint()).eval();
    }
    traj.final_state = hilbert::mixed_state(rho / rho.trace().real(), rho0.space);
    return traj;
}

QuantumState frame_transform(const QuantumState& state, const Operator& generator,
                             double t) {
    if (generator.part != state.part)
        throw std::invalid_argument("frame_transform: generator on a different factor");
    if (generator.dim() != state.dim())
        throw std::invalid_argument("frame_transform: dimension mismatch");
    if (!hilbert::is_hermitian(generator.mat,
                               1e-10 * std::max(1.0, hilbert::max_abs(generator.mat))))
        throw std::invalid_argument("frame_transform: generator must be Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(generator.mat);
    Vector phases(generator.dim());
    for (int i = 0; i < generator.dim(); ++i)
        phases(i) = std::polar(1.0, es.eigenvalues()(i) * t);
    Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    QuantumState out = state;
    if (state.kind == StateKind::Pure)
        out.vec = u * state.vec;
    else
        out.rho = u * state.rho * u.adjoint();
    return out;
}

Trajectory frame_transform(const Trajectory& traj, const Operator& generator) {
    Trajectory out = traj;
    for (std::size_t i = 0; i < out.states.size(); ++i)
        out.states[i] = frame_transform(traj.states[i], generator, traj.times[i]);
    for (auto& [t, st] : out.captured) st = frame_transform(st, generator, t);
    if (!traj.times.empty())
        out.final_state =
            frame_transform(traj.final_state, generator, traj.times.back());
    return out;
}

}  // namespace dynamics
}  // namespace catgen
