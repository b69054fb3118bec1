#include "catgen/analysis.hpp"

#include <cmath>
#include <thread>

namespace catgen {
namespace analysis {

using hilbert::StateKind;
using hilbert::Subsystem;

Complex expectation(const Operator& op, const QuantumState& state) {
    if (op.part != state.part || op.space != state.space)
        throw std::invalid_argument("expectation: operator/state mismatch");
    if (state.kind == StateKind::Pure)
        return state.vec.dot(op.mat * state.vec);
    return (op.mat * state.rho).trace();
}

Vector atom_state_from_label(const std::string& label, int atom_levels) {
    Vector v = Vector::Zero(atom_levels);
    const double inv_sqrt2 = 0.7071067811865476;
    if (label == "g") v(0) = 1.0;
    else if (label == "e") v(1) = 1.0;
    else if (label == "f") {
        if (atom_levels < 3)
            throw std::invalid_argument("atom_state_from_label: no f level");
        v(2) = 1.0;
    } else if (label == "plus") { v(0) = inv_sqrt2; v(1) = inv_sqrt2; }
    else if (label == "minus") { v(0) = inv_sqrt2; v(1) = -inv_sqrt2; }
    else throw std::invalid_argument("atom_state_from_label: unknown label '" +
                                     label + "'");
    return v;
}

MeasurementOutcome project_atom(const QuantumState& joint, const Vector& atom_state) {
    if (joint.part != Subsystem::Joint)
        throw std::invalid_argument("project_atom: needs a joint state");
    const int levels = joint.space.atom_levels;
    const int N = joint.space.fock_cutoff;
    if (atom_state.size() != levels)
        throw std::invalid_argument("project_atom: atom vector has wrong dimension");
    Vector a = atom_state.normalized();

    MeasurementOutcome out;
    if (joint.kind == StateKind::Pure) {
        // psi_r(n) = sum_k conj(a_k) psi(k, n)
        Vector psi_r = Vector::Zero(N);
        for (int k = 0; k < levels; ++k)
            psi_r += std::conj(a(k)) * joint.vec.segment(k * N, N);
        double p = psi_r.squaredNorm();
        out.probability = p;
        if (p < 1e-12)
            throw std::invalid_argument(
                "project_atom: outcome probability below 1e-12, no conditional state");
        out.conditional_state =
            hilbert::pure_state(psi_r / std::sqrt(p), joint.space, Subsystem::Resonator);
    } else {
        // rho_r = A rho A^dag with A = <a| (x) I
        Matrix A = Matrix::Zero(N, levels * N);
        for (int k = 0; k < levels; ++k)
            A.block(0, k * N, N, N) =
                std::conj(a(k)) * Matrix::Identity(N, N);
        Matrix rho_r = A * joint.rho * A.adjoint();
        double p = rho_r.trace().real();
        out.probability = p;
        if (p < 1e-12)
            throw std::invalid_argument(
                "project_atom: outcome probability below 1e-12, no conditional state");
        rho_r /= p;
        rho_r = 0.5 * (rho_r + rho_r.adjoint()).eval();
        out.conditional_state =
            hilbert::mixed_state(std::move(rho_r), joint.space, Subsystem::Resonator);
    }
    hilbert::require_fock_headroom(out.conditional_state, "project_atom");
    return out;
}

MeasurementOutcome project_atom(const QuantumState& joint, const std::string& label) {
    return project_atom(joint, atom_state_from_label(label, joint.space.atom_levels));
}

namespace {

void require_resonator(const QuantumState& s, const char* who) {
    if (s.part != Subsystem::Resonator)
        throw std::invalid_argument(std::string(who) + ": needs a resonator-only state");
}

double displaced_parity(const Matrix& rho, Complex two_alpha) {
    const int dim = rho.rows();
    Matrix d = hilbert::displacement_elements(two_alpha, dim);
    // Tr(rho D P) = sum_{n,m} rho(n,m) D(m,n) (-1)^n
    Complex acc = 0;
    for (int n = 0; n < dim; ++n) {
        Complex row = 0;
        for (int m = 0; m < dim; ++m) row += rho(n, m) * d(m, n);
        acc += (n % 2 == 0) ? row : -row;
    }
    return acc.real();
}

}  // namespace

double wigner_point(const QuantumState& state, Complex alpha) {
    require_resonator(state, "wigner_point");
    return (2.0 / two_pi) * displaced_parity(state.density(), 2.0 * alpha);
}

WignerGrid wigner(const QuantumState& state, const WignerGridSpec& spec) {
    require_resonator(state, "wigner");
    if (spec.points < 2 || spec.points > 4096)
        throw std::invalid_argument("wigner: grid points out of range");
    double hw = spec.half_width;
    if (hw <= 0) {
        double n = 0;
        for (int k = 0; k < state.dim(); ++k)
            n += k * (state.kind == StateKind::Pure ? std::norm(state.vec(k))
                                                    : state.rho(k, k).real());
        hw = 1.25 * std::max(std::sqrt(n), 1.0);
    }
    WignerGrid grid;
    grid.re_axis.resize(spec.points);
    grid.im_axis.resize(spec.points);
    for (int i = 0; i < spec.points; ++i) {
        double x = -hw + 2.0 * hw * i / (spec.points - 1);
        grid.re_axis[i] = x;
        grid.im_axis[i] = x;
    }
    grid.values.resize(spec.points, spec.points);

    const Matrix rho = state.density();
    const double inv_pi = 2.0 / two_pi;
    auto compute_rows = [&](int begin, int end) {
        for (int i = begin; i < end; ++i)
            for (int j = 0; j < spec.points; ++j)
                grid.values(i, j) = inv_pi *
                    displaced_parity(rho, 2.0 * Complex(grid.re_axis[j],
                                                        grid.im_axis[i]));
    };
    unsigned workers = std::min(std::thread::hardware_concurrency(), 8u);
    if (workers > 1 && spec.points >= 64) {
        std::vector<std::thread> pool;
        int chunk = (spec.points + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            int b = w * chunk, e = std::min<int>(spec.points, b + chunk);
            if (b < e) pool.emplace_back(compute_rows, b, e);
        }
        for (auto& th : pool) th.join();
    } else {
        compute_rows(0, spec.points);
    }
    return grid;
}

double WignerGrid::integral() const {
    if (re_axis.size() < 2) return 0;
    double dre = re_axis[1] - re_axis[0];
    double dim_ = im_axis[1] - im_axis[0];
    return values.sum() * dre * dim_;
}

double parity(const QuantumState& state) {
    require_resonator(state, "parity");
    double acc = 0;
    for (int k = 0; k < state.dim(); ++k) {
        double p = state.kind == StateKind::Pure ? std::norm(state.vec(k))
                                                 : state.rho(k, k).real();
        acc += (k % 2 == 0) ? p : -p;
    }
    return acc;
}

double fidelity(const QuantumState& a, const QuantumState& b) {
    if (a.part != b.part || a.space != b.space)
        throw std::invalid_argument("fidelity: states on different spaces");
    if (a.kind == StateKind::Pure && b.kind == StateKind::Pure) {
        Complex ov = a.vec.dot(b.vec);
        return std::min(1.0, std::norm(ov));
    }
    if (a.kind == StateKind::Pure)
        return std::min(1.0, std::real(Complex(a.vec.dot(b.rho * a.vec))));
    if (b.kind == StateKind::Pure)
        return std::min(1.0, std::real(Complex(b.vec.dot(a.rho * b.vec))));
    // Uhlmann: (tr sqrt(sqrt(ra) rb sqrt(ra)))^2
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.rho);
    Vector sq = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Matrix sqrt_a = es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().adjoint();
    Matrix m = sqrt_a * b.rho * sqrt_a;
    Eigen::SelfAdjointEigenSolver<Matrix> es2(0.5 * (m + m.adjoint()),
                                              Eigen::EigenvaluesOnly);
    double f = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return std::min(1.0, f * f);
}

CatLobeWeights cat_lobe_weights(const QuantumState& state, Complex alpha_ref) {
    require_resonator(state, "cat_lobe_weights");
    CatLobeWeights w;
    w.ill_conditioned = std::abs(alpha_ref) <= 1.0;
    Vector plus = hilbert::coherent_state(alpha_ref, state.space).vec;
    Vector minus = hilbert::coherent_state(-alpha_ref, state.space).vec;
    const Matrix rho = state.density();
    w.w_plus = std::real(Complex(plus.dot(rho * plus)));
    w.w_minus = std::real(Complex(minus.dot(rho * minus)));
    w.cross = plus.dot(rho * minus);
    return w;
}

}  // namespace analysis
}  // namespace catgen
