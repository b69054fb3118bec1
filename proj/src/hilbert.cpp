#include "catgen/hilbert.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace catgen {
namespace hilbert {

SpaceDescriptor make_space(int atom_levels, int fock_cutoff) {
    if (atom_levels != 2 && atom_levels != 3)
        throw std::invalid_argument("make_space: atom_levels must be 2 or 3, got " +
                                    std::to_string(atom_levels));
    if (fock_cutoff < 2)
        throw std::invalid_argument("make_space: fock_cutoff must be >= 2, got " +
                                    std::to_string(fock_cutoff));
    return SpaceDescriptor{atom_levels, fock_cutoff};
}

int subsystem_dim(const SpaceDescriptor& space, Subsystem part) {
    switch (part) {
        case Subsystem::Joint: return space.dim();
        case Subsystem::Atom: return space.atom_levels;
        case Subsystem::Resonator: return space.fock_cutoff;
    }
    return 0;
}

Operator make_operator(Matrix m, const SpaceDescriptor& space, Subsystem part) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("make_operator: matrix must be square");
    if (m.rows() != subsystem_dim(space, part))
        throw std::invalid_argument("make_operator: dimension " +
                                    std::to_string(m.rows()) +
                                    " does not match declared factor");
    return Operator{std::move(m), space, part};
}

QuantumState pure_state(Vector psi, const SpaceDescriptor& space, Subsystem part) {
    if (psi.size() != subsystem_dim(space, part))
        throw std::invalid_argument("pure_state: dimension mismatch");
    double n = psi.norm();
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("pure_state: vector not normalized, |psi| = " +
                                    std::to_string(n));
    QuantumState s;
    s.kind = StateKind::Pure;
    s.vec = std::move(psi);
    s.space = space;
    s.part = part;
    return s;
}

QuantumState mixed_state(Matrix rho, const SpaceDescriptor& space, Subsystem part) {
    if (rho.rows() != rho.cols() || rho.rows() != subsystem_dim(space, part))
        throw std::invalid_argument("mixed_state: dimension mismatch");
    if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9)
        throw std::invalid_argument("mixed_state: trace != 1");
    if (!is_hermitian(rho, 1e-10))
        throw std::invalid_argument("mixed_state: not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw std::invalid_argument("mixed_state: negative eigenvalue " +
                                    std::to_string(es.eigenvalues().minCoeff()));
    QuantumState s;
    s.kind = StateKind::Mixed;
    s.rho = std::move(rho);
    s.space = space;
    s.part = part;
    return s;
}

QuantumState basis_state(const SpaceDescriptor& space, int atom_index, int fock_index) {
    if (atom_index < 0 || atom_index >= space.atom_levels)
        throw std::invalid_argument("basis_state: atom index out of range");
    if (fock_index < 0 || fock_index >= space.fock_cutoff)
        throw std::invalid_argument("basis_state: fock index out of range");
    Vector v = Vector::Zero(space.dim());
    v(atom_index * space.fock_cutoff + fock_index) = 1.0;
    return pure_state(std::move(v), space, Subsystem::Joint);
}

Operator mode_annihilation(const SpaceDescriptor& space) {
    const int N = space.fock_cutoff;
    Matrix a = Matrix::Zero(N, N);
    for (int n = 1; n < N; ++n) a(n - 1, n) = std::sqrt(double(n));
    return Operator{std::move(a), space, Subsystem::Resonator};
}

Operator mode_creation(const SpaceDescriptor& space) {
    Operator a = mode_annihilation(space);
    a.mat = a.mat.adjoint().eval();
    return a;
}

Operator mode_number(const SpaceDescriptor& space) {
    const int N = space.fock_cutoff;
    Matrix n = Matrix::Zero(N, N);
    for (int k = 0; k < N; ++k) n(k, k) = double(k);
    return Operator{std::move(n), space, Subsystem::Resonator};
}

Operator mode_parity(const SpaceDescriptor& space) {
    const int N = space.fock_cutoff;
    Matrix p = Matrix::Zero(N, N);
    for (int k = 0; k < N; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    return Operator{std::move(p), space, Subsystem::Resonator};
}

Operator identity_on(const SpaceDescriptor& space, Subsystem part) {
    int d = subsystem_dim(space, part);
    return Operator{Matrix::Identity(d, d), space, part};
}

Operator annihilation(const SpaceDescriptor& space) {
    return tensor(identity_on(space, Subsystem::Atom), mode_annihilation(space));
}

Operator creation(const SpaceDescriptor& space) {
    return tensor(identity_on(space, Subsystem::Atom), mode_creation(space));
}

Operator number(const SpaceDescriptor& space) {
    return tensor(identity_on(space, Subsystem::Atom), mode_number(space));
}

Operator sigma_z(const SpaceDescriptor& space) {
    Matrix m = Matrix::Zero(space.atom_levels, space.atom_levels);
    m(0, 0) = -1.0;  // |g>
    m(1, 1) = 1.0;   // |e>
    return Operator{std::move(m), space, Subsystem::Atom};
}

Operator atom_projector(const SpaceDescriptor& space, int level) {
    if (level < 0 || level >= space.atom_levels)
        throw std::invalid_argument("atom_projector: level out of range");
    Matrix m = Matrix::Zero(space.atom_levels, space.atom_levels);
    m(level, level) = 1.0;
    return Operator{std::move(m), space, Subsystem::Atom};
}

Operator atom_transition(const SpaceDescriptor& space, int to, int from) {
    if (to < 0 || to >= space.atom_levels || from < 0 || from >= space.atom_levels)
        throw std::invalid_argument("atom_transition: level out of range");
    Matrix m = Matrix::Zero(space.atom_levels, space.atom_levels);
    m(to, from) = 1.0;
    return Operator{std::move(m), space, Subsystem::Atom};
}

Selection selection_from_string(const std::string& s) {
    if (s == "cascade") return Selection::Cascade;
    if (s == "lambda") return Selection::Lambda;
    if (s == "vee") return Selection::Vee;
    throw std::invalid_argument("unknown selection '" + s + "'");
}

std::string to_string(Selection s) {
    switch (s) {
        case Selection::Cascade: return "cascade";
        case Selection::Lambda: return "lambda";
        case Selection::Vee: return "vee";
    }
    return "?";
}

TransitionOps atom_transition_ops(const SpaceDescriptor& space, Selection sel) {
    TransitionOps ops;
    if (space.atom_levels == 2) {
        if (sel != Selection::Cascade)
            throw std::invalid_argument(
                "atom_transition_ops: lambda/vee need a 3-level atom");
        ops.raise1 = atom_transition(space, 1, 0);  // |e><g|
        ops.lower1 = atom_transition(space, 0, 1);
        return ops;
    }
    // levels: 0=g, 1=e, 2=f
    switch (sel) {
        case Selection::Cascade:
            ops.raise1 = atom_transition(space, 1, 0);  // |e><g|
            ops.raise2 = atom_transition(space, 2, 1);  // |f><e|
            break;
        case Selection::Lambda:
            ops.raise1 = atom_transition(space, 2, 0);  // |f><g|
            ops.raise2 = atom_transition(space, 2, 1);  // |f><e|
            break;
        case Selection::Vee:
            ops.raise1 = atom_transition(space, 1, 0);  // |e><g|
            ops.raise2 = atom_transition(space, 2, 0);  // |f><g|
            break;
    }
    ops.lower1 = ops.raise1;
    ops.lower1.mat = ops.raise1.mat.adjoint().eval();
    ops.lower2 = ops.raise2;
    ops.lower2.mat = ops.raise2.mat.adjoint().eval();
    ops.has_second = true;
    return ops;
}

Operator tensor(const Operator& atom_op, const Operator& resonator_op) {
    if (atom_op.part != Subsystem::Atom || resonator_op.part != Subsystem::Resonator)
        throw std::invalid_argument("tensor: expects (atom factor, resonator factor)");
    if (atom_op.space != resonator_op.space)
        throw std::invalid_argument("tensor: operators live on different spaces");
    const int da = atom_op.dim(), dr = resonator_op.dim();
    Matrix out(da * dr, da * dr);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            out.block(i * dr, j * dr, dr, dr) = atom_op.mat(i, j) * resonator_op.mat;
    return Operator{std::move(out), atom_op.space, Subsystem::Joint};
}

bool displacement_fits(Complex alpha, const SpaceDescriptor& space) {
    double m = std::abs(alpha);
    return m * m + 5.0 * m + 10.0 <= double(space.fock_cutoff);
}

void require_displacement_fits(Complex alpha, const SpaceDescriptor& space,
                               const std::string& who) {
    if (!displacement_fits(alpha, space)) {
        double m = std::abs(alpha);
        throw CutoffError(who + ": |alpha| = " + std::to_string(m) +
                          " needs fock_cutoff >= " +
                          std::to_string(int(std::ceil(m * m + 5 * m + 10))) +
                          ", have " + std::to_string(space.fock_cutoff));
    }
}

Operator displacement(Complex alpha, const SpaceDescriptor& space) {
    require_displacement_fits(alpha, space, "displacement");
    const int N = space.fock_cutoff;
    Matrix gen = Matrix::Zero(N, N);
    for (int n = 1; n < N; ++n) {
        gen(n, n - 1) = alpha * std::sqrt(double(n));         // alpha a^dag
        gen(n - 1, n) = -std::conj(alpha) * std::sqrt(double(n));
    }
    return Operator{matrix_exponential(gen), space, Subsystem::Resonator};
}

QuantumState coherent_state(Complex alpha, const SpaceDescriptor& space) {
    require_displacement_fits(alpha, space, "coherent_state");
    const int N = space.fock_cutoff;
    Vector v(N);
    // |n> amplitude e^{-|a|^2/2} a^n / sqrt(n!)
    v(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < N; ++n) v(n) = v(n - 1) * alpha / std::sqrt(double(n));
    v.normalize();
    QuantumState s = pure_state(std::move(v), space, Subsystem::Resonator);
    require_fock_headroom(s, "coherent_state");
    return s;
}

Matrix displacement_elements(Complex alpha, int dim) {
    // Corner block of the exact operator; the recurrences below never reference
    // elements outside the block, so no truncation error enters.
    Matrix D(dim, dim);
    const double a2 = std::norm(alpha);
    const Complex nac = -std::conj(alpha);
    const double expa2 = std::exp(-0.5 * a2);
    D(0, 0) = expa2;
    if (dim == 1) return D;
    for (int n = 1; n < dim; ++n)
        D(n, 0) = D(n - 1, 0) * alpha / std::sqrt(double(n));
    for (int m = 1; m < dim; ++m)
        D(0, m) = D(0, m - 1) * nac / std::sqrt(double(m));
    for (int i = 1; i < dim; ++i)
        D(i, i) = ((2.0 * i - 1.0 - a2) * D(i - 1, i - 1) -
                   (i - 1.0) * (i >= 2 ? D(i - 2, i - 2) : Complex(0))) / double(i);
    // off-diagonals by three-term recurrence; the (m-1) factor vanishes at m=1,
    // so the out-of-block term never contributes
    for (int d = 1; d < dim; ++d) {
        for (int m = 1; m + d < dim; ++m) {
            int n = m + d;
            Complex prev2 = (m >= 2) ? D(n - 2, m - 2) : Complex(0);
            D(n, m) = (m + n - 1.0 - a2) / std::sqrt(double(m) * double(n)) * D(n - 1, m - 1)
                      - std::sqrt((m - 1.0) * (n - 1.0) / (double(m) * double(n))) * prev2;
        }
        // above diagonal: m = n + d
        for (int n = 1; n + d < dim; ++n) {
            int m = n + d;
            Complex prev2 = (n >= 2) ? D(n - 2, m - 2) : Complex(0);
            D(n, m) = (m + n - 1.0 - a2) / std::sqrt(double(m) * double(n)) * D(n - 1, m - 1)
                      - std::sqrt((m - 1.0) * (n - 1.0) / (double(m) * double(n))) * prev2;
        }
    }
    return D;
}

bool is_hermitian(const Matrix& m, double tol) {
    return max_abs(m - m.adjoint()) <= tol;
}

double max_abs(const Matrix& m) {
    return m.cwiseAbs().maxCoeff();
}

Matrix matrix_exponential(const Matrix& m) {
    return m.exp();
}

double top_fock_population(const QuantumState& state) {
    const int N = state.space.fock_cutoff;
    double pop = 0.0;
    auto add_level = [&](int atom, int fock) {
        int idx = (state.part == Subsystem::Resonator) ? fock : atom * N + fock;
        if (state.kind == StateKind::Pure)
            pop += std::norm(state.vec(idx));
        else
            pop += state.rho(idx, idx).real();
    };
    int atoms = (state.part == Subsystem::Resonator) ? 1 : state.space.atom_levels;
    for (int a = 0; a < atoms; ++a) {
        add_level(a, N - 1);
        add_level(a, N - 2);
    }
    return pop;
}

void require_fock_headroom(const QuantumState& state, const std::string& who) {
    double pop = top_fock_population(state);
    if (pop >= 1e-6)
        throw CutoffError(who + ": top two Fock levels hold population " +
                          std::to_string(pop) + " (>= 1e-6); raise fock_cutoff");
}

}  // namespace hilbert
}  // namespace catgen
