#ifndef CATGEN_HILBERT_HPP
#define CATGEN_HILBERT_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace catgen {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Raised when a state or operator would populate the truncated Fock tail.
class CutoffError : public std::runtime_error {
public:
    explicit CutoffError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an integrator guard (norm/trace drift, positivity) trips.
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

namespace hilbert {

/// Composite space: a 2- or 3-level atom tensored with a truncated Fock space,
/// in fixed atom (x) resonator ordering. Joint index = atom * fock_cutoff + n.
struct SpaceDescriptor {
    int atom_levels = 2;
    int fock_cutoff = 40;

    int dim() const { return atom_levels * fock_cutoff; }
    bool operator==(const SpaceDescriptor& o) const {
        return atom_levels == o.atom_levels && fock_cutoff == o.fock_cutoff;
    }
    bool operator!=(const SpaceDescriptor& o) const { return !(*this == o); }
};

SpaceDescriptor make_space(int atom_levels, int fock_cutoff);

/// Which factor of the composite space a matrix or vector lives on.
enum class Subsystem { Joint, Atom, Resonator };

int subsystem_dim(const SpaceDescriptor& space, Subsystem part);

struct Operator {
    Matrix mat;
    SpaceDescriptor space;
    Subsystem part = Subsystem::Joint;

    int dim() const { return static_cast<int>(mat.rows()); }
};

Operator make_operator(Matrix m, const SpaceDescriptor& space, Subsystem part);

enum class StateKind { Pure, Mixed };

/// Pure vector or density matrix on one factor (or the whole) of a space.
struct QuantumState {
    StateKind kind = StateKind::Pure;
    Vector vec;     // pure
    Matrix rho;     // mixed
    SpaceDescriptor space;
    Subsystem part = Subsystem::Joint;

    int dim() const {
        return kind == StateKind::Pure ? static_cast<int>(vec.size())
                                       : static_cast<int>(rho.rows());
    }
    /// Density matrix view regardless of kind.
    Matrix density() const {
        return kind == StateKind::Pure ? Matrix(vec * vec.adjoint()) : rho;
    }
};

QuantumState pure_state(Vector psi, const SpaceDescriptor& space,
                        Subsystem part = Subsystem::Joint);
QuantumState mixed_state(Matrix rho, const SpaceDescriptor& space,
                         Subsystem part = Subsystem::Joint);

/// Basis product state |atom_index> (x) |fock_index>.
QuantumState basis_state(const SpaceDescriptor& space, int atom_index, int fock_index);

// --- resonator-factor builders ---

/// Truncated annihilation operator on the resonator factor, <n-1|a|n> = sqrt(n).
Operator mode_annihilation(const SpaceDescriptor& space);
Operator mode_creation(const SpaceDescriptor& space);
Operator mode_number(const SpaceDescriptor& space);
/// Photon-number parity exp(i pi n), diagonal (-1)^n.
Operator mode_parity(const SpaceDescriptor& space);
Operator identity_on(const SpaceDescriptor& space, Subsystem part);

/// a acting on the resonator factor of the joint space (identity on the atom).
Operator annihilation(const SpaceDescriptor& space);
Operator creation(const SpaceDescriptor& space);
Operator number(const SpaceDescriptor& space);

// --- atom-factor builders ---

/// sigma_z = |e><e| - |g><g| embedded in the atom factor (f level untouched).
Operator sigma_z(const SpaceDescriptor& space);
/// |to><from| on the atom factor.
Operator atom_projector(const SpaceDescriptor& space, int level);
Operator atom_transition(const SpaceDescriptor& space, int to, int from);

/// Selection rules for the three-level transition operator pairs.
enum class Selection { Cascade, Lambda, Vee };

Selection selection_from_string(const std::string& s);
std::string to_string(Selection s);

/// Raising operators for the allowed transitions. For a two-level space only
/// the cascade set {sigma_+} exists. Lowering partners are the adjoints.
struct TransitionOps {
    Operator raise1, lower1;   // first transition
    Operator raise2, lower2;   // second transition (qutrit only)
    bool has_second = false;
};

TransitionOps atom_transition_ops(const SpaceDescriptor& space, Selection sel);

/// Kronecker product in the fixed atom (x) resonator ordering.
Operator tensor(const Operator& atom_op, const Operator& resonator_op);

/// Truncation guard |alpha|^2 + 5|alpha| + 10 <= N used by displacement-type ops.
bool displacement_fits(Complex alpha, const SpaceDescriptor& space);
void require_displacement_fits(Complex alpha, const SpaceDescriptor& space,
                               const std::string& who);

/// exp(alpha a^dag - alpha* a) on the resonator factor, via scaling-and-squaring
/// matrix exponential of the truncated generator.
Operator displacement(Complex alpha, const SpaceDescriptor& space);

/// D(alpha)|0> with guard on alpha and on the top two Fock populations.
QuantumState coherent_state(Complex alpha, const SpaceDescriptor& space);

/// Fock-basis matrix elements <m|D(alpha)|n> of the untruncated displacement
/// operator, generated by stable recurrences; exact up to rounding for any
/// alpha, independent of the cutoff.
Matrix displacement_elements(Complex alpha, int dim);

// --- small utilities ---

bool is_hermitian(const Matrix& m, double tol = 1e-12);
double max_abs(const Matrix& m);
Matrix matrix_exponential(const Matrix& m);

/// Population of the top two Fock levels of a resonator (or joint) state.
double top_fock_population(const QuantumState& state);
void require_fock_headroom(const QuantumState& state, const std::string& who);

}  // namespace hilbert
}  // namespace catgen

#endif
