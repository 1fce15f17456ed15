#ifndef QWORK_QMAT_HPP
#define QWORK_QMAT_HPP

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace qwork {

/// Thrown when a numeric tolerance contract is violated at run time
/// (integrator aborts, residuals out of bounds, failed bracketing, ...).
/// Argument/precondition violations throw std::invalid_argument instead.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace qmat {

using Complex = std::complex<double>;

/// Dense complex matrix; the working dimensions are 2 and 4.
using ComplexMatrix = Eigen::MatrixXcd;

/// Default absolute tolerance for entrywise matrix comparisons.
constexpr double kDefaultTol = 1e-12;

/// max_ij |a_ij - b_ij| <= tol, with matching dimensions required.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kDefaultTol);

/// Largest entrywise absolute difference.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);

ComplexMatrix identity(Eigen::Index dim);
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();
ComplexMatrix sigma_minus();  // |0><1|
ComplexMatrix sigma_plus();   // |1><0|

enum class Subsystem { a, b };

/// A validated quantum state: Hermitian within 1e-10, unit trace within
/// 1e-10, positive semidefinite down to -1e-9 on the smallest eigenvalue.
/// Construction throws numerical_error if any of these fail.
class DensityMatrix {
public:
    static constexpr double kHermTol = 1e-10;
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kPsdTol = -1e-9;

    explicit DensityMatrix(ComplexMatrix m, std::string label = {});

    const ComplexMatrix& mat() const { return mat_; }
    const std::string& label() const { return label_; }
    Eigen::Index dim() const { return mat_.rows(); }

    Complex operator()(Eigen::Index i, Eigen::Index j) const { return mat_(i, j); }

private:
    ComplexMatrix mat_;
    std::string label_;
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending,
/// eigenvector columns in matching order.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Kronecker product, dim = dim(a)*dim(b). Inputs must be square.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced state of one qubit of a two-qubit state; subsystem a is the
/// left tensor factor. Throws std::invalid_argument unless rho is 4x4.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Hermitian eigendecomposition; input must be Hermitian within 1e-8.
Spectrum herm_eig(const ComplexMatrix& m);

/// Hermitian PSD square root. Eigenvalues in [-1e-9, 0) are clamped to 0;
/// anything below -1e-9 throws.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// -Tr(rho log rho) in nats, with 0 log 0 == 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// -p log p - (1-p) log(1-p) in nats; p must lie in [0, 1].
double binary_entropy(double p);

/// Tr(rho h) for Hermitian h; the imaginary residual must stay below 1e-10.
double mean_energy(const DensityMatrix& rho, const ComplexMatrix& h);

}  // namespace qmat
}  // namespace qwork

#endif
