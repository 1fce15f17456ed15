#include "qwork/qmat.hpp"

#include <cmath>
#include <utility>

namespace qwork {
namespace qmat {

namespace {
const Complex kI(0.0, 1.0);
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs_diff(a, b) <= tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix sigma_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix sigma_y() {
    ComplexMatrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

ComplexMatrix sigma_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix sigma_minus() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1;
    return m;
}

ComplexMatrix sigma_plus() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(1, 0) = 1;
    return m;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, std::string label)
    : mat_(std::move(m)), label_(std::move(label)) {
    if (mat_.rows() != mat_.cols() || (mat_.rows() != 2 && mat_.rows() != 4))
        throw std::invalid_argument("DensityMatrix: dimension must be 2 or 4");
    const double herm = hermiticity_defect(mat_);
    if (herm > kHermTol)
        throw numerical_error("DensityMatrix: hermiticity defect " +
                              std::to_string(herm) + " exceeds tolerance");
    const double tr_res = std::abs(mat_.trace() - Complex(1.0));
    if (tr_res > kTraceTol)
        throw numerical_error("DensityMatrix: trace residual " +
                              std::to_string(tr_res) + " exceeds tolerance");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat_, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < kPsdTol)
        throw numerical_error("DensityMatrix: minimum eigenvalue " +
                              std::to_string(min_eig) + " below tolerance");
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw std::invalid_argument("tensor: inputs must be square");
    const Eigen::Index da = a.rows(), db = b.rows();
    ComplexMatrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a(i, j) * b;
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    if (rho.dim() != 4)
        throw std::invalid_argument("partial_trace: input must be 4x4");
    const ComplexMatrix& m = rho.mat();
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            for (Eigen::Index k = 0; k < 2; ++k)
                out(i, j) += (keep == Subsystem::a) ? m(2 * i + k, 2 * j + k)
                                                    : m(2 * k + i, 2 * k + j);
    std::string label = rho.label().empty()
                            ? std::string()
                            : rho.label() + (keep == Subsystem::a ? "_a" : "_b");
    return DensityMatrix(std::move(out), std::move(label));
}

Spectrum herm_eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("herm_eig: input must be square");
    if (hermiticity_defect(m) > 1e-8)
        throw std::invalid_argument("herm_eig: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
    if (es.info() != Eigen::Success)
        throw numerical_error("herm_eig: eigensolver failed to converge");
    // Eigen sorts ascending; flip to descending.
    Spectrum s;
    s.eigenvalues = es.eigenvalues().reverse();
    s.eigenvectors = es.eigenvectors().rowwise().reverse();
    return s;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    Spectrum s = herm_eig(m);
    Eigen::VectorXd ev = s.eigenvalues;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] < -1e-9)
            throw std::invalid_argument("psd_sqrt: eigenvalue " +
                                        std::to_string(ev[i]) +
                                        " below PSD tolerance");
        if (ev[i] < 0.0) ev[i] = 0.0;
    }
    return s.eigenvectors * ev.cwiseSqrt().asDiagonal() *
           s.eigenvectors.adjoint();
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.mat(),
                                                    Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double p = es.eigenvalues()[i];
        if (p > 0.0) entropy -= p * std::log(p);
    }
    return entropy < 0.0 ? 0.0 : entropy;
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("binary_entropy: p must lie in [0, 1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log(p);
    if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
    return h;
}

double mean_energy(const DensityMatrix& rho, const ComplexMatrix& h) {
    if (h.rows() != rho.dim() || h.cols() != rho.dim())
        throw std::invalid_argument("mean_energy: dimension mismatch");
    if (hermiticity_defect(h) > 1e-8)
        throw std::invalid_argument("mean_energy: h is not Hermitian");
    const Complex e = (rho.mat() * h).trace();
    if (std::abs(e.imag()) > 1e-10)
        throw numerical_error("mean_energy: imaginary residual " +
                              std::to_string(e.imag()) + " exceeds tolerance");
    return e.real();
}

}  // namespace qmat
}  // namespace qwork
