/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qtda/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qtda::qsim {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kGateUnitarityTolerance = 1e-12;
constexpr double kPostConditionTolerance = 1e-9;

void check_qubit_count(int qubits) {
    if (qubits < 1 || qubits > 30) throw InvalidInputError("qubit count out of range");
}

void check_unitary(const Eigen::MatrixXcd& u, double tol, const char* what) {
    if (u.rows() != u.cols()) throw InvalidInputError(std::string(what) + " is not square");
    const Eigen::MatrixXcd delta =
        u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    if (delta.cwiseAbs().maxCoeff() > tol)
        throw InvalidInputError(std::string(what) + " is not unitary");
}

// Places bits of `sub` at the qubit positions listed in `where`, ascending bit b
// of `sub` onto qubit where[b].
std::uint64_t spread_bits(std::uint64_t sub, std::span<const int> where) {
    std::uint64_t out = 0;
    for (std::size_t b = 0; b < where.size(); ++b)
        if ((sub >> b) & 1ULL) out |= 1ULL << where[b];
    return out;
}

std::uint64_t gather_bits(std::uint64_t index, std::span<const int> where) {
    std::uint64_t out = 0;
    for (std::size_t b = 0; b < where.size(); ++b)
        if ((index >> where[b]) & 1ULL) out |= 1ULL << b;
    return out;
}

void check_qubit_subset(int qubits, std::span<const int> subset, const char* what) {
    if (subset.empty()) throw InvalidInputError(std::string(what) + " must be nonempty");
    std::uint64_t seen = 0;
    for (int q : subset) {
        if (q < 0 || q >= qubits) throw InvalidInputError(std::string(what) + " qubit index out of range");
        if ((seen >> q) & 1ULL) throw InvalidInputError(std::string(what) + " has duplicate qubit indices");
        seen |= 1ULL << q;
    }
}

std::vector<int> complement_qubits(int qubits, std::span<const int> keep) {
    std::uint64_t mask = 0;
    for (int q : keep) mask |= 1ULL << q;
    std::vector<int> rest;
    for (int q = 0; q < qubits; ++q)
        if (!((mask >> q) & 1ULL)) rest.push_back(q);
    return rest;
}

} // namespace

StateVector StateVector::computational_basis(int qubits, std::uint64_t index) {
    check_qubit_count(qubits);
    if (index >= (1ULL << qubits)) throw InvalidInputError("basis index out of range");
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(1LL << qubits);
    amps(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(int qubits, Eigen::VectorXcd amplitudes) {
    check_qubit_count(qubits);
    if (amplitudes.size() != (1LL << qubits))
        throw InvalidInputError("amplitude vector length does not match the qubit count");
    if (std::abs(amplitudes.squaredNorm() - 1.0) > kNormTolerance)
        throw InvalidInputError("state vector is not normalized");
    return StateVector(qubits, std::move(amplitudes));
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
    Eigen::MatrixXcd rho = psi.amplitudes() * psi.amplitudes().adjoint();
    return DensityMatrix(psi.qubits(), std::move(rho));
}

DensityMatrix DensityMatrix::from_matrix(int qubits, Eigen::MatrixXcd rho) {
    check_qubit_count(qubits);
    if (rho.rows() != (1LL << qubits) || rho.cols() != (1LL << qubits))
        throw InvalidInputError("density matrix dimension does not match the qubit count");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kNormTolerance)
        throw InvalidInputError("density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > kNormTolerance || std::abs(rho.trace().imag()) > kNormTolerance)
        throw InvalidInputError("density matrix trace is not 1");
    return DensityMatrix(qubits, std::move(rho));
}

void DensityMatrix::validate() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("density matrix eigensolve failed");
    if (solver.eigenvalues().minCoeff() < -kNormTolerance)
        throw InvalidInputError("density matrix has a negative eigenvalue");
}

Eigen::Matrix2cd hadamard_gate() {
    Eigen::Matrix2cd h;
    const double s = 1.0 / std::numbers::sqrt2;
    h << s, s, s, -s;
    return h;
}

Eigen::Matrix2cd pauli_x_gate() {
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    return x;
}

Eigen::Matrix2cd pauli_z_gate() {
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    return z;
}

StateVector apply_gate(const StateVector& state, const Eigen::Matrix2cd& gate, int target) {
    if (target < 0 || target >= state.qubits()) throw InvalidInputError("gate target out of range");
    check_unitary(gate, kGateUnitarityTolerance, "gate");

    Eigen::VectorXcd amps = state.amplitudes();
    const std::uint64_t bit = 1ULL << target;
    const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const complexd a0 = amps(static_cast<Eigen::Index>(i));
        const complexd a1 = amps(static_cast<Eigen::Index>(i | bit));
        amps(static_cast<Eigen::Index>(i)) = gate(0, 0) * a0 + gate(0, 1) * a1;
        amps(static_cast<Eigen::Index>(i | bit)) = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
    return StateVector::from_amplitudes(state.qubits(), std::move(amps));
}

StateVector apply_controlled(const StateVector& state, const Eigen::MatrixXcd& u, int control,
                             std::span<const int> targets) {
    check_qubit_subset(state.qubits(), targets, "target set");
    if (control < 0 || control >= state.qubits()) throw InvalidInputError("control qubit out of range");
    for (int t : targets)
        if (t == control) throw InvalidInputError("control and target qubits overlap");
    const Eigen::Index sub_dim = 1LL << targets.size();
    if (u.rows() != sub_dim || u.cols() != sub_dim)
        throw InvalidInputError("controlled unitary dimension does not match the target count");
    check_unitary(u, kGateUnitarityTolerance, "controlled unitary");

    Eigen::VectorXcd amps = state.amplitudes();
    const std::uint64_t control_bit = 1ULL << control;
    std::uint64_t target_mask = 0;
    for (int t : targets) target_mask |= 1ULL << t;

    Eigen::VectorXcd local(sub_dim);
    const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (!(base & control_bit) || (base & target_mask)) continue;
        for (std::uint64_t p = 0; p < static_cast<std::uint64_t>(sub_dim); ++p)
            local(static_cast<Eigen::Index>(p)) =
                amps(static_cast<Eigen::Index>(base | spread_bits(p, targets)));
        local = (u * local).eval();
        for (std::uint64_t p = 0; p < static_cast<std::uint64_t>(sub_dim); ++p)
            amps(static_cast<Eigen::Index>(base | spread_bits(p, targets))) =
                local(static_cast<Eigen::Index>(p));
    }
    return StateVector::from_amplitudes(state.qubits(), std::move(amps));
}

StateVector apply_cnot(const StateVector& state, int control, int target) {
    const int targets[] = {target};
    return apply_controlled(state, pauli_x_gate(), control, targets);
}

DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep) {
    check_qubit_subset(state.qubits(), keep, "keep set");
    const std::vector<int> rest = complement_qubits(state.qubits(), keep);
    const Eigen::Index keep_dim = 1LL << keep.size();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(keep_dim, keep_dim);
    Eigen::VectorXcd slice(keep_dim);
    const std::uint64_t rest_dim = 1ULL << rest.size();
    for (std::uint64_t r = 0; r < rest_dim; ++r) {
        const std::uint64_t rest_bits = spread_bits(r, rest);
        for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(keep_dim); ++a)
            slice(static_cast<Eigen::Index>(a)) =
                state.amplitudes()(static_cast<Eigen::Index>(rest_bits | spread_bits(a, keep)));
        rho.noalias() += slice * slice.adjoint();
    }
    return DensityMatrix::from_matrix(static_cast<int>(keep.size()), std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    check_qubit_subset(rho.qubits(), keep, "keep set");
    const std::vector<int> rest = complement_qubits(rho.qubits(), keep);
    const Eigen::Index keep_dim = 1LL << keep.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(keep_dim, keep_dim);
    const std::uint64_t rest_dim = 1ULL << rest.size();
    for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(keep_dim); ++a)
        for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(keep_dim); ++b) {
            complexd acc = 0.0;
            for (std::uint64_t r = 0; r < rest_dim; ++r) {
                const std::uint64_t rest_bits = spread_bits(r, rest);
                acc += rho.matrix()(static_cast<Eigen::Index>(rest_bits | spread_bits(a, keep)),
                                    static_cast<Eigen::Index>(rest_bits | spread_bits(b, keep)));
            }
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
        }
    return DensityMatrix::from_matrix(static_cast<int>(keep.size()), std::move(out));
}

std::vector<double> measure_distribution(const StateVector& state, std::span<const int> qubits) {
    check_qubit_subset(state.qubits(), qubits, "measured set");
    std::vector<double> prob(1ULL << qubits.size(), 0.0);
    const std::uint64_t dim = static_cast<std::uint64_t>(state.dimension());
    for (std::uint64_t i = 0; i < dim; ++i)
        prob[gather_bits(i, qubits)] += std::norm(state.amplitudes()(static_cast<Eigen::Index>(i)));
    return prob;
}

std::vector<double> measure_distribution(const DensityMatrix& rho, std::span<const int> qubits) {
    check_qubit_subset(rho.qubits(), qubits, "measured set");
    std::vector<double> prob(1ULL << qubits.size(), 0.0);
    const std::uint64_t dim = static_cast<std::uint64_t>(rho.dimension());
    for (std::uint64_t i = 0; i < dim; ++i)
        prob[gather_bits(i, qubits)] += rho.matrix()(static_cast<Eigen::Index>(i),
                                                     static_cast<Eigen::Index>(i)).real();
    return prob;
}

HermitianOperator::HermitianOperator(Eigen::MatrixXcd a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols() || a_.rows() == 0)
        throw InvalidInputError("Hermitian operator must be square and non-empty");
    if ((a_ - a_.adjoint()).cwiseAbs().maxCoeff() > kGateUnitarityTolerance)
        throw InvalidInputError("operator is not Hermitian within 1e-12");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a_);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigendecomposition failed to converge");
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
    const Eigen::MatrixXcd gram =
        eigenvectors_.adjoint() * eigenvectors_ - Eigen::MatrixXcd::Identity(a_.rows(), a_.cols());
    if (gram.cwiseAbs().maxCoeff() > kPostConditionTolerance)
        throw NumericalError("eigenvector matrix is not unitary within 1e-9");
}

Eigen::MatrixXcd HermitianOperator::unitary_exponential(double scale) const {
    Eigen::VectorXcd phases(eigenvalues_.size());
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
        const double phi = 2.0 * std::numbers::pi * scale * eigenvalues_(i);
        phases(i) = complexd(std::cos(phi), std::sin(phi));
    }
    Eigen::MatrixXcd u = eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
    check_unitary(u, kPostConditionTolerance, "exponential");
    return u;
}

namespace {

// In-place radix-2 transform: a[x] <- sum_y exp(sign*2*pi*i*x*y/N) a[y].
void fourier_pow2(std::vector<complexd>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const complexd wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            complexd w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const complexd u = a[i + j];
                const complexd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

Eigen::VectorXd phase_estimate_pure(const Eigen::MatrixXcd& u, const Eigen::VectorXcd& psi,
                                    int t) {
    const Eigen::Index d = psi.size();
    const std::size_t reg_dim = 1ULL << t;

    // Register uniform, then the controlled-U^(2^j) ladder leaves component y
    // carrying U^y |psi>.
    std::vector<Eigen::VectorXcd> joint(reg_dim, psi / std::sqrt(static_cast<double>(reg_dim)));
    Eigen::MatrixXcd u_pow = u; // U^(2^j)
    for (int j = 0; j < t; ++j) {
        for (std::size_t y = 0; y < reg_dim; ++y)
            if ((y >> j) & 1ULL) joint[y] = (u_pow * joint[y]).eval();
        if (j + 1 < t) u_pow = (u_pow * u_pow).eval();
    }

    // Inverse QFT on the register, then the register marginal.
    Eigen::VectorXd prob = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(reg_dim));
    std::vector<complexd> column(reg_dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(reg_dim));
    for (Eigen::Index s = 0; s < d; ++s) {
        for (std::size_t y = 0; y < reg_dim; ++y) column[y] = joint[y](s);
        fourier_pow2(column, -1);
        for (std::size_t x = 0; x < reg_dim; ++x)
            prob(static_cast<Eigen::Index>(x)) += std::norm(column[x] * norm);
    }
    return prob;
}

} // namespace

Eigen::VectorXd phase_estimate(const Eigen::MatrixXcd& u, const Eigen::VectorXcd& psi,
                               int register_qubits) {
    if (register_qubits < 1 || register_qubits > 24)
        throw InvalidInputError("phase-estimation register must have between 1 and 24 qubits");
    if (u.rows() != psi.size())
        throw InvalidInputError("unitary and state dimensions do not match");
    check_unitary(u, kPostConditionTolerance, "phase-estimation unitary");
    if (std::abs(psi.squaredNorm() - 1.0) > kNormTolerance)
        throw InvalidInputError("phase-estimation input state is not normalized");
    return phase_estimate_pure(u, psi, register_qubits);
}

Eigen::VectorXd phase_estimate(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& rho,
                               int register_qubits) {
    if (register_qubits < 1 || register_qubits > 24)
        throw InvalidInputError("phase-estimation register must have between 1 and 24 qubits");
    if (u.rows() != rho.rows() || rho.rows() != rho.cols())
        throw InvalidInputError("unitary and density-matrix dimensions do not match");
    check_unitary(u, kPostConditionTolerance, "phase-estimation unitary");
    if (std::abs(rho.trace().real() - 1.0) > kNormTolerance)
        throw InvalidInputError("phase-estimation input has trace != 1");

    // The register statistics are linear in rho: mix the pure-state runs over
    // rho's eigenensemble.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
    if (solver.info() != Eigen::Success) throw NumericalError("density matrix eigensolve failed");

    Eigen::VectorXd prob = Eigen::VectorXd::Zero(1LL << register_qubits);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double w = solver.eigenvalues()(i);
        if (w < -kNormTolerance) throw InvalidInputError("phase-estimation input is not positive");
        if (w <= 1e-15) continue;
        prob += w * phase_estimate_pure(u, solver.eigenvectors().col(i), register_qubits);
    }
    return prob;
}

StateVector grover_amplify(int qubits, const std::function<bool(std::uint64_t)>& oracle,
                           int iterations) {
    check_qubit_count(qubits);
    if (iterations < 0) throw InvalidInputError("iteration count must be non-negative");
    const std::uint64_t dim = 1ULL << qubits;
    std::vector<std::uint64_t> marked;
    for (std::uint64_t i = 0; i < dim; ++i)
        if (oracle(i)) marked.push_back(i);
    if (marked.empty())
        throw InvalidInputError("oracle marks no states: the search cannot succeed");

    Eigen::VectorXcd amps =
        Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(dim),
                                   complexd(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    for (int it = 0; it < iterations; ++it) {
        for (std::uint64_t m : marked) amps(static_cast<Eigen::Index>(m)) *= -1.0;
        const complexd mean = amps.mean();
        amps = (2.0 * mean) * Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(dim)) - amps;
    }
    return StateVector::from_amplitudes(qubits, std::move(amps));
}

int optimal_grover_iterations(std::uint64_t n_states, std::uint64_t n_marked) {
    if (n_marked == 0) throw InvalidInputError("no marked states: the search cannot succeed");
    if (n_marked > n_states) throw InvalidInputError("marked count exceeds the state count");
    const double theta =
        std::asin(std::sqrt(static_cast<double>(n_marked) / static_cast<double>(n_states)));
    const double raw = std::numbers::pi / (4.0 * theta) - 0.5;
    return static_cast<int>(std::lround(std::max(0.0, raw)));
}

bool states_equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.qubits() != b.qubits()) return false;
    return std::abs(std::abs(a.amplitudes().dot(b.amplitudes())) - 1.0) <= tol;
}

} // namespace qtda::qsim
