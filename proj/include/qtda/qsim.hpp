/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qtda/error.hpp"

namespace qtda::qsim {

using complexd = std::complex<double>;

/// Pure state on m qubits: 2^m amplitudes, basis index bit j = qubit j
/// (qubit 0 is the least significant bit). Note the ket-string convention
/// used for simplices elsewhere renders qubit 0 (point 1) leftmost, i.e.
/// ket strings read the index bits LSB-first.
class StateVector {
public:
    static StateVector computational_basis(int qubits, std::uint64_t index);
    /// Validates the norm (1 within 1e-10).
    static StateVector from_amplitudes(int qubits, Eigen::VectorXcd amplitudes);

    int qubits() const { return qubits_; }
    Eigen::Index dimension() const { return amps_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }

private:
    StateVector(int qubits, Eigen::VectorXcd amps) : qubits_(qubits), amps_(std::move(amps)) {}
    int qubits_;
    Eigen::VectorXcd amps_;
};

/// Mixed state on m qubits. Hermitian and unit-trace within 1e-10 at
/// construction; validate() additionally checks positive semidefiniteness.
class DensityMatrix {
public:
    static DensityMatrix from_state(const StateVector& psi);
    static DensityMatrix from_matrix(int qubits, Eigen::MatrixXcd rho);

    int qubits() const { return qubits_; }
    Eigen::Index dimension() const { return rho_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return rho_; }
    double purity() const { return (rho_ * rho_).trace().real(); }

    /// Checks eigenvalues >= -1e-10.
    void validate() const;

private:
    DensityMatrix(int qubits, Eigen::MatrixXcd rho) : qubits_(qubits), rho_(std::move(rho)) {}
    int qubits_;
    Eigen::MatrixXcd rho_;
};

Eigen::Matrix2cd hadamard_gate();
Eigen::Matrix2cd pauli_x_gate();
Eigen::Matrix2cd pauli_z_gate();

/// Single-qubit gate application; the gate must be unitary within 1e-12.
StateVector apply_gate(const StateVector& state, const Eigen::Matrix2cd& gate, int target);

/// Applies u (a unitary on |targets| qubits, dimension 2^|targets|) on the
/// control = 1 subspace. targets[b] carries bit b of u's basis index.
StateVector apply_controlled(const StateVector& state, const Eigen::MatrixXcd& u, int control,
                             std::span<const int> targets);

StateVector apply_cnot(const StateVector& state, int control, int target);

/// Reduced density matrix on the kept qubits (in the given order: keep[b]
/// becomes qubit b of the result). keep must be nonempty.
DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Measurement statistics of a qubit subset in the computational basis:
/// result[key] with bit b of key = outcome of qubits[b]. Sums to 1.
std::vector<double> measure_distribution(const StateVector& state, std::span<const int> qubits);
std::vector<double> measure_distribution(const DensityMatrix& rho, std::span<const int> qubits);

/// Hermitian matrix (any dimension, not only qubit-shaped) with its
/// eigendecomposition cached at construction: values ascending, orthonormal
/// eigenvectors as columns.
class HermitianOperator {
public:
    explicit HermitianOperator(Eigen::MatrixXcd a);

    Eigen::Index dimension() const { return a_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return a_; }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }

    /// U = exp(2*pi*i * scale * A), assembled from the cached spectrum so U
    /// shares A's eigenvectors exactly; unitary within 1e-9.
    Eigen::MatrixXcd unitary_exponential(double scale) const;

private:
    Eigen::MatrixXcd a_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

/// Textbook phase estimation: t-qubit register prepared uniform, controlled
/// U^(2^j) ladder, inverse quantum Fourier transform, register marginal
/// returned as a distribution over the 2^t outcomes. The most significant
/// phase bit is register qubit t-1, so an eigenstate with phase p/2^t yields
/// outcome p with probability 1.
Eigen::VectorXd phase_estimate(const Eigen::MatrixXcd& u, const Eigen::VectorXcd& psi,
                               int register_qubits);
Eigen::VectorXd phase_estimate(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& rho,
                               int register_qubits);

/// Multi-target amplitude amplification from the uniform start: r rounds of
/// oracle phase flip + inversion about the mean. The oracle must mark at
/// least one basis state.
StateVector grover_amplify(int qubits, const std::function<bool(std::uint64_t)>& oracle,
                           int iterations);

/// round(pi / (4 asin(sqrt(M/N))) - 1/2), floored at 0: the iteration count
/// maximizing the marked probability sin^2((2r+1) theta).
int optimal_grover_iterations(std::uint64_t n_states, std::uint64_t n_marked);

/// |<a|b>| = 1 within tol: equality up to an unobservable global phase.
bool states_equal_up_to_phase(const StateVector& a, const StateVector& b, double tol);

} // namespace qtda::qsim
