/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qtda/geometry.hpp"
#include "qtda/homology.hpp"
#include "qtda/qsim.hpp"

namespace qtda::pipeline {

enum class GroverMode { off, exact_iterations };
enum class EtaReadout { exact_projection, phase_estimation };

struct QtdaConfig {
    /// Phase-register size; unset selects the smallest t with
    /// 2^-t <= lambda_min_nonzero^2 / (4 lambda_max^2), capped at 10.
    std::optional<int> phase_register_qubits;
    /// Eigenvalue magnitudes at or below this count as zero in the kernel
    /// projector. Must lie in (0, 1e-6].
    double zero_tolerance = 1e-9;
    /// Read eta off B^2/(2 lambda_max^2) instead of B/(2 lambda_max); keeps
    /// the kernel at phase exactly 0 with all other phases positive.
    bool use_squared_operator = true;
    GroverMode grover = GroverMode::off;
    EtaReadout readout = EtaReadout::phase_estimation;
    std::uint64_t rng_seed = 0;

    void validate() const;
};

/// Eq.-style uniform superposition over the members of S, as an n-qubit
/// state with amplitude 1/sqrt(|S|) on each member's bit-string.
qsim::StateVector prepare_simplicial_state(const SimplexSet& s, int n);

/// Uniform mixture over S built the mechanical way: tensor an n-qubit
/// ancilla, copy qubit-wise with CNOTs, trace the ancilla out.
qsim::DensityMatrix uniform_mixture(const SimplexSet& s, int n);

/// Hermitian embedding [[0, d],[d^T, 0]] of a boundary matrix, over the
/// basis rows then columns.
qsim::HermitianOperator hermitian_boundary(const BoundaryMatrix& b);

/// Density operators over the rows+cols embedding space, supported on the
/// column (simplex) block only.
Eigen::MatrixXcd embedded_uniform_mixture(const BoundaryMatrix& b);
Eigen::VectorXcd embedded_uniform_state(const BoundaryMatrix& b);
Eigen::MatrixXcd embed_density(const qsim::DensityMatrix& rho, const BoundaryMatrix& b);

/// eta = Tr(P0 rho P0) with P0 the projector onto eigenvectors with
/// |lambda| <= zero_tolerance. Throws if the spectrum has nonzero
/// eigenvalues within 10x of the tolerance (ill-separated).
double kernel_probability_exact(const Eigen::MatrixXcd& rho_embedded,
                                const qsim::HermitianOperator& b, double zero_tolerance);

struct QpeKernelReadout {
    double eta_hat = 0.0;
    int register_qubits = 0;
};

/// eta via the phase-estimation circuit on exp(2 pi i * Btilde) where
/// Btilde = B^2/(2 lambda_max^2) (or B/(2 lambda_max)); eta_hat is the
/// probability of the all-zeros register outcome. A zero operator gives
/// eta_hat = 1 (everything is kernel).
QpeKernelReadout kernel_probability_qpe(const Eigen::MatrixXcd& rho_embedded,
                                        const qsim::HermitianOperator& b, const QtdaConfig& config);

struct KernelEstimate {
    double eta = 0.0;
    std::size_t simplex_count = 0;
    double kernel_dim_raw = 0.0;
    int kernel_dim = 0;
    /// False when kernel_dim_raw sits half-way between integers.
    bool reliable = true;
};

/// dim Ker = round(eta * |S|); a raw value half-way between integers flags
/// the estimate unreliable instead of rounding.
KernelEstimate kernel_estimate_from_eta(double eta, std::size_t simplex_count);

struct QuantumBettiResult {
    int betti = 0;
    KernelEstimate kernel_k;
    KernelEstimate kernel_k_plus_1;
    std::size_t simplex_count_k_plus_1 = 0;
    bool reliable = true;
};

/// beta_k = dim Ker d_k + dim Ker d_{k+1} - |S_{k+1}| with each kernel
/// dimension read off the simulated quantum pipeline (dim Ker d_0 = n and
/// empty sets contribute 0 without simulation).
QuantumBettiResult betti_via_quantum(const DistanceMatrix& d, double eps, int k,
                                     const QtdaConfig& config);

struct GroverPreparation {
    qsim::StateVector amplified;
    qsim::StateVector conditional; // renormalized marked component
    double marked_probability = 0.0;
    int iterations = 0;
    std::uint64_t marked_count = 0;
};

/// Prepares the simplicial state by amplitude amplification with the
/// membership oracle (popcount k+1 and all pairwise distances <= eps).
GroverPreparation grover_prepare_simplices(const DistanceMatrix& d, double eps, int k,
                                           const QtdaConfig& config);

struct ProportionGrid {
    int dimension = 0;
    std::vector<int> point_counts;
    std::vector<double> epsilon_grid;
    Eigen::MatrixXd mean_zeta;                // point_counts x epsilon_grid
    std::vector<std::vector<bool>> efficient; // mean zeta >= n^-6
};

/// Mean simplex proportion over random symmetric uniform-[0,1] distance
/// matrices; deterministic for a fixed seed regardless of evaluation order.
ProportionGrid proportion_monte_carlo(int n_min, int n_max, int k, int grid_points, int trials,
                                      std::uint64_t seed);

/// Single-trial proportions over the scale grid; the trial RNG stream is
/// derived from (seed, n, trial).
std::vector<double> proportion_trial(int n, int k, const std::vector<double>& epsilon_grid,
                                     std::uint64_t seed, int trial);

struct ErrorThreshold {
    std::int64_t numerator = 1;
    std::int64_t denominator = 2;
    double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// Largest eta error keeping the rounded kernel dimension correct:
/// E_t = 0.5 / |S_k|, as an exact rational.
ErrorThreshold error_threshold(std::int64_t simplex_count);

struct ScaleReport {
    double epsilon = 0.0;
    std::vector<std::string> simplex_kets;
    double eta_compiled = 0.0; // single-CNOT circuit readout
    double eta_general = 0.0;  // general phase-estimation circuit readout
    KernelEstimate kernel_d1;
    int betti0 = 0;
    int betti1 = 0;
};

struct ThreePointReport {
    ScaleReport scale1; // 3 < eps < 4
    ScaleReport scale2; // 4 < eps < 5
    std::vector<double> critical_scales;
    std::vector<int> h0_curve; // values on (0,3),(3,4),(4,5),(5,inf)
    std::vector<PersistenceInterval> h0_bars;
    std::vector<PersistenceInterval> h1_bars;
};

/// The canonical three-point instance: d(1,2)=3, d(1,3)=4, d(2,3)=5.
DistanceMatrix three_point_distances();

/// End-to-end run of the five-qubit demonstration circuit at both scales:
/// state preparation (with/without the scale-switching Hadamard), partial
/// copy via one CNOT, the compiled single-CNOT phase estimation, and the
/// general phase-estimation circuit on the squared boundary operators.
/// Throws NumericalError if the compiled and general readouts disagree
/// beyond 1e-9.
ThreePointReport three_point_demo();

struct CounterexampleReport {
    double mixed_probability = 0.0; // 2/7
    double pure_probability = 0.0;  // 32/35
};

/// Six-point, seven-edge complex showing why the pipeline needs the mixed
/// state: kernel-projection probabilities of the uniform mixture vs the
/// uniform pure superposition differ (interference).
CounterexampleReport counterexample_demo();

/// A distance matrix realizing exactly the seven edges of the counterexample
/// complex at scales between 1 and 2.
DistanceMatrix counterexample_distances();

/// The counterexample boundary operator with its published per-edge
/// orientation signs (the pure-state probability depends on them).
BoundaryMatrix counterexample_boundary_as_published();

} // namespace qtda::pipeline
