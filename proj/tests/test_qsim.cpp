/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qtda/homology.hpp"
#include "qtda/pipeline.hpp"
#include "qtda/qsim.hpp"

using namespace qtda;
using qsim::StateVector;
using std::complex;

namespace {

// Hermitian boundary embedding of the three-point complex at the narrow
// scale: rows |100>,|010>,|001>, column |110>.
Eigen::MatrixXcd b_eps1() {
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(4, 4);
    b(0, 3) = -1;
    b(1, 3) = 1;
    b(3, 0) = -1;
    b(3, 1) = 1;
    return b;
}

// Independent dense phase-estimation oracle: the full joint circuit as
// explicit matrices (register Hadamards, controlled-U^y block unitary,
// inverse QFT, register marginal). Only usable at tiny sizes; that is the
// point.
Eigen::VectorXd dense_phase_estimate(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& rho,
                                     int t) {
    const Eigen::Index d = rho.rows();
    const Eigen::Index n = 1LL << t;

    Eigen::MatrixXcd reg0 = Eigen::MatrixXcd::Zero(n, n);
    reg0(0, 0) = 1.0;
    Eigen::MatrixXcd had = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index x = 0; x < n; ++x)
        for (Eigen::Index y = 0; y < n; ++y) {
            double sign = 1.0; // t-fold Hadamard entry: parity of shared bits
            for (int bit = 0; bit < t; ++bit)
                if (((x >> bit) & 1) && ((y >> bit) & 1)) sign = -sign;
            had(x, y) = sign / std::sqrt(static_cast<double>(n));
        }

    Eigen::MatrixXcd controlled = Eigen::MatrixXcd::Zero(n * d, n * d);
    Eigen::MatrixXcd u_pow = Eigen::MatrixXcd::Identity(d, d);
    for (Eigen::Index y = 0; y < n; ++y) {
        controlled.block(y * d, y * d, d, d) = u_pow;
        u_pow = (u_pow * u).eval();
    }

    Eigen::MatrixXcd qft = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index x = 0; x < n; ++x)
        for (Eigen::Index y = 0; y < n; ++y) {
            const double ang =
                2.0 * std::numbers::pi * static_cast<double>(x * y) / static_cast<double>(n);
            qft(x, y) =
                complex<double>(std::cos(ang), std::sin(ang)) / std::sqrt(static_cast<double>(n));
        }

    const auto kron = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
        Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        return out;
    };

    const Eigen::MatrixXcd id_d = Eigen::MatrixXcd::Identity(d, d);
    const Eigen::MatrixXcd circuit = kron(qft.adjoint(), id_d) * controlled * kron(had, id_d);
    const Eigen::MatrixXcd joint_rho = circuit * kron(reg0, rho) * circuit.adjoint();

    Eigen::VectorXd prob = Eigen::VectorXd::Zero(n);
    for (Eigen::Index x = 0; x < n; ++x)
        for (Eigen::Index s = 0; s < d; ++s) prob(x) += joint_rho(x * d + s, x * d + s).real();
    return prob;
}

} // namespace

TEST_CASE("single-qubit gates") {
    const StateVector zero = StateVector::computational_basis(1, 0);
    const StateVector plus = qsim::apply_gate(zero, qsim::hadamard_gate(), 0);
    CHECK(std::abs(plus.amplitudes()(0) - 1.0 / std::numbers::sqrt2) < 1e-12);
    CHECK(std::abs(plus.amplitudes()(1) - 1.0 / std::numbers::sqrt2) < 1e-12);

    // X on |110>'s point-3 qubit gives |111>
    const StateVector edge = StateVector::computational_basis(3, 0b011);
    const StateVector full = qsim::apply_gate(edge, qsim::pauli_x_gate(), 2);
    CHECK(std::abs(full.amplitudes()(0b111) - 1.0) < 1e-12);

    SUBCASE("H twice is the identity") {
        std::mt19937_64 rng(3);
        Eigen::VectorXcd amps(8);
        for (Eigen::Index i = 0; i < 8; ++i)
            amps(i) = complex<double>(static_cast<double>(rng() >> 11) * 0x1.0p-53,
                                      static_cast<double>(rng() >> 11) * 0x1.0p-53);
        amps.normalize();
        const StateVector s = StateVector::from_amplitudes(3, amps);
        StateVector twice = qsim::apply_gate(s, qsim::hadamard_gate(), 1);
        twice = qsim::apply_gate(twice, qsim::hadamard_gate(), 1);
        CHECK((twice.amplitudes() - amps).cwiseAbs().maxCoeff() < 1e-12);
    }

    SUBCASE("rejects non-unitary gates and bad indices") {
        Eigen::Matrix2cd bad;
        bad << 1, 1, 0, 1;
        CHECK_THROWS_AS(qsim::apply_gate(zero, bad, 0), InvalidInputError);
        CHECK_THROWS_AS(qsim::apply_gate(zero, qsim::pauli_x_gate(), 1), InvalidInputError);
    }
}

TEST_CASE("controlled operations") {
    // control qubit 1 set, target qubit 0 clear
    const StateVector in = StateVector::computational_basis(2, 0b10);
    const StateVector out = qsim::apply_cnot(in, 1, 0);
    CHECK(std::abs(out.amplitudes()(0b11) - 1.0) < 1e-12);

    SUBCASE("CNOT entangles a superposed control") {
        StateVector s = StateVector::computational_basis(2, 0);
        s = qsim::apply_gate(s, qsim::hadamard_gate(), 0);
        s = qsim::apply_cnot(s, 0, 1);
        CHECK(std::abs(s.amplitudes()(0b00) - 1.0 / std::numbers::sqrt2) < 1e-12);
        CHECK(std::abs(s.amplitudes()(0b11) - 1.0 / std::numbers::sqrt2) < 1e-12);
    }

    SUBCASE("control off leaves the state alone") {
        const qsim::HermitianOperator b1((b_eps1() * b_eps1() / 2.0).eval());
        const Eigen::MatrixXcd u = b1.unitary_exponential(0.5); // exp(i pi B1)
        const StateVector psi = StateVector::computational_basis(3, 0b011);
        const std::vector<int> targets{0, 1};
        const StateVector same = qsim::apply_controlled(psi, u, 2, targets);
        CHECK((same.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
    }

    SUBCASE("overlapping control and target is rejected") {
        const std::vector<int> targets{1};
        CHECK_THROWS_AS(qsim::apply_controlled(in, qsim::pauli_x_gate(), 1, targets),
                        InvalidInputError);
    }
}

TEST_CASE("partial trace") {
    SUBCASE("one side of a Bell pair is maximally mixed") {
        StateVector s = StateVector::computational_basis(2, 0);
        s = qsim::apply_gate(s, qsim::hadamard_gate(), 0);
        s = qsim::apply_cnot(s, 0, 1);
        const std::vector<int> keep{0};
        const qsim::DensityMatrix rho = qsim::partial_trace(s, keep);
        CHECK((rho.matrix() - Eigen::MatrixXcd::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
              1e-12);
    }

    SUBCASE("tracing the ancilla from the copy state gives the two-term mixture") {
        // (|110>|1>_A + |101>|0>_A)/sqrt(2): system indices 3 and 5, ancilla qubit 3
        Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(16);
        amps(0b1011) = 1.0 / std::numbers::sqrt2;
        amps(0b0101) = 1.0 / std::numbers::sqrt2;
        const StateVector s = StateVector::from_amplitudes(4, amps);
        const std::vector<int> keep{0, 1, 2};
        const qsim::DensityMatrix rho = qsim::partial_trace(s, keep);
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(8, 8);
        expected(3, 3) = 0.5;
        expected(5, 5) = 0.5;
        CHECK((rho.matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(rho.purity() == doctest::Approx(0.5));
    }

    SUBCASE("product states stay pure") {
        StateVector s = StateVector::computational_basis(3, 0b100);
        s = qsim::apply_gate(s, qsim::hadamard_gate(), 0);
        const std::vector<int> keep{0, 2};
        const qsim::DensityMatrix rho = qsim::partial_trace(s, keep);
        CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-10));
        rho.validate();
    }

    SUBCASE("empty keep set is rejected") {
        const StateVector s = StateVector::computational_basis(2, 0);
        CHECK_THROWS_AS(qsim::partial_trace(s, std::span<const int>{}), InvalidInputError);
    }
}

TEST_CASE("measurement distributions") {
    const StateVector one = StateVector::computational_basis(1, 1);
    const std::vector<int> q0{0};
    CHECK(qsim::measure_distribution(one, q0)[1] == doctest::Approx(1.0));

    const StateVector plus =
        qsim::apply_gate(StateVector::computational_basis(1, 0), qsim::hadamard_gate(), 0);
    const auto half = qsim::measure_distribution(plus, q0);
    CHECK(half[0] == doctest::Approx(0.5));
    CHECK(half[1] == doctest::Approx(0.5));

    SUBCASE("diagonal of the two-edge mixture") {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
        m(3, 3) = 0.5;
        m(5, 5) = 0.5;
        const qsim::DensityMatrix rho = qsim::DensityMatrix::from_matrix(3, m);
        const std::vector<int> all{0, 1, 2};
        const auto probs = qsim::measure_distribution(rho, all);
        CHECK(probs[3] == doctest::Approx(0.5)); // |110>
        CHECK(probs[5] == doctest::Approx(0.5)); // |101>
        double total = 0;
        for (double p : probs) total += p;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("eigendecomposition of the narrow-scale boundary embedding") {
    const qsim::HermitianOperator b(b_eps1());
    const Eigen::VectorXd lambda = b.eigenvalues();
    REQUIRE(lambda.size() == 4);
    CHECK(lambda(0) == doctest::Approx(-std::numbers::sqrt2).epsilon(1e-12));
    CHECK(std::abs(lambda(1)) < 1e-12);
    CHECK(std::abs(lambda(2)) < 1e-12);
    CHECK(lambda(3) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));

    // published eigenvectors for -sqrt2 and +sqrt2
    Eigen::VectorXcd beta1(4), beta2(4);
    beta1 << 0.5, -0.5, 0.0, 1.0 / std::numbers::sqrt2;
    beta2 << -0.5, 0.5, 0.0, 1.0 / std::numbers::sqrt2;
    CHECK(std::abs(std::abs(b.eigenvectors().col(0).dot(beta1)) - 1.0) < 1e-9);
    CHECK(std::abs(std::abs(b.eigenvectors().col(3).dot(beta2)) - 1.0) < 1e-9);

    // degenerate zero eigenspace compared as a projector: |001>, (|100>+|010>)/sqrt2
    Eigen::MatrixXcd p_zero = Eigen::MatrixXcd::Zero(4, 4);
    for (int i : {1, 2}) p_zero += b.eigenvectors().col(i) * b.eigenvectors().col(i).adjoint();
    Eigen::VectorXcd k1(4), k2(4);
    k1 << 0, 0, 1, 0;
    k2 << 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2, 0, 0;
    const Eigen::MatrixXcd expected = k1 * k1.adjoint() + k2 * k2.adjoint();
    CHECK((p_zero - expected).cwiseAbs().maxCoeff() < 1e-9);

    SUBCASE("zero matrix") {
        const qsim::HermitianOperator z(Eigen::MatrixXcd::Zero(3, 3));
        CHECK(z.eigenvalues().cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("reconstruction from the spectrum") {
        const Eigen::MatrixXcd back = b.eigenvectors() *
                                      b.eigenvalues().cast<complex<double>>().asDiagonal() *
                                      b.eigenvectors().adjoint();
        CHECK((back - b.matrix()).cwiseAbs().maxCoeff() < 1e-9);
    }

    SUBCASE("non-Hermitian input is rejected") {
        Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
        bad(0, 1) = 1.0;
        CHECK_THROWS_AS(qsim::HermitianOperator{bad}, InvalidInputError);
    }
}

TEST_CASE("zero eigenspace of the published six-point operator") {
    const BoundaryMatrix published = pipeline::counterexample_boundary_as_published();
    const qsim::HermitianOperator b = pipeline::hermitian_boundary(published);
    REQUIRE(b.dimension() == 13);

    // published kernel combinations in edge coordinates; the canonical column
    // order maps edges a,b,c,d,e,f,g to slots 0,1,3,2,4,6,5
    const auto edge_vector = [&](double a, double bb, double c, double dd, double e, double f,
                                 double g) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(13);
        v(6 + 0) = a;
        v(6 + 1) = bb;
        v(6 + 3) = c;
        v(6 + 2) = dd;
        v(6 + 4) = e;
        v(6 + 6) = f;
        v(6 + 5) = g;
        return v;
    };
    const Eigen::VectorXcd n1 = edge_vector(0.5, 0, 0, 0, -0.5, -0.5, -0.5);
    const Eigen::VectorXcd n2 = edge_vector(3, 4, 4, 4, 1, 1, 1) / std::sqrt(60.0);

    CHECK((b.matrix() * n1).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((b.matrix() * n2).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(n1.squaredNorm() - 1.0) < 1e-12);
    CHECK(std::abs(n2.squaredNorm() - 1.0) < 1e-12);

    // the zero eigenspace intersected with the edge block is exactly 2-dim
    Eigen::MatrixXcd p_zero = Eigen::MatrixXcd::Zero(13, 13);
    for (Eigen::Index i = 0; i < 13; ++i)
        if (std::abs(b.eigenvalues()(i)) <= 1e-9)
            p_zero += b.eigenvectors().col(i) * b.eigenvectors().col(i).adjoint();
    CHECK((p_zero * n1 - n1).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((p_zero * n2 - n2).cwiseAbs().maxCoeff() < 1e-9);
    double edge_block_trace = 0.0;
    for (Eigen::Index i = 6; i < 13; ++i) edge_block_trace += p_zero(i, i).real();
    CHECK(edge_block_trace == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("unitary exponential") {
    SUBCASE("zero operator gives the identity") {
        const qsim::HermitianOperator z(Eigen::MatrixXcd::Zero(3, 3));
        CHECK((z.unitary_exponential(0.7) - Eigen::MatrixXcd::Identity(3, 3))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }

    SUBCASE("exp(i pi B1) flips the edge state's sign") {
        const qsim::HermitianOperator b1((b_eps1() * b_eps1() / 2.0).eval());
        CHECK(b1.eigenvalues()(3) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(b1.eigenvalues()(2) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(b1.eigenvalues()(0)) < 1e-12);
        const Eigen::MatrixXcd u = b1.unitary_exponential(0.5);
        Eigen::VectorXcd edge = Eigen::VectorXcd::Zero(4);
        edge(3) = 1.0;
        CHECK(((u * edge) + edge).cwiseAbs().maxCoeff() < 1e-12); // global sign flip
    }

    SUBCASE("doubling the scale squares the unitary") {
        const qsim::HermitianOperator b(b_eps1());
        const Eigen::MatrixXcd u1 = b.unitary_exponential(0.37);
        const Eigen::MatrixXcd u2 = b.unitary_exponential(0.74);
        CHECK((u1 * u1 - u2).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("phase estimation") {
    SUBCASE("identity input reads all zeros") {
        const Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(3, 3);
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(3, 3);
        rho(1, 1) = 1.0;
        for (int t : {1, 2, 4}) {
            const Eigen::VectorXd p = qsim::phase_estimate(u, rho, t);
            CHECK(p(0) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }

    SUBCASE("exact dyadic phase lands on its bit-string") {
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(2, 2);
        u(0, 0) = complex<double>(0.0, 1.0); // phase 1/4
        Eigen::VectorXcd psi(2);
        psi << 1, 0;
        const Eigen::VectorXd p = qsim::phase_estimate(u, psi, 2);
        CHECK(p(1) == doctest::Approx(1.0).epsilon(1e-10)); // outcome |01|
    }

    SUBCASE("compiled readout: exp(i pi B1) on the edge state reads |1>") {
        const qsim::HermitianOperator b1((b_eps1() * b_eps1() / 2.0).eval());
        const Eigen::MatrixXcd u = b1.unitary_exponential(0.5);
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
        rho(3, 3) = 1.0; // |110><110| on the column block
        const Eigen::VectorXd p = qsim::phase_estimate(u, rho, 1);
        CHECK(p(1) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(p(0) == doctest::Approx(0.0).epsilon(1e-10));
    }

    SUBCASE("matches the dense joint-circuit oracle on random mixtures") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 4; ++trial) {
            const Eigen::Index d = 3 + static_cast<Eigen::Index>(rng() % 3);
            Eigen::MatrixXcd g(d, d), m(d, d);
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index j = 0; j < d; ++j) {
                    g(i, j) = complex<double>(static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5,
                                              static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5);
                    m(i, j) = complex<double>(static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5,
                                              static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5);
                }
            const qsim::HermitianOperator h(((g + g.adjoint()) / 2.0).eval());
            const Eigen::MatrixXcd u = h.unitary_exponential(0.31);
            Eigen::MatrixXcd rho = m * m.adjoint();
            rho /= rho.trace().real();

            for (int t : {1, 2, 3}) {
                const Eigen::VectorXd mine = qsim::phase_estimate(u, rho, t);
                const Eigen::VectorXd oracle = dense_phase_estimate(u, rho, t);
                CHECK((mine - oracle).cwiseAbs().maxCoeff() < 1e-9);
                CHECK(mine.sum() == doctest::Approx(1.0).epsilon(1e-10));
            }
        }
    }

    SUBCASE("dimension mismatch and bad register size are rejected") {
        const Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(3, 3);
        const Eigen::MatrixXcd rho2 = Eigen::MatrixXcd::Identity(2, 2) / 2.0;
        CHECK_THROWS_AS(qsim::phase_estimate(u, rho2, 1), InvalidInputError);
        const Eigen::MatrixXcd rho3 = Eigen::MatrixXcd::Identity(3, 3) / 3.0;
        CHECK_THROWS_AS(qsim::phase_estimate(u, rho3, 0), InvalidInputError);
    }
}

TEST_CASE("grover amplification") {
    SUBCASE("closed form across iteration counts") {
        for (int n : {2, 3, 4, 6}) {
            const std::uint64_t dim = 1ULL << n;
            for (std::uint64_t m = 1; m <= dim; m += (n <= 3 ? 1 : 5)) {
                const auto oracle = [&](std::uint64_t x) { return x < m; };
                const double theta =
                    std::asin(std::sqrt(static_cast<double>(m) / static_cast<double>(dim)));
                for (int r = 0; r <= 8; ++r) {
                    const StateVector out = qsim::grover_amplify(n, oracle, r);
                    double marked = 0.0;
                    for (std::uint64_t x = 0; x < m; ++x)
                        marked += std::norm(out.amplitudes()(static_cast<Eigen::Index>(x)));
                    const double expected = std::pow(std::sin((2 * r + 1) * theta), 2);
                    CHECK(marked == doctest::Approx(expected).epsilon(1e-9));
                }
            }
        }
    }

    SUBCASE("the demonstration instance: one iteration hits probability 1") {
        const auto oracle = [](std::uint64_t x) { return x == 3 || x == 5; };
        const StateVector out = qsim::grover_amplify(3, oracle, 1);
        const double marked = std::norm(out.amplitudes()(3)) + std::norm(out.amplitudes()(5));
        CHECK(marked == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("no marked states is an error") {
        CHECK_THROWS_AS(qsim::grover_amplify(3, [](std::uint64_t) { return false; }, 1),
                        InvalidInputError);
    }
}

TEST_CASE("optimal grover iterations") {
    CHECK(qsim::optimal_grover_iterations(8, 2) == 1);
    CHECK(qsim::optimal_grover_iterations(8, 8) == 0);
    CHECK(qsim::optimal_grover_iterations(1ULL << 20, 1) == 804);
    CHECK_THROWS_AS(qsim::optimal_grover_iterations(8, 0), InvalidInputError);

    SUBCASE("matches brute-force maximization of the closed form") {
        for (const auto& [n_states, marked] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
                 {8, 2}, {16, 3}, {64, 5}, {256, 1}, {1ULL << 20, 1}}) {
            const double theta =
                std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(n_states)));
            int best_r = 0;
            double best = -1.0;
            const int limit = static_cast<int>(std::numbers::pi / (4.0 * theta)) + 2;
            for (int r = 0; r <= limit; ++r) {
                const double p = std::pow(std::sin((2 * r + 1) * theta), 2);
                if (p > best) {
                    best = p;
                    best_r = r;
                }
            }
            CHECK(qsim::optimal_grover_iterations(n_states, marked) == best_r);
        }
    }
}

TEST_CASE("norm and trace preservation through circuits") {
    std::mt19937_64 rng(21);
    StateVector s = StateVector::computational_basis(4, 0);
    for (int step = 0; step < 40; ++step) {
        const int q = static_cast<int>(rng() % 4);
        switch (rng() % 3) {
        case 0: s = qsim::apply_gate(s, qsim::hadamard_gate(), q); break;
        case 1: s = qsim::apply_gate(s, qsim::pauli_x_gate(), q); break;
        default: s = qsim::apply_cnot(s, q, static_cast<int>((q + 1) % 4)); break;
        }
        CHECK(std::abs(s.amplitudes().squaredNorm() - 1.0) < 1e-10);
    }
    const std::vector<int> keep{0, 2};
    CHECK(qsim::partial_trace(s, keep).matrix().trace().real() ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("global-phase equality helper") {
    const StateVector a = StateVector::computational_basis(2, 1);
    const Eigen::VectorXcd rotated = a.amplitudes() * complex<double>(0, 1);
    const StateVector b = StateVector::from_amplitudes(2, rotated);
    CHECK(qsim::states_equal_up_to_phase(a, b, 1e-12));
    const StateVector c = StateVector::computational_basis(2, 2);
    CHECK(!qsim::states_equal_up_to_phase(a, c, 1e-9));
}
