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

#include "qtda/error.hpp"

namespace qtda {

enum class Metric { euclidean, manhattan, chebyshev };

Metric metric_from_name(const std::string& name);
std::string metric_name(Metric m);

/// Symmetric pairwise-distance table over n labeled points. The sole
/// geometric input of everything downstream.
class DistanceMatrix {
public:
    /// Validates a raw square table: symmetry within 1e-12, zero diagonal,
    /// non-negative entries. The stored matrix is symmetrized as (d+d^T)/2.
    static DistanceMatrix validated(Eigen::MatrixXd raw);

    /// Builds the table from coordinate vectors under the chosen metric.
    static DistanceMatrix from_points(const std::vector<std::vector<double>>& points,
                                      Metric metric);

    int size() const { return static_cast<int>(d_.rows()); }
    double operator()(int i, int j) const { return d_(i, j); }
    const Eigen::MatrixXd& data() const { return d_; }

    /// Sorted, deduplicated off-diagonal distances. The Vietoris-Rips complex
    /// is constant on the open intervals between consecutive values.
    std::vector<double> critical_scales() const;

private:
    explicit DistanceMatrix(Eigen::MatrixXd d) : d_(std::move(d)) {}
    Eigen::MatrixXd d_;
};

/// A k-simplex as a vertex bit-set: bit j set means point j+1 is a vertex,
/// so dimension k = popcount - 1. Ket strings render point 1 leftmost,
/// matching the |110> = {points 1,2} convention.
struct Simplex {
    std::uint64_t vertex_bits = 0;

    int dimension() const;
    std::vector<int> vertices() const; // ascending point indices (0-based)
    std::string ket(int n) const;

    friend bool operator==(const Simplex& a, const Simplex& b) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) = default;
};

/// S_k^eps: all k-simplices present at scale eps, sorted by vertex bit-set.
/// The sorted order is canonical and fixes boundary-matrix column order.
struct SimplexSet {
    int dimension = -1;
    double scale = 0.0;
    std::vector<Simplex> members;

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }

    /// Position of a simplex in the canonical order, if present.
    std::optional<int> index_of(const Simplex& s) const;
};

std::uint64_t binomial(int n, int k);

/// All (k+1)-vertex subsets whose pairwise distances are all <= eps
/// (inclusive edge condition). 0-simplices are all n points for any eps >= 0.
SimplexSet enumerate_k_simplices(const DistanceMatrix& d, double eps, int k);

/// zeta = |S_k^eps| / C(n, k+1), the proportion of potential k-simplices
/// actually present at scale eps.
double simplex_proportion(const DistanceMatrix& d, double eps, int k);

} // namespace qtda
