/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "qtda/geometry.hpp"

namespace qtda {

/// Signed boundary operator of one dimension of a complex. Column for a
/// k-simplex has k+1 nonzero entries: omitting the l-th vertex (ascending
/// order, l from 0) contributes (-1)^l in the row of that face.
struct BoundaryMatrix {
    SimplexSet rows; // dimension k-1; empty set with dimension -1 for k = 0
    SimplexSet cols; // dimension k
    Eigen::MatrixXi entries;
};

/// Builds the boundary map from S_k to S_{k-1}. For k = 0 pass an empty
/// row set (dimension -1): the result is the zero map with no rows.
/// Throws if a face of a column simplex is missing from the row set.
BoundaryMatrix boundary_matrix(const SimplexSet& s_k, const SimplexSet& s_km1);

/// Rank over the rationals by fraction-free (Bareiss) integer elimination.
/// Exact; throws NumericalError if an intermediate pivot product overflows
/// 64-bit integers, signalling the need for an arbitrary-precision fallback.
int rank_exact(const Eigen::MatrixXi& m);

/// Exact k-th Betti number of the Vietoris-Rips complex at scale eps:
/// beta_k = (|S_k| - rank d_k) - rank d_{k+1}.
int betti_at_scale(const DistanceMatrix& d, double eps, int k);

/// Step function of beta_k over eps: values on the open intervals between
/// consecutive critical scales, plus one value beyond the last scale.
struct BettiCurve {
    int dimension = 0;
    std::vector<double> breakpoints;
    std::vector<int> values; // size = breakpoints.size() + 1

    /// Value at a non-critical scale.
    int value_at(double eps) const;
};

BettiCurve betti_curve(const DistanceMatrix& d, int k);

/// Half-open persistence interval [birth, death); essential classes carry
/// death = +infinity.
struct PersistenceInterval {
    double birth = 0.0;
    double death = std::numeric_limits<double>::infinity();

    bool essential() const { return std::isinf(death); }
    bool contains(double eps) const { return birth <= eps && eps < death; }
};

struct Barcode {
    /// intervals[k] lists the H_k bars, sorted by (birth, death).
    std::vector<std::vector<PersistenceInterval>> intervals;

    int bars_at(int k, double eps) const;
};

/// Persistence barcode of the distance filtration up to dimension max_k,
/// via standard matrix reduction over the rationals. Simplices are ordered
/// by (appearance scale, dimension, vertex bit-set); zero-length intervals
/// are dropped.
Barcode barcode(const DistanceMatrix& d, int max_k);

} // namespace qtda
