/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qtda/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qtda {

namespace {

constexpr double kSymmetryTolerance = 1e-12;

double metric_distance(const std::vector<double>& a, const std::vector<double>& b, Metric m) {
    double acc = 0.0;
    switch (m) {
    case Metric::euclidean:
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double t = a[i] - b[i];
            acc += t * t;
        }
        return std::sqrt(acc);
    case Metric::manhattan:
        for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
        return acc;
    case Metric::chebyshev:
        for (std::size_t i = 0; i < a.size(); ++i) acc = std::max(acc, std::abs(a[i] - b[i]));
        return acc;
    }
    throw InvalidInputError("unknown metric");
}

} // namespace

Metric metric_from_name(const std::string& name) {
    if (name == "euclidean") return Metric::euclidean;
    if (name == "manhattan") return Metric::manhattan;
    if (name == "chebyshev") return Metric::chebyshev;
    throw InvalidInputError("unknown metric '" + name + "' (expected euclidean, manhattan or chebyshev)");
}

std::string metric_name(Metric m) {
    switch (m) {
    case Metric::euclidean: return "euclidean";
    case Metric::manhattan: return "manhattan";
    case Metric::chebyshev: return "chebyshev";
    }
    return "?";
}

DistanceMatrix DistanceMatrix::validated(Eigen::MatrixXd raw) {
    if (raw.rows() == 0 || raw.rows() != raw.cols())
        throw InvalidInputError("distance matrix must be square and non-empty");
    const int n = static_cast<int>(raw.rows());
    for (int i = 0; i < n; ++i) {
        if (raw(i, i) != 0.0)
            throw InvalidInputError("distance matrix diagonal entry (" + std::to_string(i + 1) +
                                    "," + std::to_string(i + 1) + ") is nonzero");
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(raw(i, j)))
                throw InvalidInputError("distance matrix entry is not finite");
            if (raw(i, j) < 0.0)
                throw InvalidInputError("distance matrix entry (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ") is negative");
            if (std::abs(raw(i, j) - raw(j, i)) > kSymmetryTolerance)
                throw InvalidInputError("distance matrix is asymmetric at (" + std::to_string(i + 1) +
                                        "," + std::to_string(j + 1) + ")");
        }
    }
    Eigen::MatrixXd sym = (raw + raw.transpose()) / 2.0;
    return DistanceMatrix(std::move(sym));
}

DistanceMatrix DistanceMatrix::from_points(const std::vector<std::vector<double>>& points,
                                           Metric metric) {
    if (points.empty()) throw InvalidInputError("point list is empty");
    const std::size_t dim = points.front().size();
    for (const auto& p : points)
        if (p.size() != dim)
            throw InvalidInputError("ragged coordinate list: all points must share one dimension");
    const int n = static_cast<int>(points.size());
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d(i, j) = d(j, i) = metric_distance(points[i], points[j], metric);
    return DistanceMatrix(std::move(d));
}

std::vector<double> DistanceMatrix::critical_scales() const {
    std::vector<double> scales;
    const int n = size();
    scales.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) scales.push_back(d_(i, j));
    std::sort(scales.begin(), scales.end());
    scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
    return scales;
}

int Simplex::dimension() const {
    if (vertex_bits == 0) throw InvalidInputError("simplex must have at least one vertex");
    return std::popcount(vertex_bits) - 1;
}

std::vector<int> Simplex::vertices() const {
    std::vector<int> v;
    for (std::uint64_t bits = vertex_bits; bits != 0; bits &= bits - 1)
        v.push_back(std::countr_zero(bits));
    return v;
}

std::string Simplex::ket(int n) const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j)
        if ((vertex_bits >> j) & 1ULL) s[static_cast<std::size_t>(j)] = '1';
    return s;
}

std::optional<int> SimplexSet::index_of(const Simplex& s) const {
    const auto it = std::lower_bound(members.begin(), members.end(), s);
    if (it == members.end() || *it != s) return std::nullopt;
    return static_cast<int>(it - members.begin());
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return result;
}

SimplexSet enumerate_k_simplices(const DistanceMatrix& d, double eps, int k) {
    const int n = d.size();
    if (k < 0 || k > n - 1)
        throw InvalidInputError("simplex dimension k=" + std::to_string(k) +
                                " out of range for n=" + std::to_string(n));
    if (eps < 0.0) throw InvalidInputError("scale must be non-negative");

    SimplexSet set;
    set.dimension = k;
    set.scale = eps;

    // All (k+1)-subsets; sorted into canonical bit-set order afterwards.
    std::vector<int> idx(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        bool within = true;
        for (int a = 0; a <= k && within; ++a)
            for (int b = a + 1; b <= k; ++b)
                if (d(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]) > eps) {
                    within = false;
                    break;
                }
        if (within) {
            std::uint64_t bits = 0;
            for (int v : idx) bits |= 1ULL << v;
            set.members.push_back(Simplex{bits});
        }
        // advance to the next combination
        int pos = k;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1 - (k - pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i <= k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    std::sort(set.members.begin(), set.members.end());
    return set;
}

double simplex_proportion(const DistanceMatrix& d, double eps, int k) {
    if (k + 1 > d.size())
        throw InvalidInputError("k+1 exceeds the point count: no k-simplices can exist");
    const SimplexSet s = enumerate_k_simplices(d, eps, k);
    return static_cast<double>(s.size()) / static_cast<double>(binomial(d.size(), k + 1));
}

} // namespace qtda
