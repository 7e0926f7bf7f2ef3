/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qtda/homology.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtda {

BoundaryMatrix boundary_matrix(const SimplexSet& s_k, const SimplexSet& s_km1) {
    if (s_k.dimension < 0) throw InvalidInputError("column set must contain simplices of dimension >= 0");
    if (s_km1.dimension != s_k.dimension - 1)
        throw InvalidInputError("row set dimension must be one below the column set dimension");
    if (!s_km1.empty() && s_km1.scale != s_k.scale)
        throw InvalidInputError("row and column sets come from different scales");

    BoundaryMatrix b;
    b.rows = s_km1;
    b.cols = s_k;
    b.entries = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(s_km1.size()),
                                      static_cast<Eigen::Index>(s_k.size()));
    if (s_k.dimension == 0) return b; // zero map: no rows

    for (std::size_t j = 0; j < s_k.size(); ++j) {
        const Simplex& s = s_k.members[j];
        int l = 0;
        for (std::uint64_t bits = s.vertex_bits; bits != 0; bits &= bits - 1, ++l) {
            const std::uint64_t lowest = bits & (~bits + 1);
            const Simplex face{s.vertex_bits & ~lowest};
            const auto row = s_km1.index_of(face);
            if (!row)
                throw InvalidInputError("downward closure violated: face " +
                                        face.ket(64 - std::countl_zero(s.vertex_bits | 1)) +
                                        " missing from the row set");
            b.entries(*row, static_cast<Eigen::Index>(j)) = (l % 2 == 0) ? 1 : -1;
        }
    }
    return b;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw NumericalError("integer overflow in exact rank elimination; "
                             "arbitrary-precision fallback required");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw NumericalError("integer overflow in exact rank elimination; "
                             "arbitrary-precision fallback required");
    return out;
}

} // namespace

int rank_exact(const Eigen::MatrixXi& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(rows),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(cols)));
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);

    // Bareiss fraction-free elimination with row pivoting; the division by
    // the previous pivot is exact at every step.
    int rank = 0;
    std::int64_t prev_pivot = 1;
    for (std::size_t col = 0; col < static_cast<std::size_t>(cols) && rank < rows; ++col) {
        std::size_t pivot_row = static_cast<std::size_t>(rank);
        while (pivot_row < a.size() && a[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == a.size()) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[pivot_row]);

        const std::int64_t pivot = a[static_cast<std::size_t>(rank)][col];
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < a.size(); ++i) {
            for (std::size_t j = col + 1; j < static_cast<std::size_t>(cols); ++j) {
                const std::int64_t num =
                    checked_sub(checked_mul(pivot, a[i][j]),
                                checked_mul(a[i][col], a[static_cast<std::size_t>(rank)][j]));
                a[i][j] = num / prev_pivot;
            }
            a[i][col] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

int betti_at_scale(const DistanceMatrix& d, double eps, int k) {
    const int n = d.size();
    if (k < 0 || k > n - 1)
        throw InvalidInputError("betti dimension k=" + std::to_string(k) +
                                " out of range for n=" + std::to_string(n));

    const SimplexSet s_k = enumerate_k_simplices(d, eps, k);
    int rank_k = 0;
    if (k >= 1) {
        const SimplexSet s_km1 = enumerate_k_simplices(d, eps, k - 1);
        rank_k = rank_exact(boundary_matrix(s_k, s_km1).entries);
    }
    int rank_kp1 = 0;
    if (k + 1 <= n - 1) {
        const SimplexSet s_kp1 = enumerate_k_simplices(d, eps, k + 1);
        if (!s_kp1.empty()) rank_kp1 = rank_exact(boundary_matrix(s_kp1, s_k).entries);
    }
    return (static_cast<int>(s_k.size()) - rank_k) - rank_kp1;
}

int BettiCurve::value_at(double eps) const {
    std::size_t i = 0;
    while (i < breakpoints.size() && eps > breakpoints[i]) ++i;
    return values[i];
}

BettiCurve betti_curve(const DistanceMatrix& d, int k) {
    BettiCurve curve;
    curve.dimension = k;
    curve.breakpoints = d.critical_scales();

    const auto& c = curve.breakpoints;
    for (std::size_t i = 0; i <= c.size(); ++i) {
        double eps;
        if (c.empty())
            eps = 1.0;
        else if (i == c.size())
            eps = c.back() + 1.0; // one point beyond the last distance
        else {
            const double lo = (i == 0) ? 0.0 : c[i - 1];
            eps = (lo + c[i]) / 2.0;
        }
        curve.values.push_back(betti_at_scale(d, eps, k));
    }
    return curve;
}

int Barcode::bars_at(int k, double eps) const {
    if (k < 0 || static_cast<std::size_t>(k) >= intervals.size()) return 0;
    int count = 0;
    for (const auto& bar : intervals[static_cast<std::size_t>(k)])
        if (bar.contains(eps)) ++count;
    return count;
}

namespace {

using coeff_t = boost::multiprecision::cpp_int;

// A reduction column: sorted (row index, coefficient) pairs, highest row last.
using sparse_column = std::vector<std::pair<int, coeff_t>>;

void normalize_content(sparse_column& col) {
    if (col.empty()) return;
    coeff_t g = 0;
    for (const auto& [row, c] : col) g = boost::multiprecision::gcd(g, c);
    if (g > 1)
        for (auto& [row, c] : col) c /= g;
}

// target <- a*target - b*source, exact over the integers.
void combine(sparse_column& target, const sparse_column& source, const coeff_t& a, const coeff_t& b) {
    sparse_column out;
    out.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
            out.emplace_back(target[i].first, a * target[i].second);
            ++i;
        } else if (i == target.size() || source[j].first < target[i].first) {
            out.emplace_back(source[j].first, -b * source[j].second);
            ++j;
        } else {
            coeff_t c = a * target[i].second - b * source[j].second;
            if (c != 0) out.emplace_back(target[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    normalize_content(out);
    target = std::move(out);
}

struct FiltrationSimplex {
    std::uint64_t bits;
    int dim;
    double scale; // appearance scale: max pairwise distance (0 for vertices)
};

} // namespace

Barcode barcode(const DistanceMatrix& d, int max_k) {
    const int n = d.size();
    if (max_k < 0 || max_k > n - 1)
        throw InvalidInputError("barcode dimension out of range");

    // The filtration needs simplices one dimension above max_k so that
    // death events of max_k-cycles are seen.
    const int top_dim = std::min(max_k + 1, n - 1);
    std::vector<FiltrationSimplex> filtration;
    for (int k = 0; k <= top_dim; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i <= k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            double diameter = 0.0;
            for (int a = 0; a <= k; ++a)
                for (int b = a + 1; b <= k; ++b)
                    diameter = std::max(diameter, d(idx[static_cast<std::size_t>(a)],
                                                    idx[static_cast<std::size_t>(b)]));
            std::uint64_t bits = 0;
            for (int v : idx) bits |= 1ULL << v;
            filtration.push_back({bits, k, diameter});

            int pos = k;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1 - (k - pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i <= k; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    std::sort(filtration.begin(), filtration.end(), [](const auto& a, const auto& b) {
        if (a.scale != b.scale) return a.scale < b.scale;
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.bits < b.bits;
    });

    std::unordered_map<std::uint64_t, int> position;
    position.reserve(filtration.size());
    for (std::size_t i = 0; i < filtration.size(); ++i) position[filtration[i].bits] = static_cast<int>(i);

    // Boundary columns in filtration order, reduced left to right.
    std::vector<sparse_column> reduced(filtration.size());
    std::unordered_map<int, int> owner_of_low; // pivot row -> column index

    Barcode result;
    result.intervals.resize(static_cast<std::size_t>(max_k) + 1);
    std::vector<bool> killed(filtration.size(), false);

    for (std::size_t j = 0; j < filtration.size(); ++j) {
        const FiltrationSimplex& s = filtration[j];
        sparse_column col;
        if (s.dim > 0) {
            int l = 0;
            for (std::uint64_t bits = s.bits; bits != 0; bits &= bits - 1, ++l) {
                const std::uint64_t lowest = bits & (~bits + 1);
                col.emplace_back(position.at(s.bits & ~lowest), coeff_t((l % 2 == 0) ? 1 : -1));
            }
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }

        while (!col.empty()) {
            const int low = col.back().first;
            const auto it = owner_of_low.find(low);
            if (it == owner_of_low.end()) break;
            const sparse_column& other = reduced[static_cast<std::size_t>(it->second)];
            combine(col, other, other.back().second, col.back().second);
        }

        if (!col.empty()) {
            const int low = col.back().first;
            owner_of_low.emplace(low, static_cast<int>(j));
            killed[static_cast<std::size_t>(low)] = true;
            const FiltrationSimplex& born = filtration[static_cast<std::size_t>(low)];
            if (born.dim <= max_k && born.scale < s.scale)
                result.intervals[static_cast<std::size_t>(born.dim)].push_back(
                    PersistenceInterval{born.scale, s.scale});
        }
        reduced[j] = std::move(col);
    }

    // Essential classes: cycle columns that were never paired as a pivot row.
    for (std::size_t j = 0; j < filtration.size(); ++j) {
        const FiltrationSimplex& s = filtration[j];
        if (reduced[j].empty() && !killed[j] && s.dim <= max_k)
            result.intervals[static_cast<std::size_t>(s.dim)].push_back(PersistenceInterval{s.scale});
    }

    for (auto& bars : result.intervals)
        std::sort(bars.begin(), bars.end(), [](const auto& a, const auto& b) {
            if (a.birth != b.birth) return a.birth < b.birth;
            return a.death < b.death;
        });
    return result;
}

} // namespace qtda
