/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtda/geometry.hpp"
#include "qtda/homology.hpp"

namespace qtda::io {

enum class InputFormat { csv_matrix, json };

/// Parsed input file: either a raw distance matrix or a point list with a
/// metric name, never both, plus an optional label list.
struct InputDocument {
    std::optional<Eigen::MatrixXd> matrix;
    std::optional<std::vector<std::vector<double>>> points;
    Metric metric = Metric::euclidean;
    std::optional<std::vector<std::string>> labels;

    /// Realizes and validates the distance matrix.
    DistanceMatrix distances() const;
};

InputDocument parse_csv_matrix(std::istream& in);
InputDocument parse_json(std::istream& in);

/// Reads a file; the format defaults to JSON for a .json extension and
/// csv-matrix otherwise.
InputDocument parse_input(const std::filesystem::path& path,
                          std::optional<InputFormat> format = std::nullopt);

/// Content hash (FNV-1a 64) of the canonicalized distance matrix, as a hex
/// string. Identical matrices always hash identically.
std::string matrix_digest(const DistanceMatrix& d);

/// Nearest double to x with 12 significant decimal digits; all floats in
/// structured output pass through this so documents diff cleanly.
double round_12_digits(double x);

/// The single structured output document every subcommand emits:
/// {command, input_digest, parameters, results} with stable key order.
nlohmann::ordered_json make_document(const std::string& command, const std::string& input_digest,
                                     nlohmann::ordered_json parameters,
                                     nlohmann::ordered_json results);

std::string serialize_document(const nlohmann::ordered_json& doc);

/// Barcode plot on a fixed 800x400 canvas: one row per bar, dimensions
/// stacked, axis ticks at the critical scales. Byte-deterministic.
std::string render_barcode_svg(const Barcode& barcode, const std::vector<double>& critical_scales);

} // namespace qtda::io
