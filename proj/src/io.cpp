/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qtda/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qtda::io {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& field, int line, int column) {
    const std::string text = trim(field);
    if (text.empty())
        throw InvalidInputError("line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": empty field");
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        throw InvalidInputError("line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": '" + text + "' is not a number");
    return value;
}

} // namespace

DistanceMatrix InputDocument::distances() const {
    if (matrix.has_value() == points.has_value())
        throw InvalidInputError("input must contain exactly one of a matrix or a point list");
    DistanceMatrix d = matrix ? DistanceMatrix::validated(*matrix)
                              : DistanceMatrix::from_points(*points, metric);
    if (labels && static_cast<int>(labels->size()) != d.size())
        throw InvalidInputError("label count does not match the point count");
    return d;
}

InputDocument parse_csv_matrix(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<double> row;
        std::stringstream fields(line);
        std::string field;
        int column = 0;
        while (std::getline(fields, field, ',')) {
            ++column;
            row.push_back(parse_number(field, line_no, column));
        }
        if (line.size() && line.back() == ',')
            throw InvalidInputError("line " + std::to_string(line_no) + ": trailing comma");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidInputError("line 1: no rows in csv matrix");
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        if (rows[i].size() != n)
            throw InvalidInputError("line " + std::to_string(i + 1) + ": expected " +
                                    std::to_string(n) + " values for a square matrix, got " +
                                    std::to_string(rows[i].size()));

    InputDocument doc;
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    doc.matrix = std::move(m);
    return doc;
}

namespace {

InvalidInputError json_error(std::istream& in, std::size_t byte, const std::string& message) {
    in.clear();
    in.seekg(0);
    std::size_t seen = 0;
    int line = 1, column = 1;
    char c;
    while (seen + 1 < byte && in.get(c)) {
        ++seen;
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return InvalidInputError("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message);
}

} // namespace

InputDocument parse_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw json_error(in, e.byte, e.what());
    }
    if (!j.is_object()) throw InvalidInputError("line 1, column 1: top-level value must be an object");

    InputDocument doc;
    const bool has_matrix = j.contains("matrix");
    const bool has_points = j.contains("points");
    if (has_matrix == has_points)
        throw InvalidInputError("input must contain exactly one of \"matrix\" or \"points\"");

    try {
        if (has_matrix) {
            const auto rows = j.at("matrix").get<std::vector<std::vector<double>>>();
            if (rows.empty()) throw InvalidInputError("\"matrix\" must be non-empty");
            Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                              static_cast<Eigen::Index>(rows.size()));
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != rows.size())
                    throw InvalidInputError("\"matrix\" row " + std::to_string(i + 1) +
                                            " has the wrong length for a square matrix");
                for (std::size_t c = 0; c < rows[i].size(); ++c)
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
            }
            doc.matrix = std::move(m);
        } else {
            doc.points = j.at("points").get<std::vector<std::vector<double>>>();
            doc.metric = metric_from_name(j.value("metric", std::string("euclidean")));
        }
        if (j.contains("labels")) doc.labels = j.at("labels").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("malformed input document: ") + e.what());
    }
    return doc;
}

InputDocument parse_input(const std::filesystem::path& path, std::optional<InputFormat> format) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot read input file '" + path.string() + "'");
    const InputFormat f = format.value_or(path.extension() == ".json" ? InputFormat::json
                                                                      : InputFormat::csv_matrix);
    return f == InputFormat::json ? parse_json(in) : parse_csv_matrix(in);
}

std::string matrix_digest(const DistanceMatrix& d) {
    std::string canon = "qtda-matrix-v1\n" + std::to_string(d.size()) + "\n";
    char buf[40];
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g,", d(i, j));
            canon += buf;
        }
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char c : canon) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

double round_12_digits(double x) {
    if (!std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

nlohmann::ordered_json make_document(const std::string& command, const std::string& input_digest,
                                     nlohmann::ordered_json parameters,
                                     nlohmann::ordered_json results) {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["input_digest"] = input_digest;
    doc["parameters"] = std::move(parameters);
    doc["results"] = std::move(results);
    return doc;
}

std::string serialize_document(const nlohmann::ordered_json& doc) {
    return doc.dump(2) + "\n";
}

namespace {

std::string fmt2(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

} // namespace

std::string render_barcode_svg(const Barcode& barcode,
                               const std::vector<double>& critical_scales) {
    constexpr double width = 800.0, height = 400.0;
    constexpr double left = 60.0, right = 30.0, top = 24.0, bottom = 44.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    const double x_max = critical_scales.empty() ? 1.0 : critical_scales.back() * 1.1;
    const auto x_of = [&](double eps) { return left + plot_w * (eps / x_max); };

    std::size_t total_bars = 0;
    for (const auto& bars : barcode.intervals) total_bars += bars.size();
    const std::size_t rows = std::max<std::size_t>(total_bars, 1);
    const double row_h = plot_h / static_cast<double>(rows);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" "
           "viewBox=\"0 0 800 400\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n";

    // axis and ticks at the critical scales
    svg += "  <line x1=\"" + fmt2(left) + "\" y1=\"" + fmt2(height - bottom) + "\" x2=\"" +
           fmt2(width - right) + "\" y2=\"" + fmt2(height - bottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (const double c : critical_scales) {
        const double x = x_of(c);
        svg += "  <line x1=\"" + fmt2(x) + "\" y1=\"" + fmt2(height - bottom) + "\" x2=\"" +
               fmt2(x) + "\" y2=\"" + fmt2(height - bottom + 6) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        svg += "  <text x=\"" + fmt2(x) + "\" y=\"" + fmt2(height - bottom + 20) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" + fmt2(c) +
               "</text>\n";
    }

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    std::size_t row = 0;
    for (std::size_t dim = 0; dim < barcode.intervals.size(); ++dim) {
        const char* color = palette[dim % 4];
        bool labeled = false;
        for (const auto& bar : barcode.intervals[dim]) {
            const double y = top + row_h * (static_cast<double>(row) + 0.5);
            const double x0 = x_of(bar.birth);
            const double x1 = bar.essential() ? (width - right) : x_of(bar.death);
            svg += "  <line class=\"bar\" data-dim=\"" + std::to_string(dim) + "\" x1=\"" +
                   fmt2(x0) + "\" y1=\"" + fmt2(y) + "\" x2=\"" + fmt2(x1) + "\" y2=\"" + fmt2(y) +
                   "\" stroke=\"" + color + "\" stroke-width=\"" + fmt2(std::min(row_h * 0.6, 10.0)) +
                   "\"/>\n";
            if (!labeled) {
                svg += "  <text x=\"" + fmt2(left - 48) + "\" y=\"" + fmt2(y + 4) +
                       "\" font-family=\"monospace\" font-size=\"13\" fill=\"" + color + "\">H" +
                       std::to_string(dim) + "</text>\n";
                labeled = true;
            }
            ++row;
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace qtda::io
