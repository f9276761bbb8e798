/*
 * Copyright 2026 The photonic-lift Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "photonic/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace photonic {

namespace {

using nlohmann::json;

std::size_t read_dimension(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("matrix document: missing \"") + key + "\"");
  const json& value = doc.at(key);
  if (!value.is_number_integer()) throw ParseError(std::string("matrix document: \"") + key + "\" must be an integer");
  const auto n = value.get<std::int64_t>();
  if (n < 1) throw ParseError(std::string("matrix document: \"") + key + "\" must be at least 1");
  return static_cast<std::size_t>(n);
}

double read_number(const json& value) {
  if (!value.is_number()) throw ParseError("matrix document: entries must be numbers");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw ParseError("matrix document: non-finite entry");
  return x;
}

std::string number_text(double x) { return json(x).dump(); }

}  // namespace

MatrixDocument parse_matrix_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix document: top level must be an object");

  const std::size_t rows = read_dimension(doc, "rows");
  const std::size_t cols = read_dimension(doc, "cols");
  if (!doc.contains("data") || !doc.at("data").is_array()) {
    throw ParseError("matrix document: \"data\" must be an array");
  }
  const json& data = doc.at("data");
  if (data.size() != rows * cols) {
    throw ParseError("matrix document: declared " + std::to_string(rows) + "x" + std::to_string(cols) + " but found " +
                     std::to_string(data.size()) + " entries");
  }
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (const json& pair : data) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("matrix document: each entry must be [re, im]");
    entries.emplace_back(read_number(pair[0]), read_number(pair[1]));
  }

  Metadata metadata;
  if (doc.contains("metadata")) {
    const json& meta = doc.at("metadata");
    if (!meta.is_object()) throw ParseError("matrix document: \"metadata\" must be an object");
    for (const auto& [key, value] : meta.items()) {
      if (!value.is_string()) throw ParseError("matrix document: metadata values must be strings");
      metadata.emplace(key, value.get<std::string>());
    }
  }
  return {ComplexMatrix(rows, cols, std::move(entries)), std::move(metadata)};
}

std::string render_matrix_document(const ComplexMatrix& matrix, const Metadata& metadata) {
  std::ostringstream out;
  out << "{\n  \"rows\": " << matrix.rows() << ",\n  \"cols\": " << matrix.cols() << ",\n  \"data\": [\n";
  const auto entries = matrix.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    out << "    [" << number_text(entries[k].real()) << ", " << number_text(entries[k].imag()) << ']';
    out << (k + 1 < entries.size() ? ",\n" : "\n");
  }
  out << "  ]";
  if (!metadata.empty()) out << ",\n  \"metadata\": " << json(metadata).dump();
  out << "\n}\n";
  return out.str();
}

MatrixDocument read_matrix_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return parse_matrix_document(buffer.str());
}

ComplexMatrix read_matrix(const std::filesystem::path& path) { return read_matrix_document(path).matrix; }

void write_matrix(const ComplexMatrix& matrix, const std::filesystem::path& path, const Metadata& metadata) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << render_matrix_document(matrix, metadata);
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace photonic
