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

#ifndef PHOTONIC_MATRIX_IO_HPP
#define PHOTONIC_MATRIX_IO_HPP

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "photonic/complex_matrix.hpp"

namespace photonic {

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File contents are not a valid matrix document.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Metadata = std::map<std::string, std::string>;

/**
 * Matrix documents are JSON objects:
 *
 *   {
 *     "rows": 2,
 *     "cols": 2,
 *     "data": [[0.7071067811865476, 0], [0.7071067811865476, 0],
 *              [0.7071067811865476, 0], [-0.7071067811865476, 0]],
 *     "metadata": {"note": "balanced beam splitter"}
 *   }
 *
 * `data` holds rows*cols [re, im] pairs in row-major order. `metadata` is an
 * optional object of string values.
 */
struct MatrixDocument {
  ComplexMatrix matrix;
  Metadata metadata;
};

MatrixDocument parse_matrix_document(const std::string& text);
std::string render_matrix_document(const ComplexMatrix& matrix, const Metadata& metadata = {});

/// Throws IoError or ParseError.
ComplexMatrix read_matrix(const std::filesystem::path& path);
MatrixDocument read_matrix_document(const std::filesystem::path& path);

/// Numbers are written in shortest round-trip form, so read_matrix returns
/// the identical doubles. Throws IoError.
void write_matrix(const ComplexMatrix& matrix, const std::filesystem::path& path, const Metadata& metadata = {});

}  // namespace photonic

#endif  // PHOTONIC_MATRIX_IO_HPP
