#pragma once
/// @file formats.hpp
/// @brief Line-oriented text formats for algebras, operators, and r-matrices.
///
/// Common rules: `#` starts a comment, tokens are whitespace-separated,
/// indices are 1-based in files.  Parse errors carry the line number.
///
/// Algebra:
///     algebra NAME          (optional; default "custom")
///     dim N
///     bracket i j k VALUE   (coefficient of basis k in [e_i, e_j])
///
/// Operator (column j = image of basis vector j):
///     operator NAME         (optional)
///     ROW OF VALUES         (one line per row, all rows equal length)
///
/// R-matrix:
///     rmatrix NAME          (optional)
///     dim N
///     entry i j VALUE       (coefficient of e_i (x) e_j)

#include <string>

#include "lie_algebra.hpp"

namespace rbv {

LieAlgebra parse_algebra(const std::string& text);
Mat parse_operator(const std::string& text);
Mat parse_rmatrix(const std::string& text);

std::string format_algebra(const LieAlgebra& alg);
std::string format_operator(const Mat& m, const std::string& name);
std::string format_rmatrix(const Mat& r, const std::string& name);

}  // namespace rbv
