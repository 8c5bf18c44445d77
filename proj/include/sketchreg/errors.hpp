#pragma once

#include <stdexcept>
#include <string>

namespace sketchreg {

// Iterative solver failed to converge; carries the offending dimensions.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, std::size_t rows, std::size_t cols)
        : std::runtime_error(what + " (matrix " + std::to_string(rows) + "x" + std::to_string(cols) + ")"),
          rows_(rows),
          cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_;
    std::size_t cols_;
};

// Spectrum does not satisfy the required sum-of-squares scaling.
class SpectrumScalingError : public std::invalid_argument {
public:
    SpectrumScalingError(double actual, double expected)
        : std::invalid_argument("spectrum energy " + std::to_string(actual) + " does not match required scaling " +
                                std::to_string(expected)),
          actual_(actual),
          expected_(expected) {}

    double actual() const { return actual_; }
    double expected() const { return expected_; }

private:
    double actual_;
    double expected_;
};

// Malformed input data (CSV and friends); 1-based line/column where known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(line > 0 ? what + " at line " + std::to_string(line) +
                                            (column > 0 ? ", column " + std::to_string(column) : "")
                                      : what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace sketchreg
