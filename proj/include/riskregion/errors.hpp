#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riskregion {

// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. `line` is 1-based; 0 when the error is not tied to a line.
class parse_error : public error {
public:
    explicit parse_error(const std::string& what, std::size_t line = 0)
        : error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class formula_error : public error {
public:
    using error::error;
};

class fit_error : public error {
public:
    using error::error;
};

class singular_design_error : public fit_error {
public:
    using fit_error::fit_error;
};

class separation_error : public fit_error {
public:
    using fit_error::fit_error;
};

// Iteration cap reached without meeting the convergence tolerances.
class non_convergence_error : public fit_error {
public:
    non_convergence_error(const std::string& what, std::vector<double> last_iterate)
        : fit_error(what), last_iterate_(std::move(last_iterate)) {}
    const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }

private:
    std::vector<double> last_iterate_;
};

// Cholesky pivot failure. `pivot` is the 1-based index of the failing diagonal entry.
class not_positive_definite_error : public error {
public:
    not_positive_definite_error(const std::string& what, std::size_t pivot)
        : error(what), pivot_(pivot) {}
    std::size_t pivot() const noexcept { return pivot_; }

private:
    std::size_t pivot_;
};

class degenerate_region_error : public error {
public:
    using error::error;
};

class oracle_error : public error {
public:
    using error::error;
};

}  // namespace riskregion
