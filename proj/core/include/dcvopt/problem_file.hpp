#pragma once

#include "dcvopt/problem.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcvopt {

/// Syntax error in a problem file, tagged with its 1-based line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct ProblemOptions {
    std::size_t grid = 101;
    Rational radius{1, 2};
    std::vector<Rational> dilation{Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    /// (alpha, beta) pairs; empty means the engine defaults.
    std::vector<std::pair<RationalVector, RationalVector>> corrections;
    std::vector<Rational> lambdas = default_lambdas();

    friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

struct ProblemFile {
    DCProblem problem;
    /// Empty lists mean "use the gradient defaults".
    std::vector<LinearOperator> candidates_t;
    std::vector<LinearOperator> candidates_l;
    ProblemOptions options;

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Sectioned key = value format:
///
///   [spaces]      x_dim, y_dim, z_dim
///   [cones]       K, D        generator rows "1, 0; 0, 1"
///   [map F]       coord = <polynomial> (once per output coordinate),
///                 except = <point> -> <value>
///   [set]         lower, upper
///   [point]       xbar, eps
///   [candidates]  T, L        matrices, repeatable
///   [options]     grid, radius, dilation, correction = <alpha> | <beta>, lambdas
///
/// Maps G, H, S use [map G] etc. '#' starts a comment. Throws ParseError on
/// syntax problems and the DCProblem::validate errors on semantic ones.
ProblemFile parse_problem(std::string_view text);

ProblemFile load_problem(const std::filesystem::path& path);

/// Canonical text form; parse_problem(write_problem(p)) == p.
std::string write_problem(const ProblemFile& file);

} // namespace dcvopt
