#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace sblasso {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Thrown by normalize() and anything that needs a direction from a ~zero vector.
struct ZeroVectorError : std::runtime_error {
    explicit ZeroVectorError(const std::string& what) : std::runtime_error(what) {}
};

// The orthogonal complement of the constraint normals is {0}: the flat misses the sphere.
struct EmptyFlatError : std::runtime_error {
    explicit EmptyFlatError(const std::string& what) : std::runtime_error(what) {}
};

// Feasibility oracle ran out of iterations inside the ambiguity window.
struct InconclusiveError : std::runtime_error {
    InconclusiveError(std::string what, std::vector<int> indices, std::vector<int> pattern,
                      double lower, double upper)
        : std::runtime_error(std::move(what)),
          strict_indices(std::move(indices)),
          pattern(std::move(pattern)),
          distance_lower(lower),
          distance_upper(upper) {}
    std::vector<int> strict_indices;
    std::vector<int> pattern;
    double distance_lower = 0.0;
    double distance_upper = 0.0;
};

// Gradient requested on a hyperplane where the certificate has a kink.
struct NondifferentiableError : std::runtime_error {
    NondifferentiableError(const std::string& what, int data_index)
        : std::runtime_error(what), data_index(data_index) {}
    int data_index = -1;
};

// Atom sits on (or too close to) a region boundary; derivative blocks are undefined there.
struct StratumBoundaryError : std::runtime_error {
    StratumBoundaryError(const std::string& what, int atom_index, int data_index)
        : std::runtime_error(what), atom_index(atom_index), data_index(data_index) {}
    int atom_index = -1;
    int data_index = -1;
};

struct EmptyFamilyError : std::runtime_error {
    explicit EmptyFamilyError(const std::string& what) : std::runtime_error(what) {}
};

struct TooLargeError : std::runtime_error {
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

struct SolverFailedError : std::runtime_error {
    SolverFailedError(const std::string& what, double lambda)
        : std::runtime_error(what), lambda(lambda) {}
    double lambda = 0.0;
};

// Malformed run configuration; `field` names the offending entry.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& what, std::string field)
        : std::runtime_error(what), field(std::move(field)) {}
    std::string field;
};

}  // namespace sblasso
