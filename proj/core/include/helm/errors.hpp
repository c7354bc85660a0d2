// Error taxonomy shared by the whole library.
//
// The CLI maps these onto process exit codes:
//   parameter_error                  -> 2
//   data_error / validity_error      -> 3
//   io_error                         -> 4

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace helm {

/// Caller passed an argument outside the documented contract.
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input samples are unusable (NaN/Inf encountered while evaluating data).
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerics left the representable/valid regime (overflow, missing stability
/// constant, ...). Carries enough text to name the offending mode.
class validity_error : public std::runtime_error {
public:
    explicit validity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Iteration failed to reach its tolerance; keeps the residual history.
class convergence_error : public validity_error {
public:
    convergence_error(const std::string& what, std::vector<double> residuals)
        : validity_error(what), residuals_(std::move(residuals)) {}

    const std::vector<double>& residual_history() const { return residuals_; }

private:
    std::vector<double> residuals_;
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace helm
