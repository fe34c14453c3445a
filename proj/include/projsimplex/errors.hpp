#pragma once

#include <stdexcept>
#include <string>

namespace projsimplex {

// Caller broke a documented precondition (mismatched dimensions, wrong counts).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested exterior power out of range (k = 0 or k > m, or wrong grade for L).
class GradeError : public ContractError {
public:
    using ContractError::ContractError;
};

// Cofactor oracle asked for a matrix larger than it will expand.
class OracleSizeError : public ContractError {
public:
    using ContractError::ContractError;
};

// Input vectors are not unit within tolerance.
class NormalizationError : public ContractError {
public:
    using ContractError::ContractError;
};

// Out-of-range construction parameter (s, c, target determinant, ...).
class ParameterError : public ContractError {
public:
    using ContractError::ContractError;
};

// Family is linearly dependent (or too close to it) for the requested geometry.
class DegenerateInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejection sampler exhausted its retry budget.
class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace projsimplex
