#pragma once

#include <stdexcept>
#include <string>

namespace qcwalk {

// Raised when an integrator or eigensolver produces an unusable result
// (trace drift, negative populations beyond tolerance, failed solve).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive algorithm is asked to run beyond its size cap.
class SizeLimitError : public std::invalid_argument {
 public:
  explicit SizeLimitError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qcwalk
