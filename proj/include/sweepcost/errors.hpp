#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sweepcost {

/// Base class for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two polygon edges intersect somewhere other than a shared endpoint.
class SimplicityViolation : public Error {
 public:
  SimplicityViolation(std::size_t edge_a, std::size_t edge_b)
      : Error("polygon is not simple: edges " + std::to_string(edge_a) + " and " +
              std::to_string(edge_b) + " intersect"),
        edge_a_(edge_a),
        edge_b_(edge_b) {}

  std::size_t edge_a() const { return edge_a_; }
  std::size_t edge_b() const { return edge_b_; }

 private:
  std::size_t edge_a_;
  std::size_t edge_b_;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class EndpointMismatch : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class PointOutsideDomain : public Error {
 public:
  using Error::Error;
};

class NotConvex : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class NoPath : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ResolutionTooCoarse : public Error {
 public:
  using Error::Error;
};

}  // namespace sweepcost
