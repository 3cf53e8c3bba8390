#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace posetsym {

// Argument-shape errors.
struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct LengthError : std::length_error {
  using std::length_error::length_error;
};
struct SizeError : std::length_error {
  using std::length_error::length_error;
};
struct WeightError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EmptyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotMember : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnknownSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The relation generated by the input has a directed cycle.
struct CycleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A quasisymmetric element is not symmetric; `first` and `second` are two
// rearrangements of one partition carrying different coefficients.
struct NotSymmetric : std::domain_error {
  NotSymmetric(std::vector<int> first, std::vector<int> second);
  std::vector<int> first;
  std::vector<int> second;
};

// A structural precondition ((a+b)-freeness) failed. `witness` lists the
// 0-based elements of an offending induced subposet.
struct NotApplicable : std::domain_error {
  NotApplicable(const std::string& what, std::vector<int> witness);
  std::vector<int> witness;
};

}  // namespace posetsym
