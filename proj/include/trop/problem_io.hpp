#pragma once

#include <optional>
#include <string>

#include "trop/recover.hpp"
#include "trop/tropical.hpp"

namespace trop {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ProblemPolynomial {
  std::vector<IntVec> support;
  std::optional<std::vector<Complex>> coefficients;  // aligned with support
};

struct ProblemFile {
  int dim = 0;
  std::vector<ProblemPolynomial> polynomials;
};

// Parses the JSON problem schema; throws ParseError with a field path on
// malformed input.
ProblemFile parse_problem(const std::string& text);
std::string serialize_problem(const ProblemFile& pf);

SupportSystem to_support_system(const ProblemFile& pf);
// Requires coefficients on every polynomial.
std::vector<LaurentPolynomial> to_laurent_system(const ProblemFile& pf);

// FNV-1a 64-bit digest, hex-encoded; used as the input digest of result
// envelopes.
std::string fnv1a_digest(const std::string& data);

}  // namespace trop
