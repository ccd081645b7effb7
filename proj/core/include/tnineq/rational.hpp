#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tnineq {

// All arithmetic in this library is exact. Sign tests on Scalar values are
// proofs at the sampled point, never float heuristics.
using BigInt = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

/// Renders as "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string scalar_to_string(const Scalar& x);

/// Parses "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
Scalar scalar_from_string(const std::string& s);

inline int sign_of(const Scalar& x) { return x.sign(); }

}  // namespace tnineq
