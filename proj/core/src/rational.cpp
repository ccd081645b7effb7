#include "tnineq/rational.hpp"

#include <stdexcept>

namespace tnineq {

std::string scalar_to_string(const Scalar& x) {
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Scalar scalar_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // Validate by hand; cpp_rational's string ctor is permissive about spaces.
  std::size_t i = 0;
  auto scan_int = [&]() {
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0) throw std::invalid_argument("bad rational literal: " + s);
  };
  scan_int();
  if (i < s.size()) {
    if (s[i] != '/') throw std::invalid_argument("bad rational literal: " + s);
    ++i;
    scan_int();
    if (i != s.size()) throw std::invalid_argument("bad rational literal: " + s);
  }
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Scalar(BigInt(s));
  const BigInt num(s.substr(0, slash));
  const BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Scalar(num, den);
}

}  // namespace tnineq
