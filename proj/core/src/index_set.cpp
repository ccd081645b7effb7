#include "tnineq/index_set.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace tnineq {

namespace {

void check_ambient(int ambient) {
  if (ambient < 0 || ambient > IndexSet::kMaxAmbient)
    throw std::invalid_argument("ambient dimension out of range: " +
                                std::to_string(ambient));
}

std::uint64_t ambient_mask(int ambient) {
  return ambient == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << ambient) - 1);
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<int> elems, int ambient)
    : IndexSet(std::vector<int>(elems), ambient) {}

IndexSet::IndexSet(const std::vector<int>& elems, int ambient) {
  check_ambient(ambient);
  ambient_ = ambient;
  for (int x : elems) {
    if (x < 1 || x > ambient)
      throw std::invalid_argument("index " + std::to_string(x) +
                                  " outside [1," + std::to_string(ambient) + "]");
    const std::uint64_t bit = std::uint64_t{1} << (x - 1);
    if (mask_ & bit)
      throw std::invalid_argument("duplicate index " + std::to_string(x));
    mask_ |= bit;
  }
}

IndexSet IndexSet::from_mask(std::uint64_t mask, int ambient) {
  check_ambient(ambient);
  if (mask & ~ambient_mask(ambient))
    throw std::invalid_argument("mask has bits outside ambient");
  IndexSet s;
  s.mask_ = mask;
  s.ambient_ = ambient;
  return s;
}

IndexSet IndexSet::full(int ambient) {
  check_ambient(ambient);
  return from_mask(ambient_mask(ambient), ambient);
}

IndexSet IndexSet::interval(int lo, int hi, int ambient) {
  check_ambient(ambient);
  if (lo > hi) return empty_set(ambient);
  if (lo < 1 || hi > ambient)
    throw std::invalid_argument("interval outside [1,n]");
  const std::uint64_t high = ambient_mask(hi);
  const std::uint64_t low = ambient_mask(lo - 1);
  return from_mask(high & ~low, ambient);
}

int IndexSet::size() const { return std::popcount(mask_); }

bool IndexSet::contains(int x) const {
  if (x < 1 || x > ambient_) return false;
  return (mask_ >> (x - 1)) & 1;
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::uint64_t m = mask_;
  while (m) {
    const int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

int IndexSet::min() const {
  if (empty()) throw std::domain_error("min of empty index set");
  return std::countr_zero(mask_) + 1;
}

int IndexSet::max() const {
  if (empty()) throw std::domain_error("max of empty index set");
  return 64 - std::countl_zero(mask_);
}

IndexSet IndexSet::complement() const {
  return from_mask(~mask_ & ambient_mask(ambient_), ambient_);
}

IndexSet IndexSet::united(const IndexSet& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("ambient mismatch in set union");
  return from_mask(mask_ | other.mask_, ambient_);
}

IndexSet IndexSet::intersected(const IndexSet& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("ambient mismatch in set intersection");
  return from_mask(mask_ & other.mask_, ambient_);
}

IndexSet IndexSet::minus(const IndexSet& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("ambient mismatch in set difference");
  return from_mask(mask_ & ~other.mask_, ambient_);
}

IndexSet IndexSet::reflected() const {
  std::uint64_t out = 0;
  std::uint64_t m = mask_;
  while (m) {
    const int b = std::countr_zero(m);
    out |= std::uint64_t{1} << (ambient_ - 1 - b);
    m &= m - 1;
  }
  return from_mask(out, ambient_);
}

IndexSet IndexSet::embedded(int new_ambient) const {
  if (new_ambient < ambient_)
    throw std::invalid_argument("embedding must not shrink the ambient");
  return from_mask(mask_, new_ambient);
}

IndexSet IndexSet::inserted(int x) const {
  if (x < 1 || x > ambient_) throw std::invalid_argument("index out of range");
  return from_mask(mask_ | (std::uint64_t{1} << (x - 1)), ambient_);
}

IndexSet IndexSet::erased(int x) const {
  if (x < 1 || x > ambient_) throw std::invalid_argument("index out of range");
  return from_mask(mask_ & ~(std::uint64_t{1} << (x - 1)), ambient_);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("ambient mismatch in subset test");
  return (mask_ & ~other.mask_) == 0;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int x : elements()) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  out += "}";
  return out;
}

void validate_op_pair(int n, int u, int v) {
  if (u < 1 || u > n || v < 1 || v > n)
    throw std::invalid_argument("operation pair (" + std::to_string(u) + "," +
                                std::to_string(v) + ") outside [1," +
                                std::to_string(n) + "]");
  if (std::abs(u - v) > 1)
    throw std::invalid_argument("operation pair (" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not consecutive");
}

IndexSet shift_set(const IndexSet& I, int u, int v) {
  validate_op_pair(I.ambient(), u, v);
  if (u == v) return I;
  if (I.contains(u) && !I.contains(v)) return I.erased(u).inserted(v);
  return I;
}

int multiplicity(std::span<const IndexSet> sets, int u) {
  int count = 0;
  for (const IndexSet& s : sets) {
    if (u < 1 || u > s.ambient())
      throw std::invalid_argument("multiplicity index out of range");
    if (s.contains(u)) ++count;
  }
  return count;
}

int shift_multiplicity(std::span<const IndexSet> sets, int u, int v) {
  int count = 0;
  for (const IndexSet& s : sets) {
    validate_op_pair(s.ambient(), u, v);
    if (s.contains(u) && !s.contains(v)) ++count;
  }
  return count;
}

}  // namespace tnineq
