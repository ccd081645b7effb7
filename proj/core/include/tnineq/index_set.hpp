#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tnineq {

/// A subset of [1, n] stored as a bit mask together with its ambient n.
/// Bit (x-1) set means x is a member. Ambient dimensions up to 64 are
/// supported, which covers the 2n principal-minor encoding for n <= 32.
class IndexSet {
 public:
  static constexpr int kMaxAmbient = 64;

  IndexSet() = default;
  IndexSet(std::initializer_list<int> elems, int ambient);
  IndexSet(const std::vector<int>& elems, int ambient);

  static IndexSet from_mask(std::uint64_t mask, int ambient);
  static IndexSet empty_set(int ambient) { return from_mask(0, ambient); }
  static IndexSet full(int ambient);
  /// {lo, lo+1, ..., hi}; empty when lo > hi.
  static IndexSet interval(int lo, int hi, int ambient);

  int ambient() const { return ambient_; }
  std::uint64_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int x) const;

  std::vector<int> elements() const;
  int min() const;  // throws std::domain_error on empty
  int max() const;

  IndexSet complement() const;
  IndexSet united(const IndexSet& other) const;
  IndexSet intersected(const IndexSet& other) const;
  IndexSet minus(const IndexSet& other) const;
  /// {n + 1 - x : x in S} within the same ambient n.
  IndexSet reflected() const;
  /// Same elements viewed inside a larger ambient.
  IndexSet embedded(int new_ambient) const;
  IndexSet inserted(int x) const;
  IndexSet erased(int x) const;

  bool is_subset_of(const IndexSet& other) const;

  std::string to_string() const;  // e.g. "{1,3,6}"

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::uint64_t mask_ = 0;
  int ambient_ = 0;
};

/// Validates a (u, v) operation pair for ambient n: both in [1, n] and
/// |u - v| <= 1 (u == v is the identity). Throws std::invalid_argument.
void validate_op_pair(int n, int u, int v);

/// Replaces u by v when u is present and v absent; otherwise the set is
/// returned unchanged. Cardinality is always preserved.
IndexSet shift_set(const IndexSet& I, int u, int v);

/// Number of sets containing u.
int multiplicity(std::span<const IndexSet> sets, int u);

/// Number of sets containing u but not v (u, v consecutive).
int shift_multiplicity(std::span<const IndexSet> sets, int u, int v);

}  // namespace tnineq
