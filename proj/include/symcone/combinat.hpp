#pragma once

#include <symcone/rational.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace symcone {

/// Multiset of positive integers, stored sorted descending.
class Partition {
public:
  Partition() = default;

  /// Sorts `raw` descending. Throws InvalidPart on entries < 1.
  static Partition from_parts(std::vector<int> raw);
  static Partition ones(int d);

  const std::vector<int> &parts() const { return parts_; }
  int sum() const { return sum_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int multiplicity(int value) const;
  bool is_ones() const;
  bool contains(const Partition &sub) const;

  Partition with(const Partition &other) const;
  /// Multiset difference; throws ShapeMismatch when `sub` is not contained.
  Partition without(const Partition &sub) const;

  /// Distinct values, descending, with their multiplicities.
  std::vector<std::pair<int, int>> value_counts() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition &, const Partition &) = default;
  friend bool operator==(const Partition &, const Partition &) = default;

private:
  std::vector<int> parts_;
  int sum_ = 0;
};

Partition canonicalize_partition(std::vector<int> raw);

/// Tuple of nonnegative integers, one per coordinate point.
struct OrderedZeroPartition {
  std::vector<int> entries;

  int sum() const;
  std::size_t size() const { return entries.size(); }
  int operator[](std::size_t i) const { return entries[i]; }
  std::string to_string() const;

  friend auto operator<=>(const OrderedZeroPartition &,
                          const OrderedZeroPartition &) = default;
  friend bool operator==(const OrderedZeroPartition &,
                         const OrderedZeroPartition &) = default;
};

/// One part occurrence of a multipartition: its coordinate label and size.
struct PartOccurrence {
  int coordinate;
  int part;
  friend auto operator<=>(const PartOccurrence &,
                          const PartOccurrence &) = default;
  friend bool operator==(const PartOccurrence &,
                         const PartOccurrence &) = default;
};

/// Coordinate-indexed tuple of partitions. Component i holds the parts
/// labelled by coordinate i.
class Multipartition {
public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  static Multipartition ones(const OrderedZeroPartition &mu);

  const std::vector<Partition> &components() const { return components_; }
  const Partition &operator[](std::size_t i) const { return components_[i]; }
  std::size_t coordinates() const { return components_.size(); }

  OrderedZeroPartition sums() const;
  Partition underlying() const;
  /// Occurrences in canonical order: by coordinate, then descending parts.
  std::vector<PartOccurrence> occurrences() const;
  std::size_t part_count() const;
  bool is_ones() const;
  /// lcm of all parts; 1 for the empty multipartition.
  long lcm_of_parts() const;

  Multipartition with_component(std::size_t i, Partition p) const;
  std::string to_string() const;

  friend auto operator<=>(const Multipartition &,
                          const Multipartition &) = default;
  friend bool operator==(const Multipartition &,
                         const Multipartition &) = default;

private:
  std::vector<Partition> components_;
};

/// Label per part occurrence, parallel to Multipartition::occurrences()
/// (or to Partition::parts()).
struct Labeling {
  std::vector<int> labels;

  long total() const;
  friend auto operator<=>(const Labeling &, const Labeling &) = default;
  friend bool operator==(const Labeling &, const Labeling &) = default;
};

enum class LabelConvention { NonNeg, Pos };

/// |S_sigma|: product over distinct values of (multiplicity)!.
BigInt aut_order(const Partition &sigma);
BigInt aut_order(const Multipartition &sigma);

/// |S_{sigma,L}|: product over distinct (value, label) pairs of
/// (multiplicity)!. For multipartitions the coordinate is part of the value.
BigInt labeled_aut_order(const Partition &sigma, const Labeling &labels);
BigInt labeled_aut_order(const Multipartition &sigma, const Labeling &labels);

/// Number of ways to pick `sub` out of `whole` with distinguishable parts;
/// zero when `sub` is not a submultiset.
BigInt multiset_binomial(const Partition &whole, const Partition &sub);

/// All labelings of the part occurrences of `sigma` with the given total.
std::vector<Labeling> enumerate_labelings(const Multipartition &sigma,
                                          long total,
                                          LabelConvention convention);

/// A labeling is canonical when labels are non-increasing along each run of
/// equal occurrences. Canonical labelings are the orbit representatives of
/// the S_sigma action, i.e. the labeled multisets.
bool is_canonical_labeling(const Multipartition &sigma,
                           const Labeling &labels);

std::vector<Labeling> enumerate_canonical_labelings(const Multipartition &sigma,
                                                    long total,
                                                    LabelConvention convention);

/// All (r+1)-tuples of nonnegative integers summing to d, first coordinate
/// descending: (d,0,..), ..., (0,..,d).
std::vector<OrderedZeroPartition> zpart_enumerate(int d, int r);

/// Partitions of n in descending lexicographic order; {()} for n = 0.
std::vector<Partition> partitions_of(int n);

/// Multipartitions whose component i is a partition of mu[i].
std::vector<Multipartition> multipartitions_of(const OrderedZeroPartition &mu);

/// Distinct sub-multisets of `whole` (as multisets), in descending order.
std::vector<Partition> sub_multisets(const Partition &whole,
                                     bool include_empty = false);

} // namespace symcone
