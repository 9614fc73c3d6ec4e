#pragma once

#include <symcone/combinat.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace symcone {

/// z_sigma = |S_sigma| * product of parts. Throws ShapeMismatch if sigma
/// does not sum to d.
BigInt centralizer_order(int d, const Partition &sigma);
/// d! / z_sigma.
BigInt class_size(int d, const Partition &sigma);
/// Product over coordinates of centralizer_order(mu_i, sigma_i).
BigInt sector_centralizer_order(const OrderedZeroPartition &mu,
                                const Multipartition &sigma);

/// Conjugacy classes of S_d given by cycle type.
struct ClassList {
  int degree = 0;
  std::vector<Partition> classes;
};

using Perm = std::vector<std::uint8_t>;

/// All of S_d in lexicographic order with cycle types. Shared per degree.
class PermTable {
public:
  static std::shared_ptr<const PermTable> get(int d);

  int degree() const { return d_; }
  std::size_t size() const { return perms_.size(); }
  const Perm &perm(std::size_t i) const { return perms_[i]; }
  const Partition &cycle_type(std::size_t i) const { return types_[i]; }
  std::size_t rank(const Perm &p) const;
  /// Indices of elements with the given cycle type.
  std::vector<std::size_t> members(const Partition &type) const;

  explicit PermTable(int d);

private:
  int d_;
  std::vector<Perm> perms_;
  std::vector<Partition> types_;
};

Partition cycle_type(const Perm &p);
/// (a*b)(i) = a(b(i)).
Perm compose(const Perm &a, const Perm &b);

enum class HurwitzBackend { BruteForce, Character, Auto };

struct HurwitzResult {
  BigInt count;
  std::string backend;
};

inline constexpr int kBruteForceCap = 6;

/// Number of tuples (a_1..a_m), a_j of cycle type classes[j], whose product
/// is the identity. Auto uses brute force up to the cap and characters
/// beyond it. BruteForce throws CapExceeded above the cap.
HurwitzResult hurwitz(const ClassList &list,
                      HurwitzBackend backend = HurwitzBackend::BruteForce,
                      int brute_cap = kBruteForceCap);
BigInt hurwitz_count(const ClassList &list);

/// Irreducible character chi^lambda on the class mu (Murnaghan-Nakayama).
BigInt character_value(const Partition &lambda, const Partition &mu);

} // namespace symcone
