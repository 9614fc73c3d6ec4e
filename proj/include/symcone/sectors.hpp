#pragma once

#include <symcone/combinat.hpp>
#include <symcone/exactalg.hpp>

#include <string>
#include <utility>
#include <vector>

namespace symcone {

/// Torus-fixed point (mu, sigma) of the inertia stack of Sym^d P^r.
struct FixedSector {
  OrderedZeroPartition mu;
  Multipartition sigma;

  /// Throws ShapeMismatch unless sigma_i is a partition of mu_i.
  static FixedSector make(OrderedZeroPartition mu, Multipartition sigma);
  static FixedSector make(Multipartition sigma);

  int degree() const { return mu.sum(); }
  /// Number of coordinates minus one.
  int r() const { return static_cast<int>(mu.size()) - 1; }
  /// lcm of all parts of sigma.
  long r_sigma() const { return sigma.lcm_of_parts(); }
  std::string to_string() const;

  friend auto operator<=>(const FixedSector &, const FixedSector &) = default;
  friend bool operator==(const FixedSector &, const FixedSector &) = default;
};

/// All sectors for (d, r): mu in zpart order, then sigma in component order.
std::vector<FixedSector> enumerate_sectors(int d, int r);

/// prod over parts eta, coordinates i != i(eta) of (a_{i(eta)} - a_i).
AlphaPoly sector_euler_class(const FixedSector &s);

/// One-edge decorated tree based at a sector.
struct EdgeClass {
  FixedSector base;
  int i1 = 0;
  int i2 = 0;
  Partition mov;
  BigRational q;

  // derived
  std::vector<int> beta_eta; // parallel to mov.parts()
  int beta = 0;
  Partition stat; // sigma_{i1} minus mov
  FixedSector target;
  LinearForm w;
  LinearForm wbar;

  int mov_count() const { return static_cast<int>(mov.size()); }
  std::string to_string() const;
};

/// Validates and fills the derived fields. Throws BadEdge.
EdgeClass make_edge(const FixedSector &base, int i1, int i2, Partition mov,
                    BigRational q);

/// All one-edge trees with beta <= beta_cap, ordered by (i1, i2, mov
/// descending, q ascending).
std::vector<EdgeClass> enumerate_edges(const FixedSector &s,
                                       const BigRational &beta_cap);

/// The edge based at the target with the coordinates swapped.
EdgeClass reverse_edge(const EdgeClass &e);

/// (w, wbar) with w = (a_{i1} - a_{i2}) / q and wbar = r_sigma * w.
std::pair<LinearForm, LinearForm> edge_weight(const EdgeClass &e);

/// How the linear factors of the edge denominator are scaled.
/// AsPrinted uses the bare factors; RSigmaScaled multiplies every factor
/// by r_sigma, matching the factors that arise from the I-function
/// denominators at z = wbar.
enum class RcNormalization { AsPrinted, RSigmaScaled };

std::string to_string(RcNormalization n);

/// The linear factors of W, one entry per (eta, B, i).
std::vector<AlphaPoly> edge_factors(const EdgeClass &e,
                                    RcNormalization n = RcNormalization::AsPrinted);
AlphaRat edge_factor_W(const EdgeClass &e,
                       RcNormalization n = RcNormalization::AsPrinted);

/// (-1)^{mov-a} q^{-mov} binom(sigma_{i1}, mov) C(mov-1, a-1).
/// Throws BadExponent unless 1 <= a <= mov.
BigRational rc_prefactor(const EdgeClass &e, int a);

AlphaRat recursion_coefficient(const EdgeClass &e, int a,
                               RcNormalization n = RcNormalization::AsPrinted);

} // namespace symcone
