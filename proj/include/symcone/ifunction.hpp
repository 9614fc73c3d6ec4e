#pragma once

#include <symcone/combinat.hpp>
#include <symcone/exactalg.hpp>
#include <symcone/sectors.hpp>
#include <symcone/symgroup.hpp>

#include <map>
#include <string>
#include <vector>

namespace symcone {

/// Multi-index of a series coefficient: Q^beta, x^k, t^m.
struct SeriesIndex {
  int beta = 0;
  std::map<Partition, int> k; // nonzero exponents only
  std::vector<int> m;         // one entry per coordinate, or empty when zero

  int x_degree() const;
  int t_degree() const;
  /// prod of k_Pi!.
  BigInt k_factorial() const;
  std::string to_string() const;

  friend auto operator<=>(const SeriesIndex &, const SeriesIndex &) = default;
  friend bool operator==(const SeriesIndex &, const SeriesIndex &) = default;
};

struct SeriesCaps {
  int beta = 0;
  int x = 0;
  int t = 0;
};

/// How labelings enter the sum over labels.
/// Canonical: one labeling per S_sigma-orbit, weighted by |S_sigma|/|S_{sigma,L}|.
/// Occurrence: every labeling of part occurrences, with the same weight.
enum class LabelSum { Canonical, Occurrence };

struct IOptions {
  LabelConvention convention = LabelConvention::NonNeg;
  LabelSum label_sum = LabelSum::Canonical;
  bool include_exp_factor = false;
  HurwitzBackend backend = HurwitzBackend::BruteForce;
};

/// Fixed-sector restriction of the I-function, stored as f(z) = I(-z).
struct RestrictedSeries {
  FixedSector sector;
  SeriesCaps caps;
  IOptions options;
  std::map<SeriesIndex, ZRat> coeffs; // nonzero entries only

  /// nullptr when the coefficient vanishes.
  const ZRat *find(const SeriesIndex &idx) const;
};

/// All x-exponent maps over partitions of d with total degree <= cap.
std::vector<std::map<Partition, int>> x_exponents(int d, int cap);
/// All indices in the cap box for (d, r).
std::vector<SeriesIndex> index_box(int d, int r, const SeriesCaps &caps,
                                   bool with_t);

/// 1 / prod_i (r_sigma (a_{i(eta)} - a_i) - (gamma/eta) z).
ZRat gamma_factor(const FixedSector &s, int coordinate, int eta, int gamma);

/// Sum over labelings with total beta of the weighted label products.
ZRat label_sum(const FixedSector &s, int beta, const IOptions &opts);

/// -z * H(sigma, x^k) / (k! (-z)^{|k|}).
ZRat x_prefactor(const FixedSector &s, const std::map<Partition, int> &k,
                 HurwitzBackend backend = HurwitzBackend::BruteForce);

/// beta + sum_eta r_sigma (a_{i(eta)} - a_i) / (-z), the exponent of t_i.
ZRat divisor_factor(const FixedSector &s, int beta, int i);

RestrictedSeries i_restricted(const FixedSector &s, const SeriesCaps &caps,
                              const IOptions &opts = {});

/// sigma_T = parts at coordinate i1 with L_eta >= q eta, as occurrence flags
/// parallel to sigma.occurrences().
std::vector<bool> pole_group(const FixedSector &s, const Labeling &L,
                             const BigRational &q, int i1);

/// Prefactor and label products of the parts outside the pole group.
ZRat omega_factor(const FixedSector &s, const std::map<Partition, int> &k,
                  const Labeling &L, const BigRational &q, int i1,
                  HurwitzBackend backend = HurwitzBackend::BruteForce);

/// (|S_sigma|/|S_{sigma,L}|) times the label products of the pole group.
ZRat t_l_term(const FixedSector &s, const Labeling &L, const BigRational &q,
              int i1);

} // namespace symcone
