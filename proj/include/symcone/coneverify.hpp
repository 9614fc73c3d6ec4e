#pragma once

#include <symcone/ifunction.hpp>
#include <symcone/sectors.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace symcone {

using SeriesMap = std::map<FixedSector, RestrictedSeries>;

// ------------------------------------------------------------ pole condition

struct PoleViolation {
  SeriesIndex index;
  std::string pole; // rendering of the stray location or the failure
  int order = 0;
};

struct PoleReport {
  FixedSector sector;
  std::vector<LinearForm> allowed; // excluding z = 0
  std::map<SeriesIndex, PoleSupport> observed;
  std::vector<PoleViolation> violations;
  int max_degree_at_infinity = 0;
  bool pass = true;
};

/// Every pole of every coefficient lies at z = 0 or at some wbar(edge).
PoleReport check_condition_I(const RestrictedSeries &series,
                             const std::vector<EdgeClass> &edges);

// ------------------------------------------------------- recursion condition

struct ProbeResult {
  BigRational factor;              // LHS = factor * RHS on every row
  std::optional<int> r_sigma_power; // factor = r_sigma^power, when it is one
};

struct RecursionRow {
  SeriesIndex index;
  AlphaRat lhs;
  AlphaRat rhs;
  bool equal = true;
};

struct RecursionReport {
  FixedSector sector;
  LinearForm wbar;
  int a = 1;
  RcNormalization normalization = RcNormalization::AsPrinted;
  std::size_t indices_checked = 0;
  std::vector<RecursionRow> rows; // rows where either side is nonzero
  bool pass = true;
  std::optional<ProbeResult> probe;
};

/// Reports for a = 1..amax at one pole. `edges` are the edges of `sector`;
/// those with a different wbar are ignored. Throws Incomplete when a target
/// series is missing.
std::vector<RecursionReport>
check_recursion_at(const SeriesMap &all, const FixedSector &sector,
                   const LinearForm &wbar, const std::vector<EdgeClass> &edges,
                   int amax, RcNormalization n = RcNormalization::AsPrinted);

RecursionReport check_condition_II(const SeriesMap &all,
                                   const FixedSector &sector,
                                   const LinearForm &wbar, int a,
                                   RcNormalization n = RcNormalization::AsPrinted);

/// A single rational c with LHS = c * RHS on every row, and its exponent as
/// a power of r_sigma when it is one.
std::optional<ProbeResult> normalization_probe(const RecursionReport &report);

/// Re-checks LHS == RHS row by row at random rational points.
bool specialization_crosscheck(const RecursionReport &report, int points,
                               std::uint64_t seed);

// ---------------------------------------------------------------- full runs

struct VerifyConfig {
  int d = 1;
  int r = 1;
  SeriesCaps caps;
  IOptions options;
  RcNormalization normalization = RcNormalization::AsPrinted;
  bool probe = false;
  int crosscheck_points = 0;
  std::uint64_t seed = 1;
};

struct VerifyResult {
  std::vector<PoleReport> poles;
  std::vector<RecursionReport> recursion;
  std::vector<bool> crosscheck; // parallel to recursion, when requested
  bool pass_I = true;
  bool pass_II = true;
  bool pass_crosscheck = true;
};

SeriesMap compute_all_series(int d, int r, const SeriesCaps &caps,
                             const IOptions &options);

VerifyResult run_verification(const VerifyConfig &config);

struct ProbeSummary {
  bool all_zero = true;
  bool consistent = true; // every failing report has a probe result
  std::set<int> r_sigma_powers;
  std::set<BigRational> factors;
  /// One power of r_sigma explains every failing report.
  bool uniform() const {
    return all_zero || (consistent && r_sigma_powers.size() == 1);
  }
};

/// Probes every failing report (filling report.probe) and summarizes.
ProbeSummary summarize_probes(std::vector<RecursionReport> &reports);

// ---------------------------------------------------------------- identities

enum class Membership { Free, In, Out };

/// A pattern arises from some A with |A| = |sigma_T| - a: at most that many
/// occurrences are constrained.
bool signsum_pattern_realizable(std::size_t parts,
                                const std::vector<Membership> &pattern, int a);

struct SignsumResult {
  BigInt brute;
  BigInt closed_form;
  bool pass = false;
};

/// Sum over labeled Mov in sigma_T with |Mov| >= a respecting the pattern of
/// (-1)^{|Mov|-a} C(|Mov|-1, a-1), against 1 if nothing is forced in, else 0.
SignsumResult check_identity_signsum(const Partition &sigma_t,
                                     const std::vector<Membership> &pattern,
                                     int a);

struct SweepResult {
  long cases = 0;
  long failures = 0;
  bool pass() const { return failures == 0; }
};

/// All sigma_T with at most `max_parts` parts (parts <= 3), all a, all
/// realizable patterns.
SweepResult sweep_signsum(int max_parts);

/// sum_{m1+m2=k-1} C(k-1,m1) X^-(m1+1) Y^-(m2+1) == (X+Y)^{k-1} / (X^k Y^k).
bool check_psi_binomial(int k);
/// The same identity with denominators cleared, against a term-by-term
/// binomial expansion.
bool check_psi_binomial_cleared(int k);

struct RatioResult {
  BigRational lhs;
  BigRational rhs;
  bool pass = false;
};

/// |C_mu(sigma)| / (|S_e| prod beta_eta) == q^{-mov} binom(sigma_{i1}, Mov).
RatioResult check_ratio_identity(const EdgeClass &e);

/// RC(e, a) * W(e) == rc_prefactor(e, a).
bool check_w_times_rc(const EdgeClass &e, int a,
                      RcNormalization n = RcNormalization::AsPrinted);

} // namespace symcone
