#include <symcone/coneverify.hpp>
#include <symcone/errors.hpp>
#include <symcone/symgroup.hpp>

namespace symcone {

bool signsum_pattern_realizable(std::size_t parts,
                                const std::vector<Membership> &pattern, int a) {
  if (pattern.size() != parts || a < 1 || static_cast<std::size_t>(a) > parts)
    return false;
  std::size_t constrained = 0;
  for (auto m : pattern)
    if (m != Membership::Free)
      ++constrained;
  return constrained + static_cast<std::size_t>(a) <= parts;
}

SignsumResult check_identity_signsum(const Partition &sigma_t,
                                     const std::vector<Membership> &pattern,
                                     int a) {
  std::size_t n = sigma_t.size();
  if (pattern.size() != n)
    throw ShapeMismatch("pattern length differs from the number of parts");
  if (a < 1)
    throw BadExponent("a must be positive");
  SignsumResult res;
  res.brute = 0;
  bool forced_in = false;
  for (auto m : pattern)
    forced_in = forced_in || m == Membership::In;
  // labeled submultisets = subsets of occurrences
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    bool ok = true;
    int size = 0;
    for (std::size_t j = 0; j < n; ++j) {
      bool in = (mask >> j) & 1UL;
      size += in;
      if ((pattern[j] == Membership::In && !in) ||
          (pattern[j] == Membership::Out && in))
        ok = false;
    }
    if (!ok || size < a)
      continue;
    BigInt term = binomial(size - 1, a - 1);
    if ((size - a) % 2)
      res.brute -= term;
    else
      res.brute += term;
  }
  res.closed_form = forced_in ? 0 : 1;
  res.pass = res.brute == res.closed_form;
  return res;
}

SweepResult sweep_signsum(int max_parts) {
  SweepResult out;
  std::vector<Partition> sigmas;
  // multisets of parts from {1,2,3}
  for (int n = 1; n <= max_parts; ++n)
    for (int c1 = 0; c1 <= n; ++c1)
      for (int c2 = 0; c1 + c2 <= n; ++c2) {
        std::vector<int> raw(static_cast<std::size_t>(c1), 1);
        raw.insert(raw.end(), static_cast<std::size_t>(c2), 2);
        raw.insert(raw.end(), static_cast<std::size_t>(n - c1 - c2), 3);
        sigmas.push_back(Partition::from_parts(raw));
      }
  for (const auto &s : sigmas) {
    std::size_t n = s.size();
    std::size_t patterns = 1;
    for (std::size_t j = 0; j < n; ++j)
      patterns *= 3;
    for (int a = 1; a <= static_cast<int>(n); ++a) {
      for (std::size_t code = 0; code < patterns; ++code) {
        std::vector<Membership> pat;
        std::size_t c = code;
        for (std::size_t j = 0; j < n; ++j, c /= 3)
          pat.push_back(static_cast<Membership>(c % 3));
        if (!signsum_pattern_realizable(n, pat, a))
          continue;
        ++out.cases;
        if (!check_identity_signsum(s, pat, a).pass)
          ++out.failures;
      }
    }
  }
  return out;
}

bool check_psi_binomial(int k) {
  if (k < 1)
    throw BadExponent("k must be positive");
  AlphaRat X(AlphaPoly::variable(0)), Y(AlphaPoly::variable(1));
  AlphaRat lhs;
  for (int m1 = 0; m1 <= k - 1; ++m1) {
    int m2 = k - 1 - m1;
    lhs += AlphaRat(BigRational(binomial(k - 1, m1))) * X.pow(-(m1 + 1)) *
           Y.pow(-(m2 + 1));
  }
  AlphaRat rhs = (X + Y).pow(k - 1) / (X.pow(k) * Y.pow(k));
  return lhs == rhs;
}

bool check_psi_binomial_cleared(int k) {
  if (k < 1)
    throw BadExponent("k must be positive");
  AlphaPoly X = AlphaPoly::variable(0), Y = AlphaPoly::variable(1);
  AlphaPoly lhs;
  for (int m1 = 0; m1 <= k - 1; ++m1) {
    int m2 = k - 1 - m1;
    lhs += X.pow(static_cast<unsigned>(k - 1 - m1)) *
           Y.pow(static_cast<unsigned>(k - 1 - m2)) *
           BigRational(binomial(k - 1, m1));
  }
  AlphaPoly rhs(1);
  for (int j = 0; j < k - 1; ++j)
    rhs *= X + Y;
  return lhs == rhs;
}

RatioResult check_ratio_identity(const EdgeClass &e) {
  RatioResult res;
  BigInt c = sector_centralizer_order(e.base.mu, e.base.sigma);
  BigInt z_stat = 1;
  for (std::size_t i = 0; i < e.base.sigma.coordinates(); ++i) {
    const Partition &p = static_cast<int>(i) == e.i1 ? e.stat : e.base.sigma[i];
    z_stat *= centralizer_order(p.sum(), p);
  }
  BigInt s_e = z_stat * aut_order(e.mov);
  BigInt prod_beta = 1;
  for (int b : e.beta_eta)
    prod_beta *= b;
  res.lhs = BigRational(c, s_e * prod_beta);
  res.lhs.canonicalize();
  res.rhs = BigRational(multiset_binomial(
      e.base.sigma[static_cast<std::size_t>(e.i1)], e.mov));
  for (int j = 0; j < e.mov_count(); ++j)
    res.rhs /= e.q;
  res.rhs.canonicalize();
  res.pass = res.lhs == res.rhs;
  return res;
}

bool check_w_times_rc(const EdgeClass &e, int a, RcNormalization n) {
  return recursion_coefficient(e, a, n) * edge_factor_W(e, n) ==
         AlphaRat(rc_prefactor(e, a));
}

} // namespace symcone
