#include <symcone/coneverify.hpp>
#include <symcone/errors.hpp>
#include <symcone/parallel.hpp>

#include <algorithm>

namespace symcone {

// ------------------------------------------------------------ pole condition

PoleReport check_condition_I(const RestrictedSeries &series,
                             const std::vector<EdgeClass> &edges) {
  PoleReport rep;
  rep.sector = series.sector;
  std::set<LinearForm> allowed;
  for (const auto &e : edges)
    allowed.insert(e.wbar);
  rep.allowed.assign(allowed.begin(), allowed.end());
  for (const auto &[idx, f] : series.coeffs) {
    PoleSupport sup;
    try {
      sup = pole_support(f);
    } catch (const NonLinearPole &err) {
      rep.violations.push_back({idx, err.what(), 0});
      rep.pass = false;
      continue;
    }
    rep.max_degree_at_infinity =
        std::max(rep.max_degree_at_infinity, sup.degree_at_infinity);
    for (const auto &[w, m] : sup.poles)
      if (!allowed.count(w)) {
        rep.violations.push_back({idx, w.to_string(), m});
        rep.pass = false;
      }
    rep.observed.emplace(idx, std::move(sup));
  }
  return rep;
}

// ------------------------------------------------------- recursion condition

std::vector<RecursionReport>
check_recursion_at(const SeriesMap &all, const FixedSector &sector,
                   const LinearForm &wbar, const std::vector<EdgeClass> &edges,
                   int amax, RcNormalization n) {
  auto src_it = all.find(sector);
  if (src_it == all.end())
    throw Incomplete("no series for " + sector.to_string());
  const RestrictedSeries &src = src_it->second;

  std::vector<const EdgeClass *> matching;
  int maxmov = 0;
  for (const auto &e : edges) {
    if (!(e.wbar == wbar))
      continue;
    if (!all.count(e.target))
      throw Incomplete("no series for target " + e.target.to_string());
    matching.push_back(&e);
    maxmov = std::max(maxmov, e.mov_count());
  }

  // Laurent coefficients for orders -amax..maxmov, cached per coefficient.
  int kmin = -amax, kmax = std::max(maxmov - 1, 0);
  std::map<std::pair<FixedSector, SeriesIndex>, std::vector<AlphaRat>> cache;
  auto laurent = [&](const FixedSector &s, const SeriesIndex &idx,
                     int k) -> AlphaRat {
    const ZRat *f = all.at(s).find(idx);
    if (!f)
      return AlphaRat();
    auto key = std::make_pair(s, idx);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, laurent_coefficients(*f, wbar, kmin, kmax)).first;
    return it->second[static_cast<std::size_t>(k - kmin)];
  };

  bool with_t = src.options.include_exp_factor && src.caps.t > 0;
  auto box = index_box(sector.degree(), sector.r(), src.caps, with_t);

  std::vector<RecursionReport> out;
  for (int a = 1; a <= amax; ++a) {
    RecursionReport rep;
    rep.sector = sector;
    rep.wbar = wbar;
    rep.a = a;
    rep.normalization = n;
    std::vector<std::pair<const EdgeClass *, AlphaRat>> rcs;
    for (const auto *e : matching)
      if (e->mov_count() >= a)
        rcs.emplace_back(e, recursion_coefficient(*e, a, n));
    for (const auto &idx : box) {
      ++rep.indices_checked;
      AlphaRat lhs = laurent(sector, idx, -a);
      AlphaRat rhs;
      for (const auto &[e, rc] : rcs) {
        if (e->beta > idx.beta)
          continue;
        SeriesIndex shifted = idx;
        shifted.beta -= e->beta;
        AlphaRat lc = laurent(e->target, shifted, e->mov_count() - a);
        if (!lc.is_zero())
          rhs += rc * lc;
      }
      if (lhs.is_zero() && rhs.is_zero())
        continue;
      bool eq = lhs == rhs;
      rep.pass = rep.pass && eq;
      rep.rows.push_back({idx, std::move(lhs), std::move(rhs), eq});
    }
    out.push_back(std::move(rep));
  }
  return out;
}

RecursionReport check_condition_II(const SeriesMap &all,
                                   const FixedSector &sector,
                                   const LinearForm &wbar, int a,
                                   RcNormalization n) {
  auto it = all.find(sector);
  if (it == all.end())
    throw Incomplete("no series for " + sector.to_string());
  auto edges = enumerate_edges(sector, BigRational(it->second.caps.beta));
  return check_recursion_at(all, sector, wbar, edges, a, n).back();
}

std::optional<ProbeResult> normalization_probe(const RecursionReport &report) {
  std::optional<BigRational> factor;
  for (const auto &row : report.rows) {
    if (row.lhs.is_zero() != row.rhs.is_zero())
      return std::nullopt;
    AlphaRat ratio = row.lhs / row.rhs;
    auto p = ratio.as_polynomial();
    if (!p || !p->is_constant())
      return std::nullopt;
    BigRational c = p->constant_term();
    if (factor && *factor != c)
      return std::nullopt;
    factor = c;
  }
  ProbeResult res{factor.value_or(BigRational(1)), std::nullopt};
  // confirm LHS - c * RHS vanishes identically
  for (const auto &row : report.rows)
    if (!(row.lhs - AlphaRat(res.factor) * row.rhs).is_zero())
      return std::nullopt;
  long rs = report.sector.r_sigma();
  if (res.factor == 1) {
    res.r_sigma_power = 0;
  } else if (rs > 1) {
    for (int e = -64; e <= 64; ++e) {
      BigRational p = 1;
      for (int j = 0; j < std::abs(e); ++j)
        p *= rs;
      if (e < 0)
        p = 1 / p;
      if (p == res.factor) {
        res.r_sigma_power = e;
        break;
      }
    }
  }
  return res;
}

bool specialization_crosscheck(const RecursionReport &report, int points,
                               std::uint64_t seed) {
  std::size_t nvars = static_cast<std::size_t>(report.sector.r()) + 1;
  for (int p = 0; p < points; ++p) {
    bool done = false;
    for (int attempt = 0; attempt < 32 && !done; ++attempt) {
      auto pt = random_point(nvars, seed * 1000003 +
                                        static_cast<std::uint64_t>(p) * 101 +
                                        static_cast<std::uint64_t>(attempt));
      try {
        for (const auto &row : report.rows)
          if (row.lhs.evaluate(pt) != row.rhs.evaluate(pt))
            return false;
        done = true;
      } catch (const DivByZero &) {
      }
    }
    if (!done)
      throw SpecializationFailed("no admissible point for cross-check");
  }
  return true;
}

// ---------------------------------------------------------------- full runs

SeriesMap compute_all_series(int d, int r, const SeriesCaps &caps,
                             const IOptions &options) {
  auto sectors = enumerate_sectors(d, r);
  std::vector<RestrictedSeries> series(sectors.size());
  parallel_for(sectors.size(), [&](std::size_t i) {
    series[i] = i_restricted(sectors[i], caps, options);
  });
  SeriesMap out;
  for (std::size_t i = 0; i < sectors.size(); ++i)
    out.emplace(sectors[i], std::move(series[i]));
  return out;
}

VerifyResult run_verification(const VerifyConfig &cfg) {
  VerifyResult res;
  SeriesMap all = compute_all_series(cfg.d, cfg.r, cfg.caps, cfg.options);
  auto sectors = enumerate_sectors(cfg.d, cfg.r);
  BigRational cap(cfg.caps.beta);

  struct Unit {
    FixedSector sector;
    LinearForm wbar;
    int amax;
  };
  std::vector<Unit> units;
  std::map<FixedSector, std::vector<EdgeClass>> edges;
  for (const auto &s : sectors) {
    auto es = enumerate_edges(s, std::max(cap, BigRational(1)));
    res.poles.push_back(check_condition_I(all.at(s), es));
    res.pass_I = res.pass_I && res.poles.back().pass;
    std::map<LinearForm, int> maxmov;
    for (const auto &e : es)
      maxmov[e.wbar] = std::max(maxmov[e.wbar], e.mov_count());
    for (const auto &[w, m] : maxmov) {
      int order = 0;
      for (const auto &[idx, f] : all.at(s).coeffs)
        order = std::max(order, pole_order(f, w));
      units.push_back({s, w, std::max(m, order) + 1});
    }
    edges.emplace(s, std::move(es));
  }

  std::vector<std::vector<RecursionReport>> parts(units.size());
  parallel_for(units.size(), [&](std::size_t i) {
    const auto &u = units[i];
    parts[i] = check_recursion_at(all, u.sector, u.wbar, edges.at(u.sector),
                                  u.amax, cfg.normalization);
  });
  for (auto &p : parts)
    for (auto &r : p)
      res.recursion.push_back(std::move(r));
  for (const auto &r : res.recursion)
    res.pass_II = res.pass_II && r.pass;

  if (cfg.probe)
    summarize_probes(res.recursion);

  if (cfg.crosscheck_points > 0) {
    res.crosscheck.assign(res.recursion.size(), true);
    parallel_for(res.recursion.size(), [&](std::size_t i) {
      if (res.recursion[i].pass)
        res.crosscheck[i] = specialization_crosscheck(
            res.recursion[i], cfg.crosscheck_points, cfg.seed + i);
    });
    for (bool b : res.crosscheck)
      res.pass_crosscheck = res.pass_crosscheck && b;
  }
  return res;
}

ProbeSummary summarize_probes(std::vector<RecursionReport> &reports) {
  ProbeSummary sum;
  for (auto &r : reports) {
    if (r.pass)
      continue;
    sum.all_zero = false;
    r.probe = normalization_probe(r);
    if (!r.probe || !r.probe->r_sigma_power) {
      sum.consistent = false;
      if (r.probe)
        sum.factors.insert(r.probe->factor);
      continue;
    }
    sum.r_sigma_powers.insert(*r.probe->r_sigma_power);
    sum.factors.insert(r.probe->factor);
  }
  return sum;
}

} // namespace symcone
