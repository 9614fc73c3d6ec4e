#include <symcone/errors.hpp>
#include <symcone/ifunction.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace symcone {

int SeriesIndex::x_degree() const {
  int s = 0;
  for (const auto &[p, e] : k)
    s += e;
  return s;
}

int SeriesIndex::t_degree() const {
  int s = 0;
  for (int e : m)
    s += e;
  return s;
}

BigInt SeriesIndex::k_factorial() const {
  BigInt f = 1;
  for (const auto &[p, e] : k)
    f *= factorial(static_cast<unsigned>(e));
  return f;
}

std::string SeriesIndex::to_string() const {
  std::ostringstream os;
  os << "Q^" << beta;
  for (const auto &[p, e] : k)
    os << " x" << p.to_string() << "^" << e;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i])
      os << " t" << i << "^" << m[i];
  return os.str();
}

const ZRat *RestrictedSeries::find(const SeriesIndex &idx) const {
  auto it = coeffs.find(idx);
  return it == coeffs.end() ? nullptr : &it->second;
}

std::vector<std::map<Partition, int>> x_exponents(int d, int cap) {
  auto classes = partitions_of(d);
  std::vector<std::map<Partition, int>> out;
  std::map<Partition, int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == classes.size()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      if (e)
        cur[classes[i]] = e;
      rec(i + 1, left - e);
      cur.erase(classes[i]);
    }
  };
  rec(0, std::max(cap, 0));
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    int da = 0, db = 0;
    for (const auto &[p, e] : a)
      da += e;
    for (const auto &[p, e] : b)
      db += e;
    return da < db;
  });
  return out;
}

namespace {

std::vector<std::vector<int>> t_exponents(int n, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == cur.size()) {
      bool zero = std::all_of(cur.begin(), cur.end(),
                              [](int v) { return v == 0; });
      out.push_back(zero ? std::vector<int>{} : cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, std::max(cap, 0));
  return out;
}

} // namespace

std::vector<SeriesIndex> index_box(int d, int r, const SeriesCaps &caps,
                                   bool with_t) {
  std::vector<SeriesIndex> out;
  auto xs = x_exponents(d, caps.x);
  auto ts = t_exponents(r + 1, with_t ? caps.t : 0);
  for (int b = 0; b <= caps.beta; ++b)
    for (const auto &k : xs)
      for (const auto &m : ts)
        out.push_back({b, k, m});
  return out;
}

ZRat gamma_factor(const FixedSector &s, int coordinate, int eta, int gamma) {
  ZRat out(1);
  BigRational g(gamma, eta);
  g.canonicalize();
  BigRational rs(s.r_sigma());
  for (int i = 0; i <= s.r(); ++i) {
    AlphaPoly c = (AlphaPoly::variable(static_cast<std::size_t>(coordinate)) -
                   AlphaPoly::variable(static_cast<std::size_t>(i))) *
                  rs;
    out *= ZRat::inverse_linear(c, g);
  }
  return out;
}

namespace {

// Weighted product of gamma factors over the flagged occurrences.
ZRat label_product(const FixedSector &s, const Labeling &L,
                   const std::vector<bool> *only, bool include_flagged) {
  auto occ = s.sigma.occurrences();
  ZRat out(1);
  for (std::size_t j = 0; j < occ.size(); ++j) {
    if (only && (*only)[j] != include_flagged)
      continue;
    for (int g = 1; g <= L.labels[j]; ++g)
      out *= gamma_factor(s, occ[j].coordinate, occ[j].part, g);
  }
  return out;
}

BigRational label_weight(const FixedSector &s, const Labeling &L) {
  BigRational w(aut_order(s.sigma), labeled_aut_order(s.sigma, L));
  w.canonicalize();
  return w;
}

} // namespace

ZRat label_sum(const FixedSector &s, int beta, const IOptions &opts) {
  auto labels =
      opts.label_sum == LabelSum::Canonical
          ? enumerate_canonical_labelings(s.sigma, beta, opts.convention)
          : enumerate_labelings(s.sigma, beta, opts.convention);
  ZRat total;
  for (const auto &L : labels)
    total += label_product(s, L, nullptr, true) *
             ZRat(AlphaRat(label_weight(s, L)));
  return total;
}

ZRat x_prefactor(const FixedSector &s, const std::map<Partition, int> &k,
                 HurwitzBackend backend) {
  ClassList list{s.degree(), {s.sigma.underlying()}};
  int n = 0;
  BigInt kf = 1;
  for (const auto &[p, e] : k) {
    for (int j = 0; j < e; ++j)
      list.classes.push_back(p);
    n += e;
    kf *= factorial(static_cast<unsigned>(e));
  }
  BigInt h = hurwitz(list, backend).count;
  if (h == 0)
    return ZRat();
  // -z / (-z)^n = (-1)^{1-n} z^{1-n}
  BigRational c(h, kf);
  c.canonicalize();
  if ((1 - n) % 2)
    c = -c;
  return ZRat::z_power(1 - n) * ZRat(AlphaRat(c));
}

ZRat divisor_factor(const FixedSector &s, int beta, int i) {
  AlphaPoly sum;
  BigRational rs(s.r_sigma());
  for (const auto &occ : s.sigma.occurrences())
    sum += (AlphaPoly::variable(static_cast<std::size_t>(occ.coordinate)) -
            AlphaPoly::variable(static_cast<std::size_t>(i))) *
           rs;
  return ZRat(AlphaRat(BigRational(beta))) -
         ZRat(AlphaRat(sum)) * ZRat::z_power(-1);
}

RestrictedSeries i_restricted(const FixedSector &s, const SeriesCaps &caps,
                              const IOptions &opts) {
  RestrictedSeries out;
  out.sector = s;
  out.caps = caps;
  out.options = opts;
  bool with_t = opts.include_exp_factor && caps.t > 0;
  auto xs = x_exponents(s.degree(), caps.x);
  std::vector<ZRat> pref;
  for (const auto &k : xs)
    pref.push_back(x_prefactor(s, k, opts.backend));
  auto ts = t_exponents(s.r() + 1, with_t ? caps.t : 0);

  for (int b = 0; b <= caps.beta; ++b) {
    ZRat ls = label_sum(s, b, opts);
    if (ls.is_zero())
      continue;
    std::vector<ZRat> tfac;
    if (with_t) {
      std::vector<ZRat> div;
      for (int i = 0; i <= s.r(); ++i)
        div.push_back(divisor_factor(s, b, i));
      for (const auto &m : ts) {
        ZRat f(1);
        BigInt mf = 1;
        for (std::size_t i = 0; i < m.size(); ++i)
          for (int e = 0; e < m[i]; ++e) {
            f *= div[i];
            mf *= e + 1;
          }
        tfac.push_back(f * ZRat(AlphaRat(BigRational(1, 1) / BigRational(mf))));
      }
    } else {
      tfac.push_back(ZRat(1));
    }
    for (std::size_t x = 0; x < xs.size(); ++x) {
      if (pref[x].is_zero())
        continue;
      ZRat base = pref[x] * ls;
      for (std::size_t t = 0; t < ts.size(); ++t) {
        ZRat c = base * tfac[t];
        if (!c.is_zero())
          out.coeffs.emplace(SeriesIndex{b, xs[x], ts[t]}, std::move(c));
      }
    }
  }
  return out;
}

std::vector<bool> pole_group(const FixedSector &s, const Labeling &L,
                             const BigRational &q, int i1) {
  auto occ = s.sigma.occurrences();
  if (occ.size() != L.labels.size())
    throw ShapeMismatch("labeling does not match sector");
  std::vector<bool> flags(occ.size(), false);
  for (std::size_t j = 0; j < occ.size(); ++j)
    flags[j] = occ[j].coordinate == i1 && L.labels[j] >= q * occ[j].part;
  return flags;
}

ZRat omega_factor(const FixedSector &s, const std::map<Partition, int> &k,
                  const Labeling &L, const BigRational &q, int i1,
                  HurwitzBackend backend) {
  auto flags = pole_group(s, L, q, i1);
  return x_prefactor(s, k, backend) * label_product(s, L, &flags, false);
}

ZRat t_l_term(const FixedSector &s, const Labeling &L, const BigRational &q,
              int i1) {
  auto flags = pole_group(s, L, q, i1);
  return label_product(s, L, &flags, true) *
         ZRat(AlphaRat(label_weight(s, L)));
}

} // namespace symcone
