#include <symcone/errors.hpp>
#include <symcone/sectors.hpp>

#include <numeric>
#include <sstream>

namespace symcone {

FixedSector FixedSector::make(OrderedZeroPartition mu, Multipartition sigma) {
  if (mu.size() != sigma.coordinates())
    throw ShapeMismatch("mu has " + std::to_string(mu.size()) +
                        " coordinates but sigma has " +
                        std::to_string(sigma.coordinates()));
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (sigma[i].sum() != mu[i])
      throw ShapeMismatch("sigma_" + std::to_string(i) + " = " +
                          sigma[i].to_string() + " does not sum to " +
                          std::to_string(mu[i]));
  if (mu.size() == 0)
    throw ShapeMismatch("a sector needs at least one coordinate");
  return {std::move(mu), std::move(sigma)};
}

FixedSector FixedSector::make(Multipartition sigma) {
  auto mu = sigma.sums();
  return make(std::move(mu), std::move(sigma));
}

std::string FixedSector::to_string() const {
  return "mu=" + mu.to_string() + " sigma=" + sigma.to_string();
}

std::vector<FixedSector> enumerate_sectors(int d, int r) {
  std::vector<FixedSector> out;
  for (const auto &mu : zpart_enumerate(d, r))
    for (auto &sigma : multipartitions_of(mu))
      out.push_back({mu, std::move(sigma)});
  return out;
}

AlphaPoly sector_euler_class(const FixedSector &s) {
  AlphaPoly e(1);
  for (const auto &occ : s.sigma.occurrences())
    for (int i = 0; i <= s.r(); ++i)
      if (i != occ.coordinate)
        e *= AlphaPoly::variable(static_cast<std::size_t>(occ.coordinate)) -
             AlphaPoly::variable(static_cast<std::size_t>(i));
  return e;
}

// --------------------------------------------------------------------- edges

EdgeClass make_edge(const FixedSector &base, int i1, int i2, Partition mov,
                    BigRational q) {
  q.canonicalize();
  int n = static_cast<int>(base.mu.size());
  if (i1 < 0 || i1 >= n || i2 < 0 || i2 >= n || i1 == i2)
    throw BadEdge("coordinates (" + std::to_string(i1) + "," +
                  std::to_string(i2) + ") invalid");
  if (mov.empty())
    throw BadEdge("moving parts must be nonempty");
  const Partition &src = base.sigma[static_cast<std::size_t>(i1)];
  if (!src.contains(mov))
    throw BadEdge(mov.to_string() + " is not contained in " + src.to_string());
  if (q <= 0)
    throw BadEdge("q must be positive");

  EdgeClass e;
  e.base = base;
  e.i1 = i1;
  e.i2 = i2;
  e.mov = std::move(mov);
  e.q = q;
  for (int eta : e.mov.parts()) {
    BigRational b = q * eta;
    b.canonicalize();
    if (b.get_den() != 1)
      throw BadEdge("q * " + std::to_string(eta) + " is not integral");
    e.beta_eta.push_back(static_cast<int>(b.get_num().get_si()));
    e.beta += e.beta_eta.back();
  }
  e.stat = src.without(e.mov);
  auto mu = base.mu;
  int moved = e.mov.sum();
  mu.entries[static_cast<std::size_t>(i1)] -= moved;
  mu.entries[static_cast<std::size_t>(i2)] += moved;
  auto sigma = base.sigma.with_component(static_cast<std::size_t>(i1), e.stat);
  sigma = sigma.with_component(
      static_cast<std::size_t>(i2),
      base.sigma[static_cast<std::size_t>(i2)].with(e.mov));
  e.target = {std::move(mu), std::move(sigma)};
  auto [w, wbar] = edge_weight(e);
  e.w = w;
  e.wbar = wbar;
  return e;
}

std::vector<EdgeClass> enumerate_edges(const FixedSector &s,
                                       const BigRational &beta_cap) {
  std::vector<EdgeClass> out;
  int n = static_cast<int>(s.mu.size());
  for (int i1 = 0; i1 < n; ++i1) {
    const Partition &src = s.sigma[static_cast<std::size_t>(i1)];
    if (src.empty())
      continue;
    for (int i2 = 0; i2 < n; ++i2) {
      if (i2 == i1)
        continue;
      for (const auto &mov : sub_multisets(src)) {
        int g = 0;
        for (int eta : mov.parts())
          g = std::gcd(g, eta);
        for (long j = 1;; ++j) {
          BigRational q(j, g);
          q.canonicalize();
          if (q * mov.sum() > beta_cap)
            break;
          out.push_back(make_edge(s, i1, i2, mov, q));
        }
      }
    }
  }
  return out;
}

EdgeClass reverse_edge(const EdgeClass &e) {
  return make_edge(e.target, e.i2, e.i1, e.mov, e.q);
}

std::pair<LinearForm, LinearForm> edge_weight(const EdgeClass &e) {
  BigRational inv = 1 / e.q;
  LinearForm w = LinearForm::difference(static_cast<std::size_t>(e.i1),
                                        static_cast<std::size_t>(e.i2), inv);
  return {w, w.scaled(BigRational(e.base.r_sigma()))};
}

std::string EdgeClass::to_string() const {
  std::ostringstream os;
  os << "i1=" << i1 << " i2=" << i2 << " mov=" << mov.to_string()
     << " q=" << q.get_str() << " beta=" << beta;
  return os.str();
}

std::string to_string(RcNormalization n) {
  return n == RcNormalization::AsPrinted ? "as-printed" : "r-sigma-scaled";
}

std::vector<AlphaPoly> edge_factors(const EdgeClass &e, RcNormalization n) {
  std::vector<AlphaPoly> out;
  BigRational scale =
      n == RcNormalization::RSigmaScaled ? BigRational(e.base.r_sigma()) : 1;
  AlphaPoly a1 = AlphaPoly::variable(static_cast<std::size_t>(e.i1));
  AlphaPoly a2 = AlphaPoly::variable(static_cast<std::size_t>(e.i2));
  for (int be : e.beta_eta) {
    for (int B = 1; B <= be; ++B) {
      for (int i = 0; i <= e.base.r(); ++i) {
        if (B == be && i == e.i2)
          continue;
        AlphaPoly f = a1 * BigRational(be - B, be) + a2 * BigRational(B, be) -
                      AlphaPoly::variable(static_cast<std::size_t>(i));
        out.push_back(f * scale);
      }
    }
  }
  return out;
}

AlphaRat edge_factor_W(const EdgeClass &e, RcNormalization n) {
  AlphaPoly w(1);
  for (const auto &f : edge_factors(e, n))
    w *= f;
  return AlphaRat(w);
}

BigRational rc_prefactor(const EdgeClass &e, int a) {
  int m = e.mov_count();
  if (a < 1 || a > m)
    throw BadExponent("a = " + std::to_string(a) + " outside [1, " +
                      std::to_string(m) + "]");
  BigRational c = BigRational(multiset_binomial(
                      e.base.sigma[static_cast<std::size_t>(e.i1)], e.mov)) *
                  BigRational(binomial(m - 1, a - 1));
  for (int k = 0; k < m; ++k)
    c /= e.q;
  if ((m - a) % 2)
    c = -c;
  c.canonicalize();
  return c;
}

AlphaRat recursion_coefficient(const EdgeClass &e, int a, RcNormalization n) {
  BigRational c = rc_prefactor(e, a);
  AlphaRat::Factors den;
  for (const auto &f : edge_factors(e, n))
    ++den[f];
  return AlphaRat(AlphaPoly(c), den);
}

} // namespace symcone
