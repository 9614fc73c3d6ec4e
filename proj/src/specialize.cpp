#include <symcone/errors.hpp>
#include <symcone/exactalg.hpp>

#include <random>
#include <set>

namespace symcone {

namespace {

BigRational draw(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 9);
  BigRational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

} // namespace

std::vector<BigRational> random_point(std::size_t nvars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BigRational> pt;
  std::set<BigRational> used;
  while (pt.size() < nvars) {
    BigRational q = draw(rng);
    if (used.insert(q).second)
      pt.push_back(q);
  }
  return pt;
}

BigRational specialize(const AlphaRat &f,
                       const std::vector<BigRational> &alpha) {
  return f.evaluate(alpha);
}

Specialization random_specialize(const AlphaRat &f, std::size_t nvars,
                                 std::uint64_t seed, int retries) {
  for (int attempt = 0; attempt < retries; ++attempt) {
    auto pt = random_point(nvars, seed * 7919 + static_cast<std::uint64_t>(attempt));
    try {
      BigRational v = f.evaluate(pt);
      return {pt, 0, v};
    } catch (const DivByZero &) {
    }
  }
  throw SpecializationFailed("no admissible point after " +
                             std::to_string(retries) + " attempts");
}

Specialization random_specialize(const ZRat &f, std::size_t nvars,
                                 std::uint64_t seed, int retries) {
  for (int attempt = 0; attempt < retries; ++attempt) {
    auto pt = random_point(nvars + 1,
                           seed * 7919 + static_cast<std::uint64_t>(attempt));
    BigRational z = pt.back();
    pt.pop_back();
    try {
      BigRational v = f.evaluate(pt, z);
      return {pt, z, v};
    } catch (const DivByZero &) {
    }
  }
  throw SpecializationFailed("no admissible point after " +
                             std::to_string(retries) + " attempts");
}

} // namespace symcone
