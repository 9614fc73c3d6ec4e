#include <symcone/errors.hpp>
#include <symcone/symgroup.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace symcone {

BigInt centralizer_order(int d, const Partition &sigma) {
  if (sigma.sum() != d)
    throw ShapeMismatch(sigma.to_string() + " does not sum to " +
                        std::to_string(d));
  BigInt out = aut_order(sigma);
  for (int v : sigma.parts())
    out *= v;
  return out;
}

BigInt class_size(int d, const Partition &sigma) {
  BigInt z = centralizer_order(d, sigma);
  return BigInt(factorial(static_cast<unsigned>(d)) / z);
}

BigInt sector_centralizer_order(const OrderedZeroPartition &mu,
                                const Multipartition &sigma) {
  if (mu.size() != sigma.coordinates())
    throw ShapeMismatch("sector has " + std::to_string(sigma.coordinates()) +
                        " coordinates, expected " + std::to_string(mu.size()));
  BigInt out = 1;
  for (std::size_t i = 0; i < mu.size(); ++i)
    out *= centralizer_order(mu[i], sigma[i]);
  return out;
}

// ---------------------------------------------------------------- PermTable

Partition cycle_type(const Perm &p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition::from_parts(std::move(parts));
}

Perm compose(const Perm &a, const Perm &b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[b[i]];
  return out;
}

PermTable::PermTable(int d) : d_(d) {
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms_.push_back(p);
    types_.push_back(symcone::cycle_type(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

std::shared_ptr<const PermTable> PermTable::get(int d) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const PermTable>> cache;
  std::lock_guard lock(mu);
  auto &slot = cache[d];
  if (!slot)
    slot = std::make_shared<const PermTable>(d);
  return slot;
}

std::size_t PermTable::rank(const Perm &p) const {
  // Lehmer code.
  std::size_t r = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[j] < p[i])
        ++smaller;
    r = r * (p.size() - i) + smaller;
  }
  return r;
}

std::vector<std::size_t> PermTable::members(const Partition &type) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < perms_.size(); ++i)
    if (types_[i] == type)
      out.push_back(i);
  return out;
}

// ----------------------------------------------------------------- counting

namespace {

void check_list(const ClassList &list) {
  if (list.degree < 1)
    throw ShapeMismatch("degree must be positive");
  if (list.classes.empty())
    throw ShapeMismatch("empty class list");
  for (const auto &c : list.classes)
    if (c.sum() != list.degree)
      throw ShapeMismatch(c.to_string() + " does not sum to " +
                          std::to_string(list.degree));
}

// Tuples are enumerated class by class; counts[g] holds the number of
// prefixes (a_1..a_j) with product g.
BigInt brute_force(const ClassList &list) {
  auto table = PermTable::get(list.degree);
  std::size_t n = table->size();
  std::vector<BigInt> counts(n, 0);
  counts[0] = 1; // identity is rank 0
  for (std::size_t j = 0; j + 1 < list.classes.size(); ++j) {
    auto mem = table->members(list.classes[j]);
    std::vector<BigInt> next(n, 0);
    for (std::size_t g = 0; g < n; ++g) {
      if (counts[g] == 0)
        continue;
      for (std::size_t a : mem)
        next[table->rank(compose(table->perm(g), table->perm(a)))] += counts[g];
    }
    counts = std::move(next);
  }
  const Partition &last = list.classes.back();
  BigInt total = 0;
  for (std::size_t g = 0; g < n; ++g) {
    if (counts[g] == 0)
      continue;
    // the forced last factor is g^{-1}, which has the cycle type of g
    if (table->cycle_type(g) == last)
      total += counts[g];
  }
  return total;
}

BigInt character_sum(const ClassList &list) {
  int d = list.degree;
  BigRational sum = 0;
  long m = static_cast<long>(list.classes.size());
  for (const auto &lambda : partitions_of(d)) {
    BigInt dim = character_value(lambda, Partition::ones(d));
    BigRational term = 1;
    for (const auto &c : list.classes)
      term *= BigRational(character_value(lambda, c));
    BigInt dim_pow;
    // divide by dim^(m-2); m may be 1
    if (m >= 2) {
      mpz_pow_ui(dim_pow.get_mpz_t(), dim.get_mpz_t(),
                 static_cast<unsigned long>(m - 2));
      term /= BigRational(dim_pow);
    } else {
      term *= BigRational(dim);
    }
    sum += term;
  }
  for (const auto &c : list.classes)
    sum *= BigRational(class_size(d, c));
  sum /= BigRational(factorial(static_cast<unsigned>(d)));
  sum.canonicalize();
  if (sum.get_den() != 1)
    throw Error("character sum is not integral");
  return sum.get_num();
}

using Beta = std::vector<int>; // strictly decreasing beta numbers

BigInt mn_rec(const Beta &beta, const std::vector<int> &mu, std::size_t pos,
              std::map<std::pair<Beta, std::size_t>, BigInt> &memo) {
  if (pos == mu.size())
    return 1;
  auto key = std::make_pair(beta, pos);
  if (auto it = memo.find(key); it != memo.end())
    return it->second;
  int k = mu[pos];
  std::set<int> present(beta.begin(), beta.end());
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int nb = b - k;
    if (nb < 0 || present.count(nb))
      continue;
    int between = 0;
    for (int x : beta)
      if (x > nb && x < b)
        ++between;
    Beta next = beta;
    next[i] = nb;
    std::sort(next.begin(), next.end(), std::greater<>());
    BigInt v = mn_rec(next, mu, pos + 1, memo);
    if (between % 2)
      total -= v;
    else
      total += v;
  }
  memo.emplace(key, total);
  return total;
}

} // namespace

BigInt character_value(const Partition &lambda, const Partition &mu) {
  if (lambda.sum() != mu.sum())
    throw ShapeMismatch("character arguments have different degrees");
  Beta beta;
  int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i)
    beta.push_back(lambda.parts()[static_cast<std::size_t>(i)] + (n - 1 - i));
  std::map<std::pair<Beta, std::size_t>, BigInt> memo;
  return mn_rec(beta, mu.parts(), 0, memo);
}

HurwitzResult hurwitz(const ClassList &list, HurwitzBackend backend,
                      int brute_cap) {
  check_list(list);
  switch (backend) {
  case HurwitzBackend::BruteForce:
    if (list.degree > brute_cap)
      throw CapExceeded("degree " + std::to_string(list.degree) +
                        " exceeds brute-force cap " +
                        std::to_string(brute_cap));
    return {brute_force(list), "brute"};
  case HurwitzBackend::Character:
    return {character_sum(list), "character"};
  case HurwitzBackend::Auto:
    if (list.degree <= brute_cap)
      return {brute_force(list), "brute"};
    return {character_sum(list), "character"};
  }
  throw Error("unknown backend");
}

BigInt hurwitz_count(const ClassList &list) { return hurwitz(list).count; }

} // namespace symcone
