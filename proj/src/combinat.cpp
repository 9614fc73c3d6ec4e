#include <symcone/combinat.hpp>
#include <symcone/errors.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace symcone {

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

// ---------------------------------------------------------------- Partition

Partition Partition::from_parts(std::vector<int> raw) {
  Partition p;
  for (int v : raw) {
    if (v < 1)
      throw InvalidPart("part " + std::to_string(v) + " is not positive");
    p.sum_ += v;
  }
  std::sort(raw.begin(), raw.end(), std::greater<>());
  p.parts_ = std::move(raw);
  return p;
}

Partition Partition::ones(int d) {
  return from_parts(std::vector<int>(static_cast<std::size_t>(d), 1));
}

Partition canonicalize_partition(std::vector<int> raw) {
  return Partition::from_parts(std::move(raw));
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool Partition::is_ones() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](int v) { return v == 1; });
}

bool Partition::contains(const Partition &sub) const {
  for (auto [v, m] : sub.value_counts())
    if (multiplicity(v) < m)
      return false;
  return true;
}

Partition Partition::with(const Partition &other) const {
  std::vector<int> raw = parts_;
  raw.insert(raw.end(), other.parts_.begin(), other.parts_.end());
  return from_parts(std::move(raw));
}

Partition Partition::without(const Partition &sub) const {
  std::vector<int> raw = parts_;
  for (int v : sub.parts_) {
    auto it = std::find(raw.begin(), raw.end(), v);
    if (it == raw.end())
      throw ShapeMismatch(sub.to_string() + " is not contained in " +
                          to_string());
    raw.erase(it);
  }
  return from_parts(std::move(raw));
}

std::vector<std::pair<int, int>> Partition::value_counts() const {
  std::vector<std::pair<int, int>> out;
  for (int v : parts_) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i)
    os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

// ----------------------------------------------------- OrderedZeroPartition

int OrderedZeroPartition::sum() const {
  return std::accumulate(entries.begin(), entries.end(), 0);
}

std::string OrderedZeroPartition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i)
    os << (i ? "," : "") << entries[i];
  os << ')';
  return os.str();
}

// ----------------------------------------------------------- Multipartition

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {}

Multipartition Multipartition::ones(const OrderedZeroPartition &mu) {
  std::vector<Partition> comps;
  for (int m : mu.entries)
    comps.push_back(Partition::ones(m));
  return Multipartition(std::move(comps));
}

OrderedZeroPartition Multipartition::sums() const {
  OrderedZeroPartition mu;
  for (const auto &c : components_)
    mu.entries.push_back(c.sum());
  return mu;
}

Partition Multipartition::underlying() const {
  Partition out;
  for (const auto &c : components_)
    out = out.with(c);
  return out;
}

std::vector<PartOccurrence> Multipartition::occurrences() const {
  std::vector<PartOccurrence> out;
  for (std::size_t i = 0; i < components_.size(); ++i)
    for (int v : components_[i].parts())
      out.push_back({static_cast<int>(i), v});
  return out;
}

std::size_t Multipartition::part_count() const {
  std::size_t n = 0;
  for (const auto &c : components_)
    n += c.size();
  return n;
}

bool Multipartition::is_ones() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Partition &p) { return p.is_ones(); });
}

long Multipartition::lcm_of_parts() const {
  long l = 1;
  for (const auto &c : components_)
    for (int v : c.parts())
      l = std::lcm(l, static_cast<long>(v));
  return l;
}

Multipartition Multipartition::with_component(std::size_t i,
                                              Partition p) const {
  auto comps = components_;
  comps.at(i) = std::move(p);
  return Multipartition(std::move(comps));
}

std::string Multipartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components_.size(); ++i)
    s += (i ? "," : "") + components_[i].to_string();
  return s + ")";
}

// ----------------------------------------------------------------- Labeling

long Labeling::total() const {
  return std::accumulate(labels.begin(), labels.end(), 0L);
}

// ------------------------------------------------------------------- counts

BigInt aut_order(const Partition &sigma) {
  BigInt out = 1;
  for (auto [v, m] : sigma.value_counts())
    out *= factorial(static_cast<unsigned>(m));
  return out;
}

BigInt aut_order(const Multipartition &sigma) {
  BigInt out = 1;
  for (const auto &c : sigma.components())
    out *= aut_order(c);
  return out;
}

namespace {

template <typename Key>
BigInt count_factorials(const std::vector<Key> &keys) {
  std::map<Key, unsigned> counts;
  for (const auto &k : keys)
    ++counts[k];
  BigInt out = 1;
  for (const auto &[k, m] : counts)
    out *= factorial(m);
  return out;
}

} // namespace

BigInt labeled_aut_order(const Partition &sigma, const Labeling &labels) {
  if (labels.labels.size() != sigma.size())
    throw ShapeMismatch("labeling has " +
                        std::to_string(labels.labels.size()) +
                        " entries for " + std::to_string(sigma.size()) +
                        " parts");
  std::vector<std::pair<int, int>> keys;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    keys.emplace_back(sigma.parts()[i], labels.labels[i]);
  return count_factorials(keys);
}

BigInt labeled_aut_order(const Multipartition &sigma, const Labeling &labels) {
  auto occ = sigma.occurrences();
  if (labels.labels.size() != occ.size())
    throw ShapeMismatch("labeling has " +
                        std::to_string(labels.labels.size()) +
                        " entries for " + std::to_string(occ.size()) +
                        " parts");
  std::vector<std::tuple<int, int, int>> keys;
  for (std::size_t i = 0; i < occ.size(); ++i)
    keys.emplace_back(occ[i].coordinate, occ[i].part, labels.labels[i]);
  return count_factorials(keys);
}

BigInt multiset_binomial(const Partition &whole, const Partition &sub) {
  BigInt out = 1;
  for (auto [v, m] : sub.value_counts()) {
    int have = whole.multiplicity(v);
    if (have < m)
      return 0;
    out *= binomial(have, m);
  }
  return out;
}

// -------------------------------------------------------------- enumeration

namespace {

// Compositions of `total` into `slots` entries, each >= lo. When `runs` is
// given, entries must be non-increasing inside each run (run id per slot).
void compositions(std::size_t slots, long total, int lo,
                  const std::vector<int> *runs, std::vector<int> &cur,
                  std::vector<Labeling> &out) {
  std::size_t i = cur.size();
  if (i == slots) {
    if (total == 0)
      out.push_back({cur});
    return;
  }
  long remaining_slots = static_cast<long>(slots - i - 1);
  long hi = total - remaining_slots * lo;
  if (runs && i > 0 && (*runs)[i] == (*runs)[i - 1])
    hi = std::min<long>(hi, cur.back());
  for (long v = hi; v >= lo; --v) {
    cur.push_back(static_cast<int>(v));
    compositions(slots, total - v, lo, runs, cur, out);
    cur.pop_back();
  }
}

std::vector<int> run_ids(const Multipartition &sigma) {
  auto occ = sigma.occurrences();
  std::vector<int> ids;
  int id = -1;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (i == 0 || !(occ[i] == occ[i - 1]))
      ++id;
    ids.push_back(id);
  }
  return ids;
}

} // namespace

std::vector<Labeling> enumerate_labelings(const Multipartition &sigma,
                                          long total,
                                          LabelConvention convention) {
  std::vector<Labeling> out;
  std::vector<int> cur;
  int lo = convention == LabelConvention::Pos ? 1 : 0;
  std::size_t n = sigma.part_count();
  if (total < 0)
    return out;
  compositions(n, total, lo, nullptr, cur, out);
  return out;
}

bool is_canonical_labeling(const Multipartition &sigma,
                           const Labeling &labels) {
  auto ids = run_ids(sigma);
  if (ids.size() != labels.labels.size())
    throw ShapeMismatch("labeling does not match multipartition");
  for (std::size_t i = 1; i < ids.size(); ++i)
    if (ids[i] == ids[i - 1] && labels.labels[i] > labels.labels[i - 1])
      return false;
  return true;
}

std::vector<Labeling> enumerate_canonical_labelings(const Multipartition &sigma,
                                                    long total,
                                                    LabelConvention convention) {
  std::vector<Labeling> out;
  std::vector<int> cur;
  int lo = convention == LabelConvention::Pos ? 1 : 0;
  auto ids = run_ids(sigma);
  if (total < 0)
    return out;
  compositions(ids.size(), total, lo, &ids, cur, out);
  return out;
}

std::vector<OrderedZeroPartition> zpart_enumerate(int d, int r) {
  std::vector<OrderedZeroPartition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(cur.size()) == r) {
      cur.push_back(left);
      out.push_back({cur});
      cur.pop_back();
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  if (d >= 0 && r >= 0)
    rec(d);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(Partition::from_parts(cur));
      return;
    }
    for (int v = std::min(left, maxpart); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  if (n >= 0)
    rec(n, n);
  return out;
}

std::vector<Multipartition> multipartitions_of(const OrderedZeroPartition &mu) {
  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == mu.size()) {
      out.emplace_back(cur);
      return;
    }
    for (auto &p : partitions_of(mu[i])) {
      cur.push_back(p);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Partition> sub_multisets(const Partition &whole,
                                     bool include_empty) {
  auto vc = whole.value_counts();
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vc.size()) {
      if (include_empty || !cur.empty())
        out.push_back(Partition::from_parts(cur));
      return;
    }
    for (int take = vc[i].second; take >= 0; --take) {
      for (int t = 0; t < take; ++t)
        cur.push_back(vc[i].first);
      rec(i + 1);
      cur.resize(cur.size() - static_cast<std::size_t>(take));
    }
  };
  rec(0);
  return out;
}

} // namespace symcone
