#include <symcone/errors.hpp>
#include <symcone/exactalg.hpp>

namespace symcone {

namespace {

// Fixed generic values used to rule out linear-factor divisibility cheaply.
BigRational probe_value(std::size_t i) {
  static const long num[] = {3, -7, 11, 2, -13, 17, 5, -19, 23, 29};
  static const long den[] = {5, 3, 7, 9, 4, 11, 13, 6, 17, 8};
  return BigRational(num[i % 10] + static_cast<long>(i / 10) * 31,
                     den[i % 10]);
}

// True when `num` certainly does not vanish on the hyperplane f = 0 of a
// monic linear f. Non-vanishing at one point of the hyperplane is a proof.
bool certainly_not_divisible(const AlphaPoly &num, const AlphaPoly &f) {
  if (f.total_degree() != 1 || f.constant_term() != 0)
    return false;
  std::size_t lead = f.leading_monomial().size() - 1;
  std::size_t n = std::max(num.variable_count(), f.variable_count());
  std::vector<BigRational> pt(n);
  BigRational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == lead)
      continue;
    pt[i] = probe_value(i);
    s += f.linear_coefficient(i) * pt[i];
  }
  pt[lead] = -s;
  return num.evaluate(pt) != 0;
}

AlphaPoly product(const AlphaRat::Factors &f) {
  AlphaPoly out(1);
  for (const auto &[p, m] : f)
    out = out * p.pow(static_cast<unsigned>(m));
  return out;
}

bool all_linear(const AlphaRat::Factors &f) {
  for (const auto &[p, m] : f)
    if (p.total_degree() != 1)
      return false;
  return true;
}

} // namespace

AlphaRat::AlphaRat(const AlphaPoly &num) : num_(num) {}

AlphaRat::AlphaRat(const AlphaPoly &num, const Factors &den) : num_(num) {
  for (const auto &[p, m] : den) {
    if (m == 0)
      continue;
    if (m < 0)
      throw ShapeMismatch("negative denominator multiplicity");
    if (p.is_zero())
      throw DivByZero("zero denominator factor");
    BigRational lc = p.leading_coefficient();
    BigRational scale = 1;
    for (int k = 0; k < m; ++k)
      scale /= lc;
    num_ *= scale;
    if (!p.is_constant())
      den_[p.monic()] += m;
  }
  if (num_.is_zero())
    den_.clear();
  else
    cancel_against(den_);
}

void AlphaRat::cancel_against(const Factors &candidates) {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (const auto &[f, unused] : candidates) {
    auto it = den_.find(f);
    if (it == den_.end())
      continue;
    while (it->second > 0) {
      if (certainly_not_divisible(num_, f))
        break;
      auto q = num_.divide_exact(f);
      if (!q)
        break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0)
      den_.erase(it);
  }
}

AlphaPoly AlphaRat::denominator() const { return product(den_); }

std::optional<AlphaPoly> AlphaRat::as_polynomial() const {
  if (!den_.empty())
    return std::nullopt;
  return num_;
}

AlphaRat AlphaRat::operator-() const {
  AlphaRat r = *this;
  r.num_ = -r.num_;
  return r;
}

AlphaRat &AlphaRat::operator+=(const AlphaRat &o) {
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero())
      den_.clear();
    else
      cancel_against(Factors(den_));
    return *this;
  }
  Factors l = den_;
  for (const auto &[p, m] : o.den_)
    l[p] = std::max(l[p], m);
  Factors mine, theirs;
  for (const auto &[p, m] : l) {
    auto a = den_.find(p);
    auto b = o.den_.find(p);
    int ma = a == den_.end() ? 0 : a->second;
    int mb = b == o.den_.end() ? 0 : b->second;
    if (m > ma)
      mine[p] = m - ma;
    if (m > mb)
      theirs[p] = m - mb;
  }
  num_ = num_ * product(mine) + o.num_ * product(theirs);
  den_ = std::move(l);
  cancel_against(Factors(den_));
  return *this;
}

AlphaRat &AlphaRat::operator-=(const AlphaRat &o) { return *this += -o; }

AlphaRat &AlphaRat::operator*=(const AlphaRat &o) {
  if (is_zero() || o.is_zero()) {
    num_ = AlphaPoly();
    den_.clear();
    return *this;
  }
  num_ = num_ * o.num_;
  for (const auto &[p, m] : o.den_)
    den_[p] += m;
  cancel_against(Factors(den_));
  return *this;
}

AlphaRat AlphaRat::inverse() const {
  if (is_zero())
    throw DivByZero("inverse of zero");
  Factors f;
  if (!num_.is_constant())
    f[num_] = 1;
  AlphaRat r(product(den_), f);
  if (num_.is_constant())
    r.num_ *= 1 / num_.constant_term();
  return r;
}

AlphaRat &AlphaRat::operator/=(const AlphaRat &o) {
  if (o.is_zero())
    throw DivByZero("division by zero rational function");
  return *this *= o.inverse();
}

AlphaRat AlphaRat::pow(int e) const {
  if (e < 0)
    return inverse().pow(-e);
  AlphaRat r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  for (const auto &[p, m] : den_)
    r.den_[p] = m * e;
  if (e == 0)
    r.den_.clear();
  return r;
}

BigRational AlphaRat::evaluate(const std::vector<BigRational> &alpha) const {
  BigRational den = 1;
  for (const auto &[p, m] : den_) {
    BigRational v = p.evaluate(alpha);
    if (v == 0)
      throw DivByZero("denominator factor " + p.to_string() +
                      " vanishes at the evaluation point");
    for (int k = 0; k < m; ++k)
      den *= v;
  }
  return num_.evaluate(alpha) / den;
}

std::size_t AlphaRat::variable_count() const {
  std::size_t n = num_.variable_count();
  for (const auto &[p, m] : den_)
    n = std::max(n, p.variable_count());
  return n;
}

std::string AlphaRat::to_string() const {
  if (den_.empty())
    return num_.to_string();
  std::string s = "(" + num_.to_string() + ")/(";
  bool first = true;
  for (const auto &[p, m] : den_) {
    s += (first ? "" : "*") + ("(" + p.to_string() + ")");
    if (m > 1)
      s += "^" + std::to_string(m);
    first = false;
  }
  return s + ")";
}

bool operator==(const AlphaRat &a, const AlphaRat &b) {
  if (all_linear(a.den_) && all_linear(b.den_))
    return a.den_ == b.den_ && a.num_ == b.num_;
  return a.num_ * product(b.den_) == b.num_ * product(a.den_);
}

} // namespace symcone
