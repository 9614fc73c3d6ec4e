#include <symcone/errors.hpp>
#include <symcone/exactalg.hpp>

namespace symcone {

LinearForm::LinearForm(std::vector<BigRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (auto &c : coeffs_)
    c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
  if (coeffs_.empty()) {
    scale_ = 0;
    return;
  }
  BigInt l = 1;
  for (const auto &c : coeffs_)
    l = lcm(l, BigInt(c.get_den()));
  std::vector<BigInt> v;
  BigInt g = 0;
  for (const auto &c : coeffs_) {
    BigInt x = c.get_num() * (l / c.get_den());
    v.push_back(x);
    g = gcd(g, x);
  }
  std::size_t first = 0;
  while (v[first] == 0)
    ++first;
  if (v[first] < 0)
    g = -g;
  for (auto &x : v)
    x /= g;
  direction_ = std::move(v);
  scale_ = coeffs_[first] / BigRational(direction_[first]);
  scale_.canonicalize();
}

LinearForm LinearForm::from_poly(const AlphaPoly &p) {
  std::vector<BigRational> coeffs;
  for (const auto &[m, c] : p.terms()) {
    int deg = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      deg += m[i];
      if (m[i])
        var = i;
    }
    if (deg != 1)
      throw ShapeMismatch(p.to_string() + " is not a homogeneous linear form");
    if (coeffs.size() <= var)
      coeffs.resize(var + 1, BigRational(0));
    coeffs[var] = c;
  }
  return LinearForm(std::move(coeffs));
}

LinearForm LinearForm::difference(std::size_t i, std::size_t j,
                                  const BigRational &scale) {
  std::vector<BigRational> c(std::max(i, j) + 1, BigRational(0));
  c[i] += scale;
  c[j] -= scale;
  return LinearForm(std::move(c));
}

bool LinearForm::same_direction(const LinearForm &o) const {
  return direction_ == o.direction_;
}

AlphaPoly LinearForm::to_poly() const { return AlphaPoly::linear(coeffs_); }

LinearForm LinearForm::scaled(const BigRational &c) const {
  auto v = coeffs_;
  for (auto &x : v)
    x *= c;
  return LinearForm(std::move(v));
}

std::string LinearForm::to_string() const { return to_poly().to_string(); }

bool operator<(const LinearForm &a, const LinearForm &b) {
  if (a.direction_.size() != b.direction_.size())
    return a.direction_.size() < b.direction_.size();
  for (std::size_t i = 0; i < a.direction_.size(); ++i)
    if (a.direction_[i] != b.direction_[i])
      return a.direction_[i] < b.direction_[i];
  return a.scale_ < b.scale_;
}

} // namespace symcone
