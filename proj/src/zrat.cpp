#include <symcone/errors.hpp>
#include <symcone/exactalg.hpp>

#include <algorithm>

namespace symcone {

namespace {

using Poly = ZRat::Poly;

void ptrim(Poly &p) {
  while (!p.empty() && p.back().is_zero())
    p.pop_back();
}

Poly padd(const Poly &a, const Poly &b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] += b[i];
  ptrim(out);
  return out;
}

Poly pmul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero())
        out[i + j] += a[i] * b[j];
  }
  ptrim(out);
  return out;
}

Poly pone() { return Poly{AlphaRat(1)}; }

bool ptrivial(const Poly &p) { return p.size() <= 1; }

AlphaRat peval(const Poly &p, const AlphaRat &x) {
  AlphaRat acc;
  for (std::size_t i = p.size(); i-- > 0;)
    acc = acc * x + p[i];
  return acc;
}

// (z - w) as a polynomial.
Poly plinear(const LinearForm &w) {
  return Poly{AlphaRat(-w.to_poly()), AlphaRat(1)};
}

Poly ppow_linear(const LinearForm &w, int m) {
  Poly out = pone();
  Poly f = plinear(w);
  for (int i = 0; i < m; ++i)
    out = pmul(out, f);
  return out;
}

// Quotient of p by (z - x), discarding the remainder.
Poly psynthetic(const Poly &p, const AlphaRat &x) {
  if (p.size() <= 1)
    return {};
  Poly q(p.size() - 1);
  AlphaRat carry;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = carry * x + p[i];
    q[i - 1] = carry;
  }
  ptrim(q);
  return q;
}

// Division by a monic polynomial.
std::pair<Poly, Poly> pdivmod(Poly a, const Poly &b) {
  if (b.size() > a.size())
    return {{}, a};
  int nb = static_cast<int>(b.size()) - 1;
  Poly q(a.size() - b.size() + 1);
  for (int i = static_cast<int>(a.size()) - 1; i >= nb; --i) {
    AlphaRat c = a[static_cast<std::size_t>(i)];
    if (c.is_zero())
      continue;
    auto shift = static_cast<std::size_t>(i - nb);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] -= c * b[j];
  }
  ptrim(q);
  ptrim(a);
  return {q, a};
}

Poly pmonic(const Poly &p, AlphaRat &lead) {
  lead = p.back();
  AlphaRat inv = lead.inverse();
  Poly out = p;
  for (auto &c : out)
    c *= inv;
  return out;
}

// Root of a monic linear z-polynomial as a linear form, when it is one.
std::optional<LinearForm> linear_root(const Poly &monic_linear) {
  auto root = (-monic_linear[0]).as_polynomial();
  if (!root)
    return std::nullopt;
  try {
    return LinearForm::from_poly(*root);
  } catch (const ShapeMismatch &) {
    return std::nullopt;
  }
}

} // namespace

ZRat::ZRat(const AlphaRat &c) {
  if (!c.is_zero())
    num_.push_back(c);
}

ZRat ZRat::z() {
  ZRat f;
  f.num_ = {AlphaRat(), AlphaRat(1)};
  return f;
}

ZRat ZRat::z_power(int n) {
  ZRat f;
  if (n >= 0) {
    f.num_.assign(static_cast<std::size_t>(n) + 1, AlphaRat());
    f.num_.back() = AlphaRat(1);
  } else {
    f.num_ = pone();
    f.poles_[LinearForm()] = -n;
  }
  return f;
}

ZRat ZRat::pole(const LinearForm &w, int m) {
  ZRat f;
  f.num_ = pone();
  if (m > 0)
    f.poles_[w] = m;
  else if (m < 0)
    f.num_ = ppow_linear(w, -m);
  return f;
}

ZRat ZRat::inverse_linear(const AlphaPoly &c, const BigRational &g) {
  if (g == 0)
    throw DivByZero("inverse_linear needs a nonzero z coefficient");
  ZRat f;
  BigRational ig = 1 / g;
  f.num_ = {AlphaRat(AlphaPoly(-ig))};
  AlphaPoly root = c * ig;
  try {
    f.poles_[LinearForm::from_poly(root)] = 1;
  } catch (const ShapeMismatch &) {
    f.irregular_ = {AlphaRat(-root), AlphaRat(1)};
  }
  return f;
}

ZRat ZRat::from_parts(Poly num, Poles poles, Poly irregular) {
  ZRat f;
  f.num_ = std::move(num);
  ptrim(f.num_);
  for (auto &[w, m] : poles)
    if (m > 0)
      f.poles_[w] = m;
  ptrim(irregular);
  if (!ptrivial(irregular)) {
    AlphaRat lead;
    f.irregular_ = pmonic(irregular, lead);
    for (auto &c : f.num_)
      c /= lead;
  } else if (irregular.size() == 1) {
    for (auto &c : f.num_)
      c /= irregular[0];
  }
  f.reduce();
  return f;
}

int ZRat::denominator_degree() const {
  int d = 0;
  for (const auto &[w, m] : poles_)
    d += m;
  if (has_irregular())
    d += static_cast<int>(irregular_.size()) - 1;
  return d;
}

void ZRat::reduce() {
  ptrim(num_);
  if (num_.empty()) {
    poles_.clear();
    irregular_.clear();
    return;
  }
  for (auto it = poles_.begin(); it != poles_.end();) {
    AlphaRat x(it->first.to_poly());
    while (it->second > 0 && peval(num_, x).is_zero()) {
      num_ = psynthetic(num_, x);
      --it->second;
    }
    it = it->second == 0 ? poles_.erase(it) : std::next(it);
  }
  if (has_irregular()) {
    auto [q, r] = pdivmod(num_, irregular_);
    if (r.empty()) {
      num_ = std::move(q);
      irregular_.clear();
    }
  } else {
    irregular_.clear();
  }
}

ZRat ZRat::operator-() const {
  ZRat f = *this;
  for (auto &c : f.num_)
    c = -c;
  return f;
}

ZRat &ZRat::operator+=(const ZRat &o) {
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  Poles l = poles_;
  for (const auto &[w, m] : o.poles_)
    l[w] = std::max(l[w], m);
  Poly mine = pone(), theirs = pone();
  for (const auto &[w, m] : l) {
    auto a = poles_.find(w);
    auto b = o.poles_.find(w);
    int ma = a == poles_.end() ? 0 : a->second;
    int mb = b == o.poles_.end() ? 0 : b->second;
    if (m > ma)
      mine = pmul(mine, ppow_linear(w, m - ma));
    if (m > mb)
      theirs = pmul(theirs, ppow_linear(w, m - mb));
  }
  Poly irr = irregular_;
  if (irregular_ != o.irregular_) {
    if (o.has_irregular())
      mine = pmul(mine, o.irregular_);
    if (has_irregular())
      theirs = pmul(theirs, irregular_);
    irr = pmul(has_irregular() ? irregular_ : pone(),
               o.has_irregular() ? o.irregular_ : pone());
  }
  num_ = padd(pmul(num_, mine), pmul(o.num_, theirs));
  poles_ = std::move(l);
  irregular_ = std::move(irr);
  reduce();
  return *this;
}

ZRat &ZRat::operator-=(const ZRat &o) { return *this += -o; }

ZRat &ZRat::operator*=(const ZRat &o) {
  if (is_zero() || o.is_zero()) {
    *this = ZRat();
    return *this;
  }
  num_ = pmul(num_, o.num_);
  for (const auto &[w, m] : o.poles_)
    poles_[w] += m;
  if (o.has_irregular())
    irregular_ = pmul(has_irregular() ? irregular_ : pone(), o.irregular_);
  reduce();
  return *this;
}

ZRat &ZRat::operator/=(const ZRat &o) {
  if (o.is_zero())
    throw DivByZero("division by zero z-rational function");
  // numerator of the inverse
  Poly inv_num = o.has_irregular() ? o.irregular_ : pone();
  for (const auto &[w, m] : o.poles_)
    inv_num = pmul(inv_num, ppow_linear(w, m));
  // split o's numerator into z-linear factors where possible
  AlphaRat lead;
  Poly rest = pmonic(o.num_, lead);
  Poles inv_poles;
  while (rest.size() > 1 && rest[0].is_zero()) {
    ++inv_poles[LinearForm()];
    rest.erase(rest.begin());
  }
  if (rest.size() == 2) {
    if (auto w = linear_root(rest)) {
      ++inv_poles[*w];
      rest = pone();
    }
  }
  ZRat inv;
  inv.num_ = inv_num;
  for (auto &c : inv.num_)
    c /= lead;
  inv.poles_ = std::move(inv_poles);
  if (!ptrivial(rest))
    inv.irregular_ = std::move(rest);
  inv.reduce();
  return *this *= inv;
}

BigRational ZRat::evaluate(const std::vector<BigRational> &alpha,
                           const BigRational &z) const {
  auto eval = [&](const Poly &p) {
    BigRational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
      acc = acc * z + p[i].evaluate(alpha);
    return acc;
  };
  BigRational den = 1;
  for (const auto &[w, m] : poles_) {
    BigRational v = z - w.to_poly().evaluate(alpha);
    for (int k = 0; k < m; ++k)
      den *= v;
  }
  if (has_irregular())
    den *= eval(irregular_);
  if (den == 0)
    throw DivByZero("z-denominator vanishes at the evaluation point");
  return eval(num_) / den;
}

std::size_t ZRat::variable_count() const {
  std::size_t n = 0;
  for (const auto &c : num_)
    n = std::max(n, c.variable_count());
  for (const auto &[w, m] : poles_)
    n = std::max(n, w.coefficients().size());
  for (const auto &c : irregular_)
    n = std::max(n, c.variable_count());
  return n;
}

std::string ZRat::to_string() const {
  if (num_.empty())
    return "0";
  std::string s;
  bool first = true;
  for (std::size_t i = num_.size(); i-- > 0;) {
    if (num_[i].is_zero())
      continue;
    s += first ? "" : " + ";
    first = false;
    s += "(" + num_[i].to_string() + ")";
    if (i >= 1)
      s += "*z";
    if (i > 1)
      s += "^" + std::to_string(i);
  }
  if (poles_.empty() && !has_irregular())
    return s;
  s = "(" + s + ")/(";
  first = true;
  for (const auto &[w, m] : poles_) {
    s += first ? "" : "*";
    first = false;
    s += w.is_zero() ? "z" : "(z - (" + w.to_string() + "))";
    if (m > 1)
      s += "^" + std::to_string(m);
  }
  if (has_irregular()) {
    s += first ? "" : "*";
    s += "[";
    for (std::size_t i = 0; i < irregular_.size(); ++i)
      s += (i ? ", " : "") + irregular_[i].to_string();
    s += "]";
  }
  return s + ")";
}

bool operator==(const ZRat &a, const ZRat &b) { return (a - b).is_zero(); }

// ------------------------------------------------------------------ Laurent

namespace {

// Series of p(w - u) in u up to u^K.
Poly taylor_shift(const Poly &p, const AlphaRat &w, int K) {
  Poly out(static_cast<std::size_t>(K) + 1);
  std::vector<AlphaRat> wp(p.size() + 1);
  if (!wp.empty())
    wp[0] = AlphaRat(1);
  for (std::size_t i = 1; i < wp.size(); ++i)
    wp[i] = wp[i - 1] * w;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].is_zero())
      continue;
    for (std::size_t i = 0; i <= j && i <= static_cast<std::size_t>(K); ++i) {
      AlphaRat t = p[j] * AlphaRat(BigRational(binomial(
                              static_cast<long>(j), static_cast<long>(i)))) *
                   wp[j - i];
      if (i % 2)
        out[i] -= t;
      else
        out[i] += t;
    }
  }
  return out;
}

Poly series_mul(const Poly &a, const Poly &b, int K) {
  Poly out(static_cast<std::size_t>(K) + 1);
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(K);
       ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(K);
         ++j)
      if (!b[j].is_zero())
        out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly series_inverse(const Poly &a, int K) {
  Poly out(static_cast<std::size_t>(K) + 1);
  AlphaRat inv0 = a[0].inverse();
  out[0] = inv0;
  for (int n = 1; n <= K; ++n) {
    AlphaRat acc;
    for (int i = 1; i <= n && static_cast<std::size_t>(i) < a.size(); ++i)
      acc += a[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(n - i)];
    out[static_cast<std::size_t>(n)] = -acc * inv0;
  }
  return out;
}

} // namespace

int pole_order(const ZRat &f, const LinearForm &w) {
  auto it = f.poles().find(w);
  return it == f.poles().end() ? 0 : it->second;
}

std::vector<AlphaRat> laurent_coefficients(const ZRat &f, const LinearForm &w,
                                           int kmin, int kmax) {
  std::vector<AlphaRat> out(
      static_cast<std::size_t>(std::max(0, kmax - kmin + 1)));
  if (f.is_zero() || kmax < kmin)
    return out;
  AlphaRat wv(w.to_poly());
  if (f.has_irregular() && peval(f.irregular(), wv).is_zero())
    throw DegeneratePole("irregular denominator vanishes at z = " +
                         w.to_string());
  int m0 = pole_order(f, w);
  int K = kmax + m0;
  if (K < 0)
    return out;
  Poly g = taylor_shift(f.numerator(), wv, K);
  for (const auto &[v, m] : f.poles()) {
    if (v == w)
      continue;
    // 1/(c - u)^m with c = w - v
    AlphaRat c(w.to_poly() - v.to_poly());
    AlphaRat ic = c.inverse();
    Poly s(static_cast<std::size_t>(K) + 1);
    AlphaRat icp = ic.pow(m);
    for (int j = 0; j <= K; ++j) {
      s[static_cast<std::size_t>(j)] =
          AlphaRat(BigRational(binomial(m + j - 1, j))) * icp;
      icp *= ic;
    }
    g = series_mul(g, s, K);
  }
  if (f.has_irregular()) {
    Poly irr = taylor_shift(f.irregular(), wv, K);
    if (irr[0].is_zero())
      throw DegeneratePole("irregular denominator vanishes at z = " +
                           w.to_string());
    g = series_mul(g, series_inverse(irr, K), K);
  }
  for (int k = kmin; k <= kmax; ++k) {
    int idx = k + m0;
    if (idx < 0)
      continue;
    AlphaRat v = g[static_cast<std::size_t>(idx)];
    out[static_cast<std::size_t>(k - kmin)] = (m0 % 2) ? -v : v;
  }
  return out;
}

AlphaRat laurent_at(const ZRat &f, const LinearForm &w, int k) {
  return laurent_coefficients(f, w, k, k)[0];
}

PoleSupport pole_support(const ZRat &f) {
  if (f.has_irregular())
    throw NonLinearPole("denominator factor not split into z-linear factors: " +
                        f.to_string());
  PoleSupport s;
  for (const auto &[w, m] : f.poles()) {
    if (w.is_zero())
      s.order_at_zero = m;
    else
      s.poles.emplace_back(w, m);
  }
  s.degree_at_infinity =
      f.is_zero() ? 0 : f.numerator_degree() - f.denominator_degree();
  return s;
}

} // namespace symcone
