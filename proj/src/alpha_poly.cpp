#include <symcone/errors.hpp>
#include <symcone/exactalg.hpp>

#include <algorithm>
#include <sstream>

namespace symcone {

namespace {

std::uint16_t exp_at(const Monomial &m, std::size_t i) {
  return i < m.size() ? m[i] : 0;
}

void trim(Monomial &m) {
  while (!m.empty() && m.back() == 0)
    m.pop_back();
}

unsigned degree_of(const Monomial &m) {
  unsigned s = 0;
  for (auto e : m)
    s += e;
  return s;
}

Monomial mono_mul(const Monomial &a, const Monomial &b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint16_t>(exp_at(a, i) + exp_at(b, i));
  return out;
}

bool mono_divides(const Monomial &d, const Monomial &m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > exp_at(m, i))
      return false;
  return true;
}

Monomial mono_div(const Monomial &m, const Monomial &d) {
  Monomial out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    out[i] = static_cast<std::uint16_t>(m[i] - exp_at(d, i));
  trim(out);
  return out;
}

void add_term(AlphaPoly::Terms &t, const Monomial &m, BigRational c) {
  c.canonicalize();
  if (c == 0)
    return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      t.erase(it);
  }
}

} // namespace

bool GrlexGreater::operator()(const Monomial &lhs, const Monomial &rhs) const {
  unsigned dl = degree_of(lhs), dr = degree_of(rhs);
  if (dl != dr)
    return dl > dr;
  std::size_t n = std::max(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto a = exp_at(lhs, i), b = exp_at(rhs, i);
    if (a != b)
      return a > b;
  }
  return false;
}

AlphaPoly::AlphaPoly(const BigRational &c) {
  add_term(terms_, Monomial{}, c);
}

AlphaPoly AlphaPoly::variable(std::size_t i) {
  Monomial m(i + 1, 0);
  m[i] = 1;
  AlphaPoly p;
  p.terms_.emplace(std::move(m), BigRational(1));
  return p;
}

AlphaPoly AlphaPoly::linear(const std::vector<BigRational> &coeffs) {
  AlphaPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(i + 1, 0);
    m[i] = 1;
    add_term(p.terms_, m, coeffs[i]);
  }
  return p;
}

AlphaPoly AlphaPoly::from_terms(Terms terms) {
  AlphaPoly p;
  for (auto &[m, c] : terms) {
    Monomial mm = m;
    trim(mm);
    add_term(p.terms_, mm, c);
  }
  return p;
}

bool AlphaPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

BigRational AlphaPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? BigRational(0) : it->second;
}

int AlphaPoly::total_degree() const {
  return terms_.empty() ? -1
                        : static_cast<int>(degree_of(terms_.begin()->first));
}

std::size_t AlphaPoly::variable_count() const {
  std::size_t n = 0;
  for (const auto &[m, c] : terms_)
    n = std::max(n, m.size());
  return n;
}

const Monomial &AlphaPoly::leading_monomial() const {
  if (terms_.empty())
    throw DivByZero("leading term of zero polynomial");
  return terms_.begin()->first;
}

const BigRational &AlphaPoly::leading_coefficient() const {
  if (terms_.empty())
    throw DivByZero("leading term of zero polynomial");
  return terms_.begin()->second;
}

BigRational AlphaPoly::linear_coefficient(std::size_t i) const {
  Monomial m(i + 1, 0);
  m[i] = 1;
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

AlphaPoly AlphaPoly::monic() const {
  if (terms_.empty())
    return *this;
  BigRational inv = 1 / leading_coefficient();
  return *this * inv;
}

AlphaPoly AlphaPoly::operator-() const {
  AlphaPoly p = *this;
  for (auto &[m, c] : p.terms_)
    c = -c;
  return p;
}

AlphaPoly &AlphaPoly::operator+=(const AlphaPoly &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(terms_, m, c);
  return *this;
}

AlphaPoly &AlphaPoly::operator-=(const AlphaPoly &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(terms_, m, -c);
  return *this;
}

AlphaPoly operator*(const AlphaPoly &a, const AlphaPoly &b) {
  AlphaPoly out;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_)
      add_term(out.terms_, mono_mul(ma, mb), ca * cb);
  return out;
}

AlphaPoly &AlphaPoly::operator*=(const AlphaPoly &o) {
  *this = *this * o;
  return *this;
}

AlphaPoly &AlphaPoly::operator*=(const BigRational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, v] : terms_) {
    v *= c;
    v.canonicalize();
  }
  return *this;
}

AlphaPoly AlphaPoly::pow(unsigned e) const {
  AlphaPoly out(1), base = *this;
  while (e) {
    if (e & 1U)
      out = out * base;
    e >>= 1U;
    if (e)
      base = base * base;
  }
  return out;
}

std::optional<AlphaPoly> AlphaPoly::divide_exact(const AlphaPoly &d) const {
  if (d.is_zero())
    throw DivByZero("polynomial division by zero");
  AlphaPoly rem = *this, quo;
  const Monomial &dl = d.leading_monomial();
  const BigRational &dc = d.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial lm = rem.terms_.begin()->first;
    if (!mono_divides(dl, lm))
      return std::nullopt;
    BigRational c = rem.terms_.begin()->second / dc;
    Monomial qm = mono_div(lm, dl);
    add_term(quo.terms_, qm, c);
    for (const auto &[m, v] : d.terms_)
      add_term(rem.terms_, mono_mul(qm, m), -c * v);
  }
  return quo;
}

BigRational AlphaPoly::evaluate(const std::vector<BigRational> &alpha) const {
  BigRational out = 0;
  for (const auto &[m, c] : terms_) {
    BigRational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0)
        continue;
      if (i >= alpha.size())
        throw ShapeMismatch("evaluation point has too few coordinates");
      BigRational p;
      mpz_pow_ui(p.get_num_mpz_t(), alpha[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(p.get_den_mpz_t(), alpha[i].get_den_mpz_t(), m[i]);
      t *= p;
    }
    out += t;
  }
  return out;
}

std::string AlphaPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    BigRational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = a == 1;
    if (!unit || m.empty())
      os << a.get_str();
    bool need_star = !unit;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0)
        continue;
      os << (need_star ? "*" : "") << 'a' << i;
      if (m[i] > 1)
        os << '^' << m[i];
      need_star = true;
    }
  }
  return os.str();
}

bool operator==(const AlphaPoly &a, const AlphaPoly &b) {
  return a.terms_ == b.terms_;
}

bool operator<(const AlphaPoly &a, const AlphaPoly &b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  GrlexGreater gt;
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      return gt(ia->first, ib->first);
    if (ia->second != ib->second)
      return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

} // namespace symcone
