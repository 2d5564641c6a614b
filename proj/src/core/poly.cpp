#include "core/poly.hpp"

#include <algorithm>
#include <set>

namespace veron {

QPoly QPoly::from_coeffs(std::vector<Rat> coeffs) {
  QPoly p;
  p.c = std::move(coeffs);
  while (!p.c.empty() && p.c.back().is_zero()) p.c.pop_back();
  return p;
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return QPoly::from_coeffs(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return QPoly::from_coeffs(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly{};
  std::vector<Rat> r(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return QPoly::from_coeffs(std::move(r));
}

QPoly QPoly::deflate(const Rat& r) const {
  require(deg() >= 1, Err::Internal, "deflating a constant");
  std::vector<Rat> q(c.size() - 1);
  Rat carry = c.back();
  for (size_t i = c.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = c[i] + r * carry;
  }
  require(carry.is_zero(), Err::Internal, "deflation by a non-root");
  return QPoly::from_coeffs(std::move(q));
}

QPoly poly_divmod(const QPoly& a, const QPoly& b, QPoly* rem) {
  require(!b.is_zero(), Err::BadArgument, "polynomial division by zero");
  std::vector<Rat> r = a.c;
  std::vector<Rat> q(a.deg() >= b.deg() ? size_t(a.deg() - b.deg()) + 1 : 0);
  Rat lead = b.c.back();
  for (long i = long(r.size()) - 1; i >= b.deg(); --i) {
    if (r[size_t(i)].is_zero()) continue;
    Rat f = r[size_t(i)] / lead;
    q[size_t(i - b.deg())] = f;
    for (int j = 0; j <= b.deg(); ++j) r[size_t(i - b.deg() + j)] -= f * b.c[size_t(j)];
  }
  if (rem) *rem = QPoly::from_coeffs(std::move(r));
  return QPoly::from_coeffs(std::move(q));
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r;
    poly_divmod(a, b, &r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rat lead = a.c.back();
    for (auto& x : a.c) x = x / lead;
  }
  return a;
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    Rat a = c[i];
    if (out.empty()) {
      if (a.sign() < 0) out += "-", a = -a;
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    bool unit = a == Rat(1);
    if (i == 0) {
      out += a.str();
    } else {
      if (!unit) out += a.str() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

QPoly charpoly(const QMatrix& a) {
  require(a.is_square(), Err::BadArgument, "characteristic polynomial of non-square matrix");
  int n = a.rows();
  std::vector<Rat> c(size_t(n) + 1);
  c[size_t(n)] = 1;
  QMatrix b = QMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    QMatrix prod = a * b;
    Rat ck = -(prod.trace() / Rat(k));
    c[size_t(n - k)] = ck;
    b = prod;
    for (int i = 0; i < n; ++i) b.at(i, i) += ck;
  }
  require(b.is_zero(), Err::Internal, "Faddeev-LeVerrier closure failed");
  return QPoly::from_coeffs(std::move(c));
}

namespace {

// Budgeted trial division. nullopt when the budget runs out before the
// factorization is certified complete.
std::optional<std::vector<std::pair<mpz_class, int>>> factorize(mpz_class m, long budget) {
  std::vector<std::pair<mpz_class, int>> f;
  if (m < 0) m = -m;
  require(m != 0, Err::Internal, "factorizing zero");
  auto strip = [&](const mpz_class& d) {
    int e = 0;
    while (m % d == 0) m /= d, ++e;
    if (e) f.emplace_back(d, e);
  };
  strip(2);
  strip(3);
  mpz_class d = 5;
  long steps = 0;
  while (d * d <= m) {
    if (++steps > budget) return std::nullopt;
    strip(d);
    strip(d + 2);
    d += 6;
  }
  if (m > 1) f.emplace_back(m, 1);
  return f;
}

std::optional<std::vector<mpz_class>> divisors(const mpz_class& m, long budget, size_t cap) {
  auto f = factorize(m, budget);
  if (!f) return std::nullopt;
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : *f) {
    size_t base = divs.size();
    if (base * size_t(e + 1) > cap) return std::nullopt;
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

RootList rational_roots(const QPoly& p) {
  require(!p.is_zero(), Err::BadArgument, "rational_roots of the zero polynomial");
  RootList out;
  if (p.deg() == 0) {
    out.remainder = p;
    return out;
  }

  // Clear denominators to a primitive integer polynomial.
  mpz_class lcm = 1;
  for (const auto& x : p.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> a(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) a[i] = p.c[i].num() * (lcm / p.c[i].den());
  mpz_class content = 0;
  for (const auto& x : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  for (auto& x : a) x /= content;

  QPoly work = p;
  size_t zero_mult = 0;
  while (zero_mult < a.size() && a[zero_mult] == 0) ++zero_mult;
  for (size_t i = 0; i < zero_mult; ++i) work = work.deflate(Rat(0));
  if (zero_mult) out.roots.emplace_back(Rat(0), int(zero_mult));
  if (work.deg() == 0) {
    out.remainder = work;
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& l, const auto& r) { return l.first > r.first; });
    return out;
  }

  // Any rational root u/v (lowest terms) has u | a_first, v | a_last.
  const long kBudget = 1 << 20;
  const size_t kCap = 1 << 14;
  auto us = divisors(a[zero_mult], kBudget, kCap);
  auto vs = divisors(a.back(), kBudget, kCap);
  if (!us || !vs)
    raise(Err::SpectrumSearchOverflow,
          "cannot certify the rational-root candidate set (coefficient factorization too large)");

  std::set<Rat> candidates;
  for (const auto& u : *us)
    for (const auto& v : *vs) {
      candidates.insert(Rat(mpq_class(u, v)));
      candidates.insert(Rat(mpq_class(-u, v)));
    }
  for (const Rat& r : candidates) {
    while (work.deg() >= 1 && work.eval(r).is_zero()) {
      work = work.deflate(r);
      auto it = std::find_if(out.roots.begin(), out.roots.end(),
                             [&](const auto& pr) { return pr.first == r; });
      if (it == out.roots.end())
        out.roots.emplace_back(r, 1);
      else
        ++it->second;
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& l, const auto& r) { return l.first > r.first; });
  out.remainder = work;
  return out;
}

}  // namespace veron
