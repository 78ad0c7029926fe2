#include "invcurve/algebra/roots.hpp"

#include <algorithm>

#include "invcurve/error.hpp"

namespace invcurve {

namespace {

using UPoly = std::vector<mpq_class>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpq_class eval(const UPoly& p, const mpq_class& x) {
  mpq_class v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  trim(d);
  return d;
}

// quotient and remainder
std::pair<UPoly, UPoly> divrem(UPoly a, const UPoly& b) {
  trim(a);
  std::size_t n = a.size();
  std::size_t m = b.size();
  if (n < m) return {UPoly{}, a};
  UPoly q(n - m + 1);
  for (std::size_t i = n - m + 1; i-- > 0;) {
    mpq_class c = a[i + m - 1] / b.back();
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < m; ++j) a[i + j] -= c * b[j];
  }
  a.resize(m - 1);
  trim(a);
  trim(q);
  return {q, a};
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

int sign(const mpq_class& v) { return sgn(v); }

int variations(const std::vector<UPoly>& chain, const mpq_class& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

mpq_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return mpq_class(f);
}

}  // namespace

mpq_class simplest_rational(const mpq_class& lo, const mpq_class& hi) {
  if (lo > hi) throw Error(ErrorKind::InvalidArgument, "empty interval");
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_rational(-hi, -lo);
  mpq_class fl = floor_q(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  mpq_class inner = simplest_rational(1 / (hi - fl), 1 / (lo - fl));
  return fl + 1 / inner;
}

std::vector<mpq_class> rational_roots_q(UPoly coeffs) {
  trim(coeffs);
  if (coeffs.empty()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<mpq_class> roots;
  if (coeffs.size() == 1) return roots;
  std::size_t shift = 0;
  while (coeffs[shift] == 0) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(shift));
  }
  if (coeffs.size() == 1) return roots;
  UPoly g = divrem(coeffs, gcd(coeffs, derivative(coeffs))).first;
  mpz_class l = 1;
  for (const auto& c : g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (auto& c : g) c *= l;
  if (g.size() == 2) {
    roots.push_back(-g[0] / g[1]);
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  mpq_class a = abs(g.back());
  mpq_class bound = 0;
  for (std::size_t k = 0; k + 1 < g.size(); ++k) bound = std::max(bound, mpq_class(abs(g[k]) / a));
  bound += 1;
  mpq_class width = 1 / (2 * a * a);
  std::vector<UPoly> chain{g, derivative(g)};
  while (true) {
    UPoly r = divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  struct Interval {
    mpq_class lo, hi;
    int vlo, vhi;
  };
  std::vector<Interval> stack{{-bound, bound, variations(chain, -bound), variations(chain, bound)}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    int count = iv.vlo - iv.vhi;
    if (count == 0) continue;
    if (eval(g, iv.hi) == 0) roots.push_back(iv.hi);
    if (count == 1 && iv.hi - iv.lo < width) {
      mpq_class s = simplest_rational(iv.lo, iv.hi);
      if (eval(g, s) == 0) roots.push_back(s);
      continue;
    }
    mpq_class mid = (iv.lo + iv.hi) / 2;
    int vmid = variations(chain, mid);
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

// divides sum coeffs[k] t^k by (t - r); returns quotient when the remainder vanishes
std::optional<std::vector<Scalar>> deflate(const std::vector<Scalar>& coeffs, const Scalar& r) {
  std::size_t n = coeffs.size();
  std::vector<Scalar> q(n - 1);
  Scalar carry;
  for (std::size_t k = n; k-- > 1;) {
    carry = coeffs[k] + carry * r;
    q[k - 1] = carry;
  }
  Scalar rem = coeffs[0] + carry * r;
  if (!rem.is_zero()) return std::nullopt;
  return q;
}

void add_root(RootExtraction& out, std::vector<Scalar>& remaining, const Scalar& r) {
  if (std::find(out.roots.begin(), out.roots.end(), r) != out.roots.end()) return;
  unsigned mult = 0;
  while (remaining.size() > 1) {
    auto q = deflate(remaining, r);
    if (!q) break;
    remaining = std::move(*q);
    ++mult;
  }
  if (mult == 0) return;
  out.roots.push_back(r);
  out.multiplicities.push_back(mult);
}

}  // namespace

RootExtraction rational_roots(const std::vector<Scalar>& input) {
  std::vector<Scalar> coeffs = input;
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  RootExtraction out;
  std::vector<Scalar> remaining = coeffs;
  bool rational = std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return c.is_rational(); });
  if (rational) {
    UPoly q;
    for (const auto& c : coeffs) q.push_back(c.to_rational());
    for (const auto& r : rational_roots_q(q)) add_root(out, remaining, Scalar(r));
    out.residual_degree = static_cast<unsigned>(remaining.size() - 1);
    return out;
  }
  Symbol t("@t");
  std::vector<Poly> cs;
  Poly l = Poly::constant(1);
  for (const auto& c : coeffs) l = lcm(l, c.denominator());
  for (const auto& c : coeffs) cs.push_back(c.numerator() * *divide_exact(l, c.denominator()));
  Poly f = Poly::from_coefficients(cs, t);
  f = *divide_exact(f, content_in(f, t));
  if (coeffs[0].is_zero()) add_root(out, remaining, Scalar());
  std::vector<Poly> fc = f.coefficients_in(t);
  std::size_t shift = 0;
  while (fc[shift].is_zero()) ++shift;
  fc.erase(fc.begin(), fc.begin() + static_cast<long>(shift));
  f = Poly::from_coefficients(fc, t);
  Poly sqf = f;
  if (f.degree_in(t) > 1) {
    Poly g = gcd(f, f.derivative(t));
    if (g.degree_in(t) > 0) sqf = *divide_exact(f, g);
  }
  std::vector<Poly> sc = sqf.coefficients_in(t);
  unsigned d = sqf.degree_in(t);
  if (d == 1) {
    add_root(out, remaining, -Scalar::fraction(sc[0], sc[1]));
  } else if (d == 2) {
    Scalar a = Scalar(sc[2]);
    Scalar b = Scalar(sc[1]);
    Scalar c = Scalar(sc[0]);
    Scalar disc = b * b - Scalar(4) * a * c;
    if (auto s = sqrt_exact(disc)) {
      add_root(out, remaining, (-b + *s) / (Scalar(2) * a));
      add_root(out, remaining, (-b - *s) / (Scalar(2) * a));
    }
  } else if (d >= 3) {
    out.certified = false;
  }
  out.residual_degree = static_cast<unsigned>(remaining.size() - 1);
  return out;
}

RootExtraction rational_roots(const MultiPoly& f, const std::string& var) {
  for (const auto& v : f.used_variables()) {
    if (v != var) throw Error(ErrorKind::InvalidArgument, "polynomial is not univariate in " + var);
  }
  std::vector<Scalar> coeffs(f.degree_in(var) + 1);
  int i = f.index_of(var);
  for (const auto& [e, c] : f.terms()) coeffs[i < 0 ? 0 : e[i]] = c;
  return rational_roots(coeffs);
}

}  // namespace invcurve
