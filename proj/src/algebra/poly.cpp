#include "invcurve/algebra/poly.hpp"

#include <algorithm>
#include <sstream>

#include "invcurve/error.hpp"

namespace invcurve {

Monomial::Monomial(Symbol s, unsigned e) {
  if (e > 0) {
    powers_.emplace_back(s, e);
    degree_ = e;
  }
}

Monomial Monomial::from_powers(std::vector<Power> powers) {
  std::sort(powers.begin(), powers.end(),
            [](const Power& a, const Power& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [s, e] : powers) {
    if (e == 0) continue;
    if (!m.powers_.empty() && m.powers_.back().first == s) {
      m.powers_.back().second += e;
    } else {
      m.powers_.emplace_back(s, e);
    }
    m.degree_ += e;
  }
  return m;
}

unsigned Monomial::degree_in(Symbol s) const {
  for (const auto& [t, e] : powers_) {
    if (t == s) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.powers_.reserve(powers_.size() + other.powers_.size());
  auto i = powers_.begin();
  auto j = other.powers_.begin();
  while (i != powers_.end() || j != other.powers_.end()) {
    if (j == other.powers_.end() || (i != powers_.end() && i->first < j->first)) {
      r.powers_.push_back(*i++);
    } else if (i == powers_.end() || j->first < i->first) {
      r.powers_.push_back(*j++);
    } else {
      r.powers_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  if (other.degree_ > degree_) return std::nullopt;
  Monomial r;
  auto i = powers_.begin();
  auto j = other.powers_.begin();
  while (i != powers_.end()) {
    if (j == other.powers_.end() || i->first < j->first) {
      r.powers_.push_back(*i++);
    } else if (j->first < i->first) {
      return std::nullopt;
    } else {
      if (j->second > i->second) return std::nullopt;
      if (i->second > j->second) r.powers_.emplace_back(i->first, i->second - j->second);
      ++i;
      ++j;
    }
  }
  if (j != other.powers_.end()) return std::nullopt;
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::without(Symbol s) const {
  Monomial r;
  for (const auto& p : powers_) {
    if (p.first == s) continue;
    r.powers_.push_back(p);
    r.degree_ += p.second;
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Power> all = powers_;
  for (const auto& p : other.powers_) {
    bool found = false;
    for (auto& q : all) {
      if (q.first == p.first) {
        q.second = std::max(q.second, p.second);
        found = true;
      }
    }
    if (!found) all.push_back(p);
  }
  return from_powers(std::move(all));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<Power> common;
  for (const auto& p : powers_) {
    unsigned e = other.degree_in(p.first);
    if (e > 0) common.emplace_back(p.first, std::min(e, p.second));
  }
  return from_powers(std::move(common));
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [s, e] : powers_) {
    if (!out.empty()) out += "*";
    out += s.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pa.size() && j < pb.size()) {
    if (pa[i].first == pb[j].first) {
      if (pa[i].second != pb[j].second) return pa[i].second < pb[j].second ? -1 : 1;
      ++i;
      ++j;
    } else if (pa[i].first < pb[j].first) {
      return 1;
    } else {
      return -1;
    }
  }
  if (i < pa.size()) return 1;
  if (j < pb.size()) return -1;
  return 0;
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Poly Poly::constant(const mpq_class& c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(Monomial(), c);
  return p;
}

Poly Poly::variable(Symbol s) {
  Poly p;
  p.terms_.emplace_back(Monomial(s), mpq_class(1));
  return p;
}

Poly Poly::monomial(const Monomial& m, const mpq_class& c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_sorted_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_grlex(a.first, b.first) > 0;
  });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

mpq_class Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "polynomial is not constant");
  return terms_[0].second;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

unsigned Poly::degree_in(Symbol s) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree_in(s));
  return d;
}

std::vector<Symbol> Poly::symbols() const {
  std::vector<Symbol> out;
  for (const auto& t : terms_) {
    for (const auto& p : t.first.powers()) out.push_back(p.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Poly::contains(Symbol s) const {
  for (const auto& t : terms_) {
    if (t.first.degree_in(s) > 0) return true;
  }
  return false;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

Poly merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = compare_grlex(a[i].first, b[j].first);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, subtract ? mpq_class(-b[j].second) : b[j].second);
      ++j;
    } else {
      mpq_class s = subtract ? mpq_class(a[i].second - b[j].second)
                             : mpq_class(a[i].second + b[j].second);
      if (s != 0) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return Poly::from_sorted_terms(std::move(out));
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return merge(terms_, o.terms_, false);
}

Poly Poly::operator-(const Poly& o) const {
  if (o.is_zero()) return *this;
  return merge(terms_, o.terms_, true);
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.is_constant()) return scaled(o.terms_[0].second);
  if (is_constant()) return o.scaled(terms_[0].second);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) out.emplace_back(a.first * b.first, a.second * b.second);
  }
  return from_terms(std::move(out));
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::times_monomial(const Monomial& m, const mpq_class& c) const {
  if (c == 0) return Poly();
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(Symbol s) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.first.degree_in(s);
    if (e == 0) continue;
    std::vector<Monomial::Power> powers = t.first.powers();
    for (auto& p : powers) {
      if (p.first == s) p.second -= 1;
    }
    out.emplace_back(Monomial::from_powers(std::move(powers)), t.second * e);
  }
  return from_terms(std::move(out));
}

std::vector<Poly> Poly::coefficients_in(Symbol s) const {
  std::vector<std::vector<Term>> buckets(degree_in(s) + 1);
  for (const auto& t : terms_) {
    buckets[t.first.degree_in(s)].emplace_back(t.first.without(s), t.second);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, Symbol s) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial m(s, static_cast<unsigned>(k));
    for (const auto& t : coeffs[k].terms_) out.emplace_back(t.first * m, t.second);
  }
  return from_terms(std::move(out));
}

Poly Poly::substitute(Symbol s, const Poly& value) const {
  if (!contains(s)) return *this;
  std::vector<Poly> coeffs = coefficients_in(s);
  Poly result;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    result = result * value + coeffs[k];
  }
  return result;
}

Poly Poly::substitute(const std::map<Symbol, Poly>& values) const {
  Poly result;
  std::map<std::pair<Symbol, unsigned>, Poly> cache;
  for (const auto& t : terms_) {
    std::vector<Monomial::Power> keep;
    Poly factor = constant(t.second);
    for (const auto& p : t.first.powers()) {
      auto it = values.find(p.first);
      if (it == values.end()) {
        keep.push_back(p);
        continue;
      }
      auto key = std::make_pair(p.first, p.second);
      auto c = cache.find(key);
      if (c == cache.end()) c = cache.emplace(key, it->second.pow(p.second)).first;
      factor = factor * c->second;
    }
    result += factor.times_monomial(Monomial::from_powers(std::move(keep)), 1);
  }
  return result;
}

mpq_class Poly::evaluate(const std::map<Symbol, mpq_class>& values) const {
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.second;
    for (const auto& [s, e] : t.first.powers()) {
      auto it = values.find(s);
      if (it == values.end()) {
        throw Error(ErrorKind::UnknownVariable, "no value for symbol " + s.name());
      }
      mpq_class pw = 1;
      for (unsigned k = 0; k < e; ++k) pw *= it->second;
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  mpq_class lc = leading_coefficient();
  if (lc == 1) return *this;
  return scaled(1 / lc);
}

mpq_class Poly::coefficient_lcm_denominator() const {
  mpz_class l = 1;
  for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  return mpq_class(l);
}

Poly Poly::primitive_integer() const {
  if (is_zero()) return *this;
  Poly r = scaled(coefficient_lcm_denominator());
  mpz_class g = 0;
  for (const auto& t : r.terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
  mpq_class f(1, g);
  if (r.leading_coefficient() < 0) f = -f;
  f.canonicalize();
  return r.scaled(f);
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    mpq_class a = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += rational_to_string(a);
    } else if (a == 1) {
      out += m.to_string();
    } else {
      out += rational_to_string(a) + "*" + m.to_string();
    }
  }
  return out;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero polynomial");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a.scaled(1 / b.leading_coefficient());
  const auto& [lm, lc] = b.leading_term();
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  std::vector<Poly::Term> quotient;
  Poly r = a;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading_term();
    auto m = rm.divide(lm);
    if (!m) return std::nullopt;
    mpq_class c = rc / lc;
    quotient.emplace_back(*m, c);
    r = r - b.times_monomial(*m, c);
  }
  return Poly::from_terms(std::move(quotient));
}

namespace {

Poly coefficient_of(const Poly& p, Symbol v, unsigned d) {
  std::vector<Poly::Term> out;
  for (const auto& t : p.terms()) {
    if (t.first.degree_in(v) == d) out.emplace_back(t.first.without(v), t.second);
  }
  return Poly::from_terms(std::move(out));
}

Monomial monomial_content(const Poly& p) {
  Monomial g = p.terms().front().first;
  for (const auto& t : p.terms()) g = g.gcd(t.first);
  return g;
}

}  // namespace

Poly pseudo_remainder(const Poly& a, const Poly& b, Symbol v) {
  unsigned db = b.degree_in(v);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "pseudo-division by zero polynomial");
  if (db == 0) return Poly();
  Poly lcb = coefficient_of(b, v, db);
  Poly r = a;
  while (!r.is_zero()) {
    unsigned dr = r.degree_in(v);
    if (dr < db) break;
    Poly lr = coefficient_of(r, v, dr);
    r = r * lcb - (lr * b).times_monomial(Monomial(v, dr - db), 1);
  }
  return r;
}

Poly content_in(const Poly& a, Symbol v) {
  Poly g;
  for (const auto& c : a.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);
  if (a.size() == 1 || b.size() == 1) {
    Monomial g = a.size() == 1 ? a.leading_term().first : b.leading_term().first;
    g = g.gcd(monomial_content(a)).gcd(monomial_content(b));
    return Poly::monomial(g, 1);
  }
  if (a == b) return a.monic();
  std::vector<Symbol> sa = a.symbols();
  std::vector<Symbol> sb = b.symbols();
  std::vector<Symbol> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  if (common.empty()) return Poly::constant(1);
  // a variable present in only one argument can be eliminated through the content
  for (Symbol s : sa) {
    if (!b.contains(s)) return gcd(content_in(a, s), b);
  }
  for (Symbol s : sb) {
    if (!a.contains(s)) return gcd(a, content_in(b, s));
  }
  Symbol v = common.front();
  unsigned best = a.degree_in(v) + b.degree_in(v);
  for (Symbol s : common) {
    unsigned d = a.degree_in(s) + b.degree_in(s);
    if (d < best) {
      best = d;
      v = s;
    }
  }
  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly pa = divide_exact(a, ca)->primitive_integer();
  Poly pb = divide_exact(b, cb)->primitive_integer();
  Poly c = gcd(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  Poly g;
  while (true) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = Poly::constant(1);
      break;
    }
    pa = std::move(pb);
    pb = divide_exact(r, content_in(r, v))->primitive_integer();
  }
  g = *divide_exact(g, content_in(g, v));
  return (c * g).monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = gcd(a, b);
  return (*divide_exact(a, g) * b).monic();
}

Poly determinant(std::vector<std::vector<Poly>> m) {
  std::size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  bool negate = false;
  Poly prev = Poly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      if (pivot == n || m[i][k].size() < m[pivot][k].size()) pivot = i;
    }
    if (pivot == n) return Poly();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = *divide_exact(num, prev);
      }
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Poly resultant(const Poly& a, const Poly& b, Symbol v) {
  if (a.is_zero() || b.is_zero()) return Poly();
  unsigned da = a.degree_in(v);
  unsigned db = b.degree_in(v);
  if (da == 0) return a.pow(db);
  if (db == 0) return b.pow(da);
  std::vector<Poly> ca = a.coefficients_in(v);
  std::vector<Poly> cb = b.coefficients_in(v);
  std::size_t n = da + db;
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t k = 0; k <= da; ++k) m[i][i + k] = ca[da - k];
  }
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t k = 0; k <= db; ++k) m[db + i][i + k] = cb[db - k];
  }
  return determinant(std::move(m));
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_den_mpz_t()) == 0) return std::nullopt;
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return mpq_class(n, d);
}

}  // namespace

std::optional<Poly> sqrt_exact(const Poly& a) {
  if (a.is_zero()) return Poly();
  const auto& [m, c] = a.leading_term();
  auto rc = rational_sqrt(c);
  if (!rc) return std::nullopt;
  std::vector<Monomial::Power> half;
  for (const auto& [s, e] : m.powers()) {
    if (e % 2 != 0) return std::nullopt;
    half.emplace_back(s, e / 2);
  }
  Monomial lead = Monomial::from_powers(half);
  Poly s = Poly::monomial(lead, *rc);
  Poly twice_lead = Poly::monomial(lead, 2 * *rc);
  Monomial last = lead;
  Poly r = a - s * s;
  while (!r.is_zero()) {
    const auto& [rm, rcoef] = r.leading_term();
    auto q = rm.divide(lead);
    if (!q) return std::nullopt;
    if (compare_grlex(*q, last) >= 0) return std::nullopt;
    Poly t = Poly::monomial(*q, rcoef / (2 * *rc));
    r = r - t * (s + s + t);
    s = s + t;
    last = *q;
  }
  return s;
}

}  // namespace invcurve
