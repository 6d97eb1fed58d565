#include "quadpre/upoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "quadpre/factor.hpp"

namespace quadpre {

using zpoly::ZPoly;

UniPoly UniPoly::normalized(ZPoly scaled, const Rational& factor, char var) {
  zpoly::trim(scaled);
  UniPoly out(var);
  if (scaled.empty() || factor.is_zero()) return out;
  Integer g = zpoly::content(scaled);
  if (scaled.back() < 0) g = -g;
  out.content_ = factor * Rational(g);
  out.prim_ = zpoly::primitive_part(scaled);
  return out;
}

UniPoly UniPoly::from_integers(const std::vector<Integer>& coeffs, char var) {
  return normalized(coeffs, Rational(1), var);
}

UniPoly UniPoly::from_rationals(const std::vector<Rational>& coeffs, char var) {
  Integer lcm = 1;
  for (const auto& c : coeffs) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  ZPoly ints(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    ints[i] = coeffs[i].numerator() * (lcm / coeffs[i].denominator());
  }
  return normalized(std::move(ints), Rational(Integer(1), lcm), var);
}

UniPoly UniPoly::constant(const Rational& value, char var) {
  return from_rationals({value}, var);
}

UniPoly UniPoly::monomial(const Rational& coeff, int exponent, char var) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  std::vector<Rational> c(static_cast<std::size_t>(exponent) + 1);
  c.back() = coeff;
  return from_rationals(c, var);
}

Rational UniPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return content_ * Rational(prim_[static_cast<std::size_t>(i)]);
}

std::vector<Rational> UniPoly::coefficients() const {
  std::vector<Rational> out;
  out.reserve(prim_.size());
  for (const auto& c : prim_) out.push_back(content_ * Rational(c));
  return out;
}

UniPoly UniPoly::renamed(char var) const {
  UniPoly out = *this;
  out.var_ = var;
  return out;
}

void UniPoly::require_same_variable(const UniPoly& o, const char* op) const {
  if (var_ != o.var_) {
    throw std::invalid_argument(std::string("variable mismatch in ") + op + ": '" + var_ + "' vs '" + o.var_ + "'");
  }
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  out.content_ = -out.content_;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  require_same_variable(o, "add");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const Integer& da = content_.denominator();
  const Integer& db = o.content_.denominator();
  ZPoly sum = zpoly::add(zpoly::scale(prim_, content_.numerator() * db),
                         zpoly::scale(o.prim_, o.content_.numerator() * da));
  return *this = normalized(std::move(sum), Rational(Integer(1), da * db), var_);
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  require_same_variable(o, "multiply");
  if (is_zero() || o.is_zero()) return *this = UniPoly(var_);
  // Gauss: the product of primitive polynomials is primitive.
  prim_ = zpoly::mul(prim_, o.prim_);
  content_ *= o.content_;
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) return *this = UniPoly(var_);
  if (is_zero()) return *this;
  content_ *= s;
  return *this;
}

UniPoly UniPoly::derivative() const {
  return normalized(zpoly::derivative(prim_), content_, var_);
}

Rational UniPoly::evaluate(const Rational& at) const {
  if (is_zero()) return Rational(0);
  // Homogeneous Horner: sum a_i u^i w^(n-i) / w^n with at = u/w.
  const Integer u = at.numerator(), w = at.denominator();
  Integer acc = 0, wpow = 1;
  for (std::size_t i = prim_.size(); i-- > 0;) {
    acc = acc * u + prim_[i] * wpow;
    wpow *= w;
  }
  // wpow = w^(n+1); acc carries one extra factor w relative to the sum above.
  return content_ * Rational(acc * w, wpow);
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc(inner.variable());
  for (int i = degree(); i >= 0; --i) {
    acc *= inner;
    acc += UniPoly::constant(coefficient(i), inner.variable());
  }
  return acc;
}

namespace {

std::string term_body(const Rational& mag, int e, char var) {
  std::string out;
  const bool unit = mag == Rational(1);
  if (e == 0) return mag.to_string();
  if (!unit) out = mag.to_string() + "*";
  out += var;
  if (e > 1) out += "^" + std::to_string(e);
  return out;
}

}  // namespace

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational c = coefficient(i);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += term_body(abs(c), i, var_);
    first = false;
  }
  return out;
}

UniPoly UniPoly::parse(std::string_view text, char fallback_var) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::map<int, Rational> terms;
  char var = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + why);
  };
  auto read_digits = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty() || pos != 0) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    Rational coef(1);
    bool have_coef = false;
    std::string num = read_digits();
    if (!num.empty()) {
      have_coef = true;
      std::string den = "1";
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = read_digits();
        if (den.empty()) fail("missing denominator");
      }
      coef = Rational::parse(num + "/" + den);
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    int exponent = 0;
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      if (var != 0 && var != s[pos]) fail("more than one variable");
      var = s[pos++];
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e = read_digits();
        if (e.empty()) fail("missing exponent");
        exponent = std::stoi(e);
      }
    } else if (!have_coef) {
      fail("empty term at offset " + std::to_string(pos));
    }
    auto [it, inserted] = terms.try_emplace(exponent, Rational(0));
    it->second += sign > 0 ? coef : -coef;
  }
  const char v = var ? var : fallback_var;
  const int deg = terms.empty() ? 0 : terms.rbegin()->first;
  std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1);
  for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e)] = c;
  return from_rationals(coeffs, v);
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (a.variable() != b.variable()) throw std::invalid_argument("variable mismatch in divmod");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(a.variable()), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const std::vector<Rational> bc = b.coefficients();
  const Rational lead_inv = Rational(1) / bc.back();
  for (int k = a.degree(); k >= db; --k) {
    const Rational t = r[static_cast<std::size_t>(k)] * lead_inv;
    q[static_cast<std::size_t>(k - db)] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly::from_rationals(q, a.variable()), UniPoly::from_rationals(r, a.variable())};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.variable() != b.variable()) throw std::invalid_argument("variable mismatch in gcd");
  return UniPoly::from_integers(zpoly::gcd(a.primitive(), b.primitive()), a.variable());
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  if (a.variable() != b.variable()) throw std::invalid_argument("variable mismatch in resultant");
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  if (a.is_zero() || b.is_zero()) return Rational(0);
  const Rational scale = pow(a.content(), static_cast<unsigned long>(b.degree())) *
                         pow(b.content(), static_cast<unsigned long>(a.degree()));
  return scale * Rational(zpoly::resultant(a.primitive(), b.primitive()));
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
  return UniPoly::from_integers(zpoly::squarefree_part(p.primitive()), p.variable());
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;

// Prime factorization by trial division; nullopt if a composite cofactor
// beyond the trial limit remains.
std::optional<std::vector<std::pair<Integer, int>>> small_factorization(Integer n) {
  n = ::abs(n);
  std::vector<std::pair<Integer, int>> out;
  for (unsigned long d = 2; d <= kTrialLimit && n > 1; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
      ++e;
    }
    if (e) out.emplace_back(Integer(d), e);
  }
  if (n > 1) {
    const Integer limit_sq = Integer(kTrialLimit) * kTrialLimit;
    if (n >= limit_sq && !is_prime(n)) return std::nullopt;
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<Integer> divisors_of(const std::vector<std::pair<Integer, int>>& f) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t n = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

bool is_root(const ZPoly& f, const Integer& num, const Integer& den) {
  Integer acc = 0, dpow = 1;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * num + f[i] * dpow;
    dpow *= den;
  }
  return acc == 0;
}

constexpr std::size_t kMaxCandidates = 4000000;

}  // namespace

std::vector<Rational> rational_roots_by_divisors(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of zero polynomial");
  const ZPoly& f = p.primitive();
  std::size_t k = 0;
  while (k < f.size() && f[k] == 0) ++k;
  std::vector<Rational> roots;
  if (k > 0) roots.emplace_back(0);
  const ZPoly g(f.begin() + static_cast<std::ptrdiff_t>(k), f.end());
  if (zpoly::degree(g) >= 1) {
    auto fa = small_factorization(g.front());
    auto fn = small_factorization(g.back());
    if (!fa || !fn) throw std::runtime_error("coefficients too large for the divisor test");
    const auto nums = divisors_of(*fa);
    const auto dens = divisors_of(*fn);
    if (nums.size() * dens.size() > kMaxCandidates) throw std::runtime_error("too many divisor candidates");
    // Cauchy bound: |root| <= 1 + max |a_i / a_n|.
    Integer max_coef = 0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      if (::abs(g[i]) > max_coef) max_coef = ::abs(g[i]);
    }
    const Integer lead = ::abs(g.back());
    std::set<Rational> found;
    for (const auto& q : dens) {
      for (const auto& a : nums) {
        if (gcd(a, q) != 1) continue;
        // a/q <= 1 + max/lead  <=>  a * lead <= (lead + max) * q
        if (a * lead > (lead + max_coef) * q) continue;
        if (is_root(g, a, q)) found.insert(Rational(a, q));
        if (is_root(g, -a, q)) found.insert(Rational(Integer(-a), q));
      }
    }
    roots.insert(roots.end(), found.begin(), found.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of zero polynomial");
  try {
    return rational_roots_by_divisors(p);
  } catch (const std::runtime_error&) {
    // fall through to the factorization route
  }
  std::vector<Rational> roots;
  for (const auto& [factor, mult] : factor_polynomial(p).factors) {
    if (factor.degree() == 1) {
      roots.push_back(-factor.coefficient(0) / factor.coefficient(1));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

NewtonPolygon newton_polygon(const UniPoly& p, const Integer& prime) {
  if (p.is_zero()) throw std::invalid_argument("Newton polygon of zero polynomial");
  if (!is_prime(prime)) throw std::invalid_argument("Newton polygon at non-prime " + prime.get_str());
  NewtonPolygon out;
  out.prime = prime;
  const ZPoly& f = p.primitive();
  std::vector<std::pair<long, long>> pts;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0) pts.emplace_back(static_cast<long>(i), integer_valuation(f[i], prime));
  }
  out.zero_roots = static_cast<int>(pts.front().first);
  // Lower hull (monotone chain); points are already sorted by abscissa.
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const long cross = (a.first - o.first) * (pt.second - o.second) - (a.second - o.second) * (pt.first - o.first);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const long len = hull[i + 1].first - hull[i].first;
    const Rational slope(Integer(hull[i + 1].second - hull[i].second), Integer(len));
    out.valuations.emplace_back(-slope, static_cast<int>(len));
  }
  std::sort(out.valuations.begin(), out.valuations.end());
  return out;
}

}  // namespace quadpre
