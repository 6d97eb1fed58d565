#include "quadpre/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace quadpre {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.get_num() = num;
  q_.get_den() = den;
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Integer num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
  } else {
    auto ds = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || ds.empty() || ds[0] == '-' ||
        ds[0] == '+' || !parse_integer(ds, den)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned long e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), r.numerator().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), r.denominator().get_mpz_t(), e);
  return Rational(n, d);
}

double log_integer(const Integer& n) {
  if (sgn(n) <= 0) throw std::domain_error("log of nonpositive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

Integer naive_height(const Rational& r) {
  Integer n = ::abs(r.numerator());
  Integer d = r.denominator();
  return n > d ? n : d;
}

double weil_height(const Rational& r) {
  if (r.is_zero()) return 0.0;
  return log_integer(naive_height(r));
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

long integer_valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer m = n;
  return static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

ValuationResult padic_valuation(const Rational& r, const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("valuation requested at non-prime " + p.get_str());
  ValuationResult out{p, 0, false};
  if (r.is_zero()) {
    out.infinite = true;
    return out;
  }
  out.valuation = integer_valuation(r.numerator(), p) - integer_valuation(r.denominator(), p);
  return out;
}

std::optional<Integer> integer_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  auto n = integer_sqrt(r.numerator());
  if (!n) return std::nullopt;
  auto d = integer_sqrt(r.denominator());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

bool height_order_less(const Rational& a, const Rational& b) {
  const int dc = cmp(a.denominator(), b.denominator());
  if (dc != 0) return dc < 0;
  return a.numerator() < b.numerator();
}

std::size_t RationalHash::operator()(const Rational& r) const {
  const auto* num = r.raw().get_num_mpz_t();
  const auto* den = r.raw().get_den_mpz_t();
  std::size_t h = std::hash<long>{}(mpz_get_si(num)) ^ (static_cast<std::size_t>(mpz_sgn(num)) << 7);
  h = h * 1000003u ^ std::hash<long>{}(mpz_get_si(den));
  h = h * 1000003u ^ mpz_sizeinbase(num, 2);
  return h;
}

}  // namespace quadpre
