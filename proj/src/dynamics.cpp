#include "quadpre/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

#include "quadpre/errors.hpp"

namespace quadpre {

BiPoly BiPoly::x() {
  BiPoly out;
  out.rows_ = {{}, {Rational(1)}};
  return out;
}

BiPoly BiPoly::c() {
  BiPoly out;
  out.rows_ = {{Rational(0), Rational(1)}};
  return out;
}

BiPoly BiPoly::constant(const Rational& v) {
  BiPoly out;
  out.rows_ = {{v}};
  out.trim();
  return out;
}

BiPoly BiPoly::from_c_poly(const UniPoly& p) {
  BiPoly out;
  out.rows_ = {p.coefficients()};
  out.trim();
  return out;
}

int BiPoly::cdeg() const {
  int d = -1;
  for (const auto& row : rows_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Rational BiPoly::coefficient(int i, int j) const {
  if (i < 0 || i > xdeg()) return Rational(0);
  const auto& row = rows_[static_cast<std::size_t>(i)];
  if (j < 0 || j >= static_cast<int>(row.size())) return Rational(0);
  return row[static_cast<std::size_t>(j)];
}

void BiPoly::trim() {
  for (auto& row : rows_) {
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  }
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& row : out.rows_) {
    for (auto& v : row) v = -v;
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) {
    auto& row = rows_[i];
    const auto& orow = o.rows_[i];
    if (row.size() < orow.size()) row.resize(orow.size());
    for (std::size_t j = 0; j < orow.size(); ++j) row[j] += orow[j];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.rows_.assign(a.rows_.size() + b.rows_.size() - 1, {});
  const std::size_t cols = static_cast<std::size_t>(a.cdeg() + b.cdeg() + 1);
  for (auto& row : out.rows_) row.assign(cols, Rational(0));
  for (std::size_t i1 = 0; i1 < a.rows_.size(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.rows_[i1].size(); ++j1) {
      const Rational& u = a.rows_[i1][j1];
      if (u.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows_.size(); ++i2) {
        auto& dst = out.rows_[i1 + i2];
        for (std::size_t j2 = 0; j2 < b.rows_[i2].size(); ++j2) {
          const Rational& v = b.rows_[i2][j2];
          if (v.is_zero()) continue;
          dst[j1 + j2] += u * v;
        }
      }
    }
  }
  out.trim();
  return out;
}

BiPoly BiPoly::substitute_x(const BiPoly& inner) const {
  BiPoly acc;
  for (std::size_t i = rows_.size(); i-- > 0;) {
    acc = acc * inner;
    BiPoly row;
    row.rows_ = {rows_[i]};
    row.trim();
    acc += row;
  }
  return acc;
}

UniPoly BiPoly::at_x_zero() const {
  if (rows_.empty()) return UniPoly('c');
  return UniPoly::from_rationals(rows_.front(), 'c');
}

UniPoly BiPoly::at_c(const Rational& c) const {
  std::vector<Rational> coeffs(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    coeffs[i] = UniPoly::from_rationals(rows_[i], 'c').evaluate(c);
  }
  return UniPoly::from_rationals(coeffs, 'x');
}

CriticalOrbit critical_orbit_poly(int level) {
  if (level < 1) throw std::out_of_range("critical orbit level must be >= 1");
  const UniPoly c = UniPoly::indeterminate('c');
  UniPoly g = c;
  for (int j = 2; j <= level; ++j) g = g * g + c;
  return {level, g};
}

BiPoly iterate_bipoly(int level) {
  if (level < 0) throw std::out_of_range("iterate level must be >= 0");
  if (level > kMaxBivariateLevel) {
    throw std::out_of_range("iterate level " + std::to_string(level) + " exceeds cap " +
                            std::to_string(kMaxBivariateLevel));
  }
  const BiPoly c = BiPoly::c();
  BiPoly f = BiPoly::x();
  for (int n = 1; n <= level; ++n) f = f * f + c;
  return f;
}

UniPoly specialized_iterate(int k, const Rational& c, const Rational& t) {
  if (k < 0) throw std::out_of_range("iterate level must be >= 0");
  const UniPoly cc = UniPoly::constant(c, 'x');
  UniPoly f = UniPoly::indeterminate('x');
  for (int n = 1; n <= k; ++n) f = f * f + cc;
  return f - UniPoly::constant(t, 'x');
}

std::string identity_name(Identity which) {
  switch (which) {
    case Identity::FixedPoint:
      return "fixed-point";
    case Identity::TwoCycle:
      return "two-cycle";
    case Identity::KFamily:
      return "k-family";
  }
  return "unknown";
}

namespace {

// f_c(w) for polynomial arguments in one parameter.
UniPoly apply_map(const UniPoly& w, const UniPoly& c) { return w * w + c; }

UniPoly P(const char* text, char var) { return UniPoly::parse(text, var); }

}  // namespace

IdentityRecord verify_identity(Identity which) {
  IdentityRecord rec{which, {}, {}, false};
  switch (which) {
    case Identity::FixedPoint: {
      const UniPoly a = UniPoly::indeterminate('a');
      const UniPoly c = P("a - a^2", 'a');
      const UniPoly image = apply_map(a, c);
      rec.witness_degrees.push_back((a * a).degree());
      rec.residuals.push_back(image - a);
      break;
    }
    case Identity::TwoCycle: {
      const UniPoly a = UniPoly::indeterminate('a');
      const UniPoly c = P("-a^2 - a - 1", 'a');
      const UniPoly partner = P("-a - 1", 'a');
      rec.witness_degrees.push_back((a * a).degree());
      rec.witness_degrees.push_back((partner * partner).degree());
      rec.residuals.push_back(apply_map(a, c) - partner);
      rec.residuals.push_back(apply_map(partner, c) - a);
      break;
    }
    case Identity::KFamily: {
      const UniPoly k = UniPoly::indeterminate('k');
      const UniPoly c = P("-k^2 - k + 1", 'k');
      const UniPoly once = apply_map(k, c);
      const UniPoly twice = apply_map(once, c);
      rec.witness_degrees.push_back((k * k).degree());
      rec.witness_degrees.push_back((once * once).degree());
      rec.residuals.push_back(twice - P("-3*k + 2", 'k'));
      break;
    }
  }
  rec.holds = std::all_of(rec.residuals.begin(), rec.residuals.end(), [](const UniPoly& r) { return r.is_zero(); });
  return rec;
}

QuarterSplitting quarter_splitting(int level) {
  if (level < 2 || level > kMaxBivariateLevel) {
    throw std::out_of_range("quarter splitting level must lie in [2, " + std::to_string(kMaxBivariateLevel) + "]");
  }
  const BiPoly h = iterate_bipoly(level - 2);
  const BiPoly base = h * h + BiPoly::c() + BiPoly::constant(Rational(Integer(1), Integer(2)));
  QuarterSplitting out{level, base + h, base - h};
  const BiPoly target = iterate_bipoly(level) + BiPoly::constant(Rational(Integer(1), Integer(4)));
  if (!(out.plus * out.minus == target)) {
    throw MathError("quarter splitting identity fails at level " + std::to_string(level));
  }
  return out;
}

}  // namespace quadpre
