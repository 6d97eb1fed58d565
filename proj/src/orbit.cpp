#include "quadpre/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "quadpre/dynamics.hpp"
#include "quadpre/errors.hpp"
#include "quadpre/factor.hpp"

namespace quadpre {

namespace {

bool member_less(const PreimageMember& x, const PreimageMember& y) {
  if (x.level != y.level) return x.level < y.level;
  return height_order_less(x.value, y.value);
}

// Rational solutions of x^2 = t - c, negative root first.
std::vector<Rational> square_roots(const Rational& t, const Rational& c) {
  const auto r = rational_sqrt(t - c);
  if (!r) return {};
  if (r->is_zero()) return {*r};
  return {-*r, *r};
}

}  // namespace

PreimageSet rational_preimages(const Rational& a, const Rational& c) {
  PreimageSet out{a, c, {}, {}};
  const double bound = weil_height(a) + 2 * (weil_height(c) + std::numbers::ln2) + 1e-12;
  std::unordered_set<Rational, RationalHash> seen{a};
  bool a_found = false;
  std::vector<Rational> frontier{a};
  for (int level = 0; !frontier.empty(); ++level) {
    PreimageStep step{level, static_cast<int>(frontier.size()), 0};
    std::vector<Rational> next;
    for (const auto& t : frontier) {
      for (auto& x : square_roots(t, c)) {
        if (weil_height(x) > bound) throw MathError("pre-image " + x.to_string() + " exceeds the height bound");
        if (x == a && !a_found) {
          a_found = true;
          out.members.push_back({x, level + 1});
          ++step.discovered;
        }
        if (seen.insert(x).second) {
          out.members.push_back({x, level + 1});
          ++step.discovered;
          next.push_back(std::move(x));
        }
      }
    }
    out.trace.push_back(step);
    frontier = std::move(next);
  }
  std::sort(out.members.begin(), out.members.end(), member_less);
  return out;
}

PreimageSet brute_force_preimages(const Rational& a, const Rational& c, long height, int max_level) {
  if (height < 1 || max_level < 1) throw std::invalid_argument("oracle bounds must be positive");
  PreimageSet out{a, c, {}, {}};
  for (long q = 1; q <= height; ++q) {
    for (long p = -height; p <= height; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational x{Integer(p), Integer(q)};
      Rational w = x;
      for (int m = 1; m <= max_level; ++m) {
        w = w * w + c;
        if (w == a) {
          out.members.push_back({x, m});
          break;
        }
      }
    }
  }
  std::sort(out.members.begin(), out.members.end(), member_less);
  return out;
}

std::vector<CurvePoint> curve_point_search(int level, const Rational& a, long height, unsigned threads) {
  if (level < 1 || level > 8) throw std::out_of_range("search level must lie in [1, 8]");
  if (height < 1) throw std::out_of_range("search height must be positive");

  std::vector<Rational> grid;
  for (long q = 1; q <= height; ++q) {
    for (long p = -height; p <= height; ++p) {
      if (std::gcd(p, q) == 1) grid.emplace_back(Integer(p), Integer(q));
    }
  }

  auto solve = [&](std::size_t lo, std::size_t hi) {
    std::vector<CurvePoint> found;
    for (std::size_t i = lo; i < hi; ++i) {
      const Rational& c = grid[i];
      std::vector<Rational> layer{a};
      for (int k = 0; k < level && !layer.empty(); ++k) {
        std::vector<Rational> next;
        for (const auto& t : layer) {
          for (auto& x : square_roots(t, c)) next.push_back(std::move(x));
        }
        std::sort(next.begin(), next.end(), height_order_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        layer = std::move(next);
      }
      for (auto& x : layer) found.push_back({std::move(x), c, level, a});
    }
    return found;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, grid.size())));
  std::vector<std::future<std::vector<CurvePoint>>> parts;
  const std::size_t block = (grid.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(grid.size(), t * block);
    const std::size_t hi = std::min(grid.size(), lo + block);
    parts.push_back(std::async(std::launch::async, solve, lo, hi));
  }
  std::vector<CurvePoint> out;
  for (auto& part : parts) {
    auto chunk = part.get();
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  }
  return out;
}

std::vector<int> preimage_degree_profile(const Rational& t, const Rational& c, int k) {
  if (k < 1 || k > 8) throw std::out_of_range("profile level must lie in [1, 8]");
  return factor_polynomial(specialized_iterate(k, c, t)).degree_profile();
}

}  // namespace quadpre
