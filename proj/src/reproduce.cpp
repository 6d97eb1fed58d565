#include "quadpre/reproduce.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "quadpre/dynamics.hpp"
#include "quadpre/geometry.hpp"
#include "quadpre/heights.hpp"
#include "quadpre/orbit.hpp"
#include "quadpre/strata.hpp"

namespace quadpre {

namespace {

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

// Runs one check; exceptions count as failures with the message as detail.
void run(std::vector<Claim>& out, const std::string& anchor, const std::function<bool(std::string&)>& check) {
  Claim claim{anchor, "", false};
  try {
    claim.passed = check(claim.detail);
  } catch (const std::exception& e) {
    claim.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(claim));
}

}  // namespace

std::vector<Claim> reproduce_battery() {
  std::vector<Claim> out;
  const Rational quarter(Integer(-1), Integer(4));

  run(out, "A_2 = {-1/4}", [&](std::string& d) {
    const auto s = exceptional_set(2);
    d = "roots=" + (s.rational_roots.empty() ? std::string("none") : s.rational_roots[0].to_string()) +
        " count=" + std::to_string(s.count);
    return s.count == 1 && s.rational_roots.size() == 1 && s.rational_roots[0] == quarter;
  });
  run(out, "Also #A_3=3 and #A_4=7", [&](std::string& d) {
    const int a3 = exceptional_set(3).count, a4 = exceptional_set(4).count;
    d = "#A_3=" + std::to_string(a3) + " #A_4=" + std::to_string(a4);
    return a3 == 3 && a4 == 7;
  });
  run(out, "has degree 2^{j-1} - 1", [&](std::string& d) {
    bool ok = true;
    std::vector<int> degs;
    for (int j = 2; j <= 6; ++j) {
      degs.push_back(critical_value_poly(j).degree());
      ok = ok && degs.back() == (1 << (j - 1)) - 1;
    }
    d = "deg V_2..V_6=" + join(degs);
    return ok;
  });
  run(out, "conjugate over Q", [&](std::string& d) {
    bool ok = true;
    std::vector<int> counts;
    for (int n = 2; n <= 6; ++n) {
      const auto s = exceptional_set(n);
      counts.push_back(s.count);
      ok = ok && s.irreducible && s.squarefree && s.disjoint;
    }
    d = "W_2..W_6 irreducible, #A=" + join(counts);
    return ok;
  });
  run(out, "smooth for all but at most 2^N-N-1 values; equality for N <= 6", [&](std::string& d) {
    bool ok = true;
    std::vector<int> counts;
    for (int n = 2; n <= 6; ++n) {
      const auto s = cumulative_singular_count(n);
      counts.push_back(s.count);
      ok = ok && s.equal;
    }
    d = "counts N=2..6: " + join(counts);
    return ok;
  });
  run(out, "nonsingular for any a in K minus {-1/4}", [&](std::string& d) {
    const auto v = is_nonsingular(2, quarter);
    d = "P(2,-1/4) singular at level " + std::to_string(v.failing_level);
    return !v.nonsingular && v.failing_level == 2 && is_nonsingular(1, quarter).nonsingular;
  });
  run(out, "integral with respect to some prime", [&](std::string& d) {
    const auto audit = two_adic_audit(6);
    d = "2-adic root valuations of V_2..V_6 all negative: " + std::string(audit.passed ? "yes" : "no");
    return audit.passed;
  });
  run(out, "for precisely 2^{N-1} values", [&](std::string& d) {
    const auto g = genus_via_rh(6, Rational(0));
    d = "r_2..r_6 at a=0: " + join(g.ramification);
    return g.agree;
  });
  run(out, "genus (N-3)2^{N-2} + 1", [&](std::string& d) {
    std::vector<long long> gs;
    bool ok = true;
    for (const Rational& a : {Rational(0), Rational(1), Rational(-2), Rational(Integer(1), Integer(3))}) {
      for (int n = 2; n <= 6; ++n) {
        const auto g = genus_via_rh(n, a);
        ok = ok && g.agree;
        if (a == Rational(0)) gs.push_back(g.genus_recursion);
      }
    }
    d = "g(2..6)=" + join(gs);
    return ok;
  });
  run(out, "g(3) = 1, g(4) = 5", [&](std::string& d) {
    const long long g3 = genus_via_rh(3, Rational(0)).genus_recursion, g4 = genus_via_rh(4, Rational(0)).genus_recursion;
    d = "g(3)=" + std::to_string(g3) + " g(4)=" + std::to_string(g4);
    return g3 == 1 && g4 == 5;
  });
  run(out, "gonality of C(N,a) is 2^{N-2}; minimal degree to genus one is 2^{N-3}", [&](std::string& d) {
    bool ok = true;
    for (int n = 3; n <= 8; ++n) ok = ok && gonality(n) == (1LL << (n - 2)) && genus1_min_degree(n) * 2 == gonality(n);
    d = "gonality(4)=" + std::to_string(gonality(4)) + " genus-one degree(4)=" + std::to_string(genus1_min_degree(4));
    return ok && gonality(4) == 4 && genus1_min_degree(4) == 2;
  });
  run(out, "rho(delta_M) = 2^{M-3}; B_N=2^{N-3} and b_N=1/2", [&](std::string& d) {
    const auto t = degree_thresholds(4);
    d = "B_4=" + t.big_b.to_string() + " b_4=" + t.small_b.to_string() + " rho(delta_4)=" + t.rho.back().to_string();
    return t.big_b == Rational(2) && t.small_b == Rational(Integer(1), Integer(2)) && t.rho.back() == Rational(2);
  });
  run(out, "put N=floor(4+log_2(B)); singular for fewer than 16B values", [&](std::string& d) {
    bool ok = true;
    for (long long b = 1; b <= 64; ++b) ok = ok && uniform_level(b).below;
    const auto u1 = uniform_level(1), u8 = uniform_level(8);
    d = "B=1: N=" + std::to_string(u1.level) + " bound=" + std::to_string(u1.singular_bound) +
        "; B=8: N=" + std::to_string(u8.level) + " bound=" + std::to_string(u8.singular_bound);
    return ok && u1.level == 4 && u1.singular_bound == 11;
  });
  run(out, "has two components for each N", [&](std::string& d) {
    for (int n = 2; n <= 6; ++n) quarter_splitting(n);
    d = "f^N + 1/4 = (h^2+h+c+1/2)(h^2-h+c+1/2) exact for N=2..6";
    return true;
  });
  run(out, "genera of the -1/4 components: 0, 0 / 0, 0 / 1, 1 / 5, 5", [&](std::string& d) {
    std::ostringstream os;
    bool ok = true;
    const std::pair<long long, long long> want[] = {{0, 0}, {0, 0}, {1, 1}, {5, 5}};
    for (int n = 2; n <= 5; ++n) {
      const auto q = quarter_component_genera(n);
      os << (n > 2 ? " / " : "") << q.genera.first << ", " << q.genera.second;
      ok = ok && q.genera == want[n - 2];
    }
    d = os.str() + " (cusps assumed unramified)";
    return ok;
  });
  for (const Identity which : {Identity::FixedPoint, Identity::TwoCycle, Identity::KFamily}) {
    static const char* anchors[] = {"the point (a,a-a^2) lies on P(N,a)", "f_{-a^2-a-1} maps a to -a-1 and back",
                                    "points (k,-k^2-k+1) on P(2,-3k+2)"};
    run(out, anchors[static_cast<int>(which)], [&](std::string& d) {
      const auto r = verify_identity(which);
      d = identity_name(which) + " residual " + (r.holds ? "0" : "nonzero");
      return r.holds;
    });
  }
  run(out, "ĥ(f_c(z))=2ĥ(z); ĥ(z)=h(z)+O(1)", [&](std::string& d) {
    double worst = 0;
    bool ok = true;
    for (int zn = -3; zn <= 3; ++zn) {
      for (int cn = -4; cn <= 2; ++cn) {
        const Rational z(Integer(zn), Integer(2)), c(Integer(cn), Integer(3));
        const double h = canonical_height(z, c).value;
        worst = std::max(worst, std::fabs(canonical_height(z * z + c, c).value - 2 * h));
        ok = ok && std::fabs(h - weil_height(z)) <= height_gap_constant(c) + 1e-12;
      }
    }
    std::ostringstream os;
    os << "max functional-equation residual " << worst;
    d = os.str();
    return ok && worst < 1e-9;
  });
  run(out, "1/16 h(c) + (log(5) - 2 log(2))/16", [&](std::string& d) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& p : curve_point_search(3, Rational(0), 50)) pts.emplace_back(p.x, p.c);
    const auto demo = epsilon_demo(pts);
    int big = 0;
    for (const auto& r : demo.rows) big += r.inequality_applies;
    d = std::to_string(demo.rows.size()) + " points on P(3,0) up to height 50, " + std::to_string(big) + " with |c| > 4";
    return demo.passed;
  });
  return out;
}

}  // namespace quadpre
