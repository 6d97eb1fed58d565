#include "quadpre/cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quadpre/errors.hpp"
#include "quadpre/json_io.hpp"
#include "quadpre/reproduce.hpp"

namespace quadpre {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string yes(bool b) { return b ? "true" : "false"; }

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    if constexpr (std::is_same_v<T, Rational>) {
      os << xs[i].to_string();
    } else {
      os << xs[i];
    }
  }
  return os.str();
}

// 64-bit FNV-1a, used only as an output fingerprint.
std::uint64_t fingerprint(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Options {
  bool json = false;
  bool manifest = false;
  double tol = 1e-9;
  int max_level = 6;
  int min_level = 2;
  int level = 0;
  int k = 0;
  long height = 0;
  long long bound = 0;
  unsigned threads = 0;
  std::string a = "0", c = "0", z = "0", t = "0";
  std::vector<long> oracle;
};

using Action = std::function<int(std::ostream&)>;

int run_critvals(const Options& o, std::ostream& out) {
  if (o.min_level < 2 || o.max_level > kMaxStrataLevel || o.min_level > o.max_level) {
    throw std::out_of_range("levels must satisfy 2 <= min-level <= max-level <= 8");
  }
  int status = 0;
  Json rows = Json::array();
  if (!o.json) out << "level\tdeg_V\tcount\tsquarefree\tdisjoint\tirreducible\tcumulative\texpected\trational_roots\n";
  for (int n = o.min_level; n <= o.max_level; ++n) {
    const auto s = exceptional_set(n);
    const auto cum = cumulative_singular_count(n);
    if (cum.asserted && !cum.equal) status = 1;
    if (o.json) {
      Json j = to_json(s);
      j["cumulative"] = {{"count", cum.count}, {"expected", cum.expected}, {"asserted", cum.asserted}};
      rows.push_back(std::move(j));
    } else {
      out << n << '\t' << s.critical_values.degree() << '\t' << s.count << '\t' << yes(s.squarefree) << '\t'
          << yes(s.disjoint) << '\t' << yes(s.irreducible) << '\t' << cum.count << '\t' << cum.expected << '\t'
          << (s.rational_roots.empty() ? "-" : join(s.rational_roots)) << '\n';
    }
  }
  if (o.json) out << Json{{"levels", rows}}.dump(2) << '\n';
  return status;
}

int run_smooth(const Options& o, std::ostream& out) {
  const Rational a = Rational::parse(o.a);
  const auto v = is_nonsingular(o.level, a);
  if (o.json) {
    out << Json{{"level", o.level}, {"a", to_json(a)}, {"nonsingular", v.nonsingular}, {"failing_level", v.failing_level}}.dump(2)
        << '\n';
  } else {
    out << "level\ta\tnonsingular\tfailing_level\n"
        << o.level << '\t' << a.to_string() << '\t' << yes(v.nonsingular) << '\t'
        << (v.nonsingular ? "-" : std::to_string(v.failing_level)) << '\n';
  }
  return 0;
}

int run_genus(const Options& o, std::ostream& out) {
  const auto g = genus_via_rh(o.level, Rational::parse(o.a));
  if (o.json) {
    out << to_json(g).dump(2) << '\n';
    return 0;
  }
  out << "level\ta\tgenus_recursion\tgenus_formula\tagree\n"
      << g.level << '\t' << g.a.to_string() << '\t' << g.genus_recursion << '\t' << g.genus_formula << '\t' << yes(g.agree)
      << "\nM\tr_M\tg(M)\n";
  for (std::size_t m = 0; m < g.trace.size(); ++m) {
    out << m + 1 << '\t' << (m == 0 ? std::string("-") : std::to_string(g.ramification[m - 1])) << '\t' << g.trace[m] << '\n';
  }
  return 0;
}

int run_gonality(const Options& o, std::ostream& out) {
  const long long gon = gonality(o.level);
  const std::string g1 = o.level >= 3 ? std::to_string(genus1_min_degree(o.level)) : "-";
  const char* source = "closed formula 2^(N-2); genus-one degree 2^(N-3)";
  if (o.json) {
    Json j{{"level", o.level}, {"gonality", gon}};
    j["genus1_min_degree"] = o.level >= 3 ? Json(genus1_min_degree(o.level)) : Json(nullptr);
    j["source"] = source;
    out << j.dump(2) << '\n';
  } else {
    out << "level\tgonality\tgenus1_min_degree\tsource\n" << o.level << '\t' << gon << '\t' << g1 << '\t' << source << '\n';
  }
  return 0;
}

int run_thresholds(const Options& o, std::ostream& out) {
  const auto t = degree_thresholds(o.level);
  std::optional<UniformLevel> u;
  if (o.bound > 0) u = uniform_level(o.bound);
  if (o.json) {
    Json j{{"level", t.level}, {"rho", Json::array()}, {"B_N", to_json(t.big_b)}, {"b_N", to_json(t.small_b)}};
    for (std::size_t i = 0; i < t.rho.size(); ++i) j["rho"].push_back({{"M", i + 2}, {"rho", to_json(t.rho[i])}});
    if (u) {
      j["uniform"] = {{"B", u->bound_b}, {"N", u->level}, {"singular_bound", u->singular_bound}, {"below_16B", u->below}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "M\trho\n";
    for (std::size_t i = 0; i < t.rho.size(); ++i) out << i + 2 << '\t' << t.rho[i].to_string() << '\n';
    out << "N\tB_N\tb_N\n" << t.level << '\t' << t.big_b.to_string() << '\t' << t.small_b.to_string() << '\n';
    if (u) {
      out << "B\tN(B)\tsingular_bound\tbelow_16B\n"
          << u->bound_b << '\t' << u->level << '\t' << u->singular_bound << '\t' << yes(u->below) << '\n';
    }
  }
  return u && !u->below ? 1 : 0;
}

int run_quarter(const Options& o, std::ostream& out) {
  if (o.max_level < 2 || o.max_level > 6) throw std::out_of_range("quarter levels must lie in [2, 6]");
  Json rows = Json::array();
  std::string assumption;
  if (!o.json) out << "level\tidentity\tr_plus\tr_minus\tgenus_plus\tgenus_minus\n";
  for (int n = 2; n <= o.max_level; ++n) {
    const auto q = quarter_component_genera(n);
    assumption = q.assumption;
    if (o.json) {
      Json j = to_json(q);
      j["identity"] = "exact";
      rows.push_back(std::move(j));
    } else {
      const auto r = q.ramification.empty() ? std::pair<int, int>{-1, -1} : q.ramification.back();
      out << n << "\texact\t" << (r.first < 0 ? "-" : std::to_string(r.first)) << '\t'
          << (r.second < 0 ? "-" : std::to_string(r.second)) << '\t' << q.genera.first << '\t' << q.genera.second << '\n';
    }
  }
  if (o.json) {
    out << Json{{"levels", rows}, {"assumption", assumption}}.dump(2) << '\n';
  } else {
    out << "# assumption: " << assumption << '\n';
  }
  return 0;
}

int run_preimages(const Options& o, std::ostream& out) {
  const Rational a = Rational::parse(o.a), c = Rational::parse(o.c);
  const auto set = rational_preimages(a, c);
  std::optional<bool> match;
  if (!o.oracle.empty()) {
    if (o.oracle.size() != 2) throw std::invalid_argument("--oracle takes H and M");
    match = brute_force_preimages(a, c, o.oracle[0], static_cast<int>(o.oracle[1])).members == set.members;
  }
  if (o.json) {
    Json j = to_json(set);
    if (match) j["oracle"] = {{"height", o.oracle[0]}, {"max_level", o.oracle[1]}, {"match", *match}};
    out << j.dump(2) << '\n';
  } else {
    out << "value\tlevel\n";
    for (const auto& m : set.members) out << m.value.to_string() << '\t' << m.level << '\n';
    if (match) out << "# oracle H=" << o.oracle[0] << " M=" << o.oracle[1] << ": " << (*match ? "match" : "mismatch") << '\n';
  }
  return match && !*match ? 1 : 0;
}

int run_search(const Options& o, std::ostream& out) {
  const auto pts = curve_point_search(o.level, Rational::parse(o.a), o.height, o.threads);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& p : pts) rows.push_back(to_json(p));
    out << Json{{"points", rows}}.dump(2) << '\n';
  } else {
    out << "x\tc\tlevel\ta\n";
    for (const auto& p : pts) out << p.x.to_string() << '\t' << p.c.to_string() << '\t' << p.level << '\t' << p.a.to_string() << '\n';
  }
  return 0;
}

int run_degrees(const Options& o, std::ostream& out) {
  const Rational t = Rational::parse(o.t), c = Rational::parse(o.c);
  const auto prof = preimage_degree_profile(t, c, o.k);
  if (o.json) {
    out << Json{{"t", to_json(t)}, {"c", to_json(c)}, {"k", o.k}, {"profile", prof}}.dump(2) << '\n';
  } else {
    out << "t\tc\tk\tprofile\n" << t.to_string() << '\t' << c.to_string() << '\t' << o.k << '\t' << join(prof) << '\n';
  }
  return 0;
}

int run_height(const Options& o, std::ostream& out) {
  const auto h = canonical_height(Rational::parse(o.z), Rational::parse(o.c), o.tol);
  if (o.json) {
    out << to_json(h).dump(2) << '\n';
  } else {
    out << "z\tc\tvalue\terror_bound\tflagged\n"
        << h.z.to_string() << '\t' << h.c.to_string() << '\t' << num(h.value) << '\t' << num(h.error_bound) << '\t'
        << yes(h.flagged) << "\nplace\tlog_coefficient\tvalue\terror\n"
        << "inf\t-\t" << num(h.archimedean) << '\t' << num(h.archimedean_error) << '\n';
    for (const auto& f : h.finite) {
      out << f.prime.get_str() << '\t' << f.coefficient.to_string() << '\t'
          << num(f.coefficient.to_double() * log_integer(f.prime)) << '\t' << num(f.error) << '\n';
    }
  }
  return 0;
}

int run_preperiodic(const Options& o, std::ostream& out) {
  const auto p = preperiodic_orbit(Rational::parse(o.z), Rational::parse(o.c));
  if (o.json) {
    out << to_json(p).dump(2) << '\n';
  } else {
    out << "verdict\tindex\torbit\n"
        << yes(p.preperiodic) << '\t'
        << (p.preperiodic ? "repeat_index=" + std::to_string(p.repeat_index) : "escape_index=" + std::to_string(p.escape_index))
        << '\t' << join(p.orbit) << '\n';
  }
  return 0;
}

int run_identities(const Options& o, std::ostream& out) {
  int status = 0;
  Json rows = Json::array();
  if (!o.json) out << "identity\tresidual\twitness_degrees\n";
  for (const Identity which : {Identity::FixedPoint, Identity::TwoCycle, Identity::KFamily}) {
    const auto r = verify_identity(which);
    if (!r.holds) status = 1;
    if (o.json) {
      rows.push_back(to_json(r));
    } else {
      out << identity_name(which) << '\t' << (r.holds ? "0" : "nonzero") << '\t' << join(r.witness_degrees) << '\n';
    }
  }
  if (o.json) out << Json{{"identities", rows}}.dump(2) << '\n';
  return status;
}

int run_audit(const Options& o, std::ostream& out) {
  const auto audit = two_adic_audit(o.max_level);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& l : audit.levels) {
      Json j = to_json(l.polygon);
      j["level"] = l.level;
      j["all_negative"] = l.all_negative;
      rows.push_back(std::move(j));
    }
    out << Json{{"levels", rows}, {"passed", audit.passed}}.dump(2) << '\n';
  } else {
    out << "level\tvaluations\tall_negative\n";
    for (const auto& l : audit.levels) {
      std::vector<std::string> vs;
      for (const auto& [v, m] : l.polygon.valuations) vs.push_back(v.to_string() + "x" + std::to_string(m));
      out << l.level << '\t' << join(vs) << '\t' << yes(l.all_negative) << '\n';
    }
  }
  return audit.passed ? 0 : 1;
}

int run_reproduce(const Options& o, std::ostream& out) {
  const auto claims = reproduce_battery();
  int passed = 0;
  for (const auto& c : claims) passed += c.passed;
  if (o.json) {
    Json rows = Json::array();
    for (const auto& c : claims) rows.push_back({{"anchor", c.anchor}, {"passed", c.passed}, {"detail", c.detail}});
    out << Json{{"claims", rows}, {"passed", passed}, {"total", claims.size()}}.dump(2) << '\n';
  } else {
    out << "status\tanchor\tdetail\n";
    for (const auto& c : claims) out << (c.passed ? "PASS" : "FAIL") << "\t\"" << c.anchor << "\"\t" << c.detail << '\n';
    out << "# " << passed << "/" << claims.size() << " claims passed\n";
  }
  return passed == static_cast<int>(claims.size()) ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  Action action;
  std::string name;

  CLI::App app{"Exact arithmetic for the quadratic family f_c(x) = x^2 + c", "quadpre"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.add_flag("--json", o.json, "emit JSON instead of TSV");
  app.add_flag("--manifest", o.manifest, "write a run manifest to stderr");

  auto sub = [&](const char* n, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(n, help);
    s->callback([&, n, fn] {
      name = n;
      action = [&o, fn](std::ostream& os) { return fn(o, os); };
    });
    return s;
  };
  auto level_opt = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--level,-N", o.level, "level N");
    if (required) opt->required();
  };

  auto* s = sub("critvals", "critical-value polynomials and exceptional sets", run_critvals);
  s->alias("strata");
  s->add_option("--max-level", o.max_level, "highest level (default 6)");
  s->add_option("--min-level", o.min_level, "lowest level (default 2)");

  s = sub("smooth", "decide whether P(N,a) is nonsingular", run_smooth);
  level_opt(s);
  s->add_option("--a", o.a, "value a (p/q)")->required();

  s = sub("genus", "genus of C(N,a) by Riemann-Hurwitz and closed form", run_genus);
  level_opt(s);
  s->add_option("--a", o.a, "value a (p/q)")->required();

  s = sub("gonality", "gonality and minimal degree to a genus-one curve", run_gonality);
  level_opt(s);

  s = sub("thresholds", "degree thresholds; with --bound, the uniform level for B", run_thresholds);
  level_opt(s);
  s->add_option("--bound,-B", o.bound, "degree bound B >= 1");

  s = sub("quarter", "components of P(N,-1/4) and their genera", run_quarter);
  s->add_option("--max-level", o.max_level, "highest level, at most 6 (default 6)");

  s = sub("preimages", "rational backward orbit of a under f_c", run_preimages);
  s->add_option("--a", o.a, "target a (p/q)")->required();
  s->add_option("--c", o.c, "parameter c (p/q)")->required();
  s->add_option("--oracle", o.oracle, "compare with forward enumeration: H M")->expected(2);

  s = sub("search", "rational points on P(N,a) by height of c", run_search);
  level_opt(s);
  s->add_option("--a", o.a, "value a (p/q)")->required();
  s->add_option("--height,-H", o.height, "bound on |num c| and den c")->required();
  s->add_option("--threads", o.threads, "worker threads (0 = all cores)");

  s = sub("degrees", "factor degrees of f_c^k(x) - t", run_degrees);
  s->add_option("--t", o.t, "target t (p/q)")->required();
  s->add_option("--c", o.c, "parameter c (p/q)")->required();
  s->add_option("--k", o.k, "iterate count k")->required();

  s = sub("canonical-height", "canonical height of z for f_c", run_height);
  s->add_option("--z", o.z, "point z (p/q)")->required();
  s->add_option("--c", o.c, "parameter c (p/q)")->required();
  s->add_option("--tol", o.tol, "error tolerance (default 1e-9)");

  s = sub("preperiodic", "exact preperiodicity test", run_preperiodic);
  s->add_option("--z", o.z, "point z (p/q)")->required();
  s->add_option("--c", o.c, "parameter c (p/q)")->required();

  sub("identities", "expand the fixed-point, two-cycle and k-family identities", run_identities);

  s = sub("audit2adic", "2-adic Newton polygons of the critical-value polynomials", run_audit);
  s->add_option("--max-level", o.max_level, "highest level (default 6)");

  sub("reproduce-paper", "run the full battery of checks", run_reproduce);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (!(o.tol > 0)) {
    err << "error: --tol must be positive\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  std::ostringstream buf;
  int status = 0;
  try {
    status = action(buf);
  } catch (const MathError& e) {
    out << buf.str();
    err << "mathematical check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  const std::string text = buf.str();
  out << text;
  if (o.manifest) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fingerprint(text)));
    Json m{{"subcommand", name}, {"args", args}, {"seed", kFactorSeed}, {"version", kVersion},
           {"elapsed_ms", ms},   {"checksum", std::string("fnv1a64:") + hex}, {"exit_code", status}};
    err << m.dump() << '\n';
  }
  return status;
}

}  // namespace quadpre
