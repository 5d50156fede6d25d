#include "orbchar/verify.hpp"

#include "orbchar/census.hpp"
#include "orbchar/galois.hpp"
#include "orbchar/groups.hpp"
#include "orbchar/lattice.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

namespace orbchar {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::discrepancy: return "paper-discrepancy";
  }
  return "?";
}

std::size_t VerifyReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["options"] = {{"trunc", options.order},
                  {"numeric_trunc", options.numeric_order},
                  {"y", options.y_schedule},
                  {"tol", options.tolerance}};
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back(
        {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}, {"elapsed_s", c.seconds}});
  j["summary"] = {{"pass", count(CheckStatus::pass)},
                  {"fail", count(CheckStatus::fail)},
                  {"paper-discrepancy", count(CheckStatus::discrepancy)}};
  j["exit_code"] = exit_code();
  return j;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << "[" << to_string(c.status) << "] " << c.name << " (" << std::fixed << std::setprecision(2) << c.seconds
       << "s): " << c.detail << "\n";
  os << count(CheckStatus::pass) << " pass, " << count(CheckStatus::fail) << " fail, "
     << count(CheckStatus::discrepancy) << " paper-discrepancy\n";
  return os.str();
}

namespace {

CheckResult from_lines(std::string name, const std::vector<ReportLine>& lines) {
  CheckResult r{std::move(name), CheckStatus::pass, "", 0.0};
  std::size_t bad = 0;
  for (const auto& l : lines) {
    if (l.ok) continue;
    ++bad;
    r.detail += (r.detail.empty() ? "" : "; ") + l.name + ": " + l.detail;
  }
  if (bad) {
    r.status = CheckStatus::fail;
    r.detail = std::to_string(bad) + " of " + std::to_string(lines.size()) + " failed: " + r.detail;
  } else {
    r.detail = lines.size() == 1 ? std::string("1 check holds") : std::to_string(lines.size()) + " checks hold";
    if (!lines.empty()) r.detail += "; " + lines.front().name + ": " + lines.front().detail;
  }
  return r;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

}  // namespace

CheckResult check_group_tables() {
  std::vector<ReportLine> lines;
  for (const auto& n : group_names()) {
    auto bad = validate(group_data(n));
    std::string d;
    for (const auto& b : bad) d += (d.empty() ? "" : "; ") + b;
    lines.push_back({n, bad.empty(), bad.empty() ? "sizes, dimensions and orthogonality hold" : d});
  }
  auto r = from_lines("group tables", lines);
  if (r.status == CheckStatus::pass) r.detail = std::to_string(lines.size()) + " tables: class sizes, sum dim^2 = |G|, row and column orthogonality within 1e-9";
  return r;
}

CheckResult check_numeric_qdims(const std::vector<double>& y_schedule, double tolerance, long order) {
  CheckResult r{"numeric quantum dimensions", CheckStatus::pass, "", 0.0};
  if (y_schedule.empty()) {
    r.status = CheckStatus::fail;
    r.detail = "empty y schedule";
    return r;
  }
  std::ostringstream os;
  double last_worst = 0.0;
  for (std::size_t i = 0; i < y_schedule.size(); ++i) {
    const double y = y_schedule[i];
    os << (i ? "; " : "") << "y=" << y << ":";
    last_worst = 0.0;
    for (Algebra a : {Algebra::A4, Algebra::S4, Algebra::A5}) {
      double worst = 0.0;
      std::string where;
      for (const auto& q : qdim_numeric_all(a, y, order)) {
        const double d = std::abs(q.value - q.exact.value());
        if (!(d <= worst)) {
          worst = d;
          where = q.label + " " + fmt(q.value) + " vs " + q.exact.to_string();
        }
      }
      last_worst = std::max(last_worst, worst);
      os << " " << to_string(a) << " max err " << fmt(worst) << (worst < tolerance ? "" : " (" + where + ")");
    }
  }
  r.status = last_worst < tolerance ? CheckStatus::pass : CheckStatus::fail;
  r.detail = "tolerance " + fmt(tolerance) + " judged at y=" + fmt(y_schedule.back()) + ", trunc " +
             std::to_string(order) + "; " + os.str();
  return r;
}

CheckResult check_twisted_qdim_discrepancy() {
  CheckResult r{"twisted qdim over V_L^+ (k vs sqrt k)", CheckStatus::fail, "", 0.0};
  const long k = 4;
  const long target = 4 * glob_lattice(k, false, QuantumDim(1));
  const long with_k = glob_lattice(k, true, QuantumDim(k));
  const long with_sqrt = glob_lattice(k, true, QuantumDim::sqrt_of(k));
  r.detail = "k=4: glob(V_L^+) must be 4 glob(V_L) = " + std::to_string(target) + "; table value qdim=k gives " +
             std::to_string(with_k) + ", qdim=sqrt(k) gives " + std::to_string(with_sqrt) +
             "; catalog uses sqrt(k)";
  if (with_sqrt == target && with_k != target) r.status = CheckStatus::discrepancy;
  else if (with_k == target) r.status = CheckStatus::pass;
  return r;
}

CheckResult check_s4_label_discrepancy() {
  CheckResult r{"S4 gamma/zeta label ranges", CheckStatus::fail, "", 0.0};
  const Census& c = census(Algebra::S4);
  long gamma_n = 0, zeta_n = 0, gamma_sq = 0, zeta_sq = 0;
  for (const auto& e : c.entries) {
    const auto* l = std::get_if<LatticeRecipe>(&e.recipe);
    if (!l || l->label.kind != LatticeModuleLabel::Kind::coset) continue;
    if (l->k == 9) {
      ++gamma_n;
      gamma_sq = e.qdim.squared();
    } else if (l->k == 16 && l->label.j % 2 != 0) {
      ++zeta_n;
      zeta_sq = e.qdim.squared();
    }
  }
  const long rest = glob(Algebra::S4) - gamma_n * gamma_sq - zeta_n * zeta_sq;
  const long target = group_order(Algebra::S4) * group_order(Algebra::S4) * glob_base();
  const long as_counted = rest + gamma_n * gamma_sq + zeta_n * zeta_sq;
  // ranges M^13..M^20 (8 labels) for gamma and M^21..M^26 (6) for zeta
  const long as_ranged = rest + 8 * gamma_sq + 6 * zeta_sq;
  r.detail = std::to_string(gamma_n) + " gamma + " + std::to_string(zeta_n) + " zeta modules give glob " +
             std::to_string(as_counted) + " = 24^2 x 2 = " + std::to_string(target) +
             "; label ranges M^13-M^20 / M^21-M^26 (8 gamma + 6 zeta) give " + std::to_string(as_ranged) +
             "; catalog relabels gamma M^13-M^18, zeta M^19-M^26";
  if (as_counted == target && as_ranged != target) r.status = CheckStatus::discrepancy;
  return r;
}

VerifyReport run_verify(const VerifyOptions& opt) {
  if (opt.order < 1) throw std::invalid_argument("verify: trunc must be positive");
  if (opt.numeric_order < 1) throw std::invalid_argument("verify: numeric trunc must be positive");
  for (double y : opt.y_schedule)
    if (!(y > 0.0)) throw std::invalid_argument("verify: every y must be positive");
  const long N = opt.order;
  using L = LatticeModuleLabel;
  std::vector<std::pair<std::string, std::function<CheckResult()>>> jobs;
  auto add = [&](std::string name, std::function<CheckResult()> f) { jobs.emplace_back(std::move(name), std::move(f)); };
  auto lines = [&](std::string name, std::function<std::vector<ReportLine>()> f) {
    add(name, [name, f] { return from_lines(name, f()); });
  };

  add("group tables", check_group_tables);
  lines("cover fibers", [] {
    std::vector<ReportLine> out;
    for (const char* c : {"cover_A4", "cover_S4", "cover_A5"}) {
      const auto& g = group_data(c);
      auto bad = cover_fiber_check(g, group_data(g.base));
      out.push_back({std::string(c) + " -> " + g.base, bad.empty(), bad.empty() ? "2:1 on every fiber" : bad.front()});
    }
    return out;
  });
  lines("normalizer and centralizer facts", [] {
    std::vector<ReportLine> out;
    for (const auto& f : normalizer_centralizer_facts()) {
      const long h = group_data(f.subgroup).order, cz = group_data(f.centralizer).order,
                 nz = group_data(f.normalizer).order, g = group_data(f.ambient).order;
      const bool ok = cz % h == 0 && nz % cz == 0 && g % nz == 0;
      out.push_back({f.subgroup, ok, "C=" + f.centralizer + " N=" + f.normalizer + ", [N:C]=" + std::to_string(nz / cz)});
    }
    return out;
  });
  lines("oscillator identities", [N] {
    std::vector<ReportLine> out;
    const long n = std::min(N, 400L);
    ModeFamily euler{Rational(1), -1, 1, false};
    auto d = first_difference(series_mul(fock_series(FockKind::bosonic, n), product_form(std::span(&euler, 1), n)),
                              QSeries::monomial(Rational(1), Rational(0), 1, n));
    out.push_back({"P(q) prod(1-q^n) = 1", !d, d ? "differs at q^" + to_string(d->exponent) : "holds"});
    // prod (1+q^n) = prod (1-q^{2n-1})^-1
    ModeFamily dist{Rational(1), 1, 1, false}, odd{Rational(2), -1, -1, true};
    d = first_difference(product_form(std::span(&dist, 1), n), product_form(std::span(&odd, 1), n));
    out.push_back({"distinct parts = odd parts", !d, d ? "differs at q^" + to_string(d->exponent) : "holds"});
    return out;
  });
  lines("coset-sum identity", [N] {
    std::vector<ReportLine> out;
    for (long T = 2; T <= 5; ++T) {
      auto r = coset_sum_identity(T, N);
      out.push_back({"T=" + std::to_string(T), r.ok, r.detail});
    }
    return out;
  });
  lines("lattice weight table k=4", [] {
    std::vector<ReportLine> out;
    const long k = 4;
    auto expect = [&](const L& l, Rational w) {
      Rational got = conformal_weight(k, l);
      out.push_back({l.to_string(), got == w, to_string(got) + (got == w ? "" : " expected " + to_string(w))});
    };
    expect(L::plus(), 0);
    expect(L::minus(), 1);
    for (long r = 1; r < k; ++r) expect(L::coset(r), rational(r * r, 4 * k));
    expect(L::half_coset(1), rational(k, 4));
    expect(L::half_coset(-1), rational(k, 4));
    for (int s : {1, 2}) {
      expect(L::twisted(s, 1), rational(1, 16));
      expect(L::twisted(s, -1), rational(9, 16));
    }
    return out;
  });
  lines("lattice invariants", [N] {
    std::vector<ReportLine> out;
    const long n = std::min(N, 100L);
    bool sym = true;
    for (long k = 1; k <= 8; ++k)
      for (long j = -k + 1; j <= k; ++j) {
        QSeries t = theta_coset(k, j, n);
        sym = sym && !first_difference(t, theta_coset(k, -j, n)) && !first_difference(t, theta_coset(k, j + 2 * k, n));
      }
    out.push_back({"theta symmetries", sym, "j -> -j and j -> j+2k for k <= 8"});
    for (long k : {1, 4, 9}) {
      auto d = first_difference(char_module(k, L::plus(), n) + char_module(k, L::minus(), n),
                                char_module(k, L::coset(0), n));
      out.push_back({"plus + minus = V_L, k=" + std::to_string(k), !d, d ? to_string(d->exponent) : "holds"});
    }
    QSeries tw = char_module(4, L::twisted(1, 1), n) + char_module(4, L::twisted(1, -1), n);
    QSeries ref = fock_series(FockKind::twisted, n).shifted(rational(1, 16) + vacuum_shift());
    auto d = first_difference(tw, ref);
    out.push_back({"T+ + T- = q^{1/16-1/24} prod(1-q^{n-1/2})^-1", !d, d ? to_string(d->exponent) : "holds"});
    for (long k : {2, 4}) {
      std::optional<QSeries> sum;
      for (long j = -k + 1; j <= k; ++j) {
        QSeries c = char_module(k, L::coset(j), n);
        sum = sum ? *sum + c : c;
      }
      // all cosets together: the lattice Z alpha/2k with norm 1/2k
      std::vector<Rational> th(std::size_t(4 * k * n + 1));
      for (long m = 0; m * m <= 4 * k * n; ++m) th[std::size_t(m * m)] += m == 0 ? 1 : 2;
      QSeries dual = series_mul(fock_series(FockKind::bosonic, n), QSeries(Rational(0), 4 * k, std::move(th)))
                         .shifted(vacuum_shift());
      auto dd = first_difference(*sum, dual);
      out.push_back({"dual-lattice refinement k=" + std::to_string(k), !dd, dd ? to_string(dd->exponent) : "holds"});
    }
    return out;
  });
  lines("regular decompositions", [N] {
    std::vector<ReportLine> out;
    for (const char* c : {"cover_A4", "cover_S4", "cover_A5"}) {
      auto r = regular_decomposition(group_data(c), N);
      out.push_back({c, r.ok, r.detail});
    }
    return out;
  });
  for (const char* c : {"cover_A4", "cover_S4", "cover_A5"})
    lines(std::string("decomposition ") + c,
          [c, N] { return decomposition_check(group_data(c), standard_expectations(c, N), N).lines; });
  lines("invariants against lattice characters", [N] { return molien_cross_checks(N); });
  for (Algebra a : {Algebra::A4, Algebra::S4, Algebra::A5}) {
    const std::string n(to_string(a));
    lines("census " + n, [a] { return census_shape_check(a).lines; });
    lines("weights " + n, [a, N] { return weight_check(a, N).lines; });
    lines("index rule " + n, [a] { return index_rule_check(a).lines; });
    lines("type one " + n, [a] { return type_one_check(a).lines; });
    lines("pairing " + n, [a, N] { return pairing_check(a, N).lines; });
  }
  lines("global dimensions", [] {
    std::vector<ReportLine> out;
    out.push_back({"V_L2", glob_base() == 2, "glob = " + std::to_string(glob_base())});
    for (Algebra a : {Algebra::A4, Algebra::S4, Algebra::A5}) {
      const long g = group_order(a), want = g * g * glob_base(), got = glob(a);
      out.push_back({std::string(to_string(a)), got == want,
                     "sum qdim^2 = " + std::to_string(got) + ", |G|^2 glob(V_L2) = " + std::to_string(want)});
    }
    return out;
  });
  lines("stable counts", [N] { return stable_count_check(N).lines; });
  add("numeric quantum dimensions",
      [&opt] { return check_numeric_qdims(opt.y_schedule, opt.tolerance, opt.numeric_order); });
  add("twisted qdim over V_L^+ (k vs sqrt k)", check_twisted_qdim_discrepancy);
  add("S4 gamma/zeta label ranges", check_s4_label_discrepancy);

  VerifyReport report{opt, std::vector<CheckResult>(jobs.size())};
  const long n_jobs = long(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n_jobs; ++i) {
    auto& [name, f] = jobs[std::size_t(i)];
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = f();
    } catch (const std::exception& ex) {
      r = {name, CheckStatus::fail, std::string("exception: ") + ex.what(), 0.0};
    }
    r.name = name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.checks[std::size_t(i)] = std::move(r);
  }
  return report;
}

}  // namespace orbchar
