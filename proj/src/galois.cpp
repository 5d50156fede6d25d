#include "orbchar/galois.hpp"

#include "orbchar/kernels.hpp"

#include <cmath>
#include <sstream>

namespace orbchar {

namespace {

long max_twice_m(long order) {
  long t = long(std::floor(2.0 * std::sqrt(double(order))));
  while ((t + 1) * (t + 1) <= 4 * order) ++t;
  while (t * t > 4 * order) --t;
  return t;
}

std::string describe(const std::optional<SeriesDifference>& d) {
  if (!d) return "";
  return "first difference at q^" + to_string(d->exponent) + ": " + d->lhs + " vs " + d->rhs;
}

}  // namespace

QSeries twisted_trace(const Angle& theta, Sector sector, long order) {
  if (order < 1) throw std::invalid_argument("twisted_trace: order must be positive");
  const long tmax = max_twice_m(order);
  std::vector<Complex> lat(std::size_t(4 * order + 1));
  const double th = theta.radians();
  for (long t = sector == Sector::integer ? 0 : 1; t <= tmax; t += 2) {
    const double m = double(t) / 2.0;
    lat[std::size_t(t * t)] = t == 0 ? Complex(1.0, 0.0) : std::polar(1.0, m * th) + std::polar(1.0, -m * th);
  }
  QSeries lattice(Rational(0), 4, std::move(lat));
  return series_mul(fock_series(FockKind::bosonic, order, Payload::numeric), lattice).shifted(vacuum_shift());
}

QSeries isotypic_lattice_factor(const GroupData& g, std::size_t irrep, long order, double tol) {
  if (irrep >= g.irreps.size()) throw std::out_of_range("isotypic_lattice_factor: irrep index");
  if (order < 0) throw std::invalid_argument("isotypic_lattice_factor: negative order");
  std::vector<kernels::ClassTerm> terms;
  for (std::size_t c = 0; c < g.classes.size(); ++c)
    terms.push_back({double(g.classes[c].size) * std::conj(g.irreps[irrep].row[c]) / double(g.order),
                     g.classes[c].angle.radians()});
  const long tmax = max_twice_m(order);
  auto sums = kernels::parallel::class_sum(terms, tmax, g.is_cover());
  std::vector<Rational> c(std::size_t(4 * order + 1));
  for (long t = 0; t <= tmax; ++t) {
    const Complex v = sums[std::size_t(t)];
    const double r = std::round(v.real());
    if (std::abs(v.real() - r) > tol || std::abs(v.imag()) > tol) {
      std::ostringstream os;
      os << g.name << "/" << g.irreps[irrep].label << ": class sum at q^" << t * t << "/4 is " << v
         << ", not an integer";
      throw RoundingError(os.str());
    }
    c[std::size_t(t * t)] = Rational(long(r));
  }
  return QSeries(Rational(0), 4, std::move(c));
}

Character isotypic_character(const GroupData& g, std::size_t irrep, long order) {
  Character ch(order);
  ch.add(Rational(1), FockKind::bosonic, isotypic_lattice_factor(g, irrep, order));
  return ch;
}

Character isotypic_character(const GroupData& g, std::string_view irrep, long order) {
  return isotypic_character(g, g.irrep_index(irrep), order);
}

Character molien_character(const GroupData& g, long order) {
  if (g.is_cover()) throw std::invalid_argument("molien_character: expects a rotation group");
  return isotypic_character(g, 0, order);
}

IdentityResult regular_decomposition(const GroupData& cover, long order) {
  if (!cover.is_cover()) throw std::invalid_argument("regular_decomposition: expects a binary cover");
  Character sum(order);
  for (std::size_t i = 0; i < cover.irreps.size(); ++i)
    sum = sum + isotypic_character(cover, i, order).scaled(Rational(cover.irreps[i].dim));
  QSeries lhs = sum.expand();
  QSeries rhs = char_module(1, LatticeModuleLabel::coset(0), order) + char_module(1, LatticeModuleLabel::coset(1), order);
  IdentityResult r;
  r.first_failure = first_difference(lhs, rhs);
  r.ok = !r.first_failure;
  r.detail = cover.name + " through q^" + to_string(lhs.valid_through()) +
             (r.ok ? ": sum of dim * isotypic pieces equals ch V_{Z alpha/2}" : ": " + describe(r.first_failure));
  return r;
}

bool DecompositionReport::ok() const {
  for (const auto& l : lines)
    if (!l.ok) return false;
  return true;
}

DecompositionReport decomposition_check(const GroupData& cover, const std::vector<DecompositionExpectation>& expected,
                                        long order) {
  DecompositionReport report{cover.name, {}};
  for (const auto& e : expected) {
    ReportLine line{e.name, true, ""};
    try {
      Character combo(order);
      for (const auto& [label, mult] : e.pieces)
        combo = combo + isotypic_character(cover, label, order).scaled(Rational(mult));
      QSeries s = combo.expand();
      for (const Rational& c : s.exact()) {
        if (c.get_den() != 1 || sgn(c) < 0) {
          line.ok = false;
          line.detail = "coefficient " + to_string(c) + " is not a nonnegative integer";
          break;
        }
      }
      if (line.ok && e.target) {
        auto d = first_difference(s, e.target->expand());
        if (d) {
          line.ok = false;
          line.detail = describe(d);
        } else {
          line.detail = "equal through q^" + to_string(s.valid_through());
        }
      }
      if (line.ok && !e.target && !e.coefficient) {
        // no closed form: integrality, nonnegativity and the vacuum normalization
        const bool trivial = e.pieces.size() == 1 && cover.irrep_index(e.pieces[0].first) == 0;
        Rational c0 = s.exact_at(vacuum_shift());
        if (c0 != (trivial ? 1 : 0)) {
          line.ok = false;
          line.detail = "constant term " + to_string(c0);
        } else {
          line.detail = s.is_zero() ? "integral, nonnegative, no terms through q^" + to_string(s.valid_through())
                                    : "integral, nonnegative, weight " + to_string(min_exponent(s) - vacuum_shift());
        }
      }
      if (line.ok && e.coefficient && e.coefficient->first > s.valid_through()) {
        line.detail += "; coefficient of q^" + to_string(e.coefficient->first) + " beyond the computed range";
      } else if (line.ok && e.coefficient) {
        Rational got = s.exact_at(e.coefficient->first);
        line.ok = got == e.coefficient->second;
        line.detail = "coefficient of q^" + to_string(e.coefficient->first) + " is " + to_string(got) +
                      (line.ok ? "" : ", expected " + to_string(e.coefficient->second));
      }
    } catch (const std::exception& ex) {
      line.ok = false;
      line.detail = ex.what();
    }
    report.lines.push_back(std::move(line));
  }
  return report;
}

std::vector<DecompositionExpectation> standard_expectations(std::string_view cover, long order) {
  using L = LatticeModuleLabel;
  auto lat = [order](long k, L label) { return module_character(k, label, order); };
  auto iso = [order](std::string_view g, std::string_view irrep) {
    return isotypic_character(group_data(g), irrep, order);
  };
  std::vector<DecompositionExpectation> out;
  if (cover == "cover_A4") {
    out.push_back({"U1^0 + U1^1 + U1^2 = V_Zbeta^+", {{"U1^0", 1}, {"U1^1", 1}, {"U1^2", 1}}, lat(4, L::plus()), {}});
    out.push_back({"U3 = V_Zbeta^-", {{"U3", 1}}, lat(4, L::minus()), {}});
    out.push_back({"U2^0 + U2^1 + U2^2 = V_{Zbeta+beta/4}", {{"U2^0", 1}, {"U2^1", 1}, {"U2^2", 1}},
                   lat(4, L::coset(2)), {}});
    out.push_back({"U1^1 = U1^2", {{"U1^1", 1}}, iso("cover_A4", "U1^2"), {}});
    out.push_back({"U2^1 = U2^2", {{"U2^1", 1}}, iso("cover_A4", "U2^2"), {}});
    out.push_back({"U1^0 = invariants of A4", {{"U1^0", 1}}, molien_character(group_data("A4"), order), {}});
    out.push_back({"3 dim(U3 piece)_1 = dim(V_L2)_1 = 3", {{"U3", 3}}, std::nullopt,
                   std::pair{Rational(1) + vacuum_shift(), Rational(3)}});
  } else if (cover == "cover_S4") {
    out.push_back({"W1^0 + W1^1 + 2 W2^0 = V_Zbeta^+", {{"W1^0", 1}, {"W1^1", 1}, {"W2^0", 2}}, lat(4, L::plus()), {}});
    out.push_back({"W3^0 + W3^1 = V_Zbeta^-", {{"W3^0", 1}, {"W3^1", 1}}, lat(4, L::minus()), {}});
    out.push_back({"W3^0 = V_Zzeta^-", {{"W3^0", 1}}, lat(16, L::minus()), {}});
    out.push_back({"W3^1 = V_{Zzeta+zeta/2}^-", {{"W3^1", 1}}, lat(16, L::half_coset(-1)), {}});
    out.push_back({"W2^1 + W2^2 + 2 W4 = V_{Zbeta+beta/4}", {{"W2^1", 1}, {"W2^2", 1}, {"W4", 2}},
                   lat(4, L::coset(2)), {}});
    out.push_back({"W1^0 + W1^1 = U1^0", {{"W1^0", 1}, {"W1^1", 1}}, iso("cover_A4", "U1^0"), {}});
    out.push_back({"W2^0 = U1^1", {{"W2^0", 1}}, iso("cover_A4", "U1^1"), {}});
    out.push_back({"W2^1 + W2^2 = U2^0", {{"W2^1", 1}, {"W2^2", 1}}, iso("cover_A4", "U2^0"), {}});
    out.push_back({"W4 = U2^1", {{"W4", 1}}, iso("cover_A4", "U2^1"), {}});
    out.push_back({"W1^0 = invariants of S4", {{"W1^0", 1}}, molien_character(group_data("S4"), order), {}});
  } else if (cover == "cover_A5") {
    out.push_back({"X1 = invariants of A5", {{"X1", 1}}, molien_character(group_data("A5"), order), {}});
    for (const auto& r : group_data("cover_A5").irreps) out.push_back({r.label, {{r.label, 1}}, std::nullopt, {}});
  } else {
    throw std::invalid_argument("standard_expectations: unknown cover " + std::string(cover));
  }
  return out;
}

std::vector<ReportLine> molien_cross_checks(long order) {
  using L = LatticeModuleLabel;
  struct Case {
    std::string group;
    long k;
    L label;
  };
  const std::vector<Case> cases{{"K4", 4, L::plus()},  {"Z3", 9, L::coset(0)}, {"D3", 9, L::plus()},
                                {"S3", 9, L::plus()},  {"D4", 16, L::plus()},  {"D5", 25, L::plus()},
                                {"Z5", 25, L::coset(0)}};
  std::vector<ReportLine> out;
  for (const auto& c : cases) {
    auto d = first_difference(molien_character(group_data(c.group), order).expand(),
                              char_module(c.k, c.label, order));
    out.push_back({"invariants of " + c.group + " = lattice k=" + std::to_string(c.k) + " " + c.label.to_string(), !d,
                   d ? describe(d) : "equal through order " + std::to_string(order)});
  }
  for (const char* cover : {"cover_A4", "cover_S4", "cover_A5"}) {
    const auto& g = group_data(cover);
    auto d = first_difference(isotypic_character(g, 0, order).expand(),
                              molien_character(group_data(g.base), order).expand());
    out.push_back({std::string(cover) + " trivial piece = invariants of " + g.base, !d,
                   d ? describe(d) : "equal through order " + std::to_string(order)});
  }
  return out;
}

}  // namespace orbchar
