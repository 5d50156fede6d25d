#include "orbchar/census.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace orbchar {

std::string_view to_string(Algebra a) {
  switch (a) {
    case Algebra::A4: return "A4";
    case Algebra::S4: return "S4";
    case Algebra::A5: return "A5";
  }
  return "?";
}

Algebra parse_algebra(std::string_view text) {
  if (text == "A4") return Algebra::A4;
  if (text == "S4") return Algebra::S4;
  if (text == "A5") return Algebra::A5;
  throw std::invalid_argument("unknown algebra: " + std::string(text) + " (expected A4, S4 or A5)");
}

long group_order(Algebra a) { return group_data(to_string(a)).order; }

std::string_view cover_name(Algebra a) {
  switch (a) {
    case Algebra::A4: return "cover_A4";
    case Algebra::S4: return "cover_S4";
    case Algebra::A5: return "cover_A5";
  }
  return "?";
}

std::string describe(const Recipe& r) {
  if (const auto* l = std::get_if<LatticeRecipe>(&r)) return "lattice k=" + std::to_string(l->k) + " " + l->label.to_string();
  const auto& i = std::get<IsotypicRecipe>(r);
  return "isotypic " + i.cover + " " + i.irrep;
}

namespace {

using L = LatticeModuleLabel;

const char* kUntwisted = "untwisted";
const char* kTau = "tau-twisted";
const char* kSigma = "sigma-twisted";
const char* kSigma2 = "sigma^2-twisted";
const char* kRho = "rho-twisted";
const char* kOrder3 = "order-3-twisted";
const char* kOrder5 = "order-5-twisted";

CensusEntry iso(std::string label, std::string alias, std::string cover, std::string irrep, Rational weight, long qdim,
                int table, std::string notes = "") {
  return {std::move(label), std::move(alias), IsotypicRecipe{std::move(cover), std::move(irrep)}, ModuleType::one,
          kUntwisted, std::move(weight), QuantumDim(qdim), std::move(notes), table, "", ""};
}

CensusEntry lat(std::string label, std::string alias, long k, L l, ModuleType type, std::string sector, Rational weight,
                QuantumDim qdim, int table, std::string subgroup, std::string notes = "") {
  return {std::move(label), std::move(alias), LatticeRecipe{k, l}, type, std::move(sector), std::move(weight),
          qdim, std::move(notes), table, std::move(subgroup), ""};
}

std::string gamma_label(long r) {
  return r > 0 ? "V_{Zgamma+" + std::to_string(r) + "/18gamma}" : "V_{Zgamma-" + std::to_string(-r) + "/18gamma}";
}

void pair(Census& c, const std::string& a, const std::string& b) {
  for (auto& e : c.entries) {
    if (e.label == a) e.partner = b;
    if (e.label == b) e.partner = a;
  }
}

Census build_a4() {
  Census c{Algebra::A4, {}, false};
  const auto two = ModuleType::two;
  auto& e = c.entries;
  e.push_back(iso("(V_Zbeta^+)^0", "", "cover_A4", "U1^0", 0, 1, 1, "the algebra itself"));
  e.push_back(iso("(V_Zbeta^+)^1", "", "cover_A4", "U1^1", 4, 1, 1));
  e.push_back(iso("(V_Zbeta^+)^2", "", "cover_A4", "U1^2", 4, 1, 1));
  e.push_back(lat("V_Zbeta^-", "", 4, L::minus(), ModuleType::one, kUntwisted, 1, 3, 1, "K4",
                  "equals the U3 isotypic piece"));
  e.push_back(lat("V_{Zbeta+beta/8}", "", 4, L::coset(1), two, kTau, rational(1, 16), 6, 1, "K4"));
  e.push_back(lat("V_{Zbeta+3beta/8}", "", 4, L::coset(3), two, kTau, rational(9, 16), 6, 1, "K4"));
  // sigma-twisted sector, then sigma^2; the sign of r fixes the sector
  const std::vector<std::pair<std::string, long>> t1{{"W^{1,T1,0}", 1},  {"W^{1,T1,1}", -5}, {"W^{1,T1,2}", 7},
                                                     {"W^{2,T1,0}", -2}, {"W^{2,T1,1}", 4},  {"W^{2,T1,2}", -8}};
  for (const auto& [alias, r] : t1)
    e.push_back(lat(gamma_label(r), alias, 9, L::coset(r), two, kSigma, rational(r * r, 36), 4, 2, "Z3"));
  for (const auto& [alias, r] : t1) {
    std::string a = alias;
    a.replace(a.find("T1"), 2, "T2");
    e.push_back(lat(gamma_label(-r), a, 9, L::coset(-r), two, kSigma2, rational(r * r, 36), 4, 3, "Z3"));
  }
  e.push_back(iso("(V_{Zbeta+beta/4})^0", "", "cover_A4", "U2^0", rational(1, 4), 2, 4));
  e.push_back(iso("(V_{Zbeta+beta/4})^1", "", "cover_A4", "U2^1", rational(9, 4), 2, 4));
  e.push_back(iso("(V_{Zbeta+beta/4})^2", "", "cover_A4", "U2^2", rational(9, 4), 2, 4));
  pair(c, "(V_Zbeta^+)^1", "(V_Zbeta^+)^2");
  pair(c, "(V_{Zbeta+beta/4})^1", "(V_{Zbeta+beta/4})^2");
  for (long r : {1, 2, 4, 5, 7, 8}) pair(c, gamma_label(r), gamma_label(-r));
  return c;
}

Census build_s4() {
  Census c{Algebra::S4, {}, false};
  const auto two = ModuleType::two;
  auto& e = c.entries;
  e.push_back(iso("((V_Zbeta^+)^0)^+", "M^0", "cover_S4", "W1^0", 0, 1, 1, "the algebra itself"));
  e.push_back(iso("((V_Zbeta^+)^0)^-", "M^1", "cover_S4", "W1^1", 9, 1, 1, "weight from the isotypic character"));
  e.push_back(iso("(V_Zbeta^+)^1", "M^2", "cover_S4", "W2^0", 4, 2, 1));
  e.push_back(iso("(V_Zbeta^-)^+", "M^3", "cover_S4", "W3^0", 1, 3, 1, "equals V_Zzeta^-"));
  e.push_back(iso("(V_Zbeta^-)^-", "M^4", "cover_S4", "W3^1", 4, 3, 1, "equals V_{Zzeta+zeta/2}^-"));
  e.push_back(iso("((V_{Zbeta+beta/4})^0)^+", "M^6", "cover_S4", "W2^1", rational(1, 4), 2, 2));
  e.push_back(iso("((V_{Zbeta+beta/4})^0)^-", "M^7", "cover_S4", "W2^2", rational(25, 4), 2, 2,
                  "weight from the isotypic character"));
  e.push_back(iso("(V_{Zbeta+beta/4})^1", "M^8", "cover_S4", "W4", rational(9, 4), 4, 2));
  // V_{Zbeta+beta/8} and V_{Zbeta+3beta/8} split into two zeta-cosets each;
  // + marks the lighter one
  e.push_back(lat("(V_{Zbeta+beta/8})^+", "M^9", 16, L::coset(2), two, kTau, rational(1, 16), 6, 3, "D4"));
  e.push_back(lat("(V_{Zbeta+beta/8})^-", "M^10", 16, L::coset(14), two, kTau, rational(49, 16), 6, 3, "D4"));
  e.push_back(lat("(V_{Zbeta+3beta/8})^+", "M^11", 16, L::coset(6), two, kTau, rational(9, 16), 6, 3, "D4"));
  e.push_back(lat("(V_{Zbeta+3beta/8})^-", "M^12", 16, L::coset(10), two, kTau, rational(25, 16), 6, 3, "D4"));
  int m = 13;
  for (long r : {1, 2, 4, 5, 7, 8})
    e.push_back(lat(gamma_label(r), "M^" + std::to_string(m++), 9, L::coset(r), two, kSigma, rational(r * r, 36), 8,
                    4, "D3", "label range corrected: six modules"));
  for (long s = 1; s < 16; s += 2)
    e.push_back(lat("V_{Zzeta+" + std::to_string(s) + "/32zeta}", "M^" + std::to_string(m++), 16, L::coset(s), two,
                    kRho, rational(s * s, 64), 6, 4, "D4", "label range corrected: eight modules"));
  e.push_back(lat("(V_Zzeta^T2)^+", "M^27", 16, L::twisted(2, 1), two, kRho, rational(1, 16), 12, 4, "D4",
                  "3 x sqrt(16)"));
  e.push_back(lat("(V_Zzeta^T2)^-", "M^28", 16, L::twisted(2, -1), two, kRho, rational(9, 16), 12, 4, "D4",
                  "3 x sqrt(16)"));
  return c;
}

Census build_a5() {
  Census c{Algebra::A5, {}, true};
  const auto two = ModuleType::two;
  auto& e = c.entries;
  const std::string computed = "weight from the isotypic character";
  e.push_back(iso("T1", "", "cover_A5", "X1", 0, 1, 1, "the algebra itself"));
  e.push_back(iso("T2^0", "", "cover_A5", "X2^0", rational(1, 4), 2, 1, computed));
  e.push_back(iso("T2^1", "", "cover_A5", "X2^1", rational(49, 4), 2, 1, computed));
  e.push_back(iso("T3^0", "", "cover_A5", "X3^0", 1, 3, 1, computed));
  e.push_back(iso("T3^1", "", "cover_A5", "X3^1", 9, 3, 1, computed));
  e.push_back(iso("T4^0", "", "cover_A5", "X4^0", 9, 4, 1, computed));
  e.push_back(iso("T4^1", "", "cover_A5", "X4^1", rational(9, 4), 4, 1, computed));
  e.push_back(iso("T5", "", "cover_A5", "X5", 4, 5, 1, computed));
  e.push_back(iso("T6", "", "cover_A5", "X6", rational(25, 4), 6, 1, computed));
  e.push_back(lat("V_{Zbeta+beta/8}", "", 4, L::coset(1), two, kTau, rational(1, 16), 30, 2, "K4"));
  e.push_back(lat("V_{Zbeta+3beta/8}", "", 4, L::coset(3), two, kTau, rational(9, 16), 30, 2, "K4"));
  for (long r : {1, 2, 4, 5, 7, 8})
    e.push_back(lat(gamma_label(r), "", 9, L::coset(r), two, kOrder3, rational(r * r, 36), 20, 2, "S3"));
  for (long t = 1; t < 25; ++t) {
    if (t % 5 == 0) continue;
    e.push_back(lat("V_{Zmu+" + std::to_string(t) + "/50mu}", "", 25, L::coset(t), two, kOrder5,
                    rational(t * t, 100), 12, 2, "D5"));
  }
  return c;
}

}  // namespace

const CensusEntry& Census::find(std::string_view label) const {
  for (const auto& e : entries)
    if (e.label == label || (!e.alias.empty() && e.alias == label)) return e;
  throw std::out_of_range("census " + std::string(orbchar::to_string(algebra)) + " has no entry " +
                          std::string(label));
}

const Census& census(Algebra a) {
  static const Census a4 = build_a4();
  static const Census s4 = build_s4();
  static const Census a5 = build_a5();
  switch (a) {
    case Algebra::A4: return a4;
    case Algebra::S4: return s4;
    case Algebra::A5: return a5;
  }
  throw std::invalid_argument("census: unknown algebra");
}

QuantumDim qdim_exact(Algebra a, std::string_view label) { return census(a).find(label).qdim; }

long glob(Algebra a) {
  long s = 0;
  for (const auto& e : census(a).entries) s += e.qdim.squared();
  return s;
}

long glob_base() {
  // V_{L_2} and V_{L_2 + alpha/2}, both of quantum dimension 1
  return lattice_qdim(1, L::coset(0), false).squared() + lattice_qdim(1, L::coset(1), false).squared();
}

long glob_lattice(long k, bool orbifold, QuantumDim twisted_qdim) {
  RankOneLattice lattice(k);
  long s = 0;
  if (!orbifold) {
    for (long j = -k + 1; j <= k; ++j) s += lattice_qdim(k, L::coset(j), false).squared();
    return s;
  }
  // up to isomorphism: coset j ~ -j over V_L^+
  for (const auto& l : all_labels(lattice)) {
    if (l.kind == L::Kind::coset && l.j <= 0) continue;
    if (l.kind == L::Kind::twisted) s += twisted_qdim.squared();
    else s += lattice_qdim(k, l, true).squared();
  }
  return s;
}

SubgroupLattice subgroup_lattice(std::string_view subgroup) {
  if (subgroup == "K4") return {4, true};
  if (subgroup == "Z3") return {9, false};
  if (subgroup == "Z5") return {25, false};
  if (subgroup == "S3" || subgroup == "D3") return {9, true};
  if (subgroup == "D4") return {16, true};
  if (subgroup == "D5") return {25, true};
  throw std::invalid_argument("no lattice description for subgroup " + std::string(subgroup));
}

Character entry_character(const CensusEntry& e, long order) {
  if (const auto* l = std::get_if<LatticeRecipe>(&e.recipe)) return module_character(l->k, l->label, order);
  const auto& i = std::get<IsotypicRecipe>(e.recipe);
  return isotypic_character(group_data(i.cover), i.irrep, order);
}

std::vector<NumericQdim> qdim_numeric_all(Algebra a, double y, long order) {
  const Census& c = census(a);
  NumericEvaluator ev(y, order);
  const Complex vac = ev(entry_character(c.entries.front(), order));
  if (!(std::abs(vac) > 0.0) || !std::isfinite(std::abs(vac)))
    throw std::domain_error("qdim_numeric: vacuum character evaluates to " + std::to_string(std::abs(vac)));
  std::vector<NumericQdim> out;
  for (const auto& e : c.entries) out.push_back({e.label, (ev(entry_character(e, order)) / vac).real(), e.qdim});
  return out;
}

double qdim_numeric(Algebra a, std::string_view label, double y, long order) {
  const Census& c = census(a);
  const CensusEntry& e = c.find(label);
  NumericEvaluator ev(y, order);
  const Complex vac = ev(entry_character(c.entries.front(), order));
  if (!(std::abs(vac) > 0.0) || !std::isfinite(std::abs(vac)))
    throw std::domain_error("qdim_numeric: vacuum character evaluates to " + std::to_string(std::abs(vac)));
  return (ev(entry_character(e, order)) / vac).real();
}

bool CheckReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const ReportLine& l) { return l.ok; });
}

CheckReport weight_check(Algebra a, long order) {
  CheckReport r;
  long skipped = 0, checked = 0;
  for (const auto& e : census(a).entries) {
    if (e.weight > order) {
      ++skipped;
      continue;
    }
    ++checked;
    Rational w;
    try {
      w = min_exponent(entry_character(e, order).expand()) - vacuum_shift();
    } catch (const std::exception& ex) {
      r.lines.push_back({"weight of " + e.label, false, ex.what()});
      continue;
    }
    if (w != e.weight)
      r.lines.push_back({"weight of " + e.label, false, "catalogued " + to_string(e.weight) + ", character gives " +
                                                            to_string(w)});
  }
  r.lines.insert(r.lines.begin(), {std::string(to_string(a)) + " weights", true,
                                   std::to_string(checked) + " reproduced exactly, " + std::to_string(skipped) +
                                       " beyond order " + std::to_string(order)});
  if (r.lines.size() > 1) r.lines.front().ok = false;
  return r;
}

CheckReport census_shape_check(Algebra a) {
  const Census& c = census(a);
  CheckReport r;
  const std::map<Algebra, std::pair<long, long>> want{
      {Algebra::A4, {21, 7}}, {Algebra::S4, {28, 8}}, {Algebra::A5, {37, 9}}};
  const auto [n, n_one] = want.at(a);
  long ones = 0;
  for (const auto& e : c.entries) ones += e.type == ModuleType::one;
  r.lines.push_back({"entry count", long(c.entries.size()) == n,
                     std::to_string(c.entries.size()) + " entries, expected " + std::to_string(n)});
  r.lines.push_back({"type one count", ones == n_one,
                     std::to_string(ones) + " type one (cover irreps: " + std::to_string(n_one) + "), " +
                         std::to_string(long(c.entries.size()) - ones) + " type two"});
  std::set<std::string> recipes, labels;
  bool vacuum_ok = true, qdim_ok = true;
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    recipes.insert(describe(e.recipe));
    labels.insert(e.label);
    if ((sgn(e.weight) == 0) != (i == 0) || sgn(e.weight) < 0) vacuum_ok = false;
    if (e.qdim.squared() < 1) qdim_ok = false;
  }
  r.lines.push_back({"distinct recipes and labels", recipes.size() == c.entries.size() && labels.size() == c.entries.size(),
                     std::to_string(recipes.size()) + " recipes, " + std::to_string(labels.size()) + " labels"});
  r.lines.push_back({"weight 0 only for the vacuum", vacuum_ok, vacuum_ok ? "holds" : "violated"});
  r.lines.push_back({"qdim >= 1", qdim_ok, qdim_ok ? "holds" : "violated"});
  return r;
}

CheckReport index_rule_check(Algebra a) {
  CheckReport r;
  const Census& c = census(a);
  const long order = group_order(a);
  for (const auto& e : c.entries) {
    if (e.subgroup.empty()) continue;
    const auto& l = std::get<LatticeRecipe>(e.recipe);
    const SubgroupLattice sub = subgroup_lattice(e.subgroup);
    const long index = order / group_data(e.subgroup).order;
    ReportLine line{e.label, true, ""};
    if (sub.k != l.k) {
      line.ok = false;
      line.detail = "recipe lattice k=" + std::to_string(l.k) + " but " + e.subgroup + " fixes k=" +
                    std::to_string(sub.k);
    } else {
      QuantumDim h = lattice_qdim(l.k, l.label, sub.orbifold);
      line.ok = h * index == e.qdim;
      line.detail = "[" + std::string(to_string(a)) + ":" + e.subgroup + "] x " + h.to_string() + " = " +
                    (h * index).to_string() + ", catalogued " + e.qdim.to_string();
    }
    r.lines.push_back(std::move(line));
  }
  return r;
}

CheckReport type_one_check(Algebra a) {
  CheckReport r;
  std::vector<long> got;
  for (const auto& e : census(a).entries) {
    if (e.type != ModuleType::one) continue;
    if (e.qdim.radicand() != 1) {
      r.lines.push_back({e.label, false, "type one qdim is irrational"});
      continue;
    }
    got.push_back(e.qdim.coeff());
    if (const auto* i = std::get_if<IsotypicRecipe>(&e.recipe)) {
      const auto& g = group_data(i->cover);
      const long dim = g.irreps[g.irrep_index(i->irrep)].dim;
      if (dim != e.qdim.coeff())
        r.lines.push_back({e.label, false, "qdim " + e.qdim.to_string() + " but dim " + i->irrep + " = " +
                                               std::to_string(dim)});
    }
  }
  std::vector<long> dims = group_data(cover_name(a)).dims();
  std::sort(got.begin(), got.end());
  std::sort(dims.begin(), dims.end());
  auto show = [](const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "{" + s + "}";
  };
  r.lines.insert(r.lines.begin(), {"type one qdims = cover irrep dims", got == dims,
                                   show(got) + " vs " + show(dims)});
  return r;
}

namespace {

long count_sector(const Census& c, std::string_view sector) {
  return std::count_if(c.entries.begin(), c.entries.end(), [&](const CensusEntry& e) { return e.sector == sector; });
}

// cosets of V_{Z T alpha} that do not occur in V_{Z alpha/2}: those with j not
// a multiple of T
long cyclic_type_two(long T) {
  RankOneLattice lattice(T * T);
  std::set<long> occurring;
  for (long i = 0; i < T; ++i) {
    occurring.insert(lattice.reduce(2 * T * i));      // V_{L_2}
    occurring.insert(lattice.reduce(T + 2 * T * i));  // V_{L_2 + alpha/2}
  }
  return lattice.norm() - long(occurring.size());
}

}  // namespace

CheckReport stable_count_check(long order) {
  CheckReport r;
  const Rational w0 = min_exponent(char_module(1, L::coset(0), order)) - vacuum_shift();
  const Rational w1 = min_exponent(char_module(1, L::coset(1), order)) - vacuum_shift();
  r.lines.push_back({"V_L2-modules are g-stable", w0 != w1,
                     "weights " + to_string(w0) + " and " + to_string(w1) +
                         (w0 != w1 ? " differ, so every automorphism fixes both; 2 twisted modules per sector"
                                   : " coincide")});
  const long per_sector = w0 != w1 ? 2 : 0;
  r.lines.push_back({"identity sector", per_sector == 2, std::to_string(per_sector) + " irreducible V_L2-modules"});

  for (long T : {3, 5}) {
    const long lattice_count = cyclic_type_two(T);
    const long predicted = (T - 1) * per_sector * T;
    r.lines.push_back({"Z" + std::to_string(T) + " type two", lattice_count == predicted,
                       std::to_string(lattice_count) + " cosets of V_{Z" + std::to_string(T) +
                           "alpha} outside V_{Zalpha/2}; " + std::to_string(T - 1) + " sectors x " +
                           std::to_string(per_sector) + " modules x " + std::to_string(T) + " = " +
                           std::to_string(predicted)});
  }

  const Census& a4 = census(Algebra::A4);
  for (const char* sector : {"sigma-twisted", "sigma^2-twisted"}) {
    const long n = count_sector(a4, sector);
    r.lines.push_back({std::string("A4 ") + sector, n == per_sector * 3,
                       std::to_string(n) + " entries = " + std::to_string(per_sector) + " modules x 3"});
  }

  // rho-stable A4-modules: those whose character no other A4 entry shares
  std::vector<QSeries> chars;
  for (const auto& e : a4.entries) chars.push_back(entry_character(e, std::min(order, 40L)).expand());
  long unique = 0, unpaired = 0, paired = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    bool shared = false;
    for (std::size_t j = 0; j < chars.size() && !shared; ++j)
      shared = i != j && !first_difference(chars[i], chars[j]);
    unique += !shared;
    if (a4.entries[i].partner.empty()) ++unpaired; else ++paired;
  }
  r.lines.push_back({"rho-stable A4-modules", unique == 5 && unique == unpaired,
                     std::to_string(unique) + " A4 entries with a unique character, " + std::to_string(unpaired) +
                         " without a catalogued partner"});
  const Census& s4 = census(Algebra::S4);
  const long rho = count_sector(s4, "rho-twisted");
  r.lines.push_back({"S4 rho-twisted", rho == 2 * unique,
                     std::to_string(rho) + " entries = " + std::to_string(unique) + " stable modules x 2"});
  const long s4_total = 2 * unpaired + paired / 2 + 2 * unique;
  r.lines.push_back({"S4 total", s4_total == long(s4.entries.size()),
                     "2 x " + std::to_string(unpaired) + " split + " + std::to_string(paired) + "/2 merged + " +
                         std::to_string(rho) + " rho-twisted = " + std::to_string(s4_total)});

  const Census& a5 = census(Algebra::A5);
  struct Sector {
    std::string subgroup;
    long type_two;
    std::string sector;
  };
  const std::vector<Sector> sectors{{"K4", 6, "tau-twisted"},
                                    {"Z3", cyclic_type_two(3), "order-3-twisted"},
                                    {"Z5", cyclic_type_two(5), "order-5-twisted"}};
  long total = long(group_data("cover_A5").irreps.size());
  for (const auto& s : sectors) {
    const auto& facts = normalizer_centralizer_facts();
    auto f = std::find_if(facts.begin(), facts.end(), [&](const SubgroupFact& x) { return x.subgroup == s.subgroup; });
    const long orbit = group_data(f->normalizer).order / group_data(f->centralizer).order;
    const long n = count_sector(a5, s.sector);
    total += s.type_two / orbit;
    r.lines.push_back({"A5 " + s.sector, n == s.type_two / orbit,
                       std::to_string(s.type_two) + " type two over " + s.subgroup + " / [" + f->normalizer + ":" +
                           f->centralizer + "] = " + std::to_string(s.type_two / orbit) + ", census has " +
                           std::to_string(n)});
  }
  r.lines.push_back({"A5 total", total == long(a5.entries.size()),
                     std::to_string(total) + " = 9 type one + sector counts"});
  return r;
}

CheckReport pairing_check(Algebra a, long order) {
  CheckReport r;
  const Census& c = census(a);
  auto equal_chars = [order](const Character& x, const Character& y) {
    return !first_difference(x.expand(), y.expand());
  };
  long pairs = 0;
  for (const auto& e : c.entries) {
    if (e.partner.empty()) continue;
    const CensusEntry& p = c.find(e.partner);
    const bool ok = p.partner == e.label && p.qdim == e.qdim &&
                    equal_chars(entry_character(e, order), entry_character(p, order));
    ++pairs;
    if (!ok) r.lines.push_back({e.label + " ~ " + p.label, false, "characters or qdims differ"});
  }
  std::string summary = std::to_string(pairs / 2) + " catalogued pairs with equal characters and qdims";

  if (a == Algebra::S4 || a == Algebra::A5) {
    // every gamma entry absorbs the +-r pair of the order-3 census
    long merged = 0, found = 0;
    for (const auto& e : c.entries) {
      const auto* l = std::get_if<LatticeRecipe>(&e.recipe);
      if (!l || l->k != 9) continue;
      ++merged;
      for (long sgn_r : {1, -1}) {
        Character z3 = module_character(9, L::coset(sgn_r * l->label.j), order);
        if (equal_chars(z3, entry_character(e, order))) ++found;
      }
    }
    r.lines.push_back({"gamma entries from the order-3 census", found == 12 && merged == 6,
                       std::to_string(found) + " order-3 entries -> " + std::to_string(merged) + " entries"});
  }
  if (a == Algebra::S4) {
    // the two zeta-cosets of V_{Zbeta+beta/8} and V_{Zbeta+3beta/8}
    const Census& a4 = census(Algebra::A4);
    for (const auto& [whole, plus, minus] :
         std::vector<std::tuple<std::string, std::string, std::string>>{
             {"V_{Zbeta+beta/8}", "M^9", "M^10"}, {"V_{Zbeta+3beta/8}", "M^11", "M^12"}}) {
      const bool ok = equal_chars(entry_character(a4.find(whole), order),
                                  entry_character(c.find(plus), order) + entry_character(c.find(minus), order));
      r.lines.push_back({whole + " = " + plus + " + " + minus, ok, ok ? "equal" : "characters differ"});
    }
  }
  if (a == Algebra::A5) {
    long merged = 0, found = 0;
    for (const auto& e : c.entries) {
      const auto* l = std::get_if<LatticeRecipe>(&e.recipe);
      if (!l || l->k != 25) continue;
      ++merged;
      for (long sgn_t : {1, -1})
        if (equal_chars(module_character(25, L::coset(sgn_t * l->label.j), order), entry_character(e, order)))
          ++found;
    }
    const long z5 = cyclic_type_two(5);
    r.lines.push_back({"mu entries from the order-5 census", found == z5 && merged == z5 / 2,
                       std::to_string(found) + " of " + std::to_string(z5) + " order-5 entries -> " +
                           std::to_string(merged) + " entries"});
  }
  r.lines.insert(r.lines.begin(), {std::string(to_string(a)) + " pairs", true, summary});
  for (std::size_t i = 1; i < r.lines.size(); ++i)
    if (!r.lines[i].ok) r.lines.front().ok = false;
  return r;
}

}  // namespace orbchar
