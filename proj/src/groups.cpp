#include "orbchar/groups.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace orbchar {

using C = std::complex<double>;

double Angle::radians() const { return to_double(over_pi) * std::numbers::pi; }

Rational Angle::folded() const {
  Rational a = over_pi - 2 * floor_long(over_pi / 2);
  return a > 1 ? Rational(2 - a) : a;
}

std::size_t GroupData::irrep_index(std::string_view label) const {
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].label == label) return i;
  throw std::invalid_argument("group " + name + " has no irrep " + std::string(label));
}

std::vector<long> GroupData::dims() const {
  std::vector<long> d;
  for (const auto& r : irreps) d.push_back(r.dim);
  return d;
}

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
const double kPhiBar = (1.0 - std::sqrt(5.0)) / 2.0;
const double kSqrt2 = std::sqrt(2.0);
const C kW = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
const C kW2 = std::conj(kW);

ConjugacyClass cls(std::string label, long size, long num, long den) {
  return {std::move(label), size, Angle{rational(num, den)}};
}

Irrep rep(std::string label, std::vector<C> row) {
  return {std::move(label), std::lround(row.front().real()), std::move(row)};
}

GroupData cyclic(std::string name, long n) {
  GroupData g{name, n, {}, {}, {}};
  for (long m = 0; m < n; ++m) g.classes.push_back(cls(m == 0 ? "e" : "g^" + std::to_string(m), 1, 2 * m, n));
  for (long j = 0; j < n; ++j) {
    std::vector<C> row;
    for (long m = 0; m < n; ++m) row.push_back(std::polar(1.0, 2.0 * std::numbers::pi * double(j * m) / double(n)));
    row[0] = 1.0;
    g.irreps.push_back(rep("chi" + std::to_string(j), row));
  }
  return g;
}

std::map<std::string, GroupData, std::less<>> build_tables() {
  std::map<std::string, GroupData, std::less<>> t;

  t["Z3"] = cyclic("Z3", 3);
  t["Z5"] = cyclic("Z5", 5);

  t["K4"] = {"K4", 4,
             {cls("e", 1, 0, 1), cls("a", 1, 1, 1), cls("b", 1, 1, 1), cls("c", 1, 1, 1)},
             {rep("1", {1, 1, 1, 1}), rep("a", {1, 1, -1, -1}), rep("b", {1, -1, 1, -1}), rep("c", {1, -1, -1, 1})},
             {}};

  t["S3"] = {"S3", 6,
             {cls("e", 1, 0, 1), cls("(123)", 2, 2, 3), cls("(12)", 3, 1, 1)},
             {rep("1", {1, 1, 1}), rep("sgn", {1, 1, -1}), rep("2", {2, -1, 0})},
             {}};

  t["D3"] = {"D3", 6,
             {cls("e", 1, 0, 1), cls("r", 2, 2, 3), cls("s", 3, 1, 1)},
             {rep("A1", {1, 1, 1}), rep("A2", {1, 1, -1}), rep("E", {2, -1, 0})},
             {}};

  t["D4"] = {"D4", 8,
             {cls("e", 1, 0, 1), cls("r^2", 1, 1, 1), cls("r", 2, 1, 2), cls("s", 2, 1, 1), cls("sr", 2, 1, 1)},
             {rep("A1", {1, 1, 1, 1, 1}), rep("A2", {1, 1, 1, -1, -1}), rep("B1", {1, 1, -1, 1, -1}),
              rep("B2", {1, 1, -1, -1, 1}), rep("E", {2, -2, 0, 0, 0})},
             {}};

  t["D5"] = {"D5", 10,
             {cls("e", 1, 0, 1), cls("r", 2, 2, 5), cls("r^2", 2, 4, 5), cls("s", 5, 1, 1)},
             {rep("A1", {1, 1, 1, 1}), rep("A2", {1, 1, 1, -1}), rep("E1", {2, -kPhiBar, -kPhi, 0}),
              rep("E2", {2, -kPhi, -kPhiBar, 0})},
             {}};

  t["A4"] = {"A4", 12,
             {cls("e", 1, 0, 1), cls("(12)(34)", 3, 1, 1), cls("(123)", 4, 2, 3), cls("(132)", 4, 4, 3)},
             {rep("1", {1, 1, 1, 1}), rep("1'", {1, 1, kW, kW2}), rep("1''", {1, 1, kW2, kW}),
              rep("3", {3, -1, 0, 0})},
             {}};

  t["S4"] = {"S4", 24,
             {cls("e", 1, 0, 1), cls("(12)(34)", 3, 1, 1), cls("(123)", 8, 2, 3), cls("(1234)", 6, 1, 2),
              cls("(12)", 6, 1, 1)},
             {rep("1", {1, 1, 1, 1, 1}), rep("sgn", {1, 1, 1, -1, -1}), rep("2", {2, 2, -1, 0, 0}),
              rep("3", {3, -1, 0, -1, 1}), rep("3'", {3, -1, 0, 1, -1})},
             {}};

  t["A5"] = {"A5", 60,
             {cls("e", 1, 0, 1), cls("(12)(34)", 15, 1, 1), cls("(123)", 20, 2, 3), cls("(12345)", 12, 2, 5),
              cls("(13524)", 12, 4, 5)},
             {rep("1", {1, 1, 1, 1, 1}), rep("3", {3, -1, 0, kPhi, kPhiBar}), rep("3'", {3, -1, 0, kPhiBar, kPhi}),
              rep("4", {4, 0, 1, -1, -1}), rep("5", {5, 1, -1, 0, 0})},
             {}};

  // SU(2) preimages; an element with eigenvalues e^{+-i theta/2} carries theta
  t["cover_A4"] = {"cover_A4", 24,
                   {cls("1", 1, 0, 1), cls("-1", 1, 2, 1), cls("4", 6, 1, 1), cls("6a", 4, 2, 3),
                    cls("6b", 4, 2, 3), cls("3a", 4, 4, 3), cls("3b", 4, 4, 3)},
                   {rep("U1^0", {1, 1, 1, 1, 1, 1, 1}),
                    rep("U1^1", {1, 1, 1, kW, kW2, kW, kW2}),
                    rep("U1^2", {1, 1, 1, kW2, kW, kW2, kW}),
                    rep("U3", {3, 3, -1, 0, 0, 0, 0}),
                    rep("U2^0", {2, -2, 0, 1, 1, -1, -1}),
                    rep("U2^1", {2, -2, 0, kW, kW2, -kW, -kW2}),
                    rep("U2^2", {2, -2, 0, kW2, kW, -kW2, -kW})},
                   "A4"};

  t["cover_S4"] = {"cover_S4", 48,
                   {cls("1", 1, 0, 1), cls("-1", 1, 2, 1), cls("4", 6, 1, 1), cls("6", 8, 2, 3), cls("3", 8, 4, 3),
                    cls("8a", 6, 1, 2), cls("8b", 6, 3, 2), cls("4'", 12, 1, 1)},
                   {rep("W1^0", {1, 1, 1, 1, 1, 1, 1, 1}),
                    rep("W1^1", {1, 1, 1, 1, 1, -1, -1, -1}),
                    rep("W2^0", {2, 2, 2, -1, -1, 0, 0, 0}),
                    rep("W3^0", {3, 3, -1, 0, 0, 1, 1, -1}),
                    rep("W3^1", {3, 3, -1, 0, 0, -1, -1, 1}),
                    rep("W2^1", {2, -2, 0, 1, -1, kSqrt2, -kSqrt2, 0}),
                    rep("W2^2", {2, -2, 0, 1, -1, -kSqrt2, kSqrt2, 0}),
                    rep("W4", {4, -4, 0, -1, 1, 0, 0, 0})},
                   "S4"};

  t["cover_A5"] = {"cover_A5", 120,
                   {cls("1", 1, 0, 1), cls("-1", 1, 2, 1), cls("4", 30, 1, 1), cls("6", 20, 2, 3), cls("3", 20, 4, 3),
                    cls("10a", 12, 2, 5), cls("10b", 12, 4, 5), cls("5a", 12, 6, 5), cls("5b", 12, 8, 5)},
                   {rep("X1", {1, 1, 1, 1, 1, 1, 1, 1, 1}),
                    rep("X2^0", {2, -2, 0, 1, -1, kPhi, -kPhiBar, kPhiBar, -kPhi}),
                    rep("X2^1", {2, -2, 0, 1, -1, kPhiBar, -kPhi, kPhi, -kPhiBar}),
                    rep("X3^0", {3, 3, -1, 0, 0, kPhi, kPhiBar, kPhiBar, kPhi}),
                    rep("X3^1", {3, 3, -1, 0, 0, kPhiBar, kPhi, kPhi, kPhiBar}),
                    rep("X4^0", {4, 4, 0, 1, 1, -1, -1, -1, -1}),
                    rep("X4^1", {4, -4, 0, -1, 1, 1, -1, 1, -1}),
                    rep("X5", {5, 5, 1, -1, -1, 0, 0, 0, 0}),
                    rep("X6", {6, -6, 0, 0, 0, -1, 1, -1, 1})},
                   "A5"};
  return t;
}

const std::map<std::string, GroupData, std::less<>>& tables() {
  static const auto t = build_tables();
  return t;
}

}  // namespace

const std::vector<std::string>& group_names() {
  static const std::vector<std::string> names{"A4", "S4", "A5", "K4", "Z3", "Z5", "S3",
                                              "D3", "D4", "D5", "cover_A4", "cover_S4", "cover_A5"};
  return names;
}

const GroupData& group_data(std::string_view name) {
  auto it = tables().find(name);
  if (it == tables().end()) throw std::invalid_argument("unknown group: " + std::string(name));
  return it->second;
}

std::vector<std::string> validate(const GroupData& g, double tol) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& what) { bad.push_back(g.name + ": " + what); };
  const std::size_t nc = g.classes.size();
  long size_sum = 0, dim_sq = 0;
  for (const auto& c : g.classes) {
    size_sum += c.size;
    if (sgn(c.angle.over_pi) < 0 || c.angle.over_pi >= (g.is_cover() ? 4 : 2))
      fail("class " + c.label + " angle out of range");
  }
  if (size_sum != g.order) fail("class sizes sum to " + std::to_string(size_sum));
  for (const auto& r : g.irreps) {
    dim_sq += r.dim * r.dim;
    if (r.row.size() != nc) {
      fail("irrep " + r.label + " row has wrong length");
      return bad;
    }
    if (std::abs(r.row[0] - C(double(r.dim), 0.0)) > tol) fail("irrep " + r.label + " identity value != dim");
  }
  if (dim_sq != g.order) fail("sum of squared dimensions is " + std::to_string(dim_sq));
  if (g.irreps.size() != nc) fail("irrep count differs from class count");
  for (std::size_t i = 0; i < g.irreps.size(); ++i)
    for (std::size_t j = 0; j < g.irreps.size(); ++j) {
      C ip(0.0, 0.0);
      for (std::size_t c = 0; c < nc; ++c)
        ip += double(g.classes[c].size) * g.irreps[i].row[c] * std::conj(g.irreps[j].row[c]);
      ip /= double(g.order);
      if (std::abs(ip - C(i == j ? 1.0 : 0.0, 0.0)) > tol)
        fail("rows " + g.irreps[i].label + ", " + g.irreps[j].label + " not orthonormal");
    }
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b) {
      C s(0.0, 0.0);
      for (const auto& r : g.irreps) s += r.row[a] * std::conj(r.row[b]);
      double want = a == b ? double(g.order) / double(g.classes[a].size) : 0.0;
      if (std::abs(s - C(want, 0.0)) > tol)
        fail("columns " + g.classes[a].label + ", " + g.classes[b].label + " not orthogonal");
    }
  return bad;
}

std::vector<std::string> cover_fiber_check(const GroupData& cover, const GroupData& base) {
  std::vector<std::string> bad;
  if (cover.order != 2 * base.order) bad.push_back(cover.name + ": order is not twice " + base.name);
  std::map<Rational, long> up, down;
  for (const auto& c : cover.classes) up[c.angle.folded()] += c.size;
  for (const auto& c : base.classes) down[c.angle.folded()] += c.size;
  for (const auto& [angle, n] : down) {
    long m = up.count(angle) ? up[angle] : 0;
    if (m != 2 * n)
      bad.push_back(cover.name + ": fiber over angle " + to_string(angle) + "pi has " + std::to_string(m) +
                    " elements, expected " + std::to_string(2 * n));
  }
  for (const auto& [angle, n] : up)
    if (!down.count(angle)) bad.push_back(cover.name + ": angle " + to_string(angle) + "pi has no base class");
  return bad;
}

const std::vector<SubgroupFact>& normalizer_centralizer_facts() {
  static const std::vector<SubgroupFact> facts{
      {"K4", "K4", "A4", "A5"},
      {"Z3", "Z3", "S3", "A5"},
      {"Z5", "Z5", "D5", "A5"},
  };
  return facts;
}

nlohmann::json to_json(const GroupData& g) {
  nlohmann::json j;
  j["name"] = g.name;
  j["order"] = g.order;
  if (g.is_cover()) j["base"] = g.base;
  j["classes"] = nlohmann::json::array();
  for (const auto& c : g.classes)
    j["classes"].push_back({{"label", c.label}, {"size", c.size}, {"angle_over_pi", to_string(c.angle.over_pi)}});
  j["irreps"] = nlohmann::json::array();
  for (const auto& r : g.irreps) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& z : r.row) row.push_back({z.real(), z.imag()});
    j["irreps"].push_back({{"label", r.label}, {"dim", r.dim}, {"character", row}});
  }
  return j;
}

}  // namespace orbchar
