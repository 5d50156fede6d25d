#include "orbchar/lattice.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace orbchar {

RankOneLattice::RankOneLattice(long k) : k_(k) {
  if (k < 1) throw std::invalid_argument("RankOneLattice: k must be positive");
}

long RankOneLattice::reduce(long j) const {
  const long n = norm();
  long r = ((j % n) + n) % n;  // [0, 2k)
  return r > k_ ? r - n : r;
}

std::string LatticeModuleLabel::to_string() const {
  switch (kind) {
    case Kind::coset: return "coset(" + std::to_string(j) + ")";
    case Kind::plus: return "plus";
    case Kind::minus: return "minus";
    case Kind::half_plus: return "half+";
    case Kind::half_minus: return "half-";
    case Kind::twisted: return "T" + std::to_string(s) + (parity > 0 ? "+" : "-");
  }
  return "?";
}

LatticeModuleLabel LatticeModuleLabel::parse(std::string_view text) {
  std::string t(text);
  auto bad = [&] { return std::invalid_argument("unknown lattice module label: " + t); };
  if (t == "plus" || t == "+") return plus();
  if (t == "minus" || t == "-") return minus();
  if (t == "half+") return half_coset(1);
  if (t == "half-") return half_coset(-1);
  if (t.size() == 3 && t[0] == 'T' && (t[1] == '1' || t[1] == '2') && (t[2] == '+' || t[2] == '-'))
    return twisted(t[1] - '0', t[2] == '+' ? 1 : -1);
  std::string num = t;
  if (t.rfind("coset(", 0) == 0 && t.back() == ')') num = t.substr(6, t.size() - 7);
  if (num.empty()) throw bad();
  std::size_t used = 0;
  long j = 0;
  try {
    j = std::stol(num, &used);
  } catch (const std::exception&) {
    throw bad();
  }
  if (used != num.size()) throw bad();
  return coset(j);
}

std::vector<LatticeModuleLabel> all_labels(const RankOneLattice& lattice) {
  std::vector<LatticeModuleLabel> out;
  for (long j = -lattice.k() + 1; j < lattice.k(); ++j) out.push_back(LatticeModuleLabel::coset(j));
  out.push_back(LatticeModuleLabel::plus());
  out.push_back(LatticeModuleLabel::minus());
  out.push_back(LatticeModuleLabel::half_coset(1));
  out.push_back(LatticeModuleLabel::half_coset(-1));
  for (int s : {1, 2})
    for (int p : {1, -1}) out.push_back(LatticeModuleLabel::twisted(s, p));
  return out;
}

bool is_valid(const RankOneLattice& lattice, const LatticeModuleLabel& label) {
  using K = LatticeModuleLabel::Kind;
  switch (label.kind) {
    case K::coset: return label.j > -lattice.k() && label.j <= lattice.k();
    case K::twisted: return (label.s == 1 || label.s == 2) && (label.parity == 1 || label.parity == -1);
    default: return true;
  }
}

QSeries theta_coset(long k, long j, long order) {
  RankOneLattice lattice(k);
  if (order < 0) throw std::invalid_argument("theta_coset: negative order");
  const long j0 = lattice.reduce(j);
  Rational lead(j0 * j0, 4 * k);
  lead.canonicalize();
  if (lead > order) return QSeries::zero(Payload::exact, Rational(0), 1, order);
  const long trunc = floor_long(Rational(order) - lead);
  std::vector<Rational> c(std::size_t(trunc + 1));
  const long bound = long(std::ceil(std::sqrt(double(order) / double(k)))) + 1;
  for (long m = -bound; m <= bound; ++m) {
    const long idx = k * m * m + m * j0;  // ((2km + j0)^2 - j0^2) / 4k
    if (idx >= 0 && idx <= trunc) c[std::size_t(idx)] += 1;
  }
  return QSeries(lead, 1, std::move(c));
}

namespace {
QSeries unit(long order) { return QSeries::monomial(Rational(1), Rational(0), 1, order); }
}  // namespace

Character module_character(long k, const LatticeModuleLabel& label, long order) {
  RankOneLattice lattice(k);
  if (!is_valid(lattice, label))
    throw std::invalid_argument("invalid label " + label.to_string() + " for k=" + std::to_string(k));
  if (order < 1) throw std::invalid_argument("module_character: order must be positive");
  using K = LatticeModuleLabel::Kind;
  const Rational half(1, 2);
  Character ch(order);
  switch (label.kind) {
    case K::coset:
      ch.add(Rational(1), FockKind::bosonic, theta_coset(k, label.j, order));
      break;
    case K::plus:
    case K::minus:
      ch.add(half, FockKind::bosonic, theta_coset(k, 0, order));
      ch.add(label.kind == K::plus ? half : Rational(-half), FockKind::bosonic_signed, unit(order));
      break;
    case K::half_plus:
    case K::half_minus:
      // theta fixes no vector of L + lambda_k, so both eigenspaces get half
      ch.add(half, FockKind::bosonic, theta_coset(k, k, order));
      break;
    case K::twisted: {
      const Rational lead(1, 16);
      QSeries ground = QSeries::monomial(Rational(1), lead, 2, floor_long((Rational(order) - lead) * 2));
      ch.add(half, FockKind::twisted, ground);
      ch.add(label.parity > 0 ? half : Rational(-half), FockKind::twisted_signed, ground);
      break;
    }
  }
  return ch;
}

QSeries char_module(long k, const LatticeModuleLabel& label, long order) {
  return module_character(k, label, order).expand();
}

Rational conformal_weight(long k, const LatticeModuleLabel& label) {
  const long order = k / 4 + 2;
  return min_exponent(char_module(k, label, order)) - vacuum_shift();
}

QuantumDim lattice_qdim(long k, const LatticeModuleLabel& label, bool orbifold) {
  RankOneLattice lattice(k);
  if (!is_valid(lattice, label)) throw std::invalid_argument("lattice_qdim: invalid label");
  using K = LatticeModuleLabel::Kind;
  if (!orbifold) {
    if (label.kind != K::coset) throw std::invalid_argument("lattice_qdim: only cosets are V_L-modules");
    return QuantumDim(1);
  }
  switch (label.kind) {
    case K::coset:
      if (lattice.reduce(label.j) == 0 || lattice.reduce(label.j) == k)
        throw std::invalid_argument("lattice_qdim: coset(" + std::to_string(label.j) + ") is reducible over V_L^+");
      return QuantumDim(2);
    case K::twisted: return QuantumDim::sqrt_of(k);
    default: return QuantumDim(1);
  }
}

IdentityResult coset_sum_identity(long T, long order) {
  if (T < 1) throw std::invalid_argument("coset_sum_identity: T must be positive");
  QSeries lhs = char_module(1, LatticeModuleLabel::coset(0), order);
  RankOneLattice sub(T * T);
  std::optional<QSeries> rhs;
  for (long i = 0; i < T; ++i) {
    QSeries piece = char_module(sub.k(), LatticeModuleLabel::coset(sub.reduce(2 * T * i)), order);
    rhs = rhs ? *rhs + piece : piece;
  }
  IdentityResult r;
  r.first_failure = first_difference(lhs, *rhs);
  r.ok = !r.first_failure;
  r.detail = "T=" + std::to_string(T) + " k=" + std::to_string(T * T) + " through q^" +
             to_string(rhs->valid_through()) +
             (r.ok ? ": holds" : ": differs at q^" + to_string(r.first_failure->exponent));
  return r;
}

}  // namespace orbchar
