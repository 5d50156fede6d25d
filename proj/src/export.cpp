#include "orbchar/export.hpp"

#include "orbchar/character.hpp"
#include "orbchar/galois.hpp"
#include "orbchar/groups.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace orbchar {

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::csv;
  if (text == "json") return TableFormat::json;
  if (text == "markdown" || text == "md") return TableFormat::markdown;
  throw std::invalid_argument("unknown format: " + std::string(text));
}

namespace {

std::string_view type_name(ModuleType t) { return t == ModuleType::one ? "one" : "two"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string weight_text(const Rational& w) { return to_string(w); }

std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string census_csv(const Census& c) {
  std::ostringstream os;
  os << "label,weight_num,weight_den,qdim_int,qdim_radicand,type,sector\n";
  for (const auto& e : c.entries)
    os << csv_field(e.label) << ',' << numerator_long(e.weight) << ',' << denominator_long(e.weight) << ','
       << e.qdim.coeff() << ',' << e.qdim.radicand() << ',' << type_name(e.type) << ',' << csv_field(e.sector) << '\n';
  return os.str();
}

nlohmann::json census_json(const Census& c) {
  nlohmann::json j;
  j["schema"] = 1;
  j["algebra"] = std::string(to_string(c.algebra));
  j["complete_under_assumption"] = c.complete_under_assumption;
  j["glob"] = glob(c.algebra);
  j["entries"] = nlohmann::json::array();
  for (const auto& e : c.entries)
    j["entries"].push_back({{"label", e.label},
                            {"alias", e.alias},
                            {"type", std::string(type_name(e.type))},
                            {"sector", e.sector},
                            {"weight_num", numerator_long(e.weight)},
                            {"weight_den", denominator_long(e.weight)},
                            {"qdim", {{"integer", e.qdim.coeff()}, {"radicand", e.qdim.radicand()}}},
                            {"recipe", describe(e.recipe)},
                            {"notes", e.notes},
                            {"table", e.table}});
  return j;
}

std::string census_markdown(const Census& c) {
  std::map<int, std::vector<const CensusEntry*>> groups;
  for (const auto& e : c.entries) groups[e.table].push_back(&e);
  std::ostringstream os;
  os << "# " << to_string(c.algebra) << " orbifold: " << c.entries.size() << " irreducible modules, glob "
     << glob(c.algebra);
  if (c.complete_under_assumption) os << " (complete under the rationality assumption)";
  os << "\n";
  for (const auto& [table, entries] : groups) {
    os << "\n## Table " << table << "\n\n|  |";
    for (const auto* e : entries) os << ' ' << md_cell(e->alias.empty() ? e->label : e->alias) << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < entries.size(); ++i) os << "---|";
    os << "\n| module |";
    for (const auto* e : entries) os << ' ' << md_cell(e->label) << " |";
    os << "\n| weight |";
    for (const auto* e : entries) os << ' ' << weight_text(e->weight) << " |";
    os << "\n| qdim |";
    for (const auto* e : entries) os << ' ' << e->qdim.to_string() << " |";
    os << "\n| type |";
    for (const auto* e : entries) os << ' ' << type_name(e->type) << " |";
    os << "\n";
    bool any = false;
    for (const auto* e : entries) {
      if (e->notes.empty()) continue;
      if (!any) os << "\n";
      any = true;
      os << "- " << md_cell(e->alias.empty() ? e->label : e->alias) << ": " << e->notes << "\n";
    }
  }
  return os.str();
}

std::string render_tables(Algebra a, TableFormat f) {
  const Census& c = census(a);
  switch (f) {
    case TableFormat::csv: return census_csv(c);
    case TableFormat::json: return census_json(c).dump(2) + "\n";
    case TableFormat::markdown: return census_markdown(c);
  }
  return {};
}

std::string character_dump(const QSeries& s) {
  std::string out;
  for (const auto& [e, c] : s.terms()) out += to_string(e) + ":" + c + "\n";
  return out;
}

namespace {

long parse_long(std::string_view s, std::string_view spec) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad module spec: " + std::string(spec));
  return v;
}

QSeries lattice_spec(long k, bool plus, std::string_view label, long trunc) {
  if (k < 1) throw std::invalid_argument("lattice parameter must be positive");
  LatticeModuleLabel l = label.empty() ? (plus ? LatticeModuleLabel::plus() : LatticeModuleLabel::coset(0))
                                       : LatticeModuleLabel::parse(label);
  if (l.kind == LatticeModuleLabel::Kind::coset) l.j = RankOneLattice(k).reduce(l.j);
  return char_module(k, l, trunc);
}

}  // namespace

QSeries resolve_module_spec(std::string_view spec, long trunc) {
  if (trunc < 1) throw std::invalid_argument("trunc must be positive");
  const std::string whole(spec);
  if (spec == "P") return fock_series(FockKind::bosonic, trunc);
  if (spec == "VL2") return char_module(1, LatticeModuleLabel::coset(0), trunc);
  if (spec == "VL2+alpha/2") return char_module(1, LatticeModuleLabel::coset(1), trunc);

  std::string_view head = spec, tail;
  if (auto c = spec.find(':'); c != std::string_view::npos) {
    head = spec.substr(0, c);
    tail = spec.substr(c + 1);
  }
  if (head == "group") {
    std::string_view name = tail, irrep;
    if (auto c = tail.find(':'); c != std::string_view::npos) {
      name = tail.substr(0, c);
      irrep = tail.substr(c + 1);
    }
    const GroupData& g = group_data(name);
    return irrep.empty() ? isotypic_character(g, std::size_t(0), trunc).expand()
                         : isotypic_character(g, irrep, trunc).expand();
  }
  for (Algebra a : {Algebra::A4, Algebra::S4, Algebra::A5}) {
    if (head != to_string(a)) continue;
    const Census& c = census(a);
    try {
      const CensusEntry& e = tail.empty() ? c.entries.front() : c.find(tail);
      return entry_character(e, trunc).expand();
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("no " + std::string(head) + " module " + std::string(tail));
    }
  }
  static const std::map<std::string, long, std::less<>> aliases{
      {"VZalpha", 1}, {"VZbeta", 4}, {"VZgamma", 9}, {"VZzeta", 16}, {"VZmu", 25}};
  bool plus = !head.empty() && head.back() == '+';
  if (plus) head.remove_suffix(1);
  if (auto it = aliases.find(head); it != aliases.end()) return lattice_spec(it->second, plus, tail, trunc);
  if (head.size() > 1 && head.front() == 'L') return lattice_spec(parse_long(head.substr(1), spec), plus, tail, trunc);
  throw std::invalid_argument("bad module spec: " + whole);
}

}  // namespace orbchar
