#pragma once

#include "orbchar/census.hpp"
#include "orbchar/qseries.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace orbchar {

enum class TableFormat { csv, json, markdown };
TableFormat parse_table_format(std::string_view text);

// label,weight_num,weight_den,qdim_int,qdim_radicand,type,sector
std::string census_csv(const Census& c);
nlohmann::json census_json(const Census& c);
// one transposed table per rendering group: module row, weight row, qdim row
std::string census_markdown(const Census& c);
std::string render_tables(Algebra a, TableFormat f);

// one "exponent:coefficient" line per nonzero term, ascending
std::string character_dump(const QSeries& s);

// Module specs:
//   P                      partition series prod (1-q^n)^-1
//   VL2, VL2+alpha/2       the two V_{L_2}-modules
//   L<k>[+][:label]        lattice module for (alpha,alpha)=2k; labels as in
//                          LatticeModuleLabel::parse. Default label coset(0),
//                          or plus with the + suffix
//   VZalpha VZbeta VZgamma VZzeta VZmu   aliases for L1 L4 L9 L16 L25
//   A4|S4|A5[:label]       census entry by label or table alias; default vacuum
//   group:<name>[:irrep]   isotypic piece; default the trivial irrep
// Characters are known through q^{trunc-1/24}. std::invalid_argument on a bad spec.
QSeries resolve_module_spec(std::string_view spec, long trunc);

}  // namespace orbchar
