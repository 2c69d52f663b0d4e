#pragma once

// JSON encodings used by the command-line tool.  Big numbers are decimal
// strings; rationals are "num/den" with den omitted when 1.
//
//   orbit           {"h":2,"size":"2","hnf":[[1,1],[0,2]]}
//   mode            "all" | {"p":2}
//   class record    {"type":[{"orbit":<orbit>,"mult":2},...],
//                    "centralizer_order":"8","class_size":"3"}
//   class function  {"h":2,"mode":{"p":2},"l":3,
//                    "values":[{"class":<class record>,"value":"3/2"},...]}
//   polynomial      [{"monomial":[{"family":"x","orbit":<orbit>,"exp":2},...],
//                     "value":"1/2"},...]        (sorted by monomial)
//   dmvv report     {"h":2,"p":2,"precision":8,"equal":true,
//                    "first_mismatch":null,"lhs":[<polynomial>...],"rhs":[...]}
//   table model     [{"orbit":<orbit>,"psi":"num/den"},...]
//
// Decoders throw std::invalid_argument on schema violations.

#include <filesystem>

#include "json.hpp"

#include "orbigenus/class_function.hpp"
#include "orbigenus/genus.hpp"

namespace orbigenus::io {

using json = nlohmann::ordered_json;

json to_json(const TransitiveOrbit& orbit);
TransitiveOrbit orbit_from_json(const json& j);

json to_json(const OrderMode& mode);
OrderMode mode_from_json(const json& j);

json to_json(const OrbitTypeMultiset& type);
OrbitTypeMultiset type_from_json(int h, const OrderMode& mode, const json& j);

json to_json(const ClassFunction<Rational>& f);
/// Requires every class of (h, mode, l) exactly once.
ClassFunction<Rational> class_function_from_json(const json& j);

json to_json(const PsiPolynomial& p);
PsiPolynomial polynomial_from_json(const json& j);

json to_json(const GenusSeriesReport& report);

TableModel table_model_from_json(const json& j);
/// Reads and validates a table-model file; throws std::invalid_argument if
/// it is missing or malformed.
TableModel load_table_model(const std::filesystem::path& path);

json read_json_file(const std::filesystem::path& path);

} // namespace orbigenus::io
