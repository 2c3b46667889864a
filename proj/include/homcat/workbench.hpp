#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <variant>

#include <json.hpp>

#include "homcat/qt_braiding.hpp"
#include "homcat/yetter_drinfeld.hpp"

namespace homcat {

using json = nlohmann::json;

// One parsed structure file. `parent` names the bialgebra (or algebra /
// coalgebra) file a module-like structure lives over, relative to the file.
using Structure = std::variant<HomAlgebra, HomCoalgebra, HomBialgebra, HModule, HComodule,
                               YDModule, RMatrix, LinMap>;

struct StructureFile {
  Field field;
  Structure value;
  std::string parent;

  std::string kind() const;
};

json field_to_json(Field f);
Field field_from_json(const json& j);
json scalar_to_json(const FieldElem& x);
FieldElem scalar_from_json(Field f, const json& j);
// Array of rows.
json matrix_to_json(const LinMap& m);
LinMap matrix_from_json(Field f, const json& j, std::size_t rows, std::size_t cols);

StructureFile parse_structure(const json& j);
json serialize_structure(const StructureFile& s);

// Sorted keys, two-space indent, trailing newline.
std::string canonical_text(const json& j);
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
StructureFile load_structure(const std::filesystem::path& path);
void save_structure(const std::filesystem::path& path, const StructureFile& s);

// {"command", "axioms": [{axiom_id, pass, counterexample?}], "pass", "timing_ms"}
json report_to_json(const CheckReport& r, const std::string& command, double timing_ms);

struct GeneratedBialgebra {
  HomBialgebra bialgebra;
  CheckReport report;
};
// Group bialgebra of Z_n twisted by e_i -> e_{ik mod n}.
GeneratedBialgebra gen_group_bialgebra(std::size_t n, std::size_t k, Field f = {});
// k[Z_2] with R = (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g) / 2; throws
// PreconditionError "characteristic-2".
std::pair<HomBialgebra, RMatrix> gen_kz2_qt(Field f = {});

}  // namespace homcat
