#include "homcat/workbench.hpp"

#include <fstream>
#include <sstream>

#include "homcat/error.hpp"

namespace homcat {
namespace {

std::size_t size_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("\"") + key + "\" must be a natural number");
  return v.get<std::size_t>();
}

const json& array_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  return v;
}

void expect_length(const json& a, std::size_t n, const std::string& what) {
  if (!a.is_array() || a.size() != n)
    throw ParseError(what + " must be an array of length " + std::to_string(n));
}

// c[a][b][k] with extents (na, nb, nk).
Cube cube_from_json(Field f, const json& j, std::size_t na, std::size_t nb, std::size_t nk,
                    const std::string& what) {
  expect_length(j, na, what);
  Cube c(na, std::vector<Vec>(nb));
  for (std::size_t a = 0; a < na; ++a) {
    expect_length(j[a], nb, what + "[" + std::to_string(a) + "]");
    for (std::size_t b = 0; b < nb; ++b) {
      const json& row = j[a][b];
      expect_length(row, nk, what + "[" + std::to_string(a) + "][" + std::to_string(b) + "]");
      for (std::size_t k = 0; k < nk; ++k) c[a][b].push_back(scalar_from_json(f, row[k]));
    }
  }
  return c;
}

json cube_to_json(const Cube& c) {
  json out = json::array();
  for (const auto& plane : c) {
    json p = json::array();
    for (const Vec& v : plane) {
      json row = json::array();
      for (const FieldElem& x : v) row.push_back(scalar_to_json(x));
      p.push_back(std::move(row));
    }
    out.push_back(std::move(p));
  }
  return out;
}

// act[h][m][k]: e_h . e_m = sum_k act[h][m][k] e_k
LinMap action_from_json(Field f, const json& j, std::size_t hdim, std::size_t dim) {
  const Cube c = cube_from_json(f, j, hdim, dim, dim, "action");
  LinMap a(f, dim, hdim * dim);
  for (std::size_t h = 0; h < hdim; ++h)
    for (std::size_t m = 0; m < dim; ++m)
      for (std::size_t k = 0; k < dim; ++k) a(k, flatten(h, m, dim)) = c[h][m][k];
  return a;
}

json action_to_json(const LinMap& a, std::size_t hdim, std::size_t dim) {
  Cube c(hdim, std::vector<Vec>(dim, Vec(dim)));
  for (std::size_t h = 0; h < hdim; ++h)
    for (std::size_t m = 0; m < dim; ++m)
      for (std::size_t k = 0; k < dim; ++k) c[h][m][k] = a(k, flatten(h, m, dim));
  return cube_to_json(c);
}

// co[m][c][k]: lambda(e_m) = sum co[m][c][k] e_c (x) e_k
LinMap coaction_from_json(Field f, const json& j, std::size_t cdim, std::size_t dim) {
  const Cube c = cube_from_json(f, j, dim, cdim, dim, "coaction");
  LinMap a(f, cdim * dim, dim);
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t x = 0; x < cdim; ++x)
      for (std::size_t k = 0; k < dim; ++k) a(flatten(x, k, dim), m) = c[m][x][k];
  return a;
}

json coaction_to_json(const LinMap& a, std::size_t cdim, std::size_t dim) {
  Cube c(dim, std::vector<Vec>(cdim, Vec(dim)));
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t x = 0; x < cdim; ++x)
      for (std::size_t k = 0; k < dim; ++k) c[m][x][k] = a(flatten(x, k, dim), m);
  return cube_to_json(c);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string StructureFile::kind() const {
  static const char* const names[] = {"algebra", "coalgebra", "bialgebra", "module",
                                      "comodule", "yd", "rmatrix", "linmap"};
  return names[value.index()];
}

json field_to_json(Field f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

Field field_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("Fp") && j.at("Fp").is_number_unsigned()) {
    try {
      return Field::prime(j.at("Fp").get<std::uint64_t>());
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

json scalar_to_json(const FieldElem& x) { return x.to_string(); }

FieldElem scalar_from_json(Field f, const json& j) {
  if (j.is_string()) return FieldElem::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return FieldElem::parse(f, j.dump());
  throw ParseError("scalar must be a string, got " + j.dump());
}

json matrix_to_json(const LinMap& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

LinMap matrix_from_json(Field f, const json& j, std::size_t rows, std::size_t cols) {
  expect_length(j, rows, "matrix");
  LinMap m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    expect_length(j[i], cols, "matrix row " + std::to_string(i));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(f, j[i][k]);
  }
  return m;
}

StructureFile parse_structure(const json& j) {
  if (!j.is_object()) throw ParseError("structure file must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ParseError("missing \"kind\"");
  if (!j.contains("field")) throw ParseError("missing \"field\"");
  const std::string kind = j.at("kind").get<std::string>();
  StructureFile s{field_from_json(j.at("field")), LinMap{}, {}};
  const Field f = s.field;
  if (j.contains("parent")) {
    if (!j.at("parent").is_string()) throw ParseError("\"parent\" must be a string");
    s.parent = j.at("parent").get<std::string>();
  }
  const auto matrix = [&](const char* key, std::size_t r, std::size_t c) {
    return matrix_from_json(f, array_field(j, key), r, c);
  };

  try {
    if (kind == "algebra" || kind == "coalgebra" || kind == "bialgebra") {
      const std::size_t n = size_field(j, "dim");
      LinMap mul, comul;
      if (kind != "coalgebra") mul = mul_from_cube(cube_from_json(f, array_field(j, "mul"), n, n, n, "mul"));
      if (kind != "algebra")
        comul = comul_from_cube(cube_from_json(f, array_field(j, "comul"), n, n, n, "comul"));
      if (kind == "algebra") {
        HomAlgebra a{n, mul, matrix("alpha", n, n)};
        a.validate();
        s.value = a;
      } else if (kind == "coalgebra") {
        HomCoalgebra c{n, comul, matrix("psi", n, n)};
        c.validate();
        s.value = c;
      } else {
        HomBialgebra h{n, mul, comul, matrix("alpha", n, n), matrix("psi", n, n)};
        h.validate();
        s.value = h;
      }
    } else if (kind == "module") {
      const std::size_t n = size_field(j, "dim"), hd = size_field(j, "hdim");
      HModule m{n, action_from_json(f, array_field(j, "action"), hd, n), matrix("alpha", n, n)};
      m.validate(hd);
      s.value = m;
    } else if (kind == "comodule") {
      const std::size_t n = size_field(j, "dim"), cd = size_field(j, "cdim");
      HComodule m{n, coaction_from_json(f, array_field(j, "coaction"), cd, n), matrix("psi", n, n)};
      m.validate(cd);
      s.value = m;
    } else if (kind == "yd") {
      const std::size_t n = size_field(j, "dim"), hd = size_field(j, "hdim");
      YDModule m{n, action_from_json(f, array_field(j, "action"), hd, n),
                 coaction_from_json(f, array_field(j, "coaction"), hd, n), matrix("alpha", n, n)};
      m.validate(hd);
      s.value = m;
    } else if (kind == "rmatrix") {
      const std::size_t n = size_field(j, "dim");
      const LinMap r = matrix("r", n, n);
      Vec coeffs;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) coeffs.push_back(r(a, b));
      s.value = RMatrix{n, coeffs};
    } else if (kind == "linmap") {
      s.value = matrix("matrix", size_field(j, "rows"), size_field(j, "cols"));
    } else {
      throw ParseError("unknown kind \"" + kind + "\"");
    }
  } catch (const DimensionMismatch& e) {
    throw ParseError(kind + ": " + e.what());
  } catch (const FieldMismatch& e) {
    throw ParseError(kind + ": " + e.what());
  }
  return s;
}

json serialize_structure(const StructureFile& s) {
  json j;
  j["kind"] = s.kind();
  j["field"] = field_to_json(s.field);
  if (!s.parent.empty()) j["parent"] = s.parent;
  std::visit(overloaded{
                 [&](const HomAlgebra& a) {
                   j["dim"] = a.dim;
                   j["mul"] = cube_to_json(cube_from_mul(a.mul));
                   j["alpha"] = matrix_to_json(a.alpha);
                 },
                 [&](const HomCoalgebra& c) {
                   j["dim"] = c.dim;
                   j["comul"] = cube_to_json(cube_from_comul(c.comul));
                   j["psi"] = matrix_to_json(c.psi);
                 },
                 [&](const HomBialgebra& h) {
                   j["dim"] = h.dim;
                   j["mul"] = cube_to_json(cube_from_mul(h.mul));
                   j["comul"] = cube_to_json(cube_from_comul(h.comul));
                   j["alpha"] = matrix_to_json(h.alpha);
                   j["psi"] = matrix_to_json(h.psi);
                 },
                 [&](const HModule& m) {
                   j["dim"] = m.dim;
                   j["hdim"] = m.hdim();
                   j["action"] = action_to_json(m.action, m.hdim(), m.dim);
                   j["alpha"] = matrix_to_json(m.alpha);
                 },
                 [&](const HComodule& m) {
                   const std::size_t cd = m.dim ? m.coaction.rows() / m.dim : 0;
                   j["dim"] = m.dim;
                   j["cdim"] = cd;
                   j["coaction"] = coaction_to_json(m.coaction, cd, m.dim);
                   j["psi"] = matrix_to_json(m.psi);
                 },
                 [&](const YDModule& m) {
                   const std::size_t hd = m.module().hdim();
                   j["dim"] = m.dim;
                   j["hdim"] = hd;
                   j["action"] = action_to_json(m.action, hd, m.dim);
                   j["coaction"] = coaction_to_json(m.coaction, hd, m.dim);
                   j["alpha"] = matrix_to_json(m.alpha);
                 },
                 [&](const RMatrix& r) {
                   LinMap m(s.field, r.dim, r.dim);
                   for (std::size_t a = 0; a < r.dim; ++a)
                     for (std::size_t b = 0; b < r.dim; ++b) m(a, b) = r(a, b);
                   j["dim"] = r.dim;
                   j["r"] = matrix_to_json(m);
                 },
                 [&](const LinMap& m) {
                   j["rows"] = m.rows();
                   j["cols"] = m.cols();
                   j["matrix"] = matrix_to_json(m);
                 },
             },
             s.value);
  return j;
}

std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

StructureFile load_structure(const std::filesystem::path& path) {
  try {
    return parse_structure(read_json_file(path));
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.rfind(path.string(), 0) == 0) throw;
    throw ParseError(path.string() + ": " + what);
  }
}

void save_structure(const std::filesystem::path& path, const StructureFile& s) {
  write_text_file(path, canonical_text(serialize_structure(s)));
}

json report_to_json(const CheckReport& r, const std::string& command, double timing_ms) {
  json axioms = json::array();
  for (const AxiomStatus& a : r.axioms()) {
    json entry{{"axiom_id", a.id}, {"pass", a.pass}};
    if (const Violation* v = r.first_violation(a.id)) {
      json lhs = json::array(), rhs = json::array();
      for (const FieldElem& x : v->lhs) lhs.push_back(scalar_to_json(x));
      for (const FieldElem& x : v->rhs) rhs.push_back(scalar_to_json(x));
      entry["counterexample"] = {{"index", v->index}, {"lhs", lhs}, {"rhs", rhs}};
    }
    axioms.push_back(std::move(entry));
  }
  return {{"command", command}, {"axioms", axioms}, {"pass", r.pass()}, {"timing_ms", timing_ms}};
}

GeneratedBialgebra gen_group_bialgebra(std::size_t n, std::size_t k, Field f) {
  if (n == 0) throw PreconditionError("group order must be at least 1", {"n-zero"});
  const FieldElem one(f, 1);
  LinMap mul(f, n, n * n), comul(f, n * n, n), alpha(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mul((i + j) % n, flatten(i, j, n)) = one;
    comul(flatten(i, i, n), i) = one;
    alpha((i * k) % n, i) = one;
  }
  HomBialgebra h{n, compose(alpha, mul), compose(comul, alpha), alpha, alpha};
  CheckReport rep = check_hom_bialgebra(h);
  return {std::move(h), std::move(rep)};
}

std::pair<HomBialgebra, RMatrix> gen_kz2_qt(Field f) {
  if (f.characteristic() == 2)
    throw PreconditionError("1/2 is not defined in characteristic 2", {"characteristic-2"});
  HomBialgebra h = gen_group_bialgebra(2, 1, f).bialgebra;
  const FieldElem half = FieldElem(f, 1) / FieldElem(f, 2);
  RMatrix r{2, {half, half, half, -half}};
  return {std::move(h), std::move(r)};
}

}  // namespace homcat
