#include "schubert/render.hpp"

#include <sstream>

#include "schubert/error.hpp"

namespace schubert::render {

namespace {

template <typename F>
auto parsing(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed ") + what + ": " + e.what());
  }
}

Json subspace_or_null(const std::optional<SubspaceCanonical>& s) {
  return s ? subspace_to_json(*s) : Json(nullptr);
}

std::optional<SubspaceCanonical> subspace_or_null(const FieldPtr& field, int n, const Json& j) {
  if (j.is_null()) return std::nullopt;
  return subspace_from_json(field, n, j);
}

Json axiom_to_json(const incidence::AxiomResult& a) { return Json{{"pass", a.pass}, {"witness", a.witness}}; }

incidence::AxiomResult axiom_from_json(const Json& j) {
  return {j.at("pass").get<bool>(), j.at("witness").get<std::string>()};
}

std::vector<std::uint32_t> element_row(const FieldPtr& field, const Json& row) {
  std::vector<std::uint32_t> out;
  for (const auto& x : row) out.push_back(field->parse(x.get<std::string>()));
  return out;
}

Json string_row(const FieldPtr& field, const std::vector<std::uint32_t>& row) {
  Json out = Json::array();
  for (auto c : row) out.push_back(field->format(c));
  return out;
}

}  // namespace

Json element_to_json(const FieldElement& x) { return Json(x.coeffs()); }

FieldElement element_from_json(const FieldPtr& field, const Json& j) {
  return parsing("element", [&] {
    const auto c = j.get<std::vector<std::uint32_t>>();
    if (c.size() != field->k()) {
      throw Error(ErrorCode::ParseError, "element of " + field->name() + " needs " + std::to_string(field->k()) +
                                             " coefficients");
    }
    for (auto x : c) {
      if (x >= field->p()) throw Error(ErrorCode::ParseError, "coefficient " + std::to_string(x) + " out of range");
    }
    return FieldElement(field, field->encode(c));
  });
}

Json matrix_to_json(const MatrixGF& m) { return Json(m.to_strings()); }

MatrixGF matrix_from_json(const FieldPtr& field, const Json& j) {
  return parsing("matrix", [&] {
    const int n = static_cast<int>(j.size());
    std::vector<std::uint32_t> codes;
    for (const auto& row : j) {
      if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::ParseError, "matrix is not square");
      const auto r = element_row(field, row);
      codes.insert(codes.end(), r.begin(), r.end());
    }
    return MatrixGF(field, n, std::move(codes));
  });
}

Json subspace_to_json(const SubspaceCanonical& s) {
  Json out = Json::array();
  for (const auto& row : s.basis()) out.push_back(string_row(s.field(), row));
  return out;
}

SubspaceCanonical subspace_from_json(const FieldPtr& field, int n, const Json& j) {
  return parsing("subspace", [&] {
    std::vector<chevalley::Vector> rows;
    for (const auto& row : j) {
      rows.push_back(element_row(field, row));
      if (static_cast<int>(rows.back().size()) != n) throw Error(ErrorCode::ParseError, "row length differs from n");
    }
    return SubspaceCanonical::span(field, n, rows);
  });
}

Json field_to_json(const FieldPtr& field) { return Json{{"p", field->p()}, {"k", field->k()}}; }

FieldPtr field_from_json(const Json& j) {
  return parsing("field", [&] {
    try {
      return gf::Field::make(j.at("p").get<std::uint32_t>(), j.at("k").get<std::uint32_t>());
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, std::string("bad field: ") + e.what());
    }
  });
}

Json factorization_to_json(const parabolic::ParabolicFactorization& f, std::optional<std::uint64_t> q) {
  Json out{{"u", rootsys::format_word(f.u.word())},
           {"z", rootsys::format_word(f.z.word())},
           {"v", rootsys::format_word(f.v.word())},
           {"i", f.i},
           {"j", f.j},
           {"length_z", f.z.length()}};
  if (q) {
    out["q"] = *q;
    out["thickness"] = cells::thickness_formula(f.u * f.z * f.v, f.i, f.j, *q);
  }
  return out;
}

parabolic::ParabolicFactorization factorization_from_json(const RootSystemPtr& sys, const Json& j) {
  return parsing("factorization", [&] {
    auto word = [&](const char* key) {
      return rootsys::WeylElement::from_word(sys, rootsys::parse_word(j.at(key).get<std::string>(), sys->rank()));
    };
    return parabolic::ParabolicFactorization{word("u"), word("z"), word("v"), j.at("i").get<int>(),
                                             j.at("j").get<int>()};
  });
}

Json theorem_to_json(const cells::TheoremReport& r) {
  Json observed = Json::object();
  for (const auto& [count, lines] : r.observed) observed[std::to_string(count)] = lines;
  return Json{{"w", r.w},
              {"i", r.i},
              {"j", r.j},
              {"q", r.q},
              {"n", r.n},
              {"formula", r.formula},
              {"length_z", r.length_z},
              {"lines", r.lines},
              {"points", r.points},
              {"incidences", r.incidences},
              {"observed", observed},
              {"violating_lines", r.violating_lines},
              {"all_agree", r.all_agree}};
}

cells::TheoremReport theorem_from_json(const Json& j) {
  return parsing("theorem report", [&] {
    cells::TheoremReport r;
    r.w = j.at("w").get<std::string>();
    r.i = j.at("i").get<int>();
    r.j = j.at("j").get<int>();
    r.q = j.at("q").get<std::uint32_t>();
    r.n = j.at("n").get<int>();
    r.formula = j.at("formula").get<std::uint64_t>();
    r.length_z = j.at("length_z").get<int>();
    r.lines = j.at("lines").get<std::size_t>();
    r.points = j.at("points").get<std::size_t>();
    r.incidences = j.at("incidences").get<std::size_t>();
    for (const auto& [count, lines] : j.at("observed").items()) r.observed[std::stoi(count)] = lines.get<int>();
    r.violating_lines = j.at("violating_lines").get<std::vector<std::string>>();
    r.all_agree = j.at("all_agree").get<bool>();
    return r;
  });
}

Json census_to_json(const std::vector<cells::ThinTriple>& census) {
  Json out = Json::array();
  for (const auto& t : census) {
    out.push_back(Json{{"w", rootsys::format_word(t.w.word())},
                       {"i", t.i},
                       {"j", t.j},
                       {"len_z", t.length_z},
                       {"thickness", t.thickness}});
  }
  return out;
}

std::vector<cells::ThinTriple> census_from_json(const RootSystemPtr& sys, const Json& j) {
  return parsing("census", [&] {
    std::vector<cells::ThinTriple> out;
    for (const auto& e : j) {
      out.push_back({rootsys::WeylElement::from_word(sys, rootsys::parse_word(e.at("w").get<std::string>(),
                                                                              sys->rank())),
                     e.at("i").get<int>(), e.at("j").get<int>(), e.at("len_z").get<int>(),
                     e.at("thickness").get<std::uint64_t>()});
    }
    return out;
  });
}

std::string census_to_csv(const std::vector<cells::ThinTriple>& census) {
  std::ostringstream os;
  os << "w,i,j,len_z,thickness\n";
  for (const auto& t : census) {
    os << rootsys::format_word(t.w.word()) << ',' << t.i << ',' << t.j << ',' << t.length_z << ',' << t.thickness
       << '\n';
  }
  return os.str();
}

Json cell_point_to_json(const cells::CellPoint& p) {
  Json flag = Json::array();
  for (const auto& s : p.borel_key.chain) flag.push_back(subspace_to_json(s));
  return Json{{"params", string_row(p.matrix.field(), p.params)},
              {"matrix", matrix_to_json(p.matrix)},
              {"flag", flag}};
}

cells::CellPoint cell_point_from_json(const FieldPtr& field, int n, const Json& j) {
  return parsing("cell point", [&] {
    cells::CellPoint p{element_row(field, j.at("params")), matrix_from_json(field, j.at("matrix")), {}};
    for (const auto& s : j.at("flag")) p.borel_key.chain.push_back(subspace_from_json(field, n, s));
    return p;
  });
}

Json lattice_check_to_json(const incidence::LatticeCheck& c) {
  return Json{{"ok", c.ok}, {"witness", c.witness}, {"detail", c.detail}};
}

incidence::LatticeCheck lattice_check_from_json(const Json& j) {
  return parsing("lattice check", [&] {
    return incidence::LatticeCheck{j.at("ok").get<bool>(), j.at("witness").get<std::vector<int>>(),
                                   j.at("detail").get<std::string>()};
  });
}

Json axioms_to_json(const incidence::ProjectiveAxiomsReport& r) {
  return Json{{"a", axiom_to_json(r.a)}, {"b", axiom_to_json(r.b)}, {"c", axiom_to_json(r.c)},
              {"d", axiom_to_json(r.d)}, {"e", axiom_to_json(r.e)}, {"all_pass", r.all_pass()}};
}

incidence::ProjectiveAxiomsReport axioms_from_json(const Json& j) {
  return parsing("axioms report", [&] {
    return incidence::ProjectiveAxiomsReport{axiom_from_json(j.at("a")), axiom_from_json(j.at("b")),
                                             axiom_from_json(j.at("c")), axiom_from_json(j.at("d")),
                                             axiom_from_json(j.at("e"))};
  });
}

Json ovoid_to_json(const incidence::OvoidReport& r) {
  return Json{{"o1", r.o1},
              {"o1_witness", subspace_or_null(r.o1_witness)},
              {"o2", r.o2},
              {"o2_witness", subspace_or_null(r.o2_witness)},
              {"o2_detail", r.o2_detail},
              {"tangent_counts", r.tangent_counts},
              {"is_ovoid", r.is_ovoid()}};
}

incidence::OvoidReport ovoid_from_json(const FieldPtr& field, int n, const Json& j) {
  return parsing("ovoid report", [&] {
    incidence::OvoidReport r;
    r.o1 = j.at("o1").get<bool>();
    r.o1_witness = subspace_or_null(field, n, j.at("o1_witness"));
    r.o2 = j.at("o2").get<bool>();
    r.o2_witness = subspace_or_null(field, n, j.at("o2_witness"));
    r.o2_detail = j.at("o2_detail").get<std::string>();
    r.tangent_counts = j.at("tangent_counts").get<std::vector<int>>();
    return r;
  });
}

Json shortcut_to_json(const cells::ShortcutReport& r) {
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back(Json{{"point", subspace_to_json(c.point)},
                       {"line", subspace_to_json(c.line)},
                       {"existential", c.existential},
                       {"shortcut", c.shortcut},
                       {"g", matrix_to_json(c.g)},
                       {"h", matrix_to_json(c.h)}});
  }
  return Json{{"w", r.w},
              {"i", r.i},
              {"j", r.j},
              {"pairs_checked", r.pairs_checked},
              {"agreements", r.agreements},
              {"agrees", r.agrees()},
              {"counterexamples", ces}};
}

cells::ShortcutReport shortcut_from_json(const FieldPtr& field, int n, const Json& j) {
  return parsing("shortcut report", [&] {
    cells::ShortcutReport r;
    r.w = j.at("w").get<std::string>();
    r.i = j.at("i").get<int>();
    r.j = j.at("j").get<int>();
    r.pairs_checked = j.at("pairs_checked").get<std::size_t>();
    r.agreements = j.at("agreements").get<std::size_t>();
    for (const auto& c : j.at("counterexamples")) {
      r.counterexamples.push_back({subspace_from_json(field, n, c.at("point")),
                                   subspace_from_json(field, n, c.at("line")), c.at("existential").get<bool>(),
                                   c.at("shortcut").get<bool>(), matrix_from_json(field, c.at("g")),
                                   matrix_from_json(field, c.at("h"))});
    }
    return r;
  });
}

PointSetFile parse_point_set(std::string_view text) {
  return parsing("point-set file", [&] {
    const Json j = Json::parse(text);
    PointSetFile file;
    file.field = field_from_json(j.at("field"));
    file.n = j.at("n").get<int>();
    if (file.n < 1) throw Error(ErrorCode::ParseError, "n must be positive");
    for (const auto& pt : j.at("points")) {
      const auto v = pt.get<std::vector<std::uint32_t>>();
      if (static_cast<int>(v.size()) != file.n) {
        throw Error(ErrorCode::ParseError, "point of length " + std::to_string(v.size()) + " in F^" +
                                               std::to_string(file.n));
      }
      for (auto c : v) {
        if (c >= file.field->q()) throw Error(ErrorCode::ParseError, "coordinate outside " + file.field->name());
      }
      auto s = SubspaceCanonical::span(file.field, file.n, {v});
      if (s.dim() != 1) throw Error(ErrorCode::ParseError, "the zero vector is not a point");
      file.points.push_back(std::move(s));
    }
    return file;
  });
}

std::string serialize_point_set(const PointSetFile& file) {
  Json points = Json::array();
  for (const auto& s : file.points) points.push_back(s.row(0));
  return Json{{"field", field_to_json(file.field)}, {"n", file.n}, {"points", points}}.dump();
}

}  // namespace schubert::render
