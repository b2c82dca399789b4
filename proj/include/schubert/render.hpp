#pragma once

// JSON and CSV renderings of the library's values and reports. Every
// *_to_json has a matching *_from_json with from_json(to_json(x)) == x.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "schubert/cell.hpp"
#include "schubert/incidence.hpp"
#include "schubert/lattice.hpp"
#include "schubert/ovoid.hpp"
#include "schubert/parabolic.hpp"

namespace schubert::render {

using Json = nlohmann::ordered_json;
using chevalley::MatrixGF;
using chevalley::SubspaceCanonical;
using gf::FieldElement;
using gf::FieldPtr;
using rootsys::RootSystemPtr;

/// Coefficient array [c0, c1, ..., c_{k-1}].
Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const FieldPtr& field, const Json& j);

/// Row-major nested arrays of element strings.
Json matrix_to_json(const MatrixGF& m);
MatrixGF matrix_from_json(const FieldPtr& field, const Json& j);

/// Echelon basis rows, each an array of element strings.
Json subspace_to_json(const SubspaceCanonical& s);
SubspaceCanonical subspace_from_json(const FieldPtr& field, int n, const Json& j);

Json field_to_json(const FieldPtr& field);
FieldPtr field_from_json(const Json& j);

/// {"u", "z", "v", "i", "j", "length_z"}, plus "q" and "thickness" when q is given.
Json factorization_to_json(const parabolic::ParabolicFactorization& f, std::optional<std::uint64_t> q = {});
parabolic::ParabolicFactorization factorization_from_json(const RootSystemPtr& sys, const Json& j);

Json theorem_to_json(const cells::TheoremReport& r);
cells::TheoremReport theorem_from_json(const Json& j);

/// Entries {"w", "i", "j", "len_z", "thickness"}.
Json census_to_json(const std::vector<cells::ThinTriple>& census);
std::vector<cells::ThinTriple> census_from_json(const RootSystemPtr& sys, const Json& j);
/// Header w,i,j,len_z,thickness; one row per triple.
std::string census_to_csv(const std::vector<cells::ThinTriple>& census);

Json cell_point_to_json(const cells::CellPoint& p);
cells::CellPoint cell_point_from_json(const FieldPtr& field, int n, const Json& j);

Json lattice_check_to_json(const incidence::LatticeCheck& c);
incidence::LatticeCheck lattice_check_from_json(const Json& j);

Json axioms_to_json(const incidence::ProjectiveAxiomsReport& r);
incidence::ProjectiveAxiomsReport axioms_from_json(const Json& j);

Json ovoid_to_json(const incidence::OvoidReport& r);
incidence::OvoidReport ovoid_from_json(const FieldPtr& field, int n, const Json& j);

Json shortcut_to_json(const cells::ShortcutReport& r);
cells::ShortcutReport shortcut_from_json(const FieldPtr& field, int n, const Json& j);

/// {"field": {"p", "k"}, "n", "points": [[...], ...]}; coordinates are element codes.
struct PointSetFile {
  FieldPtr field;
  int n = 0;
  std::vector<SubspaceCanonical> points;
};

/// Throws ParseError on malformed JSON, a bad field, a wrong-length or zero vector.
PointSetFile parse_point_set(std::string_view text);
std::string serialize_point_set(const PointSetFile& file);

}  // namespace schubert::render
