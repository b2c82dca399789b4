#include "schubert/ovoid.hpp"

#include <algorithm>
#include <set>

#include "schubert/error.hpp"

namespace schubert::incidence {

namespace {

// Lines and hyperplanes of the lattice as point sets, with lines through each point.
struct Geometry {
  int num_points = 0;
  std::vector<int> line_elements;
  std::vector<PointSet> lines;
  std::vector<std::vector<int>> lines_through;
  std::set<PointSet> hyperplanes;
  // joining_line[a * P + b]: the line through points a != b.
  std::vector<int> joining_line;

  explicit Geometry(const SubspaceLattice& lat) {
    num_points = static_cast<int>(lat.points().size());
    lines_through.assign(num_points, {});
    if (lat.n() >= 2) {
      line_elements = lat.of_dim(2);
      for (int e : line_elements) {
        const int l = static_cast<int>(lines.size());
        lines.push_back(lat.points_in(e));
        for (int p : lines.back().members()) lines_through[p].push_back(l);
      }
    }
    if (lat.n() >= 1) {
      for (int e : lat.of_dim(lat.n() - 1)) hyperplanes.insert(lat.points_in(e));
    }
    joining_line.assign(static_cast<std::size_t>(num_points) * num_points, -1);
    for (int l = 0; l < static_cast<int>(lines.size()); ++l) {
      const auto pts = lines[l].members();
      for (int a : pts) {
        for (int b : pts) joining_line[a * num_points + b] = l;
      }
    }
  }

  // O2 at point p for the set O; returns the tangent-line count through p.
  bool o2_holds(const PointSet& O, int p, int& tangents) const {
    PointSet sweep(num_points);
    tangents = 0;
    for (int l : lines_through[p]) {
      if (lines[l].intersection_count(O) == 1) {
        ++tangents;
        sweep |= lines[l];
      }
    }
    return hyperplanes.count(sweep) > 0;
  }
};

std::vector<int> positions_of(const std::vector<SubspaceCanonical>& O, const SubspaceLattice& lat) {
  std::vector<int> out;
  for (const auto& s : O) {
    if (s.dim() != 1 || s.n() != lat.n() || !s.field()->same_as(*lat.field())) {
      throw Error(ErrorCode::InvalidStructure, s.to_string() + " is not a point of the lattice's space");
    }
    out.push_back(lat.point_position(lat.index_of(s)));
  }
  return out;
}

}  // namespace

std::vector<SubspaceCanonical> tangent_lines(const std::vector<SubspaceCanonical>& O, const SubspaceCanonical& p,
                                             const SubspaceLattice& lat) {
  if (std::find(O.begin(), O.end(), p) == O.end()) {
    throw Error(ErrorCode::PointNotInSet, p.to_string() + " is not in the point set");
  }
  const Geometry geo(lat);
  PointSet set(geo.num_points);
  for (int k : positions_of(O, lat)) set.set(k);
  const int pos = lat.point_position(lat.index_of(p));
  std::vector<SubspaceCanonical> out;
  for (int l : geo.lines_through[pos]) {
    if (geo.lines[l].intersection_count(set) == 1) out.push_back(lat.elements()[geo.line_elements[l]]);
  }
  return out;
}

OvoidReport check_ovoid(const std::vector<SubspaceCanonical>& O, const SubspaceLattice& lat) {
  const Geometry geo(lat);
  const auto pos = positions_of(O, lat);
  PointSet set(geo.num_points);
  for (int k : pos) set.set(k);

  OvoidReport report;
  for (std::size_t l = 0; l < geo.lines.size(); ++l) {
    if (geo.lines[l].intersection_count(set) > 2) {
      report.o1 = false;
      report.o1_witness = lat.elements()[geo.line_elements[l]];
      break;
    }
  }
  for (std::size_t k = 0; k < pos.size(); ++k) {
    int tangents = 0;
    const bool ok = geo.o2_holds(set, pos[k], tangents);
    report.tangent_counts.push_back(tangents);
    if (!ok && report.o2) {
      report.o2 = false;
      report.o2_witness = O[k];
      report.o2_detail = "the " + std::to_string(tangents) + " tangent lines through " + O[k].to_string() +
                         " do not cover exactly one hyperplane";
    }
  }
  return report;
}

OvoidSearchResult search_ovoids(const SubspaceLattice& lat, std::size_t max_results) {
  const Geometry geo(lat);
  const int np = geo.num_points;
  OvoidSearchResult result;
  std::vector<int> chosen;
  std::vector<int> blocked(np, 0);  // > 0: adding this point puts 3 on a line
  PointSet set(np);
  bool stop = false;

  auto record = [&] {
    ++result.caps_visited;
    result.largest_cap = std::max(result.largest_cap, static_cast<int>(chosen.size()));
    int tangents = 0;
    for (int p : chosen) {
      if (!geo.o2_holds(set, p, tangents)) return;
    }
    std::vector<SubspaceCanonical> ovoid;
    for (int p : chosen) ovoid.push_back(lat.elements()[lat.points()[p]]);
    result.ovoids.push_back(std::move(ovoid));
    if (max_results != 0 && result.ovoids.size() >= max_results) stop = true;
  };

  auto mark = [&](int p, int delta) {
    for (int s : chosen) {
      const int l = geo.joining_line[s * np + p];
      for (int r : geo.lines[l].members()) blocked[r] += delta;
    }
  };

  auto extend = [&](auto&& self, int start) -> void {
    for (int p = start; p < np && !stop; ++p) {
      if (blocked[p] > 0) continue;
      mark(p, +1);
      chosen.push_back(p);
      set.set(p);
      record();
      self(self, p + 1);
      set.reset(p);
      chosen.pop_back();
      mark(p, -1);
    }
  };
  extend(extend, 0);
  return result;
}

}  // namespace schubert::incidence
