#include "schubert/incidence.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert::incidence {

IncidenceStructure::IncidenceStructure(int num_points, int num_lines, std::vector<std::pair<int, int>> incidences)
    : num_points_(num_points), num_lines_(num_lines), incidences_(std::move(incidences)) {
  std::sort(incidences_.begin(), incidences_.end());
  incidences_.erase(std::unique(incidences_.begin(), incidences_.end()), incidences_.end());
  points_on_.assign(num_lines_, {});
  lines_through_.assign(num_points_, {});
  for (auto [p, l] : incidences_) {
    if (p < 0 || p >= num_points_ || l < 0 || l >= num_lines_) {
      throw Error(ErrorCode::InvalidStructure,
                  "incidence (" + std::to_string(p) + ", " + std::to_string(l) + ") outside P x L");
    }
    points_on_[l].push_back(p);
    lines_through_[p].push_back(l);
  }
}

bool IncidenceStructure::incident(int point, int line) const {
  return std::binary_search(incidences_.begin(), incidences_.end(), std::pair{point, line});
}

namespace {

std::string point_name(const IncidenceStructure& inc, int p) {
  return p < static_cast<int>(inc.point_labels.size()) ? inc.point_labels[p] : "p" + std::to_string(p);
}

std::string line_name(const IncidenceStructure& inc, int l) {
  return l < static_cast<int>(inc.line_labels.size()) ? inc.line_labels[l] : "L" + std::to_string(l);
}

}  // namespace

ProjectiveAxiomsReport check_projective_axioms(const IncidenceStructure& inc) {
  ProjectiveAxiomsReport report;
  const int np = inc.num_points();
  const int nl = inc.num_lines();

  std::vector<std::vector<char>> on(np, std::vector<char>(nl, 0));
  for (auto [p, l] : inc.incidences()) on[p][l] = 1;

  // (a), and the joining line of each pair.
  std::vector<int> joining(static_cast<std::size_t>(np) * np, -1);
  for (int p1 = 0; p1 < np && report.a.pass; ++p1) {
    for (int p2 = p1 + 1; p2 < np; ++p2) {
      int count = 0, line = -1;
      for (int l : inc.lines_through(p1)) {
        if (on[p2][l]) {
          ++count;
          line = l;
        }
      }
      if (count != 1) {
        report.a = {false, point_name(inc, p1) + " and " + point_name(inc, p2) + " lie on " +
                               std::to_string(count) + " lines"};
        break;
      }
      joining[p1 * np + p2] = joining[p2 * np + p1] = line;
    }
  }

  // (b)
  if (!report.a.pass) {
    report.b = {false, "not evaluated: requires (a)"};
  } else {
    // meet_point[l1][l2]: the unique common point of two distinct lines, or -1.
    std::vector<int> meet_point(static_cast<std::size_t>(nl) * nl, -1);
    for (int l1 = 0; l1 < nl; ++l1) {
      for (int p : inc.points_on(l1)) {
        for (int l2 : inc.lines_through(p)) {
          if (l2 != l1) meet_point[l1 * nl + l2] = p;
        }
      }
    }
    auto meets = [&](int l1, int l2) { return l1 == l2 || meet_point[l1 * nl + l2] >= 0; };
    for (int p3 = 0; p3 < np && report.b.pass; ++p3) {
      for (int p1 = 0; p1 < np && report.b.pass; ++p1) {
        if (p1 == p3) continue;
        const int m13 = joining[p1 * np + p3];
        for (int p2 = p1 + 1; p2 < np && report.b.pass; ++p2) {
          if (p2 == p3 || on[p2][m13]) continue;  // collinear
          const int m23 = joining[p2 * np + p3];
          const int m12 = joining[p1 * np + p2];
          for (int l = 0; l < nl; ++l) {
            if (l == m13 || l == m23) continue;
            const int a = meet_point[l * nl + m13];
            const int b = meet_point[l * nl + m23];
            if (a < 0 || b < 0 || a == b) continue;
            if (!meets(l, m12)) {
              report.b = {false, line_name(inc, l) + " meets two sides of triangle (" + point_name(inc, p1) +
                                     ", " + point_name(inc, p2) + ", " + point_name(inc, p3) +
                                     ") but not the third"};
              break;
            }
          }
        }
      }
    }
  }

  // (c)
  for (int l = 0; l < nl; ++l) {
    const auto size = inc.points_on(l).size();
    if (size < 3) {
      report.c = {false, line_name(inc, l) + " has " + std::to_string(size) + " points"};
      break;
    }
  }

  // (d): some pair whose common lines miss a third point.
  bool found = false;
  for (int p1 = 0; p1 < np && !found; ++p1) {
    for (int p2 = p1 + 1; p2 < np && !found; ++p2) {
      std::vector<char> covered(np, 0);
      bool common = false;
      for (int l : inc.lines_through(p1)) {
        if (!on[p2][l]) continue;
        common = true;
        for (int p : inc.points_on(l)) covered[p] = 1;
      }
      for (int p3 = 0; p3 < np && !found; ++p3) {
        if (p3 == p1 || p3 == p2) continue;
        if (!common || !covered[p3]) {
          found = true;
          report.d.witness = point_name(inc, p1) + ", " + point_name(inc, p2) + ", " + point_name(inc, p3);
        }
      }
    }
  }
  if (!found) report.d = {false, "every triple of points is collinear"};

  report.e = {true, "finite structure"};
  return report;
}

IncidenceStructure projective_structure(const SubspaceLattice& lat) {
  const auto& points = lat.points();
  const std::vector<int> empty;
  const auto& lines = lat.n() >= 2 ? lat.of_dim(2) : empty;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    for (int p : lat.points_in(lines[l]).members()) pairs.emplace_back(p, static_cast<int>(l));
  }
  IncidenceStructure inc(static_cast<int>(points.size()), static_cast<int>(lines.size()), std::move(pairs));
  for (int e : points) inc.point_labels.push_back(lat.elements()[e].to_string());
  for (int e : lines) inc.line_labels.push_back(lat.elements()[e].to_string());
  return inc;
}

}  // namespace schubert::incidence
