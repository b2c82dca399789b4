#include "cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "schubert/cell.hpp"
#include "schubert/error.hpp"
#include "schubert/lattice.hpp"
#include "schubert/ovoid.hpp"
#include "schubert/render.hpp"

namespace schubert::cli {

namespace {

using render::Json;
using rootsys::RootSystem;
using rootsys::RootSystemPtr;
using rootsys::WeylElement;

struct Config {
  std::string type = "A";
  int rank = 0;
  int n = 0;
  std::string w;
  int i = 0;
  int j = 0;
  std::string q;
  std::string format = "table";
  std::optional<std::uint64_t> guard;
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;
  std::size_t max_results = 0;
  bool all_w = false;
  bool all_ij = false;
  std::string points;
};

struct PrimePower {
  std::uint64_t q;
  std::uint32_t p;
  std::uint32_t k;
};

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 18) throw Error(ErrorCode::ParseError, "bad " + what + " '" + text + "'");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::ParseError, "bad " + what + " '" + text + "'");
    }
  }
  return std::stoull(text);
}

// "9", "3^2" or "3,2".
PrimePower parse_q(const std::string& text) {
  const auto sep = text.find_first_of("^,");
  if (sep == std::string::npos) {
    const std::uint64_t q = parse_uint(text, "q");
    const auto pk = gf::split_prime_power(q);
    if (!pk) throw Error(ErrorCode::InvalidQ, std::to_string(q) + " is not a prime power");
    return {q, pk->first, pk->second};
  }
  const std::uint64_t p = parse_uint(text.substr(0, sep), "q");
  const std::uint64_t k = parse_uint(text.substr(sep + 1), "q");
  if (p > UINT32_MAX || k == 0 || k > 63) throw Error(ErrorCode::InvalidQ, "q = " + text + " is out of range");
  if (!gf::is_prime(static_cast<std::uint32_t>(p))) {
    throw Error(ErrorCode::InvalidQ, std::to_string(p) + " is not prime");
  }
  std::uint64_t q = 1;
  for (std::uint64_t e = 0; e < k; ++e) {
    if (q > UINT64_MAX / p) throw Error(ErrorCode::InvalidQ, "q = " + text + " is out of range");
    q *= p;
  }
  return {q, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k)};
}

gf::FieldPtr make_field(const std::string& text) {
  const auto pk = parse_q(text);
  return gf::Field::make(pk.p, pk.k);
}

std::uint64_t resolve_guard(const Config& cfg, std::uint64_t fallback) {
  if (cfg.guard) return *cfg.guard;
  if (const char* env = std::getenv("SCHUBERT_GUARD")) return parse_uint(env, "SCHUBERT_GUARD");
  return fallback;
}

std::string show_word(const rootsys::Word& word) {
  return word.empty() ? "(identity)" : rootsys::format_word(word);
}

// Type A system for GL_n, from --n or --rank.
int gl_degree(const Config& cfg) {
  if (cfg.type != "A" && cfg.type != "a") {
    throw Error(ErrorCode::UnsupportedType, "the matrix model is GL_n, type A only (got " + cfg.type + ")");
  }
  if (cfg.n > 0 && cfg.rank > 0 && cfg.n != cfg.rank + 1) {
    throw Error(ErrorCode::ParseError, "--n and --rank disagree");
  }
  const int n = cfg.n > 0 ? cfg.n : cfg.rank + 1;
  if (n < 2) throw Error(ErrorCode::ParseError, "--n (or --rank) is required");
  return n;
}

std::vector<std::pair<int, int>> index_pairs(const Config& cfg, int rank) {
  std::vector<std::pair<int, int>> out;
  if (cfg.all_ij) {
    for (int i = 1; i <= rank; ++i) {
      for (int j = 1; j <= rank; ++j) {
        if (i != j) out.emplace_back(i, j);
      }
    }
    if (out.empty()) {
      throw Error(ErrorCode::IndexError, "rank " + std::to_string(rank) + " has no pair i != j");
    }
    return out;
  }
  if (cfg.i == 0 || cfg.j == 0) throw Error(ErrorCode::ParseError, "--i and --j are required unless --all-ij");
  out.emplace_back(cfg.i, cfg.j);
  return out;
}

std::vector<std::pair<WeylElement, std::string>> elements(const Config& cfg, const RootSystemPtr& sys) {
  std::vector<std::pair<WeylElement, std::string>> out;
  if (cfg.all_w) {
    for (auto& w : rootsys::weyl_enumerate(sys)) {
      auto label = rootsys::format_word(w.word());
      out.emplace_back(std::move(w), std::move(label));
    }
    return out;
  }
  const auto word = rootsys::parse_word(cfg.w, sys->rank());
  out.emplace_back(WeylElement::from_word(sys, word), rootsys::format_word(word));
  return out;
}

void dump(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

const char* pass(bool ok) { return ok ? "pass" : "FAIL"; }

// Subcommands.

int cmd_decompose(const Config& cfg, std::ostream& out) {
  const auto sys = RootSystem::make(cfg.type, cfg.rank);
  const auto word = rootsys::parse_word(cfg.w, sys->rank());
  const auto w = WeylElement::from_word(sys, word);
  std::optional<std::uint64_t> q;
  if (!cfg.q.empty()) q = parse_q(cfg.q).q;
  const auto f = parabolic::factorize_uzv(w, cfg.i, cfg.j);
  if (cfg.format == "json") {
    dump(out, render::factorization_to_json(f, q));
    return kExitOk;
  }
  out << "w          " << show_word(word) << '\n'
      << "u          " << show_word(f.u.word()) << '\n'
      << "z          " << show_word(f.z.word()) << '\n'
      << "v          " << show_word(f.v.word()) << '\n'
      << "length_z   " << f.z.length() << '\n';
  if (q) out << "thickness  " << cells::thickness_formula(w, cfg.i, cfg.j, *q) << '\n';
  return kExitOk;
}

int cmd_thickness(const Config& cfg, std::ostream& out) {
  const auto sys = RootSystem::make(cfg.type, cfg.rank);
  const auto word = rootsys::parse_word(cfg.w, sys->rank());
  const auto w = WeylElement::from_word(sys, word);
  const std::uint64_t q = parse_q(cfg.q).q;
  const auto t = cells::thickness_formula(w, cfg.i, cfg.j, q);
  if (cfg.format == "json") {
    dump(out, Json{{"w", rootsys::format_word(word)},
                   {"i", cfg.i},
                   {"j", cfg.j},
                   {"q", q},
                   {"length_z", parabolic::factorize_uzv(w, cfg.i, cfg.j).z.length()},
                   {"thickness", t}});
  } else {
    out << t << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const int n = gl_degree(cfg);
  const auto field = make_field(cfg.q);
  const auto sys = RootSystem::make("A", n - 1);
  const auto guard = resolve_guard(cfg, cells::kDefaultCellGuard);
  const auto pairs = index_pairs(cfg, sys->rank());

  std::vector<cells::TheoremReport> reports;
  for (const auto& [w, label] : elements(cfg, sys)) {
    for (auto [i, j] : pairs) {
      auto r = cells::verify_theorem(w, i, j, field, n, guard);
      r.w = label;
      reports.push_back(std::move(r));
    }
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.all_agree;

  if (cfg.format == "json") {
    if (reports.size() == 1) {
      dump(out, render::theorem_to_json(reports.front()));
    } else {
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(render::theorem_to_json(r));
      dump(out, Json{{"q", field->q()}, {"n", n}, {"checked", reports.size()}, {"all_agree", all}, {"reports", list}});
    }
  } else {
    for (const auto& r : reports) {
      out << "w=[" << r.w << "] i=" << r.i << " j=" << r.j << " formula=" << r.formula << " observed={";
      bool first = true;
      for (const auto& [count, lines] : r.observed) {
        out << (first ? "" : ",") << count << ":" << lines;
        first = false;
      }
      out << "} lines=" << r.lines << " points=" << r.points << ' ' << (r.all_agree ? "agree" : "DISAGREE") << '\n';
    }
    out << reports.size() << " structures in GL_" << n << "(" << field->q() << "), "
        << (all ? "all agree" : "disagreement found") << '\n';
  }
  return all ? kExitOk : kExitMismatch;
}

int cmd_census(const Config& cfg, std::ostream& out) {
  const auto sys = RootSystem::make(cfg.type, cfg.rank);
  if (sys->rank() < 2) {
    throw Error(ErrorCode::IndexError, "rank " + std::to_string(sys->rank()) + " has no pair i != j");
  }
  const std::uint64_t q = parse_q(cfg.q).q;
  const auto census = cells::thin_census(sys, q, resolve_guard(cfg, rootsys::kDefaultGroupGuard));
  if (cfg.format == "json") {
    dump(out, render::census_to_json(census));
  } else if (cfg.format == "csv") {
    out << render::census_to_csv(census);
  } else {
    out << "thin triples of " << sys->label() << " at q=" << q << ": " << census.size() << '\n';
    for (const auto& t : census) {
      out << "  w=" << show_word(t.w.word()) << "  i=" << t.i << " j=" << t.j << "  len_z=" << t.length_z
          << "  thickness=" << t.thickness << '\n';
    }
  }
  return kExitOk;
}

int cmd_cell(const Config& cfg, std::ostream& out) {
  const int n = gl_degree(cfg);
  const auto field = make_field(cfg.q);
  const auto sys = RootSystem::make("A", n - 1);
  const auto w = WeylElement::from_word(sys, rootsys::parse_word(cfg.w, sys->rank()));
  const auto cell = cells::enumerate_cell(w, field, n, resolve_guard(cfg, cells::kDefaultCellGuard));
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const auto& p : cell) list.push_back(render::cell_point_to_json(p));
    dump(out, Json{{"w", rootsys::format_word(w.word())}, {"q", field->q()}, {"n", n}, {"points", list}});
    return kExitOk;
  }
  out << "cell of w=" << show_word(w.word()) << " in GL_" << n << "(" << field->q() << "): " << cell.size()
      << " points\n";
  for (const auto& p : cell) {
    out << "  c=(";
    for (std::size_t k = 0; k < p.params.size(); ++k) out << (k ? "," : "") << field->format(p.params[k]);
    out << ")  flag=";
    for (std::size_t k = 0; k < p.borel_key.chain.size(); ++k) {
      out << (k ? " < " : "") << p.borel_key.chain[k].to_string();
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_lattice_check(const Config& cfg, std::ostream& out) {
  const auto field = make_field(cfg.q);
  if (cfg.n < 1) throw Error(ErrorCode::ParseError, "--n is required");
  const auto lat = incidence::lattice_make(field, cfg.n, resolve_guard(cfg, incidence::kDefaultLatticeGuard));
  const auto fl = incidence::FiniteLattice::from_subspaces(lat);

  const auto modular = cfg.samples ? incidence::check_modular_sampled(fl, cfg.samples, cfg.seed)
                                   : incidence::check_modular(fl);
  const auto atomic = incidence::check_atomic(fl);
  const auto ranked = incidence::check_ranked(fl);
  incidence::LatticeCheck grassmann{false, {}, "not evaluated: lattice is not ranked"};
  if (ranked.check.ok) {
    grassmann = cfg.samples ? incidence::check_grassmann_sampled(fl, ranked.rank, cfg.samples, cfg.seed + 1)
                            : incidence::check_grassmann(fl, ranked.rank);
  }
  bool ok = modular.ok && atomic.ok && ranked.check.ok && grassmann.ok;

  std::optional<incidence::ProjectiveAxiomsReport> axioms;
  incidence::LatticeCheck line_size;
  if (cfg.n >= 3) {
    const auto inc = incidence::projective_structure(lat);
    axioms = incidence::check_projective_axioms(inc);
    for (int l = 0; l < inc.num_lines(); ++l) {
      if (inc.points_on(l).size() != field->q() + 1) {
        line_size = {false, {l}, inc.line_labels[l] + " has " + std::to_string(inc.points_on(l).size()) + " points"};
        break;
      }
    }
    ok = ok && axioms->all_pass() && line_size.ok;
  }

  if (cfg.format == "json") {
    Json j{{"q", field->q()},
           {"n", cfg.n},
           {"elements", lat.size()},
           {"mode", cfg.samples ? "sampled" : "exhaustive"},
           {"modular", render::lattice_check_to_json(modular)},
           {"atomic", render::lattice_check_to_json(atomic)},
           {"ranked", render::lattice_check_to_json(ranked.check)},
           {"grassmann", render::lattice_check_to_json(grassmann)},
           {"projective", axioms ? render::axioms_to_json(*axioms) : Json(nullptr)},
           {"line_size", axioms ? render::lattice_check_to_json(line_size) : Json(nullptr)},
           {"all_pass", ok}};
    if (cfg.samples) {
      j["samples"] = cfg.samples;
      j["seed"] = cfg.seed;
    }
    dump(out, j);
  } else {
    out << "subspace lattice of GF(" << field->q() << ")^" << cfg.n << ": " << lat.size() << " elements ("
        << (cfg.samples ? std::to_string(cfg.samples) + " samples, seed " + std::to_string(cfg.seed) : "exhaustive")
        << ")\n";
    auto line = [&](const char* name, const incidence::LatticeCheck& c) {
      out << "  " << name << pass(c.ok);
      if (!c.ok) out << "  " << c.detail;
      out << '\n';
    };
    line("modular     ", modular);
    line("atomic      ", atomic);
    line("ranked      ", ranked.check);
    line("grassmann   ", grassmann);
    if (axioms) {
      const std::pair<const char*, const incidence::AxiomResult*> rows[] = {
          {"axiom (a)   ", &axioms->a}, {"axiom (b)   ", &axioms->b}, {"axiom (c)   ", &axioms->c},
          {"axiom (d)   ", &axioms->d}, {"axiom (e)   ", &axioms->e}};
      for (const auto& [name, a] : rows) {
        out << "  " << name << pass(a->pass);
        if (!a->pass) out << "  " << a->witness;
        out << '\n';
      }
      line("line size   ", line_size);
    } else {
      out << "  projective axioms not applicable for n < 3\n";
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_ovoid_table(std::ostream& out, const incidence::OvoidReport& r, std::size_t size) {
  out << "points  " << size << '\n';
  out << "O1      " << pass(r.o1);
  if (r.o1_witness) out << "  line " << r.o1_witness->to_string() << " holds 3 or more points";
  out << '\n';
  out << "O2      " << pass(r.o2);
  if (!r.o2) out << "  " << r.o2_detail;
  out << '\n';
  out << "tangent lines per point  ";
  if (r.tangent_counts.empty()) out << "-";
  for (std::size_t k = 0; k < r.tangent_counts.size(); ++k) out << (k ? " " : "") << r.tangent_counts[k];
  out << '\n';
  out << "ovoid   " << (r.is_ovoid() ? "yes" : "no") << '\n';
}

int cmd_ovoid_check(const Config& cfg, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(cfg.points);
  incidence::OvoidReport report;
  std::size_t size = 0;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    err << "warning: empty point set; O1 and O2 hold vacuously\n";
  } else {
    const auto file = render::parse_point_set(text);
    if (file.points.empty()) err << "warning: empty point set; O1 and O2 hold vacuously\n";
    const auto lat =
        incidence::lattice_make(file.field, file.n, resolve_guard(cfg, incidence::kDefaultLatticeGuard));
    report = incidence::check_ovoid(file.points, lat);
    size = file.points.size();
  }
  if (cfg.format == "json") {
    dump(out, render::ovoid_to_json(report));
  } else {
    print_ovoid_table(out, report, size);
  }
  return kExitOk;
}

int cmd_ovoid_search(const Config& cfg, std::ostream& out) {
  const auto field = make_field(cfg.q.empty() ? "2" : cfg.q);
  const int n = cfg.n > 0 ? cfg.n : 4;
  const auto lat = incidence::lattice_make(field, n, resolve_guard(cfg, incidence::kDefaultLatticeGuard));
  const auto result = incidence::search_ovoids(lat, cfg.max_results);
  if (cfg.format == "json") {
    Json ovoids = Json::array();
    for (const auto& o : result.ovoids) {
      Json pts = Json::array();
      for (const auto& p : o) pts.push_back(p.row(0));
      ovoids.push_back(pts);
    }
    dump(out, Json{{"q", field->q()},
                   {"n", n},
                   {"caps_visited", result.caps_visited},
                   {"largest_cap", result.largest_cap},
                   {"found", result.ovoids.size()},
                   {"ovoids", ovoids}});
    return kExitOk;
  }
  out << "PG(" << n - 1 << "," << field->q() << "): " << result.caps_visited << " caps visited, largest "
      << result.largest_cap << ", " << result.ovoids.size() << " sets pass O1 and O2\n";
  for (const auto& o : result.ovoids) {
    out << "  size " << o.size() << ":";
    for (const auto& p : o) out << ' ' << p.to_string();
    out << '\n';
  }
  return kExitOk;
}

int cmd_shortcut_check(const Config& cfg, std::ostream& out) {
  const int n = gl_degree(cfg);
  const auto field = make_field(cfg.q);
  const auto sys = RootSystem::make("A", n - 1);
  const auto guard = resolve_guard(cfg, cells::kDefaultCellGuard);
  const auto pairs = index_pairs(cfg, sys->rank());

  std::vector<cells::ShortcutReport> reports;
  std::size_t checked = 0, disagreements = 0;
  for (const auto& [w, label] : elements(cfg, sys)) {
    for (auto [i, j] : pairs) {
      auto r = cells::validate_incidence_shortcut(w, i, j, field, n, guard);
      r.w = label;
      checked += r.pairs_checked;
      disagreements += r.counterexamples.size();
      reports.push_back(std::move(r));
    }
  }
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(render::shortcut_to_json(r));
    dump(out, Json{{"q", field->q()},
                   {"n", n},
                   {"test", "g h^-1 in B, g and h the coset representatives x_i(c) n_i^-1 ... over minimal u"},
                   {"pairs_checked", checked},
                   {"disagreements", disagreements},
                   {"agrees", disagreements == 0},
                   {"reports", list}});
  } else {
    for (const auto& r : reports) {
      out << "w=[" << r.w << "] i=" << r.i << " j=" << r.j << " pairs=" << r.pairs_checked
          << " disagreements=" << r.counterexamples.size() << '\n';
      for (const auto& c : r.counterexamples) {
        out << "  point " << c.point.to_string() << " line " << c.line.to_string()
            << " existential=" << (c.existential ? "incident" : "not incident")
            << " shortcut=" << (c.shortcut ? "incident" : "not incident") << '\n';
      }
    }
    out << checked << " pairs, " << disagreements << " disagreements\n";
  }
  return disagreements == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Thickness of Schubert-cell incidence structures in GL_n(F_q) and Weyl groups"};
  app.name("schubert");
  app.require_subcommand(1);

  auto add_type_rank = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Root system type: A, B, C, D, G2, F4");
    sub->add_option("--rank", cfg.rank, "Root system rank");
  };
  auto add_word = [&](CLI::App* sub) {
    sub->add_option("--w", cfg.w, "Word in simple reflections, e.g. \"1 3 2 1 3\"; empty is the identity");
  };
  auto add_ij = [&](CLI::App* sub) {
    sub->add_option("--i", cfg.i, "Point parabolic index");
    sub->add_option("--j", cfg.j, "Line parabolic index");
  };
  auto add_q = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--q", cfg.q, "Field order: 9, 3^2 or 3,2");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto add_guard = [&](CLI::App* sub) {
    sub->add_option("--guard", cfg.guard, "Enumeration guard (overrides SCHUBERT_GUARD)");
  };

  auto* decompose = app.add_subcommand("decompose", "Factor w = u z v for the pair (i, j)");
  add_type_rank(decompose);
  decompose->get_option("--rank")->required();
  add_word(decompose);
  add_ij(decompose);
  decompose->get_option("--i")->required();
  decompose->get_option("--j")->required();
  add_q(decompose, false);
  add_format(decompose, {"table", "json"});

  auto* thickness = app.add_subcommand("thickness", "Formula thickness q^l(z)");
  add_type_rank(thickness);
  thickness->get_option("--rank")->required();
  add_word(thickness);
  add_ij(thickness);
  thickness->get_option("--i")->required();
  thickness->get_option("--j")->required();
  add_q(thickness, true);
  add_format(thickness, {"table", "json"});

  auto* verify = app.add_subcommand("verify", "Compare the formula with brute-force incidence counts in GL_n(F_q)");
  add_type_rank(verify);
  verify->add_option("--n", cfg.n, "Matrix size");
  add_word(verify);
  add_ij(verify);
  add_q(verify, true);
  verify->add_flag("--all-w", cfg.all_w, "Every element of W");
  verify->add_flag("--all-ij", cfg.all_ij, "Every ordered pair i != j");
  add_format(verify, {"table", "json"});
  add_guard(verify);

  auto* census = app.add_subcommand("census", "Triples (w, i, j) with at most 2 points per line");
  add_type_rank(census);
  census->get_option("--rank")->required();
  add_q(census, true);
  add_format(census, {"table", "json", "csv"});
  add_guard(census);

  auto* cell = app.add_subcommand("cell", "List the cell points of BwB/B");
  add_type_rank(cell);
  cell->add_option("--n", cfg.n, "Matrix size");
  add_word(cell);
  add_q(cell, true);
  add_format(cell, {"table", "json"});
  add_guard(cell);

  auto* lattice = app.add_subcommand("lattice-check", "Lattice and projective-axiom checks on subspaces of F_q^n");
  lattice->add_option("--n", cfg.n, "Dimension")->required();
  add_q(lattice, true);
  lattice->add_option("--samples", cfg.samples, "Random samples for modularity and Grassmann (0: exhaustive)");
  lattice->add_option("--seed", cfg.seed, "Seed for sampled checks");
  add_format(lattice, {"table", "json"});
  add_guard(lattice);

  auto* ovoid_check = app.add_subcommand("ovoid-check", "Check O1 and O2 for a point-set file");
  ovoid_check->add_option("--points", cfg.points, "Point-set JSON file")->required();
  add_format(ovoid_check, {"table", "json"});
  add_guard(ovoid_check);

  auto* ovoid_search = app.add_subcommand("ovoid-search", "Search PG(n-1, q) for sets passing O1 and O2");
  ovoid_search->add_option("--n", cfg.n, "Dimension (default 4)");
  add_q(ovoid_search, false);
  ovoid_search->add_option("--max", cfg.max_results, "Stop after this many results (0: all)");
  add_format(ovoid_search, {"table", "json"});
  add_guard(ovoid_search);

  auto* shortcut = app.add_subcommand("shortcut-check", "Compare the g h^-1 in B test with existential incidence");
  add_type_rank(shortcut);
  shortcut->add_option("--n", cfg.n, "Matrix size");
  add_word(shortcut);
  add_ij(shortcut);
  add_q(shortcut, true);
  shortcut->add_flag("--all-w", cfg.all_w, "Every element of W");
  shortcut->add_flag("--all-ij", cfg.all_ij, "Every ordered pair i != j");
  add_format(shortcut, {"table", "json"});
  add_guard(shortcut);

  std::vector<const char*> argv{"schubert"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (*decompose) return cmd_decompose(cfg, out);
    if (*thickness) return cmd_thickness(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*census) return cmd_census(cfg, out);
    if (*cell) return cmd_cell(cfg, out);
    if (*lattice) return cmd_lattice_check(cfg, out);
    if (*ovoid_check) return cmd_ovoid_check(cfg, out, err);
    if (*ovoid_search) return cmd_ovoid_search(cfg, out);
    if (*shortcut) return cmd_shortcut_check(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? kExitParse : kExitDomain;
  }
  return kExitParse;
}

}  // namespace schubert::cli
