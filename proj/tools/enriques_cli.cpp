#include "enriques/catalog.hpp"
#include "enriques/classification.hpp"
#include "enriques/lattice.hpp"
#include "enriques/poly.hpp"
#include "enriques/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace enriques;
using ojson = nlohmann::ordered_json;

namespace {

struct Globals {
  bool json = false;
  std::string catalog;
};

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

ojson edges_json(const CurveConfig& g) {
  ojson e = ojson::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g(i, j) != 0) e.push_back({i, j, g(i, j)});
  return e;
}

ojson entry_json(const CensusEntry& e) {
  return {{"label", e.label()},
          {"types", {e.triple[0].str(), e.triple[1].str(), e.triple[2].str()}},
          {"variant", to_string(gluing_variant(e))},
          {"components", e.glued.size()},
          {"G", {e.G_types[0].str(), e.G_types[1].str(), e.G_types[2].str()}},
          {"rank", e.rank},
          {"disc", e.disc.str()},
          {"verdict", e.verdict.str()},
          {"S", {e.S[0], e.S[1], e.S[2]}},
          {"edges", edges_json(e.glued)}};
}

std::string entry_row(const CensusEntry& e) {
  return pad(e.label(), 16) + pad("n=" + std::to_string(e.glued.size()), 6) + pad("G=" + e.G_str(), 22) +
         pad("rank " + std::to_string(e.rank), 9) + pad("disc " + e.disc.str(), 10) + to_string(gluing_variant(e));
}

// ---------------------------------------------------------------- subcommands

struct ClassifyOpts {
  std::size_t max_components = 11;
  std::size_t min_components = 0;
  std::string filter;
  bool table = false;
};

Report run_classify(const ClassifyOpts& o, const Globals& g) {
  Report r;
  r.command = "classify";
  if (o.table) {
    ojson rows = ojson::array();
    for (const auto& G : decomposition_fiber_types()) {
      auto row = decompose_fiber(G);
      r.lines.push_back(row.str());
      ojson pairs = ojson::array();
      for (const auto& [a, b] : row.pairs) pairs.push_back({a.str(), b.str()});
      rows.push_back({{"G", G.str()}, {"pairs", pairs}});
    }
    r.artifacts["decompositions"] = rows;
  }
  CensusOptions opt;
  opt.max_components = o.max_components;
  auto census = enumerate_triangles(opt);
  std::vector<CensusEntry> selected;
  for (auto& e : census)
    if (e.glued.size() >= o.min_components) selected.push_back(std::move(e));
  bool bound_ok = true;
  for (const auto& e : selected) bound_ok = bound_ok && e.glued.size() <= o.max_components;
  r.check("census", bound_ok,
          std::to_string(selected.size()) + " entries with " + std::to_string(o.min_components) + " to " +
              std::to_string(o.max_components) + " components");

  if (o.filter.empty()) {
    r.lines.push_back("census (" + std::to_string(selected.size()) + " entries)");
    ojson arr = ojson::array();
    for (const auto& e : selected) {
      r.lines.push_back("  " + entry_row(e));
      arr.push_back(entry_json(e));
    }
    r.artifacts["census"] = arr;
    return r;
  }

  auto filtered = discriminant_filter(std::move(selected));
  if (o.filter == "discriminant") {
    r.lines.push_back("kept (" + std::to_string(filtered.kept.size()) + ")");
    ojson kept = ojson::array(), excl = ojson::array();
    for (const auto& e : filtered.kept) {
      r.lines.push_back("  " + entry_row(e));
      kept.push_back(entry_json(e));
    }
    r.lines.push_back("excluded (" + std::to_string(filtered.excluded.size()) + ")");
    for (const auto& e : filtered.excluded) {
      r.lines.push_back("  " + entry_row(e));
      excl.push_back(entry_json(e));
    }
    r.artifacts["kept"] = kept;
    r.artifacts["excluded"] = excl;
    return r;
  }

  auto sv = derive_survivors(std::move(filtered.kept), reference_graphs(g.catalog));
  ojson entries = ojson::array(), outcomes = ojson::array();
  r.lines.push_back("verdicts");
  bool inconclusive = false;
  for (const auto& e : sv.entries) {
    r.lines.push_back("  " + pad(e.label(), 16) + e.verdict.str());
    entries.push_back({{"label", e.label()}, {"verdict", e.verdict.str()}});
    inconclusive = inconclusive || e.verdict.kind == Verdict::Kind::Inconclusive;
  }
  r.lines.push_back("survivor outcomes (" + std::to_string(sv.outcomes.size()) + ")");
  bool identified = true;
  for (const auto& s : sv.outcomes) {
    r.lines.push_back("  " + pad(s.entry, 16) + pad("completion " + s.completion, 18) + pad("graph " + s.surface_type, 14) +
                      "rank " + std::to_string(s.rank) + ", disc " + s.disc.str());
    outcomes.push_back({{"entry", s.entry},
                        {"completion", s.completion},
                        {"graph", s.surface_type},
                        {"rank", s.rank},
                        {"disc", s.disc.str()},
                        {"curves", s.graph.size()}});
    identified = identified && s.surface_type != "unidentified";
  }
  r.artifacts["entries"] = entries;
  r.artifacts["outcomes"] = outcomes;
  r.check("survivor graphs identified", identified, std::to_string(sv.outcomes.size()) + " outcomes");
  if (inconclusive) r.checks.push_back({"all entries decided", CheckStatus::Inconclusive, "see verdicts"});
  return r;
}

Report run_verify(const std::string& name, const Globals& g) {
  Report r;
  r.command = "verify-surface";
  auto s = load_surface(name, g.catalog);
  auto rep = verify_surface(s);
  r.lines.push_back(s.name + ": " + s.description);
  ojson claims = ojson::array();
  for (const auto& c : rep.results) {
    r.check(c.claim, c.pass, c.pass ? c.actual : "expected " + c.expected + ", got " + c.actual);
    claims.push_back({{"claim", c.claim}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  r.artifacts["surface"] = s.name;
  r.artifacts["claims"] = claims;
  return r;
}

Report run_nd(const std::string& name, const Globals& g) {
  Report r;
  r.command = "nd";
  auto s = load_surface(name, g.catalog);
  r.artifacts["surface"] = s.name;
  try {
    auto b = nd_bounds(s);
    r.lines.push_back(s.name + ": min " + std::to_string(b.min_nd) + ", max " + std::to_string(b.max_nd));
    r.artifacts["min"] = b.min_nd;
    r.artifacts["max"] = b.max_nd;
    if (s.claims.contains("nd")) {
      auto want = s.claims.at("nd").get<std::vector<std::size_t>>();
      r.check("nd matches catalog claim", want[0] == b.min_nd && want[1] == b.max_nd,
              "claimed (" + std::to_string(want[0]) + "," + std::to_string(want[1]) + ")");
    }
  } catch (const IncompleteCatalog&) {
    r.lines.push_back(s.name + ": catalog entry is not a complete dual graph");
    r.checks.push_back({"nd", CheckStatus::Inconclusive, "incomplete catalog entry"});
  }
  return r;
}

Report run_fibrations(const std::string& name, const Globals& g) {
  Report r;
  r.command = "fibrations";
  auto s = load_surface(name, g.catalog);
  r.artifacts["surface"] = s.name;
  ojson arr = ojson::array();
  try {
    auto cls = enumerate_fibration_classes(s);
    r.lines.push_back(s.name + ": " + std::to_string(cls.size()) + " fibration classes");
    for (const auto& c : cls) {
      std::vector<std::string> fibs;
      ojson fj = ojson::array();
      for (std::size_t i = 0; i < c.configs.size(); ++i) {
        fibs.push_back(c.types[i].str() + " " + to_string(c.mult[i]) + " [" + c.configs[i] + "]");
        fj.push_back({{"type", c.types[i].str()}, {"multiplicity", to_string(c.mult[i])}, {"support", c.configs[i]}});
      }
      r.lines.push_back("  " + pad(c.label, 10) + detail::join(fibs, "; "));
      arr.push_back({{"label", c.label}, {"fibers", fj}});
    }
    r.check("fibration classes consistent", true, std::to_string(cls.size()) + " classes");
  } catch (const InvariantViolation& e) {
    r.check("fibration classes consistent", false, e.what());
  }
  r.artifacts["fibrations"] = arr;
  return r;
}

Report run_sextic(const std::string& q_expr) {
  Report r;
  r.command = "sextic-check";
  MultiPoly Q = q_expr.empty() ? generic_form(2, {0, 1, 2, 3}, 0) : parse_poly(q_expr);
  r.lines.push_back("Q = " + Q.str());
  auto c = castelnuovo_transform(Q);
  r.lines.push_back("Q' = " + c.Q_prime.str());
  r.lines.push_back("quintic = " + c.quintic.str());
  r.artifacts["Q"] = Q.str();
  r.artifacts["Q_prime"] = c.Q_prime.str();
  r.artifacts["quintic"] = c.quintic.str();
  r.artifacts["certificate"] = c.certificate;
  r.check("castelnuovo quintic", c.certificate, q_expr.empty() ? "generic Q" : "Q = " + q_expr);
  if (q_expr.empty()) {
    std::size_t k = 0;
    auto C1 = generic_form(3, {0, 1, 2}, 0, &k);
    auto C2 = generic_form(3, {0, 1, 2}, k, &k);
    auto Qpp = generic_form(2, {0, 1, 2}, k, &k);
    auto o = double_plane_octic(C1, C2, Qpp);
    r.artifacts["octic_terms"] = o.discriminant.size();
    r.artifacts["octic_certificate"] = o.certificate;
    r.check("double plane octic", o.certificate, "generic C1, C2, Q''");
  }
  return r;
}

struct LatticeOpts {
  std::size_t i = 1, j = 2;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  long long height = 20;
};

ojson vec_json(const IntVec& v) {
  ojson a = ojson::array();
  for (const auto& c : v.coords) a.push_back(c.str());
  return {{"coords", a}};
}

Report run_lattice(const LatticeOpts& o) {
  Report r;
  r.command = "lattice";
  if (o.i < 1 || o.i > 10 || o.j < 1 || o.j > 10 || o.i == o.j)
    throw CLI::ValidationError("--i/--j", "need distinct indices in 1..10");
  const GramForm g = e10_gram();
  const auto rd = rank_and_discriminant(g);
  r.lines.push_back("E10 = U + E8(-1): rank " + std::to_string(rd.rank) + ", disc " + rd.disc.str());
  r.check("E10 unimodular", rd.rank == 10 && rd.disc == 1);
  ojson entries = ojson::array();
  for (std::size_t a = 0; a < 10; ++a) {
    ojson row = ojson::array();
    for (std::size_t b = 0; b < 10; ++b) row.push_back(g(a, b).str());
    entries.push_back(row);
  }
  r.artifacts["gram"] = {{"dim", 10}, {"entries", entries}};

  const auto t = e10_isotropic_basis();
  r.check("f_i.f_j = 1 - delta_ij", t.valid());
  ojson fs = ojson::array();
  for (std::size_t k = 0; k < t.vectors.size(); ++k) {
    std::string s;
    for (const auto& c : t.vectors[k].coords) s += (s.empty() ? "" : " ") + c.str();
    r.lines.push_back("f" + std::to_string(k + 1) + " = (" + s + ")");
    fs.push_back(vec_json(t.vectors[k]));
  }
  r.artifacts["f"] = fs;
  const auto idx = sublattice_index(t.vectors, g);
  r.lines.push_back("index of span(f) = " + (idx ? idx->str() : std::string("infinite")));
  r.check("index of span(f) is 3", idx && *idx == 3);

  const IntVec e = solve_cossec_vector(t, o.i - 1, o.j - 1);
  std::string prods;
  bool ok = gram_product(e, e, g) == 0;
  for (std::size_t k = 0; k < 10; ++k) {
    const BigInt p = gram_product(e, t.vectors[k], g);
    prods += (prods.empty() ? "" : ",") + p.str();
    ok = ok && p == ((k + 1 == o.i || k + 1 == o.j) ? 2 : 1);
  }
  const BigInt total = gram_product(e, t.sum(), g);
  const std::string name = "e_{" + std::to_string(o.i) + "," + std::to_string(o.j) + "}";
  r.lines.push_back(name + ".f = (" + prods + "), " + name + ".sum f = " + total.str());
  r.check(name + " isotropic with products (2,2,1^8)", ok && total == 12, "sum " + total.str());
  const auto d = divisibility_check(e, t);
  r.check(name + " outside span(f)", d.div3 && !d.in_span && !d.div9);
  r.artifacts["cossec"] = vec_json(e);

  if (o.samples > 0) {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long long> dist(-o.height, o.height);
    std::size_t bad = 0, span_bad = 0;
    for (std::size_t s = 0; s < o.samples; ++s) {
      IntVec v;
      for (int k = 0; k < 10; ++k) v.coords.emplace_back(dist(rng));
      const auto res = divisibility_check(v, t);
      if (!res.div3) ++bad;
      if (res.in_span && !res.div9) ++span_bad;
    }
    r.check("3 | v.sum f on random vectors", bad == 0,
            std::to_string(o.samples) + " samples, " + std::to_string(bad) + " failures");
    r.check("v in span(f) implies 9 | v.sum f", span_bad == 0, std::to_string(span_bad) + " failures");
  }
  return r;
}

void emit(const Report& r, const Globals& g) {
  if (g.json)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enriques surface 3-sequence toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--catalog-dir", g.catalog, "Directory of surface JSON files");

  ClassifyOpts co;
  auto* classify = app.add_subcommand("classify", "Enumerate triangle graphs");
  classify->add_option("--max-components", co.max_components, "Largest glued graph")->check(CLI::Range(1, 11));
  classify->add_option("--min-components", co.min_components, "Smallest glued graph reported");
  classify->add_option("--filter", co.filter, "discriminant or survivors")
      ->check(CLI::IsMember({"discriminant", "survivors"}));
  classify->add_flag("--table", co.table, "Also print fiber decompositions");

  std::string surface;
  auto* verify = app.add_subcommand("verify-surface", "Check catalog claims for a surface");
  verify->add_option("name", surface, "Surface name")->required();
  auto* nd = app.add_subcommand("nd", "Non-degeneracy bounds of a surface");
  nd->add_option("name", surface, "Surface name")->required();
  auto* fib = app.add_subcommand("fibrations", "List genus one fibrations of a surface");
  fib->add_option("name", surface, "Surface name")->required();

  std::string q;
  auto* sextic = app.add_subcommand("sextic-check", "Certify the Castelnuovo quintic and octic identities");
  sextic->add_option("--q", q, "Quadric in x0..x3 (default: generic)");

  LatticeOpts lo;
  auto* lattice = app.add_subcommand("lattice", "E10 model, isotropic 10-tuple and divisibility checks");
  lattice->add_option("--i", lo.i, "First index of e_{i,j}");
  lattice->add_option("--j", lo.j, "Second index of e_{i,j}");
  lattice->add_option("--samples", lo.samples, "Random vectors for the divisibility property");
  lattice->add_option("--seed", lo.seed, "Random seed");
  lattice->add_option("--height", lo.height, "Coordinate bound for random vectors")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report r;
    if (*classify) r = run_classify(co, g);
    else if (*verify) r = run_verify(surface, g);
    else if (*nd) r = run_nd(surface, g);
    else if (*fib) r = run_fibrations(surface, g);
    else if (*sextic) r = run_sextic(q);
    else r = run_lattice(lo);
    emit(r, g);
    return r.exit_code();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
