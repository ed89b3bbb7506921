// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "enriques/catalog.hpp"
#include "enriques/classification.hpp"
#include "enriques/lattice.hpp"
#include "enriques/poly.hpp"
#include "enriques/root_fibers.hpp"

#include "golden_match.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace enriques;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << s << "s";
  if (limit_s > 0 && s >= limit_s) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << id << ". " << name << " [" << t.str() << "]"
            << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

const ClaimResult* claim(const SurfaceReport& r, const std::string& prefix) {
  for (const auto& c : r.results)
    if (c.claim.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

const std::vector<CensusEntry>& census() {
  static const std::vector<CensusEntry> c = enumerate_triangles(11);
  return c;
}

}  // namespace

int main() {
  criterion(1, "decomposition table", 1.0, [] {
    const auto rows = golden::load("decomposition_table.json");
    std::vector<std::string> bad;
    for (const auto& G : decomposition_fiber_types())
      if (decompose_fiber(G).pairs != golden::expected_pairs(rows, G)) bad.push_back(G.str());
    return Outcome{bad.empty(), bad.empty() ? "19 fiber types" : "mismatch at " + join(bad)};
  });

  criterion(2, "census and discriminant filter against the 15-type list", 60.0, [] {
    const auto gold = golden::load("fifteen_types.json");
    const auto c = golden::compare_census(gold, census());
    const bool excl = c.excluded_families == gold.at("exclusion").at("count").get<std::size_t>() &&
                      c.exclusion_errors.empty();
    std::vector<std::string> notes;
    if (!c.missing.empty()) notes.push_back(std::to_string(c.missing.size()) + " families missing");
    if (!c.ambiguous.empty()) notes.push_back("ambiguous " + join(c.ambiguous));
    if (!c.extra.empty()) notes.push_back("extra " + join(c.extra));
    if (!excl) notes.push_back("exclusions " + join(c.exclusion_errors));
    if (!c.disc_errors.empty()) notes.push_back("discriminants " + join(c.disc_errors));
    if (notes.empty()) notes.push_back("15 families, 7 exclusions, d=64 and d=144 confirmed");
    return Outcome{c.exact() && excl && c.disc_errors.empty(), join(notes)};
  });

  const auto survivors = derive_survivors(discriminant_filter(census()).kept, reference_graphs());

  criterion(3, "survivors", 0, [&] {
    const auto gold = golden::load("fifteen_types.json").at("survivors");
    std::vector<std::string> got;
    for (const auto& o : survivors.outcomes) got.push_back(detail::types_str(o.triple) + "->" + o.surface_type);
    bool ok = survivors.outcomes.size() == gold.size();
    for (std::size_t i = 0; ok && i < gold.size(); ++i) {
      const auto t = gold[i].at("triple").get<std::vector<std::string>>();
      const auto& o = survivors.outcomes[i];
      ok = detail::types_str(o.triple) == "(" + t[0] + "," + t[1] + "," + t[2] + ")" &&
           o.completion == gold[i].at("completion").get<std::string>() &&
           o.surface_type == gold[i].at("graph").get<std::string>();
    }
    return Outcome{ok, join(got)};
  });

  criterion(4, "survivor lattices have rank 10 and disc in {1,4,16}", 0, [&] {
    bool ok = !survivors.outcomes.empty();
    std::vector<std::string> d;
    for (const auto& o : survivors.outcomes) {
      ok = ok && o.rank == 10 && discriminant_allowed(o.disc);
      d.push_back(o.surface_type + " rank " + std::to_string(o.rank) + " disc " + o.disc.str());
    }
    return Outcome{ok, join(d)};
  });

  criterion(5, "catalog claims", 0, [] {
    std::vector<std::string> bad;
    auto expect = [&](bool c, const std::string& what) {
      if (!c) bad.push_back(what);
    };
    const auto a7 = verify_surface(load_surface("A7~"));
    expect(a7.all_pass(), "A7~ claims");
    const auto* w = claim(a7, "specialness witness");
    expect(w && w->actual == "S_3 = R6", "A7~ witness");
    const auto* ob = claim(a7, "non-extendable");
    expect(ob && ob->pass && ob->claim.find("multiplicity 2") != std::string::npos, "A7~ obstruction");

    const auto bp = verify_surface(load_surface("BP"));
    expect(bp.all_pass(), "BP claims");
    w = claim(bp, "specialness witness");
    expect(w && w->actual == "S_3 = R11", "BP witness");
    expect(claim(bp, "non-extendable (no simple component)") != nullptr, "BP obstruction");

    const auto e72s = load_surface("E7(2)");
    const auto e72 = verify_surface(e72s);
    expect(e72.all_pass(), "E7(2) claims");
    w = claim(e72, "specialness witness");
    expect(w && w->actual == "S_3 = R", "E7(2) witness");
    expect(enumerate_fibration_classes(e72s).size() == 3, "E7(2) fibration count");

    const auto d4 = verify_surface(load_surface("2D4~"));
    expect(d4.all_pass(), "2D4~ claims");
    int unique = 0, non_special = 0;
    for (const auto& r : d4.results) {
      if (r.claim.rfind("3-sequences through F", 0) == 0 && r.pass) ++unique;
      if (r.claim.find(") special") != std::string::npos && r.actual == "no") ++non_special;
    }
    expect(unique == 6 && non_special == 6, "2D4~ unique non-special sequences");
    const auto* p = claim(d4, "(-F4+G1+G2).F5");
    expect(p && p->actual == "-2", "2D4~ product");
    return Outcome{bad.empty(), bad.empty() ? "A7~, BP, E7(2), 2D4~" : "failed " + join(bad)};
  });

  criterion(6, "non-degeneracy values", 0, [] {
    std::vector<std::string> got;
    bool ok = true;
    auto check = [&](const std::string& name, NdBounds want) {
      const auto b = nd_bounds(load_surface(name));
      ok = ok && b == want;
      got.push_back(name + " (" + std::to_string(b.min_nd) + "," + std::to_string(b.max_nd) + ")");
    };
    check("E7(2)", {3, 3});
    check("2D4~", {3, 4});
    check("typeI", {3, 4});
    for (auto [name, mx] : {std::pair<const char*, std::size_t>{"E8~", 1}, {"D8~", 2}, {"E7~", 2}}) {
      const auto b = nd_bounds(load_surface(name));
      ok = ok && b.max_nd == mx;
      got.push_back(std::string(name) + " max " + std::to_string(b.max_nd));
    }
    return Outcome{ok, join(got)};
  });

  criterion(7, "lattice identities", 0, [] {
    const auto t = e10_isotropic_basis();
    bool ok = t.valid() && sublattice_index(t.vectors, t.ambient) == BigInt(3);
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = i + 1; j < 10; ++j) {
        const IntVec e = solve_cossec_vector(t, i, j);
        ok = ok && gram_product(e, e, t.ambient) == 0 && gram_product(e, t.sum(), t.ambient) == 12;
        for (std::size_t k = 0; k < 10; ++k)
          ok = ok && gram_product(e, t.vectors[k], t.ambient) == ((k == i || k == j) ? 2 : 1);
      }
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> d(-50, 50);
    int bad = 0;
    for (int s = 0; s < 10000; ++s) {
      IntVec v;
      for (int k = 0; k < 10; ++k) v.coords.emplace_back(d(rng));
      if (!divisibility_check(v, t).div3) ++bad;
    }
    return Outcome{ok && bad == 0, "index 3, 45 cossec vectors, " + std::to_string(bad) + " failures in 10000 samples"};
  });

  criterion(8, "fundamental cycles equal highest roots", 0, [] {
    std::vector<DynkinType> all;
    for (int n = 1; n <= 9; ++n) all.emplace_back('A', n);
    for (int n = 4; n <= 9; ++n) all.emplace_back('D', n);
    for (int n = 6; n <= 8; ++n) all.emplace_back('E', n);
    std::vector<std::string> bad;
    for (const auto& d : all)
      if (fundamental_cycle_coeffs(dynkin_graph(d)) != highest_root(d)) bad.push_back(d.str());
    const bool e8 = fundamental_cycle_coeffs(dynkin_graph(DynkinType('E', 8))) == std::vector<int>{2, 4, 6, 5, 4, 3, 2, 3};
    if (!e8) bad.push_back("E8 coefficients");
    return Outcome{bad.empty(), bad.empty() ? std::to_string(all.size()) + " types" : join(bad)};
  });

  criterion(9, "polynomial certificates", 10.0, [] {
    const auto c = castelnuovo_transform(generic_form(2, {0, 1, 2, 3}, 0));
    std::size_t k = 0;
    const MultiPoly c1 = generic_form(3, {0, 1, 2}, k, &k);
    const MultiPoly c2 = generic_form(3, {0, 1, 2}, k, &k);
    const MultiPoly q = generic_form(2, {0, 1, 2}, k, &k);
    const auto o = double_plane_octic(c1, c2, q);
    return Outcome{c.certificate && o.certificate, std::string("quintic ") + (c.certificate ? "certified" : "differs") +
                                                       ", octic " + (o.certificate ? "certified" : "differs")};
  });

  return failures == 0 ? 0 : 1;
}
