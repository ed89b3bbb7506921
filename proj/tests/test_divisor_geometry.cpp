#include "enriques/catalog.hpp"
#include "enriques/classification.hpp"
#include "enriques/divisor.hpp"

#include <gtest/gtest.h>

using namespace enriques;

namespace {

std::array<NumClass, 3> triple(const SurfaceModel& s, const std::string& a, const std::string& b, const std::string& c) {
  return {s.fiber(a).half_class(), s.fiber(b).half_class(), s.fiber(c).half_class()};
}

TriangleGraph triangle_of(const SurfaceModel& s) {
  auto F = triple(s, "G1", "G2", "G3");
  std::array<Divisor, 3> w;
  for (std::size_t k = 0; k < 3; ++k) w[k] = *find_witness(F, s.config, k);
  return build_triangle(F, w);
}

const std::vector<CensusEntry>& census() {
  static const std::vector<CensusEntry> c = enumerate_triangles(11);
  return c;
}

const CensusEntry& entry(const std::string& label) {
  for (const auto& e : census())
    if (e.label() == label) return e;
  throw std::invalid_argument("no census entry " + label);
}

}  // namespace

TEST(Intersect, A7TildeFibers) {
  const auto s = load_surface("A7~");
  EXPECT_EQ(intersect(s.fiber("G1").divisor, s.fiber("G2").divisor), 4);
  EXPECT_EQ(intersect(s.fiber("F0").divisor, s.fiber("G1").divisor), 2);
  EXPECT_EQ(intersect(Divisor::curve(s.config, 0), Divisor::curve(s.config, 0)), -2);
}

TEST(Intersect, AmbientMismatchThrows) {
  const auto a = load_surface("A7~"), b = load_surface("BP");
  EXPECT_THROW(intersect(Divisor::curve(a.config, 0), Divisor::curve(b.config, 0)), std::invalid_argument);
}

TEST(CSequence, Examples) {
  const auto s = load_surface("A7~");
  std::vector<NumClass> one{s.fiber("F0").half_class()};
  EXPECT_TRUE(is_c_sequence(one));
  auto F = triple(s, "G1", "G2", "G3");
  EXPECT_TRUE(is_c_sequence(F));
  const auto d = load_surface("2D4~");
  std::vector<NumClass> pair{d.fiber("F4").half_class(), d.fiber("F5").half_class()};
  EXPECT_FALSE(is_c_sequence(pair));
}

TEST(CSequence, ProductsAreQuarterFiberProducts) {
  for (const auto& name : catalog_names()) {
    const auto s = load_surface(name);
    for (const auto& a : s.fibers)
      for (const auto& b : s.fibers) {
        if (a.multiplicity != FiberMultiplicity::Simple || b.multiplicity != FiberMultiplicity::Simple) continue;
        EXPECT_EQ(intersect(a.half_class(), b.half_class()), Rational(intersect(a.divisor, b.divisor), 4));
      }
  }
}

TEST(DegenerateSequence, Conditions) {
  const auto s = load_surface("A7~");
  const NumClass f1 = s.fiber("G1").half_class(), f2 = s.fiber("G2").half_class();
  std::size_t meets = s.config->size(), misses = s.config->size();
  for (std::size_t v = 0; v < s.config->size(); ++v) {
    if (pair_with_curve(f1, v) == 1 && meets == s.config->size()) meets = v;
    if (pair_with_curve(f1, v) == 0 && misses == s.config->size()) misses = v;
  }
  ASSERT_LT(meets, s.config->size());
  ASSERT_LT(misses, s.config->size());

  EXPECT_TRUE(validate_degenerate_sequence({{{f1, {}}, {f2, {}}}}).ok);
  EXPECT_TRUE(validate_degenerate_sequence({{{f1, {meets}}}}).ok);

  auto bad4 = validate_degenerate_sequence({{{f1, {misses}}}});
  EXPECT_FALSE(bad4.ok);
  EXPECT_EQ(bad4.condition, 4);

  const std::size_t nb = s.config->neighbors(meets).front();
  auto bad3 = validate_degenerate_sequence({{{f1, {meets}}, {f2, {nb}}}});
  EXPECT_FALSE(bad3.ok);
  EXPECT_EQ(bad3.condition, 3);

  auto bad1 = validate_degenerate_sequence({{{f1, {}}, {f1, {}}}});
  EXPECT_EQ(bad1.condition, 1);
}

TEST(Specialness, CatalogWitnesses) {
  const auto a7 = load_surface("A7~");
  auto w = specialness_witness(triple(a7, "G1", "G2", "G3"), a7.config);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->k, 2u);
  EXPECT_EQ(w->S, Divisor::curve(a7.config, a7.config->index_of("R6")));

  const auto bp = load_surface("BP");
  w = specialness_witness(triple(bp, "G1", "G2", "G3"), bp.config);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->S, Divisor::curve(bp.config, bp.config->index_of("R11")));

  const auto d4 = load_surface("2D4~");
  EXPECT_FALSE(specialness_witness(triple(d4, "G1", "G2", "F4"), d4.config).has_value());
}

TEST(Specialness, WitnessForOnePermutationIffAll) {
  for (const auto& name : {"A7~", "BP", "E7(2)"}) {
    const auto s = load_surface(name);
    auto F = triple(s, "G1", "G2", "G3");
    for (std::size_t k = 0; k < 3; ++k) {
      auto w = find_witness(F, s.config, k);
      ASSERT_TRUE(w.has_value()) << name << " k=" << k;
      EXPECT_TRUE(numerically_equal(NumClass::from(*w), special_target(F, k)));
      EXPECT_EQ(*w, fundamental_cycle(s.config, w->support()));
    }
  }
}

TEST(Triangle, CatalogTypes) {
  const auto a7 = triangle_of(load_surface("A7~"));
  std::multiset<DynkinType> got(a7.types.begin(), a7.types.end());
  EXPECT_EQ(got, (std::multiset<DynkinType>{DynkinType('E', 7), DynkinType('D', 8), DynkinType('A', 1)}));
  const auto bp = triangle_of(load_surface("BP"));
  got = {bp.types.begin(), bp.types.end()};
  EXPECT_EQ(got, (std::multiset<DynkinType>{DynkinType('E', 8), DynkinType('A', 1), DynkinType('A', 1)}));
}

TEST(Triangle, RejectsBadProducts) {
  const auto s = load_surface("A7~");
  std::array<Divisor, 3> d{Divisor::curve(s.config, 0), Divisor::curve(s.config, 2), Divisor::curve(s.config, 4)};
  EXPECT_THROW(build_triangle_from_divisors(d), InvariantViolation);
}

TEST(Obstruction, CatalogReasons) {
  auto ob = extension_obstruction(triangle_of(load_surface("BP")));
  EXPECT_TRUE(ob.non_extendable);
  EXPECT_NE(ob.reason.find("no simple component"), std::string::npos);
  ob = extension_obstruction(triangle_of(load_surface("A7~")));
  EXPECT_TRUE(ob.non_extendable);
  EXPECT_NE(ob.reason.find("multiplicity 2"), std::string::npos);
}

TEST(Obstruction, CycleTriangleIsInconclusive) {
  bool found = false;
  for (const auto& e : census()) {
    if (e.types_str() != "(A2,A1,A1)") continue;
    found = true;
    EXPECT_FALSE(extension_obstruction(e.triangle()).non_extendable) << e.label();
  }
  EXPECT_TRUE(found);
}

TEST(Extender, KnownCases) {
  auto ext = internal_extender(entry("(E6,A7,A7)#1").triangle());
  ASSERT_TRUE(ext.has_value());
  EXPECT_EQ(ext->type, KodairaType::Istar(2));
  ext = internal_extender(entry("(D6,D6,D6)#1").triangle());
  ASSERT_TRUE(ext.has_value());
  EXPECT_EQ(ext->type, KodairaType(KodairaType::Kind::IVstar));
  EXPECT_FALSE(internal_extender(triangle_of(load_surface("BP"))).has_value());
}

TEST(Extender, ExtendersMeetEveryHalfFiberOnce) {
  const auto t = entry("(D6,D6,D4)#1").triangle();
  for (const auto& x : all_internal_extenders(t)) {
    EXPECT_EQ(intersect(x.cls, x.cls), 0);
    for (const auto& f : t.F) EXPECT_EQ(intersect(x.cls, f), 1);
  }
}

TEST(Extender, NeverContradictsObstruction) {
  for (const auto& e : census()) {
    const auto t = e.triangle();
    if (internal_extender(t)) {
      EXPECT_FALSE(extension_obstruction(t).non_extendable) << e.label();
    }
  }
}

TEST(Triangle, CensusSumsAreSimpleFibers) {
  for (const auto& e : census()) {
    const auto t = e.triangle();
    for (std::size_t i = 0; i < 3; ++i) {
      const Divisor g = t.G(i);
      const auto supp = g.support();
      const auto rec = recognize_affine(t.glued->induced(supp));
      for (std::size_t p = 0; p < supp.size(); ++p) EXPECT_EQ(g.coeffs[supp[p]], rec.mult[p]) << e.label();
      EXPECT_EQ(intersect(g, g), 0);
    }
  }
}
