#include "enriques/errors.hpp"
#include "enriques/poly.hpp"

#include <gtest/gtest.h>

using namespace enriques;
using P = MultiPoly;

namespace {

P generic_quadric() { return generic_form(2, {0, 1, 2, 3}, 0); }

}  // namespace

TEST(Poly, Arithmetic) {
  const P x0 = P::x(0), x1 = P::x(1);
  EXPECT_EQ((x0 + x1).pow(2), parse_poly("x0^2 + 2*x0*x1 + x1^2"));
  EXPECT_EQ((x0 - x0), P());
  EXPECT_EQ(parse_poly("(x0 + x1)*(x0 - x1)"), parse_poly("x0^2 - x1^2"));
  EXPECT_EQ(parse_poly("-x2 + 3").str(), parse_poly("3 - x2").str());
}

TEST(Poly, Substitute) {
  const P p = parse_poly("x0*x1 + x2^2");
  const P q = p.substitute({P::x(1), P::x(0), P::x(3), P::x(2)});
  EXPECT_EQ(q, parse_poly("x0*x1 + x3^2"));
  EXPECT_EQ(parse_poly("x0^2").substitute({P::x(2) * P::x(3), P::x(1), P::x(2), P::x(3)}), parse_poly("x2^2*x3^2"));
}

TEST(Poly, ExactDivide) {
  const P a = parse_poly("x0^3*x1 - x0*x1^3");
  EXPECT_EQ(exact_divide(a, parse_poly("x0*x1")), parse_poly("x0^2 - x1^2"));
  EXPECT_EQ(exact_divide(a, parse_poly("x0 + x1")), parse_poly("x0^2*x1 - x0*x1^2"));
  EXPECT_THROW(exact_divide(a, parse_poly("x2")), NotDivisible);
  EXPECT_THROW(exact_divide(parse_poly("x0^2 + 1"), parse_poly("x0 + x1")), NotDivisible);
}

TEST(Poly, ParserErrors) {
  EXPECT_THROW(parse_poly("x4"), std::invalid_argument);
  EXPECT_THROW(parse_poly("x0 +"), std::invalid_argument);
  EXPECT_THROW(parse_poly("(x0"), std::invalid_argument);
  EXPECT_THROW(parse_poly("x0 ^ -1"), std::invalid_argument);
  EXPECT_NO_THROW(parse_poly("c3*x0 + c12*x1"));
}

TEST(Sextic, Examples) {
  const P zero = enriques_sextic(P());
  EXPECT_EQ(zero.terms().size(), 4u);
  EXPECT_TRUE(zero.homogeneous(6));
  EXPECT_EQ(enriques_sextic(parse_poly("x0*x1")) - zero, parse_poly("x0^2*x1^2*x2*x3"));
  const P g = enriques_sextic(generic_quadric());
  EXPECT_EQ(g.terms().size(), 14u);
  EXPECT_EQ(g.degree(), 6);
}

TEST(Sextic, SymmetricUnderSwappingLastCoordinates) {
  const P s = enriques_sextic(P());
  EXPECT_EQ(s.substitute({P::x(0), P::x(1), P::x(3), P::x(2)}), s);
  EXPECT_EQ(s.substitute({P::x(1), P::x(0), P::x(2), P::x(3)}), s);
}

TEST(Sextic, RejectsWrongDegree) {
  EXPECT_THROW(enriques_sextic(parse_poly("x0")), std::invalid_argument);
  EXPECT_THROW(enriques_sextic(parse_poly("x0^2 + x1")), std::invalid_argument);
}

TEST(Castelnuovo, Certificates) {
  for (const P& q : {P(), generic_quadric(), parse_poly("x0*x3 - 2*x1^2")}) {
    const auto r = castelnuovo_transform(q);
    EXPECT_TRUE(r.certificate) << q.str();
    EXPECT_TRUE(r.quintic.homogeneous(5)) << q.str();
    EXPECT_EQ(r.quintic, r.expected);
  }
}

TEST(Castelnuovo, TransformedQuadric) {
  EXPECT_EQ(castelnuovo_transform(parse_poly("x2^2")).Q_prime, parse_poly("x0^2*x2^2"));
  EXPECT_TRUE(castelnuovo_transform(generic_quadric()).Q_prime.homogeneous(4));
}

TEST(Octic, Certificates) {
  std::size_t k = 0;
  const P c1 = generic_form(3, {0, 1, 2}, k, &k);
  const P c2 = generic_form(3, {0, 1, 2}, k, &k);
  const P q = generic_form(2, {0, 1, 2}, k, &k);
  const auto r = double_plane_octic(c1, c2, q);
  EXPECT_TRUE(r.certificate);
  EXPECT_TRUE(r.quintic.homogeneous(5));
  EXPECT_TRUE(r.discriminant.homogeneous(8));
  EXPECT_EQ(r.discriminant.degree_in(3), 0);

  const auto z = double_plane_octic(P(), P(), q);
  EXPECT_TRUE(z.certificate);
  EXPECT_EQ(z.discriminant, (P::x(0) * P::x(1)).pow(2) * q.pow(2));
  const auto w = double_plane_octic(c1, c2, P());
  EXPECT_TRUE(w.certificate);
  EXPECT_EQ(w.discriminant, P(-4) * P::x(0) * P::x(1) * c1 * c2);
}

TEST(Octic, RejectsBadInputs) {
  const P c = parse_poly("x0^3");
  EXPECT_THROW(double_plane_octic(parse_poly("x3^3"), c, parse_poly("x0^2")), std::invalid_argument);
  EXPECT_THROW(double_plane_octic(c, c, parse_poly("x0")), std::invalid_argument);
}
