#include "doctest.h"

#include "property_laws.hpp"
#include "test_support.hpp"

#include "thetainv/surgery.hpp"

using namespace thetainv;
using namespace testsup;

namespace {

SurgerySpec plain_spec(int parity, long p) {
    SurgerySpec s;
    s.parity = parity;
    s.edges = {EdgeDecoration{"1", 0}, EdgeDecoration{"1", 1}, EdgeDecoration{"1", p}};
    return s;
}

SurgerySpec twisted_spec(long p) {
    SurgerySpec s;
    s.parity = 0;
    s.edges = {EdgeDecoration{"1", 0}, EdgeDecoration{"x3", 1}, EdgeDecoration{"x3 x3", p}};
    return s;
}

}  // namespace

TEST_CASE("surgery values of the standard decorations") {
    for (long p = 3; p <= 8; ++p) {
        SurgeryValue v = z_theta_surgery(plain_spec(0, p));
        CHECK(v.image == SThetaElt(0, f_poly(p) * Scalar(24)));
        CHECK(v.description.find("t^" + std::to_string(p)) != std::string::npos);

        // conjugation decorations by x3 and x3^2 pick up the twisted factor
        Scalar factor(Rational(-6), Rational(0), Rational(2), Rational(0));
        CHECK(z_theta_surgery(twisted_spec(p)).image == SThetaElt(0, f_poly(p) * factor));
    }

    // repeated decorations collapse to zero at parity 0
    CHECK(z_theta_surgery(plain_spec(0, 1)).image.is_zero());

    SurgerySpec bad = plain_spec(2, 5);
    CHECK_THROWS_AS(z_theta_surgery(bad), std::invalid_argument);
}

TEST_CASE("surgery rep selector") {
    // the second embedding conjugates the coefficient field; the plain value
    // has rational coefficients, so it agrees across variants
    SurgerySpec a = plain_spec(0, 5);
    SurgerySpec b = plain_spec(0, 5);
    b.rep.variant = 2;
    CHECK(z_theta_surgery(a).image == z_theta_surgery(b).image);

    // the twisted value picks up the sqrt5 automorphism instead
    SurgerySpec tw2 = twisted_spec(5);
    tw2.rep.variant = 2;
    Scalar factor2(Rational(-6), Rational(0), Rational(-2), Rational(0));
    CHECK(z_theta_surgery(tw2).image == SThetaElt(0, f_poly(5) * factor2));

    // the extension only adds a central generator; existing words evaluate the same
    SurgerySpec ext = twisted_spec(5);
    ext.rep.extended = true;
    CHECK(z_theta_surgery(ext).image == z_theta_surgery(twisted_spec(5)).image);
}

TEST_CASE("cyclic cover values") {
    CHECK(cyclic_lift_value("1", "1", 1, 5, 1) == z_theta_surgery(plain_spec(0, 5)).image);

    Scalar tripled(Rational(-18), Rational(0), Rational(6), Rational(0));
    CHECK(cyclic_lift_value("x3", "x3 x3", 1, 5, 3) == SThetaElt(0, f_poly(5) * tripled));

    CHECK(cyclic_lift_value("1", "1", 0, 0, 2).is_zero());
    CHECK_THROWS_AS(cyclic_lift_value("1", "1", 1, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_lift_value("1", "1", 1, 5, -2), std::invalid_argument);
}

TEST_CASE("independence certificates") {
    std::vector<SurgerySpec> specs;
    for (long p = 3; p <= 10; ++p) specs.push_back(plain_spec(0, p));
    Certificate cert = independence_certificate(specs);
    CHECK(cert.rank_full == 8);
    CHECK(cert.rank_coker == 8);
    CHECK(cert.conclusion == "independent-in-cokernel");
    CHECK(cert.images.size() == 8);

    Certificate pair = independence_certificate({plain_spec(0, 5), twisted_spec(5)});
    CHECK(pair.rank_full == 2);
    CHECK(pair.conclusion == "independent-in-cokernel");

    // a single vanishing value is dependent
    Certificate zero = independence_certificate({plain_spec(0, 0)});
    CHECK(zero.rank_full == 0);
    CHECK(zero.conclusion == "not-independent-in-cokernel");

    CHECK(independence_certificate({}).conclusion == "empty-family");

    CHECK_THROWS_AS(independence_certificate({plain_spec(0, 5), plain_spec(1, 5)}),
                    std::invalid_argument);
}

TEST_CASE("law: surgery conjugation invariance") {
    auto res = laws::law_surgery_conjugation_invariance();
    INFO(res.note);
    CHECK(res.ok);
    CHECK(res.cases >= 1000);
}

TEST_CASE("law: surgery shift invariance") {
    auto res = laws::law_surgery_shift_invariance();
    INFO(res.note);
    CHECK(res.ok);
    CHECK(res.cases >= 1000);
}

TEST_CASE("law: cover linearity") {
    auto res = laws::law_cover_linearity();
    INFO(res.note);
    CHECK(res.ok);
    CHECK(res.cases >= 1000);
}

TEST_CASE("law: surgery edge permutation") {
    auto res = laws::law_surgery_edge_permutation();
    INFO(res.note);
    CHECK(res.ok);
    CHECK(res.cases >= 1000);
}
