#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <poisres/poly_parser.hpp>
#include <poisres/polynomial.hpp>
#include <poisres/qmatrix.hpp>
#include <poisres/randomgen.hpp>
#include <poisres/rational.hpp>

using namespace poisres::exactalg;
using poisres::randomgen::random_polynomial;
using poisres::randomgen::random_rational;
using poisres::randomgen::Rng;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(5, 1).denominator() == 1);
    CHECK(Rational(-9, 3).numerator() == -3);
}

TEST_CASE("rational arithmetic and errors") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK(Rational(2, 3).reciprocal() == Rational(3, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("rational string round trip") {
    for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "123456789123456789/2"}) {
        CHECK(Rational::from_string(s).str() == s);
    }
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
}

TEST_CASE("parse: commutator cancels to zero") {
    CHECK(parse_poly("x1*x2 - x2*x1", 2).is_zero());
}

TEST_CASE("parse: binomial expansion") {
    const Polynomial p = parse_poly("(x1+x2)^2", 2);
    CHECK(p == parse_poly("x1^2 + 2*x1*x2 + x2^2", 2));
    CHECK(p.str() == "x1^2 + 2*x1*x2 + x2^2");
}

TEST_CASE("parse: three-term quartic surface equation") {
    const Polynomial p = parse_poly("x1*x2^3 + x1*x3^3 + x4^4", 4);
    CHECK(p.total_degree() == 4);
    CHECK(p.terms().size() == 3);
    CHECK(parse_poly(p.str(), 4) == p);
}

TEST_CASE("parse: precedence and associativity") {
    CHECK(parse_poly("-x1^2", 1) == -parse_poly("x1^2", 1));
    CHECK(parse_poly("-2*x1", 1) == parse_poly("(-2)*x1", 1));
    CHECK(parse_poly("x1 - x2 - x3", 3) == parse_poly("(x1 - x2) - x3", 3));
    CHECK(parse_poly("x1^2^3", 1) == parse_poly("x1^6", 1));
    CHECK(parse_poly("2^3", 1) == Polynomial::constant(1, Rational(8)));
    CHECK(parse_poly("3/2*x1", 1) == Rational(3, 2) * Polynomial::variable(1, 1));
    CHECK(parse_poly("1/2", 3).constant_value() == Rational(1, 2));
    CHECK(parse_poly("--x1", 1) == Polynomial::variable(1, 1));
    CHECK(parse_poly("+x1", 1) == Polynomial::variable(1, 1));
    CHECK(parse_poly(" ( x1 + 1 ) ^ 2 ", 1) == parse_poly("x1^2+2*x1+1", 1));
}

TEST_CASE("parse: error taxonomy") {
    CHECK_THROWS_AS(parse_poly("x1 +", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("(x1", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 x2", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0", 2), ParseError);

    try {
        parse_poly("x1 + @", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::syntax);
        CHECK(e.position() == 5);
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }

    try {
        parse_poly("x1 + x5", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::unknown_variable);
        CHECK(e.position() == 5);
        CHECK(std::string(e.what()).find("x5") != std::string::npos);
    }

    try {
        parse_poly("x1^-2", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::negative_exponent);
    }

    CHECK_THROWS_AS(parse_poly("y1", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x0", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x01", 2), ParseError);
}

TEST_CASE("printing: graded-lex canonical order") {
    CHECK(parse_poly("x2 + x1", 2).str() == "x1 + x2");
    CHECK(parse_poly("1 + x1^2", 1).str() == "x1^2 + 1");
    CHECK(parse_poly("-x1 - 1", 1).str() == "-x1 - 1");
    CHECK(parse_poly("x2^2 + x1*x2", 2).str() == "x1*x2 + x2^2");
    CHECK(parse_poly("x1 - x1", 1).str() == "0");
    CHECK(parse_poly("2*x1^2 - 3/2*x2 + 1", 2).str() == "2*x1^2 - 3/2*x2 + 1");
}

TEST_CASE("parse/print round trip on random polynomials") {
    Rng rng(20260816);
    for (int i = 0; i < 200; ++i) {
        const int nvars = rng.uniform(1, 4);
        const Polynomial p = random_polynomial(rng, nvars, 4, 6);
        CAPTURE(p.str());
        CHECK(parse_poly(p.str(), nvars) == p);
    }
}

TEST_CASE("ring laws on random polynomials") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const int nvars = rng.uniform(1, 3);
        const Polynomial a = random_polynomial(rng, nvars, 3, 4);
        const Polynomial b = random_polynomial(rng, nvars, 3, 4);
        const Polynomial c = random_polynomial(rng, nvars, 3, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial(nvars));
    }
}

TEST_CASE("diff: pinned worked examples") {
    CHECK(diff(parse_poly("x1^2*x2", 2), 1) == parse_poly("2*x1*x2", 2));
    CHECK(diff(Polynomial::constant(2, Rational(5)), 1).is_zero());
    CHECK(diff(parse_poly("x1^3 + x2^3", 2), 2) == parse_poly("3*x2^2", 2));
    CHECK_THROWS_AS(diff(parse_poly("x1", 1), 2), std::out_of_range);
    CHECK_THROWS_AS(diff(parse_poly("x1", 1), 0), std::out_of_range);
}

TEST_CASE("diff: Leibniz rule on random polynomials") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const int nvars = rng.uniform(1, 3);
        const int var = rng.uniform(1, nvars);
        const Polynomial p = random_polynomial(rng, nvars, 3, 4);
        const Polynomial q = random_polynomial(rng, nvars, 3, 4);
        CHECK(diff(p * q, var) == diff(p, var) * q + p * diff(q, var));
    }
}

TEST_CASE("substitute: pinned worked examples") {
    const Polynomial z1 = Polynomial::variable(2, 1);
    const Polynomial z2 = Polynomial::variable(2, 2);
    CHECK(substitute(parse_poly("x2", 2), {z1, z1 * z2}) == z1 * z2);
    CHECK(substitute(parse_poly("x1*x2", 2), {z1, z1 * z2}) == parse_poly("x1^2*x2", 2));

    const Polynomial p = parse_poly("x1^2 - 3*x2 + 1/2", 2);
    CHECK(substitute(p, {z1, z2}) == p);

    CHECK_THROWS_AS(substitute(p, {z1}), std::invalid_argument);
    CHECK_THROWS_AS(substitute(p, {z1, Polynomial::variable(3, 1)}),
                    std::invalid_argument);
}

TEST_CASE("substitute: ring homomorphism on random polynomials") {
    Rng rng(13);
    for (int i = 0; i < 60; ++i) {
        const int nvars = rng.uniform(1, 3);
        const int tvars = rng.uniform(1, 3);
        const Polynomial p = random_polynomial(rng, nvars, 3, 4);
        const Polynomial q = random_polynomial(rng, nvars, 3, 4);
        std::vector<Polynomial> images;
        for (int v = 0; v < nvars; ++v)
            images.push_back(random_polynomial(rng, tvars, 2, 3));
        CHECK(substitute(p + q, images) == substitute(p, images) + substitute(q, images));
        CHECK(substitute(p * q, images) == substitute(p, images) * substitute(q, images));
    }
}

TEST_CASE("evaluate and restrict") {
    const Polynomial p = parse_poly("x1^2*x2 - 1/2*x3 + 4", 3);
    CHECK(evaluate(p, {Rational(2), Rational(3), Rational(4)}) == Rational(14));
    CHECK(evaluate(p, {Rational(0), Rational(0), Rational(0)}) == Rational(4));

    CHECK(restrict_to_subspace(p, 3) == parse_poly("x1^2*x2 + 4", 3));
    CHECK(restrict_to_subspace(p, 2) == parse_poly("4", 3));
    CHECK(restrict_to_subspace(p, 4) == p);
    CHECK(restrict_to_subspace(p, 1).is_zero() == false);  // constant survives
    CHECK(restrict_to_subspace(parse_poly("x1*x3", 3), 3).is_zero());
}

TEST_CASE("divide_exact") {
    const Polynomial a = parse_poly("x1^2 - x2^2", 2);
    const Polynomial b = parse_poly("x1 - x2", 2);
    auto q = divide_exact(a, b);
    REQUIRE(q.has_value());
    CHECK(*q == parse_poly("x1 + x2", 2));
    CHECK(!divide_exact(parse_poly("x1^2 + x2", 2), b).has_value());
    CHECK(divide_exact(Polynomial(2), b)->is_zero());
    CHECK_THROWS_AS(divide_exact(a, Polynomial(2)), std::invalid_argument);

    Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        const int nvars = rng.uniform(1, 3);
        const Polynomial f = random_polynomial(rng, nvars, 3, 3);
        Polynomial g = random_polynomial(rng, nvars, 2, 3);
        if (g.is_zero()) g = Polynomial::variable(nvars, 1);
        auto h = divide_exact(f * g, g);
        REQUIRE(h.has_value());
        CHECK(*h == f);
    }
}

TEST_CASE("content and primitive part") {
    const Polynomial p = parse_poly("4*x1 + 6*x2", 2);
    CHECK(rational_content(p) == Rational(2));
    CHECK(primitive_part(p) == parse_poly("2*x1 + 3*x2", 2));

    const Polynomial q = parse_poly("-1/2*x1 - 3/4", 1);
    CHECK(rational_content(q) == Rational(-1, 4));
    CHECK(primitive_part(q) == parse_poly("2*x1 + 3", 1));
    CHECK(primitive_part(q).leading_coeff().sign() > 0);

    CHECK(rational_content(Polynomial(1)) == Rational(0));
}

TEST_CASE("gcd: fixed cases") {
    CHECK(gcd(parse_poly("x1^2 - x2^2", 2), parse_poly("x1^2 + 2*x1*x2 + x2^2", 2)) ==
          parse_poly("x1 + x2", 2));
    CHECK(gcd(parse_poly("x1^2 - 1", 1), parse_poly("x1^3 - 1", 1)) ==
          parse_poly("x1 - 1", 1));
    CHECK(gcd(parse_poly("2*x1", 1), parse_poly("4*x1^2", 1)) == parse_poly("x1", 1));
    CHECK(gcd(Polynomial(2), parse_poly("-3*x1*x2", 2)) == parse_poly("x1*x2", 2));
    CHECK(gcd(parse_poly("x1", 2), parse_poly("x2", 2)) ==
          Polynomial::constant(2, Rational(1)));
    CHECK(gcd(parse_poly("x1*x2 + x2", 2), parse_poly("x1^2 - 1", 2)) ==
          parse_poly("x1 + 1", 2));
}

TEST_CASE("gcd: divides both arguments and sees common factors") {
    Rng rng(19);
    for (int i = 0; i < 40; ++i) {
        const int nvars = rng.uniform(1, 3);
        const Polynomial a = random_polynomial(rng, nvars, 2, 3);
        const Polynomial b = random_polynomial(rng, nvars, 2, 3);
        Polynomial c = random_polynomial(rng, nvars, 2, 2);
        if (c.is_zero()) c = Polynomial::variable(nvars, 1);
        const Polynomial g = gcd(a * c, b * c);
        if (g.is_zero()) continue;  // both products were zero
        CAPTURE(a.str());
        CAPTURE(b.str());
        CAPTURE(c.str());
        CHECK(divide_exact(a * c, g).has_value());
        CHECK(divide_exact(b * c, g).has_value());
        if (!(a * c).is_zero() && !(b * c).is_zero())
            CHECK(divide_exact(g, primitive_part(c)).has_value());
    }
}

TEST_CASE("solve_linear: pinned worked examples") {
    QMatrix m1(1, 1);
    m1.at(0, 0) = Rational(-2);
    CHECK(solve_linear(m1, {Rational(-1)}) == std::vector<Rational>{Rational(1, 2)});

    const std::vector<Rational> v = {Rational(3), Rational(-7, 2)};
    CHECK(solve_linear(QMatrix::identity(2), v) == v);

    const QMatrix a2 = QMatrix::from_rows({{Rational(-2), Rational(1)},
                                           {Rational(1), Rational(-2)}});
    const std::vector<Rational> sol = solve_linear(a2, {Rational(-1), Rational(0)});
    CHECK(sol == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});

    const QMatrix singular = QMatrix::from_rows({{Rational(1), Rational(2)},
                                                 {Rational(2), Rational(4)}});
    CHECK_THROWS_AS(solve_linear(singular, {Rational(1), Rational(1)}),
                    std::domain_error);
}

TEST_CASE("solve_linear: re-multiplication on random systems") {
    Rng rng(23);
    int solved = 0;
    while (solved < 50) {
        const int n = rng.uniform(1, 5);
        QMatrix m(n, n);
        std::vector<Rational> v(n, Rational(0));
        for (int i = 0; i < n; ++i) {
            v[i] = random_rational(rng, 6, 4);
            for (int j = 0; j < n; ++j) m.at(i, j) = random_rational(rng, 6, 4);
        }
        if (determinant(m).is_zero()) continue;
        const std::vector<Rational> x = solve_linear(m, v);
        CHECK(m * x == v);
        const QMatrix inv = inverse(m);
        CHECK(m * inv == QMatrix::identity(n));
        ++solved;
    }
}

TEST_CASE("is_negative_definite: pinned worked examples") {
    CHECK(is_negative_definite(QMatrix::from_rows(
        {{Rational(-2), Rational(1)}, {Rational(1), Rational(-2)}})));
    QMatrix one(1, 1);
    one.at(0, 0) = Rational(-1);
    CHECK(is_negative_definite(one));
    CHECK(!is_negative_definite(QMatrix::from_rows(
        {{Rational(-2), Rational(2)}, {Rational(2), Rational(-2)}})));
    CHECK(!is_negative_definite(QMatrix::identity(3)));

    QMatrix asym(2, 2);
    asym.at(0, 1) = Rational(1);
    CHECK_THROWS_AS(is_negative_definite(asym), std::invalid_argument);
}

TEST_CASE("is_negative_definite: quadratic-form sanity on lattice vectors") {
    Rng rng(29);
    int tested = 0;
    while (tested < 20) {
        const int n = rng.uniform(1, 3);
        // Diagonally dominant with negative diagonal => negative definite.
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                m.at(i, j) = Rational(rng.uniform(-1, 1));
                m.at(j, i) = m.at(i, j);
            }
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(-n - rng.uniform(0, 2));
        REQUIRE(is_negative_definite(m));

        // x^T M x < 0 for all nonzero lattice vectors in {-2..2}^n.
        std::vector<int> x(n, -2);
        while (true) {
            bool nonzero = false;
            for (int xi : x) nonzero |= (xi != 0);
            if (nonzero) {
                Rational q(0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        q += Rational(x[i]) * m.at(i, j) * Rational(x[j]);
                CHECK(q.sign() < 0);
            }
            int k = 0;
            while (k < n && x[k] == 2) x[k++] = -2;
            if (k == n) break;
            ++x[k];
        }
        ++tested;
    }
}
