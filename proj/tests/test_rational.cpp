#include "fibkit/rational.hpp"

#include <catch_amalgamated.hpp>

#include <gmpxx.h>

#include <random>
#include <sstream>

using fibkit::Int;
using fibkit::Rat;

namespace {

bool canonical(const Rat& r)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return r.den() > 0 && (r.num() == 0 ? r.den() == 1 : g == 1);
}

bool matches(const Rat& r, const mpq_class& q) { return r.num() == q.get_num() && r.den() == q.get_den(); }

} // namespace

TEST_CASE("construction normalizes", "[rational]")
{
    CHECK(Rat(Int(6), Int(-4)).to_string() == "-3/2");
    CHECK(Rat(Int(0), Int(-7)).to_string() == "0");
    CHECK(Rat(Int(10), Int(5)).to_string() == "2");
    CHECK(Rat(Int(-3)).to_string() == "-3");
    CHECK(Rat(Int(6), Int(-4)).den() == 2);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("arithmetic", "[rational]")
{
    const Rat half(Int(1), Int(2));
    const Rat third(Int(1), Int(3));
    CHECK((half + third).to_string() == "5/6");
    CHECK((half - third).to_string() == "1/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half / third).to_string() == "3/2");
    CHECK((half + half) == Rat(1L));
    CHECK((-half).to_string() == "-1/2");
    CHECK_THROWS_AS(half / Rat(0L), std::domain_error);
    CHECK(third < half);
    CHECK(Rat(Int(-1), Int(2)) < Rat(0L));
    std::ostringstream os;
    os << Rat(Int(7), Int(-21));
    CHECK(os.str() == "-1/3");
}

TEST_CASE("results stay canonical and agree with mpq_class", "[rational][property]")
{
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<long> num(-500, 500);
    std::uniform_int_distribution<long> den(1, 300);
    for (int i = 0; i < 5000; ++i) {
        const long p = num(rng);
        const long q = den(rng) * (i % 2 == 0 ? 1 : -1);
        const long r = num(rng);
        const long s = den(rng);
        const Rat x{Int(p), Int(q)};
        const Rat y{Int(r), Int(s)};
        mpq_class qx(p, q);
        mpq_class qy(r, s);
        qx.canonicalize();
        qy.canonicalize();

        REQUIRE(canonical(x));
        REQUIRE(matches(x, qx));
        REQUIRE(matches(x + y, mpq_class(qx + qy)));
        REQUIRE(matches(x - y, mpq_class(qx - qy)));
        REQUIRE(matches(x * y, mpq_class(qx * qy)));
        REQUIRE(canonical(x + y));
        REQUIRE(canonical(x * y));
        if (r != 0) {
            REQUIRE(matches(x / y, mpq_class(qx / qy)));
        }
        REQUIRE(((x <=> y) < 0) == (qx < qy));

        // normalizing an already canonical value changes nothing
        const Rat again(x.num(), x.den());
        REQUIRE(again == x);
        REQUIRE(again.num() == x.num());
        REQUIRE(again.den() == x.den());
    }
}
