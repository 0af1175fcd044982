#include "sl2char/fourier.hpp"

#include <doctest.h>

#include <random>

using namespace sl2char;

namespace {

FnA2 random_fn_a2(int p, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-2, 2);
    FnA2 f(p);
    for (int a = 0; a < p; a++)
        for (int b = 0; b < p; b++) {
            f.at(a, b) = CycloNum::zeta_pow(p, c(rng) + 2) * rat(c(rng));
        }
    return f;
}

}  // namespace

TEST_CASE("basic transform laws") {
    // delta at 0 maps to the constant 1; the constant 1 maps to q^3 delta.
    for (int p : {3, 5}) {
        FnSl2 delta(p);
        delta.at(0, 0, 0) = CycloNum::from_rat(p, rat(1));
        FnSl2 hat = ft_sl2(delta);
        bool all_one = true;
        for (int z = 0; z < p; z++)
            for (int x = 0; x < p; x++)
                for (int y = 0; y < p; y++)
                    all_one &= hat.at(z, x, y) == CycloNum::from_rat(p, rat(1));
        CHECK(all_one);
        FnSl2 hathat = ft_sl2(hat);
        CHECK(hathat.at(0, 0, 0) ==
              CycloNum::from_rat(p, rat(static_cast<long>(p) * p * p)));
        CHECK(hathat.at(1, 0, 0).is_zero());
    }
}

TEST_CASE("double transform is q^2 times reflection on A2") {
    std::mt19937 rng(99172);
    for (int p : {3, 5})
        for (int i = 0; i < 20; i++) {
            FnA2 f = random_fn_a2(p, rng);
            FnA2 hh = ft_a2(ft_a2(f));
            bool ok = true;
            for (int a = 0; a < p; a++)
                for (int b = 0; b < p; b++)
                    ok &= hh.at(a, b) == f.at(-a, -b) * rat(static_cast<long>(p) * p);
            CHECK(ok);
        }
}

TEST_CASE("double transform is q^3 times reflection on sl2") {
    std::mt19937 rng(5511);
    int p = 3;
    std::uniform_int_distribution<int> c(-2, 2);
    FnSl2 f(p);
    for (int z = 0; z < p; z++)
        for (int x = 0; x < p; x++)
            for (int y = 0; y < p; y++) f.at(z, x, y) = CycloNum::from_rat(p, rat(c(rng)));
    FnSl2 hh = ft_sl2(ft_sl2(f));
    for (int z = 0; z < p; z++)
        for (int x = 0; x < p; x++)
            for (int y = 0; y < p; y++)
                CHECK(hh.at(z, x, y) == f.at(-z, -x, -y) * rat(27));
}

TEST_CASE("split orbit function") {
    FnSl2 f = phi_orbit_sl2(5, FqElem(5, 1));
    long support = 0;
    for (int z = 0; z < 5; z++)
        for (int x = 0; x < 5; x++)
            for (int y = 0; y < 5; y++) {
                if (f.at(z, x, y).is_zero()) continue;
                support++;
                CHECK(f.at(z, x, y) == CycloNum::from_rat(5, rat(1, 20)));
            }
    CHECK(support == 20);
    CHECK_THROWS_AS(phi_orbit_sl2(5, FqElem(5, 0)), std::invalid_argument);
}

TEST_CASE("split orbit transform matches the Green function") {
    CHECK(springer_check(3));
    CHECK(springer_check(5));
    CHECK(springer_check(7));
    // independence of the chosen non-residue
    CHECK(springer_check(7, 5));
    CHECK(springer_check(5, 3));
}

TEST_CASE("ramified orbit functions") {
    // t0, p=5, v=1: support {(1,1),(4,4)} with value 1/2.
    FnA2 f = phi_orbit_a2(Cocycle::t0, 5, FqElem(5, 1));
    CHECK(f.at(1, 1) == CycloNum::from_rat(5, rat(1, 2)));
    CHECK(f.at(4, 4) == CycloNum::from_rat(5, rat(1, 2)));
    CHECK(f.at(2, 3).is_zero());
    CHECK(f.at(1, 2).is_zero());
    // t2: support satisfies xy = 2 (the least non-residue mod 5).
    FnA2 f2 = phi_orbit_a2(Cocycle::t2, 5, FqElem(5, 1));
    for (int x = 0; x < 5; x++)
        for (int y = 0; y < 5; y++)
            if (!f2.at(x, y).is_zero()) CHECK(mod_pos(static_cast<long>(x) * y, 5) == 2);
}

TEST_CASE("ramified transforms restrict to orbit constants") {
    for (int p : {3, 5, 7}) {
        Rat scale = rat(2, p - 1);
        for (Cocycle z : {Cocycle::t0, Cocycle::t1, Cocycle::t2, Cocycle::t3}) {
            auto orb = phihat_a2_on_orbits(z, p, FqElem(p, 1));
            CHECK(orb.at(VOrbit::V0) == CycloNum::from_rat(p, rat(1)));
            // All restrictions land in Q(g).
            for (const auto& [o, val] : orb) CHECK_NOTHROW(as_quadg(val));
        }
        // The displayed gamma flavors at v = 1.
        auto h0 = phihat_a2_on_orbits(Cocycle::t0, p, FqElem(p, 1));
        CHECK(h0.at(VOrbit::V1p) == gamma_val(+1, FqElem(p, 1)) * scale);
        CHECK(h0.at(VOrbit::V2m) == gamma_val(-1, FqElem(p, 1)) * scale);
        auto h1 = phihat_a2_on_orbits(Cocycle::t1, p, FqElem(p, 1));
        CHECK(h1.at(VOrbit::V2p) == gamma_val(-1, FqElem(p, 1)) * scale);
        auto h2 = phihat_a2_on_orbits(Cocycle::t2, p, FqElem(p, 1));
        CHECK(h2.at(VOrbit::V1p) == gamma_val(+1, FqElem(p, 1)) * scale);
        CHECK(h2.at(VOrbit::V2p) == gamma_val(-1, FqElem(p, 1)) * scale);
    }
}

TEST_CASE("combined transforms") {
    for (int p : {3, 5, 7, 11, 13}) {
        Rat scale = rat(4, p - 1);
        auto h0 = phi01_hat(0, p);
        CHECK(h0.at(VOrbit::V2p).is_zero());
        CHECK(h0.at(VOrbit::V2m).is_zero());
        CHECK(h0.at(VOrbit::V0).is_zero());
        CHECK(h0.at(VOrbit::V1p) == QuadGNum::g(p) * scale);
        CHECK(h0.at(VOrbit::V1m) == -(QuadGNum::g(p) * scale));
        auto h1 = phi01_hat(1, p);
        CHECK(h1.at(VOrbit::V1p).is_zero());
        CHECK(h1.at(VOrbit::V1m).is_zero());
        CHECK(h1.at(VOrbit::V2p) == QuadGNum::g(p) * scale);
        CHECK(h1.at(VOrbit::V2m) == -(QuadGNum::g(p) * scale));
    }
}

TEST_CASE("dependence on v is through its sign only") {
    for (int p : {5, 7}) {
        // same sign: identical restrictions
        FqElem v1(p, 1), v4(p, 4);
        REQUIRE(sgn(v4) == +1);
        for (Cocycle z : {Cocycle::t0, Cocycle::t3})
            CHECK(phihat_a2_on_orbits(z, p, v1) == phihat_a2_on_orbits(z, p, v4));
        // opposite sign: swaps the signed orbits
        FqElem vm(p, smallest_nonsquare(p));
        auto a = phi01_hat(1, p, std::nullopt, v1);
        auto b = phi01_hat(1, p, std::nullopt, vm);
        CHECK(a.at(VOrbit::V2p) == b.at(VOrbit::V2m));
        CHECK(a.at(VOrbit::V2m) == b.at(VOrbit::V2p));
    }
}

TEST_CASE("eps independence of the combined transforms") {
    for (int p : {5, 7, 11, 13}) {
        int eps2 = 0;
        for (int e = smallest_nonsquare(p) + 1; e < p; e++)
            if (sgn_mod(p, e) == -1) {
                eps2 = e;
                break;
            }
        REQUIRE(eps2 > 0);
        for (int which : {0, 1}) CHECK(phi01_hat(which, p) == phi01_hat(which, p, eps2));
    }
}
