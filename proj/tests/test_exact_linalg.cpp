#include "fimod/errors.hpp"
#include "fimod/module.hpp"
#include "fimod/snf.hpp"

#include <doctest.h>

#include <random>

using namespace fimod;

namespace {

Mat random_int_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Scalar(dist(rng));
    return m;
}

void check_snf_contract(const Mat& m) {
    SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(det_sign_free(s.u) == 1);
    CHECK(det_sign_free(s.v) == 1);
    std::size_t nmin = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < nmin; ++i) {
        CHECK(s.d.at(i, i) >= 0);
        for (std::size_t j = 0; j < nmin; ++j)
            if (i != j)
                CHECK(s.d.at(i, std::min(j, nmin - 1)) == (i == j ? s.d.at(i, i) : s.d.at(i, j)));
    }
    for (std::size_t i = 0; i + 1 < nmin; ++i) {
        if (s.d.at(i + 1, i + 1) != 0) {
            CHECK(s.d.at(i, i) != 0);
            CHECK(s.d.at(i + 1, i + 1).get_num() % s.d.at(i, i).get_num() == 0);
        }
    }
    // off-diagonal zero
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j)
                CHECK(s.d.at(i, j) == 0);
}

} // namespace

TEST_CASE("snf identity and zero") {
    CHECK(smith_normal_form(Mat::identity(3)).d == Mat::identity(3));
    CHECK(smith_normal_form(Mat::zero(2, 3)).d == Mat::zero(2, 3));
    CHECK(smith_normal_form(Mat::zero(2, 3)).rank == 0);
}

TEST_CASE("snf 2x2 example: gcd and determinant") {
    Mat m{{2, 4}, {6, 8}};
    SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(s.d.at(0, 0) == 2);                              // gcd of entries
    CHECK(s.d.at(0, 0) * s.d.at(1, 1) == 8);               // |det|
}

TEST_CASE("snf contract on random matrices") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> shape(0, 6);
        Mat m = random_int_mat(rng, shape(rng), shape(rng), -9, 9);
        check_snf_contract(m);
    }
}

TEST_CASE("z_kernel and z_solve") {
    Mat m{{2, -3}};
    Mat k = z_kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    // primitive solution of 2a = 3b: (3, 2) up to sign
    CHECK(abs(k.at(0, 0).get_num()) == 3);
    CHECK(abs(k.at(1, 0).get_num()) == 2);

    Mat a{{2, 0}, {0, 3}};
    Mat b{{4}, {9}};
    auto x = z_solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    Mat b2{{1}, {1}};
    CHECK(!z_solve(a, b2).has_value());
}

TEST_CASE("field kernel/solve over F5 and Q") {
    for (long p : {0L, 5L}) {
        FieldOps f{p};
        Mat m{{1, 2, 3}, {2, 4, 6}};
        Mat k = kernel_basis(m, f);
        CHECK(k.cols() == 2);
        Mat prod = m * k;
        f.normalize_in_place(prod);
        CHECK(prod.is_zero());
        auto x = solve(m, m.col(2), f);
        REQUIRE(x.has_value());
        Mat lhs = m * *x, rhs = m.col(2);
        f.normalize_in_place(lhs);
        f.normalize_in_place(rhs);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("kernel/cokernel basics over a field") {
    auto c = CoeffCategory::prime_field(2);
    auto a = ModObj::field_dims(c, {3});
    auto b = ModObj::field_dims(c, {2});

    ModMap z = ModMap::zero(a, b);
    CHECK(kernel(z).obj == a);
    CHECK(kernel(z).incl == ModMap::identity(a));
    CHECK(cokernel(z).obj == b);

    ModMap id = ModMap::identity(a);
    CHECK(kernel(id).obj.is_zero());
    CHECK(cokernel(id).obj.is_zero());
}

TEST_CASE("mult by 2 on Z: kernel zero, cokernel Z/2") {
    auto zc = CoeffCategory::integers();
    auto zobj = ModObj::z_module({}, 1);
    ModMap by2 = ModMap::make(zobj, zobj, {Mat{{2}}});
    CHECK(kernel(by2).obj.is_zero());
    auto q = cokernel(by2);
    CHECK(q.obj == ModObj::z_module({2}, 0));
    CHECK(compose(q.proj, by2).is_zero());
    CHECK(is_epi(q.proj));
    (void)zc;
}

TEST_CASE("cokernel of diag(2,3) is Z/6") {
    auto z2 = ModObj::z_module({}, 2);
    ModMap f = ModMap::make(z2, z2, {Mat{{2, 0}, {0, 3}}});
    CHECK(cokernel(f).obj == ModObj::z_module({6}, 0));
}

TEST_CASE("pullback of 2,3: Z -> Z <- Z") {
    auto zobj = ModObj::z_module({}, 1);
    ModMap f = ModMap::make(zobj, zobj, {Mat{{2}}});
    ModMap g = ModMap::make(zobj, zobj, {Mat{{3}}});
    PullbackResult p = pullback(f, g);
    CHECK(p.obj == ModObj::z_module({}, 1));
    CHECK(compose(f, p.to_a) == compose(g, p.to_b));
    // generated by (3, 2) up to sign
    CHECK(abs(p.to_a.block(0).at(0, 0).get_num()) == 3);
    CHECK(abs(p.to_b.block(0).at(0, 0).get_num()) == 2);
}

TEST_CASE("pullback along identity is the other leg") {
    auto c = CoeffCategory::rationals();
    auto a = ModObj::field_dims(c, {2});
    auto b = ModObj::field_dims(c, {3});
    ModMap f = ModMap::make(a, b, {Mat{{1, 0}, {0, 1}, {2, 3}}});
    PullbackResult p = pullback(f, ModMap::identity(b));
    CHECK(is_iso(p.to_a));
}

TEST_CASE("direct sum biproduct identities") {
    std::mt19937_64 rng(7);
    auto c = CoeffCategory::prime_field(2);
    auto a = ModObj::field_dims(c, {2});
    auto b = ModObj::field_dims(c, {3});
    auto s = direct_sum(c, {a, b});
    CHECK(s.obj == ModObj::field_dims(c, {5}));
    CHECK(compose(s.proj[0], s.inj[0]) == ModMap::identity(a));
    CHECK(compose(s.proj[1], s.inj[1]) == ModMap::identity(b));
    CHECK(compose(s.proj[0], s.inj[1]).is_zero());
    ModMap sum = add(compose(s.inj[0], s.proj[0]), compose(s.inj[1], s.proj[1]));
    CHECK(sum == ModMap::identity(s.obj));

    // Z case: invariant factors must re-interleave (Z/2 + Z/3 = Z/6).
    auto z23 = direct_sum(CoeffCategory::integers(),
                          {ModObj::z_module({2}, 0), ModObj::z_module({3}, 1)});
    CHECK(z23.obj == ModObj::z_module({6}, 1));
    CHECK(compose(z23.proj[0], z23.inj[0]) == ModMap::identity(ModObj::z_module({2}, 0)));
    CHECK(compose(z23.proj[1], z23.inj[1]) == ModMap::identity(ModObj::z_module({3}, 1)));
    ModMap s2 = add(compose(z23.inj[0], z23.proj[0]), compose(z23.inj[1], z23.proj[1]));
    CHECK(s2 == ModMap::identity(z23.obj));

    CHECK(direct_sum(c, {}).obj.is_zero());
    CHECK(direct_sum(c, {a}).obj == a);
    (void)rng;
}

TEST_CASE("direct sum rejects mixed coefficients") {
    auto a = ModObj::field_dims(CoeffCategory::prime_field(2), {1});
    CHECK_THROWS_AS(direct_sum(CoeffCategory::rationals(), {a}), ValidationError);
}

TEST_CASE("pullback along a zero map against a mono recovers the other corner") {
    auto c = CoeffCategory::rationals();
    auto a = ModObj::field_dims(c, {2});
    auto b = ModObj::field_dims(c, {1});
    auto cc = ModObj::field_dims(c, {2});
    ModMap f = ModMap::zero(a, cc);
    ModMap g = ModMap::make(b, cc, {Mat{{1}, {2}}}); // mono
    PullbackResult p = pullback(f, g);
    CHECK(p.obj == a);
    CHECK(is_iso(p.to_a));
    CHECK(p.to_b.is_zero());
}

TEST_CASE("pullback rejects mismatched codomains") {
    auto c = CoeffCategory::rationals();
    auto a = ModObj::field_dims(c, {1});
    auto b = ModObj::field_dims(c, {2});
    ModMap f = ModMap::zero(a, a);
    ModMap g = ModMap::zero(a, b);
    CHECK_THROWS_AS(pullback(f, g), ValidationError);
}

TEST_CASE("kernel universal property on random maps") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        bool zcase = trial % 2;
        CoeffCategory c = zcase ? CoeffCategory::integers() : CoeffCategory::prime_field(3);
        ModObj a = zcase ? ModObj::z_module({2, 4}, 1) : ModObj::field_dims(c, {3});
        ModObj b = zcase ? ModObj::z_module({2}, 2) : ModObj::field_dims(c, {2});
        Mat fm = random_int_mat(rng, b.comps[0].gens, a.comps[0].gens, -4, 4);
        ModMap f = [&] {
            if (!zcase)
                return ModMap::make(a, b, {fm});
            // Force well-definedness for the Z case: zero out the torsion columns.
            for (std::size_t j = 0; j < a.comps[0].tor.size(); ++j)
                for (std::size_t i = 0; i < fm.rows(); ++i)
                    fm.at(i, j) = 0;
            return ModMap::make(a, b, {fm});
        }();
        SubObject k = kernel(f);
        CHECK(is_mono(k.incl));
        CHECK(compose(f, k.incl).is_zero());

        // Any g with f o g = 0 factors through the kernel inclusion.
        ModObj x = zcase ? ModObj::z_module({}, 2) : ModObj::field_dims(c, {2});
        Mat gm = k.incl.block(0) * random_int_mat(rng, k.obj.comps[0].gens, x.comps[0].gens, -3, 3);
        ModMap g = ModMap::make(x, a, {gm});
        REQUIRE(compose(f, g).is_zero());
        auto h = factor_through_mono(g, k.incl);
        REQUIRE(h.has_value());
        CHECK(compose(k.incl, *h) == g);
    }
}

TEST_CASE("cokernel universal property on random maps") {
    std::mt19937_64 rng(100);
    for (int trial = 0; trial < 25; ++trial) {
        CoeffCategory c = CoeffCategory::prime_field(5);
        ModObj a = ModObj::field_dims(c, {2});
        ModObj b = ModObj::field_dims(c, {3});
        ModMap f = ModMap::make(a, b, {random_int_mat(rng, 3, 2, -4, 4)});
        QuotientObject q = cokernel(f);
        CHECK(is_epi(q.proj));
        CHECK(compose(q.proj, f).is_zero());
        // a random cofactor: any g killing im(f) factors through proj
        ModMap g = compose(ModMap::make(q.obj, a, {random_int_mat(
                               rng, 2, q.obj.comps[0].gens, -4, 4)}),
                           q.proj);
        auto h = factor_through_epi(g, q.proj);
        REQUIRE(h.has_value());
        CHECK(compose(*h, q.proj) == g);
    }
}

TEST_CASE("image via kernel of cokernel matches coimage rank") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        CoeffCategory c = CoeffCategory::rationals();
        ModObj a = ModObj::field_dims(c, {4});
        ModObj b = ModObj::field_dims(c, {3});
        ModMap f = ModMap::make(a, b, {random_int_mat(rng, 3, 4, -3, 3)});
        SubObject im = image(f);
        SubObject im2 = kernel(cokernel(f).proj);
        CHECK(im.obj == im2.obj);
        CHECK(subobject_eq(im, im2));
        QuotientObject coim = cokernel(kernel(f).incl);
        CHECK(coim.obj == im.obj); // rank equality
    }
}

TEST_CASE("composition associativity on random triples") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        CoeffCategory c = CoeffCategory::prime_field(7);
        ModObj a = ModObj::field_dims(c, {2}), b = ModObj::field_dims(c, {3}),
               d = ModObj::field_dims(c, {2}), e = ModObj::field_dims(c, {3});
        ModMap f = ModMap::make(a, b, {random_int_mat(rng, 3, 2, 0, 6)});
        ModMap g = ModMap::make(b, d, {random_int_mat(rng, 2, 3, 0, 6)});
        ModMap h = ModMap::make(d, e, {random_int_mat(rng, 3, 2, 0, 6)});
        CHECK(compose(compose(h, g), f) == compose(h, compose(g, f)));
        CHECK(compose(f, ModMap::identity(a)) == f);
        CHECK(compose(ModMap::identity(b), f) == f);
    }
}

TEST_CASE("discrete category splits per object") {
    auto c = CoeffCategory::discrete(2, {"r1", "r2"});
    auto a = ModObj::field_dims(c, {2, 1});
    auto b = ModObj::field_dims(c, {1, 1});
    ModMap f = ModMap::make(a, b, {Mat{{1, 1}}, Mat{{0}}});
    CHECK(kernel(f).obj == ModObj::field_dims(c, {1, 1}));
    CHECK(cokernel(f).obj == ModObj::field_dims(c, {0, 1}));
}

TEST_CASE("Z well-definedness is enforced") {
    auto z2 = ModObj::z_module({2}, 0);
    auto zfree = ModObj::z_module({}, 1);
    // Z/2 -> Z by 1 is not a module map.
    CHECK_THROWS_AS(ModMap::make(z2, zfree, {Mat{{1}}}), ValidationError);
    // Z/2 -> Z/4 by 1 is not well defined; by 2 it is.
    auto z4 = ModObj::z_module({4}, 0);
    CHECK_THROWS_AS(ModMap::make(z2, z4, {Mat{{1}}}), ValidationError);
    CHECK_NOTHROW(ModMap::make(z2, z4, {Mat{{2}}}));
    // Z -> Z/2 is fine and normalizes mod 2.
    ModMap r = ModMap::make(zfree, z2, {Mat{{5}}});
    CHECK(r.block(0).at(0, 0) == 1);
}

TEST_CASE("pullback universal property on random cones per flavor") {
    std::mt19937_64 rng(555);
    auto flavors = std::vector<CoeffCategory>{
        CoeffCategory::prime_field(2), CoeffCategory::rationals(), CoeffCategory::integers(),
        CoeffCategory::discrete(3, {"r1", "r2"})};
    for (const auto& c : flavors) {
        for (int trial = 0; trial < 100; ++trial) {
            bool zcase = c.kind == CoeffCategory::Kind::Integers;
            auto obj = [&](long gens) {
                if (zcase)
                    return ModObj::z_module({}, gens);
                return ModObj::field_dims(c, std::vector<long>(c.n_objects(), gens));
            };
            ModObj a = obj(2), b = obj(2), cc = obj(1), x = obj(1);
            auto rand_map = [&](const ModObj& dom, const ModObj& cod) {
                std::vector<Mat> blocks;
                for (std::size_t o = 0; o < c.n_objects(); ++o)
                    blocks.push_back(random_int_mat(rng, cod.comps[o].gens, dom.comps[o].gens,
                                                    -3, 3));
                return ModMap::make(dom, cod, std::move(blocks));
            };
            ModMap f = rand_map(a, cc), g = rand_map(b, cc);
            PullbackResult p = pullback(f, g);
            CHECK(compose(f, p.to_a) == compose(g, p.to_b));
            // a random cone: x -> P composed with the legs, then re-factored
            ModMap h0 = rand_map(x, p.obj);
            ModMap to_a = compose(p.to_a, h0), to_b = compose(p.to_b, h0);
            REQUIRE(compose(f, to_a) == compose(g, to_b));
            SumDecomposition ab = direct_sum(c, {a, b});
            ModMap cone = add(compose(ab.inj[0], to_a), compose(ab.inj[1], to_b));
            SubObject k = kernel(sub(compose(f, ab.proj[0]), compose(g, ab.proj[1])));
            auto h = factor_through_mono(cone, k.incl);
            REQUIRE(h.has_value());
            CHECK(compose(compose(ab.proj[0], k.incl), *h) == to_a);
            CHECK(compose(compose(ab.proj[1], k.incl), *h) == to_b);
        }
    }
}

TEST_CASE("image equals coimage over Z (invariant factors)") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        ModObj a = ModObj::z_module({}, 3);
        ModObj b = ModObj::z_module({4}, 2);
        Mat fm = random_int_mat(rng, 3, 3, -4, 4);
        ModMap f = ModMap::make(a, b, {fm});
        SubObject im = image(f);
        QuotientObject coim = cokernel(kernel(f).incl);
        CHECK(im.obj == coim.obj);
    }
}

TEST_CASE("sub_from_generators over Z keeps torsion") {
    // Subgroup of Z + Z/4 generated by (2, 1): infinite cyclic? (2,1) has
    // infinite order; generated subgroup is Z.
    auto amb = ModObj::z_module({4}, 1);
    // generators are columns on (torsion gen first, then free gen)
    Mat g(2, 1);
    g.at(0, 0) = 1; // torsion coordinate
    g.at(1, 0) = 2; // free coordinate
    SubObject s = sub_from_generators(amb, {g});
    CHECK(s.obj == ModObj::z_module({}, 1));
    CHECK(is_mono(s.incl));

    // Subgroup generated by (2, 0) inside Z/4 + Z: cyclic of order 2.
    Mat g2(2, 1);
    g2.at(0, 0) = 2;
    SubObject s2 = sub_from_generators(amb, {g2});
    CHECK(s2.obj == ModObj::z_module({2}, 0));
}
