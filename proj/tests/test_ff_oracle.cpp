#include <catch2/catch_amalgamated.hpp>

#include <sl2tqft/ff_oracle.hpp>

#include <random>

using namespace sl2tqft;

TEST_CASE("group construction") {
    CHECK(build_group(3).order() == 24);
    CHECK(build_group(5).order() == 120);
    CHECK(build_group(7).order() == 336);
    CHECK_THROWS_AS(build_group(2), BadCharacteristic);
    CHECK_THROWS_AS(build_group(11), BadCharacteristic);
}

TEST_CASE("group axioms, spot-checked") {
    const FiniteGroup g = build_group(5);
    std::mt19937 rng(987);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    const int e = g.identity();
    for (int i = 0; i < 300; ++i) {
        const int x = pick(rng), y = pick(rng), z = pick(rng);
        CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
        CHECK(g.mul(x, e) == x);
        CHECK(g.mul(e, x) == x);
        CHECK(g.mul(x, g.inv(x)) == e);
    }
}

TEST_CASE("commutator distribution anchors") {
    const FiniteGroup g3 = build_group(3);
    const ClassFunction n3 = commutator_distribution(g3);
    CHECK(n3[size_t(g3.identity())] == 168);      // |G| * number of classes
    CHECK(n3[size_t(g3.neg_identity())] == 24);
    // commutators in SL2(F_3) lie in the quaternion subgroup: no unipotents
    const ClassFunction ju = class_indicator(g3, PunctureClass::JPlus);
    for (int i = 0; i < g3.order(); ++i)
        if (ju[size_t(i)] == 1) CHECK(n3[size_t(i)] == 0);

    const FiniteGroup g5 = build_group(5);
    const ClassFunction n5 = commutator_distribution(g5);
    CHECK(n5[size_t(g5.identity())] == 1080);

    // total mass |G|^2
    Int total = 0;
    for (const auto& v : n3) total += v;
    CHECK(total == Int(24) * 24);
}

TEST_CASE("commutator distribution is a class function") {
    const FiniteGroup g = build_group(5);
    const ClassFunction n = commutator_distribution(g);
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int i = 0; i < 200; ++i) {
        const int z = pick(rng), h = pick(rng);
        CHECK(n[size_t(z)] == n[size_t(g.conjugate(z, h))]);
    }
    for (auto c : {PunctureClass::JPlus, PunctureClass::JMinus}) {
        const ClassFunction ind = class_indicator(g, c);
        for (int i = 0; i < 100; ++i) {
            const int z = pick(rng), h = pick(rng);
            CHECK(ind[size_t(z)] == ind[size_t(g.conjugate(z, h))]);
        }
    }
}

TEST_CASE("class indicator supports") {
    for (int p : {3, 5, 7}) {
        const FiniteGroup g = build_group(p);
        for (auto c : {PunctureClass::JPlus, PunctureClass::JMinus}) {
            Int support = 0;
            for (const auto& v : class_indicator(g, c)) support += v;
            CHECK(support == p * p - 1);
        }
        Int one = 0;
        for (const auto& v : class_indicator(g, PunctureClass::NegId)) one += v;
        CHECK(one == 1);
    }
}

TEST_CASE("convolution identities") {
    const FiniteGroup g = build_group(3);
    const ClassFunction n = commutator_distribution(g);
    CHECK(convolve(g, n, delta(g, g.identity())) == n);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int i = 0; i < 50; ++i) {
        const int a = pick(rng), b = pick(rng);
        CHECK(convolve(g, delta(g, a), delta(g, b)) == delta(g, g.mul(a, b)));
    }
}

TEST_CASE("counts") {
    CHECK(count(SurfaceSpec{0, {}}, 3) == 1);
    CHECK(count(SurfaceSpec{1, {}}, 3) == 168);
    CHECK(count(SurfaceSpec{1, {PunctureClass::NegId}}, 3) == 24);
    CHECK(count(SurfaceSpec{1, {PunctureClass::JPlus}}, 3) == 0);
    CHECK(count(SurfaceSpec{1, {}}, 5) == 1080);
    // four-tuple count: N * N at the identity
    CHECK(count(SurfaceSpec{2, {}}, 3) == 53376);
}

TEST_CASE("counts match engine polynomials where polynomial count holds") {
    // all untwisted specs at p = 3; twisted specs only at p = 1 mod 4
    const FiniteGroup g3 = build_group(3);
    const ClassFunction n3 = commutator_distribution(g3);
    for (int g = 1; g <= 2; ++g)
        for (int rp = 0; rp <= 1; ++rp)
            for (int rm = 0; rm <= 1; ++rm)
                for (int t = 0; t <= 1; ++t) {
                    SurfaceSpec spec{g, {}};
                    spec.punctures.insert(spec.punctures.end(), rp, PunctureClass::JPlus);
                    spec.punctures.insert(spec.punctures.end(), rm, PunctureClass::JMinus);
                    spec.punctures.insert(spec.punctures.end(), t, PunctureClass::NegId);
                    if (spec.sigma_sign() != 1) continue;
                    INFO("g=" << g << " r+=" << rp << " r-=" << rm << " t=" << t);
                    CHECK(count(spec, g3, n3) == evaluate(spec).eval_int(3));
                }
}

TEST_CASE("twisted specs at p = 3 are the documented exception") {
    // ground truth frozen from exhaustive enumeration; the engine value is
    // the complex answer and differs (see the finding in verify/acceptance)
    const SurfaceSpec tw{1, {PunctureClass::JMinus}};
    CHECK(count(tw, 3) == 0);
    CHECK(evaluate(tw).eval_int(3) == 432);
    CHECK(count(tw, 5) == evaluate(tw).eval_int(5));
}
