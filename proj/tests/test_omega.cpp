#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "lacuna/omega.hpp"

using namespace lacuna;

namespace {

// Independent oracle: scan every odd candidate in a window around the
// target, keep those within distance 1, pick min distance with ties going
// to the smaller. Exercised only in tests; shares no code with the
// selection in omega.hpp.
Int brute_force_odd(const Rat& target) {
    Int lo = rat_floor(target) - 3;
    std::vector<Int> qualifying;
    for (Int o = lo; o <= rat_floor(target) + 3; ++o) {
        if (!is_odd(o))
            continue;
        if (rat_abs(Rat(o) - target) <= 1)
            qualifying.push_back(o);
    }
    REQUIRE(!qualifying.empty());
    REQUIRE(qualifying.size() <= 2);
    Int best = qualifying.front();
    for (const Int& o : qualifying)
        if (rat_abs(Rat(o) - target) < rat_abs(Rat(best) - target))
            best = o;
    return best; // scan order is ascending, so ties keep the smaller
}

} // namespace

TEST_CASE("base odd selection") {
    CHECK(select_base_odd(3, 13) == 5);   // |5 - 13/3| = 2/3
    CHECK(select_base_odd(1, 4) == 3);    // tie between 3 and 5
    CHECK(select_base_odd(2, 10) == 5);   // ratio is exactly 5

    CHECK(select_base_odd(3, 13) == brute_force_odd(Rat(13, 3)));
    CHECK(select_base_odd(1, 4) == brute_force_odd(Rat(4)));
    CHECK(select_base_odd(2, 10) == brute_force_odd(Rat(5)));
}

TEST_CASE("recursive odd selection") {
    CHECK(select_next_odd(5, 13, 105) == 41);     // target 525/13
    CHECK(select_next_odd(41, 105, 1681) == 657); // target 68921/105
    CHECK(select_next_odd(3, 2, 4) == 5);         // target 6: tie, smaller wins

    CHECK(select_next_odd(5, 13, 105) == brute_force_odd(Rat(525, 13)));
    CHECK(select_next_odd(41, 105, 1681) == brute_force_odd(Rat(68921, 105)));
}

TEST_CASE("odd selection matches the brute-force oracle on random targets") {
    std::mt19937_64 rng(1870);
    std::uniform_int_distribution<long> num(1, 100000);
    std::uniform_int_distribution<long> den(1, 500);
    for (int i = 0; i < 3000; ++i) {
        Rat t(num(rng), den(rng));
        CHECK(detail::nearest_odd(t) == brute_force_odd(t));
    }
}

TEST_CASE("approximant chains") {
    auto two = approximants(LacunarySequence::validate({Int(3), Int(13)}));
    CHECK(two.odds == std::vector<Int>{Int(5)});
    CHECK(two.q == std::vector<Rat>{Rat(1, 3), Rat(5, 13)});

    auto three = approximants(LacunarySequence::validate({Int(3), Int(13), Int(105)}));
    CHECK(three.odds == std::vector<Int>{Int(5), Int(41)});
    CHECK(three.q == std::vector<Rat>{Rat(1, 3), Rat(5, 13), Rat(41, 105)});
    CHECK(rat_abs(Rat(5, 13) - Rat(41, 105)) == Rat(8, 1365));
    CHECK(rat_abs(Rat(5, 13) - Rat(41, 105)) <= Rat(1, 105));

    auto one = approximants(LacunarySequence::validate({Int(3)}));
    CHECK(one.odds.empty());
    CHECK(one.q == std::vector<Rat>{Rat(1, 3)});
}

TEST_CASE("odd chain defining inequalities hold exactly") {
    for (Int seed : {Int(1), Int(2), Int(3), Int(5)}) {
        auto seq = LacunarySequence::generate(10, seed);
        auto chain = approximants(seq);
        REQUIRE(chain.odds.size() == seq.size() - 1);
        for (const Int& o : chain.odds) {
            CHECK(is_odd(o));
            CHECK(o > 0);
        }
        CHECK(rat_abs(Rat(chain.odds[0]) - Rat(seq.term(2), seq.term(1))) <= 1);
        for (std::size_t k = 2; k < seq.size(); ++k)
            CHECK(rat_abs(Rat(chain.odds[k - 1]) -
                          Rat(chain.odds[k - 2]) * Rat(seq.term(k + 1), seq.term(k))) <= 1);
    }
}

TEST_CASE("telescoping: |q_{k-1} - q_k| <= 1/n_k") {
    for (Int seed : {Int(1), Int(2), Int(3), Int(5)}) {
        auto seq = LacunarySequence::generate(10, seed);
        auto chain = approximants(seq);
        for (std::size_t k = 2; k <= seq.size(); ++k) {
            CHECK(rat_abs(chain.q[k - 2] - chain.q[k - 1]) <= Rat(1, seq.term(k)));
            CHECK(chain.q[k - 1] > 0);
        }
    }
}

TEST_CASE("omega enclosure at depth 4, seed 3") {
    auto om = omega_enclosure(LacunarySequence::generate(4, 3));
    CHECK(om.center == Rat(657, 1681));
    CHECK(om.radius == Rat(1, 26896));
    CHECK(om.enclosure.lo == Rat(657, 1681) - Rat(1, 26896));
    CHECK(om.enclosure.hi == Rat(657, 1681) + Rat(1, 26896));

    // deeper approximants stay inside: the tail-majorant oracle
    auto chain6 = approximants(LacunarySequence::generate(6, 3));
    CHECK(chain6.q[4] == Rat(21025, 53793));
    CHECK(chain6.q[5] == Rat(1345601, 3442753));
    CHECK(contains(om.enclosure, chain6.q[4]));
    CHECK(contains(om.enclosure, chain6.q[5]));
}

TEST_CASE("omega enclosure at depth 2 contains the depth-4 center") {
    auto om = omega_enclosure(LacunarySequence::generate(2, 3));
    CHECK(om.center == Rat(5, 13));
    CHECK(om.radius == Rat(1, 52));
    CHECK(contains(om.enclosure, Rat(657, 1681)));
}

TEST_CASE("omega enclosure requires depth >= 2") {
    CHECK_THROWS_MATCHES(omega_enclosure(LacunarySequence::generate(1, 3)), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.id() == "insufficient-depth"; }));
}

TEST_CASE("enclosures nest and refine") {
    for (Int seed : {Int(1), Int(3)}) {
        for (std::size_t K = 2; K <= 11; ++K) {
            auto outer = omega_enclosure(LacunarySequence::generate(K, seed));
            auto inner = omega_enclosure(LacunarySequence::generate(K + 1, seed));
            CHECK(subset_of(inner.enclosure, outer.enclosure));
            CHECK(width(inner.enclosure) <= width(outer.enclosure) / 4);
        }
    }
}

TEST_CASE("tail-bound soundness across depths") {
    for (Int seed : {Int(1), Int(2), Int(3), Int(5)}) {
        auto deep = approximants(LacunarySequence::generate(12, seed));
        for (std::size_t K = 2; K <= 11; ++K) {
            auto om = omega_enclosure(LacunarySequence::generate(K, seed));
            for (std::size_t Kp = K + 1; Kp <= 12; ++Kp)
                CHECK(contains(om.enclosure, deep.q[Kp - 1]));
        }
    }
}

TEST_CASE("theta residuals, seed 3 depth 6") {
    auto seq = LacunarySequence::generate(6, 3);
    auto om = omega_enclosure(seq);

    // independent oracle: image of n_s * [c-r, c+r] shifted by the odd,
    // computed endpoint by endpoint
    auto oracle_hi = [&](std::size_t s, const Int& odd) {
        Rat a = Rat(seq.term(s)) * (om.center - om.radius) - Rat(odd);
        Rat b = Rat(seq.term(s)) * (om.center + om.radius) - Rat(odd);
        return std::max(rat_abs(a), rat_abs(b));
    };

    ThetaResidual t2 = theta(seq, 2);
    CHECK(2 * t2.z + 1 == 5);
    CHECK(t2.bounds.hi == oracle_hi(2, Int(5)));
    CHECK(t2.bounds.hi < Rat(1, 4));
    CHECK(t2.bounds.lo >= 0);
    CHECK_THAT(t2.bounds.hi.convert_to<double>(),
               Catch::Matchers::WithinAbs(0.0811, 2e-4)); // 13 * 0.3908501 = 5.081...

    ThetaResidual t3 = theta(seq, 3);
    CHECK(2 * t3.z + 1 == 41);
    CHECK(t3.bounds.hi == oracle_hi(3, Int(41)));
    CHECK(t3.bounds.hi < Rat(1, 8));
    CHECK_THAT(t3.bounds.hi.convert_to<double>(), Catch::Matchers::WithinAbs(0.0393, 2e-4));

    ThetaResidual t4 = theta(seq, 4);
    CHECK(2 * t4.z + 1 == 657);
    CHECK(t4.bounds.hi == oracle_hi(4, Int(657)));
    CHECK(t4.bounds.hi < Rat(1, 16));
    CHECK_THAT(t4.bounds.hi.convert_to<double>(), Catch::Matchers::WithinAbs(0.0193, 2e-4));
}

TEST_CASE("theta rejects indices outside the certified range") {
    auto seq = LacunarySequence::generate(6, 3);
    for (std::size_t s : {std::size_t(0), std::size_t(1), std::size_t(5), std::size_t(6)})
        CHECK_THROWS_MATCHES(theta(seq, s), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.id() == "insufficient-depth-for-s";
                             }));
}

TEST_CASE("certified theta decay across seeds") {
    for (Int seed : {Int(1), Int(2), Int(3), Int(5)}) {
        auto seq = LacunarySequence::generate(10, seed);
        for (std::size_t s = 2; s + 2 <= seq.size(); ++s) {
            ThetaResidual t = theta(seq, s);
            CHECK(t.bounds.hi < Rat(1, pow2(static_cast<unsigned>(s))));
        }
    }
}
