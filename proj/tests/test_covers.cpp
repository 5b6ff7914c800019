#include <doctest.h>

#include <set>

#include "amalgam/covers.hpp"
#include "faults.hpp"
#include "helpers.hpp"
#include "neumann_oracle.hpp"

using namespace amalgam;
using namespace amalgam::testing;

TEST_CASE("neumann parity criterion") {
    BoundaryPartition two_units{{{1, 1}}};
    CHECK(neumann_cover_exists(-1, 1, 2, two_units));
    BoundaryPartition one_double{{{2}}};
    CHECK(!neumann_cover_exists(-1, 1, 2, one_double));
    BoundaryPartition deg16{{{16}, {16}}};
    CHECK(neumann_cover_exists(-2, 2, 16, deg16));

    // Genus-zero pieces are outside the criterion's hypothesis.
    CHECK_THROWS_AS(neumann_cover_exists(0, 2, 2, two_units), std::domain_error);
    // Partitions must sum to the degree.
    BoundaryPartition bad{{{1, 1, 1}}};
    CHECK_THROWS_AS(neumann_cover_exists(-1, 1, 2, bad), std::invalid_argument);
}

TEST_CASE("neumann parity agrees with the brute-force oracle at tiny scale") {
    for (int gamma = 1; gamma <= 1; ++gamma)
        for (int b = 1; b <= 2; ++b)
            for (int d = 2; d <= 3; ++d) {
                int euler = 2 - 2 * gamma - b;
                auto realized = realizable_partition_tuples(gamma, b, d);
                auto parts = partitions_of(d);
                std::vector<std::vector<std::vector<int>>> queries;
                if (b == 1)
                    for (const auto& p : parts) queries.push_back({p});
                else
                    for (const auto& p : parts)
                        for (const auto& q : parts) queries.push_back({p, q});
                for (const auto& q : queries) {
                    BoundaryPartition bp{q};
                    CHECK(neumann_cover_exists(euler, b, d, bp) == (realized.count(q) > 0));
                }
            }
}

TEST_CASE("bounding pair double covers") {
    auto ns = bounding_pair_double_cover(2, CurveSpec::non_separating());
    CHECK(ns.eulers == std::array<long long, 2>{-2, -2});
    CHECK(verify_cover(ns.cover).pass);
    CHECK(ns.cover.degree == 2);

    auto sep11 = bounding_pair_double_cover(2, CurveSpec::separating(1, 1));
    CHECK(sep11.eulers == std::array<long long, 2>{-2, -2});
    CHECK(verify_cover(sep11.cover).pass);

    auto sep12 = bounding_pair_double_cover(3, CurveSpec::separating(1, 2));
    CHECK(sep12.eulers == std::array<long long, 2>{-6, -2});
    CHECK(verify_cover(sep12.cover).pass);
}

TEST_CASE("K_{m,n} cover fragments") {
    auto c23 = kmn_cover_fragment(2, 3);
    CHECK(c23.total.circle_count() == 5);
    CHECK(c23.total.pieces.size() == 6);
    CHECK(c23.degree == 6);
    CHECK(verify_cover(c23).pass);

    auto c11 = kmn_cover_fragment(1, 1);
    CHECK(c11.total.circle_count() == 2);
    CHECK(c11.total.pieces.size() == 1);
    CHECK(c11.degree == 1);
    CHECK(verify_cover(c11).pass);

    auto star = kmn_cover_fragment(1, 4);
    CHECK(star.degree == 4);
    CHECK(verify_cover(star).pass);
}

TEST_CASE("tower X for (2,3) nonseparating") {
    auto spec = mk(2, 2, 2, 3);
    Tower t = build_tower_X(spec);
    REQUIRE(t.stages.size() == 6);
    REQUIRE(t.links.size() == 5);

    long long chi = euler_char(t.stages[0]);
    CHECK(chi == -4);
    long long mn = 6;
    std::vector<long long> expected = {chi,          2 * chi,      2 * mn * chi,
                                       2 * mn * chi, 4 * mn * chi, 64 * mn * chi};
    for (std::size_t i = 0; i < 6; ++i) CHECK(euler_char(t.stages[i]) == expected[i]);

    for (const auto& l : t.links) {
        if (l.kind != TowerLink::Kind::Cover) continue;
        auto r = verify_cover(*l.cover);
        CHECK(r.pass);
    }
    for (const auto& s : t.stages) CHECK(is_connected(s));

    // X3 carries N = 2 tori per merged circle; X4 has 4 branch circles.
    const Complex2& x3 = t.stages[3];
    int tori = 0;
    for (const auto& p : x3.pieces)
        if (p.kind == Complex2::Piece::Kind::Tube && p.att[0].circle == p.att[1].circle)
            ++tori;
    CHECK(tori == 4);  // 2N with N = 2
    CHECK(t.stages[4].circle_count() == 4);
    int x4_surfaces = 0;
    for (const auto& p : t.stages[4].pieces)
        if (p.kind == Complex2::Piece::Kind::Surface) ++x4_surfaces;
    CHECK(x4_surfaces == 2 * 2 * (2 + 3));  // |T| + |T'| = 2 * 2(m+n)
}

TEST_CASE("X1 pieces carry the associated-vector side eulers") {
    for (const auto& spec :
         {mk(2, 2, 2, 3), mk(2, 3, 1, 2, CurveSpec::separating(1, 1)),
          mk(3, 2, 2, 2, CurveSpec::non_separating(), CurveSpec::separating(1, 1))}) {
        Tower t = build_tower_X(spec);
        auto d = associated_racg_vector(spec);
        std::multiset<long long> expected = {d.v1, d.v2, d.v3, d.v4};
        std::multiset<long long> got;
        for (const auto& p : t.stages[1].pieces)
            if (p.kind == Complex2::Piece::Kind::Surface) got.insert(p.euler);
        CHECK(got == expected);
        CHECK(t.side_eulers == std::array<long long, 4>{d.v1, d.v2, d.v3, d.v4});
    }
}

TEST_CASE("tower Z matches the associated vector") {
    auto spec = mk(2, 2, 2, 3);
    Tower t = build_tower_Z(spec);
    REQUIRE(t.stages.size() == 2);
    const Complex2& z1 = t.stages[0];
    int tubes = 0, surfaces = 0;
    std::multiset<long long> eulers;
    for (const auto& p : z1.pieces) {
        if (p.kind == Complex2::Piece::Kind::Tube)
            ++tubes;
        else {
            ++surfaces;
            eulers.insert(p.euler);
        }
    }
    CHECK(tubes == 4);      // 2N
    CHECK(surfaces == 10);  // 2n + 2m
    CHECK(eulers.count(16 * -4) == 6);
    CHECK(eulers.count(16 * -6) == 4);
    auto w = associated_racg_vector(spec).w;
    CHECK(euler_char(z1) == 16 * (w.sum_quarters() / 4));
    CHECK(euler_char(z1) == -768);

    CHECK(t.stages[1].circle_count() == 4);
    CHECK(euler_char(t.stages[1]) == 2 * euler_char(z1));
    REQUIRE(t.links.size() == 1);
    CHECK(verify_cover(*t.links[0].cover).pass);
    REQUIRE(t.orbi_link.has_value());
    CHECK(t.orbi_link->degree == 16);
}

TEST_CASE("X5 is isomorphic to Z2") {
    CHECK(check_X5_iso_Z2(mk(2, 2, 2, 3)).has_value());
    CHECK(check_X5_iso_Z2(mk(2, 2, 1, 1)).has_value());
    CHECK(check_X5_iso_Z2(mk(2, 3, 1, 2, CurveSpec::separating(1, 1))).has_value());
}

TEST_CASE("verify_cover names condition (v) for an euler off by two") {
    Tower t = build_tower_X(mk(2, 2, 2, 3));
    const CoverMap& cm = *t.links[0].cover;
    CoverMap bad = cm;
    for (std::size_t i = 0; i < bad.total.pieces.size(); ++i)
        if (bad.total.pieces[i].kind == Complex2::Piece::Kind::Surface) {
            bad.total.pieces[i].euler += 2;
            break;
        }
    auto r = verify_cover(bad);
    CHECK(!r.pass);
    REQUIRE(r.primary.has_value());
    CHECK(*r.primary == CoverCondition::PieceLocalStructure);
}

TEST_CASE("fault injection across every cover link") {
    Tower tx = build_tower_X(mk(2, 2, 2, 3));
    Tower tz = build_tower_Z(mk(2, 2, 2, 3));
    std::vector<const CoverMap*> links;
    for (const auto& l : tx.links)
        if (l.kind == TowerLink::Kind::Cover) links.push_back(&*l.cover);
    for (const auto& l : tz.links)
        if (l.kind == TowerLink::Kind::Cover) links.push_back(&*l.cover);
    REQUIRE(links.size() == 5);
    for (const CoverMap* cm : links) {
        REQUIRE(verify_cover(*cm).pass);
        auto faults = make_faults(*cm);
        CHECK(faults.size() == 6);
        for (const auto& f : faults) {
            auto r = verify_cover(f.mutated);
            INFO(cm->name, " / ", f.name);
            CHECK(!r.pass);
            CHECK(r.has(f.expected));
        }
    }
}
