#include "doctest.h"

#include "berncert/certify.hpp"
#include "berncert/hankel.hpp"

#include <stdexcept>
#include <string>

using namespace berncert;

namespace {

const std::vector<std::string> kX{"x"};

MultiPoly hump() {
    return poly_sub(poly_var(kX, "x"), poly_var(kX, "x", 2));  // x(1 - x)
}

// Round-trips through JSON with a caller-supplied mutation in between.
Certificate tampered(const Certificate& cert,
                     const std::function<void(nlohmann::ordered_json&)>& mutate) {
    nlohmann::ordered_json j = certificate_to_json(cert);
    mutate(j);
    return certificate_from_json(nlohmann::json::parse(j.dump()));
}

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("accepts at the root when the enclosure already closes") {
    SubdivisionPolicy policy;
    const MultiPoly sq = poly_var(kX, "x", 2);
    const Certificate cert = certify_upper_bound(sq, Box::unit_cube(1), Rational(1), policy);
    CHECK(cert.overall == Verdict::Proved);
    CHECK(cert.nodes.size() == 1);
    CHECK(cert.nodes[0].max_beta == 1);
    CHECK(cert.degrees == std::vector<int>{2});
    CHECK(certificate_replay(cert).accepted);

    // The strict variant must not accept equality at the corner.
    const Certificate strict =
        certify_upper_bound(sq, Box::unit_cube(1), Rational(1), policy, true);
    CHECK(strict.overall == Verdict::Failed);
    const Certificate strict_ok =
        certify_upper_bound(sq, Box::unit_cube(1), Rational(2), policy, true);
    CHECK(strict_ok.overall == Verdict::Proved);
}

TEST_CASE("disproves with an exact witness at a corner") {
    SubdivisionPolicy policy;
    const Certificate cert = certify_upper_bound(poly_var(kX, "x", 2), Box::unit_cube(1),
                                                 Rational(1, 2), policy);
    REQUIRE(cert.overall == Verdict::Failed);
    const CertNode& node = cert.nodes[0];
    CHECK(node.witness_point == std::vector<Rational>{Rational(1)});
    CHECK(node.witness_value == 1);
    CHECK(certificate_replay(cert).accepted);
}

TEST_CASE("disproves with the box center when corners stay legal") {
    SubdivisionPolicy policy;
    policy.max_depth = 0;
    const Certificate cert =
        certify_upper_bound(hump(), Box::unit_cube(1), Rational(1, 5), policy);
    REQUIRE(cert.overall == Verdict::Failed);
    CHECK(cert.nodes[0].witness_point == std::vector<Rational>{Rational(1, 2)});
    CHECK(cert.nodes[0].witness_value == Rational(1, 4));
}

TEST_CASE("a tight bound needs one bisection") {
    SubdivisionPolicy policy;
    policy.max_depth = 0;
    const Certificate stuck =
        certify_upper_bound(hump(), Box::unit_cube(1), Rational(1, 4), policy);
    CHECK(stuck.overall == Verdict::Undecided);
    CHECK(stuck.nodes.size() == 1);
    const auto worst = worst_residual(stuck);
    REQUIRE(worst.has_value());
    CHECK(worst->first == 0);
    CHECK(worst->second == Rational(1, 2));
    CHECK(certificate_replay(stuck).accepted);

    policy.max_depth = 1;
    const Certificate cert =
        certify_upper_bound(hump(), Box::unit_cube(1), Rational(1, 4), policy);
    CHECK(cert.overall == Verdict::Proved);
    REQUIRE(cert.nodes.size() == 3);
    CHECK(cert.nodes[0].verdict == Verdict::Split);
    CHECK(cert.nodes[0].splits == std::vector<int>{2});
    CHECK(cert.nodes[1].max_beta == Rational(1, 4));
    CHECK(cert.nodes[2].max_beta == Rational(1, 4));
    CHECK_FALSE(worst_residual(cert).has_value());
}

TEST_CASE("a registered sub-proof can discharge an undecidable box") {
    const std::string name = "test-hump-cap";
    if (!hand_chain_registered(name)) {
        register_hand_chain(name, [](const MultiPoly& objective, const Box& box,
                                     const Rational& bound) {
            // x(1 - x) <= 1/4 on [0, 1] by completing the square; anything
            // else is not this chain's claim.
            return bound == Rational(1, 4) && box == Box::unit_cube(1) &&
                   poly_equal(objective, hump());
        });
    }
    CHECK(hand_chain_registered(name));

    SubdivisionPolicy policy;
    policy.max_depth = 0;
    policy.hand_chains = {name};
    const Certificate cert =
        certify_upper_bound(hump(), Box::unit_cube(1), Rational(1, 4), policy);
    CHECK(cert.overall == Verdict::Proved);
    REQUIRE(cert.nodes.size() == 1);
    CHECK(cert.nodes[0].subproof == name);
    CHECK(certificate_replay(cert).accepted);

    // The chain declines other claims, so it cannot be abused.
    const Certificate abuse = tampered(cert, [](nlohmann::ordered_json& j) {
        j["bound"]["num"] = "1";
        j["bound"]["den"] = "5";
    });
    CHECK_FALSE(certificate_replay(abuse).accepted);

    SUBCASE("unknown chain names are rejected up front") {
        SubdivisionPolicy bad;
        bad.hand_chains = {"no-such-chain"};
        CHECK_THROWS_AS(certify_upper_bound(hump(), Box::unit_cube(1), Rational(1, 4), bad),
                        std::invalid_argument);
    }
}

TEST_CASE("JSON round-trip preserves the certificate") {
    SubdivisionPolicy policy;
    policy.schedule = {{2}};
    const Certificate cert =
        certify_upper_bound(hump(), Box::unit_cube(1), Rational(1, 4), policy);
    REQUIRE(cert.nodes.size() == 3);
    const Certificate back =
        certificate_from_json(nlohmann::json::parse(certificate_to_json(cert).dump()));
    CHECK(certificate_to_json(back) == certificate_to_json(cert));
    CHECK(certificate_replay(back).accepted);
}

TEST_CASE("replay accepts the second objective's quadrant certificate") {
    const BoundPolys bp = build_bound_polys(false);
    SubdivisionPolicy policy;
    policy.schedule = {{2, 2, 1}};
    policy.max_depth = 1;
    const Certificate cert =
        certify_upper_bound(bp.R2tilde, Box::unit_cube(3), Rational(16), policy);
    REQUIRE(cert.overall == Verdict::Proved);
    REQUIRE(cert.nodes.size() == 5);
    const ReplayResult r = certificate_replay(cert);
    CHECK(r.accepted);
    CHECK(r.reason.empty());

    SUBCASE("stored maxima are recomputed, not trusted") {
        const Certificate bad = tampered(cert, [](nlohmann::ordered_json& j) {
            auto& num = j["nodes"][2]["max_beta"]["num"];
            num = (Rational(num.get<std::string>()) + 1).str();
        });
        const ReplayResult rr = certificate_replay(bad);
        CHECK_FALSE(rr.accepted);
        CHECK(rr.node == 2);
        CHECK(rr.reason.find("stored Bernstein max does not replay") != std::string::npos);
    }

    SUBCASE("children must tile their parent exactly") {
        const Certificate bad = tampered(cert, [](nlohmann::ordered_json& j) {
            j["nodes"][3]["box"][0][1] = "3/5";
        });
        const ReplayResult rr = certificate_replay(bad);
        CHECK_FALSE(rr.accepted);
        CHECK(rr.reason.find("does not tile") != std::string::npos);
    }

    SUBCASE("dropping a leaf leaves a coverage gap") {
        const Certificate bad = tampered(cert, [](nlohmann::ordered_json& j) {
            auto& children = j["nodes"][0]["children"];
            children.erase(children.begin() + 3);
            j["nodes"].erase(j["nodes"].begin() + 4);
        });
        CHECK_FALSE(certificate_replay(bad).accepted);
    }

    SUBCASE("the overall verdict must match the node verdicts") {
        const Certificate bad = tampered(cert, [](nlohmann::ordered_json& j) {
            j["nodes"][1]["verdict"] = "undecided";
        });
        const ReplayResult rr = certificate_replay(bad);
        CHECK_FALSE(rr.accepted);
        CHECK(rr.reason.find("overall verdict") != std::string::npos);
    }

    SUBCASE("the objective hash is part of the contract") {
        const Certificate bad = tampered(cert, [](nlohmann::ordered_json& j) {
            j["objective_hash"] = "fnv1a64:0000000000000000";
        });
        const ReplayResult rr = certificate_replay(bad);
        CHECK_FALSE(rr.accepted);
        CHECK(rr.reason.find("hash mismatch") != std::string::npos);
    }

    SUBCASE("unknown subproof names are rejected") {
        const Certificate bad = tampered(cert, [](nlohmann::ordered_json& j) {
            j["nodes"][1]["subproof"] = "not-a-registered-chain";
        });
        const ReplayResult rr = certificate_replay(bad);
        CHECK_FALSE(rr.accepted);
        CHECK(rr.reason.find("not registered") != std::string::npos);
    }
}

TEST_CASE("failed witnesses are re-evaluated on replay") {
    SubdivisionPolicy policy;
    const Certificate cert = certify_upper_bound(poly_var(kX, "x", 2), Box::unit_cube(1),
                                                 Rational(1, 2), policy);
    REQUIRE(cert.overall == Verdict::Failed);

    Certificate bad = tampered(cert, [](nlohmann::ordered_json& j) {
        j["nodes"][0]["witness"]["value"]["num"] = "2";
    });
    ReplayResult rr = certificate_replay(bad);
    CHECK_FALSE(rr.accepted);
    CHECK(rr.reason.find("witness value does not replay") != std::string::npos);

    bad = tampered(cert, [](nlohmann::ordered_json& j) {
        j["nodes"][0]["witness"]["point"] = {"2"};
    });
    rr = certificate_replay(bad);
    CHECK_FALSE(rr.accepted);
    CHECK(rr.reason.find("witness outside its box") != std::string::npos);
}

TEST_CASE("certification is deterministic across worker counts") {
    const BoundPolys bp = build_bound_polys(false);
    SubdivisionPolicy policy;
    policy.schedule = {{2, 2, 1}};
    policy.max_depth = 1;
    const int saved = worker_count();
    set_worker_count(1);
    const std::string one =
        certificate_to_json(
            certify_upper_bound(bp.R2tilde, Box::unit_cube(3), Rational(16), policy))
            .dump(2);
    set_worker_count(3);
    const std::string three =
        certificate_to_json(
            certify_upper_bound(bp.R2tilde, Box::unit_cube(3), Rational(16), policy))
            .dump(2);
    set_worker_count(saved);
    CHECK(one == three);
}

}  // TEST_SUITE
