#include "doctest.h"

#include "descent/verify.hpp"

using namespace descent;

TEST_CASE("every identity holds at small n") {
    for (const auto& info : identity_registry()) {
        const int n = std::min(info.default_n, 3);
        const auto r = verify_identity(info.id, n);
        INFO(info.id << " n=" << n << " " << r.error << (r.counterexample ? r.counterexample->key : ""));
        CHECK(r.status == VerificationStatus::Pass);
        CHECK(r.checked > 0);
    }
}

TEST_CASE("usage errors") {
    CHECK_THROWS_AS(verify_identity("no-such-identity", 2), usage_error);
    CHECK_THROWS_AS(verify_identity("ab-inversion", 0), usage_error);
    CHECK_THROWS_AS(verify_identity("ab-inversion", find_identity("ab-inversion").max_n + 1), usage_error);
}

TEST_CASE("batch runs") {
    const auto reports = verify_many({{"carter", 3}, {"bogus", 2}, {"carter-b", 9}, {"f-in-m", 2}}, 2);
    REQUIRE(reports.size() == 3 + 1 + 1 + 2);
    CHECK(reports[0].n == 1);
    CHECK(reports[2].n == 3);
    CHECK(reports[3].status == VerificationStatus::Error);
    CHECK(reports[4].status == VerificationStatus::Error);
    CHECK(reports[6].identity == "f-in-m");
    CHECK(reports[6].status == VerificationStatus::Pass);
}
