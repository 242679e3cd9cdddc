#include <gtest/gtest.h>

#include "dtc/acceptance.hpp"

using namespace dtc;

TEST(Acceptance, IdsAndFormat) {
    auto ids = acceptance_ids();
    ASSERT_EQ(ids.size(), 12u);
    EXPECT_EQ(ids.front(), "A1");
    EXPECT_EQ(ids.back(), "A12");
    CheckResult r{"A3", true, 0.25, "detail"};
    EXPECT_EQ(format_result(r).rfind("A3  PASS", 0), 0u);
    EXPECT_THROW(run_check("A99", {}), std::invalid_argument);
}

TEST(Acceptance, QuickA2PassesUnmutated) {
    AcceptanceOptions options;
    options.quick = true;
    EXPECT_TRUE(run_check("A2", options).pass);
}

// A sign error on three-part tuples must be caught.
TEST(Acceptance, MutatedInverseFailsA2) {
    AcceptanceOptions options;
    options.quick = true;
    options.hn_inverse_factory = [](const CentralCharge& z) {
        Collection good = hn_inverse(z);
        return Collection("mutant", [good](TupleView a) { return a.size() == 3 ? -good(a) : good(a); });
    };
    CheckResult r = run_check("A2", options);
    EXPECT_FALSE(r.pass) << r.detail;
}
