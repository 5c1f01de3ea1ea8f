#include <catch2/catch_amalgamated.hpp>

#include <doldw/format.hpp>
#include <doldw/obstruction.hpp>

using namespace doldw;

TEST_CASE("admissible powers of two") {
    CHECK(admissible_powers(SpaceModel::dold(1, 1), 4).empty());  // 5 <= 2^s <= 7 impossible
    CHECK(admissible_powers(SpaceModel::dold(2, 8), 8) == std::vector<int>{4});
    CHECK(admissible_powers(SpaceModel::dold(3, 1), 4) == std::vector<int>{3});
    CHECK(admissible_powers(SpaceModel::dold(2, 4), 3) == std::vector<int>{2, 3});
    CHECK(admissible_powers(SpaceModel::real_proj(5), 1) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(admissible_powers(SpaceModel::dold(1, 1), 0), std::invalid_argument);
}

TEST_CASE("raw candidate kernel in the flagship degree") {
    // degree 8 of D(2,8) is spanned by d^4 and c^2 d^3; Sq^2 kills only d^4
    const KnowledgeBase kb = KnowledgeBase::builtin();
    auto rep = candidate_space(SpaceModel::dold(2, 8), 8, 4, {}, kb);
    CHECK(rep.degree_downstairs == 8);
    CHECK(subspace_class_strings(rep.raw_kernel) == std::vector<std::string>{"d^4"});
    CHECK(rep.filters_applied.empty());
    CHECK(rep.after_filters == rep.raw_kernel);  // no filters requested
}

TEST_CASE("fiber restriction filter eliminates the surviving candidate") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    auto rep = candidate_space(SpaceModel::dold(2, 8), 8, 4, {FilterTag::FiberCP}, kb);
    CHECK(subspace_class_strings(rep.raw_kernel) == std::vector<std::string>{"d^4"});
    CHECK(rep.after_filters.is_zero());
    REQUIRE(rep.filters_applied.size() == 1);
    CHECK(rep.filters_applied[0].tag == FilterTag::FiberCP);
    CHECK(rep.filters_applied[0].citation_id == "fiber-pullback");
}

TEST_CASE("fiber filter stays off when its soundness is not known") {
    // For Sigma^5 CP(n) nothing certifies the suspended fiber, and on RP or
    // stunted models there is no complex fiber at all.
    const KnowledgeBase kb = KnowledgeBase::builtin();
    auto rp = candidate_space(SpaceModel::real_proj(9), 3, 2, {FilterTag::FiberCP}, kb);
    CHECK(rp.filters_applied.empty());
    auto cp = candidate_space(SpaceModel::complex_proj(4), 5, 3, {FilterTag::FiberCP}, kb);
    CHECK(cp.filters_applied.empty());
}

TEST_CASE("certificates for settled families") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    CHECK(certify_w_trivial(SpaceModel::dold(2, 2), 8, kb).certified());
    CHECK(certify_w_trivial(SpaceModel::dold(2, 8), 8, kb).certified());
    CHECK(certify_w_trivial(SpaceModel::dold(3, 4), 8, kb).certified());
    CHECK(certify_w_trivial(SpaceModel::dold(3, 3), 4, kb).certified());
    CHECK(certify_w_trivial(SpaceModel::dold(7, 2), 8, kb).certified());
}

TEST_CASE("vacuous certificate when no power of two is admissible") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    auto cert = certify_w_trivial(SpaceModel::dold(1, 1), 4, kb);
    CHECK(cert.certified());
    CHECK(cert.vacuous);
    CHECK(cert.reports.empty());
}

TEST_CASE("the engine never certifies a known non-trivial suspension") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    for (int n = 2; n <= 6; ++n) {
        auto cert = certify_w_trivial(SpaceModel::complex_proj(n), 4, kb);
        CAPTURE(n);
        CHECK(!cert.certified());
    }
    // and a few projective cases settled non-trivial
    CHECK(!certify_w_trivial(SpaceModel::real_proj(4), 4, kb).certified());
    CHECK(!certify_w_trivial(SpaceModel::real_proj(2), 2, kb).certified());
    CHECK(!certify_w_trivial(SpaceModel::dold(1, 2), 4, kb).certified());
}

TEST_CASE("inconclusive certificates carry the surviving witnesses") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    auto cert = certify_w_trivial(SpaceModel::complex_proj(4), 4, kb);
    REQUIRE(!cert.reports.empty());
    bool some_survivor = false;
    for (const auto& rep : cert.reports) some_survivor |= !rep.after_filters.is_zero();
    CHECK(some_survivor);
}

TEST_CASE("reduction along the projective-exponent subspace") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    // D(1,2) at k=8: downstairs CP(2) is settled trivial, candidate degrees
    // avoid the c^1 d^j line
    CHECK(reduction_step(SpaceModel::dold(1, 2), 8, kb) == Reduction::Reduced);
    // explicit override takes precedence over the table lookups
    CHECK(reduction_step(SpaceModel::dold(5, 2), 8, kb, true) == Reduction::Reduced);
    CHECK(reduction_step(SpaceModel::dold(5, 2), 8, kb, false) == Reduction::NotApplicable);
}

TEST_CASE("certificate rendering shapes") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    auto cert = certify_w_trivial(SpaceModel::dold(2, 8), 8, kb);
    auto j = certificate_to_json(cert);
    CHECK(j["space"] == "D(2,8)");
    CHECK(j["k"] == 8);
    CHECK(j["outcome"] == "certified");
    REQUIRE(j["reports"].size() == 1);
    CHECK(j["reports"][0]["s"] == 4);
    CHECK(j["reports"][0]["degree_downstairs"] == 8);
    CHECK(j["reports"][0]["raw_kernel"] == nlohmann::json::array({"d^4"}));
    CHECK(j["reports"][0]["after_filters"] == nlohmann::json::array());
    REQUIRE(j["reports"][0]["filters"].size() == 1);
    CHECK(j["reports"][0]["filters"][0]["tag"] == "fiber-cp");
}
