#include <doctest.h>

#include "mstate/ghz.hpp"
#include "mstate/json_io.hpp"
#include "support.hpp"

using namespace mst;
using test::q;

TEST_CASE("rationals round trip through text") {
    for (const auto& x : {q(1, 3), q(-7, 2), q(5), q(0)}) CHECK(rational_from_json(to_json(x)) == x);
    CHECK(rational_from_json(json(3)) == 3);
    CHECK(rational_from_json(json(0.25)) == q(1, 4));
    CHECK(rational_from_json(json("0.45")) == q(9, 20));
    CHECK_THROWS_AS(rational_from_json(json(true)), std::invalid_argument);
    CHECK_THROWS_AS(rationals_from_json(json("1/2")), std::invalid_argument);
}

TEST_CASE("Schmidt tuples accept objects and bare arrays") {
    SchmidtTuple t(test::qs({{1, 2}, {1, 3}, {1, 6}}));
    CHECK(schmidt_from_json(to_json(t)) == t);
    CHECK(schmidt_from_json(json::array({"1/6", "1/2", "1/3"})) == t);
    CHECK(to_json(t)["normalized"] == true);
    CHECK_THROWS_AS(schmidt_from_json(json::object({{"values", json::array()}})), std::invalid_argument);
}

TEST_CASE("states and matrices round trip") {
    const PureState s = apply_at(pauli_x() * cplx(0, 1), 1, make_ghz(3, 2));
    const PureState back = state_from_json(to_json(s));
    CHECK(back.dims == s.dims);
    CHECK((back.amps - s.amps).norm() < 1e-15);
    CHECK(state_from_json(json("w")).amps.isApprox(make_w().amps));
    CHECK(state_from_json(json("ghz:3:3")).dims == std::vector<int>{3, 3, 3});
    CHECK_THROWS_AS(state_from_json(json("ghz:3")), std::invalid_argument);
    CHECK_THROWS_AS(state_from_json(json("ghz:a:b")), std::invalid_argument);
    CHECK_THROWS_AS(state_from_json(json("nope")), std::invalid_argument);
    CHECK_THROWS_AS(state_from_json(json::object({{"dims", {2}}})), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json::array({json::array({1, 2}), json::array({1})})), std::invalid_argument);
    CHECK(matrix_from_json(json::array({json::array({1, json::array({0, 2})})}))(0, 1) == cplx(0, 2));
}

TEST_CASE("protocols round trip") {
    GhzLikeState src{3, 3, SchmidtTuple(test::qs({{1, 3}, {1, 3}, {1, 3}}))};
    GhzLikeState dst{3, 3, SchmidtTuple(test::qs({{1, 2}, {1, 3}, {1, 6}}))};
    auto p = synthesize_ghz_protocol(src, dst);
    p.rounds[0].fail = {0};
    auto back = protocol_from_json(to_json(p));
    REQUIRE(back.rounds.size() == p.rounds.size());
    const auto& a = p.rounds[0];
    const auto& b = back.rounds[0];
    CHECK(a.party == b.party);
    CHECK(a.fail == b.fail);
    REQUIRE(a.ops.size() == b.ops.size());
    for (std::size_t k = 0; k < a.ops.size(); ++k) CHECK((a.ops[k] - b.ops[k]).norm() < 1e-15);
    REQUIRE(a.corrections.size() == b.corrections.size());
    for (const auto& [k, op] : a.corrections) {
        REQUIRE(b.corrections.count(k));
        for (std::size_t f = 0; f < op.factors.size(); ++f)
            CHECK((op.factors[f] - b.corrections.at(k).factors[f]).norm() < 1e-15);
    }
    REQUIRE(back.target.has_value());
    CHECK((back.target->amps - p.target->amps).norm() < 1e-15);
    CHECK_THROWS_AS(protocol_from_json(json::object()), std::invalid_argument);
}

TEST_CASE("exponent families and solutions serialize") {
    auto f = construct_qubit_solution(5, 5, 3);
    CHECK(family_from_json(to_json(f)) == f);
    auto sols = enumerate_solutions(2, 3);
    REQUIRE_FALSE(sols.empty());
    auto j = to_json(sols.front());
    CHECK(j["classification"] == to_string(sols.front().classification));
    CHECK(family_from_json(j["family"]) == sols.front().family);
    CHECK(j["tableaux"].size() == sols.front().tableaux.size());
}

TEST_CASE("leaves and gap cycles serialize") {
    Leaf l{{0, 2}, 0.25, false, make_w(), 0.5};
    auto j = to_json(l);
    CHECK(j["outcomes"] == json::array({0, 2}));
    CHECK(j["fidelity"] == 0.5);
    GapCycle c{{0, 1}, {Gap::g_plus, Gap::g_minus}};
    CHECK(to_json(c)["edges"][1] == "g_minus");
}
