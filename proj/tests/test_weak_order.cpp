#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "tcsp/weak_order.hpp"

using namespace tcsp;

TEST_CASE("weak order counts match the ordered Bell recurrence") {
    CHECK(enumerate_weak_orders(1).size() == 1);
    CHECK(enumerate_weak_orders(2).size() == 3);
    CHECK(enumerate_weak_orders(3).size() == 13);
    CHECK(enumerate_weak_orders(4).size() == 75);
    CHECK(enumerate_weak_orders(5).size() == 541);
    for (int n = 1; n <= 6; ++n) {
        CHECK(enumerate_weak_orders(n).size() == testing_oracles::ordered_bell(n));
    }
}

TEST_CASE("weak order enumeration agrees with brute force for small n") {
    for (int n = 1; n <= 4; ++n) {
        std::set<uint64_t> ours;
        for (const auto& w : enumerate_weak_orders(n)) ours.insert(w.key());
        std::set<uint64_t> brute;
        for (const auto& v : testing_oracles::brute_force_rank_vectors(n)) {
            brute.insert(WeakOrder(v).key());
        }
        CHECK(ours == brute);
    }
}

TEST_CASE("enumerate_weak_orders rejects arity zero") {
    CHECK_THROWS_AS(enumerate_weak_orders(0), ContractError);
}

TEST_CASE("single point") {
    auto ws = enumerate_weak_orders(1);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0] == orbit_of({0}));
}

TEST_CASE("two points by hand") {
    auto ws = enumerate_weak_orders(2);
    std::set<uint64_t> got;
    for (const auto& w : ws) got.insert(w.key());
    std::set<uint64_t> want = {orbit_of({0, 0}).key(), orbit_of({0, 1}).key(), orbit_of({1, 0}).key()};
    CHECK(got == want);
}

TEST_CASE("orbit_of ranks a tuple by its sorted distinct values") {
    double a[] = {3.5, 3.5, 7.0};
    CHECK(orbit_of(std::span<const double>(a)) == orbit_of({0, 0, 1}));
    CHECK(orbit_of({2, 3, 0}) == WeakOrder({1, 2, 0}));
    CHECK(orbit_of({5, 1, 1, 9}) == WeakOrder({1, 0, 0, 2}));
}

TEST_CASE("WeakOrder validates canonicity") {
    CHECK_THROWS_AS(WeakOrder({1, 2}), ContractError);    // no rank 0
    CHECK_THROWS_AS(WeakOrder({0, 2}), ContractError);    // gap
    CHECK_THROWS_AS(WeakOrder({-1, 0}), ContractError);   // negative
    CHECK_THROWS_AS(WeakOrder(std::vector<int>{}), ContractError); // empty
    CHECK_NOTHROW(WeakOrder({2, 0, 1}));
}

TEST_CASE("restrict, dual and kernel") {
    WeakOrder w({1, 2, 0, 1});
    int coords[] = {0, 2};
    CHECK(w.restrict(std::span<const int>(coords)) == WeakOrder({1, 0}));
    CHECK(w.dual() == WeakOrder({1, 0, 2, 1}));
    CHECK(w.kernel() == std::vector<int>({0, 1, 2, 0}));
    CHECK(WeakOrder({0, 1, 0}).kernel() == WeakOrder({1, 0, 1}).kernel());
}

TEST_CASE("min indicator") {
    CHECK(min_tuple(orbit_of({5, 5, 7})).to_string() == "(1,1,0)");
    CHECK(min_tuple(WeakOrder({0, 0, 0})).to_string() == "(1,1,1)");
    CHECK(min_tuple(WeakOrder({1, 2, 0})).to_string() == "(0,0,1)");
}
