#include <stdexcept>

#include "doctest.h"
#include "rts/samples.hpp"

using namespace rts;

namespace {

Hyperrectangle unit1() { return Hyperrectangle::unit(1); }

}  // namespace

TEST_CASE("add_sample indexes by node and cohort") {
  SampleStore store;
  const auto r = unit1();
  store.add_sample(0, r, {0.1}, 1.0, Cohort::kI);
  store.add_sample(0, r, {0.2}, 2.0, Cohort::kJ);
  store.add_sample(0, r, {0.3}, 4.0, Cohort::kI);
  store.add_sample(7, r, {0.4}, 8.0, Cohort::kI);

  CHECK(store.size() == 4);  // one sample per simulator call
  CHECK(store.count(0, Cohort::kI) == 2);
  CHECK(store.count(0, Cohort::kJ) == 1);
  CHECK(store.count(7, Cohort::kI) == 1);
  CHECK(store.count(99, Cohort::kI) == 0);  // never-seen node is just empty
  CHECK(store.ids(99, Cohort::kJ).empty());

  const auto& ids = store.ids(0, Cohort::kI);
  REQUIRE(ids.size() == 2);
  CHECK(store.sample(ids[0]).response == 1.0);  // insertion order
  CHECK(store.sample(ids[1]).response == 4.0);
  CHECK(store.sample(ids[0]).x[0] == 0.1);
  CHECK(store.sample(ids[0]).cohort == Cohort::kI);
}

TEST_CASE("add_sample validates the point") {
  SampleStore store;
  CHECK_THROWS_AS(store.add_sample(0, unit1(), {1.5}, 0.0, Cohort::kI),
                  std::invalid_argument);
  CHECK_THROWS_AS(store.add_sample(0, unit1(), {0.5, 0.5}, 0.0, Cohort::kI),
                  std::invalid_argument);
}

TEST_CASE("leaf_mean_i averages only the I cohort") {
  SampleStore store;
  const auto r = unit1();
  store.add_sample(3, r, {0.1}, 1.0, Cohort::kI);
  store.add_sample(3, r, {0.2}, 2.0, Cohort::kI);
  store.add_sample(3, r, {0.3}, 4.0, Cohort::kI);
  store.add_sample(3, r, {0.4}, 1000.0, Cohort::kJ);
  CHECK(store.leaf_mean_i(3) == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(store.leaf_mean_i(5), std::logic_error);
}

TEST_CASE("reassign_on_split routes by the cut, boundary going left") {
  SampleStore store;
  const auto r = unit1();
  const double xs[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (int i = 0; i < 5; ++i)
    store.add_sample(0, r, {xs[i]}, double(i + 1), Cohort::kI);
  store.add_sample(0, r, {0.2}, 10.0, Cohort::kJ);
  store.add_sample(0, r, {0.8}, 20.0, Cohort::kJ);

  const auto [nl, nr] = store.reassign_on_split(0, 1, 2, 0, 0.5);
  CHECK(nl == 3);  // 0.1, 0.3 and the boundary point 0.5
  CHECK(nr == 2);

  CHECK(store.count(0, Cohort::kI) == 0);  // parent is emptied
  CHECK(store.count(0, Cohort::kJ) == 0);
  CHECK(store.count(1, Cohort::kJ) == 1);
  CHECK(store.count(2, Cohort::kJ) == 1);
  CHECK(store.size() == 7);  // nothing added or dropped

  const auto& left_i = store.ids(1, Cohort::kI);
  REQUIRE(left_i.size() == 3);
  CHECK(store.sample(left_i[0]).response == 1.0);  // relative order preserved
  CHECK(store.sample(left_i[1]).response == 2.0);
  CHECK(store.sample(left_i[2]).response == 3.0);
  CHECK(store.sample(store.ids(2, Cohort::kJ)[0]).response == 20.0);
}

TEST_CASE("reassign_on_split requires empty children") {
  SampleStore store;
  const auto r = unit1();
  store.add_sample(0, r, {0.4}, 1.0, Cohort::kI);
  store.add_sample(1, r, {0.2}, 2.0, Cohort::kI);
  CHECK_THROWS_AS(store.reassign_on_split(0, 1, 2, 0, 0.5), std::logic_error);
}
