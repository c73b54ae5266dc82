#include <gtest/gtest.h>

#include "radix/serialization.hpp"

using namespace radix;

TEST(Serialization, CanonicalShape) {
  EXPECT_EQ(to_json(partial_product(4, 4.0)).dump(), R"({"n":4,"cutoff":4,"factors":[[2,5],[3,1],[4,3]]})");
  EXPECT_EQ(to_json(partial_product(3, 2.0)).dump(), R"({"n":3,"cutoff":2,"factors":[]})");
}

TEST(Serialization, RoundTrip) {
  for (std::uint64_t n = 1; n <= 200; n += 13) {
    const auto pf = partial_product(n, n * 0.75 + 1);
    const auto text = to_json(pf).dump();
    EXPECT_EQ(partial_factorization_from_json(nlohmann::json::parse(text)), pf) << n;
    EXPECT_EQ(partial_factorization_from_json(nlohmann::ordered_json::parse(text)), pf) << n;
  }
}

TEST(Serialization, BigExponentsAsStrings) {
  BigInt huge;
  huge.set_str("123456789012345678901234567890", 10);
  const PartialFactorization pf(10, 10, {{2, huge}, {7, BigInt(3)}});
  const auto j = to_json(pf);
  EXPECT_TRUE(j["factors"][0][1].is_string());
  EXPECT_TRUE(j["factors"][1][1].is_number_unsigned());
  EXPECT_EQ(partial_factorization_from_json(j), pf);
}

TEST(Serialization, RejectsMalformed) {
  EXPECT_THROW(partial_factorization_from_json(nlohmann::json::parse(R"({"n":4,"cutoff":4,"factors":[[9,1]]})")),
               std::invalid_argument);
  EXPECT_THROW(partial_factorization_from_json(nlohmann::json::parse(R"({"n":4,"cutoff":4,"factors":[[2,"x"]]})")),
               std::invalid_argument);
  EXPECT_ANY_THROW(partial_factorization_from_json(nlohmann::json::parse(R"({"n":4})")));
}
