#pragma once

// Canonical JSON for a partial factorization:
//   {"n": 4, "cutoff": 4, "factors": [[2, 5], [3, 1], [4, 3]]}
// Factors are sorted by base. Exponents that do not fit in 64 bits are
// written as decimal strings.

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "radix/common.hpp"
#include "radix/product_engine.hpp"

namespace radix {

inline nlohmann::ordered_json to_json(const PartialFactorization& pf) {
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const auto& [b, e] : pf.exponents()) {
    if (mpz_sizeinbase(e.get_mpz_t(), 2) <= 64)
      factors.push_back(nlohmann::ordered_json::array({b, detail::to_u64(e)}));
    else
      factors.push_back(nlohmann::ordered_json::array({nlohmann::ordered_json(b), nlohmann::ordered_json(e.get_str())}));
  }
  return {{"n", pf.n()}, {"cutoff", pf.cutoff()}, {"factors", factors}};
}

template <class Json>
PartialFactorization partial_factorization_from_json(const Json& j) {
  PartialFactorization::ExponentMap exps;
  for (const auto& f : j.at("factors")) {
    const auto b = f.at(0).template get<std::uint64_t>();
    const auto& e = f.at(1);
    BigInt v;
    if (e.is_string()) {
      if (v.set_str(e.template get<std::string>(), 10) != 0) throw std::invalid_argument("bad exponent string");
    } else {
      v = BigInt(static_cast<unsigned long>(e.template get<std::uint64_t>()));
    }
    if (!exps.emplace(b, v).second) throw std::invalid_argument("duplicate base in factor list");
  }
  return PartialFactorization(j.at("n").template get<std::uint64_t>(), j.at("cutoff").template get<std::uint64_t>(), std::move(exps));
}

}  // namespace radix
