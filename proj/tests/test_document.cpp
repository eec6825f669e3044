#include "minmod/document.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "minmod/affine_sl2.hpp"
#include "minmod/virasoro.hpp"

using namespace minmod;
using nlohmann::json;

TEST_CASE("cyclotomic json carries exact coefficients plus a float") {
  const Cyclotomic value = sin_pi(1, 5);
  const json j = cyclotomic_to_json(value);
  CHECK(j.at("order").get<long long>() == value.order());
  CHECK(j.at("approx").at(0).get<double>() == doctest::Approx(0.5877852522924731).epsilon(1e-12));
  CHECK(cyclotomic_from_json(j) == value);

  const json one = cyclotomic_to_json(Cyclotomic(1));
  CHECK(one.at("coeffs").at("0").get<std::string>() == "1");
}

TEST_CASE("documents round-trip bit-exactly") {
  const MinimalModel ising(3, 4);
  const ModularDataDocument doc = make_document("virasoro", 3, 4, modular_datum(ising));
  CHECK(doc.axioms);
  CHECK(doc.verlinde);
  CHECK(doc.modular);

  const std::string text = to_json_string(doc);
  const ModularDataDocument back = parse_document_string(text);
  CHECK(back == doc);
  CHECK(to_json_string(back) == text);

  const json j = json::parse(text);
  CHECK(j.at("kind") == "virasoro");
  CHECK(j.at("parameters").at("a") == 3);
  CHECK(j.at("labels").at(1) == json::array({1, 2}));
  CHECK(j.at("h").at(1).get<std::string>() == "1/16");
  CHECK(j.at("h").at(2).get<std::string>() == "1/2");
}

TEST_CASE("negative weights serialize as exact fractions") {
  const ModularDataDocument doc = make_document("virasoro", 2, 5, modular_datum(MinimalModel(2, 5)));
  const json j = to_json(doc);
  CHECK(j.at("h").at(1).get<std::string>() == "-1/5");
  CHECK(j.at("twist_exponents").at(1).get<std::string>() == "4/5");
  CHECK(parse_document(j) == doc);
}

TEST_CASE("affine documents use integer labels") {
  const AffineCategory category = affine_category(3, 2);
  const ModularDataDocument doc = make_document("affine", 3, 2, category.datum);
  CHECK_FALSE(doc.modular);
  const json j = to_json(doc);
  CHECK(j.at("labels") == json::array({0, 1}));
  const ModularDataDocument back = parse_document(j);
  CHECK(back == doc);
  CHECK(back.datum.ring.labels[1] == "1w");
}

TEST_CASE("ca documents round-trip through the subcategory") {
  const MinimalModel model(4, 5);
  const ModularDataDocument doc = make_document("ca", 4, 5, subcategory_ca(model));
  const ModularDataDocument back = parse_document_string(to_json_string(doc));
  CHECK(back == doc);
  CHECK(back.datum.ring.rank() == 3);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_document_string(R"({"kind":"virasoro"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_document_string(R"({"kind":"nope","parameters":{"a":2,"b":3}})"),
                  std::invalid_argument);
}
