#include "minmod/document.hpp"

#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace minmod {

namespace {

using nlohmann::json;

json rational_array(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(to_fraction_string(v));
  return out;
}

std::vector<Rational> rationals_from(const json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse_fraction(v.get<std::string>()));
  return out;
}

json labels_to_json(const ModularDataDocument& doc) {
  json out = json::array();
  if (doc.kind == "affine") {
    for (std::size_t r = 0; r < doc.datum.ring.rank(); ++r) out.push_back(r);
  } else {
    for (const std::string& name : doc.datum.ring.labels) {
      int r = 0, s = 0;
      if (std::sscanf(name.c_str(), "(%d,%d)", &r, &s) != 2) {
        throw std::invalid_argument("unparseable Kac label " + name);
      }
      out.push_back(json::array({r, s}));
    }
  }
  return out;
}

std::vector<std::string> labels_from_json(const std::string& kind, const json& j) {
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (kind == "affine") {
      out.push_back(std::to_string(v.get<int>()) + "w");
    } else {
      out.push_back("(" + std::to_string(v.at(0).get<int>()) + "," +
                    std::to_string(v.at(1).get<int>()) + ")");
    }
  }
  return out;
}

}  // namespace

json cyclotomic_to_json(const Cyclotomic& value) {
  json coeffs = json::object();
  const auto& c = value.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) coeffs[std::to_string(k)] = to_fraction_string(c[k]);
  }
  const std::complex<double> z = value.approx();
  return json{{"order", value.order()},
              {"coeffs", std::move(coeffs)},
              {"approx", json::array({z.real(), z.imag()})}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  const long long order = j.at("order").get<long long>();
  std::vector<std::pair<long long, Rational>> terms;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    terms.emplace_back(std::stoll(key), parse_fraction(value.get<std::string>()));
  }
  return Cyclotomic::from_monomials(order, terms);
}

ModularDataDocument make_document(const std::string& kind, int a, int b,
                                  const ModularDatum& datum) {
  ModularDataDocument doc;
  doc.kind = kind;
  doc.a = a;
  doc.b = b;
  doc.datum = datum;
  doc.axioms = verify_axioms(datum.ring).pass();
  doc.verlinde = verlinde_eigencheck(datum.ring, datum.sratio);
  doc.modular = is_modular(datum);
  return doc;
}

json to_json(const ModularDataDocument& doc) {
  const std::size_t n = doc.datum.ring.rank();
  json fusion = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json plane = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json row = json::array();
      for (std::size_t k = 0; k < n; ++k) row.push_back(doc.datum.ring.n(i, j, k));
      plane.push_back(std::move(row));
    }
    fusion.push_back(std::move(plane));
  }

  json sratio = json::array();
  for (const auto& row : doc.datum.sratio) {
    json out_row = json::array();
    for (const Cyclotomic& v : row) out_row.push_back(cyclotomic_to_json(v));
    sratio.push_back(std::move(out_row));
  }
  json qdim = json::array();
  for (const Cyclotomic& v : doc.datum.qdim) qdim.push_back(cyclotomic_to_json(v));

  return json{{"kind", doc.kind},
              {"parameters", {{"a", doc.a}, {"b", doc.b}}},
              {"labels", labels_to_json(doc)},
              {"unit", doc.datum.ring.unit},
              {"dual", doc.datum.ring.dual},
              {"h", rational_array(doc.datum.h)},
              {"twist_exponents", rational_array(doc.datum.twist_exponent)},
              {"N", std::move(fusion)},
              {"sratio", std::move(sratio)},
              {"qdim", std::move(qdim)},
              {"verdicts",
               {{"axioms", doc.axioms}, {"verlinde", doc.verlinde}, {"modular", doc.modular}}}};
}

std::string to_json_string(const ModularDataDocument& doc) { return to_json(doc).dump(2); }

ModularDataDocument parse_document(const json& j) {
  try {
    ModularDataDocument doc;
    doc.kind = j.at("kind").get<std::string>();
    if (doc.kind != "virasoro" && doc.kind != "ca" && doc.kind != "affine") {
      throw std::invalid_argument("unknown document kind " + doc.kind);
    }
    doc.a = j.at("parameters").at("a").get<int>();
    doc.b = j.at("parameters").at("b").get<int>();

    ModularDatum& d = doc.datum;
    d.ring.labels = labels_from_json(doc.kind, j.at("labels"));
    const std::size_t n = d.ring.labels.size();
    d.ring.unit = j.at("unit").get<std::size_t>();
    d.ring.dual = j.at("dual").get<std::vector<std::size_t>>();
    d.ring.n_data.assign(n * n * n, 0);
    const json& fusion = j.at("N");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t jj = 0; jj < n; ++jj) {
        for (std::size_t k = 0; k < n; ++k) {
          d.ring.n(i, jj, k) = fusion.at(i).at(jj).at(k).get<int>();
        }
      }
    }
    d.h = rationals_from(j.at("h"));
    d.twist_exponent = rationals_from(j.at("twist_exponents"));
    for (const auto& row : j.at("sratio")) {
      std::vector<Cyclotomic> out_row;
      for (const auto& v : row) out_row.push_back(cyclotomic_from_json(v));
      d.sratio.push_back(std::move(out_row));
    }
    for (const auto& v : j.at("qdim")) d.qdim.push_back(cyclotomic_from_json(v));
    doc.axioms = j.at("verdicts").at("axioms").get<bool>();
    doc.verlinde = j.at("verdicts").at("verlinde").get<bool>();
    doc.modular = j.at("verdicts").at("modular").get<bool>();
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed modular data document: ") + e.what());
  }
}

ModularDataDocument parse_document_string(const std::string& text) {
  return parse_document(json::parse(text));
}

}  // namespace minmod
