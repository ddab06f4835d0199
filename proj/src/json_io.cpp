#include "crg/json_io.hpp"

#include <stdexcept>

namespace crg::json {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

void check_version(const Json& j) {
  if (j.contains("v") && j.at("v") != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema version " + j.at("v").dump());
  }
}

}  // namespace

Json parse(const std::string& text) {
  return guarded("malformed JSON", [&] { return Json::parse(text); });
}

Json to_json(const WreathElement& x) {
  Json perm = Json::array();
  for (auto image : x.perm().images()) perm.push_back(image + 1);
  Json weights = Json::array();
  for (auto w : x.weights()) weights.push_back(w);
  return Json{{"perm", perm}, {"weights", weights}};
}

WreathElement element_from_json(const Json& j, const GroupParams& params) {
  return guarded("malformed element", [&] {
    const auto perm = j.at("perm").get<std::vector<long long>>();
    const auto weights = j.at("weights").get<std::vector<Weight>>();
    if (perm.size() != static_cast<std::size_t>(params.rank()) || weights.size() != perm.size()) {
      throw std::invalid_argument("element has the wrong rank for " + params.to_string());
    }
    std::vector<std::uint8_t> images;
    for (auto p : perm) {
      if (p < 1 || p > params.rank()) throw std::invalid_argument("permutation image out of range");
      images.push_back(static_cast<std::uint8_t>(p - 1));
    }
    return WreathElement(params, Permutation(std::move(images)), weights);
  });
}

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& r : f.factors()) factors.push_back(to_json(r.element()));
  return Json{{"v", kSchemaVersion}, {"group", f.params().to_string()}, {"factors", factors}};
}

Factorization factorization_from_json(const Json& j) {
  return guarded("malformed factorization", [&] {
    check_version(j);
    const auto params = GroupParams::parse(j.at("group").get<std::string>());
    std::vector<WreathElement> elements;
    for (const auto& e : j.at("factors")) elements.push_back(element_from_json(e, params));
    return Factorization::from_elements(params, elements);
  });
}

Json to_json(const BraidWord& w) {
  Json out = Json::array();
  for (auto l : w.letters()) out.push_back(l);
  return out;
}

BraidWord braid_from_json(const Json& j) {
  return guarded("malformed braid word", [&] { return BraidWord(j.get<std::vector<int>>()); });
}

Json to_json(const ClassLabel& label) { return label.to_string(); }

Json to_json(const std::vector<ClassLabel>& multiset) {
  Json out = Json::array();
  for (const auto& l : multiset) out.push_back(to_json(l));
  return out;
}

Json to_json(const CanonicalForm& form) {
  return Json{{"diag_weights", form.diag_weights}, {"pair_count", form.pair_count}, {"n", form.n}};
}

Json to_json(const LiftResult& lift) {
  return Json{{"v", kSchemaVersion},
              {"lifted", to_json(lift.lifted)},
              {"pivot", lift.pivot + 1},
              {"near_product", to_json(lift.near_product)},
              {"delta", to_json(lift.delta)}};
}

Json to_json(const OrbitReport& report) {
  Json orbits = Json::array();
  Json sizes = Json::array();
  for (const auto& o : report.orbits) {
    sizes.push_back(o.size);
    orbits.push_back(Json{{"size", o.size},
                          {"multiset", to_json(o.multiset)},
                          {"representative", to_json(o.representative)["factors"]}});
  }
  return Json{{"v", kSchemaVersion},
              {"group", report.group.to_string()},
              {"target", to_json(report.target)},
              {"length", report.length},
              {"factorization_count", report.factorization_count},
              {"orbit_count", report.orbit_count},
              {"class_multiset_count", report.class_multiset_count},
              {"sound", report.sound},
              {"match", report.match},
              {"complete", report.complete},
              {"certificates_ok", report.certificates_ok},
              {"orbit_sizes", sizes},
              {"orbits", orbits}};
}

}  // namespace crg::json
