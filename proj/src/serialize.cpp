#include "stardisc/serialize.hpp"

#include <ostream>

namespace stardisc {
namespace {

Json counters_json(const IndexedCorner& c) {
  Json a = Json::array();
  for (Index j = 0; j < c.counters.size(); ++j) a.push_back(c.counters(j));
  return a;
}

Counters counters_from(const Json& j, const char* what) {
  if (!j.is_array())
    throw Error(ErrorKind::parse_error, std::string(what) + " must be an array");
  Counters c(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      throw Error(ErrorKind::parse_error,
                  std::string(what) + " must hold integers");
    c(static_cast<Index>(i)) = j[i].get<std::int64_t>();
  }
  return c;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::parse_error, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::parse_error, std::string("bad field '") + key + "'");
  }
}

}  // namespace

Json to_json(const DiscrepancyResult& r) {
  Json corner = Json::array();
  for (Index j = 0; j < r.argmax_corner.size(); ++j)
    corner.push_back(r.argmax_corner(j));
  return {{"value", r.value},
          {"argmax_corner", corner},
          {"side", to_string(r.side)},
          {"method", to_string(r.method)},
          {"n", r.n},
          {"d", r.d}};
}

Json to_json(const ChainParameters& p) {
  return {{"d", p.dim}, {"epsilon", p.epsilon}, {"beta", p.beta}, {"a_max", p.a_max}};
}

Json to_json(const ChainCertificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps)
    steps.push_back({{"index", s.incremented_index},
                     {"captured_point", s.captured_point},
                     {"before", counters_json(s.before)},
                     {"after", counters_json(s.after)}});
  return {{"params", to_json(cert.params)},
          {"steps", steps},
          {"k", cert.k},
          {"terminal_counters", counters_json(cert.terminal)}};
}

Json to_json(const ViolationWitness& w) {
  return {{"params", to_json(w.params)},
          {"outer_counters", counters_json(w.outer)},
          {"inner_counters", counters_json(w.inner)},
          {"shared_count", w.shared_count},
          {"side", to_string(w.side)},
          {"excess", w.excess}};
}

Json to_json(const Refutation& r) {
  Json j = to_json(r.witness);
  j["partial_k"] = r.partial.k;
  return j;
}

Json to_json(const BenchRow& row) {
  Json j = {{"d", row.d},
            {"epsilon", row.epsilon},
            {"beta", row.beta},
            {"lower_bound_paper", row.lower_bound_paper},
            {"upper_ref_aistleitner", row.upper_ref_aistleitner},
            {"upper_ref_gpw", row.upper_ref_gpw}};
  j["best_n_found"] = row.best_n_found ? Json(*row.best_n_found) : Json(nullptr);
  j["generator_of_best"] =
      row.best_n_found ? Json(row.generator_of_best) : Json(nullptr);
  j["best_discrepancy"] =
      row.best_discrepancy ? Json(*row.best_discrepancy) : Json(nullptr);
  j["certified"] = row.certified;
  j["resource_capped"] = row.resource_capped;
  return j;
}

ChainCertificate certificate_from_json(const Json& j) {
  ChainCertificate cert;
  const Json params = field<Json>(j, "params");
  auto& p = cert.params;
  p.dim = field<Index>(params, "d");
  p.epsilon = field<double>(params, "epsilon");
  p.beta = field<double>(params, "beta");
  p.a_max = field<std::int64_t>(params, "a_max");
  if (p.dim < 1) throw Error(ErrorKind::parse_error, "d must be positive");
  p.step = p.beta * p.epsilon / static_cast<double>(p.dim);

  const Json steps = field<Json>(j, "steps");
  if (!steps.is_array()) throw Error(ErrorKind::parse_error, "steps must be an array");
  Counters current = Counters::Zero(p.dim);
  for (const auto& s : steps) {
    ChainStep step;
    step.incremented_index = field<Index>(s, "index");
    step.captured_point = field<Index>(s, "captured_point");
    if (s.contains("before")) {
      step.before.counters = counters_from(s["before"], "before");
    } else {
      step.before.counters = current;
    }
    if (s.contains("after")) {
      step.after.counters = counters_from(s["after"], "after");
    } else {
      step.after.counters = step.before.counters;
      if (step.incremented_index >= 0 && step.incremented_index < p.dim)
        step.after.counters(step.incremented_index) += 1;
    }
    current = step.after.counters;
    cert.steps.push_back(std::move(step));
  }
  cert.k = field<Index>(j, "k");
  cert.terminal.counters = counters_from(field<Json>(j, "terminal_counters"),
                                         "terminal_counters");
  return cert;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "d,epsilon,beta,lower_bound_paper,upper_ref_aistleitner,upper_ref_gpw,"
         "best_n_found,generator_of_best,best_discrepancy,certified,"
         "resource_capped\n";
  for (const auto& r : rows) {
    const Json j = to_json(r);
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out << ',';
      first = false;
      if (value.is_null()) continue;
      out << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    out << '\n';
  }
}

}  // namespace stardisc
