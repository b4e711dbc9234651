#include "lat/report.hpp"

namespace lat {

Json to_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return to_string(v);
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SearchSpace& space) {
  Json j;
  j["rank"] = space.rank;
  j["max_diag"] = space.max_diag;
  j["max_det"] = space.max_det ? to_json(*space.max_det) : Json(nullptr);
  return j;
}

Json to_json(const Embedding& e) {
  Json j;
  j["source"] = to_text(e.source);
  j["target"] = to_text(e.target);
  j["map"] = to_json(e.map);
  return j;
}

Json to_json(const Decomposition& d) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    Json p;
    p["rank"] = d.summands[i].rank();
    p["det"] = to_json(det(d.summands[i]));
    p["gram"] = to_text(d.summands[i]);
    p["map"] = to_json(d.embeddings[i].map);
    parts.push_back(std::move(p));
  }
  Json j;
  j["summands"] = std::move(parts);
  return j;
}

const char* verdict_name(Verdict v) {
  return v == Verdict::Counterexample ? "counterexample" : "verified-within-space";
}

Json to_json(const CriterionReport& r) {
  Json j;
  j["verdict"] = verdict_name(r.verdict);
  j["space"] = to_json(r.space);
  j["shard"] = {{"index", r.shard.index}, {"count", r.shard.count}};
  j["classes_checked"] = r.classes_checked;
  if (r.counterexample) {
    Json c;
    c["q"] = to_text(r.counterexample->q);
    c["missing"] = to_text(r.counterexample->missing);
    Json certs = Json::array();
    for (const Embedding& e : r.counterexample->certificates) {
      Json cert;
      cert["source"] = to_text(e.source);
      cert["map"] = to_json(e.map);
      certs.push_back(std::move(cert));
    }
    c["certificates"] = std::move(certs);
    j["counterexample"] = std::move(c);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json to_json(const MinimalityReport& r) {
  Json j;
  j["minimal"] = r.minimal();
  j["space"] = to_json(r.space);
  Json entries = Json::array();
  for (const MinimalityEntry& e : r.entries) {
    Json x;
    x["dropped"] = to_text(e.dropped);
    x["witness"] = e.witness ? Json(to_text(*e.witness)) : Json(nullptr);
    x["witness_from_list"] = e.witness_from_list;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const Prop2Result& r) {
  Json j;
  j["holds"] = r.holds;
  j["min_dual_norm"] = to_string(r.min_dual_norm);
  j["generating_bound"] = to_json(r.generating_bound);
  return j;
}

Json to_json(const Prop3Report& r) {
  Json j;
  j["passed"] = r.passed();
  j["unimodular"] = r.unimodular;
  Json pairs = Json::array();
  for (auto [a, b] : r.not_coprime) pairs.push_back({a, b});
  j["not_coprime"] = std::move(pairs);
  j["covers_ground"] = r.covers_ground;
  j["part_needed"] = r.part_needed;
  Json set = Json::array();
  for (const GramMatrix& g : r.criterion_set) set.push_back(to_text(g));
  j["criterion_set"] = std::move(set);
  return j;
}

}  // namespace lat
