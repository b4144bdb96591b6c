#include "braces/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace braces {

using nlohmann::json;

BraceDocument document_from_brace(const Brace& B, std::optional<std::string> entry_id) {
  BraceDocument d;
  d.p = B.additive().p();
  d.moduli = B.additive().moduli();
  const int n = B.order();
  for (int a = 0; a < n; ++a) {
    std::vector<int> row;
    for (int b = 0; b < n; ++b) row.push_back(B.mul(a, b));
    d.table.push_back(std::move(row));
  }
  if (!B.name().empty()) d.name = B.name();
  d.socle_order = socle(B).order;
  d.mult_group = mult_group_name(B).to_string();
  d.entry_id = std::move(entry_id);
  return d;
}

std::string serialize_document(const BraceDocument& d, int indent) {
  json j;
  j["p"] = d.p;
  j["moduli"] = d.moduli;
  j["table"] = d.table;
  if (d.name) j["name"] = *d.name;
  if (d.socle_order) j["socle_order"] = *d.socle_order;
  if (d.mult_group) j["mult_group"] = *d.mult_group;
  if (d.entry_id) j["entry_id"] = *d.entry_id;
  return j.dump(indent);
}

BraceDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  try {
    BraceDocument d;
    d.p = j.at("p").get<int>();
    d.moduli = j.at("moduli").get<std::vector<std::int64_t>>();
    d.table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("name")) d.name = j["name"].get<std::string>();
    if (j.contains("socle_order")) d.socle_order = j["socle_order"].get<int>();
    if (j.contains("mult_group")) d.mult_group = j["mult_group"].get<std::string>();
    if (j.contains("entry_id")) d.entry_id = j["entry_id"].get<std::string>();
    return d;
  } catch (const json::exception& e) {
    throw DocumentError(std::string("bad document: ") + e.what());
  }
}

BraceDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

LoadResult load_document(const BraceDocument& d, bool strict) {
  std::optional<AbelianGroup> A;
  try {
    A.emplace(d.p, d.moduli);
  } catch (const std::exception& e) {
    throw DocumentError(std::string("bad additive group: ") + e.what());
  }
  const int n = A->order();
  if (static_cast<int>(d.table.size()) != n) throw DocumentError("table must have " + std::to_string(n) + " rows");
  std::vector<int> flat;
  for (const auto& row : d.table) {
    if (static_cast<int>(row.size()) != n) throw DocumentError("table must have " + std::to_string(n) + " columns");
    for (int v : row) {
      if (v < 0 || v >= n) throw DocumentError("table entry " + std::to_string(v) + " out of range");
      flat.push_back(v);
    }
  }

  LoadResult out;
  out.report = verify_brace(*A, flat);
  if (!out.report.ok()) return out;
  out.brace.emplace(*A, flat, d.name.value_or(""));

  std::vector<std::string> mismatches;
  if (d.socle_order) {
    const int s = socle(*out.brace).order;
    if (s != *d.socle_order)
      mismatches.push_back("socle_order annotated " + std::to_string(*d.socle_order) + ", actual " + std::to_string(s));
  }
  if (d.mult_group) {
    const std::string g = mult_group_name(*out.brace).to_string();
    bool same = false;
    try {
      same = GroupName::parse(*d.mult_group) == mult_group_name(*out.brace);
    } catch (const std::exception&) {
    }
    if (!same) mismatches.push_back("mult_group annotated " + *d.mult_group + ", actual " + g);
  }
  if (strict && !mismatches.empty()) {
    out.report = {Violation{"annotation: " + mismatches.front(), {}}};
  } else {
    out.warnings = std::move(mismatches);
  }
  return out;
}

}  // namespace braces
