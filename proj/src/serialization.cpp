#include "distcol/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "distcol/errors.hpp"

namespace distcol {

using ordered_json = nlohmann::ordered_json;

namespace {

int require_int(const ordered_json& obj, const char* key, std::string_view where) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    throw InvalidInstance(std::string(where) + ": missing or non-integer \"" + key + "\"");
  }
  return it->get<int>();
}

}  // namespace

DistortionInstance decode_instance(std::string_view json_text, std::optional<int> colours_override) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& ex) {
    throw InvalidInstance(std::string("instance is not valid JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw InvalidInstance("instance must be a JSON object");

  DistortionInstance inst;
  inst.d = require_int(doc, "d", "instance");
  if (colours_override) {
    if (*colours_override < 1) throw InvalidInstance("colour count must be at least 1");
    inst.d = *colours_override - 1;
  }
  inst.size_a = require_int(doc, "size_a", "instance");
  inst.size_b = require_int(doc, "size_b", "instance");
  if (inst.d < 0) throw InvalidInstance("d must be non-negative");

  const auto edges = doc.find("edges");
  if (edges == doc.end() || !edges->is_array()) throw InvalidInstance("instance: missing \"edges\" array");
  inst.edges.reserve(edges->size());
  for (std::size_t i = 0; i < edges->size(); ++i) {
    const auto& item = (*edges)[i];
    const std::string where = "edge " + std::to_string(i);
    if (!item.is_object()) throw InvalidInstance(where + ": not an object");
    Edge e;
    e.a = require_int(item, "a", where);
    e.b = require_int(item, "b", where);
    const bool has_perm = item.contains("perm");
    const bool has_delay = item.contains("delay");
    if (has_perm == has_delay) throw InvalidInstance(where + ": exactly one of \"perm\" or \"delay\" required");
    if (has_delay) {
      e.distortion = Distortion::shift(require_int(item, "delay", where), inst.colours());
    } else {
      const auto& perm = item["perm"];
      if (!perm.is_array()) throw InvalidInstance(where + ": \"perm\" must be an array");
      std::vector<Colour> image;
      for (const auto& v : perm) {
        if (!v.is_number_integer()) throw InvalidInstance(where + ": non-integer entry in \"perm\"");
        image.push_back(v.get<Colour>());
      }
      try {
        e.distortion = Distortion(std::move(image));
      } catch (const InvalidInstance& ex) {
        throw InvalidInstance(where + ": " + ex.what());
      }
    }
    inst.edges.push_back(std::move(e));
  }
  inst.validate();
  return inst;
}

std::string encode_instance(const DistortionInstance& inst) {
  ordered_json doc;
  doc["d"] = inst.d;
  doc["size_a"] = inst.size_a;
  doc["size_b"] = inst.size_b;
  auto edges = ordered_json::array();
  for (const Edge& e : inst.edges) {
    ordered_json item;
    item["a"] = e.a;
    item["b"] = e.b;
    item["perm"] = std::vector<Colour>(e.distortion.image().begin(), e.distortion.image().end());
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);
  return doc.dump();
}

EdgeColouring decode_colouring(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& ex) {
    throw InvalidInstance(std::string("colouring is not valid JSON: ") + ex.what());
  }
  const auto it = doc.is_object() ? doc.find("colours") : doc.end();
  if (it == doc.end() || !it->is_array()) throw InvalidInstance("colouring: missing \"colours\" array");
  std::vector<Colour> colours;
  colours.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_number_integer()) throw InvalidInstance("colouring: non-integer entry");
    colours.push_back(v.get<Colour>());
  }
  return EdgeColouring(std::move(colours));
}

std::string encode_colouring(const EdgeColouring& f) {
  ordered_json doc;
  doc["colours"] = std::vector<Colour>(f.values().begin(), f.values().end());
  return doc.dump();
}

std::string encode_diagnostic(const DistortionInstance& inst, const EdgeColouring& f,
                              std::string_view message) {
  ordered_json doc;
  doc["message"] = std::string(message);
  doc["instance"] = ordered_json::parse(encode_instance(inst));
  // Unassigned slots appear as -1.
  doc["partial_colouring"] = ordered_json::parse(encode_colouring(f));
  std::vector<EdgeId> dummies;
  for (std::size_t id = 0; id < inst.edges.size(); ++id) {
    if (inst.edges[id].dummy) dummies.push_back(static_cast<EdgeId>(id));
  }
  doc["dummy_edges"] = dummies;
  return doc.dump(2);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInstance("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace distcol
