#include "bcc/json_io.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

namespace bcc {

using nlohmann::json;

nlohmann::json channel_to_json(const Channel& c) {
  json rows = json::array();
  for (std::size_t x = 0; x < c.input_size(); ++x) {
    rows.push_back(std::vector<double>(c.row(x).begin(), c.row(x).end()));
  }
  return {{"inputs", c.input_size()}, {"outputs", c.output_size()}, {"rows", rows}};
}

Channel channel_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows")) {
    throw DomainError("channel JSON needs a 'rows' array");
  }
  const auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
  Channel c = Channel::validated(rows);
  if (j.contains("inputs") && j.at("inputs").get<std::size_t>() != c.input_size()) {
    throw ShapeMismatch("channel JSON 'inputs' disagrees with the row count");
  }
  if (j.contains("outputs") && j.at("outputs").get<std::size_t>() != c.output_size()) {
    throw ShapeMismatch("channel JSON 'outputs' disagrees with the row length");
  }
  return c;
}

nlohmann::json compound_to_json(const CompoundBCC& c) {
  json states = json::array();
  for (std::size_t s = 0; s < c.states.size(); ++s) {
    states.push_back({{"label", c.labels[s]},
                      {"W", channel_to_json(c.states[s].w)},
                      {"V", channel_to_json(c.states[s].v)}});
  }
  return {{"states", states}};
}

CompoundBCC compound_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("states") || !j.at("states").is_array() ||
      j.at("states").empty()) {
    throw DomainError("compound JSON needs a non-empty 'states' array");
  }
  std::vector<BroadcastPair> states;
  std::vector<std::string> labels;
  for (const auto& s : j.at("states")) {
    states.push_back(
        BroadcastPair::make(channel_from_json(s.at("W")), channel_from_json(s.at("V"))));
    labels.push_back(s.value("label", "s" + std::to_string(labels.size())));
  }
  return CompoundBCC::make(std::move(states), std::move(labels));
}

nlohmann::json pointset_to_json(const RegionPointSet& s) {
  json pts = json::array();
  for (const auto& p : s.points) pts.push_back({p.r0, p.r1});
  return {{"points", pts}};
}

RegionPointSet pointset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points")) {
    throw DomainError("point-set JSON needs a 'points' array");
  }
  std::vector<RatePoint> pts;
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 2) {
      throw DomainError("each point must be a [R0, R1] pair");
    }
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return RegionPointSet::validated(std::move(pts));
}

nlohmann::json report_to_json(const ContinuityReport& r) {
  json extras = json::object();
  for (const auto& [k, v] : r.extras) extras[k] = v;
  json witness = json::object();
  if (!r.witness.empty()) witness = json::parse(r.witness);
  return {{"check", r.check},
          {"instances", r.instances},
          {"violations", r.violations},
          {"max_gap", r.max_gap},
          {"bound", r.bound},
          {"tightness", r.tightness},
          {"eps_nominal", r.eps_nominal},
          {"eps_measured_max", r.eps_measured_max},
          {"slack", r.slack},
          {"extras", extras},
          {"witness", witness}};
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string region_csv(const RegionApproximation& r) {
  std::string out = "n,R0,R1,aux_id\n";
  for (std::size_t i = 0; i < r.points.points.size(); ++i) {
    out += std::to_string(r.point_n[i]);
    out += ',';
    out += format_double(r.points.points[i].r0);
    out += ',';
    out += format_double(r.points.points[i].r1);
    out += ',';
    out += std::to_string(r.aux_ids[i]);
    out += '\n';
  }
  return out;
}

nlohmann::json hull_to_json(const RegionApproximation& r) {
  json verts = json::array();
  for (const auto& p : r.hull) verts.push_back({p.r0, p.r1});
  return {{"kind", r.kind},
          {"vertices", verts},
          {"n_values", r.n_values},
          {"grid", r.grid_desc}};
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "lambda,symmetrizable,residual\n";
  for (const auto& row : rows) {
    out += format_double(row.lambda);
    out += ',';
    out += row.symmetrizable ? "true" : "false";
    out += ',';
    out += format_double(row.residual);
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  const auto parent = path.parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw Error("short write to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

nlohmann::json load_json(const std::filesystem::path& path) {
  return json::parse(read_file(path));
}

}  // namespace bcc
