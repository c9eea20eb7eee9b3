#include "rpe/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rpe/errors.hpp"

namespace rpe {

namespace {

using Json = nlohmann::ordered_json;

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

Json parse_or_throw(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(origin + ":" + std::to_string(line_of_offset(text, offset)) + ": " +
                     e.what());
  }
}

Json labels_to_json(const std::vector<GateLabel>& labels) {
  Json arr = Json::array();
  for (GateLabel g : labels) arr.push_back(to_string(g));
  return arr;
}

std::vector<GateLabel> labels_from_json(const Json& arr) {
  std::vector<GateLabel> labels;
  labels.reserve(arr.size());
  for (const auto& item : arr) {
    labels.push_back(gate_label_from_string(item.get<std::string>()));
  }
  return labels;
}

Json sequence_to_json(const SequenceSpec& seq) {
  Json entry;
  entry["prep"] = labels_to_json(seq.prep);
  entry["germ"] = labels_to_json(seq.germ);
  entry["reps"] = seq.germ_reps;
  entry["meas"] = labels_to_json(seq.meas);
  return entry;
}

SequenceSpec sequence_from_json(const Json& entry) {
  SequenceSpec seq{labels_from_json(entry.at("prep")), labels_from_json(entry.at("germ")),
                   entry.at("reps").get<std::int64_t>(),
                   labels_from_json(entry.at("meas"))};
  if (seq.germ_reps < 0) {
    throw std::invalid_argument("germ repetitions must be nonnegative");
  }
  return seq;
}

std::string full_precision(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

std::string design_to_json(const ExperimentDesign& design) {
  Json j;
  j["kind"] = to_string(design.kind);
  j["generations"] = design.generations;
  Json entries = Json::array();
  for (const SequenceSpec& seq : design.sequences) entries.push_back(sequence_to_json(seq));
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

std::string dataset_to_json(const Dataset& data) {
  Json j;
  j["n"] = data.samples_per_sequence();
  j["kind"] = to_string(data.kind());
  Json entries = Json::array();
  for (const DatasetEntry& entry : data.entries()) {
    Json e = sequence_to_json(entry.sequence);
    e["n0"] = entry.n0;
    e["n1"] = entry.n1;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

std::string estimate_to_json(const RpeEstimate& estimate) {
  Json j;
  j["target"] = to_string(estimate.target);
  j["l_max"] = estimate.l_max;
  j["phase"] = estimate.phase;
  j["error_from_ideal"] = estimate.error_from_ideal();
  j["per_generation"] = estimate.per_generation;
  j["degenerate_generations"] = estimate.degenerate_generations;
  return j.dump(2) + "\n";
}

ExperimentDesign design_from_json(const std::string& text, const std::string& origin) {
  const Json j = parse_or_throw(text, origin);
  try {
    ExperimentDesign design;
    design.kind = design_kind_from_string(j.at("kind").get<std::string>());
    design.generations = j.at("generations").get<int>();
    for (const auto& entry : j.at("entries")) {
      design.sequences.push_back(sequence_from_json(entry));
    }
    return design;
  } catch (const Json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

Dataset dataset_from_json(const std::string& text, const std::string& origin) {
  const Json j = parse_or_throw(text, origin);
  try {
    const auto n = j.at("n").get<std::int64_t>();
    const DesignKind kind = design_kind_from_string(j.at("kind").get<std::string>());
    Dataset data(kind, n);
    for (const auto& entry : j.at("entries")) {
      data.add(sequence_from_json(entry), entry.at("n0").get<std::int64_t>(),
               entry.at("n1").get<std::int64_t>());
    }
    return data;
  } catch (const Json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

ExperimentDesign ingest_design(const std::filesystem::path& path) {
  return design_from_json(read_file(path), path.string());
}

Dataset ingest_dataset(const std::filesystem::path& path) {
  return dataset_from_json(read_file(path), path.string());
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
      throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

void write_csv_atomic(const std::filesystem::path& path, const std::string& header,
                      const std::vector<std::vector<double>>& rows) {
  std::string text = header + "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) text += ',';
      text += full_precision(row[i]);
    }
    text += '\n';
  }
  write_text_atomic(path, text);
}

}  // namespace rpe
