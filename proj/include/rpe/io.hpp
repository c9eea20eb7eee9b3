#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rpe/estimator.hpp"
#include "rpe/sequences.hpp"
#include "rpe/simulator.hpp"

namespace rpe {

// JSON text forms. Datasets use
//   {"n": int, "kind": string, "entries": [{"prep": [labels], "germ": [labels],
//    "reps": int, "meas": [labels], "n0": int, "n1": int}]}
// with gate labels "Gx"/"Gy" and kind one of "RPE-alpha", "RPE-epsilon",
// "GST". Designs drop the counts and add "generations". Emit then ingest is
// the identity on the keyed content.
std::string design_to_json(const ExperimentDesign& design);
std::string dataset_to_json(const Dataset& data);
std::string estimate_to_json(const RpeEstimate& estimate);

// Parse failures throw ParseError with file:line context; count violations
// throw MalformedDataset naming the sequence.
ExperimentDesign ingest_design(const std::filesystem::path& path);
Dataset ingest_dataset(const std::filesystem::path& path);

ExperimentDesign design_from_json(const std::string& text, const std::string& origin);
Dataset dataset_from_json(const std::string& text, const std::string& origin);

// Writes via a temporary file and rename, so readers never observe a
// partially written artifact.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

// Header line plus one row per entry, every value at full double precision.
void write_csv_atomic(const std::filesystem::path& path, const std::string& header,
                      const std::vector<std::vector<double>>& rows);

}  // namespace rpe
