#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "schatten/numerical_range.hpp"
#include "schatten/operator_core.hpp"
#include "schatten/set_convergence.hpp"
#include "schatten/spectra.hpp"
#include "schatten/unitary_orbit.hpp"

namespace schatten {
namespace io {

using json = nlohmann::ordered_json;

// Matrix format used repo-wide:
//   {"rows": N, "cols": M, "data": [[re, im], ...]}   (row-major)
json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const json& j);
Matrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const Matrix& a);

// CompactSet format:
//   {"kind": "disc", "radius": r}
//   {"kind": "cloud" | "polygon", "points": [[re, im], ...]}
// Clouds additionally load from CSV (columns re, im).
json set_to_json(const CompactSet& s);
CompactSet set_from_json(const json& j);
CompactSet load_set(const std::string& path);
void save_set(const std::string& path, const CompactSet& s);

// EigenSequence format:
//   {"values": [[re, im], ...], "model": "finite_rank" | "finite_kernel:<k>"
//    | "interleave"}
json sequence_to_json(const EigenSequence& s);
EigenSequence sequence_from_json(const json& j);
EigenSequence load_sequence(const std::string& path);

// OrbitResult: value, objective, iterations, history, witness matrices in
// the repo matrix format.
json orbit_result_to_json(const OrbitResult& r);

// RangeSample / SupportProfile exports for external plotting.
json range_sample_to_json(const RangeSample& s);
std::string range_sample_to_csv(const RangeSample& s);  // "re,im" lines
json support_profile_to_json(const SupportProfile& p);

// Whole-file helpers. Loaders throw IoError on missing files or payloads
// that do not parse as the documented formats.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace io
}  // namespace schatten
