#pragma once

#include "lrpr/anchor.hpp"
#include "lrpr/model.hpp"
#include "lrpr/rng.hpp"
#include "lrpr/solver.hpp"
#include "lrpr/types.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

// JSON containers for experiment replay.  Float64 payloads are base64-encoded
// little-endian so artifacts round-trip bit-exactly; complex data is stored
// interleaved (re, im).

namespace lrpr {

using json = nlohmann::ordered_json;

std::string base64_encode(const std::uint8_t* data, std::size_t n);
std::vector<std::uint8_t> base64_decode(const std::string& text);

std::string encode_f64(const double* data, std::size_t n);
std::vector<double> decode_f64(const std::string& text);

std::string encode_real(const rmat& m);
std::string encode_real(const rvec& v);
std::string encode_complex(const cmat& m);

rmat decode_real_mat(const std::string& text, Index rows, Index cols);
rvec decode_real_vec(const std::string& text, Index n);
cmat decode_complex_mat(const std::string& text, Index rows, Index cols);

json to_json(const RngSpec& rng);
RngSpec rng_from_json(const json& j);

json to_json(const Ensemble& ens, const RngSpec& seed = {});
Ensemble ensemble_from_json(const json& j);

json to_json(const Observations& obs);
Observations observations_from_json(const json& j);

json to_json(const Anchor& anchor);
Anchor anchor_from_json(const json& j);

json to_json(const SolveReport& report);
SolveReport solve_report_from_json(const json& j);

/// Signals as JSON arrays of [re, im] pairs.
json signal_to_json(const cvec& v);
cvec signal_from_json(const json& j);

/// 64-bit FNV-1a of a canonical JSON dump, as fixed-width hex.
std::string config_hash(const json& config);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace lrpr
