#include "lrpr/serialize.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

namespace lrpr {

namespace {

constexpr char kB64Alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int b64_value(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
}

void require_field(const json& j, const char* field, const char* ctx) {
    if (!j.contains(field))
        throw invalid_argument(std::string(ctx) + ": missing field '" + field + "'");
}

} // namespace

std::string base64_encode(const std::uint8_t* data, std::size_t n) {
    std::string out;
    out.reserve((n + 2) / 3 * 4);
    for (std::size_t i = 0; i < n; i += 3) {
        std::uint32_t chunk = std::uint32_t(data[i]) << 16;
        if (i + 1 < n) chunk |= std::uint32_t(data[i + 1]) << 8;
        if (i + 2 < n) chunk |= std::uint32_t(data[i + 2]);
        out += kB64Alphabet[(chunk >> 18) & 63];
        out += kB64Alphabet[(chunk >> 12) & 63];
        out += i + 1 < n ? kB64Alphabet[(chunk >> 6) & 63] : '=';
        out += i + 2 < n ? kB64Alphabet[chunk & 63] : '=';
    }
    return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
    require(text.size() % 4 == 0, "base64_decode: length must be a multiple of 4");
    std::vector<std::uint8_t> out;
    out.reserve(text.size() / 4 * 3);
    for (std::size_t i = 0; i < text.size(); i += 4) {
        int vals[4] = {0, 0, 0, 0};
        int pad = 0;
        for (int k = 0; k < 4; ++k) {
            const char c = text[i + k];
            if (c == '=') {
                ++pad;
                continue;
            }
            vals[k] = b64_value(c);
            require(vals[k] >= 0 && pad == 0, "base64_decode: invalid character");
        }
        const std::uint32_t chunk = (std::uint32_t(vals[0]) << 18) | (std::uint32_t(vals[1]) << 12)
                                    | (std::uint32_t(vals[2]) << 6) | std::uint32_t(vals[3]);
        out.push_back(std::uint8_t((chunk >> 16) & 0xff));
        if (pad < 2) out.push_back(std::uint8_t((chunk >> 8) & 0xff));
        if (pad < 1) out.push_back(std::uint8_t(chunk & 0xff));
    }
    return out;
}

std::string encode_f64(const double* data, std::size_t n) {
    std::vector<std::uint8_t> bytes(n * 8);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t bits;
        std::memcpy(&bits, &data[i], 8);
        if constexpr (std::endian::native == std::endian::big) {
            for (int k = 0; k < 8; ++k) bytes[i * 8 + k] = std::uint8_t(bits >> (8 * k));
        } else {
            std::memcpy(&bytes[i * 8], &bits, 8);
        }
    }
    return base64_encode(bytes.data(), bytes.size());
}

std::vector<double> decode_f64(const std::string& text) {
    auto bytes = base64_decode(text);
    require(bytes.size() % 8 == 0, "decode_f64: payload is not a float64 array");
    std::vector<double> out(bytes.size() / 8);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t bits = 0;
        if constexpr (std::endian::native == std::endian::big) {
            for (int k = 0; k < 8; ++k) bits |= std::uint64_t(bytes[i * 8 + k]) << (8 * k);
        } else {
            std::memcpy(&bits, &bytes[i * 8], 8);
        }
        std::memcpy(&out[i], &bits, 8);
    }
    return out;
}

std::string encode_real(const rmat& m) { return encode_f64(m.data(), std::size_t(m.size())); }
std::string encode_real(const rvec& v) { return encode_f64(v.data(), std::size_t(v.size())); }

std::string encode_complex(const cmat& m) {
    // interleaved (re, im), column-major
    std::vector<double> buf(2 * std::size_t(m.size()));
    const cplx* p = m.data();
    for (Index i = 0; i < m.size(); ++i) {
        buf[2 * std::size_t(i)] = p[i].real();
        buf[2 * std::size_t(i) + 1] = p[i].imag();
    }
    return encode_f64(buf.data(), buf.size());
}

rmat decode_real_mat(const std::string& text, Index rows, Index cols) {
    auto vals = decode_f64(text);
    require(Index(vals.size()) == rows * cols, "decode_real_mat: size mismatch");
    return Eigen::Map<const rmat>(vals.data(), rows, cols);
}

rvec decode_real_vec(const std::string& text, Index n) {
    auto vals = decode_f64(text);
    require(Index(vals.size()) == n, "decode_real_vec: size mismatch");
    return Eigen::Map<const rvec>(vals.data(), n);
}

cmat decode_complex_mat(const std::string& text, Index rows, Index cols) {
    auto vals = decode_f64(text);
    require(Index(vals.size()) == 2 * rows * cols, "decode_complex_mat: size mismatch");
    cmat out(rows, cols);
    cplx* p = out.data();
    for (Index i = 0; i < out.size(); ++i)
        p[i] = cplx(vals[2 * std::size_t(i)], vals[2 * std::size_t(i) + 1]);
    return out;
}

json to_json(const RngSpec& rng) {
    return json{{"base_seed", rng.base_seed}, {"stream_id", rng.stream_id}};
}

RngSpec rng_from_json(const json& j) {
    require_field(j, "base_seed", "rng");
    require_field(j, "stream_id", "rng");
    return {j["base_seed"].get<std::uint64_t>(), j["stream_id"].get<std::uint64_t>()};
}

json to_json(const Ensemble& ens, const RngSpec& seed) {
    json data;
    if (ens.kind == EnsembleKind::GaussianIID) {
        data["phis"] = encode_real(ens.phis);
    } else {
        data["a"] = encode_complex(ens.a);
        data["b"] = encode_complex(ens.b);
    }
    return json{{"kind", to_string(ens.kind)}, {"d1", ens.d1},           {"d2", ens.d2},
                {"M", ens.M},                  {"seed", to_json(seed)},  {"data", data}};
}

Ensemble ensemble_from_json(const json& j) {
    for (const char* f : {"kind", "d1", "d2", "M", "data"}) require_field(j, f, "ensemble");
    Ensemble ens;
    const std::string kind = j["kind"].get<std::string>();
    ens.d1 = j["d1"].get<Index>();
    ens.d2 = j["d2"].get<Index>();
    ens.M = j["M"].get<Index>();
    require(ens.d1 >= 1 && ens.d2 >= 1 && ens.M >= 1, "ensemble: bad dimensions");
    const json& data = j["data"];
    if (kind == "gaussian") {
        ens.kind = EnsembleKind::GaussianIID;
        require_field(data, "phis", "ensemble.data");
        ens.phis = decode_real_mat(data["phis"].get<std::string>(), ens.d1 * ens.d2, ens.M);
    } else if (kind == "rank1" || kind == "structured") {
        ens.kind = kind == "rank1" ? EnsembleKind::RankOneComplex : EnsembleKind::Structured;
        require_field(data, "a", "ensemble.data");
        require_field(data, "b", "ensemble.data");
        ens.a = decode_complex_mat(data["a"].get<std::string>(), ens.d1, ens.M);
        ens.b = decode_complex_mat(data["b"].get<std::string>(), ens.d2, ens.M);
    } else {
        throw invalid_argument("ensemble: unknown kind '" + kind + "'");
    }
    return ens;
}

json to_json(const Observations& obs) {
    return json{{"M", obs.y.size()},
                {"y", encode_real(obs.y)},
                {"xi", encode_real(obs.xi)},
                {"clean", encode_real(obs.clean)}};
}

Observations observations_from_json(const json& j) {
    for (const char* f : {"M", "y", "xi", "clean"}) require_field(j, f, "observations");
    const Index M = j["M"].get<Index>();
    Observations obs;
    obs.y = decode_real_vec(j["y"].get<std::string>(), M);
    obs.xi = decode_real_vec(j["xi"].get<std::string>(), M);
    obs.clean = decode_real_vec(j["clean"].get<std::string>(), M);
    return obs;
}

json to_json(const Anchor& anchor) {
    return json{{"method", to_string(anchor.method)},
                {"d1", anchor.U0.rows()},
                {"d2", anchor.V0.rows()},
                {"r", anchor.rank()},
                {"U0", encode_complex(anchor.U0)},
                {"V0", encode_complex(anchor.V0)}};
}

Anchor anchor_from_json(const json& j) {
    for (const char* f : {"method", "d1", "d2", "r", "U0", "V0"}) require_field(j, f, "anchor");
    const std::string method = j["method"].get<std::string>();
    AnchorMethod m;
    if (method == "rank1")
        m = AnchorMethod::Rank1;
    else if (method == "row-to-col")
        m = AnchorMethod::RowToCol;
    else if (method == "psd")
        m = AnchorMethod::PSD;
    else if (method == "naive-vectorized")
        m = AnchorMethod::NaiveVectorized;
    else if (method == "oracle")
        m = AnchorMethod::Oracle;
    else
        throw invalid_argument("anchor: unknown method '" + method + "'");
    const Index d1 = j["d1"].get<Index>(), d2 = j["d2"].get<Index>(), r = j["r"].get<Index>();
    cmat U0 = decode_complex_mat(j["U0"].get<std::string>(), d1, r);
    cmat V0 = decode_complex_mat(j["V0"].get<std::string>(), d2, r);
    // orthonormality is an invariant of the format; verify on load
    require((U0.adjoint() * U0 - cmat::Identity(r, r)).norm()
                    <= kOrthoInputTol * std::max(1.0, std::sqrt(double(r))),
            "anchor: U0 is not orthonormal");
    require((V0.adjoint() * V0 - cmat::Identity(r, r)).norm()
                    <= kOrthoInputTol * std::max(1.0, std::sqrt(double(r))),
            "anchor: V0 is not orthonormal");
    return make_anchor(std::move(U0), std::move(V0), m);
}

json to_json(const SolveReport& report) {
    return json{{"status", to_string(report.status)},
                {"iterations", report.iterations},
                {"objective", report.objective},
                {"hinge", report.hinge},
                {"d1", report.Xhat.rows()},
                {"d2", report.Xhat.cols()},
                {"Xhat", encode_complex(report.Xhat)}};
}

SolveReport solve_report_from_json(const json& j) {
    for (const char* f : {"status", "iterations", "objective", "hinge", "d1", "d2", "Xhat"})
        require_field(j, f, "report");
    SolveReport rep;
    const std::string status = j["status"].get<std::string>();
    if (status == "converged")
        rep.status = SolveStatus::Converged;
    else if (status == "max-iter")
        rep.status = SolveStatus::MaxIter;
    else if (status == "infeasible")
        rep.status = SolveStatus::Infeasible;
    else
        throw invalid_argument("report: unknown status '" + status + "'");
    rep.iterations = j["iterations"].get<int>();
    rep.objective = j["objective"].get<double>();
    rep.hinge = j["hinge"].get<double>();
    rep.Xhat = decode_complex_mat(j["Xhat"].get<std::string>(), j["d1"].get<Index>(),
                                  j["d2"].get<Index>());
    return rep;
}

json signal_to_json(const cvec& v) {
    json arr = json::array();
    for (Index i = 0; i < v.size(); ++i) arr.push_back(json::array({v[i].real(), v[i].imag()}));
    return arr;
}

cvec signal_from_json(const json& j) {
    require(j.is_array(), "signal: expected an array of [re, im] pairs");
    cvec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& p = j[i];
        require(p.is_array() && p.size() == 2, "signal: expected [re, im] pairs");
        v[Index(i)] = cplx(p[0].get<double>(), p[1].get<double>());
    }
    return v;
}

std::string config_hash(const json& config) {
    const std::string dump = config.dump();
    const std::uint64_t h = hash_str(dump);
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw numeric_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw numeric_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw numeric_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json_file(const std::string& path) {
    return json::parse(read_text_file(path));
}

void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

} // namespace lrpr
