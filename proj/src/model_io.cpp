#include "qpca/model_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpca/errors.hpp"

namespace qpca {

using nlohmann::json;

namespace {

constexpr double kLoadOrthonormalityTolerance = 1e-8;

const json* find(const json& j, const char* key) {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::size_t require_uint(const json& j, const char* key) {
    const json* v = find(j, key);
    if (v == nullptr || !v->is_number_unsigned()) {
        throw ParseError(std::string("model field '") + key + "' missing or not a non-negative integer");
    }
    return v->get<std::size_t>();
}

std::string require_string(const json& j, const char* key) {
    const json* v = find(j, key);
    if (v == nullptr || !v->is_string()) {
        throw ParseError(std::string("model field '") + key + "' missing or not a string");
    }
    return v->get<std::string>();
}

double decode_double(const json& v, const char* what) {
    if (!v.is_string()) {
        throw ParseError(std::string(what) + " must be a hex-float string");
    }
    const double d = parse_hex_double(v.get<std::string>());
    if (!std::isfinite(d)) {
        throw ModelIntegrityError(std::string(what) + " is not finite");
    }
    return d;
}

} // namespace

std::string hex_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%a", value);
    return buf;
}

double parse_hex_double(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + text.size() || text.empty()) {
        throw ParseError("invalid hex-float '" + text + "'");
    }
    return value;
}

void save_model(const ClassifierModel& model, std::ostream& out) {
    json j;
    j["format"] = "qpca-model";
    j["format_version"] = kModelFormatVersion;
    j["n"] = model.pixel_count();
    j["s"] = model.component_count();
    j["k"] = model.block_dim();
    j["encoding"] = "direct-sum";

    json sigma = json::array();
    for (double s : model.components().singular_values) sigma.push_back(hex_double(s));
    j["singular_values"] = std::move(sigma);

    json comps = json::array();
    for (const auto& comp : model.components().components) {
        json row = json::array();
        for (double x : comp) row.push_back(hex_double(x));
        comps.push_back(std::move(row));
    }
    j["components"] = std::move(comps);

    const ModelMetadata& meta = model.metadata();
    json m;
    m["sample_count"] = meta.sample_count;
    m["requested_components"] =
        meta.requested_components ? json(*meta.requested_components) : json(nullptr);
    m["variance_threshold"] =
        meta.variance_threshold ? json(hex_double(*meta.variance_threshold)) : json(nullptr);
    m["centered"] = meta.centered;
    m["created"] = meta.created;
    j["metadata"] = std::move(m);

    out << j.dump(2) << '\n';
}

void save_model(const ClassifierModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    save_model(model, out);
}

ClassifierModel load_model(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what(),
                         e.byte > 0 ? static_cast<std::size_t>(e.byte - 1) : 0);
    }
    if (!j.is_object()) throw ParseError("model file must hold a JSON object");

    const json* version = find(j, "format_version");
    if (version == nullptr || !version->is_number_integer()) {
        throw ParseError("model field 'format_version' missing or not an integer");
    }
    if (version->get<int>() != kModelFormatVersion) {
        throw VersionError("model format version " + version->dump() + " is not supported (expected " +
                           std::to_string(kModelFormatVersion) + ")");
    }

    const std::size_t n = require_uint(j, "n");
    const std::size_t s = require_uint(j, "s");
    const std::size_t k = require_uint(j, "k");
    if (n == 0 || s == 0) throw ModelIntegrityError("model must have n >= 1 and s >= 1");
    if (k != s + 2) {
        throw ModelIntegrityError("model has k = " + std::to_string(k) + ", expected s + 2 = " +
                                  std::to_string(s + 2));
    }
    if (require_string(j, "encoding") != "direct-sum") {
        throw ModelIntegrityError("unknown encoding identifier");
    }

    const json* sigma = find(j, "singular_values");
    if (sigma == nullptr || !sigma->is_array() || sigma->size() != s) {
        throw ParseError("model field 'singular_values' missing or of wrong length");
    }
    const json* comps = find(j, "components");
    if (comps == nullptr || !comps->is_array() || comps->size() != s) {
        throw ParseError("model field 'components' missing or of wrong length");
    }

    PrincipalComponents pc;
    pc.singular_values.reserve(s);
    for (const json& v : *sigma) pc.singular_values.push_back(decode_double(v, "singular value"));
    pc.components.reserve(s);
    for (const json& row : *comps) {
        if (!row.is_array() || row.size() != n) {
            throw ParseError("model component row has the wrong length");
        }
        std::vector<double> comp;
        comp.reserve(n);
        for (const json& v : row) comp.push_back(decode_double(v, "component entry"));
        pc.components.push_back(std::move(comp));
    }

    // The measurement is only a projector over an orthonormal set; reject
    // files whose declared components have drifted or been tampered with.
    for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = a; b < s; ++b) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += pc.components[a][i] * pc.components[b][i];
            const double expected = (a == b) ? 1.0 : 0.0;
            if (std::abs(dot - expected) > kLoadOrthonormalityTolerance) {
                throw ModelIntegrityError("model components are not orthonormal");
            }
        }
    }

    ModelMetadata meta;
    if (const json* m = find(j, "metadata"); m != nullptr && m->is_object()) {
        if (const json* v = find(*m, "sample_count"); v && v->is_number_unsigned()) {
            meta.sample_count = v->get<std::size_t>();
        }
        if (const json* v = find(*m, "requested_components"); v && v->is_number_unsigned()) {
            meta.requested_components = v->get<std::size_t>();
        }
        if (const json* v = find(*m, "variance_threshold"); v && v->is_string()) {
            meta.variance_threshold = parse_hex_double(v->get<std::string>());
        }
        if (const json* v = find(*m, "centered"); v && v->is_boolean()) {
            meta.centered = v->get<bool>();
        }
        if (const json* v = find(*m, "created"); v && v->is_string()) {
            meta.created = v->get<std::string>();
        }
    }

    return ClassifierModel(std::move(pc), n, std::move(meta));
}

ClassifierModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return load_model(in);
}

std::string iso8601_utc_now() {
    std::time_t now = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr) {
        char* end = nullptr;
        const long long pinned = std::strtoll(epoch, &end, 10);
        if (end != epoch && *end == '\0') now = static_cast<std::time_t>(pinned);
    }
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace qpca
