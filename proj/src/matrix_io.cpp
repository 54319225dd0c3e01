#include "schatten/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace schatten {
namespace io {

namespace {

json complex_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex pair_to_complex(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number())
        throw IoError(std::string(what) + ": expected [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json parse(const std::string& text, const std::string& origin) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw IoError(origin + ": payload is not valid JSON");
    return j;
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path + "'");
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failure on '" + path + "'");
}

json matrix_to_json(const Matrix& a) {
    json data = json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            data.push_back(complex_pair(a(r, c)));
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", data}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("data"))
        throw IoError("matrix: expected {rows, cols, data}");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw IoError("matrix: rows/cols must be integers");
    const auto rows = j["rows"].get<Eigen::Index>();
    const auto cols = j["cols"].get<Eigen::Index>();
    if (rows < 1 || cols < 1) throw IoError("matrix: dimensions must be >= 1");
    const json& data = j["data"];
    if (!data.is_array() ||
        data.size() != static_cast<std::size_t>(rows * cols))
        throw IoError("matrix: data must hold rows*cols [re, im] pairs");
    Matrix a(rows, cols);
    std::size_t k = 0;
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            a(r, c) = pair_to_complex(data[k++], "matrix data");
    return a;
}

Matrix load_matrix(const std::string& path) {
    return matrix_from_json(parse(read_text_file(path), path));
}

void save_matrix(const std::string& path, const Matrix& a) {
    write_text_file(path, matrix_to_json(a).dump() + "\n");
}

json set_to_json(const CompactSet& s) {
    json j{{"kind", s.kind_tag()}};
    if (s.kind() == CompactSet::Kind::Disc) {
        j["radius"] = s.radius();
    } else {
        json pts = json::array();
        for (const Complex& p : s.points()) pts.push_back(complex_pair(p));
        j["points"] = pts;
    }
    return j;
}

CompactSet set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw IoError("set: expected {kind, radius|points}");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "disc") {
        if (!j.contains("radius") || !j["radius"].is_number())
            throw IoError("set: disc needs a numeric radius");
        double r = j["radius"].get<double>();
        if (r < 0.0) throw IoError("set: disc radius must be >= 0");
        return CompactSet::disc(r);
    }
    if (kind != "cloud" && kind != "polygon")
        throw IoError("set: kind must be cloud | disc | polygon");
    if (!j.contains("points") || !j["points"].is_array() ||
        j["points"].empty())
        throw IoError("set: " + kind + " needs a nonempty points array");
    std::vector<Complex> pts;
    pts.reserve(j["points"].size());
    for (const json& p : j["points"])
        pts.push_back(pair_to_complex(p, "set points"));
    if (kind == "cloud") return CompactSet::cloud(std::move(pts));
    try {
        return CompactSet::polygon(std::move(pts));
    } catch (const EmptySet& e) {
        throw IoError(std::string("set: ") + e.what());
    }
}

namespace {

CompactSet cloud_from_csv(const std::string& text, const std::string& origin) {
    std::vector<Complex> pts;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        std::istringstream row(line);
        std::string re_s, im_s;
        if (!std::getline(row, re_s, ',') || !std::getline(row, im_s))
            throw IoError(origin + ": expected 're,im' rows");
        if (pts.empty() && re_s.find_first_not_of("+-.0123456789eE \t\r") !=
                               std::string::npos)
            continue;  // header row
        try {
            pts.emplace_back(std::stod(re_s), std::stod(im_s));
        } catch (const std::exception&) {
            throw IoError(origin + ": non-numeric CSV entry '" + line + "'");
        }
    }
    if (pts.empty()) throw IoError(origin + ": no points in CSV");
    return CompactSet::cloud(std::move(pts));
}

}  // namespace

CompactSet load_set(const std::string& path) {
    std::string text = read_text_file(path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return cloud_from_csv(text, path);
    return set_from_json(parse(text, path));
}

void save_set(const std::string& path, const CompactSet& s) {
    write_text_file(path, set_to_json(s).dump() + "\n");
}

json sequence_to_json(const EigenSequence& s) {
    json vals = json::array();
    for (const Complex& v : s.values) vals.push_back(complex_pair(v));
    return json{{"values", vals}, {"model", s.model.tag()}};
}

EigenSequence sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("values") || !j.contains("model") ||
        !j["values"].is_array() || !j["model"].is_string())
        throw IoError("sequence: expected {values, model}");
    EigenSequence s;
    try {
        s.model = RankModel::from_tag(j["model"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("sequence: ") + e.what());
    }
    s.values.reserve(j["values"].size());
    for (const json& v : j["values"])
        s.values.push_back(pair_to_complex(v, "sequence values"));
    return s;
}

EigenSequence load_sequence(const std::string& path) {
    return sequence_from_json(parse(read_text_file(path), path));
}

json orbit_result_to_json(const OrbitResult& r) {
    json witnesses = json::array();
    for (const Matrix& w : r.witnesses) witnesses.push_back(matrix_to_json(w));
    return json{{"value", complex_pair(r.value)},
                {"objective", r.objective},
                {"iterations", r.iterations},
                {"restarts_used", r.restarts_used},
                {"history", r.history},
                {"witnesses", witnesses}};
}

json range_sample_to_json(const RangeSample& s) {
    json pts = json::array();
    for (const Complex& p : s.points) pts.push_back(complex_pair(p));
    return json{{"kind", s.kind == RangeKind::SimilarityOrbit
                             ? "similarity-orbit"
                             : "equivalence-orbit"},
                {"sample_count", s.sample_count},
                {"seed", s.seed},
                {"points", pts}};
}

std::string range_sample_to_csv(const RangeSample& s) {
    std::ostringstream out;
    out << "re,im\n";
    out.precision(17);
    for (const Complex& p : s.points)
        out << p.real() << ',' << p.imag() << '\n';
    return out.str();
}

json support_profile_to_json(const SupportProfile& p) {
    return json{{"directions", p.directions},
                {"support_values", p.support_values}};
}

}  // namespace io
}  // namespace schatten
