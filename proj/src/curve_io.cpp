#include "frechet/curve_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace frechet {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    for (std::string& s : out) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.pop_back();
    }
    return out;
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw std::invalid_argument("bad numeric field: '" + s + "'");
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

const Curve& CurveFile::by_name(const std::string& name) const {
    for (const NamedCurve& c : curves)
        if (c.name == name) return c.curve;
    throw std::invalid_argument("no curve named '" + name + "' in file");
}

CurveFile read_csv(std::istream& in) {
    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        header = split_csv_line(line);
        break;
    }
    if (header.empty()) throw std::invalid_argument("empty CSV curve file");

    const bool named = header.front() == "name";
    const int dim = static_cast<int>(header.size()) - (named ? 1 : 0);
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("bad CSV header dimension");

    std::vector<std::string> order;
    std::map<std::string, std::vector<Point>> groups;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_csv_line(line);
        if (static_cast<int>(fields.size()) != static_cast<int>(header.size()))
            throw std::invalid_argument("CSV row has wrong field count");
        const std::string name = named ? fields[0] : std::string("curve");
        double coords[kMaxDim];
        for (int i = 0; i < dim; ++i) coords[i] = parse_double(fields[i + (named ? 1 : 0)]);
        if (!groups.count(name)) order.push_back(name);
        groups[name].emplace_back(coords, dim);
    }

    CurveFile f;
    f.format = CurveFormat::Csv;
    f.dimension = dim;
    for (const std::string& name : order) f.curves.push_back({name, Curve(groups[name])});
    if (f.curves.empty()) throw std::invalid_argument("CSV file contains no vertices");
    return f;
}

void write_csv(std::ostream& out, const CurveFile& f) {
    static const char* axes = "xyzuvwst";
    const bool named = f.curves.size() > 1 || (f.curves.size() == 1 && f.curves[0].name != "curve");
    if (named) out << "name";
    for (int i = 0; i < f.dimension; ++i) out << (i == 0 && !named ? "" : ",") << axes[i];
    out << "\n";
    for (const NamedCurve& nc : f.curves) {
        for (const Point& p : nc.curve) {
            if (named) out << nc.name;
            for (int i = 0; i < f.dimension; ++i)
                out << (i == 0 && !named ? "" : ",") << format_double(p[i]);
            out << "\n";
        }
    }
}

CurveFile read_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    if (!j.is_object() || !j.contains("curves") || !j["curves"].is_array())
        throw std::invalid_argument("JSON curve file must be {\"curves\": [...]}");
    CurveFile f;
    f.format = CurveFormat::Json;
    for (const auto& jc : j["curves"]) {
        const std::string name = jc.at("name").get<std::string>();
        const int dim = jc.at("dim").get<int>();
        if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("bad JSON curve dimension");
        if (f.dimension == 0) f.dimension = dim;
        if (dim != f.dimension) throw std::invalid_argument("mixed dimensions across curves");
        std::vector<Point> verts;
        for (const auto& jv : jc.at("vertices")) {
            if (static_cast<int>(jv.size()) != dim)
                throw std::invalid_argument("vertex arity does not match dim");
            double coords[kMaxDim];
            for (int i = 0; i < dim; ++i) coords[i] = jv[i].get<double>();
            verts.emplace_back(coords, dim);
        }
        f.curves.push_back({name, Curve(std::move(verts))});
    }
    if (f.curves.empty()) throw std::invalid_argument("JSON file contains no curves");
    return f;
}

void write_json(std::ostream& out, const CurveFile& f) {
    nlohmann::json j;
    j["curves"] = nlohmann::json::array();
    for (const NamedCurve& nc : f.curves) {
        nlohmann::json jc;
        jc["name"] = nc.name;
        jc["dim"] = f.dimension;
        auto verts = nlohmann::json::array();
        for (const Point& p : nc.curve) {
            auto row = nlohmann::json::array();
            for (int i = 0; i < f.dimension; ++i) row.push_back(p[i]);
            verts.push_back(row);
        }
        jc["vertices"] = std::move(verts);
        j["curves"].push_back(std::move(jc));
    }
    out << j.dump(2) << "\n";
}

namespace {

bool has_suffix(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

}  // namespace

CurveFile read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    if (has_suffix(path, ".json")) return read_json(in);
    if (has_suffix(path, ".csv")) return read_csv(in);
    throw std::invalid_argument("unknown curve file extension (want .csv or .json)");
}

void write_curve_file(const std::string& path, const CurveFile& f) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    if (has_suffix(path, ".json"))
        write_json(out, f);
    else if (has_suffix(path, ".csv"))
        write_csv(out, f);
    else
        throw std::invalid_argument("unknown curve file extension (want .csv or .json)");
}

}  // namespace frechet
