#ifndef FRECHET_CURVE_IO_HPP
#define FRECHET_CURVE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

struct NamedCurve {
    std::string name;
    Curve curve;
};

enum class CurveFormat { Csv, Json };

/// A parsed curve file: named curves of one common dimension.
struct CurveFile {
    CurveFormat format = CurveFormat::Csv;
    int dimension = 0;
    std::vector<NamedCurve> curves;

    const Curve& by_name(const std::string& name) const;
};

/// CSV: '#' comments, a header of either "x,y[,z...]" (single curve named
/// "curve") or "name,x,y[,z...]" (rows grouped by name in order of first
/// appearance), one vertex per row.
CurveFile read_csv(std::istream& in);
void write_csv(std::ostream& out, const CurveFile& f);

/// JSON: {"curves":[{"name":str,"dim":int,"vertices":[[...]]}]}.
CurveFile read_json(std::istream& in);
void write_json(std::ostream& out, const CurveFile& f);

/// Dispatch on file extension (.csv / .json).
CurveFile read_curve_file(const std::string& path);
void write_curve_file(const std::string& path, const CurveFile& f);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

}  // namespace frechet

#endif
