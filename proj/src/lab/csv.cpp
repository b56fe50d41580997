#include "korlab/lab/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace korlab::lab {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

void CsvTable::write(std::ostream& out) const {
    out << "# schema: " << kCsvSchema << '\n';
    out << "record,experiment,angle_index,angle,scale,quantity,value,normalizer,ratio,pass\n";
    for (const auto& r : rows_) {
        out << r.record << ',' << experiment_ << ',';
        if (r.angle_index) out << *r.angle_index;
        out << ',' << cell(r.angle) << ',';
        if (r.scale) out << *r.scale;
        out << ',' << r.quantity << ',' << cell(r.value) << ',' << cell(r.normalizer) << ',' << cell(r.ratio) << ',';
        if (r.pass) out << (*r.pass ? 1 : 0);
        out << '\n';
    }
}

std::string CsvTable::str() const {
    std::ostringstream s;
    write(s);
    return s.str();
}

}  // namespace korlab::lab
