#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace korlab::lab {

inline constexpr const char* kCsvSchema = "korlab-csv/1";

// Long format, one value per row:
// record,experiment,angle_index,angle,scale,quantity,value,normalizer,ratio,pass
// record is "data", "summary" or "check"; missing numbers are empty, NaN prints as "nan".
struct CsvRow {
    std::string record = "data";
    std::optional<std::size_t> angle_index;
    std::optional<double> angle;
    std::optional<int> scale;
    std::string quantity;
    std::optional<double> value;
    std::optional<double> normalizer;
    std::optional<double> ratio;
    std::optional<bool> pass;
};

class CsvTable {
public:
    explicit CsvTable(std::string experiment) : experiment_(std::move(experiment)) {}

    void add(CsvRow row) { rows_.push_back(std::move(row)); }
    const std::vector<CsvRow>& rows() const { return rows_; }
    const std::string& experiment() const { return experiment_; }

    void write(std::ostream& out) const;
    std::string str() const;

private:
    std::string experiment_;
    std::vector<CsvRow> rows_;
};

// %.17g, with "nan" / "inf" / "-inf".
std::string format_double(double v);

}  // namespace korlab::lab
