#include <ostream>

#include <json.hpp>

#include "backbone/experiment.hpp"
#include "backbone/format.hpp"

namespace backbone {

namespace {

std::string valueText(const std::optional<double>& value) { return value ? formatNumber(*value) : "undefined"; }

} // namespace

void writeRecordsCsv(std::ostream& out, std::span<const SweepRecord> records) {
    out << "graph,method,ratio,measure,value\n";
    for (const auto& r : records)
        out << r.graph << ',' << r.method << ',' << formatNumber(r.ratio) << ',' << r.measure << ','
            << valueText(r.value) << '\n';
}

void writeRecordsJson(std::ostream& out, std::span<const SweepRecord> records) {
    auto array = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json row{{"graph", r.graph}, {"method", r.method}, {"ratio", r.ratio}, {"measure", r.measure}};
        row["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
        array.push_back(std::move(row));
    }
    out << array.dump(1) << '\n';
}

void writeAggregateCsv(std::ostream& out, std::span<const AggregateRow> rows) {
    out << "method,ratio,measure,mean,graphs,excluded\n";
    for (const auto& r : rows)
        out << r.method << ',' << formatNumber(r.ratio) << ',' << r.measure << ',' << valueText(r.mean) << ','
            << r.graphs << ',' << r.excluded << '\n';
}

void writeCorrelationCsv(std::ostream& out, const CorrelationMatrix& matrix) {
    out << "label";
    for (const auto& label : matrix.labels)
        out << ',' << label;
    out << '\n';
    for (std::size_t a = 0; a < matrix.labels.size(); ++a) {
        out << matrix.labels[a];
        for (std::size_t b = 0; b < matrix.labels.size(); ++b)
            out << ',' << valueText(matrix.cells[a][b]);
        out << '\n';
    }
}

void writeTimingCsv(std::ostream& out, std::span<const TimingRow> rows) {
    out << "graph,method,seconds\n";
    for (const auto& r : rows)
        out << r.graph << ',' << r.method << ',' << formatNumber(r.seconds) << '\n';
}

} // namespace backbone
