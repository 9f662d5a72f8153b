#include "partcalc/render.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace partcalc {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const TableRow& row) {
    Json obj;
    obj["quantity"] = row.quantity;
    obj["n"] = row.n;
    obj["r"] = row.r ? Json(*row.r) : Json(nullptr);
    obj["method"] = row.method;
    obj["value"] = row.value.to_string();
    return obj;
}

TableRow from_json(const Json& obj) {
    TableRow row;
    row.quantity = obj.at("quantity").get<std::string>();
    row.n = obj.at("n").get<std::uint32_t>();
    if (!obj.at("r").is_null()) row.r = obj.at("r").get<std::uint32_t>();
    row.method = obj.at("method").get<std::string>();
    row.value = ExactInt::parse(obj.at("value").get<std::string>());
    return row;
}

}  // namespace

std::string_view to_string(Format f) {
    switch (f) {
        case Format::plain: return "plain";
        case Format::json: return "json";
        case Format::csv: return "csv";
    }
    return "?";
}

std::optional<Format> parse_format(std::string_view name) {
    for (Format f : {Format::plain, Format::json, Format::csv})
        if (to_string(f) == name) return f;
    return std::nullopt;
}

TableRow TableRow::from(const ComputationResult& result) {
    return TableRow{std::string(to_string(result.quantity)), result.n, result.r,
                    std::string(to_string(result.method)), result.value};
}

std::string render_result(const ComputationResult& result, Format format) {
    const TableRow row = TableRow::from(result);
    switch (format) {
        case Format::json: return to_json(row).dump() + "\n";
        case Format::csv: return render_table({row}, Format::csv);
        case Format::plain: break;
    }
    std::ostringstream os;
    os << row.quantity << "(" << row.n;
    if (row.r) os << "; r=" << *row.r;
    os << ") = " << row.value << " [method=" << row.method << "]\n";
    return os.str();
}

std::string render_table(const std::vector<TableRow>& rows, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::json: {
            Json arr = Json::array();
            for (const auto& row : rows) arr.push_back(to_json(row));
            os << arr.dump() << "\n";
            break;
        }
        case Format::csv:
            os << "n,value\n";
            for (const auto& row : rows) os << row.n << "," << row.value << "\n";
            break;
        case Format::plain:
            for (const auto& row : rows) os << row.n << " " << row.value << "\n";
            break;
    }
    return os.str();
}

std::vector<TableRow> parse_table(std::string_view text, Format format) {
    std::vector<TableRow> rows;
    if (format == Format::json) {
        Json arr;
        try {
            arr = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed JSON table: ") + e.what());
        }
        if (!arr.is_array()) throw std::invalid_argument("JSON table must be an array");
        for (const auto& obj : arr) rows.push_back(from_json(obj));
        return rows;
    }
    if (format != Format::csv) throw std::invalid_argument("only json and csv tables can be parsed");
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "n,value") throw std::invalid_argument("CSV table must start with n,value");
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw std::invalid_argument("malformed CSV row: " + line);
        TableRow row;
        const ExactInt n = ExactInt::parse(line.substr(0, comma));
        if (n.sign() < 0 || n > ExactInt(0xFFFFFFFFLL)) throw std::invalid_argument("n out of range: " + line);
        row.n = static_cast<std::uint32_t>(n.to_uint64());
        row.value = ExactInt::parse(line.substr(comma + 1));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace partcalc
