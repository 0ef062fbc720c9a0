#include "frc/code_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "frc/error.hpp"

namespace frc {

namespace {

FrCode make_or_violation(std::size_t n, std::size_t theta, const StorageLists& storage) {
    try {
        return FrCode::make(n, theta, storage);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvariantViolation,
                    std::string(to_string(e.kind())) + ": " + e.what());
    }
}

FrCode parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("theta") ||
        !doc.contains("nodes"))
        throw Error(ErrorKind::ParseError, "code file needs keys \"n\", \"theta\", \"nodes\"");
    const auto& n = doc["n"];
    const auto& theta = doc["theta"];
    const auto& nodes = doc["nodes"];
    if (!n.is_number_integer() || !theta.is_number_integer() || !nodes.is_array())
        throw Error(ErrorKind::ParseError, "\"n\" and \"theta\" must be integers, \"nodes\" an array");
    if (n.get<std::int64_t>() < 0 || theta.get<std::int64_t>() < 0)
        throw Error(ErrorKind::ParseError, "\"n\" and \"theta\" must be non-negative");

    StorageLists storage;
    storage.reserve(nodes.size());
    for (const auto& node : nodes) {
        if (!node.is_array()) throw Error(ErrorKind::ParseError, "each node must be an array");
        auto& list = storage.emplace_back();
        for (const auto& packet : node) {
            if (!packet.is_number_integer())
                throw Error(ErrorKind::ParseError, "packet indices must be integers");
            list.push_back(packet.get<std::int64_t>());
        }
    }
    return make_or_violation(n.get<std::size_t>(), theta.get<std::size_t>(), storage);
}

FrCode parse_csv(std::string_view text) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto& row = rows.emplace_back();
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            if (cell == "0" || cell == "1")
                row.push_back(cell == "1" ? 1 : 0);
            else
                throw Error(ErrorKind::ParseError, "matrix cell '" + cell + "' is not 0 or 1");
        }
        if (!line.empty() && line.back() == ',')
            throw Error(ErrorKind::ParseError, "trailing comma in matrix row");
        if (row.size() != rows.front().size())
            throw Error(ErrorKind::ParseError, "matrix rows have different lengths");
    }
    if (rows.empty()) throw Error(ErrorKind::ParseError, "empty matrix");

    IncidenceMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
    try {
        return code_from_incidence(m);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvariantViolation,
                    std::string(to_string(e.kind())) + ": " + e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

CodeFormat format_for_path(const std::filesystem::path& path) {
    return path.extension() == ".csv" ? CodeFormat::CsvMatrix : CodeFormat::Json;
}

FrCode parse_code(std::string_view text, CodeFormat format) {
    return format == CodeFormat::Json ? parse_json(text) : parse_csv(text);
}

std::string format_code(const FrCode& code, CodeFormat format) {
    std::ostringstream out;
    if (format == CodeFormat::CsvMatrix) {
        const auto m = incidence_matrix(code);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (c) out << ',';
                out << static_cast<int>(m.at(r, c));
            }
            out << '\n';
        }
        return out.str();
    }
    out << "{\n  \"n\": " << code.n() << ",\n  \"theta\": " << code.theta()
        << ",\n  \"nodes\": [\n";
    const auto lists = code.storage_lists();
    for (std::size_t i = 0; i < lists.size(); ++i) {
        out << "    [";
        for (std::size_t j = 0; j < lists[i].size(); ++j) out << (j ? ", " : "") << lists[i][j];
        out << (i + 1 < lists.size() ? "],\n" : "]\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

FrCode import_code(const std::filesystem::path& path, CodeFormat format) {
    return parse_code(read_file(path), format);
}

FrCode import_code(const std::filesystem::path& path) {
    return import_code(path, format_for_path(path));
}

void export_code(const FrCode& code, const std::filesystem::path& path, CodeFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
    out << format_code(code, format);
}

void export_code(const FrCode& code, const std::filesystem::path& path) {
    export_code(code, path, format_for_path(path));
}

}  // namespace frc
