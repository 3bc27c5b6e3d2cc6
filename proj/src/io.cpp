#include "sepsplit/io.hpp"

#include <json.hpp>

#include "sepsplit/errors.hpp"

namespace sepsplit {

namespace {

// Lines split on '\n'; a final empty segment after the last newline is not
// a line, so "k=1\n" has one line while "k=1\n\n" has two (the second being
// the empty set).
std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size())
                lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

int parse_int(const std::string& token, int line_no, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected ") + what + ", got '" + token + "'",
                         line_no);
    }
    if (pos != token.size())
        throw ParseError(std::string("trailing characters after ") + what +
                             " in '" + token + "'",
                         line_no);
    return value;
}

SetFamily parse_sets(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty() || lines[0].rfind("k=", 0) != 0)
        throw ParseError("first line must be k=<int>", 1);
    int k = parse_int(lines[0].substr(2), 1, "ground-set size");
    if (k < 1) throw ParseError("k must be positive", 1);
    SetFamily family(k);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        int line_no = static_cast<int>(i) + 1;
        const std::string& line = lines[i];
        SubsetMask set(k);
        if (!line.empty()) {
            int prev = 0;
            std::size_t start = 0;
            while (start <= line.size()) {
                std::size_t comma = line.find(',', start);
                std::string token = line.substr(
                    start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
                int e = parse_int(token, line_no, "element");
                if (e < 1 || e > k)
                    throw ParseError("element " + std::to_string(e) +
                                         " outside [1, " + std::to_string(k) + "]",
                                     line_no);
                if (e <= prev)
                    throw ParseError("elements must be strictly ascending",
                                     line_no);
                set.add(e);
                prev = e;
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        family.insert(set);
    }
    return family;
}

SetFamily parse_matrix(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("matrix input is empty, k unknown", 0);
    int k = static_cast<int>(lines[0].size());
    if (k == 0) throw ParseError("matrix rows must be nonempty", 1);
    SetFamily family(k);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int line_no = static_cast<int>(i) + 1;
        if (static_cast<int>(lines[i].size()) != k)
            throw ParseError("row length " + std::to_string(lines[i].size()) +
                                 " differs from k=" + std::to_string(k),
                             line_no);
        SubsetMask row(k);
        for (int j = 0; j < k; ++j) {
            char c = lines[i][j];
            if (c == '1')
                row.add(j + 1);
            else if (c != '0')
                throw ParseError(std::string("invalid matrix character '") + c +
                                     "'",
                                 line_no);
        }
        family.insert(row);
    }
    return family;
}

SetFamily parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("sets"))
        throw ParseError("JSON family needs fields \"k\" and \"sets\"", 0);
    if (!doc["k"].is_number_integer())
        throw ParseError("\"k\" must be an integer", 0);
    int k = doc["k"].get<int>();
    if (k < 1) throw ParseError("k must be positive", 0);
    if (!doc["sets"].is_array())
        throw ParseError("\"sets\" must be an array of arrays", 0);
    SetFamily family(k);
    for (const auto& arr : doc["sets"]) {
        if (!arr.is_array())
            throw ParseError("\"sets\" must be an array of arrays", 0);
        SubsetMask set(k);
        for (const auto& el : arr) {
            if (!el.is_number_integer())
                throw ParseError("set elements must be integers", 0);
            int e = el.get<int>();
            if (e < 1 || e > k)
                throw ParseError("element " + std::to_string(e) +
                                     " outside [1, " + std::to_string(k) + "]",
                                 0);
            set.add(e);
        }
        family.insert(set);
    }
    return family;
}

std::string emit_sets(const SetFamily& family) {
    std::string out = "k=" + std::to_string(family.k()) + "\n";
    for (const auto& set : family) {
        bool first = true;
        for (int e : set.elements()) {
            if (!first) out += ",";
            out += std::to_string(e);
            first = false;
        }
        out += "\n";
    }
    return out;
}

std::string emit_matrix(const SetFamily& family) {
    if (family.empty())
        throw EmptyFamilyError(
            "matrix format cannot represent an empty family (k would be lost)");
    return family_to_matrix(family).to_string();
}

std::string emit_json(const SetFamily& family) {
    nlohmann::json doc;
    doc["k"] = family.k();
    doc["sets"] = nlohmann::json::array();
    for (const auto& set : family) doc["sets"].push_back(set.elements());
    return doc.dump() + "\n";
}

}  // namespace

SetFamily parse_family(std::string_view text, Format format) {
    switch (format) {
        case Format::Sets: return parse_sets(text);
        case Format::Matrix: return parse_matrix(text);
        case Format::Json: return parse_json(text);
    }
    throw DomainError("unknown format");
}

std::string emit_family(const SetFamily& family, Format format) {
    switch (format) {
        case Format::Sets: return emit_sets(family);
        case Format::Matrix: return emit_matrix(family);
        case Format::Json: return emit_json(family);
    }
    throw DomainError("unknown format");
}

Format format_from_name(const std::string& name) {
    if (name == "sets") return Format::Sets;
    if (name == "matrix") return Format::Matrix;
    if (name == "json") return Format::Json;
    throw DomainError("unknown format '" + name + "' (sets|matrix|json)");
}

std::string format_name(Format format) {
    switch (format) {
        case Format::Sets: return "sets";
        case Format::Matrix: return "matrix";
        case Format::Json: return "json";
    }
    return "?";
}

}  // namespace sepsplit
