#include "relalg/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace relalg {

namespace {

using nlohmann::json;

void write_row(std::ostringstream& out, std::span<const Element> row) {
    out << '[';
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ", ";
        out << row[i];
    }
    out << ']';
}

void write_matrix(std::ostringstream& out, std::span<const Element> table, std::size_t n) {
    out << "[\n";
    for (std::size_t x = 0; x < n; ++x) {
        out << "    ";
        write_row(out, table.subspan(x * n, n));
        out << (x + 1 < n ? ",\n" : "\n");
    }
    out << "  ]";
}

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ModelFormatError(std::string("missing field \"") + key + "\"");
    return *it;
}

Element element(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ModelFormatError(std::string(what) + ": expected a non-negative integer");
    return static_cast<Element>(v.get<long long>());
}

std::vector<Element> vector_field(const json& doc, const char* key, std::size_t n) {
    const json& v = field(doc, key);
    if (!v.is_array() || v.size() != n)
        throw ModelFormatError(std::string(key) + ": expected an array of " + std::to_string(n) + " entries");
    std::vector<Element> out;
    for (const auto& e : v) out.push_back(element(e, key));
    return out;
}

std::vector<Element> matrix_field(const json& doc, const char* key, std::size_t n) {
    const json& v = field(doc, key);
    if (!v.is_array() || v.size() != n)
        throw ModelFormatError(std::string(key) + ": expected " + std::to_string(n) + " rows");
    std::vector<Element> out;
    for (const auto& row : v) {
        if (!row.is_array() || row.size() != n)
            throw ModelFormatError(std::string(key) + ": expected rows of " + std::to_string(n) + " entries");
        for (const auto& e : row) out.push_back(element(e, key));
    }
    return out;
}

std::size_t name_width(const FiniteAlgebra& a) {
    std::size_t w = 0;
    for (Element x = 0; x < a.size(); ++x) w = std::max(w, a.name(x).size());
    return w;
}

std::string padded(const std::string& s, std::size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

}  // namespace

std::string write_model_json(const FiniteAlgebra& a) {
    const std::size_t n = a.size();
    std::ostringstream out;
    out << "{\n  \"size\": " << n << ",\n";
    if (a.has_names()) {
        out << "  \"names\": [";
        for (std::size_t i = 0; i < n; ++i) {
            if (i) out << ", ";
            out << json(a.names()[i]).dump();
        }
        out << "],\n";
    }
    out << "  \"add\": ";
    write_matrix(out, a.add_table(), n);
    out << ",\n  \"neg\": ";
    write_row(out, a.neg_table());
    out << ",\n  \"comp\": ";
    write_matrix(out, a.comp_table(), n);
    out << ",\n  \"conv\": ";
    write_row(out, a.conv_table());
    out << ",\n  \"ident\": " << a.ident() << "\n}\n";
    return out.str();
}

FiniteAlgebra read_model_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ModelFormatError(std::string("malformed model file: ") + e.what());
    }
    if (!doc.is_object()) throw ModelFormatError("model file must contain an object");
    const json& size = field(doc, "size");
    if (!size.is_number_integer() || size.get<long long>() < 1)
        throw ModelFormatError("size: expected a positive integer");
    const auto n = static_cast<std::size_t>(size.get<long long>());

    AlgebraTables t;
    t.size = n;
    t.add = matrix_field(doc, "add", n);
    t.neg = vector_field(doc, "neg", n);
    t.comp = matrix_field(doc, "comp", n);
    t.conv = vector_field(doc, "conv", n);
    t.ident = element(field(doc, "ident"), "ident");
    if (auto it = doc.find("names"); it != doc.end()) {
        if (!it->is_array() || it->size() != n)
            throw ModelFormatError("names: expected an array of " + std::to_string(n) + " strings");
        for (const auto& s : *it) {
            if (!s.is_string()) throw ModelFormatError("names: expected strings");
            t.names.push_back(s.get<std::string>());
        }
    }
    try {
        return FiniteAlgebra(std::move(t));
    } catch (const AlgebraError& e) {
        throw ModelFormatError(e.what());
    }
}

FiniteAlgebra load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelFormatError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_model_json(buf.str());
}

void save_model_file(const FiniteAlgebra& a, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ModelFormatError("cannot write " + path.string());
    out << write_model_json(a);
}

std::string render_ascii(const FiniteAlgebra& a) {
    const std::size_t n = a.size();
    const std::size_t w = name_width(a);
    std::ostringstream out;
    out << "size: " << n << "\n";
    out << "1' = " << a.name(a.ident()) << "\n";

    auto binary = [&](const char* title, auto op) {
        out << "\n" << title << "\n" << padded("", w) << " |";
        for (Element y = 0; y < n; ++y) out << ' ' << a.name(y);
        out << "\n";
        for (Element x = 0; x < n; ++x) {
            out << padded(a.name(x), w) << " :";
            for (Element y = 0; y < n; ++y) out << ' ' << a.name(op(x, y));
            out << "\n";
        }
    };
    auto unary = [&](const char* title, auto op) {
        out << "\n" << title << "\n";
        for (Element x = 0; x < n; ++x) out << padded(a.name(x), w) << " : " << a.name(op(x)) << "\n";
    };

    binary("+", [&](Element x, Element y) { return a.add(x, y); });
    unary("-", [&](Element x) { return a.neg(x); });
    binary(";", [&](Element x, Element y) { return a.comp(x, y); });
    unary("^", [&](Element x) { return a.conv(x); });
    return out.str();
}

std::string render_model(const FiniteAlgebra& a, RenderFormat format) {
    return format == RenderFormat::structured ? write_model_json(a) : render_ascii(a);
}

}  // namespace relalg
